//! Small dense matrices on both tracks.
//!
//! Dimensions in this crate never exceed a few dozen rows, so everything is a
//! plain row-major `Vec`. Exact routines (rank, kernel, determinant) run
//! Gaussian elimination over `Q`; floating routines go through a one-sided
//! Jacobi SVD.

use crate::scalar::{cdot, cnorm, Field, C64, Q};
use num_traits::{One, Zero};
use std::ops::{Index, IndexMut};

#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

pub type CMat = Mat<C64>;
pub type QMat = Mat<Q>;

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Field> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(r, c, |i, j| rows[i][j].clone())
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, s: &T) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// `x^T M y` (plain transpose, no conjugation).
    pub fn bilinear(&self, x: &[T], y: &[T]) -> T {
        let my = self.mul_vec(y);
        x.iter()
            .zip(&my)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }
}

impl CMat {
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn frobenius(&self) -> f64 {
        cnorm(&self.data)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Determinant by LU with partial pivoting.
    pub fn det(&self) -> C64 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = C64::one();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| a[(i, k)].norm().total_cmp(&a[(j, k)].norm()))
                .unwrap();
            if a[(p, k)].norm() == 0.0 {
                return C64::zero();
            }
            if p != k {
                for j in 0..n {
                    let t = a[(k, j)];
                    a[(k, j)] = a[(p, j)];
                    a[(p, j)] = t;
                }
                det = -det;
            }
            let piv = a[(k, k)];
            det *= piv;
            for i in k + 1..n {
                let f = a[(i, k)] / piv;
                for j in k..n {
                    let t = a[(k, j)];
                    a[(i, j)] -= f * t;
                }
            }
        }
        det
    }

    /// Solve `A x = b` for square nonsingular `A`; `None` if singular.
    pub fn solve(&self, b: &[C64]) -> Option<Vec<C64>> {
        let n = self.rows;
        assert_eq!(n, self.cols);
        let mut a = self.clone();
        let mut x = b.to_vec();
        let scale = a.max_abs().max(f64::MIN_POSITIVE);
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| a[(i, k)].norm().total_cmp(&a[(j, k)].norm()))
                .unwrap();
            if a[(p, k)].norm() <= 1e-300 * scale {
                return None;
            }
            if p != k {
                for j in 0..n {
                    let t = a[(k, j)];
                    a[(k, j)] = a[(p, j)];
                    a[(p, j)] = t;
                }
                x.swap(k, p);
            }
            let piv = a[(k, k)];
            for i in k + 1..n {
                let f = a[(i, k)] / piv;
                for j in k..n {
                    let t = a[(k, j)];
                    a[(i, j)] -= f * t;
                }
                let t = x[k];
                x[i] -= f * t;
            }
        }
        for k in (0..n).rev() {
            let mut s = x[k];
            for j in k + 1..n {
                s -= a[(k, j)] * x[j];
            }
            x[k] = s / a[(k, k)];
        }
        Some(x)
    }

    /// Thin singular value decomposition by one-sided Jacobi rotations.
    pub fn svd(&self) -> Svd {
        jacobi_svd(self)
    }

    /// Minimum-norm least-squares solution of `A x ≈ b`, dropping singular
    /// values below `rcond * s_max`.
    pub fn lstsq(&self, b: &[C64], rcond: f64) -> Vec<C64> {
        let svd = self.svd();
        let smax = svd.values.first().copied().unwrap_or(0.0);
        let mut x = vec![C64::zero(); self.cols];
        for (k, &s) in svd.values.iter().enumerate() {
            if s <= rcond * smax || s == 0.0 {
                continue;
            }
            let uk = svd.u.col(k);
            let coef = cdot(&uk, b) / s;
            for (i, xi) in x.iter_mut().enumerate() {
                *xi += svd.v[(i, k)] * coef;
            }
        }
        x
    }
}

/// `A = U diag(values) V^H` with values sorted descending.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: CMat,
    pub values: Vec<f64>,
    pub v: CMat,
}

impl Svd {
    /// Right singular vector belonging to the `k`-th largest value.
    pub fn right(&self, k: usize) -> Vec<C64> {
        self.v.col(k)
    }

    /// Right singular vectors spanning the (numerical) kernel, smallest first.
    pub fn kernel(&self, dim: usize) -> Vec<Vec<C64>> {
        let n = self.v.cols;
        (0..dim).map(|i| self.v.col(n - 1 - i)).collect()
    }

    /// Ratios `values[i] / values[0]`.
    pub fn relative(&self) -> Vec<f64> {
        let smax = self.values.first().copied().unwrap_or(0.0);
        if smax == 0.0 {
            return vec![0.0; self.values.len()];
        }
        self.values.iter().map(|s| s / smax).collect()
    }
}

fn jacobi_svd(m: &CMat) -> Svd {
    let (rows, n) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut v = CMat::identity(n);
    let eps = 1e-15;
    for _sweep in 0..80 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = C64::zero();
                for i in 0..rows {
                    alpha += a[(i, p)].norm_sqr();
                    beta += a[(i, q)].norm_sqr();
                    gamma += a[(i, p)].conj() * a[(i, q)];
                }
                let g = gamma.norm();
                if g <= eps * (alpha * beta).sqrt() || g == 0.0 {
                    continue;
                }
                rotated = true;
                // rotate a phase out of column q so that the 2x2 Gram block is real
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = cs * t;
                for i in 0..rows {
                    let ap = a[(i, p)];
                    let aq = a[(i, q)] * phase.conj();
                    a[(i, p)] = ap * cs - aq * sn;
                    a[(i, q)] = ap * sn + aq * cs;
                }
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)] * phase.conj();
                    v[(i, p)] = vp * cs - vq * sn;
                    v[(i, q)] = vp * sn + vq * cs;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut order: Vec<(usize, f64)> = (0..n).map(|j| (j, cnorm(&a.col(j)))).collect();
    order.sort_by(|x, y| y.1.total_cmp(&x.1));
    let k = n;
    let mut u = CMat::zeros(rows, k);
    let mut vs = CMat::zeros(n, k);
    let mut values = Vec::with_capacity(k);
    for (new, &(old, s)) in order.iter().enumerate() {
        values.push(s);
        for i in 0..n {
            vs[(i, new)] = v[(i, old)];
        }
        if s > 0.0 {
            for i in 0..rows {
                u[(i, new)] = a[(i, old)] / s;
            }
        }
    }
    Svd { u, values, v: vs }
}

/// Number of singular values above `tol * s_max`.
pub fn numeric_rank(m: &CMat, tol: f64) -> usize {
    let svd = m.svd();
    let smax = svd.values.first().copied().unwrap_or(0.0);
    if smax == 0.0 {
        return 0;
    }
    svd.values.iter().filter(|&&s| s > tol * smax).count()
}

impl QMat {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (QMat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            for j in 0..a.cols {
                let t = a[(r, j)].clone();
                a[(r, j)] = a[(p, j)].clone();
                a[(p, j)] = t;
            }
            let inv = Q::one() / a[(r, col)].clone();
            for j in 0..a.cols {
                a[(r, j)] = a[(r, j)].clone() * inv.clone();
            }
            for i in 0..a.rows {
                if i != r && !a[(i, col)].is_zero() {
                    let f = a[(i, col)].clone();
                    for j in 0..a.cols {
                        let t = a[(r, j)].clone() * f.clone();
                        a[(i, j)] = a[(i, j)].clone() - t;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Q::zero(); self.cols];
                x[f] = Q::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    x[pc] = -r[(row, f)].clone();
                }
                x
            })
            .collect()
    }

    pub fn det(&self) -> Q {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Q::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Q::zero();
            };
            if p != k {
                for j in 0..n {
                    let t = a[(k, j)].clone();
                    a[(k, j)] = a[(p, j)].clone();
                    a[(p, j)] = t;
                }
                det = -det;
            }
            let piv = a[(k, k)].clone();
            det *= piv.clone();
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone() / piv.clone();
                for j in k..n {
                    let t = a[(k, j)].clone() * f.clone();
                    a[(i, j)] = a[(i, j)].clone() - t;
                }
            }
        }
        det
    }

    pub fn to_complex(&self) -> CMat {
        CMat::from_fn(self.rows, self.cols, |i, j| crate::scalar::q_to_c64(&self[(i, j)]))
    }
}
