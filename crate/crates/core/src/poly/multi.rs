use crate::matrix::Mat;
use crate::scalar::{q_to_c64, Field, C64, Q};

use std::collections::BTreeMap;

/// Exponent vector; only the first `nvars` entries are used.
pub type Monomial = [u8; 4];

/// Sparse polynomial in at most four variables. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly<T> {
    nvars: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Field> MultiPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= 4);
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term([0; 4], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = [0; 4];
        m[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(m, T::one());
        p
    }

    /// `sum_i coeffs[i] x_i`.
    pub fn linear(coeffs: &[T]) -> Self {
        let mut p = Self::zero(coeffs.len());
        for (i, c) in coeffs.iter().enumerate() {
            let mut m = [0; 4];
            m[i] = 1;
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, T)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as usize).sum())
            .max()
    }

    pub fn is_homogeneous(&self, deg: usize) -> bool {
        self.terms
            .keys()
            .all(|m| m.iter().map(|&e| e as usize).sum::<usize>() == deg)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(*m, c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars.max(other.nvars));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = [0u8; 4];
                for i in 0..4 {
                    m[i] = ma[i] + mb[i];
                }
                out.add_term(m, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::constant(self.nvars, T::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, x: &[T]) -> T {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate().take(self.nvars) {
                for _ in 0..e {
                    t = t * x[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m[var] == 0 {
                continue;
            }
            let mut k = T::zero();
            for _ in 0..m[var] {
                k = k + T::one();
            }
            let mut mm = *m;
            mm[var] -= 1;
            out.add_term(mm, c.clone() * k);
        }
        out
    }

    /// Substitute `x_i = sum_j map[i][j] y_j`; the result has `map[0].len()`
    /// variables.
    pub fn compose_linear(&self, map: &[Vec<T>]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let target = map[0].len();
        let forms: Vec<Self> = map.iter().map(|row| Self::linear(row)).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate().take(self.nvars) {
                if e > 0 {
                    t = t.mul(&forms[i].pow(e as usize));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Coefficients of the powers of `var`, from degree 0 up; each
    /// coefficient is a polynomial in the remaining variables (with `var`
    /// exponent zero).
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let deg = self.terms.keys().map(|m| m[var] as usize).max().unwrap_or(0);
        let mut out = vec![Self::zero(self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let mut mm = *m;
            let e = mm[var] as usize;
            mm[var] = 0;
            out[e].add_term(mm, c.clone());
        }
        out
    }

    /// Divide by `x_var^k`, provided every term is divisible.
    pub fn divide_by_var_power(&self, var: usize, k: u8) -> Option<Self> {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m[var] < k {
                return None;
            }
            let mut mm = *m;
            mm[var] -= k;
            out.add_term(mm, c.clone());
        }
        Some(out)
    }

    pub fn map_coeffs<U: Field>(&self, f: impl Fn(&T) -> U) -> MultiPoly<U> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }
}

impl MultiPoly<Q> {
    pub fn to_complex(&self) -> MultiPoly<C64> {
        self.map_coeffs(q_to_c64)
    }
}

impl MultiPoly<C64> {
    pub fn coeff_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn gradient(&self, x: &[C64]) -> Vec<C64> {
        (0..self.nvars).map(|i| self.partial(i).eval(x)).collect()
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// the first row.
pub fn det_poly<T: Field>(m: &[Vec<MultiPoly<T>>]) -> MultiPoly<T> {
    let n = m.len();
    let nvars = m[0][0].nvars();
    match n {
        0 => MultiPoly::constant(nvars, T::one()),
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        _ => {
            let mut acc = MultiPoly::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MultiPoly<T>>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&det_poly(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// `det(sum_k z_k A_k)` as a homogeneous polynomial in `z`.
pub fn det_of_linear_matrix<T: Field>(mats: &[Mat<T>]) -> MultiPoly<T> {
    let n = mats[0].rows;
    let nv = mats.len();
    let entries: Vec<Vec<MultiPoly<T>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let coeffs: Vec<T> = mats.iter().map(|a| a[(i, j)].clone()).collect();
                    MultiPoly::linear(&coeffs[..nv])
                })
                .collect()
        })
        .collect();
    det_poly(&entries)
}
