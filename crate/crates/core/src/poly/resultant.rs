use super::roots::{cluster_roots, raw_roots};
use super::{interpolate, MultiPoly, UniPoly};
use crate::error::{Error, Result};
use crate::matrix::{CMat, QMat};
use crate::rng::Rng;
use crate::scalar::{q, q_to_c64, C64, Q};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

const MAX_CHANGES: usize = 12;

/// Result of eliminating one variable from two ternary forms.
///
/// The forms are first pulled back along `x = T y` for a random integer
/// matrix `T` (recorded in `change`, row-major). In `y`-coordinates variable
/// `eliminated` is removed, `dehomogenized` is set to one, and `resultant`
/// is a univariate polynomial in the remaining variable `free`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Elimination {
    pub change: [[i64; 3]; 3],
    pub eliminated: usize,
    pub free: usize,
    pub dehomogenized: usize,
    #[serde(skip)]
    pub resultant: UniPoly<Q>,
    #[serde(skip)]
    f: Option<MultiPoly<Q>>,
    #[serde(skip)]
    g: Option<MultiPoly<Q>>,
}

impl Elimination {
    pub fn degree(&self) -> usize {
        self.resultant.degree().unwrap_or(0)
    }
}

fn change_rows(t: &[[i64; 3]; 3]) -> Vec<Vec<Q>> {
    t.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

fn sylvester_det(f: &[Q], g: &[Q]) -> Q {
    // f, g low-to-high coefficients; degrees m, n
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut s = QMat::zeros(size, size);
    for row in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            s[(row, row + k)] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            s[(n + row, row + k)] = c.clone();
        }
    }
    s.det()
}

fn specialize(coeffs: &[MultiPoly<Q>], free: usize, dehom: usize, u: &Q) -> Vec<Q> {
    let mut point = vec![q(0); 3];
    point[free] = u.clone();
    point[dehom] = q(1);
    coeffs.iter().map(|c| c.eval(&point)).collect()
}

/// Resultant in fixed coordinates; `None` when a leading coefficient in the
/// eliminated variable is not constant.
fn resultant_in(
    f: &MultiPoly<Q>,
    g: &MultiPoly<Q>,
    t: &[[i64; 3]; 3],
    eliminate: usize,
    free: usize,
    dehom: usize,
) -> Option<UniPoly<Q>> {
    let df = f.total_degree()?;
    let dg = g.total_degree()?;
    let rows = change_rows(t);
    let fc = f.compose_linear(&rows).coefficients_in(eliminate);
    let gc = g.compose_linear(&rows).coefficients_in(eliminate);
    if fc.len() != df + 1 || gc.len() != dg + 1 {
        return None;
    }
    let target = df * dg;
    let xs: Vec<Q> = (0..=target as i64).map(|k| q(k - target as i64 / 2)).collect();
    let ys: Vec<Q> = xs
        .iter()
        .map(|u| sylvester_det(&specialize(&fc, free, dehom, u), &specialize(&gc, free, dehom, u)))
        .collect();
    Some(interpolate(&xs, &ys))
}

/// Resultant of another pair of forms in the coordinates of `elim`, so that
/// factors of the two resultants can be compared exactly.
pub fn resultant_like(elim: &Elimination, f: &MultiPoly<Q>, g: &MultiPoly<Q>) -> Option<UniPoly<Q>> {
    resultant_in(f, g, &elim.change, elim.eliminated, elim.free, elim.dehomogenized)
}

/// Sylvester resultant of two ternary forms eliminating `eliminate`, after a
/// random change of coordinates that keeps all common zeros at finite,
/// pairwise distinct values of the free variable.
///
/// The resultant is computed exactly by evaluating the Sylvester determinant
/// at `deg f * deg g + 1` integer points and interpolating.
pub fn resultant_bivariate(
    f: &MultiPoly<Q>,
    g: &MultiPoly<Q>,
    eliminate: usize,
    rng: &mut Rng,
) -> Result<Elimination> {
    assert!(f.nvars() == 3 && g.nvars() == 3 && eliminate < 3);
    let df = f.total_degree().ok_or_else(|| Error::IdenticallyZero("first form".into()))?;
    let dg = g.total_degree().ok_or_else(|| Error::IdenticallyZero("second form".into()))?;
    let rest: Vec<usize> = (0..3).filter(|&i| i != eliminate).collect();
    let (free, dehom) = (rest[0], rest[1]);
    let target = df * dg;
    let mut saw_nonzero = false;
    for _ in 0..MAX_CHANGES {
        let t = loop {
            let t = [0; 3].map(|_| [0; 3].map(|_| rng.int_in(-9, 9)));
            if !QMat::from_rows(&change_rows(&t)).det().is_zero() {
                break t;
            }
        };
        let Some(res) = resultant_in(f, g, &t, eliminate, free, dehom) else {
            continue;
        };
        if res.is_zero() {
            continue;
        }
        saw_nonzero = true;
        if res.degree() != Some(target) {
            continue;
        }
        // distinct projections: numerically simple roots
        let Ok(roots) = raw_roots(&res.to_complex()) else {
            continue;
        };
        if target > 0 && cluster_roots(&roots, 1e-7).len() != target {
            continue;
        }
        return Ok(Elimination {
            change: t,
            eliminated: eliminate,
            free,
            dehomogenized: dehom,
            resultant: res,
            f: Some(f.clone()),
            g: Some(g.clone()),
        });
    }
    if saw_nonzero {
        Err(Error::DegreeDrop)
    } else {
        Err(Error::IdenticallyZero("forms share a common factor".into()))
    }
}

/// Common projective zeros of the two forms of an elimination, in the
/// original coordinates, each refined by Newton's method on the pair.
pub fn common_zeros(elim: &Elimination) -> Result<Vec<[C64; 3]>> {
    let (Some(f), Some(g)) = (&elim.f, &elim.g) else {
        return Err(Error::Precondition("elimination without its forms".into()));
    };
    let rows = change_rows(&elim.change);
    let fy = f.compose_linear(&rows).to_complex();
    let gy = g.compose_linear(&rows).to_complex();
    let fc = fy.coefficients_in(elim.eliminated);
    let (free, dehom, el) = (elim.free, elim.dehomogenized, elim.eliminated);
    let tmat = CMat::from_fn(3, 3, |i, j| q_to_c64(&rows[i][j]));
    let res = elim.resultant.to_complex();
    let us = raw_roots(&res)?;
    let mut out = Vec::with_capacity(us.len());
    for u in us {
        let u = super::polish_root(&res, u, 3);
        let mut pt = vec![C64::zero(); 3];
        pt[free] = u;
        pt[dehom] = C64::new(1.0, 0.0);
        // candidates for the eliminated coordinate
        let vpoly = UniPoly::new(fc.iter().map(|c| c.eval(&pt)).collect());
        let cands = raw_roots(&vpoly)?;
        let gscale = gy.coeff_norm().max(1e-300);
        let v = cands
            .into_iter()
            .min_by(|a, b| {
                let mut pa = pt.clone();
                pa[el] = *a;
                let mut pb = pt.clone();
                pb[el] = *b;
                (gy.eval(&pa).norm() / gscale).total_cmp(&(gy.eval(&pb).norm() / gscale))
            })
            .unwrap();
        pt[el] = v;
        let pt = newton2(&fy, &gy, pt, free, el);
        let x = tmat.mul_vec(&pt);
        out.push([x[0], x[1], x[2]]);
    }
    Ok(out)
}

fn newton2(f: &MultiPoly<C64>, g: &MultiPoly<C64>, mut p: Vec<C64>, a: usize, b: usize) -> Vec<C64> {
    let (fa, fb, ga, gb) = (f.partial(a), f.partial(b), g.partial(a), g.partial(b));
    for _ in 0..8 {
        let r = [f.eval(&p), g.eval(&p)];
        let j = CMat::from_rows(&[vec![fa.eval(&p), fb.eval(&p)], vec![ga.eval(&p), gb.eval(&p)]]);
        let Some(d) = j.solve(&[-r[0], -r[1]]) else { break };
        p[a] += d[0];
        p[b] += d[1];
        if d[0].norm() + d[1].norm() < 1e-16 * (1.0 + p[a].norm() + p[b].norm()) {
            break;
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(i: usize) -> MultiPoly<Q> {
        MultiPoly::var(3, i)
    }

    #[test]
    fn two_lines_meet_once_after_generic_change() {
        let mut rng = Rng::new(1);
        let e = resultant_bivariate(&var(0), &var(1), 2, &mut rng).unwrap();
        assert_eq!(e.degree(), 1);
        // a single common zero (0:0:1)
        let z = common_zeros(&e).unwrap();
        assert_eq!(z.len(), 1);
        assert!(z[0][0].norm() < 1e-12 * z[0][2].norm() && z[0][1].norm() < 1e-12 * z[0][2].norm());
    }

    #[test]
    fn lines_without_the_eliminated_variable_have_constant_resultant() {
        // f = u, g = v contain no w: the Sylvester matrix in w is empty and
        // the resultant is the constant 1
        let rows = change_rows(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let fc = var(0).compose_linear(&rows).coefficients_in(2);
        let gc = var(1).compose_linear(&rows).coefficients_in(2);
        assert_eq!((fc.len(), gc.len()), (1, 1));
        assert_eq!(sylvester_det(&[q(1)], &[q(1)]), q(1));
    }

    #[test]
    fn identical_forms_are_identically_zero() {
        let mut rng = Rng::new(2);
        let f = var(0).mul(&var(1)).add(&var(2).mul(&var(2)));
        assert!(matches!(
            resultant_bivariate(&f, &f, 2, &mut rng),
            Err(Error::IdenticallyZero(_))
        ));
    }

    #[test]
    fn conic_and_cubic_meet_in_six_points() {
        let mut rng = Rng::new(3);
        let (x, y, z) = (var(0), var(1), var(2));
        let f = x.mul(&x).add(&y.mul(&y)).sub(&z.mul(&z));
        let g = x.pow(3).sub(&y.mul(&z).mul(&z)).add(&x.mul(&y).mul(&z).scale(&q(2)));
        let e = resultant_bivariate(&f, &g, 1, &mut rng).unwrap();
        assert_eq!(e.degree(), 6);
        let fc = f.to_complex();
        let gc = g.to_complex();
        for p in common_zeros(&e).unwrap() {
            let n = crate::scalar::cnorm(&p);
            let pn = p.map(|c| c / n);
            assert!(fc.eval(&pn).norm() < 1e-10, "{:?}", fc.eval(&pn));
            assert!(gc.eval(&pn).norm() < 1e-10);
        }
    }
}
