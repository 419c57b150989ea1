//! Degree of the fundamental map: Reye lines in one ruling of a quadric of
//! the web.
//!
//! On a rank-4 quadric `Q_z` the lines `L_t` of one ruling are indexed by
//! their intersection `x(t)` with a fixed line `L_B` of the other ruling.
//! Each `L_t` also meets a second fixed line `L_B'` of that ruling in
//! `y(t)`, a Möbius function of `t`, so `x(t)` and `y(t)` can be chosen
//! linear in `t`. Restricting the basis quadrics other than `q_z` to
//! `span(x(t), y(t))` gives a 3x3 matrix of quadratics in `t` whose
//! determinant (degree 6) vanishes exactly at the Reye lines of the ruling.

use crate::double_cover::{lines_through_point_on_quadric, RulingPoint};
use crate::error::{Error, Result};
use crate::matrix::CMat;
use crate::poly::{all_complex_roots, UniPoly};
use crate::projective::{line_from_points, lines_meet, restrict_form, ProjLine, ProjPoint, QuadricForm, DEFAULT_TOL};
use crate::reye::is_reye_line;
use crate::scalar::{cnorm, C64};
use crate::web::Web;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub const FUNDAMENTAL_DEGREE: usize = 6;
const SAMPLES: usize = 8;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FundamentalDegree {
    /// Coefficients of the determinant in `t`, low to high.
    pub coefficients: Vec<C64>,
    pub degree: usize,
    /// Largest coefficient beyond degree 6 relative to the coefficient norm.
    pub excess: f64,
    pub roots: Vec<C64>,
    pub lines: Vec<ProjLine>,
    pub members: usize,
    pub pairwise_skew: bool,
    /// Largest restriction of `q_z` to a line of the chart, relative.
    pub chart_residual: f64,
}

/// The line through `x` on `q` other than `avoid`.
fn other_line(q: &QuadricForm, x: &ProjPoint, avoid: &ProjLine) -> Result<ProjLine> {
    let lines = lines_through_point_on_quadric(q, x)?;
    lines
        .into_iter()
        .max_by(|a, b| a.distance(avoid).total_cmp(&b.distance(avoid)))
        .ok_or(Error::VertexPoint)
}

/// Parameter `mu` with `b0 + mu b1` on the line `l`.
fn meet_parameter(l: &ProjLine, b0: &[C64; 4], b1: &[C64; 4]) -> Result<C64> {
    let (p, d) = l.span();
    // alpha p + beta d - mu b1 = b0
    let m = CMat::from_fn(4, 3, |i, j| match j {
        0 => p.coords()[i],
        1 => d.coords()[i],
        _ => -b1[i],
    });
    let sol = m.lstsq(b0, 1e-12);
    let res: Vec<C64> = m.mul_vec(&sol).iter().zip(b0).map(|(a, b)| a - b).collect();
    if cnorm(&res) > 1e-6 * cnorm(b0) {
        return Err(Error::Precondition("lines of the chart do not meet".into()));
    }
    Ok(sol[2])
}

/// Count the Reye lines in the ruling of the witness of `rp`.
pub fn fundamental_degree(w: &Web, rp: &RulingPoint) -> Result<FundamentalDegree> {
    let z = rp.member.z.coords();
    let mz = w.matrix_at(z);
    if crate::matrix::numeric_rank(&mz, DEFAULT_TOL) != 4 {
        return Err(Error::Precondition("member is not smooth".into()));
    }
    let q = QuadricForm::new(mz)?;
    let la = rp.witness;
    let p = *la.span().0;
    let lb = other_line(&q, &p, &la)?;
    // second line of the B ruling, through another point of L_A
    let pa = ProjPoint::new(la.point(C64::new(0.4, 0.3), C64::new(1.0, 0.0)))?;
    let lb2 = other_line(&q, &pa, &la)?;
    let (x0, x1) = (*lb.span().0.coords(), *lb.span().1.coords());
    let (b0, b1) = (*lb2.span().0.coords(), *lb2.span().1.coords());
    let x_at = |t: C64| -> [C64; 4] { [0, 1, 2, 3].map(|i| x0[i] + t * x1[i]) };
    // fit mu(t) = (a t + b) / (c t + d) from three samples
    let ts = [C64::new(0.3, 0.1), C64::new(-0.7, 0.4), C64::new(0.2, -0.9)];
    let mut rows = Vec::new();
    for &t in &ts {
        let xt = ProjPoint::new(x_at(t))?;
        let lt = other_line(&q, &xt, &lb)?;
        let mu = meet_parameter(&lt, &b0, &b1)?;
        rows.push(vec![t, C64::new(1.0, 0.0), -t * mu, -mu]);
    }
    let k = CMat::from_rows(&rows).svd().kernel(1).remove(0);
    let (ma, mb, mc, md) = (k[0], k[1], k[2], k[3]);
    let y_at = |t: C64| -> [C64; 4] { [0, 1, 2, 3].map(|i| (mc * t + md) * b0[i] + (ma * t + mb) * b1[i]) };
    // basis quadrics complementing q_z
    let drop = (0..4).max_by(|&i, &j| z[i].norm().total_cmp(&z[j].norm())).unwrap();
    let others: Vec<&CMat> = (0..4).filter(|&k| k != drop).map(|k| &w.float_basis()[k]).collect();
    let det_at = |t: C64| -> C64 {
        let (x, y) = (x_at(t), y_at(t));
        let rows: Vec<Vec<C64>> = others.iter().map(|a| restrict_form(a, &x, &y).to_vec()).collect();
        CMat::from_rows(&rows).det()
    };
    let mut chart_residual: f64 = 0.0;
    for &t in &[C64::new(0.5, 0.5), C64::new(-1.3, 0.2), C64::new(2.0, -1.0)] {
        let (x, y) = (x_at(t), y_at(t));
        let r = restrict_form(q.matrix(), &x, &y);
        chart_residual = chart_residual.max(cnorm(&r) / (q.matrix().frobenius() * cnorm(&x) * cnorm(&y)));
    }
    // interpolate on a circle; degree 6 leaves the top coefficient free
    let radius = 1.0;
    let vals: Vec<C64> = (0..SAMPLES)
        .map(|k| det_at(C64::from_polar(radius, std::f64::consts::TAU * k as f64 / SAMPLES as f64)))
        .collect();
    let coefficients: Vec<C64> = (0..SAMPLES)
        .map(|i| {
            let s: C64 = (0..SAMPLES)
                .map(|k| vals[k] * C64::from_polar(1.0, -std::f64::consts::TAU * (k * i) as f64 / SAMPLES as f64))
                .sum();
            s / SAMPLES as f64 / radius.powi(i as i32)
        })
        .collect();
    let norm = cnorm(&coefficients);
    let excess = coefficients[FUNDAMENTAL_DEGREE + 1..]
        .iter()
        .map(|c| c.norm() / norm)
        .fold(0.0, f64::max);
    let mut poly = coefficients[..=FUNDAMENTAL_DEGREE].to_vec();
    if excess > 1e-9 {
        return Err(Error::Precondition(format!("determinant exceeds degree 6 ({excess:e})")));
    }
    if poly[FUNDAMENTAL_DEGREE].norm() < 1e-9 * norm {
        return Err(Error::DegreeDrop);
    }
    while poly.last().is_some_and(|c| c.is_zero()) {
        poly.pop();
    }
    let up = UniPoly::new(poly);
    let degree = up.degree().unwrap_or(0);
    let roots: Vec<C64> = all_complex_roots(&up)?
        .into_iter()
        .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
        .collect();
    let mut lines = Vec::with_capacity(roots.len());
    for &t in &roots {
        let (x, y) = (ProjPoint::new(x_at(t))?, ProjPoint::new(y_at(t))?);
        lines.push(line_from_points(&x, &y)?);
    }
    let members = lines
        .iter()
        .filter(|l| is_reye_line(w, l, DEFAULT_TOL).is_some())
        .count();
    let mut pairwise_skew = true;
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if lines_meet(a, b, 1e-6) {
                pairwise_skew = false;
            }
        }
    }
    Ok(FundamentalDegree {
        coefficients,
        degree,
        excess,
        roots,
        lines,
        members,
        pairwise_skew,
        chart_residual,
    })
}

/// The ruling opposite to the witness of `rp`, through the same point.
pub fn opposite(w: &Web, rp: &RulingPoint) -> Result<RulingPoint> {
    let q = QuadricForm::new(w.matrix_at(rp.member.z.coords()))?;
    let p = *rp.witness.span().0;
    Ok(RulingPoint {
        member: rp.member.clone(),
        witness: other_line(&q, &p, &rp.witness)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double_cover::random_ruling_point;
    use crate::projective::RandomConfig;
    use crate::rng::Rng;

    #[test]
    fn six_reye_lines_in_each_ruling() {
        let mut rng = Rng::new(1);
        let w = Web::random_unchecked(&mut rng, RandomConfig::default(), Some(1));
        for trial in 0..3 {
            let z = w.member(&[0; 4].map(|_| rng.complex())).unwrap();
            let rp = random_ruling_point(&w, &z, &mut rng).unwrap();
            let f = fundamental_degree(&w, &rp).unwrap();
            assert_eq!(f.degree, 6, "trial {trial}");
            assert_eq!(f.members, 6, "trial {trial}");
            assert!(f.pairwise_skew);
            assert!(f.chart_residual < 1e-9);
            let g = fundamental_degree(&w, &opposite(&w, &rp).unwrap()).unwrap();
            assert_eq!(g.members, 6);
            for l in &g.lines {
                assert!(f.lines.iter().all(|m| m.distance(l) > 1e-6));
            }
        }
    }
}
