use super::roots::binary_roots;
use crate::scalar::{cdot, cnorm, C64};
use serde::{Deserialize, Serialize};

/// Relative radius below which two roots are treated as one double root.
pub const PAIR_TOL: f64 = 1e-6;

/// Outcome of the perfect-square test on a binary quartic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquareTest {
    pub is_square: bool,
    /// The two double roots are distinct (nonzero discriminant of the
    /// square root).
    pub distinct: bool,
    /// Largest chordal gap inside the best pairing of the four roots.
    pub pair_gap: f64,
    /// `|q - lambda g^2| / |q|` for the candidate square root `g`.
    pub fit_residual: f64,
    /// Chordal distance between the two double roots.
    pub separation: f64,
    /// Square root as `(c_0, c_1, c_2)` on `s^2, st, t^2`, monic in `t` when
    /// possible.
    pub sqrt: Option<[C64; 3]>,
    /// The double roots `(s : t)`.
    pub double_roots: Vec<[C64; 2]>,
}

fn chordal(a: &[C64; 2], b: &[C64; 2]) -> f64 {
    (a[0] * b[1] - a[1] * b[0]).norm()
}

fn mean_root(a: &[C64; 2], b: &[C64; 2]) -> [C64; 2] {
    let ip = cdot(a, b);
    let phase = if ip.norm() > 0.0 { ip.conj() / ip.norm() } else { C64::new(1.0, 0.0) };
    let m = [a[0] + b[0] * phase, a[1] + b[1] * phase];
    let n = cnorm(&m);
    [m[0] / n, m[1] / n]
}

/// Decide whether the binary quartic `sum c_i s^(4-i) t^i` is the square of
/// a binary quadratic: the four roots must split into two pairs with
/// chordal gap below `tol`, and the reconstructed square must reproduce the
/// coefficients to relative accuracy `tol`.
pub fn is_perfect_square_quartic(c: &[C64; 5], tol: f64) -> SquareTest {
    let fail = SquareTest {
        is_square: false,
        distinct: false,
        pair_gap: f64::INFINITY,
        fit_residual: f64::INFINITY,
        separation: 0.0,
        sqrt: None,
        double_roots: Vec::new(),
    };
    let Ok(roots) = binary_roots(c) else {
        return fail;
    };
    if roots.len() != 4 {
        return fail;
    }
    let pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))];
    let ((a, b), (cc, d)) = *pairings
        .iter()
        .min_by(|x, y| {
            let gx = chordal(&roots[x.0 .0], &roots[x.0 .1]).max(chordal(&roots[x.1 .0], &roots[x.1 .1]));
            let gy = chordal(&roots[y.0 .0], &roots[y.0 .1]).max(chordal(&roots[y.1 .0], &roots[y.1 .1]));
            gx.total_cmp(&gy)
        })
        .unwrap();
    let gap = chordal(&roots[a], &roots[b]).max(chordal(&roots[cc], &roots[d]));
    let r1 = mean_root(&roots[a], &roots[b]);
    let r2 = mean_root(&roots[cc], &roots[d]);
    // (s1 t - t1 s)(s2 t - t2 s)
    let g = [
        r1[1] * r2[1],
        -(r1[0] * r2[1] + r1[1] * r2[0]),
        r1[0] * r2[0],
    ];
    let mut g2 = [C64::new(0.0, 0.0); 5];
    for i in 0..3 {
        for j in 0..3 {
            g2[i + j] += g[i] * g[j];
        }
    }
    let lambda = cdot(&g2, c) / cdot(&g2, &g2);
    let resid: Vec<C64> = c.iter().zip(&g2).map(|(x, y)| x - lambda * y).collect();
    let fit = cnorm(&resid) / cnorm(c);
    let disc = (g[1] * g[1] - 4.0 * g[0] * g[2]).norm() / cnorm(&g).powi(2);
    let sqrt = if g[2].norm() > 1e-8 * cnorm(&g) {
        [g[0] / g[2], g[1] / g[2], C64::new(1.0, 0.0)]
    } else {
        let n = cnorm(&g);
        [g[0] / n, g[1] / n, g[2] / n]
    };
    let is_square = gap < tol && fit < tol;
    SquareTest {
        is_square,
        distinct: disc > tol,
        pair_gap: gap,
        fit_residual: fit,
        separation: chordal(&r1, &r2),
        sqrt: is_square.then_some(sqrt),
        double_roots: vec![r1, r2],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use crate::scalar::c;

    fn form(v: [f64; 5]) -> [C64; 5] {
        v.map(|x| c(x, 0.0))
    }

    #[test]
    fn square_of_t2_minus_1() {
        let t = is_perfect_square_quartic(&form([1.0, 0.0, -2.0, 0.0, 1.0]), PAIR_TOL);
        assert!(t.is_square && t.distinct);
        let s = t.sqrt.unwrap();
        assert!((s[0] + c(1.0, 0.0)).norm() < 1e-7);
        assert!(s[1].norm() < 1e-7);
    }

    #[test]
    fn generic_quartic_is_not_square() {
        let t = is_perfect_square_quartic(&form([0.0, 0.0, 0.0, 1.0, 1.0]), PAIR_TOL);
        assert!(!t.is_square);
    }

    fn square_of(g: [C64; 3]) -> [C64; 5] {
        let mut out = [c(0.0, 0.0); 5];
        for i in 0..3 {
            for j in 0..3 {
                out[i + j] += g[i] * g[j];
            }
        }
        out
    }

    #[test]
    fn invariant_under_scaling_and_mobius() {
        let mut rng = Rng::new(31);
        for _ in 0..30 {
            let g = [rng.complex(), rng.complex(), rng.complex()];
            let sq = square_of(g);
            let k = rng.complex() * 5.0;
            let scaled = sq.map(|x| x * k);
            assert!(is_perfect_square_quartic(&scaled, PAIR_TOL).is_square);
            // Möbius change s -> a s + b t, t -> c s + d t applied to g
            let (a, b, cc, d) = (rng.complex(), rng.complex(), rng.complex(), rng.complex());
            // g(s,t) = g0 s^2 + g1 s t + g2 t^2
            let h = [
                g[0] * a * a + g[1] * a * cc + g[2] * cc * cc,
                g[0] * 2.0 * a * b + g[1] * (a * d + b * cc) + g[2] * 2.0 * cc * d,
                g[0] * b * b + g[1] * b * d + g[2] * d * d,
            ];
            assert!(is_perfect_square_quartic(&square_of(h), PAIR_TOL).is_square);
            // a non-square perturbation is rejected
            let mut bad = sq;
            bad[1] += c(0.3, 0.0) * cnorm(&sq);
            assert!(!is_perfect_square_quartic(&bad, PAIR_TOL).is_square);
        }
    }
}
