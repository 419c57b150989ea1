use super::UniPoly;
use crate::error::{Error, Result};
use crate::scalar::{cnorm, C64};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

const MAX_ITER: usize = 2000;

/// Root with its multiplicity after clustering.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub value: C64,
    pub multiplicity: usize,
}

/// All `deg p` complex roots, repeated according to multiplicity, by the
/// Aberth–Ehrlich simultaneous iteration.
pub fn raw_roots(p: &UniPoly<C64>) -> Result<Vec<C64>> {
    let Some(n) = p.degree() else {
        return Err(Error::IdenticallyZero("root finding".into()));
    };
    if n == 0 {
        return Err(Error::Precondition("degree must be at least 1".into()));
    }
    let lead = *p.leading().unwrap();
    let monic = UniPoly::new(p.coeffs().iter().map(|c| c / lead).collect());
    let a = monic.coeffs();
    if n == 1 {
        return Ok(vec![-a[0]]);
    }
    // zero roots are split off exactly
    let zeros = a.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        let rest = UniPoly::new(a[zeros..].to_vec());
        let mut out = vec![C64::zero(); zeros];
        if rest.degree().unwrap_or(0) > 0 {
            out.extend(raw_roots(&rest)?);
        }
        return Ok(out);
    }
    let dp = monic.derivative();
    // Cauchy-type bound for the initial circle
    let radius = (0..n)
        .map(|i| a[i].norm().powf(1.0 / (n - i) as f64))
        .fold(0.0, f64::max)
        .max(1e-3);
    let center = -a[n - 1] / n as f64;
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let ang = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            center + C64::from_polar(radius, ang)
        })
        .collect();
    let mut done = vec![false; n];
    for _ in 0..MAX_ITER {
        let mut all = true;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let pv = monic.eval(&z[k]);
            if pv.is_zero() {
                done[k] = true;
                continue;
            }
            let ratio = pv / dp.eval(&z[k]);
            let mut sum = C64::zero();
            for j in 0..n {
                if j != k {
                    let d = z[k] - z[j];
                    if !d.is_zero() {
                        sum += C64::one() / d;
                    }
                }
            }
            let zk = z[k];
            let w = ratio / (C64::one() - ratio * sum);
            if !w.re.is_finite() || !w.im.is_finite() {
                // perturb off a critical point
                z[k] += C64::new(1e-8, 1e-8) * (1.0 + zk.norm());
                all = false;
                continue;
            }
            z[k] -= w;
            if w.norm() <= 4.0 * f64::EPSILON * z[k].norm().max(1e-300)
                || monic.backward_error(z[k]) <= 2.0 * f64::EPSILON
            {
                done[k] = true;
            } else {
                all = false;
            }
        }
        if all {
            return Ok(z);
        }
    }
    // accept if every root is within a small backward error
    if z.iter().all(|&x| monic.backward_error(x) < 1e-10) {
        return Ok(z);
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITER,
    })
}

/// Group roots closer than `radius * max(1, |z|)`; cluster values are means.
pub fn cluster_roots(roots: &[C64], radius: f64) -> Vec<Root> {
    let n = roots.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(l: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while l[r] != r {
            r = l[r];
        }
        l[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let scale = roots[i].norm().max(roots[j].norm()).max(1.0);
            if (roots[i] - roots[j]).norm() < radius * scale {
                let (a, b) = (find(&mut label, i), find(&mut label, j));
                label[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<(usize, Vec<C64>)> = Vec::new();
    for i in 0..n {
        let r = find(&mut label, i);
        match groups.iter_mut().find(|g| g.0 == r) {
            Some(g) => g.1.push(roots[i]),
            None => groups.push((r, vec![roots[i]])),
        }
    }
    groups
        .into_iter()
        .map(|(_, v)| Root {
            value: v.iter().sum::<C64>() / v.len() as f64,
            multiplicity: v.len(),
        })
        .collect()
}

/// Newton polishing of a simple root.
pub fn polish_root(p: &UniPoly<C64>, mut x: C64, steps: usize) -> C64 {
    let dp = p.derivative();
    for _ in 0..steps {
        let d = dp.eval(&x);
        if d.is_zero() {
            break;
        }
        let step = p.eval(&x) / d;
        if !step.re.is_finite() {
            break;
        }
        x -= step;
        if step.norm() <= f64::EPSILON * x.norm() {
            break;
        }
    }
    x
}

/// Roots with multiplicities, clustered at relative radius `1e-6`; simple
/// roots are polished by Newton's method.
pub fn all_complex_roots(p: &UniPoly<C64>) -> Result<Vec<Root>> {
    let raw = raw_roots(p)?;
    let mut out = cluster_roots(&raw, 1e-6);
    for r in out.iter_mut() {
        if r.multiplicity == 1 {
            r.value = polish_root(p, r.value, 4);
        }
    }
    Ok(out)
}

/// Projective roots `(s : t)` of a binary form `sum c_i s^(d-i) t^i`,
/// normalized to unit length, with multiplicity.
///
/// The form is rotated by a fixed unitary change of variables before
/// dehomogenizing so roots at or near `s = 0` are handled.
pub fn binary_roots(c: &[C64]) -> Result<Vec<[C64; 2]>> {
    let d = c.len() - 1;
    if cnorm(c) == 0.0 {
        return Err(Error::IdenticallyZero("binary form".into()));
    }
    let mut best: Option<(f64, f64, UniPoly<C64>)> = None;
    for theta in [0.0, 0.61, 1.23, 2.05] {
        let (ct, st) = (f64::cos(theta), f64::sin(theta));
        // s = ct - st u, t = st + ct u
        let s_lin = UniPoly::new(vec![C64::new(ct, 0.0), C64::new(-st, 0.0)]);
        let t_lin = UniPoly::new(vec![C64::new(st, 0.0), C64::new(ct, 0.0)]);
        let mut g = UniPoly::zero();
        for (i, ci) in c.iter().enumerate() {
            let mut term = UniPoly::new(vec![*ci]);
            for _ in 0..(d - i) {
                term = term.mul(&s_lin);
            }
            for _ in 0..i {
                term = term.mul(&t_lin);
            }
            g = g.add(&term);
        }
        let lead = g.coeffs().get(d).map_or(0.0, |x| x.norm()) / g.norm().max(1e-300);
        if best.as_ref().is_none_or(|b| lead > b.0) {
            best = Some((lead, theta, g));
        }
        if lead > 0.1 {
            break;
        }
    }
    let (_, theta, g) = best.unwrap();
    if g.degree() != Some(d) {
        return Err(Error::DegreeDrop);
    }
    let (ct, st) = (f64::cos(theta), f64::sin(theta));
    let roots = raw_roots(&g)?;
    Ok(roots
        .into_iter()
        .map(|u| {
            let u = polish_root(&g, u, 3);
            let s = C64::new(ct, 0.0) - C64::new(st, 0.0) * u;
            let t = C64::new(st, 0.0) + C64::new(ct, 0.0) * u;
            let n = (s.norm_sqr() + t.norm_sqr()).sqrt();
            [s / n, t / n]
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    fn poly(v: &[f64]) -> UniPoly<C64> {
        UniPoly::new(v.iter().map(|&x| c(x, 0.0)).collect())
    }

    #[test]
    fn quadratic_roots() {
        let r = all_complex_roots(&poly(&[-1.0, 0.0, 1.0])).unwrap();
        assert_eq!(r.len(), 2);
        let mut vals: Vec<f64> = r.iter().map(|x| x.value.re).collect();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] + 1.0).abs() < 1e-14 && (vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn double_root_is_clustered() {
        let r = all_complex_roots(&poly(&[4.0, -4.0, 1.0])).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].multiplicity, 2);
        assert!((r[0].value - c(2.0, 0.0)).norm() < 1e-7);
    }

    #[test]
    fn multiplicities_sum_to_degree() {
        let mut rng = crate::rng::Rng::new(4);
        for deg in 1..=12 {
            let p = UniPoly::new((0..=deg).map(|_| rng.complex()).collect());
            let r = all_complex_roots(&p).unwrap();
            assert_eq!(r.iter().map(|x| x.multiplicity).sum::<usize>(), deg);
            for x in &r {
                assert!(p.backward_error(x.value) < 1e-12, "deg {deg}");
            }
        }
    }

    #[test]
    fn zero_roots_split_exactly() {
        let r = raw_roots(&poly(&[0.0, 0.0, 1.0, 1.0])).unwrap();
        assert_eq!(r.iter().filter(|z| z.is_zero()).count(), 2);
    }

    #[test]
    fn binary_root_at_infinity() {
        // s * t: roots (1:0) and (0:1)
        let r = binary_roots(&[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().any(|x| x[0].norm() < 1e-12));
        assert!(r.iter().any(|x| x[1].norm() < 1e-12));
    }
}
