//! The Reye congruence: lines lying in the base locus of a pencil of the
//! web.
//!
//! A line `l` is a Reye line when the restriction map from the web to the
//! conics on `l` drops rank; its kernel is then the pencil `I_l` of web
//! quadrics containing `l`.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matrix::{numeric_rank, CMat, QMat};
use crate::poly::{
    binary_roots, common_zeros, det_poly, is_perfect_square_quartic, resultant_bivariate, resultant_like, Elimination,
    MultiPoly, SquareTest, PAIR_TOL,
};
use crate::projective::{
    cmp_keys, line_from_points, restrict_form, ProjLine, ProjPoint, RandomConfig, RatLine, RatPoint, DEFAULT_TOL,
};
use crate::rng::Rng;
use crate::scalar::{cnorm, proj_distance, q, q_to_c64, C64, Q};
use crate::web::{pencil_quartic, pencil_quartic_mats, xi_fiber, Web, WebMember};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::io::Write;

pub const RAYS_THROUGH_POINT: usize = 7;
pub const RAYS_IN_PLANE: usize = 3;
/// Relative residual a candidate must reach on the extra minors.
pub const FILTER_TOL: f64 = 1e-7;
/// Sampled lines whose pencils are closer than this are one pencil.
pub const PENCIL_DIST: f64 = 1e-6;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReyeLine {
    pub line: ProjLine,
    /// Generators of the pencil `I_l`.
    pub pencil: [WebMember; 2],
    /// Singular values of the restriction matrix relative to the largest.
    pub singular_values: Vec<f64>,
    /// Largest `|q(x)|` over the pencil generators and a few points of the
    /// line, relative to the matrix and point norms.
    pub containment_residual: f64,
}

/// Row `k` holds the restriction of `A_k` to `l` in the basis of its two
/// spanning points.
pub fn restriction_matrix(w: &Web, l: &ProjLine) -> CMat {
    let (a, b) = l.span();
    let rows: Vec<Vec<C64>> = w
        .float_basis()
        .iter()
        .map(|m| restrict_form(m, a.coords(), b.coords()).to_vec())
        .collect();
    CMat::from_rows(&rows)
}

pub fn rat_restriction_matrix(w: &Web, l: &RatLine) -> QMat {
    let (a, b) = l.span();
    let rows: Vec<Vec<Q>> = w
        .basis()
        .iter()
        .map(|m| restrict_form(m, a.coords(), b.coords()).to_vec())
        .collect();
    QMat::from_rows(&rows)
}

fn containment_residual(w: &Web, l: &ProjLine, pencil: &[WebMember; 2]) -> f64 {
    let mut worst: f64 = 0.0;
    for m in pencil {
        let mat = m.matrix();
        for st in [(1.0, 0.0), (0.0, 1.0), (0.6, -0.8), (0.3, 1.7)] {
            let x = l.point(C64::new(st.0, 0.0), C64::new(st.1, 0.0));
            let v = mat.bilinear(&x, &x).norm() / (mat.frobenius() * cnorm(&x).powi(2));
            worst = worst.max(v);
        }
    }
    let _ = w;
    worst
}

/// Membership test; on success returns the line with its pencil `I_l`.
pub fn is_reye_line(w: &Web, l: &ProjLine, tol: f64) -> Option<ReyeLine> {
    let r = restriction_matrix(w, l);
    let sv = r.svd().relative();
    if sv[2] >= tol {
        return None;
    }
    // kernel of the transpose: combinations of the A_k vanishing on l
    let ker = r.transpose().svd().kernel(2);
    let m1 = w.member(&ker[0]).ok()?;
    let m2 = w.member(&ker[1]).ok()?;
    let pencil = [m1, m2];
    let containment_residual = containment_residual(w, l, &pencil);
    Some(ReyeLine {
        line: *l,
        pencil,
        singular_values: sv,
        containment_residual,
    })
}

/// Exact membership: rank of the exact restriction matrix at most 2.
pub fn is_reye_line_exact(w: &Web, l: &RatLine) -> bool {
    rat_restriction_matrix(w, l).rank() <= 2
}

/// A sampled Reye line with the Steinerian points that produced it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReyeSample {
    pub reye: ReyeLine,
    pub x: ProjPoint,
    pub y: ProjPoint,
}

fn steinerian_line_samples(w: &Web, seed: u64, index: usize) -> Vec<ReyeSample> {
    let mut rng = Rng::derive(seed, 0x7265_7965_0000_0000 ^ index as u64);
    let a: Vec<C64> = (0..4).map(|_| rng.complex()).collect();
    let b: Vec<C64> = (0..4).map(|_| rng.complex()).collect();
    // C(x) is linear in x, so det C along the line is a pencil quartic
    let Ok(c) = pencil_quartic_mats(w.steinerian_matrix(&a), w.steinerian_matrix(&b)) else {
        return Vec::new();
    };
    let Ok(roots) = binary_roots(&c) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for st in roots {
        let xv: Vec<C64> = (0..4).map(|i| st[0] * a[i] + st[1] * b[i]).collect();
        let Ok(x) = ProjPoint::from_slice(&xv) else { continue };
        let Ok(Some(xi)) = xi_fiber(w, &x, DEFAULT_TOL) else { continue };
        let Ok(line) = line_from_points(&x, &xi.y) else { continue };
        if let Some(reye) = is_reye_line(w, &line, DEFAULT_TOL) {
            out.push(ReyeSample { reye, x, y: xi.y });
        }
    }
    out
}

/// Reye lines sampled through the Steinerian: for a root `x` of the
/// Steinerian on a random line, its partner `y` spans a Reye line with `x`.
pub fn sample_reye_lines(w: &Web, seed: u64, n: usize, exec: Exec) -> Result<Vec<ReyeSample>> {
    let budget = 4 * n + 16;
    let batch = 8;
    let mut out = Vec::with_capacity(n);
    let mut used = 0;
    while out.len() < n {
        if used >= budget {
            return Err(Error::SampleBudgetExceeded { budget });
        }
        let k = batch.min(budget - used);
        for samples in exec.map(k, |i| steinerian_line_samples(w, seed, used + i)) {
            out.extend(samples);
        }
        used += k;
    }
    out.truncate(n);
    Ok(out)
}

fn quad_poly(m: &QMat) -> MultiPoly<Q> {
    let n = m.rows;
    let mut p = MultiPoly::zero(n);
    for i in 0..n {
        for j in 0..n {
            if !m[(i, j)].is_zero() {
                p = p.add(&MultiPoly::var(n, i).mul(&MultiPoly::var(n, j)).scale(&m[(i, j)]));
            }
        }
    }
    p
}

fn bilinear_poly(m: &QMat, a: &[MultiPoly<Q>], b: &[MultiPoly<Q>]) -> MultiPoly<Q> {
    let mut p = MultiPoly::zero(a[0].nvars());
    for i in 0..m.rows {
        for j in 0..m.cols {
            if !m[(i, j)].is_zero() {
                p = p.add(&a[i].mul(&b[j]).scale(&m[(i, j)]));
            }
        }
    }
    p
}

fn relative_value(p: &MultiPoly<C64>, x: &[C64]) -> f64 {
    let d = p.total_degree().unwrap_or(0) as i32;
    p.eval(x).norm() / (p.coeff_norm() * cnorm(x).powi(d)).max(1e-300)
}

/// Common zeros of the first two forms that also kill the others; tries
/// further pairs when a pair shares a factor.
fn degeneracy_points(
    forms: &[MultiPoly<Q>],
    rng: &mut Rng,
) -> Result<(Vec<[C64; 3]>, Elimination, (usize, usize))> {
    let cforms: Vec<MultiPoly<C64>> = forms.iter().map(|f| f.to_complex()).collect();
    let mut last = Error::DegenerateInput("no usable pair of minors".into());
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let elim = match resultant_bivariate(&forms[i], &forms[j], 2, rng) {
                Ok(e) => e,
                Err(e) => {
                    last = e;
                    continue;
                }
            };
            let zeros = common_zeros(&elim)?;
            let kept = zeros
                .into_iter()
                .filter(|z| {
                    cforms
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != i && *k != j)
                        .all(|(_, f)| relative_value(f, z) < FILTER_TOL)
                })
                .collect();
            return Ok((kept, elim, (i, j)));
        }
    }
    Err(last)
}

fn sort_lines(lines: &mut [ProjLine]) {
    lines.sort_by(|a, b| cmp_keys(&a.sort_key(), &b.sort_key()));
}

/// A Plücker vector is real when some scaling makes it real.
pub fn is_real_line(l: &ProjLine) -> bool {
    l.plucker().iter().all(|z| z.im.abs() < 1e-8)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RaysThroughPoint {
    pub o: ProjPoint,
    pub rays: Vec<ProjLine>,
    /// `o` followed by the second base point on each ray.
    pub base_points: Vec<ProjPoint>,
    /// Spread of the base-point parameter across the net generators.
    pub spreads: Vec<f64>,
    /// Largest relative value of a net quadric at a base point.
    pub base_residual: f64,
    pub real_rays: usize,
    /// The degree-9 resultant is exactly the spurious quadratic times a
    /// degree-7 factor over the rationals.
    pub exact_split: bool,
}

/// The rays of the congruence through a point `o` off the Steinerian.
///
/// Lines through `o` are parametrized by directions `d = D u`. The net
/// `W_o` of quadrics through `o` restricts to such a line as
/// `(0, 2 B(o, d), q(d))`, so the line is a Reye line exactly when the 3x2
/// matrix `[B_i(o, d), q_i(d)]` has rank one.
pub fn rays_through_point(w: &Web, o: &RatPoint, rng: &mut Rng) -> Result<RaysThroughPoint> {
    let oc = o.to_complex();
    if xi_fiber(w, &oc, DEFAULT_TOL).map(|f| f.is_some()).unwrap_or(true) {
        return Err(Error::Precondition("point lies on the Steinerian".into()));
    }
    let ov = o.coords();
    let values: Vec<Q> = w.basis().iter().map(|a| a.bilinear(ov, ov)).collect();
    let net_coords = QMat::from_rows(&[values]).kernel();
    if net_coords.len() != 3 {
        return Err(Error::DegenerateInput("point is a base point of the web".into()));
    }
    let net: Vec<QMat> = net_coords
        .iter()
        .map(|v| {
            let mut m = QMat::zeros(4, 4);
            for (k, a) in w.basis().iter().enumerate() {
                m = m.add(&a.scale(&v[k]));
            }
            m
        })
        .collect();
    // directions: the coordinate vectors other than the pivot of o
    let pivot = (0..4).find(|&i| !ov[i].is_zero()).unwrap();
    let dcols: Vec<usize> = (0..4).filter(|&i| i != pivot).collect();
    let dmat = QMat::from_fn(4, 3, |i, j| q((i == dcols[j]) as i64));
    let mut lin = Vec::new();
    let mut quad = Vec::new();
    for n in &net {
        let no = n.mul_vec(ov);
        let c = dmat.transpose().mul_vec(&no);
        lin.push(MultiPoly::linear(&c));
        quad.push(quad_poly(&dmat.transpose().mul(n).mul(&dmat)));
    }
    let minor = |i: usize, j: usize| lin[i].mul(&quad[j]).sub(&lin[j].mul(&quad[i]));
    let forms = [minor(0, 1), minor(0, 2), minor(1, 2)];
    let (dirs, elim, pair) = degeneracy_points(&forms, rng)?;
    // both minors of the pair contain the row of one generator; its zeros
    // B = q = 0 are the spurious common zeros and split off exactly
    let common = match pair {
        (0, 1) => 0,
        (0, 2) => 1,
        _ => 2,
    };
    let exact_split = resultant_like(&elim, &lin[common], &quad[common])
        .and_then(|spurious| elim.resultant.div_rem(&spurious))
        .is_some_and(|(quo, rem)| rem.is_zero() && quo.degree() == Some(RAYS_THROUGH_POINT));
    let ocv = oc.coords();
    let dc = dmat.to_complex();
    let mut rays = Vec::new();
    for u in dirs {
        let d = dc.mul_vec(&u);
        let Ok(dp) = ProjPoint::from_slice(&d) else { continue };
        let Ok(line) = line_from_points(&oc, &dp) else { continue };
        if is_reye_line(w, &line, DEFAULT_TOL).is_some() && rays.iter().all(|r: &ProjLine| r.distance(&line) > 1e-6) {
            rays.push(line);
        }
    }
    if rays.len() != RAYS_THROUGH_POINT {
        return Err(Error::CountMismatch {
            what: "rays through a point".into(),
            expected: RAYS_THROUGH_POINT,
            found: rays.len(),
        });
    }
    sort_lines(&mut rays);
    let cnet: Vec<CMat> = net.iter().map(|n| n.to_complex()).collect();
    let mut base_points = vec![oc];
    let mut spreads = Vec::new();
    let mut base_residual: f64 = 0.0;
    for ray in &rays {
        // the spanning points are o and the direction point
        let d = *ray.span().1.coords();
        let ts: Vec<C64> = cnet
            .iter()
            .filter_map(|n| {
                let qd = n.bilinear(&d, &d);
                (qd.norm() > 1e-10 * n.frobenius() * cnorm(&d).powi(2)).then(|| -2.0 * n.bilinear(ocv, &d) / qd)
            })
            .collect();
        if ts.is_empty() {
            return Err(Error::DegenerateInput("direction isotropic for the whole net".into()));
        }
        let t = ts[0];
        let spread = ts.iter().map(|s| (s - t).norm()).fold(0.0, f64::max) / t.norm().max(1.0);
        spreads.push(spread);
        let p: Vec<C64> = (0..4).map(|i| ocv[i] + t * d[i]).collect();
        let pp = ProjPoint::from_slice(&p)?;
        for n in &cnet {
            let x = pp.coords();
            let v = n.bilinear(x, x).norm() / (n.frobenius() * cnorm(x).powi(2));
            base_residual = base_residual.max(v);
        }
        base_points.push(pp);
    }
    let real_rays = rays.iter().filter(|r| is_real_line(r)).count();
    Ok(RaysThroughPoint {
        o: oc,
        rays,
        base_points,
        spreads,
        base_residual,
        real_rays,
        exact_split,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RaysInPlane {
    pub plane: Vec<String>,
    pub rays: Vec<ProjLine>,
    /// Largest `|plane . x|` over the spanning points of the rays.
    pub incidence_residual: f64,
    pub real_rays: usize,
}

/// The rays of the congruence contained in a plane.
///
/// The plane is `x = P s`; a line of it is the kernel of a dual vector
/// `xi`, spanned by `xi x e_1` and `xi x e_2`. Those two points degenerate
/// along `xi_3 = 0`, which contributes a factor `xi_3^3` to every 3x3
/// minor of the restriction matrix; the remaining cubics cut out the rays.
pub fn rays_in_plane(w: &Web, plane: &[Q; 4], rng: &mut Rng) -> Result<RaysInPlane> {
    let pk = QMat::from_rows(&[plane.to_vec()]).kernel();
    if pk.len() != 3 {
        return Err(Error::DegenerateInput("zero plane".into()));
    }
    let pmat = QMat::from_fn(4, 3, |i, j| pk[j][i].clone());
    let x = |i| MultiPoly::<Q>::var(3, i);
    let zero = MultiPoly::<Q>::zero(3);
    let a = vec![zero.clone(), x(2), x(1).neg()];
    let b = vec![x(2).neg(), zero, x(0)];
    let two = q(2);
    let rows: Vec<Vec<MultiPoly<Q>>> = w
        .basis()
        .iter()
        .map(|m| {
            let r = pmat.transpose().mul(m).mul(&pmat);
            vec![
                bilinear_poly(&r, &a, &a),
                bilinear_poly(&r, &a, &b).scale(&two),
                bilinear_poly(&r, &b, &b),
            ]
        })
        .collect();
    let mut cubics = Vec::with_capacity(4);
    for skip in 0..4 {
        let sub: Vec<Vec<MultiPoly<Q>>> = (0..4).filter(|&k| k != skip).map(|k| rows[k].clone()).collect();
        let m = det_poly(&sub);
        let c = m
            .divide_by_var_power(2, 3)
            .ok_or_else(|| Error::Precondition("minor not divisible by the chart factor".into()))?;
        cubics.push(c);
    }
    let (duals, _, _) = degeneracy_points(&cubics, rng)?;
    let pc = pmat.to_complex();
    let mut rays = Vec::new();
    for xi in duals {
        let ker = CMat::from_rows(&[xi.to_vec()]).svd().kernel(2);
        let p1 = pc.mul_vec(&ker[0]);
        let p2 = pc.mul_vec(&ker[1]);
        let (Ok(p1), Ok(p2)) = (ProjPoint::from_slice(&p1), ProjPoint::from_slice(&p2)) else {
            continue;
        };
        let Ok(line) = line_from_points(&p1, &p2) else { continue };
        if is_reye_line(w, &line, DEFAULT_TOL).is_some() && rays.iter().all(|r: &ProjLine| r.distance(&line) > 1e-6) {
            rays.push(line);
        }
    }
    if rays.len() != RAYS_IN_PLANE {
        return Err(Error::CountMismatch {
            what: "rays in a plane".into(),
            expected: RAYS_IN_PLANE,
            found: rays.len(),
        });
    }
    sort_lines(&mut rays);
    let pl: Vec<C64> = plane.iter().map(q_to_c64).collect();
    let mut incidence_residual: f64 = 0.0;
    for r in &rays {
        let (s, t) = r.span();
        for p in [s, t] {
            let v: C64 = pl.iter().zip(p.coords()).map(|(c, x)| c * x).sum();
            incidence_residual = incidence_residual.max(v.norm() / (cnorm(&pl) * cnorm(p.coords())));
        }
    }
    let real_rays = rays.iter().filter(|r| is_real_line(r)).count();
    Ok(RaysInPlane {
        plane: plane.iter().map(crate::scalar::rat_to_string).collect(),
        rays,
        incidence_residual,
        real_rays,
    })
}

/// Redraw the point until [`rays_through_point`] succeeds.
pub fn rays_through_random_point(w: &Web, rng: &mut Rng, attempts: usize) -> Result<RaysThroughPoint> {
    let mut last = Error::GenericityExhausted { attempts };
    for _ in 0..attempts {
        let o = crate::projective::random_point(rng, RandomConfig::default());
        match rays_through_point(w, &o, rng) {
            Ok(r) => return Ok(r),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// Redraw the plane until [`rays_in_plane`] succeeds.
pub fn rays_in_random_plane(w: &Web, rng: &mut Rng, attempts: usize) -> Result<RaysInPlane> {
    let mut last = Error::GenericityExhausted { attempts };
    for _ in 0..attempts {
        let p = crate::projective::random_plane(rng, RandomConfig::default());
        match rays_in_plane(w, &p, rng) {
            Ok(r) => return Ok(r),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// The pencil `I_l` of a Reye line with its bitangency certificate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Bitangent {
    pub pencil: [WebMember; 2],
    /// The pencil quartic on `s^4 .. t^4`.
    pub quartic: [C64; 5],
    pub square: SquareTest,
    /// Ranks of the members at the two double roots.
    pub tangency_ranks: Vec<usize>,
}

/// `delta(l) = I_l`, certified to be a bitangent pencil of the symmetroid:
/// its quartic is a perfect square with two distinct double roots.
pub fn delta(w: &Web, l: &ReyeLine) -> Result<Bitangent> {
    if is_reye_line(w, &l.line, DEFAULT_TOL).is_none() {
        return Err(Error::Precondition("line is not in the congruence".into()));
    }
    let pencil = [w.rebind(&l.pencil[0]), w.rebind(&l.pencil[1])];
    let quartic = pencil_quartic(w, &pencil[0], &pencil[1])?;
    let square = is_perfect_square_quartic(&quartic, PAIR_TOL);
    if !square.is_square || !square.distinct {
        return Err(Error::BitangencyFailed { gap: square.pair_gap });
    }
    let tangency_ranks = square
        .double_roots
        .iter()
        .map(|st| {
            let z: Vec<C64> = (0..4)
                .map(|i| st[0] * pencil[0].z.coords()[i] + st[1] * pencil[1].z.coords()[i])
                .collect();
            numeric_rank(&w.matrix_at(&z), DEFAULT_TOL)
        })
        .collect();
    Ok(Bitangent {
        pencil,
        quartic,
        square,
        tangency_ranks,
    })
}

/// Projective distance between two pencils of the web, as points of the
/// Grassmannian of lines of `W`.
pub fn pencil_distance(a: &[WebMember; 2], b: &[WebMember; 2]) -> f64 {
    let pa = crate::projective::wedge(a[0].z.coords(), a[1].z.coords());
    let pb = crate::projective::wedge(b[0].z.coords(), b[1].z.coords());
    proj_distance(&pa, &pb)
}

/// CSV of Plücker coordinates, real and imaginary parts with 12 decimals.
pub fn write_reye_csv<W: Write>(lines: &[ReyeLine], out: W) -> Result<()> {
    let mut wr = csv::Writer::from_writer(out);
    let mut header = Vec::with_capacity(12);
    for (i, j) in crate::projective::PLUCKER_PAIRS {
        header.push(format!("p{i}{j}_re"));
        header.push(format!("p{i}{j}_im"));
    }
    wr.write_record(&header).map_err(|e| Error::Io(e.to_string()))?;
    for l in lines {
        let rec: Vec<String> = l
            .line
            .plucker()
            .iter()
            .flat_map(|z| [format!("{:.12}", z.re), format!("{:.12}", z.im)])
            .collect();
        wr.write_record(&rec).map_err(|e| Error::Io(e.to_string()))?;
    }
    wr.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{random_line, rat_line_from_points};

    fn web(seed: u64) -> Web {
        let mut rng = Rng::new(seed);
        Web::random_unchecked(&mut rng, RandomConfig::default(), Some(seed))
    }

    fn e(i: usize) -> RatPoint {
        RatPoint::new([0, 1, 2, 3].map(|k| q((k == i) as i64))).unwrap()
    }

    #[test]
    fn diagonal_restriction_to_a_coordinate_line() {
        let w = Web::diagonal();
        let l = rat_line_from_points(&e(0), &e(1)).unwrap();
        let r = rat_restriction_matrix(&w, &l);
        assert_eq!(r.row(0), vec![q(1), q(0), q(0)]);
        assert_eq!(r.row(1), vec![q(0), q(0), q(1)]);
        assert_eq!(r.rank(), 2);
        assert!(is_reye_line(&w, &l.to_complex(), DEFAULT_TOL).is_some());
    }

    #[test]
    fn random_lines_are_not_reye_lines() {
        let w = web(1);
        let mut rng = Rng::new(2);
        for _ in 0..10 {
            let l = random_line(&mut rng, RandomConfig::default());
            assert_eq!(rat_restriction_matrix(&w, &l).rank(), 3);
            assert!(is_reye_line(&w, &l.to_complex(), DEFAULT_TOL).is_none());
        }
    }

    #[test]
    fn sampled_lines_are_members_with_bitangent_pencils() {
        let w = web(1);
        let samples = sample_reye_lines(&w, 3, 20, Exec::Parallel).unwrap();
        assert_eq!(samples.len(), 20);
        for s in &samples {
            assert!(s.reye.containment_residual < 1e-8);
            assert!(s.reye.line.contains(s.x.coords(), 1e-8));
            assert!(s.reye.line.contains(s.y.coords(), 1e-8));
            let b = delta(&w, &s.reye).unwrap();
            assert_eq!(b.tangency_ranks, vec![3, 3]);
        }
        for (i, a) in samples.iter().enumerate() {
            for b in &samples[i + 1..] {
                assert!(pencil_distance(&a.reye.pencil, &b.reye.pencil) > PENCIL_DIST);
            }
        }
    }

    #[test]
    fn seven_rays_through_a_point() {
        let w = web(1);
        let mut rng = Rng::new(4);
        let r = rays_through_random_point(&w, &mut rng, 5).unwrap();
        assert_eq!(r.rays.len(), 7);
        assert_eq!(r.base_points.len(), 8);
        assert!(r.exact_split);
        assert!(r.base_residual < 1e-8);
        for s in &r.spreads {
            assert!(*s < 1e-8);
        }
        for (i, p) in r.base_points.iter().enumerate() {
            for o in &r.base_points[i + 1..] {
                assert!(p.distance(o) > 1e-6);
            }
        }
        for ray in &r.rays {
            assert!(ray.contains(r.o.coords(), 1e-8));
        }
    }

    #[test]
    fn three_rays_in_a_plane() {
        let w = web(1);
        let mut rng = Rng::new(5);
        let r = rays_in_random_plane(&w, &mut rng, 5).unwrap();
        assert_eq!(r.rays.len(), 3);
        assert!(r.incidence_residual < 1e-12);
    }

    #[test]
    fn csv_has_header_and_rows() {
        let w = web(1);
        let samples = sample_reye_lines(&w, 3, 2, Exec::Sequential).unwrap();
        let lines: Vec<ReyeLine> = samples.into_iter().map(|s| s.reye).collect();
        let mut buf = Vec::new();
        write_reye_csv(&lines, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert!(text.starts_with("p01_re,p01_im"));
    }
}
