//! Rulings of the quadrics of the web and their monodromy.
//!
//! A point of the double cover over a rank-4 member is one of the two
//! rulings of its quadric, represented by a witness line of that ruling.
//! Rulings are transported along paths in a pencil by following a marked
//! point on the witness line and choosing, at each step, the line through
//! it closest to the previous witness.

use crate::error::{Error, Result};
use crate::matrix::{numeric_rank, CMat};
use crate::poly::binary_roots;
use crate::projective::{line_from_points, restrict_quadric_to_line, ProjLine, ProjPoint, QuadricForm, DEFAULT_TOL};
use crate::rng::Rng;
use crate::scalar::{cdot, cnorm, C64};
use crate::web::{Web, WebMember};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Relative value of `q(p)` accepted for a point on a quadric.
pub const ON_QUADRIC_TOL: f64 = 1e-8;
/// Selection margin `1 - d_best / d_other` (sine distances to the previous
/// witness) below which a transport step is halved.
pub const MARGIN: f64 = 0.2;
/// Minimum number of steps along a path.
pub const MIN_SAMPLES: usize = 64;
/// Smallest relative singular value tolerated along a path.
pub const BRANCH_MARGIN: f64 = 1e-6;
const MIN_STEP: f64 = 1e-7;

fn on_quadric_residual(q: &QuadricForm, l: &ProjLine) -> f64 {
    let r = restrict_quadric_to_line(q, l);
    cnorm(&r) / q.matrix().frobenius()
}

/// Lines on the quadric through a point of it: two, or one double line
/// when `p` lies on a cone.
pub fn lines_through_point_on_quadric(q: &QuadricForm, p: &ProjPoint) -> Result<Vec<ProjLine>> {
    let pv = p.coords();
    let val = q.relative_value(pv);
    if val > ON_QUADRIC_TOL {
        return Err(Error::PointNotOnQuadric(val));
    }
    let g = q.matrix().mul_vec(pv);
    if cnorm(&g) < DEFAULT_TOL * q.matrix().frobenius() * cnorm(pv) {
        return Err(Error::VertexPoint);
    }
    // directions in the tangent plane, Hermitian-orthogonal to p
    let pc: Vec<C64> = pv.iter().map(|x| x.conj()).collect();
    let ker = CMat::from_rows(&[g.clone(), pc]).svd().kernel(2);
    let (e, f) = (&ker[0], &ker[1]);
    let m = q.matrix();
    let c = [m.bilinear(e, e), 2.0 * m.bilinear(e, f), m.bilinear(f, f)];
    let disc = (c[1] * c[1] - 4.0 * c[0] * c[2]).norm() / cnorm(&c).powi(2);
    let roots = if disc < 1e-12 {
        // double root of c0 s^2 + c1 s t + c2 t^2, read off the larger end
        if c[0].norm() >= c[2].norm() {
            vec![[-c[1], 2.0 * c[0]]]
        } else {
            vec![[2.0 * c[2], -c[1]]]
        }
    } else {
        binary_roots(&c)?
    };
    let dirs: Vec<Vec<C64>> = roots
        .iter()
        .map(|r| (0..4).map(|i| r[0] * e[i] + r[1] * f[i]).collect())
        .collect();
    dirs.iter()
        .map(|d| line_from_points(p, &ProjPoint::from_slice(d)?))
        .collect()
}

/// Two lines on a rank-4 quadric are in the same ruling iff they coincide
/// or are skew.
pub fn same_ruling(q: &QuadricForm, l1: &ProjLine, l2: &ProjLine) -> Result<bool> {
    if on_quadric_residual(q, l1) > ON_QUADRIC_TOL || on_quadric_residual(q, l2) > ON_QUADRIC_TOL {
        return Err(Error::LinesNotOnQuadric);
    }
    if l1.distance(l2) < DEFAULT_TOL {
        return Ok(true);
    }
    Ok(!crate::projective::lines_meet(l1, l2, 1e-6))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FiberType {
    TwoRulings,
    DoubleConic,
    TwoPlanes,
}

/// Fiber of the double cover over `z` by the rank of `M(z)`.
pub fn fiber_type(w: &Web, z: &ProjPoint) -> Result<FiberType> {
    match numeric_rank(&w.matrix_at(z.coords()), DEFAULT_TOL) {
        4 => Ok(FiberType::TwoRulings),
        3 => Ok(FiberType::DoubleConic),
        2 => Ok(FiberType::TwoPlanes),
        r => Err(Error::RankTooLow(r)),
    }
}

/// A member of rank at least 3 with a line of one ruling of its quadric.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RulingPoint {
    pub member: WebMember,
    pub witness: ProjLine,
}

/// Parametrized curve in the affine parameter `t` of the pencil `a + t b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Curve {
    /// `center + radius e^{2 pi i (theta + phase)}`.
    Circle { center: [f64; 2], radius: f64, phase: f64 },
    Segment { from: [f64; 2], to: [f64; 2] },
}

impl Curve {
    pub fn at(&self, theta: f64) -> C64 {
        match *self {
            Curve::Circle { center, radius, phase } => {
                C64::new(center[0], center[1]) + C64::from_polar(radius, TAU * (theta + phase))
            }
            Curve::Segment { from, to } => {
                let (a, b) = (C64::new(from[0], from[1]), C64::new(to[0], to[1]));
                a + (b - a) * theta
            }
        }
    }

    pub fn reversed(&self) -> Curve {
        match *self {
            Curve::Circle { center, radius, phase } => Curve::Circle {
                center,
                radius: -radius,
                phase: phase + 0.5,
            },
            Curve::Segment { from, to } => Curve::Segment { from: to, to: from },
        }
    }
}

/// Path `theta -> A + t(theta) B` in a pencil of symmetric matrices.
#[derive(Debug, Clone)]
pub struct PencilPath {
    pub a: CMat,
    pub b: CMat,
    pub curve: Curve,
    pub samples: usize,
}

impl PencilPath {
    pub fn new(a: CMat, b: CMat, curve: Curve) -> Self {
        PencilPath {
            a,
            b,
            curve,
            samples: MIN_SAMPLES,
        }
    }

    pub fn in_web(w: &Web, a: &WebMember, b: &WebMember, curve: Curve) -> Self {
        Self::new(w.matrix_at(a.z.coords()), w.matrix_at(b.z.coords()), curve)
    }

    pub fn matrix(&self, theta: f64) -> CMat {
        self.a.add(&self.b.scale(&self.curve.at(theta)))
    }

    pub fn quadric(&self, theta: f64) -> QuadricForm {
        QuadricForm::new(self.matrix(theta)).expect("pencil of symmetric matrices")
    }

    pub fn reversed(&self) -> Self {
        PencilPath {
            curve: self.curve.reversed(),
            ..self.clone()
        }
    }
}

/// Witness line recorded at one accepted step.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Step {
    pub theta: f64,
    pub plucker: [C64; 6],
    pub margin: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Transport {
    pub end: ProjLine,
    pub steps: Vec<Step>,
    pub halvings: usize,
}

fn overlap(a: &ProjLine, b: &ProjLine) -> f64 {
    let (pa, pb) = (a.plucker(), b.plucker());
    cdot(pa, pb).norm() / (cnorm(pa) * cnorm(pb))
}

/// Move the marked point `p` along the direction `d` onto the quadric `q`.
fn project_along(q: &QuadricForm, p: &[C64; 4], d: &[C64; 4]) -> Option<ProjPoint> {
    let m = q.matrix();
    let c = [m.bilinear(p, p), 2.0 * m.bilinear(p, d), m.bilinear(d, d)];
    // c0 + c1 s + c2 s^2 = 0, smallest root
    let s = if c[2].norm() < 1e-300 {
        -c[0] / c[1]
    } else {
        let disc = (c[1] * c[1] - 4.0 * c[0] * c[2]).sqrt();
        let r1 = (-c[1] + disc) / (2.0 * c[2]);
        let r2 = (-c[1] - disc) / (2.0 * c[2]);
        if r1.norm() < r2.norm() {
            r1
        } else {
            r2
        }
    };
    let x: Vec<C64> = (0..4).map(|i| p[i] + s * d[i]).collect();
    ProjPoint::from_slice(&x).ok()
}

fn branch_check(m: &CMat, theta: f64) -> Result<()> {
    let rel = m.svd().relative();
    if rel[3] < BRANCH_MARGIN {
        return Err(Error::BranchHit { at: theta });
    }
    Ok(())
}

/// Transport a witness line along a path of rank-4 quadrics.
pub fn transport_line(path: &PencilPath, start: &ProjLine) -> Result<Transport> {
    let q0 = path.quadric(0.0);
    branch_check(q0.matrix(), 0.0)?;
    if on_quadric_residual(&q0, start) > ON_QUADRIC_TOL {
        return Err(Error::LinesNotOnQuadric);
    }
    let hmax = 1.0 / path.samples.max(MIN_SAMPLES) as f64;
    let mut theta = 0.0;
    let mut h = hmax;
    let mut line = *start;
    let mut steps = Vec::new();
    let mut halvings = 0;
    while theta < 1.0 {
        let next = (theta + h).min(1.0);
        let q = path.quadric(next);
        branch_check(q.matrix(), next)?;
        let (p, d) = line.span();
        let candidate = project_along(&q, p.coords(), d.coords())
            .ok_or(Error::StepUnderflow { at: theta })
            .and_then(|np| lines_through_point_on_quadric(&q, &np));
        let accepted = match candidate {
            Ok(lines) if lines.len() == 2 => {
                let (o0, o1) = (overlap(&line, &lines[0]), overlap(&line, &lines[1]));
                let (best, d_best, d_other) = if o0 >= o1 {
                    (lines[0], line.distance(&lines[0]), line.distance(&lines[1]))
                } else {
                    (lines[1], line.distance(&lines[1]), line.distance(&lines[0]))
                };
                let margin = 1.0 - d_best / d_other.max(1e-300);
                (margin >= MARGIN).then_some((best, margin))
            }
            _ => None,
        };
        match accepted {
            Some((l, margin)) => {
                theta = next;
                line = l;
                steps.push(Step {
                    theta,
                    plucker: *line.plucker(),
                    margin,
                });
                h = (2.0 * h).min(hmax);
            }
            None => {
                h /= 2.0;
                halvings += 1;
                if h < MIN_STEP {
                    return Err(Error::StepUnderflow { at: theta });
                }
            }
        }
    }
    Ok(Transport {
        end: line,
        steps,
        halvings,
    })
}

/// Transport of a ruling point of the web along a pencil path.
pub fn transport_ruling(w: &Web, path: &PencilPath, start: &RulingPoint) -> Result<(RulingPoint, Transport)> {
    let tr = transport_line(path, &start.witness)?;
    let m1 = path.matrix(1.0);
    // recover the member coordinates of the endpoint from the basis
    let z = member_coords(w, &m1)?;
    Ok((
        RulingPoint {
            member: w.member(&z)?,
            witness: tr.end,
        },
        tr,
    ))
}

/// Coordinates `z` with `M(z)` proportional to `m`, by least squares on
/// the entries.
fn member_coords(w: &Web, m: &CMat) -> Result<Vec<C64>> {
    let a = CMat::from_fn(16, 4, |r, k| w.float_basis()[k].data()[r]);
    let z = a.lstsq(m.data(), 1e-12);
    let back = w.matrix_at(&z);
    let diff = back.add(&m.scale(&C64::new(-1.0, 0.0))).frobenius();
    if diff > 1e-8 * m.frobenius() {
        return Err(Error::Precondition("matrix is not a member of the web".into()));
    }
    Ok(z)
}

/// Whether the rulings are exchanged after going once around a closed path.
pub fn monodromy_swap(path: &PencilPath, start: &ProjLine) -> Result<(bool, Transport)> {
    let tr = transport_line(path, start)?;
    let q = path.quadric(1.0);
    Ok((!same_ruling(&q, start, &tr.end)?, tr))
}

/// A point of the quadric on a random complex line through it.
pub fn random_point_on_quadric(q: &QuadricForm, rng: &mut Rng) -> Result<ProjPoint> {
    for _ in 0..8 {
        let a = ProjPoint::new([0; 4].map(|_| rng.complex()))?;
        let b = ProjPoint::new([0; 4].map(|_| rng.complex()))?;
        let l = line_from_points(&a, &b)?;
        let c = restrict_quadric_to_line(q, &l);
        let Ok(roots) = binary_roots(&c) else { continue };
        if let Some(r) = roots.first() {
            let p = ProjPoint::new(l.point(r[0], r[1]))?;
            if q.relative_value(p.coords()) < 1e-12 {
                return Ok(p);
            }
        }
    }
    Err(Error::NoConvergence { iterations: 8 })
}

/// The two lines through a random point of the quadric.
pub fn random_line_pair(q: &QuadricForm, rng: &mut Rng) -> Result<(ProjPoint, [ProjLine; 2])> {
    let p = random_point_on_quadric(q, rng)?;
    let lines = lines_through_point_on_quadric(q, &p)?;
    if lines.len() != 2 {
        return Err(Error::Precondition("point on a cone".into()));
    }
    Ok((p, [lines[0], lines[1]]))
}

/// A ruling point over a member: the first line through a random point.
pub fn random_ruling_point(w: &Web, z: &WebMember, rng: &mut Rng) -> Result<RulingPoint> {
    let q = QuadricForm::new(w.matrix_at(z.z.coords()))?;
    let (_, lines) = random_line_pair(&q, rng)?;
    Ok(RulingPoint {
        member: w.rebind(z),
        witness: lines[0],
    })
}

/// Which loop a monodromy trial runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LoopKind {
    /// Around one simple root of the quartic of a general pencil.
    SimpleBranch,
    /// Around a double root of the quartic of a bitangent pencil.
    BitangentContact,
    /// Around all four roots of a general pencil.
    AllBranches,
}

/// Replayable record of one monodromy trial.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonodromyCertificate {
    pub kind: LoopKind,
    pub pencil: [WebMember; 2],
    /// Affine roots `t` of `det(A + t B)`.
    pub branch_roots: Vec<[f64; 2]>,
    #[serde(rename = "loop")]
    pub curve: Curve,
    pub start: ProjLine,
    pub steps: Vec<Step>,
    pub halvings: usize,
    pub swap: bool,
}

/// Affine roots of `det(A + t B)` from the binary quartic.
pub fn affine_roots(c: &[C64; 5]) -> Result<Vec<C64>> {
    // coefficients on s^4 .. t^4 with s = 1
    let p = crate::poly::UniPoly::new(c.to_vec());
    Ok(crate::poly::all_complex_roots(&p)?
        .into_iter()
        .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
        .collect())
}

/// Circle around `roots[k]` with radius half the distance to the nearest
/// other root (distinct from `roots[k]` by more than `same`).
pub fn circle_around(roots: &[C64], k: usize, same: f64) -> Curve {
    let r = roots[k];
    let nearest = roots
        .iter()
        .map(|o| (o - r).norm())
        .filter(|&d| d > same)
        .fold(f64::INFINITY, f64::min);
    Curve::Circle {
        center: [r.re, r.im],
        radius: 0.5 * nearest,
        phase: 0.0,
    }
}

/// Circle enclosing every root.
pub fn circle_around_all(roots: &[C64]) -> Curve {
    let c: C64 = roots.iter().sum::<C64>() / roots.len() as f64;
    let r = roots.iter().map(|x| (x - c).norm()).fold(0.0, f64::max);
    Curve::Circle {
        center: [c.re, c.im],
        radius: 2.0 * r + 1.0,
        phase: 0.0,
    }
}

/// Run one monodromy trial in the pencil `(a, b)` of the web.
pub fn monodromy_trial(
    w: &Web,
    pencil: [WebMember; 2],
    kind: LoopKind,
    root_index: usize,
    rng: &mut Rng,
) -> Result<MonodromyCertificate> {
    let c = crate::web::pencil_quartic(w, &pencil[0], &pencil[1])?;
    let roots = affine_roots(&c)?;
    let curve = match kind {
        LoopKind::AllBranches => circle_around_all(&roots),
        LoopKind::SimpleBranch => circle_around(&roots, root_index % roots.len(), 0.0),
        LoopKind::BitangentContact => {
            let sq = crate::poly::is_perfect_square_quartic(&c, crate::poly::PAIR_TOL);
            if !sq.is_square {
                return Err(Error::BitangencyFailed { gap: sq.pair_gap });
            }
            // affine double root t = t/s
            let r = sq.double_roots[root_index % 2];
            let t = r[1] / r[0];
            let others: Vec<C64> = roots.clone();
            let nearest = others
                .iter()
                .map(|o| (o - t).norm())
                .filter(|&d| d > 1e-4 * (1.0 + t.norm()))
                .fold(f64::INFINITY, f64::min);
            Curve::Circle {
                center: [t.re, t.im],
                radius: 0.5 * nearest,
                phase: 0.0,
            }
        }
    };
    let path = PencilPath::in_web(w, &pencil[0], &pencil[1], curve);
    let q0 = path.quadric(0.0);
    let (_, lines) = random_line_pair(&q0, rng)?;
    let start = lines[0];
    let (swap, tr) = monodromy_swap(&path, &start)?;
    Ok(MonodromyCertificate {
        kind,
        pencil,
        branch_roots: roots.iter().map(|r| [r.re, r.im]).collect(),
        curve,
        start,
        steps: tr.steps,
        halvings: tr.halvings,
        swap,
    })
}

/// Random general pencil of the web.
pub fn random_pencil(w: &Web, rng: &mut Rng) -> Result<[WebMember; 2]> {
    let a: Vec<C64> = (0..4).map(|_| rng.complex()).collect();
    let b: Vec<C64> = (0..4).map(|_| rng.complex()).collect();
    Ok([w.member(&a)?, w.member(&b)?])
}

/// The local model `x1^2 + x2^2 + x3^2 + t x4^2`, a cone at `t = 0`.
pub fn local_model() -> (CMat, CMat) {
    let d = |v: [f64; 4]| CMat::from_fn(4, 4, |i, j| if i == j { C64::new(v[i], 0.0) } else { C64::zero() });
    (d([1.0, 1.0, 1.0, 0.0]), d([0.0, 0.0, 0.0, 1.0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::RandomConfig;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn web(seed: u64) -> Web {
        let mut rng = Rng::new(seed);
        Web::random_unchecked(&mut rng, RandomConfig::default(), Some(seed))
    }

    fn segre() -> QuadricForm {
        // x1 x4 - x2 x3
        let mut m = CMat::zeros(4, 4);
        m[(0, 3)] = c(0.5);
        m[(3, 0)] = c(0.5);
        m[(1, 2)] = c(-0.5);
        m[(2, 1)] = c(-0.5);
        QuadricForm::new(m).unwrap()
    }

    fn e(i: usize) -> ProjPoint {
        ProjPoint::new([0, 1, 2, 3].map(|k| c((k == i) as u8 as f64))).unwrap()
    }

    #[test]
    fn segre_quadric_lines_through_a_coordinate_point() {
        let lines = lines_through_point_on_quadric(&segre(), &e(0)).unwrap();
        assert_eq!(lines.len(), 2);
        let expect = [line_from_points(&e(0), &e(1)).unwrap(), line_from_points(&e(0), &e(2)).unwrap()];
        for x in &expect {
            assert!(lines.iter().any(|l| l.distance(x) < 1e-12));
        }
    }

    #[test]
    fn cone_has_one_line_through_a_general_point() {
        let (a, _) = local_model();
        let q = QuadricForm::new(a).unwrap();
        let p = ProjPoint::new([c(1.0), C64::new(0.0, 1.0), c(0.0), c(0.7)]).unwrap();
        let lines = lines_through_point_on_quadric(&q, &p).unwrap();
        assert_eq!(lines.len(), 1);
        assert!(lines[0].contains(e(3).coords(), 1e-10));
        assert!(matches!(lines_through_point_on_quadric(&q, &e(3)), Err(Error::VertexPoint)));
    }

    #[test]
    fn off_quadric_point_is_rejected() {
        assert!(matches!(
            lines_through_point_on_quadric(&segre(), &e(0).clone_with_offset()),
            Err(Error::PointNotOnQuadric(_))
        ));
    }

    trait Offset {
        fn clone_with_offset(&self) -> ProjPoint;
    }

    impl Offset for ProjPoint {
        fn clone_with_offset(&self) -> ProjPoint {
            let mut v = *self.coords();
            v[3] += c(1.0);
            ProjPoint::new(v).unwrap()
        }
    }

    #[test]
    fn random_member_lines_lie_on_it() {
        let w = web(2);
        let mut rng = Rng::new(3);
        let z = w.member(&[0; 4].map(|_| rng.complex())).unwrap();
        let q = QuadricForm::new(z.matrix().clone()).unwrap();
        let (_, lines) = random_line_pair(&q, &mut rng).unwrap();
        for l in &lines {
            assert!(on_quadric_residual(&q, l) < 1e-9);
        }
        assert!(!same_ruling(&q, &lines[0], &lines[1]).unwrap());
    }

    #[test]
    fn same_ruling_is_an_equivalence_with_two_classes() {
        let w = web(4);
        let mut rng = Rng::new(5);
        let z = w.member(&[0; 4].map(|_| rng.complex())).unwrap();
        let q = QuadricForm::new(z.matrix().clone()).unwrap();
        let mut lines = Vec::new();
        for _ in 0..5 {
            let (_, pair) = random_line_pair(&q, &mut rng).unwrap();
            lines.extend(pair);
        }
        let rel: Vec<Vec<bool>> = lines
            .iter()
            .map(|a| lines.iter().map(|b| same_ruling(&q, a, b).unwrap()).collect())
            .collect();
        for i in 0..10 {
            for j in 0..10 {
                for k in 0..10 {
                    if rel[i][j] && rel[j][k] {
                        assert!(rel[i][k]);
                    }
                }
            }
        }
        let class0 = rel[0].iter().filter(|&&x| x).count();
        assert_eq!(class0, 5);
    }

    #[test]
    fn opposite_of_opposite_is_same_ruling() {
        let w = web(6);
        let mut rng = Rng::new(7);
        let z = w.member(&[0; 4].map(|_| rng.complex())).unwrap();
        let q = QuadricForm::new(z.matrix().clone()).unwrap();
        let (p, [l1, l2]) = random_line_pair(&q, &mut rng).unwrap();
        let other = l2.point(c(0.3), c(1.1));
        let x = ProjPoint::new(other).unwrap();
        assert!(x.distance(&p) > 1e-3);
        let through = lines_through_point_on_quadric(&q, &x).unwrap();
        let far = through.iter().find(|l| l.distance(&l2) > 1e-6).unwrap();
        assert!(same_ruling(&q, &l1, far).unwrap());
    }

    #[test]
    fn local_model_loop_swaps() {
        let (a, b) = local_model();
        let curve = Curve::Circle {
            center: [0.0, 0.0],
            radius: 1.0,
            phase: 0.0,
        };
        let path = PencilPath::new(a, b, curve);
        let mut rng = Rng::new(1);
        let (_, lines) = random_line_pair(&path.quadric(0.0), &mut rng).unwrap();
        let (swap, _) = monodromy_swap(&path, &lines[0]).unwrap();
        assert!(swap);
    }

    #[test]
    fn reversed_path_returns_to_the_start_ruling() {
        let w = web(8);
        let mut rng = Rng::new(9);
        let pencil = random_pencil(&w, &mut rng).unwrap();
        let curve = Curve::Segment {
            from: [0.1, 0.2],
            to: [0.9, -0.4],
        };
        let path = PencilPath::in_web(&w, &pencil[0], &pencil[1], curve);
        let (_, lines) = random_line_pair(&path.quadric(0.0), &mut rng).unwrap();
        let there = transport_line(&path, &lines[0]).unwrap();
        let back = transport_line(&path.reversed(), &there.end).unwrap();
        assert!(same_ruling(&path.quadric(0.0), &lines[0], &back.end).unwrap());
        // the opposite line stays opposite along the whole path
        let other = transport_line(&path, &lines[1]).unwrap();
        assert_eq!(other.steps.len(), there.steps.len());
        let q1 = path.quadric(1.0);
        assert!(!same_ruling(&q1, &there.end, &other.end).unwrap());
    }

    #[test]
    fn constant_path_is_identity() {
        let w = web(10);
        let mut rng = Rng::new(11);
        let pencil = random_pencil(&w, &mut rng).unwrap();
        let curve = Curve::Segment {
            from: [0.3, 0.3],
            to: [0.3, 0.3],
        };
        let path = PencilPath::in_web(&w, &pencil[0], &pencil[1], curve);
        let (_, lines) = random_line_pair(&path.quadric(0.0), &mut rng).unwrap();
        let tr = transport_line(&path, &lines[0]).unwrap();
        assert!(same_ruling(&path.quadric(0.0), &lines[0], &tr.end).unwrap());
    }

    #[test]
    fn monodromy_suite_on_one_web() {
        let w = web(1);
        let mut rng = Rng::new(2);
        let pencil = random_pencil(&w, &mut rng).unwrap();
        for k in 0..4 {
            let cert = monodromy_trial(&w, pencil.clone(), LoopKind::SimpleBranch, k, &mut rng).unwrap();
            assert!(cert.swap, "root {k}");
        }
        let all = monodromy_trial(&w, pencil, LoopKind::AllBranches, 0, &mut rng).unwrap();
        assert!(!all.swap);
        let samples = crate::reye::sample_reye_lines(&w, 4, 2, crate::Exec::Sequential).unwrap();
        for s in &samples {
            for k in 0..2 {
                let cert = monodromy_trial(&w, s.reye.pencil.clone(), LoopKind::BitangentContact, k, &mut rng).unwrap();
                assert!(!cert.swap);
            }
        }
    }

    #[test]
    fn fiber_types() {
        let w = web(12);
        let mut rng = Rng::new(13);
        let z = ProjPoint::new([0; 4].map(|_| rng.complex())).unwrap();
        assert_eq!(fiber_type(&w, &z).unwrap(), FiberType::TwoRulings);
        let pencil = random_pencil(&w, &mut rng).unwrap();
        let c = crate::web::pencil_quartic(&w, &pencil[0], &pencil[1]).unwrap();
        for r in binary_roots(&c).unwrap() {
            let m = crate::web::pencil_member(&w, &pencil[0], &pencil[1], r).unwrap();
            assert_eq!(fiber_type(&w, &m.z).unwrap(), FiberType::DoubleConic);
        }
        let nodes = crate::nodes::find_nodes(&w, 1, crate::Exec::Parallel).unwrap();
        for n in &nodes.nodes {
            assert_eq!(fiber_type(&w, &n.member.z).unwrap(), FiberType::TwoPlanes);
        }
    }
}
