//! Points, lines and quadrics of P^3 on both arithmetic tracks.

use crate::error::{Error, Result};
use crate::matrix::{numeric_rank, CMat, Mat, QMat};
use crate::rng::Rng;
use crate::scalar::{cnorm, proj_distance, q_to_c64, Field, C64, Q};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Default relative tolerance for rank and equality decisions.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Plücker index pairs in the order (01, 02, 03, 12, 13, 23).
pub const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Point of P^3 on the floating track, scaled so that its largest-modulus
/// coordinate is exactly 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjPoint([C64; 4]);

impl ProjPoint {
    pub fn new(v: [C64; 4]) -> Result<Self> {
        let (k, m) = v
            .iter()
            .enumerate()
            .map(|(i, z)| (i, z.norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::DegenerateInput("zero or non-finite point".into()));
        }
        let s = v[k];
        let mut out = v.map(|z| z / s);
        out[k] = C64::one();
        Ok(ProjPoint(out))
    }

    pub fn from_slice(v: &[C64]) -> Result<Self> {
        Self::new([v[0], v[1], v[2], v[3]])
    }

    pub fn coords(&self) -> &[C64; 4] {
        &self.0
    }

    pub fn distance(&self, other: &ProjPoint) -> f64 {
        proj_distance(&self.0, &other.0)
    }

    pub fn approx_eq(&self, other: &ProjPoint, tol: f64) -> bool {
        self.distance(other) < tol
    }

    /// Lexicographic key on normalized coordinates, for canonical sorting.
    pub fn sort_key(&self) -> [f64; 8] {
        let u = cnorm(&self.0);
        let mut k = [0.0; 8];
        for (i, z) in self.0.iter().enumerate() {
            k[2 * i] = round_key(z.re / u);
            k[2 * i + 1] = round_key(z.im / u);
        }
        k
    }
}

/// Total order on sort keys.
pub fn cmp_keys(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

fn round_key(x: f64) -> f64 {
    // quantize so that tiny floating noise does not reorder equal entries
    (x * 1e6).round() / 1e6
}

/// Point of P^3 on the exact track, first nonzero coordinate equal to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatPoint([Q; 4]);

impl RatPoint {
    pub fn new(v: [Q; 4]) -> Result<Self> {
        let Some(first) = v.iter().find(|x| !x.is_zero()).cloned() else {
            return Err(Error::DegenerateInput("zero point".into()));
        };
        Ok(RatPoint(v.map(|x| x / first.clone())))
    }

    pub fn coords(&self) -> &[Q; 4] {
        &self.0
    }

    pub fn to_complex(&self) -> ProjPoint {
        ProjPoint::new(self.0.clone().map(|x| q_to_c64(&x))).expect("nonzero")
    }
}

pub fn wedge<T: Field>(a: &[T; 4], b: &[T; 4]) -> [T; 6] {
    PLUCKER_PAIRS.map(|(i, j)| a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone())
}

/// `p01 p23 - p02 p13 + p03 p12`.
pub fn plucker_relation<T: Field>(p: &[T; 6]) -> T {
    p[0].clone() * p[5].clone() - p[1].clone() * p[4].clone() + p[2].clone() * p[3].clone()
}

/// Bilinear form associated with the Plücker quadric; vanishes iff the two
/// lines meet.
pub fn plucker_pairing<T: Field>(p: &[T; 6], q: &[T; 6]) -> T {
    p[0].clone() * q[5].clone() - p[1].clone() * q[4].clone()
        + p[2].clone() * q[3].clone()
        + p[5].clone() * q[0].clone()
        - p[4].clone() * q[1].clone()
        + p[3].clone() * q[2].clone()
}

/// Coefficients of `q(s a + t b)` on `s^2, st, t^2`.
pub fn restrict_form<T: Field>(q: &Mat<T>, a: &[T], b: &[T]) -> [T; 3] {
    let two = T::one() + T::one();
    [q.bilinear(a, a), two * q.bilinear(a, b), q.bilinear(b, b)]
}

/// Line of P^3 on the floating track: two spanning points and the Plücker
/// vector of their wedge, normalized to max modulus 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjLine {
    a: ProjPoint,
    b: ProjPoint,
    plucker: [C64; 6],
}

impl ProjLine {
    pub fn span(&self) -> (&ProjPoint, &ProjPoint) {
        (&self.a, &self.b)
    }

    pub fn plucker(&self) -> &[C64; 6] {
        &self.plucker
    }

    /// Point `s a + t b` of the line.
    pub fn point(&self, s: C64, t: C64) -> [C64; 4] {
        let (a, b) = (self.a.coords(), self.b.coords());
        [0, 1, 2, 3].map(|i| s * a[i] + t * b[i])
    }

    pub fn relation_residual(&self) -> f64 {
        plucker_relation(&self.plucker).norm()
    }

    /// Projective distance between Plücker vectors.
    pub fn distance(&self, other: &ProjLine) -> f64 {
        proj_distance(&self.plucker, &other.plucker)
    }

    /// Lexicographic key on the normalized Plücker vector.
    pub fn sort_key(&self) -> [f64; 12] {
        let u = cnorm(&self.plucker);
        let mut k = [0.0; 12];
        for (i, z) in self.plucker.iter().enumerate() {
            k[2 * i] = round_key(z.re / u);
            k[2 * i + 1] = round_key(z.im / u);
        }
        k
    }

    pub fn contains(&self, x: &[C64; 4], tol: f64) -> bool {
        let m = CMat::from_rows(&[
            self.a.coords().to_vec(),
            self.b.coords().to_vec(),
            x.to_vec(),
        ]);
        numeric_rank(&m, tol) <= 2
    }
}

/// Line of P^3 on the exact track.
#[derive(Debug, Clone, PartialEq)]
pub struct RatLine {
    a: RatPoint,
    b: RatPoint,
    plucker: [Q; 6],
}

impl RatLine {
    pub fn span(&self) -> (&RatPoint, &RatPoint) {
        (&self.a, &self.b)
    }

    pub fn plucker(&self) -> &[Q; 6] {
        &self.plucker
    }

    pub fn to_complex(&self) -> ProjLine {
        line_from_points(&self.a.to_complex(), &self.b.to_complex())
            .expect("exact line has distinct points")
    }
}

/// The line through two projectively distinct points.
pub fn line_from_points(a: &ProjPoint, b: &ProjPoint) -> Result<ProjLine> {
    if a.distance(b) < DEFAULT_TOL {
        return Err(Error::DegenerateInput("coincident points".into()));
    }
    let p = wedge(a.coords(), b.coords());
    let m = p.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let k = p.iter().position(|z| z.norm() == m).unwrap();
    let s = p[k];
    let mut plucker = p.map(|z| z / s);
    plucker[k] = C64::one();
    Ok(ProjLine {
        a: *a,
        b: *b,
        plucker,
    })
}

pub fn rat_line_from_points(a: &RatPoint, b: &RatPoint) -> Result<RatLine> {
    let p = wedge(a.coords(), b.coords());
    let Some(first) = p.iter().find(|x| !x.is_zero()).cloned() else {
        return Err(Error::DegenerateInput("coincident points".into()));
    };
    Ok(RatLine {
        a: a.clone(),
        b: b.clone(),
        plucker: p.map(|x| x / first.clone()),
    })
}

pub fn lines_meet(l1: &ProjLine, l2: &ProjLine, tol: f64) -> bool {
    let pair = plucker_pairing(l1.plucker(), l2.plucker()).norm();
    pair < tol * cnorm(l1.plucker()) * cnorm(l2.plucker())
}

pub fn rat_lines_meet(l1: &RatLine, l2: &RatLine) -> bool {
    plucker_pairing(l1.plucker(), l2.plucker()).is_zero()
}

/// Symmetric 4x4 quadric on the floating track.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadricForm(CMat);

impl QuadricForm {
    pub fn new(m: CMat) -> Result<Self> {
        if m.rows != 4 || m.cols != 4 {
            return Err(Error::DegenerateInput("quadric must be 4x4".into()));
        }
        for i in 0..4 {
            for j in 0..i {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::DegenerateInput("matrix is not symmetric".into()));
                }
            }
        }
        Ok(QuadricForm(m))
    }

    pub fn matrix(&self) -> &CMat {
        &self.0
    }

    pub fn eval(&self, x: &[C64]) -> C64 {
        self.0.bilinear(x, x)
    }

    /// Modulus of `q(x)` relative to `|Q| |x|^2`.
    pub fn relative_value(&self, x: &[C64]) -> f64 {
        self.eval(x).norm() / (self.0.frobenius() * cnorm(x).powi(2))
    }

    pub fn rank(&self, tol: f64) -> usize {
        numeric_rank(&self.0, tol)
    }
}

/// Symmetric 4x4 quadric on the exact track.
#[derive(Debug, Clone, PartialEq)]
pub struct RatQuadric(QMat);

impl RatQuadric {
    pub fn new(m: QMat) -> Result<Self> {
        if m.rows != 4 || m.cols != 4 || !m.is_symmetric() {
            return Err(Error::DegenerateInput("not a symmetric 4x4 matrix".into()));
        }
        Ok(RatQuadric(m))
    }

    pub fn matrix(&self) -> &QMat {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    pub fn to_complex(&self) -> QuadricForm {
        QuadricForm(self.0.to_complex())
    }
}

/// Binary quadratic `(c_ss, c_st, c_tt)` of a quadric along a line.
pub fn restrict_quadric_to_line(q: &QuadricForm, l: &ProjLine) -> [C64; 3] {
    let (a, b) = l.span();
    restrict_form(q.matrix(), a.coords(), b.coords())
}

pub fn rat_restrict_quadric_to_line(q: &RatQuadric, l: &RatLine) -> [Q; 3] {
    let (a, b) = l.span();
    restrict_form(q.matrix(), a.coords(), b.coords())
}

/// Range of the integer entries used for the "general" objects drawn below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomConfig {
    pub range: i64,
}

impl Default for RandomConfig {
    fn default() -> Self {
        RandomConfig { range: 9 }
    }
}

fn random_vec4(rng: &mut Rng, cfg: RandomConfig) -> [Q; 4] {
    loop {
        let v = [0; 4].map(|_| rng.rational_in(cfg.range));
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

pub fn random_point(rng: &mut Rng, cfg: RandomConfig) -> RatPoint {
    RatPoint::new(random_vec4(rng, cfg)).expect("nonzero")
}

/// Coefficients of a plane `sum c_i x_i = 0`.
pub fn random_plane(rng: &mut Rng, cfg: RandomConfig) -> [Q; 4] {
    random_vec4(rng, cfg)
}

pub fn random_direction(rng: &mut Rng, cfg: RandomConfig) -> [Q; 4] {
    random_vec4(rng, cfg)
}

pub fn random_line(rng: &mut Rng, cfg: RandomConfig) -> RatLine {
    loop {
        let a = random_point(rng, cfg);
        let b = random_point(rng, cfg);
        if let Ok(l) = rat_line_from_points(&a, &b) {
            return l;
        }
    }
}

/// Count of independent points among the spanning points of two lines.
pub fn joint_span_rank(l1: &RatLine, l2: &RatLine) -> usize {
    let rows: Vec<Vec<Q>> = [l1.span().0, l1.span().1, l2.span().0, l2.span().1]
        .iter()
        .map(|p| p.coords().to_vec())
        .collect();
    QMat::from_rows(&rows).rank()
}
