//! The two arithmetic tracks: exact rationals and complex doubles.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::Neg;

pub type Q = BigRational;
pub type C64 = Complex64;

/// Coefficient ring shared by the generic polynomial and matrix code.
pub trait Field: Clone + PartialEq + Num + Neg<Output = Self> + Debug + Send + Sync {}
impl<T> Field for T where T: Clone + PartialEq + Num + Neg<Output = T> + Debug + Send + Sync {}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn q_to_c64(x: &Q) -> C64 {
    C64::new(q_to_f64(x), 0.0)
}

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Best rational approximation of `x` with denominator at most `max_den`
/// (continued-fraction convergents).
pub fn rationalize(x: f64, max_den: i64) -> Option<Q> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut r = x;
    let limit = BigInt::from(max_den);
    for _ in 0..64 {
        let a = r.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2.abs() > limit {
            break;
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        let frac = r - a;
        if frac.abs() < 1e-15 {
            break;
        }
        r = 1.0 / frac;
        if !r.is_finite() || r.abs() > 1e15 {
            break;
        }
    }
    if k1.is_zero() {
        None
    } else {
        Some(Q::new(h1, k1))
    }
}

pub fn rat_to_string(x: &Q) -> String {
    x.to_string()
}

pub fn rat_from_str(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::parse_bytes(n.trim().as_bytes(), 10)?;
        let d = BigInt::parse_bytes(d.trim().as_bytes(), 10)?;
        if d.is_zero() {
            return None;
        }
        Some(Q::new(n, d))
    } else {
        Some(Q::from_integer(BigInt::parse_bytes(s.as_bytes(), 10)?))
    }
}

/// Hermitian norm of a complex vector.
pub fn cnorm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Hermitian inner product `<a, b> = sum conj(a_i) b_i`.
pub fn cdot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Sine of the angle between two complex lines through the origin; zero iff
/// the vectors are proportional.
pub fn proj_distance(a: &[C64], b: &[C64]) -> f64 {
    let na = cnorm(a);
    let nb = cnorm(b);
    if na == 0.0 || nb == 0.0 {
        return 1.0;
    }
    let proj = cdot(a, b) / (na * nb);
    let r: f64 = a
        .iter()
        .zip(b)
        .map(|(x, y)| (y / nb - proj * x / na).norm_sqr())
        .sum();
    r.sqrt().min(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationalize_recovers_small_fractions() {
        assert_eq!(rationalize(0.75, 100), Some(q_frac(3, 4)));
        assert_eq!(rationalize(-2.0 / 7.0, 100), Some(q_frac(-2, 7)));
        assert_eq!(rationalize(5.0, 10), Some(q(5)));
    }

    #[test]
    fn rational_strings_round_trip() {
        for s in ["3/4", "-7", "0", "-12/5"] {
            let x = rat_from_str(s).unwrap();
            assert_eq!(rat_from_str(&rat_to_string(&x)).unwrap(), x);
        }
        assert!(rat_from_str("1/0").is_none());
    }

    #[test]
    fn projective_distance_is_scale_free() {
        let a = [c(1.0, 0.0), c(2.0, 1.0), c(0.0, -1.0)];
        let b: Vec<C64> = a.iter().map(|z| z * c(0.3, -2.0)).collect();
        assert!(proj_distance(&a, &b) < 1e-12);
    }
}
