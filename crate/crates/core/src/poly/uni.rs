use crate::scalar::{q_to_c64, Field, C64, Q};

use serde::{Deserialize, Serialize};

/// Dense univariate polynomial, coefficients from low to high degree.
///
/// Trailing exact zeros are trimmed, so a nonzero polynomial always has a
/// nonzero leading coefficient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T> Default for UniPoly<T> {
    fn default() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
}

impl<T: Field> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::new();
        let mut k = T::zero();
        for c in self.coeffs.iter() {
            if !k.is_zero() {
                out.push(c.clone() * k.clone());
            }
            k = k + T::one();
        }
        UniPoly::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &Vec<T>, i: usize| v.get(i).cloned().unwrap_or_else(T::zero);
        UniPoly::new(
            (0..n)
                .map(|i| get(&self.coeffs, i) + get(&other.coeffs, i))
                .collect(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Quotient and remainder of long division; `None` for a zero divisor.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dl = d.leading()?.clone();
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / dl.clone();
            for (i, di) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - c.clone() * di.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((UniPoly::new(quot), UniPoly::new(rem)))
    }
}

impl UniPoly<Q> {
    pub fn to_complex(&self) -> UniPoly<C64> {
        UniPoly::new(self.coeffs.iter().map(q_to_c64).collect())
    }
}

impl UniPoly<C64> {
    pub fn norm(&self) -> f64 {
        crate::scalar::cnorm(&self.coeffs)
    }

    /// `|p(x)| / sum |a_i| |x|^i`, the componentwise backward error of a root.
    pub fn backward_error(&self, x: C64) -> f64 {
        let r = x.norm();
        let denom: f64 = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.norm() * r.powi(i as i32))
            .sum();
        if denom == 0.0 {
            return 0.0;
        }
        self.eval(&x).norm() / denom
    }
}

/// Newton-form interpolation through `(xs[i], ys[i])` over the rationals.
pub fn interpolate(xs: &[Q], ys: &[Q]) -> UniPoly<Q> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = (dd[i].clone() - dd[i - 1].clone()) / (xs[i].clone() - xs[i - k].clone());
        }
    }
    let mut p = UniPoly::new(vec![dd[n - 1].clone()]);
    for i in (0..n - 1).rev() {
        let lin = UniPoly::new(vec![-xs[i].clone(), Q::from_integer(1.into())]);
        p = p.mul(&lin).add(&UniPoly::new(vec![dd[i].clone()]));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        let a = UniPoly::new(vec![q(-1), q(0), q(1)]);
        let b = UniPoly::new(vec![q(2), q(3), q(0), q(5)]);
        let (quo, rem) = a.mul(&b).div_rem(&a).unwrap();
        assert_eq!(quo, b);
        assert!(rem.is_zero());
        let (_, rem) = b.div_rem(&a).unwrap();
        assert_eq!(rem.degree(), Some(1));
    }
    use crate::scalar::q;

    #[test]
    fn trimming_and_degree() {
        let p = UniPoly::new(vec![q(1), q(2), q(0), q(0)]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(UniPoly::<Q>::new(vec![q(0)]).degree(), None);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UniPoly::new(vec![q(3), q(-1), q(0), q(5), q(2)]);
        let xs: Vec<Q> = (0..5).map(q).collect();
        let ys: Vec<Q> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), p);
    }

    #[test]
    fn derivative_of_cubic() {
        let p = UniPoly::new(vec![q(1), q(1), q(1), q(1)]);
        assert_eq!(p.derivative(), UniPoly::new(vec![q(1), q(2), q(3)]));
    }
}
