//! Chow ring of the Grassmannian of lines in P^3.
//!
//! Basis `1, s1, s2, s11, s21, s22` graded by codimension. `s2` is the class
//! of the lines through a point and `s11` the class of the lines in a plane,
//! so the order of a congruence is its pairing with `s2` and its class the
//! pairing with `s11`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

pub const NAMES: [&str; 6] = ["1", "s1", "s2", "s11", "s21", "s22"];
pub const GRADES: [usize; 6] = [0, 1, 2, 2, 3, 4];

const ONE: usize = 0;
const S1: usize = 1;
const S2: usize = 2;
const S11: usize = 3;
const S21: usize = 4;
const S22: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SchubertClass(pub [i64; 6]);

/// Product of two basis elements as (coefficient, basis index) terms;
/// `None` when the grade exceeds 4.
fn basis_product(i: usize, j: usize) -> Option<Vec<(i64, usize)>> {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    if GRADES[i] + GRADES[j] > 4 {
        return None;
    }
    Some(match (i, j) {
        (ONE, k) => vec![(1, k)],
        (S1, S1) => vec![(1, S2), (1, S11)],
        (S1, S2) | (S1, S11) => vec![(1, S21)],
        (S1, S21) => vec![(1, S22)],
        (S2, S2) | (S11, S11) => vec![(1, S22)],
        (S2, S11) => vec![],
        _ => unreachable!("grade check"),
    })
}

impl SchubertClass {
    pub const ONE: SchubertClass = SchubertClass([1, 0, 0, 0, 0, 0]);

    pub fn basis(k: usize) -> Self {
        let mut c = [0; 6];
        c[k] = 1;
        SchubertClass(c)
    }

    pub fn s1() -> Self {
        Self::basis(S1)
    }

    pub fn s2() -> Self {
        Self::basis(S2)
    }

    pub fn s11() -> Self {
        Self::basis(S11)
    }

    pub fn s21() -> Self {
        Self::basis(S21)
    }

    pub fn s22() -> Self {
        Self::basis(S22)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0[k]
    }

    pub fn add(&self, o: &Self) -> Self {
        SchubertClass(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        SchubertClass(std::array::from_fn(|k| self.0[k] - o.0[k]))
    }

    pub fn scale(&self, s: i64) -> Self {
        SchubertClass(self.0.map(|c| c * s))
    }

    /// Component of codimension `g`.
    pub fn graded(&self, g: usize) -> Self {
        SchubertClass(std::array::from_fn(|k| if GRADES[k] == g { self.0[k] } else { 0 }))
    }

    /// Product, dropping terms beyond the top degree.
    pub fn mul(&self, o: &Self) -> Self {
        self.mul_inner(o).0
    }

    /// Product that fails if a nonzero term would exceed the top degree.
    pub fn mul_checked(&self, o: &Self) -> Result<Self> {
        let (p, overflow) = self.mul_inner(o);
        if overflow {
            return Err(Error::GradeOverflow);
        }
        Ok(p)
    }

    fn mul_inner(&self, o: &Self) -> (Self, bool) {
        let mut out = [0i64; 6];
        let mut overflow = false;
        for i in 0..6 {
            for j in 0..6 {
                let c = self.0[i] * o.0[j];
                if c == 0 {
                    continue;
                }
                match basis_product(i, j) {
                    Some(terms) => {
                        for (m, k) in terms {
                            out[k] += c * m;
                        }
                    }
                    None => overflow = true,
                }
            }
        }
        (SchubertClass(out), overflow)
    }

    /// Degree: the coefficient of the point class.
    pub fn degree(&self) -> i64 {
        self.0[S22]
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::ONE, |acc, _| acc.mul(self))
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .zip(NAMES)
            .filter(|(c, _)| **c != 0)
            .map(|(c, n)| if n == "1" { c.to_string() } else { format!("{c}*{n}") })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Class of a congruence with its order, class and Plücker degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceClass {
    pub name: String,
    pub class: SchubertClass,
    /// Lines through a general point.
    pub order: i64,
    /// Lines in a general plane.
    pub class_number: i64,
    pub degree: i64,
    pub derived: bool,
}

impl CongruenceClass {
    fn from_class(name: &str, class: SchubertClass, derived: bool) -> Self {
        CongruenceClass {
            name: name.into(),
            class,
            order: class.mul(&SchubertClass::s2()).degree(),
            class_number: class.mul(&SchubertClass::s11()).degree(),
            degree: class.mul(&SchubertClass::s1().pow(2)).degree(),
            derived,
        }
    }
}

/// Chern classes of `Sym^2 U*` from `c(U*) = 1 + s1 + s11`: with Chern
/// roots `a, b` the roots of the symmetric square are `2a, a + b, 2b`.
pub fn chern_sym2_dual() -> SchubertClass {
    let s1 = SchubertClass::s1();
    let s11 = SchubertClass::s11();
    // (1 + 2a)(1 + 2b) = 1 + 2 s1 + 4 s11, times (1 + a + b)
    let first = SchubertClass::ONE.add(&s1.scale(2)).add(&s11.scale(4));
    first.mul(&SchubertClass::ONE.add(&s1))
}

/// Degeneracy class of the restriction map `O^4 -> Sym^2 U*` dropping to
/// rank 2: `c1^2 - c2`.
pub fn porteous_reye() -> CongruenceClass {
    let c = chern_sym2_dual();
    let c1 = c.graded(1);
    let c2 = c.graded(2);
    CongruenceClass::from_class("reye", c1.mul(&c1).sub(&c2), true)
}

/// Reye congruence (derived) and the bitangent congruence of a general
/// quartic surface (recorded).
pub fn record_known_classes() -> Vec<CongruenceClass> {
    let bitangent = SchubertClass::s2().scale(12).add(&SchubertClass::s11().scale(28));
    vec![
        porteous_reye(),
        CongruenceClass::from_class("quartic bitangents", bitangent, false),
    ]
}
