//! Points, open arcs and cyclic order on circles of circumference `2/k` (units of π).

use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, rem, Q};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(String, String),
    #[error("circumference {0} is not 2/k for a positive integer k")]
    BadModulus(String),
    #[error("degenerate arc: start equals end")]
    Degenerate,
}

fn check_modulus(m: Q) -> Result<(), GeomError> {
    let k = Q::from_integer(2) / m;
    if m > Q::zero() && k.is_integer() {
        Ok(())
    } else {
        Err(GeomError::BadModulus(rational::to_text(m)))
    }
}

fn same(a: Q, b: Q) -> Result<Q, GeomError> {
    if a == b {
        Ok(a)
    } else {
        Err(GeomError::ModulusMismatch(rational::to_text(a), rational::to_text(b)))
    }
}

/// A point on a circle, stored normalized to `[0, modulus)`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Angle {
    #[serde(with = "rational::text")]
    value: Q,
    #[serde(with = "rational::text")]
    modulus: Q,
}

impl Angle {
    pub fn new(value: Q, modulus: Q) -> Result<Angle, GeomError> {
        check_modulus(modulus)?;
        Ok(Angle { value: rem(value, modulus), modulus })
    }

    pub fn value(&self) -> Q {
        self.value
    }

    pub fn modulus(&self) -> Q {
        self.modulus
    }

    pub fn try_eq(&self, other: &Angle) -> Result<bool, GeomError> {
        same(self.modulus, other.modulus)?;
        Ok(self.value == other.value)
    }

    pub fn rotate(&self, by: Q) -> Angle {
        Angle { value: rem(self.value + by, self.modulus), modulus: self.modulus }
    }
}

/// Comparing angles on different circles is a unit bug, so it panics instead of answering.
impl PartialEq for Angle {
    fn eq(&self, other: &Angle) -> bool {
        match self.try_eq(other) {
            Ok(b) => b,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Eq for Angle {}

impl Hash for Angle {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
        self.modulus.hash(state);
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Open arc running counterclockwise from `start` to `end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcInterval {
    start: Angle,
    end: Angle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    Disjoint,
    NestedAinB,
    NestedBinA,
    Equal,
    Crossing,
}

impl Relation {
    pub fn flip(self) -> Relation {
        match self {
            Relation::NestedAinB => Relation::NestedBinA,
            Relation::NestedBinA => Relation::NestedAinB,
            r => r,
        }
    }
}

impl ArcInterval {
    pub fn new(start: Angle, end: Angle) -> Result<ArcInterval, GeomError> {
        same(start.modulus, end.modulus)?;
        if start.value == end.value {
            return Err(GeomError::Degenerate);
        }
        Ok(ArcInterval { start, end })
    }

    pub fn from_values(start: Q, end: Q, modulus: Q) -> Result<ArcInterval, GeomError> {
        ArcInterval::new(Angle::new(start, modulus)?, Angle::new(end, modulus)?)
    }

    pub fn start(&self) -> Angle {
        self.start
    }

    pub fn end(&self) -> Angle {
        self.end
    }

    pub fn modulus(&self) -> Q {
        self.start.modulus
    }

    pub fn length(&self) -> Q {
        rem(self.end.value - self.start.value, self.modulus())
    }
}

fn check3(x: &Angle, y: &Angle, z: &Angle) -> Result<Q, GeomError> {
    same(x.modulus, y.modulus)?;
    same(x.modulus, z.modulus)
}

/// Raw cyclic order on a circle of circumference `m`: 0 iff `x ≤ y ≤ z < x + m` for some lifts,
/// so a full turn `c(x, y, x)` with `y ≠ x` counts 1.
pub fn cyclic_order_raw(x: Q, y: Q, z: Q, m: Q) -> u32 {
    u32::from(rem(y - x, m) + rem(z - y, m) >= m)
}

pub fn cyclic_order(x: &Angle, y: &Angle, z: &Angle) -> Result<u32, GeomError> {
    let m = check3(x, y, z)?;
    Ok(cyclic_order_raw(x.value, y.value, z.value, m))
}

/// Relation between open arcs `(s1, s1+l1)` and `(s2, s2+l2)` on a circle of circumference `m`.
pub fn relation_raw(s1: Q, l1: Q, s2: Q, l2: Q, m: Q) -> Relation {
    let s = rem(s2 - s1, m);
    let t = rem(s1 - s2, m);
    if s.is_zero() && l1 == l2 {
        Relation::Equal
    } else if s + l2 <= l1 {
        Relation::NestedBinA
    } else if t + l1 <= l2 {
        Relation::NestedAinB
    } else if s >= l1 && s + l2 <= m {
        Relation::Disjoint
    } else {
        Relation::Crossing
    }
}

pub fn interval_relation(a: &ArcInterval, b: &ArcInterval) -> Result<Relation, GeomError> {
    let m = same(a.modulus(), b.modulus())?;
    Ok(relation_raw(a.start.value, a.length(), b.start.value, b.length(), m))
}

pub fn inside_raw(p: Q, start: Q, len: Q, m: Q) -> bool {
    let d = rem(p - start, m);
    !d.is_zero() && d < len
}

pub fn contains_point(i: &ArcInterval, p: &Angle) -> Result<bool, GeomError> {
    let m = same(i.modulus(), p.modulus)?;
    Ok(inside_raw(p.value, i.start.value, i.length(), m))
}

/// Circumference `2/p` of the circle on which arcs of the `p`-fold quotient live.
pub fn circumference(p: u32) -> Q {
    if p == 2 {
        Q::one()
    } else {
        Q::new(2, i64::from(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn a(v: Q, m: Q) -> Angle {
        Angle::new(v, m).unwrap()
    }

    #[test]
    fn normalizes() {
        assert_eq!(a(q(5, 2), qi(2)).value(), q(1, 2));
        assert_eq!(a(q(-1, 3), qi(1)).value(), q(2, 3));
        assert!(Angle::new(q(0, 1), q(3, 4)).is_err());
        assert!(Angle::new(q(0, 1), q(2, 3)).is_ok());
    }

    #[test]
    #[should_panic]
    fn mismatched_equality_panics() {
        let _ = a(qi(0), qi(1)) == a(qi(0), qi(2));
    }

    #[test]
    fn try_eq_reports_mismatch() {
        assert!(a(qi(0), qi(1)).try_eq(&a(qi(0), qi(2))).is_err());
        assert!(a(qi(0), qi(1)).try_eq(&a(qi(1), qi(1))).unwrap());
    }
}
