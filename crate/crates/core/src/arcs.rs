//! Tagged arcs on the punctured disk: indecomposables of the `ℤ/2` orbit category
//! and of the `ℤ/p` orbifold, with their J-intervals, ℋ-points, shift, Ext,
//! compatibility and Hom dimensions.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::geom::{circumference, inside_raw, relation_raw, Angle, ArcInterval, Relation};
use crate::poset::Sign;
use crate::rational::{self, ceil_i, floor_i, rem, Q};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArcError {
    #[error("degenerate chord: endpoints coincide")]
    Degenerate,
    #[error("chord ({0}, {1}) is a diameter; choose Z+ or Z- instead")]
    Diameter(String, String),
    #[error("{0} objects do not exist for p = {1}")]
    WrongModel(&'static str, u32),
    #[error("p must be 2 or an odd prime, got {0}")]
    BadP(u32),
    #[error("band parameter {0} out of range")]
    BadBand(String),
    #[error("object {0} is not almost rigid")]
    NotAlmostRigid(String),
}

/// An indecomposable up to isomorphism, in canonical form for its model.
///
/// `Regular` stores the E-chord `SE(x, y)` with `x` in `[0, period)` and `x < y`;
/// for rigid arcs `(x, y)` is the J-interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ArcObject {
    Regular {
        #[serde(with = "rational::text")]
        x: Q,
        #[serde(with = "rational::text")]
        y: Q,
    },
    Singular {
        #[serde(with = "rational::text")]
        x: Q,
        sign: Sign,
    },
    Loop {
        #[serde(with = "rational::text")]
        x: Q,
    },
}

impl fmt::Display for ArcObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcObject::Regular { x, y } => write!(f, "SE({x}, {y})"),
            ArcObject::Singular { x, sign } => write!(f, "Z{sign}({x})"),
            ArcObject::Loop { x } => write!(f, "L({x})"),
        }
    }
}

impl ArcObject {
    pub fn is_regular(&self) -> bool {
        matches!(self, ArcObject::Regular { .. })
    }

    pub fn is_singular(&self) -> bool {
        matches!(self, ArcObject::Singular { .. })
    }

    pub fn is_loop(&self) -> bool {
        matches!(self, ArcObject::Loop { .. })
    }
}

/// `J(X)`: an open arc, a point, or (for a loop) the circle punctured at one point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum JSet {
    Interval(ArcInterval),
    Point(Angle),
    Punctured(Angle),
}

/// A point `[a, b]_ε` of ℋ with `a < b ≤ a + 1`, `a ∈ [0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HPoint {
    #[serde(with = "rational::text")]
    pub a: Q,
    #[serde(with = "rational::text")]
    pub b: Q,
    pub sign: Sign,
}

impl HPoint {
    pub fn new(a: Q, b: Q, sign: Sign) -> HPoint {
        let shift = Q::from_integer(floor_i(a));
        let sign = if b - a < Q::one() { Sign::Plus } else { sign };
        HPoint { a: a - shift, b: b - shift, sign }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EndRing {
    Field,
    DualNumbers,
}

/// The arc model for a given `p`: `p = 2` is the punctured disk, odd `p` the orbifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Disk {
    p: u32,
}

fn is_odd_prime(p: u32) -> bool {
    p >= 3 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Number of lifts of the σ-orbit of `M(c, d)` in the rectangle `[a, b+1) × [b, a+1)`.
fn rectangle_hits(a: Q, b: Q, c: Q, d: Q) -> u32 {
    let two = Q::from_integer(2);
    let mut count = 0;
    for (u, v) in [(c, d), (d + 1, c + 1)] {
        let lo = ceil_i((a - u) / two).max(ceil_i((b - v) / two));
        let hi = (ceil_i((b + 1 - u) / two) - 1).min(ceil_i((a + 1 - v) / two) - 1);
        if hi >= lo {
            count += (hi - lo + 1) as u32;
        }
    }
    count
}

/// Hom dimension between two E-chords in the continuous type-A category.
fn chord_hom(p: (Q, Q), q: (Q, Q)) -> u32 {
    rectangle_hits(p.0, p.1 - 1, q.0, q.1 - 1)
}

/// `∃ k ∈ ℤ` with `lo_i < k ≤ hi_i` for every pair.
fn integer_between(bounds: &[(Q, Q)]) -> bool {
    let lo = bounds.iter().map(|(l, _)| floor_i(*l) + 1).max().unwrap();
    let hi = bounds.iter().map(|(_, h)| floor_i(*h)).min().unwrap();
    lo <= hi
}

/// Ext between regular objects in M-coordinates: `W = M(x, y)`, `Z = M(z, w)`, band `b`.
pub fn ext_regular(x: Q, y: Q, z: Q, w: Q, b: Q) -> bool {
    [(z, w), (w, z)]
        .into_iter()
        .any(|(z, w)| integer_between(&[(x - z, y + b - z), (y - w, x + b - w)]))
}

impl Disk {
    pub fn new(p: u32) -> Result<Disk, ArcError> {
        if p == 2 || is_odd_prime(p) {
            Ok(Disk { p })
        } else {
            Err(ArcError::BadP(p))
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Circumference of the circle carrying J-intervals: 1, or `2/p` for odd `p`.
    pub fn period(&self) -> Q {
        circumference(self.p)
    }

    fn odd(&self) -> bool {
        self.p != 2
    }

    /// The object `SE(x, y)` in canonical form.
    pub fn regular(&self, x: Q, y: Q) -> Result<ArcObject, ArcError> {
        let two = Q::from_integer(2);
        let d = rem(y - x, two);
        if d.is_zero() {
            return Err(ArcError::Degenerate);
        }
        let e = two - d;
        let per = self.period();
        if !self.odd() {
            if d == Q::one() {
                return Err(ArcError::Diameter(rational::to_text(x), rational::to_text(y)));
            }
            let (s, l) = if d < Q::one() { (x, d) } else { (y, e) };
            let s = rem(s, per);
            return Ok(ArcObject::Regular { x: s, y: s + l });
        }
        let short = if d <= e { (x, d) } else { (y, e) };
        match short.1.cmp(&per) {
            Ordering::Less => {
                let s = rem(short.0, per);
                Ok(ArcObject::Regular { x: s, y: s + short.1 })
            }
            Ordering::Equal => Ok(ArcObject::Loop { x: rem(short.0, per) }),
            Ordering::Greater => {
                let a = (rem(x, per), d);
                let b = (rem(y, per), e);
                let (s, l) = a.min(b);
                Ok(ArcObject::Regular { x: s, y: s + l })
            }
        }
    }

    pub fn singular(&self, x: Q, sign: Sign) -> Result<ArcObject, ArcError> {
        if self.odd() {
            return Err(ArcError::WrongModel("singular", self.p));
        }
        Ok(ArcObject::Singular { x: rem(x, Q::one()), sign })
    }

    pub fn loop_at(&self, x: Q) -> Result<ArcObject, ArcError> {
        if !self.odd() {
            return Err(ArcError::WrongModel("loop", self.p));
        }
        Ok(ArcObject::Loop { x: rem(x, self.period()) })
    }

    /// Canonical form of an arbitrary (e.g. freshly parsed) object.
    pub fn canonical(&self, a: &ArcObject) -> Result<ArcObject, ArcError> {
        match *a {
            ArcObject::Regular { x, y } => self.regular(x, y),
            ArcObject::Singular { x, sign } => self.singular(x, sign),
            ArcObject::Loop { x } => self.loop_at(x),
        }
    }

    /// The underlying E-chord `(x, y)`, `x < y`.
    pub fn chord(&self, a: &ArcObject) -> (Q, Q) {
        match *a {
            ArcObject::Regular { x, y } => (x, y),
            ArcObject::Singular { x, .. } => (x, x + 1),
            ArcObject::Loop { x } => (x, x + self.period()),
        }
    }

    /// M-coordinates: `SE(a, c) = M(a, c − 1)`, `Z(x) = M(x, x)`.
    pub fn m_coords(&self, a: &ArcObject) -> (Q, Q) {
        let (x, y) = self.chord(a);
        (x, y - 1)
    }

    pub fn is_rigid(&self, a: &ArcObject) -> bool {
        match a {
            ArcObject::Regular { x, y } => !self.odd() || *y - *x < self.period(),
            ArcObject::Singular { .. } => true,
            ArcObject::Loop { .. } => false,
        }
    }

    pub fn is_almost_rigid(&self, a: &ArcObject) -> bool {
        self.is_rigid(a) || a.is_loop()
    }

    pub fn end_ring(&self, a: &ArcObject) -> Result<EndRing, ArcError> {
        if self.is_rigid(a) {
            Ok(EndRing::Field)
        } else if a.is_loop() {
            Ok(EndRing::DualNumbers)
        } else {
            Err(ArcError::NotAlmostRigid(a.to_string()))
        }
    }

    pub fn j_interval(&self, a: &ArcObject) -> Result<JSet, ArcError> {
        let per = self.period();
        let a = self.canonical(a)?;
        let angle = |v: Q| Angle::new(v, per).expect("valid circumference");
        match a {
            ArcObject::Regular { x, y } if self.is_rigid(&a) => {
                Ok(JSet::Interval(ArcInterval::from_values(x, y, per).expect("nondegenerate")))
            }
            ArcObject::Regular { .. } => Err(ArcError::NotAlmostRigid(a.to_string())),
            ArcObject::Singular { x, .. } => Ok(JSet::Point(angle(x))),
            ArcObject::Loop { x } => Ok(JSet::Punctured(angle(x))),
        }
    }

    pub fn h_point(&self, a: &ArcObject) -> Result<HPoint, ArcError> {
        if self.odd() {
            return Err(ArcError::WrongModel("h-point", self.p));
        }
        Ok(match self.canonical(a)? {
            ArcObject::Regular { x, y } => HPoint::new(x, y, Sign::Plus),
            ArcObject::Singular { x, sign } => HPoint::new(x, x + 1, sign),
            ArcObject::Loop { .. } => unreachable!(),
        })
    }

    pub fn iso_equal(&self, a: &ArcObject, b: &ArcObject) -> Result<bool, ArcError> {
        Ok(self.canonical(a)? == self.canonical(b)?)
    }

    /// `M(x, y)[1] = M(y + b, x + b)`; singular objects change sign.
    pub fn shift(&self, a: &ArcObject, b: Q) -> Result<ArcObject, ArcError> {
        if b <= Q::zero() || b > Q::one() {
            return Err(ArcError::BadBand(rational::to_text(b)));
        }
        match self.canonical(a)? {
            ArcObject::Singular { x, sign } => self.singular(x + b, sign.flip()),
            other => {
                let (x, y) = self.m_coords(&other);
                let (nx, ny) = (y + b, x + b);
                self.regular(nx, ny + 1)
            }
        }
    }

    /// Whether `Ext(Z, W) ≠ 0` in the band of width `b`.
    pub fn ext_nonzero(&self, z: &ArcObject, w: &ArcObject, b: Q) -> Result<bool, ArcError> {
        if self.odd() {
            return Err(ArcError::WrongModel("Ext for the band", self.p));
        }
        if b <= Q::zero() || b >= Q::one() {
            return Err(ArcError::BadBand(rational::to_text(b)));
        }
        let (z, w) = (self.canonical(z)?, self.canonical(w)?);
        let (x, y) = self.m_coords(&w);
        let (zz, ww) = self.m_coords(&z);
        Ok(match (w, z) {
            (ArcObject::Regular { .. }, ArcObject::Regular { .. }) => ext_regular(x, y, zz, ww, b),
            (ArcObject::Regular { .. }, ArcObject::Singular { .. }) => {
                integer_between(&[(x.max(y) - zz, x.min(y) + b - zz)])
            }
            (ArcObject::Singular { .. }, ArcObject::Regular { .. }) => {
                integer_between(&[(x - zz, x + b - zz), (x - ww, x + b - ww)])
            }
            (ArcObject::Singular { sign: s1, .. }, ArcObject::Singular { sign: s2, .. }) => {
                s1 != s2 && integer_between(&[(x - zz, x + b - zz)])
            }
            _ => unreachable!("loops do not exist for p = 2"),
        })
    }

    /// Compatibility in either model.
    pub fn compatible(&self, a: &ArcObject, b: &ArcObject) -> bool {
        let per = self.period();
        if !self.is_almost_rigid(a) || !self.is_almost_rigid(b) {
            return false;
        }
        match (*a, *b) {
            (ArcObject::Regular { x, y }, ArcObject::Regular { x: z, y: w }) => {
                relation_raw(x, y - x, z, w - z, per) != Relation::Crossing
            }
            (ArcObject::Singular { x, sign: s }, ArcObject::Singular { x: z, sign: t }) => s == t || x == z,
            (ArcObject::Loop { x }, ArcObject::Loop { x: z }) => x == z,
            (ArcObject::Regular { x, y }, ArcObject::Singular { x: p, .. } | ArcObject::Loop { x: p })
            | (ArcObject::Singular { x: p, .. } | ArcObject::Loop { x: p }, ArcObject::Regular { x, y }) => {
                !inside_raw(p, x, y - x, per)
            }
            _ => false,
        }
    }

    pub fn compatible_zp(&self, a: &ArcObject, b: &ArcObject) -> Result<bool, ArcError> {
        if !self.odd() {
            return Err(ArcError::WrongModel("orbifold compatibility", self.p));
        }
        Ok(self.compatible(a, b))
    }

    pub fn hom_dim(&self, a: &ArcObject, b: &ArcObject) -> u32 {
        let (pa, pb) = (self.chord(a), self.chord(b));
        if self.odd() {
            let per = self.period();
            return (0..self.p)
                .map(|k| {
                    let s = per * Q::from_integer(i64::from(k));
                    chord_hom(pa, (pb.0 + s, pb.1 + s))
                })
                .sum();
        }
        match (a, b) {
            (ArcObject::Singular { sign: s, .. }, ArcObject::Singular { sign: t, .. }) => u32::from(s == t),
            (ArcObject::Regular { .. }, ArcObject::Regular { .. }) => {
                chord_hom(pa, pb) + chord_hom(pa, (pb.0 + 1, pb.1 + 1))
            }
            _ => chord_hom(pa, pb),
        }
    }

    pub fn end_dim(&self, a: &ArcObject) -> u32 {
        self.hom_dim(a, a)
    }

    /// Orientation-reversing reflection `θ ↦ −θ`.
    pub fn reflect(&self, a: &ArcObject) -> ArcObject {
        match *a {
            ArcObject::Regular { x, y } => self.regular(-y, -x).expect("reflection of a valid chord"),
            ArcObject::Singular { x, sign } => ArcObject::Singular { x: rem(-x, Q::one()), sign },
            ArcObject::Loop { x } => ArcObject::Loop { x: rem(-x, self.period()) },
        }
    }

    /// Rotation by `t` (units of π).
    pub fn rotate(&self, a: &ArcObject, t: Q) -> ArcObject {
        match *a {
            ArcObject::Regular { x, y } => self.regular(x + t, y + t).expect("rotation of a valid chord"),
            ArcObject::Singular { x, sign } => ArcObject::Singular { x: rem(x + t, Q::one()), sign },
            ArcObject::Loop { x } => ArcObject::Loop { x: rem(x + t, self.period()) },
        }
    }
}

pub fn compatible(a: &ArcObject, b: &ArcObject) -> bool {
    Disk { p: 2 }.compatible(a, b)
}

pub fn compatible_zp(a: &ArcObject, b: &ArcObject, p: u32) -> Result<bool, ArcError> {
    Disk::new(p)?.compatible_zp(a, b)
}

pub fn hom_dim(a: &ArcObject, b: &ArcObject) -> u32 {
    Disk { p: 2 }.hom_dim(a, b)
}

pub fn ext_nonzero(z: &ArcObject, w: &ArcObject, b: Q) -> Result<bool, ArcError> {
    Disk { p: 2 }.ext_nonzero(z, w, b)
}
