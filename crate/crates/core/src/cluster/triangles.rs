use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ClusterError;
use crate::arcs::{ArcObject, Disk};
use crate::poset::Sign;
use crate::rational::{self, rem, Q};
use crate::ring::{RingElement, DEFAULT_TRUNCATION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleKind {
    A,
    B,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    #[default]
    Ccw,
    Cw,
}

/// A scalar in `ℚ[[u]]/u^N`; JSON is `"p/q"` for constants or a list of `u`-coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar(pub RingElement);

impl Scalar {
    pub fn q(v: Q) -> Scalar {
        Scalar(RingElement::from_q(DEFAULT_TRUNCATION, 1, v))
    }

    pub fn int(v: i64) -> Scalar {
        Scalar::q(Q::from_integer(v))
    }

    /// Multiplication by the uniformizer.
    pub fn perturbed(&self) -> Scalar {
        Scalar(self.0.shift(1))
    }
}

fn coefficient_text(r: &RingElement, k: usize) -> Result<String, String> {
    let c = r.coefficient(k).as_rational().ok_or("irrational coefficient")?;
    let n: i64 = c.numer().try_into().map_err(|_| "coefficient too large")?;
    let d: i64 = c.denom().try_into().map_err(|_| "coefficient too large")?;
    Ok(rational::to_text(Q::new(n, d)))
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let r = &self.0;
        let last = (0..r.truncation()).rev().find(|&k| !r.coefficient(k).is_zero());
        let texts: Vec<String> = (0..=last.unwrap_or(0))
            .map(|k| coefficient_text(r, k))
            .collect::<Result<_, _>>()
            .map_err(serde::ser::Error::custom)?;
        if texts.len() == 1 {
            texts[0].serialize(s)
        } else {
            texts.serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            One(String),
            Series(Vec<String>),
        }
        let texts = match Raw::deserialize(d)? {
            Raw::One(t) => vec![t],
            Raw::Series(v) => v,
        };
        if texts.is_empty() || texts.len() > DEFAULT_TRUNCATION {
            return Err(D::Error::custom("scalar needs 1 to 8 coefficients"));
        }
        let mut r = RingElement::zero(DEFAULT_TRUNCATION, 1);
        for (k, t) in texts.iter().enumerate() {
            let v = rational::parse(t).map_err(D::Error::custom)?;
            let term = RingElement::from_q(DEFAULT_TRUNCATION, 1, v).shift(k);
            r = &r + &term;
        }
        Ok(Scalar(r))
    }
}

pub type ScalarMatrix = Vec<Vec<Scalar>>;

/// The commutative diagram of split sequences behind triangle (c): two rows
/// `A → B → C` joined by three vertical maps, with a twist on the middle term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sextuple {
    pub top: [ScalarMatrix; 2],
    pub verticals: [ScalarMatrix; 3],
    pub bottom: [ScalarMatrix; 2],
    pub twist: ScalarMatrix,
    pub swap: ScalarMatrix,
}

fn mat(rows: &[&[i64]]) -> ScalarMatrix {
    rows.iter().map(|r| r.iter().map(|&v| Scalar::int(v)).collect()).collect()
}

impl Sextuple {
    /// The generating diagram for sign `ε`.
    pub fn standard(sign: Sign) -> Sextuple {
        let e = sign.as_i64();
        Sextuple {
            top: [mat(&[&[1], &[-1]]), mat(&[&[1, 1]])],
            verticals: [mat(&[&[1]]), mat(&[&[e, 0], &[0, -1]]), mat(&[&[1]])],
            bottom: [mat(&[&[e], &[1]]), mat(&[&[e, -1]])],
            twist: mat(&[&[0, -e], &[-e, 0]]),
            swap: mat(&[&[0, 1], &[1, 0]]),
        }
    }

    /// Every scalar slot, for perturbation experiments.
    pub fn slots_mut(&mut self) -> Vec<&mut Scalar> {
        let Sextuple { top, verticals, bottom, twist, swap } = self;
        top.iter_mut()
            .chain(verticals.iter_mut())
            .chain(bottom.iter_mut())
            .chain(std::iter::once(twist))
            .chain(std::iter::once(swap))
            .flat_map(|m| m.iter_mut().flat_map(|r| r.iter_mut()))
            .collect()
    }

    pub fn verify(&self) -> Result<bool, ClusterError> {
        let [f1, g1] = &self.top;
        let [v1, v2, v3] = &self.verticals;
        let [f2, g2] = &self.bottom;
        let zero_row = |m: &ScalarMatrix| m.iter().all(|r| r.iter().all(|s| s.0.is_zero()));
        Ok(zero_row(&mat_mul(g1, f1)?)
            && zero_row(&mat_mul(g2, f2)?)
            && mat_mul(v2, f1)? == mat_mul(f2, v1)?
            && mat_mul(v3, g1)? == mat_mul(g2, v2)?
            && mat_mul(v2, &self.twist)? == mat_mul(&self.swap, v2)?)
    }
}

fn mat_mul(a: &ScalarMatrix, b: &ScalarMatrix) -> Result<ScalarMatrix, ClusterError> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    if a.iter().any(|r| r.len() != inner) || b.iter().any(|r| r.len() != cols) {
        return Err(ClusterError::Pattern("matrix sizes do not compose".into()));
    }
    Ok(a.iter()
        .map(|r| {
            (0..cols)
                .map(|j| {
                    let mut acc = RingElement::zero(DEFAULT_TRUNCATION, 1);
                    for (k, x) in r.iter().enumerate() {
                        acc = &acc + &(&x.0 * &b[k][j].0);
                    }
                    Scalar(acc)
                })
                .collect()
        })
        .collect())
}

/// A distinguished triangle of one of the three basic shapes, with its scalars.
///
/// * kind a: three regulars on three points; scalars multiply to 1 (ccw) or −1 (cw).
/// * kind b: `[SE(x,y), Z+(x), Z−(x), SE(y,x+1)]` with scalars `[f, g₊, g₋, h]`,
///   `g₊ = g₋` and `f·g·h = 1/2`.
/// * kind c: `[Zε(x), Zε(y), SE(x,y)]`; scalars multiply to −1, and the sextuple, if
///   given, must commute.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrianglePattern {
    pub kind: TriangleKind,
    pub objects: Vec<ArcObject>,
    pub scalars: Vec<Scalar>,
    #[serde(default)]
    pub orientation: Orientation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sextuple: Option<Sextuple>,
}

fn product(s: &[&Scalar]) -> RingElement {
    s.iter().fold(RingElement::one(DEFAULT_TRUNCATION, 1), |acc, x| &acc * &x.0)
}

fn target(v: Q) -> RingElement {
    RingElement::from_q(DEFAULT_TRUNCATION, 1, v)
}

fn shape(kind: TriangleKind, objects: &[ArcObject]) -> Result<(), ClusterError> {
    let d = Disk::new(2).expect("p = 2");
    let bad = |why: &str| ClusterError::Pattern(format!("kind {kind:?}: {why}"));
    let objects = objects.iter().map(|a| d.canonical(a)).collect::<Result<Vec<_>, _>>()?;
    let one = Q::one();
    match kind {
        TriangleKind::A => {
            let mut ends: BTreeMap<Q, u32> = BTreeMap::new();
            for a in &objects {
                let ArcObject::Regular { x, y } = a else { return Err(bad("objects must be regular")) };
                *ends.entry(rem(*x, one)).or_default() += 1;
                *ends.entry(rem(*y, one)).or_default() += 1;
            }
            if objects.len() != 3 || ends.len() != 3 || ends.values().any(|&c| c != 2) {
                return Err(bad("need three regulars on three points"));
            }
        }
        TriangleKind::B => {
            let [ArcObject::Regular { x, y }, ArcObject::Singular { x: p, sign: Sign::Plus }, ArcObject::Singular { x: q, sign: Sign::Minus }, ArcObject::Regular { x: s, y: e }] =
                objects.as_slice()
            else {
                return Err(bad("need [SE(x,y), Z+(x), Z-(x), SE(y,x+1)]"));
            };
            if *p != *x || *q != *x || *s != rem(*y, one) || rem(*e - *x, one) != Q::zero() {
                return Err(bad("need [SE(x,y), Z+(x), Z-(x), SE(y,x+1)]"));
            }
        }
        TriangleKind::C => {
            let [ArcObject::Singular { x: a, sign: s }, ArcObject::Singular { x: b, sign: t }, ArcObject::Regular { x, y }] =
                objects.as_slice()
            else {
                return Err(bad("need [Ze(x), Ze(y), SE(x,y)]"));
            };
            if s != t || a == b || d.regular(*a, *b)? != (ArcObject::Regular { x: *x, y: *y }) {
                return Err(bad("need [Ze(x), Ze(y), SE(x,y)]"));
            }
        }
    }
    Ok(())
}

/// Checks the scalar condition for a triangle of the given shape.
pub fn verify_triangle(tp: &TrianglePattern) -> Result<bool, ClusterError> {
    shape(tp.kind, &tp.objects)?;
    let s: Vec<&Scalar> = tp.scalars.iter().collect();
    let need = match tp.kind {
        TriangleKind::B => 4,
        _ => 3,
    };
    if s.len() != need {
        return Err(ClusterError::Pattern(format!("kind {:?} needs {need} scalars, got {}", tp.kind, s.len())));
    }
    Ok(match tp.kind {
        TriangleKind::A => {
            let want = match tp.orientation {
                Orientation::Ccw => 1,
                Orientation::Cw => -1,
            };
            product(&s) == target(Q::from_integer(want))
        }
        TriangleKind::B => s[1] == s[2] && product(&[s[0], s[1], s[3]]) == target(Q::new(1, 2)),
        TriangleKind::C => {
            let sext = match &tp.sextuple {
                Some(x) => x.verify()?,
                None => true,
            };
            sext && product(&s) == target(Q::from_integer(-1))
        }
    })
}
