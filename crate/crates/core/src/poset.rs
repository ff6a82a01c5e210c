//! Reduced cocycles, the covering poset of the band and finite group actions.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::geom::{self, Angle};
use crate::rational::{self, ceil_i, floor_i, Q};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("band mismatch: {0} vs {1}")]
    BandMismatch(String, String),
    #[error("band {0} outside (0, 1]")]
    BadBand(String),
    #[error("element ({0}, {1}) is wider than the band")]
    OutsideBand(String, String),
    #[error("not a group: {0}")]
    NotAGroup(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A triple `(x, y, ±)` with `|x − y| ≤ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoveringElement {
    #[serde(with = "rational::text")]
    pub x: Q,
    #[serde(with = "rational::text")]
    pub y: Q,
    pub sign: Sign,
    #[serde(with = "rational::text")]
    pub band: Q,
}

impl CoveringElement {
    pub fn new(x: Q, y: Q, sign: Sign, band: Q) -> Result<CoveringElement, PosetError> {
        if band <= Q::zero() || band > Q::one() {
            return Err(PosetError::BadBand(rational::to_text(band)));
        }
        if (x - y).abs() > band {
            return Err(PosetError::OutsideBand(rational::to_text(x), rational::to_text(y)));
        }
        Ok(CoveringElement { x, y, sign, band })
    }

    /// The diagonal element `M(a, a)` with sign `+`.
    pub fn diagonal(a: Q, band: Q) -> CoveringElement {
        CoveringElement { x: a, y: a, sign: Sign::Plus, band }
    }

    /// Representative of the σ-orbit with `x + y ∈ [0, 2)`.
    pub fn canonical(&self) -> CoveringElement {
        let k = floor_i((self.x + self.y) / Q::from_integer(2));
        sigma_pow(self, -k)
    }

    pub fn is_boundary(&self) -> bool {
        (self.x - self.y).abs() == self.band
    }

    pub fn rotate(&self, by: Q) -> CoveringElement {
        CoveringElement { x: self.x + by, y: self.y + by, ..*self }.canonical()
    }
}

impl fmt::Display for CoveringElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({}, {}){}", self.x, self.y, self.sign)
    }
}

fn same_band(a: &CoveringElement, b: &CoveringElement) -> Result<(), PosetError> {
    if a.band == b.band {
        Ok(())
    } else {
        Err(PosetError::BandMismatch(rational::to_text(a.band), rational::to_text(b.band)))
    }
}

pub fn sigma(e: &CoveringElement) -> CoveringElement {
    CoveringElement { x: e.y + 1, y: e.x + 1, sign: e.sign.flip(), band: e.band }
}

/// `σ^m`, for any integer `m`.
pub fn sigma_pow(e: &CoveringElement, m: i64) -> CoveringElement {
    let k = m.div_euclid(2);
    let shift = Q::from_integer(2 * k);
    let even = CoveringElement { x: e.x + shift, y: e.y + shift, ..*e };
    if m.rem_euclid(2) == 0 {
        even
    } else {
        sigma(&even)
    }
}

pub fn leq(a: &CoveringElement, b: &CoveringElement) -> Result<bool, PosetError> {
    same_band(a, b)?;
    Ok(a.x <= b.x && a.y <= b.y)
}

/// Least integer `m` (possibly negative) with `a ≤ σ^m b`.
pub fn least_power(a: &CoveringElement, b: &CoveringElement) -> i64 {
    let two = Q::from_integer(2);
    let even = ceil_i((a.x - b.x) / two).max(ceil_i((a.y - b.y) / two));
    let odd = ceil_i((a.x - b.y - 1) / two).max(ceil_i((a.y - b.x - 1) / two));
    (2 * even).min(2 * odd + 1)
}

pub fn min_sigma_power(a: &CoveringElement, b: &CoveringElement) -> Result<u32, PosetError> {
    same_band(a, b)?;
    Ok(least_power(a, b).max(0) as u32)
}

pub fn cocycle_xb(x: &CoveringElement, y: &CoveringElement, z: &CoveringElement) -> Result<u32, PosetError> {
    same_band(x, y)?;
    same_band(x, z)?;
    Ok(xb_value(x, y, z))
}

fn xb_value(x: &CoveringElement, y: &CoveringElement, z: &CoveringElement) -> u32 {
    let v = least_power(x, y) + least_power(y, z) - least_power(x, z);
    debug_assert!(v >= 0);
    v as u32
}

/// `c(X, Y, X) = 0`: the two elements are isomorphic in the linearized category.
pub fn equivalent(a: &CoveringElement, b: &CoveringElement) -> bool {
    least_power(a, b) + least_power(b, a) == 0
}

pub type CocycleFn<E> = Arc<dyn Fn(&E, &E, &E) -> u32 + Send + Sync>;

pub fn circle_cocycle() -> CocycleFn<Angle> {
    Arc::new(|x: &Angle, y: &Angle, z: &Angle| {
        geom::cyclic_order(x, y, z).unwrap_or_else(|e| panic!("{e}"))
    })
}

pub fn band_cocycle() -> CocycleFn<CoveringElement> {
    Arc::new(|x: &CoveringElement, y: &CoveringElement, z: &CoveringElement| {
        cocycle_xb(x, y, z).unwrap_or_else(|e| panic!("{e}"))
    })
}

/// Checks the four-term identity on every sampled quadruple and reduction on every sampled pair.
pub fn verify_cocycle<E: fmt::Debug>(c: &dyn Fn(&E, &E, &E) -> u32, samples: &[E]) -> Report {
    if samples.len() < 4 {
        return Report::fail(0, "need at least 4 samples");
    }
    let mut checked = 0;
    for x in samples {
        for y in samples {
            checked += 1;
            if c(x, x, y) != 0 || c(x, y, y) != 0 {
                return Report::fail(checked, format!("reduction fails at ({x:?}, {y:?})"));
            }
        }
    }
    for w in samples {
        for x in samples {
            for y in samples {
                for z in samples {
                    checked += 1;
                    let lhs = i64::from(c(x, y, z)) + i64::from(c(w, x, z));
                    let rhs = i64::from(c(w, y, z)) + i64::from(c(w, x, y));
                    if lhs != rhs {
                        return Report::fail(
                            checked,
                            format!("identity fails at ({w:?}, {x:?}, {y:?}, {z:?})"),
                        );
                    }
                }
            }
        }
    }
    Report::pass(checked)
}

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl Group {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Group, PosetError> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(PosetError::NotAGroup("table is not square over 0..n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| PosetError::NotAGroup("no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| PosetError::NotAGroup(format!("{a} has no inverse")))?;
            inverse.push(b);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(PosetError::NotAGroup(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(Group { table, identity, inverse })
    }

    pub fn cyclic(n: usize) -> Group {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_table(table).expect("cyclic table")
    }

    /// Permutations of three letters; element 0 is the identity, 1 and 2 the 3-cycles.
    pub fn symmetric3() -> Group {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        Group::from_table(table).expect("S3 table")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_abelian_on(&self, subset: &[usize]) -> bool {
        subset.iter().all(|&a| subset.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}

pub type ActionFn<E> = Arc<dyn Fn(usize, &E) -> E + Send + Sync>;
pub type BoundaryFn<E> = Arc<dyn Fn(&E) -> bool + Send + Sync>;

/// A group acting on a poset carrier, together with the distinguished subset `X₀`.
#[derive(Clone)]
pub struct GroupSpec<E> {
    pub group: Group,
    pub act: ActionFn<E>,
    pub boundary: BoundaryFn<E>,
}

impl<E> GroupSpec<E> {
    pub fn apply(&self, g: usize, x: &E) -> E {
        (self.act)(g, x)
    }
}

/// `ℤ/n` acting on the band by rotation through `k·step` (units of π).
pub fn band_rotation(n: usize, step: Q) -> GroupSpec<CoveringElement> {
    GroupSpec {
        group: Group::cyclic(n),
        act: Arc::new(move |k: usize, e: &CoveringElement| e.rotate(step * Q::from_integer(k as i64))),
        boundary: Arc::new(|e: &CoveringElement| e.is_boundary()),
    }
}

/// `ℤ/n` acting on a circle by rotation through `k·step`, with `X₀` empty.
pub fn circle_rotation(n: usize, step: Q) -> GroupSpec<Angle> {
    GroupSpec {
        group: Group::cyclic(n),
        act: Arc::new(move |k: usize, a: &Angle| a.rotate(step * Q::from_integer(k as i64))),
        boundary: Arc::new(|_: &Angle| false),
    }
}

pub fn trivial_action<E: Clone + 'static>(group: Group) -> GroupSpec<E> {
    GroupSpec {
        group,
        act: Arc::new(|_: usize, e: &E| e.clone()),
        boundary: Arc::new(|_: &E| false),
    }
}

/// Action axiom, invariance of `c`, and `γX₀ = X₀` on the samples.
pub fn verify_group_action<E: Clone + PartialEq + fmt::Debug>(
    spec: &GroupSpec<E>,
    c: &dyn Fn(&E, &E, &E) -> u32,
    samples: &[E],
) -> Report {
    let g = &spec.group;
    let mut checked = 0;
    for x in samples {
        checked += 1;
        if spec.apply(g.identity(), x) != *x {
            return Report::fail(checked, format!("identity moves {x:?}"));
        }
        for a in g.elements() {
            for b in g.elements() {
                checked += 1;
                if spec.apply(a, &spec.apply(b, x)) != spec.apply(g.mul(a, b), x) {
                    return Report::fail(checked, format!("not an action at ({a}, {b}, {x:?})"));
                }
            }
            checked += 1;
            if (spec.boundary)(x) && !(spec.boundary)(&spec.apply(a, x)) {
                return Report::fail(checked, format!("element {a} moves {x:?} out of X0"));
            }
        }
    }
    for x in samples {
        for y in samples {
            for z in samples {
                let v = c(x, y, z);
                for a in g.elements() {
                    checked += 1;
                    let w = c(&spec.apply(a, x), &spec.apply(a, y), &spec.apply(a, z));
                    if v != w {
                        return Report::fail(
                            checked,
                            format!("element {a} changes c at ({x:?}, {y:?}, {z:?})"),
                        );
                    }
                }
            }
        }
    }
    Report::pass(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn m(x: Q, y: Q) -> CoveringElement {
        CoveringElement::new(x, y, Sign::Plus, qi(1)).unwrap()
    }

    #[test]
    fn least_power_matches_search() {
        let pts = [q(-3, 2), q(-1, 2), qi(0), q(1, 4), q(3, 4), qi(1), q(7, 4)];
        for &a in &pts {
            for &b in &pts {
                for &c in &pts {
                    for &d in &pts {
                        let (e1, e2) = (m(a, a + (b - a) / 4), m(c, c + (d - c) / 4));
                        let k = least_power(&e1, &e2);
                        assert!(leq(&e1, &sigma_pow(&e2, k)).unwrap());
                        assert!(!leq(&e1, &sigma_pow(&e2, k - 1)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn groups_build() {
        assert_eq!(Group::symmetric3().order(), 6);
        assert!(!Group::symmetric3().is_abelian_on(&[0, 1, 2, 3, 4, 5]));
        assert!(Group::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
    }
}
