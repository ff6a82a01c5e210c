//! Exact rationals used for every coordinate in the crate.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;

pub type Q = Rational64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational {0:?}")]
pub struct ParseQError(pub String);

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

/// `a mod m` in `[0, m)` for positive `m`.
pub fn rem(a: Q, m: Q) -> Q {
    a - m * (a / m).floor()
}

/// Least lift of `a` (mod `m`) in `[base, base + m)`.
pub fn lift(a: Q, base: Q, m: Q) -> Q {
    base + rem(a - base, m)
}

pub fn floor_i(a: Q) -> i64 {
    a.floor().to_integer()
}

pub fn ceil_i(a: Q) -> i64 {
    a.ceil().to_integer()
}

/// Canonical text form `p/q`, reduced with positive denominator.
pub fn to_text(a: Q) -> String {
    format!("{}/{}", a.numer(), a.denom())
}

/// Accepts `p/q`, a bare integer, or a signed numerator over a signed denominator.
pub fn parse(s: &str) -> Result<Q, ParseQError> {
    let err = || ParseQError(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: i64 = n.parse().map_err(|_| err())?;
    let d: i64 = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    let g = n.gcd(&d);
    let (mut n, mut d) = (n / g, d / g);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    Ok(Q::new_raw(n, d))
}

/// Serde adapter storing a rational as its `p/q` string.
pub mod text {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_text(*v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for a in [q(3, 4), q(-7, 2), qi(0), qi(5), q(2, 6)] {
            assert_eq!(parse(&to_text(a)).unwrap(), a);
        }
        assert_eq!(to_text(q(2, -6)), "-1/3");
        assert_eq!(parse("4/-8").unwrap(), q(-1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn rem_is_in_range() {
        assert_eq!(rem(q(-1, 4), qi(1)), q(3, 4));
        assert_eq!(rem(q(5, 2), qi(2)), q(1, 2));
        assert_eq!(lift(q(1, 4), qi(3), qi(1)), q(13, 4));
    }
}
