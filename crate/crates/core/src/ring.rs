//! Truncated power series `K[u]/(u^N)` over the cyclotomic field `K = ℚ(ζ_m)`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rational::Q;

pub const DEFAULT_TRUNCATION: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("parameter mismatch: {0}")]
    Mismatch(String),
    #[error("not a unit: {0}")]
    NotUnit(String),
    #[error("division by zero")]
    DivisionByZero,
}

thread_local! {
    static CYCLOTOMIC: RefCell<HashMap<u32, Rc<Vec<BigRational>>>> = RefCell::new(HashMap::new());
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quo = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let f = r.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            r[k + i] -= &f * c;
        }
        quo[k] = f;
        trim(&mut r);
    }
    (quo, r)
}

/// The m-th cyclotomic polynomial, low degree first.
pub fn cyclotomic(m: u32) -> Rc<Vec<BigRational>> {
    if let Some(p) = CYCLOTOMIC.with(|c| c.borrow().get(&m).cloned()) {
        return p;
    }
    let mut p = vec![BigRational::zero(); m as usize + 1];
    p[0] = -BigRational::one();
    p[m as usize] = BigRational::one();
    for d in (1..m).filter(|d| m % d == 0) {
        p = poly_divmod(&p, &cyclotomic(d)).0;
    }
    let p = Rc::new(p);
    CYCLOTOMIC.with(|c| c.borrow_mut().insert(m, p.clone()));
    p
}

/// An element of `ℚ(ζ_m)` as a polynomial in `ζ_m` of degree below `φ(m)`.
///
/// Rational elements compare equal across root orders.
#[derive(Clone)]
pub struct CycScalar {
    m: u32,
    c: Vec<BigRational>,
}

impl CycScalar {
    fn reduce(m: u32, mut c: Vec<BigRational>) -> CycScalar {
        trim(&mut c);
        let phi = cyclotomic(m);
        if c.len() >= phi.len() {
            c = poly_divmod(&c, &phi).1;
        }
        CycScalar { m, c }
    }

    pub fn zero(m: u32) -> CycScalar {
        CycScalar { m, c: Vec::new() }
    }

    pub fn one(m: u32) -> CycScalar {
        CycScalar::from_q(m, Q::one())
    }

    pub fn from_q(m: u32, v: Q) -> CycScalar {
        let r = BigRational::new(BigInt::from(*v.numer()), BigInt::from(*v.denom()));
        CycScalar::from_big(m, r)
    }

    pub fn from_big(m: u32, v: BigRational) -> CycScalar {
        CycScalar::reduce(m, vec![v])
    }

    pub fn from_int(m: u32, v: i64) -> CycScalar {
        CycScalar::from_big(m, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn root_order(&self) -> u32 {
        self.m
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// The rational value, when the element lies in `ℚ`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.c.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    fn align(&self, other: &CycScalar) -> Result<u32, RingError> {
        if self.m == other.m {
            return Ok(self.m);
        }
        match (self.c.len() <= 1, other.c.len() <= 1) {
            (true, _) => Ok(other.m),
            (_, true) => Ok(self.m),
            _ => Err(RingError::Mismatch(format!("root orders {} and {}", self.m, other.m))),
        }
    }

    pub fn try_add(&self, other: &CycScalar) -> Result<CycScalar, RingError> {
        let m = self.align(other)?;
        let n = self.c.len().max(other.c.len());
        let c = (0..n)
            .map(|i| {
                let x = self.c.get(i).cloned().unwrap_or_else(BigRational::zero);
                let y = other.c.get(i).cloned().unwrap_or_else(BigRational::zero);
                x + y
            })
            .collect();
        Ok(CycScalar::reduce(m, c))
    }

    pub fn try_mul(&self, other: &CycScalar) -> Result<CycScalar, RingError> {
        let m = self.align(other)?;
        Ok(CycScalar::reduce(m, poly_mul(&self.c, &other.c)))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_m`.
    pub fn inv(&self) -> Result<CycScalar, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let phi = cyclotomic(self.m);
        let (mut r0, mut r1) = (phi.as_ref().clone(), self.c.clone());
        let (mut t0, mut t1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let t = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
        }
        let g = r0[0].clone();
        let c = t0.into_iter().map(|x| x / &g).collect();
        Ok(CycScalar::reduce(self.m, c))
    }

    pub fn pow(&self, k: u32) -> CycScalar {
        let mut out = CycScalar::one(self.m);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, o: &CycScalar) -> bool {
        self.c == o.c && (self.m == o.m || self.c.len() <= 1)
    }
}

impl Eq for CycScalar {}

impl std::hash::Hash for CycScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

pub fn root_of_unity(m: u32, k: u32) -> CycScalar {
    let mut c = vec![BigRational::zero(); (k % m) as usize + 1];
    c[(k % m) as usize] = BigRational::one();
    CycScalar::reduce(m, c)
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if a.is_negative() { " - " } else { " + " })?;
            } else if a.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = a.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*z{}", self.m)?,
                _ => write!(f, "{a}*z{}^{i}", self.m)?,
            }
        }
        Ok(())
    }
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, o: &CycScalar) -> CycScalar {
        self.try_add(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, o: &CycScalar) -> CycScalar {
        self + &-o
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { m: self.m, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, o: &CycScalar) -> CycScalar {
        self.try_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

/// `Σ c_k u^k mod u^N` with coefficients in `ℚ(ζ_m)`.
#[derive(Clone)]
pub struct RingElement {
    m: u32,
    c: Vec<CycScalar>,
}

impl PartialEq for RingElement {
    fn eq(&self, o: &RingElement) -> bool {
        self.c == o.c
    }
}

impl Eq for RingElement {}

impl std::hash::Hash for RingElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl RingElement {
    pub fn zero(n: usize, m: u32) -> RingElement {
        RingElement { m, c: vec![CycScalar::zero(m); n] }
    }

    pub fn one(n: usize, m: u32) -> RingElement {
        RingElement::from_scalar(n, CycScalar::one(m))
    }

    pub fn from_scalar(n: usize, s: CycScalar) -> RingElement {
        let m = s.m;
        let mut r = RingElement::zero(n, m);
        if n > 0 {
            r.c[0] = s;
        }
        r
    }

    pub fn from_q(n: usize, m: u32, v: Q) -> RingElement {
        RingElement::from_scalar(n, CycScalar::from_q(m, v))
    }

    /// `s · u^k` (zero once `k ≥ N`).
    pub fn monomial(n: usize, s: CycScalar, k: usize) -> RingElement {
        let mut r = RingElement::zero(n, s.m);
        if k < n {
            r.c[k] = s;
        }
        r
    }

    pub fn uniformizer(n: usize, m: u32) -> RingElement {
        RingElement::monomial(n, CycScalar::one(m), 1)
    }

    pub fn from_coefficients(m: u32, c: Vec<CycScalar>) -> RingElement {
        RingElement { m, c }
    }

    pub fn truncation(&self) -> usize {
        self.c.len()
    }

    pub fn root_order(&self) -> u32 {
        self.m
    }

    pub fn coefficients(&self) -> &[CycScalar] {
        &self.c
    }

    pub fn coefficient(&self, k: usize) -> &CycScalar {
        &self.c[k]
    }

    pub fn residue(&self) -> CycScalar {
        self.c.first().cloned().unwrap_or_else(|| CycScalar::zero(self.m))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(CycScalar::is_zero)
    }

    pub fn valuation(&self) -> usize {
        self.c.iter().position(|x| !x.is_zero()).unwrap_or(self.c.len())
    }

    pub fn is_unit(&self) -> bool {
        self.c.first().is_some_and(|x| !x.is_zero())
    }

    fn check(&self, o: &RingElement) -> Result<(), RingError> {
        if self.c.len() != o.c.len() {
            return Err(RingError::Mismatch(format!("truncations {} and {}", self.c.len(), o.c.len())));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &RingElement) -> Result<RingElement, RingError> {
        self.check(o)?;
        let c = self.c.iter().zip(&o.c).map(|(a, b)| a.try_add(b)).collect::<Result<Vec<_>, _>>()?;
        Ok(RingElement { m: self.m.max(o.m), c })
    }

    pub fn try_mul(&self, o: &RingElement) -> Result<RingElement, RingError> {
        self.check(o)?;
        let n = self.c.len();
        let mut c = vec![CycScalar::zero(self.m.max(o.m)); n];
        for i in 0..n {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if o.c[j].is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].try_add(&self.c[i].try_mul(&o.c[j])?)?;
            }
        }
        Ok(RingElement { m: self.m.max(o.m), c })
    }

    pub fn scale(&self, s: &CycScalar) -> RingElement {
        RingElement { m: self.m.max(s.m), c: self.c.iter().map(|x| x * s).collect() }
    }

    /// Multiplication by `u^k`.
    pub fn shift(&self, k: usize) -> RingElement {
        let n = self.c.len();
        let mut r = RingElement::zero(n, self.m);
        for i in 0..n.saturating_sub(k) {
            r.c[i + k] = self.c[i].clone();
        }
        r
    }

    /// Inverse by the geometric series for `1 + g`, `g = a/c₀ − 1`.
    pub fn invert(&self) -> Result<RingElement, RingError> {
        if !self.is_unit() {
            return Err(RingError::NotUnit(format!("{self:?}")));
        }
        let n = self.c.len();
        let c0 = self.c[0].inv()?;
        let g = &self.scale(&c0) - &RingElement::one(n, self.m);
        let neg_g = -&g;
        let mut term = RingElement::one(n, self.m);
        let mut sum = term.clone();
        for _ in 1..n {
            term = &term * &neg_g;
            sum = &sum + &term;
        }
        Ok(sum.scale(&c0))
    }

    pub fn pow(&self, k: u32) -> RingElement {
        let mut out = RingElement::one(self.c.len(), self.m);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| match k {
                0 => format!("({x})"),
                1 => format!("({x})u"),
                _ => format!("({x})u^{k}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, o: &RingElement) -> RingElement {
        self.try_add(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, o: &RingElement) -> RingElement {
        self + &-o
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement { m: self.m, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, o: &RingElement) -> RingElement {
        self.try_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

/// Gauss–Jordan inverse of a square matrix over `ℚ(ζ_m)`; `None` when singular.
pub fn invert_matrix(a: &[Vec<CycScalar>], m: u32) -> Option<Vec<Vec<CycScalar>>> {
    let n = a.len();
    let mut w: Vec<Vec<CycScalar>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { CycScalar::one(m) } else { CycScalar::zero(m) }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !w[r][col].is_zero())?;
        w.swap(col, piv);
        let inv = w[col][col].inv().ok()?;
        w[col] = w[col].iter().map(|x| x * &inv).collect();
        for r in 0..n {
            if r != col && !w[r][col].is_zero() {
                let f = w[r][col].clone();
                let pivot_row = w[col].clone();
                for (x, p) in w[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    Some(w.into_iter().map(|r| r[n..].to_vec()).collect())
}
