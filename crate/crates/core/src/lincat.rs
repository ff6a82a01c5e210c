//! The linearized category of a cyclic poset: formal sums of elements and
//! matrices of ring elements composed with a cocycle twist.

use std::fmt;
use std::sync::Arc;

use crate::poset::CocycleFn;
use crate::ring::{invert_matrix, CycScalar, RingElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("domain/codomain mismatch: {0}")]
    Mismatch(String),
    #[error("element not in the carrier: {0}")]
    UnknownElement(String),
}

/// Ordered direct sum of poset elements.
pub type FormalObject<E> = Vec<E>;

/// Rows are indexed by codomain summands, columns by domain summands.
#[derive(Clone, PartialEq, Eq)]
pub struct CatMorphism<E> {
    pub dom: FormalObject<E>,
    pub cod: FormalObject<E>,
    pub entries: Vec<Vec<RingElement>>,
}

impl<E: fmt::Debug> fmt::Debug for CatMorphism<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?} -> {:?}", self.dom, self.cod)?;
        for row in &self.entries {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl<E: Clone> CatMorphism<E> {
    pub fn entry(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i][j]
    }

    pub fn map_entries(&self, g: impl Fn(&RingElement) -> RingElement) -> CatMorphism<E> {
        CatMorphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            entries: self.entries.iter().map(|r| r.iter().map(&g).collect()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(RingElement::is_zero)
    }
}

pub type CarrierFn<E> = Arc<dyn Fn(&E) -> bool + Send + Sync>;

/// `P(X, c, R)` with `R = K[u]/(u^N)`, `K = ℚ(ζ_m)`.
#[derive(Clone)]
pub struct LinCat<E> {
    cocycle: CocycleFn<E>,
    carrier: CarrierFn<E>,
    trunc: usize,
    root: u32,
}

impl<E: Clone + PartialEq + fmt::Debug> LinCat<E> {
    pub fn new(cocycle: CocycleFn<E>, trunc: usize, root: u32) -> LinCat<E> {
        LinCat { cocycle, carrier: Arc::new(|_: &E| true), trunc, root }
    }

    pub fn with_carrier(mut self, carrier: CarrierFn<E>) -> LinCat<E> {
        self.carrier = carrier;
        self
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn root_order(&self) -> u32 {
        self.root
    }

    pub fn c(&self, x: &E, y: &E, z: &E) -> u32 {
        (self.cocycle)(x, y, z)
    }

    /// Isomorphic in the category: `c(X, Y, X) = 0`.
    pub fn equivalent(&self, x: &E, y: &E) -> bool {
        self.c(x, y, x) == 0 && self.c(y, x, y) == 0
    }

    pub fn scalar(&self, s: CycScalar) -> RingElement {
        RingElement::from_scalar(self.trunc, s)
    }

    pub fn int(&self, v: i64) -> RingElement {
        self.scalar(CycScalar::from_int(self.root, v))
    }

    pub fn u_pow(&self, k: u32) -> RingElement {
        RingElement::monomial(self.trunc, CycScalar::one(self.root), k as usize)
    }

    pub fn zero(&self, dom: &[E], cod: &[E]) -> CatMorphism<E> {
        CatMorphism {
            dom: dom.to_vec(),
            cod: cod.to_vec(),
            entries: vec![vec![self.int(0); dom.len()]; cod.len()],
        }
    }

    pub fn identity(&self, obj: &[E]) -> CatMorphism<E> {
        let mut f = self.zero(obj, obj);
        for i in 0..obj.len() {
            f.entries[i][i] = self.int(1);
        }
        f
    }

    pub fn basic(&self, x: &E, y: &E) -> Result<CatMorphism<E>, LinError> {
        for e in [x, y] {
            if !(self.carrier)(e) {
                return Err(LinError::UnknownElement(format!("{e:?}")));
            }
        }
        Ok(CatMorphism { dom: vec![x.clone()], cod: vec![y.clone()], entries: vec![vec![self.int(1)]] })
    }

    pub fn from_entries(&self, dom: &[E], cod: &[E], entries: Vec<Vec<RingElement>>) -> Result<CatMorphism<E>, LinError> {
        if entries.len() != cod.len() || entries.iter().any(|r| r.len() != dom.len()) {
            return Err(LinError::Mismatch("matrix shape does not match objects".into()));
        }
        Ok(CatMorphism { dom: dom.to_vec(), cod: cod.to_vec(), entries })
    }

    /// `f ∘ g` with `[fg]_{ik} = Σ_j u^{c(X_k, Y_j, Z_i)} f_{ij} g_{jk}`.
    pub fn compose(&self, f: &CatMorphism<E>, g: &CatMorphism<E>) -> Result<CatMorphism<E>, LinError> {
        if f.dom != g.cod {
            return Err(LinError::Mismatch(format!("{:?} vs {:?}", f.dom, g.cod)));
        }
        let mut out = self.zero(&g.dom, &f.cod);
        for (i, zi) in f.cod.iter().enumerate() {
            for (k, xk) in g.dom.iter().enumerate() {
                let mut acc = self.int(0);
                for (j, yj) in g.cod.iter().enumerate() {
                    if f.entries[i][j].is_zero() || g.entries[j][k].is_zero() {
                        continue;
                    }
                    let t = (&f.entries[i][j] * &g.entries[j][k]).shift(self.c(xk, yj, zi) as usize);
                    acc = &acc + &t;
                }
                out.entries[i][k] = acc;
            }
        }
        Ok(out)
    }

    pub fn add(&self, f: &CatMorphism<E>, g: &CatMorphism<E>) -> Result<CatMorphism<E>, LinError> {
        if f.dom != g.dom || f.cod != g.cod {
            return Err(LinError::Mismatch("sum of morphisms with different shapes".into()));
        }
        let entries = f
            .entries
            .iter()
            .zip(&g.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(CatMorphism { dom: f.dom.clone(), cod: f.cod.clone(), entries })
    }

    pub fn scale(&self, f: &CatMorphism<E>, r: &RingElement) -> CatMorphism<E> {
        f.map_entries(|x| x * r)
    }

    /// Block-diagonal sum `f ⊕ g`.
    pub fn direct_sum(&self, f: &CatMorphism<E>, g: &CatMorphism<E>) -> CatMorphism<E> {
        let dom: Vec<E> = f.dom.iter().chain(&g.dom).cloned().collect();
        let cod: Vec<E> = f.cod.iter().chain(&g.cod).cloned().collect();
        let mut out = self.zero(&dom, &cod);
        for (i, row) in f.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                out.entries[i][j] = x.clone();
            }
        }
        for (i, row) in g.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                out.entries[f.cod.len() + i][f.dom.len() + j] = x.clone();
            }
        }
        out
    }

    /// Partition of the summands into isomorphism classes.
    fn classes(&self, obj: &[E]) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (i, x) in obj.iter().enumerate() {
            match out.iter_mut().find(|cl| self.equivalent(&obj[cl[0]], x)) {
                Some(cl) => cl.push(i),
                None => out.push(vec![i]),
            }
        }
        out
    }

    /// Two-sided inverse, if any. Solved blockwise modulo `u` over the isomorphism
    /// classes of summands, then lifted by a Neumann series and checked exactly.
    pub fn inverse(&self, f: &CatMorphism<E>) -> Option<CatMorphism<E>> {
        let n = f.dom.len();
        if f.cod.len() != n {
            return None;
        }
        let mut g0 = self.zero(&f.cod, &f.dom);
        let dom_classes = self.classes(&f.dom);
        let mut seen = vec![false; n];
        for cls in &dom_classes {
            let rep = &f.dom[cls[0]];
            let rows: Vec<usize> = (0..n).filter(|&i| self.equivalent(rep, &f.cod[i])).collect();
            if rows.len() != cls.len() {
                return None;
            }
            for &i in &rows {
                seen[i] = true;
            }
            let block: Vec<Vec<CycScalar>> =
                rows.iter().map(|&i| cls.iter().map(|&j| f.entries[i][j].residue()).collect()).collect();
            let inv = invert_matrix(&block, self.root)?;
            for (a, &j) in cls.iter().enumerate() {
                for (b, &i) in rows.iter().enumerate() {
                    g0.entries[j][i] = self.scalar(inv[a][b].clone());
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return None;
        }
        let id = self.identity(&f.cod);
        let fg0 = self.compose(f, &g0).ok()?;
        let e = self.add(&id, &fg0.map_entries(|x| -x)).ok()?;
        let mut sum = id.clone();
        let mut power = id.clone();
        for _ in 1..self.trunc * n.max(1) {
            power = self.compose(&power, &e).ok()?;
            if power.is_zero() {
                break;
            }
            sum = self.add(&sum, &power).ok()?;
        }
        let g = self.compose(&g0, &sum).ok()?;
        let left = self.compose(&g, f).ok()?;
        let right = self.compose(f, &g).ok()?;
        (left == self.identity(&f.dom) && right == id).then_some(g)
    }

    pub fn is_isomorphism(&self, f: &CatMorphism<E>) -> bool {
        self.inverse(f).is_some()
    }
}
