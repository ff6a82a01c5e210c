//! Finite marked-point models: clusters, mutation, approximation triangles,
//! valued quivers and exchange matrices.

mod approx;
mod enumerate;
mod mutation;
mod quiver;
mod triangles;

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arcs::{ArcError, ArcObject, Disk};
use crate::geom::{relation_raw, Relation};
use crate::poset::Sign;
use crate::rational::{rem, Q};

pub use approx::{
    approximation_triangles, cone_of_approximation, left_approximation, right_approximation, ApproxTriangle,
    Approximation, Summand,
};
pub use enumerate::{enumerate_clusters, mutation_graph, MutationGraph, MAX_CANDIDATES};
pub use mutation::{mutate, mutate_object, mutation_oracle, MutationCase, MutationOutcome};
pub use quiver::{exchange_matrix, fz_mutate, quiver, sync_check, Arrow, ExchangeMatrix, SyncReport, ValuedQuiver};
pub use triangles::{verify_triangle, Orientation, Scalar, ScalarMatrix, Sextuple, TriangleKind, TrianglePattern};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClusterError {
    #[error(transparent)]
    Arc(#[from] ArcError),
    #[error("model needs n >= 3, got {0}")]
    TooFewPoints(u32),
    #[error("{0} is not a mutable object of the model")]
    NotMutable(String),
    #[error("{0} is frozen")]
    Frozen(String),
    #[error("{0} is not in the cluster")]
    Absent(String),
    #[error("index {0} out of range")]
    Index(usize),
    #[error("invalid cluster: {0}")]
    Invalid(String),
    #[error("constructive mutation {constructive} disagrees with the exhaustive scan {oracle:?}")]
    OracleDisagreement { constructive: String, oracle: Vec<String> },
    #[error("size guard exceeded: {0} candidate objects")]
    TooLarge(usize),
    #[error("no triangle rule applies: {0}")]
    NoCone(String),
    #[error("malformed triangle pattern: {0}")]
    Pattern(String),
}

/// `n` equally spaced marked points on the circle of J-intervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawModel")]
pub struct MarkedModel {
    pub p: u32,
    pub n: u32,
}

#[derive(Deserialize)]
struct RawModel {
    p: u32,
    n: u32,
}

impl TryFrom<RawModel> for MarkedModel {
    type Error = ClusterError;

    fn try_from(r: RawModel) -> Result<MarkedModel, ClusterError> {
        MarkedModel::new(r.p, r.n)
    }
}

impl MarkedModel {
    pub fn new(p: u32, n: u32) -> Result<MarkedModel, ClusterError> {
        Disk::new(p)?;
        if n < 3 {
            return Err(ClusterError::TooFewPoints(n));
        }
        Ok(MarkedModel { p, n })
    }

    pub fn disk(&self) -> Disk {
        Disk::new(self.p).expect("checked on construction")
    }

    pub fn period(&self) -> Q {
        self.disk().period()
    }

    pub fn spacing(&self) -> Q {
        self.period() / Q::from_integer(i64::from(self.n))
    }

    fn point(&self, k: i64) -> Q {
        self.spacing() * Q::from_integer(k)
    }

    fn reg(&self, a: i64, b: i64) -> ArcObject {
        self.disk().regular(self.point(a), self.point(b)).expect("marked chord")
    }

    /// The `n` arcs joining adjacent marked points.
    pub fn frozen(&self) -> Vec<ArcObject> {
        (0..i64::from(self.n)).map(|k| self.reg(k, k + 1)).collect()
    }

    /// Every mutable object with endpoints on marked points.
    pub fn candidates(&self) -> Vec<ArcObject> {
        let n = i64::from(self.n);
        let mut out = Vec::new();
        for k in 0..n {
            if self.p == 2 {
                out.push(ArcObject::Singular { x: self.point(k), sign: Sign::Plus });
                out.push(ArcObject::Singular { x: self.point(k), sign: Sign::Minus });
            } else {
                out.push(ArcObject::Loop { x: self.point(k) });
            }
        }
        for j in 0..n {
            for l in 2..n {
                out.push(self.reg(j, j + l));
            }
        }
        out
    }

    fn on_grid(&self, v: Q) -> bool {
        (v / self.spacing()).is_integer()
    }

    pub fn is_frozen(&self, a: &ArcObject) -> bool {
        self.frozen().contains(a)
    }

    pub fn is_mutable(&self, a: &ArcObject) -> bool {
        let d = self.disk();
        match d.canonical(a) {
            Ok(c) if c == *a => {}
            _ => return false,
        }
        match *a {
            ArcObject::Regular { x, y } => {
                let len = y - x;
                self.on_grid(x) && self.on_grid(y) && d.is_rigid(a) && len > self.spacing()
            }
            ArcObject::Singular { x, .. } | ArcObject::Loop { x } => self.on_grid(x),
        }
    }

    /// The seed cluster used by the CLI and HTTP service.
    ///
    /// For `p = 2`: the fan `SE(0, k/n)`, `k = 2..n−1`, with `Z+(0)` and `Z+((n−1)/n)`.
    /// For odd `p`: two nested triangles around the loop at 0, completed by a fan.
    pub fn seed(&self) -> Cluster {
        let n = i64::from(self.n);
        let mut arcs = Vec::new();
        if self.p == 2 {
            for k in 2..n {
                arcs.push(self.reg(0, k));
            }
            arcs.push(ArcObject::Singular { x: Q::zero(), sign: Sign::Plus });
            arcs.push(ArcObject::Singular { x: self.point(n - 1), sign: Sign::Plus });
        } else {
            arcs.push(self.reg(0, 2));
            if n >= 6 {
                arcs.push(self.reg(2, n - 2));
            }
            if n >= 5 {
                arcs.push(self.reg(0, n - 2));
            }
            arcs.push(ArcObject::Loop { x: Q::zero() });
            if n >= 4 {
                arcs.push(self.reg(n - 2, n));
            }
            for k in 4..n - 2 {
                arcs.push(self.reg(2, k));
            }
        }
        Cluster { model: *self, arcs }
    }
}

/// An ordered list of mutable objects of a marked model.
///
/// JSON: `{"p": 2, "n": 4, "arcs": [...]}`; objects are canonicalized on reading.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCluster")]
pub struct Cluster {
    #[serde(flatten)]
    pub model: MarkedModel,
    pub arcs: Vec<ArcObject>,
}

#[derive(Deserialize)]
struct RawCluster {
    p: u32,
    n: u32,
    arcs: Vec<ArcObject>,
}

impl TryFrom<RawCluster> for Cluster {
    type Error = ClusterError;

    fn try_from(r: RawCluster) -> Result<Cluster, ClusterError> {
        Cluster::new(MarkedModel::new(r.p, r.n)?, r.arcs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClusterReport {
    pub valid: bool,
    pub on_model: bool,
    pub pairwise_compatible: bool,
    pub maximal: bool,
    pub structure: bool,
    pub problems: Vec<String>,
}

impl Cluster {
    pub fn new(model: MarkedModel, arcs: Vec<ArcObject>) -> Result<Cluster, ClusterError> {
        let d = model.disk();
        let arcs = arcs.iter().map(|a| d.canonical(a)).collect::<Result<Vec<_>, _>>()?;
        Ok(Cluster { model, arcs })
    }

    pub fn disk(&self) -> Disk {
        self.model.disk()
    }

    pub fn index_of(&self, a: &ArcObject) -> Option<usize> {
        self.arcs.iter().position(|b| b == a)
    }

    /// Cluster objects together with the frozen arcs.
    pub fn with_frozen(&self) -> Vec<ArcObject> {
        self.arcs.iter().copied().chain(self.model.frozen()).collect()
    }

    pub fn sorted(&self) -> Cluster {
        let mut arcs = self.arcs.clone();
        arcs.sort();
        Cluster { model: self.model, arcs }
    }

    pub fn key(&self) -> BTreeSet<ArcObject> {
        self.arcs.iter().copied().collect()
    }

    pub fn reflect(&self) -> Cluster {
        let d = self.disk();
        Cluster { model: self.model, arcs: self.arcs.iter().map(|a| d.reflect(a)).collect() }
    }

    pub fn validate(&self) -> ClusterReport {
        validate_cluster(self)
    }
}

pub fn validate_cluster(c: &Cluster) -> ClusterReport {
    let m = &c.model;
    let d = c.disk();
    let mut problems = Vec::new();
    let mut on_model = true;
    for a in &c.arcs {
        if !m.is_mutable(a) {
            on_model = false;
            problems.push(format!("{a} is not a mutable object of the model"));
        }
    }
    if c.key().len() != c.arcs.len() {
        on_model = false;
        problems.push("repeated object".into());
    }
    let all = c.with_frozen();
    let mut pairwise = true;
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            if !d.compatible(a, b) {
                pairwise = false;
                problems.push(format!("{a} and {b} are not compatible"));
            }
        }
    }
    let mut maximal = true;
    for cand in m.candidates() {
        if !c.arcs.contains(&cand) && all.iter().all(|a| d.compatible(a, &cand)) {
            maximal = false;
            problems.push(format!("{cand} can be added"));
        }
    }
    let structure = if m.p == 2 {
        let sing: Vec<(Q, Sign)> = c
            .arcs
            .iter()
            .filter_map(|a| match a {
                ArcObject::Singular { x, sign } => Some((*x, *sign)),
                _ => None,
            })
            .collect();
        let points: BTreeSet<Q> = sing.iter().map(|s| s.0).collect();
        let signs: BTreeSet<Sign> = sing.iter().map(|s| s.1).collect();
        let pair = sing.len() == 2 && points.len() == 1;
        let fan = sing.len() >= 2 && signs.len() == 1 && points.len() == sing.len();
        pair || fan
    } else {
        c.arcs.iter().filter(|a| a.is_loop()).count() == 1
    };
    if !structure {
        problems.push("singular or loop structure violated".into());
    }
    ClusterReport {
        valid: on_model && pairwise && maximal && structure,
        on_model,
        pairwise_compatible: pairwise,
        maximal,
        structure,
        problems,
    }
}

/// `J(b) ⊆ J(a)` for rigid regulars.
fn j_contains(per: Q, a: &ArcObject, b: &ArcObject) -> bool {
    match (a, b) {
        (ArcObject::Regular { x, y }, ArcObject::Regular { x: z, y: w }) => {
            matches!(relation_raw(*x, *y - *x, *z, *w - *z, per), Relation::Equal | Relation::NestedBinA)
        }
        _ => false,
    }
}

fn regulars(c: &Cluster) -> Vec<ArcObject> {
    c.with_frozen().into_iter().filter(ArcObject::is_regular).collect()
}

/// Regulars of `C ∪ frozen` whose J-interval is not properly inside another.
fn components(c: &Cluster) -> Vec<ArcObject> {
    let per = c.model.period();
    let regs = regulars(c);
    regs.iter().filter(|a| !regs.iter().any(|b| b != *a && j_contains(per, b, a))).copied().collect()
}

fn same_point(a: Q, b: Q, per: Q) -> bool {
    rem(a - b, per).is_zero()
}
