//! JSON requests and responses shared by the command line and the HTTP service.
//!
//! Every function returns the exact response text (compact JSON plus a newline), so
//! both front ends emit identical bytes.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arcs::{ArcObject, Disk};
use crate::cluster::{
    self, approximation_triangles, enumerate_clusters, fz_mutate, mutation_graph, quiver, ApproxTriangle, Cluster,
    ClusterError, ExchangeMatrix, MarkedModel, TrianglePattern,
};
use crate::geom::{relation_raw, Angle};
use crate::lincat::{CatMorphism, LinCat};
use crate::orbit::{half_turn_splitting, s3_standard_irrep, OrbitCat};
use crate::poset::{
    band_cocycle, band_rotation, circle_cocycle, trivial_action, verify_cocycle, CoveringElement, Group, Sign,
};
use crate::rational::{self, Q};
use crate::report::Report;
use crate::ring::{CycScalar, RingElement, DEFAULT_TRUNCATION};

/// Malformed input (exit code 2) versus a well-formed request the engine rejects (exit code 1).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ApiError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{0}")]
    Domain(String),
}

impl ApiError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ApiError::Malformed(_) => 2,
            ApiError::Domain(_) => 1,
        }
    }

    pub fn to_json(&self) -> String {
        finish(&json!({ "error": self.to_string() }))
    }
}

impl From<ClusterError> for ApiError {
    fn from(e: ClusterError) -> ApiError {
        ApiError::Domain(e.to_string())
    }
}

pub type ApiResult = Result<String, ApiError>;

fn finish<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable response");
    s.push('\n');
    s
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, ApiError> {
    serde_json::from_str(text).map_err(|e| ApiError::Malformed(e.to_string()))
}

fn parse_value<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T, ApiError> {
    serde_json::from_value(v).map_err(|e| ApiError::Malformed(e.to_string()))
}

fn disk(p: u32) -> Result<Disk, ApiError> {
    Disk::new(p).map_err(|e| ApiError::Domain(e.to_string()))
}

fn canonical(d: &Disk, a: &ArcObject) -> Result<ArcObject, ApiError> {
    d.canonical(a).map_err(|e| ApiError::Domain(e.to_string()))
}

/// Seed cluster of the model.
pub fn model(p: u32, n: u32) -> ApiResult {
    Ok(finish(&MarkedModel::new(p, n)?.seed()))
}

fn require_valid(c: &Cluster) -> Result<(), ApiError> {
    let r = c.validate();
    if r.valid {
        Ok(())
    } else {
        Err(ApiError::Domain(format!("invalid cluster: {}", r.problems.join("; "))))
    }
}

#[derive(Serialize)]
struct Triangles {
    left: ApproxTriangle,
    right: ApproxTriangle,
}

#[derive(Serialize)]
struct MutateResponse {
    cluster: Cluster,
    case: String,
    replaced: ArcObject,
    new: ArcObject,
    triangles: Triangles,
}

/// Mutation at a 0-based position.
pub fn mutate(c: &Cluster, index: usize) -> ApiResult {
    require_valid(c)?;
    let out = cluster::mutate(c, index)?;
    let (left, right) = approximation_triangles(c, &out.old)?;
    Ok(finish(&MutateResponse {
        case: out.case_label(),
        replaced: out.old,
        new: out.new,
        cluster: out.cluster,
        triangles: Triangles { left, right },
    }))
}

pub fn quiver_json(c: &Cluster) -> ApiResult {
    require_valid(c)?;
    let q = quiver(c)?;
    let b = q.exchange_matrix()?;
    Ok(finish(&json!({ "quiver": q, "B": b })))
}

fn compat_case(d: &Disk, a: &ArcObject, b: &ArcObject) -> &'static str {
    if !d.is_almost_rigid(a) || !d.is_almost_rigid(b) {
        return "not-almost-rigid";
    }
    let per = d.period();
    match (a, b) {
        (ArcObject::Regular { x, y }, ArcObject::Regular { x: z, y: w }) => {
            match relation_raw(*x, *y - *x, *z, *w - *z, per) {
                crate::geom::Relation::Equal => "equal",
                crate::geom::Relation::NestedAinB | crate::geom::Relation::NestedBinA => "nested",
                crate::geom::Relation::Disjoint => "disjoint",
                crate::geom::Relation::Crossing => "crossing",
            }
        }
        (ArcObject::Singular { x, sign: s }, ArcObject::Singular { x: z, sign: t }) => {
            if x == z {
                "same-point"
            } else if s == t {
                "same-sign"
            } else {
                "opposite-signs"
            }
        }
        (ArcObject::Loop { .. }, ArcObject::Loop { .. }) => "loops",
        _ => {
            if d.compatible(a, b) {
                "point-outside"
            } else {
                "point-inside"
            }
        }
    }
}

pub fn compat(a: &ArcObject, b: &ArcObject, p: u32) -> ApiResult {
    let d = disk(p)?;
    let (a, b) = (canonical(&d, a)?, canonical(&d, b)?);
    Ok(finish(&json!({ "compatible": d.compatible(&a, &b), "case": compat_case(&d, &a, &b) })))
}

pub fn hom(a: &ArcObject, b: &ArcObject, p: u32) -> ApiResult {
    let d = disk(p)?;
    let (a, b) = (canonical(&d, a)?, canonical(&d, b)?);
    Ok(finish(&json!({ "dim": d.hom_dim(&a, &b) })))
}

/// Whether `Ext¹(a, b) ≠ 0` in the band of width `band`.
pub fn ext(a: &ArcObject, b: &ArcObject, band: Q) -> ApiResult {
    let d = disk(2)?;
    let v = d.ext_nonzero(a, b, band).map_err(|e| ApiError::Domain(e.to_string()))?;
    Ok(finish(&v))
}

pub fn enumerate(p: u32, n: u32) -> ApiResult {
    let cl = enumerate_clusters(&MarkedModel::new(p, n)?)?;
    Ok(finish(&json!({ "count": cl.len(), "clusters": cl })))
}

pub fn graph(p: u32, n: u32) -> ApiResult {
    let g = mutation_graph(&MarkedModel::new(p, n)?)?;
    let mut adjacency = vec![Vec::new(); g.clusters.len()];
    for &(i, j) in &g.edges {
        adjacency[i].push(j);
        adjacency[j].push(i);
    }
    for a in &mut adjacency {
        a.sort_unstable();
    }
    Ok(finish(&json!({
        "count": g.clusters.len(),
        "clusters": g.clusters,
        "adjacency": adjacency,
        "regular": g.degree.is_some(),
        "degree": g.degree,
        "connected": g.connected,
    })))
}

/// Matrix mutation at a 0-based vertex.
pub fn fz(b: &ExchangeMatrix, k: usize) -> ApiResult {
    Ok(finish(&fz_mutate(b, k)?))
}

pub fn triangle_check(tp: &TrianglePattern) -> ApiResult {
    Ok(finish(&cluster::verify_triangle(tp)?))
}

#[derive(Deserialize)]
struct BandSample {
    #[serde(with = "rational::text")]
    x: Q,
    #[serde(with = "rational::text")]
    y: Q,
    sign: Sign,
}

/// Cocycle identities on samples: band elements `{x, y, sign}` when `band` is given,
/// otherwise angles `"p/q"` on the circle of circumference 2.
pub fn cocycle_check(band: Option<Q>, samples: &str) -> ApiResult {
    let report = match band {
        Some(b) => {
            let raw: Vec<BandSample> = parse(samples)?;
            let elems = raw
                .iter()
                .map(|s| CoveringElement::new(s.x, s.y, s.sign, b).map_err(|e| ApiError::Domain(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            verify_cocycle(&*band_cocycle(), &elems)
        }
        None => {
            let raw: Vec<String> = parse(samples)?;
            let elems = raw
                .iter()
                .map(|t| {
                    let v = rational::parse(t).map_err(|e| ApiError::Malformed(e.to_string()))?;
                    Angle::new(v, Q::from_integer(2)).map_err(|e| ApiError::Domain(e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            verify_cocycle(&*circle_cocycle(), &elems)
        }
    };
    Ok(finish(&report))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitSampling {
    pub samples: usize,
    pub agree: usize,
    pub units: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitDemo {
    pub group: String,
    pub element: String,
    pub stabilizer: Vec<usize>,
    pub summands: Vec<Report>,
    pub isomorphism_verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub splitting_matrix: Option<Report>,
    pub unit_vs_iso: UnitSampling,
    pub passed: bool,
}

/// A random element of `ℚ(ζ_m)[[u]]/u^N` with small integer coefficients; the constant
/// term vanishes about half the time.
pub fn random_ring_element(rng: &mut StdRng, m: u32) -> RingElement {
    let unit = rng.gen_bool(0.5);
    let c = (0..DEFAULT_TRUNCATION)
        .map(|k| {
            if k == 0 && !unit {
                return CycScalar::zero(m);
            }
            let mut v = CycScalar::from_int(m, rng.gen_range(-3..=3));
            if k == 0 && v.is_zero() {
                v = CycScalar::one(m);
            }
            v
        })
        .collect();
    RingElement::from_coefficients(m, c)
}

/// Decomposition of `SX` for `X = M(1/4, 1/4)` (cyclic groups), or `S_ρX` for the
/// 2-dimensional irrep of `S₃`, with sampled checks that the unit criterion matches invertibility.
pub fn orbit_report(group: &str, samples: usize, seed: u64) -> Result<OrbitDemo, ApiError> {
    let mut rng = StdRng::seed_from_u64(seed);
    let band = Q::new(1, 2);
    let x = CoveringElement::diagonal(Q::new(1, 4), band).canonical();
    let (n, step) = match group {
        "z2" => (2, Q::from_integer(1)),
        "z3" => (3, Q::from_integer(2)),
        "z4" => (4, Q::from_integer(1)),
        "s3" => return Ok(s3_report(x, samples, &mut rng)),
        other => return Err(ApiError::Malformed(format!("unknown group {other:?}; expected z2, z3, z4 or s3"))),
    };
    let cat = LinCat::new(band_cocycle(), DEFAULT_TRUNCATION, n as u32);
    let oc = OrbitCat::new(cat, band_rotation(n, step));
    let stabilizer = oc.effective_stabilizer(&x);
    let (parts, iso) = oc.decompose_sx(&x).map_err(|e| ApiError::Domain(e.to_string()))?;
    let summands: Vec<Report> = parts.iter().map(|(_, p)| oc.verify_equivariance(p)).collect();
    let isomorphism_verified = oc.cat.is_isomorphism(&iso);
    let splitting_matrix = (n == 2).then(|| half_turn_splitting(x.x, band));
    let mut agree = 0;
    let mut units = 0;
    for _ in 0..samples {
        let (_, part) = &parts[rng.gen_range(0..parts.len())];
        let a = random_ring_element(&mut rng, n as u32);
        let f = CatMorphism { dom: part.underlying.clone(), cod: part.underlying.clone(), entries: vec![vec![a]] };
        let u = oc.is_unit_endo(&f).expect("endomorphism");
        units += usize::from(u);
        agree += usize::from(u == oc.cat.is_isomorphism(&f));
    }
    let passed = summands.iter().all(|r| r.passed)
        && isomorphism_verified
        && splitting_matrix.as_ref().is_none_or(|r| r.passed)
        && agree == samples;
    Ok(OrbitDemo {
        group: group.to_string(),
        element: x.to_string(),
        stabilizer,
        summands,
        isomorphism_verified,
        splitting_matrix,
        unit_vs_iso: UnitSampling { samples, agree, units },
        passed,
    })
}

fn s3_report(x: CoveringElement, samples: usize, rng: &mut StdRng) -> OrbitDemo {
    let g = Group::symmetric3();
    let cat = LinCat::new(band_cocycle(), DEFAULT_TRUNCATION, 1);
    let oc = OrbitCat::new(cat, trivial_action(g.clone()));
    let rho = s3_standard_irrep(&g, 1);
    let stabilizer = oc.effective_stabilizer(&x);
    let obj = oc.build_s_rho(&x, &rho);
    let (summands, obj) = match obj {
        Ok(o) => (vec![oc.verify_equivariance(&o)], Some(o)),
        Err(e) => (vec![Report::fail(0, e.to_string())], None),
    };
    let mut agree = 0;
    let mut units = 0;
    if let Some(obj) = &obj {
        let d = obj.underlying.len();
        for _ in 0..samples {
            let entries = (0..d).map(|_| (0..d).map(|_| random_ring_element(rng, 1)).collect()).collect();
            let raw = CatMorphism { dom: obj.underlying.clone(), cod: obj.underlying.clone(), entries };
            let f = oc.reynolds(&raw, obj, obj);
            let u = oc.is_unit_endo(&f).expect("endomorphism");
            units += usize::from(u);
            agree += usize::from(u == oc.cat.is_isomorphism(&f));
        }
    }
    let passed = summands.iter().all(|r| r.passed) && agree == samples;
    OrbitDemo {
        group: "s3".into(),
        element: x.to_string(),
        stabilizer,
        summands,
        isomorphism_verified: obj.is_some(),
        splitting_matrix: None,
        unit_vs_iso: UnitSampling { samples, agree, units },
        passed,
    }
}

pub fn orbit_demo(group: &str) -> ApiResult {
    Ok(finish(&orbit_report(group, 100, 7)?))
}

#[derive(Deserialize)]
struct MutateRequest {
    cluster: Value,
    index: usize,
}

#[derive(Deserialize)]
struct ClusterRequest {
    cluster: Value,
}

#[derive(Deserialize)]
struct CompatRequest {
    a: ArcObject,
    b: ArcObject,
    #[serde(default = "two")]
    p: u32,
}

fn two() -> u32 {
    2
}

fn parse_cluster(v: Value) -> Result<Cluster, ApiError> {
    // A cluster that parses but names impossible objects is a domain error, not a syntax error.
    match serde_json::from_value::<Cluster>(v.clone()) {
        Ok(c) => Ok(c),
        Err(e) if serde_json::from_value::<ClusterShape>(v).is_ok() => Err(ApiError::Domain(e.to_string())),
        Err(e) => Err(ApiError::Malformed(e.to_string())),
    }
}

#[derive(Deserialize)]
#[allow(dead_code)]
struct ClusterShape {
    p: u32,
    n: u32,
    arcs: Vec<ArcObject>,
}

/// Reads a cluster from JSON text.
pub fn read_cluster(text: &str) -> Result<Cluster, ApiError> {
    parse_cluster(parse(text)?)
}

/// `POST /api/mutate` body.
pub fn mutate_request(body: &str) -> ApiResult {
    let r: MutateRequest = parse(body)?;
    mutate(&parse_cluster(r.cluster)?, r.index)
}

/// `POST /api/quiver` body.
pub fn quiver_request(body: &str) -> ApiResult {
    let r: ClusterRequest = parse(body)?;
    quiver_json(&parse_cluster(r.cluster)?)
}

/// `POST /api/compat` body.
pub fn compat_request(body: &str) -> ApiResult {
    let r: CompatRequest = parse(body)?;
    compat(&r.a, &r.b, r.p)
}

pub fn parse_rational(text: &str) -> Result<Q, ApiError> {
    rational::parse(text).map_err(|e| ApiError::Malformed(e.to_string()))
}

pub fn read_object(text: &str) -> Result<ArcObject, ApiError> {
    parse(text)
}

pub fn read_matrix(text: &str) -> Result<ExchangeMatrix, ApiError> {
    let b: ExchangeMatrix = parse(text)?;
    if !b.is_square() {
        return Err(ApiError::Malformed("exchange matrix must be square".into()));
    }
    Ok(b)
}

pub fn read_pattern(text: &str) -> Result<TrianglePattern, ApiError> {
    parse_value(parse::<Value>(text)?)
}
