use serde::{Deserialize, Serialize};

use super::approx::left_approximation;
use super::mutation::mutate;
use super::{Cluster, ClusterError};
use crate::arcs::ArcObject;

/// Arrow `from → to` with valuation `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub a: u32,
    pub b: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValuedQuiver {
    pub vertices: Vec<ArcObject>,
    pub arrows: Vec<Arrow>,
    /// Endomorphism dimensions, the symmetrizer of the exchange matrix.
    pub weights: Vec<u32>,
}

/// A square integer matrix indexed like the cluster.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExchangeMatrix(pub Vec<Vec<i64>>);

impl ExchangeMatrix {
    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn is_square(&self) -> bool {
        self.0.iter().all(|r| r.len() == self.0.len())
    }

    /// `D·B` is skew-symmetric for `D = diag(d)`.
    pub fn is_skew_symmetrizable_by(&self, d: &[u32]) -> bool {
        let n = self.size();
        d.len() == n
            && (0..n).all(|i| {
                (0..n).all(|j| i64::from(d[i]) * self.0[i][j] == -(i64::from(d[j]) * self.0[j][i]))
            })
    }
}

/// Valued quiver of `C`: one arrow `T → S` for each summand `S ∈ C` of the left
/// approximation of `T`, valued `(dim Hom(T,S)/dim End S, dim Hom(T,S)/dim End T)`.
pub fn quiver(c: &Cluster) -> Result<ValuedQuiver, ClusterError> {
    let d = c.disk();
    let mut arrows = Vec::new();
    for (i, t) in c.arcs.iter().enumerate() {
        for s in left_approximation(c, t)?.objects() {
            if let Some(j) = c.index_of(&s) {
                let h = d.hom_dim(t, &s);
                arrows.push(Arrow { from: i, to: j, a: h / d.end_dim(&s), b: h / d.end_dim(t) });
            }
        }
    }
    Ok(ValuedQuiver { vertices: c.arcs.clone(), arrows, weights: c.arcs.iter().map(|a| d.end_dim(a)).collect() })
}

impl ValuedQuiver {
    pub fn exchange_matrix(&self) -> Result<ExchangeMatrix, ClusterError> {
        let n = self.vertices.len();
        let mut b = vec![vec![0i64; n]; n];
        for r in &self.arrows {
            let (fwd, back) = (i64::from(r.b), -i64::from(r.a));
            let (cur_f, cur_b) = (b[r.from][r.to], b[r.to][r.from]);
            if (cur_f != 0 && cur_f != fwd) || (cur_b != 0 && cur_b != back) {
                return Err(ClusterError::Invalid(format!("inconsistent arrows between {} and {}", r.from, r.to)));
            }
            b[r.from][r.to] = fwd;
            b[r.to][r.from] = back;
        }
        Ok(ExchangeMatrix(b))
    }
}

pub fn exchange_matrix(c: &Cluster) -> Result<ExchangeMatrix, ClusterError> {
    quiver(c)?.exchange_matrix()
}

/// Matrix mutation at `k` (0-based).
pub fn fz_mutate(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix, ClusterError> {
    let n = b.size();
    if !b.is_square() {
        return Err(ClusterError::Invalid("exchange matrix is not square".into()));
    }
    if k >= n {
        return Err(ClusterError::Index(k));
    }
    let m = &b.0;
    let out = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == k || j == k {
                        -m[i][j]
                    } else {
                        m[i][j] + m[i][k].signum() * (m[i][k] * m[k][j]).max(0)
                    }
                })
                .collect()
        })
        .collect();
    Ok(ExchangeMatrix(out))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyncReport {
    pub passed: bool,
    pub steps: usize,
    pub matrices: Vec<ExchangeMatrix>,
    pub failure: Option<String>,
}

/// Mutates along `word`, comparing the quiver's exchange matrix with matrix mutation at each step.
pub fn sync_check(c: &Cluster, word: &[usize]) -> Result<SyncReport, ClusterError> {
    let mut cur = c.clone();
    let mut b = exchange_matrix(&cur)?;
    let mut matrices = vec![b.clone()];
    for (step, &k) in word.iter().enumerate() {
        let next = mutate(&cur, k)?.cluster;
        let expected = fz_mutate(&b, k)?;
        let got = exchange_matrix(&next)?;
        matrices.push(got.clone());
        if got != expected {
            return Ok(SyncReport {
                passed: false,
                steps: step + 1,
                matrices,
                failure: Some(format!("step {} at vertex {k}: quiver gives {:?}, matrix mutation {:?}", step + 1, got.0, expected.0)),
            });
        }
        cur = next;
        b = got;
    }
    Ok(SyncReport { passed: true, steps: word.len(), matrices, failure: None })
}
