use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::mutation::mutate;
use super::{Cluster, ClusterError, MarkedModel};
use crate::arcs::ArcObject;

/// Largest candidate set the backtracking enumeration accepts.
pub const MAX_CANDIDATES: usize = 64;

/// Every cluster of the model, by backtracking over pairwise-compatible candidate sets.
///
/// Each cluster's objects are sorted; the list is sorted.
pub fn enumerate_clusters(m: &MarkedModel) -> Result<Vec<Cluster>, ClusterError> {
    let cands = m.candidates();
    let n = cands.len();
    if n > MAX_CANDIDATES {
        return Err(ClusterError::TooLarge(n));
    }
    let d = m.disk();
    let ok: Vec<u64> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && d.compatible(&cands[i], &cands[j])).fold(0u64, |acc, j| acc | (1 << j)))
        .collect();
    let mut out = Vec::new();
    grow(&cands, &ok, 0, 0, &mut out);
    let mut clusters: Vec<Cluster> = out
        .into_iter()
        .map(|mask| {
            let mut arcs: Vec<ArcObject> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| cands[i]).collect();
            arcs.sort();
            Cluster { model: *m, arcs }
        })
        .collect();
    clusters.sort_by(|a, b| a.arcs.cmp(&b.arcs));
    Ok(clusters)
}

fn grow(cands: &[ArcObject], ok: &[u64], i: usize, cur: u64, out: &mut Vec<u64>) {
    let n = cands.len();
    if i == n {
        let extendable = (0..n).any(|j| cur >> j & 1 == 0 && ok[j] & cur == cur);
        if !extendable {
            out.push(cur);
        }
        return;
    }
    if ok[i] & cur == cur {
        grow(cands, ok, i + 1, cur | (1 << i), out);
    }
    grow(cands, ok, i + 1, cur, out);
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MutationGraph {
    pub clusters: Vec<Cluster>,
    pub edges: Vec<(usize, usize)>,
    pub degree: Option<usize>,
    pub connected: bool,
}

/// Exchange graph on the enumerated clusters.
pub fn mutation_graph(m: &MarkedModel) -> Result<MutationGraph, ClusterError> {
    let clusters = enumerate_clusters(m)?;
    let index: BTreeMap<BTreeSet<ArcObject>, usize> =
        clusters.iter().enumerate().map(|(i, c)| (c.key(), i)).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); clusters.len()];
    for (i, c) in clusters.iter().enumerate() {
        for k in 0..c.arcs.len() {
            let next = mutate(c, k)?.cluster;
            let j = *index
                .get(&next.key())
                .ok_or_else(|| ClusterError::Invalid(format!("mutation left the cluster list from #{i}")))?;
            adj[i].insert(j);
        }
    }
    let degrees: BTreeSet<usize> = adj.iter().map(BTreeSet::len).collect();
    let degree = match degrees.len() {
        1 => degrees.first().copied(),
        _ => None,
    };
    let mut seen = vec![false; clusters.len()];
    let mut queue = VecDeque::new();
    if !clusters.is_empty() {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    let edges = adj.iter().enumerate().flat_map(|(i, s)| s.iter().filter(move |&&j| i < j).map(move |&j| (i, j))).collect();
    Ok(MutationGraph { connected: seen.iter().all(|s| *s), clusters, edges, degree })
}
