#![allow(dead_code)]

use cyclic_cluster::arcs::{ArcObject, Disk};
use cyclic_cluster::cluster::MarkedModel;
use cyclic_cluster::poset::Sign;
use cyclic_cluster::rational::{q, Q};
use proptest::prelude::*;

/// A rational `k/den` with `k` in `lo..hi`.
pub fn grid(den: i64, lo: i64, hi: i64) -> impl Strategy<Value = Q> {
    (lo..hi).prop_map(move |k| q(k, den))
}

pub fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

/// A random object of the punctured-disk model on the grid of step `1/den`.
pub fn disk_object(den: i64) -> impl Strategy<Value = ArcObject> {
    let d = Disk::new(2).unwrap();
    prop_oneof![
        (0..2 * den, 1..2 * den)
            .prop_filter("diameter", move |&(_, l)| l != den)
            .prop_map(move |(s, l)| d.regular(q(s, den), q(s + l, den)).unwrap()),
        (0..den, sign()).prop_map(move |(s, e)| d.singular(q(s, den), e).unwrap()),
    ]
}

/// Maximal compatible subsets of the mutable candidates, by scanning every subset.
pub fn brute_force_clusters(m: &MarkedModel) -> Vec<Vec<ArcObject>> {
    let d = m.disk();
    let cand = m.candidates();
    let frozen = m.frozen();
    let k = cand.len();
    assert!(k <= 24, "subset scan too large");
    let ok: Vec<bool> = cand.iter().map(|a| frozen.iter().all(|f| d.compatible(a, f))).collect();
    let mut compat = vec![0u32; k];
    for i in 0..k {
        for j in 0..k {
            if i != j && d.compatible(&cand[i], &cand[j]) {
                compat[i] |= 1 << j;
            }
        }
    }
    let mut out = Vec::new();
    for set in 0u32..(1 << k) {
        let members = (0..k).filter(|&i| set >> i & 1 == 1);
        if !members.clone().all(|i| ok[i] && (set & !(1 << i)) & !compat[i] == 0) {
            continue;
        }
        let maximal = (0..k).all(|j| set >> j & 1 == 1 || !ok[j] || set & !compat[j] != 0);
        if maximal {
            let mut c: Vec<ArcObject> = members.map(|i| cand[i]).collect();
            c.sort();
            out.push(c);
        }
    }
    out.sort();
    out
}
