mod common;

use std::collections::BTreeSet;

use cyclic_cluster::arcs::{ArcObject, Disk};
use cyclic_cluster::cluster::{
    approximation_triangles, cone_of_approximation, enumerate_clusters, exchange_matrix, fz_mutate, left_approximation,
    mutate, mutate_object, mutation_graph, mutation_oracle, quiver, right_approximation, sync_check, verify_triangle,
    Cluster, ClusterError, ExchangeMatrix, MarkedModel, MutationCase, Orientation, Scalar, Sextuple, TriangleKind,
    TrianglePattern,
};
use cyclic_cluster::poset::Sign;
use cyclic_cluster::rational::{q, qi, Q};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn d4() -> MarkedModel {
    MarkedModel::new(2, 4).unwrap()
}

fn se(x: Q, y: Q) -> ArcObject {
    Disk::new(2).unwrap().regular(x, y).unwrap()
}

fn zp(x: Q) -> ArcObject {
    ArcObject::Singular { x, sign: Sign::Plus }
}

fn zm(x: Q) -> ArcObject {
    ArcObject::Singular { x, sign: Sign::Minus }
}

fn seed_d4() -> Cluster {
    Cluster::new(d4(), vec![se(qi(0), q(1, 2)), se(qi(0), q(3, 4)), zp(qi(0)), zp(q(3, 4))]).unwrap()
}

fn m(rows: &[[i64; 5]]) -> ExchangeMatrix {
    ExchangeMatrix(rows.iter().map(|r| r.to_vec()).collect())
}

fn b1() -> ExchangeMatrix {
    m(&[[0, -1, 1, 0, 0], [1, 0, -1, 0, 0], [-1, 1, 0, 2, -1], [0, 0, -1, 0, 1], [0, 0, 1, -2, 0]])
}

fn b2() -> ExchangeMatrix {
    m(&[[0, -1, 1, 0, 0], [1, 0, -1, 0, 0], [-1, 1, 0, -2, 1], [0, 0, 1, 0, -1], [0, 0, -1, 2, 0]])
}

fn b3() -> ExchangeMatrix {
    m(&[[0, 0, -1, 0, 1], [0, 0, 1, -2, 0], [1, -1, 0, 2, -1], [0, 1, -1, 0, 0], [-1, 0, 1, 0, 0]])
}

/// Matrix mutation written out entry by entry from the half-sum form
/// `b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2`.
fn fz_reference(b: &ExchangeMatrix, k: usize) -> ExchangeMatrix {
    let n = b.0.len();
    let mut out = b.0.clone();
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == k || j == k {
                -b.0[i][j]
            } else {
                b.0[i][j] + (b.0[i][k].abs() * b.0[k][j] + b.0[i][k] * b.0[k][j].abs()) / 2
            };
        }
    }
    ExchangeMatrix(out)
}

fn count_singular(c: &Cluster) -> usize {
    c.arcs.iter().filter(|a| matches!(a, ArcObject::Singular { .. })).count()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn validate_examples() {
    let r = seed_d4().validate();
    assert!(r.valid, "{r:?}");
    assert!(r.on_model && r.pairwise_compatible && r.maximal && r.structure);

    let mixed = Cluster::new(d4(), vec![se(qi(0), q(1, 2)), se(qi(0), q(3, 4)), zp(qi(0)), zm(q(3, 4))]).unwrap();
    let r = mixed.validate();
    assert!(!r.valid);
    assert!(!r.pairwise_compatible);

    let short = Cluster::new(d4(), vec![se(qi(0), q(3, 4)), zp(qi(0)), zp(q(3, 4))]).unwrap();
    let r = short.validate();
    assert!(!r.valid);
    assert!(r.pairwise_compatible);
    assert!(!r.maximal);

    assert_eq!(d4().seed().sorted(), seed_d4().sorted());
    assert!(MarkedModel::new(2, 2).is_err());
    assert!(MarkedModel::new(4, 5).is_err());
}

#[test]
fn frozen_and_candidates() {
    let model = d4();
    assert_eq!(model.frozen(), (0..4).map(|k| se(q(k, 4), q(k + 1, 4))).collect::<Vec<_>>());
    for a in model.candidates() {
        assert!(model.is_mutable(&a), "{a}");
        assert!(!model.is_frozen(&a));
    }
    for f in model.frozen() {
        assert!(!model.is_mutable(&f));
    }
    assert!(!model.is_mutable(&zp(q(1, 8))));
}

#[test]
fn mutate_examples() {
    let c = seed_d4();
    let out = mutate(&c, 1).unwrap();
    assert_eq!(out.old, se(qi(0), q(3, 4)));
    assert_eq!(out.new, zp(q(1, 2)));
    assert_eq!(out.case_label(), "1b→2c");
    assert_eq!(out.cluster.arcs[1], zp(q(1, 2)));

    let out = mutate_object(&c, &zp(q(3, 4))).unwrap();
    assert_eq!(out.new, zm(qi(0)));
    assert_eq!(out.case, MutationCase::C2b);
    assert!(out.case.is_exceptional());

    assert!(matches!(mutate(&c, 4), Err(ClusterError::Index(4))));
    assert!(matches!(mutate_object(&c, &se(qi(0), q(1, 4))), Err(ClusterError::Frozen(_))));
    assert!(matches!(mutate_object(&c, &zm(q(1, 4))), Err(ClusterError::Absent(_))));
}

#[test]
fn case_partners() {
    use MutationCase::*;
    for (a, b) in [(C1a, C1a), (C1c, C1c), (C1b, C2c), (C2c, C1b), (C2a, C2b), (C2b, C2a)] {
        assert_eq!(a.partner(), b);
    }
    assert_eq!(Zp.partner(), Zp);
}

#[test]
fn enumeration_matches_subset_scan() {
    for n in [3, 4] {
        let model = MarkedModel::new(2, n).unwrap();
        let fast: Vec<Vec<ArcObject>> = enumerate_clusters(&model)
            .unwrap()
            .into_iter()
            .map(|c| {
                let mut a = c.arcs;
                a.sort();
                a
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(fast, common::brute_force_clusters(&model), "n = {n}");
    }
}

#[test]
fn cluster_counts() {
    // Catalan-type counts for D_n and B_{n-1}, computed here from binomials.
    let d = |n: u64| (3 * n - 2) * binomial(2 * n - 2, n - 1) / n;
    for n in [4u32, 5, 6] {
        let model = MarkedModel::new(2, n).unwrap();
        let cl = enumerate_clusters(&model).unwrap();
        assert_eq!(cl.len() as u64, d(u64::from(n)), "D{n}");
        assert!(cl.iter().all(|c| c.arcs.len() == n as usize));
    }
    for (p, n) in [(3u32, 4u32), (3, 5), (3, 6), (5, 6)] {
        let cl = enumerate_clusters(&MarkedModel::new(p, n).unwrap()).unwrap();
        let r = u64::from(n - 1);
        assert_eq!(cl.len() as u64, binomial(2 * r, r), "p = {p}, n = {n}");
    }
    assert_eq!((d(4), d(5), d(6)), (50, 182, 672));
    assert_eq!(binomial(10, 5), 252);
}

#[test]
fn d4_structure() {
    for c in enumerate_clusters(&d4()).unwrap() {
        let r = c.validate();
        assert!(r.valid, "{r:?}");
        let sing: Vec<(Q, Sign)> = c
            .arcs
            .iter()
            .filter_map(|a| match *a {
                ArcObject::Singular { x, sign } => Some((x, sign)),
                _ => None,
            })
            .collect();
        let points: BTreeSet<Q> = sing.iter().map(|s| s.0).collect();
        let pair = points.len() < sing.len();
        assert!(sing.len() >= 2 || pair, "{:?}", c.arcs);
        if !pair {
            assert!(sing.iter().all(|s| s.1 == sing[0].1), "{:?}", c.arcs);
        }
    }
}

#[test]
fn graph_is_regular_and_connected() {
    for (p, n, deg) in [(2, 4, 4), (2, 5, 5), (3, 5, 4)] {
        let g = mutation_graph(&MarkedModel::new(p, n).unwrap()).unwrap();
        assert_eq!(g.degree, Some(deg), "p = {p}, n = {n}");
        assert!(g.connected);
        assert_eq!(g.edges.len(), g.clusters.len() * deg / 2);
    }
}

#[test]
fn mutation_is_unique_and_involutive() {
    for n in [3, 4] {
        for c in enumerate_clusters(&MarkedModel::new(2, n).unwrap()).unwrap() {
            for (i, t) in c.arcs.iter().enumerate() {
                let out = mutate(&c, i).unwrap();
                assert_eq!(mutation_oracle(&c, t), vec![out.new]);
                assert_ne!(out.new, *t);
                assert!(out.cluster.validate().valid);
                let back = mutate(&out.cluster, i).unwrap();
                assert_eq!(back.cluster, c);
                assert_eq!(back.case, out.inverse_case);
                assert_eq!(out.inverse_case, out.case.partner());
            }
        }
    }
}

#[test]
fn p3_loop_mutation() {
    let model = MarkedModel::new(3, 6).unwrap();
    for c in enumerate_clusters(&model).unwrap() {
        assert_eq!(c.arcs.iter().filter(|a| matches!(a, ArcObject::Loop { .. })).count(), 1);
        for i in 0..c.arcs.len() {
            let out = mutate(&c, i).unwrap();
            assert_eq!(mutation_oracle(&c, &c.arcs[i]), vec![out.new]);
            assert_eq!(mutate(&out.cluster, i).unwrap().cluster, c);
        }
    }
}

#[test]
fn left_approximation_examples() {
    let c = seed_d4();
    let a = left_approximation(&c, &se(qi(0), q(1, 2))).unwrap();
    assert_eq!(a.objects(), vec![se(q(1, 4), q(1, 2)), se(qi(0), q(3, 4))]);
    assert!(a.summands.iter().all(|s| s.multiplicity == 1));

    let a = left_approximation(&c, &se(qi(0), q(3, 4))).unwrap();
    assert_eq!(a.objects(), vec![se(q(1, 2), q(3, 4)), zp(qi(0))]);

    let a = left_approximation(&c, &zp(q(3, 4))).unwrap();
    assert!(a.is_indecomposable());
    assert_eq!(a.objects(), vec![se(qi(0), q(3, 4))]);

    let (left, right) = approximation_triangles(&c, &zp(q(3, 4))).unwrap();
    assert_eq!(left.end, zm(qi(0)));
    assert_eq!(right.start, zm(qi(0)));
    assert!(right.middle.is_indecomposable());
    // the other singular object B of the cluster, shifted once
    assert_eq!(c.disk().shift(&zp(qi(0)), qi(1)).unwrap(), left.end);
}

#[test]
fn loop_approximation_is_doubled() {
    let model = MarkedModel::new(3, 6).unwrap();
    let seed = model.seed();
    let t4 = seed.arcs[3];
    let t5 = seed.arcs[4];
    assert!(matches!(t4, ArcObject::Loop { .. }));
    let a = left_approximation(&seed, &t4).unwrap();
    assert_eq!(a.summands.len(), 1);
    assert_eq!(a.summands[0].object, t5);
    assert_eq!(a.summands[0].multiplicity, 2);
    assert_eq!(model.disk().hom_dim(&t4, &t5), 2);

    for c in enumerate_clusters(&model).unwrap() {
        let l = *c.arcs.iter().find(|a| matches!(a, ArcObject::Loop { .. })).unwrap();
        for a in [left_approximation(&c, &l).unwrap(), right_approximation(&c, &l).unwrap()] {
            assert_eq!(a.summands.len(), 1, "{:?}", c.arcs);
            assert_eq!(a.summands[0].multiplicity, 2);
            assert!(model.disk().is_rigid(&a.summands[0].object));
        }
    }
}

#[test]
fn cones_are_mutations() {
    for n in [3, 4, 5] {
        for c in enumerate_clusters(&MarkedModel::new(2, n).unwrap()).unwrap() {
            for t in &c.arcs {
                let star = mutate_object(&c, t).unwrap().new;
                assert!(c.disk().iso_equal(&cone_of_approximation(&c, t).unwrap(), &star).unwrap());
                let (left, right) = approximation_triangles(&c, t).unwrap();
                assert_eq!(left.start, *t);
                assert_eq!(right.end, *t);
                assert!(c.disk().iso_equal(&left.end, &star).unwrap());
                assert!(c.disk().iso_equal(&right.start, &star).unwrap());
            }
        }
    }
}

#[test]
fn exceptional_detector() {
    for c in enumerate_clusters(&d4()).unwrap() {
        let two = count_singular(&c) == 2;
        for t in &c.arcs {
            let expect = two && matches!(t, ArcObject::Singular { .. });
            let l = left_approximation(&c, t).unwrap();
            let r = right_approximation(&c, t).unwrap();
            assert_eq!(l.is_indecomposable(), expect, "{t} in {:?}", c.arcs);
            assert_eq!(r.is_indecomposable(), expect, "{t} in {:?}", c.arcs);
            assert_eq!(mutate_object(&c, t).unwrap().case.is_exceptional(), expect);
        }
    }
}

#[test]
fn quiver_of_loop_seed() {
    let seed = MarkedModel::new(3, 6).unwrap().seed();
    assert!(seed.validate().valid);
    let qv = quiver(&seed).unwrap();
    assert_eq!(qv.exchange_matrix().unwrap(), b1());
    assert_eq!(exchange_matrix(&seed).unwrap(), b1());
    let a = qv.arrows.iter().find(|a| a.from == 3 && a.to == 4).unwrap();
    assert_eq!((a.a, a.b), (2, 1));
    let a = qv.arrows.iter().find(|a| a.from == 2 && a.to == 3).unwrap();
    assert_eq!((a.a, a.b), (1, 2));
    assert_eq!(qv.weights, vec![1, 1, 1, 2, 1]);
}

#[test]
fn quiver_of_d4_seed() {
    let b = exchange_matrix(&seed_d4()).unwrap();
    assert_eq!(b.0, vec![vec![0, 1, 0, 0], vec![-1, 0, 1, -1], vec![0, -1, 0, 0], vec![0, 1, 0, 0]]);
    assert!(b.is_skew_symmetrizable_by(&[1, 1, 1, 1]));
}

#[test]
fn quivers_are_skew_symmetrizable() {
    for model in [d4(), MarkedModel::new(2, 5).unwrap(), MarkedModel::new(3, 6).unwrap()] {
        for c in enumerate_clusters(&model).unwrap() {
            let qv = quiver(&c).unwrap();
            let b = qv.exchange_matrix().unwrap();
            assert!(b.is_square() && b.size() == c.arcs.len());
            assert!(b.is_skew_symmetrizable_by(&qv.weights), "{:?}", b.0);
            if model.p == 2 {
                assert!(b.0.iter().flatten().all(|v| v.abs() <= 1));
                assert!(qv.arrows.iter().all(|a| (a.a, a.b) == (1, 1)));
            }
        }
    }
}

#[test]
fn fz_examples() {
    assert_eq!(fz_mutate(&b1(), 3).unwrap(), b2());
    assert_eq!(fz_mutate(&b2(), 2).unwrap(), b3());
    for k in 0..5 {
        assert_eq!(fz_mutate(&fz_mutate(&b1(), k).unwrap(), k).unwrap(), b1());
        assert_eq!(fz_mutate(&b1(), k).unwrap(), fz_reference(&b1(), k));
    }
    assert!(matches!(fz_mutate(&b1(), 5), Err(ClusterError::Index(5))));
    assert!(fz_mutate(&ExchangeMatrix(vec![vec![0, 1], vec![-1]]), 0).is_err());
}

#[test]
fn fz_matches_half_sum_form() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..200 {
        let n = rng.gen_range(2..7);
        let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..4)).collect();
        let mut b = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                // d_i b_ij = −d_j b_ji
                let t = rng.gen_range(-2..=2);
                b[i][j] = t * d[j];
                b[j][i] = -t * d[i];
            }
        }
        let b = ExchangeMatrix(b);
        let k = rng.gen_range(0..n);
        let got = fz_mutate(&b, k).unwrap();
        assert_eq!(got, fz_reference(&b, k));
        let du: Vec<u32> = d.iter().map(|&v| v as u32).collect();
        assert!(got.is_skew_symmetrizable_by(&du));
    }
}

#[test]
fn sync_examples() {
    let seed = MarkedModel::new(3, 6).unwrap().seed();
    let r = sync_check(&seed, &[3, 2]).unwrap();
    assert!(r.passed, "{r:?}");
    assert_eq!(r.matrices.first(), Some(&b1()));
    assert_eq!(r.matrices.last(), Some(&b3()));

    let c = seed_d4();
    for len in 1..=3u32 {
        for w in 0..4usize.pow(len) {
            let word: Vec<usize> = (0..len).map(|i| w / 4usize.pow(i) % 4).collect();
            let r = sync_check(&c, &word).unwrap();
            assert!(r.passed, "{word:?}: {r:?}");
            assert_eq!(r.steps, word.len());
        }
    }

    let mut rng = StdRng::seed_from_u64(9);
    for model in [d4(), MarkedModel::new(2, 6).unwrap(), MarkedModel::new(5, 6).unwrap()] {
        let seed = model.seed();
        for _ in 0..20 {
            let word: Vec<usize> = (0..10).map(|_| rng.gen_range(0..seed.arcs.len())).collect();
            let r = sync_check(&seed, &word).unwrap();
            assert!(r.passed, "{word:?}: {r:?}");
        }
    }
}

fn kind_a(s: [i64; 3], orientation: Orientation) -> TrianglePattern {
    TrianglePattern {
        kind: TriangleKind::A,
        objects: vec![se(qi(0), q(1, 4)), se(q(1, 4), q(1, 2)), se(qi(0), q(1, 2))],
        scalars: s.iter().map(|&v| Scalar::int(v)).collect(),
        orientation,
        sextuple: None,
    }
}

fn kind_b(s: [Q; 4]) -> TrianglePattern {
    TrianglePattern {
        kind: TriangleKind::B,
        objects: vec![se(qi(0), q(1, 4)), zp(qi(0)), zm(qi(0)), se(q(1, 4), qi(1))],
        scalars: s.iter().map(|&v| Scalar::q(v)).collect(),
        orientation: Orientation::Ccw,
        sextuple: None,
    }
}

fn kind_c(sign: Sign) -> TrianglePattern {
    let z = |x| ArcObject::Singular { x, sign };
    TrianglePattern {
        kind: TriangleKind::C,
        objects: vec![z(qi(0)), z(q(1, 4)), se(qi(0), q(1, 4))],
        scalars: vec![Scalar::int(1), Scalar::int(1), Scalar::int(-1)],
        orientation: Orientation::Ccw,
        sextuple: Some(Sextuple::standard(sign)),
    }
}

#[test]
fn triangle_kind_a() {
    assert!(verify_triangle(&kind_a([1, 1, 1], Orientation::Ccw)).unwrap());
    assert!(!verify_triangle(&kind_a([1, 1, 1], Orientation::Cw)).unwrap());
    assert!(verify_triangle(&kind_a([1, -1, 1], Orientation::Cw)).unwrap());
    assert!(verify_triangle(&kind_a([-1, -1, 1], Orientation::Ccw)).unwrap());
    assert!(!verify_triangle(&kind_a([2, 1, 1], Orientation::Ccw)).unwrap());
}

#[test]
fn triangle_kind_b() {
    assert!(verify_triangle(&kind_b([q(1, 2), qi(1), qi(1), qi(1)])).unwrap());
    assert!(verify_triangle(&kind_b([qi(1), q(1, 4), q(1, 4), qi(2)])).unwrap());
    assert!(!verify_triangle(&kind_b([qi(1), qi(1), qi(1), qi(1)])).unwrap());
    assert!(!verify_triangle(&kind_b([q(1, 2), qi(1), qi(-1), qi(1)])).unwrap());
}

#[test]
fn triangle_kind_c() {
    for sign in [Sign::Plus, Sign::Minus] {
        let tp = kind_c(sign);
        assert!(verify_triangle(&tp).unwrap());
        let mut sext = Sextuple::standard(sign);
        let n = sext.slots_mut().len();
        for i in 0..n {
            let mut broken = Sextuple::standard(sign);
            let slot = &mut broken.slots_mut()[i];
            if slot.0.is_zero() {
                continue;
            }
            **slot = slot.perturbed();
            let mut tp = kind_c(sign);
            tp.sextuple = Some(broken);
            assert!(!verify_triangle(&tp).unwrap(), "slot {i}");
        }
        for i in 0..3 {
            let mut tp = kind_c(sign);
            tp.scalars[i] = tp.scalars[i].perturbed();
            assert!(!verify_triangle(&tp).unwrap(), "scalar {i}");
        }
        *sext.slots_mut()[0] = Scalar::int(1);
        assert!(sext.verify().unwrap());
    }
}

#[test]
fn triangle_perturbations_fail_for_a_and_b() {
    for i in 0..3 {
        let mut tp = kind_a([1, 1, 1], Orientation::Ccw);
        tp.scalars[i] = tp.scalars[i].perturbed();
        assert!(!verify_triangle(&tp).unwrap());
    }
    for i in 0..4 {
        let mut tp = kind_b([q(1, 2), qi(1), qi(1), qi(1)]);
        tp.scalars[i] = tp.scalars[i].perturbed();
        assert!(!verify_triangle(&tp).unwrap());
    }
}

#[test]
fn malformed_triangles() {
    let mut tp = kind_a([1, 1, 1], Orientation::Ccw);
    tp.objects[2] = se(qi(0), q(3, 4));
    assert!(matches!(verify_triangle(&tp), Err(ClusterError::Pattern(_))));
    let mut tp = kind_a([1, 1, 1], Orientation::Ccw);
    tp.scalars.pop();
    assert!(verify_triangle(&tp).is_err());
    let mut tp = kind_b([q(1, 2), qi(1), qi(1), qi(1)]);
    tp.objects.swap(1, 2);
    assert!(verify_triangle(&tp).is_err());
    let mut tp = kind_c(Sign::Plus);
    tp.objects[1] = zm(q(1, 4));
    assert!(verify_triangle(&tp).is_err());
}

#[test]
fn cluster_json_round_trip() {
    for c in enumerate_clusters(&d4()).unwrap() {
        let text = serde_json::to_string(&c).unwrap();
        let back: Cluster = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }
    let text = serde_json::to_string(&seed_d4()).unwrap();
    assert!(text.starts_with(r#"{"p":2,"n":4,"arcs":["#), "{text}");
    assert!(serde_json::from_str::<Cluster>(r#"{"p":4,"n":4,"arcs":[]}"#).is_err());

    for tp in [kind_a([1, 1, 1], Orientation::Cw), kind_b([q(1, 2), qi(1), qi(1), qi(1)]), kind_c(Sign::Minus)] {
        let text = serde_json::to_string(&tp).unwrap();
        let back: TrianglePattern = serde_json::from_str(&text).unwrap();
        assert_eq!(back, tp);
    }
}
