use cyclic_cluster::geom::{
    contains_point, cyclic_order, cyclic_order_raw, interval_relation, relation_raw, Angle, ArcInterval, GeomError,
    Relation,
};
use cyclic_cluster::rational::{q, qi, Q};
use proptest::prelude::*;

fn a(v: Q, m: Q) -> Angle {
    Angle::new(v, m).unwrap()
}

fn iv(s: Q, e: Q, m: Q) -> ArcInterval {
    ArcInterval::from_values(s, e, m).unwrap()
}

/// Walks counterclockwise from `x` in steps of one grid unit; ordered iff `y` is met no later than `z`.
fn walk_order(x: i64, y: i64, z: i64, m: i64) -> u32 {
    let step_to = |t: i64| (0..m).find(|s| (x + s - t).rem_euclid(m) == 0).unwrap();
    u32::from(step_to(y) > step_to(z))
}

/// Relation read off from the sets of fine grid points strictly inside each arc.
fn set_relation(s1: i64, l1: i64, s2: i64, l2: i64, m: i64) -> Relation {
    let inside = |s: i64, l: i64| -> Vec<bool> {
        (0..2 * m).map(|p| (1..2 * l).contains(&(p - 2 * s).rem_euclid(2 * m))).collect()
    };
    let (a, b) = (inside(s1, l1), inside(s2, l2));
    let a_in_b = a.iter().zip(&b).all(|(x, y)| !x || *y);
    let b_in_a = a.iter().zip(&b).all(|(x, y)| !y || *x);
    let meet = a.iter().zip(&b).any(|(x, y)| *x && *y);
    match (a_in_b, b_in_a) {
        (true, true) => Relation::Equal,
        (true, false) => Relation::NestedAinB,
        (false, true) => Relation::NestedBinA,
        _ if !meet => Relation::Disjoint,
        _ => Relation::Crossing,
    }
}

#[test]
fn cyclic_order_examples() {
    let two = qi(2);
    assert_eq!(cyclic_order(&a(qi(0), two), &a(qi(1), two), &a(q(3, 2), two)).unwrap(), 0);
    assert_eq!(cyclic_order(&a(qi(0), two), &a(q(3, 2), two), &a(q(1, 2), two)).unwrap(), 1);
    for x in [qi(0), q(1, 3), q(7, 4)] {
        for y in [qi(0), q(1, 2), q(5, 3)] {
            assert_eq!(cyclic_order(&a(x, two), &a(x, two), &a(y, two)).unwrap(), 0);
            assert_eq!(cyclic_order(&a(x, two), &a(y, two), &a(y, two)).unwrap(), 0);
        }
    }
}

#[test]
fn moduli_must_match() {
    let r = cyclic_order(&a(qi(0), qi(2)), &a(qi(0), qi(1)), &a(qi(0), qi(2)));
    assert!(matches!(r, Err(GeomError::ModulusMismatch(..))));
    assert!(iv(qi(0), q(1, 2), qi(1)).start().try_eq(&a(qi(0), qi(2))).is_err());
    assert!(ArcInterval::from_values(q(1, 2), q(3, 2), qi(1)).is_err());
}

#[test]
fn interval_examples() {
    let one = qi(1);
    let rel = |s1, e1, s2, e2| interval_relation(&iv(s1, e1, one), &iv(s2, e2, one)).unwrap();
    assert_eq!(rel(qi(0), q(1, 2), q(1, 2), qi(1)), Relation::Disjoint);
    assert_eq!(rel(qi(0), q(3, 4), qi(0), q(1, 2)), Relation::NestedBinA);
    assert_eq!(rel(qi(0), q(1, 2), q(1, 4), q(3, 4)), Relation::Crossing);
    assert_eq!(iv(q(3, 4), q(1, 4), one).length(), q(1, 2));

    let i = iv(qi(0), q(1, 2), one);
    assert!(contains_point(&i, &a(q(1, 4), one)).unwrap());
    assert!(!contains_point(&i, &a(q(1, 2), one)).unwrap());
    assert!(!contains_point(&i, &a(qi(0), one)).unwrap());
    assert!(contains_point(&iv(q(3, 4), q(1, 4), one), &a(qi(0), one)).unwrap());
}

#[test]
fn angles_normalize() {
    assert_eq!(a(q(9, 4), qi(2)).value(), q(1, 4));
    assert_eq!(a(q(-1, 4), qi(1)).value(), q(3, 4));
    assert_eq!(a(q(1, 3), q(2, 3)).rotate(q(2, 3)).value(), q(1, 3));
}

const M: i64 = 24;

proptest! {
    #[test]
    fn cyclic_order_matches_walk(x in 0..M, y in 0..M, z in 0..M, turns in -2i64..3) {
        let m = qi(2);
        let v = |k: i64| q(k, 12) + qi(2 * turns);
        prop_assert_eq!(cyclic_order_raw(v(x), v(y), v(z), m), walk_order(x, y, z, M));
    }

    #[test]
    fn four_term_identity(w in 0..M, x in 0..M, y in 0..M, z in 0..M) {
        let c = |a: i64, b: i64, d: i64| i64::from(cyclic_order_raw(q(a, 12), q(b, 12), q(d, 12), qi(2)));
        prop_assert_eq!(c(x, y, z) - c(w, y, z) + c(w, x, z) - c(w, x, y), 0);
    }

    #[test]
    fn translation_invariant(x in 0..M, y in 0..M, z in 0..M, t in -50i64..50) {
        let m = qi(2);
        let s = q(t, 7);
        let (x, y, z) = (q(x, 12), q(y, 12), q(z, 12));
        prop_assert_eq!(cyclic_order_raw(x, y, z, m), cyclic_order_raw(x + s, y + s, z + s, m));
    }

    #[test]
    fn relation_matches_point_sets(s1 in 0..M, l1 in 1..M, s2 in 0..M, l2 in 1..M) {
        let m = qi(2);
        let got = relation_raw(q(s1, 12), q(l1, 12), q(s2, 12), q(l2, 12), m);
        prop_assert_eq!(got, set_relation(s1, l1, s2, l2, M));
    }

    #[test]
    fn relation_flip_symmetric(s1 in 0..M, l1 in 1..M, s2 in 0..M, l2 in 1..M) {
        let m = qi(2);
        let ab = relation_raw(q(s1, 12), q(l1, 12), q(s2, 12), q(l2, 12), m);
        let ba = relation_raw(q(s2, 12), q(l2, 12), q(s1, 12), q(l1, 12), m);
        prop_assert_eq!(ab.flip(), ba);
    }
}
