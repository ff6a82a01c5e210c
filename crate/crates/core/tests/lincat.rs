use cyclic_cluster::geom::Angle;
use cyclic_cluster::lincat::{CatMorphism, LinCat};
use cyclic_cluster::poset::{band_cocycle, circle_cocycle, CoveringElement, Sign};
use cyclic_cluster::rational::{q, qi};
use cyclic_cluster::ring::{CycScalar, RingElement, DEFAULT_TRUNCATION};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::fmt::Debug;

fn circle() -> LinCat<Angle> {
    LinCat::new(circle_cocycle(), DEFAULT_TRUNCATION, 1)
}

fn band() -> LinCat<CoveringElement> {
    LinCat::new(band_cocycle(), DEFAULT_TRUNCATION, 1)
}

fn pt(v: cyclic_cluster::rational::Q) -> Angle {
    Angle::new(v, qi(2)).unwrap()
}

fn circle_points() -> Vec<Angle> {
    (0..8).map(|k| pt(q(k, 4))).collect()
}

fn band_points() -> Vec<CoveringElement> {
    let b = q(3, 4);
    let mut out = Vec::new();
    for x in -4..4 {
        for off in [-3, -1, 0, 2, 3] {
            let e = CoveringElement::new(q(x, 4), q(x + off, 4), Sign::Plus, b).unwrap().canonical();
            if !out.contains(&e) {
                out.push(e);
            }
        }
    }
    out
}

fn random_entry(rng: &mut StdRng) -> RingElement {
    let c = (0..DEFAULT_TRUNCATION)
        .map(|_| if rng.gen_bool(0.4) { CycScalar::from_int(1, rng.gen_range(-3..=3)) } else { CycScalar::zero(1) })
        .collect();
    RingElement::from_coefficients(1, c)
}

fn random_object<E: Clone>(rng: &mut StdRng, pts: &[E]) -> Vec<E> {
    (0..rng.gen_range(1..=3)).map(|_| pts[rng.gen_range(0..pts.len())].clone()).collect()
}

fn random_morphism<E: Clone + PartialEq + Debug>(cat: &LinCat<E>, rng: &mut StdRng, dom: &[E], cod: &[E]) -> CatMorphism<E> {
    let entries = cod.iter().map(|_| dom.iter().map(|_| random_entry(rng)).collect()).collect();
    cat.from_entries(dom, cod, entries).unwrap()
}

fn associativity<E: Clone + PartialEq + Debug>(cat: &LinCat<E>, pts: &[E], seed: u64, triples: usize) {
    let mut rng = StdRng::seed_from_u64(seed);
    for t in 0..triples {
        let objs: Vec<Vec<E>> = (0..4).map(|_| random_object(&mut rng, pts)).collect();
        let h = random_morphism(cat, &mut rng, &objs[0], &objs[1]);
        let g = random_morphism(cat, &mut rng, &objs[1], &objs[2]);
        let f = random_morphism(cat, &mut rng, &objs[2], &objs[3]);
        let left = cat.compose(&cat.compose(&f, &g).unwrap(), &h).unwrap();
        let right = cat.compose(&f, &cat.compose(&g, &h).unwrap()).unwrap();
        assert_eq!(left, right, "triple {t}");
    }
}

#[test]
fn basic_composition_on_circle() {
    let cat = circle();
    let [p0, p1, p32, p12] = [qi(0), qi(1), q(3, 2), q(1, 2)].map(pt);
    let f = cat.compose(&cat.basic(&p1, &p32).unwrap(), &cat.basic(&p0, &p1).unwrap()).unwrap();
    assert_eq!(f, cat.basic(&p0, &p32).unwrap());
    let g = cat.compose(&cat.basic(&p32, &p12).unwrap(), &cat.basic(&p0, &p32).unwrap()).unwrap();
    assert_eq!(g, cat.scale(&cat.basic(&p0, &p12).unwrap(), &cat.u_pow(1)));
    assert_eq!(cat.basic(&p0, &p0).unwrap(), cat.identity(&[p0]));
    let mut rng = StdRng::seed_from_u64(1);
    let m = random_morphism(&cat, &mut rng, &[p0, p12], &[p1]);
    assert_eq!(cat.compose(&m, &cat.identity(&[p0, p12])).unwrap(), m);
    assert_eq!(cat.compose(&cat.identity(&[p1]), &m).unwrap(), m);
    assert!(cat.compose(&m, &cat.identity(&[p1])).is_err());
}

#[test]
fn composition_is_twisted() {
    let cat = circle();
    let [a, b] = [qi(0), qi(1)].map(pt);
    let f = cat.from_entries(&[a, b], &[a], vec![vec![cat.int(1), cat.int(1)]]).unwrap();
    let g = cat.from_entries(&[a], &[a, b], vec![vec![cat.int(1)], vec![cat.int(1)]]).unwrap();
    let fg = cat.compose(&f, &g).unwrap();
    assert_eq!(fg.entries[0][0], &cat.int(1) + &cat.u_pow(1));
}

#[test]
fn scalars_commute_with_composition() {
    let cat = band();
    let pts = band_points();
    let mut rng = StdRng::seed_from_u64(2);
    for _ in 0..50 {
        let objs: Vec<_> = (0..3).map(|_| random_object(&mut rng, &pts)).collect();
        let g = random_morphism(&cat, &mut rng, &objs[0], &objs[1]);
        let g2 = random_morphism(&cat, &mut rng, &objs[0], &objs[1]);
        let f = random_morphism(&cat, &mut rng, &objs[1], &objs[2]);
        let r = random_entry(&mut rng);
        let lhs = cat.compose(&f, &cat.add(&cat.scale(&g, &r), &g2).unwrap()).unwrap();
        let rhs = cat.add(&cat.scale(&cat.compose(&f, &g).unwrap(), &r), &cat.compose(&f, &g2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = cat.compose(&cat.scale(&f, &r), &g).unwrap();
        assert_eq!(lhs, cat.scale(&cat.compose(&f, &g).unwrap(), &r));
    }
}

#[test]
fn associative_on_circle() {
    associativity(&circle(), &circle_points(), 3, 200);
}

#[test]
fn associative_on_band() {
    associativity(&band(), &band_points(), 4, 200);
}

#[test]
fn isomorphism_examples() {
    let cat = band();
    let b = q(1, 2);
    let x = CoveringElement::new(qi(0), q(1, 4), Sign::Plus, b).unwrap().canonical();
    let px = x.rotate(qi(1));
    assert!(cat.is_isomorphism(&cat.identity(&[x, px])));
    assert!(!cat.is_isomorphism(&cat.scale(&cat.identity(&[x]), &cat.u_pow(1))));
    let one = cat.int(1);
    let zero = cat.int(0);
    let swap = cat.from_entries(&[x, px], &[px, x], vec![vec![zero.clone(), one.clone()], vec![one, zero]]).unwrap();
    assert!(cat.is_isomorphism(&swap));
    let not_square = cat.zero(&[x], &[x, px]);
    assert!(!cat.is_isomorphism(&not_square));
}

#[test]
fn inverses_are_two_sided() {
    let cat = band();
    let pts = band_points();
    let mut rng = StdRng::seed_from_u64(9);
    let mut found = 0;
    for _ in 0..200 {
        let obj = random_object(&mut rng, &pts);
        let mut cod = obj.clone();
        let k = rng.gen_range(0..cod.len());
        cod.rotate_left(k);
        let f = random_morphism(&cat, &mut rng, &obj, &cod);
        if let Some(g) = cat.inverse(&f) {
            found += 1;
            assert_eq!(cat.compose(&g, &f).unwrap(), cat.identity(&obj));
            assert_eq!(cat.compose(&f, &g).unwrap(), cat.identity(&cod));
            assert!(cat.is_isomorphism(&g));
            assert_eq!(cat.inverse(&g).unwrap(), f);
        }
    }
    assert!(found > 20, "only {found} invertible samples");
}
