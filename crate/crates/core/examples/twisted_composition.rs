//! Composition of basic morphisms picks up powers of the uniformizer from the cocycle.

use cyclic_cluster::geom::Angle;
use cyclic_cluster::lincat::LinCat;
use cyclic_cluster::poset::{band_cocycle, circle_cocycle, CoveringElement};
use cyclic_cluster::rational::{q, qi};
use cyclic_cluster::ring::DEFAULT_TRUNCATION;

fn main() {
    let cat = LinCat::new(circle_cocycle(), DEFAULT_TRUNCATION, 1);
    let p = |v| Angle::new(v, qi(2)).unwrap();
    let (x, y, z) = (p(qi(0)), p(q(3, 2)), p(q(1, 2)));
    let g = cat.basic(&x, &y).unwrap();
    let f = cat.basic(&y, &z).unwrap();
    let fg = cat.compose(&f, &g).unwrap();
    println!("circle: f_YZ f_XY = {} f_XZ (c = {})", fg.entry(0, 0), cat.c(&x, &y, &z));

    let band = LinCat::new(band_cocycle(), DEFAULT_TRUNCATION, 1);
    let d = |v| CoveringElement::diagonal(v, qi(1));
    let (x, y) = (d(qi(0)), d(q(1, 2)));
    let there = band.basic(&x, &y).unwrap();
    let back = band.basic(&y, &x).unwrap();
    let round = band.compose(&back, &there).unwrap();
    println!("band: round trip X -> Y -> X = {}", round.entry(0, 0));

    let m = band.from_entries(&[x, y], &[x, y], vec![vec![band.int(1), band.u_pow(1)], vec![band.int(0), band.int(1)]]);
    let m = m.unwrap();
    println!("unipotent endomorphism invertible: {}", band.is_isomorphism(&m));
}
