//! Objects of the punctured disk: J-intervals, compatibility, Hom and Ext.

use cyclic_cluster::arcs::{Disk, JSet};
use cyclic_cluster::poset::Sign;
use cyclic_cluster::rational::{q, qi};

fn main() {
    let d = Disk::new(2).unwrap();
    let a = d.regular(qi(0), q(1, 2)).unwrap();
    let b = d.regular(q(1, 4), q(3, 4)).unwrap();
    let zp = d.singular(q(1, 4), Sign::Plus).unwrap();
    let zm = d.singular(q(1, 2), Sign::Minus).unwrap();
    for o in [a, b, zp, zm] {
        let j = match d.j_interval(&o).unwrap() {
            JSet::Interval(i) => format!("({}, {})", i.start(), i.end()),
            JSet::Point(p) => format!("{{{p}}}"),
            JSet::Punctured(p) => format!("circle minus {p}"),
        };
        println!("{o}: J = {j}, rigid {}, shift {}", d.is_rigid(&o), d.shift(&o, qi(1)).unwrap());
    }
    for (x, y) in [(a, b), (a, zp), (a, zm), (zp, zm)] {
        println!(
            "{x} vs {y}: compatible {}, dim Hom {}, Ext at b = 15/16 {}",
            d.compatible(&x, &y),
            d.hom_dim(&x, &y),
            d.ext_nonzero(&x, &y, q(15, 16)).unwrap()
        );
    }
    println!("{}", serde_json::to_string(&zp).unwrap());
}
