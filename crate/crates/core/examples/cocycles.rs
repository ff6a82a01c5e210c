//! Cyclic order on a circle and the reduced cocycle on a band, with their identity checks.

use cyclic_cluster::geom::{cyclic_order, Angle};
use cyclic_cluster::poset::{band_cocycle, circle_cocycle, cocycle_xb, sigma, verify_cocycle, CoveringElement, Sign};
use cyclic_cluster::rational::{q, qi};

fn main() {
    let a = |v| Angle::new(v, qi(2)).unwrap();
    for (x, y, z) in [(qi(0), q(1, 2), qi(1)), (qi(1), q(1, 2), qi(0)), (qi(0), q(3, 2), q(1, 2))] {
        println!("c({x}, {y}, {z}) on the circle = {}", cyclic_order(&a(x), &a(y), &a(z)).unwrap());
    }
    let circle: Vec<Angle> = (0..6).map(|k| a(q(k, 3))).collect();
    println!("circle identities: {:?}", verify_cocycle(&*circle_cocycle(), &circle));

    let b = q(3, 4);
    let e = CoveringElement::new(q(1, 4), q(-1, 8), Sign::Minus, b).unwrap();
    println!("sigma({e}) = {}, sigma^2 = {}", sigma(&e), sigma(&sigma(&e)));
    let d = |v| CoveringElement::diagonal(v, b);
    println!("c(M(0,0), M(1/2,1/2), M(3/4,3/4)) = {}", cocycle_xb(&d(qi(0)), &d(q(1, 2)), &d(q(3, 4))).unwrap());
    println!("c(M(0,0), M(1/2,1/2), M(1,1)) = {}", cocycle_xb(&d(qi(0)), &d(q(1, 2)), &d(qi(1))).unwrap());
    let samples: Vec<CoveringElement> =
        (-3..3).map(|k| CoveringElement::new(q(k, 4), q(k + 1, 8), Sign::Plus, b).unwrap()).collect();
    println!("band identities: {:?}", verify_cocycle(&*band_cocycle(), &samples));
}
