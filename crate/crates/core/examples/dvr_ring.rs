//! Truncated power series over cyclotomic fields: units, valuations and roots of unity.

use cyclic_cluster::rational::q;
use cyclic_cluster::ring::{root_of_unity, CycScalar, RingElement};

fn main() {
    let n = 6;
    let u = RingElement::uniformizer(n, 1);
    let one = RingElement::one(n, 1);
    let a = &one + &u;
    let inv = a.invert().unwrap();
    println!("(1 + u)^-1 = {inv}");
    println!("(1 + u)(1 + u)^-1 = {}", &a * &inv);
    let b = &u.pow(2) * &RingElement::from_q(n, 1, q(3, 2));
    println!("valuation of {b} is {}, unit: {}", b.valuation(), b.is_unit());
    println!("{b} invertible: {}", b.invert().is_ok());

    let z = root_of_unity(3, 1);
    println!("zeta_3 = {z}, zeta_3^3 = {}", z.pow(3));
    let s = CycScalar::one(3).try_add(&z).unwrap();
    println!("1 + zeta_3 = {s}, inverse {}", s.inv().unwrap());
}
