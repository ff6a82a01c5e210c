//! Valued quiver of the Z/3 seed and matrix mutation kept in step with cluster mutation.

use cyclic_cluster::cluster::{fz_mutate, quiver, sync_check, MarkedModel};

fn main() {
    let seed = MarkedModel::new(3, 6).unwrap().seed();
    let qv = quiver(&seed).unwrap();
    for a in &qv.arrows {
        println!("{} -> {} valued ({}, {})", qv.vertices[a.from], qv.vertices[a.to], a.a, a.b);
    }
    let b = qv.exchange_matrix().unwrap();
    println!("B  = {:?}", b.0);
    let b2 = fz_mutate(&b, 3).unwrap();
    println!("mu_4 B = {:?}", b2.0);
    println!("mu_3 mu_4 B = {:?}", fz_mutate(&b2, 2).unwrap().0);
    let r = sync_check(&seed, &[3, 2, 0, 4, 1]).unwrap();
    println!("lockstep over 5 mutations: {}", r.passed);
}
