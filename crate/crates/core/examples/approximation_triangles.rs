//! Exchange triangles from minimal approximations, including the loop in a Z/3 model.

use cyclic_cluster::cluster::{approximation_triangles, left_approximation, MarkedModel};

fn show(c: &cyclic_cluster::cluster::Cluster) {
    for t in &c.arcs {
        let (left, right) = approximation_triangles(c, t).unwrap();
        let mid = |a: &cyclic_cluster::cluster::Approximation| {
            a.summands.iter().map(|s| format!("{}^{}", s.object, s.multiplicity)).collect::<Vec<_>>().join(" + ")
        };
        println!("  {t} -> {} -> {}    {} -> {} -> {t}", mid(&left.middle), left.end, right.start, mid(&right.middle));
    }
}

fn main() {
    println!("D4 seed:");
    show(&MarkedModel::new(2, 4).unwrap().seed());
    let seed = MarkedModel::new(3, 6).unwrap().seed();
    println!("Z/3 seed:");
    show(&seed);
    let l = left_approximation(&seed, &seed.arcs[3]).unwrap();
    let s = &l.summands[0];
    println!("loop approximation: {} copies of {}", s.multiplicity, s.object);
}
