//! Mutating the D4 seed cluster at each position.

use cyclic_cluster::cluster::{mutate, mutation_oracle, MarkedModel};

fn main() {
    let seed = MarkedModel::new(2, 4).unwrap().seed();
    println!("seed: {}", seed.arcs.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", "));
    for i in 0..seed.arcs.len() {
        let out = mutate(&seed, i).unwrap();
        let scan = mutation_oracle(&seed, &out.old);
        println!("{} -> {} (case {}, scan agrees: {})", out.old, out.new, out.case_label(), scan == vec![out.new]);
        assert_eq!(mutate(&out.cluster, i).unwrap().cluster, seed);
    }
}
