//! All clusters of the D_n models and their exchange graphs.

use cyclic_cluster::cluster::{mutation_graph, MarkedModel};

fn main() {
    for (p, n) in [(2, 4), (2, 5), (2, 6), (3, 6)] {
        let g = mutation_graph(&MarkedModel::new(p, n).unwrap()).unwrap();
        println!("p = {p}, n = {n}: {} clusters, {} edges, degree {:?}, connected {}", g.clusters.len(), g.edges.len(), g.degree, g.connected);
    }
}
