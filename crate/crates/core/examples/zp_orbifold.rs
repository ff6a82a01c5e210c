//! The Z/p orbifold model: loops, compatibility and the single loop in every cluster.

use cyclic_cluster::arcs::{ArcObject, Disk};
use cyclic_cluster::cluster::{enumerate_clusters, MarkedModel};

fn main() {
    for p in [3u32, 5] {
        let d = Disk::new(p).unwrap();
        let per = d.period();
        let l = d.loop_at(per * cyclic_cluster::rational::q(1, 6)).unwrap();
        let r = d.regular(per * cyclic_cluster::rational::q(1, 3), per).unwrap();
        println!("p = {p}: period {per}, {l} rigid {}, {r} compatible with it {}", d.is_rigid(&l), d.compatible_zp(&l, &r).unwrap());
        let m = MarkedModel::new(p, 6).unwrap();
        let clusters = enumerate_clusters(&m).unwrap();
        let one_loop = clusters.iter().all(|c| c.arcs.iter().filter(|a| matches!(a, ArcObject::Loop { .. })).count() == 1);
        println!("  {} clusters on 6 points, one loop each: {one_loop}", clusters.len());
    }
}
