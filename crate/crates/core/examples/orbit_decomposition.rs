//! Splitting SX into character summands for cyclic groups acting on a band.

use cyclic_cluster::api::orbit_report;
use cyclic_cluster::lincat::LinCat;
use cyclic_cluster::orbit::{half_turn_splitting, OrbitCat};
use cyclic_cluster::poset::{band_cocycle, band_rotation, CoveringElement};
use cyclic_cluster::rational::{q, qi};
use cyclic_cluster::ring::DEFAULT_TRUNCATION;

fn main() {
    let band = q(1, 2);
    let x = CoveringElement::diagonal(q(1, 4), band).canonical();
    for n in [2usize, 3, 4] {
        let step = if n == 3 { qi(2) } else { qi(1) };
        let oc = OrbitCat::new(LinCat::new(band_cocycle(), DEFAULT_TRUNCATION, n as u32), band_rotation(n, step));
        let (parts, iso) = oc.decompose_sx(&x).unwrap();
        println!("Z/{n}: stabilizer {:?}, {} summands, isomorphism {}", oc.effective_stabilizer(&x), parts.len(), oc.cat.is_isomorphism(&iso));
        for (chi, obj) in &parts {
            println!("  {:?}: equivariance {:?}", chi, oc.verify_equivariance(obj));
        }
    }
    println!("[[1, z], [-z, 1]] splitting: {:?}", half_turn_splitting(q(1, 4), band));
    let s3 = orbit_report("s3", 20, 1).unwrap();
    println!("S3 two-dimensional irrep: equivariance {:?}, unit criterion {:?}", s3.summands, s3.unit_vs_iso);
}
