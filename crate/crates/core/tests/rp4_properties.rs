use num_bigint::BigUint;
use rp4_core::constructions::*;
use rp4_core::flips::ReduceConfig;
use rp4_core::homology::{homology, known_homology, KnownSpace};
use rp4_core::manifold::{check_combinatorial_manifold, is_antipodal};
use rp4_core::symmetry::automorphism_group;

#[test]
fn automorphisms_of_rp4_16() {
    let rp4 = c1_pipeline().unwrap().rp4;
    let g = automorphism_group(&rp4);
    assert_eq!(g.order, BigUint::from(720u32));
    let mut vo = g.vertex_orbit_sizes();
    vo.sort();
    assert_eq!(vo, vec![6, 10]);
    let mut fo = g.facet_orbit_sizes();
    fo.sort();
    assert_eq!(fo, vec![30, 120]);
}

#[test]
fn rp4_16_is_a_combinatorial_manifold() {
    let rp4 = c1_pipeline().unwrap().rp4;
    assert_eq!(homology(&rp4), known_homology(KnownSpace::RealProjective(4)));
    let report = check_combinatorial_manifold(&rp4, &ReduceConfig::default());
    assert!(report.pseudomanifold.closed);
    assert_eq!(report.links.len(), 16);
    assert!(report.all_certified());
}

#[test]
fn antipodality_of_s4_32() {
    let c = c1_pipeline().unwrap();
    let r = is_antipodal(&c.s4_32, &c.sigma);
    assert!(r.is_antipodal());
    assert!(!is_antipodal(&c.x32, &c.sigma).is_antipodal());
}

#[test]
fn kuehnel_rp4() {
    let k = kuehnel_rp(4).unwrap();
    assert_eq!(k.n_vertices(), 31);
    assert_eq!(k.n_facets(), 360);
    assert_eq!(homology(&k), known_homology(KnownSpace::RealProjective(4)));
}

#[test]
fn rp3_11_links() {
    let p3 = rp3_11().unwrap();
    assert!(check_combinatorial_manifold(&p3, &ReduceConfig::default()).all_certified());
}
