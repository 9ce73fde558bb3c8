use rp4_core::constructions::*;
use rp4_core::homology::{homology, known_homology, KnownSpace};
use rp4_core::symmetry::canonical_form;

#[test]
fn c1_reaches_rp4() {
    let c = c1_pipeline().unwrap();
    assert_eq!(c.rp4.f_vector(), [16, 120, 330, 375, 150]);
}

#[test]
fn c2_reaches_rp4() {
    let c = c2_pipeline().unwrap();
    assert_eq!(c.boundary_f_vectors[0], [24, 88, 128, 64]);
    assert_eq!(c.boundary_f_vectors[2], [24, 120, 192, 96]);
    assert_eq!(c.rp4.f_vector(), [16, 120, 330, 375, 150]);
}

#[test]
fn c3_reaches_rp4() {
    let c = c3_pipeline().unwrap();
    assert_eq!(c.boundary_f_vector, [22, 102, 160, 80]);
    assert_eq!(c.rp4.f_vector(), [16, 120, 330, 375, 150]);
}

#[test]
fn four_readings_agree() {
    let a = canonical_form(&c1_pipeline().unwrap().rp4);
    assert_eq!(a.facets, canonical_form(&c2_pipeline().unwrap().rp4).facets);
    assert_eq!(a.facets, canonical_form(&c3_pipeline().unwrap().rp4).facets);
    assert_eq!(a.facets, canonical_form(&rp4_from_k6().unwrap()).facets);
}

#[test]
fn small_spaces() {
    let p2 = rp2_6();
    assert_eq!(p2.f_vector(), [6, 15, 10]);
    assert_eq!(homology(&p2), known_homology(KnownSpace::RealProjective(2)));
    let p3 = rp3_11().unwrap();
    assert_eq!(p3.n_vertices(), 11);
    assert_eq!(p3.euler_characteristic(), 0);
    assert_eq!(homology(&p3), known_homology(KnownSpace::RealProjective(3)));
    let k = kuehnel_rp(2).unwrap();
    assert_eq!(k.f_vector(), [7, 18, 12]);
}
