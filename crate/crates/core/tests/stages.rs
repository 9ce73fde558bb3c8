use rp4_core::complex::Distance;
use rp4_core::constructions::*;
use rp4_core::manifold::{is_antipodal, AntipodalFailure};
use rp4_core::symmetry::facet_orbits;

#[test]
fn c1_census() {
    let c = c1_pipeline().unwrap();
    assert_eq!(c.x6.n_facets(), 6);
    assert_eq!(c.x12.n_facets(), 30);
    assert_eq!((c.x32.n_vertices(), c.x32.n_facets()), (32, 330));
    assert_eq!(c.s4_32.n_facets(), 300);
    assert_eq!(c.round1.len(), 60);
    assert_eq!(c.round2.len(), 15);
}

#[test]
fn s4_32_orbits_under_coordinate_permutations() {
    let c = c1_pipeline().unwrap();
    let gens = [c1_coordinate_permutation(&[1, 0, 2, 3, 4, 5]), c1_coordinate_permutation(&[1, 2, 3, 4, 5, 0])];
    for g in &gens {
        assert!(g.is_automorphism_of(&c.s4_32));
    }
    let mut sizes: Vec<usize> = facet_orbits(&c.s4_32, &gens).iter().map(Vec::len).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![30, 30, 120, 120]);
}

#[test]
fn antipodality_gate() {
    let c = c1_pipeline().unwrap();
    let r = is_antipodal(&c.s4_32, &c.sigma);
    assert_eq!(r.min_distance, Some(Distance::Finite(3)));
    assert!(r.failure.is_none());
    let bad = is_antipodal(&c.x32, &c.sigma);
    assert!(matches!(bad.failure, Some(AntipodalFailure::NotInvariant(_))));
}

#[test]
fn c2_stages() {
    let c = c2_pipeline().unwrap();
    let counts: Vec<usize> = c.stages.iter().map(Vec::len).collect();
    assert_eq!(counts, C2_STAGE_COUNTS);
    assert_eq!(counts.iter().sum::<usize>(), 150);
    assert_eq!(c.boundary_f_vectors[0], [24, 88, 128, 64]);
    assert_eq!(c.boundary_f_vectors[1], [24, 120, 192, 96]);
    assert_eq!(c.boundary_f_vectors[2], [24, 120, 192, 96]);
    assert!(c.antipodal.is_antipodal());
}

#[test]
fn c2_diagonals_are_forced() {
    for p in [1, -1] {
        let (_, r) = c2_with_diagonals(DiagonalChoice::Uniform(p)).unwrap();
        assert!(!r.is_antipodal());
    }
    for choice in [DiagonalChoice::Forced, DiagonalChoice::Swapped] {
        let (b, r) = c2_with_diagonals(choice).unwrap();
        assert!(r.is_antipodal());
        assert_eq!(b.f_vector(), [24, 120, 192, 96]);
    }
}

#[test]
fn c3_stages() {
    let c = c3_pipeline().unwrap();
    let counts: Vec<usize> = c.stages.iter().map(Vec::len).collect();
    assert_eq!(counts, C3_STAGE_COUNTS);
    assert_eq!(counts.iter().sum::<usize>(), 150);
    assert_eq!(c.boundary_f_vector, [22, 102, 160, 80]);
    assert!(c.antipodal.is_antipodal());
    assert_eq!(c.cube.edges.len(), 28);
    assert_eq!(c.cube.two_faces.iter().filter(|f| f.len() == 4).count(), 6);
}

#[test]
fn bounds() {
    assert_eq!(arnoux_marin_bound(3), Ok(11));
    assert_eq!(arnoux_marin_bound(4), Ok(16));
    assert_eq!(arnoux_marin_bound(5), Ok(22));
    assert!(arnoux_marin_bound(2).is_err());
    assert!(kuehnel_rp(1).is_err());
}
