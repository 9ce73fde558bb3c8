use proptest::prelude::*;
use rp4::io::*;
use rp4_core::complex::{cross_polytope_boundary, SimplicialComplex};
use rp4_core::constructions::{c1_pipeline, kuehnel_rp, rp2_6, rp3_11, rp4_from_k6};
use rp4_core::flips::valid_moves;

fn same(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    a.facets() == b.facets()
}

#[test]
fn generated_complexes_round_trip() {
    let c1 = c1_pipeline().unwrap();
    for c in [c1.x32, c1.s4_32, c1.rp4, rp2_6(), rp3_11().unwrap(), rp4_from_k6().unwrap(), kuehnel_rp(3).unwrap()] {
        let fl = parse_complex(&format_fl(&c)).unwrap();
        assert!(same(&fl, &c));
        assert_eq!(fl.labels(), c.labels());
        assert!(same(&parse_complex(&format_bracket(&c)).unwrap(), &c));
    }
}

#[test]
fn bracket_tolerates_whitespace() {
    let c = parse_complex(" [ [1, 2,3],\n [1,2,4] ]\n").unwrap();
    assert_eq!(c.n_facets(), 2);
}

#[test]
fn malformed_inputs() {
    for bad in [
        "",
        "d=2 n=3\n1 2 3\n",
        "d=2 n=3 f=2\n1 2 3\n",
        "d=2 n=3 f=1\n1 2 x\n",
        "d=2 n=3 f=1\n3 2 1\n",
        "d=2 n=3 f=1\n0 1 2\n",
        "d=1 n=3 f=1\n1 2 3\n",
        "d=2 n=3 f=1\n# label 9 x\n1 2 3\n",
        "d=1 n=3 f=2\n1 2\n2 3 4\n",
        "[[1,2],[2,3],]",
        "[[1,2][2,3]]",
        "[[1,2],[1,2]]",
    ] {
        assert!(parse_complex(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn labels_with_spaces() {
    let c = parse_complex("d=1 n=2 f=1\n# label 1 north pole\n1 2\n").unwrap();
    assert_eq!(c.label(1), Some("north pole"));
}

#[test]
fn traces_round_trip() {
    let c = rp3_11().unwrap();
    let moves = valid_moves(&c);
    assert_eq!(parse_trace(&format_trace(&moves)).unwrap(), moves);
    assert!(parse_trace("[1,2] [3]").is_err());
}

#[test]
fn involutions_by_label_or_id() {
    let c = cross_polytope_boundary(2);
    let by_id = parse_involution("(1 2)(3 4)", &c).unwrap();
    assert_eq!(by_id.apply(3), 4);
    let c1 = c1_pipeline().unwrap();
    let sigma = parse_involution("(e1 f1)(123 456)", &c1.x32).unwrap();
    assert_eq!(sigma.apply(1), 27);
    assert!(parse_involution("(1 2 3)", &c).is_err());
    assert!(parse_involution("(1 2", &c).is_err());
    assert!(parse_involution("(e9 f1)", &c1.x32).is_err());
}

proptest! {
    #[test]
    fn random_complexes_round_trip(facets in prop::collection::btree_set(prop::collection::btree_set(1u32..40, 3), 1..30)) {
        let c = SimplicialComplex::from_lists(facets.iter().map(|f| f.iter().copied().collect::<Vec<_>>())).unwrap();
        prop_assert!(same(&parse_complex(&format_fl(&c)).unwrap(), &c));
        prop_assert!(same(&parse_complex(&format_bracket(&c)).unwrap(), &c));
    }
}
