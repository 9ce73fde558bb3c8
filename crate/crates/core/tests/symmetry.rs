use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use rp4_core::complex::{cross_polytope_boundary, simplex_boundary, SimplicialComplex, VertexMap};
use rp4_core::constructions::{rp2_6, rp3_11};
use rp4_core::symmetry::*;

fn next_permutation(p: &mut [u32]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Counts automorphisms by trying every vertex permutation.
fn brute_force_order(c: &SimplicialComplex) -> usize {
    let verts = c.vertices().to_vec();
    let facets: BTreeSet<Vec<u32>> = c.facets().iter().map(|s| s.vertices().to_vec()).collect();
    let mut image = verts.clone();
    let mut count = 0;
    loop {
        let map: VertexMap = verts.iter().copied().zip(image.iter().copied()).collect();
        if facets.iter().all(|f| {
            let mut g: Vec<u32> = f.iter().map(|v| map[v]).collect();
            g.sort_unstable();
            facets.contains(&g)
        }) {
            count += 1;
        }
        if !next_permutation(&mut image) {
            return count;
        }
    }
}

#[test]
fn group_orders_match_brute_force() {
    let cases = [
        simplex_boundary(3),
        simplex_boundary(5),
        cross_polytope_boundary(3),
        cross_polytope_boundary(4),
        rp2_6(),
        SimplicialComplex::from_lists([[1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [1, 6]]).unwrap(),
    ];
    for c in &cases {
        let g = automorphism_group(c);
        assert_eq!(g.order, BigUint::from(brute_force_order(c)));
        assert!(g.generators.iter().all(|p| p.is_automorphism_of(c)));
        assert_eq!(g.verify_order(100_000), Some(true));
    }
}

#[test]
fn rp3_11_group_is_enumerable() {
    let c = rp3_11().unwrap();
    let g = automorphism_group(&c);
    assert_eq!(g.verify_order(100_000), Some(true));
}

#[test]
fn permutation_cycles_round_trip() {
    let p = Permutation::from_cycles(&[vec![1, 2, 3], vec![4, 5]]).unwrap();
    assert_eq!(p.to_string(), "(1 2 3)(4 5)");
    assert_eq!(Permutation::from_cycles(&p.cycles()).unwrap(), p);
    assert!(p.then(&p.inverse()).is_identity());
    assert!(Permutation::from_cycles(&[vec![1, 2], vec![2, 3]]).is_none());
}

#[test]
fn non_isomorphic_pair() {
    let a = simplex_boundary(3).join(&SimplicialComplex::from_lists([[9], [10]]).unwrap()).unwrap();
    let b = cross_polytope_boundary(3);
    assert_eq!(a.n_vertices(), 6);
    assert!(are_isomorphic(&a, &b).is_none());
}

fn shuffle(c: &SimplicialComplex, seed: u64) -> (SimplicialComplex, VertexMap) {
    let mut verts = c.vertices().to_vec();
    let mut s = seed;
    for i in (1..verts.len()).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        verts.swap(i, (s >> 33) as usize % (i + 1));
    }
    let map: VertexMap = c.vertices().iter().copied().zip(verts.iter().map(|v| v + 100)).collect();
    (c.relabel(&map).unwrap(), map)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn canonical_form_ignores_labels(seed in any::<u64>()) {
        for c in [rp2_6(), rp3_11().unwrap(), cross_polytope_boundary(4)] {
            let (d, _) = shuffle(&c, seed);
            prop_assert_eq!(canonical_form(&c).facets, canonical_form(&d).facets);
            let iso = are_isomorphic(&c, &d).unwrap();
            prop_assert!(is_isomorphism(&c, &d, &iso));
            let back = are_isomorphic(&d, &c).unwrap();
            prop_assert!(is_isomorphism(&d, &c, &back));
            let (e, _) = shuffle(&d, seed ^ 0x5555);
            let de = are_isomorphic(&d, &e).unwrap();
            let composed: VertexMap = iso.iter().map(|(k, v)| (*k, de[v])).collect();
            prop_assert!(is_isomorphism(&c, &e, &composed));
        }
    }
}
