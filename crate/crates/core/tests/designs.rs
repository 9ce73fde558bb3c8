use std::collections::{BTreeMap, BTreeSet};

use rp4_core::constructions::rp4_from_k6;
use rp4_core::designs::*;

/// Counts every t-subset of the points covered by the blocks, by brute force.
fn cover_counts(points: &[Point], blocks: &[Vec<Point>], t: usize) -> BTreeMap<Vec<Point>, usize> {
    fn subsets(items: &[Point], t: usize, start: usize, cur: &mut Vec<Point>, out: &mut Vec<Vec<Point>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            subsets(items, t, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    subsets(points, t, 0, &mut Vec::new(), &mut all);
    all.into_iter()
        .map(|s| {
            let n = blocks.iter().filter(|b| s.iter().all(|p| b.contains(p))).count();
            (s, n)
        })
        .collect()
}

fn pairwise_meets(blocks: &[Vec<Point>]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            out.insert(a.iter().filter(|p| b.contains(p)).count());
        }
    }
    out
}

#[test]
fn witt22_is_a_steiner_system() {
    let k6 = build_k6();
    let w = witt22(&k6);
    assert_eq!(w.blocks.len(), 77);
    assert!(w.blocks.iter().all(|b| b.len() == 6));
    let counts = cover_counts(&w.points, &w.blocks, 3);
    assert_eq!(counts.len(), 1540);
    assert!(counts.values().all(|&n| n == 1));
    assert!(verify_design(&w, 3, 22, 6, 1).holds);
}

#[test]
fn biplanes_and_quasi_symmetric_designs() {
    let k6 = build_k6();
    for d in [biplane_e(&k6), biplane_m(&k6)] {
        assert_eq!(d.points.len(), 16);
        assert_eq!(d.blocks.len(), 16);
        assert!(cover_counts(&d.points, &d.blocks, 2).values().all(|&n| n == 2));
        assert_eq!(pairwise_meets(&d.blocks), BTreeSet::from([2]));
    }
    for d in [design_e(&k6), design_m(&k6)] {
        assert_eq!(d.points.len(), 10);
        assert_eq!(d.blocks.len(), 15);
        assert!(d.blocks.iter().all(|b| b.len() == 4));
        assert!(cover_counts(&d.points, &d.blocks, 2).values().all(|&n| n == 2));
        assert_eq!(pairwise_meets(&d.blocks), BTreeSet::from([1, 2]));
    }
}

#[test]
fn breaking_a_block_is_detected() {
    let k6 = build_k6();
    let mut w = witt22(&k6);
    w.blocks[0][0] = if w.blocks[0].contains(&21) { 20 } else { 21 };
    w.blocks[0].sort_unstable();
    let check = verify_design(&w, 3, 22, 6, 1);
    assert!(!check.holds);
    assert!(check.counterexample.is_some());
}

#[test]
fn ovals_of_the_edge_biplane() {
    let k6 = build_k6();
    let ov = ovals(&biplane_e(&k6));
    assert_eq!(ov.len(), 60);
    let matchings: BTreeSet<Vec<Point>> = k6
        .matching_labels
        .iter()
        .map(|l| l.iter().map(|&b| bisection_point(b)).collect())
        .collect();
    assert_eq!(ov.iter().filter(|o| matchings.contains(*o)).count(), 15);
    assert_eq!(ov.iter().filter(|o| o.iter().filter(|&&p| p < 6).count() == 2).count(), 45);
}

#[test]
fn octahedral_axes_land_in_em_blocks() {
    let k6 = build_k6();
    let rp4 = rp4_from_k6().unwrap();
    let quads = octahedral_axes(&rp4, &k6).unwrap();
    assert_eq!(quads.len(), 45);
    let quads: BTreeSet<Vec<Point>> = quads.into_iter().collect();
    let two_vertex_ovals: BTreeSet<Vec<Point>> =
        ovals(&biplane_e(&k6)).into_iter().filter(|o| o.iter().filter(|&&p| p < 6).count() == 2).collect();
    assert_eq!(quads, two_vertex_ovals);
}
