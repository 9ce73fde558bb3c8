//! The labelled `K_6` and the block designs built from it.
//!
//! Point ids used by every design here:
//!
//! | ids      | points                                   |
//! |----------|------------------------------------------|
//! | `0..6`   | vertices `A..F` of `K_6`                 |
//! | `6..16`  | bisections `0..9`                        |
//! | `16..22` | one-factorizations `U..Z`                |
//!
//! Bisection `k` is the `k`-th 3-subset containing `A` in lexicographic
//! order (`ABC = 0`, ..., `AEF = 9`). An edge `uv` is labelled by the four
//! bisections keeping `u` and `v` on the same side; a perfect matching by
//! the four bisections in no label of its edges.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{Simplex, SimplicialComplex, Vertex};

pub type Point = u32;

pub const VERTEX_NAMES: [&str; 6] = ["A", "B", "C", "D", "E", "F"];
pub const FACTORIZATION_NAMES: [&str; 6] = ["U", "V", "W", "X", "Y", "Z"];

/// Design point id of `K_6` vertex `v` (`0..6`).
pub fn vertex_point(v: usize) -> Point {
    v as Point
}

/// Design point id of bisection `b` (`0..10`).
pub fn bisection_point(b: usize) -> Point {
    6 + b as Point
}

/// Design point id of factorization `f` (`0..6`).
pub fn factorization_point(f: usize) -> Point {
    16 + f as Point
}

/// Name of a design point: `A`..`F`, `0`..`9` or `U`..`Z`.
pub fn point_name(p: Point) -> String {
    match p {
        0..=5 => String::from(VERTEX_NAMES[p as usize]),
        6..=15 => format!("{}", p - 6),
        16..=21 => String::from(FACTORIZATION_NAMES[p as usize - 16]),
        _ => format!("?{p}"),
    }
}

/// `K_6` with its bisections, matchings and one-factorizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K6Structure {
    /// The `A`-side triple of each bisection, as vertex indices.
    pub bisections: Vec<[usize; 3]>,
    /// The 15 edges `(u, v)`, `u < v`, in lexicographic order.
    pub edges: Vec<(usize, usize)>,
    /// Bisection indices labelling each edge.
    pub edge_labels: Vec<BTreeSet<usize>>,
    /// Perfect matchings as triples of edge indices, in lexicographic order.
    pub matchings: Vec<[usize; 3]>,
    pub matching_labels: Vec<BTreeSet<usize>>,
    /// One-factorizations as sorted 5-sets of matching indices, ordered
    /// lexicographically and named `U..Z`.
    pub factorizations: Vec<[usize; 5]>,
}

impl K6Structure {
    pub fn edge_index(&self, u: usize, v: usize) -> usize {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.iter().position(|&e| e == (a, b)).expect("distinct vertices of K6")
    }

    /// `e(u, v)`.
    pub fn edge_label(&self, u: usize, v: usize) -> &BTreeSet<usize> {
        &self.edge_labels[self.edge_index(u, v)]
    }

    /// The two factorizations containing matching `m`.
    pub fn factorizations_of(&self, m: usize) -> [usize; 2] {
        let fs: Vec<usize> = (0..6).filter(|&f| self.factorizations[f].contains(&m)).collect();
        assert_eq!(fs.len(), 2, "every matching lies in two factorizations");
        [fs[0], fs[1]]
    }

    /// The matching shared by factorizations `f != g`.
    pub fn common_matching(&self, f: usize, g: usize) -> usize {
        let shared: Vec<usize> =
            self.factorizations[f].iter().copied().filter(|m| self.factorizations[g].contains(m)).collect();
        assert_eq!(shared.len(), 1, "two factorizations share exactly one matching");
        shared[0]
    }

    /// `m(f, g)`: the label of the matching shared by `f` and `g`.
    pub fn dual_edge_label(&self, f: usize, g: usize) -> &BTreeSet<usize> {
        &self.matching_labels[self.common_matching(f, g)]
    }

    /// Edge and matching tables as text, one row per line.
    pub fn tables(&self) -> String {
        let name = |v: usize| VERTEX_NAMES[v];
        let set = |s: &BTreeSet<usize>| s.iter().map(|b| format!("{b}")).collect::<String>();
        let mut out = String::from("bisections\n");
        for (k, t) in self.bisections.iter().enumerate() {
            out += &format!("{k} {}{}{}\n", name(t[0]), name(t[1]), name(t[2]));
        }
        out += "edges\n";
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            out += &format!("{}{} {}\n", name(u), name(v), set(&self.edge_labels[i]));
        }
        out += "matchings\n";
        for (i, m) in self.matchings.iter().enumerate() {
            let edges: Vec<String> =
                m.iter().map(|&e| format!("{}{}", name(self.edges[e].0), name(self.edges[e].1))).collect();
            out += &format!("{} {}\n", edges.join(" "), set(&self.matching_labels[i]));
        }
        out += "factorizations\n";
        for (f, fs) in self.factorizations.iter().enumerate() {
            let ms: Vec<String> = fs.iter().map(|m| format!("{m}")).collect();
            out += &format!("{} {}\n", FACTORIZATION_NAMES[f], ms.join(" "));
        }
        out += "dual edges\n";
        for f in 0..6 {
            for g in f + 1..6 {
                out += &format!("{}{} {}\n", FACTORIZATION_NAMES[f], FACTORIZATION_NAMES[g], set(self.dual_edge_label(f, g)));
            }
        }
        out
    }
}

fn triples_with_zero() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for b in 1..6 {
        for c in b + 1..6 {
            out.push([0, b, c]);
        }
    }
    out
}

/// Builds `K_6` with all labels.
pub fn build_k6() -> K6Structure {
    let bisections = triples_with_zero();
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            edges.push((u, v));
        }
    }
    let edge_labels: Vec<BTreeSet<usize>> = edges
        .iter()
        .map(|&(u, v)| (0..10).filter(|&k| bisections[k].contains(&u) == bisections[k].contains(&v)).collect())
        .collect();

    let mut matchings = Vec::new();
    for a in 0..15 {
        for b in a + 1..15 {
            for c in b + 1..15 {
                let mut seen = BTreeSet::new();
                for e in [a, b, c] {
                    seen.insert(edges[e].0);
                    seen.insert(edges[e].1);
                }
                if seen.len() == 6 {
                    matchings.push([a, b, c]);
                }
            }
        }
    }
    let matching_labels: Vec<BTreeSet<usize>> = matchings
        .iter()
        .map(|m| {
            let used: BTreeSet<usize> = m.iter().flat_map(|&e| edge_labels[e].iter().copied()).collect();
            (0..10).filter(|k| !used.contains(k)).collect()
        })
        .collect();

    // One-factorizations: 5 pairwise edge-disjoint matchings.
    let disjoint = |x: usize, y: usize| matchings[x].iter().all(|e| !matchings[y].contains(e));
    let mut factorizations = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn extend(
        start: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<[usize; 5]>,
        disjoint: &dyn Fn(usize, usize) -> bool,
    ) {
        if stack.len() == 5 {
            out.push([stack[0], stack[1], stack[2], stack[3], stack[4]]);
            return;
        }
        for m in start..15 {
            if stack.iter().all(|&x| disjoint(x, m)) {
                stack.push(m);
                extend(m + 1, stack, out, disjoint);
                stack.pop();
            }
        }
    }
    extend(0, &mut stack, &mut factorizations, &disjoint);
    factorizations.sort();

    K6Structure { bisections, edges, edge_labels, matchings, matching_labels, factorizations }
}

/// A finite incidence structure: blocks are sorted point lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    pub points: Vec<Point>,
    pub blocks: Vec<Vec<Point>>,
}

/// Outcome of [`verify_design`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignCheck {
    pub holds: bool,
    /// First failure: a wrong-size block, or a `t`-subset with its count.
    pub counterexample: Option<(Vec<Point>, usize)>,
}

impl Design {
    pub fn new(points: impl IntoIterator<Item = Point>, blocks: impl IntoIterator<Item = Vec<Point>>) -> Self {
        let mut points: Vec<Point> = points.into_iter().collect();
        points.sort_unstable();
        points.dedup();
        let mut blocks: Vec<Vec<Point>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        Design { points, blocks }
    }

    /// Sizes of pairwise block intersections.
    pub fn intersection_sizes(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                out.insert(a.iter().filter(|p| b.contains(p)).count());
            }
        }
        out
    }

    /// Blocks rendered with point names, one per line.
    pub fn render_blocks(&self) -> String {
        let mut out = String::new();
        for b in &self.blocks {
            let names: Vec<String> = b.iter().map(|&p| point_name(p)).collect();
            out += &names.join(" ");
            out.push('\n');
        }
        out
    }
}

/// Checks a `t-(v, k, λ)` design by counting the blocks through every
/// `t`-subset of the points.
pub fn verify_design(design: &Design, t: usize, v: usize, k: usize, lambda: usize) -> DesignCheck {
    if design.points.len() != v {
        return DesignCheck { holds: false, counterexample: Some((Vec::new(), design.points.len())) };
    }
    if let Some(b) = design.blocks.iter().find(|b| b.len() != k) {
        return DesignCheck { holds: false, counterexample: Some((b.clone(), b.len())) };
    }
    for subset in crate::complex::Combinations::new(v, t) {
        let pts: Vec<Point> = subset.iter().map(|&i| design.points[i]).collect();
        let count = design.blocks.iter().filter(|b| pts.iter().all(|p| b.contains(p))).count();
        if count != lambda {
            return DesignCheck { holds: false, counterexample: Some((pts, count)) };
        }
    }
    DesignCheck { holds: true, counterexample: None }
}

fn bisection_block(labels: &BTreeSet<usize>) -> Vec<Point> {
    labels.iter().map(|&b| bisection_point(b)).collect()
}

fn bisection_points() -> Vec<Point> {
    (0..10).map(bisection_point).collect()
}

/// Edge labels as blocks on the bisections.
pub fn design_e(k6: &K6Structure) -> Design {
    Design::new(bisection_points(), k6.edge_labels.iter().map(bisection_block))
}

/// Matching labels as blocks on the bisections.
pub fn design_m(k6: &K6Structure) -> Design {
    Design::new(bisection_points(), k6.matching_labels.iter().map(bisection_block))
}

/// `{u, v} ∪ e(u, v)` for every edge, plus the vertex set.
pub fn biplane_e(k6: &K6Structure) -> Design {
    let mut blocks: Vec<Vec<Point>> = k6
        .edges
        .iter()
        .zip(&k6.edge_labels)
        .map(|(&(u, v), l)| {
            let mut b = vec![vertex_point(u), vertex_point(v)];
            b.extend(bisection_block(l));
            b
        })
        .collect();
    blocks.push((0..6).map(vertex_point).collect());
    Design::new((0..6).map(vertex_point).chain(bisection_points()), blocks)
}

/// `{f, g} ∪ m(f, g)` for every pair of factorizations, plus the set of
/// factorizations.
pub fn biplane_m(k6: &K6Structure) -> Design {
    let mut blocks = Vec::new();
    for f in 0..6 {
        for g in f + 1..6 {
            let mut b = vec![factorization_point(f), factorization_point(g)];
            b.extend(bisection_block(k6.dual_edge_label(f, g)));
            blocks.push(b);
        }
    }
    blocks.push((0..6).map(factorization_point).collect());
    Design::new(bisection_points().into_iter().chain((0..6).map(factorization_point)), blocks)
}

/// One block per incident edge-matching pair `(e, m)`:
/// `{v, v', f, f'} ∪ (B \ (e ∪ m))` with `e = vv'` and `f, f'` the
/// factorizations containing `m`.
pub fn em_blocks(k6: &K6Structure) -> Vec<Vec<Point>> {
    let mut blocks = Vec::new();
    for (m, edges) in k6.matchings.iter().enumerate() {
        let [f, g] = k6.factorizations_of(m);
        for &e in edges {
            let (u, v) = k6.edges[e];
            let mut b = vec![vertex_point(u), vertex_point(v), factorization_point(f), factorization_point(g)];
            let used: BTreeSet<usize> = k6.edge_labels[e].union(&k6.matching_labels[m]).copied().collect();
            b.extend((0..10).filter(|k| !used.contains(k)).map(bisection_point));
            b.sort_unstable();
            blocks.push(b);
        }
    }
    blocks
}

/// The 77 blocks of `Ẽ ∪ M̃ ∪ EM` on all 22 points.
pub fn witt22(k6: &K6Structure) -> Design {
    let mut blocks = biplane_e(k6).blocks;
    blocks.extend(biplane_m(k6).blocks);
    blocks.extend(em_blocks(k6));
    Design::new(0..22, blocks)
}

/// 4-subsets of the points meeting every block in 0 or 2 points.
pub fn ovals(design: &Design) -> Vec<Vec<Point>> {
    crate::complex::Combinations::new(design.points.len(), 4)
        .map(|idx| idx.iter().map(|&i| design.points[i]).collect::<Vec<Point>>())
        .filter(|q| {
            design.blocks.iter().all(|b| {
                let meet = q.iter().filter(|p| b.contains(p)).count();
                meet == 0 || meet == 2
            })
        })
        .collect()
}

/// Deletes the points of `design.blocks[index]` from every other block.
pub fn derived_blocks(design: &Design, index: usize) -> Vec<Vec<Point>> {
    let removed = &design.blocks[index];
    design
        .blocks
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != index)
        .map(|(_, b)| b.iter().copied().filter(|p| !removed.contains(p)).collect())
        .collect()
}

/// The dual structure: factorizations become vertices and matchings
/// become edges. Returns the rebuilt edge list on factorization indices,
/// with the labels of the corresponding matchings.
pub fn dual_k6(k6: &K6Structure) -> Vec<((usize, usize), BTreeSet<usize>)> {
    (0..15)
        .map(|m| {
            let [f, g] = k6.factorizations_of(m);
            ((f, g), k6.matching_labels[m].clone())
        })
        .collect()
}

/// Vertex id of a design point inside the `K_6` complex: `A..F` are
/// `1..=6` and bisections `0..9` are `7..=16`.
pub fn complex_vertex(p: Point) -> Vertex {
    assert!(p < 16, "only vertices and bisections appear in the complex");
    p + 1
}

/// Labels `A..F`, `0..9` for the 16 vertices of the `K_6` complex.
pub fn complex_labels() -> BTreeMap<Vertex, String> {
    (0..16).map(|p| (complex_vertex(p), point_name(p))).collect()
}

/// Reads the link of every edge joining two of `A..F` in `rp4` (labelled as
/// by [`complex_labels`]) as an octahedron, and checks that each of its
/// three axes `{b, b'}` gives a quadruple `{v, v', b, b'}` lying in an `EM`
/// block. Returns the 45 quadruples, or `None` on any mismatch.
pub fn octahedral_axes(rp4: &SimplicialComplex, k6: &K6Structure) -> Option<Vec<Vec<Point>>> {
    let em = em_blocks(k6);
    let point_of = |v: Vertex| -> Option<Point> {
        let label = rp4.label(v)?;
        (0..22).find(|&p| point_name(p) == label)
    };
    let mut quads = Vec::new();
    for u in 0..6usize {
        for w in u + 1..6 {
            let a = rp4.vertex_with_label(VERTEX_NAMES[u])?;
            let b = rp4.vertex_with_label(VERTEX_NAMES[w])?;
            let link = rp4.link(&Simplex::new([a, b]).ok()?).ok()?;
            let pts: Vec<Point> = link.vertices().iter().map(|&v| point_of(v)).collect::<Option<_>>()?;
            if pts.len() != 6 || pts.iter().any(|&p| !(6..16).contains(&p)) {
                return None;
            }
            let adj = link.adjacency();
            for (i, &x) in link.vertices().iter().enumerate() {
                for &y in &link.vertices()[i + 1..] {
                    if adj[&x].contains(&y) {
                        continue;
                    }
                    let mut q = vec![vertex_point(u), vertex_point(w), point_of(x)?, point_of(y)?];
                    q.sort_unstable();
                    if !em.iter().any(|blk| q.iter().all(|p| blk.contains(p))) {
                        return None;
                    }
                    quads.push(q);
                }
            }
        }
    }
    Some(quads)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k6_counts_and_first_labels() {
        let k6 = build_k6();
        assert_eq!(k6.matchings.len(), 15);
        assert_eq!(k6.factorizations.len(), 6);
        let set = |xs: &[usize]| xs.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(k6.edge_label(0, 1), &set(&[0, 1, 2, 3]));
        assert_eq!(k6.edge_label(0, 2), &set(&[0, 4, 5, 6]));
        assert_eq!(k6.edge_label(1, 2), &set(&[0, 7, 8, 9]));
    }

    #[test]
    fn verify_rejects_wrong_parameters() {
        let k6 = build_k6();
        let e = design_e(&k6);
        assert!(verify_design(&e, 2, 10, 4, 2).holds);
        let bad = verify_design(&e, 3, 10, 4, 1);
        assert!(!bad.holds);
        assert!(bad.counterexample.is_some());
    }

    #[test]
    fn point_names() {
        assert_eq!(point_name(0), "A");
        assert_eq!(point_name(15), "9");
        assert_eq!(point_name(21), "Z");
    }
}
