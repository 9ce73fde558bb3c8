//! Automorphisms, isomorphisms and canonical forms of pure complexes.
//!
//! The search individualizes one vertex at a time and refines the vertex
//! colouring by facet incidences until it is discrete; every discrete
//! colouring is a candidate labelling. The least relabelled facet list over
//! all candidates is the canonical form. Two candidates with the same
//! relabelled facet list differ by an automorphism, which is recorded and
//! used to prune equivalent branches.
//!
//! Group orders come from a Schreier-Sims chain over the generators found,
//! independent of the search itself.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::complex::{Simplex, SimplicialComplex, Vertex, VertexMap};

/// A vertex permutation. Points not stored are fixed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    map: VertexMap,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation::default()
    }

    /// Builds a permutation from a bijective map; fixed points are dropped.
    pub fn from_map(map: VertexMap) -> Option<Self> {
        let images: BTreeSet<Vertex> = map.values().copied().collect();
        let domain: BTreeSet<Vertex> = map.keys().copied().collect();
        if images != domain {
            return None;
        }
        Some(Permutation { map: map.into_iter().filter(|(a, b)| a != b).collect() })
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(cycles: &[Vec<Vertex>]) -> Option<Self> {
        let mut map = VertexMap::new();
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                if map.insert(v, cycle[(i + 1) % cycle.len()]).is_some() {
                    return None;
                }
            }
        }
        Permutation::from_map(map)
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        *self.map.get(&v).unwrap_or(&v)
    }

    pub fn apply_simplex(&self, s: &Simplex) -> Simplex {
        s.map(|v| self.apply(v)).expect("permutations are injective")
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_map(&self) -> &VertexMap {
        &self.map
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        let points: BTreeSet<Vertex> = self.map.keys().chain(other.map.keys()).copied().collect();
        Permutation::from_map(points.into_iter().map(|v| (v, other.apply(self.apply(v)))).collect())
            .expect("composition of bijections")
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { map: self.map.iter().map(|(&a, &b)| (b, a)).collect() }
    }

    /// Nontrivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.map.keys() {
            if !seen.insert(start) {
                continue;
            }
            let mut cycle = vec![start];
            let mut v = self.apply(start);
            while v != start {
                seen.insert(v);
                cycle.push(v);
                v = self.apply(v);
            }
            out.push(cycle);
        }
        out
    }

    /// Whether the permutation maps the facet set of `complex` onto itself.
    pub fn is_automorphism_of(&self, complex: &SimplicialComplex) -> bool {
        complex.facets().iter().all(|f| complex.has_facet(&self.apply_simplex(f)))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("()");
        }
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Automorphism group of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
    pub vertex_orbits: Vec<Vec<Vertex>>,
    pub facet_orbits: Vec<Vec<Simplex>>,
}

impl PermGroup {
    /// Orbit sizes, ascending.
    pub fn vertex_orbit_sizes(&self) -> Vec<usize> {
        sorted_sizes(&self.vertex_orbits)
    }

    pub fn facet_orbit_sizes(&self) -> Vec<usize> {
        sorted_sizes(&self.facet_orbits)
    }

    /// All elements, or `None` when there are more than `limit`.
    pub fn elements(&self, limit: usize) -> Option<Vec<Permutation>> {
        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        let mut frontier = vec![Permutation::identity()];
        seen.insert(Permutation::identity());
        while let Some(p) = frontier.pop() {
            for g in &self.generators {
                let q = p.then(g);
                if seen.insert(q.clone()) {
                    if seen.len() > limit {
                        return None;
                    }
                    frontier.push(q);
                }
            }
        }
        Some(seen.into_iter().collect())
    }

    /// Recounts the group by enumerating its elements when it has at most
    /// `limit` of them; `None` when it is larger.
    pub fn verify_order(&self, limit: usize) -> Option<bool> {
        self.elements(limit).map(|e| BigUint::from(e.len()) == self.order)
    }
}

fn sorted_sizes<T>(parts: &[Vec<T>]) -> Vec<usize> {
    let mut s: Vec<usize> = parts.iter().map(Vec::len).collect();
    s.sort_unstable();
    s
}

/// Order of the group generated by `generators` on the given points, by
/// Schreier-Sims.
pub fn group_order(points: &[Vertex], generators: &[Permutation]) -> BigUint {
    let index: BTreeMap<Vertex, usize> = points.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let gens: Vec<Vec<usize>> = generators
        .iter()
        .map(|g| points.iter().map(|&v| index[&g.apply(v)]).collect())
        .collect();
    let chain = StabChain::new(points.len(), &gens);
    chain.order()
}

/// Base and strong generating set, one level per base point.
struct StabChain {
    n: usize,
    levels: Vec<Level>,
}

struct Level {
    point: usize,
    gens: Vec<Vec<usize>>,
    /// `trans[q]` maps `point` to `q`.
    trans: Vec<Option<Vec<usize>>>,
}

/// `a` followed by `b`.
fn mul(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&x| b[x]).collect()
}

fn inv(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

fn is_id(a: &[usize]) -> bool {
    a.iter().enumerate().all(|(i, &x)| i == x)
}

impl StabChain {
    fn new(n: usize, gens: &[Vec<usize>]) -> Self {
        let mut chain = StabChain { n, levels: Vec::new() };
        for g in gens {
            chain.insert(0, g.clone());
        }
        chain
    }

    fn order(&self) -> BigUint {
        self.levels
            .iter()
            .map(|l| BigUint::from(l.trans.iter().filter(|t| t.is_some()).count()))
            .fold(BigUint::one(), |a, b| a * b)
    }

    /// Strips `g` through the levels from `from` on; returns the residue and
    /// the level where it stuck.
    fn sift(&self, mut g: Vec<usize>, from: usize) -> (Vec<usize>, usize) {
        for i in from..self.levels.len() {
            let level = &self.levels[i];
            match &level.trans[g[level.point]] {
                Some(u) => g = mul(&g, &inv(u)),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    /// Adds `g` (fixing the base points above `i`) to the group at level `i`.
    fn insert(&mut self, i: usize, g: Vec<usize>) {
        let (h, _) = self.sift(g, i);
        if is_id(&h) {
            return;
        }
        if i == self.levels.len() {
            let point = (0..self.n).find(|&x| h[x] != x).expect("non-identity");
            let mut trans = vec![None; self.n];
            trans[point] = Some((0..self.n).collect());
            self.levels.push(Level { point, gens: Vec::new(), trans });
        }
        self.levels[i].gens.push(h);
        self.close_level(i);
    }

    /// Recomputes the orbit at level `i` and pushes every Schreier
    /// generator down.
    fn close_level(&mut self, i: usize) {
        let point = self.levels[i].point;
        let mut trans: Vec<Option<Vec<usize>>> = vec![None; self.n];
        trans[point] = Some((0..self.n).collect());
        let mut queue = vec![point];
        while let Some(p) = queue.pop() {
            for s in &self.levels[i].gens {
                let q = s[p];
                if trans[q].is_none() {
                    trans[q] = Some(mul(trans[p].as_ref().expect("visited"), s));
                    queue.push(q);
                }
            }
        }
        self.levels[i].trans = trans;
        let orbit: Vec<usize> = (0..self.n).filter(|&q| self.levels[i].trans[q].is_some()).collect();
        let gens = self.levels[i].gens.clone();
        for p in orbit {
            for s in &gens {
                let up = self.levels[i].trans[p].clone().expect("in orbit");
                let usp = self.levels[i].trans[s[p]].clone().expect("orbit closed");
                let schreier = mul(&mul(&up, s), &inv(&usp));
                let (h, _) = self.sift(schreier, i + 1);
                if !is_id(&h) {
                    self.insert(i + 1, h);
                }
            }
        }
    }
}

/// Facet incidences on vertex indices `0..n`.
struct Incidence {
    vertices: Vec<Vertex>,
    facets: Vec<Vec<u32>>,
    vertex_facets: Vec<Vec<usize>>,
}

impl Incidence {
    fn new(complex: &SimplicialComplex) -> Self {
        let vertices = complex.vertices().to_vec();
        let index: BTreeMap<Vertex, u32> = vertices.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        let facets: Vec<Vec<u32>> =
            complex.facets().iter().map(|f| f.vertices().iter().map(|v| index[v]).collect()).collect();
        let mut vertex_facets = vec![Vec::new(); vertices.len()];
        for (i, f) in facets.iter().enumerate() {
            for &v in f {
                vertex_facets[v as usize].push(i);
            }
        }
        Incidence { vertices, facets, vertex_facets }
    }

    fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Relabelled facet list, flattened, under a discrete colouring.
    fn certificate(&self, colors: &[u32]) -> Vec<u32> {
        let mut fs: Vec<Vec<u32>> = self
            .facets
            .iter()
            .map(|f| {
                let mut g: Vec<u32> = f.iter().map(|&v| colors[v as usize]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        fs.sort_unstable();
        fs.concat()
    }
}

fn mix(h: u64, x: u64) -> u64 {
    let mut z = (h ^ x).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn hash_seq(xs: impl IntoIterator<Item = u64>) -> u64 {
    xs.into_iter().fold(0x51_7cc1_b727_220a, mix)
}

fn cell_count(colors: &[u32]) -> usize {
    colors.iter().collect::<BTreeSet<_>>().len()
}

/// Refines an ordered partition (colour = index of the cell's first
/// position) until facet incidences split nothing further. The result
/// depends only on the colouring, not on vertex ids.
fn refine(inc: &Incidence, colors: &mut [u32]) {
    let mut cells = cell_count(colors);
    loop {
        let facet_hash: Vec<u64> = inc
            .facets
            .iter()
            .map(|f| {
                let mut c: Vec<u32> = f.iter().map(|&v| colors[v as usize]).collect();
                c.sort_unstable();
                hash_seq(c.into_iter().map(u64::from))
            })
            .collect();
        let sig: Vec<(u32, u64)> = (0..inc.n())
            .map(|v| {
                let mut hs: Vec<u64> = inc.vertex_facets[v].iter().map(|&f| facet_hash[f]).collect();
                hs.sort_unstable();
                (colors[v], hash_seq(hs))
            })
            .collect();
        let mut sorted = sig.clone();
        sorted.sort_unstable();
        for v in 0..inc.n() {
            colors[v] = sorted.partition_point(|s| *s < sig[v]) as u32;
        }
        let now = cell_count(colors);
        if now == cells {
            return;
        }
        cells = now;
    }
}

struct Search<'a> {
    inc: &'a Incidence,
    first: Option<(Vec<u32>, Vec<u32>)>,
    best: Option<(Vec<u32>, Vec<u32>)>,
    first_path: Vec<u32>,
    /// Automorphisms on vertex indices.
    generators: Vec<Vec<u32>>,
    /// Orbit size of the first-path child at each depth.
    orbit_sizes: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(inc: &'a Incidence) -> Self {
        Search { inc, first: None, best: None, first_path: Vec::new(), generators: Vec::new(), orbit_sizes: Vec::new() }
    }

    fn run(&mut self) {
        let mut colors = vec![0u32; self.inc.n()];
        refine(self.inc, &mut colors);
        self.visit(colors, &mut Vec::new(), true);
    }

    /// Returns `Some(depth)` to unwind to the node at that depth.
    fn visit(&mut self, colors: Vec<u32>, path: &mut Vec<u32>, on_first: bool) -> Option<usize> {
        let n = self.inc.n();
        let Some(target) = target_cell(&colors) else {
            return self.leaf(&colors, path);
        };
        let cell: Vec<u32> = (0..n as u32).filter(|&v| colors[v as usize] == target).collect();
        let mut tried: Vec<u32> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() {
                let orbit_of = self.orbit_fn(path);
                if tried.iter().any(|&t| orbit_of(t) == orbit_of(v)) {
                    continue;
                }
            }
            let child_first = on_first && tried.is_empty();
            tried.push(v);
            let mut child = colors.clone();
            for &w in &cell {
                if w != v {
                    child[w as usize] = target + 1;
                }
            }
            refine(self.inc, &mut child);
            path.push(v);
            if child_first {
                self.first_path.push(v);
            }
            let unwind = self.visit(child, path, child_first);
            path.pop();
            if let Some(depth) = unwind {
                if depth < path.len() {
                    return Some(depth);
                }
            }
        }
        if on_first {
            let first_child = tried[0];
            let orbit_of = self.orbit_fn(path);
            let root = orbit_of(first_child);
            let size = (0..n as u32).filter(|&w| orbit_of(w) == root).count();
            let depth = path.len();
            if self.orbit_sizes.len() <= depth {
                self.orbit_sizes.resize(depth + 1, 1);
            }
            self.orbit_sizes[depth] = size;
        }
        None
    }

    fn leaf(&mut self, colors: &[u32], path: &[u32]) -> Option<usize> {
        let cert = self.inc.certificate(colors);
        let lab = colors.to_vec();
        let Some((first_cert, first_lab)) = &self.first else {
            self.first = Some((cert.clone(), lab.clone()));
            self.best = Some((cert, lab));
            return None;
        };
        if cert == *first_cert {
            let g = automorphism(first_lab, &lab);
            self.generators.push(g);
            let diverge = path.iter().zip(&self.first_path).position(|(a, b)| a != b).unwrap_or(path.len());
            return Some(diverge);
        }
        let (best_cert, best_lab) = self.best.as_ref().expect("set with first");
        match cert.cmp(best_cert) {
            core::cmp::Ordering::Less => self.best = Some((cert, lab)),
            core::cmp::Ordering::Equal => {
                let g = automorphism(best_lab, &lab);
                self.generators.push(g);
            }
            core::cmp::Ordering::Greater => {}
        }
        None
    }

    /// Orbit representative under the generators fixing `path` pointwise.
    fn orbit_fn(&self, path: &[u32]) -> impl Fn(u32) -> u32 {
        let n = self.inc.n();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for g in &self.generators {
            if path.iter().all(|&p| g[p as usize] == p) {
                for x in 0..n as u32 {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, g[x as usize]));
                    if a != b {
                        parent[a.max(b) as usize] = a.min(b);
                    }
                }
            }
        }
        let roots: Vec<u32> = (0..n as u32).map(|x| find(&mut parent, x)).collect();
        move |x| roots[x as usize]
    }
}

/// The vertex permutation taking labelling `from` to labelling `to`:
/// `g(v) = from⁻¹(to(v))`.
fn automorphism(from: &[u32], to: &[u32]) -> Vec<u32> {
    let mut from_inv = vec![0u32; from.len()];
    for (v, &c) in from.iter().enumerate() {
        from_inv[c as usize] = v as u32;
    }
    to.iter().map(|&c| from_inv[c as usize]).collect()
}

/// First non-singleton cell in colour order.
fn target_cell(colors: &[u32]) -> Option<u32> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in colors {
        *counts.entry(c).or_default() += 1;
    }
    counts.into_iter().find(|&(_, k)| k > 1).map(|(c, _)| c)
}

/// Canonical representative of a complex's isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Facets on vertices `1..=n`, sorted.
    pub facets: Vec<Simplex>,
    /// Original vertex to canonical vertex.
    pub labeling: VertexMap,
}

impl CanonicalForm {
    pub fn complex(&self) -> SimplicialComplex {
        SimplicialComplex::new(self.facets.iter().cloned()).expect("relabelling of a pure complex")
    }
}

struct Outcome {
    form: CanonicalForm,
    generators: Vec<Permutation>,
    search_order: BigUint,
}

fn analyse(complex: &SimplicialComplex) -> Outcome {
    let inc = Incidence::new(complex);
    let mut search = Search::new(&inc);
    search.run();
    let (_, lab) = search.best.as_ref().expect("a leaf exists");
    let labeling: VertexMap = inc.vertices.iter().zip(lab).map(|(&v, &c)| (v, c + 1)).collect();
    let facets = complex.relabel(&labeling).expect("labelling is a bijection").facets().to_vec();
    let generators = search
        .generators
        .iter()
        .map(|g| {
            let map = (0..inc.n()).map(|i| (inc.vertices[i], inc.vertices[g[i] as usize])).collect();
            Permutation::from_map(map).expect("bijection")
        })
        .filter(|p| !p.is_identity())
        .collect();
    let search_order = search.orbit_sizes.iter().fold(BigUint::one(), |a, &s| a * BigUint::from(s));
    Outcome { form: CanonicalForm { facets, labeling }, generators, search_order }
}

/// Canonical form: equal for two complexes iff they are isomorphic.
pub fn canonical_form(complex: &SimplicialComplex) -> CanonicalForm {
    analyse(complex).form
}

/// The full automorphism group with vertex and facet orbits.
pub fn automorphism_group(complex: &SimplicialComplex) -> PermGroup {
    let outcome = analyse(complex);
    for g in &outcome.generators {
        assert!(g.is_automorphism_of(complex), "search produced a non-automorphism {g}");
    }
    let order = group_order(complex.vertices(), &outcome.generators);
    assert_eq!(order, outcome.search_order, "stabilizer chain and search disagree on the group order");
    let vertex_orbits = orbits(complex.vertices(), &outcome.generators, |g, v| g.apply(*v));
    let facet_orbits = orbits(complex.facets(), &outcome.generators, |g, f| g.apply_simplex(f));
    PermGroup { generators: outcome.generators, order, vertex_orbits, facet_orbits }
}

/// Orbits of the facets of `complex` under the group generated by `gens`.
pub fn facet_orbits(complex: &SimplicialComplex, gens: &[Permutation]) -> Vec<Vec<Simplex>> {
    orbits(complex.facets(), gens, |g, s| g.apply_simplex(s))
}

fn orbits<T: Ord + Clone>(items: &[T], gens: &[Permutation], act: impl Fn(&Permutation, &T) -> T) -> Vec<Vec<T>> {
    let mut seen: BTreeSet<T> = BTreeSet::new();
    let mut out = Vec::new();
    for x in items {
        if seen.contains(x) {
            continue;
        }
        let mut orbit = vec![x.clone()];
        seen.insert(x.clone());
        let mut i = 0;
        while i < orbit.len() {
            for g in gens {
                let y = act(g, &orbit[i]);
                if seen.insert(y.clone()) {
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort();
        out.push(orbit);
    }
    out
}

/// A vertex bijection carrying the facets of `a` onto those of `b`.
pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<VertexMap> {
    if a.n_vertices() != b.n_vertices() || a.n_facets() != b.n_facets() || a.facet_size() != b.facet_size() {
        return None;
    }
    let ca = canonical_form(a);
    let cb = canonical_form(b);
    if ca.facets != cb.facets {
        return None;
    }
    let back: BTreeMap<Vertex, Vertex> = cb.labeling.iter().map(|(&v, &c)| (c, v)).collect();
    Some(ca.labeling.iter().map(|(&v, c)| (v, back[c])).collect())
}

/// Whether `map` carries the facets of `a` exactly onto those of `b`.
pub fn is_isomorphism(a: &SimplicialComplex, b: &SimplicialComplex, map: &VertexMap) -> bool {
    a.n_facets() == b.n_facets()
        && a.facets().iter().all(|f| f.map(|v| *map.get(&v).unwrap_or(&0)).is_some_and(|g| b.has_facet(&g)))
}

/// Cycle notation such as `(1 2 3)(4 5)`.
pub fn format_cycles(p: &Permutation) -> String {
    alloc::format!("{p}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cross_polytope_boundary, simplex_boundary};
    use alloc::string::ToString;

    #[test]
    fn permutation_basics() {
        let p = Permutation::from_cycles(&[vec![1, 2, 3], vec![4, 5]]).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(p.then(&p.inverse()), Permutation::identity());
        assert!(Permutation::from_cycles(&[vec![1, 2], vec![2, 3]]).is_none());
    }

    #[test]
    fn schreier_sims_symmetric_group() {
        let pts = [1, 2, 3, 4, 5, 6];
        let gens = [
            Permutation::from_cycles(&[vec![1, 2]]).unwrap(),
            Permutation::from_cycles(&[vec![1, 2, 3, 4, 5, 6]]).unwrap(),
        ];
        assert_eq!(group_order(&pts, &gens), BigUint::from(720u32));
    }

    #[test]
    fn simplex_and_cross_polytope_groups() {
        let g = automorphism_group(&simplex_boundary(5));
        assert_eq!(g.order, BigUint::from(720u32));
        assert_eq!(g.verify_order(10_000), Some(true));
        let h = automorphism_group(&cross_polytope_boundary(4));
        assert_eq!(h.order, BigUint::from(384u32));
        assert_eq!(h.vertex_orbit_sizes(), [8]);
        assert_eq!(h.verify_order(10_000), Some(true));
    }

    #[test]
    fn relabelled_complexes_are_isomorphic() {
        let c = cross_polytope_boundary(3);
        let map: VertexMap = [(1, 6), (2, 4), (3, 1), (4, 5), (5, 2), (6, 3)].into_iter().collect();
        let d = c.relabel(&map).unwrap();
        assert_eq!(canonical_form(&c).facets, canonical_form(&d).facets);
        let iso = are_isomorphic(&c, &d).unwrap();
        assert!(is_isomorphism(&c, &d, &iso));
        assert!(are_isomorphic(&simplex_boundary(4), &cross_polytope_boundary(4)).is_none());
    }
}
