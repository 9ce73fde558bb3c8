//! Pure abstract simplicial complexes stored by their facets.
//!
//! Vertices are plain positive integers; any geometric meaning (a point of
//! `R^6`, a vertex of `K_6`) lives only in the optional label table. Faces
//! are enumerated on demand rather than cached: every complex this crate
//! builds has at most a few thousand facets.

mod generators;
mod involution;
mod simplex;

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use generators::{barycentric_subdivision, cross_polytope_boundary, simplex_boundary};
pub use involution::Involution;
pub(crate) use simplex::Combinations;
pub use simplex::Simplex;

/// Vertex identifier. Normalized complexes use `1..=n`.
pub type Vertex = u32;

/// A vertex relabeling or bijection.
pub type VertexMap = BTreeMap<Vertex, Vertex>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexError {
    /// A complex needs at least one facet.
    NoFacets,
    RepeatedVertex(Vertex),
    /// Vertex 0 is reserved; ids are 1-based.
    ZeroVertex,
    /// Facets of different sizes; only pure complexes are supported.
    NotPure { expected: usize, found: usize },
    DimensionOutOfRange { k: usize, dim: isize },
    FaceNotPresent(Simplex),
    UnknownVertex(Vertex),
    OverlappingJoin(Vertex),
    /// A vertex map sent two vertices of this facet to the same vertex.
    DegenerateImage(Simplex),
    /// A vertex map is not injective where it had to be.
    NotBijective(Vertex),
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::NoFacets => f.write_str("complex has no facets"),
            ComplexError::RepeatedVertex(v) => write!(f, "vertex {v} repeated in a simplex"),
            ComplexError::ZeroVertex => f.write_str("vertex ids start at 1"),
            ComplexError::NotPure { expected, found } => {
                write!(f, "complex is not pure: facet with {found} vertices, expected {expected}")
            }
            ComplexError::DimensionOutOfRange { k, dim } => {
                write!(f, "face dimension {k} out of range for a {dim}-dimensional complex")
            }
            ComplexError::FaceNotPresent(s) => write!(f, "{s} is not a face of the complex"),
            ComplexError::UnknownVertex(v) => write!(f, "vertex {v} is not in the complex"),
            ComplexError::OverlappingJoin(v) => write!(f, "join factors share vertex {v}"),
            ComplexError::DegenerateImage(s) => write!(f, "facet {s} collapses under the vertex map"),
            ComplexError::NotBijective(v) => write!(f, "vertex map is not injective at {v}"),
        }
    }
}

/// Face counts `(f_0, ..., f_d)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Alternating sum `f_0 - f_1 + f_2 - ...`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl<const N: usize> PartialEq<[usize; N]> for FVector {
    fn eq(&self, other: &[usize; N]) -> bool {
        self.0 == other[..]
    }
}

/// Graph distance in the 1-skeleton. Disconnected pairs are `Infinite`,
/// which orders above every finite distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// A pure simplicial complex given by its facets.
///
/// Facets are kept sorted and deduplicated; all have the same number of
/// vertices, so the facet set is automatically an antichain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    facets: Vec<Simplex>,
    vertices: Vec<Vertex>,
    labels: BTreeMap<Vertex, String>,
}

impl SimplicialComplex {
    pub fn new(facets: impl IntoIterator<Item = Simplex>) -> Result<Self, ComplexError> {
        let mut facets: Vec<Simplex> = facets.into_iter().collect();
        let Some(first) = facets.first() else {
            return Err(ComplexError::NoFacets);
        };
        let size = first.len();
        if let Some(bad) = facets.iter().find(|s| s.len() != size) {
            return Err(ComplexError::NotPure { expected: size, found: bad.len() });
        }
        if facets.iter().any(|s| s.vertices().first() == Some(&0)) {
            return Err(ComplexError::ZeroVertex);
        }
        facets.sort_unstable();
        facets.dedup();
        let vertices: BTreeSet<Vertex> = facets.iter().flat_map(|s| s.vertices().iter().copied()).collect();
        Ok(SimplicialComplex { facets, vertices: vertices.into_iter().collect(), labels: BTreeMap::new() })
    }

    /// Convenience constructor from raw vertex lists.
    pub fn from_lists<I, J>(facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = Vertex>,
    {
        let simplices = facets.into_iter().map(Simplex::new).collect::<Result<Vec<_>, _>>()?;
        Self::new(simplices)
    }

    /// The complex whose only face is the empty simplex (dimension -1).
    pub fn void_face() -> Self {
        SimplicialComplex { facets: vec![Simplex::empty()], vertices: Vec::new(), labels: BTreeMap::new() }
    }

    pub fn with_labels(mut self, labels: BTreeMap<Vertex, String>) -> Self {
        self.labels = labels.into_iter().filter(|(v, _)| self.vertices.binary_search(v).is_ok()).collect();
        self
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) {
        if self.vertices.binary_search(&v).is_ok() {
            self.labels.insert(v, label.into());
        }
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// Label of `v`, falling back to its id.
    pub fn display_label(&self, v: Vertex) -> String {
        self.label(v).map_or_else(|| format!("{v}"), String::from)
    }

    /// Looks a vertex up by label.
    pub fn vertex_with_label(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().find(|(_, l)| l.as_str() == label).map(|(&v, _)| v)
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_facets(&self) -> usize {
        self.facets.len()
    }

    /// Number of vertices per facet.
    pub fn facet_size(&self) -> usize {
        self.facets[0].len()
    }

    pub fn dim(&self) -> isize {
        self.facet_size() as isize - 1
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn has_facet(&self, s: &Simplex) -> bool {
        self.facets.binary_search(s).is_ok()
    }

    pub fn is_face(&self, s: &Simplex) -> bool {
        if s.len() == self.facet_size() {
            return self.has_facet(s);
        }
        self.facets.iter().any(|f| s.is_subset(f))
    }

    /// Whether the vertex ids are exactly `1..=n`.
    pub fn is_normalized(&self) -> bool {
        self.vertices.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// All faces with `k + 1` vertices, by expanding every facet.
    pub fn faces(&self, k: usize) -> Result<BTreeSet<Simplex>, ComplexError> {
        if k as isize > self.dim() {
            return Err(ComplexError::DimensionOutOfRange { k, dim: self.dim() });
        }
        Ok(self.facets.iter().flat_map(|f| f.subsets(k + 1)).collect())
    }

    /// Every face of dimension `0..=d`, built top-down: each level is the
    /// set of codimension-one faces of the level above. Index `k` holds the
    /// `k`-faces. This is an independent route to [`Self::faces`].
    pub fn face_lattice(&self) -> Vec<BTreeSet<Simplex>> {
        let size = self.facet_size();
        let mut levels: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); size];
        if size == 0 {
            return levels;
        }
        levels[size - 1] = self.facets.iter().cloned().collect();
        for k in (0..size - 1).rev() {
            let next: BTreeSet<Simplex> = levels[k + 1].iter().flat_map(|s| s.boundary_faces()).collect();
            levels[k] = next;
        }
        levels
    }

    pub fn f_vector(&self) -> FVector {
        let size = self.facet_size();
        FVector((0..size).map(|k| self.facets.iter().flat_map(|f| f.subsets(k + 1)).collect::<BTreeSet<_>>().len()).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// Facets containing `face`.
    pub fn star_facets<'a>(&'a self, face: &'a Simplex) -> impl Iterator<Item = &'a Simplex> + 'a {
        self.facets.iter().filter(move |f| face.is_subset(f))
    }

    /// The link of `face`: all simplices disjoint from it whose union with it
    /// is a face. Its facets are `F \ face` for facets `F` containing `face`.
    pub fn link(&self, face: &Simplex) -> Result<SimplicialComplex, ComplexError> {
        let facets: Vec<Simplex> = self.star_facets(face).map(|f| f.difference(face)).collect();
        if facets.is_empty() {
            return Err(ComplexError::FaceNotPresent(face.clone()));
        }
        if facets[0].is_empty() {
            return Ok(SimplicialComplex::void_face());
        }
        Ok(SimplicialComplex::new(facets)?.with_labels(self.labels.clone()))
    }

    /// Link of a single vertex.
    pub fn vertex_link(&self, v: Vertex) -> Result<SimplicialComplex, ComplexError> {
        if !self.has_vertex(v) {
            return Err(ComplexError::UnknownVertex(v));
        }
        self.link(&Simplex::from_sorted(vec![v]))
    }

    /// The join `self * other`; the vertex sets must be disjoint.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        if let Some(&v) = self.vertices.iter().find(|v| other.has_vertex(**v)) {
            return Err(ComplexError::OverlappingJoin(v));
        }
        let facets = self.facets.iter().flat_map(|a| other.facets.iter().map(move |b| a.union(b)));
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|(k, v)| (*k, v.clone())));
        Ok(SimplicialComplex::new(facets)?.with_labels(labels))
    }

    /// Ridges lying in exactly one facet, as a complex; `None` for a
    /// complex without boundary.
    pub fn boundary(&self) -> Option<SimplicialComplex> {
        let mut count: BTreeMap<Simplex, usize> = BTreeMap::new();
        for f in &self.facets {
            for r in f.boundary_faces() {
                *count.entry(r).or_default() += 1;
            }
        }
        let ridges: Vec<Simplex> = count.into_iter().filter(|&(_, n)| n == 1).map(|(r, _)| r).collect();
        if ridges.is_empty() {
            return None;
        }
        Some(SimplicialComplex::new(ridges).expect("ridges of a pure complex").with_labels(self.labels.clone()))
    }

    /// Neighbours of each vertex in the 1-skeleton.
    pub fn adjacency(&self) -> BTreeMap<Vertex, BTreeSet<Vertex>> {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = self.vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
        for f in &self.facets {
            for &a in f.vertices() {
                let entry = adj.get_mut(&a).expect("facet vertex is a vertex");
                entry.extend(f.vertices().iter().copied().filter(|&b| b != a));
            }
        }
        adj
    }

    /// Breadth-first distances from `u` to every reachable vertex.
    pub fn distances_from(&self, u: Vertex) -> Result<BTreeMap<Vertex, u32>, ComplexError> {
        if !self.has_vertex(u) {
            return Err(ComplexError::UnknownVertex(u));
        }
        Ok(bfs(&self.adjacency(), u))
    }

    pub fn skeleton_distance(&self, u: Vertex, v: Vertex) -> Result<Distance, ComplexError> {
        if !self.has_vertex(v) {
            return Err(ComplexError::UnknownVertex(v));
        }
        let dist = self.distances_from(u)?;
        Ok(dist.get(&v).map_or(Distance::Infinite, |&d| Distance::Finite(d)))
    }

    /// Image of the complex under a vertex map (vertices missing from the
    /// map are fixed). Facets may merge; a facet losing a vertex is an error.
    pub fn image(&self, map: &VertexMap) -> Result<SimplicialComplex, ComplexError> {
        let apply = |v: Vertex| *map.get(&v).unwrap_or(&v);
        let facets = self
            .facets
            .iter()
            .map(|f| f.map(apply).ok_or_else(|| ComplexError::DegenerateImage(f.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        SimplicialComplex::new(facets)
    }

    /// Relabels vertices through an injective map; labels follow their
    /// vertices.
    pub fn relabel(&self, map: &VertexMap) -> Result<SimplicialComplex, ComplexError> {
        let mut seen = BTreeSet::new();
        for &v in &self.vertices {
            let w = *map.get(&v).unwrap_or(&v);
            if !seen.insert(w) {
                return Err(ComplexError::NotBijective(v));
            }
        }
        let out = self.image(map)?;
        let labels = self.labels.iter().map(|(v, l)| (*map.get(v).unwrap_or(v), l.clone())).collect();
        Ok(out.with_labels(labels))
    }

    /// Renumbers the vertices `1..=n` in increasing order of their old ids.
    /// Returns the renumbered complex and the old-to-new map.
    pub fn normalize(&self) -> (SimplicialComplex, VertexMap) {
        let map: VertexMap = self.vertices.iter().enumerate().map(|(i, &v)| (v, i as Vertex + 1)).collect();
        let out = self.relabel(&map).expect("order-preserving renumbering is injective");
        (out, map)
    }

    /// Quotient by a fixed-point-free, facet-invariant, link-separating
    /// involution. The result is renumbered `1..=n`; orbit `{v, σ(v)}` with
    /// `v < σ(v)` becomes a single vertex labelled `"a/b"` from the labels
    /// (or ids) of `v` and `σ(v)`.
    pub fn quotient(&self, inv: &Involution) -> Result<SimplicialComplex, QuotientError> {
        self.quotient_with_map(inv).map(|(c, _)| c)
    }

    /// [`Self::quotient`], also returning the map from old vertices to
    /// quotient vertices.
    pub fn quotient_with_map(&self, inv: &Involution) -> Result<(SimplicialComplex, VertexMap), QuotientError> {
        for &v in &self.vertices {
            let w = inv.apply(v);
            if w == v {
                return Err(QuotientError::HasFixedPoint(v));
            }
            if !self.has_vertex(w) {
                return Err(QuotientError::UnknownVertex(w));
            }
        }
        if let Some(f) = self.facets.iter().find(|f| !self.has_facet(&inv.apply_simplex(f))) {
            return Err(QuotientError::NotInvariant(f.clone()));
        }
        let adj = self.adjacency();
        for &v in &self.vertices {
            let w = inv.apply(v);
            if v < w {
                let dist = bfs(&adj, v);
                if let Some(&d) = dist.get(&w) {
                    if d < 3 {
                        return Err(QuotientError::NotLinkSeparating { vertex: v, image: w, distance: d });
                    }
                }
            }
        }
        let reps: Vec<Vertex> = self.vertices.iter().copied().filter(|&v| v < inv.apply(v)).collect();
        let new_id: BTreeMap<Vertex, Vertex> = reps.iter().enumerate().map(|(i, &v)| (v, i as Vertex + 1)).collect();
        let orbit_map: VertexMap =
            self.vertices.iter().map(|&v| (v, new_id[&v.min(inv.apply(v))])).collect();
        let out = self.image(&orbit_map).map_err(QuotientError::Complex)?;
        debug_assert_eq!(out.n_facets() * 2, self.n_facets());
        let labels = reps
            .iter()
            .map(|&v| (new_id[&v], format!("{}/{}", self.display_label(v), self.display_label(inv.apply(v)))))
            .collect();
        Ok((out.with_labels(labels), orbit_map))
    }
}

fn bfs(adj: &BTreeMap<Vertex, BTreeSet<Vertex>>, start: Vertex) -> BTreeMap<Vertex, u32> {
    let mut dist = BTreeMap::new();
    dist.insert(start, 0u32);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        for &w in &adj[&v] {
            if let alloc::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                e.insert(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Why a quotient by an involution was refused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientError {
    HasFixedPoint(Vertex),
    UnknownVertex(Vertex),
    /// The image of this facet is not a facet.
    NotInvariant(Simplex),
    /// `vertex` and its image are closer than 3 in the 1-skeleton.
    NotLinkSeparating { vertex: Vertex, image: Vertex, distance: u32 },
    Complex(ComplexError),
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::HasFixedPoint(v) => write!(f, "involution fixes vertex {v}"),
            QuotientError::UnknownVertex(v) => write!(f, "involution maps into unknown vertex {v}"),
            QuotientError::NotInvariant(s) => write!(f, "image of facet {s} is not a facet"),
            QuotientError::NotLinkSeparating { vertex, image, distance } => {
                write!(f, "vertices {vertex} and {image} are at distance {distance} < 3")
            }
            QuotientError::Complex(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri_boundary() -> SimplicialComplex {
        SimplicialComplex::from_lists([[1, 2], [2, 3], [1, 3]]).unwrap()
    }

    #[test]
    fn rejects_impure_and_empty() {
        assert_eq!(SimplicialComplex::new(Vec::new()), Err(ComplexError::NoFacets));
        let err = SimplicialComplex::from_lists([vec![1, 2, 3], vec![3, 4]]).unwrap_err();
        assert_eq!(err, ComplexError::NotPure { expected: 3, found: 2 });
        assert_eq!(SimplicialComplex::from_lists([[0, 1]]), Err(ComplexError::ZeroVertex));
    }

    #[test]
    fn faces_of_simplex_boundary() {
        let c = simplex_boundary(5);
        assert_eq!(c.faces(1).unwrap().len(), 15);
        assert_eq!(c.f_vector(), [6, 15, 20, 15, 6]);
        assert_eq!(c.euler_characteristic(), 2);
        assert_eq!(c.faces(5), Err(ComplexError::DimensionOutOfRange { k: 5, dim: 4 }));
    }

    #[test]
    fn face_lattice_matches_subset_expansion() {
        let c = cross_polytope_boundary(4);
        let lattice = c.face_lattice();
        for (k, level) in lattice.iter().enumerate() {
            assert_eq!(level, &c.faces(k).unwrap());
        }
    }

    #[test]
    fn link_of_vertex_in_simplex_boundary() {
        let c = simplex_boundary(5);
        let l = c.vertex_link(1).unwrap();
        assert_eq!(l.n_vertices(), 5);
        assert_eq!(l.n_facets(), 5);
        assert_eq!(l.f_vector(), [5, 10, 10, 5]);
        assert_eq!(c.link(&Simplex::from([1, 7])), Err(ComplexError::FaceNotPresent(Simplex::from([1, 7]))));
    }

    #[test]
    fn link_of_facet_is_void() {
        let c = tri_boundary();
        let l = c.link(&Simplex::from([1, 2])).unwrap();
        assert_eq!(l.dim(), -1);
        assert_eq!(l.n_facets(), 1);
    }

    #[test]
    fn link_composition() {
        let c = cross_polytope_boundary(4);
        let a = Simplex::from([1]);
        let b = Simplex::from([1, 3, 5]);
        let direct = c.link(&b).unwrap();
        let iterated = c.link(&a).unwrap().link(&b.difference(&a)).unwrap();
        assert_eq!(direct.facets(), iterated.facets());
    }

    #[test]
    fn joins() {
        let edge = SimplicialComplex::from_lists([[1, 2]]).unwrap();
        let square = SimplicialComplex::from_lists([[3, 4], [4, 5], [5, 6], [3, 6]]).unwrap();
        let j = edge.join(&square).unwrap();
        assert_eq!(j.n_facets(), 4);
        assert_eq!(j.dim(), 3);
        let point = SimplicialComplex::from_lists([[10]]).unwrap();
        let cone = point.join(&square).unwrap();
        assert_eq!(cone.n_facets(), square.n_facets());
        assert_eq!(cone.dim(), square.dim() + 1);
        assert_eq!(edge.join(&edge), Err(ComplexError::OverlappingJoin(1)));
    }

    #[test]
    fn boundary_of_cone() {
        let cone = SimplicialComplex::from_lists([[1, 2, 9], [2, 3, 9], [1, 3, 9]]).unwrap();
        assert_eq!(cone.boundary().unwrap(), tri_boundary());
        assert!(tri_boundary().boundary().is_none());
    }

    #[test]
    fn distances() {
        let c = simplex_boundary(5);
        assert_eq!(c.skeleton_distance(3, 3).unwrap(), Distance::Finite(0));
        assert_eq!(c.skeleton_distance(1, 6).unwrap(), Distance::Finite(1));
        let two = SimplicialComplex::from_lists([[1, 2], [3, 4]]).unwrap();
        assert_eq!(two.skeleton_distance(1, 4).unwrap(), Distance::Infinite);
        assert!(Distance::Infinite > Distance::Finite(3));
        assert_eq!(c.skeleton_distance(1, 9), Err(ComplexError::UnknownVertex(9)));
    }

    #[test]
    fn quotient_of_simplex_boundary_not_link_separating() {
        let c = simplex_boundary(5);
        let inv = Involution::from_pairs(&[(1, 2), (3, 4), (5, 6)]).unwrap();
        assert!(matches!(c.quotient(&inv), Err(QuotientError::NotLinkSeparating { .. })));
        let partial = Involution::from_pairs(&[(1, 2)]).unwrap();
        assert_eq!(c.quotient(&partial), Err(QuotientError::HasFixedPoint(3)));
    }

    #[test]
    fn normalize_renumbers() {
        let c = SimplicialComplex::from_lists([[5, 9, 12]]).unwrap();
        let (n, map) = c.normalize();
        assert!(n.is_normalized());
        assert_eq!(map[&12], 3);
    }
}
