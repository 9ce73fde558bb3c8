//! Pseudomanifold, combinatorial-manifold and antipodality checks.
//!
//! Links of dimension at most two are classified exactly. Higher links are
//! screened by homology and then certified by flip reduction to a simplex
//! boundary; a link the reducer cannot shrink is reported as
//! [`LinkStatus::Unknown`], never as a non-sphere.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{Distance, Involution, Simplex, SimplicialComplex, Vertex};
use crate::flips::{self, ReduceConfig};
use crate::homology::{homology, known_homology, KnownSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudomanifoldReport {
    pub closed: bool,
    /// A ridge not lying in exactly two facets, with its facet count.
    pub bad_ridge: Option<(Simplex, usize)>,
    /// Connected components of the facet adjacency graph.
    pub components: usize,
}

/// Every ridge lies in exactly two facets and facets are connected through
/// ridges.
pub fn is_closed_pseudomanifold(complex: &SimplicialComplex) -> PseudomanifoldReport {
    let facets = complex.facets();
    let mut ridges: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
    for (i, f) in facets.iter().enumerate() {
        for r in f.boundary_faces() {
            ridges.entry(r).or_default().push(i);
        }
    }
    let bad_ridge = ridges.iter().find(|(_, fs)| fs.len() != 2).map(|(r, fs)| (r.clone(), fs.len()));

    let mut parent: Vec<usize> = (0..facets.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for fs in ridges.values() {
        for w in fs.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let components = (0..facets.len()).filter(|&i| find(&mut parent, i) == i).count();
    PseudomanifoldReport { closed: bad_ridge.is_none() && components == 1, bad_ridge, components }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkStatus {
    /// Certified combinatorial sphere.
    Sphere,
    /// Definitely not a sphere.
    NotSphere(String),
    /// Passed the cheap tests but reduction did not finish.
    Unknown,
}

impl LinkStatus {
    pub fn is_sphere(&self) -> bool {
        matches!(self, LinkStatus::Sphere)
    }
}

impl fmt::Display for LinkStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkStatus::Sphere => f.write_str("sphere"),
            LinkStatus::NotSphere(why) => write!(f, "not-sphere ({why})"),
            LinkStatus::Unknown => f.write_str("unknown"),
        }
    }
}

fn not_sphere(why: &str) -> LinkStatus {
    LinkStatus::NotSphere(String::from(why))
}

/// Decides whether `complex` is a combinatorial sphere of its dimension.
pub fn recognize_sphere(complex: &SimplicialComplex, config: &ReduceConfig) -> LinkStatus {
    let d = complex.dim();
    if d < 0 {
        return not_sphere("empty");
    }
    if d == 0 {
        return if complex.n_facets() == 2 { LinkStatus::Sphere } else { not_sphere("not two points") };
    }
    if !is_closed_pseudomanifold(complex).closed {
        return not_sphere("not a closed pseudomanifold");
    }
    if d == 1 {
        return LinkStatus::Sphere;
    }
    // A surface is a sphere iff its vertex links are circles and χ = 2.
    for &v in complex.vertices() {
        let link = complex.vertex_link(v).expect("vertex of complex");
        match recognize_sphere(&link, config) {
            LinkStatus::Sphere => {}
            LinkStatus::NotSphere(_) => return not_sphere("vertex link is not a sphere"),
            LinkStatus::Unknown => return LinkStatus::Unknown,
        }
    }
    if d == 2 {
        return if complex.euler_characteristic() == 2 { LinkStatus::Sphere } else { not_sphere("euler characteristic") };
    }
    if homology(complex) != known_homology(KnownSpace::Sphere(d as usize)) {
        return not_sphere("homology");
    }
    match flips::reduce_with_restarts(complex, config) {
        Ok(report) if report.certified => LinkStatus::Sphere,
        _ => LinkStatus::Unknown,
    }
}

/// Classifies the link of one vertex.
pub fn check_vertex_link(complex: &SimplicialComplex, v: Vertex, config: &ReduceConfig) -> LinkStatus {
    match complex.vertex_link(v) {
        Ok(link) => recognize_sphere(&link, config),
        Err(_) => not_sphere("unknown vertex"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldReport {
    pub pseudomanifold: PseudomanifoldReport,
    pub links: Vec<(Vertex, LinkStatus)>,
}

impl ManifoldReport {
    pub fn all_certified(&self) -> bool {
        self.pseudomanifold.closed && self.links.iter().all(|(_, s)| s.is_sphere())
    }
}

/// Pseudomanifold check plus a sphere test of every vertex link. Links are
/// only examined when the pseudomanifold check passes.
pub fn check_combinatorial_manifold(complex: &SimplicialComplex, config: &ReduceConfig) -> ManifoldReport {
    let pseudomanifold = is_closed_pseudomanifold(complex);
    let links = if pseudomanifold.closed {
        complex.vertices().iter().map(|&v| (v, check_vertex_link(complex, v, config))).collect()
    } else {
        Vec::new()
    };
    ManifoldReport { pseudomanifold, links }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AntipodalFailure {
    UnknownVertex(Vertex),
    FixedPoint(Vertex),
    /// The image of this facet is not a facet.
    NotInvariant(Simplex),
    TooClose { vertex: Vertex, image: Vertex, distance: Distance },
}

impl fmt::Display for AntipodalFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AntipodalFailure::UnknownVertex(v) => write!(f, "unknown-vertex {v}"),
            AntipodalFailure::FixedPoint(v) => write!(f, "fixed-point {v}"),
            AntipodalFailure::NotInvariant(s) => write!(f, "not-invariant {s}"),
            AntipodalFailure::TooClose { vertex, image, distance } => {
                write!(f, "too-close {vertex} {image} distance={distance}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodalReport {
    /// `min_v d(v, σ(v))`, when the involution is a symmetry of the complex.
    pub min_distance: Option<Distance>,
    pub failure: Option<AntipodalFailure>,
}

impl AntipodalReport {
    pub fn is_antipodal(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that `inv` is a fixed-point-free symmetry moving every vertex at
/// least distance 3 in the 1-skeleton.
pub fn is_antipodal(complex: &SimplicialComplex, inv: &Involution) -> AntipodalReport {
    let fail = |f| AntipodalReport { min_distance: None, failure: Some(f) };
    for (&v, &w) in inv.as_map() {
        for x in [v, w] {
            if !complex.has_vertex(x) {
                return fail(AntipodalFailure::UnknownVertex(x));
            }
        }
    }
    if let Some(&v) = complex.vertices().iter().find(|&&v| inv.apply(v) == v) {
        return fail(AntipodalFailure::FixedPoint(v));
    }
    if let Some(f) = complex.facets().iter().find(|f| !complex.has_facet(&inv.apply_simplex(f))) {
        return fail(AntipodalFailure::NotInvariant(f.clone()));
    }
    let mut min = Distance::Infinite;
    let mut failure = None;
    for &v in complex.vertices() {
        let w = inv.apply(v);
        let d = complex.skeleton_distance(v, w).expect("both vertices present");
        min = min.min(d);
        if d < Distance::Finite(3) && failure.is_none() {
            failure = Some(AntipodalFailure::TooClose { vertex: v, image: w, distance: d });
        }
    }
    AntipodalReport { min_distance: Some(min), failure }
}

/// Vertex links as complexes, for comparison across a quotient map.
pub fn vertex_links(complex: &SimplicialComplex) -> Vec<(Vertex, SimplicialComplex)> {
    complex.vertices().iter().map(|&v| (v, complex.vertex_link(v).expect("vertex of complex"))).collect()
}
