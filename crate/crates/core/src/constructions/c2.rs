//! The construction in `R^4`: a ball around the cross-polytope, closed up
//! after identifying antipodal cube vertices.
//!
//! Vertex ids:
//!
//! | ids       | point                         | label   |
//! |-----------|-------------------------------|---------|
//! | `2i - 1`  | `+e_i`, `i = 1..=4`           | `e2`    |
//! | `2i`      | `-e_i`                        | `-e2`   |
//! | `9..=24`  | `q_ε = (ε_1, ..., ε_4)`       | `q+-++` |
//!
//! The sixteen sign vectors are numbered lexicographically with `+`
//! before `-`. `Q_e` holds the `q_ε` with `ε_1 ε_2 ε_3 ε_4 = +1`, `Q_o`
//! the others.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{expect_count, labelled, sign_char, simplex, ConstructionError, Stages};
use crate::complex::{FVector, Involution, Simplex, SimplicialComplex, Vertex, VertexMap};
use crate::manifold::{is_antipodal, is_closed_pseudomanifold, AntipodalReport};

/// Facets added by each stage.
pub const C2_STAGE_COUNTS: [usize; 6] = [8, 16, 32, 48, 36, 10];

type Signs = [i8; 4];

fn c(i: usize, s: i8) -> Vertex {
    2 * i as Vertex + if s > 0 { 1 } else { 2 }
}

fn sign_vectors() -> Vec<Signs> {
    let mut out = Vec::new();
    for bits in 0..16u8 {
        let s = |k: u8| if bits >> (3 - k) & 1 == 0 { 1 } else { -1 };
        out.push([s(0), s(1), s(2), s(3)]);
    }
    out
}

fn q(eps: Signs) -> Vertex {
    9 + sign_vectors().iter().position(|x| *x == eps).expect("sign vector") as Vertex
}

fn parity(eps: Signs) -> i8 {
    eps.iter().product()
}

fn labels() -> BTreeMap<Vertex, String> {
    let mut out = BTreeMap::new();
    for i in 0..4 {
        out.insert(c(i, 1), format!("e{}", i + 1));
        out.insert(c(i, -1), format!("-e{}", i + 1));
    }
    for eps in sign_vectors() {
        out.insert(q(eps), eps.iter().map(|&s| sign_char(s)).fold(String::from("q"), |mut a, ch| {
            a.push(ch);
            a
        }));
    }
    out
}

/// `x ↦ -x` on all 24 vertices.
fn negation() -> Involution {
    let mut pairs: Vec<(Vertex, Vertex)> = (0..4).map(|i| (c(i, 1), c(i, -1))).collect();
    for eps in sign_vectors() {
        if eps[0] > 0 {
            pairs.push((q(eps), q(eps.map(|s| -s))));
        }
    }
    Involution::from_pairs(&pairs).expect("disjoint pairs")
}

/// Which diagonal of each square of cube vertices the edge closures use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagonalChoice {
    /// `Q_o` diagonals for edges involving coordinate 1, `Q_e` elsewhere.
    Forced,
    /// `Q_e` diagonals for edges involving coordinate 1, `Q_o` elsewhere.
    Swapped,
    /// The same parity class everywhere.
    Uniform(i8),
}

impl DiagonalChoice {
    fn parity(self, involves_first: bool) -> i8 {
        match self {
            DiagonalChoice::Forced => {
                if involves_first {
                    -1
                } else {
                    1
                }
            }
            DiagonalChoice::Swapped => {
                if involves_first {
                    1
                } else {
                    -1
                }
            }
            DiagonalChoice::Uniform(p) => p,
        }
    }
}

/// Every stage of the construction.
#[derive(Clone, Debug)]
pub struct C2 {
    /// Facets added by each of the six stages.
    pub stages: Vec<Vec<Simplex>>,
    /// Boundary f-vectors after `X^(1)`, `X^(2)` and `X^(3)`.
    pub boundary_f_vectors: Vec<FVector>,
    /// The ball `X^(3)` before any identification.
    pub ball: SimplicialComplex,
    pub x3_boundary: SimplicialComplex,
    /// `x ↦ -x` on the boundary vertices.
    pub antipode: Involution,
    pub antipodal: AntipodalReport,
    pub rp4: SimplicialComplex,
}

/// The boundary of `X^(3)` and its antipodality report for a given
/// diagonal choice; used to show that the choice is forced.
pub fn c2_with_diagonals(choice: DiagonalChoice) -> Result<(SimplicialComplex, AntipodalReport), ConstructionError> {
    let labels = labels();
    let facets: Vec<Simplex> = ball_stages(choice).into_iter().flatten().collect();
    let ball = labelled(facets, &labels)?;
    let boundary = ball.boundary().ok_or(ConstructionError::NotClosed { stage: "x3 boundary" })?;
    let report = is_antipodal(&boundary, &negation());
    Ok((boundary, report))
}

fn ball_stages(choice: DiagonalChoice) -> [Vec<Simplex>; 4] {
    let signs = [1i8, -1];
    // Segment [-e1, +e1] joined with the octahedron on ±e2, ±e3, ±e4.
    let mut s0 = Vec::new();
    for &a in &signs {
        for &b in &signs {
            for &d in &signs {
                s0.push(simplex([c(0, 1), c(0, -1), c(1, a), c(2, b), c(3, d)]));
            }
        }
    }
    // Cones from each q_ε over the facet of the cross-polytope it faces.
    let s1: Vec<Simplex> =
        sign_vectors().into_iter().map(|eps| simplex((0..4).map(|i| c(i, eps[i])).chain([q(eps)]))).collect();
    // Each triangle of the cross-polytope with the two q_ε over it.
    let mut s2 = Vec::new();
    for l in 0..4 {
        let trip: Vec<usize> = (0..4).filter(|&x| x != l).collect();
        for eps in sign_vectors() {
            if eps[l] > 0 {
                let mut other = eps;
                other[l] = -1;
                s2.push(simplex(trip.iter().map(|&i| c(i, eps[i])).chain([q(eps), q(other)])));
            }
        }
    }
    // Each edge of the cross-polytope with the square of q_ε over it, cut
    // along a diagonal.
    let mut s3 = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let involves_first = i == 0;
            let want = choice.parity(involves_first);
            for &ei in &signs {
                for &ej in &signs {
                    let square: Vec<Signs> =
                        sign_vectors().into_iter().filter(|eps| eps[i] == ei && eps[j] == ej).collect();
                    let diag: Vec<Vertex> = square.iter().filter(|&&e| parity(e) == want).map(|&e| q(e)).collect();
                    for &o in square.iter().filter(|&&e| parity(e) != want) {
                        s3.push(simplex([c(i, ei), c(j, ej), diag[0], diag[1], q(o)]));
                    }
                }
            }
        }
    }
    [s0, s1, s2, s3]
}

/// Builds every stage with the forced diagonals.
pub fn c2_pipeline() -> Result<C2, ConstructionError> {
    let labels = labels();
    let names = ["x1 segment", "x1 cones", "x2 triangles", "x3 edges", "e2-e4 links", "e1 cubes"];
    let mut stages = Stages::default();
    let mut emitted = Vec::new();
    let mut boundary_f_vectors = Vec::new();
    let mut so_far: Vec<Simplex> = Vec::new();
    for (k, facets) in ball_stages(DiagonalChoice::Forced).into_iter().enumerate() {
        let added = stages.add(names[k], C2_STAGE_COUNTS[k], facets)?;
        so_far.extend(added.iter().cloned());
        emitted.push(added);
        if k >= 1 {
            let ball = labelled(so_far.iter().cloned(), &labels)?;
            let boundary = ball.boundary().ok_or(ConstructionError::NotClosed { stage: names[k] })?;
            boundary_f_vectors.push(boundary.f_vector());
        }
    }
    let ball = labelled(so_far.iter().cloned(), &labels)?;
    let x3_boundary = ball.boundary().ok_or(ConstructionError::NotClosed { stage: "x3 boundary" })?;
    let antipode = negation();
    let antipodal = is_antipodal(&x3_boundary, &antipode);
    if let Some(failure) = antipodal.failure.clone() {
        return Err(ConstructionError::NotAntipodal { stage: "x3 boundary", failure });
    }

    // Identify q_ε with q_{-ε}, keeping the smaller id.
    let qmap: VertexMap = sign_vectors().into_iter().map(|eps| (q(eps), q(eps).min(q(eps.map(|s| -s))))).collect();
    let qm = |v: Vertex| *qmap.get(&v).unwrap_or(&v);
    let mut q_labels = labels.clone();
    for eps in sign_vectors() {
        let (a, b) = (q(eps), q(eps.map(|s| -s)));
        if a < b {
            q_labels.insert(a, format!("{}/{}", labels[&a], labels[&b]));
        }
    }
    let q_ball = labelled(ball.image(&qmap)?.facets().iter().cloned(), &q_labels)?;
    expect_count("identified ball facets", ball.n_facets(), q_ball.n_facets())?;
    let q_boundary = q_ball.boundary().ok_or(ConstructionError::NotClosed { stage: "identified boundary" })?;

    let mut s4 = Vec::new();
    for i in 1..4 {
        let plus = q_boundary.vertex_link(c(i, 1))?;
        let minus = q_boundary.vertex_link(c(i, -1))?;
        if plus.facets() != minus.facets() {
            return Err(ConstructionError::LinkMismatch { stage: names[4], vertex: c(i, 1) });
        }
        expect_count("link of e_i", 12, plus.n_facets())?;
        s4.extend(plus.facets().iter().map(|t| t.with(c(i, 1)).with(c(i, -1))));
    }
    let s4 = stages.add(names[4], C2_STAGE_COUNTS[4], s4)?;

    // The cube of q_ε with ε_1 = s, cut into four corners at Q_e and the
    // central Q_o tetrahedron, coned from s e_1.
    let mut s5 = Vec::new();
    for s in [1i8, -1] {
        let cube: Vec<Signs> = sign_vectors().into_iter().filter(|e| e[0] == s).collect();
        for &u in cube.iter().filter(|&&u| parity(u) == 1) {
            let near = cube.iter().filter(|&&w| (0..4).filter(|&k| w[k] != u[k]).count() == 1);
            s5.push(simplex([c(0, s), qm(q(u))].into_iter().chain(near.map(|&w| qm(q(w))))));
        }
        s5.push(simplex([c(0, s)].into_iter().chain(cube.iter().filter(|&&w| parity(w) == -1).map(|&w| qm(q(w))))));
    }
    let s5 = stages.add(names[5], C2_STAGE_COUNTS[5], s5)?;

    let mut facets: Vec<Simplex> = q_ball.facets().to_vec();
    facets.extend(s4.iter().cloned());
    facets.extend(s5.iter().cloned());
    let closed = labelled(facets, &q_labels)?;
    expect_count("rp4 facets", 150, closed.n_facets())?;
    if !is_closed_pseudomanifold(&closed).closed {
        return Err(ConstructionError::NotClosed { stage: "rp4" });
    }
    let (rp4, _) = closed.normalize();
    expect_count("rp4 vertices", 16, rp4.n_vertices())?;
    emitted.push(s4);
    emitted.push(s5);
    Ok(C2 { stages: emitted, boundary_f_vectors, ball, x3_boundary, antipode, antipodal, rp4 })
}
