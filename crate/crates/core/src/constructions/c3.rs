//! The construction from the suspended cube `SQ^3` and its dual.
//!
//! Vertex ids:
//!
//! | ids       | point                                        | label   |
//! |-----------|----------------------------------------------|---------|
//! | `1..=8`   | cube vertices `v ∈ {±1}^3`                   | `v+-+`  |
//! | `9`, `10` | suspension points `(0,0,0,+1)`, `(0,0,0,-1)` | `N`, `S`|
//! | `11..=22` | dual points `d(s, i, ε)`                     | `d+2N`  |
//!
//! Cube vertices are numbered lexicographically with `+` before `-`.
//! `d(s, i, ε)` is the dual of the pyramid over the square `x_i = s` with
//! apex `N` (`ε = +1`) or `S` (`ε = -1`). `P(v) = v_1 v_2 v_3`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{expect_count, labelled, sign_char, simplex, ConstructionError, Stages};
use crate::complex::{FVector, Involution, Simplex, SimplicialComplex, Vertex, VertexMap};
use crate::manifold::{is_antipodal, is_closed_pseudomanifold, AntipodalReport};

/// Facets added by each of the nine stages.
pub const C3_STAGE_COUNTS: [usize; 9] = [24, 16, 24, 8, 12, 2, 48, 8, 8];

type Corner = [i8; 3];

fn corners() -> Vec<Corner> {
    let mut out = Vec::new();
    for bits in 0..8u8 {
        let s = |k: u8| if bits >> (2 - k) & 1 == 0 { 1 } else { -1 };
        out.push([s(0), s(1), s(2)]);
    }
    out
}

fn v(x: Corner) -> Vertex {
    1 + corners().iter().position(|c| *c == x).expect("cube vertex") as Vertex
}

fn apex(eps: i8) -> Vertex {
    if eps > 0 {
        9
    } else {
        10
    }
}

fn d(s: i8, i: usize, eps: i8) -> Vertex {
    let si = if s > 0 { 0 } else { 1 };
    let ei = if eps > 0 { 0 } else { 1 };
    11 + ((si * 3 + i) * 2 + ei) as Vertex
}

fn product(x: Corner) -> i8 {
    x.iter().product()
}

fn neg(x: Corner) -> Corner {
    x.map(|s| -s)
}

fn adjacent(a: Corner, b: Corner) -> bool {
    (0..3).filter(|&k| a[k] != b[k]).count() == 1
}

fn labels() -> BTreeMap<Vertex, String> {
    let mut out = BTreeMap::new();
    for x in corners() {
        out.insert(v(x), x.iter().fold(String::from("v"), |mut a, &s| {
            a.push(sign_char(s));
            a
        }));
    }
    out.insert(apex(1), String::from("N"));
    out.insert(apex(-1), String::from("S"));
    for s in [1i8, -1] {
        for i in 0..3 {
            for eps in [1i8, -1] {
                out.insert(d(s, i, eps), format!("d{}{}{}", sign_char(s), i + 1, if eps > 0 { 'N' } else { 'S' }));
            }
        }
    }
    out
}

/// Face lattice of the suspended cube, with the dual point of each
/// pyramid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuspendedCube {
    pub edges: Vec<Simplex>,
    /// Triangles and squares, as vertex sets.
    pub two_faces: Vec<Vec<Vertex>>,
    /// The 12 pyramids (apex over a square), as vertex sets.
    pub cells: Vec<Vec<Vertex>>,
    /// `dual_points[k]` is the dual of `cells[k]`.
    pub dual_points: Vec<Vertex>,
}

impl SuspendedCube {
    pub fn build() -> Self {
        let mut edges = Vec::new();
        let cs = corners();
        for (k, &a) in cs.iter().enumerate() {
            for &b in &cs[k + 1..] {
                if adjacent(a, b) {
                    edges.push(simplex([v(a), v(b)]));
                }
            }
            for eps in [1, -1] {
                edges.push(simplex([v(a), apex(eps)]));
            }
        }
        edges.sort();
        let mut two_faces = Vec::new();
        let mut cells = Vec::new();
        let mut dual_points = Vec::new();
        for i in 0..3 {
            for s in [1i8, -1] {
                let square: Vec<Vertex> = cs.iter().filter(|x| x[i] == s).map(|&x| v(x)).collect();
                two_faces.push(square.clone());
                for eps in [1i8, -1] {
                    let mut cell = square.clone();
                    cell.push(apex(eps));
                    cell.sort_unstable();
                    cells.push(cell);
                    dual_points.push(d(s, i, eps));
                }
            }
        }
        for (k, &a) in cs.iter().enumerate() {
            for &b in &cs[k + 1..] {
                if adjacent(a, b) {
                    for eps in [1, -1] {
                        let mut tri = alloc::vec![v(a), v(b), apex(eps)];
                        tri.sort_unstable();
                        two_faces.push(tri);
                    }
                }
            }
        }
        two_faces.sort();
        SuspendedCube { edges, two_faces, cells, dual_points }
    }

    /// Vertices of the suspended cube.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.cells.iter().flatten().copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Dual points of the cells containing `face`.
    pub fn dual(&self, face: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .cells
            .iter()
            .zip(&self.dual_points)
            .filter(|(cell, _)| face.iter().all(|x| cell.contains(x)))
            .map(|(_, &p)| p)
            .collect();
        out.sort_unstable();
        out
    }
}

/// `v ↦ -v`, `N ↔ S`, `d(s, i, ε) ↦ d(-s, i, -ε)`.
fn antipode() -> Involution {
    let mut pairs = Vec::new();
    for x in corners() {
        if x[0] > 0 {
            pairs.push((v(x), v(neg(x))));
        }
    }
    pairs.push((apex(1), apex(-1)));
    for i in 0..3 {
        for eps in [1i8, -1] {
            pairs.push((d(1, i, eps), d(-1, i, -eps)));
        }
    }
    Involution::from_pairs(&pairs).expect("disjoint pairs")
}

/// Every stage of the construction.
#[derive(Clone, Debug)]
pub struct C3 {
    pub cube: SuspendedCube,
    /// Facets added by each of the nine stages, after identification for
    /// stages 7 to 9.
    pub stages: Vec<Vec<Simplex>>,
    pub ball: SimplicialComplex,
    pub boundary: SimplicialComplex,
    pub boundary_f_vector: FVector,
    pub antipodal: AntipodalReport,
    pub rp4: SimplicialComplex,
}

/// Halves of the square `x_i = s`: its two `P = +1` corners with one of its
/// `P = -1` corners.
fn halves(i: usize, s: i8) -> Vec<Vec<Vertex>> {
    let square: Vec<Corner> = corners().into_iter().filter(|x| x[i] == s).collect();
    let plus: Vec<Vertex> = square.iter().filter(|&&x| product(x) == 1).map(|&x| v(x)).collect();
    square
        .iter()
        .filter(|&&x| product(x) == -1)
        .map(|&m| {
            let mut h = plus.clone();
            h.push(v(m));
            h
        })
        .collect()
}

pub fn c3_pipeline() -> Result<C3, ConstructionError> {
    let labels = labels();
    let cube = SuspendedCube::build();
    expect_count("suspended cube vertices", 10, cube.vertices().len())?;
    expect_count("suspended cube edges", 28, cube.edges.len())?;
    expect_count("suspended cube 2-faces", 30, cube.two_faces.len())?;
    expect_count("suspended cube cells", 12, cube.cells.len())?;
    let mut dual_set = cube.dual_points.clone();
    dual_set.sort_unstable();
    dual_set.dedup();
    expect_count("dual points", 12, dual_set.len())?;

    let mut stages = Stages::default();
    let mut emitted: Vec<Vec<Simplex>> = Vec::new();
    let apexes = [apex(1), apex(-1)];

    // Each triangle joined with its dual edge.
    let s1 = cube
        .two_faces
        .iter()
        .filter(|f| f.len() == 3)
        .map(|f| simplex(f.iter().copied().chain(cube.dual(f))))
        .collect();
    emitted.push(stages.add("triangles", C3_STAGE_COUNTS[0], s1)?);
    // Each edge through a suspension point joined with its dual triangle.
    let s2 = cube
        .edges
        .iter()
        .filter(|e| e.vertices().iter().any(|x| apexes.contains(x)))
        .map(|e| simplex(e.vertices().iter().copied().chain(cube.dual(e.vertices()))))
        .collect();
    emitted.push(stages.add("apex edges", C3_STAGE_COUNTS[1], s2)?);

    let mut s3 = Vec::new();
    let mut s5 = Vec::new();
    for i in 0..3 {
        for s in [1i8, -1] {
            for h in halves(i, s) {
                for eps in [1i8, -1] {
                    s3.push(simplex(h.iter().copied().chain([apex(eps), d(s, i, eps)])));
                }
                s5.push(simplex(h.iter().copied().chain([d(s, i, 1), d(s, i, -1)])));
            }
        }
    }
    emitted.push(stages.add("half pyramids", C3_STAGE_COUNTS[2], s3)?);

    let mut s4 = Vec::new();
    for x in corners().into_iter().filter(|&x| product(x) == -1) {
        let near: Vec<Vertex> = corners().into_iter().filter(|&y| adjacent(x, y)).map(v).collect();
        for eps in [1i8, -1] {
            s4.push(simplex([v(x), apex(eps)].into_iter().chain(near.iter().copied())));
        }
    }
    emitted.push(stages.add("cube corners", C3_STAGE_COUNTS[3], s4)?);
    emitted.push(stages.add("half squares", C3_STAGE_COUNTS[4], s5)?);

    let plus: Vec<Corner> = corners().into_iter().filter(|&x| product(x) == 1).collect();
    let s6 = [1i8, -1].iter().map(|&eps| simplex(plus.iter().map(|&x| v(x)).chain([apex(eps)]))).collect();
    emitted.push(stages.add("central tetrahedra", C3_STAGE_COUNTS[5], s6)?);

    let ball = labelled(emitted.iter().flatten().cloned(), &labels)?;
    let boundary = ball.boundary().ok_or(ConstructionError::NotClosed { stage: "ball boundary" })?;
    let boundary_f_vector = boundary.f_vector();
    let antipodal = is_antipodal(&boundary, &antipode());
    if let Some(failure) = antipodal.failure.clone() {
        return Err(ConstructionError::NotAntipodal { stage: "ball boundary", failure });
    }

    // Identify d(s, i, ε) with d(-s, i, -ε), keeping the smaller id.
    let sigma = antipode();
    let mut dmap = VertexMap::new();
    let mut d_labels = labels.clone();
    for s in [1i8, -1] {
        for i in 0..3 {
            for eps in [1i8, -1] {
                let (a, b) = (d(s, i, eps), sigma.apply(d(s, i, eps)));
                dmap.insert(a, a.min(b));
                if a < b {
                    d_labels.insert(a, format!("{}/{}", labels[&a], labels[&b]));
                }
            }
        }
    }
    let dm = |x: Vertex| *dmap.get(&x).unwrap_or(&x);
    let q_ball = labelled(ball.image(&dmap)?.facets().iter().cloned(), &d_labels)?;
    expect_count("identified ball facets", ball.n_facets(), q_ball.n_facets())?;
    let q_boundary = q_ball.boundary().ok_or(ConstructionError::NotClosed { stage: "identified boundary" })?;

    // Each cube edge [v1, v2] (P(v1) = -1) with v2 and -v2, joined with the
    // 4-cycle linking the edge in the identified boundary.
    let mut s7 = Vec::new();
    let cs = corners();
    for (k, &a) in cs.iter().enumerate() {
        for &b in &cs[k + 1..] {
            if !adjacent(a, b) {
                continue;
            }
            let (v1, v2) = if product(a) == -1 { (a, b) } else { (b, a) };
            let link = q_boundary.link(&simplex([v(a), v(b)]))?;
            expect_count("edge link", 4, link.n_facets())?;
            for e in link.facets() {
                s7.push(e.with(v(v1)).with(v(v2)).with(v(neg(v2))));
            }
        }
    }
    emitted.push(stages.add("edge links", C3_STAGE_COUNTS[6], s7)?);

    let mut s8 = Vec::new();
    for &x in &plus {
        for eps in [1i8, -1] {
            s8.push(simplex([v(x), v(neg(x))].into_iter().chain((0..3).map(|i| dm(d(x[i], i, eps))))));
        }
    }
    emitted.push(stages.add("diagonals", C3_STAGE_COUNTS[7], s8)?);

    let s9 = cs
        .iter()
        .map(|&x| simplex([apex(1), apex(-1)].into_iter().chain((0..3).map(|i| dm(d(x[i], i, 1))))))
        .collect();
    emitted.push(stages.add("suspension axis", C3_STAGE_COUNTS[8], s9)?);

    let mut facets: Vec<Simplex> = q_ball.facets().to_vec();
    for stage in &emitted[6..] {
        facets.extend(stage.iter().cloned());
    }
    let closed = labelled(facets, &d_labels)?;
    expect_count("rp4 facets", 150, closed.n_facets())?;
    if !is_closed_pseudomanifold(&closed).closed {
        return Err(ConstructionError::NotClosed { stage: "rp4" });
    }
    let (rp4, _) = closed.normalize();
    expect_count("rp4 vertices", 16, rp4.n_vertices())?;
    Ok(C3 { cube, stages: emitted, ball, boundary, boundary_f_vector, antipodal, rp4 })
}
