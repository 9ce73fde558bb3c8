use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{expect_count, labelled, sign_char, simplex, ConstructionError};
use crate::complex::{barycentric_subdivision, simplex_boundary, Involution, Simplex, SimplicialComplex, Vertex, VertexMap};
use crate::designs::{build_k6, complex_labels, complex_vertex, bisection_point, vertex_point};

/// `RP^2` on 6 vertices from the square on `±e_1, ±e_2` and the four
/// corners `q_ε` of the surrounding square, with `q_ε ~ q_{-ε}`.
///
/// Ids: `+e_1 = 1`, `-e_1 = 2`, `+e_2 = 3`, `-e_2 = 4`, `a = q_{++} = 5`,
/// `b = q_{+-} = 6`.
pub fn rp2_6() -> SimplicialComplex {
    let (e1, m1, e2, m2, a, b) = (1, 2, 3, 4, 5, 6);
    let facets = [
        // The segment [-e1, e1] joined with {±e2}.
        [e1, m1, e2],
        [e1, m1, m2],
        // Cones from the identified corners.
        [e1, e2, a],
        [m1, m2, a],
        [e1, m2, b],
        [m1, e2, b],
        // [e2, -e2] joined with its link {a, b}.
        [e2, m2, a],
        [e2, m2, b],
        // ±e1 coned over the edge [a, b].
        [e1, a, b],
        [m1, a, b],
    ];
    let labels = [(1, "e1"), (2, "-e1"), (3, "e2"), (4, "-e2"), (5, "q++/q--"), (6, "q+-/q-+")];
    SimplicialComplex::new(facets.iter().map(|f| simplex(f.iter().copied())))
        .expect("ten triangles")
        .with_labels(labels.iter().map(|&(v, l)| (v, String::from(l))).collect())
}

/// `RP^3` on 11 vertices: the origin coned over the octahedron, the cube
/// corners `q_ε` coned over its faces, the edges closed up, then
/// `q_ε ~ q_{-ε}` and each `[e_i, -e_i]` joined with its link.
///
/// Ids before renumbering: origin `1`, `+e_i = 2i`, `-e_i = 2i + 1`,
/// `q_ε` from `8` in lexicographic order with `+` first.
pub fn rp3_11() -> Result<SimplicialComplex, ConstructionError> {
    let c = |i: usize, s: i8| -> Vertex { 2 * (i as Vertex + 1) + if s > 0 { 0 } else { 1 } };
    let signs: Vec<[i8; 3]> = (0..8u8)
        .map(|bits| {
            let s = |k: u8| if bits >> (2 - k) & 1 == 0 { 1 } else { -1 };
            [s(0), s(1), s(2)]
        })
        .collect();
    let q = |eps: [i8; 3]| -> Vertex { 8 + signs.iter().position(|x| *x == eps).expect("sign vector") as Vertex };
    let mut labels: BTreeMap<Vertex, String> = BTreeMap::new();
    labels.insert(1, String::from("0"));
    for i in 0..3 {
        labels.insert(c(i, 1), format!("e{}", i + 1));
        labels.insert(c(i, -1), format!("-e{}", i + 1));
    }
    for &eps in &signs {
        labels.insert(q(eps), eps.iter().fold(String::from("q"), |mut a, &s| {
            a.push(sign_char(s));
            a
        }));
    }

    let mut ball = Vec::new();
    for &eps in &signs {
        ball.push(simplex((0..3).map(|i| c(i, eps[i])).chain([1])));
        ball.push(simplex((0..3).map(|i| c(i, eps[i])).chain([q(eps)])));
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let l = 3 - i - j;
            for &eps in signs.iter().filter(|e| e[l] > 0) {
                let mut other = eps;
                other[l] = -1;
                ball.push(simplex([c(i, eps[i]), c(j, eps[j]), q(eps), q(other)]));
            }
        }
    }
    expect_count("rp3 ball", 28, ball.len())?;

    let mut qmap = VertexMap::new();
    let mut q_labels = labels.clone();
    for &eps in &signs {
        let (a, b) = (q(eps), q(eps.map(|s| -s)));
        qmap.insert(a, a.min(b));
        if a < b {
            q_labels.insert(a, format!("{}/{}", labels[&a], labels[&b]));
        }
    }
    let ball = labelled(ball, &labels)?;
    let q_ball = ball.image(&qmap)?;
    expect_count("rp3 identified ball", 28, q_ball.n_facets())?;
    let q_boundary = q_ball.boundary().ok_or(ConstructionError::NotClosed { stage: "rp3 boundary" })?;
    let mut facets: Vec<Simplex> = q_ball.facets().to_vec();
    for i in 0..3 {
        let plus = q_boundary.vertex_link(c(i, 1))?;
        let minus = q_boundary.vertex_link(c(i, -1))?;
        if plus.facets() != minus.facets() {
            return Err(ConstructionError::LinkMismatch { stage: "rp3 links", vertex: c(i, 1) });
        }
        expect_count("rp3 link", 4, plus.n_facets())?;
        facets.extend(plus.facets().iter().map(|e| e.with(c(i, 1)).with(c(i, -1))));
    }
    let closed = labelled(facets, &q_labels)?;
    expect_count("rp3 facets", 40, closed.n_facets())?;
    let (out, _) = closed.normalize();
    expect_count("rp3 vertices", 11, out.n_vertices())?;
    Ok(out)
}

/// `RP^n` on `2^(n+1) - 1` vertices: the barycentric subdivision of
/// `∂Δ^(n+1)` modulo sending each face to its complement.
pub fn kuehnel_rp(n: usize) -> Result<SimplicialComplex, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::OutOfRange(n));
    }
    let base = simplex_boundary(n + 1);
    let sub = barycentric_subdivision(&base);
    // Subdivision vertices carry the faces they stand for, numbered by size
    // then lexicographically; rebuild that list to pair complements.
    let mut faces: Vec<Simplex> = (0..base.facet_size()).flat_map(|k| base.faces(k).expect("k within dimension")).collect();
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let id: BTreeMap<&Simplex, Vertex> = faces.iter().enumerate().map(|(i, s)| (s, i as Vertex + 1)).collect();
    let all = simplex(1..=(n as Vertex + 2));
    let pairs: Vec<(Vertex, Vertex)> = faces
        .iter()
        .filter(|f| f.contains(1))
        .map(|f| (id[f], id[&all.difference(f)]))
        .collect();
    let inv = Involution::from_pairs(&pairs)?;
    let out = sub.quotient(&inv)?;
    expect_count("kuehnel vertices", (1 << (n + 1)) - 1, out.n_vertices())?;
    Ok(out)
}

/// The 16-vertex `RP^4` read off `K_6`: `{v} ∪ e(u, v)` for each endpoint
/// `v` of each edge, and `{v, v'} ∪ (e(v, v'') \ e(v, v'))` for each
/// ordered triple of distinct vertices. Ids `1..=6` are `A..F`, `7..=16`
/// the bisections `0..9`.
pub fn rp4_from_k6() -> Result<SimplicialComplex, ConstructionError> {
    let k6 = build_k6();
    let vx = |v: usize| complex_vertex(vertex_point(v));
    let bx = |b: usize| complex_vertex(bisection_point(b));
    let mut small = Vec::new();
    for &(u, w) in &k6.edges {
        for end in [u, w] {
            small.push(simplex(k6.edge_label(u, w).iter().map(|&b| bx(b)).chain([vx(end)])));
        }
    }
    let mut large = Vec::new();
    for a in 0..6 {
        for b in (0..6).filter(|&b| b != a) {
            for c in (0..6).filter(|&c| c != a && c != b) {
                let rest = k6.edge_label(a, c).difference(k6.edge_label(a, b));
                large.push(simplex(rest.map(|&x| bx(x)).chain([vx(a), vx(b)])));
            }
        }
    }
    expect_count("vertex-edge facets", 30, small.len())?;
    expect_count("vertex-pair facets", 120, large.len())?;
    let out = SimplicialComplex::new(small.into_iter().chain(large))?.with_labels(complex_labels());
    expect_count("k6 facets", 150, out.n_facets())?;
    expect_count("k6 vertices", 16, out.n_vertices())?;
    Ok(out)
}

/// `C(n+2, 2) + 1`, the least vertex count of a triangulated `RP^n`
/// allowed by the Arnoux-Marin bound, valid for `n >= 3`.
pub fn arnoux_marin_bound(n: usize) -> Result<usize, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::OutOfRange(n));
    }
    Ok((n + 2) * (n + 1) / 2 + 1)
}
