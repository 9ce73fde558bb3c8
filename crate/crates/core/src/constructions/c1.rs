//! The construction through `R^6`: subdivide `∂Δ^5`, flip, quotient.
//!
//! Vertex ids:
//!
//! | ids      | point                           | label   |
//! |----------|---------------------------------|---------|
//! | `1..=6`  | `e_i`                           | `e1`    |
//! | `7..=26` | `(e_i + e_j + e_k)/3`, `i<j<k`  | `135`   |
//! | `27..=32`| `(1 - e_m)/5`                   | `f1`    |
//!
//! The triples are numbered in lexicographic order.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{expect_count, labelled, simplex, ConstructionError};
use crate::complex::{Involution, SimplicialComplex, Vertex};
use crate::flips::{apply_batch, BistellarMove};
use crate::manifold::is_antipodal;
use crate::symmetry::Permutation;

fn e(i: usize) -> Vertex {
    i as Vertex + 1
}

fn f(m: usize) -> Vertex {
    27 + m as Vertex
}

fn triples() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Barycenter of the triangle on `e_a, e_b, e_c` (any order).
fn t(a: usize, b: usize, c: usize) -> Vertex {
    let mut k = [a, b, c];
    k.sort_unstable();
    7 + triples().iter().position(|x| *x == k).expect("three distinct coordinates") as Vertex
}

fn others(exclude: &[usize]) -> Vec<usize> {
    (0..6).filter(|x| !exclude.contains(x)).collect()
}

fn labels() -> BTreeMap<Vertex, String> {
    let mut out = BTreeMap::new();
    for i in 0..6 {
        out.insert(e(i), format!("e{}", i + 1));
        out.insert(f(i), format!("f{}", i + 1));
    }
    for [a, b, c] in triples() {
        out.insert(t(a, b, c), format!("{}{}{}", a + 1, b + 1, c + 1));
    }
    out
}

/// Every stage of the construction.
#[derive(Clone, Debug)]
pub struct C1 {
    /// `∂Δ^5` on `e_1..e_6`.
    pub x6: SimplicialComplex,
    /// Each facet of `X_6` coned from its barycenter.
    pub x12: SimplicialComplex,
    /// Each tetrahedron of `X_12` cut into eleven.
    pub x32: SimplicialComplex,
    /// The 60 triangle flips, applied simultaneously.
    pub round1: Vec<BistellarMove>,
    pub after_round1: SimplicialComplex,
    /// The 15 edge flips.
    pub round2: Vec<BistellarMove>,
    pub s4_32: SimplicialComplex,
    /// `e_i ↔ f_i`, triple barycenters to complementary ones.
    pub sigma: Involution,
    pub rp4: SimplicialComplex,
}

/// Builds every stage, checking counts and the antipodality gate.
pub fn c1_pipeline() -> Result<C1, ConstructionError> {
    let labels = labels();
    let x6 = labelled((0..6).map(|skip| simplex(others(&[skip]).into_iter().map(e))), &labels)?;
    expect_count("x6 facets", 6, x6.n_facets())?;

    // The facet opposite e_m has barycenter f_m.
    let mut x12_facets = Vec::new();
    for m in 0..6 {
        let rest = others(&[m]);
        for skip in &rest {
            x12_facets.push(simplex(rest.iter().filter(|x| *x != skip).map(|&x| e(x)).chain([f(m)])));
        }
    }
    let x12 = labelled(x12_facets, &labels)?;
    expect_count("x12 vertices", 12, x12.n_vertices())?;
    expect_count("x12 facets", 30, x12.n_facets())?;

    // Tetrahedron ijkl, using the barycenters of its four triangles: six
    // pieces on its edges, four at its corners and one in the middle.
    let mut x32_facets = Vec::new();
    for m in 0..6 {
        let rest = others(&[m]);
        for skip in &rest {
            let tet: Vec<usize> = rest.iter().copied().filter(|x| x != skip).collect();
            let mut pieces: Vec<Vec<Vertex>> = Vec::new();
            for (ai, &a) in tet.iter().enumerate() {
                for &b in &tet[ai + 1..] {
                    let o: Vec<usize> = tet.iter().copied().filter(|&x| x != a && x != b).collect();
                    pieces.push([e(a), e(b), t(a, b, o[0]), t(a, b, o[1])].into());
                }
            }
            for &a in &tet {
                let o: Vec<usize> = tet.iter().copied().filter(|&x| x != a).collect();
                pieces.push([e(a), t(a, o[0], o[1]), t(a, o[0], o[2]), t(a, o[1], o[2])].into());
            }
            pieces.push([t(tet[0], tet[1], tet[2]), t(tet[0], tet[1], tet[3]), t(tet[0], tet[2], tet[3]), t(tet[1], tet[2], tet[3])].into());
            expect_count("tetrahedron pieces", 11, pieces.len())?;
            for p in pieces {
                x32_facets.push(simplex(p.into_iter().chain([f(m)])));
            }
        }
    }
    let x32 = labelled(x32_facets, &labels)?;
    expect_count("x32 vertices", 32, x32.n_vertices())?;
    expect_count("x32 facets", 330, x32.n_facets())?;

    let mut round1 = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            for k in others(&[i, j]) {
                let b = others(&[i, j, k]).into_iter().map(|l| t(i, j, l));
                round1.push(BistellarMove::new(simplex([e(i), e(j), f(k)]), simplex(b)));
            }
        }
    }
    expect_count("round one moves", 60, round1.len())?;
    let after_round1 = apply_batch(&x32, &round1)?;
    expect_count("round one facets", 330, after_round1.n_facets())?;

    let mut round2 = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            let b = others(&[i, j]).into_iter().map(|l| t(i, j, l));
            round2.push(BistellarMove::new(simplex([e(i), e(j)]), simplex(b)));
        }
    }
    expect_count("round two moves", 15, round2.len())?;
    let s4_32 = apply_batch(&after_round1, &round2)?;
    expect_count("s4_32 facets", 300, s4_32.n_facets())?;

    let mut pairs: Vec<(Vertex, Vertex)> = (0..6).map(|i| (e(i), f(i))).collect();
    for [a, b, c] in triples() {
        let o = others(&[a, b, c]);
        if a == 0 {
            pairs.push((t(a, b, c), t(o[0], o[1], o[2])));
        }
    }
    let sigma = Involution::from_pairs(&pairs)?;
    let report = is_antipodal(&s4_32, &sigma);
    if let Some(failure) = report.failure {
        return Err(ConstructionError::NotAntipodal { stage: "s4_32", failure });
    }
    let rp4 = s4_32.quotient(&sigma)?;
    expect_count("rp4 vertices", 16, rp4.n_vertices())?;
    expect_count("rp4 facets", 150, rp4.n_facets())?;
    Ok(C1 { x6, x12, x32, round1, after_round1, round2, s4_32, sigma, rp4 })
}

/// The vertex permutation of the `C1` complexes induced by permuting the
/// six coordinates by `p` (`p[i]` is the image of coordinate `i`).
pub fn c1_coordinate_permutation(p: &[usize; 6]) -> Permutation {
    let mut map = BTreeMap::new();
    for i in 0..6 {
        map.insert(e(i), e(p[i]));
        map.insert(f(i), f(p[i]));
    }
    for [a, b, c] in triples() {
        map.insert(t(a, b, c), t(p[a], p[b], p[c]));
    }
    Permutation::from_map(map).expect("coordinate permutations are bijective")
}
