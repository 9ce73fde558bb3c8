use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Simplex, SimplicialComplex, Vertex};

/// Boundary of the `n`-simplex on vertices `1..=n+1`: an `(n-1)`-sphere
/// with `n + 1` facets.
pub fn simplex_boundary(n: usize) -> SimplicialComplex {
    assert!(n >= 1, "simplex_boundary needs n >= 1");
    let verts = n as Vertex + 1;
    let facets = (1..=verts).map(|skip| Simplex::from_sorted((1..=verts).filter(|&v| v != skip).collect()));
    SimplicialComplex::new(facets).expect("simplex boundary is pure")
}

/// Boundary of the `n`-dimensional cross-polytope. Vertex `2i-1` is `e_i`
/// and `2i` is `-e_i`; facets pick one of each pair.
pub fn cross_polytope_boundary(n: usize) -> SimplicialComplex {
    assert!(n >= 1, "cross_polytope_boundary needs n >= 1");
    let facets = (0u32..1 << n).map(|mask| {
        Simplex::from_sorted((0..n as u32).map(|i| 2 * i + 1 + ((mask >> i) & 1)).collect())
    });
    let labels = (0..n as u32)
        .flat_map(|i| [(2 * i + 1, format!("e{}", i + 1)), (2 * i + 2, format!("-e{}", i + 1))])
        .collect();
    SimplicialComplex::new(facets).expect("cross-polytope boundary is pure").with_labels(labels)
}

/// Barycentric subdivision: one vertex per nonempty face, one facet per
/// maximal chain of faces.
///
/// New vertices are numbered by increasing face size, then lexicographic
/// order of the face; each is labelled by the ids (or labels) of the face's
/// vertices, concatenated when all are single characters.
pub fn barycentric_subdivision(complex: &SimplicialComplex) -> SimplicialComplex {
    let mut all: Vec<Simplex> = (0..complex.facet_size())
        .flat_map(|k| complex.faces(k).expect("k within dimension"))
        .collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let id: BTreeMap<&Simplex, Vertex> = all.iter().enumerate().map(|(i, s)| (s, i as Vertex + 1)).collect();

    let size = complex.facet_size();
    let mut facets = Vec::new();
    for f in complex.facets() {
        for order in permutations(size) {
            let mut chain = Vec::with_capacity(size);
            let mut prefix = Vec::with_capacity(size);
            for &i in &order {
                prefix.push(f.vertices()[i]);
                let face = Simplex::new(prefix.iter().copied()).expect("distinct facet vertices");
                chain.push(id[&face]);
            }
            chain.sort_unstable();
            facets.push(Simplex::from_sorted(chain));
        }
    }

    let labels = all
        .iter()
        .map(|s| {
            let parts: Vec<String> = s.vertices().iter().map(|&v| complex.display_label(v)).collect();
            let sep = if parts.iter().all(|p| p.chars().count() == 1) { "" } else { "." };
            (id[s], parts.join(sep))
        })
        .collect();
    SimplicialComplex::new(facets).expect("flags of a pure complex are pure").with_labels(labels)
}

/// All permutations of `0..n`.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for sub in permutations(n - 1) {
        for pos in 0..n {
            let mut p = sub.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_boundary_counts() {
        let c = simplex_boundary(5);
        assert_eq!(c.n_facets(), 6);
        assert_eq!(c.dim(), 4);
        assert!(c.is_normalized());
    }

    #[test]
    fn cross_polytope_f_vector() {
        let c = cross_polytope_boundary(4);
        assert_eq!(c.n_facets(), 16);
        assert_eq!(c.f_vector(), [8, 24, 32, 16]);
        assert_eq!(c.label(4), Some("-e2"));
    }

    #[test]
    fn barycentric_subdivision_of_simplex_boundary() {
        let b = barycentric_subdivision(&simplex_boundary(5));
        assert_eq!(b.n_vertices(), 62);
        assert_eq!(b.n_facets(), 720);
        assert_eq!(b.euler_characteristic(), 2);
        assert_eq!(b.label(7), Some("12"));
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(5).len(), 120);
    }
}
