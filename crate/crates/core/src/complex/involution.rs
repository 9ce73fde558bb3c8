use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{ComplexError, Simplex, Vertex, VertexMap};

/// A vertex permutation of order at most two. Vertices not mentioned are
/// fixed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Involution {
    map: VertexMap,
}

impl Involution {
    /// Validates `map ∘ map = id` on every mentioned vertex.
    pub fn new(map: VertexMap) -> Result<Self, ComplexError> {
        for (&v, &w) in &map {
            let back = *map.get(&w).unwrap_or(&w);
            if back != v {
                return Err(ComplexError::NotBijective(v));
            }
        }
        let map = map.into_iter().filter(|(v, w)| v != w).collect();
        Ok(Involution { map })
    }

    /// Builds an involution swapping each listed pair.
    pub fn from_pairs(pairs: &[(Vertex, Vertex)]) -> Result<Self, ComplexError> {
        let mut map = BTreeMap::new();
        for &(a, b) in pairs {
            if a == b {
                continue;
            }
            for v in [a, b] {
                if map.contains_key(&v) {
                    return Err(ComplexError::RepeatedVertex(v));
                }
            }
            map.insert(a, b);
            map.insert(b, a);
        }
        Ok(Involution { map })
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        *self.map.get(&v).unwrap_or(&v)
    }

    pub fn apply_simplex(&self, s: &Simplex) -> Simplex {
        s.map(|v| self.apply(v)).expect("involution is injective")
    }

    /// The swapped pairs `(a, b)` with `a < b`.
    pub fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.map.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (a, b)).collect()
    }

    pub fn as_map(&self) -> &VertexMap {
        &self.map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_involution() {
        let map: VertexMap = [(1, 2), (2, 3), (3, 1)].into_iter().collect();
        assert!(Involution::new(map).is_err());
        assert!(Involution::from_pairs(&[(1, 2), (2, 3)]).is_err());
    }

    #[test]
    fn applies() {
        let inv = Involution::from_pairs(&[(1, 4), (2, 5)]).unwrap();
        assert_eq!(inv.apply(4), 1);
        assert_eq!(inv.apply(3), 3);
        assert_eq!(inv.apply_simplex(&Simplex::from([1, 2, 3])), Simplex::from([3, 4, 5]));
        assert_eq!(inv.pairs(), [(1, 4), (2, 5)]);
    }
}
