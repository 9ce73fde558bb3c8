use alloc::vec::Vec;
use core::fmt;

use super::{ComplexError, Vertex};

/// A simplex: a strictly increasing list of vertex ids.
///
/// The empty simplex is allowed; it is the single facet of the link of a
/// facet and the boundary of a single vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Builds a simplex from vertices in any order. Repeated vertices are
    /// rejected.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self, ComplexError> {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::RepeatedVertex(w[0]));
        }
        Ok(Simplex(v))
    }

    /// Wraps an already strictly increasing vertex list.
    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]), "unsorted simplex {v:?}");
        Simplex(v)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension `len - 1`; the empty simplex has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// True if every vertex of `self` is a vertex of `other`.
    pub fn is_subset(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn with(&self, v: Vertex) -> Simplex {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        Simplex(out)
    }

    pub fn without(&self, v: Vertex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// All subsets with exactly `k` vertices, in lexicographic order.
    pub fn subsets(&self, k: usize) -> impl Iterator<Item = Simplex> + '_ {
        Combinations::new(self.0.len(), k).map(move |idx| Simplex(idx.iter().map(|&i| self.0[i]).collect()))
    }

    /// The codimension-one faces, omitting vertex `i` for `i = 0..len`.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Simplex(v)
        })
    }

    /// Image under a vertex map; `None` if two vertices collapse.
    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Option<Simplex> {
        let mut v: Vec<Vertex> = self.0.iter().map(|&x| f(x)).collect();
        v.sort_unstable();
        let before = v.len();
        v.dedup();
        (v.len() == before).then_some(Simplex(v))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl From<&[Vertex]> for Simplex {
    fn from(v: &[Vertex]) -> Self {
        // Panics on repeated vertices; use `Simplex::new` for fallible input.
        Simplex::new(v.iter().copied()).expect("repeated vertex in simplex literal")
    }
}

impl<const N: usize> From<[Vertex; N]> for Simplex {
    fn from(v: [Vertex; N]) -> Self {
        Simplex::from(&v[..])
    }
}

/// Lexicographic `k`-combinations of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
