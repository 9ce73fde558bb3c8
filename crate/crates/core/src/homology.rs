//! Integer simplicial homology.
//!
//! Boundary matrices use the orientation induced by increasing vertex ids:
//! `∂[v_0, ..., v_k] = Σ (-1)^i [v_0, ..., v̂_i, ..., v_k]`. Ranks and torsion
//! come from a Smith normal form computed over [`BigInt`], so entry growth
//! can never overflow. Elimination first peels off unit pivots sparsely
//! (boundary matrices are mostly units), then finishes the small residual
//! block densely.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::complex::{Simplex, SimplicialComplex};

/// Sparse integer matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, BigInt>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::zeros(rows.len(), ncols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, BigInt::from(v));
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.nrows && c < self.ncols, "index out of bounds");
        if v.is_zero() {
            self.rows[r].remove(&c);
        } else {
            self.rows[r].insert(c, v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.rows[r].get(&c).cloned().unwrap_or_default()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let mut out = SparseMatrix::zeros(self.nrows, other.ncols);
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&k, a) in row {
                for (&c, b) in &other.rows[k] {
                    *acc.entry(c).or_default() += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.rows[r] = acc;
        }
        out
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix; `r` is
/// its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigUint>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form by unimodular row and column operations.
pub fn smith_normal_form(m: &SparseMatrix) -> SmithForm {
    let mut rows = m.rows.clone();
    let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.ncols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            cols[c].insert(r);
        }
    }

    let mut units = 0usize;
    // Unit pivots: clear the pivot column by row operations; the pivot row
    // can then be cleared by column operations that touch nothing else, so
    // both are simply dropped.
    while let Some((pr, pc)) = unit_pivot(&rows, &cols) {
        let pivot = rows[pr][&pc].clone();
        let pivot_row: Vec<(usize, BigInt)> = rows[pr].iter().map(|(c, v)| (*c, v.clone())).collect();
        let targets: Vec<usize> = cols[pc].iter().copied().filter(|&r| r != pr).collect();
        for r in targets {
            // pivot is ±1, so its inverse is itself.
            let factor = &rows[r][&pc] * &pivot;
            for (c, v) in &pivot_row {
                let entry = rows[r].entry(*c).or_default();
                *entry -= &factor * v;
                if entry.is_zero() {
                    rows[r].remove(c);
                    cols[*c].remove(&r);
                } else {
                    cols[*c].insert(r);
                }
            }
        }
        for (c, _) in &pivot_row {
            cols[*c].remove(&pr);
        }
        rows[pr].clear();
        units += 1;
    }

    // Dense finish on whatever is left.
    let live_rows: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..cols.len()).filter(|&c| !cols[c].is_empty()).collect();
    let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (i, &r) in live_rows.iter().enumerate() {
        for (c, v) in &rows[r] {
            dense[i][col_pos[c]] = v.clone();
        }
    }
    let mut factors: Vec<BigUint> = vec![BigUint::one(); units];
    factors.extend(dense_smith_diagonal(dense));
    factors.sort();
    debug_assert!(factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    SmithForm { invariant_factors: factors }
}

/// Cheapest ±1 entry by the Markowitz count `(row_len - 1) * (col_len - 1)`.
fn unit_pivot(rows: &[BTreeMap<usize, BigInt>], cols: &[BTreeSet<usize>]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (c, members) in cols.iter().enumerate() {
        if members.is_empty() {
            continue;
        }
        let col_cost = members.len() - 1;
        for &r in members {
            let v = &rows[r][&c];
            if v.magnitude().is_one() {
                let cost = (rows[r].len() - 1) * col_cost;
                if best.map_or(true, |(b, _, _)| cost < b) {
                    best = Some((cost, r, c));
                    if cost == 0 {
                        return Some((r, c));
                    }
                }
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Nonzero diagonal of the Smith form of a dense matrix.
fn dense_smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigUint> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = min_entry(&a, t, t..m, t..n) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    for j in t..n {
                        let delta = &q * &a[t][j];
                        a[i][j] -= delta;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    for i in t..m {
                        let delta = &q * &a[i][t];
                        a[i][j] -= delta;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                // A remainder smaller than the pivot survived; move the
                // smallest entry of the pivot row/column into place.
                let (pi, pj) = min_in_cross(&a, t);
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            let pivot = a[t][t].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &pivot).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].magnitude().clone());
        t += 1;
    }
    diag
}

fn min_entry(
    a: &[Vec<BigInt>],
    _t: usize,
    rows: core::ops::Range<usize>,
    cols: core::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| a[i][j].magnitude() < a[bi][bj].magnitude()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let m = a.len();
    let n = a[0].len();
    let mut best = (t, t);
    let consider = |i: usize, j: usize, best: &mut (usize, usize)| {
        if !a[i][j].is_zero()
            && (a[best.0][best.1].is_zero() || a[i][j].magnitude() < a[best.0][best.1].magnitude())
        {
            *best = (i, j);
        }
    };
    for i in t..m {
        consider(i, t, &mut best);
    }
    for j in t..n {
        consider(t, j, &mut best);
    }
    best
}

/// Faces by dimension and the boundary maps between them.
#[derive(Clone, Debug)]
pub struct ChainBoundary {
    /// `faces[k]`: sorted `k`-faces, the basis of `C_k`.
    pub faces: Vec<Vec<Simplex>>,
    /// `matrices[k]`: `∂_k : C_k → C_{k-1}` with rows indexed by
    /// `faces[k-1]` and columns by `faces[k]`. `matrices[0]` is `0 × f_0`.
    pub matrices: Vec<SparseMatrix>,
}

impl ChainBoundary {
    pub fn of(complex: &SimplicialComplex) -> Self {
        let size = complex.facet_size();
        let faces: Vec<Vec<Simplex>> =
            (0..size).map(|k| complex.faces(k).expect("within dimension").into_iter().collect()).collect();
        let mut matrices = vec![SparseMatrix::zeros(0, faces.first().map_or(0, Vec::len))];
        for k in 1..size {
            let index: BTreeMap<&Simplex, usize> = faces[k - 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
            let mut m = SparseMatrix::zeros(faces[k - 1].len(), faces[k].len());
            for (col, s) in faces[k].iter().enumerate() {
                for (i, face) in s.boundary_faces().enumerate() {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    m.set(index[&face], col, BigInt::from(sign));
                }
            }
            matrices.push(m);
        }
        ChainBoundary { faces, matrices }
    }

    /// Checks `∂_k ∘ ∂_{k+1} = 0` for every `k`.
    pub fn squares_to_zero(&self) -> bool {
        (1..self.matrices.len().saturating_sub(1)).all(|k| self.matrices[k].mul(&self.matrices[k + 1]).is_zero())
    }
}

/// `H_k ≅ Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_m` with `t_1 | t_2 | ... | t_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn new(rank: usize, torsion: &[u64]) -> Self {
        HomologyGroup { rank, torsion: torsion.iter().map(|&t| BigUint::from(t)).collect() }
    }

    pub fn zero() -> Self {
        HomologyGroup::new(0, &[])
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push(String::from("Z")),
            r => parts.push(alloc::format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(alloc::format!("Z/{t}"));
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Integer homology `H_0, ..., H_d` (unreduced).
pub fn homology(complex: &SimplicialComplex) -> Vec<HomologyGroup> {
    let chain = ChainBoundary::of(complex);
    let size = chain.faces.len();
    let forms: Vec<SmithForm> = chain.matrices.iter().map(smith_normal_form).collect();
    (0..size)
        .map(|k| {
            let rank_out = forms[k].rank();
            let (rank_in, torsion) = match forms.get(k + 1) {
                Some(f) => (f.rank(), f.torsion()),
                None => (0, Vec::new()),
            };
            HomologyGroup { rank: chain.faces[k].len() - rank_out - rank_in, torsion }
        })
        .collect()
}

/// Betti numbers over GF(2), computed by bitset elimination; an independent
/// route used to cross-check [`homology`] through universal coefficients.
pub fn betti_mod2(complex: &SimplicialComplex) -> Vec<usize> {
    let chain = ChainBoundary::of(complex);
    let ranks: Vec<usize> = chain.matrices.iter().map(rank_mod2).collect();
    (0..chain.faces.len())
        .map(|k| chain.faces[k].len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
        .collect()
}

/// Betti numbers mod 2 predicted from integer homology:
/// `b_k = rank H_k + #even torsion in H_k + #even torsion in H_{k-1}`.
pub fn mod2_from_integral(groups: &[HomologyGroup]) -> Vec<usize> {
    let even = |g: &HomologyGroup| g.torsion.iter().filter(|t| (*t % 2u32).is_zero()).count();
    (0..groups.len())
        .map(|k| groups[k].rank + even(&groups[k]) + if k > 0 { even(&groups[k - 1]) } else { 0 })
        .collect()
}

fn rank_mod2(m: &SparseMatrix) -> usize {
    let words = m.ncols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = m
        .rows
        .iter()
        .map(|row| {
            let mut bits = vec![0u64; words];
            for (&c, v) in row {
                if v.magnitude().bit(0) {
                    bits[c / 64] |= 1 << (c % 64);
                }
            }
            bits
        })
        .filter(|b| b.iter().any(|&w| w != 0))
        .collect();
    let mut rank = 0;
    for col in 0..m.ncols {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Spaces whose homology the crate checks against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnownSpace {
    Sphere(usize),
    RealProjective(usize),
}

/// Closed-form integer homology of a [`KnownSpace`], `H_0..H_n`.
pub fn known_homology(space: KnownSpace) -> Vec<HomologyGroup> {
    match space {
        KnownSpace::Sphere(0) => vec![HomologyGroup::new(2, &[])],
        KnownSpace::Sphere(n) => (0..=n)
            .map(|k| if k == 0 || k == n { HomologyGroup::new(1, &[]) } else { HomologyGroup::zero() })
            .collect(),
        KnownSpace::RealProjective(n) => (0..=n)
            .map(|k| match k {
                0 => HomologyGroup::new(1, &[]),
                k if k == n && n % 2 == 1 => HomologyGroup::new(1, &[]),
                k if k < n && k % 2 == 1 => HomologyGroup::new(0, &[2]),
                _ => HomologyGroup::zero(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cross_polytope_boundary, simplex_boundary};

    fn factors(m: &[Vec<i64>]) -> Vec<u64> {
        smith_normal_form(&SparseMatrix::from_dense(m))
            .invariant_factors
            .iter()
            .map(|d| u64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn smith_small_cases() {
        assert_eq!(factors(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), [1, 1, 1]);
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), [1, 6]);
        assert_eq!(factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), [2, 6, 12]);
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), Vec::<u64>::new());
    }

    #[test]
    fn smith_triangle_boundary_edge_map() {
        // ∂_1 of ∂Δ²: rows vertices 1,2,3; columns edges 12,13,23.
        let d1 = [vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]];
        assert_eq!(factors(&d1), [1, 1]);
    }

    #[test]
    fn sphere_and_cross_polytope() {
        assert_eq!(homology(&simplex_boundary(5)), known_homology(KnownSpace::Sphere(4)));
        assert_eq!(homology(&cross_polytope_boundary(3)), known_homology(KnownSpace::Sphere(2)));
    }

    #[test]
    fn boundary_squares_to_zero() {
        assert!(ChainBoundary::of(&cross_polytope_boundary(4)).squares_to_zero());
    }

    #[test]
    fn known_rp_homology_shape() {
        let rp4 = known_homology(KnownSpace::RealProjective(4));
        assert_eq!(rp4.iter().map(ToString::to_string).collect::<Vec<_>>(), ["Z", "Z/2", "0", "Z/2", "0"]);
        let rp3 = known_homology(KnownSpace::RealProjective(3));
        assert_eq!(rp3.iter().map(ToString::to_string).collect::<Vec<_>>(), ["Z", "Z/2", "0", "Z"]);
    }

    #[test]
    fn mod2_prediction() {
        let rp4 = known_homology(KnownSpace::RealProjective(4));
        assert_eq!(mod2_from_integral(&rp4), [1, 1, 1, 1, 1]);
    }

    use alloc::string::ToString;
}
