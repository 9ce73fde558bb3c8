//! Bistellar moves.
//!
//! A move `A → B` on a pure `d`-complex needs `|A| + |B| = d + 2`,
//! `link(A) = ∂B` and `B` not already a face. It swaps the facets of
//! `A * ∂B` for those of `B * ∂A`. Facet subdivisions (`A` a facet, `B` a
//! new vertex) are never generated: every move here keeps or shrinks the
//! vertex set.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{ComplexError, Simplex, SimplicialComplex};

/// A bistellar move replacing `out_face` by `in_face`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BistellarMove {
    out_face: Simplex,
    in_face: Simplex,
}

impl BistellarMove {
    /// Pairs two faces without checking them against any complex.
    pub fn new(out_face: Simplex, in_face: Simplex) -> Self {
        BistellarMove { out_face, in_face }
    }

    pub fn out_face(&self) -> &Simplex {
        &self.out_face
    }

    pub fn in_face(&self) -> &Simplex {
        &self.in_face
    }

    /// `(dim A, dim B)`.
    pub fn dim_pair(&self) -> (isize, isize) {
        (self.out_face.dim(), self.in_face.dim())
    }

    pub fn reverse(&self) -> BistellarMove {
        BistellarMove::new(self.in_face.clone(), self.out_face.clone())
    }

    /// Facets of `A * ∂B`.
    pub fn removed_facets(&self) -> Vec<Simplex> {
        join_boundary(&self.out_face, &self.in_face)
    }

    /// Facets of `B * ∂A`.
    pub fn inserted_facets(&self) -> Vec<Simplex> {
        join_boundary(&self.in_face, &self.out_face)
    }

    /// Change of `f_k` for `k = 0..=d`:
    /// `C(|A|, k+1-|B|) - C(|B|, k+1-|A|)`.
    pub fn f_delta(&self) -> Vec<i64> {
        let (a, b) = (self.out_face.len(), self.in_face.len());
        (0..a + b - 1).map(|k| binomial(a, (k + 1).wrapping_sub(b)) - binomial(b, (k + 1).wrapping_sub(a))).collect()
    }
}

impl fmt::Display for BistellarMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.out_face, self.in_face)
    }
}

fn join_boundary(apex: &Simplex, base: &Simplex) -> Vec<Simplex> {
    base.boundary_faces().map(|face| apex.union(&face)).collect()
}

/// `C(n, k)`, zero when `k > n` (including wrapped negative `k`).
fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlipError {
    NotAFace(Simplex),
    /// The move does not apply to this complex (stale or never valid).
    InvalidMove(BistellarMove),
    /// Two moves of a batch replace a common facet.
    Interfering(BistellarMove, BistellarMove),
    /// Two moves of a batch insert a common facet.
    CollidingInsert(Simplex),
    NotClosedPseudomanifold,
    Complex(ComplexError),
}

impl fmt::Display for FlipError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlipError::NotAFace(s) => write!(f, "{s} is not a face"),
            FlipError::InvalidMove(m) => write!(f, "move {m} does not apply"),
            FlipError::Interfering(a, b) => write!(f, "moves {a} and {b} replace a common facet"),
            FlipError::CollidingInsert(s) => write!(f, "facet {s} inserted twice"),
            FlipError::NotClosedPseudomanifold => f.write_str("complex is not a closed pseudomanifold"),
            FlipError::Complex(e) => write!(f, "{e}"),
        }
    }
}

impl From<ComplexError> for FlipError {
    fn from(e: ComplexError) -> Self {
        FlipError::Complex(e)
    }
}

/// The move removing `a`, if `link(a)` is the boundary of a simplex `B`
/// that is not yet a face.
pub fn is_flippable(complex: &SimplicialComplex, a: &Simplex) -> Result<Option<BistellarMove>, FlipError> {
    if !complex.is_face(a) {
        return Err(FlipError::NotAFace(a.clone()));
    }
    Ok(flippable_face(complex, a))
}

fn flippable_face(complex: &SimplicialComplex, a: &Simplex) -> Option<BistellarMove> {
    let size = complex.facet_size();
    if a.len() >= size || a.is_empty() {
        return None;
    }
    let b_len = size + 1 - a.len();
    let mut star = 0;
    let mut b: Vec<u32> = Vec::with_capacity(b_len);
    for f in complex.star_facets(a) {
        star += 1;
        if star > b_len {
            return None;
        }
        for &v in f.vertices() {
            if !a.contains(v) && !b.contains(&v) {
                b.push(v);
                if b.len() > b_len {
                    return None;
                }
            }
        }
    }
    // `star` distinct facets of the form A ∪ (B minus a vertex) with
    // |B| = star are exactly A * ∂B.
    if star != b_len || b.len() != b_len {
        return None;
    }
    let b = Simplex::new(b).expect("distinct vertices");
    if complex.is_face(&b) {
        return None;
    }
    Some(BistellarMove::new(a.clone(), b))
}

/// Applies a move after re-validating it against `complex`.
pub fn apply_flip(complex: &SimplicialComplex, mv: &BistellarMove) -> Result<SimplicialComplex, FlipError> {
    check_move(complex, mv)?;
    let removed: BTreeSet<Simplex> = mv.removed_facets().into_iter().collect();
    rebuild(complex, &removed, mv.inserted_facets())
}

/// The stellar subdivision of `facet` by a fresh vertex, numbered one past
/// the largest vertex.
pub fn subdivide_facet(complex: &SimplicialComplex, facet: &Simplex) -> Result<BistellarMove, FlipError> {
    if !complex.has_facet(facet) {
        return Err(FlipError::NotAFace(facet.clone()));
    }
    let fresh = complex.vertices().last().map_or(1, |v| v + 1);
    Ok(BistellarMove::new(facet.clone(), Simplex::from([fresh])))
}

fn check_move(complex: &SimplicialComplex, mv: &BistellarMove) -> Result<(), FlipError> {
    if !complex.is_face(&mv.out_face) {
        return Err(FlipError::InvalidMove(mv.clone()));
    }
    if complex.has_facet(&mv.out_face) && mv.in_face.len() == 1 {
        return if complex.has_vertex(mv.in_face.vertices()[0]) { Err(FlipError::InvalidMove(mv.clone())) } else { Ok(()) };
    }
    match flippable_face(complex, &mv.out_face) {
        Some(found) if found == *mv => Ok(()),
        _ => Err(FlipError::InvalidMove(mv.clone())),
    }
}

fn rebuild(
    complex: &SimplicialComplex,
    removed: &BTreeSet<Simplex>,
    inserted: Vec<Simplex>,
) -> Result<SimplicialComplex, FlipError> {
    let mut facets: BTreeSet<Simplex> = complex.facets().iter().filter(|f| !removed.contains(*f)).cloned().collect();
    for f in inserted {
        if !facets.insert(f.clone()) {
            return Err(FlipError::CollidingInsert(f));
        }
    }
    let out = SimplicialComplex::new(facets)?;
    let labels = complex.labels().iter().filter(|(v, _)| out.has_vertex(**v)).map(|(v, l)| (*v, l.clone())).collect();
    Ok(out.with_labels(labels))
}

/// Every valid move, ordered by `out_face`.
pub fn valid_moves(complex: &SimplicialComplex) -> Vec<BistellarMove> {
    let mut faces: Vec<Simplex> = (0..complex.facet_size().saturating_sub(1))
        .flat_map(|k| complex.faces(k).expect("k within dimension"))
        .collect();
    faces.sort();
    faces.iter().filter_map(|a| flippable_face(complex, a)).collect()
}

/// Applies moves simultaneously. Every move is validated against the
/// starting complex and the replaced facet sets must be pairwise disjoint;
/// nothing is applied unless all checks pass.
pub fn apply_batch(complex: &SimplicialComplex, moves: &[BistellarMove]) -> Result<SimplicialComplex, FlipError> {
    let mut removed: BTreeSet<Simplex> = BTreeSet::new();
    let mut owner: alloc::collections::BTreeMap<Simplex, usize> = alloc::collections::BTreeMap::new();
    let mut inserted = Vec::new();
    for (i, mv) in moves.iter().enumerate() {
        check_move(complex, mv)?;
        for f in mv.removed_facets() {
            if let Some(&j) = owner.get(&f) {
                return Err(FlipError::Interfering(moves[j].clone(), mv.clone()));
            }
            owner.insert(f.clone(), i);
            removed.insert(f);
        }
        inserted.extend(mv.inserted_facets());
    }
    rebuild(complex, &removed, inserted)
}

/// Settings for [`reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReduceConfig {
    pub seed: u64,
    /// Maximum number of moves per search.
    pub budget: usize,
    /// Independent searches; search `i` uses seed `seed + i`.
    pub restarts: usize,
    /// Initial chance, in permille, of taking a non-improving move even
    /// when an improving one exists.
    pub temperature: u32,
    /// Temperature multiplier per move, in permille.
    pub cooling: u32,
    /// Upper bound on the number of non-improving moves made in one go
    /// when the search is stuck.
    pub heat: usize,
}

impl Default for ReduceConfig {
    fn default() -> Self {
        ReduceConfig { seed: 0, budget: 20_000, restarts: 1, temperature: 20, cooling: 999, heat: 6 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    /// Smallest complex seen (lexicographic f-vector).
    pub complex: SimplicialComplex,
    /// True iff `complex` is the boundary of a simplex.
    pub certified: bool,
    /// Moves applied from the input up to `complex`.
    pub trace: Vec<BistellarMove>,
    /// Moves tried in total, including ones past the best point.
    pub moves_used: usize,
    /// Index of the restart that produced this report.
    pub restart: usize,
}

/// True iff `complex` is the boundary of a `(d+1)`-simplex up to
/// relabeling.
pub fn is_simplex_boundary(complex: &SimplicialComplex) -> bool {
    let n = complex.facet_size() + 1;
    complex.n_vertices() == n && complex.n_facets() == n
}

fn lex_cmp(a: &[i64], b: &[i64]) -> Ordering {
    a.cmp(b)
}

fn is_improving(delta: &[i64]) -> bool {
    delta.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0)
}

/// One seeded annealing search driving the f-vector down
/// lexicographically. `certified == false` only means the search gave up.
pub fn reduce(complex: &SimplicialComplex, config: &ReduceConfig) -> Result<ReductionReport, FlipError> {
    reduce_single(complex, config, config.seed, 0)
}

/// Runs `config.restarts` searches in order and returns the first certified
/// one, or the best uncertified result.
pub fn reduce_with_restarts(complex: &SimplicialComplex, config: &ReduceConfig) -> Result<ReductionReport, FlipError> {
    let mut best: Option<ReductionReport> = None;
    for i in 0..config.restarts.max(1) {
        let report = reduce_single(complex, config, config.seed.wrapping_add(i as u64), i)?;
        if report.certified {
            return Ok(report);
        }
        if best.as_ref().map_or(true, |b| report.complex.f_vector().0 < b.complex.f_vector().0) {
            best = Some(report);
        }
    }
    Ok(best.expect("at least one restart"))
}

/// A single search with an explicit seed, tagged with `restart`.
pub fn reduce_single(
    complex: &SimplicialComplex,
    config: &ReduceConfig,
    seed: u64,
    restart: usize,
) -> Result<ReductionReport, FlipError> {
    if !crate::manifold::is_closed_pseudomanifold(complex).closed {
        return Err(FlipError::NotClosedPseudomanifold);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = complex.clone();
    let mut trace: Vec<BistellarMove> = Vec::new();
    let mut best = (current.f_vector().0, 0usize, current.clone());
    let mut temperature = config.temperature;
    let mut heat_left = 0usize;
    let mut used = 0;

    while used < config.budget && !is_simplex_boundary(&current) {
        let moves = valid_moves(&current);
        if moves.is_empty() {
            break;
        }
        let deltas: Vec<Vec<i64>> = moves.iter().map(BistellarMove::f_delta).collect();
        let best_delta = deltas.iter().min_by(|a, b| lex_cmp(a, b)).expect("nonempty");
        let stuck = !is_improving(best_delta);
        if stuck && heat_left == 0 {
            heat_left = rng.gen_range(1..=config.heat.max(1));
        }
        let shake = heat_left > 0 || rng.gen_range(0..1000) < temperature;
        let pick = if shake {
            heat_left = heat_left.saturating_sub(1);
            // Prefer the gentlest non-improving moves.
            let worse: Vec<usize> = (0..moves.len()).filter(|&i| !is_improving(&deltas[i])).collect();
            if worse.is_empty() {
                rng.gen_range(0..moves.len())
            } else {
                let gentlest = worse.iter().map(|&i| &deltas[i]).min_by(|a, b| lex_cmp(a, b)).expect("nonempty");
                let pool: Vec<usize> = worse.into_iter().filter(|&i| deltas[i] == *gentlest).collect();
                pool[rng.gen_range(0..pool.len())]
            }
        } else {
            let pool: Vec<usize> = (0..moves.len()).filter(|&i| deltas[i] == *best_delta).collect();
            pool[rng.gen_range(0..pool.len())]
        };
        current = apply_flip(&current, &moves[pick])?;
        trace.push(moves[pick].clone());
        used += 1;
        temperature = temperature * config.cooling / 1000;
        let f = current.f_vector().0;
        if f < best.0 {
            best = (f, trace.len(), current.clone());
        }
    }
    let (_, len, best_complex) = best;
    trace.truncate(len);
    Ok(ReductionReport { certified: is_simplex_boundary(&best_complex), complex: best_complex, trace, moves_used: used, restart })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::simplex_boundary;

    #[test]
    fn f_delta_matches_counts() {
        // 3-dim: edge [1,2] to triangle [3,4,5].
        let mv = BistellarMove::new(Simplex::from([1, 2]), Simplex::from([3, 4, 5]));
        assert_eq!(mv.f_delta(), [0, -1, -2, -1]);
        assert_eq!(mv.removed_facets().len(), 3);
        assert_eq!(mv.inserted_facets().len(), 2);
        let vertex = BistellarMove::new(Simplex::from([9]), Simplex::from([1, 2, 3, 4]));
        assert_eq!(vertex.f_delta(), [-1, -4, -6, -3]);
    }

    #[test]
    fn simplex_boundary_has_no_moves() {
        let c = simplex_boundary(5);
        assert!(valid_moves(&c).is_empty());
        assert_eq!(is_flippable(&c, &Simplex::from([1])), Ok(None));
        assert!(is_flippable(&c, &Simplex::from([1, 9])).is_err());
    }

    #[test]
    fn subdivide_then_undo() {
        // Stellar subdivision of a facet of ∂Δ³, then the reverse move.
        let c = simplex_boundary(3);
        let mv = BistellarMove::new(Simplex::from([1, 2, 3]), Simplex::from([5]));
        let sub = rebuild(&c, &mv.removed_facets().into_iter().collect(), mv.inserted_facets()).unwrap();
        assert_eq!(sub.n_facets(), 6);
        let back = is_flippable(&sub, &Simplex::from([5])).unwrap().unwrap();
        assert_eq!(back, mv.reverse());
        assert_eq!(apply_flip(&sub, &back).unwrap().facets(), c.facets());
        assert!(apply_flip(&c, &back).is_err());
    }

    #[test]
    fn reduce_trivial() {
        let r = reduce(&simplex_boundary(4), &ReduceConfig::default()).unwrap();
        assert!(r.certified);
        assert!(r.trace.is_empty());
    }
}
