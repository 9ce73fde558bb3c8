//! Combinatorial machinery for vertex-minimal triangulations of real
//! projective space.
//!
//! The crate is `no_std` (it needs `alloc`) and free of IO. It provides:
//!
//! * [`complex`]: pure abstract simplicial complexes stored by facets, with
//!   links, joins, skeleton distances, quotients and standard generators.
//! * [`flips`]: bistellar moves, validated simultaneous flip batches and a
//!   seeded annealing reducer used to certify spheres.
//! * [`homology`]: integer homology through a sparse Smith normal form over
//!   arbitrary-precision integers, plus a GF(2) rank cross-check.
//! * [`symmetry`]: automorphism groups, isomorphism testing and canonical
//!   forms by partition refinement and backtracking.
//! * [`manifold`]: pseudomanifold, combinatorial-manifold and antipodality
//!   checks.
//! * [`constructions`]: every complex built along the way to the 16-vertex
//!   `RP^4`, plus `RP^2_6`, `RP^3_11` and Kühnel's `RP^n`.
//! * [`designs`]: the labelled `K_6`, its quasi-symmetric designs, the two
//!   16-point biplanes and the 3-(22,6,1) Witt design.
#![no_std]

extern crate alloc;

pub mod complex;
pub mod constructions;
pub mod designs;
pub mod flips;
pub mod homology;
pub mod manifold;
pub mod symmetry;

pub use complex::{
    Distance, FVector, Involution, Simplex, SimplicialComplex, Vertex, VertexMap,
};
