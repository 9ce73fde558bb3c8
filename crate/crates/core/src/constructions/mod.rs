//! Generators for every complex on the way to the 16-vertex `RP^4`.
//!
//! Each construction emits its facets stage by stage and checks every
//! stage count as it goes; a count mismatch is an error, not a panic.
//! Vertex ids are fixed per construction and documented on each builder,
//! and every vertex carries a label naming the point it stands for.

mod c1;
mod c2;
mod c3;
mod small;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use c1::{c1_coordinate_permutation, c1_pipeline, C1};
pub use c2::{c2_pipeline, c2_with_diagonals, DiagonalChoice, C2, C2_STAGE_COUNTS};
pub use c3::{c3_pipeline, SuspendedCube, C3, C3_STAGE_COUNTS};
pub use small::{arnoux_marin_bound, kuehnel_rp, rp2_6, rp3_11, rp4_from_k6};

use crate::complex::{ComplexError, QuotientError, Simplex, SimplicialComplex, Vertex};
use crate::flips::FlipError;
use crate::manifold::AntipodalFailure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    StageCount { stage: &'static str, expected: usize, found: usize },
    /// A stage emitted a facet that an earlier stage already has.
    RepeatedFacet { stage: &'static str, facet: Simplex },
    /// The antipodality gate before a quotient failed.
    NotAntipodal { stage: &'static str, failure: AntipodalFailure },
    /// Two links that must agree do not.
    LinkMismatch { stage: &'static str, vertex: Vertex },
    NotClosed { stage: &'static str },
    /// The requested parameter is outside the range where the result holds.
    OutOfRange(usize),
    Flip(FlipError),
    Quotient(QuotientError),
    Complex(ComplexError),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::StageCount { stage, expected, found } => {
                write!(f, "stage {stage}: expected {expected}, found {found}")
            }
            ConstructionError::RepeatedFacet { stage, facet } => write!(f, "stage {stage}: facet {facet} repeated"),
            ConstructionError::NotAntipodal { stage, failure } => write!(f, "stage {stage}: not antipodal ({failure})"),
            ConstructionError::LinkMismatch { stage, vertex } => write!(f, "stage {stage}: link mismatch at {vertex}"),
            ConstructionError::NotClosed { stage } => write!(f, "stage {stage}: not a closed pseudomanifold"),
            ConstructionError::OutOfRange(n) => write!(f, "parameter {n} out of range"),
            ConstructionError::Flip(e) => write!(f, "{e}"),
            ConstructionError::Quotient(e) => write!(f, "{e}"),
            ConstructionError::Complex(e) => write!(f, "{e}"),
        }
    }
}

impl From<FlipError> for ConstructionError {
    fn from(e: FlipError) -> Self {
        ConstructionError::Flip(e)
    }
}

impl From<QuotientError> for ConstructionError {
    fn from(e: QuotientError) -> Self {
        ConstructionError::Quotient(e)
    }
}

impl From<ComplexError> for ConstructionError {
    fn from(e: ComplexError) -> Self {
        ConstructionError::Complex(e)
    }
}

fn expect_count(stage: &'static str, expected: usize, found: usize) -> Result<(), ConstructionError> {
    if expected == found {
        Ok(())
    } else {
        Err(ConstructionError::StageCount { stage, expected, found })
    }
}

/// Accumulates facets stage by stage, refusing repeats.
#[derive(Default)]
struct Stages {
    all: BTreeSet<Simplex>,
    counts: Vec<usize>,
}

impl Stages {
    fn add(&mut self, stage: &'static str, expected: usize, facets: Vec<Simplex>) -> Result<Vec<Simplex>, ConstructionError> {
        let distinct: BTreeSet<Simplex> = facets.iter().cloned().collect();
        expect_count(stage, expected, distinct.len())?;
        if let Some(f) = distinct.iter().find(|f| self.all.contains(*f)) {
            return Err(ConstructionError::RepeatedFacet { stage, facet: f.clone() });
        }
        self.all.extend(distinct.iter().cloned());
        self.counts.push(distinct.len());
        Ok(distinct.into_iter().collect())
    }
}

fn simplex(vs: impl IntoIterator<Item = Vertex>) -> Simplex {
    Simplex::new(vs).expect("construction facets have distinct vertices")
}

fn labelled(facets: impl IntoIterator<Item = Simplex>, labels: &BTreeMap<Vertex, String>) -> Result<SimplicialComplex, ConstructionError> {
    Ok(SimplicialComplex::new(facets)?.with_labels(labels.clone()))
}

/// `± 1` written as a sign character.
fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}
