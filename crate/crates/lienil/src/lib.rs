//! Finite-dimensional Lie algebras over finite fields, their nilpotentizers,
//! and the graphs those induce.
//!
//! An algebra is given by a structure-constant table over GF(p^k) and checked
//! against the alternating, antisymmetry, and Jacobi axioms on construction.
//! For an element h of L, nil_L(h) is the set of x whose generated subalgebra
//! <h, x> is nilpotent; nil(L) is the intersection over all h. The nilpotent
//! graph of L has the elements outside nil(L) as vertices and joins x and y
//! when <x, y> is nilpotent; the complement graph joins them when it is not.
//! Everything is computed exhaustively and exactly, so results at desk scale
//! are proofs by enumeration, not samples.
//!
//! Conventions baked in throughout:
//! * ad x acts on the right: (ad x)(y) = [y, x], and column j of
//!   [`LieAlgebra::ad_matrix`] holds the coordinates of [b_j, x].
//! * Elements of an n-dimensional algebra over GF(q) are indexed 0..q^n by
//!   their coordinate vectors, coordinate 0 least significant.
//! * Extension fields always use the lexicographically smallest monic
//!   irreducible modulus, so indices are reproducible across runs.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod export;
pub mod field;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod nilpotentizer;
pub mod series;

pub use algebra::{DirectSum, Element, LieAlgebra};
pub use error::{Error, Violation};
pub use field::{Field, FieldElement};
pub use graph::{CheckItem, CheckReport, ComponentSummary, GraphKind, NilGraph};
pub use linalg::{Mat, Subspace};
pub use nilpotentizer::{LawCheck, NilLawReport, NilScanner, NilSet};

/// Enumeration budgets. Operations that would walk more elements or
/// subspaces than allowed return a typed error instead of running away.
#[derive(Copy, Clone, Debug)]
pub struct Caps {
    pub max_elements: u64,
    pub max_subspaces: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_elements: 4096, max_subspaces: 1_000_000 }
    }
}
