//! Exact workbench for modular ortholattices.
//!
//! The crate evaluates ortholattice terms in subspace lattices `L(F^d)` over
//! the rationals and the Gaussian rationals, builds the frame and witness-term
//! machinery used to refute finite universal test sets, models the dyadic
//! direct limit of the doubling tower `L(F^1) -> L(F^2) -> L(F^4) -> ...`,
//! and realizes projection lattices of matrix *-rings through an exact
//! Moore–Penrose pseudo-inverse.
//!
//! Everything is exact: scalars are arbitrary-precision fractions and
//! subspaces are kept in reduced row echelon form, so lattice equality is
//! structural equality.

pub mod axioms;
pub mod error;
pub mod field;
pub mod frame;
pub mod interval;
pub mod json;
pub mod lattice;
pub mod limit;
pub mod matrix;
mod par;
pub mod random;
pub mod ring;
mod search;
pub mod subspace;
pub mod term;
pub mod testset;

pub use error::{Error, Result};
pub use field::{Field, FieldTag, Gaussian, Rational};
pub use frame::Frame;
pub use lattice::{eval, Ortholattice, Substitution};
pub use limit::{DyadicDim, LimitElement};
pub use matrix::Matrix;
pub use ring::ProjMatrix;
pub use subspace::{Subspace, SubspaceLattice};
pub use term::Term;
pub use testset::{Execution, SearchConfig, TestSet};
