//! Exact complete generalised Wronskian brackets on polynomial algebras.
//!
//! The crate evaluates the totally skew N-ary bracket given by the full
//! generalised Wronskian determinant, computes the generalised Vandermonde
//! determinants that govern it on monomials, provides closed-form structure
//! constants, and classifies polynomial subalgebras by exact iteration.

pub mod cli;
pub mod closed_forms;
pub mod det;
pub mod error;
pub mod grammar;
pub mod index;
pub mod lab;
pub mod poly;
pub mod selfcheck;
pub mod vandermonde;
pub mod wronskian;

pub use error::{Error, Result};
pub use index::{BracketContext, MultiIndex};
pub use poly::{ExponentVector, GenPolynomial, Rational};
