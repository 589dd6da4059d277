//! Exact symbolic matrix engine.
//!
//! Everything downstream is built on three types: [`VarId`] (an interned
//! commuting variable), [`Polynomial`] (sparse multivariate, exact rational
//! coefficients, canonically ordered terms), and [`PolyMatrix`] (a square
//! matrix of polynomials). [`VarDecomposition`] is a performance
//! representation: a matrix whose entries are integer linear forms splits
//! into one integer coefficient matrix per variable, which turns Gram
//! computations of large designs into integer matrix products.

mod decompose;
mod matrix;
mod poly;
mod vars;

pub use decompose::{decompose_by_variable, IntMatrix, VarDecomposition};
pub use matrix::PolyMatrix;
pub use poly::{Coeff, Monomial, Polynomial};
pub use vars::{VarId, VarRegistry};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("matrix orders differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("circulant entry list is empty")]
    EmptyCirculant,
    #[error("entry at ({row}, {col}) is not a linear form")]
    NonlinearEntry { row: usize, col: usize },
    #[error("entry at ({row}, {col}) has a non-integer coefficient")]
    NonIntegerCoefficient { row: usize, col: usize },
}
