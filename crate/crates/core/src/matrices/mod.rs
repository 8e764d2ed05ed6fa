//! Dense exact linear algebra over the rings of [`crate::exactalg`].

mod elimination;
mod matrix;
mod minors;
mod ring;
mod smith;

pub use elimination::{determinant, determinant_cofactor, echelon, inverse, rank, solve, Echelon};
pub use matrix::Matrix;
pub use minors::{enumerate_minors, Minor, Minors};
pub use ring::{ExactDiv, Field, Ring};
pub use smith::{smith_normal_form, SmithForm};

use thiserror::Error;

use crate::exactalg::{RationalFunction, ZPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("expected a square matrix, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("the linear system is inconsistent")]
    Inconsistent,
    #[error("the matrix is singular")]
    Singular,
    #[error("no {k}x{k} minors in a {rows}x{cols} matrix")]
    MinorOrder { k: usize, rows: usize, cols: usize },
}

/// Integer Laurent matrix viewed over the field of rational functions.
pub fn to_fraction_field(m: &Matrix<ZPoly>) -> Matrix<RationalFunction> {
    m.map(RationalFunction::from_poly)
}

#[cfg(test)]
mod tests;
