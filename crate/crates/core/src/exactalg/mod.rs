//! Exact arithmetic: integer and rational Laurent polynomials, rational
//! functions, truncated Laurent series and unit-class normal forms.

mod coeff;
mod gcd;
mod laurent;
mod rational;
mod series;
mod unit;
pub mod wire;

pub use coeff::{parse_rational, rational_to_string, Coeff};
pub use gcd::{gcd_laurent, normalize_pm_tk};
pub use laurent::{LaurentPoly, QPoly, ZPoly};
pub use rational::RationalFunction;
pub use series::{series_expand, TruncatedSeries};
pub use unit::{normalize_unit_class, Ambiguity, UnitClass};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero element has no unit class")]
    ZeroUnitClass,
    #[error("result has an empty trusted range")]
    EmptyTrustedRange,
    #[error("precondition violated: {0}")]
    Precondition(String),
}
