//! Canonical representatives of nonzero rational functions modulo units.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::laurent::ZPoly;
use super::rational::RationalFunction;
use super::AlgebraError;

/// Which units are divided out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ambiguity {
    /// Units of `Z[t, t⁻¹]`: `±t^k`.
    #[serde(rename = "pm_tk")]
    PlusMinusTk,
    /// Units of `Q[t, t⁻¹]`: `c·t^k` with `c` a nonzero rational.
    #[serde(rename = "rational_tk")]
    RationalTk,
}

/// A nonzero rational function modulo the units selected by `ambiguity`.
///
/// Representative: `scalar · num / den` with `scalar > 0` (forced to `1`
/// for [`Ambiguity::RationalTk`]), `num`, `den` primitive integer
/// polynomials in `t` with positive constant terms and no common factor.
/// Two values are equal exactly when all fields match.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnitClass {
    scalar: BigRational,
    num: ZPoly,
    den: ZPoly,
    ambiguity: Ambiguity,
}

impl UnitClass {
    pub fn new(f: &RationalFunction, ambiguity: Ambiguity) -> Result<Self, AlgebraError> {
        if f.is_zero() {
            return Err(AlgebraError::ZeroUnitClass);
        }
        let scalar = match ambiguity {
            Ambiguity::PlusMinusTk => f.scalar().abs(),
            Ambiguity::RationalTk => BigRational::one(),
        };
        Ok(Self {
            scalar,
            num: f.num_poly().clone(),
            den: f.den_poly().clone(),
            ambiguity,
        })
    }

    pub fn one(ambiguity: Ambiguity) -> Self {
        Self::new(&RationalFunction::one(), ambiguity).expect("one is nonzero")
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    pub fn ambiguity(&self) -> Ambiguity {
        self.ambiguity
    }

    /// The canonical representative as a rational function.
    pub fn representative(&self) -> RationalFunction {
        let n = RationalFunction::from_poly(&self.num);
        let d = RationalFunction::from_poly(&self.den);
        let s = RationalFunction::from_scalar(self.scalar.clone());
        &(&s * &n) / &d
    }

    /// Re-reads the class modulo a coarser ambiguity group.
    pub fn coarsen(&self, ambiguity: Ambiguity) -> Self {
        match (self.ambiguity, ambiguity) {
            (Ambiguity::RationalTk, _) | (_, Ambiguity::PlusMinusTk) => Self {
                ambiguity: self.ambiguity,
                ..self.clone()
            },
            (Ambiguity::PlusMinusTk, Ambiguity::RationalTk) => Self {
                scalar: BigRational::one(),
                ambiguity,
                ..self.clone()
            },
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let amb = if self.ambiguity == Ambiguity::RationalTk || other.ambiguity == Ambiguity::RationalTk {
            Ambiguity::RationalTk
        } else {
            Ambiguity::PlusMinusTk
        };
        let p = &self.representative() * &other.representative();
        Self::new(&p, amb).expect("product of nonzero classes")
    }

    pub fn inverse(&self) -> Self {
        let r = self.representative().inverse().expect("nonzero class");
        Self::new(&r, self.ambiguity).expect("nonzero class")
    }

    pub fn powi(&self, n: i64) -> Self {
        let r = self.representative().powi(n).expect("nonzero class");
        Self::new(&r, self.ambiguity).expect("nonzero class")
    }

    /// Lowest-order coefficient of the representative's Laurent expansion.
    pub fn leading_coefficient(&self) -> BigRational {
        self.representative().leading_coefficient()
    }
}

/// Canonical representative of `f` modulo the units selected by `ambiguity`.
pub fn normalize_unit_class(
    f: &RationalFunction,
    ambiguity: Ambiguity,
) -> Result<UnitClass, AlgebraError> {
    UnitClass::new(f, ambiguity)
}

impl fmt::Debug for UnitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative())
    }
}

impl fmt::Display for UnitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative())
    }
}
