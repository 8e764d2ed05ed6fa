//! The ring interfaces the linear algebra is generic over.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactalg::{Coeff, LaurentPoly, RationalFunction};

/// A commutative ring without zero divisors.
///
/// Method names avoid the operator traits so that generic code never has to
/// disambiguate between `Add::add` and the ring operation.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
}

/// Rings where exact quotients can be computed.
pub trait ExactDiv: Ring {
    /// `Some(q)` with `q * divisor == self`, if such `q` exists.
    fn divide_exact(&self, divisor: &Self) -> Option<Self>;
}

pub trait Field: ExactDiv {
    fn invert(&self) -> Option<Self> {
        <Self as Ring>::one().divide_exact(self)
    }
}

impl<C: Coeff> Ring for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl<C: Coeff> ExactDiv for LaurentPoly<C> {
    fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        self.exact_div(divisor)
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl ExactDiv for RationalFunction {
    fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        self.checked_div(divisor).ok()
    }
}

impl Field for RationalFunction {}

macro_rules! num_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn zero() -> Self {
                <$t as Zero>::zero()
            }
            fn one() -> Self {
                <$t as One>::one()
            }
            fn is_zero(&self) -> bool {
                Zero::is_zero(self)
            }
            fn plus(&self, other: &Self) -> Self {
                self + other
            }
            fn minus(&self, other: &Self) -> Self {
                self - other
            }
            fn times(&self, other: &Self) -> Self {
                self * other
            }
            fn negate(&self) -> Self {
                -self
            }
        }

        impl ExactDiv for $t {
            fn divide_exact(&self, divisor: &Self) -> Option<Self> {
                self.checked_quotient(divisor)
            }
        }
    };
}

num_ring!(BigInt);
num_ring!(BigRational);

impl Field for BigRational {}
