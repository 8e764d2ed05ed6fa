use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient ring of a Laurent polynomial: the integers or the rationals.
pub trait Coeff:
    Clone + fmt::Debug + fmt::Display + Ord + Signed + Send + Sync + 'static
{
    /// `Some(q)` with `q * divisor == self`, if such a `q` exists in the ring.
    fn checked_quotient(&self, divisor: &Self) -> Option<Self>;

    fn to_rational(&self) -> BigRational;

    /// Whether the element is invertible in the coefficient ring.
    fn is_ring_unit(&self) -> bool;

    fn from_bigint(n: BigInt) -> Self;
}

impl Coeff for BigInt {
    fn checked_quotient(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn is_ring_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn from_bigint(n: BigInt) -> Self {
        n
    }
}

impl Coeff for BigRational {
    fn checked_quotient(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn is_ring_unit(&self) -> bool {
        !self.is_zero()
    }

    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }
}

/// Renders a rational as `p/q`, or just `p` when the denominator is one.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}
