//! Elements of `Q(t)`, the fraction field of `Z[t, t⁻¹]`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gcd::gcd_laurent;
use super::laurent::{QPoly, ZPoly};
use super::AlgebraError;

/// A rational function stored in reduced form
/// `scalar · t^shift · num(t) / den(t)`.
///
/// `num` and `den` are primitive integer polynomials in `t` (no negative
/// powers) with positive constant terms and no common factor. The zero
/// function has `scalar == 0`, `shift == 0`, `num == den == 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    scalar: BigRational,
    shift: i64,
    num: ZPoly,
    den: ZPoly,
}

/// `p = c · t^s · q` with `q ∈ Z[t]` primitive and `q(0) > 0`.
fn split(p: &QPoly) -> Option<(BigRational, i64, ZPoly)> {
    let (c, prim) = p.to_primitive()?;
    let lo = prim.min_exp()?;
    Some((c, lo, prim.shift(-lo)))
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self {
            scalar: BigRational::zero(),
            shift: 0,
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_scalar(BigRational::one())
    }

    pub fn from_scalar(c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            scalar: c,
            shift: 0,
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn from_poly(p: &ZPoly) -> Self {
        Self::from_qpoly(&p.to_rational())
    }

    pub fn from_qpoly(p: &QPoly) -> Self {
        match split(p) {
            None => Self::zero(),
            Some((c, s, q)) => Self {
                scalar: c,
                shift: s,
                num: q,
                den: ZPoly::one(),
            },
        }
    }

    /// `num / den`; fails when `den` is zero.
    pub fn new(num: &ZPoly, den: &ZPoly) -> Result<Self, AlgebraError> {
        Self::from_qpolys(&num.to_rational(), &den.to_rational())
    }

    pub fn from_qpolys(num: &QPoly, den: &QPoly) -> Result<Self, AlgebraError> {
        let (cd, sd, d) = split(den).ok_or(AlgebraError::DivisionByZero)?;
        let Some((cn, sn, n)) = split(num) else {
            return Ok(Self::zero());
        };
        Ok(Self::from_parts(cn / cd, sn - sd, n, d))
    }

    /// Reduces `scalar · t^shift · num / den` where `num`, `den` are primitive
    /// polynomials with positive constant terms.
    fn from_parts(scalar: BigRational, shift: i64, num: ZPoly, den: ZPoly) -> Self {
        if scalar.is_zero() {
            return Self::zero();
        }
        let g = gcd_laurent(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        Self {
            scalar,
            shift,
            num,
            den,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn shift_exponent(&self) -> i64 {
        self.shift
    }

    /// Reduced numerator polynomial (primitive, positive constant term).
    pub fn num_poly(&self) -> &ZPoly {
        &self.num
    }

    /// Reduced denominator polynomial (primitive, positive constant term).
    pub fn den_poly(&self) -> &ZPoly {
        &self.den
    }

    /// The whole numerator `scalar · t^shift · num` as a rational Laurent
    /// polynomial, paired with the denominator.
    pub fn to_qpolys(&self) -> (QPoly, QPoly) {
        (
            self.num.to_rational().shift(self.shift).scale(&self.scalar),
            self.den.to_rational(),
        )
    }

    /// Returns the polynomial when the denominator is trivial and the
    /// coefficients are integral.
    pub fn to_laurent(&self) -> Option<ZPoly> {
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if !self.den.is_one() {
            return None;
        }
        self.to_qpolys().0.to_integer_poly()
    }

    /// The lowest-order coefficient of the Laurent expansion around `t = 0`.
    pub fn leading_coefficient(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let n0 = self.num.coeff(0);
        let d0 = self.den.coeff(0);
        &self.scalar * BigRational::new(n0, d0)
    }

    /// Valuation at `t = 0` (exponent of the leading term); `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.shift)
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self {
            scalar: self.scalar.recip(),
            shift: -self.shift,
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &other.inverse()?)
    }

    pub fn powi(&self, n: i64) -> Result<Self, AlgebraError> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn mul_t_power(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut r = self.clone();
        r.shift += k;
        r
    }

    /// Formal derivative `d/dt`.
    pub fn derivative(&self) -> Self {
        let (n, d) = self.to_qpolys();
        let top = &(&n.derivative() * &d) - &(&n * &d.derivative());
        Self::from_qpolys(&top, &(&d * &d)).expect("nonzero denominator")
    }

    /// `t · f'(t) / f(t)`, the logarithmic derivative scaled by `t`. It is
    /// unchanged when `f` is multiplied by a nonzero constant.
    pub fn t_log_derivative(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        // t f'/f = shift + t num'/num - t den'/den
        let t = RationalFunction::from_poly(&ZPoly::t());
        let n = RationalFunction::from_poly(&self.num);
        let d = RationalFunction::from_poly(&self.den);
        let nn = &(&t * &n.derivative()) * &n.inverse()?;
        let dd = &(&t * &d.derivative()) * &d.inverse()?;
        let s = RationalFunction::from_scalar(BigRational::from_integer(BigInt::from(self.shift)));
        Ok(&(&s + &nn) - &dd)
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn invert_variable(&self) -> Self {
        let (n, d) = self.to_qpolys();
        Self::from_qpolys(&n.invert_variable(), &d.invert_variable()).expect("nonzero")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, _) = self.to_qpolys();
        if self.den.is_one() {
            write!(f, "{n}")
        } else {
            write!(f, "({n})/({})", self.den)
        }
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // cross-cancel before multiplying to keep operands small
        let g1 = gcd_laurent(&self.num, &rhs.den);
        let g2 = gcd_laurent(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        RationalFunction {
            scalar: &self.scalar * &rhs.scalar,
            shift: self.shift + rhs.shift,
            num: &n1 * &n2,
            den: &d1 * &d2,
        }
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let base = self.shift.min(rhs.shift);
        let a = self
            .num
            .to_rational()
            .shift(self.shift - base)
            .scale(&self.scalar);
        let b = rhs
            .num
            .to_rational()
            .shift(rhs.shift - base)
            .scale(&rhs.scalar);
        let (top, den) = if self.den == rhs.den {
            (&a + &b, self.den.to_rational())
        } else {
            (
                &(&a * &rhs.den.to_rational()) + &(&b * &self.den.to_rational()),
                (&self.den * &rhs.den).to_rational(),
            )
        };
        RationalFunction::from_qpolys(&top, &den)
            .expect("nonzero denominator")
            .mul_t_power(base)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        let mut r = self.clone();
        r.scalar = -r.scalar;
        r
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

/// Panics on division by zero; use [`RationalFunction::checked_div`] for
/// a fallible variant.
impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &'a RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl From<&ZPoly> for RationalFunction {
    fn from(p: &ZPoly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl From<ZPoly> for RationalFunction {
    fn from(p: ZPoly) -> Self {
        RationalFunction::from_poly(&p)
    }
}
