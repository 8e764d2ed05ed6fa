//! Single-variable Laurent polynomials `Σ c_e t^e` with finitely many terms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coeff::Coeff;

/// A Laurent polynomial with coefficients in `C`.
///
/// The zero polynomial is the empty map; no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<C: Coeff> {
    coeffs: BTreeMap<i64, C>,
}

/// Integer Laurent polynomials, `Z[t, t⁻¹]`.
pub type ZPoly = LaurentPoly<BigInt>;
/// Rational Laurent polynomials, `Q[t, t⁻¹]`.
pub type QPoly = LaurentPoly<BigRational>;

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: C) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut coeffs: BTreeMap<i64, C> = BTreeMap::new();
        for (e, c) in terms {
            let entry = coeffs.entry(e).or_insert_with(C::zero);
            *entry = entry.clone() + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    /// Builds `Σ coeffs[i] t^(shift + i)`.
    pub fn from_dense(shift: i64, coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i64, c.clone())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.coeffs.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `max_exp - min_exp`; the degree once the power of `t` is cleared.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// Coefficient of the lowest power of `t`.
    pub fn lowest_coeff(&self) -> Option<&C> {
        self.coeffs.values().next()
    }

    /// Coefficient of the highest power of `t`.
    pub fn highest_coeff(&self) -> Option<&C> {
        self.coeffs.values().next_back()
    }

    /// Units of the Laurent ring: a single term with an invertible coefficient.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.values().all(|c| c.is_ring_unit())
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, a)| (e, a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Splits `self = t^shift · Σ dense[i] t^i` with `dense[0] != 0`.
    /// Returns `None` for zero.
    pub fn split_t_power(&self) -> Option<(i64, Vec<C>)> {
        let lo = self.min_exp()?;
        let hi = self.max_exp()?;
        let mut dense = vec![C::zero(); (hi - lo + 1) as usize];
        for (&e, c) in &self.coeffs {
            dense[(e - lo) as usize] = c.clone();
        }
        Some((lo, dense))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative `d/dt`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .filter(|(&e, _)| e != 0)
                .map(|(&e, c)| (e - 1, c.clone() * C::from_bigint(BigInt::from(e)))),
        )
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn invert_variable(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn to_rational(&self) -> QPoly {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e, c.to_rational()))
                .collect(),
        }
    }

    /// Exact division in the Laurent ring: `Some(q)` with `q * divisor == self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (sa, mut rem) = self.split_t_power()?;
        let (sb, den) = divisor.split_t_power()?;
        if rem.len() < den.len() {
            return None;
        }
        let lead = den.last().cloned()?;
        let qlen = rem.len() - den.len() + 1;
        let mut quot = vec![C::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + den.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.checked_quotient(&lead)?;
            for (j, d) in den.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - q.clone() * d.clone();
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(sa - sb, &quot))
    }

    pub(crate) fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.coeffs.iter().map(|(&e, c)| (e, f(c))))
    }
}

impl ZPoly {
    /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, keeping the sign of the coefficients.
    pub fn primitive_part(&self) -> ZPoly {
        let c = self.content();
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, a)| (e, a / &c))
                .collect(),
        }
    }

    /// Evaluates the polynomial at an integer point `t = x` (`x` must be
    /// nonzero when negative exponents occur).
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, (&e, c)| {
            let p = if e >= 0 {
                x.pow(e as i32)
            } else {
                x.recip().pow((-e) as i32)
            };
            acc + p * BigRational::from_integer(c.clone())
        })
    }
}

impl QPoly {
    /// Writes `self = c · p` with `p` an integer polynomial of content one whose
    /// lowest coefficient is positive. Returns `None` for zero.
    pub fn to_primitive(&self) -> Option<(BigRational, ZPoly)> {
        if self.is_zero() {
            return None;
        }
        let lcm = self
            .coeffs
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = ZPoly::from_terms(
            self.coeffs
                .iter()
                .map(|(&e, c)| (e, (c * BigRational::from_integer(lcm.clone())).to_integer())),
        );
        let mut content = ints.content();
        let mut prim = ints.primitive_part();
        if prim.lowest_coeff().is_some_and(|c| c.is_negative()) {
            prim = -prim;
            content = -content;
        }
        Some((BigRational::new(content, lcm), prim))
    }

    /// Euclidean division in `Q[t, t⁻¹]` with respect to the span:
    /// `self = q · divisor + r` with `span(r) < span(divisor)` or `r = 0`.
    pub fn div_rem_span(&self, divisor: &QPoly) -> Option<(QPoly, QPoly)> {
        let (sb, den) = divisor.split_t_power()?;
        let Some((sa, mut rem)) = self.split_t_power() else {
            return Some((QPoly::zero(), QPoly::zero()));
        };
        if rem.len() < den.len() {
            return Some((QPoly::zero(), self.clone()));
        }
        let lead = den.last()?.clone();
        let qlen = rem.len() - den.len() + 1;
        let mut quot = vec![BigRational::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + den.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = &top / &lead;
            for (j, d) in den.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &q * d;
            }
            quot[i] = q;
        }
        Some((
            QPoly::from_dense(sa - sb, &quot),
            QPoly::from_dense(sa, &rem),
        ))
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn to_integer_poly(&self) -> Option<ZPoly> {
        self.is_integral()
            .then(|| self.map_coeffs(|c| c.to_integer()))
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let show_coeff = !abs.is_one() || e == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl<'a, C: Coeff> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &rhs.coeffs {
            let entry = coeffs.entry(e).or_insert_with(C::zero);
            *entry = entry.clone() + c.clone();
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        LaurentPoly { coeffs }
    }
}

impl<'a, C: Coeff> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &rhs.coeffs {
            let entry = coeffs.entry(e).or_insert_with(C::zero);
            *entry = entry.clone() - c.clone();
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        LaurentPoly { coeffs }
    }
}

impl<'a, C: Coeff> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut coeffs: BTreeMap<i64, C> = BTreeMap::new();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                let entry = coeffs.entry(ea + eb).or_insert_with(C::zero);
                *entry = entry.clone() + ca.clone() * cb.clone();
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, C: Coeff> $tr<&'a LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Parses a compact textual form such as `1 - t + t^2` or `2t^-1 - 3`.
/// Used by tests and the command line.
impl std::str::FromStr for ZPoly {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err("empty polynomial".into());
        }
        let mut terms = Vec::new();
        let mut rest = cleaned.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            // the next term ends at a '+' or at a '-' that is not an exponent sign
            let bytes = body.as_bytes();
            let mut end = bytes.len();
            for i in 1..bytes.len() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                    end = i;
                    break;
                }
            }
            let term = &body[..end];
            rest = &body[end..];
            let (coeff, exp) = match term.find('t') {
                None => (term.parse::<BigInt>().map_err(|e| e.to_string())?, 0),
                Some(pos) => {
                    let c = if pos == 0 {
                        BigInt::one()
                    } else {
                        term[..pos]
                            .trim_end_matches('*')
                            .parse::<BigInt>()
                            .map_err(|e| e.to_string())?
                    };
                    let after = &term[pos + 1..];
                    let e = if after.is_empty() {
                        1
                    } else {
                        after
                            .strip_prefix('^')
                            .ok_or_else(|| format!("bad term `{term}`"))?
                            .trim_matches(|c| c == '(' || c == ')')
                            .parse::<i64>()
                            .map_err(|e| e.to_string())?
                    };
                    (c, e)
                }
            };
            terms.push((exp, coeff * sign));
        }
        Ok(ZPoly::from_terms(terms))
    }
}
