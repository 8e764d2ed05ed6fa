//! Truncated Laurent series with an explicit precision.
//!
//! A series with precision `N` is trusted for every exponent `< N`;
//! coefficients at or above `N` are unknown and never stored.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{QPoly, ZPoly};
use super::rational::RationalFunction;
use super::AlgebraError;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: BTreeMap<i64, BigRational>,
    precision: i64,
}

impl TruncatedSeries {
    /// The zero series, trusted below `precision`.
    pub fn zero(precision: i64) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            precision,
        }
    }

    pub fn one(precision: i64) -> Self {
        Self::from_qpoly(&QPoly::one(), precision)
    }

    /// The exact polynomial `p` viewed as a series; terms at or above
    /// `precision` are dropped.
    pub fn from_qpoly(p: &QPoly, precision: i64) -> Self {
        Self {
            coeffs: p
                .terms()
                .filter(|&(e, _)| e < precision)
                .map(|(e, c)| (e, c.clone()))
                .collect(),
            precision,
        }
    }

    pub fn from_poly(p: &ZPoly, precision: i64) -> Self {
        Self::from_qpoly(&p.to_rational(), precision)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I, precision: i64) -> Self {
        let p = QPoly::from_terms(terms);
        Self::from_qpoly(&p, precision)
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// Lowest stored exponent, or the precision when no term is stored.
    pub fn lower(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.precision)
    }

    /// Exponent of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// The stored terms as an exact polynomial.
    pub fn to_qpoly(&self) -> QPoly {
        QPoly::from_terms(self.coeffs.iter().map(|(&e, c)| (e, c.clone())))
    }

    /// Lowers the precision to `precision` (no-op if already lower).
    pub fn truncate(&self, precision: i64) -> Self {
        let p = precision.min(self.precision);
        Self {
            coeffs: self
                .coeffs
                .range(..p)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
            precision: p,
        }
    }

    /// Whether the two series agree on every exponent both of them trust.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let p = self.precision.min(other.precision);
        self.truncate(p) == other.truncate(p)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.precision.min(other.precision);
        let sum = &self.to_qpoly() + &other.to_qpoly();
        Self::from_qpoly(&sum, p)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
            precision: self.precision,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_qpoly(&self.to_qpoly().scale(c), self.precision)
    }

    /// Multiplication by `t^k`; the precision moves with the terms.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
            precision: self.precision + k,
        }
    }

    /// Known valuation bound: the first nonzero exponent, or the precision
    /// for a series that is zero as far as it is known.
    fn order_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.precision)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = (self.precision + other.order_bound()).min(other.precision + self.order_bound());
        let mut out: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in other.coeffs.range(..p - ea) {
                let e = ea + eb;
                let entry = out.entry(e).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Self {
            coeffs: out,
            precision: p,
        }
    }

    /// Multiplicative inverse. Fails when no nonzero coefficient is known.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let v = self.valuation().ok_or(AlgebraError::EmptyTrustedRange)?;
        // self = t^v u with u(0) != 0 known to precision N - v
        let n = self.precision - v;
        let u: Vec<BigRational> = (0..n).map(|k| self.coeff(v + k)).collect();
        let u0 = u[0].clone();
        let mut inv = vec![BigRational::zero(); n as usize];
        inv[0] = u0.recip();
        for k in 1..n as usize {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !u[j].is_zero() {
                    acc += &u[j] * &inv[k - j];
                }
            }
            inv[k] = -acc / &u0;
        }
        let terms = inv.into_iter().enumerate().map(|(k, c)| (k as i64 - v, c));
        Ok(Self::from_terms(terms, n - v))
    }

    /// `t · d/dt`, which keeps the precision.
    pub fn t_derivative(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&e, _)| e != 0)
                .map(|(&e, c)| (e, c * BigRational::from_integer(BigInt::from(e))))
                .collect(),
            precision: self.precision,
        }
    }

    /// Formal exponential of a series with only positive exponents.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if self.coeffs.keys().any(|&e| e < 1) {
            return Err(AlgebraError::Precondition(
                "exp needs a series with only positive exponents".into(),
            ));
        }
        let n = self.precision;
        if n <= 0 {
            return Err(AlgebraError::EmptyTrustedRange);
        }
        // n e_n = Σ_{k=1..n} k s_k e_{n-k}
        let mut e = vec![BigRational::zero(); n as usize];
        e[0] = BigRational::one();
        for m in 1..n as usize {
            let mut acc = BigRational::zero();
            for (&k, sk) in self.coeffs.range(1..=m as i64) {
                acc += sk * BigRational::from_integer(BigInt::from(k)) * &e[m - k as usize];
            }
            e[m] = acc / BigRational::from_integer(BigInt::from(m));
        }
        Ok(Self::from_terms(
            e.into_iter().enumerate().map(|(k, c)| (k as i64, c)),
            n,
        ))
    }

    /// Formal logarithm of a series `1 + (positive exponents)`.
    pub fn log(&self) -> Result<Self, AlgebraError> {
        if self.coeffs.keys().any(|&e| e < 0) || !self.coeff(0).is_one() {
            return Err(AlgebraError::Precondition(
                "log needs a series with constant term 1 and no negative exponents".into(),
            ));
        }
        let n = self.precision;
        if n <= 0 {
            return Err(AlgebraError::EmptyTrustedRange);
        }
        // m l_m = m s_m - Σ_{k=1..m-1} k l_k s_{m-k}
        let mut l = vec![BigRational::zero(); n as usize];
        for m in 1..n as usize {
            let mut acc = self.coeff(m as i64) * BigRational::from_integer(BigInt::from(m));
            for k in 1..m {
                if !l[k].is_zero() {
                    acc -= &l[k]
                        * BigRational::from_integer(BigInt::from(k))
                        * self.coeff((m - k) as i64);
                }
            }
            l[m] = acc / BigRational::from_integer(BigInt::from(m));
        }
        Ok(Self::from_terms(
            l.into_iter().enumerate().map(|(k, c)| (k as i64, c)),
            n,
        ))
    }

    /// Whether only the exponent-0 coefficient can be nonzero; returns it.
    pub fn constant_value(&self) -> Option<BigRational> {
        if self.coeffs.keys().all(|&e| e == 0) {
            Some(self.coeff(0))
        } else {
            None
        }
    }
}

/// The image of `f` in the Laurent series field, trusted below `precision`.
///
/// Fails when `precision` does not exceed the valuation of a nonzero `f`,
/// since the result would carry no coefficient of `f`.
pub fn series_expand(f: &RationalFunction, precision: i64) -> Result<TruncatedSeries, AlgebraError> {
    if f.is_zero() {
        return Ok(TruncatedSeries::zero(precision));
    }
    let shift = f.shift_exponent();
    if precision <= shift {
        return Err(AlgebraError::EmptyTrustedRange);
    }
    let n = (precision - shift) as usize;
    let num = f.num_poly();
    let den = f.den_poly();
    let d0 = BigRational::from_integer(den.coeff(0));
    let dens: Vec<(usize, BigRational)> = den
        .terms()
        .filter(|&(e, _)| e > 0 && (e as usize) < n)
        .map(|(e, c)| (e as usize, BigRational::from_integer(c.clone())))
        .collect();
    let mut q = vec![BigRational::zero(); n];
    for k in 0..n {
        let mut acc = BigRational::from_integer(num.coeff(k as i64));
        for (j, dj) in &dens {
            if *j > k {
                break;
            }
            if !q[k - j].is_zero() {
                acc -= dj * &q[k - j];
            }
        }
        q[k] = acc / &d0;
    }
    let scalar = f.scalar().clone();
    Ok(TruncatedSeries::from_terms(
        q.into_iter()
            .enumerate()
            .map(|(k, c)| (k as i64 + shift, c * &scalar)),
        precision,
    ))
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.to_qpoly(), self.precision)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> ZPoly {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(&z(n), &z(d)).unwrap()
    }

    #[test]
    fn geometric_series() {
        let s = series_expand(&rf("1", "1 - t"), 4).unwrap();
        assert_eq!(s, TruncatedSeries::from_poly(&z("1 + t + t^2 + t^3"), 4));
    }

    #[test]
    fn exact_division_expansion() {
        let s = series_expand(&rf("1 - t^2", "1 - t"), 4).unwrap();
        assert_eq!(s, TruncatedSeries::from_poly(&z("1 + t"), 4));
    }

    #[test]
    fn shifted_geometric_series() {
        let s = series_expand(&rf("t^-1", "1 - t"), 3).unwrap();
        assert_eq!(s, TruncatedSeries::from_poly(&z("t^-1 + 1 + t + t^2"), 3));
    }

    #[test]
    fn empty_window_is_an_error() {
        assert_eq!(
            series_expand(&rf("t^5", "1 - t"), 5),
            Err(AlgebraError::EmptyTrustedRange)
        );
        assert!(TruncatedSeries::zero(4).inverse().is_err());
    }

    #[test]
    fn exp_of_zero_is_one() {
        let e = TruncatedSeries::zero(6).exp().unwrap();
        assert_eq!(e, TruncatedSeries::one(6));
    }

    #[test]
    fn exp_of_log_one_minus_t() {
        // -Σ t^j / j
        let s = TruncatedSeries::from_terms((1..5).map(|j| (j, q(-1, j))), 5);
        assert_eq!(s.exp().unwrap(), TruncatedSeries::from_poly(&z("1 - t"), 5));
    }

    #[test]
    fn mercator_series() {
        let s = TruncatedSeries::from_poly(&z("1 + t"), 4);
        let l = s.log().unwrap();
        let expected = TruncatedSeries::from_terms([(1, q(1, 1)), (2, q(-1, 2)), (3, q(1, 3))], 4);
        assert_eq!(l, expected);
    }

    #[test]
    fn preconditions() {
        assert!(TruncatedSeries::from_poly(&z("1 + t"), 4).exp().is_err());
        assert!(TruncatedSeries::from_poly(&z("2 + t"), 4).log().is_err());
        assert!(TruncatedSeries::from_poly(&z("t^-1 + 1"), 4).log().is_err());
    }

    #[test]
    fn product_precision() {
        // (t + O(t^4)) (t^-1 + O(t^2)) is trusted below min(4 - 1, 2 + 1) = 3
        let a = TruncatedSeries::from_poly(&z("t"), 4);
        let b = TruncatedSeries::from_poly(&z("t^-1"), 2);
        let c = a.mul(&b);
        assert_eq!(c.precision(), 3);
        assert_eq!(c, TruncatedSeries::from_poly(&z("1"), 3));
    }

    #[test]
    fn inverse_roundtrip() {
        let s = series_expand(&rf("2 - t + 3t^2", "1"), 10).unwrap().shift(-2);
        let inv = s.inverse().unwrap();
        let prod = s.mul(&inv);
        assert!(prod.agrees_with(&TruncatedSeries::one(prod.precision())));
        assert_eq!(prod.precision(), 10);
    }
}
