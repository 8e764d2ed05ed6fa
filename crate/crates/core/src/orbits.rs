//! Closed orbits, fixed-point counts and the zeta function.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{RationalFunction, TruncatedSeries, ZPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("orbit {index}: degree must be at least 1")]
    Degree { index: usize },
    #[error("orbit {index}: sign must be +1 or -1, got {sign}")]
    Sign { index: usize, sign: i64 },
    #[error("truncation order must be at least 1")]
    Order,
}

/// An irreducible closed orbit: it winds `k` times around the circle, and
/// each of its `k` fixed points of `f^k` has sign `sign`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Orbit {
    pub k: u32,
    pub sign: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<i64>>,
}

impl Orbit {
    pub fn new(k: u32, sign: i64) -> Self {
        Self { k, sign, class: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrbitSet {
    orbits: Vec<Orbit>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OrbitSetWire {
    orbits: Vec<Orbit>,
}

impl<'de> Deserialize<'de> for OrbitSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = OrbitSetWire::deserialize(d)?;
        OrbitSet::new(w.orbits).map_err(serde::de::Error::custom)
    }
}

impl OrbitSet {
    pub fn new(orbits: Vec<Orbit>) -> Result<Self, OrbitError> {
        for (index, o) in orbits.iter().enumerate() {
            if o.k == 0 {
                return Err(OrbitError::Degree { index });
            }
            if o.sign != 1 && o.sign != -1 {
                return Err(OrbitError::Sign { index, sign: o.sign });
            }
        }
        Ok(Self { orbits })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// `∏ (1 - t^k)^{-ε}` as an exact rational function.
    pub fn zeta_rational(&self) -> RationalFunction {
        let mut num = ZPoly::one();
        let mut den = ZPoly::one();
        for o in &self.orbits {
            let f = &ZPoly::one() - &ZPoly::monomial(i64::from(o.k), BigInt::from(1));
            if o.sign > 0 {
                den = &den * &f;
            } else {
                num = &num * &f;
            }
        }
        RationalFunction::new(&num, &den).expect("denominator is a product of nonzero factors")
    }
}

/// Signed fixed-point counts `Fix(f^1), ..., Fix(f^N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixCounts {
    counts: Vec<BigInt>,
}

impl FixCounts {
    pub fn new(counts: Vec<BigInt>) -> Self {
        Self { counts }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.counts.len()
    }

    /// `Fix(f^m)` for `1 <= m <= N`.
    pub fn get(&self, m: usize) -> &BigInt {
        &self.counts[m - 1]
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// `Σ_{k=1..N} Fix(f^k) t^k`, trusted below `N + 1`.
    pub fn generating_series(&self) -> TruncatedSeries {
        TruncatedSeries::from_terms(
            self.counts
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + 1, BigRational::from_integer(c.clone()))),
            self.counts.len() as i64 + 1,
        )
    }
}

/// `Fix(f^m) = Σ_{k(γ) | m} k(γ) ε(γ)` for `m = 1..N`.
pub fn fix_counts(o: &OrbitSet, n: usize) -> Result<FixCounts, OrbitError> {
    if n == 0 {
        return Err(OrbitError::Order);
    }
    let mut counts = vec![BigInt::from(0); n];
    for orbit in o.orbits() {
        let k = orbit.k as usize;
        for m in (k..=n).step_by(k) {
            counts[m - 1] += BigInt::from(orbit.sign) * BigInt::from(orbit.k);
        }
    }
    Ok(FixCounts::new(counts))
}

/// The orbit product `∏ (1 - t^k)^{-ε}` expanded below `t^N`.
pub fn zeta_product(o: &OrbitSet, n: usize) -> Result<TruncatedSeries, OrbitError> {
    if n == 0 {
        return Err(OrbitError::Order);
    }
    let n = n as i64;
    let mut acc = TruncatedSeries::one(n);
    for orbit in o.orbits() {
        let k = i64::from(orbit.k);
        let factor = if orbit.sign > 0 {
            // (1 - t^k)^{-1} = Σ_j t^{jk}
            TruncatedSeries::from_terms((0..n).step_by(k as usize).map(|e| (e, BigRational::from_integer(1.into()))), n)
        } else {
            TruncatedSeries::from_terms(
                [(0, BigRational::from_integer(1.into())), (k, BigRational::from_integer((-1).into()))],
                n,
            )
        };
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// `exp(Σ_k Fix(f^k) t^k / k)`, trusted below `N + 1`.
pub fn zeta_exp(fc: &FixCounts) -> TruncatedSeries {
    let n = fc.order() as i64 + 1;
    let log = TruncatedSeries::from_terms(
        fc.counts()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let k = i as i64 + 1;
                (k, BigRational::new(c.clone(), BigInt::from(k)))
            }),
        n,
    );
    log.exp().expect("the exponent has only positive powers and a nonempty range")
}
