//! Group rings of free abelian groups, their Novikov completions truncated
//! by a grading, and the invariant `I_η` built from orbits and path counts.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::exactalg::wire::WireInt;
use crate::exactalg::{TruncatedSeries, ZPoly};
use crate::orbits::{Orbit, OrbitSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NovikovError {
    #[error("exponent vector of length {got} in a rank {rank} group")]
    Rank { rank: usize, got: usize },
    #[error("weights have length {got}, expected {rank}")]
    Weights { rank: usize, got: usize },
    #[error("orbit {index} has no homology class")]
    MissingClass { index: usize },
    #[error("orbit {index} has class grading {grading}; the Novikov expansion needs a positive grading")]
    NonPositiveGrading { index: usize, grading: i64 },
    #[error("orbit {index} has degree {k} but its class has grading {grading}")]
    DegreeMismatch { index: usize, k: u32, grading: i64 },
    #[error("path matrix must be square, got {rows}x{cols}")]
    PathMatrix { rows: usize, cols: usize },
    #[error("chi_sigma must be even, got {0}")]
    OddEuler(i64),
    #[error("exponent {exponent} has no balanced base-{base} expansion in the box")]
    NoBalancedDigits { exponent: i64, base: i64 },
    #[error("box size N must be at least 1")]
    BoxSize,
    #[error("no translate is invariant under inversion: {0}")]
    NotSymmetric(String),
}

fn grading(weights: &[i64], exp: &[i64]) -> i64 {
    weights.iter().zip(exp).map(|(w, a)| w * a).sum()
}

/// An element of `Z[Z^r]`: a finite sum of group elements with integer
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    rank: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl GroupRingElement {
    pub fn new<I: IntoIterator<Item = (Vec<i64>, BigInt)>>(rank: usize, terms: I) -> Result<Self, NovikovError> {
        let mut acc: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != rank {
                return Err(NovikovError::Rank { rank, got: e.len() });
            }
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { rank, terms: acc })
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], BigInt::from(1))
    }

    pub fn monomial(exp: Vec<i64>, c: BigInt) -> Self {
        let rank = exp.len();
        Self::new(rank, [(exp, c)]).expect("length matches")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(e.clone()).or_insert_with(BigInt::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { rank: self.rank, terms }
    }

    pub fn neg(&self) -> Self {
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self { rank: self.rank, terms }
    }

    /// `ρ`: each group element `γ` goes to `t^{w·γ}`.
    pub fn specialize(&self, weights: &[i64]) -> ZPoly {
        ZPoly::from_terms(self.terms.iter().map(|(e, c)| (grading(weights, e), c.clone())))
    }

    /// The homomorphism `e_i ↦ t^{(2N)^i}`, `i = 1..r`.
    pub fn specialize_box(&self, n: i64) -> ZPoly {
        let weights: Vec<i64> = (1..=self.rank as u32).map(|i| (2 * n).pow(i)).collect();
        self.specialize(&weights)
    }

    /// Componentwise minimum and maximum exponents of the support.
    fn bounding_box(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for e in it {
            for i in 0..self.rank {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        Some((lo, hi))
    }

    pub fn translate(&self, by: &[i64]) -> Self {
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// The image under `h ↦ h⁻¹`.
    pub fn invert(&self) -> Self {
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|a| -a).collect(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{c}{e:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for GroupRingElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(&Vec<i64>, WireInt)> = self.terms.iter().map(|(e, c)| (e, WireInt(c.clone()))).collect();
        v.serialize(s)
    }
}

/// Wire form `[[[e1, ..., er], c], ...]`; the rank is fixed by the context.
#[derive(Clone, Debug, Deserialize)]
#[serde(transparent)]
pub struct GroupRingWire(Vec<(Vec<i64>, WireInt)>);

impl GroupRingWire {
    pub fn into_element(self, rank: usize) -> Result<GroupRingElement, NovikovError> {
        GroupRingElement::new(rank, self.0.into_iter().map(|(e, c)| (e, c.0)))
    }
}

/// A Novikov-ring element known below grading `precision`.
#[derive(Clone, PartialEq, Eq)]
pub struct NovikovElement {
    weights: Vec<i64>,
    terms: BTreeMap<Vec<i64>, BigInt>,
    precision: i64,
}

impl NovikovElement {
    pub fn from_group_ring(g: &GroupRingElement, weights: &[i64], precision: i64) -> Result<Self, NovikovError> {
        if weights.len() != g.rank() {
            return Err(NovikovError::Weights {
                rank: g.rank(),
                got: weights.len(),
            });
        }
        Ok(Self {
            weights: weights.to_vec(),
            terms: g
                .terms
                .iter()
                .filter(|(e, _)| grading(weights, e) < precision)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
            precision,
        })
    }

    pub fn one(weights: &[i64], precision: i64) -> Self {
        Self::from_group_ring(&GroupRingElement::one(weights.len()), weights, precision).expect("rank matches")
    }

    /// `(1 - [γ])⁻¹ = Σ_j [γ]^j`, which converges because `γ` has positive
    /// grading.
    pub fn geometric(class: &[i64], weights: &[i64], precision: i64) -> Result<Self, NovikovError> {
        if class.len() != weights.len() {
            return Err(NovikovError::Rank {
                rank: weights.len(),
                got: class.len(),
            });
        }
        let g = grading(weights, class);
        if g <= 0 {
            return Err(NovikovError::NonPositiveGrading { index: 0, grading: g });
        }
        let mut terms = BTreeMap::new();
        let mut j = 0i64;
        while j * g < precision {
            terms.insert(class.iter().map(|a| a * j).collect(), BigInt::from(1));
            j += 1;
        }
        Ok(Self {
            weights: weights.to_vec(),
            terms,
            precision,
        })
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest grading present, or the precision for zero.
    pub fn valuation(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| grading(&self.weights, e))
            .min()
            .unwrap_or(self.precision)
    }

    pub fn add(&self, other: &Self) -> Self {
        let precision = self.precision.min(other.precision);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(e.clone()).or_insert_with(BigInt::zero) += c;
        }
        terms.retain(|e, c| !c.is_zero() && grading(&self.weights, e) < precision);
        Self {
            weights: self.weights.clone(),
            terms,
            precision,
        }
    }

    /// Convolution product, known below `min(N_a + v_b, N_b + v_a)`.
    pub fn mul(&self, other: &Self) -> Self {
        let precision = (self.precision.saturating_add(other.valuation()))
            .min(other.precision.saturating_add(self.valuation()));
        let mut terms: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if grading(&self.weights, &e) < precision {
                    *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self {
            weights: self.weights.clone(),
            terms,
            precision,
        }
    }

    /// `ρ`: `γ ↦ t^{w·γ}`, with the same precision.
    pub fn rho(&self) -> TruncatedSeries {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            *acc.entry(grading(&self.weights, e)).or_insert_with(BigInt::zero) += c;
        }
        TruncatedSeries::from_terms(
            acc.into_iter().map(|(e, c)| (e, BigRational::from_integer(c))),
            self.precision,
        )
    }
}

impl fmt::Debug for NovikovElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{c}{e:?}")).collect();
        write!(f, "{} + O(grading {})", parts.join(" + "), self.precision)
    }
}

impl Serialize for NovikovElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(&Vec<i64>, WireInt)> = self.terms.iter().map(|(e, c)| (e, WireInt(c.clone()))).collect();
        v.serialize(s)
    }
}

/// Square matrix of path counts from index-1 to index-2 critical points.
#[derive(Clone, Debug, PartialEq)]
pub struct PathMatrix {
    rank: usize,
    entries: Vec<Vec<GroupRingElement>>,
}

impl PathMatrix {
    pub fn new(rank: usize, entries: Vec<Vec<GroupRingElement>>) -> Result<Self, NovikovError> {
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(NovikovError::PathMatrix { rows: n, cols: row.len() });
            }
            for e in row {
                if e.rank() != rank {
                    return Err(NovikovError::Rank { rank, got: e.rank() });
                }
            }
        }
        Ok(Self { rank, entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<GroupRingElement>] {
        &self.entries
    }

    /// Exact determinant in `Z[H]`, summing over permutations built row by
    /// row with the used columns memoized as a bit set.
    pub fn determinant(&self) -> GroupRingElement {
        let n = self.size();
        let mut dp: Vec<Option<GroupRingElement>> = vec![None; 1 << n];
        dp[0] = Some(GroupRingElement::one(self.rank));
        for mask in 0..(1usize << n) {
            let Some(partial) = dp[mask].take() else { continue };
            if partial.is_zero() {
                continue;
            }
            let row = mask.count_ones() as usize;
            if row == n {
                dp[mask] = Some(partial);
                continue;
            }
            for col in 0..n {
                if mask & (1 << col) != 0 || self.entries[row][col].is_zero() {
                    continue;
                }
                // columns already used that exceed `col` form inversions
                let inversions = (mask >> (col + 1)).count_ones();
                let mut term = partial.mul(&self.entries[row][col]);
                if inversions % 2 == 1 {
                    term = term.neg();
                }
                let slot = &mut dp[mask | (1 << col)];
                *slot = Some(match slot.take() {
                    Some(acc) => acc.add(&term),
                    None => term,
                });
            }
        }
        dp[(1 << n) - 1].take().unwrap_or_else(|| GroupRingElement::zero(self.rank))
    }
}

impl Serialize for PathMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// The data of `I_η`: orbits with homology classes, the path matrix, the
/// grading weights (intersection with the level set), and `χ(Σ)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NovikovBlock {
    pub rank: usize,
    pub weights: Vec<i64>,
    pub orbits: Vec<Orbit>,
    pub path_matrix: PathMatrix,
    pub chi_sigma: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precision: Option<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NovikovBlockWire {
    rank: usize,
    weights: Vec<i64>,
    #[serde(default)]
    orbits: Vec<Orbit>,
    #[serde(default)]
    path_matrix: Vec<Vec<GroupRingWire>>,
    chi_sigma: i64,
    #[serde(default)]
    precision: Option<i64>,
}

impl<'de> Deserialize<'de> for NovikovBlock {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = NovikovBlockWire::deserialize(d)?;
        let entries = w
            .path_matrix
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.into_element(w.rank)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(de::Error::custom)?;
        let path_matrix = PathMatrix::new(w.rank, entries).map_err(de::Error::custom)?;
        NovikovBlock::new(w.rank, w.weights, w.orbits, path_matrix, w.chi_sigma, w.precision)
            .map_err(de::Error::custom)
    }
}

impl NovikovBlock {
    pub fn new(
        rank: usize,
        weights: Vec<i64>,
        orbits: Vec<Orbit>,
        path_matrix: PathMatrix,
        chi_sigma: i64,
        precision: Option<i64>,
    ) -> Result<Self, NovikovError> {
        if weights.len() != rank {
            return Err(NovikovError::Weights { rank, got: weights.len() });
        }
        if path_matrix.rank != rank {
            return Err(NovikovError::Rank { rank, got: path_matrix.rank });
        }
        OrbitSet::new(orbits.clone()).map_err(|e| NovikovError::NotSymmetric(e.to_string()))?;
        for (index, o) in orbits.iter().enumerate() {
            let class = o.class.as_ref().ok_or(NovikovError::MissingClass { index })?;
            if class.len() != rank {
                return Err(NovikovError::Rank { rank, got: class.len() });
            }
            let g = grading(&weights, class);
            if g <= 0 {
                return Err(NovikovError::NonPositiveGrading { index, grading: g });
            }
            if i64::from(o.k) != g {
                return Err(NovikovError::DegreeMismatch { index, k: o.k, grading: g });
            }
        }
        Ok(Self {
            rank,
            weights,
            orbits,
            path_matrix,
            chi_sigma,
            precision,
        })
    }

    /// The orbits with their classes forgotten: degree = grading.
    pub fn projected_orbits(&self) -> OrbitSet {
        OrbitSet::new(self.orbits.iter().map(|o| Orbit::new(o.k, o.sign)).collect()).expect("validated")
    }

    /// `∏ (1 - [γ])^{-ε(γ)}` below grading `n`.
    pub fn orbit_product(&self, n: i64) -> Result<NovikovElement, NovikovError> {
        let mut acc = NovikovElement::one(&self.weights, n);
        for (index, o) in self.orbits.iter().enumerate() {
            let class = o.class.as_ref().ok_or(NovikovError::MissingClass { index })?;
            let factor = if o.sign > 0 {
                NovikovElement::geometric(class, &self.weights, n)
                    .map_err(|_| NovikovError::NonPositiveGrading { index, grading: grading(&self.weights, class) })?
            } else {
                let g = GroupRingElement::one(self.rank).sub(&GroupRingElement::monomial(class.clone(), BigInt::from(1)));
                NovikovElement::from_group_ring(&g, &self.weights, n)?
            };
            acc = acc.mul(&factor);
        }
        Ok(acc)
    }
}

/// `I_η = ∏ (1 - [γ])^{-ε(γ)} · det(P)`, known below grading `n` (less if
/// `det(P)` has terms of negative grading).
pub fn i_eta(block: &NovikovBlock, n: i64) -> Result<NovikovElement, NovikovError> {
    let orbit_part = block.orbit_product(n)?;
    let det = NovikovElement::from_group_ring(&block.path_matrix.determinant(), &block.weights, n)?;
    Ok(orbit_part.mul(&det))
}

/// `t^{χ(Σ)/2} ρ(I_η)`.
pub fn sw_series(i: &NovikovElement, chi_sigma: i64) -> Result<TruncatedSeries, NovikovError> {
    if chi_sigma % 2 != 0 {
        return Err(NovikovError::OddEuler(chi_sigma));
    }
    Ok(i.rho().shift(chi_sigma / 2))
}

/// Inverts `e_i ↦ t^{(2N)^i}` on elements supported in the box `|a_i| < N`
/// by reading each exponent in balanced base `2N`.
pub fn reconstruct_from_specialization(q: &ZPoly, rank: usize, n: i64) -> Result<GroupRingElement, NovikovError> {
    if n < 1 {
        return Err(NovikovError::BoxSize);
    }
    let base = 2 * n;
    let mut terms = Vec::with_capacity(q.num_terms());
    for (exponent, c) in q.terms() {
        let fail = NovikovError::NoBalancedDigits { exponent, base };
        if exponent % base != 0 {
            return Err(fail);
        }
        let mut rest = exponent / base;
        let mut digits = Vec::with_capacity(rank);
        for _ in 0..rank {
            let mut d = rest.mod_floor(&base);
            if d > n {
                d -= base;
            }
            if d.abs() >= n {
                return Err(fail);
            }
            digits.push(d);
            rest = (rest - d) / base;
        }
        if rest != 0 {
            return Err(fail);
        }
        terms.push((digits, c.clone()));
    }
    GroupRingElement::new(rank, terms)
}

/// The translate of `g` fixed by `h ↦ h⁻¹`, if there is one.
pub fn symmetrize(g: &GroupRingElement) -> Result<GroupRingElement, NovikovError> {
    let Some((lo, hi)) = g.bounding_box() else {
        return Ok(g.clone());
    };
    let mut shift = Vec::with_capacity(g.rank());
    for i in 0..g.rank() {
        let sum = lo[i] + hi[i];
        if sum % 2 != 0 {
            return Err(NovikovError::NotSymmetric(format!(
                "the support's center in coordinate {} is the half-integer {}/2",
                i + 1,
                sum
            )));
        }
        shift.push(-sum / 2);
    }
    let centered = g.translate(&shift);
    if centered.invert() != centered {
        return Err(NovikovError::NotSymmetric(
            "the centered element differs from its image under inversion".into(),
        ));
    }
    Ok(centered)
}
