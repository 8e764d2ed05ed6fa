//! The infinite cyclic cover: its torsion, its rational homology as a
//! `Q[t, t⁻¹]`-module with the deck action, and orders of presented modules.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complexes::{torsion, BasedComplex, ComplexError, Direction, Torsion};
use crate::exactalg::{gcd_laurent, normalize_pm_tk, Ambiguity, QPoly, RationalFunction, TruncatedSeries, UnitClass, ZPoly};
use crate::matrices::{determinant, enumerate_minors, smith_normal_form, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("a cover complex must use the down direction")]
    Direction,
    #[error("presentation has {generators} generators but {rows} relation rows")]
    Presentation { generators: usize, rows: usize },
    #[error("truncation order must be at least 1")]
    Order,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Cellular chain complex of the infinite cyclic cover over `Z[t, t⁻¹]`,
/// with `t` the deck transformation. One basis element per cell of the
/// base.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct CoverComplex(BasedComplex);

impl CoverComplex {
    pub fn new(c: BasedComplex) -> Result<Self, CoverError> {
        if c.direction() != Direction::Down {
            return Err(CoverError::Direction);
        }
        Ok(Self(c))
    }

    pub fn complex(&self) -> &BasedComplex {
        &self.0
    }
}

impl<'de> Deserialize<'de> for CoverComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        CoverComplex::new(BasedComplex::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// `τ(X, φ)`, or the degree where homology over `Q(t)` survives.
#[derive(Clone, Debug)]
pub enum CoverTorsion {
    Acyclic(Torsion),
    NotAcyclic { degree: usize, rank: usize },
}

impl CoverTorsion {
    pub fn class(&self) -> Option<&UnitClass> {
        match self {
            CoverTorsion::Acyclic(t) => Some(&t.class),
            CoverTorsion::NotAcyclic { .. } => None,
        }
    }
}

pub fn cover_torsion(c: &CoverComplex) -> Result<CoverTorsion, CoverError> {
    match torsion(c.complex()) {
        Ok(t) => Ok(CoverTorsion::Acyclic(t)),
        Err(ComplexError::NotAcyclic { degree, rank }) => Ok(CoverTorsion::NotAcyclic { degree, rank }),
        Err(e) => Err(e.into()),
    }
}

/// Rational homology of one degree as a `Q[t, t⁻¹]`-module.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeHomology {
    /// Rank of the free part (rank over `Q(t)`).
    pub free_rank: usize,
    /// Non-unit invariant factors of the torsion part, each a polynomial in
    /// `t` with constant term 1, each dividing the next.
    pub invariant_factors: Vec<QPoly>,
    /// Matrix over `Q` of the deck transformation on the torsion part, in
    /// block companion form. The module variable `t` acts as `A⁻¹`, so
    /// that `1 - tA` presents the module.
    pub action: Matrix<BigRational>,
    /// `det(1 - tA)`, equal to the product of the invariant factors.
    pub characteristic: QPoly,
}

impl DegreeHomology {
    /// Dimension over `Q` of the torsion part.
    pub fn dimension(&self) -> usize {
        self.action.rows()
    }

    /// Order of the module: the product of the invariant factors, or zero
    /// when there is a free part.
    pub fn order(&self) -> QPoly {
        if self.free_rank > 0 {
            QPoly::zero()
        } else {
            self.characteristic.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomologySummary {
    pub degrees: Vec<DegreeHomology>,
}

impl HomologySummary {
    /// Whether `H_*(X̃; Q)` is finite dimensional.
    pub fn is_finite(&self) -> bool {
        self.degrees.iter().all(|d| d.free_rank == 0)
    }

    pub fn total_dimension(&self) -> usize {
        self.degrees.iter().map(DegreeHomology::dimension).sum()
    }
}

/// Companion matrix of multiplication by `t⁻¹` on `Q[t]/(p)`, for `p` with
/// constant term 1 and degree `d ≥ 1`. Its characteristic polynomial is the
/// reversal of `p`, and `det(1 - tA) = p(t)`.
fn reciprocal_companion(p: &QPoly) -> Matrix<BigRational> {
    let d = p.max_exp().expect("nonzero factor") as usize;
    // reversal x^d p(1/x) = x^d + c_1 x^{d-1} + ... + c_d
    Matrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -p.coeff((d - i) as i64)
        } else if i == j + 1 {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    })
}

fn one_minus_t_times(a: &Matrix<BigRational>) -> QPoly {
    let m = Matrix::from_fn(a.rows(), a.cols(), |i, j| {
        let diag = if i == j { QPoly::one() } else { QPoly::zero() };
        &diag - &QPoly::monomial(1, a.get(i, j).clone())
    });
    determinant(&m).expect("square")
}

/// Homology of a based complex over `Q[t, t⁻¹]`: the invariant factors in
/// degree `i` come from the Smith form of the differential arriving there.
pub fn homology_modules(c: &BasedComplex) -> Vec<DegreeHomology> {
    let free = c.homology_ranks();
    (0..c.ranks().len())
        .map(|i| {
            let factors: Vec<QPoly> = match c.incoming(i) {
                Some(d) => smith_normal_form(&d.map(ZPoly::to_rational))
                    .diag
                    .into_iter()
                    .filter(|f| !f.is_one())
                    .collect(),
                None => Vec::new(),
            };
            let mut action = Matrix::<BigRational>::zeros(0, 0);
            for f in &factors {
                action = Matrix::block_diagonal(&action, &reciprocal_companion(f));
            }
            let characteristic = one_minus_t_times(&action);
            DegreeHomology {
                free_rank: free[i],
                invariant_factors: factors,
                action,
                characteristic,
            }
        })
        .collect()
}

pub fn homology_summary(c: &CoverComplex) -> HomologySummary {
    HomologySummary {
        degrees: homology_modules(c.complex()),
    }
}

/// The alternating product of homology orders over `Q[t, t⁻¹]`, with the
/// same exponents as the torsion: `(-1)^i` for up complexes and `(-1)^{m-i}`
/// for down complexes. `None` when some homology has a free part.
pub fn homology_order_product(c: &BasedComplex) -> Option<UnitClass> {
    let m = c.top_degree();
    let mut value = RationalFunction::one();
    for (i, h) in homology_modules(c).iter().enumerate() {
        if h.free_rank > 0 {
            return None;
        }
        let ord = RationalFunction::from_qpoly(&h.order());
        let positive = match c.direction() {
            Direction::Up => i % 2 == 0,
            Direction::Down => (m - i) % 2 == 0,
        };
        value = if positive { &value * &ord } else { &value / &ord };
    }
    Some(UnitClass::new(&value, Ambiguity::RationalTk).expect("orders are nonzero"))
}

/// `Σ_{k ≥ 1} t^k Σ_i (-1)^i tr(A_i^k)` trusted below `t^N`.
pub fn lefschetz_series(h: &HomologySummary, n: usize) -> Result<TruncatedSeries, CoverError> {
    if n == 0 {
        return Err(CoverError::Order);
    }
    let mut coeffs = vec![BigRational::zero(); n];
    for (i, d) in h.degrees.iter().enumerate() {
        let a = &d.action;
        if a.rows() == 0 {
            continue;
        }
        let mut power = a.clone();
        for c in coeffs.iter_mut().skip(1) {
            let tr = power.trace();
            if i % 2 == 0 {
                *c += tr;
            } else {
                *c -= tr;
            }
            power = power.mul(a).expect("square");
        }
    }
    Ok(TruncatedSeries::from_terms(
        coeffs.into_iter().enumerate().map(|(k, c)| (k as i64, c)),
        n as i64,
    ))
}

/// A module presented by `generators.len()` generators and the columns of
/// `relations` as relations.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationMatrix {
    pub generators: Vec<String>,
    pub relations: Matrix<ZPoly>,
}

/// Order of a finitely presented module over `Z[t, t⁻¹]`.
#[derive(Clone, Debug, PartialEq)]
pub enum ModuleOrder {
    /// The module is not torsion.
    Zero,
    Class(UnitClass),
}

/// Gcd of the maximal minors of the relation matrix, streamed with an early
/// exit once the running gcd is a unit.
pub fn fitting_order(p: &PresentationMatrix) -> Result<ModuleOrder, CoverError> {
    let n = p.generators.len();
    if p.relations.rows() != n {
        return Err(CoverError::Presentation {
            generators: n,
            rows: p.relations.rows(),
        });
    }
    if p.relations.cols() < n {
        return Ok(ModuleOrder::Zero);
    }
    let mut g = ZPoly::zero();
    for minor in enumerate_minors(&p.relations, n).expect("n <= cols") {
        g = gcd_laurent(&g, &minor.value);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return Ok(ModuleOrder::Zero);
    }
    let g = normalize_pm_tk(&g);
    Ok(ModuleOrder::Class(
        UnitClass::new(&RationalFunction::from_poly(&g), Ambiguity::PlusMinusTk).expect("nonzero"),
    ))
}
