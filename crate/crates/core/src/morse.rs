//! The Morse complex of a circle-valued Morse function, assembled from
//! combinatorial flow data.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complexes::{torsion, BasedComplex, ComplexError, Direction, Torsion};
use crate::exactalg::{RationalFunction, ZPoly};
use crate::matrices::{determinant, inverse, to_fraction_field, Matrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorseError {
    #[error("invalid Morse data: {0}")]
    Invalid(String),
    #[error("d∘d is nonzero from {from} to {to}: coefficient {value}")]
    NotADifferential { from: String, to: String, value: String },
    #[error("Morse complex is not acyclic: Laplacian in degree {degree} is singular")]
    NotAcyclic { degree: usize },
    #[error("d*W + Wd* = t fails in degree {degree}")]
    HomotopyIdentity { degree: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Signed count of flow lines from `from` (index `i`) to `to` (index
/// `i + 1`), as a polynomial in `t` recording crossings of the level set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Incidence {
    pub from: String,
    pub to: String,
    pub series: ZPoly,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MorseData {
    dimension: usize,
    critical: Vec<Vec<String>>,
    incidence: Vec<Incidence>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MorseWire {
    dimension: usize,
    critical: Vec<Vec<String>>,
    #[serde(default)]
    incidence: Vec<Incidence>,
}

impl<'de> Deserialize<'de> for MorseData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = MorseWire::deserialize(d)?;
        MorseData::new(w.dimension, w.critical, w.incidence).map_err(serde::de::Error::custom)
    }
}

impl MorseData {
    /// `critical[i]` lists the index-`i` critical points; missing trailing
    /// indices are empty. Pairs without an incidence record have no flow
    /// lines.
    pub fn new(
        dimension: usize,
        mut critical: Vec<Vec<String>>,
        incidence: Vec<Incidence>,
    ) -> Result<Self, MorseError> {
        if critical.len() > dimension + 1 {
            return Err(MorseError::Invalid(format!(
                "critical points listed for {} indices in dimension {dimension}",
                critical.len()
            )));
        }
        critical.resize(dimension + 1, Vec::new());
        let mut index_of = HashMap::new();
        for (i, pts) in critical.iter().enumerate() {
            for p in pts {
                if index_of.insert(p.clone(), i).is_some() {
                    return Err(MorseError::Invalid(format!("duplicate critical point {p:?}")));
                }
            }
        }
        let mut seen = HashSet::new();
        for inc in &incidence {
            let (Some(&i), Some(&j)) = (index_of.get(&inc.from), index_of.get(&inc.to)) else {
                return Err(MorseError::Invalid(format!(
                    "incidence {} -> {} names an unknown critical point",
                    inc.from, inc.to
                )));
            };
            if j != i + 1 {
                return Err(MorseError::Invalid(format!(
                    "incidence {} -> {} joins indices {i} and {j}",
                    inc.from, inc.to
                )));
            }
            if inc.series.min_exp().is_some_and(|e| e < 0) {
                return Err(MorseError::Invalid(format!(
                    "incidence {} -> {} has a negative exponent",
                    inc.from, inc.to
                )));
            }
            if !seen.insert((inc.from.clone(), inc.to.clone())) {
                return Err(MorseError::Invalid(format!(
                    "incidence {} -> {} given twice",
                    inc.from, inc.to
                )));
            }
        }
        Ok(Self {
            dimension,
            critical,
            incidence,
        })
    }

    /// The circle example: critical points `x_1..x_c` of index 0 and
    /// `y_1..y_c` of index 1, with `d x_i = t^{a_i} y_i - t^{b_{i-1}} y_{i-1}`
    /// (indices mod `c`), so that `d` is the circulant matrix with rows
    /// `t^{a_i}, -t^{b_i}`.
    pub fn circle(a: &[u32], b: &[u32]) -> Result<Self, MorseError> {
        if a.len() != b.len() {
            return Err(MorseError::Invalid("a and b must have equal length".into()));
        }
        let c = a.len();
        let xs: Vec<String> = (1..=c).map(|i| format!("x{i}")).collect();
        let ys: Vec<String> = (1..=c).map(|i| format!("y{i}")).collect();
        let mut entries: HashMap<(usize, usize), ZPoly> = HashMap::new();
        for i in 0..c {
            let t_a = ZPoly::monomial(i64::from(a[i]), 1.into());
            let t_b = ZPoly::monomial(i64::from(b[i]), (-1).into());
            // with c = 1 both terms land in the same entry
            for (key, term) in [((i, i), t_a), ((i, (i + 1) % c), t_b)] {
                let e = entries.entry(key).or_insert_with(ZPoly::zero);
                *e = &*e + &term;
            }
        }
        let mut keys: Vec<_> = entries.keys().copied().collect();
        keys.sort_unstable();
        let incidence = keys
            .into_iter()
            .filter(|k| !entries[k].is_zero())
            .map(|(row, col)| Incidence {
                from: xs[col].clone(),
                to: ys[row].clone(),
                series: entries[&(row, col)].clone(),
            })
            .collect();
        Self::new(1, vec![xs, ys], incidence)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn critical(&self) -> &[Vec<String>] {
        &self.critical
    }

    pub fn incidence(&self) -> &[Incidence] {
        &self.incidence
    }

    /// The differential `M^i → M^{i+1}`: entry `(y, x)` is `⟨dx, y⟩`.
    pub fn differential(&self, i: usize) -> Matrix<ZPoly> {
        let src = &self.critical[i];
        let dst = &self.critical[i + 1];
        let mut m = Matrix::zeros(dst.len(), src.len());
        for inc in &self.incidence {
            let (Some(col), Some(row)) = (
                src.iter().position(|p| *p == inc.from),
                dst.iter().position(|p| *p == inc.to),
            ) else {
                continue;
            };
            m[(row, col)] = inc.series.clone();
        }
        m
    }
}

/// The Morse complex with its adjoint and Laplacian.
#[derive(Clone, Debug)]
pub struct MorseComplex {
    complex: BasedComplex,
    adjoints: Vec<Matrix<ZPoly>>,
    laplacians: Vec<Matrix<ZPoly>>,
}

pub fn build_morse_complex(m: &MorseData) -> Result<MorseComplex, MorseError> {
    let n = m.dimension();
    let ds: Vec<Matrix<ZPoly>> = (0..n).map(|i| m.differential(i)).collect();
    for i in 0..n.saturating_sub(1) {
        let dd = ds[i + 1].mul(&ds[i])?;
        if let Some((row, col)) = dd.first_nonzero() {
            return Err(MorseError::NotADifferential {
                from: m.critical()[i][col].clone(),
                to: m.critical()[i + 2][row].clone(),
                value: dd[(row, col)].to_string(),
            });
        }
    }
    let ranks = m.critical().iter().map(Vec::len).collect();
    let complex = BasedComplex::new(Direction::Up, ranks, ds.clone(), Some(m.critical().to_vec()))?;
    let adjoints: Vec<Matrix<ZPoly>> = ds.iter().map(Matrix::transpose).collect();
    let laplacians = (0..=n)
        .map(|i| {
            let r = m.critical()[i].len();
            let mut lap = Matrix::zeros(r, r);
            if i > 0 {
                lap = lap.add(&ds[i - 1].mul(&adjoints[i - 1])?)?;
            }
            if i < n {
                lap = lap.add(&adjoints[i].mul(&ds[i])?)?;
            }
            Ok(lap)
        })
        .collect::<Result<Vec<_>, MatrixError>>()?;
    Ok(MorseComplex {
        complex,
        adjoints,
        laplacians,
    })
}

impl MorseComplex {
    pub fn complex(&self) -> &BasedComplex {
        &self.complex
    }

    pub fn dimension(&self) -> usize {
        self.complex.top_degree()
    }

    /// `d: M^i → M^{i+1}`.
    pub fn differential(&self, i: usize) -> &Matrix<ZPoly> {
        &self.complex.differentials()[i]
    }

    /// `d*: M^{i+1} → M^i`, the transpose of `d`.
    pub fn adjoint(&self, i: usize) -> &Matrix<ZPoly> {
        &self.adjoints[i]
    }

    /// `Δ = dd* + d*d` on `M^i`.
    pub fn laplacian(&self, i: usize) -> &Matrix<ZPoly> {
        &self.laplacians[i]
    }

    pub fn laplacian_determinants(&self) -> Vec<ZPoly> {
        self.laplacians
            .iter()
            .map(|l| determinant(l).expect("Laplacians are square"))
            .collect()
    }

    /// Acyclicity decided through the Laplacians: `Q(t)` is formally real,
    /// so `Δ` is invertible exactly when the complex is exact.
    pub fn laplacian_acyclic(&self) -> bool {
        self.laplacian_determinants().iter().all(|d| !d.is_zero())
    }

    pub fn is_acyclic(&self) -> bool {
        self.complex.is_acyclic()
    }
}

/// Torsion of the Morse complex (up convention).
pub fn morse_torsion(m: &MorseComplex) -> Result<Torsion, MorseError> {
    Ok(torsion(m.complex())?)
}

/// `W_i = t Δ⁻¹ d: M^i → M^{i+1}` for each `i < n`, checked against
/// `d*W + Wd* = t` in every degree.
pub fn chain_homotopy_w(m: &MorseComplex) -> Result<Vec<Matrix<RationalFunction>>, MorseError> {
    let n = m.dimension();
    let t = RationalFunction::from_poly(&ZPoly::t());
    let mut inverses = Vec::with_capacity(n + 1);
    for (i, lap) in m.laplacians.iter().enumerate() {
        match inverse(&to_fraction_field(lap)) {
            Ok(inv) => inverses.push(inv),
            Err(MatrixError::Singular) => return Err(MorseError::NotAcyclic { degree: i }),
            Err(e) => return Err(e.into()),
        }
    }
    let w = (0..n)
        .map(|i| Ok(inverses[i + 1].mul(&to_fraction_field(m.differential(i)))?.scale(&t)))
        .collect::<Result<Vec<_>, MorseError>>()?;
    check_homotopy_identity(m, &w)?;
    Ok(w)
}

/// Verifies `d*W + Wd* = t · id` on each `M^i`.
pub fn check_homotopy_identity(
    m: &MorseComplex,
    w: &[Matrix<RationalFunction>],
) -> Result<(), MorseError> {
    let n = m.dimension();
    let t = RationalFunction::from_poly(&ZPoly::t());
    for i in 0..=n {
        let r = m.complex().ranks()[i];
        let mut lhs = Matrix::zeros(r, r);
        if i < n {
            lhs = lhs.add(&to_fraction_field(m.adjoint(i)).mul(&w[i])?)?;
        }
        if i > 0 {
            lhs = lhs.add(&w[i - 1].mul(&to_fraction_field(m.adjoint(i - 1)))?)?;
        }
        if lhs != Matrix::<RationalFunction>::identity(r).scale(&t) {
            return Err(MorseError::HomotopyIdentity { degree: i });
        }
    }
    Ok(())
}
