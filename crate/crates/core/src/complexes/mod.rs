//! Based chain complexes over `Z[t, t⁻¹]` and their Reidemeister torsion.

mod torsion;

pub use torsion::{torsion, torsion_with_preference, torsion_with_subsets, Torsion, TorsionCertificate};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::ZPoly;
use crate::matrices::{rank, Matrix, MatrixError};

/// Whether the differential raises (cochain complex) or lowers degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("malformed complex: {0}")]
    Shape(String),
    #[error("differentials do not compose to zero at degree {degree}")]
    NotAChainComplex { degree: usize },
    #[error("complex is not acyclic over Q(t): homology in degree {degree} has rank {rank}")]
    NotAcyclic { degree: usize, rank: usize },
    #[error("invalid torsion certificate: {0}")]
    InvalidCertificate(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Free modules `C_0, ..., C_m` with ordered bases and differentials.
///
/// `differentials[i]` is `d: C^i → C^{i+1}` in the up direction and
/// `∂: C_{i+1} → C_i` in the down direction. Matrices act on column
/// vectors: column `j` is the image of the `j`-th basis element of the
/// source.
#[derive(Clone, Debug, PartialEq)]
pub struct BasedComplex {
    direction: Direction,
    ranks: Vec<usize>,
    differentials: Vec<Matrix<ZPoly>>,
    labels: Vec<Vec<String>>,
}

impl BasedComplex {
    pub fn new(
        direction: Direction,
        ranks: Vec<usize>,
        differentials: Vec<Matrix<ZPoly>>,
        labels: Option<Vec<Vec<String>>>,
    ) -> Result<Self, ComplexError> {
        if differentials.len() != ranks.len().saturating_sub(1) {
            return Err(ComplexError::Shape(format!(
                "{} degrees need {} differentials, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            let (rows, cols) = match direction {
                Direction::Up => (ranks[i + 1], ranks[i]),
                Direction::Down => (ranks[i], ranks[i + 1]),
            };
            if d.rows() != rows || d.cols() != cols {
                return Err(ComplexError::Shape(format!(
                    "differential {i} is {}x{}, expected {rows}x{cols}",
                    d.rows(),
                    d.cols()
                )));
            }
        }
        for i in 0..differentials.len().saturating_sub(1) {
            let (first, second) = match direction {
                Direction::Up => (&differentials[i], &differentials[i + 1]),
                Direction::Down => (&differentials[i + 1], &differentials[i]),
            };
            if !second.mul(first)?.is_zero() {
                return Err(ComplexError::NotAChainComplex { degree: i + 1 });
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != ranks.len() || l.iter().zip(&ranks).any(|(l, &r)| l.len() != r) {
                    return Err(ComplexError::Shape("labels do not match ranks".into()));
                }
                l
            }
            None => ranks
                .iter()
                .enumerate()
                .map(|(i, &r)| (0..r).map(|j| format!("e{i}_{j}")).collect())
                .collect(),
        };
        Ok(Self {
            direction,
            ranks,
            differentials,
            labels,
        })
    }

    /// The complex with all modules zero in degrees `0..=m`.
    pub fn zero(direction: Direction, m: usize) -> Self {
        Self::new(
            direction,
            vec![0; m + 1],
            vec![Matrix::zeros(0, 0); m],
            None,
        )
        .expect("zero complex is well formed")
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Top degree `m`; zero for the empty complex.
    pub fn top_degree(&self) -> usize {
        self.ranks.len().saturating_sub(1)
    }

    pub fn differentials(&self) -> &[Matrix<ZPoly>] {
        &self.differentials
    }

    pub fn labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    /// The differential leaving degree `i`, if any.
    pub fn outgoing(&self, i: usize) -> Option<&Matrix<ZPoly>> {
        match self.direction {
            Direction::Up => self.differentials.get(i),
            Direction::Down => i.checked_sub(1).map(|k| &self.differentials[k]),
        }
    }

    /// The differential arriving in degree `i`, if any.
    pub fn incoming(&self, i: usize) -> Option<&Matrix<ZPoly>> {
        match self.direction {
            Direction::Up => i.checked_sub(1).map(|k| &self.differentials[k]),
            Direction::Down => self.differentials.get(i),
        }
    }

    /// Rank over `Q(t)` of homology in each degree.
    pub fn homology_ranks(&self) -> Vec<usize> {
        // differential k touches degrees k and k + 1 in both directions
        let drank: Vec<usize> = self.differentials.iter().map(rank).collect();
        (0..self.ranks.len())
            .map(|i| {
                let below = i.checked_sub(1).map_or(0, |k| drank[k]);
                let above = drank.get(i).copied().unwrap_or(0);
                self.ranks[i] - below - above
            })
            .collect()
    }

    /// Exactness after tensoring with the fraction field.
    pub fn is_acyclic(&self) -> bool {
        self.homology_ranks().iter().all(|&r| r == 0)
    }

    /// First degree with nonzero homology over `Q(t)`.
    pub fn check_acyclic(&self) -> Result<(), ComplexError> {
        match self.homology_ranks().iter().enumerate().find(|(_, &r)| r > 0) {
            Some((degree, &rank)) => Err(ComplexError::NotAcyclic { degree, rank }),
            None => Ok(()),
        }
    }

    /// Block-diagonal sum. Up complexes of different lengths are padded with
    /// zero modules at the top; down complexes must have equal length, since
    /// their torsion exponents are counted from the top degree.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, ComplexError> {
        if self.direction != other.direction {
            return Err(ComplexError::Shape("cannot sum complexes of opposite direction".into()));
        }
        if self.direction == Direction::Down && self.ranks.len() != other.ranks.len() {
            return Err(ComplexError::Shape(format!(
                "down complexes of lengths {} and {} cannot be summed",
                self.ranks.len(),
                other.ranks.len()
            )));
        }
        let len = self.ranks.len().max(other.ranks.len());
        let a = self.padded(len);
        let b = other.padded(len);
        let ranks = a.ranks.iter().zip(&b.ranks).map(|(x, y)| x + y).collect();
        let differentials = a
            .differentials
            .iter()
            .zip(&b.differentials)
            .map(|(x, y)| Matrix::block_diagonal(x, y))
            .collect();
        let labels = a
            .labels
            .iter()
            .zip(&b.labels)
            .map(|(x, y)| {
                x.iter()
                    .map(|s| format!("a.{s}"))
                    .chain(y.iter().map(|s| format!("b.{s}")))
                    .collect()
            })
            .collect();
        Self::new(self.direction, ranks, differentials, Some(labels))
    }

    fn padded(&self, len: usize) -> Self {
        let mut c = self.clone();
        while c.ranks.len() < len {
            let last = c.ranks.last().copied().unwrap_or(0);
            c.ranks.push(0);
            c.labels.push(Vec::new());
            if c.ranks.len() > 1 {
                c.differentials.push(Matrix::zeros(0, last));
            }
        }
        c
    }

    /// Conjugates the differentials by basis changes `g_i` of each module:
    /// the new differential out of degree `i` is `g_{target} · d · g_i⁻¹`.
    /// Inverses are supplied by the caller so that everything stays over
    /// `Z[t, t⁻¹]`.
    pub fn change_basis(
        &self,
        g: &[Matrix<ZPoly>],
        g_inv: &[Matrix<ZPoly>],
    ) -> Result<Self, ComplexError> {
        if g.len() != self.ranks.len() || g_inv.len() != self.ranks.len() {
            return Err(ComplexError::Shape("one basis change per degree is required".into()));
        }
        for i in 0..g.len() {
            if g[i].mul(&g_inv[i])? != Matrix::identity(self.ranks[i]) {
                return Err(ComplexError::Shape(format!("basis change {i} is not inverted")));
            }
        }
        let differentials = self
            .differentials
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let (src, dst) = match self.direction {
                    Direction::Up => (k, k + 1),
                    Direction::Down => (k + 1, k),
                };
                g[dst].mul(d)?.mul(&g_inv[src])
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(self.direction, self.ranks.clone(), differentials, Some(self.labels.clone()))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexWire {
    direction: Direction,
    ranks: Vec<usize>,
    differentials: Vec<Matrix<ZPoly>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<Vec<String>>>,
}

impl Serialize for BasedComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ComplexWire {
            direction: self.direction,
            ranks: self.ranks.clone(),
            differentials: self.differentials.clone(),
            labels: Some(self.labels.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BasedComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = ComplexWire::deserialize(d)?;
        BasedComplex::new(w.direction, w.ranks, w.differentials, w.labels)
            .map_err(serde::de::Error::custom)
    }
}
