//! Torsion of an acyclic based complex as an alternating product of block
//! determinants.
//!
//! In each degree `i` we pick a set `S_i` of basis vectors such that the
//! image of the previously chosen set, followed by the unit vectors of
//! `S_i`, is a basis of `C_i ⊗ Q(t)`. The block determinant is the
//! determinant of that square matrix. Up complexes are processed from
//! degree 0 upward and contribute `det_i^{(-1)^i}`; down complexes are
//! processed from the top degree `m` downward and contribute
//! `det_i^{(-1)^{m-i}}`.

use serde::Serialize;

use crate::exactalg::{Ambiguity, RationalFunction, UnitClass, ZPoly};
use crate::matrices::{determinant, rank, Matrix};

use super::{BasedComplex, ComplexError, Direction};

/// The choices that produced a torsion value, indexed by degree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TorsionCertificate {
    pub subsets: Vec<Vec<usize>>,
    pub block_determinants: Vec<ZPoly>,
}

#[derive(Clone, Debug)]
pub struct Torsion {
    /// The representative produced by the certificate's choices.
    pub value: RationalFunction,
    pub class: UnitClass,
    pub certificate: TorsionCertificate,
}

fn processing_order(c: &BasedComplex) -> Vec<usize> {
    let n = c.ranks().len();
    match c.direction() {
        Direction::Up => (0..n).collect(),
        Direction::Down => (0..n).rev().collect(),
    }
}

fn positive_exponent(c: &BasedComplex, i: usize) -> bool {
    match c.direction() {
        Direction::Up => i % 2 == 0,
        Direction::Down => (c.top_degree() - i) % 2 == 0,
    }
}

/// Images of the previously chosen basis vectors inside degree `i`.
fn incoming_images(c: &BasedComplex, i: usize, prev: &[usize]) -> Matrix<ZPoly> {
    let r = c.ranks()[i];
    match c.incoming(i) {
        Some(d) => d.submatrix(&(0..r).collect::<Vec<_>>(), prev),
        None => Matrix::zeros(r, 0),
    }
}

/// `[images | e_subset]`, with `subset` sorted.
fn block(images: &Matrix<ZPoly>, subset: &[usize]) -> Matrix<ZPoly> {
    let units = Matrix::from_fn(images.rows(), subset.len(), |row, k| {
        if subset[k] == row {
            ZPoly::one()
        } else {
            ZPoly::zero()
        }
    });
    images.hstack(&units).expect("same row count")
}

/// Whether `[images | e_subset]` has full column rank: equivalently the
/// rows outside `subset` carry full rank for `images`.
fn independent(images: &Matrix<ZPoly>, subset: &[usize]) -> bool {
    let rows: Vec<usize> = (0..images.rows()).filter(|r| !subset.contains(r)).collect();
    let cols: Vec<usize> = (0..images.cols()).collect();
    rank(&images.submatrix(&rows, &cols)) == images.cols()
}

fn assemble(
    c: &BasedComplex,
    subsets: Vec<Vec<usize>>,
    dets: Vec<ZPoly>,
) -> Result<Torsion, ComplexError> {
    let mut value = RationalFunction::one();
    for (i, det) in dets.iter().enumerate() {
        let d = RationalFunction::from_poly(det);
        value = if positive_exponent(c, i) {
            &value * &d
        } else {
            &value / &d
        };
    }
    let class = UnitClass::new(&value, Ambiguity::PlusMinusTk)
        .map_err(|e| ComplexError::InvalidCertificate(e.to_string()))?;
    Ok(Torsion {
        value,
        class,
        certificate: TorsionCertificate {
            subsets,
            block_determinants: dets,
        },
    })
}

/// Torsion with the lexicographically first admissible subsets.
pub fn torsion(c: &BasedComplex) -> Result<Torsion, ComplexError> {
    torsion_with_preference(c, None)
}

/// Torsion where, in degree `i`, basis vectors are tried in the order
/// `preference[i]` (a permutation of `0..rank_i`). Every admissible
/// certificate arises from some preference order.
pub fn torsion_with_preference(
    c: &BasedComplex,
    preference: Option<&[Vec<usize>]>,
) -> Result<Torsion, ComplexError> {
    c.check_acyclic()?;
    let n = c.ranks().len();
    let mut subsets = vec![Vec::new(); n];
    let mut dets = vec![ZPoly::one(); n];
    let mut prev: Vec<usize> = Vec::new();
    for i in processing_order(c) {
        let r = c.ranks()[i];
        let images = incoming_images(c, i, &prev);
        let need = r - images.cols();
        let order: Vec<usize> = match preference {
            Some(p) => p[i].clone(),
            None => (0..r).collect(),
        };
        let mut chosen: Vec<usize> = Vec::with_capacity(need);
        for j in order {
            if chosen.len() == need {
                break;
            }
            chosen.push(j);
            if !independent(&images, &chosen) {
                chosen.pop();
            }
        }
        if chosen.len() < need {
            return Err(ComplexError::InvalidCertificate(format!(
                "no admissible subset in degree {i}"
            )));
        }
        chosen.sort_unstable();
        let det = determinant(&block(&images, &chosen))?;
        debug_assert!(!det.is_zero());
        dets[i] = det;
        subsets[i] = chosen.clone();
        prev = chosen;
    }
    assemble(c, subsets, dets)
}

/// Torsion from explicitly supplied subsets, validated for admissibility.
pub fn torsion_with_subsets(
    c: &BasedComplex,
    subsets: &[Vec<usize>],
) -> Result<Torsion, ComplexError> {
    c.check_acyclic()?;
    let n = c.ranks().len();
    if subsets.len() != n {
        return Err(ComplexError::InvalidCertificate(format!(
            "{} subsets given for {n} degrees",
            subsets.len()
        )));
    }
    let mut dets = vec![ZPoly::one(); n];
    let mut sorted = vec![Vec::new(); n];
    let mut prev: Vec<usize> = Vec::new();
    for i in processing_order(c) {
        let r = c.ranks()[i];
        let mut s = subsets[i].clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != subsets[i].len() || s.iter().any(|&j| j >= r) {
            return Err(ComplexError::InvalidCertificate(format!(
                "subset in degree {i} has repeated or out-of-range indices"
            )));
        }
        let images = incoming_images(c, i, &prev);
        if images.cols() + s.len() != r {
            return Err(ComplexError::InvalidCertificate(format!(
                "degree {i} needs {} basis vectors, got {}",
                r - images.cols().min(r),
                s.len()
            )));
        }
        let det = determinant(&block(&images, &s))?;
        if det.is_zero() {
            return Err(ComplexError::InvalidCertificate(format!(
                "block determinant vanishes in degree {i}"
            )));
        }
        dets[i] = det;
        sorted[i] = s.clone();
        prev = s;
    }
    assemble(c, sorted, dets)
}
