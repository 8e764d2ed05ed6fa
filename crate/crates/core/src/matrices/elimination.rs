//! Determinants, rank and linear solving.

use super::matrix::Matrix;
use super::ring::{ExactDiv, Field, Ring};
use super::MatrixError;

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so over a polynomial
/// ring the divisions are exact and nothing leaves the entry ring.
pub fn determinant<R: ExactDiv>(m: &Matrix<R>) -> Result<R, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(R::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = num
                    .divide_exact(&prev)
                    .expect("Bareiss quotients are exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { R::one() } else { a[n - 1][n - 1].clone() };
    Ok(if negate { det.negate() } else { det })
}

/// Determinant by Laplace expansion along the first row. Exponential; used
/// as an independent check for small matrices.
pub fn determinant_cofactor<R: Ring>(m: &Matrix<R>) -> Result<R, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare(m.rows(), m.cols()));
    }
    let idx: Vec<usize> = (0..m.rows()).collect();
    Ok(laplace(m, &idx, &idx))
}

fn laplace<R: Ring>(m: &Matrix<R>, rows: &[usize], cols: &[usize]) -> R {
    if rows.is_empty() {
        return R::one();
    }
    let r = rows[0];
    let mut acc = R::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = m.get(r, c);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.times(&laplace(m, &rows[1..], &rest));
        acc = if pos % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
    }
    acc
}

/// Row echelon data from fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivot_cols: Vec<usize>,
}

/// Fraction-free Gaussian elimination with column skipping.
pub fn echelon<R: ExactDiv>(m: &Matrix<R>) -> Echelon {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut prev = R::one();
    let mut r = 0;
    let mut pivot_cols = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = a[i][j].times(&a[r][c]).minus(&a[i][c].times(&a[r][j]));
                a[i][j] = num
                    .divide_exact(&prev)
                    .expect("fraction-free elimination quotients are exact");
            }
            a[i][c] = R::zero();
        }
        prev = a[r][c].clone();
        pivot_cols.push(c);
        r += 1;
    }
    Echelon { rank: r, pivot_cols }
}

/// Rank over the fraction field of the entry ring.
pub fn rank<R: ExactDiv>(m: &Matrix<R>) -> usize {
    echelon(m).rank
}

/// One solution `x` of `a · x = b` over a field.
pub fn solve<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<Matrix<F>, MatrixError> {
    if a.rows() != b.rows() {
        return Err(MatrixError::Shape(format!(
            "system has {} equations but right-hand side has {} rows",
            a.rows(),
            b.rows()
        )));
    }
    let (rows, n, k) = (a.rows(), a.cols(), b.cols());
    let mut aug = a.hstack(b)?.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(p, r);
        let inv = aug[r][c].invert().expect("pivot is nonzero");
        for x in aug[r].iter_mut() {
            *x = x.times(&inv);
        }
        for i in 0..rows {
            if i == r || aug[i][c].is_zero() {
                continue;
            }
            let f = aug[i][c].clone();
            for j in 0..n + k {
                let v = aug[i][j].minus(&f.times(&aug[r][j]));
                aug[i][j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if aug[r..].iter().any(|row| row[n..].iter().any(|x| !x.is_zero())) {
        return Err(MatrixError::Inconsistent);
    }
    let mut x = Matrix::zeros(n, k);
    for (i, &c) in pivots.iter().enumerate() {
        for j in 0..k {
            x[(c, j)] = aug[i][n + j].clone();
        }
    }
    Ok(x)
}

pub fn inverse<F: Field>(a: &Matrix<F>) -> Result<Matrix<F>, MatrixError> {
    if !a.is_square() {
        return Err(MatrixError::NotSquare(a.rows(), a.cols()));
    }
    if rank(a) < a.rows() {
        return Err(MatrixError::Singular);
    }
    solve(a, &Matrix::identity(a.rows()))
}
