//! Smith normal form over the principal ideal domain `Q[t, t⁻¹]`.

use num_rational::BigRational;
use num_traits::One;

use crate::exactalg::QPoly;

use super::elimination::determinant;
use super::matrix::Matrix;

/// `left · m · right = diag(diag, 0, ...)`, with `left`, `right` invertible
/// over `Q[t, t⁻¹]`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub left: Matrix<QPoly>,
    pub right: Matrix<QPoly>,
    /// Nonzero invariant factors, each a polynomial in `t` with constant
    /// term 1; each divides the next.
    pub diag: Vec<QPoly>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// The full diagonal matrix `left · m · right`, shaped like `m`.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> Matrix<QPoly> {
        Matrix::from_fn(rows, cols, |i, j| {
            if i == j && i < self.diag.len() {
                self.diag[i].clone()
            } else {
                QPoly::zero()
            }
        })
    }

    /// Checks reconstruction, the divisibility chain and unimodularity of
    /// the transforms. Returns a description of the first violation.
    pub fn check(&self, m: &Matrix<QPoly>) -> Result<(), String> {
        let prod = self
            .left
            .mul(m)
            .and_then(|lm| lm.mul(&self.right))
            .map_err(|e| e.to_string())?;
        if prod != self.diagonal_matrix(m.rows(), m.cols()) {
            return Err("left * m * right is not the stored diagonal".into());
        }
        for w in self.diag.windows(2) {
            if w[1].div_rem_span(&w[0]).is_none_or(|(_, r)| !r.is_zero()) {
                return Err(format!("{} does not divide {}", w[0], w[1]));
            }
        }
        for (name, t) in [("left", &self.left), ("right", &self.right)] {
            let d = determinant(t).map_err(|e| e.to_string())?;
            if !d.is_unit() {
                return Err(format!("{name} transform has non-unit determinant {d}"));
            }
        }
        Ok(())
    }
}

struct Work {
    a: Vec<Vec<QPoly>>,
    left: Vec<Vec<QPoly>>,
    right: Vec<Vec<QPoly>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.left.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.right.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row_i -= q · row_src
    fn row_axpy(&mut self, i: usize, src: usize, q: &QPoly) {
        for m in [&mut self.a, &mut self.left] {
            for j in 0..m[i].len() {
                let v = &m[i][j] - &(q * &m[src][j]);
                m[i][j] = v;
            }
        }
    }

    /// col_j -= q · col_src
    fn col_axpy(&mut self, j: usize, src: usize, q: &QPoly) {
        for m in [&mut self.a, &mut self.right] {
            for row in m.iter_mut() {
                let v = &row[j] - &(q * &row[src]);
                row[j] = v;
            }
        }
    }

    fn scale_row(&mut self, i: usize, u: &QPoly) {
        for m in [&mut self.a, &mut self.left] {
            for x in m[i].iter_mut() {
                *x = &*x * u;
            }
        }
    }
}

fn span(p: &QPoly) -> i64 {
    p.span().unwrap_or(i64::MAX)
}

/// Computes the Smith normal form by Euclidean elimination, always pivoting
/// on a nonzero entry of minimal span (ties broken by row-major position).
pub fn smith_normal_form(m: &Matrix<QPoly>) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.to_rows(),
        left: Matrix::<QPoly>::identity(rows).to_rows(),
        right: Matrix::<QPoly>::identity(cols).to_rows(),
    };
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !w.a[i][j].is_zero() && best.is_none_or(|(bi, bj)| span(&w.a[i][j]) < span(&w.a[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = w.a[i][t].div_rem_span(&w.a[t][t]).expect("pivot is nonzero");
                w.row_axpy(i, t, &q);
                clean &= r.is_zero();
            }
            for j in t + 1..cols {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = w.a[t][j].div_rem_span(&w.a[t][t]).expect("pivot is nonzero");
                w.col_axpy(j, t, &q);
                clean &= r.is_zero();
            }
            if !clean {
                // a remainder of smaller span sits in the pivot row or column
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !w.a[i][t].is_zero() && span(&w.a[i][t]) < span(&w.a[best.0][best.1]) {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !w.a[t][j].is_zero() && span(&w.a[t][j]) < span(&w.a[best.0][best.1]) {
                        best = (t, j);
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| {
                    w.a[i][j]
                        .div_rem_span(&w.a[t][t])
                        .is_some_and(|(_, r)| !r.is_zero())
                })
            });
            match offender {
                Some(i) => w.row_axpy(t, i, &QPoly::constant(-BigRational::one())),
                None => break,
            }
        }
        let (shift, dense) = w.a[t][t].split_t_power().expect("pivot is nonzero");
        let unit = QPoly::monomial(-shift, dense[0].recip());
        w.scale_row(t, &unit);
        diag.push(w.a[t][t].clone());
    }
    SmithForm {
        left: Matrix::from_rows(w.left, rows).expect("square transform"),
        right: Matrix::from_rows(w.right, cols).expect("square transform"),
        diag,
    }
}
