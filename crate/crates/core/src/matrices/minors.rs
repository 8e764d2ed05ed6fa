use itertools::Itertools;

use super::elimination::determinant;
use super::matrix::Matrix;
use super::ring::ExactDiv;
use super::MatrixError;

#[derive(Clone, Debug, PartialEq)]
pub struct Minor<R> {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: R,
}

/// Lazily evaluated `k × k` minors, ordered lexicographically by row subset
/// and then by column subset.
pub struct Minors<'a, R> {
    m: &'a Matrix<R>,
    row_sets: Vec<Vec<usize>>,
    col_sets: Vec<Vec<usize>>,
    next: usize,
}

impl<R: ExactDiv> Iterator for Minors<'_, R> {
    type Item = Minor<R>;

    fn next(&mut self) -> Option<Minor<R>> {
        let total = self.row_sets.len() * self.col_sets.len();
        if self.next >= total {
            return None;
        }
        let rows = self.row_sets[self.next / self.col_sets.len()].clone();
        let cols = self.col_sets[self.next % self.col_sets.len()].clone();
        self.next += 1;
        let value = determinant(&self.m.submatrix(&rows, &cols)).expect("minor is square");
        Some(Minor { rows, cols, value })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.row_sets.len() * self.col_sets.len() - self.next;
        (left, Some(left))
    }
}

pub fn enumerate_minors<R: ExactDiv>(m: &Matrix<R>, k: usize) -> Result<Minors<'_, R>, MatrixError> {
    if k > m.rows().min(m.cols()) {
        return Err(MatrixError::MinorOrder {
            k,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(Minors {
        m,
        row_sets: (0..m.rows()).combinations(k).collect(),
        col_sets: (0..m.cols()).combinations(k).collect(),
        next: 0,
    })
}
