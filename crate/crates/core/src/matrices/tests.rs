use super::*;
use crate::exactalg::QPoly;

fn z(s: &str) -> ZPoly {
    s.parse().unwrap()
}

fn q(s: &str) -> QPoly {
    z(s).to_rational()
}

fn zm(rows: &[&[&str]]) -> Matrix<ZPoly> {
    let cols = rows.first().map_or(0, |r| r.len());
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| z(s)).collect()).collect(), cols).unwrap()
}

fn qm(rows: &[&[&str]]) -> Matrix<QPoly> {
    zm(rows).map(|p| p.to_rational())
}

#[test]
fn circulant_determinant() {
    let m = zm(&[&["t", "-1"], &["-1", "1"]]);
    assert_eq!(determinant(&m).unwrap(), z("t - 1"));
}

#[test]
fn identity_determinant() {
    for n in 0..5 {
        assert_eq!(determinant(&Matrix::<ZPoly>::identity(n)).unwrap(), ZPoly::one());
    }
}

#[test]
fn characteristic_determinant_of_swap() {
    let m = zm(&[&["1", "-t"], &["-t", "1"]]);
    assert_eq!(determinant(&m).unwrap(), z("1 - t^2"));
    assert_eq!(determinant_cofactor(&m).unwrap(), z("1 - t^2"));
}

#[test]
fn determinant_needs_row_swap() {
    let m = zm(&[&["0", "1", "0"], &["1", "0", "0"], &["0", "0", "1 - t"]]);
    assert_eq!(determinant(&m).unwrap(), z("t - 1"));
    assert!(matches!(determinant(&zm(&[&["1", "2"]])), Err(MatrixError::NotSquare(1, 2))));
}

#[test]
fn ranks() {
    assert_eq!(rank(&zm(&[&["1 - t", "0"], &["0", "0"]])), 1);
    let circulant = zm(&[&["t^2", "-1", "0"], &["0", "t", "-t"], &["-1", "0", "1"]]);
    assert_eq!(rank(&circulant), 3);
    assert_eq!(rank(&zm(&[&["1 - t", "1 - t^2"], &["1", "1 + t"]])), 1);
}

#[test]
fn solve_one_by_one() {
    let a = to_fraction_field(&zm(&[&["1 - t"]]));
    let b = to_fraction_field(&zm(&[&["1"]]));
    let x = solve(&a, &b).unwrap();
    assert_eq!(x[(0, 0)], RationalFunction::new(&z("1"), &z("1 - t")).unwrap());
}

#[test]
fn inconsistent_system() {
    let a = to_fraction_field(&zm(&[&["1"], &["1"]]));
    let b = to_fraction_field(&zm(&[&["1"], &["t"]]));
    assert_eq!(solve(&a, &b), Err(MatrixError::Inconsistent));
}

#[test]
fn inverse_round_trip() {
    let a = to_fraction_field(&zm(&[&["1", "t"], &["t^-1", "2"]]));
    let inv = inverse(&a).unwrap();
    assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
    let singular = to_fraction_field(&zm(&[&["1", "t"], &["1", "t"]]));
    assert_eq!(inverse(&singular), Err(MatrixError::Singular));
}

#[test]
fn smith_of_diagonal() {
    let m = qm(&[&["1 - t^2", "0"], &["0", "1 - t"]]);
    let s = smith_normal_form(&m);
    s.check(&m).unwrap();
    assert_eq!(s.diag, vec![q("1 - t"), q("1 - t^2")]);
}

#[test]
fn smith_of_zero() {
    let m = Matrix::<QPoly>::zeros(2, 3);
    let s = smith_normal_form(&m);
    s.check(&m).unwrap();
    assert!(s.diag.is_empty());
}

#[test]
fn smith_with_unit_entry() {
    let m = qm(&[&["1 - t", "1"], &["0", "1 - t"]]);
    let s = smith_normal_form(&m);
    s.check(&m).unwrap();
    assert_eq!(s.diag, vec![q("1"), q("1 - 2t + t^2")]);
}

#[test]
fn smith_absorbs_units() {
    let m = qm(&[&["2t^3", "0", "0"], &["0", "-3t + 3t^2", "6t^-1"]]);
    let s = smith_normal_form(&m);
    s.check(&m).unwrap();
    assert_eq!(s.diag, vec![q("1"), q("1")]);
}

#[test]
fn minors_of_two_by_three() {
    let m = zm(&[&["1 - t", "0", "2"], &["0", "1", "0"]]);
    let values: Vec<ZPoly> = enumerate_minors(&m, 2).unwrap().map(|m| m.value).collect();
    assert_eq!(values, vec![z("1 - t"), z("0"), z("-2")]);
    let cols: Vec<Vec<usize>> = enumerate_minors(&m, 2).unwrap().map(|m| m.cols).collect();
    assert_eq!(cols, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
}

#[test]
fn empty_minor() {
    let m = zm(&[&["1 - t", "0", "2"], &["0", "1", "0"]]);
    let all: Vec<_> = enumerate_minors(&m, 0).unwrap().collect();
    assert_eq!(all.len(), 1);
    assert_eq!(all[0].value, ZPoly::one());
    assert!(enumerate_minors(&m, 3).is_err());
    let id: Vec<_> = enumerate_minors(&Matrix::<ZPoly>::identity(3), 3).unwrap().map(|m| m.value).collect();
    assert_eq!(id, vec![ZPoly::one()]);
}

#[test]
fn wire_format() {
    let m: Matrix<ZPoly> =
        serde_json::from_str(r#"{"rows": 2, "cols": 1, "entries": [[[[0,1],[1,-1]]], [[]]]}"#).unwrap();
    assert_eq!(m, zm(&[&["1 - t"], &["0"]]));
    let back: Matrix<ZPoly> = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
    assert_eq!(back, m);
    assert!(serde_json::from_str::<Matrix<ZPoly>>(r#"{"rows": 2, "cols": 1, "entries": [[[]]]}"#).is_err());
    assert!(serde_json::from_str::<Matrix<ZPoly>>(r#"{"rows": 1, "cols": 2, "entries": [[[]]]}"#).is_err());
}
