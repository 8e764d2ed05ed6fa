//! Checks of the torsion identities on instance data, one report per check.
//!
//! Each check returns pass, fail or not-applicable. Failures always carry
//! the two sides that disagree. The suite runner verifies files in
//! parallel and reports them in input order.

use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::complexes::Torsion;
use crate::cover::{cover_torsion, homology_order_product, homology_summary, lefschetz_series, CoverComplex, CoverTorsion, HomologySummary};
use crate::exactalg::wire::WireInt;
use crate::exactalg::{series_expand, Ambiguity, RationalFunction, TruncatedSeries, UnitClass};
use crate::instance::InstanceFile;
use crate::matrices::determinant;
use crate::morse::{build_morse_complex, chain_homotopy_w, morse_torsion, MorseComplex, MorseData, MorseError};
use crate::novikov::{i_eta, sw_series, NovikovBlock};
use crate::orbits::{fix_counts, zeta_exp, zeta_product, FixCounts, OrbitSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// `ζ^{(-1)^{n-1}} τ(M) = τ(X, φ)` up to `±t^k`.
    Refinement,
    /// The fixed-point formula with the torsion correction and constant `m`.
    Main,
    ZetaForms,
    WIdentity,
    /// Torsion against the alternating product of homology orders.
    HomologyOrders,
    LeadingCoefficient,
    /// Path-matrix and orbit data against the Morse, zeta and cover data.
    SwConsistency,
    /// Not a check: the file could not be read.
    Parse,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Refinement,
        Check::Main,
        Check::ZetaForms,
        Check::WIdentity,
        Check::HomologyOrders,
        Check::LeadingCoefficient,
        Check::SwConsistency,
    ];

    /// Whether `b` has every block the check reads.
    pub fn has_inputs(self, b: &InstanceBundle) -> bool {
        match self {
            Check::Refinement | Check::Main | Check::LeadingCoefficient => {
                b.orbits.is_some() && b.cover.is_some() && (self != Check::LeadingCoefficient || b.morse.is_some())
            }
            Check::ZetaForms => b.orbits.is_some(),
            Check::WIdentity => b.morse.is_some(),
            Check::HomologyOrders => b.cover.is_some(),
            Check::SwConsistency => b.novikov.is_some(),
            Check::Parse => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    pub check: Check,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub witnesses: Value,
    pub m: Option<WireInt>,
}

impl VerificationReport {
    fn new(check: Check, outcome: Outcome, reason: Option<String>, witnesses: Value) -> Self {
        Self {
            file: None,
            check,
            outcome,
            reason,
            witnesses,
            m: None,
        }
    }

    fn pass(check: Check, witnesses: Value) -> Self {
        Self::new(check, Outcome::Pass, None, witnesses)
    }

    fn fail(check: Check, reason: impl Into<String>, witnesses: Value) -> Self {
        Self::new(check, Outcome::Fail, Some(reason.into()), witnesses)
    }

    fn not_applicable(check: Check, reason: impl Into<String>) -> Self {
        Self::new(check, Outcome::NotApplicable, Some(reason.into()), Value::Null)
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn m(&self) -> Option<&BigInt> {
        self.m.as_ref().map(|w| &w.0)
    }
}

/// Everything a check may read. Absent blocks make the checks that need
/// them not applicable.
#[derive(Clone, Debug)]
pub struct InstanceBundle {
    pub dimension: usize,
    pub truncation: usize,
    pub morse: Option<MorseData>,
    pub orbits: Option<OrbitSet>,
    pub cover: Option<CoverComplex>,
    pub novikov: Option<NovikovBlock>,
}

impl InstanceBundle {
    pub fn from_file(f: &InstanceFile, default_order: usize) -> Self {
        Self {
            dimension: f.dimension,
            truncation: f.order(default_order),
            morse: f.morse.clone(),
            orbits: f.orbits.clone(),
            cover: f.cover.clone(),
            novikov: f.novikov.clone(),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("wire types serialize")
}

fn missing(check: Check, block: &str) -> VerificationReport {
    VerificationReport::not_applicable(check, format!("instance has no {block} block"))
}

/// Builds the Morse complex and its torsion, or the report explaining why
/// the check cannot go on.
fn acyclic_morse(check: Check, m: &MorseData) -> Result<(MorseComplex, Torsion), VerificationReport> {
    let mc = build_morse_complex(m).map_err(|e| VerificationReport::fail(check, e.to_string(), Value::Null))?;
    if !mc.is_acyclic() {
        return Err(VerificationReport::not_applicable(
            check,
            "the Morse complex is not acyclic over Q(t)",
        ));
    }
    let t = morse_torsion(&mc).map_err(|e| VerificationReport::fail(check, e.to_string(), Value::Null))?;
    Ok((mc, t))
}

fn cover_class_json(c: &CoverTorsion) -> Value {
    match c {
        CoverTorsion::Acyclic(t) => to_json(&t.class),
        CoverTorsion::NotAcyclic { degree, rank } => json!({"not_acyclic": {"degree": degree, "rank": rank}}),
    }
}

pub fn verify_refinement(b: &InstanceBundle) -> VerificationReport {
    let check = Check::Refinement;
    let (Some(orbits), Some(cover)) = (&b.orbits, &b.cover) else {
        return missing(check, "orbits or cover");
    };
    let empty = MorseData::new(b.dimension, Vec::new(), Vec::new()).expect("no critical points");
    let morse = b.morse.as_ref().unwrap_or(&empty);
    let (_, tau_m) = match acyclic_morse(check, morse) {
        Ok(x) => x,
        Err(r) => return r,
    };
    let exponent = if b.dimension % 2 == 1 { 1 } else { -1 };
    let zeta = UnitClass::new(&orbits.zeta_rational(), Ambiguity::PlusMinusTk).expect("zeta is nonzero");
    let lhs = zeta.powi(exponent).mul(&tau_m.class);
    let rhs = match cover_torsion(cover) {
        Ok(c) => c,
        Err(e) => return VerificationReport::fail(check, e.to_string(), Value::Null),
    };
    let witnesses = json!({"lhs": to_json(&lhs), "rhs": cover_class_json(&rhs)});
    match rhs.class() {
        Some(r) if *r == lhs => VerificationReport::pass(check, witnesses),
        Some(_) => VerificationReport::fail(check, "the two sides differ modulo ±t^k", witnesses),
        None => VerificationReport::fail(check, "the cover complex is not acyclic", witnesses),
    }
}

/// Both sides of the fixed-point identity and their difference.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MainIdentity {
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
    pub difference: TruncatedSeries,
    /// The difference when it is an integer constant.
    #[serde(skip)]
    pub m: Option<BigInt>,
}

/// `Σ Fix(f^k) t^k - (-1)^n t (log τ)'` against the Lefschetz series
/// `Σ_k t^k Σ_i (-1)^i tr(A_i^k)`, trusted below `fix.order() + 1`.
pub fn main_identity(fix: &FixCounts, tau: &RationalFunction, n: usize, h: &HomologySummary) -> MainIdentity {
    let precision = fix.order() as i64 + 1;
    let log = tau.t_log_derivative().expect("torsion is nonzero");
    let correction = if n % 2 == 0 { -&log } else { log };
    let lhs = fix
        .generating_series()
        .add(&series_expand(&correction, precision).expect("regular at zero"));
    let rhs = lefschetz_series(h, precision as usize).expect("precision is positive");
    let difference = lhs.sub(&rhs);
    let m = difference
        .constant_value()
        .filter(|c| c.is_integer())
        .map(|c| c.to_integer());
    MainIdentity {
        lhs,
        rhs,
        difference,
        m,
    }
}

pub fn verify_main(b: &InstanceBundle) -> VerificationReport {
    let check = Check::Main;
    let (Some(orbits), Some(cover)) = (&b.orbits, &b.cover) else {
        return missing(check, "orbits or cover");
    };
    if b.truncation < 2 {
        return VerificationReport::fail(check, "truncation order must be at least 2", Value::Null);
    }
    let empty = MorseData::new(b.dimension, Vec::new(), Vec::new()).expect("no critical points");
    let morse = b.morse.as_ref().unwrap_or(&empty);
    let (_, tau_m) = match acyclic_morse(check, morse) {
        Ok(x) => x,
        Err(r) => return r,
    };
    let h = homology_summary(cover);
    if !h.is_finite() {
        return VerificationReport::fail(
            check,
            "the cover has infinite-dimensional rational homology",
            Value::Null,
        );
    }
    let fix = fix_counts(orbits, b.truncation - 1).expect("order is positive");
    let id = main_identity(&fix, &tau_m.value, b.dimension, &h);
    let witnesses = to_json(&id);
    match &id.m {
        Some(m) => {
            let mut r = VerificationReport::pass(check, witnesses);
            r.m = Some(WireInt(m.clone()));
            r
        }
        None if id.difference.constant_value().is_some() => {
            VerificationReport::fail(check, "the constant term is not an integer", witnesses)
        }
        None => VerificationReport::fail(check, "the difference is not constant", witnesses),
    }
}

pub fn verify_zeta_forms(b: &InstanceBundle) -> VerificationReport {
    let check = Check::ZetaForms;
    let Some(orbits) = &b.orbits else {
        return missing(check, "orbits");
    };
    let n = b.truncation;
    let product = zeta_product(orbits, n).expect("order is positive");
    let exp = zeta_exp(&fix_counts(orbits, n - 1).expect("order is positive"));
    let rational = series_expand(&orbits.zeta_rational(), n as i64).expect("regular at zero");
    let witnesses = json!({"product": to_json(&product), "exponential": to_json(&exp), "rational": to_json(&rational)});
    if !product.agrees_with(&exp) {
        VerificationReport::fail(check, "product and exponential forms differ", witnesses)
    } else if !product.agrees_with(&rational) {
        VerificationReport::fail(check, "product form differs from the rational function", witnesses)
    } else if product.coeff(0) != BigRational::one() {
        VerificationReport::fail(check, "leading coefficient is not 1", witnesses)
    } else {
        VerificationReport::pass(check, witnesses)
    }
}

pub fn verify_w_identity(b: &InstanceBundle) -> VerificationReport {
    let check = Check::WIdentity;
    let Some(morse) = &b.morse else {
        return missing(check, "morse");
    };
    let (mc, _) = match acyclic_morse(check, morse) {
        Ok(x) => x,
        Err(r) => return r,
    };
    match chain_homotopy_w(&mc) {
        Ok(w) => VerificationReport::pass(check, json!({"degrees": w.len()})),
        Err(MorseError::HomotopyIdentity { degree }) => VerificationReport::fail(
            check,
            format!("d*W + Wd* differs from t in degree {degree}"),
            json!({"degree": degree}),
        ),
        Err(e) => VerificationReport::fail(check, e.to_string(), Value::Null),
    }
}

pub fn verify_homology_orders(b: &InstanceBundle) -> VerificationReport {
    let check = Check::HomologyOrders;
    let Some(cover) = &b.cover else {
        return missing(check, "cover");
    };
    let tau = match cover_torsion(cover) {
        Ok(CoverTorsion::Acyclic(t)) => t,
        Ok(CoverTorsion::NotAcyclic { degree, .. }) => {
            return VerificationReport::not_applicable(
                check,
                format!("the cover complex is not acyclic over Q(t) in degree {degree}"),
            )
        }
        Err(e) => return VerificationReport::fail(check, e.to_string(), Value::Null),
    };
    let lhs = tau.class.coarsen(Ambiguity::RationalTk);
    let Some(rhs) = homology_order_product(cover.complex()) else {
        return VerificationReport::fail(check, "homology has a free part", json!({"torsion": to_json(&lhs)}));
    };
    let witnesses = json!({"torsion": to_json(&lhs), "orders": to_json(&rhs)});
    if lhs == rhs {
        VerificationReport::pass(check, witnesses)
    } else {
        VerificationReport::fail(check, "torsion differs from the product of orders", witnesses)
    }
}

pub fn verify_leading_coefficient(b: &InstanceBundle) -> VerificationReport {
    let check = Check::LeadingCoefficient;
    let (Some(morse), Some(cover)) = (&b.morse, &b.cover) else {
        return missing(check, "morse or cover");
    };
    let (_, tau_m) = match acyclic_morse(check, morse) {
        Ok(x) => x,
        Err(r) => return r,
    };
    let tau_x = match cover_torsion(cover) {
        Ok(CoverTorsion::Acyclic(t)) => t,
        Ok(CoverTorsion::NotAcyclic { .. }) => {
            return VerificationReport::fail(check, "the cover complex is not acyclic", Value::Null)
        }
        Err(e) => return VerificationReport::fail(check, e.to_string(), Value::Null),
    };
    let a = tau_m.value.leading_coefficient().abs();
    let c = tau_x.value.leading_coefficient().abs();
    let witnesses = json!({"morse": crate::exactalg::rational_to_string(&a), "cover": crate::exactalg::rational_to_string(&c)});
    if a == c {
        VerificationReport::pass(check, witnesses)
    } else {
        VerificationReport::fail(check, "leading coefficients differ", witnesses)
    }
}

/// Whether `s` equals `±t^k` times the expansion of `f` on the range `s`
/// trusts. Returns the sign and shift on success.
pub fn series_matches_up_to_unit(s: &TruncatedSeries, f: &RationalFunction) -> Option<(i64, i64)> {
    let vs = s.valuation()?;
    let vf = f.valuation()?;
    let k = vs - vf;
    let lead = s.coeff(vs);
    let sign = if lead == f.leading_coefficient() {
        1
    } else if lead == -f.leading_coefficient() {
        -1
    } else {
        return None;
    };
    let unit = RationalFunction::from_scalar(BigRational::from_integer(sign.into())).mul_t_power(k);
    let expected = series_expand(&(f * &unit), s.precision()).ok()?;
    expected.agrees_with(s).then_some((sign, k))
}

pub fn verify_sw(b: &InstanceBundle) -> VerificationReport {
    let check = Check::SwConsistency;
    let Some(nb) = &b.novikov else {
        return missing(check, "novikov");
    };
    let n = nb.precision.unwrap_or(b.truncation as i64);
    let det_p = nb.path_matrix.determinant();
    let mut witnesses = serde_json::Map::new();

    if let Some(morse) = &b.morse {
        let rho_det = det_p.specialize(&nb.weights);
        let size = nb.path_matrix.size();
        let sizes_match = morse.critical().len() > 2 && morse.critical()[1].len() == size && morse.critical()[2].len() == size;
        if !sizes_match {
            return VerificationReport::fail(
                check,
                "path matrix size differs from the index-1 and index-2 critical point counts",
                Value::Null,
            );
        }
        let d1 = determinant(&morse.differential(1)).expect("square");
        witnesses.insert("rho_det_p".into(), to_json(&rho_det));
        witnesses.insert("det_d1".into(), to_json(&d1));
        if rho_det != d1 {
            return VerificationReport::fail(check, "ρ(det P) differs from det(d: M¹ → M²)", Value::Object(witnesses));
        }
    }

    let orbit_part = match nb.orbit_product(n) {
        Ok(x) => x.rho(),
        Err(e) => return VerificationReport::fail(check, e.to_string(), Value::Null),
    };
    if n < 1 {
        return VerificationReport::fail(check, "novikov precision must be positive", Value::Null);
    }
    let projected = zeta_product(&nb.projected_orbits(), n as usize).expect("order is positive");
    witnesses.insert("rho_orbit_product".into(), to_json(&orbit_part));
    witnesses.insert("zeta".into(), to_json(&projected));
    if !orbit_part.agrees_with(&projected) {
        return VerificationReport::fail(check, "ρ of the orbit product differs from ζ", Value::Object(witnesses));
    }
    if let Some(o) = &b.orbits {
        if o.zeta_rational() != nb.projected_orbits().zeta_rational() {
            return VerificationReport::fail(
                check,
                "the orbits block is not the projection of the novikov orbits",
                Value::Object(witnesses),
            );
        }
    }

    let i = match i_eta(nb, n) {
        Ok(i) => i,
        Err(e) => return VerificationReport::fail(check, e.to_string(), Value::Null),
    };
    let sw = match sw_series(&i, nb.chi_sigma) {
        Ok(s) => s,
        Err(e) => return VerificationReport::fail(check, e.to_string(), Value::Null),
    };
    witnesses.insert("sw".into(), to_json(&sw));
    let Some(cover) = &b.cover else {
        return VerificationReport::pass(check, Value::Object(witnesses));
    };
    let tau = match cover_torsion(cover) {
        Ok(c) => c,
        Err(e) => return VerificationReport::fail(check, e.to_string(), Value::Null),
    };
    witnesses.insert("cover".into(), cover_class_json(&tau));
    let w = Value::Object(witnesses);
    match (det_p.is_zero(), &tau) {
        (true, CoverTorsion::NotAcyclic { .. }) => VerificationReport::pass(check, w),
        (true, CoverTorsion::Acyclic(_)) => {
            VerificationReport::fail(check, "det P vanishes but the cover is acyclic", w)
        }
        (false, CoverTorsion::NotAcyclic { .. }) => {
            VerificationReport::fail(check, "det P is nonzero but the cover is not acyclic", w)
        }
        (false, CoverTorsion::Acyclic(t)) => {
            if sw.is_zero() {
                VerificationReport::fail(check, "the SW series vanishes below the precision; raise it", w)
            } else if series_matches_up_to_unit(&sw, &t.value).is_some() {
                VerificationReport::pass(check, w)
            } else {
                VerificationReport::fail(check, "the SW series differs from the cover torsion modulo ±t^k", w)
            }
        }
    }
}

pub fn run_check(check: Check, b: &InstanceBundle) -> VerificationReport {
    match check {
        Check::Refinement => verify_refinement(b),
        Check::Main => verify_main(b),
        Check::ZetaForms => verify_zeta_forms(b),
        Check::WIdentity => verify_w_identity(b),
        Check::HomologyOrders => verify_homology_orders(b),
        Check::LeadingCoefficient => verify_leading_coefficient(b),
        Check::SwConsistency => verify_sw(b),
        Check::Parse => VerificationReport::pass(check, Value::Null),
    }
}

/// Which checks to run: `None` runs every check whose inputs are present.
pub fn run_checks(b: &InstanceBundle, only: Option<&[Check]>) -> Vec<VerificationReport> {
    match only {
        Some(cs) => cs.iter().map(|&c| run_check(c, b)).collect(),
        None => Check::ALL
            .iter()
            .filter(|c| c.has_inputs(b))
            .map(|&c| run_check(c, b))
            .collect(),
    }
}

/// Truncation order for a suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteOrder {
    /// Used for files that do not set their own.
    Default(usize),
    /// Used for every file.
    Fixed(usize),
}

fn verify_file(path: &Path, only: Option<&[Check]>, order: SuiteOrder) -> Vec<VerificationReport> {
    let file = Some(path.display().to_string());
    let reports = match InstanceFile::load(path) {
        Ok(f) => {
            let mut b = match order {
                SuiteOrder::Default(n) | SuiteOrder::Fixed(n) => InstanceBundle::from_file(&f, n),
            };
            if let SuiteOrder::Fixed(n) = order {
                b.truncation = n;
            }
            run_checks(&b, only)
        }
        Err(e) => vec![VerificationReport::new(Check::Parse, Outcome::Error, Some(e.to_string()), Value::Null)],
    };
    reports
        .into_iter()
        .map(|r| VerificationReport { file: file.clone(), ..r })
        .collect()
}

/// Verifies every file, one parallel task per file; the reports come back
/// grouped by file in input order. Unreadable files yield one `parse`
/// report and do not stop the suite.
pub fn run_suite(paths: &[PathBuf], only: Option<&[Check]>, order: SuiteOrder) -> Vec<VerificationReport> {
    paths
        .par_iter()
        .map(|p| verify_file(p, only, order))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Overall outcome of a set of reports: any error, else any failure, else
/// any not-applicable, else pass.
pub fn summarize(reports: &[VerificationReport]) -> Outcome {
    let has = |o: Outcome| reports.iter().any(|r| r.outcome == o);
    if has(Outcome::Error) {
        Outcome::Error
    } else if has(Outcome::Fail) {
        Outcome::Fail
    } else if has(Outcome::NotApplicable) {
        Outcome::NotApplicable
    } else {
        Outcome::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{BasedComplex, Direction};
    use crate::exactalg::ZPoly;
    use crate::matrices::Matrix;
    use crate::orbits::Orbit;

    fn z(s: &str) -> ZPoly {
        s.parse().unwrap()
    }

    fn circle_cover(p: &str) -> CoverComplex {
        let d = Matrix::from_rows(vec![vec![z(p)]], 1).unwrap();
        CoverComplex::new(BasedComplex::new(Direction::Down, vec![1, 1], vec![d], None).unwrap()).unwrap()
    }

    fn bundle(morse: Option<MorseData>, orbits: &[(u32, i64)], cover: &str) -> InstanceBundle {
        InstanceBundle {
            dimension: 1,
            truncation: 12,
            morse,
            orbits: Some(OrbitSet::new(orbits.iter().map(|&(k, s)| Orbit::new(k, s)).collect()).unwrap()),
            cover: Some(circle_cover(cover)),
            novikov: None,
        }
    }

    #[test]
    fn circle_with_critical_points() {
        let b = bundle(Some(MorseData::circle(&[1, 0], &[0, 0]).unwrap()), &[], "t - 1");
        for r in run_checks(&b, None) {
            assert!(r.passed(), "{r:?}");
        }
        assert_eq!(verify_main(&b).m(), Some(&BigInt::from(0)));
    }

    #[test]
    fn circle_without_critical_points() {
        let b = bundle(None, &[(3, 1)], "t^3 - 1");
        assert!(verify_refinement(&b).passed());
        let main = verify_main(&b);
        assert!(main.passed(), "{main:?}");
        assert_eq!(main.m(), Some(&BigInt::from(0)));
    }

    #[test]
    fn flipped_sign_fails() {
        let b = bundle(None, &[(3, -1)], "t^3 - 1");
        assert_eq!(verify_refinement(&b).outcome, Outcome::Fail);
        let main = verify_main(&b);
        assert_eq!(main.outcome, Outcome::Fail);
        assert_eq!(main.reason.as_deref(), Some("the difference is not constant"));
    }

    #[test]
    fn nonacyclic_morse_is_not_applicable() {
        let m = MorseData::circle(&[0], &[0]).unwrap();
        let b = bundle(Some(m), &[], "t - 1");
        assert_eq!(verify_refinement(&b).outcome, Outcome::NotApplicable);
        assert_eq!(verify_main(&b).outcome, Outcome::NotApplicable);
        assert_eq!(verify_w_identity(&b).outcome, Outcome::NotApplicable);
    }

    #[test]
    fn unit_matching_of_series() {
        let f = RationalFunction::new(&z("1"), &z("1 - t")).unwrap();
        let s = TruncatedSeries::from_poly(&z("-t^2 - t^3 - t^4"), 5);
        assert_eq!(series_matches_up_to_unit(&s, &f), Some((-1, 2)));
        let bad = TruncatedSeries::from_poly(&z("t^2 + t^4"), 5);
        assert_eq!(series_matches_up_to_unit(&bad, &f), None);
    }

    #[test]
    fn report_json_shape() {
        let b = bundle(None, &[(1, 1)], "t - 1");
        let v = serde_json::to_value(verify_main(&b)).unwrap();
        assert_eq!(v["check"], "main");
        assert_eq!(v["outcome"], "pass");
        assert_eq!(v["m"], 0);
        assert!(v["witnesses"]["lhs"]["terms"].is_array());
    }

    #[test]
    fn summary_order() {
        let p = VerificationReport::pass(Check::Main, Value::Null);
        let n = VerificationReport::not_applicable(Check::Main, "x");
        let f = VerificationReport::fail(Check::Main, "x", Value::Null);
        assert_eq!(summarize(&[]), Outcome::Pass);
        assert_eq!(summarize(&[p.clone(), n.clone()]), Outcome::NotApplicable);
        assert_eq!(summarize(&[p, n, f]), Outcome::Fail);
    }
}
