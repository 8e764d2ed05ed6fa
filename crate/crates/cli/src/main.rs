//! `torsion-lab`: torsion, zeta functions and identity checks on instance
//! files.
//!
//! Output is JSON unless `--pretty` is given. Exit codes: 0 pass, 1 bad
//! input, 2 not applicable, 3 verification failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use torsion_lab::complexes::{torsion, ComplexError, Torsion};
use torsion_lab::cover::{cover_torsion, fitting_order, homology_summary, CoverTorsion, ModuleOrder};
use torsion_lab::exactalg::ZPoly;
use torsion_lab::instance::InstanceFile;
use torsion_lab::morse::{build_morse_complex, chain_homotopy_w, morse_torsion};
use torsion_lab::novikov::{i_eta, reconstruct_from_specialization, sw_series, symmetrize, GroupRingElement};
use torsion_lab::orbits::zeta_product;
use torsion_lab::verify::{run_suite, series_matches_up_to_unit, summarize, Check, Outcome, SuiteOrder};

const EXIT_PASS: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_NOT_APPLICABLE: u8 = 2;
const EXIT_FAIL: u8 = 3;

#[derive(Parser)]
#[command(name = "torsion-lab", version, about = "Exact Reidemeister torsion and zeta functions")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Default truncation order for files that do not set one.
    #[arg(long, global = true, env = "TORSION_LAB_PRECISION", default_value_t = 30, hide_env_values = true)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Block {
    Complex,
    Morse,
    Cover,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Refinement,
    Main,
    ZetaForms,
    WIdentity,
    HomologyOrders,
    LeadingCoefficient,
    SwConsistency,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Torsion of one block of an instance, as a unit class modulo ±t^k.
    Torsion {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "cover")]
        block: Block,
    },
    /// The zeta function of the orbits block, exactly and as a series.
    Zeta {
        file: PathBuf,
        /// Series trusted below t^N.
        #[arg(long)]
        order: Option<usize>,
    },
    /// The Morse complex: differentials, Laplacian determinants, torsion.
    Morse { file: PathBuf },
    /// Order of the presentation block, and the cover's rational homology.
    Ord { file: PathBuf },
    /// Run identity checks on one or more instance files.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "all")]
        check: CheckArg,
        /// Truncation order, overriding the files' own.
        #[arg(long)]
        order: Option<usize>,
    },
    /// The series t^{χ/2} ρ(I_η) and its comparison with the cover torsion.
    Sw {
        file: PathBuf,
        /// Also print the translate of I_η fixed by inversion.
        #[arg(long)]
        symmetrize: bool,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Recover a group-ring element from its image under e_i ↦ t^{(2N)^i}.
    Reconstruct {
        /// A Laurent polynomial such as "t^4 - t^-16".
        poly: String,
        #[arg(long)]
        rank: usize,
        /// The box size N: exponents satisfy |a_i| < N.
        #[arg(long = "box")]
        box_size: i64,
    },
}

struct Output {
    value: Value,
    text: String,
    code: u8,
}

impl Output {
    fn pass(value: Value, text: String) -> Self {
        Self { value, text, code: EXIT_PASS }
    }
}

fn load(path: &Path) -> Result<InstanceFile> {
    InstanceFile::load(path).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn required<'a, T>(block: &'a Option<T>, name: &str, path: &Path) -> Result<&'a T> {
    block
        .as_ref()
        .ok_or_else(|| anyhow!("{} has no {name} block", path.display()))
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("wire types serialize")
}

fn not_acyclic(degree: usize) -> Output {
    Output {
        value: json!({"acyclic": false, "degree": degree}),
        text: format!("not acyclic over Q(t): homology survives in degree {degree}"),
        code: EXIT_NOT_APPLICABLE,
    }
}

fn torsion_output(t: &Torsion) -> Output {
    Output::pass(to_json(&t.class), format!("τ = {} (mod ±t^k)", t.class))
}

fn cmd_torsion(path: &Path, block: Block) -> Result<Output> {
    let f = load(path)?;
    let result = match block {
        Block::Complex => torsion(required(&f.complex, "complex", path)?),
        Block::Cover => match cover_torsion(required(&f.cover, "cover", path)?)? {
            CoverTorsion::Acyclic(t) => Ok(t),
            CoverTorsion::NotAcyclic { degree, rank } => Err(ComplexError::NotAcyclic { degree, rank }),
        },
        Block::Morse => {
            let m = build_morse_complex(required(&f.morse, "morse", path)?)?;
            if let Err(ComplexError::NotAcyclic { degree, .. }) = m.complex().check_acyclic() {
                return Ok(not_acyclic(degree));
            }
            Ok(morse_torsion(&m)?)
        }
    };
    match result {
        Ok(t) => Ok(torsion_output(&t)),
        Err(ComplexError::NotAcyclic { degree, .. }) => Ok(not_acyclic(degree)),
        Err(e) => Err(e.into()),
    }
}

fn cmd_zeta(path: &Path, order: usize) -> Result<Output> {
    let f = load(path)?;
    let o = required(&f.orbits, "orbits", path)?;
    let rational = o.zeta_rational();
    let series = zeta_product(o, order)?;
    Ok(Output::pass(
        json!({"rational": to_json(&rational), "series": to_json(&series)}),
        format!("ζ = {rational}\n  = {series}"),
    ))
}

fn cmd_morse(path: &Path) -> Result<Output> {
    let f = load(path)?;
    let m = build_morse_complex(required(&f.morse, "morse", path)?)?;
    let n = m.dimension();
    let differentials: Vec<Value> = (0..n).map(|i| to_json(m.differential(i))).collect();
    let laplacians = m.laplacian_determinants();
    let mut value = json!({
        "ranks": m.complex().ranks(),
        "differentials": differentials,
        "laplacian_determinants": to_json(&laplacians),
        "acyclic": m.is_acyclic(),
    });
    let mut text = format!("ranks {:?}\n", m.complex().ranks());
    for (i, d) in laplacians.iter().enumerate() {
        text += &format!("det Δ_{i} = {d}\n");
    }
    if !m.is_acyclic() {
        text += "not acyclic over Q(t)";
        return Ok(Output {
            value,
            text,
            code: EXIT_NOT_APPLICABLE,
        });
    }
    let t = morse_torsion(&m)?;
    let w = chain_homotopy_w(&m).is_ok();
    value["torsion"] = to_json(&t.class);
    value["w_identity"] = json!(w);
    text += &format!("τ(M) = {} (mod ±t^k)\nd*W + Wd* = t: {w}", t.class);
    Ok(Output {
        value,
        text,
        code: if w { EXIT_PASS } else { EXIT_FAIL },
    })
}

fn cmd_ord(path: &Path) -> Result<Output> {
    let f = load(path)?;
    if f.presentation.is_none() && f.cover.is_none() {
        bail!("{} has neither a presentation nor a cover block", path.display());
    }
    let mut value = json!({});
    let mut text = String::new();
    if let Some(p) = &f.presentation {
        match fitting_order(p)? {
            ModuleOrder::Zero => {
                value["order"] = json!("0");
                text += "ord = 0 (not a torsion module)\n";
            }
            ModuleOrder::Class(c) => {
                text += &format!("ord = {c} (mod ±t^k)\n");
                value["order"] = to_json(&c);
            }
        }
    }
    if let Some(c) = &f.cover {
        let h = homology_summary(c);
        let degrees: Vec<Value> = h
            .degrees
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let factors: Vec<String> = d.invariant_factors.iter().map(ToString::to_string).collect();
                text += &format!(
                    "H_{i}: free rank {}, factors [{}], det(1 - tA) = {}\n",
                    d.free_rank,
                    factors.join(", "),
                    d.characteristic
                );
                json!({
                    "degree": i,
                    "free_rank": d.free_rank,
                    "invariant_factors": factors,
                    "dimension": d.dimension(),
                    "det_one_minus_ta": d.characteristic.to_string(),
                })
            })
            .collect();
        value["homology"] = json!(degrees);
    }
    Ok(Output::pass(value, text.trim_end().to_string()))
}

fn cmd_verify(files: &[PathBuf], check: CheckArg, order: Option<usize>, default: usize) -> Result<Output> {
    let only = match check {
        CheckArg::All => None,
        CheckArg::Refinement => Some(Check::Refinement),
        CheckArg::Main => Some(Check::Main),
        CheckArg::ZetaForms => Some(Check::ZetaForms),
        CheckArg::WIdentity => Some(Check::WIdentity),
        CheckArg::HomologyOrders => Some(Check::HomologyOrders),
        CheckArg::LeadingCoefficient => Some(Check::LeadingCoefficient),
        CheckArg::SwConsistency => Some(Check::SwConsistency),
    };
    if order.is_some_and(|n| n < 2) {
        bail!("--order must be at least 2");
    }
    let only = only.map(|c| [c]);
    let order = match order {
        Some(n) => SuiteOrder::Fixed(n),
        None => SuiteOrder::Default(default),
    };
    let reports = run_suite(files, only.as_ref().map(|c| c.as_slice()), order);
    let code = match summarize(&reports) {
        Outcome::Pass => EXIT_PASS,
        Outcome::Error => EXIT_INPUT,
        Outcome::NotApplicable => EXIT_NOT_APPLICABLE,
        Outcome::Fail => EXIT_FAIL,
    };
    let text = reports
        .iter()
        .map(|r| {
            let mut line = format!("{}: {:?} {:?}", r.file.as_deref().unwrap_or("-"), r.check, r.outcome);
            if let Some(m) = r.m() {
                line += &format!(" (m = {m})");
            }
            if let Some(reason) = &r.reason {
                line += &format!(": {reason}");
            }
            line
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output {
        value: to_json(&reports),
        text,
        code,
    })
}

fn cmd_sw(path: &Path, sym: bool, order: usize) -> Result<Output> {
    let f = load(path)?;
    let nb = required(&f.novikov, "novikov", path)?;
    let n = nb.precision.unwrap_or(order as i64);
    let i = i_eta(nb, n)?;
    let sw = sw_series(&i, nb.chi_sigma)?;
    let det_zero = nb.path_matrix.determinant().is_zero();
    let mut value = json!({"sw": to_json(&sw), "chi_sigma": nb.chi_sigma});
    let mut text = format!("t^(χ/2) ρ(I_η) = {sw}\n");
    let mut code = EXIT_PASS;
    if let Some(c) = &f.cover {
        let (status, detail) = match (cover_torsion(c)?, det_zero) {
            (CoverTorsion::NotAcyclic { .. }, true) => ("pass", "zero branch: det P = 0 and the cover is not acyclic".to_string()),
            (CoverTorsion::NotAcyclic { .. }, false) => ("fail", "the cover is not acyclic but det P is nonzero".to_string()),
            (CoverTorsion::Acyclic(_), true) => ("fail", "det P = 0 but the cover is acyclic".to_string()),
            (CoverTorsion::Acyclic(t), false) => match series_matches_up_to_unit(&sw, &t.value) {
                Some((sign, k)) => ("pass", format!("equals {}t^{k} τ(X, φ) = {}", if sign < 0 { "-" } else { "" }, t.class)),
                None => ("fail", format!("differs from τ(X, φ) = {} modulo ±t^k", t.class)),
            },
        };
        if status == "fail" {
            code = EXIT_FAIL;
        }
        value["cover_comparison"] = json!({"outcome": status, "detail": detail});
        text += &format!("cover: {status}: {detail}\n");
    }
    if sym {
        if nb.orbits.iter().any(|o| o.sign > 0) {
            return Ok(Output {
                value: json!({"error": "I_η is an infinite series; only finite elements can be symmetrized"}),
                text: "cannot symmetrize: I_η is an infinite series".into(),
                code: EXIT_NOT_APPLICABLE,
            });
        }
        let mut exact = nb.path_matrix.determinant();
        for o in &nb.orbits {
            let class = o.class.clone().expect("validated");
            exact = exact.mul(&GroupRingElement::one(nb.rank).sub(&GroupRingElement::monomial(class, 1.into())));
        }
        match symmetrize(&exact) {
            Ok(s) => {
                text += &format!("symmetric representative: {s:?}\n");
                value["symmetrized"] = to_json(&s);
            }
            Err(e) => {
                return Ok(Output {
                    value: json!({"error": e.to_string()}),
                    text: format!("cannot symmetrize: {e}"),
                    code: EXIT_FAIL,
                })
            }
        }
    }
    Ok(Output {
        value,
        text: text.trim_end().to_string(),
        code,
    })
}

fn cmd_reconstruct(poly: &str, rank: usize, n: i64) -> Result<Output> {
    let q: ZPoly = poly.parse().map_err(|e| anyhow!("cannot parse {poly:?}: {e}"))?;
    let g = reconstruct_from_specialization(&q, rank, n)?;
    Ok(Output::pass(to_json(&g), format!("{g:?}")))
}

fn run(cli: &Cli) -> Result<Output> {
    let default = cli.precision;
    match &cli.command {
        Command::Torsion { file, block } => cmd_torsion(file, *block),
        Command::Zeta { file, order } => cmd_zeta(file, order.unwrap_or(default)),
        Command::Morse { file } => cmd_morse(file),
        Command::Ord { file } => cmd_ord(file),
        Command::Verify { files, check, order } => cmd_verify(files, *check, *order, default),
        Command::Sw { file, symmetrize, order } => cmd_sw(file, *symmetrize, order.unwrap_or(default)),
        Command::Reconstruct { poly, rank, box_size } => cmd_reconstruct(poly, *rank, *box_size),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.pretty {
                println!("{}", out.text);
            } else {
                println!("{}", out.value);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
