//! Command-line front end. [`run`] does all the work and returns the exit
//! code with both output streams, so tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog;
use crate::exterior::StructureConstants;
use crate::format::parse_algebra;
use crate::linear::{factorize_columns, SparseVec};
use crate::poisson::{
    check_degeneracy, d1_page, dolbeault_dimensions, poisson_dimensions, solve_potential,
    verify_gerstenhaber_morphism, verify_phi_isomorphism, PoissonBivector, PoissonError,
};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LambdaChoice {
    Canonical,
    Zero,
}

#[derive(Debug, Parser)]
#[command(
    name = "nilpoisson",
    about = "Invariant Dolbeault and holomorphic Poisson cohomology of nilmanifolds",
    after_help = "ALGEBRA is a path to an algebra file or @NAME for a catalog entry."
)]
struct Args {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Bivector used by `poisson` and `d1`.
    #[arg(long, global = true, value_enum, default_value_t = LambdaChoice::Canonical)]
    lambda: LambdaChoice,
    /// Rescale the bivector by RE or RE,IM.
    #[arg(long, global = true, value_name = "RE,IM")]
    t: Option<Scalar>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check ascending support and d² = 0.
    Validate { algebra: String },
    /// Nilpotency step.
    Step { algebra: String },
    /// Table of h^{p,q}.
    Dolbeault { algebra: String },
    /// dim H^k of the twisted complex for each k.
    Poisson { algebra: String },
    /// Potential vector X with ∂̄X = ad_Λ ω̄^n, or the obstruction.
    Potential { algebra: String },
    /// Ranks of the first-page differential.
    D1 { algebra: String },
    /// d₁ = 0 exactly when a potential vector exists.
    CheckDegeneracy { algebra: String },
    /// φ is an isomorphism onto the Poisson cohomology.
    CheckIso { algebra: String },
    /// φ respects wedge products and brackets.
    CheckGerstenhaber { algebra: String },
    /// List catalog entries, or print one as an algebra file.
    Catalog { name: Option<String> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(stdout: String) -> Self {
        Outcome {
            code: 1,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr,
        }
    }
}

/// `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome::input_error(text)
            };
        }
    };
    let fmt = args.format;
    match &args.command {
        Command::Catalog { name } => catalog_command(name.as_deref(), fmt),
        Command::Validate { algebra } => match load(algebra) {
            Ok(sc) => validate(&sc, fmt),
            Err(o) => o,
        },
        Command::Step { algebra } => with_valid(algebra, |sc| step(sc, fmt)),
        Command::Dolbeault { algebra } => with_valid(algebra, |sc| dolbeault(sc, fmt)),
        Command::Poisson { algebra } => with_valid(algebra, |sc| {
            let lambda = bivector(sc, &args)?;
            poisson(sc, &lambda, fmt)
        }),
        Command::Potential { algebra } => with_valid(algebra, |sc| potential(sc, fmt)),
        Command::D1 { algebra } => with_valid(algebra, |sc| {
            let lambda = bivector(sc, &args)?;
            d1(sc, &lambda, fmt)
        }),
        Command::CheckDegeneracy { algebra } => with_valid(algebra, |sc| degeneracy(sc, fmt)),
        Command::CheckIso { algebra } => with_valid(algebra, |sc| iso(sc, fmt)),
        Command::CheckGerstenhaber { algebra } => with_valid(algebra, |sc| gerstenhaber(sc, fmt)),
    }
}

fn load(source: &str) -> Result<StructureConstants, Outcome> {
    if let Some(name) = source.strip_prefix('@') {
        return catalog::find(name)
            .map(|e| e.constants)
            .map_err(|e| Outcome::input_error(format!("error: {e}")));
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| Outcome::input_error(format!("error: cannot read {source}: {e}")))?;
    parse_algebra(&text).map_err(|e| {
        Outcome::input_error(format!("{source}:{}:{}: {}", e.line, e.column, e.message))
    })
}

fn with_valid(
    source: &str,
    body: impl FnOnce(&StructureConstants) -> Result<Outcome, Outcome>,
) -> Outcome {
    let sc = match load(source) {
        Ok(sc) => sc,
        Err(o) => return o,
    };
    let report = sc.validate();
    if !report.is_valid() {
        let mut text = format!("error: {source} is not a valid ascending structure\n");
        for m in report.messages() {
            let _ = writeln!(text, "  {m}");
        }
        return Outcome::input_error(text);
    }
    body(&sc).unwrap_or_else(|o| o)
}

/// Hard failures of a checked statement exit 1, everything else is an input
/// problem.
fn failure(e: PoissonError, fmt: Format) -> Outcome {
    match e {
        PoissonError::PotentialMismatch { .. }
        | PoissonError::DegeneracyMismatch { .. }
        | PoissonError::PhiIsomorphism { .. }
        | PoissonError::LiftNotClosed { .. }
        | PoissonError::MorphismFailed(_)
        | PoissonError::ConditionNotMet { .. }
        | PoissonError::NoPotential => Outcome::fail(status_line(false, &e.to_string(), fmt)),
        other => Outcome::input_error(format!("error: {other}")),
    }
}

fn status_line(pass: bool, detail: &str, fmt: Format) -> String {
    let status = if pass { "PASS" } else { "FAIL" };
    match fmt {
        Format::Human => format!("{status}: {detail}\n"),
        Format::Tsv => format!("status\t{status}\ndetail\t{detail}\n"),
    }
}

fn bivector(sc: &StructureConstants, args: &Args) -> Result<PoissonBivector, Outcome> {
    let base = match args.lambda {
        LambdaChoice::Canonical => PoissonBivector::canonical(sc)
            .map_err(|e| Outcome::input_error(format!("error: {e}")))?,
        LambdaChoice::Zero => PoissonBivector::zero(),
    };
    match &args.t {
        Some(t) if t.is_zero() => Err(Outcome::input_error("error: --t must be nonzero")),
        Some(t) => Ok(base.scaled(t)),
        None => Ok(base),
    }
}

fn validate(sc: &StructureConstants, fmt: Format) -> Outcome {
    let report = sc.validate();
    let mut out = match (report.is_valid(), fmt) {
        (true, _) => status_line(
            true,
            &format!("valid ascending structure, n = {}", sc.n()),
            fmt,
        ),
        (false, _) => status_line(false, "invalid structure constants", fmt),
    };
    for m in report.messages() {
        match fmt {
            Format::Human => {
                let _ = writeln!(out, "  {m}");
            }
            Format::Tsv => {
                let _ = writeln!(out, "violation\t{m}");
            }
        }
    }
    if report.is_valid() {
        Outcome::ok(out)
    } else {
        Outcome::fail(out)
    }
}

fn step(sc: &StructureConstants, fmt: Format) -> Result<Outcome, Outcome> {
    let step = sc
        .nilpotency_step()
        .map_err(|e| Outcome::input_error(format!("error: {e}")))?;
    Ok(Outcome::ok(match fmt {
        Format::Human => format!("step: {step}\n"),
        Format::Tsv => format!("step\t{step}\n"),
    }))
}

fn dolbeault(sc: &StructureConstants, fmt: Format) -> Result<Outcome, Outcome> {
    let h = dolbeault_dimensions(sc).map_err(|e| failure(e, fmt))?;
    let mut out = String::new();
    match fmt {
        Format::Human => {
            let width = h
                .iter()
                .flatten()
                .map(|d| d.to_string().len())
                .max()
                .unwrap_or(1);
            let _ = write!(out, "p\\q");
            for q in 0..h.len() {
                let _ = write!(out, " {q:>width$}");
            }
            out.push('\n');
            for (p, row) in h.iter().enumerate() {
                let _ = write!(out, "{p:<3}");
                for d in row {
                    let _ = write!(out, " {d:>width$}");
                }
                out.push('\n');
            }
        }
        Format::Tsv => {
            out.push_str("p\tq\tdim\n");
            for (p, row) in h.iter().enumerate() {
                for (q, d) in row.iter().enumerate() {
                    let _ = writeln!(out, "{p}\t{q}\t{d}");
                }
            }
        }
    }
    Ok(Outcome::ok(out))
}

fn poisson(
    sc: &StructureConstants,
    lambda: &PoissonBivector,
    fmt: Format,
) -> Result<Outcome, Outcome> {
    let dims = poisson_dimensions(sc, lambda).map_err(|e| failure(e, fmt))?;
    let mut out = String::new();
    match fmt {
        Format::Human => {
            let ks: Vec<String> = (0..dims.len()).map(|k| k.to_string()).collect();
            let ds: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(out, "k: {}", ks.join(" "));
            let _ = writeln!(out, "dim: {}", ds.join(" "));
        }
        Format::Tsv => {
            out.push_str("k\tdim\n");
            for (k, d) in dims.iter().enumerate() {
                let _ = writeln!(out, "{k}\t{d}");
            }
        }
    }
    Ok(Outcome::ok(out))
}

fn potential(sc: &StructureConstants, fmt: Format) -> Result<Outcome, Outcome> {
    let pv = solve_potential(sc).map_err(|e| failure(e, fmt))?;
    let mut out = String::new();
    match (pv.value(), fmt) {
        (Some(x), Format::Human) => {
            let _ = writeln!(out, "X = {x}");
        }
        (None, Format::Human) => {
            let _ = writeln!(out, "none");
            let _ = writeln!(
                out,
                "obstruction: ad_Λ ω̄^{} = {} is not in the image of ∂̄ on 𝔤^{{1,0}}",
                sc.n(),
                pv.target()
            );
        }
        (Some(_), Format::Tsv) => {
            out.push_str("exists\ttrue\n");
            for (k, c) in pv.coefficients().unwrap_or_default().iter().enumerate() {
                let _ = writeln!(out, "c{}\t{}", k + 1, c.literal());
            }
        }
        (None, Format::Tsv) => {
            out.push_str("exists\tfalse\n");
            let _ = writeln!(out, "obstruction\t{}", pv.target());
        }
    }
    Ok(Outcome::ok(out))
}

fn d1(sc: &StructureConstants, lambda: &PoissonBivector, fmt: Format) -> Result<Outcome, Outcome> {
    let page = d1_page(sc, lambda).map_err(|e| failure(e, fmt))?;
    let mut out = String::new();
    match fmt {
        Format::Human => {
            let _ = writeln!(
                out,
                "d1 vanishes: {}",
                if page.is_zero() { "yes" } else { "no" }
            );
            for (&(p, q), block) in &page.blocks {
                if block.is_zero() {
                    continue;
                }
                let _ = writeln!(
                    out,
                    "d1^{{{p},{q}}}: {} x {}",
                    block.target_dim, block.source_dim
                );
                for row in &block.matrix {
                    let cells: Vec<String> = row.iter().map(Scalar::to_string).collect();
                    let _ = writeln!(out, "  [{}]", cells.join(", "));
                }
            }
        }
        Format::Tsv => {
            out.push_str("p\tq\tsource_dim\ttarget_dim\trank\n");
            for (&(p, q), block) in &page.blocks {
                let columns: Vec<SparseVec> = (0..block.source_dim)
                    .map(|c| {
                        SparseVec::from_entries(
                            block
                                .matrix
                                .iter()
                                .enumerate()
                                .map(|(r, row)| (r, row[c].clone())),
                        )
                    })
                    .collect();
                let rank = factorize_columns(&columns).rank;
                let _ = writeln!(
                    out,
                    "{p}\t{q}\t{}\t{}\t{rank}",
                    block.source_dim, block.target_dim
                );
            }
        }
    }
    Ok(Outcome::ok(out))
}

fn degeneracy(sc: &StructureConstants, fmt: Format) -> Result<Outcome, Outcome> {
    let report = check_degeneracy(sc).map_err(|e| failure(e, fmt))?;
    let detail = match (report.potential.value(), &report.witness) {
        (Some(x), _) => format!("d1 = 0 and a potential vector exists: X = {x}"),
        (None, Some(w)) => format!(
            "d1 != 0 and no potential vector exists: d1^{{{},{}}} sends {} to a nonzero class",
            w.p, w.q, w.class
        ),
        (None, None) => "d1 != 0 and no potential vector exists".to_string(),
    };
    let mut out = status_line(true, &detail, fmt);
    if fmt == Format::Tsv {
        let _ = writeln!(out, "d1_zero\t{}", report.d1_vanishes);
        let _ = writeln!(out, "potential\t{}", report.potential.exists());
    }
    Ok(Outcome::ok(out))
}

fn iso(sc: &StructureConstants, fmt: Format) -> Result<Outcome, Outcome> {
    let pv = solve_potential(sc).map_err(|e| failure(e, fmt))?;
    let report = verify_phi_isomorphism(sc, &pv).map_err(|e| failure(e, fmt))?;
    let mut out = status_line(true, "φ is an isomorphism in every degree", fmt);
    match fmt {
        Format::Human => {
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "  k = {}: Σ h^{{p,q}} = {}, dim H^k = {}, lifted rank = {}",
                    r.k, r.dolbeault_sum, r.poisson_dim, r.lifted_rank
                );
            }
        }
        Format::Tsv => {
            out.push_str("k\tdolbeault_sum\tpoisson_dim\tlifted_rank\n");
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    r.k, r.dolbeault_sum, r.poisson_dim, r.lifted_rank
                );
            }
        }
    }
    Ok(Outcome::ok(out))
}

fn gerstenhaber(sc: &StructureConstants, fmt: Format) -> Result<Outcome, Outcome> {
    let pv = solve_potential(sc).map_err(|e| failure(e, fmt))?;
    let report = verify_gerstenhaber_morphism(sc, &pv).map_err(|e| failure(e, fmt))?;
    let detail = format!(
        "φ respects wedge and bracket on {} representatives ({} pairs)",
        report.representatives, report.pairs_checked
    );
    Ok(Outcome::ok(status_line(true, &detail, fmt)))
}

fn catalog_command(name: Option<&str>, fmt: Format) -> Outcome {
    if let Some(name) = name {
        return match catalog::find(name) {
            Ok(entry) => Outcome::ok(entry.export()),
            Err(e) => Outcome::input_error(format!("error: {e}")),
        };
    }
    let mut out = String::new();
    if fmt == Format::Tsv {
        out.push_str("name\tn\tparameters\n");
    }
    for entry in catalog::standard() {
        let params: Vec<String> = entry
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={}", v.literal()))
            .collect();
        match fmt {
            Format::Human => {
                let _ = write!(out, "{:<28} n = {}", entry.name, entry.constants.n());
                if !params.is_empty() {
                    let _ = write!(out, "  {}", params.join(" "));
                }
                out.push('\n');
            }
            Format::Tsv => {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}",
                    entry.name,
                    entry.constants.n(),
                    params.join(" ")
                );
            }
        }
    }
    Outcome::ok(out)
}
