//! The `pqsym` command line.
//!
//! [`run`] parses arguments, executes one command and returns the text it
//! would print together with the exit code: 0 on success, 1 for a negative
//! mathematical result (nonzero residual, failed verification) and 2 for
//! usage or input errors.

use std::ffi::OsString;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bases::{
    expand_in_family, reference_checks, verify_identities, ExpansionReport, Family, ReferenceCheck,
    REFERENCE_EXPANSIONS,
};
use crate::compositions::{is_peak_composition, subset_of_comp, Composition};
use crate::error::Error;
use crate::json;
use crate::qsym::{multiply, Basis, QSymExpr, Term};
use crate::render::{self, Style};
use crate::tableaux::{
    enumerate_mpct, enumerate_pct, enumerate_ssyct, enumerate_standard, Tableau,
};

/// Largest degree accepted without `--force`.
pub const N_MAX_GUARD: u32 = 9;

#[derive(Debug, Parser)]
#[command(
    name = "pqsym",
    version,
    about = "Quasisymmetric Schur P-functions and peak composition tableaux"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the tableaux of a given shape and kind.
    Enumerate {
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// Expand a family member in the M, F or G basis.
    Expand {
        #[arg(long)]
        family: String,
        #[arg(long)]
        index: String,
        #[arg(long, value_enum)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// Expand an expression read from stdin in a target family.
    Convert {
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Multiply two family members and expand the product.
    Multiply {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// Cross-check every construction up to a given degree.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        force: bool,
    },
    /// Render an expression or tableau read from stdin.
    Render {
        #[arg(long, value_enum)]
        style: RenderStyle,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Pct,
    Mpct,
    #[value(name = "mpct*")]
    MpctStar,
    Spct,
    Smpct,
    #[value(name = "smpct*")]
    SmpctStar,
    Ssyct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
    Ascii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    #[value(name = "M")]
    M,
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::M,
            BasisArg::F => Basis::F,
            BasisArg::G => Basis::G,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RenderStyle {
    Latex,
    Ascii,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Outcome::default()
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stderr: format!("error: {msg}\n"),
            code: 2,
            ..Outcome::default()
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::usage(e)
    }
}

type CmdResult = std::result::Result<Outcome, Outcome>;

/// Parses `args` (including the program name) and runs the command.
/// `stdin` is read only by `convert` and `render`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stderr: text,
                    code: 2,
                    ..Outcome::default()
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(cli.command, stdin).unwrap_or_else(|o| o)
}

pub fn execute(command: Command, stdin: &mut dyn Read) -> CmdResult {
    match command {
        Command::Enumerate {
            shape,
            kind,
            format,
            force,
        } => cmd_enumerate(&shape, kind, format, force),
        Command::Expand {
            family,
            index,
            basis,
            format,
            force,
        } => cmd_expand(&family, &index, basis.into(), format, force),
        Command::Convert { target, format } => cmd_convert(&read_json(stdin)?, &target, format),
        Command::Multiply {
            left,
            right,
            target,
            format,
            force,
        } => cmd_multiply(&left, &right, &target, format, force),
        Command::Verify { n, json, force } => cmd_verify(n, json, force),
        Command::Render { style } => cmd_render(&read_json(stdin)?, style),
    }
}

fn read_json(stdin: &mut dyn Read) -> std::result::Result<Value, Outcome> {
    let mut text = String::new();
    stdin
        .read_to_string(&mut text)
        .map_err(|e| Outcome::usage(format!("cannot read stdin: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Outcome::usage(format!("malformed JSON: {e}")))
}

fn parse_composition(s: &str) -> std::result::Result<Composition, Outcome> {
    let c: Composition = s.parse()?;
    if c.is_empty() {
        return Err(Outcome::usage("composition must be nonempty"));
    }
    Ok(c)
}

fn parse_family(s: &str) -> std::result::Result<Family, Outcome> {
    Ok(s.parse::<Family>()?)
}

fn guard(n: u32, force: bool) -> std::result::Result<(), Outcome> {
    if n > N_MAX_GUARD && !force {
        return Err(Outcome::usage(format!(
            "degree {n} exceeds {N_MAX_GUARD}; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn format_not_supported(format: Format, what: &str) -> Outcome {
    Outcome::usage(format!("format {format:?} is not available for {what}").to_lowercase())
}

pub fn cmd_enumerate(shape: &str, kind: Kind, format: Format, force: bool) -> CmdResult {
    let shape = parse_composition(shape)?;
    guard(shape.size(), force)?;
    if kind != Kind::Ssyct && !is_peak_composition(&shape) {
        return Err(Error::NotPeakComposition(shape).into());
    }
    let tableaux: Vec<Tableau> = match kind {
        Kind::Pct => enumerate_pct(&shape)?,
        Kind::Mpct => enumerate_mpct(&shape, false)?,
        Kind::MpctStar => enumerate_mpct(&shape, true)?,
        Kind::Spct => enumerate_standard(&shape, false, false)?,
        Kind::Smpct => enumerate_standard(&shape, true, false)?,
        Kind::SmpctStar => enumerate_standard(&shape, true, true)?,
        Kind::Ssyct => enumerate_ssyct(&shape),
    };
    let mut out = String::new();
    match format {
        Format::Json => {
            for t in &tableaux {
                out.push_str(&json::tableau_to_json(t).to_string());
                out.push('\n');
            }
            out.push_str(&json!({"count": tableaux.len()}).to_string());
            out.push('\n');
        }
        Format::Ascii => {
            for t in &tableaux {
                out.push_str(&render::tableau_ascii(t));
                out.push('\n');
            }
            out.push_str(&format!("count: {}\n", tableaux.len()));
        }
        other => return Err(format_not_supported(other, "enumerate")),
    }
    Ok(Outcome::ok(out))
}

/// Rewrites a report over a basis family as an expression in that basis.
fn report_as_expression(
    r: &ExpansionReport,
    basis: Basis,
) -> std::result::Result<QSymExpr, Outcome> {
    let terms = r.coefficients.iter().map(|(index, c)| {
        (
            Term {
                basis,
                index: index.clone(),
            },
            c.clone(),
        )
    });
    Ok(QSymExpr::from_terms(r.degree, terms)?)
}

fn residual_failure(stdout: String, r: &ExpansionReport) -> Outcome {
    Outcome {
        stdout,
        stderr: format!(
            "residual nonzero, not in the span of {}: {}\n",
            r.family, r.residual
        ),
        code: 1,
    }
}

pub fn cmd_expand(
    family: &str,
    index: &str,
    basis: Basis,
    format: Format,
    force: bool,
) -> CmdResult {
    let family = parse_family(family)?;
    let index = parse_composition(index)?;
    guard(index.size(), force)?;
    family.validate(&index)?;
    if basis == Basis::G
        && !matches!(
            family,
            Family::HatP | Family::HatQ | Family::Basis(Basis::G)
        )
    {
        return Err(Outcome::usage(format!(
            "basis G is only available for hatP and hatQ, not {family}"
        )));
    }
    let e = family.element_monomial(&index)?;
    let expr = if basis == Basis::M {
        e
    } else {
        let r = expand_in_family(&e, Family::Basis(basis))?;
        if !r.residual_zero {
            return Err(residual_failure(String::new(), &r));
        }
        report_as_expression(&r, basis)?
    };
    let out = match format {
        Format::Text => render::expression(&expr, Style::Text),
        Format::Latex => render::expression(&expr, Style::Latex),
        Format::Json => json::expression_to_json(&expr).to_string(),
        other => return Err(format_not_supported(other, "expand")),
    };
    Ok(Outcome::ok(out + "\n"))
}

fn report_output(r: &ExpansionReport, format: Format) -> CmdResult {
    let out = match format {
        Format::Json => json::report_to_json(r).to_string(),
        Format::Text => r.to_text(),
        other => return Err(format_not_supported(other, "reports")),
    } + "\n";
    if r.residual_zero {
        Ok(Outcome::ok(out))
    } else {
        Err(residual_failure(out, r))
    }
}

pub fn cmd_convert(input: &Value, target: &str, format: Format) -> CmdResult {
    let target = parse_family(target)?;
    let e = json::expression_from_json(input)?;
    let r = expand_in_family(&e, target)?;
    report_output(&r, format)
}

fn parse_member(s: &str) -> std::result::Result<QSymExpr, Outcome> {
    let (family, index) = s
        .split_once(':')
        .ok_or_else(|| Outcome::usage(format!("expected FAMILY:INDEX, got {s:?}")))?;
    let family = parse_family(family)?;
    let index = parse_composition(index)?;
    family.validate(&index)?;
    Ok(family.element_monomial(&index)?)
}

pub fn cmd_multiply(
    left: &str,
    right: &str,
    target: &str,
    format: Format,
    force: bool,
) -> CmdResult {
    let target = parse_family(target)?;
    let a = parse_member(left)?;
    let b = parse_member(right)?;
    guard(a.degree() + b.degree(), force)?;
    let r = expand_in_family(&multiply(&a, &b), target)?;
    report_output(&r, format)
}

fn index_json(family: Family, index: &Composition) -> Value {
    if family.indexed_by_subsets() {
        json::subset_to_json(&subset_of_comp(index))
    } else {
        json::composition_to_json(index)
    }
}

fn reference_json(c: &ReferenceCheck) -> Value {
    let family = c.report.family;
    json!({
        "name": c.name,
        "expansion": json::report_to_json(&c.report),
        "text": c.report.to_text(),
        "sound": c.mathematically_sound,
        "exact_match": c.exact_match,
        "matches_printed": c.matches_printed,
        "suspect_resolution": c.suspect_resolution.as_ref().map(|v| {
            v.iter().map(|i| index_json(family, i)).collect::<Vec<_>>()
        }),
        "diff": c.diff.iter().map(|d| json!({
            "index": index_json(family, &d.index),
            "printed": json::coefficient_to_json(&d.printed),
            "computed": json::coefficient_to_json(&d.computed),
        })).collect::<Vec<_>>(),
    })
}

fn reference_text(c: &ReferenceCheck) -> String {
    let family = c.report.family;
    let mut out = format!(
        "reference {}: {}\n  computed: {}\n",
        c.name,
        if c.mathematically_sound {
            "ok"
        } else {
            "FAILED"
        },
        c.report.to_text()
    );
    let status = if c.exact_match {
        "identical"
    } else if c.matches_printed {
        "identical apart from the suspect term"
    } else {
        "differs"
    };
    out.push_str(&format!("  printed text: {status}\n"));
    for (c, index) in &c.suspect_terms {
        let label = family.label(&Composition::from_parts_unchecked(index.to_vec()));
        out.push_str(&format!(
            "  suspect printed term {c:+} {label} left out of the comparison\n"
        ));
    }
    for d in &c.diff {
        out.push_str(&format!(
            "    {}: printed {}, computed {}\n",
            family.label(&d.index),
            d.printed,
            d.computed
        ));
    }
    if let Some(placed) = &c.suspect_resolution {
        let labels: Vec<String> = placed.iter().map(|i| family.label(i)).collect();
        out.push_str(&format!(
            "  suspect term resolves to {}\n",
            labels.join(", ")
        ));
    }
    out
}

pub fn cmd_verify(n: u32, as_json: bool, force: bool) -> CmdResult {
    if n == 0 {
        return Err(Outcome::usage("--n must be at least 1"));
    }
    guard(n, force)?;
    let report = verify_identities(n);
    let wanted: Vec<&str> = REFERENCE_EXPANSIONS
        .iter()
        .filter(|r| r.degree() <= n)
        .map(|r| r.name)
        .collect();
    let references: Vec<ReferenceCheck> = if wanted.is_empty() {
        Vec::new()
    } else {
        reference_checks()?
            .into_iter()
            .filter(|c| wanted.contains(&c.name))
            .collect()
    };
    let passed = report.passed() && references.iter().all(|c| c.mathematically_sound);

    let stdout = if as_json {
        let mut v = serde_json::to_value(&report).expect("report serializes");
        v["references"] = Value::Array(references.iter().map(reference_json).collect());
        v["passed"] = json!(passed);
        v.to_string() + "\n"
    } else {
        let mut out = format!(
            "checked {} peak compositions and {} strict partitions of size <= {n}\n",
            report.shapes_checked, report.partitions_checked
        );
        out.push_str(&format!(
            "identity violations: {}\n",
            report.violations.len()
        ));
        for v in &report.violations {
            out.push_str(&format!("  {} at {:?}: {}\n", v.check, v.index, v.detail));
        }
        for c in &references {
            out.push_str(&reference_text(c));
        }
        out.push_str(if passed {
            "result: pass\n"
        } else {
            "result: FAIL\n"
        });
        out
    };
    if passed {
        return Ok(Outcome::ok(stdout));
    }
    let witness = match report.violations.first() {
        Some(v) => format!("{} at {:?}: {}", v.check, v.index, v.detail),
        None => {
            let c = references
                .iter()
                .find(|c| !c.mathematically_sound)
                .expect("some check failed");
            format!("reference {}: {}", c.name, c.report.to_text())
        }
    };
    Err(Outcome {
        stdout,
        stderr: format!("verification failed: {witness}\n"),
        code: 1,
    })
}

pub fn cmd_render(input: &Value, style: RenderStyle) -> CmdResult {
    let out = if json::is_tableau_json(input) {
        let t = json::tableau_from_json(input)?;
        match style {
            RenderStyle::Latex => render::tableau_latex(&t),
            RenderStyle::Ascii => render::tableau_ascii(&t),
        }
    } else {
        let e = json::expression_from_json(input)?;
        let text = match style {
            RenderStyle::Latex => render::expression(&e, Style::Latex),
            RenderStyle::Ascii => render::expression(&e, Style::Text),
        };
        text + "\n"
    };
    Ok(Outcome::ok(out))
}
