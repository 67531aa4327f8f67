//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code: 0 on success, 1 when a
//! verification fails or a coset cap is hit, 2 on usage errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cayley::{CayleyGraph, DotOptions};
use crate::classify::{classify, ClassifyOptions, Mode, DEFAULT_MAX_ORDER};
use crate::error::Error;
use crate::groups::FiniteGroup;
use crate::presentation::{parse_presentation, todd_coxeter, Enumeration, PiVariant, DEFAULT_MAX_COSETS};
use crate::theory::{check_morphisms, verify_theorem, TheoremOptions};

/// Environment variable overriding the classification order guard.
pub const MAX_ORDER_ENV: &str = "CAYLEY_CLASSIFY_MAX_ORDER";

const MAX_THEOREM_N: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "cayley-equiv", version, about = "Classify generating sequences of finite groups up to Cayley graph isomorphism")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CliMode {
    Directed,
    Undirected,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::Directed => Mode::Directed,
            CliMode::Undirected => Mode::Undirected,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partition generating sequences into equivalence classes.
    Classify {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 2)]
        length: usize,
        #[arg(long, value_enum, default_value_t = CliMode::Directed)]
        mode: CliMode,
        /// Only minimal generating sequences.
        #[arg(long)]
        minimal: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Dedupe dicyclic automorphism orbits before isomorphism tests.
        #[arg(long)]
        orbit_collapse: bool,
    },
    /// Check the dicyclic classification for every n in an inclusive range.
    VerifyTheorem {
        /// Inclusive range `a..b`.
        #[arg(long)]
        n_range: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Write a Cayley graph as Graphviz DOT.
    ExportDot {
        #[arg(long)]
        group: String,
        /// Comma-separated element expressions.
        #[arg(long)]
        seq: String,
        #[arg(long)]
        undirected: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate cosets of a finitely presented group.
    CheckPresentation {
        text: String,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        #[arg(long)]
        expect: Option<usize>,
    },
    /// Verify the isomorphisms between a dicyclic group and a presentation Pi.
    CheckMorphisms {
        #[arg(long)]
        n: usize,
        /// 0, 1 or n.
        #[arg(long)]
        variant: String,
    },
    /// Print the order and element-order histogram of a group.
    Info {
        #[arg(long)]
        group: String,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EnumerationExceeded(_) | Error::Axiom(_) | Error::ContractViolation(_) => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type Outcome = std::result::Result<bool, Failure>;

/// Parse `args` (including the program name) and execute the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Classify {
            group,
            length,
            mode,
            minimal,
            format,
            out: path,
            jobs,
            orbit_collapse,
        } => cmd_classify(&group, length, mode.into(), minimal, format, path, jobs, orbit_collapse, out),
        Command::VerifyTheorem { n_range, format, jobs } => {
            cmd_verify_theorem(&n_range, format, jobs, out)
        }
        Command::ExportDot {
            group,
            seq,
            undirected,
            out: path,
        } => cmd_export_dot(&group, &seq, undirected, path, out, err),
        Command::CheckPresentation {
            text,
            max_cosets,
            expect,
        } => cmd_check_presentation(&text, max_cosets, expect, out),
        Command::CheckMorphisms { n, variant } => cmd_check_morphisms(n, &variant, out),
        Command::Info { group } => cmd_info(&group, out),
    }
}

fn check_jobs(jobs: usize) -> std::result::Result<(), Failure> {
    if jobs == 0 {
        Err(Failure::Usage("--jobs must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn max_order_from_env() -> std::result::Result<usize, Failure> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_ORDER_ENV} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_classify(
    group: &str,
    length: usize,
    mode: Mode,
    minimal: bool,
    format: Format,
    path: Option<PathBuf>,
    jobs: usize,
    orbit_collapse: bool,
    out: &mut dyn Write,
) -> Outcome {
    check_jobs(jobs)?;
    let max_order = max_order_from_env()?;
    let g = FiniteGroup::from_descriptor(group)?;
    let report = classify(
        &g,
        length,
        &ClassifyOptions {
            mode,
            minimal_only: minimal,
            jobs,
            orbit_collapse,
            max_order,
        },
    )?;
    let body = match format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };
    match path {
        Some(p) => std::fs::write(p, body)?,
        None => out.write_all(body.as_bytes())?,
    }
    let k = report.class_count();
    writeln!(out, "{k} class{}", if k == 1 { "" } else { "es" })?;
    Ok(true)
}

/// Parse an inclusive range `a..b` (also `a..=b`, or a single `a`).
fn parse_range(text: &str) -> std::result::Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("--n-range must look like `a..b`, got `{text}`"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (text, text),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a < 2 || a > b || b > MAX_THEOREM_N {
        return Err(Failure::Usage(format!(
            "--n-range needs 2 <= a <= b <= {MAX_THEOREM_N}, got {a}..{b}"
        )));
    }
    Ok((a, b))
}

fn cmd_verify_theorem(range: &str, format: Format, jobs: usize, out: &mut dyn Write) -> Outcome {
    let (lo, hi) = parse_range(range)?;
    check_jobs(jobs)?;
    let options = TheoremOptions {
        max_n: MAX_THEOREM_N,
        jobs,
    };
    let mut results = Vec::new();
    for n in lo..=hi {
        results.push(verify_theorem(n, &options)?);
    }
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&results).expect("results serialize");
            s.push('\n');
            out.write_all(s.as_bytes())?;
        }
        Format::Table => {
            for r in &results {
                let k = r.observed.class_count;
                writeln!(
                    out,
                    "n={}: {k} class{} {}",
                    r.n,
                    if k == 1 { "" } else { "es" },
                    if r.pass { "PASS" } else { "FAIL" }
                )?;
                for d in &r.diagnostics {
                    writeln!(out, "  {d}")?;
                }
            }
        }
    }
    Ok(results.iter().all(|r| r.pass))
}

fn cmd_export_dot(
    group: &str,
    seq: &str,
    undirected: bool,
    path: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let g = FiniteGroup::from_descriptor(group)?;
    let s = g.parse_sequence(seq)?;
    let graph = CayleyGraph::build(&g, &s);
    let options = DotOptions {
        undirected,
        title: None,
    };
    let dot = graph.to_dot(&options);
    let edges = if undirected {
        graph.undirected_view().edge_count()
    } else {
        graph.edge_count()
    };
    let summary = format!("{} vertices, {edges} edges", graph.vertex_count());
    match path {
        Some(p) => {
            std::fs::write(p, dot)?;
            writeln!(out, "{summary}")?;
        }
        None => {
            out.write_all(dot.as_bytes())?;
            writeln!(err, "{summary}")?;
        }
    }
    if !graph.is_connected() {
        writeln!(err, "warning: the sequence does not generate the group")?;
    }
    Ok(true)
}

fn cmd_check_presentation(
    text: &str,
    max_cosets: usize,
    expect: Option<usize>,
    out: &mut dyn Write,
) -> Outcome {
    let pres = parse_presentation(text)?;
    match todd_coxeter(&pres, max_cosets)? {
        Enumeration::Complete(g) => {
            writeln!(out, "order {}", g.order())?;
            match expect {
                Some(e) if e == g.order() => {
                    writeln!(out, "PASS")?;
                    Ok(true)
                }
                Some(e) => {
                    writeln!(out, "FAIL: expected order {e}")?;
                    Ok(false)
                }
                None => Ok(true),
            }
        }
        Enumeration::Exceeded { cosets } => {
            writeln!(out, "coset limit exceeded: {cosets} cosets defined")?;
            Ok(false)
        }
    }
}

fn cmd_check_morphisms(n: usize, variant: &str, out: &mut dyn Write) -> Outcome {
    let variant = PiVariant::parse(variant, n)?;
    let report = check_morphisms(n, variant)?;
    writeln!(out, "source order {}", report.source_order)?;
    writeln!(out, "target order {}", report.target_order)?;
    writeln!(out, "phi homomorphism: {}", report.phi_is_homomorphism)?;
    writeln!(out, "psi homomorphism: {}", report.psi_is_homomorphism)?;
    writeln!(out, "psi after phi is identity: {}", report.psi_after_phi_is_identity)?;
    writeln!(out, "phi after psi is identity: {}", report.phi_after_psi_is_identity)?;
    writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" })?;
    Ok(report.passed())
}

fn cmd_info(group: &str, out: &mut dyn Write) -> Outcome {
    let g = FiniteGroup::from_descriptor(group)?;
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for o in g.element_orders() {
        *histogram.entry(o).or_default() += 1;
    }
    let orders: Vec<String> = histogram.iter().map(|(o, c)| format!("{o}:{c}")).collect();
    writeln!(out, "group {}", g.descriptor())?;
    writeln!(out, "order {}", g.order())?;
    writeln!(out, "element orders {{{}}}", orders.join(", "))?;
    if !g.generators().is_empty() {
        let gens: Vec<&str> = g.generators().iter().map(|(n, _)| n.as_str()).collect();
        writeln!(out, "generators {}", gens.join(", "))?;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["cayley-equiv"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn range_parsing() {
        assert!(matches!(parse_range("2..8"), Ok((2, 8))));
        assert!(matches!(parse_range("3..=3"), Ok((3, 3))));
        assert!(matches!(parse_range("5"), Ok((5, 5))));
        assert!(parse_range("1..2").is_err());
        assert!(parse_range("4..3").is_err());
        assert!(parse_range("2..13").is_err());
        assert!(parse_range("x..3").is_err());
    }

    #[test]
    fn info_q8() {
        let (code, out, _) = run_str(&["info", "--group", "dicyclic:2"]);
        assert_eq!(code, 0);
        assert!(out.contains("order 8\n"));
        assert!(out.contains("element orders {1:1, 2:1, 4:6}"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["info", "--group", "nonsense:3"]).0, 2);
        assert_eq!(run_str(&["classify"]).0, 2);
        assert_eq!(run_str(&["check-morphisms", "--n", "4", "--variant", "0"]).0, 2);
        assert_eq!(run_str(&["verify-theorem", "--n-range", "1..2"]).0, 2);
    }

    #[test]
    fn presentation_outcomes() {
        let (code, out, _) = run_str(&["check-presentation", "<g|g^5>", "--expect", "6"]);
        assert_eq!(code, 1);
        assert!(out.contains("FAIL"));
        let (code, out, _) = run_str(&["check-presentation", "<a,b|a*b=b*a>", "--max-cosets", "50"]);
        assert_eq!(code, 1);
        assert!(out.contains("coset limit exceeded"));
    }
}
