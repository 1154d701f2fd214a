//! The `gtwist` command line: parses arguments, reads the text formats,
//! runs one operation and renders its report.
//!
//! Exit codes: 0 on success (for `decide`, when determined), 1 when the
//! answer is negative (not determined, or sweep counterexamples), 2 on input
//! or usage errors, 3 when an internal consistency check fails.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::clifford::{build_determined, decompose, ConstructionSpec, GroupSpec};
use crate::determination::decide;
use crate::enumeration::{run_sweep, SpecLimits, Suite, SweepConfig, MAX_EXHAUSTIVE_ORDER};
use crate::error::Error;
use crate::fixtures;
use crate::groupoid::{Element, Groupoid};
use crate::inverse::{
    idempotents_form_semilattice, is_completely_inverse, is_inverse, is_right_bol, is_strongly_regular,
    satisfies_triple_law,
};
use crate::morphisms::{in_lt, in_rt, involutive_automorphisms, is_involutive_automorphism, Mapping};
use crate::report::to_stable_json;
use crate::variety::{satisfies_variety, VarietyId};

pub const CHECK_FORMAT: &str = "groupoid-twist/check/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gtwist", version, about = "Groupoids determined by involutive automorphisms on semilattices of groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print structural predicates of a table, and of a map on it.
    Check {
        /// The `.gpd` table.
        table: PathBuf,
        /// A `.map` file with a self-map of the table.
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether a table is determined by a semilattice of groups.
    Decide {
        table: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the determined groupoid and its α from a `.cspec` file.
    Build {
        spec: PathBuf,
        /// Writes `<OUT>.gpd` and `<OUT>.map` instead of printing both.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover construction data from a determined table.
    Decompose {
        table: PathBuf,
        /// The determining α; found by the decision procedure when omitted.
        #[arg(long)]
        map: Option<PathBuf>,
        /// Writes the `.cspec` here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every registered property over generated instances.
    Sweep {
        /// Largest order enumerated exhaustively.
        #[arg(long, default_value_t = MAX_EXHAUSTIVE_ORDER)]
        max_order: usize,
        /// Permits --max-order above 3 (order 4 alone has 4^16 tables).
        #[arg(long)]
        allow_large_order: bool,
        /// Number of seeded random tables.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 4)]
        sample_order: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest semilattice in the constructed family.
        #[arg(long, default_value_t = 3)]
        spec_max_semilattice: usize,
        /// Largest group in the constructed family.
        #[arg(long, default_value_t = 4)]
        spec_max_group: usize,
        /// Allows groups up to order 6 in the constructed family.
        #[arg(long)]
        extended: bool,
        /// Skips the constructed family.
        #[arg(long)]
        no_specs: bool,
        /// Runs only these suites (repeatable); all by default.
        #[arg(long = "suite", value_parser = parse_suite)]
        suites: Vec<Suite>,
        #[arg(long, default_value_t = 16)]
        max_counterexamples: usize,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Writes the report here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the built-in fixtures to a directory.
    Examples {
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// A failure mapped to an exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotDetermined(_) => EXIT_NEGATIVE,
            Error::TheoremViolation(_) => EXIT_VIOLATION,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: EXIT_INPUT, message: format!("{}: {e}", path.display()) }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

/// Parse errors carry the file name in front of the line-numbered message.
fn parse_in<T>(path: &Path, parse: impl FnOnce(&str) -> crate::Result<T>) -> Result<T, Failure> {
    parse(&read(path)?).map_err(|e| Failure { code: EXIT_INPUT, message: format!("{}: {e}", path.display()) })
}

fn read_table(path: &Path) -> Result<Groupoid, Failure> {
    parse_in(path, Groupoid::parse_gpd)
}

fn read_map(path: &Path, order: usize) -> Result<Mapping, Failure> {
    let map = parse_in(path, Mapping::parse_map)?;
    if !map.is_self_map_of(order) {
        return Err(Failure {
            code: EXIT_INPUT,
            message: format!("{}: map has {} entries, table has order {order}", path.display(), map.len()),
        });
    }
    Ok(map)
}

/// Runs `gtwist` with `args` (including the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure { code: EXIT_INPUT, message: format!("writing output: {e}") })
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Check { table, map, format } => {
            let g = read_table(&table)?;
            let alpha = map.map(|m| read_map(&m, g.order())).transpose()?;
            let report = check_report(&g, alpha.as_ref());
            emit(out, &render(format, &report, CheckReport::to_text))?;
            Ok(EXIT_OK)
        }
        Command::Decide { table, format } => {
            let g = read_table(&table)?;
            let report = decide(&g);
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            emit(out, &text)?;
            Ok(if report.theorem_violation() {
                EXIT_VIOLATION
            } else if report.determined {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Build { spec, out: target } => {
            let spec = parse_in(&spec, ConstructionSpec::parse_cspec)?;
            let (g, alpha) = build_determined(&spec)?;
            match target {
                Some(prefix) => {
                    write_file(&with_suffix(&prefix, "gpd"), &g.to_gpd())?;
                    write_file(&with_suffix(&prefix, "map"), &alpha.to_map_text())?;
                }
                None => emit(out, &format!("{}{}", g.to_gpd(), alpha.to_map_text()))?,
            }
            Ok(EXIT_OK)
        }
        Command::Decompose { table, map, out: target } => {
            let g = read_table(&table)?;
            let alpha = match map {
                Some(m) => read_map(&m, g.order())?,
                None => {
                    let report = decide(&g);
                    report.check()?;
                    match report.witness {
                        Some(w) => w.alpha,
                        None => return Err(Error::NotDetermined("no criterion holds".into()).into()),
                    }
                }
            };
            let d = decompose(&g, &alpha)?;
            if !d.labels.is_identity() {
                let _ = writeln!(err, "note: elements renumbered as {:?}", d.labels.image());
            }
            let text = d.spec.to_cspec();
            match target {
                Some(path) => write_file(&path, &text)?,
                None => emit(out, &text)?,
            }
            Ok(EXIT_OK)
        }
        Command::Sweep {
            max_order,
            allow_large_order,
            samples,
            sample_order,
            seed,
            spec_max_semilattice,
            spec_max_group,
            extended,
            no_specs,
            suites,
            max_counterexamples,
            jobs,
            format,
            out: target,
        } => {
            let limits = if extended {
                SpecLimits::extended(spec_max_semilattice, spec_max_group)
            } else {
                SpecLimits::new(spec_max_semilattice, spec_max_group)
            };
            let mut config = SweepConfig {
                max_exhaustive_order: max_order,
                acknowledge_large_order: allow_large_order,
                sample_order,
                samples,
                seed,
                spec_limits: (!no_specs).then_some(limits),
                max_counterexamples,
                jobs,
                ..SweepConfig::default()
            };
            if !suites.is_empty() {
                config = config.with_suites(suites);
            }
            let report = run_sweep(&config)?;
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            match target {
                Some(path) => write_file(&path, &text)?,
                None => emit(out, &text)?,
            }
            let _ = writeln!(err, "elapsed: {:.3} s", report.elapsed.as_secs_f64());
            Ok(if report.passed { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Examples { out: dir } => {
            fs::create_dir_all(&dir).map_err(|e| io_failure(&dir, e))?;
            for (name, text) in example_files() {
                write_file(&dir.join(name), &text)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn render<T: Serialize>(format: Format, report: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Text => text(report),
        Format::Json => to_stable_json(report),
    }
}

/// The files written by `gtwist examples`, by name.
pub fn example_files() -> Vec<(&'static str, String)> {
    let z3 = ConstructionSpec::single(GroupSpec::new(Groupoid::cyclic(3), fixtures::negation(3)));
    vec![
        ("example_1.gpd", fixtures::three_element_band().to_gpd()),
        ("example_1.map", fixtures::three_element_band_alpha().to_map_text()),
        ("example_2.gpd", fixtures::two_element_swap().to_gpd()),
        ("example_2.map", fixtures::two_element_swap_alpha().to_map_text()),
        ("z3_twist.gpd", fixtures::z3_twist().to_gpd()),
        ("z3_twist.map", fixtures::negation(3).to_map_text()),
        ("z3_twist.cspec", z3.to_cspec()),
    ]
}

/// Predicates of a table, and of a map on it when one is given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub format: &'static str,
    pub input: Groupoid,
    pub associative: bool,
    pub band: bool,
    pub idempotents: Vec<Element>,
    pub idempotents_form_semilattice: bool,
    pub inverse: bool,
    pub completely_inverse: bool,
    pub right_bol: bool,
    pub strongly_regular: bool,
    /// Semigroup membership per class.
    pub varieties: BTreeMap<VarietyId, bool>,
    pub involutive_automorphisms: Vec<Mapping>,
    pub map: Option<MapCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapCheck {
    pub image: Mapping,
    pub involution: bool,
    pub involutive_automorphism: bool,
    pub fixes_idempotents: bool,
    /// `α(xy) = x(αy)`.
    pub in_lt: bool,
    /// `α(xy) = (αx)y`.
    pub in_rt: bool,
    /// `x(αx) = αx` for all `x`.
    pub absorbs: bool,
    /// `(xy)z = (αx)(yz)` for all triples.
    pub triple_law: bool,
}

pub fn check_report(g: &Groupoid, alpha: Option<&Mapping>) -> CheckReport {
    let idempotents = g.idempotents();
    CheckReport {
        format: CHECK_FORMAT,
        input: g.clone(),
        associative: g.is_associative(),
        band: idempotents.len() == g.order(),
        idempotents: idempotents.as_slice().to_vec(),
        idempotents_form_semilattice: idempotents_form_semilattice(g),
        inverse: is_inverse(g),
        completely_inverse: is_completely_inverse(g),
        right_bol: is_right_bol(g),
        strongly_regular: is_strongly_regular(g),
        varieties: VarietyId::ALL.iter().map(|&x| (x, satisfies_variety(g, x))).collect(),
        involutive_automorphisms: involutive_automorphisms(g),
        map: alpha.map(|a| MapCheck {
            image: a.clone(),
            involution: a.is_involution(),
            involutive_automorphism: is_involutive_automorphism(a, g),
            fixes_idempotents: a.fixes_all(idempotents.iter()),
            in_lt: in_lt(a, g),
            in_rt: in_rt(a, g),
            absorbs: g.elements().all(|x| g.product(x, a.apply(x)) == a.apply(x)),
            triple_law: a.is_involution() && satisfies_triple_law(g, a),
        }),
    }
}

fn member(holds: bool, set: &str) -> String {
    format!("α{}{set}", if holds { "∈" } else { "∉" })
}

impl CheckReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("order: {}", self.input.order()));
        line(format!("associative: {}", self.associative));
        line(format!("band: {}", self.band));
        line(format!("E(S) = {:?}", self.idempotents));
        line(format!("E(S) is a semilattice: {}", self.idempotents_form_semilattice));
        line(format!("inverse: {}", self.inverse));
        line(format!("completely inverse: {}", self.completely_inverse));
        line(format!("right-Bol: {}", self.right_bol));
        line(format!("strongly regular: {}", self.strongly_regular));
        for (x, holds) in &self.varieties {
            line(format!("in {x} ({}): {holds}", x.identity_text()));
        }
        let identity_only = self.involutive_automorphisms.len() == 1 && self.involutive_automorphisms[0].is_identity();
        if identity_only {
            line("AUT²={identity}".into());
        } else {
            let maps: Vec<_> = self.involutive_automorphisms.iter().map(|m| format!("{:?}", m.image())).collect();
            line(format!("AUT²={{{}}}", maps.join(", ")));
        }
        if let Some(m) = &self.map {
            line(format!("α = {:?}", m.image.image()));
            line(format!("α is an involution: {}", m.involution));
            line(member(m.involutive_automorphism, "AUT²"));
            line(format!("α fixes E(S): {}", m.fixes_idempotents));
            line(member(m.in_lt, "LT"));
            line(member(m.in_rt, "RT"));
            line(format!("x·αx = αx: {}", m.absorbs));
            line(format!("(xy)z = (αx)(yz): {}", m.triple_law));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("gtwist").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn example_one_check_text() {
        let r = check_report(&fixtures::three_element_band(), Some(&fixtures::three_element_band_alpha()));
        let text = r.to_text();
        assert!(text.contains("AUT²={identity}\n"));
        assert!(text.contains("α∉LT\n"));
        assert!(text.contains("x·αx = αx: true\n"));
        assert!(text.contains("(xy)z = (αx)(yz): true\n"));
        assert!(text.contains("associative: true\n"));
    }

    #[test]
    fn example_two_check_text() {
        let r = check_report(&fixtures::two_element_swap(), Some(&fixtures::two_element_swap_alpha()));
        let text = r.to_text();
        assert!(text.contains("α∈AUT²\n"));
        assert!(text.contains("α∉LT\n"));
    }

    #[test]
    fn trivial_table_satisfies_everything() {
        let r = check_report(&Groupoid::cyclic(1), None);
        assert!(r.associative && r.band && r.inverse && r.completely_inverse && r.right_bol && r.strongly_regular);
        assert!(r.idempotents_form_semilattice);
        assert!(r.varieties.values().all(|&v| v));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&[]).0, EXIT_INPUT);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["sweep", "--suite", "nonsense"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn missing_file_exits_two() {
        let (code, _, err) = run_args(&["decide", "/nonexistent/table.gpd"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("/nonexistent/table.gpd"));
    }

    #[test]
    fn oversized_sweep_exits_two() {
        assert_eq!(run_args(&["sweep", "--max-order", "4"]).0, EXIT_INPUT);
    }
}
