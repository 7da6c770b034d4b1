//! Command-line surface over the exact linear algebra library: determinants
//! with a choice of algorithm, adjugates, characteristic polynomials, a law
//! checker, and permutation utilities.
//!
//! Exit codes are a stable contract: 0 success, 1 computation error
//! (violated precondition, e.g. non-square input), 2 parse error (bad file
//! or bad permutation text), 3 check failure (a law or cross-check did not
//! hold).

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use ringdet_core::{
    adjoint, all_passed, char_poly_with_cap, det_rec, det_with_cap, determinant_laws,
    expand_col, expand_row, identity, parse_matrix_file, render_matrix, Element, LawOutcome,
    LawReport, Matrix, Permutation, DEFAULT_CAP,
};

const EXIT_COMPUTE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CHECK: u8 = 3;

/// How many sampled instances each randomized law check draws.
const CHECK_SAMPLES: usize = 8;

#[derive(Parser)]
#[command(
    name = "ringdet",
    version,
    about = "Exact determinants, adjugates, and characteristic polynomials \
             over commutative rings",
    after_help = "Matrix files: line 1 `ring <descriptor>`, line 2 `dims <m> <n>`, \
                  then m rows of n whitespace-separated entries.\n\
                  Ring descriptors: integers | rationals | zmod <m> | poly over <descriptor>.\n\
                  Exit codes: 0 success, 1 computation error, 2 parse error, 3 check failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; `machine` is a single canonical line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Print parse notes and extra diagnostics to stderr.
    #[arg(long, global = true)]
    verbose: bool,

    /// Cap on n for the factorial permutation enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    /// Seed for the sampled law checks.
    #[arg(long, global = true, default_value_t = 17)]
    seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the determinant of the matrix in FILE.
    Det {
        file: PathBuf,
        /// One of: leibniz, cofactor, expand-row:<i>, expand-col:<j>.
        #[arg(long, default_value = "cofactor")]
        algorithm: Algorithm,
        /// Also run every other applicable algorithm and require agreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// Compute the classical adjoint (adjugate) of the matrix in FILE.
    Adjoint {
        file: PathBuf,
        /// Recompute a * adj(a) and require it equal det(a) * identity.
        #[arg(long)]
        verify: bool,
    },
    /// Compute the characteristic polynomial det(tI - A).
    Charpoly { file: PathBuf },
    /// Run the determinant law suite against the matrix in FILE.
    Check { file: PathBuf },
    /// Permutation utilities on comma-separated image lists.
    Perm {
        #[command(subcommand)]
        action: PermAction,
    },
}

#[derive(Subcommand)]
enum PermAction {
    /// Report even or odd.
    Parity { images: String },
    /// Compose P and Q (result sends i to P[Q[i]]).
    Compose { p: String, q: String },
}

/// Determinant algorithm selector, parsed from the --algorithm flag.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Algorithm {
    Leibniz,
    Cofactor,
    ExpandRow(usize),
    ExpandCol(usize),
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "leibniz" => Ok(Algorithm::Leibniz),
            "cofactor" => Ok(Algorithm::Cofactor),
            _ => {
                let index = |rest: &str| {
                    rest.parse::<usize>()
                        .map_err(|_| format!("`{s}`: index is not a number"))
                };
                if let Some(rest) = s.strip_prefix("expand-row:") {
                    Ok(Algorithm::ExpandRow(index(rest)?))
                } else if let Some(rest) = s.strip_prefix("expand-col:") {
                    Ok(Algorithm::ExpandCol(index(rest)?))
                } else {
                    Err(format!(
                        "`{s}` is not an algorithm; expected leibniz, cofactor, \
                         expand-row:<i>, or expand-col:<j>"
                    ))
                }
            }
        }
    }
}

impl Algorithm {
    fn name(&self) -> String {
        match self {
            Algorithm::Leibniz => "leibniz".to_string(),
            Algorithm::Cofactor => "cofactor".to_string(),
            Algorithm::ExpandRow(i) => format!("expand-row:{i}"),
            Algorithm::ExpandCol(j) => format!("expand-col:{j}"),
        }
    }

    fn eval(&self, a: &Matrix, cap: usize) -> ringdet_core::Result<Element> {
        match self {
            Algorithm::Leibniz => det_with_cap(a, cap),
            Algorithm::Cofactor => det_rec(a),
            Algorithm::ExpandRow(i) => expand_row(a, *i),
            Algorithm::ExpandCol(j) => expand_col(a, *j),
        }
    }
}

/// A failed run: what to print on stderr and which code to exit with.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: e.to_string(),
        }
    }

    fn compute(e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_COMPUTE,
            message: e.to_string(),
        }
    }

    fn check(message: String) -> Self {
        Failure {
            code: EXIT_CHECK,
            message,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, code)) => {
            print!("{output}");
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

/// Executes the command, returning stdout text and the exit code (0 or,
/// for a failing `check` report that still prints, 3).
fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    match &cli.command {
        Command::Det {
            file,
            algorithm,
            cross_check,
        } => run_det(cli, file, algorithm, *cross_check),
        Command::Adjoint { file, verify } => run_adjoint(cli, file, *verify),
        Command::Charpoly { file } => run_charpoly(cli, file),
        Command::Check { file } => run_check(cli, file),
        Command::Perm { action } => run_perm(action),
    }
}

/// Parses the matrix file, printing reduction notes to stderr when verbose.
fn load_matrix(cli: &Cli, path: &Path) -> Result<Matrix, Failure> {
    let (matrix, notes) = parse_matrix_file(path).map_err(Failure::parse)?;
    if cli.verbose {
        for note in &notes {
            eprintln!("note: {note}");
        }
    }
    Ok(matrix)
}

fn run_det(
    cli: &Cli,
    file: &Path,
    algorithm: &Algorithm,
    cross_check: bool,
) -> Result<(String, u8), Failure> {
    let a = load_matrix(cli, file)?;
    let value = algorithm.eval(&a, cli.cap).map_err(Failure::compute)?;
    if cross_check {
        let n = a.require_square().map_err(Failure::compute)?;
        for other in applicable_algorithms(n, cli.cap) {
            let got = other.eval(&a, cli.cap).map_err(Failure::compute)?;
            if got != value {
                return Err(Failure::check(format!(
                    "cross-check failed: {} gave {got}, {} gave {value}",
                    other.name(),
                    algorithm.name(),
                )));
            }
        }
        if cli.verbose {
            eprintln!("cross-check: all algorithms agree");
        }
    }
    Ok((format!("{value}\n"), 0))
}

/// Every algorithm that can run on an n x n matrix under the given cap.
fn applicable_algorithms(n: usize, cap: usize) -> Vec<Algorithm> {
    let mut algorithms = vec![Algorithm::Cofactor];
    if n <= cap {
        algorithms.push(Algorithm::Leibniz);
    }
    if n >= 2 {
        for i in 0..n {
            algorithms.push(Algorithm::ExpandRow(i));
            algorithms.push(Algorithm::ExpandCol(i));
        }
    }
    algorithms
}

fn run_adjoint(cli: &Cli, file: &Path, verify: bool) -> Result<(String, u8), Failure> {
    let a = load_matrix(cli, file)?;
    let adj = adjoint(&a).map_err(Failure::compute)?;
    if verify {
        let n = a.require_square().map_err(Failure::compute)?;
        let product = a.multiply(&adj).map_err(Failure::compute)?;
        let det = det_rec(&a).map_err(Failure::compute)?;
        let expected = identity(a.ring(), n).map_err(Failure::compute)?.scale(&det);
        if let Some((i, j)) = product.entry_diff(&expected) {
            return Err(Failure::check(format!(
                "verification failed: a*adj(a) differs from det(a)*identity at ({i}, {j})"
            )));
        }
        if cli.verbose {
            eprintln!("verified: a*adj(a) = det(a)*identity");
        }
    }
    Ok((render_output_matrix(&adj, cli.format), 0))
}

/// Plain format is the matrix file format; machine format joins its lines
/// with semicolons into one line.
fn render_output_matrix(a: &Matrix, format: Format) -> String {
    let rendered = render_matrix(a);
    match format {
        Format::Plain => rendered,
        Format::Machine => {
            let mut line = rendered.lines().collect::<Vec<_>>().join(";");
            line.push('\n');
            line
        }
    }
}

fn run_charpoly(cli: &Cli, file: &Path) -> Result<(String, u8), Failure> {
    let a = load_matrix(cli, file)?;
    let p = char_poly_with_cap(&a, cli.cap).map_err(Failure::compute)?;
    Ok((format!("{p}\n"), 0))
}

fn run_check(cli: &Cli, file: &Path) -> Result<(String, u8), Failure> {
    let a = load_matrix(cli, file)?;
    let reports = determinant_laws(&a, CHECK_SAMPLES, cli.seed).map_err(Failure::compute)?;
    Ok(render_check_report(&reports, cli.format))
}

/// Renders the law reports and maps them to the exit code: 3 as soon as any
/// law failed, 0 otherwise.
fn render_check_report(reports: &[LawReport], format: Format) -> (String, u8) {
    let code = if all_passed(reports) { 0 } else { EXIT_CHECK };
    let output = match format {
        Format::Plain => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!("{}: {}\n", r.name, r.outcome));
            }
            out
        }
        Format::Machine => {
            let mut line = reports
                .iter()
                .map(|r| {
                    let word = match &r.outcome {
                        LawOutcome::Passed => "pass",
                        LawOutcome::Failed(_) => "fail",
                        LawOutcome::Skipped(_) => "skip",
                    };
                    format!("{}={word}", r.name)
                })
                .collect::<Vec<_>>()
                .join(";");
            line.push('\n');
            line
        }
    };
    (output, code)
}

fn run_perm(action: &PermAction) -> Result<(String, u8), Failure> {
    match action {
        PermAction::Parity { images } => {
            let p = parse_permutation(images)?;
            Ok((format!("{}\n", p.parity()), 0))
        }
        PermAction::Compose { p, q } => {
            let p = parse_permutation(p)?;
            let q = parse_permutation(q)?;
            let composed = p.compose(&q).map_err(Failure::compute)?;
            Ok((format!("{composed}\n"), 0))
        }
    }
}

fn parse_permutation(text: &str) -> Result<Permutation, Failure> {
    text.parse::<Permutation>()
        .map_err(|_| Failure::parse(format!("`{text}` is not a permutation image list")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ringdet_core::Ring;

    #[test]
    fn algorithm_flag_parses_every_form() {
        assert_eq!("leibniz".parse(), Ok(Algorithm::Leibniz));
        assert_eq!("cofactor".parse(), Ok(Algorithm::Cofactor));
        assert_eq!("expand-row:2".parse(), Ok(Algorithm::ExpandRow(2)));
        assert_eq!("expand-col:0".parse(), Ok(Algorithm::ExpandCol(0)));
        assert!("expand-row:x".parse::<Algorithm>().is_err());
        assert!("gauss".parse::<Algorithm>().is_err());
    }

    #[test]
    fn applicable_algorithms_respect_shape_and_cap() {
        let names: Vec<String> = applicable_algorithms(1, 8)
            .iter()
            .map(|a| a.name())
            .collect();
        assert_eq!(names, vec!["cofactor", "leibniz"]);
        let names: Vec<String> = applicable_algorithms(9, 8)
            .iter()
            .map(|a| a.name())
            .collect();
        assert!(!names.contains(&"leibniz".to_string()));
        assert!(names.contains(&"expand-row:8".to_string()));
    }

    #[test]
    fn failing_law_report_maps_to_exit_three() {
        let reports = vec![
            LawReport {
                name: "zero-row",
                outcome: LawOutcome::Passed,
            },
            LawReport {
                name: "alternating-equal-rows",
                outcome: LawOutcome::Failed("rows 0 and 1".into()),
            },
        ];
        let (output, code) = render_check_report(&reports, Format::Plain);
        assert_eq!(code, EXIT_CHECK);
        assert!(output.contains("alternating-equal-rows: fail"));

        let (line, code) = render_check_report(&reports, Format::Machine);
        assert_eq!(code, EXIT_CHECK);
        assert_eq!(line, "zero-row=pass;alternating-equal-rows=fail\n");
    }

    #[test]
    fn passing_report_maps_to_exit_zero() {
        let reports = vec![LawReport {
            name: "zero-row",
            outcome: LawOutcome::Passed,
        }];
        let (_, code) = render_check_report(&reports, Format::Plain);
        assert_eq!(code, 0);
        let skipped = vec![LawReport {
            name: "adjoint-identity",
            outcome: LawOutcome::Skipped("adjoint needs n >= 2".into()),
        }];
        let (_, code) = render_check_report(&skipped, Format::Machine);
        assert_eq!(code, 0);
    }

    #[test]
    fn machine_matrix_output_is_one_line() {
        let a = Matrix::from_i64_rows(Ring::Integers, &[&[4, -2], &[-3, 1]]).unwrap();
        assert_eq!(
            render_output_matrix(&a, Format::Machine),
            "ring integers;dims 2 2;4 -2;-3 1\n"
        );
        assert_eq!(
            render_output_matrix(&a, Format::Plain),
            "ring integers\ndims 2 2\n4 -2\n-3 1\n"
        );
    }
}
