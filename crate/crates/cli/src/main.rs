use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qduality::duality::{self, verify::tensor_dim};
use qduality::qfunctions::{char_table, CharTable, TableKind};
use qduality::report::{Check, Report};
use qduality::sergeev::{self, perm::factorial};
use qduality::suite::{self, SuiteConfig, CRITERIA};
use qduality::Strategy;

// Appends a line to the output buffer.
macro_rules! emit {
    ($out:expr, $($arg:tt)*) => {{
        $out.push_str(&format!($($arg)*));
        $out.push('\n');
    }};
}

/// Largest `dim W = (2n)^k` handled without `--force`.
const MAX_TENSOR_DIM: usize = 512;

#[derive(Parser)]
#[command(name = "qduality", version, about = "Exact checks for Sergeev duality and projective characters of S_k")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Seed for randomized checks; printed in every report header.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Stop at the first failing group of checks.
    #[arg(long, global = true)]
    fail_fast: bool,

    /// Run every work item on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    /// Make the B_k product drop its sign, to prove the suite notices.
    #[arg(long, global = true, hide = true)]
    inject_sign_fault: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Phi,
    Psi,
}

impl From<Kind> for TableKind {
    fn from(k: Kind) -> TableKind {
        match k {
            Kind::Phi => TableKind::Phi,
            Kind::Psi => TableKind::Psi,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the phi or psi character table for one k.
    Chartable {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=24))]
        k: u16,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Read the table from here if cached, otherwise write it.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Check the defining relations of B_k and the isomorphism onto C_k (x) A_k.
    Presentation {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=8))]
        k: u16,
    },
    /// Verify the duality on (C^{n|n})^{(x)k}.
    Duality {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        n: u16,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
        /// Evaluation points for the Schur identity.
        #[arg(long, default_value_t = 3)]
        points: usize,
        /// Allow tensor spaces above the size guard.
        #[arg(long)]
        force: bool,
    },
    /// Run the whole acceptance suite.
    VerifyAll {
        #[arg(long, default_value_t = 10)]
        kmax: usize,
        #[arg(long, default_value_t = 2)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        points: usize,
    },
}

fn check_record(c: &Check) -> String {
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    format!(
        "{};{};{};{};{};{};{}",
        c.name,
        opt(c.n),
        opt(c.k),
        c.eps.as_deref().unwrap_or(""),
        c.label.as_deref().unwrap_or(""),
        if c.pass { "PASS" } else { "FAIL" },
        c.detail
    )
}

fn print_report(out: &mut String, report: &Report, format: Format) {
    match format {
        Format::Text => out.push_str(&report.to_string()),
        Format::Records => {
            for c in &report.checks {
                emit!(out, "{}", check_record(c));
            }
            for n in &report.notes {
                emit!(out, "# {n}");
            }
        }
    }
}

fn verdict(report: &Report) -> ExitCode {
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn cache_file(dir: &Path, k: usize, kind: TableKind) -> PathBuf {
    dir.join(format!("chartable_k{k}_{kind}.txt"))
}

fn load_or_build(k: usize, kind: TableKind, cache: Option<&Path>) -> Result<CharTable, String> {
    let Some(dir) = cache else {
        return Ok(char_table(k, kind));
    };
    let path = cache_file(dir, k, kind);
    if path.exists() {
        let text = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let table = CharTable::from_records(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        if table.k != k || table.kind != kind {
            return Err(format!("{} holds the {} table for k={}", path.display(), table.kind, table.k));
        }
        return Ok(table);
    }
    let table = char_table(k, kind);
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    fs::write(&path, table.to_records()).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(table)
}

fn presentation_report(k: usize, strategy: Strategy) -> Report {
    let mut report: Report = sergeev::check_presentation(k)
        .into_iter()
        .map(|r| Check::new("presentation", r.pass, "").k(k).label(r.name))
        .collect();
    let rank = sergeev::theta_image_rank(k, strategy);
    let expected = (1usize << k) * factorial(k);
    report.push(Check::new("theta-isomorphism", rank == expected, format!("rank {rank} of {expected}")).k(k));
    report
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = &cli.common;
    if common.inject_sign_fault {
        sergeev::bk::inject_sign_fault(true);
    }
    let strategy = if common.sequential { Strategy::Sequential } else { Strategy::default() };
    let header = |out: &mut String, what: String| {
        if common.format == Format::Text {
            emit!(out, "# qduality {what} seed={}", common.seed);
        } else {
            emit!(out, "# {what};seed={}", common.seed);
        }
    };

    let mut out = String::new();
    let code = run(&cli.command, common, strategy, header, &mut out);
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().write_all(out.as_bytes());
    code
}

fn run(
    command: &Command,
    common: &Common,
    strategy: Strategy,
    header: impl Fn(&mut String, String),
    out: &mut String,
) -> ExitCode {
    match *command {
        Command::Chartable { k, kind, ref cache_dir } => {
            let (k, kind) = (k as usize, TableKind::from(kind));
            let table = match load_or_build(k, kind, cache_dir.as_deref()) {
                Ok(t) => t,
                Err(e) => return usage_error(e),
            };
            header(out, format!("chartable k={k} kind={kind}"));
            match common.format {
                Format::Text => out.push_str(&table.to_grid()),
                Format::Records => out.push_str(&table.to_records()),
            }
            ExitCode::SUCCESS
        }
        Command::Presentation { k } => {
            header(out, format!("presentation k={k}"));
            let report = presentation_report(k as usize, strategy);
            print_report(out, &report, common.format);
            verdict(&report)
        }
        Command::Duality { n, k, points, force } => {
            let (n, k) = (n as usize, k as usize);
            let dim = (2 * n).checked_pow(k as u32);
            if !force && dim.is_none_or(|d| d > MAX_TENSOR_DIM) {
                return usage_error(format!(
                    "dim W = (2n)^k = {} exceeds {MAX_TENSOR_DIM}; pass --force to run anyway",
                    dim.map_or("overflow".to_string(), |d| d.to_string())
                ));
            }
            header(out, format!("duality n={n} k={k} dimW={}", tensor_dim(n, k)));
            let pts = duality::default_points(n, points);
            let report = if common.fail_fast {
                let mut r = duality::verify_duality(n, k, strategy);
                if r.all_pass() {
                    r.extend(duality::schur_identity_check(n, k, &pts, strategy));
                }
                if r.all_pass() {
                    r.extend(duality::multiplicity_accounting(n, k, strategy));
                }
                r
            } else {
                duality::run_duality(n, k, &pts, strategy)
            };
            print_report(out, &report, common.format);
            verdict(&report)
        }
        Command::VerifyAll { kmax, nmax, points } => {
            let config = SuiteConfig {
                kmax,
                nmax,
                seed: common.seed,
                points,
                strategy,
                fail_fast: common.fail_fast,
            };
            header(out, format!("verify-all kmax={kmax} nmax={nmax}"));
            let mut total = Report::new();
            for (id, report) in suite::verify_all(&config) {
                let title = CRITERIA.iter().find(|c| c.0 == id).map_or("", |c| c.1);
                if common.format == Format::Text {
                    emit!(out, "# criterion {id}: {title}");
                }
                for c in &report.checks {
                    if common.format == Format::Text {
                        emit!(out, "{c}");
                    } else {
                        emit!(out, "{}", check_record(c));
                    }
                }
                total.extend(report);
            }
            for n in &total.notes {
                match common.format {
                    Format::Text => emit!(out, "NOTE {n}"),
                    Format::Records => emit!(out, "# {n}"),
                }
            }
            emit!(out, "{}", total.summary());
            emit!(out, "{} checks, {} failed", total.checks.len(), total.failed());
            verdict(&total)
        }
    }
}
