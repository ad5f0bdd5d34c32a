//! Command-line front end: sequence dumps, polynomial coefficients,
//! single-instance verification, range scans and report emission.

use std::collections::BTreeMap;
use std::path::PathBuf;

use binomlab::poly::IntPolynomial;
use binomlab::sequences;
use binomlab::verify::families::{self, Params};
use binomlab::verify::{KernelSpec, ProductVariant, Strength};
use binomlab::CheckResult;
use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

pub mod report;

pub use report::{emit_report, ConfigEcho, Report, Summary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "binomlab",
    version,
    about = "Exact verification of binomial-sum congruences"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads; the output does not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,

    /// Record the wall-clock time (seconds since the Unix epoch) in the report.
    #[arg(long, global = true)]
    pub timestamp: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the terms of a sequence for n = 0..=max.
    Seq {
        #[arg(value_enum)]
        name: SeqName,
        #[arg(long)]
        max: u64,
    },
    /// Print the coefficients (low to high) of R_n(x), S_n(x) or S^(m)_n(x).
    Poly {
        #[arg(value_enum)]
        name: PolyName,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Verify one instance, or a family's default range when instance
    /// parameters are missing.
    Verify {
        #[arg(value_parser = family_parser(), required_unless_present = "all")]
        family: Option<String>,
        /// Run every registered family with its default range.
        #[arg(long, conflicts_with = "family")]
        all: bool,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run a family over a range.
    Scan {
        #[arg(value_parser = family_parser())]
        family: String,
        #[command(flatten)]
        ranges: RangeArgs,
    },
    /// Verify a q-analogue family.
    Qverify {
        #[arg(value_enum)]
        family: QFamily,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// List registered families.
    List,
}

fn family_parser() -> PossibleValuesParser {
    PossibleValuesParser::new(families::registry().iter().map(|f| f.name))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    #[value(name = "R")]
    R,
    #[value(name = "S")]
    S,
    #[value(name = "schroder")]
    Schroder,
    #[value(name = "t")]
    TSmall,
    #[value(name = "T")]
    TBig,
    #[value(name = "Tplus")]
    TPlus,
    #[value(name = "Tminus")]
    TMinus,
    #[value(name = "s")]
    SSmall,
    #[value(name = "Splus")]
    SPlus,
    #[value(name = "Sminus")]
    SMinus,
}

impl SeqName {
    fn term(self, n: u64) -> BigInt {
        match self {
            SeqName::R => sequences::r_number(n),
            SeqName::S => sequences::s_number(n),
            SeqName::Schroder => sequences::schroder(n),
            SeqName::TSmall => sequences::t_small(n),
            SeqName::TBig => sequences::t_big(n),
            SeqName::TPlus => sequences::t_plus(n),
            SeqName::TMinus => sequences::t_minus(n),
            SeqName::SSmall => sequences::s_small(n),
            SeqName::SPlus => sequences::s_plus(n),
            SeqName::SMinus => sequences::s_minus(n),
        }
    }

    fn label(self) -> &'static str {
        match self {
            SeqName::R => "R",
            SeqName::S => "S",
            SeqName::Schroder => "schroder",
            SeqName::TSmall => "t",
            SeqName::TBig => "T",
            SeqName::TPlus => "Tplus",
            SeqName::TMinus => "Tminus",
            SeqName::SSmall => "s",
            SeqName::SPlus => "Splus",
            SeqName::SMinus => "Sminus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyName {
    #[value(name = "R")]
    R,
    #[value(name = "S")]
    S,
    #[value(name = "Sm")]
    Sm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QFamily {
    Thm31,
    Thm32,
    Lemma32,
    Conj57,
    Conj58,
    Qlucas,
}

impl QFamily {
    fn family(self) -> &'static str {
        match self {
            QFamily::Thm31 => "thm31",
            QFamily::Thm32 => "thm32",
            QFamily::Lemma32 => "lemma32",
            QFamily::Conj57 => "conj57",
            QFamily::Conj58 => "conj58ii",
            QFamily::Qlucas => "qlucas",
        }
    }
}

/// Range bounds shared by `verify`, `scan` and `qverify`.
#[derive(Debug, Clone, Default, Args)]
pub struct RangeArgs {
    #[arg(long)]
    pub max_n: Option<u64>,
    /// Exclusive bound on primes.
    #[arg(long)]
    pub max_p: Option<u64>,
    #[arg(long)]
    pub max_m: Option<u64>,
    #[arg(long)]
    pub max_a: Option<u64>,
    #[arg(long)]
    pub max_b: Option<u64>,
    /// Seed of the randomized kernel grid.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Sequence selector for growth and irreducibility scans (R or S).
    #[arg(long)]
    pub seq: Option<String>,
    /// Restrict a scan over m to one value.
    #[arg(long)]
    pub m: Option<u64>,
}

/// Instance parameters.
#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub d: Option<u64>,
    #[arg(long)]
    pub s: Option<u64>,
    #[arg(long)]
    pub t: Option<u64>,
    /// Comma-separated integers.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Option<Vec<i64>>,
    /// Comma-separated integers.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub b: Option<Vec<i64>>,
    #[arg(long)]
    pub a_prime: Option<u64>,
    /// Kernel name (f1..f10, k, k2, ...) or `[sign:]num/den`.
    #[arg(long, allow_hyphen_values = true)]
    pub kernel: Option<KernelSpec>,
    #[arg(long)]
    pub variant: Option<ProductVariant>,
    #[arg(long)]
    pub strength: Option<Strength>,
    /// Comma-separated rationals `p/q` (the sequence for lemma42).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a_seq: Option<Vec<BigRational>>,
    #[command(flatten)]
    pub ranges: RangeArgs,
}

impl RangeArgs {
    fn apply(&self, p: &mut Params, echo: &mut BTreeMap<String, String>) {
        macro_rules! put {
            ($($field:ident),*) => {$(
                if let Some(v) = &self.$field {
                    echo.insert(stringify!($field).into(), v.to_string());
                }
                p.$field = self.$field.clone();
            )*};
        }
        put!(max_n, max_p, max_m, max_a, max_b, seed, seq, m);
    }
}

fn list<T: ToString>(v: &[T]) -> String {
    format!(
        "[{}]",
        v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
    )
}

impl ParamArgs {
    fn apply(&self, p: &mut Params, echo: &mut BTreeMap<String, String>) {
        self.ranges.apply(p, echo);
        macro_rules! put {
            ($($field:ident),*) => {$(
                if let Some(v) = &self.$field {
                    echo.insert(stringify!($field).into(), v.to_string());
                    p.$field = Some(v.clone());
                }
            )*};
        }
        put!(n, p, k, d, s, t, a_prime, kernel, variant);
        if let Some(s) = self.strength {
            echo.insert("strength".into(), s.as_str().into());
            p.strength = Some(s);
        }
        for (key, value, slot) in [("a", &self.a, &mut p.a), ("b", &self.b, &mut p.b)] {
            if let Some(v) = value {
                echo.insert(key.into(), list(v));
                *slot = Some(v.clone());
            }
        }
        if let Some(v) = &self.a_seq {
            echo.insert("a_seq".into(), list(v));
            p.a_seq = Some(v.clone());
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Rendered output and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub bytes: Vec<u8>,
    pub exit_code: i32,
    pub report: Option<Report>,
}

/// Runs a parsed command line on a pool of `cli.jobs` threads.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        builder = builder.num_threads(j as usize);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    pool.install(|| run_in_pool(cli))
}

fn run_in_pool(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Seq { name, max } => Ok(plain(emit_sequence(*name, *max, cli.format))),
        Command::Poly { name, n, m } => emit_poly(*name, *n, *m, cli.format).map(plain),
        Command::List => Ok(plain(list_families().into_bytes())),
        Command::Verify {
            family,
            all,
            params,
        } => {
            let mut p = Params::default();
            let mut echo = BTreeMap::new();
            params.apply(&mut p, &mut echo);
            if *all {
                let results = families::run_all(&p).map_err(usage)?;
                Ok(report(cli, "verify", "all", echo, results))
            } else {
                let name = family
                    .as_deref()
                    .expect("clap requires a family without --all");
                run_family(cli, "verify", name, &p, echo)
            }
        }
        Command::Scan { family, ranges } => {
            let mut p = Params::default();
            let mut echo = BTreeMap::new();
            ranges.apply(&mut p, &mut echo);
            run_family(cli, "scan", family, &p, echo)
        }
        Command::Qverify { family, params } => {
            let mut p = Params::default();
            let mut echo = BTreeMap::new();
            params.apply(&mut p, &mut echo);
            run_family(cli, "qverify", family.family(), &p, echo)
        }
    }
}

fn usage(e: binomlab::Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn plain(bytes: Vec<u8>) -> Outcome {
    Outcome {
        bytes,
        exit_code: 0,
        report: None,
    }
}

fn run_family(
    cli: &Cli,
    command: &str,
    name: &str,
    params: &Params,
    echo: BTreeMap<String, String>,
) -> Result<Outcome, CliError> {
    let family =
        families::find(name).ok_or_else(|| CliError::Usage(format!("unknown family '{name}'")))?;
    let results = family.run(params).map_err(usage)?;
    Ok(report(cli, command, name, echo, results))
}

fn report(
    cli: &Cli,
    command: &str,
    family: &str,
    params: BTreeMap<String, String>,
    mut results: Vec<CheckResult>,
) -> Outcome {
    families::canonical_sort(&mut results);
    let config = ConfigEcho {
        command: command.into(),
        family: family.into(),
        params,
    };
    let mut r = Report::new(config, results);
    if cli.timestamp {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        r.timestamp = Some(secs.to_string());
    }
    Outcome {
        bytes: emit_report(&r, cli.format),
        exit_code: r.exit_code(),
        report: Some(r),
    }
}

/// One line per registered family: name, kind, statement and default range.
pub fn list_families() -> String {
    let mut out = String::new();
    for f in families::registry() {
        out.push_str(&format!(
            "{:<12} → [{}] {} ({})\n",
            f.name,
            f.kind.as_str(),
            f.statement,
            f.range
        ));
    }
    out
}

#[derive(Serialize)]
struct SequenceDump<'a> {
    version: &'a str,
    sequence: &'a str,
    values: Vec<String>,
}

pub fn emit_sequence(name: SeqName, max: u64, format: Format) -> Vec<u8> {
    use rayon::prelude::*;
    let values: Vec<String> = (0..=max)
        .into_par_iter()
        .map(|n| name.term(n).to_string())
        .collect();
    match format {
        Format::Text => values
            .iter()
            .enumerate()
            .map(|(n, v)| format!("{n} {v}\n"))
            .collect::<String>()
            .into_bytes(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "value"]).expect("in-memory write");
            for (n, v) in values.iter().enumerate() {
                w.write_record([n.to_string().as_str(), v])
                    .expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
        Format::Json => {
            let dump = SequenceDump {
                version: env!("CARGO_PKG_VERSION"),
                sequence: name.label(),
                values,
            };
            let mut out = serde_json::to_vec_pretty(&dump).expect("serializes");
            out.push(b'\n');
            out
        }
    }
}

#[derive(Serialize)]
struct PolyDump<'a> {
    version: &'a str,
    poly: &'a str,
    n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    coefficients: Vec<String>,
}

pub fn emit_poly(
    name: PolyName,
    n: u64,
    m: Option<u32>,
    format: Format,
) -> Result<Vec<u8>, CliError> {
    let (poly, label, m): (IntPolynomial, &str, Option<u32>) = match name {
        PolyName::R => (sequences::r_poly(n), "R", None),
        PolyName::S => (sequences::s_poly(n), "S", None),
        PolyName::Sm => {
            let m = m.ok_or_else(|| CliError::Usage("poly Sm needs --m".into()))?;
            if m == 0 {
                return Err(CliError::Usage("--m must be positive".into()));
            }
            (sequences::s_m_poly(m, n), "Sm", Some(m))
        }
    };
    let coefficients: Vec<String> = poly.coeffs().iter().map(BigInt::to_string).collect();
    Ok(match format {
        Format::Text => format!("[{}]\n", coefficients.join(",")).into_bytes(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["degree", "coefficient"])
                .expect("in-memory write");
            for (i, c) in coefficients.iter().enumerate() {
                w.write_record([i.to_string().as_str(), c])
                    .expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
        Format::Json => {
            let dump = PolyDump {
                version: env!("CARGO_PKG_VERSION"),
                poly: label,
                n,
                m,
                coefficients,
            };
            let mut out = serde_json::to_vec_pretty(&dump).expect("serializes");
            out.push(b'\n');
            out
        }
    })
}

/// Writes the outcome to `--out` or standard output.
pub fn write_outcome(cli: &Cli, outcome: &Outcome) -> Result<(), CliError> {
    use std::io::Write;
    match &cli.out {
        Some(path) => std::fs::write(path, &outcome.bytes).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(&outcome.bytes)
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}
