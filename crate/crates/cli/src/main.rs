//! `mwi` — verify, convert and search 3-restricted min-wise independent
//! families.
//!
//! Exit codes: 0 for success (verification passed, witness found), 1 for a
//! definitive negative answer (verification failed, conversion hit a
//! non-permutation, search exhausted), 2 for usage, parse and I/O errors.

use std::fmt::Write as _;
use std::fs;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use mwi_core::search::{self, CertificateKind};
use mwi_core::{text, vector, PermFamily, VectorFamily};

#[derive(Parser)]
#[command(name = "mwi", version, about = "3-restricted min-wise independence toolkit")]
struct Cli {
    /// Mirror the report as a JSON object with the same field names.
    #[arg(long, global = true)]
    json: bool,

    /// Omit timing fields, making outputs byte-comparable across runs.
    #[arg(long, global = true)]
    no_timing: bool,

    /// Worker threads for exhaustive searches (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a family file against the 3-mwi criteria.
    Verify {
        path: PathBuf,
        /// Which kind of family the file holds.
        #[arg(long, value_enum)]
        side: Side,
        /// Which criterion to run (permutation side only).
        #[arg(long, value_enum, default_value_t = Definition::Auto)]
        definition: Definition,
    },
    /// Convert between the permutation and vector representations.
    Convert {
        path: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Output file for the converted family.
        #[arg(long)]
        out: PathBuf,
    },
    /// Search for 3-mwi vector families of size m on [n]; writes a
    /// certificate of the witness found or of exhaustion.
    Search {
        m: usize,
        n: usize,
        /// Stop after this many witnesses; 0 traverses the whole tree.
        #[arg(long, default_value_t = 1)]
        limit: u64,
        /// Output file for the certificate.
        #[arg(long)]
        out: PathBuf,
    },
    /// Find the largest ground-set order admitting a family of size m;
    /// writes the witness and exhaustion certificates.
    MaxN {
        m: usize,
        /// Output path stem; `<out>.witness` and `<out>.exhausted` are written.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Perms,
    Vectors,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Definition {
    Min,
    Triple,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    ToVectors,
    ToPerms,
}

/// Ordered key/value report, rendered as `key = value` lines or as a JSON
/// object with identical field names.
struct Report {
    fields: Vec<(&'static str, Value)>,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Report {
            fields: vec![("command", Value::String(command.to_string()))],
        }
    }

    fn push(&mut self, key: &'static str, value: impl Into<Value>) {
        self.fields.push((key, value.into()));
    }

    fn push_list(&mut self, key: &'static str, items: Vec<String>) {
        if !items.is_empty() {
            self.fields
                .push((key, Value::Array(items.into_iter().map(Value::String).collect())));
        }
    }

    fn render(mut self, cli: &Cli, started: Instant) -> String {
        if !cli.no_timing {
            let elapsed = format!("{:.3}", started.elapsed().as_secs_f64() * 1000.0);
            self.push("elapsed_ms", elapsed);
        }
        if cli.json {
            let map: Map<String, Value> = self
                .fields
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect();
            let mut out = serde_json::to_string(&Value::Object(map)).unwrap();
            out.push('\n');
            return out;
        }
        let mut out = String::new();
        for (key, value) in &self.fields {
            match value {
                Value::Array(items) => {
                    for item in items {
                        writeln!(out, "{key} = {}", scalar(item)).unwrap();
                    }
                }
                other => writeln!(out, "{key} = {}", scalar(other)).unwrap(),
            }
        }
        out
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // Sets the global pool once, before any parallel work.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let started = Instant::now();
    match run(&cli, started) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, started: Instant) -> Result<ExitCode, String> {
    let (report, code) = match &cli.command {
        Command::Verify {
            path,
            side,
            definition,
        } => cmd_verify(path, *side, *definition)?,
        Command::Convert {
            path,
            direction,
            out,
        } => cmd_convert(path, *direction, out)?,
        Command::Search { m, n, limit, out } => cmd_search(*m, *n, *limit, out)?,
        Command::MaxN { m, out } => cmd_max_n(*m, out)?,
    };
    print!("{}", report.render(cli, started));
    Ok(code)
}

fn read_input(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_output(path: &Path, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_perms_side(path: &Path, input: &str) -> Result<PermFamily, String> {
    text::parse_perm_family(input).map_err(|e| {
        if text::parse_vector_family(input).is_ok() {
            format!(
                "{}: file holds a vector family, not permutations (try --side vectors)",
                path.display()
            )
        } else {
            format!("{}: {e}", path.display())
        }
    })
}

fn parse_vectors_side(path: &Path, input: &str) -> Result<VectorFamily, String> {
    text::parse_vector_family(input).map_err(|e| {
        if text::parse_perm_family(input).is_ok() {
            format!(
                "{}: file holds a permutation family, not vectors (try --side perms)",
                path.display()
            )
        } else {
            format!("{}: {e}", path.display())
        }
    })
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn cmd_verify(
    path: &Path,
    side: Side,
    definition: Definition,
) -> Result<(Report, ExitCode), String> {
    let input = read_input(path)?;
    let mut report = Report::new("verify");
    report.push("input", path.display().to_string());

    let mut violations: Vec<String> = Vec::new();
    let all_pass = match side {
        Side::Perms => {
            let family = parse_perms_side(path, &input)?;
            report.push("side", "perms");
            report.push("definition", definition_name(definition));
            report.push("n", family.n());
            report.push("m", family.m());
            report.push("duplicates", family.has_duplicates());

            if definition == Definition::Triple && family.n() < 3 {
                return Err(format!(
                    "the triple criterion needs n >= 3 (family has n={}); use --definition min",
                    family.n()
                ));
            }
            let mut all = true;
            if matches!(definition, Definition::Min | Definition::Auto) {
                let verdict = family.is_3mwi_min_def();
                report.push("check_min_def", pass_fail(verdict.holds()));
                if let Some(v) = verdict.violation() {
                    violations.push(format!("min-def: {v}"));
                    all = false;
                }
            }
            if definition == Definition::Triple
                || (definition == Definition::Auto && family.n() >= 3)
            {
                let verdict = family
                    .is_3mwi_triple_def()
                    .expect("n >= 3 checked above");
                report.push("check_triple_def", pass_fail(verdict.holds()));
                if let Some(v) = verdict.violation() {
                    violations.push(format!("triple-def: {v}"));
                    all = false;
                }
            }
            all
        }
        Side::Vectors => {
            if definition != Definition::Auto {
                return Err(
                    "--definition selects a permutation-side criterion; vector families have a \
                     single check (omit the flag)"
                        .to_string(),
                );
            }
            let family = parse_vectors_side(path, &input)?;
            report.push("side", "vectors");
            report.push("n", family.n());
            report.push("m", family.m());
            let verdict = family.is_3mwi();
            report.push("check_vector_identities", pass_fail(verdict.holds()));
            if let Some(v) = verdict.violation() {
                violations.push(format!("vector-identities: {v}"));
            }
            verdict.holds()
        }
    };

    report.push_list("violations", violations);
    report.push("verdict", pass_fail(all_pass));
    let code = if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) };
    Ok((report, code))
}

fn definition_name(definition: Definition) -> &'static str {
    match definition {
        Definition::Min => "min",
        Definition::Triple => "triple",
        Definition::Auto => "auto",
    }
}

fn cmd_convert(
    path: &Path,
    direction: Direction,
    out: &Path,
) -> Result<(Report, ExitCode), String> {
    let input = read_input(path)?;
    let mut report = Report::new("convert");
    report.push("input", path.display().to_string());

    match direction {
        Direction::ToVectors => {
            let family = parse_perms_side(path, &input)?;
            if family.m() > vector::MAX_LEN {
                return Err(format!(
                    "family has m={} members; the vector representation supports m <= {}",
                    family.m(),
                    vector::MAX_LEN
                ));
            }
            let vectors = family
                .to_vectors()
                .map_err(|e| format!("{}: {e}", path.display()))?;
            write_output(out, &text::format_vector_family(&vectors))?;
            report.push("direction", "to-vectors");
            report.push("out", out.display().to_string());
            report.push("n", vectors.n());
            report.push("m", vectors.m());
            report.push("status", "ok");
            Ok((report, ExitCode::SUCCESS))
        }
        Direction::ToPerms => {
            let vectors = parse_vectors_side(path, &input)?;
            report.push("direction", "to-perms");
            report.push("n", vectors.n());
            report.push("m", vectors.m());
            match vectors.to_perms() {
                Ok(family) => {
                    write_output(out, &text::format_perm_family(&family))?;
                    report.push("out", out.display().to_string());
                    report.push("status", "ok");
                    Ok((report, ExitCode::SUCCESS))
                }
                Err(e) => {
                    report.push("status", "not-a-permutation");
                    report.push("error", e.to_string());
                    Ok((report, ExitCode::from(1)))
                }
            }
        }
    }
}

fn cmd_search(m: usize, n: usize, limit: u64, out: &Path) -> Result<(Report, ExitCode), String> {
    let limit = usize::try_from(limit).ok().and_then(NonZeroUsize::new);
    let certificate = search::search_families(m, n, limit).map_err(|e| e.to_string())?;
    write_output(out, &text::format_certificate(&certificate))?;

    let mut report = Report::new("search");
    report.push("m", m);
    report.push("n", n);
    match limit {
        Some(limit) => report.push("limit", limit.get()),
        None => report.push("limit", "all"),
    }
    report.push("out", out.display().to_string());
    report.push("kind", certificate.kind.to_string());
    report.push("nodes_explored", certificate.nodes_explored);
    report.push("witnesses", certificate.witnesses.len());
    let code = match certificate.kind {
        CertificateKind::Witness => ExitCode::SUCCESS,
        CertificateKind::Exhausted => ExitCode::from(1),
    };
    Ok((report, code))
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut os = path.as_os_str().to_os_string();
    os.push(suffix);
    PathBuf::from(os)
}

fn cmd_max_n(m: usize, out: &Path) -> Result<(Report, ExitCode), String> {
    let result = search::max_order(m).map_err(|e| e.to_string())?;
    let witness_out = with_suffix(out, ".witness");
    let exhausted_out = with_suffix(out, ".exhausted");
    write_output(
        &witness_out,
        &text::format_certificate(result.witness_certificate()),
    )?;
    write_output(
        &exhausted_out,
        &text::format_certificate(result.exhaustion_certificate()),
    )?;

    let mut report = Report::new("max-n");
    report.push("m", m);
    report.push("n_max", result.n_max);
    report.push(
        "nodes_explored",
        result
            .certificates
            .iter()
            .map(|c| c.nodes_explored)
            .sum::<u64>(),
    );
    report.push("witness_out", witness_out.display().to_string());
    report.push("exhausted_out", exhausted_out.display().to_string());
    Ok((report, ExitCode::SUCCESS))
}
