//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure, 3 lemma
//! contradiction. `--structured` prints one JSON object per result.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::distinguish::distinguish;
use crate::error::{Error, Result};
use crate::identify::identify;
use crate::mn_eval::{chi, composition_sign, enumerate_bsts};
use crate::oracle::exact_oracle;
use crate::partitions::{compositions_of, partitions_of, Composition, Partition};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_FAILED: u8 = 2;
pub const EXIT_LEMMA: u8 = 3;

/// Largest `n` swept over every composition in `verify`.
const FULL_SWEEP_MAX: usize = 8;
/// Random compositions per partition above the full-sweep range.
const SAMPLES_PER_SHAPE: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "charprobe", version, about = "Identify and separate symmetric-group characters")]
pub struct Cli {
    /// Emit JSON records instead of text.
    #[arg(long, global = true)]
    pub structured: bool,

    /// Seed for randomized composition sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate χ_p at the cycle type t.
    Eval { partition: String, composition: String },
    /// Recover a hidden partition through the exact oracle.
    Identify { partition: String },
    /// Find a cycle type on which two characters differ.
    Distinguish { lambda: String, mu: String },
    /// Run every check over all partitions of n.
    Verify {
        n: usize,
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
    /// Tabulate identify query counts for 1..=n_max.
    Bench {
        n_max: usize,
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::LemmaViolation(_) | Error::PromiseViolated(_) => EXIT_LEMMA,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            if cli.structured {
                let _ = writeln!(out, "{}", json!({ "error": e.to_string() }));
            }
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn emit(out: &mut dyn Write, line: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{line}").map_err(|e| Error::Precondition(format!("write failed: {e}")))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    match &cli.command {
        Command::Eval { partition, composition } => {
            let p: Partition = partition.parse()?;
            let t: Composition = composition.parse()?;
            let v = chi(&p, &t)?;
            if cli.structured {
                emit(out, json!({ "partition": p, "composition": t, "value": v }))?;
            } else {
                emit(out, v)?;
            }
            Ok(EXIT_OK)
        }
        Command::Identify { partition } => {
            let hidden: Partition = partition.parse()?;
            if hidden.is_empty() {
                return Err(Error::EmptyPartition);
            }
            let result = identify(&mut exact_oracle(hidden.clone()), hidden.n())?;
            let ok = result.partition == hidden;
            if cli.structured {
                emit(
                    out,
                    json!({
                        "hidden": hidden,
                        "recovered": result.partition,
                        "match": ok,
                        "queries": result.transcript.count(),
                        "phases": result.phases,
                        "transcript": result.transcript.entries,
                    }),
                )?;
            } else {
                let ph = result.phases;
                emit(out, format_args!("recovered {}", result.partition))?;
                emit(
                    out,
                    format_args!(
                        "queries {} (forward {}, base {}, overhang {}, doppelganger {})",
                        ph.total(),
                        ph.forward,
                        ph.base,
                        ph.overhang,
                        ph.doppelganger
                    ),
                )?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Distinguish { lambda, mu } => {
            let l: Partition = lambda.parse()?;
            let m: Partition = mu.parse()?;
            let s = distinguish(&l, &m)?;
            if cli.structured {
                emit(out, json!({ "lambda": l, "mu": m, "separator": s }))?;
            } else {
                emit(out, format_args!("witness {}", s.witness))?;
                emit(out, format_args!("chi_lambda {}", s.value_lambda))?;
                emit(out, format_args!("chi_mu {}", s.value_mu))?;
                emit(out, format_args!("permutation {}", s.permutation))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { n, cap } => {
            check_size(*n, *cap)?;
            let reports = verify(*n, cli.seed);
            let failed: Vec<&ShapeReport> = reports.iter().filter(|r| !r.passed()).collect();
            if cli.structured {
                emit(
                    out,
                    json!({ "n": n, "partitions": reports.len(), "passed": reports.len() - failed.len(), "failed": failed.len(), "shapes": reports }),
                )?;
            } else {
                for r in &failed {
                    emit(out, format_args!("FAIL {} {}", r.partition, r.failures.join("; ")))?;
                }
                emit(
                    out,
                    format_args!("n={n}: {} of {} partitions pass", reports.len() - failed.len(), reports.len()),
                )?;
            }
            Ok(if failed.iter().any(|r| r.lemma_violation) {
                EXIT_LEMMA
            } else if failed.is_empty() {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Bench { n_max, cap } => {
            check_size(*n_max, *cap)?;
            let rows = bench(*n_max)?;
            if !cli.structured {
                emit(out, "n  p(n)  max  mean  max/n^1.5  n^2")?;
            }
            for row in rows {
                if cli.structured {
                    emit(out, serde_json::to_string(&row).expect("bench rows serialize"))?;
                } else {
                    emit(
                        out,
                        format_args!(
                            "{}  {}  {}  {:.2}  {:.3}  {}",
                            row.n,
                            row.partitions,
                            row.max_queries,
                            row.mean_queries,
                            row.ratio,
                            row.n * row.n
                        ),
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn check_size(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct ShapeReport {
    pub partition: Partition,
    pub queries: usize,
    pub compositions_checked: usize,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub lemma_violation: bool,
}

impl ShapeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn verify_shape(shape: &Partition, index: usize, seed: u64) -> ShapeReport {
    let n = shape.n();
    let mut report = ShapeReport {
        partition: shape.clone(),
        queries: 0,
        compositions_checked: 0,
        failures: Vec::new(),
        lemma_violation: false,
    };
    let note = |report: &mut ShapeReport, e: Error| {
        report.lemma_violation |= matches!(e, Error::LemmaViolation(_) | Error::PromiseViolated(_));
        report.failures.push(e.to_string());
    };

    match identify(&mut exact_oracle(shape.clone()), n) {
        Ok(r) if r.partition == *shape => report.queries = r.transcript.count(),
        Ok(r) => report.failures.push(format!("identify returned {}", r.partition)),
        Err(e) => note(&mut report, e),
    }

    let compositions = if n <= FULL_SWEEP_MAX {
        compositions_of(n)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index as u64));
        (0..SAMPLES_PER_SHAPE).map(|_| Composition::random(n, &mut rng)).collect()
    };
    let conj = shape.conjugate();
    for t in &compositions {
        let (Ok(v), Ok(vc), Ok(sorted)) = (chi(shape, t), chi(&conj, t), chi(shape, &Composition::from(&t.sorted()))) else {
            report.failures.push(format!("evaluation failed at {t}"));
            continue;
        };
        let tableau_sum: i64 = match enumerate_bsts(shape, t) {
            Ok(tilings) => tilings.iter().map(|x| x.sign.value() as i64).sum(),
            Err(e) => {
                note(&mut report, e);
                continue;
            }
        };
        if v != tableau_sum {
            report.failures.push(format!("chi {v} but tableau sum {tableau_sum} at {t}"));
        }
        if v != sorted {
            report.failures.push(format!("reordering {t} changed the value"));
        }
        if vc != v.clone() * composition_sign(t) {
            report.failures.push(format!("conjugate sign check failed at {t}"));
        }
        report.compositions_checked += 1;
    }

    let dop = shape.doppelganger();
    if dop != *shape {
        match distinguish(shape, &dop) {
            Ok(s) => {
                let separated = matches!((chi(shape, &s.witness), chi(&dop, &s.witness)), (Ok(a), Ok(b)) if a != b);
                if !separated {
                    report.failures.push(format!("witness {} does not separate {dop}", s.witness));
                }
            }
            Err(e) => note(&mut report, e),
        }
    }
    report
}

/// Every check for every partition of `n`, in partition order.
pub fn verify(n: usize, seed: u64) -> Vec<ShapeReport> {
    partitions_of(n)
        .par_iter()
        .enumerate()
        .map(|(i, shape)| verify_shape(shape, i, seed))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub partitions: usize,
    pub max_queries: usize,
    pub mean_queries: f64,
    /// `max_queries / n^1.5`.
    pub ratio: f64,
}

pub fn bench(n_max: usize) -> Result<Vec<BenchRow>> {
    (1..=n_max)
        .map(|n| {
            let counts = partitions_of(n)
                .par_iter()
                .map(|shape| identify(&mut exact_oracle(shape.clone()), n).map(|r| r.transcript.count()))
                .collect::<Result<Vec<usize>>>()?;
            let max = counts.iter().copied().max().unwrap_or(0);
            Ok(BenchRow {
                n,
                partitions: counts.len(),
                max_queries: max,
                mean_queries: counts.iter().sum::<usize>() as f64 / counts.len() as f64,
                ratio: max as f64 / (n as f64).powf(1.5),
            })
        })
        .collect()
}
