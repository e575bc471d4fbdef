//! `farey` — exact Farey-sequence arithmetic on the command line:
//! sequence listings, rank lookups, closest-fraction queries, the
//! iteration benchmark, and the contour approximation/shape pipeline.

mod cache;
mod io;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use farey::bench::bench_iterations;
use farey::descriptor::descriptor_of;
use farey::geometry::{approximate_polygon, trace_boundary, ApproxConfig, DigitalContour};
use farey::search::{
    bracket_range, closest_binary, closest_bruteforce, closest_regula_falsi, SearchKey,
};
use farey::{Error, FareySequence, Ratio};

#[derive(Parser)]
#[command(name = "farey", version, about = "Exact Farey-sequence toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List F_n as rank, numerator, denominator rows
    Seq {
        #[arg(long)]
        order: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank of a fraction (reduced or not) in F_n
    Rank {
        #[arg(long)]
        order: u64,
        /// Fraction as p/q
        #[arg(long)]
        frac: String,
        /// Rebuild the rank table even if a cached one exists
        #[arg(long)]
        no_cache: bool,
    },
    /// Closest member of F_n to a proper fraction
    Closest {
        #[arg(long)]
        order: u64,
        /// Fraction as p/q
        #[arg(long)]
        frac: String,
        #[arg(long, value_enum, default_value_t = Algo::Regula)]
        algo: Algo,
        /// Also print rank, iteration count, and the rank bracket
        #[arg(long)]
        stats: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        no_cache: bool,
    },
    /// Iteration-count benchmark of both search algorithms, as CSV
    Bench {
        /// Single order N or range A..B:STEP
        #[arg(long)]
        orders: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Polygonal approximation of a contour or PBM bitmap
    Approx {
        #[arg(long)]
        order: u64,
        /// Contour JSON or plain PBM (P1) file
        #[arg(long)]
        input: PathBuf,
        /// Merge threshold on cyclic direction-index differences
        #[arg(long, default_value_t = 0)]
        delta_f: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Shape descriptor of a silhouette: bitmap -> contour -> polygon
    /// -> per-vertex direction-index turns, as JSON
    Shape {
        #[arg(long)]
        order: u64,
        /// Contour JSON or plain PBM (P1) file
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        delta_f: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the structural invariants of the rank table T_n
    Check {
        #[arg(long)]
        order: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Binary,
    Regula,
    Brute,
}

/// Failures grouped by exit code: 2 usage, 3 input/output files,
/// 4 domain (object missing, fraction outside the table, ...).
enum CliError {
    Usage(String),
    Input(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Domain(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::InvalidOrder(_)
            | Error::InvalidDenominator
            | Error::ImproperFraction { .. }
            | Error::InvalidArgument(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn parse_frac(s: &str) -> Result<(u64, u64), CliError> {
    let (p, q) = s
        .split_once('/')
        .ok_or_else(|| CliError::Usage(format!("fraction must be p/q, got {s:?}")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|e| CliError::Usage(format!("bad fraction {s:?}: {e}")))
    };
    Ok((parse(p)?, parse(q)?))
}

/// `N` or `A..B:STEP` (inclusive ends).
fn parse_orders(spec: &str) -> Result<Vec<u64>, CliError> {
    let bad = || CliError::Usage(format!("orders must be N or A..B:STEP, got {spec:?}"));
    if let Ok(n) = spec.parse::<u64>() {
        return Ok(vec![n]);
    }
    let (range, step) = spec.split_once(':').ok_or_else(bad)?;
    let (a, b) = range.split_once("..").ok_or_else(bad)?;
    let a: u64 = a.parse().map_err(|_| bad())?;
    let b: u64 = b.parse().map_err(|_| bad())?;
    let step: u64 = step.parse().map_err(|_| bad())?;
    if step == 0 || b < a {
        return Err(bad());
    }
    Ok((a..=b).step_by(step as usize).collect())
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_contour(path: &PathBuf) -> Result<DigitalContour, CliError> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    match io::parse_input(&bytes).map_err(CliError::Input)? {
        io::Input::Contour(contour) => Ok(contour),
        io::Input::Bitmap(bitmap) => Ok(trace_boundary(&bitmap)?),
    }
}

fn ratio_str(r: Ratio) -> String {
    format!("{}/{}", r.num(), r.den())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Seq { order, format, out } => {
            let seq = FareySequence::generate(order)?;
            let content = match format {
                Format::Text => seq
                    .fractions()
                    .iter()
                    .enumerate()
                    .map(|(i, f)| format!("{} {}\n", i + 1, f))
                    .collect::<String>(),
                Format::Csv => seq
                    .fractions()
                    .iter()
                    .enumerate()
                    .map(|(i, f)| format!("{},{},{}\n", i + 1, f.num(), f.den()))
                    .collect::<String>(),
                Format::Json => {
                    #[derive(Serialize)]
                    struct SeqFile {
                        order: u64,
                        f_max: u64,
                        /// [rank, numerator, denominator] triples
                        entries: Vec<(u64, u64, u64)>,
                    }
                    let entries = seq
                        .fractions()
                        .iter()
                        .enumerate()
                        .map(|(i, f)| (i as u64 + 1, f.num(), f.den()))
                        .collect();
                    let file = SeqFile {
                        order,
                        f_max: seq.f_max(),
                        entries,
                    };
                    serde_json::to_string_pretty(&file).unwrap() + "\n"
                }
                Format::Svg => {
                    return Err(CliError::Usage("seq supports text, csv, json".into()))
                }
            };
            emit(&out, &content)
        }

        Command::Rank {
            order,
            frac,
            no_cache,
        } => {
            let (p, q) = parse_frac(&frac)?;
            let table = cache::load_or_build(order, no_cache)?;
            println!("{}", table.rank_of(p, q)?);
            Ok(())
        }

        Command::Closest {
            order,
            frac,
            algo,
            stats,
            format,
            no_cache,
        } => {
            let (p, q) = parse_frac(&frac)?;
            let key = SearchKey::new(p, q)?;
            let seq = FareySequence::generate(order)?;
            let table = cache::load_or_build(order, no_cache)?;
            let result = match algo {
                Algo::Binary => closest_binary(&seq, &table, key),
                Algo::Regula => closest_regula_falsi(&seq, &table, key),
                Algo::Brute => closest_bruteforce(&seq, key),
            };
            let (bracket, _, _) = bracket_range(&table, key);
            match format {
                Format::Text => {
                    println!("{}", result.closest);
                    if stats {
                        println!("algorithm: {}", result.algorithm.name());
                        println!("rank: {}", result.rank);
                        println!("iterations: {}", result.iterations);
                        println!("bracket: [{}, {}]", bracket.f1, bracket.f2);
                    }
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct ClosestFile {
                        closest: String,
                        rank: u64,
                        algorithm: &'static str,
                        iterations: u32,
                        bracket: (u64, u64),
                    }
                    let file = ClosestFile {
                        closest: result.closest.to_string(),
                        rank: result.rank,
                        algorithm: result.algorithm.name(),
                        iterations: result.iterations,
                        bracket: (bracket.f1, bracket.f2),
                    };
                    println!("{}", serde_json::to_string_pretty(&file).unwrap());
                }
                _ => return Err(CliError::Usage("closest supports text, json".into())),
            }
            Ok(())
        }

        Command::Bench {
            orders,
            trials,
            seed,
            out,
        } => {
            let orders = parse_orders(&orders)?;
            let stats = bench_iterations(&orders, trials, seed)?;
            let mut csv = String::from(
                "# keys per trial: q uniform in [n+1, 100n], p uniform in [0, q], \
                 independent substream per (seed, order, trial)\n\
                 order,algo,trials,mean_iters,min_iters,max_iters,agreement\n",
            );
            for s in &stats {
                for (algo, a) in [("binary", s.binary), ("regula", s.regula)] {
                    let mean = a.mean_milli(s.trials);
                    csv.push_str(&format!(
                        "{},{},{},{}.{:03},{},{},{}\n",
                        s.order,
                        algo,
                        s.trials,
                        mean / 1000,
                        mean % 1000,
                        a.min_iters,
                        a.max_iters,
                        a.agreement,
                    ));
                }
            }
            emit(&out, &csv)
        }

        Command::Approx {
            order,
            input,
            delta_f,
            format,
            out,
        } => {
            let contour = load_contour(&input)?;
            let dt = farey::DirectionTable::new(order)?;
            let cfg = ApproxConfig { order, delta_f };
            let (polygon, metrics) = approximate_polygon(&dt, &contour, cfg)?;
            let content = match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Metrics {
                        vertex_count: u64,
                        compression_ratio: String,
                        max_deviation_sq: String,
                    }
                    #[derive(Serialize)]
                    struct PolygonFile {
                        closed: bool,
                        points: Vec<(i64, i64)>,
                        metrics: Metrics,
                    }
                    let file = PolygonFile {
                        closed: polygon.closed,
                        points: polygon.vertices.iter().map(|v| (v.x, v.y)).collect(),
                        metrics: Metrics {
                            vertex_count: metrics.vertex_count,
                            compression_ratio: ratio_str(metrics.compression_ratio),
                            max_deviation_sq: ratio_str(metrics.max_deviation_sq),
                        },
                    };
                    serde_json::to_string_pretty(&file).unwrap() + "\n"
                }
                Format::Svg => io::render_svg(&contour, &polygon),
                _ => return Err(CliError::Usage("approx supports json, svg".into())),
            };
            emit(&out, &content)
        }

        Command::Shape {
            order,
            input,
            delta_f,
            out,
        } => {
            let contour = load_contour(&input)?;
            let dt = farey::DirectionTable::new(order)?;
            let cfg = ApproxConfig { order, delta_f };
            let (polygon, _) = approximate_polygon(&dt, &contour, cfg)?;
            let descriptor = descriptor_of(&dt, &polygon)?;
            #[derive(Serialize)]
            struct DescriptorFile {
                order: u64,
                d_total: u64,
                entries: Vec<u64>,
            }
            let file = DescriptorFile {
                order: descriptor.order,
                d_total: descriptor.d_total,
                entries: descriptor.entries,
            };
            emit(&out, &(serde_json::to_string_pretty(&file).unwrap() + "\n"))
        }

        Command::Check { order } => {
            let table = cache::load_or_build(order, true)?;
            let report = table.check_properties();
            println!("order {order}, f_max {}", table.f_max());
            println!("rank-sum symmetry: {}", verdict(report.rank_sum));
            println!("row monotonicity: {}", verdict(report.row_monotone));
            println!("column monotonicity: {}", verdict(report.column_monotone));
            println!("column palindrome: {}", verdict(report.column_palindrome));
            if report.all_hold() {
                Ok(())
            } else {
                Err(CliError::Domain(format!(
                    "{} violation(s): {:?}",
                    report.violations.len(),
                    report.violations
                )))
            }
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "VIOLATED"
    }
}
