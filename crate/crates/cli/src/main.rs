//! Command-line surface for the conformal blocks / GIT cone computations.
//!
//! Every report is deterministic for fixed inputs, independent of the thread
//! count. Rationals are read and written as exact `p/q` strings; there is no
//! decimal output mode.
//!
//! Exit codes: 0 success, 2 invalid input, 3 unsupported size, 4 unwritable
//! output path.

use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use cbcones::cones::{cb_cone, git_cone, symmetric_report};
use cbcones::divisors::{
    cb_fcurve_degree, check_scaling_identity, gale, git_fcurve_degree, special_lambda_class,
    LambdaKind, Linearization, WeightData,
};
use cbcones::error::Error;
use cbcones::fcurves::{enumerate_fcurves, FCurvePartition};
use cbcones::polyhedra::chamber_vertices;
use cbcones::rational::{parse_rational, Rational};
use cbcones::report::{
    to_canonical_json, ConeReportDoc, DivisorClassDoc, LinearizationDoc, ScalingCheckDoc,
    SymmetricReportDoc, TableauxDoc, VerticesDoc,
};
use cbcones::tableaux::{degree_bruteforce, degree_closedform, enumerate_tableaux};

const EXIT_OK: i32 = 0;
const EXIT_INVALID: i32 = 2;
const EXIT_UNSUPPORTED: i32 = 3;
const EXIT_WRITE: i32 = 4;

#[derive(Parser)]
#[command(
    name = "cbcones",
    version,
    about = "Exact conformal blocks divisor classes and GIT cones on the moduli of stable pointed rational curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the report to this path instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Report format; csv applies to class vectors and vertex lists
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker thread count (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the F-curve partitions of {1,…,n} in canonical order
    Fcurves {
        #[arg(long)]
        n: usize,
    },
    /// Conformal blocks divisor class of (m, weights)
    CbClass {
        #[arg(long)]
        m: i64,
        /// Comma-separated integer weights, e.g. 1,1,1,1,1,1
        #[arg(long)]
        weights: String,
    },
    /// GIT polarization class of a linearization in Δ(d+1,n)
    GitClass {
        #[arg(long)]
        d: i64,
        /// Comma-separated rationals, e.g. 1/2,1/2,1/2,1/2
        #[arg(long)]
        linearization: String,
    },
    /// Degree of one divisor on one F-curve
    Degree {
        /// Blocks separated by '|', indices by ',', e.g. 1,2,3|4|5|6
        #[arg(long)]
        partition: String,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        linearization: Option<String>,
    },
    /// Check the scaling identity between (m, c) and (km, kc)
    Identity {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        weights: String,
        #[arg(long)]
        k: i64,
    },
    /// Gale-transform a linearization
    Gale {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        linearization: String,
    },
    /// Enumerate tableaux for an integer content, or compare the two degree
    /// oracles at a rational point of Δ(2,4)
    Tableaux {
        /// Four comma-separated nonnegative integers
        #[arg(long, conflicts_with = "y")]
        content: Option<String>,
        /// Four comma-separated rationals summing to 2
        #[arg(long)]
        y: Option<String>,
    },
    /// Vertices of the GIT chamber decomposition of Δ(d+1,n)
    Vertices {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: usize,
    },
    /// The degree-d GIT cone on n points
    GitCone {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: usize,
    },
    /// The cone spanned by all level-one type A conformal blocks classes
    CbCone {
        #[arg(long)]
        n: usize,
    },
    /// Census of symmetric conformal blocks rays
    Symmetric {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m_max: i64,
    },
    /// Hodge class pullback for the hyperelliptic or cyclic trigonal locus
    Lambda {
        /// hyperelliptic | trigonal
        #[arg(long)]
        kind: String,
        #[arg(long)]
        g: i64,
    },
}

/// A computed report, tagged with whether it has a tabular (csv) form.
enum Report {
    Json(serde_json::Value),
    Class(DivisorClassDoc),
    Vertices(VerticesDoc),
}

fn parse_weights(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("--weights: cannot parse integer {t:?}")))
        })
        .collect()
}

fn parse_linearization(d: i64, s: &str) -> Result<Linearization, Error> {
    let x: Result<Vec<Rational>, Error> = s.split(',').map(parse_rational).collect();
    Linearization::new(d, x.map_err(|e| Error::InvalidInput(format!("--linearization: {e}")))?)
}

fn parse_partition(s: &str) -> Result<FCurvePartition, Error> {
    let blocks: Vec<Vec<usize>> = s
        .split('|')
        .map(|b| {
            b.split(',')
                .map(|t| {
                    t.trim().parse::<usize>().map_err(|_| {
                        Error::InvalidInput(format!("--partition: cannot parse index {t:?}"))
                    })
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let blocks: [Vec<usize>; 4] = blocks.try_into().map_err(|v: Vec<Vec<usize>>| {
        Error::InvalidInput(format!("--partition: need exactly 4 blocks, got {}", v.len()))
    })?;
    let n = blocks.iter().map(|b| b.len()).sum();
    FCurvePartition::new(n, blocks)
}

fn parse_four_rationals(opt_name: &str, s: &str) -> Result<[Rational; 4], Error> {
    let v: Result<Vec<Rational>, Error> = s.split(',').map(parse_rational).collect();
    let v = v.map_err(|e| Error::InvalidInput(format!("{opt_name}: {e}")))?;
    v.try_into()
        .map_err(|_| Error::InvalidInput(format!("{opt_name}: need exactly 4 entries")))
}

fn json<T: serde::Serialize>(value: &T) -> Result<Report, Error> {
    let v = serde_json::to_value(value)
        .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
    Ok(Report::Json(v))
}

fn dispatch(command: &Command) -> Result<Report, Error> {
    match command {
        Command::Fcurves { n } => json(&enumerate_fcurves(*n)?),
        Command::CbClass { m, weights } => {
            let w = WeightData::new(*m, parse_weights(weights)?)?;
            let cls = cbcones::divisors::cb_class(&w);
            Ok(Report::Class(DivisorClassDoc::from_class(&cls)?))
        }
        Command::GitClass { d, linearization } => {
            let l = parse_linearization(*d, linearization)?;
            let cls = cbcones::divisors::git_class(&l);
            Ok(Report::Class(DivisorClassDoc::from_class(&cls)?))
        }
        Command::Degree {
            partition,
            m,
            weights,
            d,
            linearization,
        } => {
            let p = parse_partition(partition)?;
            match (m, weights, d, linearization) {
                (Some(m), Some(weights), None, None) => {
                    let w = WeightData::new(*m, parse_weights(weights)?)?;
                    let deg = cb_fcurve_degree(&w, &p)?;
                    json(&serde_json::json!({
                        "fcurve": p,
                        "cb_degree": deg.to_string(),
                    }))
                }
                (None, None, Some(d), Some(linearization)) => {
                    let l = parse_linearization(*d, linearization)?;
                    let deg = git_fcurve_degree(&l, &p)?;
                    json(&serde_json::json!({
                        "fcurve": p,
                        "git_degree": deg.to_string(),
                    }))
                }
                _ => Err(Error::InvalidInput(
                    "degree needs either --m with --weights or --d with --linearization".to_string(),
                )),
            }
        }
        Command::Identity { m, weights, k } => {
            let w = WeightData::new(*m, parse_weights(weights)?)?;
            let check = check_scaling_identity(&w, *k)?;
            json(&ScalingCheckDoc::from_check(&check))
        }
        Command::Gale { d, linearization } => {
            let l = parse_linearization(*d, linearization)?;
            json(&LinearizationDoc::from_linearization(&gale(&l)?))
        }
        Command::Tableaux { content, y } => match (content, y) {
            (Some(content), None) => {
                let parts = parse_weights(content)?;
                let content: [i64; 4] = parts.try_into().map_err(|_| {
                    Error::InvalidInput("--content: need exactly 4 entries".to_string())
                })?;
                let ts = enumerate_tableaux(content)?;
                json(&TableauxDoc::new(content, &ts))
            }
            (None, Some(y)) => {
                let y = parse_four_rationals("--y", y)?;
                json(&serde_json::json!({
                    "y": y.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                    "degree_bruteforce": degree_bruteforce(&y)?.to_string(),
                    "degree_closedform": degree_closedform(&y)?.to_string(),
                }))
            }
            _ => Err(Error::InvalidInput(
                "tableaux needs exactly one of --content or --y".to_string(),
            )),
        },
        Command::Vertices { d, n } => {
            let verts = chamber_vertices(*d, *n)?;
            Ok(Report::Vertices(VerticesDoc::new(*d, *n, &verts)))
        }
        Command::GitCone { d, n } => json(&ConeReportDoc::from_report(&git_cone(*d, *n)?)),
        Command::CbCone { n } => json(&ConeReportDoc::from_report(&cb_cone(*n)?)),
        Command::Symmetric { n, m_max } => {
            json(&SymmetricReportDoc::from_report(&symmetric_report(*n, *m_max)?))
        }
        Command::Lambda { kind, g } => {
            let kind: LambdaKind = kind.parse()?;
            let cls = special_lambda_class(kind, *g)?;
            Ok(Report::Class(DivisorClassDoc::from_class(&cls)?))
        }
    }
}

fn render_csv(report: &Report) -> Result<Vec<u8>, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Error::InvalidInput(format!("csv encoding failed: {e}"));
    match report {
        Report::Class(doc) => {
            w.write_record(["fcurve", "value"]).map_err(io_err)?;
            for (p, v) in doc.fcurves.iter().zip(&doc.values) {
                let key = serde_json::to_string(p)
                    .map_err(|e| Error::InvalidInput(format!("csv encoding failed: {e}")))?;
                w.write_record([key.as_str(), v.as_str()]).map_err(io_err)?;
            }
        }
        Report::Vertices(doc) => {
            let header: Vec<String> = (1..=doc.n).map(|i| format!("x{i}")).collect();
            w.write_record(&header).map_err(io_err)?;
            for v in &doc.vertices {
                w.write_record(v).map_err(io_err)?;
            }
        }
        Report::Json(_) => {
            return Err(Error::InvalidInput(
                "--format csv applies only to class vectors and vertex lists".to_string(),
            ))
        }
    }
    w.into_inner()
        .map_err(|e| Error::InvalidInput(format!("csv encoding failed: {e}")))
}

fn render(report: &Report, format: Format) -> Result<Vec<u8>, Error> {
    match format {
        Format::Json => {
            let text = match report {
                Report::Json(v) => to_canonical_json(v)?,
                Report::Class(doc) => to_canonical_json(doc)?,
                Report::Vertices(doc) => to_canonical_json(doc)?,
            };
            Ok(format!("{text}\n").into_bytes())
        }
        Format::Csv => render_csv(report),
    }
}

fn run(cli: &Cli) -> i32 {
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return EXIT_INVALID;
        }
        // ignore the error if a pool already exists; output never depends on it
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let report = match dispatch(&cli.command) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::UnsupportedSize(_) => EXIT_UNSUPPORTED,
                _ => EXIT_INVALID,
            };
        }
    };
    let bytes = match render(&report, cli.format) {
        Ok(bytes) => bytes,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &bytes).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(&bytes)
            .map_err(|e| format!("stdout: {e}")),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(msg) => {
            eprintln!("error: cannot write report: {msg}");
            EXIT_WRITE
        }
    }
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(&cli));
}
