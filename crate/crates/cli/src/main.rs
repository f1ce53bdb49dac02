//! `wpolarity` — batch commands over the Wiener polarity toolkit.
//!
//! Everything is deterministic: identical inputs produce byte-identical
//! structured output. Exit codes are part of the contract:
//!
//! | code | meaning                                  |
//! |------|------------------------------------------|
//! | 0    | success                                  |
//! | 1    | usage error / enumeration guard exceeded |
//! | 2    | unreadable or malformed input            |
//! | 3    | disconnected input graph                 |
//! | 4    | formula precondition refusal             |
//! | 5    | blueprint not lattice-realizable         |
//! | 6    | verification failure                     |

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wiener_polarity::chem::{self, BuildError, SystemKind};
use wiener_polarity::extremal::{self, ExtremalError, FamilyIndex, DEFAULT_MAX_H};
use wiener_polarity::graph::{self, GraphError};
use wiener_polarity::indices;

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DISCONNECTED: u8 = 3;
const EXIT_PRECONDITION: u8 = 4;
const EXIT_UNREALIZABLE: u8 = 5;
const EXIT_VERIFY_FAILED: u8 = 6;

/// Environment variable overriding the exhaustive enumeration guard.
const GUARD_ENV: &str = "WPOLARITY_MAX_H";

#[derive(Parser)]
#[command(
    name = "wpolarity",
    version,
    about = "Wiener polarity index: compute, build benzenoids/phenylenes, enumerate, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output style: strict key-value blocks or a prose summary.
    #[arg(long, global = true, value_enum, default_value_t = Format::Structured)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Compute index values for a graph given as an edge-list file.
    Compute {
        /// Edge-list file: one `u v` pair per line, `#` comments.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Build a benzenoid or phenylene from a dualist blueprint file.
    Build {
        /// Blueprint file: one `id parent direction` triple per line.
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// List every catafused system with the given hexagon count.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        h: usize,
    },
    /// Exhaustively check the extremal theorems at one hexagon count.
    Verify {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        h: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Benzenoid,
    Phenylene,
}

impl From<Kind> for SystemKind {
    fn from(kind: Kind) -> SystemKind {
        match kind {
            Kind::Benzenoid => SystemKind::Benzenoid,
            Kind::Phenylene => SystemKind::Phenylene,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Structured,
    Text,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version print to stdout and succeed; real usage errors
            // must exit 1 rather than clap's default 2
            let is_usage = err.use_stderr();
            let _ = err.print();
            return if is_usage {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Compute { input, method } => cmd_compute(&input, method, cli.format),
        Command::Build { spec, kind } => cmd_build(&spec, kind.into(), cli.format),
        Command::Enumerate { kind, h } => cmd_enumerate(kind.into(), h),
        Command::Verify { kind, h } => cmd_verify(kind.into(), h),
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))
}

fn graph_failure(err: GraphError) -> Failure {
    let code = match err {
        GraphError::Disconnected { .. } => EXIT_DISCONNECTED,
        _ => EXIT_PARSE,
    };
    Failure::new(code, err.to_string())
}

fn guard_limit() -> Result<usize, Failure> {
    match std::env::var(GUARD_ENV) {
        Ok(raw) => raw.parse().map_err(|_| {
            Failure::new(
                EXIT_USAGE,
                format!("{GUARD_ENV} must be a non-negative integer, got {raw:?}"),
            )
        }),
        Err(_) => Ok(DEFAULT_MAX_H),
    }
}

fn extremal_failure(err: ExtremalError) -> Failure {
    let code = match &err {
        ExtremalError::GuardExceeded { .. } | ExtremalError::InvalidH { .. } => EXIT_USAGE,
        ExtremalError::Unrealizable(_) => EXIT_UNREALIZABLE,
        _ => EXIT_USAGE,
    };
    let mut message = err.to_string();
    if matches!(err, ExtremalError::GuardExceeded { .. }) {
        write!(message, " (set {GUARD_ENV} to raise it)").ok();
    }
    Failure::new(code, message)
}

fn cmd_compute(input: &PathBuf, method: Method, format: Format) -> Result<String, Failure> {
    let text = read_file(input)?;
    let g = graph::parse_edge_list(&text).map_err(graph_failure)?;
    graph::validate_connected(&g).map_err(graph_failure)?;
    let report = indices::full_report(&g).map_err(graph_failure)?;

    if method == Method::Formula && !report.preconditions_pass() {
        return Err(Failure::new(
            EXIT_PRECONDITION,
            format!(
                "formula refused: {}",
                report.preconditions.violation_summary()
            ),
        ));
    }

    let mut out = String::new();
    match format {
        Format::Structured => {
            writeln!(out, "input = {}", input.display()).ok();
            writeln!(out, "vertices = {}", g.vertex_count()).ok();
            writeln!(out, "edges = {}", report.edge_count).ok();
            writeln!(out, "m1 = {}", report.m1).ok();
            writeln!(out, "m2 = {}", report.m2).ok();
            writeln!(out, "p3 = {}", report.p3).ok();
            writeln!(out, "c4 = {}", report.c4).ok();
            writeln!(out, "c5 = {}", report.c5).ok();
            writeln!(out, "c6 = {}", report.c6).ok();
            writeln!(out, "f = {}", report.f).ok();
            writeln!(out, "preconditions_pass = {}", report.preconditions_pass()).ok();
            if method != Method::Oracle {
                match report.wp_formula {
                    Some(wp) => {
                        writeln!(out, "wp_formula = {wp}").ok();
                    }
                    None => {
                        writeln!(out, "wp_formula = absent").ok();
                        writeln!(
                            out,
                            "wp_refusal = {}",
                            report.preconditions.violation_summary()
                        )
                        .ok();
                    }
                }
            }
            if method != Method::Formula {
                writeln!(out, "wp_oracle = {}", report.wp_oracle).ok();
            }
        }
        Format::Text => {
            writeln!(
                out,
                "graph {}: {} vertices, {} edges",
                input.display(),
                g.vertex_count(),
                report.edge_count
            )
            .ok();
            writeln!(
                out,
                "M1 = {}, M2 = {}, p3 = {}",
                report.m1, report.m2, report.p3
            )
            .ok();
            writeln!(
                out,
                "cycles: C4 x {}, C5 x {}, C6 x {}, f = {}",
                report.c4, report.c5, report.c6, report.f
            )
            .ok();
            if report.preconditions_pass() {
                writeln!(out, "preconditions: pass").ok();
            } else {
                writeln!(
                    out,
                    "preconditions: fail ({})",
                    report.preconditions.violation_summary()
                )
                .ok();
            }
            if method != Method::Oracle {
                match report.wp_formula {
                    Some(wp) => writeln!(out, "W_p (formula) = {wp}").ok(),
                    None => writeln!(out, "W_p (formula) withheld").ok(),
                };
            }
            if method != Method::Formula {
                writeln!(out, "W_p (oracle) = {}", report.wp_oracle).ok();
            }
        }
    }
    Ok(out)
}

fn cmd_build(spec_path: &PathBuf, kind: SystemKind, format: Format) -> Result<String, Failure> {
    let text = read_file(spec_path)?;
    let spec =
        chem::parse_spec(&text, kind).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    let sys = chem::build(&spec).map_err(|e| {
        let code = match e {
            BuildError::CellCollision { .. } | BuildError::AccidentalAdjacency { .. } => {
                EXIT_UNREALIZABLE
            }
            _ => EXIT_USAGE,
        };
        Failure::new(code, e.to_string())
    })?;

    let closed = chem::closed_form_report(&sys.profile, kind)
        .expect("built systems satisfy the closed-form preconditions");
    let formula = indices::wiener_polarity_formula(&sys.graph).map_err(|e| {
        Failure::new(
            EXIT_VERIFY_FAILED,
            format!("built system unexpectedly refused the formula: {e}"),
        )
    })?;
    let oracle = indices::wiener_polarity_oracle(&sys.graph)
        .map_err(|e| Failure::new(EXIT_VERIFY_FAILED, e.to_string()))?;
    if closed.wp != formula || formula != oracle {
        return Err(Failure::new(
            EXIT_VERIFY_FAILED,
            format!(
                "index disagreement on built system: closed={} formula={formula} oracle={oracle}",
                closed.wp
            ),
        ));
    }

    let mut out = String::new();
    match format {
        Format::Structured => {
            for line in sys.metadata_lines() {
                writeln!(out, "{line}").ok();
            }
            writeln!(out, "# wp_closed_form = {}", closed.wp).ok();
            writeln!(out, "# wp_formula = {formula}").ok();
            writeln!(out, "# wp_oracle = {oracle}").ok();
            out.push_str(&sys.graph.to_edge_list());
        }
        Format::Text => {
            let p = &sys.profile;
            writeln!(
                out,
                "{} with h = {}: {} vertices, {} edges",
                kind,
                p.h,
                sys.graph.vertex_count(),
                sys.graph.edge_count()
            )
            .ok();
            writeln!(
                out,
                "hexagons: {} terminal, {} branched, {} angular, {} linear; {} segment(s)",
                p.t, p.b, p.a, p.l, p.s
            )
            .ok();
            writeln!(out, "W_p = {} (closed form = formula = oracle)", closed.wp).ok();
        }
    }
    Ok(out)
}

fn cmd_enumerate(kind: SystemKind, h: usize) -> Result<String, Failure> {
    let guard = guard_limit()?;
    let systems =
        extremal::enumerate_catafused_with_limit(h, kind, guard).map_err(extremal_failure)?;
    let families = FamilyIndex::build(h, kind).map_err(extremal_failure)?;

    let mut out = String::new();
    for (i, sys) in systems.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let p = &sys.profile;
        let closed = chem::closed_form_report(p, kind).expect("built profile");
        let spec_line = sys.spec.to_spec_text().trim_end().replace('\n', " ; ");
        let tags = families.tags(&sys.graph);
        let family = if tags.is_empty() {
            "other".to_string()
        } else {
            tags.iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(out, "system = {}", i + 1).ok();
        writeln!(out, "kind = {kind}").ok();
        writeln!(out, "h = {h}").ok();
        writeln!(out, "spec = {spec_line}").ok();
        writeln!(out, "t = {}", p.t).ok();
        writeln!(out, "b = {}", p.b).ok();
        writeln!(out, "a = {}", p.a).ok();
        writeln!(out, "l = {}", p.l).ok();
        writeln!(out, "s = {}", p.s).ok();
        writeln!(out, "vertices = {}", sys.graph.vertex_count()).ok();
        writeln!(out, "edges = {}", sys.graph.edge_count()).ok();
        writeln!(out, "wp = {}", closed.wp).ok();
        writeln!(out, "family = {family}").ok();
    }
    Ok(out)
}

fn cmd_verify(kind: SystemKind, h: usize) -> Result<String, Failure> {
    let guard = guard_limit()?;
    let report = extremal::verify_extremal_with_limit(h, kind, guard).map_err(extremal_failure)?;
    let sweep = extremal::agreement_sweep(h, kind, guard).map_err(extremal_failure)?;

    let mut out = String::new();
    writeln!(out, "kind = {kind}").ok();
    writeln!(out, "h = {h}").ok();
    writeln!(out, "systems = {}", report.system_count).ok();
    writeln!(out, "sweep_pass = {}", sweep.passed()).ok();
    writeln!(out, "min_wp = {}", report.min_value).ok();
    writeln!(out, "min_witness_count = {}", report.min_witnesses.len()).ok();
    writeln!(
        out,
        "min_unique_is_linear = {}",
        report.min_unique_is_linear
    )
    .ok();
    writeln!(out, "max_wp = {}", report.max_value).ok();
    writeln!(out, "max_witness_count = {}", report.max_witnesses.len()).ok();
    writeln!(out, "family_size = {}", report.family_size).ok();
    writeln!(
        out,
        "max_set_equals_family = {}",
        report.max_set_equals_family
    )
    .ok();
    match report.near_max_consistent {
        Some(ok) => writeln!(out, "near_max_consistent = {ok}").ok(),
        None => writeln!(out, "near_max_consistent = n/a").ok(),
    };
    for line in &report.counterexamples {
        writeln!(out, "counterexample = {line}").ok();
    }
    for line in &sweep.mismatches {
        writeln!(out, "mismatch = {line}").ok();
    }
    let passed = report.passed() && sweep.passed();
    writeln!(out, "result = {}", if passed { "PASS" } else { "FAIL" }).ok();

    if passed {
        Ok(out)
    } else {
        // still print the report before signalling failure
        print!("{out}");
        Err(Failure::new(
            EXIT_VERIFY_FAILED,
            format!("verification failed for {kind} h = {h}"),
        ))
    }
}
