//! `rootfan` command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::buildset::building_set;
use crate::graph::{complete_graph, cycle_graph, parse_graph, path_graph, star_graph, EnumerationMode, Graph};
use crate::rootsys::{analyze, CartanMatrix, RootSystemType};
use crate::vector::{format_vector, IntVector};
use crate::verify::{verify_theorem, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "rootfan",
    version,
    about = "Facet vectors of graph associahedra and root-system recognition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the building set B(G)
    BuildingSet(GraphCommand),
    /// Print the facet vectors F(G)
    Facets(GraphCommand),
    /// Compare complement-closure of B(G) with central symmetry of F(G)
    Symmetry(GraphCommand),
    /// Decide whether F(G) is a root system
    Check(GraphCommand),
    /// Print the Dynkin type of F(G)
    Classify(GraphCommand),
    /// Check every connected graph up to a node count
    Verify(VerifyCommand),
}

#[derive(Args, Debug)]
#[group(id = "source", required = true, multiple = false)]
struct GraphSource {
    /// Graph file: node count on the first line, then one edge "u v" per line
    file: Option<PathBuf>,
    /// The cycle C_K
    #[arg(long, value_name = "K")]
    cycle: Option<usize>,
    /// The complete graph K_K
    #[arg(long, value_name = "K")]
    complete: Option<usize>,
    /// The path on K nodes
    #[arg(long, value_name = "K")]
    path: Option<usize>,
    /// The star with K - 1 leaves
    #[arg(long, value_name = "K")]
    star: Option<usize>,
}

#[derive(Args, Debug)]
struct GraphCommand {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyCommand {
    #[arg(long, value_name = "K", default_value_t = 7)]
    max_nodes: usize,
    /// Every labeled graph instead of one per isomorphism class
    #[arg(long, conflicts_with = "up_to_iso")]
    labeled: bool,
    /// One graph per isomorphism class (default)
    #[arg(long)]
    up_to_iso: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl GraphSource {
    fn load(&self) -> Result<Graph, String> {
        let g = if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_graph(&text)
        } else if let Some(k) = self.cycle {
            cycle_graph(k)
        } else if let Some(k) = self.complete {
            complete_graph(k)
        } else if let Some(k) = self.path {
            path_graph(k)
        } else if let Some(k) = self.star {
            star_graph(k)
        } else {
            unreachable!("clap requires one graph source")
        };
        g.map_err(|e| e.to_string())
    }
}

#[derive(Serialize)]
struct SymmetryOutput {
    centrally_symmetric: bool,
    complement_closed: bool,
    agree: bool,
}

#[derive(Serialize)]
struct CheckOutput {
    is_root_system: bool,
    failure_reason: Option<&'static str>,
    witness: Option<IntVector>,
    #[serde(rename = "type")]
    root_type: Option<RootSystemType>,
    dim: usize,
    rank: usize,
    cartan_matrix: Option<CartanMatrix>,
}

#[derive(Serialize)]
struct ClassifyOutput {
    #[serde(rename = "type")]
    root_type: Option<RootSystemType>,
    failure_reason: Option<&'static str>,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "none".to_string(), T::to_string)
}

fn json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| e.to_string())
}

/// Exit status for a finished verification run.
pub fn verify_exit_code(report: &VerificationReport) -> i32 {
    if report.all_hold() {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    }
}

fn graph_command(cmd: &Command) -> Result<String, String> {
    let (args, which) = match cmd {
        Command::BuildingSet(a) => (a, "building-set"),
        Command::Facets(a) => (a, "facets"),
        Command::Symmetry(a) => (a, "symmetry"),
        Command::Check(a) => (a, "check"),
        Command::Classify(a) => (a, "classify"),
        Command::Verify(_) => unreachable!(),
    };
    let g = args.source.load()?;
    let as_json = args.format == Format::Json;
    let b = building_set(&g).map_err(|e| e.to_string())?;
    if which == "building-set" {
        if as_json {
            return json(&b);
        }
        return Ok(b.members().iter().map(|m| format!("{m}\n")).collect());
    }

    let f = b.facet_vectors().map_err(|e| e.to_string())?;
    match which {
        "facets" => {
            if as_json {
                json(&f)
            } else {
                Ok(f.to_text())
            }
        }
        "symmetry" => {
            let out = SymmetryOutput {
                centrally_symmetric: f.centrally_symmetric(),
                complement_closed: b.complement_closed(),
                agree: f.centrally_symmetric() == b.complement_closed(),
            };
            if as_json {
                json(&out)
            } else {
                Ok(format!(
                    "centrally_symmetric={}\ncomplement_closed={}\nagree={}\n",
                    out.centrally_symmetric, out.complement_closed, out.agree
                ))
            }
        }
        "check" => {
            let a = analyze(&f).map_err(|e| e.to_string())?;
            let failure = a.verdict.failure.as_ref();
            let out = CheckOutput {
                is_root_system: a.verdict.is_root_system(),
                failure_reason: failure.map(|r| r.tag()),
                witness: failure.and_then(|r| r.witness()).map(<[i64]>::to_vec),
                root_type: a.root_type,
                dim: a.verdict.dim,
                rank: a.verdict.rank,
                cartan_matrix: a.cartan,
            };
            if as_json {
                return json(&out);
            }
            let mut s = String::new();
            let _ = writeln!(s, "is_root_system={}", out.is_root_system);
            let _ = writeln!(s, "failure_reason={}", opt(&out.failure_reason));
            let _ = writeln!(
                s,
                "witness={}",
                out.witness.as_deref().map_or("none".into(), format_vector)
            );
            let _ = writeln!(s, "type={}", opt(&out.root_type));
            let _ = writeln!(s, "dim={}", out.dim);
            let _ = writeln!(s, "rank={}", out.rank);
            match &out.cartan_matrix {
                Some(c) => {
                    let _ = writeln!(s, "cartan_matrix:");
                    for row in c.entries() {
                        let _ = writeln!(s, "{}", format_vector(row));
                    }
                }
                None => {
                    let _ = writeln!(s, "cartan_matrix=none");
                }
            }
            Ok(s)
        }
        "classify" => {
            let a = analyze(&f).map_err(|e| e.to_string())?;
            let out = ClassifyOutput {
                root_type: a.root_type,
                failure_reason: a.verdict.failure.as_ref().map(|r| r.tag()),
            };
            if as_json {
                return json(&out);
            }
            Ok(match (&out.root_type, out.failure_reason) {
                (Some(t), _) => format!("{t}\n"),
                (None, reason) => format!("not-a-root-system ({})\n", opt(&reason)),
            })
        }
        _ => unreachable!(),
    }
}

/// Runs the CLI on `argv` (program name first) and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };

    let result = match &cli.command {
        Command::Verify(v) => {
            let mode = if v.labeled {
                EnumerationMode::Labeled
            } else {
                EnumerationMode::UpToIso
            };
            verify_theorem(v.max_nodes, mode)
                .map_err(|e| e.to_string())
                .and_then(|report| {
                    let text = if v.format == Format::Json {
                        json(&report)?
                    } else {
                        report.to_text()
                    };
                    Ok((text, verify_exit_code(&report)))
                })
        }
        other => graph_command(other).map(|text| (text, EXIT_OK)),
    };

    match result {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
