//! Command-line interface: `build`, `check`, `diagram` and `reproduce`.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rectagraph_core::graph::Graph;

use crate::checks;
use crate::dot;
use crate::error::{Error, Result};
use crate::family::{BuiltGraph, CodeSpec, GraphSpec, Inputs};
use crate::formats::{format_code, write_edge_list};
use crate::groups::GroupSpec;
use crate::report::{Outcome, Report};
use crate::suites;

/// Largest graph written out as an edge list.
pub const MAX_WRITTEN_EDGES: usize = 1 << 25;

#[derive(Debug, Parser)]
#[command(
    name = "rectagraph",
    version,
    about = "Rectagraphs, coset graphs of binary codes and locally rank 3 graphs"
)]
pub struct Cli {
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for independent checks (results do not depend on it).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Accepted for compatibility; every algorithm is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph and write it as an edge list.
    Build {
        /// Family and parameters, e.g. `coset golay24` or `halved cube 6`.
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
    },
    /// Run one check and print a report.
    Check(CheckArgs),
    /// Print the distance distribution diagram of a graph in DOT.
    Diagram {
        /// Family and parameters, or an edge-list file.
        #[arg(required = true, num_args = 1..)]
        graph: Vec<String>,
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
    /// Run a reproduction suite.
    Reproduce {
        /// One of main-rect, table-1, rank-3-groups, corollaries, sp6, all.
        suite: String,
    },
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// One of rectagraph, locally-triangular, locally-rank3, two-arc-orbits,
    /// four-homogeneous, reconstruct-code, iso, code-info.
    pub check: String,
    /// Graph: an edge-list file or a family such as "coset golay24". Give
    /// it twice for `iso`.
    #[arg(long)]
    pub graph: Vec<String>,
    /// Code for `code-info`: a builtin name or a code file.
    #[arg(long)]
    pub code: Option<String>,
    /// Generator file of vertex permutations.
    #[arg(long, conflicts_with_all = ["affine", "affine_file"])]
    pub group: Option<PathBuf>,
    /// Named coordinate group (S7, A7, M11, M12, M23, M24, PGammaL28) with
    /// the translations of a coset graph.
    #[arg(long, conflicts_with = "affine_file")]
    pub affine: Option<String>,
    /// Generator file of coordinate permutations, with the translations of
    /// a coset graph.
    #[arg(long)]
    pub affine_file: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub base: usize,
    /// For `reconstruct-code`: the code the graph was built from.
    #[arg(long)]
    pub expect: Option<String>,
    /// For `reconstruct-code`: write the reconstructed code here.
    #[arg(long)]
    pub code_out: Option<PathBuf>,
}

fn words(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

/// A graph argument: an existing file, or a family description.
fn graph_spec(arg: &[String]) -> Result<GraphSpec> {
    if let [single] = arg {
        if Path::new(single).is_file() {
            return Ok(GraphSpec::File(PathBuf::from(single)));
        }
        return GraphSpec::parse(&words(single));
    }
    GraphSpec::parse(arg)
}

fn code_spec(arg: &str) -> Result<CodeSpec> {
    CodeSpec::parse(&words(arg))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

/// Runs a parsed command line. `Ok(true)` is PASS, `Ok(false)` FAIL.
pub fn run(cli: Cli, argv: Vec<String>) -> Result<bool> {
    let threads = cli.threads.unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::usage(format!("cannot start {threads} threads: {e}")))?;
    pool.install(|| dispatch(&cli, argv))
}

fn dispatch(cli: &Cli, argv: Vec<String>) -> Result<bool> {
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Build { family } => {
            let mut inputs = Inputs::default();
            let g = graph_spec(family)?.build(&mut inputs)?.graph;
            if g.edge_count() > MAX_WRITTEN_EDGES {
                return Err(rectagraph_core::Error::TooLarge {
                    size: g.edge_count(),
                    max: MAX_WRITTEN_EDGES,
                }
                .into());
            }
            let mut buf = Vec::new();
            write_edge_list(&g, &mut buf)?;
            write_output(
                out,
                std::str::from_utf8(&buf).expect("edge lists are ASCII"),
            )?;
            let regular = match g.regular_degree() {
                Some(k) => format!("{k}-regular"),
                None => "not regular".into(),
            };
            eprintln!("N={} M={} {regular}", g.vertex_count(), g.edge_count());
            Ok(true)
        }
        Command::Diagram { graph, base } => {
            let mut inputs = Inputs::default();
            let g = graph_spec(graph)?.build(&mut inputs)?.graph;
            write_output(out, &dot::diagram(&g, *base)?)?;
            Ok(true)
        }
        Command::Check(args) => {
            let start = Instant::now();
            let mut inputs = Inputs::default();
            let outcome = run_check(args, &mut inputs)?;
            let elapsed = start.elapsed();
            let report = Report::new(
                argv,
                inputs.into_fingerprints(),
                vec![(outcome, elapsed)],
                elapsed,
            );
            emit(cli, &report)
        }
        Command::Reproduce { suite } => {
            let start = Instant::now();
            let tasks = suites::suite(suite)?;
            let timed = suites::run_tasks(&tasks);
            let report = Report::new(argv, Vec::new(), timed, start.elapsed());
            emit(cli, &report)
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<bool> {
    let text = match cli.format {
        Format::Json => report.to_json()?,
        Format::Text => report.to_text(),
    };
    write_output(cli.out.as_deref(), &text)?;
    Ok(report.passed())
}

fn one_graph(args: &CheckArgs, inputs: &mut Inputs) -> Result<(String, BuiltGraph)> {
    match args.graph.as_slice() {
        [g] => {
            let spec = graph_spec(std::slice::from_ref(g))?;
            Ok((spec.to_string(), spec.build(inputs)?))
        }
        _ => Err(Error::usage(format!(
            "`{}` takes exactly one --graph",
            args.check
        ))),
    }
}

fn group_spec(args: &CheckArgs) -> Result<GroupSpec> {
    match (&args.group, &args.affine, &args.affine_file) {
        (Some(p), None, None) => Ok(GroupSpec::VertexFile(p.clone())),
        (None, Some(n), None) => Ok(GroupSpec::AffineNamed(n.clone())),
        (None, None, Some(p)) => Ok(GroupSpec::AffineFile(p.clone())),
        _ => Err(Error::usage(format!(
            "`{}` needs exactly one of --group, --affine, --affine-file",
            args.check
        ))),
    }
}

fn run_check(args: &CheckArgs, inputs: &mut Inputs) -> Result<Outcome> {
    let check = args.check.as_str();
    match check {
        "rectagraph" => {
            let (label, b) = one_graph(args, inputs)?;
            Ok(checks::rectagraph(&format!("{check}: {label}"), &b.graph))
        }
        "locally-triangular" => {
            let (label, b) = one_graph(args, inputs)?;
            checks::locally_triangular(&format!("{check}: {label}"), &b.graph)
        }
        "locally-rank3" | "two-arc-orbits" | "four-homogeneous" => {
            let (label, b) = one_graph(args, inputs)?;
            let group = group_spec(args)?.build(&b, inputs)?;
            let name = format!("{check}: {label}");
            match check {
                "locally-rank3" => checks::locally_rank3(&name, &b.graph, &group),
                "two-arc-orbits" => checks::two_arc_orbits(&name, &b.graph, &group),
                _ => checks::four_homogeneous(&name, &b.graph, args.base, &group),
            }
        }
        "reconstruct-code" => {
            let (label, b) = one_graph(args, inputs)?;
            let expect = args.expect.as_deref().map(code_spec).transpose()?;
            let expect = expect.map(|c| c.load(inputs)).transpose()?;
            let (outcome, code) = checks::reconstruct_code(
                &format!("{check}: {label}"),
                &b.graph,
                args.base,
                expect.as_ref(),
            )?;
            if let (Some(path), Some(code)) = (&args.code_out, &code) {
                write_output(Some(path), &format_code(code))?;
            }
            Ok(outcome)
        }
        "iso" => {
            let [g, h] = args.graph.as_slice() else {
                return Err(Error::usage("`iso` takes exactly two --graph arguments"));
            };
            let gs = graph_spec(std::slice::from_ref(g))?;
            let hs = graph_spec(std::slice::from_ref(h))?;
            let name = format!("iso: {gs} / {hs}");
            let (g, h): (Graph, Graph) = (gs.build(inputs)?.graph, hs.build(inputs)?.graph);
            checks::iso(&name, &g, &h)
        }
        "code-info" => {
            let arg = args
                .code
                .as_deref()
                .ok_or_else(|| Error::usage("`code-info` needs --code"))?;
            let spec = code_spec(arg)?;
            let code = spec.load(inputs)?;
            checks::code_info(&format!("code-info: {spec}"), &code)
        }
        other => Err(Error::usage(format!(
            "unknown check `{other}`; expected one of {}",
            checks::CHECK_NAMES.join(", ")
        ))),
    }
}
