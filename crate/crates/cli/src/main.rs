//! `cforce`: compute, construct, verify, and bound complete forcing sets.

mod golden;
mod render;

use cforce_core::{
    algorithm_a, best_construction, cartesian_product, connectivity, cyclomatic, degeneracy,
    degree_stats, enumerate_nice_cycles, enumerate_perfect_matchings, exact_cf, fixtures,
    forcing_number, full_report, gen_complete, gen_cycle, gen_hypercube, gen_path, gen_wheel,
    has_perfect_matching, is_complete_forcing_set_definitional, is_complete_forcing_set_frames,
    is_forcing_set, max_forcing_number, order_degeneracy, order_min_avg_two_degree, order_w_set,
    BoundFlags, Caps, CfMethod, ComputeError, EdgeSet, Graph, Matching, VertexOrdering,
    W_SET_GUARD,
};
use clap::{Parser, Subcommand, ValueEnum};
use render::{index_list, Format, Output};
use serde_json::json;

const GENERATOR_HELP: &str = "\
GENERATOR SPECS (--gen):
  path:N         path on N vertices
  cycle:N        cycle on N vertices
  complete:N     complete graph on N vertices
  wheel:N        wheel on N vertices (hub is vertex N-1)
  hypercube:N    N-dimensional hypercube
  grid:RxC       R x C grid (Cartesian product of paths)
  h | l          built-in 8-vertex reference graphs

Edge sets on the command line are comma-separated endpoint pairs, e.g.
--set 4-5,2-4 (vertex indices of the loaded graph).";

#[derive(Parser)]
#[command(
    name = "cforce",
    version,
    about = "Complete forcing sets: enumeration, construction, exact solving, bounds",
    after_long_help = GENERATOR_HELP
)]
struct Cli {
    /// Read the graph from an edge-list file (header "n m", then "u v" lines)
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "generator")]
    input: Option<std::path::PathBuf>,

    /// Generate the graph from a spec like "hypercube:4" (see --help)
    #[arg(long = "gen", global = true, value_name = "SPEC")]
    generator: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Cap on enumerated perfect matchings
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pm_cap: usize,

    /// Cap on enumerated nice cycles
    #[arg(long, global = true, default_value_t = 1_000_000)]
    cycle_cap: usize,

    /// Cap on enumerated automorphisms
    #[arg(long, global = true, default_value_t = 1_000_000)]
    aut_cap: usize,

    /// Convergence tolerance for the spectral radius
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,

    /// Assert that the graph is planar (enables the planar bound)
    #[arg(long, global = true)]
    planar: bool,

    /// Assert that the graph is outerplanar (enables the outerplanar bound)
    #[arg(long, global = true)]
    outerplanar: bool,

    /// Canonical ordering of listed objects (always applied; kept for config
    /// compatibility)
    #[arg(long, global = true)]
    canonical: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderChoice {
    Given,
    MinAvg,
    Degeneracy,
    WSet,
    Best,
}

#[derive(Subcommand)]
enum Command {
    /// Basic structure: sizes, degrees, connectivity, matchability
    Info,
    /// Print the graph in the edge-list file format
    Gen,
    /// Enumerate all perfect matchings
    PmList,
    /// Enumerate all nice cycles with their frames
    NiceCycles,
    /// Minimum forcing set of one perfect matching
    Fnum {
        /// The matching, as endpoint pairs: e.g. 0-1,2-3
        #[arg(long, value_name = "EDGES")]
        matching: String,
    },
    /// Maximum forcing number over all perfect matchings
    MaxFnum,
    /// Run the complete-forcing-set construction
    Construct {
        #[arg(long, value_enum, default_value_t = OrderChoice::Given)]
        order: OrderChoice,
        /// Explicit vertex ordering for --order given (default: identity)
        #[arg(long, value_name = "V,V,...")]
        pi: Option<String>,
    },
    /// Verify an edge set: complete forcing, or forcing for --matching
    Verify {
        /// The edge set, as endpoint pairs: e.g. 4-5,2-4
        #[arg(long, value_name = "EDGES")]
        set: String,
        /// Check against one matching instead of all of them
        #[arg(long, value_name = "EDGES")]
        matching: Option<String>,
    },
    /// Exact complete forcing number (degrades to an upper bound on caps)
    ExactCf,
    /// Every applicable upper and lower bound
    Bounds,
    /// Reproduce the built-in worked examples; exit 0 only if all match
    ReportPaper,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

impl From<ComputeError> for Failure {
    fn from(e: ComputeError) -> Self {
        Failure {
            code: if e.is_saturation() { 2 } else { 3 },
            message: e.to_string(),
        }
    }
}

fn parse_generator(spec: &str) -> Result<Graph, Failure> {
    let bad = |msg: &str| usage(format!("bad generator spec {spec:?}: {msg}"));
    let (name, params) = match spec.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (spec, None),
    };
    let int = |p: Option<&str>| -> Result<usize, Failure> {
        p.and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("expected one integer parameter"))
    };
    let g = match name {
        "path" => gen_path(int(params)?),
        "cycle" => gen_cycle(int(params)?),
        "complete" => gen_complete(int(params)?),
        "wheel" => gen_wheel(int(params)?),
        "hypercube" => gen_hypercube(int(params)?),
        "grid" => {
            let p = params.ok_or_else(|| bad("expected RxC"))?;
            let (r, c) = p.split_once('x').ok_or_else(|| bad("expected RxC"))?;
            let parse = |s: &str| s.parse::<usize>().map_err(|_| bad("expected RxC"));
            let (r, c) = (parse(r)?, parse(c)?);
            let rows = gen_path(r).map_err(|e| usage(e.to_string()))?;
            let cols = gen_path(c).map_err(|e| usage(e.to_string()))?;
            cartesian_product(&rows, &cols)
        }
        "h" => return Ok(fixtures::graph_h()),
        "l" => return Ok(fixtures::graph_l()),
        _ => return Err(bad("unknown generator")),
    };
    g.map_err(|e| usage(e.to_string()))
}

fn load_graph(cli: &Cli) -> Result<Graph, Failure> {
    match (&cli.input, &cli.generator) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            Graph::parse_edge_list(&text).map_err(|e| usage(e.to_string()))
        }
        (None, Some(spec)) => parse_generator(spec),
        (None, None) => Err(usage("one of --input or --gen is required")),
        (Some(_), Some(_)) => Err(usage("--input and --gen are mutually exclusive")),
    }
}

/// Parses "u-v,u-v,..." into edge indices of `g`.
fn parse_edge_set(g: &Graph, text: &str) -> Result<EdgeSet, Failure> {
    let mut set = g.empty_edge_set();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (u, v) = part
            .split_once('-')
            .ok_or_else(|| usage(format!("bad edge {part:?}, expected u-v")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("bad vertex in edge {part:?}")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        let e = g
            .edge_between(u, v)
            .ok_or_else(|| usage(format!("graph has no edge {u}-{v}")))?;
        set.insert(e);
    }
    Ok(set)
}

fn parse_matching(g: &Graph, text: &str) -> Result<Matching, Failure> {
    let edges = parse_edge_set(g, text)?;
    Matching::new(g, edges).map_err(Failure::from)
}

fn edge_pairs(g: &Graph, set: &EdgeSet) -> String {
    let parts: Vec<String> = set
        .iter()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            format!("{u}-{v}")
        })
        .collect();
    parts.join(",")
}

fn parse_pi(g: &Graph, text: &str) -> Result<VertexOrdering, Failure> {
    let perm: Result<Vec<usize>, _> = text.split(',').map(|s| s.trim().parse()).collect();
    let perm = perm.map_err(|_| usage("bad --pi: expected comma-separated vertex indices"))?;
    if perm.len() != g.vertex_count() {
        return Err(usage(format!(
            "--pi must list all {} vertices",
            g.vertex_count()
        )));
    }
    VertexOrdering::new(perm).map_err(|e| usage(e.to_string()))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let caps = Caps {
        pm_cap: cli.pm_cap,
        cycle_cap: cli.cycle_cap,
    };
    match &cli.command {
        Command::ReportPaper => {
            let checks = golden::run();
            let all_ok = checks.iter().all(|c| c.ok);
            let mut out = Output::new(json!({
                "checks": checks.iter().map(|c| json!({
                    "name": c.name,
                    "expected": c.expected,
                    "actual": c.actual,
                    "ok": c.ok,
                })).collect::<Vec<_>>(),
                "all_ok": all_ok,
            }));
            for c in &checks {
                out = out.row(
                    c.name,
                    format!(
                        "expected {} actual {} [{}]",
                        c.expected,
                        c.actual,
                        if c.ok { "ok" } else { "MISMATCH" }
                    ),
                );
            }
            out.row("all checks passed", all_ok).print(cli.format);
            if !all_ok {
                return Err(Failure {
                    code: 3,
                    message: "golden reproduction mismatch".into(),
                });
            }
            Ok(())
        }
        Command::Info => {
            let g = load_graph(cli)?;
            let (degrees, max, min) = degree_stats(&g);
            let (connected, components) = connectivity(&g);
            let (degen, _) = degeneracy(&g);
            let matchable = has_perfect_matching(&g);
            Output::new(json!({
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "degrees": degrees,
                "max_degree": max,
                "min_degree": min,
                "connected": connected,
                "components": components,
                "cyclomatic": cyclomatic(&g),
                "degeneracy": degen,
                "has_perfect_matching": matchable,
            }))
            .row("vertices", g.vertex_count())
            .row("edges", g.edge_count())
            .row("max degree", max)
            .row("min degree", min)
            .row("connected", connected)
            .row("components", components)
            .row("cyclomatic number", cyclomatic(&g))
            .row("degeneracy", degen)
            .row("has perfect matching", matchable)
            .print(cli.format);
            Ok(())
        }
        Command::Gen => {
            let g = load_graph(cli)?;
            if cli.format == Format::Json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&g).expect("serializable")
                );
            } else {
                print!("{}", g.to_edge_list());
            }
            Ok(())
        }
        Command::PmList => {
            let g = load_graph(cli)?;
            let pms = enumerate_perfect_matchings(&g, cli.pm_cap)?;
            let mut out = Output::new(json!({
                "count": pms.len(),
                "matchings": pms,
            }))
            .row("count", pms.len());
            for (i, m) in pms.iter().enumerate() {
                out = out.row(format!("matching {i}"), edge_pairs(&g, m.edges()));
            }
            out.print(cli.format);
            Ok(())
        }
        Command::NiceCycles => {
            let g = load_graph(cli)?;
            let cycles = enumerate_nice_cycles(&g, cli.pm_cap, cli.cycle_cap)?;
            let mut out = Output::new(json!({
                "count": cycles.len(),
                "cycles": cycles,
            }))
            .row("count", cycles.len());
            for (i, c) in cycles.iter().enumerate() {
                out = out
                    .row(
                        format!("cycle {i} vertices"),
                        index_list(c.vertices.clone()),
                    )
                    .row(format!("cycle {i} frame a"), edge_pairs(&g, &c.frame_a))
                    .row(format!("cycle {i} frame b"), edge_pairs(&g, &c.frame_b));
            }
            out.print(cli.format);
            Ok(())
        }
        Command::Fnum { matching } => {
            let g = load_graph(cli)?;
            let m = parse_matching(&g, matching)?;
            let cert = forcing_number(&g, &m, cli.pm_cap)?;
            Output::new(serde_json::to_value(&cert).expect("serializable"))
                .row("forcing number", cert.number)
                .row("forcing set", edge_pairs(&g, &cert.forcing_set))
                .print(cli.format);
            Ok(())
        }
        Command::MaxFnum => {
            let g = load_graph(cli)?;
            let (f, witness) = max_forcing_number(&g, cli.pm_cap)?;
            Output::new(json!({
                "max_forcing_number": f,
                "witness": witness,
            }))
            .row("max forcing number", f)
            .row("witness matching", edge_pairs(&g, witness.matching.edges()))
            .row("witness forcing set", edge_pairs(&g, &witness.forcing_set))
            .print(cli.format);
            Ok(())
        }
        Command::Construct { order, pi } => {
            let g = load_graph(cli)?;
            let (trace, label) = match order {
                OrderChoice::Given => {
                    let ordering = match pi {
                        Some(text) => parse_pi(&g, text)?,
                        None => VertexOrdering::identity(g.vertex_count()),
                    };
                    (algorithm_a(&g, &ordering)?, "given-index")
                }
                OrderChoice::MinAvg => (
                    algorithm_a(&g, &order_min_avg_two_degree(&g))?,
                    "min-avg-2-degree",
                ),
                OrderChoice::Degeneracy => (algorithm_a(&g, &order_degeneracy(&g))?, "degeneracy"),
                OrderChoice::WSet => {
                    let (ordering, _, _) = order_w_set(&g, W_SET_GUARD)?;
                    (algorithm_a(&g, &ordering)?, "w-set")
                }
                OrderChoice::Best => {
                    let (trace, strategy) = best_construction(&g)?;
                    (trace, strategy.label())
                }
            };
            let mut out = Output::new(json!({
                "strategy": label,
                "trace": trace,
            }))
            .row("strategy", label)
            .row("set size", trace.forcing_set.len())
            .row("forcing set", edge_pairs(&g, &trace.forcing_set));
            for (i, step) in trace.steps.iter().enumerate() {
                out = out.row(
                    format!("step {i}"),
                    format!(
                        "vertex {} boundary {}",
                        step.vertex,
                        edge_pairs(&g, &step.boundary)
                    ),
                );
            }
            out.print(cli.format);
            Ok(())
        }
        Command::Verify { set, matching } => {
            let g = load_graph(cli)?;
            let s = parse_edge_set(&g, set)?;
            let verdict = match matching {
                Some(text) => {
                    let m = parse_matching(&g, text)?;
                    is_forcing_set(&g, &m, &s)?
                }
                None => {
                    let definitional = is_complete_forcing_set_definitional(&g, &s, cli.pm_cap)?;
                    let frames = is_complete_forcing_set_frames(&g, &s, caps)?;
                    assert_eq!(definitional, frames, "verifier disagreement");
                    definitional
                }
            };
            let kind = if matching.is_some() {
                "forcing"
            } else {
                "complete forcing"
            };
            Output::new(json!({ "kind": kind, "verified": verdict }))
                .row("kind", kind)
                .row("verified", verdict)
                .print(cli.format);
            Ok(())
        }
        Command::ExactCf => {
            let g = load_graph(cli)?;
            let result = exact_cf(&g, caps)?;
            Output::new(serde_json::to_value(&result).expect("serializable"))
                .row("value", result.value)
                .row(
                    "method",
                    match result.method {
                        CfMethod::Exact => "exact",
                        CfMethod::ConstructedUpperBound => "constructed-upper-bound",
                    },
                )
                .row("optimal set", edge_pairs(&g, &result.optimal_set))
                .print(cli.format);
            if result.method == CfMethod::ConstructedUpperBound {
                return Err(Failure {
                    code: 2,
                    message: "caps saturated: reported value is an upper bound, not exact".into(),
                });
            }
            Ok(())
        }
        Command::Bounds => {
            let g = load_graph(cli)?;
            let flags = BoundFlags {
                planar: cli.planar,
                outerplanar: cli.outerplanar,
            };
            let report = full_report(&g, flags, caps, cli.tol);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                ),
                Format::Markdown => print!("{}", report.to_markdown()),
                Format::Csv => {
                    println!("name,kind,raw,rounded,applicable,reason");
                    for e in &report.entries {
                        println!(
                            "{},{:?},{},{},{},{}",
                            e.name,
                            e.kind,
                            e.raw.map_or(String::new(), |v| format!("{v:.6}")),
                            e.rounded.map_or(String::new(), |v| v.to_string()),
                            e.applicable,
                            e.reason.as_deref().unwrap_or("").replace(',', ";"),
                        );
                    }
                }
                Format::Plain => {
                    for e in &report.entries {
                        let value = match (e.applicable, e.raw, e.rounded) {
                            (true, Some(raw), Some(rounded)) => {
                                format!("{raw:.6} (rounds to {rounded})")
                            }
                            _ => format!(
                                "not applicable ({})",
                                e.reason.as_deref().unwrap_or("unspecified")
                            ),
                        };
                        println!("{} [{:?}]: {}", e.name, e.kind, value);
                    }
                }
            }
            Ok(())
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(failure) = run(&cli) {
        eprintln!("error: {}", failure.message);
        std::process::exit(failure.code);
    }
}
