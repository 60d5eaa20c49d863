use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use symgraph::census::{
    analyze, check_normal_quotient, default_entries, run_census, Analysis, CensusOptions,
};
use symgraph::graph::{quotient, Graph, GroupSpec, NamedGraph, Recipe};
use symgraph::perm::PermGroup;
use symgraph::Config;

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

#[derive(Parser)]
#[command(
    name = "symgraph",
    version,
    about = "Construct and verify pentavalent symmetric graphs"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// JSON config file; flags given on the command line override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for every randomized search.
    #[arg(long, global = true, env = "SYMGRAPH_SEED")]
    seed: Option<u64>,
    /// Worker threads for the census.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Enable the two expensive constructions (G108, G170).
    #[arg(long, global = true)]
    stretch: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph or a JSON recipe and write it as a graph file.
    Construct {
        /// A graph name (K6, G66, CD:31, ...) or the path of a recipe file.
        target: String,
        /// Output file; the graph goes to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        /// Also write the group that acts by construction.
        #[arg(long)]
        group_output: Option<PathBuf>,
    },
    /// Report the automorphism group, s-arc-transitivity, vertex stabiliser
    /// and basicness of a graph file.
    Analyze {
        graph: PathBuf,
        /// Verify this group instead of computing the full automorphism group.
        #[arg(long)]
        group: Option<PathBuf>,
        #[arg(short, long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Quotient a graph by the orbits of a group of automorphisms.
    Quotient {
        graph: PathBuf,
        /// The normal subgroup whose orbits are contracted.
        #[arg(long)]
        group: PathBuf,
        /// A group containing it; enables the normal-quotient check.
        #[arg(long)]
        within: Option<PathBuf>,
        /// Output file for the quotient graph.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify every census entry against its expected values.
    Census {
        /// Only run entries with these names.
        #[arg(long)]
        entry: Vec<String>,
        #[arg(short, long, value_enum, default_value_t = Output::Text)]
        output: Output,
        /// Leave wall-clock timings out of the report.
        #[arg(long)]
        no_timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    EdgeList,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let config = load_config(&cli.global)?;
    match cli.command {
        Command::Construct {
            target,
            output,
            format,
            group_output,
        } => construct(
            &target,
            output.as_deref(),
            format,
            group_output.as_deref(),
            &config,
        ),
        Command::Analyze {
            graph,
            group,
            output,
        } => {
            let g = read_graph(&graph)?;
            let group = group.map(|p| read_group(&p)).transpose()?;
            let a = analyze(&g, group.as_ref(), &config)?;
            match output {
                Output::Json => emit(&(serde_json::to_string_pretty(&a)? + "\n"))?,
                Output::Text => emit(&analysis_text(&a))?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient {
            graph,
            group,
            within,
            output,
        } => quotient_cmd(&graph, &group, within.as_deref(), output.as_deref()),
        Command::Census {
            entry,
            output,
            no_timings,
        } => {
            let mut entries = default_entries();
            if !entry.is_empty() {
                if let Some(missing) = entry
                    .iter()
                    .find(|n| !entries.iter().any(|e| &e.name == *n))
                {
                    return Err(format!("no census entry named {missing}").into());
                }
                entries.retain(|e| entry.contains(&e.name));
            }
            let options = CensusOptions {
                config,
                timings: !no_timings,
                jobs: cli.global.jobs,
            };
            let report = run_census(&entries, &options);
            match output {
                Output::Json => emit(&(report.to_json() + "\n"))?,
                Output::Text => emit(&report.to_text())?,
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
    }
}

fn load_config(global: &Global) -> CliResult<Config> {
    let mut config = match &global.config {
        Some(path) => Config::from_json(&fs::read_to_string(path)?)?,
        None => Config::default(),
    };
    if let Some(seed) = global.seed {
        config.seed = seed;
    }
    if global.stretch {
        config.stretch_graphs = true;
    }
    if global.jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    Ok(config)
}

fn construct(
    target: &str,
    output: Option<&Path>,
    format: GraphFormat,
    group_output: Option<&Path>,
    config: &Config,
) -> CliResult<ExitCode> {
    let path = Path::new(target);
    let built: NamedGraph = if path.is_file() {
        Recipe::parse(&fs::read_to_string(path)?)?.build(config)?
    } else {
        symgraph::graph::named(target, config)?
    };
    let g = &built.graph;
    let text = match format {
        GraphFormat::Json => g.to_json() + "\n",
        GraphFormat::EdgeList => g.to_edge_list(),
    };
    let summary = format!(
        "{}: {} vertices, {} edges, valency {}, {}",
        built.name,
        g.vertex_count(),
        g.edge_count(),
        g.valency()
            .map_or("irregular".to_string(), |k| k.to_string()),
        if g.is_connected() {
            "connected"
        } else {
            "disconnected"
        },
    );
    match output {
        Some(p) => {
            fs::write(p, text)?;
            println!("{summary}");
        }
        None => {
            emit(&text)?;
            eprintln!("{summary}");
        }
    }
    if let Some(p) = group_output {
        let group = built
            .group
            .as_ref()
            .ok_or_else(|| format!("{} has no construction group", built.name))?;
        fs::write(p, group.to_json() + "\n")?;
    }
    Ok(ExitCode::SUCCESS)
}

fn quotient_cmd(
    graph: &Path,
    group: &Path,
    within: Option<&Path>,
    output: Option<&Path>,
) -> CliResult<ExitCode> {
    let g = read_graph(graph)?;
    let n = read_group(group)?;
    let q = quotient(&g, &n)?;
    println!(
        "{} orbits; quotient has {} vertices, valency {}; {}",
        n.orbits().len(),
        q.quotient.vertex_count(),
        q.quotient
            .valency()
            .map_or("irregular".to_string(), |k| k.to_string()),
        if q.is_normal_cover {
            "normal cover"
        } else {
            "valency drops"
        },
    );
    let mut code = ExitCode::SUCCESS;
    if let Some(p) = within {
        let big = read_group(p)?;
        let check = check_normal_quotient(&g, &big, &n)?;
        println!(
            "normal quotient check: {}",
            if check.pass { "pass" } else { "FAIL" }
        );
        if !check.pass {
            code = ExitCode::from(1);
        }
    }
    if let Some(p) = output {
        fs::write(p, q.quotient.to_json() + "\n")?;
    }
    Ok(code)
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn emit(text: &str) -> CliResult<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

/// Reads graph JSON, or an edge list when the file does not start with `{`.
fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = fs::read_to_string(path)?;
    let g = if text.trim_start().starts_with('{') {
        Graph::from_json(&text)?
    } else {
        Graph::from_edge_list(&text, None)?
    };
    Ok(g)
}

fn read_group(path: &Path) -> CliResult<PermGroup> {
    Ok(GroupSpec::parse(&fs::read_to_string(path)?)?)
}

fn analysis_text(a: &Analysis) -> String {
    let mode = match a.mode {
        symgraph::census::AnalysisMode::FullAut => "|Aut|",
        symgraph::census::AnalysisMode::Containment => "verified group order",
    };
    let mut out = format!(
        "vertices: {}\nedges: {}\nvalency: {}\nconnected: {}\n{mode}: {}\narc-transitive: {}\n",
        a.vertices,
        a.edges,
        a.valency.map_or("irregular".to_string(), |k| k.to_string()),
        a.connected,
        a.group_order,
        a.arc_transitive,
    );
    if let Some(s) = a.s {
        let bound = if a.s_exact == Some(false) {
            " (lower bound)"
        } else {
            ""
        };
        out += &format!("s: {s}{bound}\n");
    }
    if let Some(p) = &a.stabilizer {
        let types = if p.matched_types.is_empty() {
            "unmatched".to_string()
        } else {
            p.matched_types.join("/")
        };
        out += &format!("stabilizer: order {} = {}, {types}\n", p.order, p.factored);
    }
    if let Some(b) = &a.basicness {
        out += &format!("basicness: {b}\n");
    }
    if let Some(w) = &a.witness {
        out += &format!(
            "witness: normal subgroup of order {} with {} orbits, quotient on {} vertices\n",
            w.subgroup_order, w.orbits, w.quotient_vertices
        );
    }
    for (step, why) in &a.skipped {
        out += &format!("skipped {step}: {why}\n");
    }
    out
}
