//! `homshift` command-line front end.
//!
//! Exit status: 0 when everything emitted passed, 1 when a check, comparison
//! or search came back negative, 2 on any error.

mod render;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use homshift::config::{Caps, Config, Exec};
use homshift::corpus;
use homshift::covers::{cover_ideal, minimal_vertex_covers};
use homshift::graph::{CliquePartition, CliqueWhiskeredGraph, Graph};
use homshift::io::{self, GraphInput};
use homshift::linear_quotients::{
    find_order, find_weakly_polymatroidal_order, hs_via_linear_quotients, lex_order, verify_order,
    weakly_polymatroidal_violation, LinearQuotientOrder,
};
use homshift::monomial::{MonomialIdeal, VarOrder};
use homshift::pipelines::{batch_suite, theorem_suite_named, verify_counterexample, Mode, TheoremReport};
use homshift::resolution::{betti_table, hs_from_betti};
use homshift::Error;
use render::Out;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "homshift", version, about = "Homological shift ideals of cover ideals")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Seed for every random choice
    #[arg(long, global = true, default_value_t = corpus::DEFAULT_SEED)]
    seed: u64,
    /// Worker threads; 1 runs everything sequentially
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    #[arg(long, global = true)]
    max_generators: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Oracle,
    Linquot,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the minimal vertex covers of a graph
    Covers { graph: PathBuf },
    /// Print the cover ideal J(G)
    CoverIdeal { graph: PathBuf },
    /// Compute HS_k of an ideal, or of J(G) for a graph file
    Hs {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = RouteArg::Oracle)]
        route: RouteArg,
    },
    /// Multigraded Betti table of an ideal, or of J(G) for a graph file
    Betti { input: PathBuf },
    /// Run the theorem suite on one graph or on the seeded corpus
    Check {
        /// Graph file; roles make it clique-whiskered, otherwise see --partition
        graph: Option<PathBuf>,
        #[arg(long, default_value = "generic")]
        mode: String,
        /// Clique partition for a plain graph (default: singletons)
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Use the seeded random corpus instead of a file
        #[arg(long, conflicts_with_all = ["graph", "partition"])]
        corpus: bool,
        #[arg(long, default_value_t = 60, requires = "corpus")]
        count: usize,
    },
    /// Verify the whiskered 2k-cycle counterexample
    Counterexample { k: usize },
    /// Emit a graph from one of the built-in families
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Search for a generator order with linear quotients
    FindLq {
        input: PathBuf,
        /// Verify this comma-separated generator order instead of searching
        #[arg(long)]
        order: Option<String>,
    },
    /// Test the weakly polymatroidal property
    CheckWpm {
        input: PathBuf,
        /// Comma-separated variable order (default: ring order)
        #[arg(long, conflicts_with = "search")]
        order: Option<String>,
        /// Test HS_k(J(G)) instead of the input ideal
        #[arg(long)]
        k: Option<usize>,
        /// Try every variable order
        #[arg(long)]
        search: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// The whiskered 2k-cycle
    WhiskeredCycle { k: usize },
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    /// Clique-whisker a graph file along a partition
    CliqueWhisker {
        graph: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Cohen–Macaulay Cameron–Walker graph over a bipartite graph
    CameronWalker {
        graph: PathBuf,
        /// Comma-separated left side of the bipartition
        #[arg(long)]
        left: String,
    },
    /// Clique corona, one clique size per vertex
    CliqueCorona {
        graph: PathBuf,
        /// Comma-separated clique sizes in vertex order
        #[arg(long, value_delimiter = ',')]
        t: Vec<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn config(global: &Global) -> anyhow::Result<Config> {
    let mut caps = Caps::default();
    if let Ok(spec) = std::env::var("HOMSHIFT_CAPS") {
        caps = caps.parse_overrides(&spec).context("HOMSHIFT_CAPS")?;
    }
    for (flag, value, slot) in [
        ("--max-vertices", global.max_vertices, &mut caps.max_vertices),
        ("--max-generators", global.max_generators, &mut caps.max_generators),
    ] {
        if let Some(v) = value {
            if v == 0 {
                bail!("{flag} must be positive");
            }
            *slot = v;
        }
    }
    let exec = match global.jobs {
        Some(0) => bail!("--jobs must be positive"),
        Some(1) => Exec::Sequential,
        Some(_n) => {
            #[cfg(feature = "parallel")]
            rayon::ThreadPoolBuilder::new().num_threads(_n).build_global()?;
            Exec::Parallel
        }
        None => Exec::Parallel,
    };
    Ok(Config { caps, exec })
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> anyhow::Result<GraphInput> {
    io::parse_graph(&read(path)?).with_context(|| format!("parsing graph {}", path.display()))
}

/// A graph file (an object with `vertices`) becomes its cover ideal;
/// anything else is read as an ideal.
fn load_ideal(path: &Path, cfg: &Config) -> anyhow::Result<MonomialIdeal> {
    let text = read(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    if value.get("vertices").is_some() {
        let g = io::parse_graph(&text).with_context(|| format!("parsing graph {}", path.display()))?;
        return Ok(cover_ideal(g.graph(), cfg)?);
    }
    io::parse_ideal(&text).with_context(|| format!("parsing ideal {}", path.display()))
}

fn load_whiskered(path: &Path, partition: Option<&Path>) -> anyhow::Result<CliqueWhiskeredGraph> {
    match load_graph(path)? {
        GraphInput::Whiskered(w) => {
            if partition.is_some() {
                bail!("{} already carries roles; drop --partition", path.display());
            }
            Ok(w)
        }
        GraphInput::Plain(g) => {
            let p = match partition {
                Some(p) => io::parse_partition(&read(p)?).with_context(|| format!("parsing {}", p.display()))?,
                None => CliquePartition::singletons(&g),
            };
            Ok(CliqueWhiskeredGraph::clique_whisker(&g, &p)?)
        }
    }
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect()
}

/// Lex order in the ring order if it has linear quotients, else a search.
fn some_lq_order(ideal: &MonomialIdeal, cfg: &Config) -> anyhow::Result<LinearQuotientOrder> {
    let lex = lex_order(ideal, &VarOrder::identity(ideal.ring().len()));
    if let Ok(order) = verify_order(ideal, &lex)? {
        return Ok(order);
    }
    find_order(ideal, cfg)?.ok_or_else(|| anyhow!("the ideal has no generator order with linear quotients"))
}

fn hs_linquot(ideal: &MonomialIdeal, k: usize, cfg: &Config) -> anyhow::Result<MonomialIdeal> {
    if k == 0 {
        return Ok(ideal.clone());
    }
    Ok(hs_via_linear_quotients(&some_lq_order(ideal, cfg)?, k)?.ideal)
}

/// Oracle when the caps allow it, linear quotients otherwise.
fn hs_auto(ideal: &MonomialIdeal, k: usize, cfg: &Config) -> anyhow::Result<MonomialIdeal> {
    match hs_from_betti(ideal, k, cfg) {
        Err(Error::CapExceeded { .. }) => hs_linquot(ideal, k, cfg),
        other => Ok(other?),
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let cfg = config(&cli.global)?;
    let out = Out::new(cli.global.format);
    match cli.command {
        Command::Covers { graph } => {
            let g = load_graph(&graph)?;
            let covers = minimal_vertex_covers(g.graph(), &cfg)?;
            out.covers(&covers, &cover_ideal(g.graph(), &cfg)?)?;
            Ok(true)
        }
        Command::CoverIdeal { graph } => {
            out.ideal(&cover_ideal(load_graph(&graph)?.graph(), &cfg)?)?;
            Ok(true)
        }
        Command::Hs { input, k, route } => {
            let ideal = load_ideal(&input, &cfg)?;
            match route {
                RouteArg::Oracle => out.ideal(&hs_from_betti(&ideal, k, &cfg)?)?,
                RouteArg::Linquot => out.ideal(&hs_linquot(&ideal, k, &cfg)?)?,
                RouteArg::Both => {
                    let oracle = hs_from_betti(&ideal, k, &cfg)?;
                    let linquot = hs_linquot(&ideal, k, &cfg)?;
                    return out.comparison(k, &oracle, &linquot);
                }
            }
            Ok(true)
        }
        Command::Betti { input } => {
            let ideal = load_ideal(&input, &cfg)?;
            out.betti(&betti_table(&ideal, &cfg)?)?;
            Ok(true)
        }
        Command::Check {
            graph,
            mode,
            partition,
            corpus: use_corpus,
            count,
        } => {
            let mode = Mode::parse(&mode)?;
            let reports: Vec<TheoremReport> = if use_corpus {
                let instances = corpus::seeded_corpus(cli.global.seed, count, &cfg)?;
                batch_suite(instances, mode, &cfg).into_iter().collect::<Result<_, _>>()?
            } else {
                let path = graph.ok_or_else(|| anyhow!("check needs a graph file or --corpus"))?;
                let gpi = load_whiskered(&path, partition.as_deref())?;
                let name = path.file_stem().map_or("instance".into(), |s| s.to_string_lossy().into_owned());
                vec![theorem_suite_named(&gpi, mode, &name, None, &cfg)?]
            };
            out.reports(&reports)
        }
        Command::Counterexample { k } => out.reports(&[verify_counterexample(k, &cfg)?]),
        Command::Construct { family } => {
            let doc = match family {
                Family::WhiskeredCycle { k } => io::whiskered_to_json(&CliqueWhiskeredGraph::whiskered_cycle(k)?),
                Family::Cycle { n } => io::graph_to_json(&Graph::cycle(n)?),
                Family::Path { n } => io::graph_to_json(&Graph::path(n)?),
                Family::Complete { n } => io::graph_to_json(&Graph::complete(n)?),
                Family::CliqueWhisker { graph, partition } => {
                    io::whiskered_to_json(&load_whiskered(&graph, partition.as_deref())?)
                }
                Family::CameronWalker { graph, left } => {
                    let h = plain(load_graph(&graph)?)?;
                    io::whiskered_to_json(&CliqueWhiskeredGraph::cm_cameron_walker(&h, &split_list(&left))?)
                }
                Family::CliqueCorona { graph, t } => {
                    let gamma = plain(load_graph(&graph)?)?;
                    io::whiskered_to_json(&CliqueWhiskeredGraph::clique_corona(&gamma, &t)?)
                }
            };
            out.json_only("construct", &doc)?;
            Ok(true)
        }
        Command::FindLq { input, order } => {
            let ideal = load_ideal(&input, &cfg)?;
            match order {
                Some(list) => {
                    let seq = split_list(&list)
                        .iter()
                        .map(|s| ideal.ring().parse_monomial(s))
                        .collect::<Result<Vec<_>, _>>()?;
                    match verify_order(&ideal, &seq)? {
                        Ok(o) => out.order(Some(&o)),
                        Err(f) => out.order_failure(&ideal, &f),
                    }
                }
                None => out.order(find_order(&ideal, &cfg)?.as_ref()),
            }
        }
        Command::CheckWpm { input, order, k, search } => {
            let mut ideal = load_ideal(&input, &cfg)?;
            if let Some(k) = k {
                ideal = hs_auto(&ideal, k, &cfg)?;
            }
            let var_order = if search {
                match find_weakly_polymatroidal_order(&ideal, &cfg)? {
                    Some(o) => o,
                    None => {
                        out.wpm(&ideal, None, None)?;
                        return Ok(false);
                    }
                }
            } else {
                match order {
                    Some(list) => VarOrder::from_names(ideal.ring(), &split_list(&list))?,
                    None => VarOrder::identity(ideal.ring().len()),
                }
            };
            let violation = weakly_polymatroidal_violation(&ideal, &var_order, &cfg);
            out.wpm(&ideal, Some(&var_order), violation.as_ref())?;
            Ok(violation.is_none())
        }
    }
}

fn plain(g: GraphInput) -> anyhow::Result<Graph> {
    match g {
        GraphInput::Plain(g) => Ok(g),
        GraphInput::Whiskered(_) => bail!("expected a plain graph without roles"),
    }
}
