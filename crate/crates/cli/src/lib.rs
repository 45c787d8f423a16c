//! Command-line front end for `sp-extremal`.
//!
//! Exit codes: 0 on success, 1 when a check or verification fails, 2 on a
//! usage error. `SP_EXTREMAL_MAX_N` lowers the vertex limits.

pub mod input;
pub mod output;

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use sp_extremal::construct::{bound_even_girth, bound_girth5, subdivide};
use sp_extremal::enumerate::{
    extremal_search, verify_bound, SearchConfig, SearchMode, MAX_SEARCH_N,
};
use sp_extremal::graph::{encode_graph6, to_dot, Graph, MAX_VERTICES};
use sp_extremal::structure::{
    check_proposition1, cut_reduction, decompose, diagnose_proposition1, make_two_connected,
    Prop1Report,
};
use sp_extremal::suite::{self, SuiteOptions, GROUPS};

use input::GraphInput;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Environment variable that may lower the vertex limits.
pub const MAX_N_VAR: &str = "SP_EXTREMAL_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "sp-extremal",
    version,
    about = "Extremal K4-minor-free graphs of given girth"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form edge bound for n vertices and girth at least g.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        girth: usize,
        /// Also run the exhaustive search and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Prints a built-in graph: theta:K,S | g5:S | h:I.
    Construct {
        spec: String,
        /// Subdivide the edge U,V of the constructed graph.
        #[arg(long, value_name = "U,V")]
        subdivide: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Girth, K4-minor-freeness and canonical form of each input graph.
    Check {
        #[command(flatten)]
        input: GraphInput,
        /// Fail unless every graph has girth at least this value.
        #[arg(long, default_value_t = 0)]
        min_girth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Bridges of one cycle, or the bridge conditions over every cycle.
    Bridges {
        #[command(flatten)]
        input: GraphInput,
        /// Cycle as a comma-separated vertex list.
        #[arg(long, value_name = "V,V,...")]
        cycle: Option<String>,
        /// Check graphs that have a K4 minor too.
        #[arg(long)]
        diagnostic: bool,
        #[arg(long)]
        json: bool,
    },
    /// Removes cutvertices while keeping n, e, girth >= 5 and no K4 minor.
    Reduce2conn {
        #[command(flatten)]
        input: GraphInput,
        /// Apply a single rewrite at this cutvertex.
        #[arg(long, requires_all = ["v1", "v2"])]
        x: Option<usize>,
        #[arg(long, requires = "x")]
        v1: Option<usize>,
        #[arg(long, requires = "x")]
        v2: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive search for the extremal graphs.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        girth: usize,
        /// Print the edge count and then one graph6 string per class.
        #[arg(long)]
        list: bool,
        /// Classes with exactly this many edges instead of the maximum.
        #[arg(long, value_name = "M", conflicts_with = "max_only")]
        count_at: Option<usize>,
        /// Only the maximum edge count.
        #[arg(long)]
        max_only: bool,
        /// Disable the closed-form bound cutoff.
        #[arg(long)]
        no_prune: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        /// Write the classes as a .g6 line file.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Runs the verification suite.
    VerifyPaper {
        /// Run one group: even, girth5, bridges, cutvertex, oracle, recognition.
        #[arg(long, value_name = "GROUP")]
        only: Option<String>,
        /// Catalog file to check instead of the built-in copy.
        #[arg(long, value_name = "PATH")]
        catalog: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Writes each input graph to its own file.
    Export {
        #[command(flatten)]
        input: GraphInput,
        /// Graphviz DOT, one file per graph.
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

/// What the binary prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
}

impl Output {
    fn new(ok: bool, stdout: String) -> Self {
        Output {
            code: if ok { EXIT_OK } else { EXIT_FAIL },
            stdout,
        }
    }
}

/// The vertex limit from `SP_EXTREMAL_MAX_N`, if set.
pub fn env_limit() -> Result<Option<usize>> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => Ok(Some(
            v.trim()
                .parse()
                .with_context(|| format!("{MAX_N_VAR}={v:?}"))?,
        )),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => bail!("{MAX_N_VAR}: {e}"),
    }
}

fn search_limit() -> Result<usize> {
    Ok(env_limit()?.map_or(MAX_SEARCH_N, |m| m.min(MAX_SEARCH_N)))
}

fn load(input: &GraphInput) -> Result<Vec<Graph>> {
    let graphs = input.load()?;
    let limit = env_limit()?.unwrap_or(MAX_VERTICES);
    if let Some(g) = graphs.iter().find(|g| g.order() > limit) {
        bail!(
            "graph {g} has {} vertices; {MAX_N_VAR} allows {limit}",
            g.order()
        );
    }
    Ok(graphs)
}

fn closed_form(n: usize, g: usize) -> Result<usize> {
    Ok(match g {
        5 => bound_girth5(n)?,
        g if g >= 4 && g % 2 == 0 => bound_even_girth(n, g / 2)?,
        _ => bail!("no closed-form bound for girth {g}"),
    })
}

#[derive(Serialize)]
struct Prop1Record<'a> {
    graph: String,
    #[serde(flatten)]
    report: &'a Prop1Report,
}

#[derive(Serialize)]
struct ReduceRecord {
    input: String,
    output: String,
    n: usize,
    e: usize,
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Bound {
            n,
            girth,
            verify,
            json,
        } => {
            if *verify {
                SearchConfig::new(*n, *girth, SearchMode::MaxOnly).validate(search_limit()?)?;
                let r = verify_bound(*n, *girth)?;
                let text = if *json {
                    output::json(&r)
                } else {
                    output::bound_report_text(&r)
                };
                return Ok(Output::new(r.within_bound, text));
            }
            let r = output::BoundRecord {
                n: *n,
                g: *girth,
                bound: closed_form(*n, *girth)?,
            };
            let text = if *json {
                output::json(&r)
            } else {
                output::bound_text(&r)
            };
            Ok(Output::new(true, text))
        }
        Command::Construct {
            spec,
            subdivide: edge,
            json,
        } => {
            let mut g = input::construct(spec)?;
            if let Some(e) = edge {
                match input::vertex_list(e)?.as_slice() {
                    &[u, v] => g = subdivide(&g, (u, v))?,
                    _ => bail!("--subdivide takes two vertices"),
                }
            }
            let text = if *json {
                output::json(&output::check_record(&g))
            } else {
                format!("{}\n", encode_graph6(&g))
            };
            Ok(Output::new(true, text))
        }
        Command::Check {
            input,
            min_girth,
            json,
        } => {
            let mut ok = true;
            let mut text = String::new();
            for g in load(input)? {
                let r = output::check_record(&g);
                ok &= r.k4_minor_free && r.girth.is_none_or(|x| x >= *min_girth);
                text.push_str(&if *json {
                    output::json(&r)
                } else {
                    output::check_text(&r)
                });
            }
            Ok(Output::new(ok, text))
        }
        Command::Bridges {
            input,
            cycle,
            diagnostic,
            json,
        } => {
            let mut ok = true;
            let mut text = String::new();
            for g in load(input)? {
                if let Some(c) = cycle {
                    let d = output::decomposition_record(&decompose(&g, &input::vertex_list(c)?)?);
                    text.push_str(&if *json {
                        output::json(&d)
                    } else {
                        output::decomposition_text(&d)
                    });
                    continue;
                }
                let r = if *diagnostic {
                    diagnose_proposition1(&g)?
                } else {
                    check_proposition1(&g)?
                };
                ok &= r.is_clean();
                let g6 = encode_graph6(&g);
                text.push_str(&if *json {
                    output::json(&Prop1Record {
                        graph: g6,
                        report: &r,
                    })
                } else {
                    output::prop1_text(&g6, &r)
                });
            }
            Ok(Output::new(ok, text))
        }
        Command::Reduce2conn {
            input,
            x,
            v1,
            v2,
            json,
        } => {
            let mut text = String::new();
            for g in load(input)? {
                let h = match (x, v1, v2) {
                    (Some(x), Some(v1), Some(v2)) => cut_reduction(&g, *x, *v1, *v2)?,
                    _ => make_two_connected(&g)?,
                };
                let (a, b) = (encode_graph6(&g), encode_graph6(&h));
                text.push_str(&if *json {
                    output::json(&ReduceRecord {
                        input: a,
                        output: b,
                        n: h.order(),
                        e: h.edge_count(),
                    })
                } else {
                    format!("{b}\n")
                });
            }
            Ok(Output::new(true, text))
        }
        Command::Enumerate {
            n,
            girth,
            list,
            count_at,
            max_only,
            no_prune,
            jobs,
            json,
            out,
        } => {
            let mode = match (count_at, max_only) {
                (Some(m), _) => SearchMode::CountAtEdges(*m),
                (None, true) => SearchMode::MaxOnly,
                (None, false) => SearchMode::MaxAndEnumerate,
            };
            let cfg = SearchConfig::new(*n, *girth, mode)
                .with_jobs(*jobs)
                .with_pruning(!no_prune);
            cfg.validate(search_limit()?)?;
            let r = extremal_search(&cfg)?;
            if let Some(path) = out {
                fs::write(path, output::g6_lines(&r))
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            let text = if *json {
                output::json(&r.record())
            } else {
                output::enumerate_text(&r, *list)
            };
            Ok(Output::new(true, text))
        }
        Command::VerifyPaper {
            only,
            catalog,
            jobs,
            json,
        } => {
            if let Some(o) = only {
                if !GROUPS.contains(&o.as_str()) {
                    bail!("unknown group {o:?}; expected one of {}", GROUPS.join(", "));
                }
            }
            let mut opts = SuiteOptions {
                only: only.clone(),
                jobs: *jobs,
                ..Default::default()
            };
            if let Some(path) = catalog {
                opts.catalog = fs::read_to_string(path)
                    .with_context(|| format!("cannot read {}", path.display()))?;
            }
            let items = suite::run(&opts);
            let ok = items.iter().all(|i| i.pass);
            let text = if *json {
                output::json(&items)
            } else {
                output::suite_text(&items)
            };
            Ok(Output::new(ok, text))
        }
        Command::Export {
            input,
            dot,
            out_dir,
        } => {
            if !dot {
                bail!("choose an export format: --dot");
            }
            fs::create_dir_all(out_dir)
                .with_context(|| format!("cannot create {}", out_dir.display()))?;
            let mut text = String::new();
            for (i, g) in load(input)?.iter().enumerate() {
                let path = out_dir.join(format!("graph{i}.dot"));
                fs::write(&path, to_dot(g))
                    .with_context(|| format!("cannot write {}", path.display()))?;
                text.push_str(&format!("{}\n", path.display()));
            }
            Ok(Output::new(true, text))
        }
    }
}
