//! Command-line surface: `check`, `aligned-pair`, `long-cycle`, `oracle`,
//! `gen`, `verify`.
//!
//! One JSON object goes to stdout, diagnostics go to stderr. Exit codes:
//! 0 success, 1 contract or verification failure, 2 usage error, 3 an
//! internal assertion fired (the constructive algorithms disagreed with
//! their own invariants, which should never happen on valid input).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use aligned_cycles_core::{
    aligned_pair, aligned_tuple_exists, analyze, brute_longest_cycle, generate, long_cycle,
    max_aligned_disjoint_paths, Error, Family, GenSpec, Graph, OracleBudget, Path,
    CycleCertificate,
};

#[derive(Parser)]
#[command(
    name = "aligned-cycles",
    about = "Aligned disjoint path pairs and certified long cycles in 2-connected graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Report connectivity, cut vertices, and 2-connectivity
    Check {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Extract an aligned internally disjoint path pair for (path, z)
    AlignedPair {
        #[arg(long)]
        graph: PathBuf,
        /// Base path as comma-separated vertex ids, e.g. "0,1,2"
        #[arg(long)]
        path: String,
        /// Target vertex for the first path
        #[arg(long)]
        z: usize,
    },
    /// Extract a cycle of length at least min(n, 2*delta) with a certificate
    LongCycle {
        #[arg(long)]
        graph: PathBuf,
        /// Include the improvement trace in the certificate JSON
        #[arg(long)]
        emit_trace: bool,
        /// Write a DOT rendering with the cycle highlighted
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Exhaustive desk-scale oracles
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
    /// Generate a named or random graph family
    Gen {
        /// cycle | complete | complete_bipartite | theta | random_2conn
        #[arg(long)]
        family: String,
        /// Comma-separated integer parameters, e.g. "20,30"
        #[arg(long)]
        params: String,
        /// RNG seed (ALIGNED_CYCLES_SEED overrides the default of 0)
        #[arg(long)]
        seed: Option<u64>,
        /// Write the edge list here; without it the edge list goes to stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-validate a long-cycle certificate against a graph
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest instance the oracle will accept
    #[arg(long)]
    max_n: Option<usize>,
    /// Wall-clock cap in milliseconds
    #[arg(long, default_value_t = 30_000)]
    max_millis: u64,
}

impl BudgetArgs {
    fn to_budget(&self, default_max_n: usize) -> OracleBudget {
        OracleBudget {
            max_n: self.max_n.unwrap_or(default_max_n),
            max_millis: self.max_millis,
        }
    }
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Exact longest cycle by exhaustive enumeration
    LongestCycle {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Existence of pairwise internally disjoint aligned paths to terminals
    AlignedTuple {
        #[arg(long)]
        graph: PathBuf,
        /// Base path as comma-separated vertex ids
        #[arg(long)]
        path: String,
        /// Terminals as comma-separated vertex ids, e.g. "2,2"
        #[arg(long)]
        terminals: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Maximum number of pairwise disjoint aligned x,y-paths
    MaxAligned {
        #[arg(long)]
        graph: PathBuf,
        /// Base path as comma-separated vertex ids
        #[arg(long)]
        path: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

fn load_graph(path: &PathBuf) -> Result<Graph, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::contract(format!("cannot read {}: {e}", path.display())))?;
    Graph::parse(&text)
}

fn parse_id_list(text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::contract(format!("bad vertex id {tok:?}")))
        })
        .collect()
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.cmd {
        Cmd::Check { graph } => {
            let g = load_graph(&graph)?;
            let r = analyze(&g);
            println!(
                "{}",
                json!({
                    "connected": r.connected,
                    "cut_vertices": r.cut_vertices,
                    "two_connected": r.two_connected,
                })
            );
            Ok(if r.two_connected { 0 } else { 1 })
        }
        Cmd::AlignedPair { graph, path, z } => {
            let g = load_graph(&graph)?;
            let ids = parse_id_list(&path)?;
            let base = Path::new(&g, ids)?;
            let pair = aligned_pair(&g, &base, z)?;
            pair.verify(&g)
                .map_err(|r| Error::internal("emitted pair failed verification", r))?;
            println!(
                "{}",
                json!({
                    "p1": pair.p1().vertices(),
                    "p2": pair.p2().vertices(),
                    "checked": true,
                })
            );
            Ok(0)
        }
        Cmd::LongCycle {
            graph,
            emit_trace,
            dot,
        } => {
            let g = load_graph(&graph)?;
            let cert = long_cycle(&g)?;
            if let Err(reason) = cert.verify(&g) {
                eprintln!("certificate failed re-verification: {reason}");
                return Ok(1);
            }
            if let Some(out) = dot {
                let rendered = g.to_dot(Some(&cert.cycle), None);
                fs::write(&out, rendered)
                    .map_err(|e| Error::contract(format!("cannot write {}: {e}", out.display())))?;
            }
            let text = if emit_trace {
                cert.to_json_with_trace()
            } else {
                cert.to_json()
            };
            println!("{text}");
            Ok(0)
        }
        Cmd::Oracle { cmd } => run_oracle(cmd),
        Cmd::Gen {
            family,
            params,
            seed,
            out,
        } => {
            let env_seed = std::env::var("ALIGNED_CYCLES_SEED")
                .ok()
                .and_then(|s| s.parse::<u64>().ok());
            let spec = GenSpec {
                family: Family::parse(&family)?,
                params: parse_id_list(&params)?,
                seed: seed.or(env_seed).unwrap_or(0),
            };
            let g = generate(&spec)?;
            let edge_list = g.to_edge_list();
            match out {
                Some(path) => {
                    fs::write(&path, &edge_list).map_err(|e| {
                        Error::contract(format!("cannot write {}: {e}", path.display()))
                    })?;
                    println!(
                        "{}",
                        json!({
                            "family": spec.family.name(),
                            "params": spec.params,
                            "seed": spec.seed,
                            "n": g.n(),
                            "m": g.edge_count(),
                            "out": path.display().to_string(),
                        })
                    );
                }
                None => print!("{edge_list}"),
            }
            Ok(0)
        }
        Cmd::Verify { graph, certificate } => {
            let g = load_graph(&graph)?;
            let text = fs::read_to_string(&certificate).map_err(|e| {
                Error::contract(format!("cannot read {}: {e}", certificate.display()))
            })?;
            let cert = CycleCertificate::from_json(&text)?;
            match cert.verify(&g) {
                Ok(()) => {
                    println!("{}", json!({ "valid": true, "reason": null }));
                    Ok(0)
                }
                Err(reason) => {
                    println!("{}", json!({ "valid": false, "reason": reason }));
                    Ok(1)
                }
            }
        }
    }
}

fn run_oracle(cmd: OracleCmd) -> Result<i32, Error> {
    match cmd {
        OracleCmd::LongestCycle { graph, budget } => {
            let g = load_graph(&graph)?;
            let b = budget.to_budget(OracleBudget::cycles().max_n);
            let (len, witness) = brute_longest_cycle(&g, &b)?;
            println!(
                "{}",
                json!({
                    "length": len,
                    "cycle": witness.map(|c| c.into_vec()),
                })
            );
            Ok(0)
        }
        OracleCmd::AlignedTuple {
            graph,
            path,
            terminals,
            budget,
        } => {
            let g = load_graph(&graph)?;
            let base = Path::new(&g, parse_id_list(&path)?)?;
            let terminals = parse_id_list(&terminals)?;
            let b = budget.to_budget(OracleBudget::tuples().max_n);
            let exists = aligned_tuple_exists(&g, &base, base.first(), &terminals, &b)?;
            println!("{}", json!({ "exists": exists }));
            Ok(0)
        }
        OracleCmd::MaxAligned { graph, path, budget } => {
            let g = load_graph(&graph)?;
            let base = Path::new(&g, parse_id_list(&path)?)?;
            let b = budget.to_budget(OracleBudget::tuples().max_n);
            let max = max_aligned_disjoint_paths(&g, &base, &b)?;
            println!("{}", json!({ "max": max }));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("{err}");
            if err.is_internal() {
                ExitCode::from(3)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
