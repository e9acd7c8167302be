//! Command-line surface over the library. Verdicts go to standard output,
//! diagnostics to standard error; `--json` swaps the report for a single
//! JSON object. Exit codes: 0 for any successful decision, 2 for input
//! errors, 3 for exceeded search caps.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::decide::{
    self, decide_perm_rep, decide_solvable_rep, decide_tree_rep, oracle_representable,
    reduce_gi_to_abelian, star_tree, CopySource, GiReduction, GroupInput, HomWitness, Verdict,
};
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, automorphism_generators, Graph};
use crate::io::{parse_input, write_graph, write_rtree, write_table, ParsedInput};
use crate::perm::schreier_sims;
use crate::table::{make_standard, StandardKind};
use crate::tree::{root_tree, RootProvenance};

#[derive(Parser)]
#[command(
    name = "grouprep",
    version,
    about = "Group representability on graphs and trees",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit one JSON report object instead of plain text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Automorphism group order and generators of a graph
    Aut { graph: PathBuf },
    /// Test two graphs for isomorphism, printing a witness when found
    Iso { left: PathBuf, right: PathBuf },
    /// Reductions between problems
    Reduce {
        #[command(subcommand)]
        cmd: ReduceCmd,
    },
    /// Representability decision procedures
    Decide {
        #[command(subcommand)]
        cmd: DecideCmd,
    },
    /// Root a tree without changing its automorphism group
    RootTree {
        graph: PathBuf,
        /// Output path for the rooted tree (rtree format)
        #[arg(long)]
        out: PathBuf,
    },
    /// Brute-force ground-truth searches
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
    /// Write a standard group table or graph to a file
    Gen {
        kind: GenKind,
        n: usize,
        /// Output path (table format for groups, graph format for graphs)
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum ReduceCmd {
    /// Build the graph instance whose cyclic-group representability is
    /// equivalent to isomorphism of the two inputs
    GiToAbelian {
        left: PathBuf,
        right: PathBuf,
        /// Output path for the constructed graph
        #[arg(long)]
        out: PathBuf,
        /// Output path for the cyclic group table
        #[arg(long)]
        out_group: PathBuf,
    },
}

#[derive(Subcommand)]
enum DecideCmd {
    /// Prime-factor criterion for a solvable group on a graph
    SolvableRep { group: PathBuf, graph: PathBuf },
    /// Recursive decision for a group on a tree
    TreeRep { group: PathBuf, graph: PathBuf },
    /// Nontrivial homomorphism into the symmetric group on n points
    PermRep { group: PathBuf, n: usize },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Exhaustive representability search with witness
    Rep { group: PathBuf, graph: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Quaternion,
    Star,
    Path,
    Complete,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    match parse_input(path)? {
        ParsedInput::Graph(g) => Ok(g),
        ParsedInput::RootedTree(t) => Ok(t.underlying_graph()),
        other => Err(Error::BadParameter(format!(
            "{} holds a {} input, expected a graph or rooted tree",
            path.display(),
            other.kind()
        ))),
    }
}

fn load_group(path: &Path) -> Result<GroupInput> {
    match parse_input(path)? {
        ParsedInput::Table(t) => Ok(GroupInput::Table(t)),
        ParsedInput::Perm(gs) => Ok(GroupInput::Perm(gs)),
        other => Err(Error::BadParameter(format!(
            "{} holds a {} input, expected a group table or generating set",
            path.display(),
            other.kind()
        ))),
    }
}

fn witness_json(w: &HomWitness) -> serde_json::Value {
    json!({
        "generator_images": w
            .generator_images
            .iter()
            .map(|(e, p)| json!({ "element": e, "image": p.images() }))
            .collect::<Vec<_>>(),
    })
}

fn print_verdict(v: &Verdict, json_mode: bool, elapsed_ms: u128, recursive_calls: Option<usize>) {
    let word = if v.representable {
        "REPRESENTABLE"
    } else {
        "NOT_REPRESENTABLE"
    };
    if json_mode {
        let mut stats = json!({ "elapsed_ms": elapsed_ms });
        if let Some(calls) = recursive_calls {
            stats["recursive_calls"] = json!(calls);
        }
        let report = json!({
            "verdict": word,
            "method": v.method.as_str(),
            "witness": v.witness.as_ref().map(witness_json),
            "stats": stats,
        });
        println!("{report}");
    } else {
        println!("{word}");
        if let Some(w) = &v.witness {
            for (e, p) in &w.generator_images {
                println!("rho[{e}] = {p}");
            }
        }
        if let Some(calls) = recursive_calls {
            eprintln!("recursive calls: {calls}");
        }
    }
}

fn execute(cli: Cli) -> Result<()> {
    let started = Instant::now();
    let json_mode = cli.json;
    match cli.cmd {
        Cmd::Aut { graph } => {
            let g = load_graph(&graph)?;
            let gens = automorphism_generators(&g)?;
            let order = schreier_sims(&gens).order();
            if json_mode {
                let report = json!({
                    "aut_order": order.to_string(),
                    "generators": gens.gens().iter().map(|p| p.images()).collect::<Vec<_>>(),
                    "stats": { "elapsed_ms": started.elapsed().as_millis() },
                });
                println!("{report}");
            } else {
                println!("aut_order {order}");
                for p in gens.gens() {
                    println!("gen {p}");
                }
            }
        }
        Cmd::Iso { left, right } => {
            let a = load_graph(&left)?;
            let b = load_graph(&right)?;
            let witness = are_isomorphic(&a, &b)?;
            let word = if witness.is_some() {
                "ISOMORPHIC"
            } else {
                "NOT_ISOMORPHIC"
            };
            if json_mode {
                let report = json!({
                    "verdict": word,
                    "witness": witness.as_ref().map(|m| json!({ "mapping": m })),
                    "stats": { "elapsed_ms": started.elapsed().as_millis() },
                });
                println!("{report}");
            } else {
                println!("{word}");
                if let Some(m) = witness {
                    let images: Vec<String> = m.iter().map(|v| v.to_string()).collect();
                    println!("map {}", images.join(" "));
                }
            }
        }
        Cmd::Reduce {
            cmd:
                ReduceCmd::GiToAbelian {
                    left,
                    right,
                    out,
                    out_group,
                },
        } => {
            let a = load_graph(&left)?;
            let b = load_graph(&right)?;
            match reduce_gi_to_abelian(&a, &b)? {
                GiReduction::ShortCircuit { isomorphic } => {
                    let word = if isomorphic {
                        "ISOMORPHIC"
                    } else {
                        "NOT_ISOMORPHIC"
                    };
                    if json_mode {
                        let report = json!({
                            "verdict": word,
                            "stats": { "elapsed_ms": started.elapsed().as_millis() },
                        });
                        println!("{report}");
                    } else {
                        println!("{word}");
                    }
                }
                GiReduction::Reduced(reduction) => {
                    std::fs::write(&out, write_graph(&reduction.z))?;
                    std::fs::write(&out_group, write_table(&reduction.group))?;
                    let prov_path = provenance_path(&out);
                    std::fs::write(&prov_path, provenance_text(&reduction))?;
                    eprintln!("wrote {}", out.display());
                    eprintln!("wrote {}", out_group.display());
                    eprintln!("wrote {}", prov_path.display());
                    if json_mode {
                        let report = json!({
                            "p": reduction.p,
                            "complemented": reduction.complemented,
                            "vertices": reduction.z.vertex_count(),
                            "out": out.display().to_string(),
                            "out_group": out_group.display().to_string(),
                            "provenance": prov_path.display().to_string(),
                            "stats": { "elapsed_ms": started.elapsed().as_millis() },
                        });
                        println!("{report}");
                    } else {
                        println!("p = {}", reduction.p);
                    }
                }
            }
        }
        Cmd::Decide { cmd } => match cmd {
            DecideCmd::SolvableRep { group, graph } => {
                let g = load_group(&group)?;
                let x = load_graph(&graph)?;
                let verdict = decide_solvable_rep(&g, &x)?;
                print_verdict(&verdict, json_mode, started.elapsed().as_millis(), None);
            }
            DecideCmd::TreeRep { group, graph } => {
                let g = load_group(&group)?;
                let x = load_graph(&graph)?;
                let decision = decide_tree_rep(&g, &x)?;
                print_verdict(
                    &decision.verdict,
                    json_mode,
                    started.elapsed().as_millis(),
                    Some(decision.recursive_calls),
                );
            }
            DecideCmd::PermRep { group, n } => {
                let g = load_group(&group)?;
                let verdict = decide_perm_rep(&g, n)?;
                print_verdict(&verdict, json_mode, started.elapsed().as_millis(), None);
            }
        },
        Cmd::RootTree { graph, out } => {
            let g = load_graph(&graph)?;
            let (rooted, provenance) = root_tree(&g)?;
            std::fs::write(&out, write_rtree(&rooted))?;
            eprintln!("wrote {}", out.display());
            let (tag, line) = match provenance {
                RootProvenance::FixedVertex { vertex } => {
                    ("fixed_vertex", format!("rooted_at {vertex} fixed_vertex"))
                }
                RootProvenance::DummyEdgeRoot { alpha, beta, root } => (
                    "dummy_edge_root",
                    format!("rooted_at {root} dummy_edge_root alpha={alpha} beta={beta}"),
                ),
            };
            if json_mode {
                let report = json!({
                    "root": rooted.root(),
                    "provenance": tag,
                    "vertices": rooted.vertex_count(),
                    "out": out.display().to_string(),
                    "stats": { "elapsed_ms": started.elapsed().as_millis() },
                });
                println!("{report}");
            } else {
                println!("{line}");
            }
        }
        Cmd::Oracle {
            cmd: OracleCmd::Rep { group, graph },
        } => {
            let g = load_group(&group)?;
            let x = load_graph(&graph)?;
            let verdict = oracle_representable(&g, &x)?;
            print_verdict(&verdict, json_mode, started.elapsed().as_millis(), None);
        }
        Cmd::Gen { kind, n, out } => {
            let (content, what) = generate(kind, n)?;
            std::fs::write(&out, content)?;
            eprintln!("wrote {}", out.display());
            if json_mode {
                let report = json!({
                    "kind": what,
                    "n": n,
                    "out": out.display().to_string(),
                    "stats": { "elapsed_ms": started.elapsed().as_millis() },
                });
                println!("{report}");
            }
        }
    }
    Ok(())
}

fn generate(kind: GenKind, n: usize) -> Result<(String, &'static str)> {
    let table_kind = match kind {
        GenKind::Cyclic => Some((StandardKind::Cyclic, "cyclic")),
        GenKind::Dihedral => Some((StandardKind::Dihedral, "dihedral")),
        GenKind::Symmetric => Some((StandardKind::Symmetric, "symmetric")),
        GenKind::Alternating => Some((StandardKind::Alternating, "alternating")),
        GenKind::Quaternion => Some((StandardKind::Quaternion, "quaternion")),
        _ => None,
    };
    if let Some((std_kind, name)) = table_kind {
        let table = make_standard(std_kind, n)?;
        return Ok((write_table(&table), name));
    }
    let graph = match kind {
        GenKind::Star => star_tree(n)?,
        GenKind::Path => {
            if n == 0 {
                return Err(Error::BadParameter("path needs at least one vertex".into()));
            }
            Graph::path(n)
        }
        GenKind::Complete => {
            if n == 0 {
                return Err(Error::BadParameter(
                    "complete graph needs at least one vertex".into(),
                ));
            }
            Graph::complete(n)
        }
        _ => unreachable!("table kinds handled above"),
    };
    let name = match kind {
        GenKind::Star => "star",
        GenKind::Path => "path",
        GenKind::Complete => "complete",
        _ => unreachable!(),
    };
    Ok((write_graph(&graph), name))
}

fn provenance_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_os_string();
    name.push(".prov");
    PathBuf::from(name)
}

fn provenance_text(reduction: &decide::ReductionOutput) -> String {
    let mut text =
        String::from("# reduction provenance: component -> source copy and vertex offset\n");
    text.push_str(&format!("p {}\n", reduction.p));
    text.push_str(&format!("complemented {}\n", reduction.complemented));
    for c in &reduction.provenance {
        let source = match c.source {
            CopySource::X => "X",
            CopySource::Y => "Y",
        };
        text.push_str(&format!(
            "component {} source {} offset {}\n",
            c.component, source, c.offset
        ));
    }
    text
}
