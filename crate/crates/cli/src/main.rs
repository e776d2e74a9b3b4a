//! `sympoly`: exact invariants of symmetric edge polytopes from the command
//! line. Every subcommand reads graphs as JSON ({"n": .., "edges": [[u,v],..]},
//! edge order normative) or plain "u v" edge-list text, and writes
//! machine-readable JSON to stdout. Exit codes: 0 success, 1 domain error
//! (with {"error", "detail"} on stdout), 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use sympoly_core::ehrhart::{h_star, polar_dual_points};
use sympoly_core::facets::{count_facets, enumerate_facets, face_lattice, incidence_structure};
use sympoly_core::families::FamilySpec;
use sympoly_core::flows::{dual_points_via_mobius, nowhere_zero_flows};
use sympoly_core::genfun::{brute_force_words, gj_cyclic, gj_linear, BadWordSet};
use sympoly_core::graph::Graph;
use sympoly_core::io;
use sympoly_core::kr::{kr_generators, section_vertices, verify_section_equality};
use sympoly_core::verify::paper_suite;
use sympoly_core::volume::{normalized_volume, triangulation};
use sympoly_core::Error;

#[derive(Parser)]
#[command(name = "sympoly", version, about = "Exact invariants of symmetric edge polytopes")]
struct Cli {
    /// Pretty-print the JSON output and report timing on stderr.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate the facets of P_G.
    Facets {
        graph: PathBuf,
        /// Emit only the count.
        #[arg(long)]
        count_only: bool,
        /// Also compute the f-vector from the face lattice.
        #[arg(long)]
        fvector: bool,
    },
    /// Normalized volume via the unimodular triangulation.
    Volume {
        graph: PathBuf,
        /// Write the full triangulation to this file as JSON.
        #[arg(long)]
        triangulation: Option<PathBuf>,
    },
    /// Ehrhart polynomial, h*-vector, gamma-vector and volume.
    Hstar { graph: PathBuf },
    /// Lattice points of the polar dual, by direct labeling count.
    Dualpoints { graph: PathBuf },
    /// Lattice points of the polar dual, by the flat-lattice formula.
    #[command(name = "dualpoints-mobius")]
    DualpointsMobius { graph: PathBuf },
    /// Count nowhere-zero k-flows (input may be a multigraph).
    Flows {
        graph: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: i64,
    },
    /// Goulden-Jackson generating functions for forbidden factors.
    Gj {
        /// Alphabet size.
        #[arg(long)]
        alphabet: usize,
        /// Comma-separated bad words; single characters map to 0..k-1 in
        /// first-appearance order.
        #[arg(long)]
        bad: String,
        /// Cyclic (rooted, seam-wrapping) variant.
        #[arg(long)]
        cyclic: bool,
        /// How many series coefficients to print.
        #[arg(long, default_value_t = 10)]
        orders: usize,
        /// Cross-check the series against the brute-force oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Closed-form invariants for the known families.
    Family {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Kantorovich-Rubinstein generators and the section of P_G.
    Kr {
        graph: PathBuf,
        /// Comma-separated marked vertices.
        #[arg(long)]
        subset: String,
        /// Verify the section theorem on this instance.
        #[arg(long)]
        verify: bool,
    },
    /// Run a verification suite and print a pass/fail table.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Even cycle C_{2k}.
    Cycle {
        #[arg(long)]
        k: u64,
    },
    /// Any tree on n vertices.
    Tree {
        #[arg(long)]
        n: u64,
    },
    /// Complete graph K_n.
    Complete {
        #[arg(long)]
        n: u64,
    },
    /// Wheel K_1 * C_n.
    Wheel {
        #[arg(long)]
        n: u64,
    },
    /// Odd cycles of lengths 2i+1 and 2j+1 joined along an edge.
    #[command(name = "join-odd")]
    JoinOdd {
        #[arg(long)]
        i: u64,
        #[arg(long)]
        j: u64,
    },
    /// Bipartite connected outerplanar graph, parameters read off a drawing:
    /// bounded-region half-lengths, shared-edge count, bridge count.
    Outerplanar {
        /// Comma-separated half-lengths of the bounded regions.
        #[arg(long)]
        a: String,
        #[arg(long, default_value_t = 0)]
        s: u64,
        #[arg(long, default_value_t = 0)]
        t: u64,
    },
}

/// Enumeration caps, overridable through SYMPOLY_BUDGET.
struct Budgets {
    cycles: u64,
    flows: u64,
    words: u64,
    flats_edges: usize,
    face_dim: usize,
    lattice_vertices: usize,
    section_dim: usize,
}

impl Budgets {
    fn from_env() -> Self {
        let mut b = Budgets {
            cycles: sympoly_core::graph::DEFAULT_CYCLE_BUDGET,
            flows: sympoly_core::flows::DEFAULT_FLOW_BUDGET,
            words: sympoly_core::genfun::DEFAULT_WORD_BUDGET,
            flats_edges: sympoly_core::graph::DEFAULT_FLATS_EDGE_CAP,
            face_dim: sympoly_core::facets::DEFAULT_FACE_DIM_CAP,
            lattice_vertices: sympoly_core::ehrhart::DEFAULT_LATTICE_VERTEX_CAP,
            section_dim: sympoly_core::kr::DEFAULT_SECTION_DIM_CAP,
        };
        if let Ok(raw) = std::env::var("SYMPOLY_BUDGET") {
            if let Ok(v) = raw.parse::<u64>() {
                b.cycles = v;
                b.flows = v;
                b.words = v;
                // The flat scan costs 2^|E|, so the cap follows the budget.
                b.flats_edges = (63 - v.leading_zeros() as usize).min(63);
            }
        }
        b
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let budgets = Budgets::from_env();
    if cli.pretty {
        if let Ok(raw) = std::env::var("SYMPOLY_BUDGET") {
            eprintln!("# budget override: SYMPOLY_BUDGET={raw}");
        }
    }
    match run(&cli.cmd, &budgets) {
        Ok((output, extra_failures)) => {
            emit(&output, cli.pretty, started);
            if extra_failures {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let payload = json!({"error": e.kind(), "detail": e.to_string()});
            emit(&payload, cli.pretty, started);
            ExitCode::from(1)
        }
    }
}

fn emit(value: &Value, pretty: bool, started: Instant) {
    if pretty {
        println!("{}", serde_json::to_string_pretty(value).unwrap());
        eprintln!("# elapsed: {} ms", started.elapsed().as_millis());
    } else {
        println!("{value}");
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidGraph(format!("{}: {e}", path.display())))?;
    io::parse_graph(&text)
}

/// Runs a subcommand; the bool marks a verification suite with failures.
fn run(cmd: &Cmd, budgets: &Budgets) -> Result<(Value, bool), Error> {
    match cmd {
        Cmd::Facets {
            graph,
            count_only,
            fvector,
        } => {
            let g = read_graph(graph)?;
            let mut out = serde_json::Map::new();
            if *count_only {
                out.insert("count".into(), io::u64_to_json(count_facets(&g)?));
            } else {
                let facets = enumerate_facets(&g)?;
                out.insert("count".into(), io::u64_to_json(facets.len() as u64));
                out.insert(
                    "facets".into(),
                    Value::Array(
                        facets
                            .iter()
                            .map(|f| Value::Array(f.values().iter().map(|&v| json!(v)).collect()))
                            .collect(),
                    ),
                );
            }
            if *fvector {
                let inc = incidence_structure(&g)?;
                let (fvec, _) = face_lattice(&inc, budgets.face_dim)?;
                out.insert(
                    "fvector".into(),
                    Value::Array(fvec.iter().map(|&x| io::u64_to_json(x)).collect()),
                );
            }
            Ok((Value::Object(out), false))
        }
        Cmd::Volume {
            graph,
            triangulation: tri_path,
        } => {
            let g = read_graph(graph)?;
            let vol = normalized_volume(&g, budgets.cycles)?;
            if let Some(path) = tri_path {
                let tris = triangulation(&g, budgets.cycles)?;
                let payload: Vec<Value> = tris
                    .iter()
                    .map(|t| {
                        json!({
                            "facet": t.facet.values(),
                            "simplices": t.simplices.iter().map(|simplex| {
                                simplex.iter().map(|&rank| {
                                    let (u, v) = g.edges()[rank];
                                    // Sign encodes the orientation inside G_F:
                                    // positive when f increases from the
                                    // smaller to the larger endpoint.
                                    let sign = t.facet.value(v) - t.facet.value(u);
                                    sign * (rank as i64 + 1)
                                }).collect::<Vec<_>>()
                            }).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                std::fs::write(path, serde_json::to_string_pretty(&payload).unwrap())
                    .map_err(|e| Error::InvalidGraph(format!("{}: {e}", path.display())))?;
            }
            Ok((json!({"volume": io::u64_to_json(vol)}), false))
        }
        Cmd::Hstar { graph } => {
            let g = read_graph(graph)?;
            let data = h_star(&g, budgets.lattice_vertices)?;
            Ok((
                json!({
                    "ehrhart": io::rat_poly_to_json(&data.ehrhart),
                    "hstar": io::int_poly_to_json(&data.hstar),
                    "gamma": Value::Array(data.gamma.iter().map(io::bigint_to_json).collect()),
                    "volume": io::bigint_to_json(&data.volume()),
                }),
                false,
            ))
        }
        Cmd::Dualpoints { graph } => {
            let g = read_graph(graph)?;
            Ok((json!({"count": io::u64_to_json(polar_dual_points(&g)?)}), false))
        }
        Cmd::DualpointsMobius { graph } => {
            let g = read_graph(graph)?;
            let flats = g.flats(budgets.flats_edges)?;
            let count = dual_points_via_mobius(&g, &flats)?;
            Ok((json!({"count": io::u64_to_json(count)}), false))
        }
        Cmd::Flows { graph, k } => {
            let text = std::fs::read_to_string(graph)
                .map_err(|e| Error::InvalidGraph(format!("{}: {e}", graph.display())))?;
            let mg = io::parse_multigraph(&text)?;
            let count = nowhere_zero_flows(&mg, *k, budgets.flows)?;
            Ok((json!({"count": io::u64_to_json(count)}), false))
        }
        Cmd::Gj {
            alphabet,
            bad,
            cyclic,
            orders,
            oracle,
        } => {
            let words = parse_bad_words(*alphabet, bad)?;
            let b = BadWordSet::new(*alphabet, words)?;
            let genfun = if *cyclic {
                gj_cyclic(&b)?.genfun
            } else {
                gj_linear(&b)?
            };
            let series = genfun
                .series(*orders)?
                .iter()
                .map(io::rational_to_json)
                .collect::<Vec<_>>();
            let mut out = json!({
                "genfun": io::ratfun_to_json(&genfun),
                "series": series,
            });
            if *oracle {
                let counts: Result<Vec<Value>, Error> = (0..=*orders)
                    .map(|n| brute_force_words(&b, n, *cyclic, budgets.words).map(io::u64_to_json))
                    .collect();
                out["oracle"] = Value::Array(counts?);
            }
            Ok((out, false))
        }
        Cmd::Family { family } => {
            let spec = match family {
                FamilyCmd::Cycle { k } => FamilySpec::Cycle { k: *k },
                FamilyCmd::Tree { n } => FamilySpec::Tree { n: *n },
                FamilyCmd::Complete { n } => FamilySpec::Complete { n: *n },
                FamilyCmd::Wheel { n } => FamilySpec::Wheel { n: *n },
                FamilyCmd::JoinOdd { i, j } => FamilySpec::EdgeJoinOddCycles { i: *i, j: *j },
                FamilyCmd::Outerplanar { a, s, t } => FamilySpec::OuterplanarBipartite {
                    a: parse_u64_list(a)?,
                    s: *s,
                    t: *t,
                },
            };
            let inv = spec.evaluate()?;
            let mut out = serde_json::Map::new();
            if let Some(f) = &inv.facets {
                out.insert("facets".into(), io::bigint_to_json(f));
            }
            if let Some(v) = &inv.volume {
                out.insert("volume".into(), io::bigint_to_json(v));
            }
            if let Some(fv) = &inv.fvector {
                out.insert(
                    "fvector".into(),
                    Value::Array(fv.iter().map(io::bigint_to_json).collect()),
                );
            }
            if let Some(h) = &inv.hstar {
                out.insert("hstar".into(), io::int_poly_to_json(h));
            }
            Ok((Value::Object(out), false))
        }
        Cmd::Kr {
            graph,
            subset,
            verify,
        } => {
            let g = read_graph(graph)?;
            let v1 = parse_usize_list(subset)?;
            let gens = kr_generators(&g, &v1)?;
            let mut out = json!({
                "generators": gens.generators.iter().map(|gen| {
                    json!({
                        "i": gen.i,
                        "j": gen.j,
                        "point": gen.point.iter().map(io::rational_to_json).collect::<Vec<_>>(),
                    })
                }).collect::<Vec<_>>(),
            });
            let verts = section_vertices(&g, &v1, budgets.section_dim)?;
            out["section_vertices"] = Value::Array(
                verts
                    .iter()
                    .map(|v| Value::Array(v.iter().map(io::rational_to_json).collect()))
                    .collect(),
            );
            if *verify {
                out["equal"] = json!(verify_section_equality(&g, &v1, budgets.section_dim)?);
            }
            Ok((out, false))
        }
        Cmd::Verify { suite } => {
            if suite != "paper" {
                return Err(Error::InvalidGraph(format!("unknown suite '{suite}'")));
            }
            let results = paper_suite();
            let all_pass = results.iter().all(|r| r.pass);
            let table: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "claim": r.claim,
                        "pass": r.pass,
                        "detail": r.detail,
                    })
                })
                .collect();
            Ok((
                json!({"suite": "paper", "results": table, "all_pass": all_pass}),
                !all_pass,
            ))
        }
    }
}

/// Splits "+-,-+,000" into words, mapping each distinct character to the
/// next symbol index in order of first appearance.
fn parse_bad_words(alphabet: usize, raw: &str) -> Result<Vec<Vec<u8>>, Error> {
    let mut mapping: Vec<char> = Vec::new();
    let mut words = Vec::new();
    for chunk in raw.split(',').filter(|c| !c.is_empty()) {
        let mut word = Vec::new();
        for ch in chunk.chars() {
            let idx = match mapping.iter().position(|&c| c == ch) {
                Some(i) => i,
                None => {
                    mapping.push(ch);
                    mapping.len() - 1
                }
            };
            word.push(idx as u8);
        }
        words.push(word);
    }
    if mapping.len() > alphabet {
        return Err(Error::InvalidBadWordSet(format!(
            "{} distinct symbols exceed alphabet size {alphabet}",
            mapping.len()
        )));
    }
    Ok(words)
}

fn parse_u64_list(raw: &str) -> Result<Vec<u64>, Error> {
    raw.split(',')
        .filter(|c| !c.is_empty())
        .map(|c| {
            c.trim()
                .parse()
                .map_err(|_| Error::InvalidGraph(format!("bad integer '{c}'")))
        })
        .collect()
}

fn parse_usize_list(raw: &str) -> Result<Vec<usize>, Error> {
    raw.split(',')
        .filter(|c| !c.is_empty())
        .map(|c| {
            c.trim()
                .parse()
                .map_err(|_| Error::InvalidGraph(format!("bad vertex index '{c}'")))
        })
        .collect()
}
