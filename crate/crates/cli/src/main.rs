//! `tropdiv`: command-line front end. Results go to stdout as JSON, a short
//! summary to stderr. Exit status 0 on success, 1 on domain errors, 2 on
//! validation errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use tropdiv::brill_noether::{self, CliffordIndex, Gonality};
use tropdiv::chain::{self, ChainOfLoops};
use tropdiv::json::{
    divisor_to_json, format_divisor_short, format_point, graph_to_json, parse_divisor, parse_graph,
    parse_pl, parse_point, pl_to_json,
};
use tropdiv::rational::{self, Rational};
use tropdiv::{
    break_divisors, finite, independence, jacobian, metric, rank, torus, worked, zhang, Divisor,
    Error, MetricGraph, Result,
};

#[derive(Parser)]
#[command(
    name = "tropdiv",
    version,
    about = "Divisors, ranks and Jacobians of finite and metric graphs"
)]
struct Cli {
    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write a run manifest (input digests, seed, version, output) here.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file in the JSON graph format.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args)]
struct DivisorArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// Divisor: short form `v1:2,e1@1/3:-1`, inline JSON, or a JSON file.
    #[arg(long)]
    divisor: String,
}

#[derive(Subcommand)]
enum Command {
    /// Genus and weighted genus.
    Genus(GraphArg),
    /// Canonical divisor `sum (val(v) - 2) v`.
    Canonical {
        #[command(flatten)]
        graph: GraphArg,
        /// Use the vertex-weighted canonical divisor.
        #[arg(long)]
        weighted: bool,
    },
    /// Reduced divisor with respect to a base point.
    Reduce {
        #[command(flatten)]
        div: DivisorArgs,
        /// Base point: a vertex name or `edge@offset`.
        #[arg(long)]
        at: String,
    },
    /// Linear equivalence of two divisors.
    Equiv {
        #[command(flatten)]
        div: DivisorArgs,
        #[arg(long)]
        other: String,
    },
    /// Fire a vertex set, or add the divisor of a function file.
    Fire {
        #[command(flatten)]
        div: DivisorArgs,
        /// Comma-separated vertex names.
        #[arg(long, conflicts_with = "function")]
        set: Option<String>,
        /// Piecewise-linear function file.
        #[arg(long)]
        function: Option<PathBuf>,
    },
    /// Rank of a divisor.
    Rank {
        #[command(flatten)]
        div: DivisorArgs,
        /// Finite-graph rank on the model (vertex divisors only).
        #[arg(long)]
        finite: bool,
        /// Vertex-weighted rank.
        #[arg(long, conflicts_with = "finite")]
        weighted: bool,
    },
    /// Riemann-Roch identity for a divisor.
    RrCheck {
        #[command(flatten)]
        div: DivisorArgs,
        #[arg(long)]
        finite: bool,
        #[arg(long, conflicts_with = "finite")]
        weighted: bool,
    },
    /// Clifford index over grid divisors.
    Cliff {
        #[command(flatten)]
        graph: GraphArg,
        /// Grid: vertices plus `k/n` points on every edge.
        #[arg(long, default_value_t = 2)]
        grid: u32,
    },
    /// Divisorial gonality over grid divisors.
    Gonality {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        max_degree: i64,
        #[arg(long, default_value_t = 2)]
        grid: u32,
    },
    /// Brill-Noether rank of the finite model.
    BnRank {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        d: i64,
    },
    /// Whether a point is Weierstrass, or all Weierstrass grid points.
    Weierstrass {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        point: Option<String>,
        #[arg(long, default_value_t = 2)]
        grid: u32,
    },
    /// Invariant factors of the sandpile group.
    Jacobian(GraphArg),
    /// Spanning-tree count by determinant and by enumeration.
    Trees {
        #[command(flatten)]
        graph: GraphArg,
        /// Also list the trees.
        #[arg(long)]
        list: bool,
    },
    /// Cycle basis and Gram matrix of the period lattice.
    PeriodGram(GraphArg),
    /// Abel-Jacobi image of a divisor.
    AbelJacobi {
        #[command(flatten)]
        div: DivisorArgs,
        #[arg(long)]
        base: String,
    },
    /// Canonical measure of a vertex-weighted metric graph.
    Zhang {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = MeasureFormat::Json)]
        format: MeasureFormat,
    },
    /// Break divisors.
    Break {
        #[command(subcommand)]
        action: BreakAction,
    },
    /// Brill-Noether cells of a generic chain of loops.
    Chain {
        #[command(subcommand)]
        action: ChainAction,
    },
    /// Tropical dependence of a family of functions.
    Tropdep {
        #[command(flatten)]
        graph: GraphArg,
        /// Function files, one per function.
        #[arg(long = "function", required = true)]
        functions: Vec<PathBuf>,
        /// Comma-separated shifts, one per function.
        #[arg(long)]
        shifts: String,
        /// Also compute the support of `div(min) + D` for this divisor.
        #[arg(long)]
        divisor: Option<String>,
    },
    /// Run the worked-example fixtures.
    Examples {
        #[arg(long)]
        id: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureFormat {
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum BreakAction {
    /// All integral break divisors of the model.
    Enumerate(GraphArg),
    /// The break divisor equivalent to a degree-g vertex divisor.
    Rep(DivisorArgs),
    /// Whether a divisor is a break divisor, and universal reducedness.
    Check(DivisorArgs),
}

#[derive(Args)]
struct CellArgs {
    #[arg(long)]
    g: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    d: usize,
}

#[derive(Subcommand)]
enum ChainAction {
    /// Tableaux and lattice paths of all cells.
    Cells(CellArgs),
    /// Number of maximal cells, by formula and enumeration.
    Count(CellArgs),
    /// A random divisor in one cell, with its rank.
    Sample {
        #[command(flatten)]
        cell: CellArgs,
        /// Index into the cell list.
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Tableau of the residual class `K - D`.
    Adjoint {
        #[command(flatten)]
        cell: CellArgs,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct RunManifest<'a> {
    subcommand: String,
    argv: Vec<String>,
    inputs: &'a [InputDigest],
    seed: u64,
    version: &'static str,
    output: &'a Value,
}

/// Reads input files and remembers their digests for the manifest.
#[derive(Default)]
struct Inputs {
    digests: Vec<InputDigest>,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = fs::read(path)
            .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
        self.digests.push(InputDigest {
            path: path.display().to_string(),
            sha256: format!("{:x}", Sha256::digest(&bytes)),
        });
        String::from_utf8(bytes)
            .map_err(|_| Error::Validation(format!("{} is not UTF-8", path.display())))
    }

    fn graph(&mut self, arg: &GraphArg) -> Result<MetricGraph> {
        let text = self.read(&arg.graph)?;
        parse_graph(&text).map_err(|e| match e {
            Error::Validation(m) => Error::Validation(format!("{}: {m}", arg.graph.display())),
            other => other,
        })
    }

    /// Inline text unless it names an existing file.
    fn divisor(&mut self, g: &MetricGraph, text: &str) -> Result<Divisor> {
        let path = Path::new(text);
        if path.is_file() {
            let contents = self.read(path)?;
            return parse_divisor(g, &contents);
        }
        parse_divisor(g, text)
    }
}

/// Output plus a one-line human summary.
struct Report {
    value: Value,
    summary: String,
    /// Raw text printed instead of JSON (CSV and DOT output).
    raw: Option<String>,
    failed: bool,
}

impl Report {
    fn json(value: Value, summary: impl Into<String>) -> Self {
        Report {
            value,
            summary: summary.into(),
            raw: None,
            failed: false,
        }
    }
}

fn divisor_value(g: &MetricGraph, d: &Divisor) -> Value {
    json!({ "divisor": divisor_to_json(g, d), "short": format_divisor_short(g, d), "degree": d.degree() })
}

fn rationals(xs: &[Rational]) -> Value {
    Value::from(xs.iter().map(rational::format).collect::<Vec<_>>())
}

fn matrix(rows: &[Vec<Rational>]) -> Value {
    Value::from(rows.iter().map(|r| rationals(r)).collect::<Vec<_>>())
}

fn point_list(g: &MetricGraph, ps: &[tropdiv::GraphPoint]) -> Value {
    Value::from(ps.iter().map(|p| format_point(g, p)).collect::<Vec<_>>())
}

fn edge_names(g: &MetricGraph, es: &[tropdiv::EdgeId]) -> Value {
    Value::from(
        es.iter()
            .map(|&e| g.model().edge_name(e).to_string())
            .collect::<Vec<_>>(),
    )
}

fn rank_of(g: &MetricGraph, d: &Divisor, finite: bool, weighted: bool) -> Result<i64> {
    if weighted {
        rank::weighted_rank(g, d)
    } else if finite {
        rank::rank_finite_value(g.model(), d)
    } else {
        rank::rank_metric_value(g, d)
    }
}

fn cell_value(cell: &chain::Cell) -> Value {
    let steps: Vec<String> = cell
        .path
        .steps
        .iter()
        .map(|s| match s {
            chain::Step::Down => "down".to_string(),
            chain::Step::Up(j) => format!("e{j}"),
            chain::Step::Linger => "linger".to_string(),
        })
        .collect();
    json!({ "tableau": cell.tableau.rows, "steps": steps, "dimension": cell.dimension() })
}

fn pick_cell(c: &CellArgs, index: usize) -> Result<(ChainOfLoops, chain::Cell)> {
    let cells = chain::enumerate_cells(c.g, c.r, c.d)?;
    let n = cells.len();
    let cell = cells
        .into_iter()
        .nth(index)
        .ok_or_else(|| Error::Validation(format!("cell index {index} out of range ({n} cells)")))?;
    Ok((ChainOfLoops::generic(c.g)?, cell))
}

fn run(cli: &Cli, inputs: &mut Inputs) -> Result<Report> {
    Ok(match &cli.command {
        Command::Genus(a) => {
            let g = inputs.graph(a)?;
            Report::json(
                json!({ "genus": g.genus(), "weighted_genus": g.weighted_genus() }),
                format!("genus {}", g.genus()),
            )
        }
        Command::Canonical { graph, weighted } => {
            let g = inputs.graph(graph)?;
            let k = if *weighted {
                g.weighted_canonical()
            } else {
                g.canonical_divisor()
            };
            Report::json(
                divisor_value(&g, &k),
                format!("K = {}", format_divisor_short(&g, &k)),
            )
        }
        Command::Reduce { div, at } => {
            let g = inputs.graph(&div.graph)?;
            let d = inputs.divisor(&g, &div.divisor)?;
            let q = parse_point(&g, at)?;
            let red = metric::reduce(&g, &d, &q)?;
            let trace: Vec<Value> = red.trace.iter().map(|s| point_list(&g, s)).collect();
            let mut v = divisor_value(&g, &red.divisor);
            v["witness"] = pl_to_json(&g, &red.witness);
            v["trace"] = Value::from(trace);
            Report::json(v, format_divisor_short(&g, &red.divisor))
        }
        Command::Equiv { div, other } => {
            let g = inputs.graph(&div.graph)?;
            let a = inputs.divisor(&g, &div.divisor)?;
            let b = inputs.divisor(&g, other)?;
            let eq = metric::is_equivalent(&g, &a, &b)?;
            Report::json(json!({ "equivalent": eq }), format!("equivalent: {eq}"))
        }
        Command::Fire { div, set, function } => {
            let g = inputs.graph(&div.graph)?;
            let d = inputs.divisor(&g, &div.divisor)?;
            let out = match (set, function) {
                (Some(set), None) => {
                    let vs = set
                        .split(',')
                        .map(|n| {
                            g.model()
                                .vertex_by_name(n.trim())
                                .ok_or_else(|| Error::Validation(format!("unknown vertex {n:?}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    finite::chip_fire(g.model(), &d, &vs)?
                }
                (None, Some(path)) => {
                    let f = parse_pl(&g, &inputs.read(path)?)?;
                    &d + &f.div(&g)
                }
                _ => {
                    return Err(Error::Validation(
                        "give exactly one of --set and --function".into(),
                    ))
                }
            };
            Report::json(divisor_value(&g, &out), format_divisor_short(&g, &out))
        }
        Command::Rank {
            div,
            finite,
            weighted,
        } => {
            let g = inputs.graph(&div.graph)?;
            let d = inputs.divisor(&g, &div.divisor)?;
            let r = rank_of(&g, &d, *finite, *weighted)?;
            Report::json(
                json!({ "rank": r, "degree": d.degree() }),
                format!("rank {r}"),
            )
        }
        Command::RrCheck {
            div,
            finite,
            weighted,
        } => {
            let g = inputs.graph(&div.graph)?;
            let d = inputs.divisor(&g, &div.divisor)?;
            let c = if *weighted {
                rank::weighted_riemann_roch_check(&g, &d)?
            } else if *finite {
                rank::riemann_roch_check_finite(g.model(), &d)?
            } else {
                rank::riemann_roch_check(&g, &d)?
            };
            Report {
                value: json!({
                    "rank": c.rank, "adjoint_rank": c.adjoint_rank, "degree": c.degree,
                    "genus": c.genus, "holds": c.holds
                }),
                summary: format!(
                    "r(D) - r(K - D) = {} - {}, deg - g + 1 = {}",
                    c.rank,
                    c.adjoint_rank,
                    c.degree - c.genus + 1
                ),
                raw: None,
                failed: !c.holds,
            }
        }
        Command::Cliff { graph, grid } => {
            let g = inputs.graph(graph)?;
            let points = brill_noether::grid_points(&g, *grid)?;
            match brill_noether::clifford_index(&g, &points)? {
                CliffordIndex::Computed { value, witness } => Report::json(
                    json!({ "clifford_index": value, "witness": divisor_to_json(&g, &witness), "conventional": false }),
                    format!("Clifford index {value}"),
                ),
                CliffordIndex::NoQualifyingDivisor { conventional } => Report::json(
                    json!({ "clifford_index": conventional, "witness": null, "conventional": true }),
                    format!("no qualifying divisor; conventional value {conventional}"),
                ),
            }
        }
        Command::Gonality {
            graph,
            max_degree,
            grid,
        } => {
            let g = inputs.graph(graph)?;
            let points = brill_noether::grid_points(&g, *grid)?;
            match brill_noether::gonality(&g, *max_degree, &points)? {
                Gonality::Found { degree, witness } => Report::json(
                    json!({ "gonality": degree, "witness": divisor_to_json(&g, &witness) }),
                    format!("gonality {degree}"),
                ),
                Gonality::ExceedsBound { max_degree } => Report::json(
                    json!({ "gonality": null, "exceeds": max_degree }),
                    format!("no rank-one grid divisor of degree at most {max_degree}"),
                ),
            }
        }
        Command::BnRank { graph, r, d } => {
            let g = inputs.graph(graph)?;
            let bn = brill_noether::brill_noether_rank(g.model(), *r, *d)?;
            let classes: Vec<Value> = bn.classes.iter().map(|c| divisor_to_json(&g, c)).collect();
            Report::json(
                json!({
                    "w": bn.value,
                    "classes": classes,
                    "failing": bn.failing.as_ref().map(|f| divisor_to_json(&g, f)),
                }),
                format!("w^{r}_{d} = {}", bn.value),
            )
        }
        Command::Weierstrass { graph, point, grid } => {
            let g = inputs.graph(graph)?;
            match point {
                Some(p) => {
                    let p = parse_point(&g, p)?;
                    let w = rank::is_weierstrass_point(&g, &p)?;
                    Report::json(
                        json!({ "point": format_point(&g, &p), "weierstrass": w }),
                        format!("Weierstrass: {w}"),
                    )
                }
                None => {
                    let points = brill_noether::grid_points(&g, *grid)?;
                    let ws = brill_noether::weierstrass_points(&g, &points)?;
                    Report::json(
                        json!({ "weierstrass_points": point_list(&g, &ws), "grid_size": points.len() }),
                        format!(
                            "{} of {} grid points are Weierstrass",
                            ws.len(),
                            points.len()
                        ),
                    )
                }
            }
        }
        Command::Jacobian(a) => {
            let g = inputs.graph(a)?;
            let s = jacobian::jacobian_structure(g.model());
            let factors: Vec<String> = s.invariant_factors.iter().map(|f| f.to_string()).collect();
            Report::json(
                json!({
                    "invariant_factors": factors,
                    "order": s.order.to_string(),
                    "deleted_vertex": g.model().vertex_name(jacobian::deleted_vertex(g.model())),
                }),
                format!("order {}", s.order),
            )
        }
        Command::Trees { graph, list } => {
            let g = inputs.graph(graph)?;
            let count = jacobian::spanning_tree_count(g.model())?;
            let mut v = json!({
                "determinant": count.determinant.to_string(),
                "enumerated": count.enumerated.to_string(),
            });
            if *list {
                let trees: Vec<Value> = jacobian::spanning_trees(g.model())
                    .iter()
                    .map(|t| edge_names(&g, t))
                    .collect();
                v["trees"] = Value::from(trees);
            }
            Report::json(v, format!("{} spanning trees", count.enumerated))
        }
        Command::PeriodGram(a) => {
            let g = inputs.graph(a)?;
            let lattice = torus::PeriodLattice::new(&g);
            let tree: Vec<_> = g.model().edges().filter(|e| lattice.tree[e.0]).collect();
            Report::json(
                json!({
                    "tree": edge_names(&g, &tree),
                    "cycle_edges": edge_names(&g, &lattice.cycle_edges),
                    "cycles": lattice.cycles,
                    "gram": matrix(&lattice.gram),
                    "determinant": rational::format(&lattice.determinant()),
                }),
                format!(
                    "genus {}, covolume squared {}",
                    lattice.genus(),
                    rational::format(&lattice.determinant())
                ),
            )
        }
        Command::AbelJacobi { div, base } => {
            let g = inputs.graph(&div.graph)?;
            let d = inputs.divisor(&g, &div.divisor)?;
            let base = parse_point(&g, base)?;
            let lattice = torus::PeriodLattice::new(&g);
            let aj = torus::abel_jacobi(&g, &lattice, &base, &d)?;
            Report::json(
                json!({
                    "coordinates": rationals(&aj.coordinates),
                    "lattice_coordinates": rationals(&aj.lattice_coordinates),
                    "reduced": rationals(&aj.reduced),
                    "in_lattice": aj.in_lattice,
                }),
                format!("in lattice: {}", aj.in_lattice),
            )
        }
        Command::Zhang { graph, format } => {
            let g = inputs.graph(graph)?;
            let z = zhang::zhang_measure(&g)?;
            let m = g.model();
            let edges: Vec<Value> = m
                .edges()
                .map(|e| {
                    json!({
                        "edge": m.edge_name(e),
                        "mass": rational::format(&z.edge_mass[e.0]),
                        "density": rational::format(&z.edge_density[e.0]),
                    })
                })
                .collect();
            let atoms: Vec<Value> = m
                .vertices()
                .filter(|v| z.vertex_atoms[v.0] != rational::int(0))
                .map(|v| json!({ "vertex": m.vertex_name(v), "mass": rational::format(&z.vertex_atoms[v.0]) }))
                .collect();
            let mut r = Report::json(
                json!({ "edges": edges, "atoms": atoms, "total_mass": rational::format(&z.total_mass()) }),
                format!("total mass {}", rational::format(&z.total_mass())),
            );
            r.raw = match format {
                MeasureFormat::Json => None,
                MeasureFormat::Csv => Some(z.to_csv(&g)),
                MeasureFormat::Dot => Some(z.to_dot(&g)),
            };
            r
        }
        Command::Break { action } => match action {
            BreakAction::Enumerate(a) => {
                let g = inputs.graph(a)?;
                let all = break_divisors::enumerate_integral_break_divisors(g.model());
                let list: Vec<Value> = all.iter().map(|d| divisor_to_json(&g, d)).collect();
                Report::json(
                    json!({ "count": all.len(), "divisors": list }),
                    format!("{} integral break divisors", all.len()),
                )
            }
            BreakAction::Rep(a) => {
                let g = inputs.graph(&a.graph)?;
                let d = inputs.divisor(&g, &a.divisor)?;
                let rep = break_divisors::break_representative(g.model(), &d)?;
                let trees: Vec<Value> = rep.trees.iter().map(|t| edge_names(&g, t)).collect();
                let mut v = divisor_value(&g, &rep.divisor);
                v["trees"] = Value::from(trees);
                Report::json(v, format_divisor_short(&g, &rep.divisor))
            }
            BreakAction::Check(a) => {
                let g = inputs.graph(&a.graph)?;
                let d = inputs.divisor(&g, &a.divisor)?;
                let is_break = break_divisors::is_break_divisor(&g, &d)?;
                let mut v = json!({ "break": is_break });
                if d.is_effective() && d.degree() == g.genus() as i64 {
                    let u = break_divisors::universal_reducedness(&g, &d)?;
                    v["universally_reduced"] =
                        json!({ "topological": u.topological, "dhar": u.dhar });
                }
                Report::json(v, format!("break divisor: {is_break}"))
            }
        },
        Command::Chain { action } => match action {
            ChainAction::Cells(c) => {
                let cells = chain::enumerate_cells(c.g, c.r, c.d)?;
                let list: Vec<Value> = cells.iter().map(cell_value).collect();
                Report::json(
                    json!({ "rho": chain::brill_noether_number(c.g as i64, c.r as i64, c.d as i64), "cells": list }),
                    format!("{} cells", cells.len()),
                )
            }
            ChainAction::Count(c) => {
                let count = chain::count_cells(c.g, c.r, c.d)?;
                let mut r = Report::json(
                    json!({ "formula": count.formula.to_string(), "enumerated": count.enumerated }),
                    format!("{} cells (formula {})", count.enumerated, count.formula),
                );
                r.failed = count.formula.to_string() != count.enumerated.to_string();
                r
            }
            ChainAction::Sample { cell, index } => {
                let (chain, c) = pick_cell(cell, *index)?;
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                let d = chain::sample_cell(&chain, &c, &mut rng)?;
                let r = chain.rank(&d)?;
                let mut v = divisor_value(chain.graph(), &d);
                v["rank"] = r.into();
                v["cell"] = cell_value(&c);
                v["graph"] = graph_to_json(chain.graph());
                let mut report = Report::json(v, format!("rank {r}"));
                report.failed = r != cell.r as i64;
                report
            }
            ChainAction::Adjoint { cell, index } => {
                let (chain, c) = pick_cell(cell, *index)?;
                let free: Vec<Rational> = (0..c.dimension())
                    .map(|k| rational::frac(2 + k as i64, 7 + 2 * k as i64))
                    .collect();
                let d = chain::cell_divisor(&chain, &c, &free)?;
                let check = chain::adjoint_check(&chain, &c, &d)?;
                let transpose = check.is_transpose();
                let mut report = Report::json(
                    json!({
                        "tableau": check.tableau.rows,
                        "adjoint": check.adjoint.as_ref().map(|t| t.rows.clone()),
                        "is_transpose": transpose,
                    }),
                    format!("adjoint is transpose: {transpose}"),
                );
                report.failed = !transpose;
                report
            }
        },
        Command::Tropdep {
            graph,
            functions,
            shifts,
            divisor,
        } => {
            let g = inputs.graph(graph)?;
            let fs = functions
                .iter()
                .map(|p| parse_pl(&g, &inputs.read(p)?))
                .collect::<Result<Vec<_>>>()?;
            let bs = shifts
                .split(',')
                .map(rational::parse)
                .collect::<Result<Vec<_>>>()?;
            let dependent = independence::verify_tropical_dependence(&g, &fs, &bs)?;
            let mut v = json!({ "dependent": dependent });
            if let Some(text) = divisor {
                let d = inputs.divisor(&g, text)?;
                let m = independence::min_combination(&g, &fs, &bs, &d)?;
                v["min"] = pl_to_json(&g, &m.theta);
                v["support"] = point_list(&g, &m.support_direct);
                v["support_agrees"] = m.agree().into();
            }
            Report::json(v, format!("tropically dependent: {dependent}"))
        }
        Command::Examples { id } => {
            let reports = worked::run(id.as_deref())?;
            let failed = reports.iter().filter(|r| !r.pass).count();
            let mut r = Report::json(
                serde_json::to_value(&reports).expect("reports serialize"),
                format!(
                    "{} of {} examples pass",
                    reports.len() - failed,
                    reports.len()
                ),
            );
            r.failed = failed > 0;
            r
        }
    })
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Genus(_) => "genus",
        Command::Canonical { .. } => "canonical",
        Command::Reduce { .. } => "reduce",
        Command::Equiv { .. } => "equiv",
        Command::Fire { .. } => "fire",
        Command::Rank { .. } => "rank",
        Command::RrCheck { .. } => "rr-check",
        Command::Cliff { .. } => "cliff",
        Command::Gonality { .. } => "gonality",
        Command::BnRank { .. } => "bn-rank",
        Command::Weierstrass { .. } => "weierstrass",
        Command::Jacobian(_) => "jacobian",
        Command::Trees { .. } => "trees",
        Command::PeriodGram(_) => "period-gram",
        Command::AbelJacobi { .. } => "abel-jacobi",
        Command::Zhang { .. } => "zhang",
        Command::Break { action } => match action {
            BreakAction::Enumerate(_) => "break enumerate",
            BreakAction::Rep(_) => "break rep",
            BreakAction::Check(_) => "break check",
        },
        Command::Chain { action } => match action {
            ChainAction::Cells(_) => "chain cells",
            ChainAction::Count(_) => "chain count",
            ChainAction::Sample { .. } => "chain sample",
            ChainAction::Adjoint { .. } => "chain adjoint",
        },
        Command::Tropdep { .. } => "tropdep",
        Command::Examples { .. } => "examples",
    }
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("TROPDIV_THREADS") else {
        return Ok(());
    };
    let n: usize = value.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Error::Validation(format!(
            "TROPDIV_THREADS must be a positive integer, got {value:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::Domain(format!("cannot configure worker threads: {e}")))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Validation(_) | Error::Precondition(_) => 2,
        Error::Domain(_) | Error::Consistency(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().collect();
    let mut inputs = Inputs::default();
    let result = configure_threads().and_then(|_| run(&cli, &mut inputs));
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = match &report.raw {
        Some(text) => text.clone(),
        None => serde_json::to_string_pretty(&report.value).expect("output serializes") + "\n",
    };
    // a closed pipe downstream is not an error of ours
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    eprintln!("{}", report.summary);
    if let Some(path) = &cli.manifest {
        let manifest = RunManifest {
            subcommand: subcommand_name(&cli.command).to_string(),
            argv: argv[1..].to_vec(),
            inputs: &inputs.digests,
            seed: cli.seed,
            version: env!("CARGO_PKG_VERSION"),
            output: &report.value,
        };
        let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        if let Err(e) = fs::write(path, text + "\n") {
            eprintln!("error: cannot write manifest {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
