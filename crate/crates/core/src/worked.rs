//! Regression fixtures for the classical worked examples: each computes a
//! quantity and compares its rendering with the known answer.

use num_traits::Signed;
use serde::Serialize;

use crate::chain::{self, ChainOfLoops};
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::families;
use crate::finite;
use crate::graph::{FiniteGraph, GraphPoint, MetricGraph, VertexId};
use crate::json::format_divisor_short;
use crate::metric;
use crate::pl::PlFunction;
use crate::rank;
use crate::rational::{self, frac, int};
use crate::torus::PeriodLattice;

pub struct Fixture {
    pub id: &'static str,
    pub description: &'static str,
    run: fn() -> Result<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureReport {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Fixture {
    pub fn run(&self) -> FixtureReport {
        let (expected, actual) = match (self.run)() {
            Ok(pair) => pair,
            Err(e) => ("no error".into(), e.to_string()),
        };
        FixtureReport {
            id: self.id.into(),
            description: self.description.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            id: "circle-canonical",
            description: "the canonical divisor of a circle is zero",
            run: circle_canonical,
        },
        Fixture {
            id: "banana-canonical",
            description: "K = (g-1)P + (g-1)Q on the genus-4 banana graph",
            run: banana_canonical,
        },
        Fixture {
            id: "metric-tree-function",
            description: "the tree function has divisor Q - P",
            run: metric_tree_function,
        },
        Fixture {
            id: "circle-function",
            description: "the circle function has divisor O + Q - P - R",
            run: circle_function,
        },
        Fixture {
            id: "dhar-firing",
            description: "firing {v1,v2} then {v1,v2,v3} moves v1+v2 to 2v3 and then v4+v5",
            run: dhar_firing,
        },
        Fixture {
            id: "dhar-burning",
            description: "burning from v5 leaves {v1,v2} unburnt for v1+v2 and {v1,v2,v3} for 2v3",
            run: dhar_burning,
        },
        Fixture {
            id: "dhar-reduce",
            description: "v1+v2 reduces to v4+v5 at v5 through the unburnt sets {v1,v2}, {v1,v2,v3}",
            run: dhar_reduce,
        },
        Fixture {
            id: "dhar-equivalence",
            description: "v1+v2 is equivalent to v4+v5",
            run: dhar_equivalence,
        },
        Fixture {
            id: "circle-reduce",
            description: "a single point of a circle is reduced with respect to every base point",
            run: circle_reduce,
        },
        Fixture {
            id: "circle-torsor",
            description: "distinct points of a circle are not equivalent",
            run: circle_torsor,
        },
        Fixture {
            id: "circle-rank",
            description: "a divisor of degree d > 0 on a circle has rank d - 1",
            run: circle_rank,
        },
        Fixture {
            id: "k4-nonhyperelliptic",
            description: "v1 + v2 on K4 has rank 0",
            run: k4_nonhyperelliptic,
        },
        Fixture {
            id: "hyperelliptic-pair",
            description: "the left pair on the genus-3 hyperelliptic graph has rank 1 = deg/2",
            run: hyperelliptic_pair,
        },
        Fixture {
            id: "banana-ogg",
            description: "(g-1)Q - P has rank -1 on banana graphs of genus 2..6",
            run: banana_ogg,
        },
        Fixture {
            id: "weighted-riemann-roch",
            description: "weighted Riemann-Roch on a weighted genus-3 triangle",
            run: weighted_riemann_roch,
        },
        Fixture {
            id: "genus2-periods",
            description: "period Gram matrices of the wedge of two unit circles and the half-length theta graph",
            run: genus2_periods,
        },
        Fixture {
            id: "chain-count",
            description: "the generic genus-4 chain of loops has 2 cells of degree-3 rank-1 classes",
            run: chain_count,
        },
        Fixture {
            id: "chain-adjoint",
            description: "the residual class K - D of a genus-4 chain cell has the transpose tableau",
            run: chain_adjoint,
        },
    ]
}

/// Runs every fixture, or only `id` when given. Unknown ids are validation
/// errors.
pub fn run(id: Option<&str>) -> Result<Vec<FixtureReport>> {
    let all = fixtures();
    match id {
        None => Ok(all.iter().map(Fixture::run).collect()),
        Some(id) => all
            .iter()
            .find(|f| f.id == id)
            .map(|f| vec![f.run()])
            .ok_or_else(|| Error::validation(format!("unknown example id {id:?}"))),
    }
}

fn by_name(g: &MetricGraph, name: &str) -> GraphPoint {
    GraphPoint::Vertex(g.model().vertex_by_name(name).expect("fixture vertex"))
}

fn short(g: &MetricGraph, d: &Divisor) -> String {
    format_divisor_short(g, d)
}

fn names(g: &FiniteGraph, set: &[VertexId]) -> String {
    let mut v: Vec<&str> = set.iter().map(|&v| g.vertex_name(v)).collect();
    v.sort();
    format!("{{{}}}", v.join(","))
}

fn circle_canonical() -> Result<(String, String)> {
    let g = families::circle(int(3));
    Ok(("0".into(), short(&g, &g.canonical_divisor())))
}

fn banana_canonical() -> Result<(String, String)> {
    let g = MetricGraph::unit(families::banana(4));
    Ok(("P:3,Q:3".into(), short(&g, &g.canonical_divisor())))
}

fn metric_tree_function() -> Result<(String, String)> {
    let g = families::metric_tree();
    let values = [1, 1, 0, 2, 0, 3, 2];
    let f = PlFunction::from_integer_vertex_values(&g, &values)?;
    let expected = Divisor::from_points([(by_name(&g, "P"), -1), (by_name(&g, "Q"), 1)]);
    Ok((short(&g, &expected), short(&g, &f.div(&g))))
}

fn circle_function() -> Result<(String, String)> {
    let g = families::marked_circle();
    let f = PlFunction::from_integer_vertex_values(&g, &[1, 0, 0, 1])?;
    Ok(("O:1,P:-1,R:-1,Q:1".into(), short(&g, &f.div(&g))))
}

fn dhar() -> (FiniteGraph, MetricGraph) {
    let g = families::dhar_graph();
    (g.clone(), MetricGraph::unit(g))
}

fn vertices(g: &FiniteGraph, items: &[(&str, i64)]) -> Divisor {
    Divisor::from_vertex_counts(
        items
            .iter()
            .map(|(n, k)| (g.vertex_by_name(n).expect("fixture vertex"), *k)),
    )
}

fn dhar_firing() -> Result<(String, String)> {
    let (g, m) = dhar();
    let v = |n: &str| g.vertex_by_name(n).expect("fixture vertex");
    let d = vertices(&g, &[("v1", 1), ("v2", 1)]);
    let once = finite::chip_fire(&g, &d, &[v("v1"), v("v2")])?;
    let twice = finite::chip_fire(&g, &once, &[v("v1"), v("v2"), v("v3")])?;
    Ok((
        "v3:2 then v4:1,v5:1".into(),
        format!("{} then {}", short(&m, &once), short(&m, &twice)),
    ))
}

fn dhar_burning() -> Result<(String, String)> {
    let (g, _) = dhar();
    let q = g.vertex_by_name("v5").expect("fixture vertex");
    let a = finite::dhar_unburnt(&g, &vertices(&g, &[("v1", 1), ("v2", 1)]), q)?;
    let b = finite::dhar_unburnt(&g, &vertices(&g, &[("v3", 2)]), q)?;
    Ok((
        "{v1,v2} {v1,v2,v3}".into(),
        format!("{} {}", names(&g, &a), names(&g, &b)),
    ))
}

fn dhar_reduce() -> Result<(String, String)> {
    let (g, m) = dhar();
    let q = g.vertex_by_name("v5").expect("fixture vertex");
    let red = finite::reduce(&g, &vertices(&g, &[("v1", 1), ("v2", 1)]), q)?;
    let trace: Vec<String> = red.trace.iter().map(|s| names(&g, s)).collect();
    Ok((
        "v4:1,v5:1 via {v1,v2} {v1,v2,v3}".into(),
        format!("{} via {}", short(&m, &red.divisor), trace.join(" ")),
    ))
}

fn dhar_equivalence() -> Result<(String, String)> {
    let (g, _) = dhar();
    let eq = finite::is_equivalent(
        &g,
        &vertices(&g, &[("v1", 1), ("v2", 1)]),
        &vertices(&g, &[("v4", 1), ("v5", 1)]),
    )?;
    Ok(("true".into(), eq.to_string()))
}

fn circle_reduce() -> Result<(String, String)> {
    let g = families::circle(int(1));
    let p = g.point_on_edge(crate::EdgeId(0), frac(1, 5))?;
    let d = Divisor::point(p, 1);
    let mut all = true;
    for q in [
        by_name(&g, "v1"),
        by_name(&g, "v2"),
        g.point_on_edge(crate::EdgeId(1), frac(1, 3))?,
    ] {
        all &= metric::reduced_divisor(&g, &d, &q) == d;
    }
    Ok(("true".into(), all.to_string()))
}

fn circle_torsor() -> Result<(String, String)> {
    let g = families::circle(int(1));
    let p = Divisor::point(g.point_on_edge(crate::EdgeId(0), frac(1, 5))?, 1);
    let q = Divisor::point(g.point_on_edge(crate::EdgeId(1), frac(1, 7))?, 1);
    Ok((
        "false".into(),
        metric::is_equivalent(&g, &p, &q)?.to_string(),
    ))
}

fn circle_rank() -> Result<(String, String)> {
    let g = families::circle(int(1));
    let p = g.point_on_edge(crate::EdgeId(0), frac(1, 5))?;
    let mut ranks = Vec::new();
    for d in 1..=4i64 {
        let div = &Divisor::point(p.clone(), d - 1) + &Divisor::point(by_name(&g, "v2"), 1);
        ranks.push(rank::rank_metric_value(&g, &div)?.to_string());
    }
    Ok(("0,1,2,3".into(), ranks.join(",")))
}

fn k4_nonhyperelliptic() -> Result<(String, String)> {
    let g = families::complete(4);
    let d = Divisor::from_vertex_vec(&[1, 1, 0, 0]);
    Ok(("0".into(), rank::rank_finite_value(&g, &d)?.to_string()))
}

fn hyperelliptic_pair() -> Result<(String, String)> {
    let g = families::hyperelliptic_genus3();
    let d = &Divisor::point(by_name(&g, "a1"), 1) + &Divisor::point(by_name(&g, "a2"), 1);
    let r = rank::rank_metric_value(&g, &d)?;
    Ok((
        "rank 1, degree 2".into(),
        format!("rank {r}, degree {}", d.degree()),
    ))
}

fn banana_ogg() -> Result<(String, String)> {
    let mut out = Vec::new();
    for genus in 2..=6usize {
        let g = MetricGraph::unit(families::banana(genus));
        let d = &Divisor::point(by_name(&g, "Q"), genus as i64 - 1)
            - &Divisor::point(by_name(&g, "P"), 1);
        let reduced = metric::is_reduced(&g, &d, &by_name(&g, "P"))?;
        let r = rank::rank_metric_value(&g, &d)?;
        out.push(format!("{reduced}/{r}"));
    }
    Ok((["true/-1"; 5].join(","), out.join(",")))
}

fn weighted_riemann_roch() -> Result<(String, String)> {
    let g = MetricGraph::unit(families::cycle(3)).with_weights(vec![1, 0, 1])?;
    let mut all = true;
    for d in [
        Divisor::new(),
        Divisor::from_vertex_vec(&[2, 0, 0]),
        Divisor::from_vertex_vec(&[0, 1, 1]),
        Divisor::from_vertex_vec(&[3, -1, 1]),
    ] {
        all &= rank::weighted_riemann_roch_check(&g, &d)?.holds;
    }
    Ok(("true".into(), all.to_string()))
}

fn genus2_periods() -> Result<(String, String)> {
    let render = |g: &MetricGraph| {
        let lattice = PeriodLattice::new(g);
        let rows: Vec<String> = lattice
            .gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| rational::format(&x.abs()))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        format!("[{}]", rows.join("; "))
    };
    let wedge = families::two_loops(int(1), int(1));
    let theta = families::theta([frac(1, 2), frac(1, 2), frac(1, 2)]);
    Ok((
        "[1 0; 0 1] [1 1/2; 1/2 1]".into(),
        format!("{} {}", render(&wedge), render(&theta)),
    ))
}

fn chain_count() -> Result<(String, String)> {
    let c = chain::count_cells(4, 1, 3)?;
    Ok(("2 = 2".into(), format!("{} = {}", c.formula, c.enumerated)))
}

fn chain_adjoint() -> Result<(String, String)> {
    let c = ChainOfLoops::generic(4)?;
    let mut out = Vec::new();
    for cell in chain::enumerate_cells(4, 1, 3)? {
        let free: Vec<_> = (0..cell.dimension())
            .map(|k| frac(2 + k as i64, 9))
            .collect();
        let d = chain::cell_divisor(&c, &cell, &free)?;
        out.push(
            chain::adjoint_check(&c, &cell, &d)?
                .is_transpose()
                .to_string(),
        );
    }
    Ok(("true,true".into(), out.join(",")))
}
