//! Divisor rank on finite and metric graphs, and the checks built on
//! it: Riemann–Roch, Clifford, vertex-weighted rank and Weierstrass points.
//!
//! The rank search tests effective divisors `E` supported on a
//! rank-determining set, degree by degree. For every `E` of degree `k` it
//! keeps an effective divisor `F ~ D - E`; a divisor of degree `k + 1` is
//! `E + x` with `x` at least the largest point of `E`, and `D - E - x` is
//! equivalent to an effective divisor iff the `x`-reduced form of `F` has a
//! chip at `x`.

use rayon::prelude::*;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::finite::Engine;
use crate::graph::{FiniteGraph, GraphPoint, MetricGraph, VertexId};
use crate::metric;
use crate::rational::{int, Rational};

/// Rank with a certificate.
///
/// For rank `r >= 0`, `witnesses` lists every effective `E` of degree `r`
/// on the rank-determining set together with an effective divisor
/// equivalent to `D - E`, and `failing` is an effective `E` of degree
/// `r + 1` with `D - E` not equivalent to an effective divisor. For rank
/// `-1`, `witnesses` is empty and `failing` is the zero divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub rank: i64,
    pub witnesses: Vec<(Divisor, Divisor)>,
    pub failing: Divisor,
    /// Points the test divisors `E` were drawn from.
    pub test_points: Vec<GraphPoint>,
}

/// Levels with at least this many entries are expanded in parallel.
const PARALLEL_LEVEL: usize = 512;

trait Reducer: Sync {
    type D: Clone + Send + Sync;
    /// Effective representative of the class, if there is one.
    fn effective_rep(&self, d: &Self::D) -> Option<Self::D>;
    /// Reduces an effective divisor at test point `x`.
    fn reduce_at(&self, d: &Self::D, x: usize) -> Self::D;
    fn chips_at(&self, d: &Self::D, x: usize) -> i64;
    fn remove_chip(&self, d: &Self::D, x: usize) -> Self::D;
}

struct FiniteReducer {
    engine: Engine,
}

impl Reducer for FiniteReducer {
    type D = Vec<i64>;

    fn effective_rep(&self, d: &Vec<i64>) -> Option<Vec<i64>> {
        let mut c = d.clone();
        self.engine.reduce(&mut c, 0, None, None);
        (c[0] >= 0).then_some(c)
    }

    fn reduce_at(&self, d: &Vec<i64>, x: usize) -> Vec<i64> {
        let mut c = d.clone();
        self.engine.reduce_effective(&mut c, x, None, None);
        c
    }

    fn chips_at(&self, d: &Vec<i64>, x: usize) -> i64 {
        d[x]
    }

    fn remove_chip(&self, d: &Vec<i64>, x: usize) -> Vec<i64> {
        let mut c = d.clone();
        c[x] -= 1;
        c
    }
}

struct MetricReducer<'g> {
    g: &'g MetricGraph,
    points: Vec<GraphPoint>,
}

impl Reducer for MetricReducer<'_> {
    type D = Divisor;

    fn effective_rep(&self, d: &Divisor) -> Option<Divisor> {
        let q = &self.points[0];
        let r = metric::reduced_divisor(self.g, d, q);
        (r.get(q) >= 0).then_some(r)
    }

    fn reduce_at(&self, d: &Divisor, x: usize) -> Divisor {
        metric::reduced_divisor(self.g, d, &self.points[x])
    }

    fn chips_at(&self, d: &Divisor, x: usize) -> i64 {
        d.get(&self.points[x])
    }

    fn remove_chip(&self, d: &Divisor, x: usize) -> Divisor {
        let mut c = d.clone();
        c.add_at(self.points[x].clone(), -1);
        c
    }
}

/// Subtracted multisets (as point indices) with the reduced remainders.
type Level<D> = Vec<(Vec<usize>, D)>;

struct Search<D> {
    rank: i64,
    level: Level<D>,
    failing: Vec<usize>,
}

/// Runs the rank search. With `cap = Some(c)` the search stops once rank
/// `c` is established and reports `c`.
fn search<R: Reducer>(
    r: &R,
    d: &R::D,
    degree: i64,
    num_points: usize,
    cap: Option<i64>,
) -> Search<R::D> {
    let minus_one = Search {
        rank: -1,
        level: Vec::new(),
        failing: Vec::new(),
    };
    if degree < 0 {
        return minus_one;
    }
    let Some(start) = r.effective_rep(d) else {
        return minus_one;
    };
    let mut level = vec![(Vec::new(), start)];
    let mut k = 0i64;
    loop {
        if cap == Some(k) {
            return Search {
                rank: k,
                level,
                failing: Vec::new(),
            };
        }
        if k + 1 > degree {
            return Search {
                rank: k,
                level,
                failing: vec![0; (k + 1) as usize],
            };
        }
        let expand = |(e, f): &(Vec<usize>, R::D)| -> std::result::Result<Level<R::D>, Vec<usize>> {
            let first = e.last().copied().unwrap_or(0);
            let mut out = Vec::with_capacity(num_points - first);
            for x in first..num_points {
                let mut ex = e.clone();
                ex.push(x);
                let next = if r.chips_at(f, x) >= 1 {
                    r.remove_chip(f, x)
                } else {
                    let fx = r.reduce_at(f, x);
                    if r.chips_at(&fx, x) < 1 {
                        return Err(ex);
                    }
                    r.remove_chip(&fx, x)
                };
                out.push((ex, next));
            }
            Ok(out)
        };
        let results: Vec<_> = if level.len() >= PARALLEL_LEVEL {
            level.par_iter().map(expand).collect()
        } else {
            let mut results = Vec::with_capacity(level.len());
            for item in &level {
                let res = expand(item);
                let stop = res.is_err();
                results.push(res);
                if stop {
                    break;
                }
            }
            results
        };
        let mut next = Vec::new();
        for res in results {
            match res {
                Ok(items) => next.extend(items),
                Err(failing) => {
                    return Search {
                        rank: k,
                        level,
                        failing,
                    }
                }
            }
        }
        level = next;
        k += 1;
    }
}

fn multiset_divisor(points: &[GraphPoint], idx: &[usize]) -> Divisor {
    Divisor::from_points(idx.iter().map(|&i| (points[i].clone(), 1)))
}

fn package<D>(s: Search<D>, points: Vec<GraphPoint>, to_div: impl Fn(&D) -> Divisor) -> RankResult {
    let witnesses = s
        .level
        .iter()
        .map(|(e, f)| (multiset_divisor(&points, e), to_div(f)))
        .collect();
    RankResult {
        rank: s.rank,
        witnesses,
        failing: multiset_divisor(&points, &s.failing),
        test_points: points,
    }
}

/// Rank on a finite graph, with `E` ranging over vertex divisors.
pub fn rank_finite(g: &FiniteGraph, d: &Divisor) -> Result<RankResult> {
    let chips = d.validate_finite(g)?;
    let r = FiniteReducer {
        engine: Engine::new(g),
    };
    let s = search(&r, &chips, d.degree(), g.num_vertices(), None);
    let points = g.vertices().map(GraphPoint::Vertex).collect();
    Ok(package(s, points, |c| Divisor::from_vertex_vec(c)))
}

/// Rank value only on a finite graph.
pub fn rank_finite_value(g: &FiniteGraph, d: &Divisor) -> Result<i64> {
    let chips = d.validate_finite(g)?;
    let r = FiniteReducer {
        engine: Engine::new(g),
    };
    Ok(search(&r, &chips, d.degree(), g.num_vertices(), None).rank)
}

/// Rank on a metric graph using the model vertices as test points.
pub fn rank_metric(g: &MetricGraph, d: &Divisor) -> Result<RankResult> {
    let points = g.model().vertices().map(GraphPoint::Vertex).collect();
    rank_with_test_points(g, d, points)
}

/// Rank on a metric graph with test divisors supported on `points`, which
/// the caller guarantees to be rank-determining.
pub fn rank_with_test_points(
    g: &MetricGraph,
    d: &Divisor,
    points: Vec<GraphPoint>,
) -> Result<RankResult> {
    capped_rank(g, d, points, None)
}

/// Whether `r(D) >= k` on a metric graph; stops the search at level `k`.
pub fn rank_metric_at_least(g: &MetricGraph, d: &Divisor, k: i64) -> Result<bool> {
    if k < 0 {
        return Ok(true);
    }
    let points = g.model().vertices().map(GraphPoint::Vertex).collect();
    Ok(capped_rank(g, d, points, Some(k))?.rank >= k)
}

/// Whether `r(D) >= k` on a finite graph.
pub fn rank_finite_at_least(g: &FiniteGraph, d: &Divisor, k: i64) -> Result<bool> {
    if k < 0 {
        return Ok(true);
    }
    let chips = d.validate_finite(g)?;
    let r = FiniteReducer {
        engine: Engine::new(g),
    };
    Ok(search(&r, &chips, d.degree(), g.num_vertices(), Some(k)).rank >= k)
}

fn capped_rank(
    g: &MetricGraph,
    d: &Divisor,
    points: Vec<GraphPoint>,
    cap: Option<i64>,
) -> Result<RankResult> {
    d.validate(g)?;
    if points.is_empty() {
        return Err(Error::validation("at least one test point is required"));
    }
    for p in &points {
        g.validate_point(p)?;
    }
    if let (Some(chips), true) = (
        d.to_vertex_vec(g.model().num_vertices()),
        uniform(g)
            && points
                .iter()
                .enumerate()
                .all(|(i, p)| *p == GraphPoint::Vertex(VertexId(i))),
    ) {
        if points.len() == g.model().num_vertices() {
            let r = FiniteReducer {
                engine: Engine::new(g.model()),
            };
            let s = search(&r, &chips, d.degree(), points.len(), cap);
            return Ok(package(s, points, |c| Divisor::from_vertex_vec(c)));
        }
    }
    let r = MetricReducer {
        g,
        points: points.clone(),
    };
    let s = search(&r, d, d.degree(), points.len(), cap);
    Ok(package(s, points, |c| c.clone()))
}

fn uniform(g: &MetricGraph) -> bool {
    g.lengths().windows(2).all(|w| w[0] == w[1])
}

pub fn rank_metric_value(g: &MetricGraph, d: &Divisor) -> Result<i64> {
    Ok(rank_metric(g, d)?.rank)
}

/// Both sides of Riemann–Roch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiemannRochCheck {
    pub rank: i64,
    pub adjoint_rank: i64,
    pub degree: i64,
    pub genus: i64,
    pub holds: bool,
}

fn rr(rank: i64, adjoint_rank: i64, degree: i64, genus: i64) -> RiemannRochCheck {
    RiemannRochCheck {
        rank,
        adjoint_rank,
        degree,
        genus,
        holds: rank - adjoint_rank == degree - genus + 1,
    }
}

/// `r(D) - r(K - D) = deg D - g + 1` on a metric graph.
pub fn riemann_roch_check(g: &MetricGraph, d: &Divisor) -> Result<RiemannRochCheck> {
    let k = g.canonical_divisor();
    let a = rank_metric_value(g, d)?;
    let b = rank_metric_value(g, &(&k - d))?;
    Ok(rr(a, b, d.degree(), g.genus() as i64))
}

/// Riemann–Roch on a finite graph.
pub fn riemann_roch_check_finite(g: &FiniteGraph, d: &Divisor) -> Result<RiemannRochCheck> {
    let k = g.canonical_divisor();
    let a = rank_finite_value(g, d)?;
    let b = rank_finite_value(g, &(&k - d))?;
    Ok(rr(a, b, d.degree(), g.genus() as i64))
}

/// Clifford: if `D` and `K - D` both have nonnegative rank, then
/// `2 r(D) <= deg D`. Vacuously true otherwise.
pub fn clifford_check(g: &MetricGraph, d: &Divisor) -> Result<bool> {
    let r = rank_metric_value(g, d)?;
    let s = rank_metric_value(g, &(&g.canonical_divisor() - d))?;
    Ok(r < 0 || s < 0 || 2 * r <= d.degree())
}

/// `r#(D) = min over 0 <= E <= W of deg E + r(D - 2E)`, where `W` is the
/// vertex-weight divisor.
pub fn weighted_rank(g: &MetricGraph, d: &Divisor) -> Result<i64> {
    d.validate(g)?;
    let weights: Vec<(usize, u32)> = g
        .weights()
        .iter()
        .enumerate()
        .filter(|(_, &w)| w > 0)
        .map(|(i, &w)| (i, w))
        .collect();
    let mut best = i64::MAX;
    let mut counts = vec![0u32; weights.len()];
    loop {
        let mut e = Divisor::new();
        for (k, &(v, _)) in weights.iter().enumerate() {
            e.add_at(GraphPoint::Vertex(VertexId(v)), counts[k] as i64);
        }
        let value = e.degree() + rank_metric_value(g, &(d - &(&e * 2)))?;
        best = best.min(value);
        // next sub-multiset of W
        let mut k = 0;
        while k < counts.len() && counts[k] == weights[k].1 {
            counts[k] = 0;
            k += 1;
        }
        if k == counts.len() {
            return Ok(best);
        }
        counts[k] += 1;
    }
}

/// The graph obtained by attaching `w(v)` loops of length `loop_length` at
/// every vertex `v`. Each loop is a new vertex joined to `v` by two edges of
/// half the length. Original vertices and edges keep their indices, so
/// divisors carry over unchanged.
pub fn attach_weight_loops(g: &MetricGraph, loop_length: &Rational) -> Result<MetricGraph> {
    let model = g.model();
    let mut names = model.vertex_names().to_vec();
    let mut edges: Vec<(String, usize, usize)> = model
        .edges()
        .map(|e| {
            let (a, b) = model.ends(e);
            (model.edge_name(e).to_string(), a.0, b.0)
        })
        .collect();
    let mut lengths = g.lengths().to_vec();
    let half = loop_length / int(2);
    for v in model.vertices() {
        for k in 0..g.weight(v) {
            let u = names.len();
            names.push(format!("{}~loop{}", model.vertex_name(v), k + 1));
            for side in ["a", "b"] {
                edges.push((
                    format!("{}~loop{}{side}", model.vertex_name(v), k + 1),
                    v.0,
                    u,
                ));
                lengths.push(half.clone());
            }
        }
    }
    MetricGraph::new(FiniteGraph::with_names(names, edges)?, lengths)
}

/// Weighted Riemann–Roch: `r#(D) - r#(K# - D) = deg D + 1 - g#`.
pub fn weighted_riemann_roch_check(g: &MetricGraph, d: &Divisor) -> Result<RiemannRochCheck> {
    let k = g.weighted_canonical();
    let a = weighted_rank(g, d)?;
    let b = weighted_rank(g, &(&k - d))?;
    Ok(rr(a, b, d.degree(), g.weighted_genus() as i64))
}

/// `P` is a Weierstrass point when `r(K - g P) >= 0`.
pub fn is_weierstrass_point(g: &MetricGraph, p: &GraphPoint) -> Result<bool> {
    let genus = g.genus();
    if genus < 2 {
        return Err(Error::domain(format!(
            "Weierstrass points need genus at least 2, got {genus}"
        )));
    }
    g.validate_point(p)?;
    let d = &g.canonical_divisor() - &Divisor::point(p.clone(), genus as i64);
    Ok(metric::is_effective_class(g, &d))
}
