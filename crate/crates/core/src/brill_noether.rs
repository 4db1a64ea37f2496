//! Searches over linear series: gonality, Clifford index, Brill–Noether rank
//! and Weierstrass points.
//!
//! Gonality and the Clifford index range over divisors supported on a
//! finite grid of rational points, so they are exact only relative to that
//! grid. The Brill–Noether rank works on finite graphs with vertex-supported
//! divisors.

use std::collections::HashSet;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::finite::Engine;
use crate::graph::{FiniteGraph, GraphPoint, MetricGraph, VertexId};
use crate::metric;
use crate::rank;
use crate::rational::int;

/// The vertices of `g` followed by the points `k/n` of the way along every
/// edge for `0 < k < n`.
pub fn grid_points(g: &MetricGraph, n: u32) -> Result<Vec<GraphPoint>> {
    if n == 0 {
        return Err(Error::validation("grid subdivision must be at least 1"));
    }
    let m = g.model();
    let mut points: Vec<GraphPoint> = m.vertices().map(GraphPoint::Vertex).collect();
    for e in m.edges() {
        for k in 1..n {
            let offset = g.length(e) * int(k as i64) / int(n as i64);
            points.push(g.point_on_edge(e, offset)?);
        }
    }
    Ok(points)
}

/// Visits every multiset of size `k` drawn from `0..n`, as sorted indices.
fn for_each_multiset(
    n: usize,
    k: usize,
    mut visit: impl FnMut(&[usize]) -> Result<bool>,
) -> Result<()> {
    if n == 0 {
        return if k == 0 {
            visit(&[]).map(|_| ())
        } else {
            Ok(())
        };
    }
    let mut idx = vec![0usize; k];
    loop {
        if !visit(&idx)? {
            return Ok(());
        }
        let Some(pos) = (0..k).rev().find(|&i| idx[i] + 1 < n) else {
            return Ok(());
        };
        let next = idx[pos] + 1;
        for x in &mut idx[pos..] {
            *x = next;
        }
    }
}

fn grid_divisor(grid: &[GraphPoint], idx: &[usize]) -> Divisor {
    Divisor::from_points(idx.iter().map(|&i| (grid[i].clone(), 1)))
}

/// One representative per linear equivalence class of effective degree-`d`
/// divisors on the grid, in enumeration order.
fn grid_classes(g: &MetricGraph, grid: &[GraphPoint], d: usize) -> Result<Vec<Divisor>> {
    let base = GraphPoint::Vertex(VertexId(0));
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for_each_multiset(grid.len(), d, |idx| {
        let div = grid_divisor(grid, idx);
        if seen.insert(metric::reduced_divisor(g, &div, &base)) {
            out.push(div);
        }
        Ok(true)
    })?;
    Ok(out)
}

fn check_grid(g: &MetricGraph, grid: &[GraphPoint]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::validation(
            "the grid must contain at least one point",
        ));
    }
    grid.iter().try_for_each(|p| g.validate_point(p))
}

/// Result of a grid-restricted gonality search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gonality {
    /// Least degree of a rank-one grid divisor, and such a divisor.
    Found { degree: i64, witness: Divisor },
    /// No grid divisor of degree at most `max_degree` has rank one.
    ExceedsBound { max_degree: i64 },
}

pub fn gonality(g: &MetricGraph, max_degree: i64, grid: &[GraphPoint]) -> Result<Gonality> {
    check_grid(g, grid)?;
    for d in 1..=max_degree.max(0) {
        for div in grid_classes(g, grid, d as usize)? {
            if rank::rank_metric_at_least(g, &div, 1)? {
                return Ok(Gonality::Found {
                    degree: d,
                    witness: div,
                });
            }
        }
    }
    Ok(Gonality::ExceedsBound { max_degree })
}

/// Grid-restricted Clifford index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliffordIndex {
    /// Minimum of `deg D - 2 r(D)` over grid divisors with `r(D) >= 1` and
    /// `r(K - D) >= 1`, with a divisor attaining it.
    Computed { value: i64, witness: Divisor },
    /// No grid divisor qualifies. `conventional` is `floor((g - 1) / 2)`,
    /// the value customarily assigned in this case.
    NoQualifyingDivisor { conventional: i64 },
}

impl CliffordIndex {
    pub fn value(&self) -> i64 {
        match self {
            CliffordIndex::Computed { value, .. } => *value,
            CliffordIndex::NoQualifyingDivisor { conventional } => *conventional,
        }
    }
}

/// A qualifying divisor has degree between 2 and `2g - 4`; replacing `D`
/// by `K - D` keeps `deg D - 2 r(D)`, so degrees up to `g - 1` suffice.
pub fn clifford_index(g: &MetricGraph, grid: &[GraphPoint]) -> Result<CliffordIndex> {
    check_grid(g, grid)?;
    let genus = g.genus() as i64;
    let k = g.canonical_divisor();
    let mut best: Option<(i64, Divisor)> = None;
    for d in 2..genus {
        for div in grid_classes(g, grid, d as usize)? {
            if !rank::rank_metric_at_least(g, &div, 1)?
                || !rank::rank_metric_at_least(g, &(&k - &div), 1)?
            {
                continue;
            }
            let value = d - 2 * rank::rank_metric_value(g, &div)?;
            if best.as_ref().is_none_or(|(b, _)| value < *b) {
                best = Some((value, div));
            }
        }
    }
    Ok(match best {
        Some((value, witness)) => CliffordIndex::Computed { value, witness },
        None => CliffordIndex::NoQualifyingDivisor {
            conventional: ((genus - 1) / 2).max(0),
        },
    })
}

/// Brill–Noether rank of a finite graph with vertex-supported divisors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrillNoetherRank {
    /// `-1` when no degree-`d` class has rank at least `r`.
    pub value: i64,
    /// One effective representative per class of `W^r_d`.
    pub classes: Vec<Divisor>,
    /// An effective `E` of degree `r + value + 1` contained in no class of
    /// `W^r_d`, when the search stopped below the degree bound.
    pub failing: Option<Divisor>,
}

/// Largest `k` such that every effective vertex divisor `E` of degree
/// `r + k` satisfies `D - E ~ effective` for some `D` in `W^r_d`.
pub fn brill_noether_rank(g: &FiniteGraph, r: i64, d: i64) -> Result<BrillNoetherRank> {
    if r < 0 || d < 0 {
        return Err(Error::validation("r and d must be nonnegative"));
    }
    let n = g.num_vertices();
    let engine = Engine::new(g);
    let reduce = |chips: &mut Vec<i64>| engine.reduce(chips, 0, None, None);
    let mut seen = HashSet::new();
    let mut classes = Vec::new();
    let mut reps: Vec<Vec<i64>> = Vec::new();
    for_each_multiset(n, d as usize, |idx| {
        let mut chips = vec![0i64; n];
        for &i in idx {
            chips[i] += 1;
        }
        let mut key = chips.clone();
        reduce(&mut key);
        if seen.insert(key.clone()) {
            let div = Divisor::from_vertex_vec(&chips);
            if rank::rank_finite_at_least(g, &div, r)? {
                classes.push(div);
                reps.push(key);
            }
        }
        Ok(true)
    })?;
    if classes.is_empty() {
        return Ok(BrillNoetherRank {
            value: -1,
            classes,
            failing: None,
        });
    }
    let mut k = 0;
    while r + k < d {
        let mut failing = None;
        for_each_multiset(n, (r + k + 1) as usize, |idx| {
            let covered = reps.iter().any(|rep| {
                let mut chips = rep.clone();
                for &i in idx {
                    chips[i] -= 1;
                }
                reduce(&mut chips);
                chips[0] >= 0
            });
            if !covered {
                failing = Some(Divisor::from_vertex_counts(
                    idx.iter().map(|&i| (VertexId(i), 1)),
                ));
            }
            Ok(covered)
        })?;
        if failing.is_some() {
            return Ok(BrillNoetherRank {
                value: k,
                classes,
                failing,
            });
        }
        k += 1;
    }
    Ok(BrillNoetherRank {
        value: k,
        classes,
        failing: None,
    })
}

/// Grid points that are Weierstrass points, in grid order.
pub fn weierstrass_points(g: &MetricGraph, grid: &[GraphPoint]) -> Result<Vec<GraphPoint>> {
    check_grid(g, grid)?;
    let mut out = Vec::new();
    for p in grid {
        if rank::is_weierstrass_point(g, p)? {
            out.push(p.clone());
        }
    }
    Ok(out)
}
