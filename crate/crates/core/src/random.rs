//! Seeded generators for random graphs, divisors and piecewise-linear
//! functions.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::divisor::Divisor;
use crate::graph::{EdgeId, FiniteGraph, GraphPoint, MetricGraph, VertexId};
use crate::pl::PlFunction;
use crate::rational::{frac, int, Rational};

/// Connected loopless multigraph with `1..=max_vertices` vertices and at
/// most `max_edges` edges: a random spanning tree plus random extra edges.
pub fn finite_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> FiniteGraph {
    let n = rng.gen_range(1..=max_vertices.min(max_edges + 1).max(1));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i], order[j]));
    }
    if n >= 2 {
        let extra = rng.gen_range(0..=max_edges - edges.len());
        for _ in 0..extra {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            edges.push((a, b));
        }
    }
    FiniteGraph::from_edges(n, &edges).expect("spanning tree keeps the graph connected")
}

/// Random positive rational with denominator at most `max_den` and value at
/// most 2.
pub fn length<R: Rng>(rng: &mut R, max_den: i64) -> Rational {
    let q = rng.gen_range(1..=max_den);
    let p = rng.gen_range(1..=2 * q);
    frac(p, q)
}

pub fn metric_graph<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
    max_den: i64,
) -> MetricGraph {
    let model = finite_graph(rng, max_vertices, max_edges);
    let lengths = (0..model.num_edges())
        .map(|_| length(rng, max_den))
        .collect();
    MetricGraph::new(model, lengths).expect("lengths are positive")
}

/// A vertex, or with probability one half a point in an edge interior at
/// an offset with denominator at most `max_den` relative to the edge.
pub fn point<R: Rng>(rng: &mut R, g: &MetricGraph, max_den: i64) -> GraphPoint {
    let m = g.model();
    if m.num_edges() == 0 || rng.gen_bool(0.5) {
        return GraphPoint::Vertex(VertexId(rng.gen_range(0..m.num_vertices())));
    }
    let e = EdgeId(rng.gen_range(0..m.num_edges()));
    let q = rng.gen_range(2..=max_den.max(2));
    let p = rng.gen_range(1..q);
    g.point_on_edge(e, g.length(e) * frac(p, q))
        .expect("interior offset")
}

/// Vertex divisor of the given degree, built from `terms` random unit moves.
pub fn vertex_divisor<R: Rng>(rng: &mut R, n: usize, degree: i64, terms: usize) -> Divisor {
    let mut d = Divisor::vertex(VertexId(rng.gen_range(0..n)), degree);
    for _ in 0..terms {
        let a = VertexId(rng.gen_range(0..n));
        let b = VertexId(rng.gen_range(0..n));
        d.add_at(GraphPoint::Vertex(a), 1);
        d.add_at(GraphPoint::Vertex(b), -1);
    }
    d
}

/// Effective vertex divisor of the given degree.
pub fn effective_vertex_divisor<R: Rng>(rng: &mut R, n: usize, degree: usize) -> Divisor {
    Divisor::from_vertex_counts((0..degree).map(|_| (VertexId(rng.gen_range(0..n)), 1)))
}

/// Divisor of the given degree on random points of `g`.
pub fn divisor<R: Rng>(
    rng: &mut R,
    g: &MetricGraph,
    degree: i64,
    terms: usize,
    max_den: i64,
) -> Divisor {
    let mut d = Divisor::point(point(rng, g, max_den), degree);
    for _ in 0..terms {
        d.add_at(point(rng, g, max_den), 1);
        d.add_at(point(rng, g, max_den), -1);
    }
    d
}

/// Random piecewise-linear function with integer slopes: random vertex
/// values and, on each edge, two slopes on either side of the average slope
/// meeting at a rational breakpoint.
pub fn pl_function<R: Rng>(rng: &mut R, g: &MetricGraph, max_den: i64) -> PlFunction {
    let m = g.model();
    let values: Vec<Rational> = (0..m.num_vertices())
        .map(|_| {
            frac(
                rng.gen_range(-4 * max_den..=4 * max_den),
                rng.gen_range(1..=max_den),
            )
        })
        .collect();
    let mut breaks = Vec::with_capacity(m.num_edges());
    for e in m.edges() {
        let (t, h) = m.ends(e);
        let len = g.length(e);
        let delta = &values[h.0] - &values[t.0];
        let avg = &delta / len;
        if avg.is_integer() && rng.gen_bool(0.3) {
            breaks.push(Vec::new());
            continue;
        }
        let up = avg.floor() + int(1 + rng.gen_range(0..2));
        let down = avg.ceil() - int(1 + rng.gen_range(0..2));
        // slope `up` from the tail, then `down` to the head
        let x = (&delta - &down * len) / (&up - &down);
        let y = &values[t.0] + &up * &x;
        debug_assert!(!x.is_zero());
        breaks.push(vec![(x, y)]);
    }
    PlFunction::new(g, values, breaks).expect("slopes are integers by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_objects_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = metric_graph(&mut rng, 6, 9, 4);
            assert!(g.model().num_edges() <= 9);
            let f = pl_function(&mut rng, &g, 3);
            assert_eq!(f.div(&g).degree(), 0);
            let d = divisor(&mut rng, &g, 3, 3, 5);
            d.validate(&g).unwrap();
            assert_eq!(d.degree(), 3);
        }
    }
}
