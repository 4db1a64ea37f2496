//! Standard graphs and the small fixtures used throughout the tests and
//! examples.

use crate::graph::{FiniteGraph, MetricGraph};
use crate::rational::{int, Rational};

fn named(vertices: &[&str], edges: &[(&str, &str)]) -> FiniteGraph {
    let names: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
    let idx = |n: &str| vertices.iter().position(|v| *v == n).expect("known vertex");
    let edges = edges
        .iter()
        .enumerate()
        .map(|(i, (a, b))| (format!("e{}", i + 1), idx(a), idx(b)))
        .collect();
    FiniteGraph::with_names(names, edges).expect("fixture is a valid graph")
}

/// Path on `n >= 1` vertices.
pub fn path(n: usize) -> FiniteGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    FiniteGraph::from_edges(n, &edges).expect("paths are connected")
}

/// Cycle on `n >= 2` vertices; `n = 2` gives two parallel edges.
pub fn cycle(n: usize) -> FiniteGraph {
    assert!(n >= 2, "a loopless cycle needs at least two vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    FiniteGraph::from_edges(n, &edges).expect("cycles are connected")
}

pub fn complete(n: usize) -> FiniteGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    FiniteGraph::from_edges(n, &edges).expect("complete graphs are connected")
}

pub fn complete_bipartite(a: usize, b: usize) -> FiniteGraph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    FiniteGraph::from_edges(a + b, &edges).expect("complete bipartite graphs are connected")
}

pub fn petersen() -> FiniteGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    FiniteGraph::from_edges(10, &edges).expect("the Petersen graph is connected")
}

/// Two vertices `P`, `Q` joined by `g + 1` parallel edges (genus `g`).
pub fn banana(g: usize) -> FiniteGraph {
    let edges = vec![("P", "Q"); g + 1];
    named(&["P", "Q"], &edges)
}

/// Circle of circumference `length`, modeled by two vertices and two edges
/// of half the length.
pub fn circle(length: Rational) -> MetricGraph {
    let half = &length / int(2);
    MetricGraph::new(cycle(2), vec![half.clone(), half]).expect("positive lengths")
}

/// Five vertices, genus 2: a triangle `v1 v2 v3` and a triangle `v3 v4 v5`.
pub fn dhar_graph() -> FiniteGraph {
    named(
        &["v1", "v2", "v3", "v4", "v5"],
        &[
            ("v1", "v2"),
            ("v1", "v3"),
            ("v2", "v3"),
            ("v3", "v4"),
            ("v3", "v5"),
            ("v4", "v5"),
        ],
    )
}

/// Unit-length tree on `a, b, P, c, d, Q, e`.
pub fn metric_tree() -> MetricGraph {
    MetricGraph::unit(named(
        &["a", "b", "P", "c", "d", "Q", "e"],
        &[
            ("a", "b"),
            ("P", "b"),
            ("b", "c"),
            ("P", "d"),
            ("c", "Q"),
            ("c", "e"),
        ],
    ))
}

/// Circle of length 4 with marked points `O, P, R, Q` in cyclic order.
pub fn marked_circle() -> MetricGraph {
    MetricGraph::unit(named(
        &["O", "P", "R", "Q"],
        &[("O", "P"), ("P", "R"), ("R", "Q"), ("Q", "O")],
    ))
}

/// Genus 3: two circles (`a1 a2` and `b1 b2`, two edges each) joined by the
/// edges `a1 b1` and `a2 b2`. All lengths are one.
pub fn hyperelliptic_genus3() -> MetricGraph {
    MetricGraph::unit(named(
        &["a1", "a2", "b1", "b2"],
        &[
            ("a1", "a2"),
            ("a1", "a2"),
            ("b1", "b2"),
            ("b1", "b2"),
            ("a1", "b1"),
            ("a2", "b2"),
        ],
    ))
}

/// Two circles of lengths `l1`, `l2` glued at a vertex `c`. Each circle is
/// modeled with one extra vertex and two edges of half its length.
pub fn two_loops(l1: Rational, l2: Rational) -> MetricGraph {
    let g = named(
        &["c", "a", "b"],
        &[("c", "a"), ("c", "a"), ("c", "b"), ("c", "b")],
    );
    let h1 = &l1 / int(2);
    let h2 = &l2 / int(2);
    MetricGraph::new(g, vec![h1.clone(), h1, h2.clone(), h2]).expect("positive lengths")
}

/// Theta graph: two vertices and three edges of the given lengths.
pub fn theta(lengths: [Rational; 3]) -> MetricGraph {
    MetricGraph::new(banana(2), lengths.to_vec()).expect("positive lengths")
}
