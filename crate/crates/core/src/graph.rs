//! Finite multigraphs, metric graphs and points on them.
//!
//! A [`FiniteGraph`] is a connected multigraph without loop edges. Every edge
//! carries a fixed orientation from its lower-indexed endpoint (the *tail*) to
//! its higher-indexed endpoint (the *head*); offsets along an edge are always
//! measured from the tail. A [`MetricGraph`] adds a positive rational length
//! to every edge and optional nonnegative vertex weights.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A point of a metric graph in canonical form.
///
/// Interior points store their offset from the tail of the edge, strictly
/// between zero and the edge length. Use [`MetricGraph::point_on_edge`] to
/// build points; it folds endpoint offsets into vertex form so that equality
/// of points is equality of values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphPoint {
    Vertex(VertexId),
    Edge { edge: EdgeId, offset: Rational },
}

impl GraphPoint {
    pub fn as_vertex(&self) -> Option<VertexId> {
        match self {
            GraphPoint::Vertex(v) => Some(*v),
            GraphPoint::Edge { .. } => None,
        }
    }

    pub fn is_vertex(&self) -> bool {
        matches!(self, GraphPoint::Vertex(_))
    }
}

impl From<VertexId> for GraphPoint {
    fn from(v: VertexId) -> Self {
        GraphPoint::Vertex(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    ends: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl FiniteGraph {
    /// Builds a graph from named vertices and named edges given by endpoint
    /// indices. Rejects loops, duplicate names and disconnected input.
    pub fn with_names(
        vertex_names: Vec<String>,
        edges: Vec<(String, usize, usize)>,
    ) -> Result<Self> {
        if vertex_names.is_empty() {
            return Err(Error::validation("graph has no vertices"));
        }
        let n = vertex_names.len();
        let mut seen = HashSet::new();
        for name in &vertex_names {
            if !seen.insert(name.as_str()) {
                return Err(Error::validation(format!("duplicate vertex name {name:?}")));
            }
        }
        let mut seen_edges = HashSet::new();
        let mut ends = Vec::with_capacity(edges.len());
        let mut edge_names = Vec::with_capacity(edges.len());
        let mut incidence = vec![Vec::new(); n];
        for (i, (name, a, b)) in edges.into_iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::validation(format!(
                    "edge {name:?} has an endpoint out of range"
                )));
            }
            if a == b {
                return Err(Error::validation(format!(
                    "edge {name:?} is a loop at {:?}; subdivide it with a midpoint vertex",
                    vertex_names[a]
                )));
            }
            if !seen_edges.insert(name.clone()) {
                return Err(Error::validation(format!("duplicate edge name {name:?}")));
            }
            let (t, h) = if a < b { (a, b) } else { (b, a) };
            ends.push((VertexId(t), VertexId(h)));
            incidence[t].push(EdgeId(i));
            incidence[h].push(EdgeId(i));
            edge_names.push(name);
        }
        let g = FiniteGraph {
            vertex_names,
            edge_names,
            ends,
            incidence,
        };
        if !g.is_connected() {
            return Err(Error::validation("graph is not connected"));
        }
        Ok(g)
    }

    /// Builds a graph on vertices `v1..vn` with edges `e1..em`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let names = (1..=n).map(|i| format!("v{i}")).collect();
        let edges = edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| (format!("e{}", i + 1), a, b))
            .collect();
        Self::with_names(names, edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn num_edges(&self) -> usize {
        self.ends.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.num_vertices()).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.num_edges()).map(EdgeId)
    }

    /// `(tail, head)` with `tail < head`.
    pub fn ends(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.ends[e.0]
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.ends[e.0];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.0]
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.incidence[v.0].len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge_names[e.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_names
            .iter()
            .position(|n| n == name)
            .map(VertexId)
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edge_names.iter().position(|n| n == name).map(EdgeId)
    }

    /// Neighbor lists with one entry per edge end (parallel edges repeat).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        self.vertices()
            .map(|v| {
                self.incident(v)
                    .iter()
                    .map(|&e| self.other_end(e, v).0)
                    .collect()
            })
            .collect()
    }

    /// Number of edges joining `a` and `b`.
    pub fn multiplicity(&self, a: VertexId, b: VertexId) -> usize {
        self.incident(a)
            .iter()
            .filter(|&&e| self.other_end(e, a) == b)
            .count()
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.num_vertices()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &e in &self.incidence[u] {
                let w = self.other_end(e, VertexId(u)).0;
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// First Betti number `|E| - |V| + 1`.
    pub fn genus(&self) -> usize {
        self.num_edges() + 1 - self.num_vertices()
    }

    /// `L = D - A`: valences on the diagonal, minus edge multiplicities off it.
    pub fn laplacian(&self) -> Vec<Vec<i64>> {
        let n = self.num_vertices();
        let mut l = vec![vec![0i64; n]; n];
        for &(a, b) in &self.ends {
            l[a.0][a.0] += 1;
            l[b.0][b.0] += 1;
            l[a.0][b.0] -= 1;
            l[b.0][a.0] -= 1;
        }
        l
    }

    /// Canonical divisor `sum (val(v) - 2) v` on the vertices.
    pub fn canonical_divisor(&self) -> Divisor {
        Divisor::from_vertex_counts(self.vertices().map(|v| (v, self.valence(v) as i64 - 2)))
    }
}

/// A metric graph given by a loopless model with positive rational edge
/// lengths and nonnegative integer vertex weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricGraph {
    model: FiniteGraph,
    lengths: Vec<Rational>,
    weights: Vec<u32>,
}

impl MetricGraph {
    pub fn new(model: FiniteGraph, lengths: Vec<Rational>) -> Result<Self> {
        if lengths.len() != model.num_edges() {
            return Err(Error::validation(format!(
                "expected {} edge lengths, got {}",
                model.num_edges(),
                lengths.len()
            )));
        }
        if let Some(e) = lengths.iter().position(|l| !l.is_positive()) {
            return Err(Error::validation(format!(
                "edge {:?} has non-positive length {}",
                model.edge_name(EdgeId(e)),
                rational::format(&lengths[e])
            )));
        }
        let weights = vec![0; model.num_vertices()];
        Ok(MetricGraph {
            model,
            lengths,
            weights,
        })
    }

    /// Regular realization: every edge has length one.
    pub fn unit(model: FiniteGraph) -> Self {
        let lengths = vec![Rational::one(); model.num_edges()];
        MetricGraph::new(model, lengths).expect("unit lengths are positive")
    }

    pub fn with_weights(mut self, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != self.model.num_vertices() {
            return Err(Error::validation("one weight per vertex is required"));
        }
        self.weights = weights;
        Ok(self)
    }

    pub fn model(&self) -> &FiniteGraph {
        &self.model
    }

    pub fn length(&self, e: EdgeId) -> &Rational {
        &self.lengths[e.0]
    }

    pub fn lengths(&self) -> &[Rational] {
        &self.lengths
    }

    pub fn weight(&self, v: VertexId) -> u32 {
        self.weights[v.0]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn has_weights(&self) -> bool {
        self.weights.iter().any(|&w| w > 0)
    }

    pub fn total_length(&self) -> Rational {
        self.lengths.iter().fold(Rational::zero(), |acc, l| acc + l)
    }

    pub fn genus(&self) -> usize {
        self.model.genus()
    }

    /// `g# = g + sum of vertex weights`.
    pub fn weighted_genus(&self) -> usize {
        self.genus() + self.weights.iter().map(|&w| w as usize).sum::<usize>()
    }

    /// `K = sum (val(v) - 2) v`, supported on points of valence other than 2.
    pub fn canonical_divisor(&self) -> Divisor {
        self.model.canonical_divisor()
    }

    /// `K# = K + sum 2 w(x) x`.
    pub fn weighted_canonical(&self) -> Divisor {
        let mut k = self.canonical_divisor();
        for v in self.model.vertices() {
            k.add_at(GraphPoint::Vertex(v), 2 * self.weight(v) as i64);
        }
        k
    }

    /// Multiplies every edge length by `factor`.
    pub fn rescale(&self, factor: &Rational) -> Result<Self> {
        if !factor.is_positive() {
            return Err(Error::validation("rescale factor must be positive"));
        }
        let mut g = self.clone();
        for l in &mut g.lengths {
            *l = &*l * factor;
        }
        Ok(g)
    }

    pub fn vertex(&self, v: VertexId) -> GraphPoint {
        GraphPoint::Vertex(v)
    }

    /// The point at `offset` from the tail of `e`, in canonical form.
    pub fn point_on_edge(&self, e: EdgeId, offset: Rational) -> Result<GraphPoint> {
        if e.0 >= self.model.num_edges() {
            return Err(Error::validation(format!("no edge with index {}", e.0)));
        }
        let len = self.length(e);
        let (t, h) = self.model.ends(e);
        if offset.is_negative() || &offset > len {
            return Err(Error::validation(format!(
                "offset {} outside edge {:?} of length {}",
                rational::format(&offset),
                self.model.edge_name(e),
                rational::format(len)
            )));
        }
        if offset.is_zero() {
            Ok(GraphPoint::Vertex(t))
        } else if &offset == len {
            Ok(GraphPoint::Vertex(h))
        } else {
            Ok(GraphPoint::Edge { edge: e, offset })
        }
    }

    /// The point at distance `dist` along `e` starting from endpoint `from`.
    pub fn point_from(&self, e: EdgeId, from: VertexId, dist: Rational) -> Result<GraphPoint> {
        let (t, h) = self.model.ends(e);
        if from == t {
            self.point_on_edge(e, dist)
        } else if from == h {
            self.point_on_edge(e, self.length(e) - dist)
        } else {
            Err(Error::validation(
                "point_from: vertex is not an endpoint of the edge",
            ))
        }
    }

    /// Checks that `p` is a canonical point of this graph.
    pub fn validate_point(&self, p: &GraphPoint) -> Result<()> {
        match p {
            GraphPoint::Vertex(v) if v.0 < self.model.num_vertices() => Ok(()),
            GraphPoint::Vertex(v) => {
                Err(Error::validation(format!("no vertex with index {}", v.0)))
            }
            GraphPoint::Edge { edge, offset } => {
                if edge.0 >= self.model.num_edges() {
                    return Err(Error::validation(format!("no edge with index {}", edge.0)));
                }
                if !offset.is_positive() || offset >= self.length(*edge) {
                    return Err(Error::validation(format!(
                        "point offset {} is not interior to edge {:?}",
                        rational::format(offset),
                        self.model.edge_name(*edge)
                    )));
                }
                Ok(())
            }
        }
    }

    /// Valence of a point: vertex valence, or 2 in an edge interior.
    pub fn valence(&self, p: &GraphPoint) -> usize {
        match p {
            GraphPoint::Vertex(v) => self.model.valence(*v),
            GraphPoint::Edge { .. } => 2,
        }
    }

    /// Inserts every listed point as a vertex. Original vertices and edge
    /// names are kept; new vertices are appended after the old ones.
    pub fn refine(&self, points: &[GraphPoint]) -> Result<Refinement> {
        let mut cuts: BTreeMap<EdgeId, BTreeSet<Rational>> = BTreeMap::new();
        for p in points {
            self.validate_point(p)?;
            if let GraphPoint::Edge { edge, offset } = p {
                cuts.entry(*edge).or_default().insert(offset.clone());
            }
        }
        let mut names: Vec<String> = self.model.vertex_names.clone();
        let mut weights = self.weights.clone();
        let mut edges = Vec::new();
        let mut lengths = Vec::new();
        let mut pieces = Vec::new();
        let mut new_points = BTreeMap::new();
        for e in self.model.edges() {
            let (t, h) = self.model.ends(e);
            let len = self.length(e).clone();
            let name = self.model.edge_name(e);
            let Some(offsets) = cuts.get(&e) else {
                edges.push((name.to_string(), t.0, h.0));
                lengths.push(len.clone());
                pieces.push(Piece {
                    old: e,
                    tail_offset: Rational::zero(),
                    head_offset: len,
                });
                continue;
            };
            let mut prev_vertex = t.0;
            let mut prev_offset = Rational::zero();
            for (k, off) in offsets.iter().enumerate() {
                let id = names.len();
                names.push(unique_name(
                    &names,
                    format!("{name}@{}", rational::format(off)),
                ));
                weights.push(0);
                new_points.insert(
                    GraphPoint::Edge {
                        edge: e,
                        offset: off.clone(),
                    },
                    VertexId(id),
                );
                edges.push((format!("{name}#{k}"), prev_vertex, id));
                lengths.push(off - &prev_offset);
                pieces.push(piece_for(e, prev_vertex, &prev_offset, id, off));
                prev_vertex = id;
                prev_offset = off.clone();
            }
            edges.push((format!("{name}#{}", offsets.len()), prev_vertex, h.0));
            lengths.push(&len - &prev_offset);
            pieces.push(piece_for(e, prev_vertex, &prev_offset, h.0, &len));
        }
        let model = FiniteGraph::with_names(names, edges)?;
        let graph = MetricGraph::new(model, lengths)?.with_weights(weights)?;
        Ok(Refinement {
            graph,
            pieces,
            new_points,
        })
    }
}

fn unique_name(existing: &[String], candidate: String) -> String {
    if !existing.contains(&candidate) {
        return candidate;
    }
    (1..)
        .map(|k| format!("{candidate}~{k}"))
        .find(|c| !existing.contains(c))
        .expect("unbounded search")
}

fn piece_for(old: EdgeId, a: usize, a_off: &Rational, b: usize, b_off: &Rational) -> Piece {
    // the refined edge is oriented from the lower index
    if a < b {
        Piece {
            old,
            tail_offset: a_off.clone(),
            head_offset: b_off.clone(),
        }
    } else {
        Piece {
            old,
            tail_offset: b_off.clone(),
            head_offset: a_off.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Piece {
    old: EdgeId,
    tail_offset: Rational,
    head_offset: Rational,
}

/// A refined model together with the maps between old and new points.
#[derive(Debug, Clone)]
pub struct Refinement {
    pub graph: MetricGraph,
    pieces: Vec<Piece>,
    new_points: BTreeMap<GraphPoint, VertexId>,
}

impl Refinement {
    /// Vertex of the refined model at an inserted point.
    pub fn vertex_of(&self, p: &GraphPoint) -> Option<VertexId> {
        match p {
            GraphPoint::Vertex(v) => Some(*v),
            GraphPoint::Edge { .. } => self.new_points.get(p).copied(),
        }
    }

    /// Maps a point of the original graph to the refined graph.
    pub fn lift(&self, p: &GraphPoint) -> GraphPoint {
        if let Some(v) = self.vertex_of(p) {
            return GraphPoint::Vertex(v);
        }
        let GraphPoint::Edge { edge, offset } = p else {
            unreachable!("vertices are handled above")
        };
        for (i, piece) in self.pieces.iter().enumerate() {
            if piece.old != *edge {
                continue;
            }
            let (lo, hi) = if piece.tail_offset < piece.head_offset {
                (&piece.tail_offset, &piece.head_offset)
            } else {
                (&piece.head_offset, &piece.tail_offset)
            };
            if lo < offset && offset < hi {
                return GraphPoint::Edge {
                    edge: EdgeId(i),
                    offset: (offset - &piece.tail_offset).abs(),
                };
            }
        }
        unreachable!("point lies on some piece of its edge")
    }

    /// Maps a point of the refined graph back to the original graph.
    pub fn project(&self, original: &MetricGraph, p: &GraphPoint) -> GraphPoint {
        match p {
            GraphPoint::Vertex(v) if v.0 < original.model.num_vertices() => p.clone(),
            GraphPoint::Vertex(v) => self
                .new_points
                .iter()
                .find(|(_, w)| *w == v)
                .map(|(q, _)| q.clone())
                .expect("every new vertex comes from an inserted point"),
            GraphPoint::Edge { edge, offset } => {
                let piece = &self.pieces[edge.0];
                let old = if piece.tail_offset < piece.head_offset {
                    &piece.tail_offset + offset
                } else {
                    &piece.tail_offset - offset
                };
                original
                    .point_on_edge(piece.old, old)
                    .expect("projected offset is within the edge")
            }
        }
    }

    /// Original edge that a refined edge belongs to.
    pub fn origin_edge(&self, e: EdgeId) -> EdgeId {
        self.pieces[e.0].old
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::rational::{frac, int};

    #[test]
    fn genus_examples() {
        assert_eq!(families::complete(4).genus(), 3);
        assert_eq!(families::path(5).genus(), 0);
        let p = families::petersen();
        assert_eq!((p.num_edges(), p.num_vertices()), (15, 10));
        assert_eq!(p.genus(), 6);
    }

    #[test]
    fn loops_and_disconnected_graphs_are_rejected() {
        assert!(FiniteGraph::from_edges(2, &[(0, 0), (0, 1)]).is_err());
        assert!(FiniteGraph::from_edges(3, &[(0, 1)]).is_err());
        assert!(FiniteGraph::from_edges(0, &[]).is_err());
    }

    #[test]
    fn laplacian_examples() {
        let single = FiniteGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(single.laplacian(), vec![vec![1, -1], vec![-1, 1]]);
        let k4 = families::complete(4).laplacian();
        for (i, row) in k4.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, if i == j { 3 } else { -1 });
            }
        }
        assert_eq!(
            families::banana(2).laplacian(),
            vec![vec![3, -3], vec![-3, 3]]
        );
    }

    #[test]
    fn canonical_divisor_examples() {
        let circle = families::circle(int(1));
        assert!(circle.canonical_divisor().is_zero());
        let k4 = MetricGraph::unit(families::complete(4));
        let k = k4.canonical_divisor();
        assert_eq!(k.degree(), 4);
        assert!(k4
            .model()
            .vertices()
            .all(|v| k.get(&GraphPoint::Vertex(v)) == 1));
        for g in 2..6 {
            let banana = MetricGraph::unit(families::banana(g));
            let k = banana.canonical_divisor();
            let gi = g as i64;
            assert_eq!(k.get(&GraphPoint::Vertex(VertexId(0))), gi - 1);
            assert_eq!(k.get(&GraphPoint::Vertex(VertexId(1))), gi - 1);
        }
    }

    #[test]
    fn weighted_canonical_examples() {
        let point = MetricGraph::unit(FiniteGraph::from_edges(1, &[]).unwrap())
            .with_weights(vec![2])
            .unwrap();
        let k = point.weighted_canonical();
        assert_eq!(k.get(&GraphPoint::Vertex(VertexId(0))), 2);
        assert_eq!(point.weighted_genus(), 2);
        assert_eq!(k.degree(), 2 * 2 - 2);

        let banana = MetricGraph::unit(families::banana(3))
            .with_weights(vec![1, 0])
            .unwrap();
        let k = banana.weighted_canonical();
        assert_eq!(k.get(&GraphPoint::Vertex(VertexId(0))), 4);
        assert_eq!(k.get(&GraphPoint::Vertex(VertexId(1))), 2);
        assert_eq!(k.degree(), 6);
        assert_eq!(banana.weighted_genus(), 4);

        let plain = MetricGraph::unit(families::complete(4));
        assert_eq!(plain.weighted_canonical(), plain.canonical_divisor());
    }

    #[test]
    fn refine_examples() {
        let k4 = MetricGraph::unit(families::complete(4));
        let same = k4.refine(&[GraphPoint::Vertex(VertexId(2))]).unwrap();
        assert_eq!(same.graph, k4);

        let segment = MetricGraph::unit(families::path(2));
        let third = segment.point_on_edge(EdgeId(0), frac(1, 3)).unwrap();
        let r = segment.refine(std::slice::from_ref(&third)).unwrap();
        let mut lens: Vec<_> = r.graph.lengths().to_vec();
        lens.sort();
        assert_eq!(lens, vec![frac(1, 3), frac(2, 3)]);
        assert_eq!(r.project(&segment, &r.lift(&third)), third);

        let circle = families::circle(int(1));
        let mid = circle.point_on_edge(EdgeId(0), frac(1, 4)).unwrap();
        let r = circle.refine(&[mid]).unwrap();
        let mut lens: Vec<_> = r.graph.lengths().to_vec();
        lens.sort();
        assert_eq!(lens, vec![frac(1, 4), frac(1, 4), frac(1, 2)]);
        assert_eq!(r.graph.total_length(), int(1));
    }

    #[test]
    fn lift_and_project_interior_points() {
        let circle = families::circle(int(1));
        let cut = circle.point_on_edge(EdgeId(1), frac(1, 8)).unwrap();
        let r = circle.refine(&[cut]).unwrap();
        for (e, off) in [(1, frac(1, 16)), (1, frac(3, 8)), (0, frac(1, 5))] {
            let p = circle.point_on_edge(EdgeId(e), off).unwrap();
            let lifted = r.lift(&p);
            r.graph.validate_point(&lifted).unwrap();
            assert_eq!(r.project(&circle, &lifted), p);
        }
    }

    #[test]
    fn point_normalization() {
        let seg = MetricGraph::unit(families::path(2));
        assert_eq!(
            seg.point_on_edge(EdgeId(0), int(0)).unwrap(),
            GraphPoint::Vertex(VertexId(0))
        );
        assert_eq!(
            seg.point_on_edge(EdgeId(0), int(1)).unwrap(),
            GraphPoint::Vertex(VertexId(1))
        );
        assert_eq!(
            seg.point_from(EdgeId(0), VertexId(1), frac(1, 4)).unwrap(),
            seg.point_on_edge(EdgeId(0), frac(3, 4)).unwrap()
        );
        assert!(seg.point_on_edge(EdgeId(0), int(2)).is_err());
    }
}
