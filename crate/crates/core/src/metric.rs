//! Reduced divisors and linear equivalence on metric graphs.
//!
//! The burning process runs on a working model whose vertices are the model
//! vertices, the base point and the support of the divisor. Firing the
//! unburnt region moves chips along the edges leaving it until a chip lands
//! on a new point or reaches the far endpoint; the distance travelled is the
//! shortest such edge, so the step is exact in rational arithmetic.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::burn::dhar_burn;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::finite::{self, Engine};
use crate::graph::{EdgeId, FiniteGraph, GraphPoint, MetricGraph, VertexId};
use crate::pl::PlFunction;
use crate::rational::{self, Rational};

/// Output of [`reduce`]: the reduced divisor, a witness `f` with
/// `d + div(f) = divisor`, and the unburnt points of every firing round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricReduction {
    pub divisor: Divisor,
    pub witness: PlFunction,
    pub trace: Vec<Vec<GraphPoint>>,
}

#[derive(Debug, Clone)]
struct Seg {
    edge: EdgeId,
    lo: usize,
    hi: usize,
    lo_off: Rational,
    hi_off: Rational,
}

impl Seg {
    fn len(&self) -> Rational {
        &self.hi_off - &self.lo_off
    }
}

/// Working model: host vertices first, then extra points on edge interiors.
struct Work<'g> {
    g: &'g MetricGraph,
    pos: Vec<GraphPoint>,
    chips: Vec<i64>,
    value: Vec<Rational>,
    protected: Vec<bool>,
    alive: Vec<bool>,
    segs: Vec<Seg>,
    track: bool,
}

impl<'g> Work<'g> {
    fn new(g: &'g MetricGraph, d: &Divisor, extra: &[GraphPoint], track: bool) -> Self {
        let n = g.model().num_vertices();
        let mut pos: Vec<GraphPoint> = g.model().vertices().map(GraphPoint::Vertex).collect();
        let mut interior: Vec<GraphPoint> = d
            .support()
            .chain(extra)
            .filter(|p| !p.is_vertex())
            .cloned()
            .collect();
        interior.sort();
        interior.dedup();
        pos.extend(interior);
        let mut chips = vec![0; pos.len()];
        let mut protected = vec![false; pos.len()];
        for (i, p) in pos.iter().enumerate() {
            chips[i] = d.get(p);
            protected[i] = i < n || d.get(p) != 0 || extra.contains(p);
        }
        let mut segs = Vec::new();
        for e in g.model().edges() {
            let (t, h) = g.model().ends(e);
            let mut prev = (t.0, Rational::zero());
            for (i, p) in pos.iter().enumerate().skip(n) {
                if let GraphPoint::Edge { edge, offset } = p {
                    if *edge == e {
                        segs.push(Seg {
                            edge: e,
                            lo: prev.0,
                            hi: i,
                            lo_off: prev.1.clone(),
                            hi_off: offset.clone(),
                        });
                        prev = (i, offset.clone());
                    }
                }
            }
            segs.push(Seg {
                edge: e,
                lo: prev.0,
                hi: h.0,
                lo_off: prev.1,
                hi_off: g.length(e).clone(),
            });
        }
        let len = pos.len();
        Work {
            g,
            pos,
            chips,
            value: vec![Rational::zero(); len],
            protected,
            alive: vec![true; len],
            segs,
            track,
        }
    }

    fn index_of(&self, p: &GraphPoint) -> usize {
        self.pos
            .iter()
            .enumerate()
            .position(|(i, q)| self.alive[i] && q == p)
            .expect("point is a working vertex")
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.pos.len()];
        for s in &self.segs {
            adj[s.lo].push(s.hi);
            adj[s.hi].push(s.lo);
        }
        adj
    }

    fn unburnt(&self, base: usize) -> Vec<bool> {
        let burnt = dhar_burn(&self.adjacency(), &self.chips, base);
        burnt
            .iter()
            .zip(&self.alive)
            .map(|(&b, &a)| a && !b)
            .collect()
    }

    fn add_node(&mut self, p: GraphPoint, chips: i64, value: Rational) -> usize {
        self.pos.push(p);
        self.chips.push(chips);
        self.value.push(value);
        self.protected.push(false);
        self.alive.push(true);
        self.pos.len() - 1
    }

    /// Fires the unburnt region by the largest distance that keeps every
    /// edge leaving it free of interior chips.
    fn fire(&mut self, inside: &[bool]) {
        let cut: Vec<usize> = (0..self.segs.len())
            .filter(|&i| inside[self.segs[i].lo] != inside[self.segs[i].hi])
            .collect();
        let t = cut
            .iter()
            .map(|&i| self.segs[i].len())
            .min()
            .expect("unburnt region has a boundary");
        let mut new_segs = Vec::new();
        for &i in &cut {
            let s = self.segs[i].clone();
            let from_lo = inside[s.lo];
            let (a, b) = if from_lo { (s.lo, s.hi) } else { (s.hi, s.lo) };
            self.chips[a] -= 1;
            if s.len() == t {
                self.chips[b] += 1;
                continue;
            }
            let off = if from_lo {
                &s.lo_off + &t
            } else {
                &s.hi_off - &t
            };
            let value = if self.track {
                &self.value[s.lo]
                    + (&self.value[s.hi] - &self.value[s.lo]) * (&off - &s.lo_off) / s.len()
            } else {
                Rational::zero()
            };
            let p = GraphPoint::Edge {
                edge: s.edge,
                offset: off.clone(),
            };
            let x = self.add_node(p, 1, value);
            self.segs[i].hi = x;
            self.segs[i].hi_off = off.clone();
            new_segs.push(Seg {
                edge: s.edge,
                lo: x,
                hi: s.hi,
                lo_off: off,
                hi_off: s.hi_off,
            });
        }
        self.segs.extend(new_segs);
        if self.track {
            for (u, &i) in inside.iter().enumerate() {
                if i {
                    self.value[u] -= &t;
                }
            }
        }
        self.cleanup();
    }

    /// Merges unprotected interior points that carry no chips.
    fn cleanup(&mut self) {
        let n = self.g.model().num_vertices();
        for x in n..self.pos.len() {
            if !self.alive[x] || self.protected[x] || self.chips[x] != 0 {
                continue;
            }
            let left = self
                .segs
                .iter()
                .position(|s| s.hi == x)
                .expect("interior point");
            let right = self
                .segs
                .iter()
                .position(|s| s.lo == x)
                .expect("interior point");
            let r = self.segs[right].clone();
            self.segs[left].hi = r.hi;
            self.segs[left].hi_off = r.hi_off;
            self.segs.swap_remove(right);
            self.alive[x] = false;
        }
    }

    fn reduce_effective(&mut self, base: usize, mut trace: Option<&mut Vec<Vec<GraphPoint>>>) {
        loop {
            let inside = self.unburnt(base);
            if !inside.iter().any(|&i| i) {
                return;
            }
            if let Some(t) = trace.as_deref_mut() {
                let mut pts: Vec<GraphPoint> = (0..inside.len())
                    .filter(|&i| inside[i])
                    .map(|i| self.pos[i].clone())
                    .collect();
                pts.sort();
                t.push(pts);
            }
            self.fire(&inside);
        }
    }

    fn reduce(&mut self, q: usize, trace: Option<&mut Vec<Vec<GraphPoint>>>) {
        let deficits: Vec<(usize, i64)> = (0..self.pos.len())
            .filter(|&v| v != q && self.chips[v] < 0)
            .map(|v| (v, -self.chips[v]))
            .collect();
        if deficits.is_empty() {
            self.reduce_effective(q, trace);
            return;
        }
        for &(v, _) in &deficits {
            self.chips[v] = 0;
        }
        let positive: i64 = self.chips.iter().filter(|&&c| c > 0).sum();
        let genus = self.g.genus() as i64;
        let mut borrowed = (genus + 1 - positive).max(-self.chips[q]).max(0);
        self.chips[q] += borrowed;
        for &(x, count) in &deficits {
            for _ in 0..count {
                self.reduce_effective(x, None);
                while self.chips[x] < 1 {
                    self.chips[q] += 1;
                    borrowed += 1;
                    self.reduce_effective(x, None);
                }
                self.chips[x] -= 1;
            }
        }
        self.reduce_effective(q, trace);
        self.chips[q] -= borrowed;
    }

    fn divisor(&self) -> Divisor {
        Divisor::from_points(
            (0..self.pos.len())
                .filter(|&i| self.alive[i])
                .map(|i| (self.pos[i].clone(), self.chips[i])),
        )
    }

    fn witness(&self) -> PlFunction {
        let n = self.g.model().num_vertices();
        let vertex_values = self.value[..n].to_vec();
        let mut breaks = vec![Vec::new(); self.g.model().num_edges()];
        for i in n..self.pos.len() {
            if let (true, GraphPoint::Edge { edge, offset }) = (self.alive[i], &self.pos[i]) {
                breaks[edge.0].push((offset.clone(), self.value[i].clone()));
            }
        }
        for b in &mut breaks {
            b.sort();
        }
        PlFunction::new(self.g, vertex_values, breaks).expect("firing moves have integer slopes")
    }
}

/// Common edge length if all edges have the same length.
fn uniform_length(g: &MetricGraph) -> Option<&Rational> {
    let first = g.lengths().first()?;
    g.lengths().iter().all(|l| l == first).then_some(first)
}

fn finite_fast_path(g: &MetricGraph, d: &Divisor, q: &GraphPoint) -> Option<Vec<i64>> {
    if !q.is_vertex() {
        return None;
    }
    uniform_length(g)?;
    d.to_vertex_vec(g.model().num_vertices())
}

fn check_inputs(g: &MetricGraph, d: &Divisor, q: &GraphPoint) -> Result<()> {
    d.validate(g)?;
    g.validate_point(q)
}

/// The unique `q`-reduced divisor equivalent to `d`, with a witness.
pub fn reduce(g: &MetricGraph, d: &Divisor, q: &GraphPoint) -> Result<MetricReduction> {
    check_inputs(g, d, q)?;
    if let Some(mut chips) = finite_fast_path(g, d, q) {
        let len = uniform_length(g).expect("checked").clone();
        let engine = Engine::new(g.model());
        let mut script = vec![0; chips.len()];
        let mut trace = Vec::new();
        let qi = q.as_vertex().expect("checked").0;
        engine.reduce(&mut chips, qi, Some(&mut script), Some(&mut trace));
        let values = script.iter().map(|&s| rational::int(s) * &len).collect();
        return Ok(MetricReduction {
            divisor: Divisor::from_vertex_vec(&chips),
            witness: PlFunction::from_vertex_values(g, values).expect("integer slopes"),
            trace: trace
                .into_iter()
                .map(|s| {
                    s.into_iter()
                        .map(|v| GraphPoint::Vertex(VertexId(v)))
                        .collect()
                })
                .collect(),
        });
    }
    let mut work = Work::new(g, d, std::slice::from_ref(q), true);
    let qi = work.index_of(q);
    let mut trace = Vec::new();
    work.reduce(qi, Some(&mut trace));
    Ok(MetricReduction {
        divisor: work.divisor(),
        witness: work.witness(),
        trace,
    })
}

/// Reduced divisor only, skipping witness bookkeeping.
pub fn reduced_divisor(g: &MetricGraph, d: &Divisor, q: &GraphPoint) -> Divisor {
    if let Some(mut chips) = finite_fast_path(g, d, q) {
        let qi = q.as_vertex().expect("checked").0;
        Engine::new(g.model()).reduce(&mut chips, qi, None, None);
        return Divisor::from_vertex_vec(&chips);
    }
    let mut work = Work::new(g, d, std::slice::from_ref(q), false);
    let qi = work.index_of(q);
    work.reduce(qi, None);
    work.divisor()
}

/// Points of the working model left unburnt by a fire started at `q`. The
/// unburnt closed set is the union of these points and the segments joining
/// two of them. Empty iff `d` is `q`-reduced.
pub fn dhar_unburnt(g: &MetricGraph, d: &Divisor, q: &GraphPoint) -> Result<Vec<GraphPoint>> {
    check_inputs(g, d, q)?;
    if let Some((p, _)) = d.iter().find(|(p, n)| *p != q && *n < 0) {
        return Err(Error::precondition(format!(
            "divisor is negative at {p:?}, away from the base point"
        )));
    }
    let work = Work::new(g, d, std::slice::from_ref(q), false);
    let inside = work.unburnt(work.index_of(q));
    let mut pts: Vec<GraphPoint> = (0..inside.len())
        .filter(|&i| inside[i])
        .map(|i| work.pos[i].clone())
        .collect();
    pts.sort();
    Ok(pts)
}

pub fn is_reduced(g: &MetricGraph, d: &Divisor, q: &GraphPoint) -> Result<bool> {
    check_inputs(g, d, q)?;
    if d.iter().any(|(p, n)| p != q && n < 0) {
        return Ok(false);
    }
    Ok(dhar_unburnt(g, d, q)?.is_empty())
}

/// Decides `d1 ~ d2` by reducing the difference at the first vertex.
pub fn is_equivalent(g: &MetricGraph, d1: &Divisor, d2: &Divisor) -> Result<bool> {
    d1.validate(g)?;
    d2.validate(g)?;
    if d1.degree() != d2.degree() {
        return Ok(false);
    }
    let q = GraphPoint::Vertex(VertexId(0));
    Ok(reduced_divisor(g, &(d1 - d2), &q).is_zero())
}

/// Whether `d` is equivalent to an effective divisor.
pub fn is_effective_class(g: &MetricGraph, d: &Divisor) -> bool {
    let q = GraphPoint::Vertex(VertexId(0));
    reduced_divisor(g, d, &q).get(&q) >= 0
}

/// Independent reduction: scale all lengths and offsets to integers,
/// subdivide into unit edges and reduce on the resulting finite graph.
/// Practical only when the common denominator is small.
pub fn reduce_by_subdivision(g: &MetricGraph, d: &Divisor, q: &GraphPoint) -> Result<Divisor> {
    check_inputs(g, d, q)?;
    let offsets: Vec<Rational> = d
        .support()
        .chain(std::iter::once(q))
        .filter_map(|p| match p {
            GraphPoint::Edge { offset, .. } => Some(offset.clone()),
            GraphPoint::Vertex(_) => None,
        })
        .collect();
    let scale = rational::common_denominator(g.lengths().iter().chain(&offsets));
    let scale_r = Rational::from_integer(scale.clone());
    let n = g.model().num_vertices();
    let mut names: Vec<String> = g.model().vertex_names().to_vec();
    let mut edges = Vec::new();
    // first subdivision vertex of each edge
    let mut first = Vec::new();
    for e in g.model().edges() {
        let (t, h) = g.model().ends(e);
        let units = (g.length(e) * &scale_r)
            .to_integer()
            .to_usize()
            .ok_or_else(|| Error::domain("subdivision too large"))?;
        first.push(names.len());
        let mut prev = t.0;
        for j in 1..units {
            let id = names.len();
            names.push(format!("{}#{j}", g.model().edge_name(e)));
            edges.push((format!("{}#s{j}", g.model().edge_name(e)), prev, id));
            prev = id;
        }
        edges.push((format!("{}#s{units}", g.model().edge_name(e)), prev, h.0));
    }
    let fine = FiniteGraph::with_names(names, edges)?;
    let to_fine = |p: &GraphPoint| -> usize {
        match p {
            GraphPoint::Vertex(v) => v.0,
            GraphPoint::Edge { edge, offset } => {
                let j = (offset * &scale_r).to_integer().to_usize().expect("small");
                first[edge.0] + j - 1
            }
        }
    };
    let fine_d = Divisor::from_vertex_counts(d.iter().map(|(p, c)| (VertexId(to_fine(p)), c)));
    let reduced = finite::reduce(&fine, &fine_d, VertexId(to_fine(q)))?.divisor;
    let mut out = Divisor::new();
    for (p, c) in reduced.iter() {
        let v = p.as_vertex().expect("finite divisors live on vertices").0;
        if v < n {
            out.add_at(p.clone(), c);
            continue;
        }
        let e = first
            .iter()
            .rposition(|&f| f <= v)
            .expect("subdivision vertex");
        let j = BigInt::from(v - first[e] + 1);
        let off = Rational::new(j, scale.clone());
        out.add_at(g.point_on_edge(EdgeId(e), off)?, c);
    }
    Ok(out)
}
