//! Edge orientations and their divisors `D_O = sum (indeg(v) - 1) v`.

use std::collections::VecDeque;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, FiniteGraph, VertexId};
use crate::rank;

/// `forward[e]` is true when edge `e` points from its tail to its head.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    pub fn new(g: &FiniteGraph, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != g.num_edges() {
            return Err(Error::validation(
                "an orientation needs one direction per edge",
            ));
        }
        Ok(Orientation { forward })
    }

    /// The orientation numbered `mask`: bit `e` set means edge `e` points
    /// forward.
    pub fn from_mask(g: &FiniteGraph, mask: u64) -> Self {
        Orientation {
            forward: (0..g.num_edges()).map(|e| mask >> e & 1 == 1).collect(),
        }
    }

    /// `(source, target)` of an edge.
    pub fn direction(&self, g: &FiniteGraph, e: EdgeId) -> (VertexId, VertexId) {
        let (t, h) = g.ends(e);
        if self.forward[e.0] {
            (t, h)
        } else {
            (h, t)
        }
    }

    pub fn indegree(&self, g: &FiniteGraph, v: VertexId) -> usize {
        g.incident(v)
            .iter()
            .filter(|&&e| self.direction(g, e).1 == v)
            .count()
    }

    pub fn divisor(&self, g: &FiniteGraph) -> Divisor {
        Divisor::from_vertex_counts(g.vertices().map(|v| (v, self.indegree(g, v) as i64 - 1)))
    }

    /// Kahn's algorithm: acyclic iff every vertex can be removed as a source.
    pub fn is_acyclic(&self, g: &FiniteGraph) -> bool {
        let mut indeg: Vec<usize> = g.vertices().map(|v| self.indegree(g, v)).collect();
        let mut queue: VecDeque<VertexId> = g.vertices().filter(|v| indeg[v.0] == 0).collect();
        let mut removed = 0;
        while let Some(u) = queue.pop_front() {
            removed += 1;
            for &e in g.incident(u) {
                let (s, t) = self.direction(g, e);
                if s == u {
                    indeg[t.0] -= 1;
                    if indeg[t.0] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        removed == g.num_vertices()
    }
}

/// Result of checking `r(D_O) = -1` iff `O` is acyclic over all
/// orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationLawReport {
    pub orientations: usize,
    pub acyclic: usize,
    pub violations: Vec<Orientation>,
}

impl OrientationLawReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Largest edge count accepted by [`orientation_rank_law`].
pub const MAX_ORIENTATION_EDGES: usize = 20;

pub fn orientation_rank_law(g: &FiniteGraph) -> Result<OrientationLawReport> {
    let m = g.num_edges();
    if m > MAX_ORIENTATION_EDGES {
        return Err(Error::domain(format!(
            "{m} edges give too many orientations to enumerate"
        )));
    }
    let mut report = OrientationLawReport {
        orientations: 0,
        acyclic: 0,
        violations: Vec::new(),
    };
    for mask in 0..(1u64 << m) {
        let o = Orientation::from_mask(g, mask);
        let acyclic = o.is_acyclic(g);
        let rank = rank::rank_finite_value(g, &o.divisor(g))?;
        report.orientations += 1;
        report.acyclic += acyclic as usize;
        if (rank == -1) != acyclic {
            report.violations.push(o);
        }
    }
    Ok(report)
}
