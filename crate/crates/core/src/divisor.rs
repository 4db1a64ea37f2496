//! Divisors: finitely supported integer chip configurations on the points of
//! a graph. The same type serves finite graphs (vertex support only) and
//! metric graphs.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, GraphPoint, MetricGraph, VertexId};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Divisor {
    chips: BTreeMap<GraphPoint, i64>,
}

impl Divisor {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` chips at one point.
    pub fn point(p: GraphPoint, n: i64) -> Self {
        let mut d = Self::new();
        d.add_at(p, n);
        d
    }

    pub fn vertex(v: VertexId, n: i64) -> Self {
        Self::point(GraphPoint::Vertex(v), n)
    }

    pub fn from_points(items: impl IntoIterator<Item = (GraphPoint, i64)>) -> Self {
        let mut d = Self::new();
        for (p, n) in items {
            d.add_at(p, n);
        }
        d
    }

    pub fn from_vertex_counts(items: impl IntoIterator<Item = (VertexId, i64)>) -> Self {
        Self::from_points(items.into_iter().map(|(v, n)| (GraphPoint::Vertex(v), n)))
    }

    /// Reads a dense vertex vector, index `i` being vertex `i`.
    pub fn from_vertex_vec(counts: &[i64]) -> Self {
        Self::from_vertex_counts(counts.iter().enumerate().map(|(i, &n)| (VertexId(i), n)))
    }

    /// Dense vertex vector, or `None` if some chip sits off the vertices.
    pub fn to_vertex_vec(&self, num_vertices: usize) -> Option<Vec<i64>> {
        let mut out = vec![0; num_vertices];
        for (p, &n) in &self.chips {
            match p {
                GraphPoint::Vertex(v) if v.0 < num_vertices => out[v.0] = n,
                _ => return None,
            }
        }
        Some(out)
    }

    pub fn get(&self, p: &GraphPoint) -> i64 {
        self.chips.get(p).copied().unwrap_or(0)
    }

    pub fn at_vertex(&self, v: VertexId) -> i64 {
        self.get(&GraphPoint::Vertex(v))
    }

    pub fn add_at(&mut self, p: GraphPoint, n: i64) {
        if n == 0 {
            return;
        }
        match self.chips.entry(p) {
            Entry::Vacant(e) => {
                e.insert(n);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += n;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> i64 {
        self.chips.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.chips.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.chips.values().all(|&n| n >= 0)
    }

    /// Points with nonzero coefficient, in canonical order.
    pub fn support(&self) -> impl Iterator<Item = &GraphPoint> {
        self.chips.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GraphPoint, i64)> {
        self.chips.iter().map(|(p, &n)| (p, n))
    }

    pub fn is_vertex_supported(&self) -> bool {
        self.chips.keys().all(GraphPoint::is_vertex)
    }

    pub fn positive_part(&self) -> Self {
        Self::from_points(
            self.iter()
                .filter(|(_, n)| *n > 0)
                .map(|(p, n)| (p.clone(), n)),
        )
    }

    pub fn negative_part(&self) -> Self {
        Self::from_points(
            self.iter()
                .filter(|(_, n)| *n < 0)
                .map(|(p, n)| (p.clone(), -n)),
        )
    }

    /// `self >= other` coefficientwise.
    pub fn dominates(&self, other: &Divisor) -> bool {
        (self - other).is_effective()
    }

    /// Checks every support point against the graph.
    pub fn validate(&self, g: &MetricGraph) -> Result<()> {
        self.chips.keys().try_for_each(|p| g.validate_point(p))
    }

    /// Checks that the divisor lives on the vertices of `g`.
    pub fn validate_finite(&self, g: &FiniteGraph) -> Result<Vec<i64>> {
        self.to_vertex_vec(g.num_vertices())
            .ok_or_else(|| Error::validation("divisor must be supported on graph vertices"))
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, n) in rhs.iter() {
            out.add_at(p.clone(), n);
        }
        out
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, n) in rhs.iter() {
            out.add_at(p.clone(), -n);
        }
        out
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        Divisor::from_points(self.iter().map(|(p, n)| (p.clone(), -n)))
    }
}

impl Mul<i64> for &Divisor {
    type Output = Divisor;
    fn mul(self, k: i64) -> Divisor {
        Divisor::from_points(self.iter().map(|(p, n)| (p.clone(), n * k)))
    }
}

impl Add for Divisor {
    type Output = Divisor;
    fn add(self, rhs: Divisor) -> Divisor {
        &self + &rhs
    }
}

impl Sub for Divisor {
    type Output = Divisor;
    fn sub(self, rhs: Divisor) -> Divisor {
        &self - &rhs
    }
}
