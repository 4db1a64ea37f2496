//! Continuous piecewise-linear functions with integer slopes on a metric
//! graph.
//!
//! A function stores its value at every model vertex and, for every edge,
//! the sorted interior breakpoints `(offset, value)`. Between consecutive
//! breakpoints it is linear. Breakpoints where the slope does not change are
//! dropped, so two functions are equal exactly when their stored data is.

use num_traits::{Signed, Zero};

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, GraphPoint, MetricGraph, VertexId};
use crate::rational::{self, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlFunction {
    vertex_values: Vec<Rational>,
    edge_breaks: Vec<Vec<(Rational, Rational)>>,
}

impl PlFunction {
    /// Validates sizes, offsets and integrality of every slope.
    pub fn new(
        g: &MetricGraph,
        vertex_values: Vec<Rational>,
        edge_breaks: Vec<Vec<(Rational, Rational)>>,
    ) -> Result<Self> {
        let model = g.model();
        if vertex_values.len() != model.num_vertices() || edge_breaks.len() != model.num_edges() {
            return Err(Error::validation(
                "piecewise-linear function needs one value per vertex and one breakpoint list per edge",
            ));
        }
        let mut f = PlFunction {
            vertex_values,
            edge_breaks,
        };
        for e in model.edges() {
            let breaks = &f.edge_breaks[e.0];
            let len = g.length(e);
            for w in breaks.windows(2) {
                if w[0].0 >= w[1].0 {
                    return Err(Error::validation(format!(
                        "breakpoints on edge {:?} are not strictly increasing",
                        model.edge_name(e)
                    )));
                }
            }
            if let Some((o, _)) = breaks.iter().find(|(o, _)| !o.is_positive() || o >= len) {
                return Err(Error::validation(format!(
                    "breakpoint offset {} is not interior to edge {:?}",
                    rational::format(o),
                    model.edge_name(e)
                )));
            }
            for w in f.profile(g, e).windows(2) {
                let slope = (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0);
                if !slope.is_integer() {
                    return Err(Error::validation(format!(
                        "non-integer slope {} on edge {:?}",
                        rational::format(&slope),
                        model.edge_name(e)
                    )));
                }
            }
        }
        f.normalize(g);
        Ok(f)
    }

    pub fn constant(g: &MetricGraph, c: Rational) -> Self {
        PlFunction {
            vertex_values: vec![c; g.model().num_vertices()],
            edge_breaks: vec![Vec::new(); g.model().num_edges()],
        }
    }

    pub fn zero(g: &MetricGraph) -> Self {
        Self::constant(g, Rational::zero())
    }

    /// Linear on every edge; fails unless every edge slope is an integer.
    pub fn from_vertex_values(g: &MetricGraph, values: Vec<Rational>) -> Result<Self> {
        let breaks = vec![Vec::new(); g.model().num_edges()];
        Self::new(g, values, breaks)
    }

    pub fn from_integer_vertex_values(g: &MetricGraph, values: &[i64]) -> Result<Self> {
        Self::from_vertex_values(g, values.iter().map(|&v| int(v)).collect())
    }

    pub fn vertex_value(&self, v: VertexId) -> &Rational {
        &self.vertex_values[v.0]
    }

    pub fn vertex_values(&self) -> &[Rational] {
        &self.vertex_values
    }

    /// Interior breakpoints of `e`, sorted by offset.
    pub fn edge_breaks(&self, e: EdgeId) -> &[(Rational, Rational)] {
        &self.edge_breaks[e.0]
    }

    /// Breakpoints of `e` including both endpoints.
    pub fn profile(&self, g: &MetricGraph, e: EdgeId) -> Vec<(Rational, Rational)> {
        let (t, h) = g.model().ends(e);
        let mut out = Vec::with_capacity(self.edge_breaks[e.0].len() + 2);
        out.push((Rational::zero(), self.vertex_values[t.0].clone()));
        out.extend(self.edge_breaks[e.0].iter().cloned());
        out.push((g.length(e).clone(), self.vertex_values[h.0].clone()));
        out
    }

    /// Value at `offset` along `e`.
    pub fn eval_on_edge(&self, g: &MetricGraph, e: EdgeId, offset: &Rational) -> Rational {
        interpolate(&self.profile(g, e), offset)
    }

    pub fn eval(&self, g: &MetricGraph, p: &GraphPoint) -> Rational {
        match p {
            GraphPoint::Vertex(v) => self.vertex_values[v.0].clone(),
            GraphPoint::Edge { edge, offset } => self.eval_on_edge(g, *edge, offset),
        }
    }

    /// Slopes of `f` leaving `p` in each tangent direction. At a vertex the
    /// directions follow the incidence order; at an interior point they are
    /// toward the head, then toward the tail.
    pub fn outgoing_slopes(&self, g: &MetricGraph, p: &GraphPoint) -> Vec<Rational> {
        match p {
            GraphPoint::Vertex(v) => g
                .model()
                .incident(*v)
                .iter()
                .map(|&e| {
                    let prof = self.profile(g, e);
                    let (t, _) = g.model().ends(e);
                    let (at, near) = if t == *v {
                        (&prof[0], &prof[1])
                    } else {
                        (&prof[prof.len() - 1], &prof[prof.len() - 2])
                    };
                    (&near.1 - &at.1) / (&at.0 - &near.0).abs()
                })
                .collect(),
            GraphPoint::Edge { edge, offset } => {
                let prof = self.profile(g, *edge);
                let value = interpolate(&prof, offset);
                let before = prof
                    .iter()
                    .rev()
                    .find(|(o, _)| o < offset)
                    .expect("tail precedes");
                let after = prof.iter().find(|(o, _)| o > offset).expect("head follows");
                vec![
                    (&after.1 - &value) / (&after.0 - offset),
                    (&before.1 - &value) / (offset - &before.0),
                ]
            }
        }
    }

    /// Sum of the incoming slopes at `p`.
    pub fn ord_at(&self, g: &MetricGraph, p: &GraphPoint) -> i64 {
        let total = self
            .outgoing_slopes(g, p)
            .into_iter()
            .fold(Rational::zero(), |acc, s| acc - s);
        rational::to_i64(&total).expect("slopes are integers")
    }

    /// `div(f) = sum ord_p(f) p`.
    pub fn div(&self, g: &MetricGraph) -> Divisor {
        let mut d = Divisor::new();
        for p in self.breakpoints(g) {
            let n = self.ord_at(g, &p);
            d.add_at(p, n);
        }
        d
    }

    /// All vertices followed by all interior breakpoints.
    pub fn breakpoints(&self, g: &MetricGraph) -> Vec<GraphPoint> {
        let mut out: Vec<GraphPoint> = g.model().vertices().map(GraphPoint::Vertex).collect();
        for e in g.model().edges() {
            out.extend(self.edge_breaks[e.0].iter().map(|(o, _)| GraphPoint::Edge {
                edge: e,
                offset: o.clone(),
            }));
        }
        out
    }

    pub fn add(&self, g: &MetricGraph, other: &PlFunction) -> PlFunction {
        self.combine(g, other, |a, b| a + b)
    }

    pub fn sub(&self, g: &MetricGraph, other: &PlFunction) -> PlFunction {
        self.combine(g, other, |a, b| a - b)
    }

    pub fn neg(&self) -> PlFunction {
        PlFunction {
            vertex_values: self.vertex_values.iter().map(|v| -v).collect(),
            edge_breaks: self
                .edge_breaks
                .iter()
                .map(|b| b.iter().map(|(o, v)| (o.clone(), -v)).collect())
                .collect(),
        }
    }

    /// Integer multiple; slopes stay integral.
    pub fn scale(&self, k: i64) -> PlFunction {
        let k = int(k);
        PlFunction {
            vertex_values: self.vertex_values.iter().map(|v| v * &k).collect(),
            edge_breaks: self
                .edge_breaks
                .iter()
                .map(|b| b.iter().map(|(o, v)| (o.clone(), v * &k)).collect())
                .collect(),
        }
    }

    pub fn add_constant(&self, c: &Rational) -> PlFunction {
        PlFunction {
            vertex_values: self.vertex_values.iter().map(|v| v + c).collect(),
            edge_breaks: self
                .edge_breaks
                .iter()
                .map(|b| b.iter().map(|(o, v)| (o.clone(), v + c)).collect())
                .collect(),
        }
    }

    fn combine(
        &self,
        g: &MetricGraph,
        other: &PlFunction,
        op: impl Fn(&Rational, &Rational) -> Rational,
    ) -> PlFunction {
        let vertex_values = self
            .vertex_values
            .iter()
            .zip(&other.vertex_values)
            .map(|(a, b)| op(a, b))
            .collect();
        let mut edge_breaks = Vec::with_capacity(self.edge_breaks.len());
        for e in g.model().edges() {
            let pa = self.profile(g, e);
            let pb = other.profile(g, e);
            let mut offsets: Vec<Rational> = self.edge_breaks[e.0]
                .iter()
                .chain(&other.edge_breaks[e.0])
                .map(|(o, _)| o.clone())
                .collect();
            offsets.sort();
            offsets.dedup();
            edge_breaks.push(
                offsets
                    .into_iter()
                    .map(|o| {
                        let v = op(&interpolate(&pa, &o), &interpolate(&pb, &o));
                        (o, v)
                    })
                    .collect(),
            );
        }
        let mut f = PlFunction {
            vertex_values,
            edge_breaks,
        };
        f.normalize(g);
        f
    }

    /// Pointwise minimum of a nonempty family.
    pub fn min_of(g: &MetricGraph, fs: &[PlFunction]) -> Result<PlFunction> {
        if fs.is_empty() {
            return Err(Error::validation("minimum of an empty family"));
        }
        let vertex_values = g
            .model()
            .vertices()
            .map(|v| {
                fs.iter()
                    .map(|f| f.vertex_values[v.0].clone())
                    .min()
                    .expect("nonempty")
            })
            .collect();
        let mut edge_breaks = Vec::new();
        for e in g.model().edges() {
            let profiles: Vec<_> = fs.iter().map(|f| f.profile(g, e)).collect();
            let offsets = common_offsets(&profiles);
            let inner = &offsets[1..offsets.len() - 1];
            edge_breaks.push(
                inner
                    .iter()
                    .map(|o| {
                        let v = profiles
                            .iter()
                            .map(|p| interpolate(p, o))
                            .min()
                            .expect("nonempty");
                        (o.clone(), v)
                    })
                    .collect(),
            );
        }
        let mut f = PlFunction {
            vertex_values,
            edge_breaks,
        };
        f.normalize(g);
        Ok(f)
    }

    fn normalize(&mut self, g: &MetricGraph) {
        for e in g.model().edges() {
            let prof = self.profile(g, e);
            let mut keep = Vec::new();
            for i in 1..prof.len() - 1 {
                let left = (&prof[i].1 - &prof[i - 1].1) / (&prof[i].0 - &prof[i - 1].0);
                let right = (&prof[i + 1].1 - &prof[i].1) / (&prof[i + 1].0 - &prof[i].0);
                if left != right {
                    keep.push(prof[i].clone());
                }
            }
            self.edge_breaks[e.0] = keep;
        }
    }
}

/// Linear interpolation in a sorted profile that covers `offset`.
pub(crate) fn interpolate(profile: &[(Rational, Rational)], offset: &Rational) -> Rational {
    let idx = profile.partition_point(|(o, _)| o < offset);
    if idx < profile.len() && &profile[idx].0 == offset {
        return profile[idx].1.clone();
    }
    assert!(idx > 0 && idx < profile.len(), "offset outside the edge");
    let (o0, v0) = &profile[idx - 1];
    let (o1, v1) = &profile[idx];
    v0 + (v1 - v0) * (offset - o0) / (o1 - o0)
}

/// Offsets along one edge (endpoints included) such that every profile is
/// linear between consecutive offsets and no two profiles cross strictly
/// between them.
pub(crate) fn common_offsets(profiles: &[Vec<(Rational, Rational)>]) -> Vec<Rational> {
    let mut offsets: Vec<Rational> = profiles
        .iter()
        .flat_map(|p| p.iter().map(|(o, _)| o.clone()))
        .collect();
    offsets.sort();
    offsets.dedup();
    let mut extra = Vec::new();
    for w in offsets.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let at_a: Vec<Rational> = profiles.iter().map(|p| interpolate(p, a)).collect();
        let at_b: Vec<Rational> = profiles.iter().map(|p| interpolate(p, b)).collect();
        for i in 0..profiles.len() {
            for j in i + 1..profiles.len() {
                let da = &at_a[i] - &at_a[j];
                let db = &at_b[i] - &at_b[j];
                if (da.is_positive() && db.is_negative()) || (da.is_negative() && db.is_positive())
                {
                    extra.push(a + (b - a) * &da / (&da - &db));
                }
            }
        }
    }
    offsets.extend(extra);
    offsets.sort();
    offsets.dedup();
    offsets
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::rational::frac;

    fn by_name(g: &MetricGraph, name: &str) -> GraphPoint {
        GraphPoint::Vertex(g.model().vertex_by_name(name).unwrap())
    }

    #[test]
    fn metric_tree_function_has_divisor_q_minus_p() {
        let g = families::metric_tree();
        let vals: Vec<i64> = ["a", "b", "P", "c", "d", "Q", "e"]
            .iter()
            .map(|n| match *n {
                "P" | "d" => 0,
                "a" | "b" => 1,
                "c" | "e" => 2,
                _ => 3,
            })
            .collect();
        let f = PlFunction::from_integer_vertex_values(&g, &vals).unwrap();
        assert_eq!(f.ord_at(&g, &by_name(&g, "P")), -1);
        assert_eq!(f.ord_at(&g, &by_name(&g, "Q")), 1);
        let expected = Divisor::from_points([(by_name(&g, "Q"), 1), (by_name(&g, "P"), -1)]);
        assert_eq!(f.div(&g), expected);
    }

    #[test]
    fn circle_function_divisor() {
        let g = families::marked_circle();
        // O, P, R, Q
        let f = PlFunction::from_integer_vertex_values(&g, &[1, 0, 0, 1]).unwrap();
        let expected = Divisor::from_points([
            (by_name(&g, "O"), 1),
            (by_name(&g, "Q"), 1),
            (by_name(&g, "P"), -1),
            (by_name(&g, "R"), -1),
        ]);
        assert_eq!(f.div(&g), expected);
    }

    #[test]
    fn linear_function_has_no_interior_order() {
        let g = MetricGraph::unit(families::path(2));
        let f = PlFunction::from_integer_vertex_values(&g, &[0, 3]).unwrap();
        let mid = g.point_on_edge(EdgeId(0), frac(1, 3)).unwrap();
        assert_eq!(f.ord_at(&g, &mid), 0);
        assert_eq!(f.eval(&g, &mid), int(1));
        assert!(PlFunction::constant(&g, int(5)).div(&g).is_zero());
    }

    #[test]
    fn non_integer_slopes_are_rejected() {
        let g = MetricGraph::unit(families::path(2));
        assert!(PlFunction::from_vertex_values(&g, vec![int(0), frac(1, 2)]).is_err());
        let peak = vec![vec![(frac(1, 3), int(1))]];
        assert!(PlFunction::new(&g, vec![int(0), int(0)], peak).is_err());
        let peak = vec![vec![(frac(1, 2), frac(1, 2))]];
        assert!(PlFunction::new(&g, vec![int(0), int(0)], peak).is_ok());
    }

    #[test]
    fn min_of_crossing_lines_has_kink() {
        let g = MetricGraph::unit(families::path(2));
        let up = PlFunction::from_integer_vertex_values(&g, &[0, 1]).unwrap();
        let down = PlFunction::from_integer_vertex_values(&g, &[1, 0]).unwrap();
        let m = PlFunction::min_of(&g, &[up, down]).unwrap();
        assert_eq!(m.edge_breaks(EdgeId(0)), &[(frac(1, 2), frac(1, 2))]);
        let kink = g.point_on_edge(EdgeId(0), frac(1, 2)).unwrap();
        assert_eq!(m.ord_at(&g, &kink), 2);
        assert_eq!(m.div(&g).degree(), 0);
    }

    #[test]
    fn arithmetic_drops_redundant_breakpoints() {
        let g = MetricGraph::unit(families::path(2));
        let tent = PlFunction::new(
            &g,
            vec![int(0), int(0)],
            vec![vec![(frac(1, 2), frac(1, 2))]],
        )
        .unwrap();
        assert_eq!(tent.sub(&g, &tent), PlFunction::zero(&g));
        assert_eq!(tent.add(&g, &tent.neg()), PlFunction::zero(&g));
        assert_eq!(tent.scale(2).div(&g), &tent.div(&g) * 2);
    }
}
