//! Tropical dependence certificates and the support of a minimum of
//! functions in a complete linear system.

use std::collections::BTreeSet;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::graph::{GraphPoint, MetricGraph};
use crate::pl::{common_offsets, interpolate, PlFunction};
use crate::rational::Rational;

fn check_family(fs: &[PlFunction], bs: &[Rational]) -> Result<()> {
    if fs.is_empty() || fs.len() != bs.len() {
        return Err(Error::validation(
            "need a nonempty family with one shift per function",
        ));
    }
    Ok(())
}

fn attainers(values: &[Rational]) -> usize {
    let min = values.iter().min().expect("nonempty");
    values.iter().filter(|v| *v == min).count()
}

/// True iff `min_i (f_i + b_i)` is attained at least twice at every point.
///
/// On each edge the functions are compared on a common refinement that
/// includes all pairwise crossings; between consecutive refinement points
/// the order of the functions is constant, so checking the refinement
/// points and one interior point per piece decides the question exactly.
pub fn verify_tropical_dependence(
    g: &MetricGraph,
    fs: &[PlFunction],
    bs: &[Rational],
) -> Result<bool> {
    check_family(fs, bs)?;
    let shifted: Vec<PlFunction> = fs.iter().zip(bs).map(|(f, b)| f.add_constant(b)).collect();
    for v in g.model().vertices() {
        let vals: Vec<Rational> = shifted.iter().map(|f| f.vertex_value(v).clone()).collect();
        if attainers(&vals) < 2 {
            return Ok(false);
        }
    }
    for e in g.model().edges() {
        let profiles: Vec<_> = shifted.iter().map(|f| f.profile(g, e)).collect();
        let offsets = common_offsets(&profiles);
        let mut probes: Vec<Rational> = offsets.clone();
        for w in offsets.windows(2) {
            probes.push((&w[0] + &w[1]) / Rational::from_integer(2.into()));
        }
        for o in &probes {
            let vals: Vec<Rational> = profiles.iter().map(|p| interpolate(p, o)).collect();
            if attainers(&vals) < 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `theta = min_i (f_i + b_i)` and the support of `div(theta) + D`, found
/// directly and through the local criterion: a point `v` where `theta`
/// equals `f_j + b_j` is in the support iff it is in the support of
/// `div(f_j) + D` or on the boundary of the region where `theta = f_j + b_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCombination {
    pub theta: PlFunction,
    pub support_direct: Vec<GraphPoint>,
    pub support_local: Vec<GraphPoint>,
}

impl MinCombination {
    pub fn agree(&self) -> bool {
        self.support_direct == self.support_local
    }
}

pub fn min_combination(
    g: &MetricGraph,
    fs: &[PlFunction],
    bs: &[Rational],
    d: &Divisor,
) -> Result<MinCombination> {
    check_family(fs, bs)?;
    d.validate(g)?;
    for (i, f) in fs.iter().enumerate() {
        if !(&f.div(g) + d).is_effective() {
            return Err(Error::precondition(format!(
                "function {i} is not in the complete linear system of the divisor"
            )));
        }
    }
    let shifted: Vec<PlFunction> = fs.iter().zip(bs).map(|(f, b)| f.add_constant(b)).collect();
    let theta = PlFunction::min_of(g, &shifted)?;
    let support_direct: Vec<GraphPoint> = (&theta.div(g) + d).support().cloned().collect();

    let mut candidates: BTreeSet<GraphPoint> = theta.breakpoints(g).into_iter().collect();
    for f in &shifted {
        candidates.extend(f.breakpoints(g));
    }
    candidates.extend(d.support().cloned());
    let mut support_local = Vec::new();
    for v in candidates {
        let t = theta.eval(g, &v);
        let active: Vec<usize> = (0..shifted.len())
            .filter(|&j| shifted[j].eval(g, &v) == t)
            .collect();
        let slopes: Vec<Vec<Rational>> = active
            .iter()
            .map(|&j| shifted[j].outgoing_slopes(g, &v))
            .collect();
        let directions = slopes[0].len();
        let lowest: Vec<&Rational> = (0..directions)
            .map(|k| slopes.iter().map(|s| &s[k]).min().expect("nonempty"))
            .collect();
        let verdicts: Vec<bool> = active
            .iter()
            .zip(&slopes)
            .map(|(&j, s)| {
                let on_boundary = (0..directions).any(|k| &s[k] > lowest[k]);
                on_boundary || fs[j].ord_at(g, &v) + d.get(&v) != 0
            })
            .collect();
        if verdicts.iter().any(|&x| x != verdicts[0]) {
            return Err(Error::Consistency(format!(
                "local support criterion disagrees between active functions at {v:?}"
            )));
        }
        if verdicts[0] {
            support_local.push(v);
        }
    }
    Ok(MinCombination {
        theta,
        support_direct,
        support_local,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::EdgeId;
    use crate::rational::{frac, int};

    #[test]
    fn identical_functions_are_dependent() {
        let g = MetricGraph::unit(families::path(3));
        let f = PlFunction::from_integer_vertex_values(&g, &[0, 1, 3]).unwrap();
        assert!(
            verify_tropical_dependence(&g, &[f.clone(), f.clone()], &[int(0), int(0)]).unwrap()
        );
        let shifted = f.add_constant(&int(5));
        assert!(verify_tropical_dependence(&g, &[f.clone(), shifted], &[int(0), int(-5)]).unwrap());
        assert!(!verify_tropical_dependence(&g, &[f], &[int(0)]).unwrap());
    }

    #[test]
    fn crossing_lines_are_independent_without_a_third() {
        let g = MetricGraph::unit(families::path(2));
        let up = PlFunction::from_integer_vertex_values(&g, &[0, 1]).unwrap();
        let down = PlFunction::from_integer_vertex_values(&g, &[1, 0]).unwrap();
        assert!(
            !verify_tropical_dependence(&g, &[up.clone(), down.clone()], &[int(0), int(0)])
                .unwrap()
        );
        // a third function equal to the minimum makes it attained twice
        let m = PlFunction::min_of(&g, &[up.clone(), down.clone()]).unwrap();
        assert!(verify_tropical_dependence(&g, &[up, down, m], &[int(0), int(0), int(0)]).unwrap());
    }

    #[test]
    fn min_of_constants() {
        let g = MetricGraph::unit(families::complete(3));
        let zero = PlFunction::zero(&g);
        let one = PlFunction::constant(&g, int(1));
        let m =
            min_combination(&g, &[zero.clone(), one], &[int(0), int(0)], &Divisor::new()).unwrap();
        assert_eq!(m.theta, zero);
        assert!(m.support_direct.is_empty());
        assert!(m.agree());
    }

    #[test]
    fn kink_enters_support() {
        let g = MetricGraph::unit(families::path(2));
        let d = Divisor::from_vertex_vec(&[1, 1]);
        let up = PlFunction::from_integer_vertex_values(&g, &[0, 1]).unwrap();
        let down = PlFunction::from_integer_vertex_values(&g, &[1, 0]).unwrap();
        let m = min_combination(&g, &[up, down], &[int(0), int(0)], &d).unwrap();
        let kink = g.point_on_edge(EdgeId(0), frac(1, 2)).unwrap();
        assert_eq!(m.support_direct, vec![kink]);
        assert!(m.agree());
    }

    #[test]
    fn functions_outside_the_linear_system_are_rejected() {
        let g = MetricGraph::unit(families::path(2));
        let up = PlFunction::from_integer_vertex_values(&g, &[0, 1]).unwrap();
        let err = min_combination(&g, &[up], &[int(0)], &Divisor::new()).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }
}
