//! The canonical measure of a vertex-weighted metric graph.
//!
//! For a spanning tree `T` let `mu_T` be the sum of the uniform probability
//! measures on the edges outside `T`. Averaging with weights
//! `w(T) / w(G)` gives a measure of mass `g`; adding `w(v)` atoms and
//! dividing by the weighted genus gives a probability measure.

use std::fmt::Write;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::MetricGraph;
use crate::rational::{format, int, Rational};
use crate::torus::tree_weights;

/// Constant density on every edge plus atoms at vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZhangMeasure {
    /// Total mass carried by each edge.
    pub edge_mass: Vec<Rational>,
    /// `edge_mass / length` for each edge.
    pub edge_density: Vec<Rational>,
    pub vertex_atoms: Vec<Rational>,
}

impl ZhangMeasure {
    pub fn total_mass(&self) -> Rational {
        self.edge_mass.iter().chain(&self.vertex_atoms).sum()
    }

    /// One line per edge and per vertex: `kind,name,mass,density`.
    pub fn to_csv(&self, g: &MetricGraph) -> String {
        let m = g.model();
        let mut out = String::from("kind,name,mass,density\n");
        for e in m.edges() {
            let _ = writeln!(
                out,
                "edge,{},{},{}",
                m.edge_name(e),
                format(&self.edge_mass[e.0]),
                format(&self.edge_density[e.0])
            );
        }
        for v in m.vertices() {
            let _ = writeln!(
                out,
                "vertex,{},{},",
                m.vertex_name(v),
                format(&self.vertex_atoms[v.0])
            );
        }
        out
    }

    /// Graphviz description with edges and vertices labelled by mass.
    pub fn to_dot(&self, g: &MetricGraph) -> String {
        let m = g.model();
        let mut out = String::from("graph zhang {\n");
        for v in m.vertices() {
            let _ = writeln!(
                out,
                "  \"{}\" [label=\"{}\\n{}\"];",
                m.vertex_name(v),
                m.vertex_name(v),
                format(&self.vertex_atoms[v.0])
            );
        }
        for e in m.edges() {
            let (a, b) = m.ends(e);
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{}: {}\"];",
                m.vertex_name(a),
                m.vertex_name(b),
                m.edge_name(e),
                format(&self.edge_mass[e.0])
            );
        }
        out.push_str("}\n");
        out
    }
}

pub fn zhang_measure(g: &MetricGraph) -> Result<ZhangMeasure> {
    let gw = g.weighted_genus();
    if gw == 0 {
        return Err(Error::precondition(
            "the canonical measure needs weighted genus at least 1",
        ));
    }
    let m = g.model();
    let trees = tree_weights(g);
    let total: Rational = trees.iter().map(|(_, w)| w).sum();
    let scale = &total * int(gw as i64);
    let mut edge_mass = vec![Rational::zero(); m.num_edges()];
    for (t, w) in &trees {
        for e in m.edges().filter(|e| !t[e.0]) {
            edge_mass[e.0] += w;
        }
    }
    for x in &mut edge_mass {
        *x /= &scale;
    }
    let edge_density = m.edges().map(|e| &edge_mass[e.0] / g.length(e)).collect();
    let vertex_atoms = g
        .weights()
        .iter()
        .map(|&w| int(w as i64) / int(gw as i64))
        .collect();
    Ok(ZhangMeasure {
        edge_mass,
        edge_density,
        vertex_atoms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::FiniteGraph;
    use crate::rational::frac;

    #[test]
    fn circle_is_uniform() {
        let c = families::circle(int(1));
        let z = zhang_measure(&c).unwrap();
        assert_eq!(z.edge_mass, vec![frac(1, 2), frac(1, 2)]);
        assert_eq!(z.edge_density, vec![int(1), int(1)]);
        assert_eq!(z.total_mass(), int(1));
    }

    #[test]
    fn weighted_point_is_one_atom() {
        let g = MetricGraph::unit(FiniteGraph::from_edges(1, &[]).unwrap())
            .with_weights(vec![3])
            .unwrap();
        let z = zhang_measure(&g).unwrap();
        assert_eq!(z.vertex_atoms, vec![int(1)]);
        assert!(z.edge_mass.is_empty());
    }

    #[test]
    fn banana_is_symmetric() {
        let g = MetricGraph::unit(families::banana(2));
        let z = zhang_measure(&g).unwrap();
        assert_eq!(z.edge_mass, vec![frac(1, 3); 3]);
        assert_eq!(z.total_mass(), int(1));
        assert!(z.to_csv(&g).lines().count() == 6);
        assert!(z.to_dot(&g).starts_with("graph zhang"));
    }

    #[test]
    fn trees_have_no_canonical_measure() {
        let g = MetricGraph::unit(families::path(3));
        assert!(matches!(zhang_measure(&g), Err(Error::Precondition(_))));
    }
}
