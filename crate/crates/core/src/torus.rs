//! The tropical Jacobian `R^g / Lambda` of a metric graph and the
//! Abel–Jacobi map.
//!
//! Coordinates come from the fundamental cycles `c_1..c_g` of a spanning
//! tree. A path `gamma` maps to the vector of pairings
//! `<gamma, c_i> = sum_e l(e) gamma(e) c_i(e)`; the cycles themselves map to
//! the rows of the Gram matrix, which span the lattice.

use num_traits::{One, Zero};

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, FiniteGraph, GraphPoint, MetricGraph, VertexId};
use crate::jacobian::for_each_spanning_tree;
use crate::rational::Rational;

/// Cycle basis, Gram matrix and tree paths for a chosen spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodLattice {
    /// Membership flag of every edge in the spanning tree.
    pub tree: Vec<bool>,
    /// The edge outside the tree that closes each basis cycle.
    pub cycle_edges: Vec<EdgeId>,
    /// Coefficient of every edge in each basis cycle, relative to the
    /// tail-to-head orientation. Cycle `i` runs along the tree from the tail
    /// of `cycle_edges[i]` to its head and returns along that edge.
    pub cycles: Vec<Vec<i64>>,
    pub gram: Vec<Vec<Rational>>,
    /// Coefficients of the tree path from the first vertex to each vertex.
    paths: Vec<Vec<i64>>,
}

impl PeriodLattice {
    /// Uses the breadth-first spanning tree from the first vertex.
    pub fn new(g: &MetricGraph) -> Self {
        let m = g.model();
        let mut tree = vec![false; m.num_edges()];
        let mut seen = vec![false; m.num_vertices()];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([VertexId(0)]);
        while let Some(u) = queue.pop_front() {
            for &e in m.incident(u) {
                let w = m.other_end(e, u);
                if !seen[w.0] {
                    seen[w.0] = true;
                    tree[e.0] = true;
                    queue.push_back(w);
                }
            }
        }
        Self::build(g, tree)
    }

    /// Uses the given spanning tree.
    pub fn with_tree(g: &MetricGraph, tree: &[EdgeId]) -> Result<Self> {
        let m = g.model();
        let mut flags = vec![false; m.num_edges()];
        for e in tree {
            if e.0 >= m.num_edges() || flags[e.0] {
                return Err(Error::validation(format!("bad tree edge index {}", e.0)));
            }
            flags[e.0] = true;
        }
        if tree.len() + 1 != m.num_vertices() || tree_paths(m, &flags).is_none() {
            return Err(Error::validation("edges do not form a spanning tree"));
        }
        Ok(Self::build(g, flags))
    }

    fn build(g: &MetricGraph, tree: Vec<bool>) -> Self {
        let m = g.model();
        let paths = tree_paths(m, &tree).expect("spanning tree");
        let mut cycle_edges = Vec::new();
        let mut cycles = Vec::new();
        for e in m.edges().filter(|e| !tree[e.0]) {
            let (t, h) = m.ends(e);
            let mut c: Vec<i64> = paths[h.0]
                .iter()
                .zip(&paths[t.0])
                .map(|(a, b)| a - b)
                .collect();
            c[e.0] -= 1;
            cycle_edges.push(e);
            cycles.push(c);
        }
        let gram = cycles
            .iter()
            .map(|ci| {
                cycles
                    .iter()
                    .map(|cj| {
                        m.edges()
                            .map(|e| {
                                g.length(e) * Rational::from_integer((ci[e.0] * cj[e.0]).into())
                            })
                            .sum()
                    })
                    .collect()
            })
            .collect();
        PeriodLattice {
            tree,
            cycle_edges,
            cycles,
            gram,
            paths,
        }
    }

    pub fn genus(&self) -> usize {
        self.cycles.len()
    }

    pub fn determinant(&self) -> Rational {
        determinant(self.gram.clone())
    }

    /// Signed length traversed on every edge by the tree path from the first
    /// vertex to `p`, finishing along the edge containing `p`.
    fn path_chain(&self, g: &MetricGraph, p: &GraphPoint) -> Vec<Rational> {
        let lengths = g.lengths();
        let scaled = |coeffs: &[i64]| -> Vec<Rational> {
            coeffs
                .iter()
                .zip(lengths)
                .map(|(&c, l)| l * Rational::from_integer(c.into()))
                .collect()
        };
        match p {
            GraphPoint::Vertex(v) => scaled(&self.paths[v.0]),
            GraphPoint::Edge { edge, offset } => {
                let (t, _) = g.model().ends(*edge);
                let mut chain = scaled(&self.paths[t.0]);
                chain[edge.0] += offset;
                chain
            }
        }
    }

    /// Pairings of the path to `p` with the basis cycles.
    pub fn point_coordinates(&self, g: &MetricGraph, p: &GraphPoint) -> Vec<Rational> {
        let chain = self.path_chain(g, p);
        self.cycles
            .iter()
            .map(|c| {
                chain
                    .iter()
                    .zip(c)
                    .filter(|(_, &k)| k != 0)
                    .map(|(x, &k)| x * Rational::from_integer(k.into()))
                    .sum()
            })
            .collect()
    }

    /// Coordinates of a vector in the lattice basis, i.e. `Gram^-1 x`.
    pub fn lattice_coordinates(&self, x: &[Rational]) -> Vec<Rational> {
        solve(self.gram.clone(), x.to_vec())
    }
}

fn tree_paths(m: &FiniteGraph, tree: &[bool]) -> Option<Vec<Vec<i64>>> {
    let mut paths: Vec<Option<Vec<i64>>> = vec![None; m.num_vertices()];
    paths[0] = Some(vec![0; m.num_edges()]);
    let mut stack = vec![VertexId(0)];
    while let Some(u) = stack.pop() {
        for &e in m.incident(u) {
            if !tree[e.0] {
                continue;
            }
            let w = m.other_end(e, u);
            if paths[w.0].is_some() {
                continue;
            }
            let mut p = paths[u.0].clone().expect("visited");
            p[e.0] += if m.ends(e).0 == u { 1 } else { -1 };
            paths[w.0] = Some(p);
            stack.push(w);
        }
    }
    paths.into_iter().collect()
}

/// Gaussian elimination over the rationals.
pub fn determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if r != k {
            a.swap(k, r);
            det = -det;
        }
        det *= &a[k][k];
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let d = &f * &a[k][j];
                a[i][j] -= d;
            }
        }
    }
    det
}

/// Solves `a x = b` for nonsingular `a`.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Vec<Rational> {
    let n = a.len();
    for k in 0..n {
        let r = (k..n).find(|&r| !a[r][k].is_zero()).expect("nonsingular");
        a.swap(k, r);
        b.swap(k, r);
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let d = &f * &a[k][j];
                a[i][j] -= d;
            }
            let d = &f * &b[k];
            b[i] -= d;
        }
    }
    (0..n).map(|i| &b[i] / &a[i][i]).collect()
}

/// Image of a divisor in the Jacobian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelJacobi {
    /// Pairings with the basis cycles of the lattice.
    pub coordinates: Vec<Rational>,
    /// The same vector in the lattice basis.
    pub lattice_coordinates: Vec<Rational>,
    /// Fractional parts of `lattice_coordinates`: the representative in the
    /// fundamental parallelepiped of the basis.
    pub reduced: Vec<Rational>,
    /// True iff the image is zero in the Jacobian.
    pub in_lattice: bool,
}

/// `sum_p D(p) (AJ(p) - AJ(base))`. For degree-zero divisors the base
/// point drops out.
pub fn abel_jacobi(
    g: &MetricGraph,
    lattice: &PeriodLattice,
    base: &GraphPoint,
    d: &Divisor,
) -> Result<AbelJacobi> {
    d.validate(g)?;
    g.validate_point(base)?;
    let genus = lattice.genus();
    let mut coordinates = vec![Rational::zero(); genus];
    let origin = lattice.point_coordinates(g, base);
    for (p, n) in d.iter() {
        let x = lattice.point_coordinates(g, p);
        for i in 0..genus {
            coordinates[i] += (&x[i] - &origin[i]) * Rational::from_integer(n.into());
        }
    }
    let lattice_coordinates = lattice.lattice_coordinates(&coordinates);
    let reduced: Vec<Rational> = lattice_coordinates.iter().map(|y| y - y.floor()).collect();
    let in_lattice = reduced.iter().all(Zero::is_zero);
    Ok(AbelJacobi {
        coordinates,
        lattice_coordinates,
        reduced,
        in_lattice,
    })
}

/// `w(T)` for every spanning tree: the product of the lengths of the edges
/// outside `T`. Trees come in the order of
/// [`for_each_spanning_tree`](crate::jacobian::for_each_spanning_tree).
pub fn tree_weights(g: &MetricGraph) -> Vec<(Vec<bool>, Rational)> {
    let mut out = Vec::new();
    for_each_spanning_tree(g.model(), |t| {
        let w = t
            .iter()
            .zip(g.lengths())
            .filter(|(&inside, _)| !inside)
            .map(|(_, l)| l.clone())
            .product();
        out.push((t.to_vec(), w));
    });
    out
}

/// `w(G) = sum_T w(T)`, which equals the determinant of the period Gram
/// matrix.
pub fn tree_weight_sum(g: &MetricGraph) -> Rational {
    tree_weights(g).into_iter().map(|(_, w)| w).sum()
}
