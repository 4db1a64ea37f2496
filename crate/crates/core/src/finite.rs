//! Chip-firing, reduced divisors and linear equivalence on finite graphs.
//!
//! Integer vertex functions `f` act by `div(f)(v) = sum over edges vw of
//! f(v) - f(w)`, i.e. `div(f) = L f`. Firing a set `S` adds `div(-1_S)`.

use crate::burn::dhar_burn;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, VertexId};

/// Output of [`reduce`]: the `q`-reduced divisor, an integer function `f`
/// with `d + div(f) = divisor`, and the unburnt set of every firing round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteReduction {
    pub divisor: Divisor,
    pub script: Vec<i64>,
    pub trace: Vec<Vec<VertexId>>,
}

/// `div(f) = L f`.
pub fn principal(g: &FiniteGraph, f: &[i64]) -> Divisor {
    let adj = g.adjacency();
    Divisor::from_vertex_vec(&apply_laplacian(&adj, f))
}

pub(crate) fn apply_laplacian(adj: &[Vec<usize>], f: &[i64]) -> Vec<i64> {
    adj.iter()
        .enumerate()
        .map(|(v, nbrs)| nbrs.iter().map(|&w| f[v] - f[w]).sum())
        .collect()
}

/// Every vertex of `fire_set` sends one chip along each edge leaving the set.
pub fn chip_fire(g: &FiniteGraph, d: &Divisor, fire_set: &[VertexId]) -> Result<Divisor> {
    let mut chips = d.validate_finite(g)?;
    let mut inside = vec![false; g.num_vertices()];
    for v in fire_set {
        if v.0 >= g.num_vertices() {
            return Err(Error::validation(format!("no vertex with index {}", v.0)));
        }
        inside[v.0] = true;
    }
    fire(&g.adjacency(), &mut chips, &inside, 1);
    Ok(Divisor::from_vertex_vec(&chips))
}

fn fire(adj: &[Vec<usize>], chips: &mut [i64], inside: &[bool], times: i64) {
    for (u, nbrs) in adj.iter().enumerate() {
        if !inside[u] {
            continue;
        }
        for &w in nbrs {
            if !inside[w] {
                chips[u] -= times;
                chips[w] += times;
            }
        }
    }
}

/// Vertices left unburnt by a fire started at `q`. Empty iff `d` is
/// `q`-reduced.
pub fn dhar_unburnt(g: &FiniteGraph, d: &Divisor, q: VertexId) -> Result<Vec<VertexId>> {
    let chips = d.validate_finite(g)?;
    check_vertex(g, q)?;
    if let Some(v) = (0..chips.len()).find(|&v| v != q.0 && chips[v] < 0) {
        return Err(Error::precondition(format!(
            "divisor is negative at {:?}, away from the base vertex",
            g.vertex_name(VertexId(v))
        )));
    }
    let burnt = dhar_burn(&g.adjacency(), &chips, q.0);
    Ok(unburnt_list(&burnt))
}

fn unburnt_list(burnt: &[bool]) -> Vec<VertexId> {
    burnt
        .iter()
        .enumerate()
        .filter(|(_, &b)| !b)
        .map(|(v, _)| VertexId(v))
        .collect()
}

fn check_vertex(g: &FiniteGraph, q: VertexId) -> Result<()> {
    if q.0 >= g.num_vertices() {
        return Err(Error::validation(format!("no vertex with index {}", q.0)));
    }
    Ok(())
}

pub fn is_reduced(g: &FiniteGraph, d: &Divisor, q: VertexId) -> Result<bool> {
    let chips = d.validate_finite(g)?;
    check_vertex(g, q)?;
    if (0..chips.len()).any(|v| v != q.0 && chips[v] < 0) {
        return Ok(false);
    }
    Ok(dhar_burn(&g.adjacency(), &chips, q.0)
        .into_iter()
        .all(|b| b))
}

/// The unique `q`-reduced divisor equivalent to `d`, with a firing script.
pub fn reduce(g: &FiniteGraph, d: &Divisor, q: VertexId) -> Result<FiniteReduction> {
    let mut chips = d.validate_finite(g)?;
    check_vertex(g, q)?;
    let engine = Engine::new(g);
    let mut script = vec![0; g.num_vertices()];
    let mut trace = Vec::new();
    engine.reduce(&mut chips, q.0, Some(&mut script), Some(&mut trace));
    Ok(FiniteReduction {
        divisor: Divisor::from_vertex_vec(&chips),
        script,
        trace: trace
            .into_iter()
            .map(|set| set.into_iter().map(VertexId).collect())
            .collect(),
    })
}

/// Decides `d1 ~ d2` by reducing the difference at the first vertex.
pub fn is_equivalent(g: &FiniteGraph, d1: &Divisor, d2: &Divisor) -> Result<bool> {
    if d1.degree() != d2.degree() {
        return Ok(false);
    }
    let mut diff = (d1 - d2).validate_finite(g)?;
    Engine::new(g).reduce(&mut diff, 0, None, None);
    Ok(diff.iter().all(|&c| c == 0))
}

/// Reduction on dense integer vectors, shared by the rank search and the
/// other finite-graph algorithms.
#[derive(Debug, Clone)]
pub(crate) struct Engine {
    pub adj: Vec<Vec<usize>>,
    pub genus: i64,
}

impl Engine {
    pub fn new(g: &FiniteGraph) -> Self {
        Engine {
            adj: g.adjacency(),
            genus: g.genus() as i64,
        }
    }

    /// Reduces `chips` at `q` assuming it is effective away from `q`.
    pub fn reduce_effective(
        &self,
        chips: &mut [i64],
        q: usize,
        mut script: Option<&mut [i64]>,
        mut trace: Option<&mut Vec<Vec<usize>>>,
    ) {
        loop {
            let burnt = dhar_burn(&self.adj, chips, q);
            if burnt.iter().all(|&b| b) {
                return;
            }
            // the unburnt set stays legal to fire until some vertex runs short
            let times = self
                .adj
                .iter()
                .enumerate()
                .filter(|(u, _)| !burnt[*u])
                .filter_map(|(u, nbrs)| {
                    let out = nbrs.iter().filter(|&&w| burnt[w]).count() as i64;
                    (out > 0).then(|| chips[u] / out)
                })
                .min()
                .expect("an unburnt set borders the burnt region");
            let inside: Vec<bool> = burnt.iter().map(|b| !b).collect();
            fire(&self.adj, chips, &inside, times);
            if let Some(s) = script.as_deref_mut() {
                for (u, &i) in inside.iter().enumerate() {
                    if i {
                        s[u] -= times;
                    }
                }
            }
            if let Some(t) = trace.as_deref_mut() {
                t.push((0..chips.len()).filter(|&u| inside[u]).collect());
            }
        }
    }

    /// Reduces an arbitrary divisor at `q`.
    ///
    /// Deficits away from `q` are paid one chip at a time: the configuration
    /// is reduced at the deficit vertex, which then holds a chip as long as
    /// the degree exceeds the genus; extra chips are borrowed at `q` until it
    /// does and are returned at the end.
    pub fn reduce(
        &self,
        chips: &mut [i64],
        q: usize,
        mut script: Option<&mut [i64]>,
        trace: Option<&mut Vec<Vec<usize>>>,
    ) {
        let deficits: Vec<(usize, i64)> = (0..chips.len())
            .filter(|&v| v != q && chips[v] < 0)
            .map(|v| (v, -chips[v]))
            .collect();
        if deficits.is_empty() {
            self.reduce_effective(chips, q, script, trace);
            return;
        }
        let mut borrowed = 0i64;
        for &(v, _) in &deficits {
            chips[v] = 0;
        }
        let positive: i64 = chips.iter().filter(|&&c| c > 0).sum();
        let need = (self.genus + 1 - positive).max(-chips[q]).max(0);
        chips[q] += need;
        borrowed += need;
        for &(x, count) in &deficits {
            for _ in 0..count {
                self.reduce_effective(chips, x, script.as_deref_mut(), None);
                while chips[x] < 1 {
                    chips[q] += 1;
                    borrowed += 1;
                    self.reduce_effective(chips, x, script.as_deref_mut(), None);
                }
                chips[x] -= 1;
            }
        }
        self.reduce_effective(chips, q, script, trace);
        chips[q] -= borrowed;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn dhar() -> (FiniteGraph, impl Fn(&str) -> VertexId) {
        let g = families::dhar_graph();
        let g2 = g.clone();
        (g, move |n: &str| g2.vertex_by_name(n).unwrap())
    }

    #[test]
    fn fire_everything_is_trivial() {
        let g = families::complete(4);
        let d = Divisor::from_vertex_vec(&[3, 0, -1, 2]);
        let all: Vec<_> = g.vertices().collect();
        assert_eq!(chip_fire(&g, &d, &all).unwrap(), d);
    }

    #[test]
    fn dhar_example_firings() {
        let (g, v) = dhar();
        let d = Divisor::from_vertex_counts([(v("v1"), 1), (v("v2"), 1)]);
        let step1 = chip_fire(&g, &d, &[v("v1"), v("v2")]).unwrap();
        assert_eq!(step1, Divisor::vertex(v("v3"), 2));
        let step2 = chip_fire(&g, &step1, &[v("v1"), v("v2"), v("v3")]).unwrap();
        assert_eq!(
            step2,
            Divisor::from_vertex_counts([(v("v4"), 1), (v("v5"), 1)])
        );
    }

    #[test]
    fn dhar_example_unburnt_sets() {
        let (g, v) = dhar();
        let d = Divisor::from_vertex_counts([(v("v1"), 1), (v("v2"), 1)]);
        assert_eq!(
            dhar_unburnt(&g, &d, v("v5")).unwrap(),
            vec![v("v1"), v("v2")]
        );
        let d = Divisor::vertex(v("v3"), 2);
        assert_eq!(
            dhar_unburnt(&g, &d, v("v5")).unwrap(),
            vec![v("v1"), v("v2"), v("v3")]
        );
        let reduced = Divisor::from_vertex_counts([(v("v4"), 1), (v("v5"), 1)]);
        assert!(dhar_unburnt(&g, &reduced, v("v5")).unwrap().is_empty());
        let bad = Divisor::vertex(v("v1"), -1);
        assert!(matches!(
            dhar_unburnt(&g, &bad, v("v5")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn dhar_example_reduction_and_trace() {
        let (g, v) = dhar();
        let d = Divisor::from_vertex_counts([(v("v1"), 1), (v("v2"), 1)]);
        let r = reduce(&g, &d, v("v5")).unwrap();
        assert_eq!(
            r.divisor,
            Divisor::from_vertex_counts([(v("v4"), 1), (v("v5"), 1)])
        );
        assert_eq!(
            r.trace,
            vec![vec![v("v1"), v("v2")], vec![v("v1"), v("v2"), v("v3")]]
        );
        assert_eq!(&d + &principal(&g, &r.script), r.divisor);
        assert!(is_equivalent(&g, &d, &r.divisor).unwrap());
    }

    #[test]
    fn reduction_with_negative_coefficients() {
        let g = families::complete(4);
        let d = Divisor::from_vertex_vec(&[-3, 2, -1, 1]);
        let r = reduce(&g, &d, VertexId(1)).unwrap();
        assert_eq!(&d + &principal(&g, &r.script), r.divisor);
        assert!(is_reduced(&g, &r.divisor, VertexId(1)).unwrap());
        let again = reduce(&g, &r.divisor, VertexId(1)).unwrap();
        assert_eq!(again.divisor, r.divisor);
    }

    #[test]
    fn zero_reduces_to_zero() {
        let g = families::petersen();
        assert!(reduce(&g, &Divisor::new(), VertexId(3))
            .unwrap()
            .divisor
            .is_zero());
    }
}
