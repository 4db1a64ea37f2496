//! Break divisors: for a spanning tree `T`, one chip on the closure of each
//! edge outside `T`. Every degree-`g` class contains exactly one integral
//! break divisor, and the cells `C_T` tile `Pic^g`.

use std::collections::BTreeMap;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::finite::Engine;
use crate::graph::{EdgeId, FiniteGraph, GraphPoint, MetricGraph, VertexId};
use crate::jacobian::for_each_spanning_tree;
use crate::metric;
use crate::rank;
use crate::rational::{int, Rational};

/// Cell of break divisors for one spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakCell {
    pub tree: Vec<EdgeId>,
    /// Edges outside the tree; each carries one chip of the cell's divisors.
    pub free_edges: Vec<EdgeId>,
    /// Product of the lengths of the free edges.
    pub volume: Rational,
}

pub fn break_cells(g: &MetricGraph) -> Vec<BreakCell> {
    let mut cells = Vec::new();
    for_each_spanning_tree(g.model(), |t| {
        let tree = (0..t.len()).filter(|&e| t[e]).map(EdgeId).collect();
        let free_edges: Vec<EdgeId> = (0..t.len()).filter(|&e| !t[e]).map(EdgeId).collect();
        let volume = free_edges.iter().map(|&e| g.length(e).clone()).product();
        cells.push(BreakCell {
            tree,
            free_edges,
            volume,
        });
    });
    cells
}

/// Chip vector to the indices of the trees whose closed cell holds it.
type CellMap = BTreeMap<Vec<i64>, Vec<usize>>;

/// Integral break divisors as chip vectors, each with the indices (in
/// spanning-tree enumeration order) of the trees whose closed cell holds it.
fn integral_cells(g: &FiniteGraph) -> (Vec<Vec<EdgeId>>, CellMap) {
    let n = g.num_vertices();
    let mut trees = Vec::new();
    let mut found = CellMap::new();
    for_each_spanning_tree(g, |t| {
        let id = trees.len();
        trees.push((0..t.len()).filter(|&e| t[e]).map(EdgeId).collect());
        let free: Vec<EdgeId> = (0..t.len()).filter(|&e| !t[e]).map(EdgeId).collect();
        for mask in 0u64..(1 << free.len()) {
            let mut chips = vec![0i64; n];
            for (k, &e) in free.iter().enumerate() {
                let (a, b) = g.ends(e);
                chips[if mask >> k & 1 == 1 { b.0 } else { a.0 }] += 1;
            }
            let owners = found.entry(chips).or_default();
            if owners.last() != Some(&id) {
                owners.push(id);
            }
        }
    });
    (trees, found)
}

/// The integral break divisors `B(G)`, in increasing chip-vector order.
pub fn enumerate_integral_break_divisors(g: &FiniteGraph) -> Vec<Divisor> {
    integral_cells(g)
        .1
        .keys()
        .map(|c| Divisor::from_vertex_vec(c))
        .collect()
}

/// The integral break divisor of a class and the trees whose closed cells
/// contain it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakRepresentative {
    pub divisor: Divisor,
    pub trees: Vec<Vec<EdgeId>>,
}

pub fn break_representative(g: &FiniteGraph, d: &Divisor) -> Result<BreakRepresentative> {
    let mut chips = d.validate_finite(g)?;
    let genus = g.genus() as i64;
    if d.degree() != genus {
        return Err(Error::domain(format!(
            "break representatives exist in degree {genus}, got degree {}",
            d.degree()
        )));
    }
    let engine = Engine::new(g);
    engine.reduce(&mut chips, 0, None, None);
    let (trees, cells) = integral_cells(g);
    let mut matches = cells.iter().filter(|(b, _)| {
        let mut r = (*b).clone();
        engine.reduce_effective(&mut r, 0, None, None);
        r == chips
    });
    let (b, owners) = matches
        .next()
        .ok_or_else(|| Error::Consistency("no integral break divisor in the class".to_string()))?;
    if matches.next().is_some() {
        return Err(Error::Consistency(
            "two integral break divisors in one class".to_string(),
        ));
    }
    Ok(BreakRepresentative {
        divisor: Divisor::from_vertex_vec(b),
        trees: owners.iter().map(|&i| trees[i].clone()).collect(),
    })
}

/// Whether `d` is a break divisor: some spanning tree `T` admits one chip
/// of `d` on the closure of every edge outside `T`.
pub fn is_break_divisor(g: &MetricGraph, d: &Divisor) -> Result<bool> {
    d.validate(g)?;
    if !d.is_effective() || d.degree() != g.genus() as i64 {
        return Ok(false);
    }
    let m = g.model();
    let mut result = false;
    for_each_spanning_tree(m, |t| {
        if result {
            return;
        }
        let mut rest = d.clone();
        let mut open = Vec::new();
        for e in (0..t.len()).filter(|&e| !t[e]).map(EdgeId) {
            let on_edge = d
                .support()
                .find(|p| matches!(p, GraphPoint::Edge { edge, .. } if *edge == e));
            match on_edge {
                Some(p) => rest.add_at(p.clone(), -1),
                None => open.push(e),
            }
        }
        if !rest.is_effective() || !rest.is_vertex_supported() {
            return;
        }
        result = assign(m, &open, &mut rest);
    });
    Ok(result)
}

/// Whether the vertex chips of `rest` can be handed out one per edge in
/// `open`, each to an endpoint of its edge.
fn assign(m: &FiniteGraph, open: &[EdgeId], rest: &mut Divisor) -> bool {
    let Some((&e, others)) = open.split_first() else {
        return rest.is_zero();
    };
    let (a, b) = m.ends(e);
    for v in [a, b] {
        if rest.at_vertex(v) > 0 {
            rest.add_at(GraphPoint::Vertex(v), -1);
            let ok = assign(m, others, rest);
            rest.add_at(GraphPoint::Vertex(v), 1);
            if ok {
                return true;
            }
        }
    }
    false
}

/// Both tests for universal reducedness of an effective degree-`g` divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalReducedness {
    /// `Gamma \ supp(D)` is connected and simply connected and every
    /// support point carries `val(p) - 1` chips. For chips at distinct
    /// edge points this says the divisor is a simple break divisor; the
    /// chip condition rules out supports such as a leaf vertex.
    pub topological: bool,
    /// `D` is `q`-reduced for every `q`; see [`is_reduced_everywhere`].
    pub dhar: bool,
}

pub fn universal_reducedness(g: &MetricGraph, d: &Divisor) -> Result<UniversalReducedness> {
    d.validate(g)?;
    if !d.is_effective() || d.degree() != g.genus() as i64 {
        return Err(Error::precondition(
            "universal reducedness is tested on effective divisors of degree g",
        ));
    }
    let support: Vec<GraphPoint> = d.support().cloned().collect();
    let refined = g.refine(&support)?;
    let r = &refined.graph;
    let rm = r.model();
    let in_support: Vec<bool> = rm
        .vertices()
        .map(|v| d.get(&refined.project(g, &GraphPoint::Vertex(v))) > 0)
        .collect();

    // the complement retracts onto the graph on unmarked vertices, plus one
    // open interval per edge joining two marked vertices
    let kept = in_support.iter().filter(|&&s| !s).count();
    let mut kept_edges = 0;
    let mut isolated = 0;
    let mut comp: Vec<usize> = (0..rm.num_vertices()).collect();
    fn find(comp: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while comp[r] != r {
            r = comp[r];
        }
        comp[x] = r;
        r
    }
    let mut components = kept;
    for e in rm.edges() {
        let (a, b) = rm.ends(e);
        match (in_support[a.0], in_support[b.0]) {
            (true, true) => isolated += 1,
            (false, false) => {
                kept_edges += 1;
                let (ra, rb) = (find(&mut comp, a.0), find(&mut comp, b.0));
                if ra != rb {
                    comp[ra] = rb;
                    components -= 1;
                }
            }
            _ => {}
        }
    }
    let forest = kept_edges + components == kept;
    let saturated = d.support().all(|p| d.get(p) + 1 == g.valence(p) as i64);
    let topological = saturated && forest && components + isolated == 1;

    let dhar = is_reduced_everywhere(g, d)?;
    Ok(UniversalReducedness { topological, dhar })
}

/// Whether an effective divisor is `q`-reduced for every point `q`. The
/// fire is started at every vertex of the refinement by `supp(D)` and at
/// one interior point of each of its edges; points inside one chip-free
/// segment burn identically. Equivalently, `D` is the only effective
/// divisor in its class.
pub fn is_reduced_everywhere(g: &MetricGraph, d: &Divisor) -> Result<bool> {
    d.validate(g)?;
    if !d.is_effective() {
        return Err(Error::precondition("divisor must be effective"));
    }
    let support: Vec<GraphPoint> = d.support().cloned().collect();
    let refined = g.refine(&support)?;
    let r = &refined.graph;
    let rm = r.model();
    let mut probes: Vec<GraphPoint> = rm
        .vertices()
        .map(|v| refined.project(g, &GraphPoint::Vertex(v)))
        .collect();
    for e in rm.edges() {
        let mid = r.point_on_edge(e, r.length(e) / int(2))?;
        probes.push(refined.project(g, &mid));
    }
    for q in &probes {
        if !metric::is_reduced(g, d, q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `r(D) = 0` and `r(K - D) = -1` for a universally reduced `D`.
pub fn simple_break_rank_law(g: &MetricGraph, d: &Divisor) -> Result<bool> {
    let u = universal_reducedness(g, d)?;
    if !u.dhar {
        return Err(Error::precondition("divisor is not universally reduced"));
    }
    let r = rank::rank_metric_value(g, d)?;
    let s = rank::rank_metric_value(g, &(&g.canonical_divisor() - d))?;
    Ok(r == 0 && s == -1)
}

/// Every `q`-reduced divisor of degree `g`, one per class of `Pic^g`.
pub fn reduced_classes(g: &FiniteGraph, q: VertexId) -> Vec<Divisor> {
    let n = g.num_vertices();
    let genus = g.genus() as i64;
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut chips = vec![0i64; n];
    fill(&adj, q.0, genus, 0, &mut chips, &mut out);
    out
}

fn fill(
    adj: &[Vec<usize>],
    q: usize,
    budget: i64,
    v: usize,
    chips: &mut Vec<i64>,
    out: &mut Vec<Divisor>,
) {
    if v == chips.len() {
        chips[q] = budget;
        if crate::burn::dhar_burn(adj, chips, q).iter().all(|&b| b) {
            out.push(Divisor::from_vertex_vec(chips));
        }
        chips[q] = 0;
        return;
    }
    if v == q {
        fill(adj, q, budget, v + 1, chips, out);
        return;
    }
    // a reduced divisor has fewer chips at v than its valence
    let cap = budget.min(adj[v].len() as i64 - 1).max(0);
    for c in 0..=cap {
        chips[v] = c;
        fill(adj, q, budget - c, v + 1, chips, out);
    }
    chips[v] = 0;
}
