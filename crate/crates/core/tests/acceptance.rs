//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance`.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropdiv::break_divisors::{enumerate_integral_break_divisors, reduced_classes};
use tropdiv::brill_noether::{gonality, grid_points, Gonality};
use tropdiv::chain::{self, brill_noether_number, ChainOfLoops};
use tropdiv::jacobian::{jacobian_structure, spanning_tree_count};
use tropdiv::orientation::orientation_rank_law;
use tropdiv::rational::{frac, int};
use tropdiv::torus::{abel_jacobi, PeriodLattice};
use tropdiv::zhang::zhang_measure;
use tropdiv::{
    families, finite, metric, random, rank, Divisor, FiniteGraph, GraphPoint, MetricGraph, VertexId,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: tropdiv::Error) -> String {
    e.to_string()
}

/// Special divisors met by the Riemann-Roch suites, kept for the Clifford
/// criterion: `(rank, degree)`.
struct Specials(Vec<(i64, i64)>);

fn riemann_roch(specials: &mut Specials) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..1000 {
        let g = random::finite_graph(&mut rng, 8, 14);
        let genus = g.genus() as i64;
        let deg = rng.gen_range(-3..=2 * genus + 2);
        let d = random::vertex_divisor(&mut rng, g.num_vertices(), deg, 4);
        let c = rank::riemann_roch_check_finite(&g, &d).map_err(err)?;
        ensure(c.holds, || format!("finite instance {i}: {c:?}"))?;
        if c.adjoint_rank >= 0 && (0..=2 * genus - 2).contains(&deg) {
            specials.0.push((c.rank, deg));
        }
    }
    for i in 0..200 {
        let g = random::metric_graph(&mut rng, 6, 9, 3);
        let genus = g.genus() as i64;
        let deg = rng.gen_range(-3..=2 * genus + 2);
        let d = random::divisor(&mut rng, &g, deg, 3, 4);
        let c = rank::riemann_roch_check(&g, &d).map_err(err)?;
        ensure(c.holds, || format!("metric instance {i}: {c:?}"))?;
        if c.adjoint_rank >= 0 && (0..=2 * genus - 2).contains(&deg) {
            specials.0.push((c.rank, deg));
        }
    }
    Ok("1000 finite and 200 metric instances exact".into())
}

fn dhar_example() -> Outcome {
    let g = families::dhar_graph();
    let v = |n: &str| g.vertex_by_name(n).unwrap();
    let d = Divisor::from_vertex_counts([(v("v1"), 1), (v("v2"), 1)]);
    let red = finite::reduce(&g, &d, v("v5")).map_err(err)?;
    let expected = Divisor::from_vertex_counts([(v("v4"), 1), (v("v5"), 1)]);
    ensure(red.divisor == expected, || {
        format!("reduced to {:?}", red.divisor)
    })?;
    let trace = vec![vec![v("v1"), v("v2")], vec![v("v1"), v("v2"), v("v3")]];
    ensure(red.trace == trace, || {
        format!("unburnt sets {:?}", red.trace)
    })?;
    let m = MetricGraph::unit(g.clone());
    let mred = metric::reduce(&m, &d, &GraphPoint::Vertex(v("v5"))).map_err(err)?;
    ensure(mred.divisor == expected, || {
        "metric reduction disagrees".into()
    })?;
    Ok("v4+v5 via {v1,v2}, {v1,v2,v3}".into())
}

fn kirchhoff() -> Outcome {
    let check = |g: &FiniteGraph| -> Result<BigInt, String> {
        let count = spanning_tree_count(g).map_err(err)?;
        let order = jacobian_structure(g).order;
        ensure(
            count.determinant == count.enumerated && order == count.determinant,
            || {
                format!(
                    "|Jac| {order}, det {}, trees {}",
                    count.determinant, count.enumerated
                )
            },
        )?;
        Ok(order)
    };
    for (g, n) in [
        (families::complete(4), 16),
        (families::complete_bipartite(3, 3), 81),
        (families::petersen(), 2000),
    ] {
        let got = check(&g)?;
        ensure(got == BigInt::from(n), || {
            format!("expected {n}, got {got}")
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        check(&random::finite_graph(&mut rng, 7, 12))?;
    }
    Ok("K4 16, K3,3 81, Petersen 2000, 100 random graphs".into())
}

fn break_fixture_graphs() -> Vec<FiniteGraph> {
    let mut graphs = vec![
        families::path(3),
        families::cycle(2),
        families::cycle(3),
        families::cycle(5),
        families::banana(2),
        families::banana(3),
        families::complete(4),
        families::complete_bipartite(2, 3),
        families::dhar_graph(),
        families::hyperelliptic_genus3().model().clone(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    while graphs.len() < 40 {
        let g = random::finite_graph(&mut rng, 6, 9);
        if spanning_tree_count(&g).unwrap().enumerated <= BigInt::from(30) {
            graphs.push(g);
        }
    }
    graphs
}

fn break_bijection() -> Outcome {
    let graphs = break_fixture_graphs();
    let mut checked = 0;
    for g in &graphs {
        let trees = spanning_tree_count(g).map_err(err)?.enumerated;
        if trees > BigInt::from(30) {
            continue;
        }
        let breaks = enumerate_integral_break_divisors(g);
        let distinct: BTreeSet<_> = breaks.iter().cloned().collect();
        ensure(
            BigInt::from(breaks.len()) == trees && distinct.len() == breaks.len(),
            || format!("{} break divisors for {trees} trees", breaks.len()),
        )?;
        let q = VertexId(0);
        let mut per_class: BTreeMap<Divisor, usize> = BTreeMap::new();
        for b in &breaks {
            *per_class
                .entry(finite::reduce(g, b, q).map_err(err)?.divisor)
                .or_default() += 1;
        }
        let classes = reduced_classes(g, q);
        ensure(BigInt::from(classes.len()) == trees, || {
            "class count differs from tree count".into()
        })?;
        for c in &classes {
            let n = per_class.get(c).copied().unwrap_or(0);
            ensure(n == 1, || {
                format!("class {c:?} has {n} break representatives")
            })?;
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs with at most 30 spanning trees"))
}

fn chain_counts() -> Outcome {
    let mut triples = 0;
    for g in 1..=7usize {
        for r in 0..=g {
            for d in 0..=g + r {
                let c = chain::count_cells(g, r, d).map_err(err)?;
                ensure(c.formula == BigInt::from(c.enumerated), || {
                    format!("g={g} r={r} d={d}: {c:?}")
                })?;
                triples += 1;
            }
        }
    }
    for (g, r, d, n) in [(4, 1, 3, 2), (6, 1, 4, 5)] {
        let c = chain::count_cells(g, r, d).map_err(err)?;
        ensure(c.enumerated == n, || {
            format!("g={g} r={r} d={d}: {}", c.enumerated)
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut sampled = 0;
    for g in 1..=6usize {
        let c = ChainOfLoops::generic(g).map_err(err)?;
        for r in 0..=3usize.min(g) {
            for d in r..=g + r {
                for cell in chain::enumerate_cells(g, r, d).map_err(err)? {
                    let div = chain::sample_cell(&c, &cell, &mut rng).map_err(err)?;
                    let got = if g <= 3 {
                        rank::rank_metric_value(c.graph(), &div).map_err(err)?
                    } else {
                        c.rank(&div).map_err(err)?
                    };
                    ensure(got == r as i64, || format!("g={g} r={r} d={d}: rank {got}"))?;
                    sampled += 1;
                }
            }
        }
    }
    Ok(format!(
        "{triples} (g,r,d) triples; {sampled} sampled cells have rank r"
    ))
}

fn clifford(specials: &Specials) -> Outcome {
    for &(r, deg) in &specials.0 {
        ensure(2 * r <= deg, || {
            format!("special divisor of degree {deg} has rank {r}")
        })?;
    }
    let g = families::hyperelliptic_genus3();
    let v = |n: &str| GraphPoint::Vertex(g.model().vertex_by_name(n).unwrap());
    let d = Divisor::from_points([(v("a1"), 1), (v("a2"), 1)]);
    let r = rank::rank_metric_value(&g, &d).map_err(err)?;
    ensure(r == 1, || format!("hyperelliptic pair has rank {r}"))?;
    Ok(format!(
        "{} special divisors; equality r=1, deg=2 on the hyperelliptic graph",
        specials.0.len()
    ))
}

fn orientations() -> Outcome {
    let mut graphs = vec![
        families::complete(4),
        families::complete_bipartite(2, 3),
        families::banana(3),
        families::dhar_graph(),
        families::cycle(5),
        families::hyperelliptic_genus3().model().clone(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    while graphs.len() < 30 {
        graphs.push(random::finite_graph(&mut rng, 6, 8));
    }
    let mut total = 0;
    for g in &graphs {
        ensure(g.num_edges() <= 8, || "too many edges".into())?;
        let report = orientation_rank_law(g).map_err(err)?;
        ensure(report.holds(), || {
            format!("{} violations", report.violations.len())
        })?;
        total += report.orientations;
    }
    Ok(format!("{total} orientations on {} graphs", graphs.len()))
}

/// Effective vertex divisor of degree `d` with rank at least `r`, if any.
fn vertex_witness(g: &FiniteGraph, r: i64, d: usize) -> Result<Option<Divisor>, String> {
    let n = g.num_vertices();
    let mut idx = vec![0usize; d];
    loop {
        let div = Divisor::from_vertex_counts(idx.iter().map(|&i| (VertexId(i), 1)));
        if rank::rank_finite_at_least(g, &div, r).map_err(err)? {
            return Ok(Some(div));
        }
        let Some(k) = (0..d).rev().find(|&k| idx[k] + 1 < n) else {
            return Ok(None);
        };
        idx[k] += 1;
        for j in k + 1..d {
            idx[j] = idx[k];
        }
    }
}

fn brill_noether_existence() -> Outcome {
    let mut chains = 0;
    for g in 1..=6usize {
        let c = ChainOfLoops::generic(g).map_err(err)?;
        for r in 1..=g {
            for d in 1..g + r {
                if brill_noether_number(g as i64, r as i64, d as i64) < 0 {
                    continue;
                }
                let cells = chain::enumerate_cells(g, r, d).map_err(err)?;
                let cell = cells
                    .first()
                    .ok_or_else(|| format!("no cell for g={g} r={r} d={d}"))?;
                let div = chain::cell_divisor(&c, cell, &vec![frac(1, 3); cell.dimension()])
                    .map_err(err)?;
                ensure(c.rank(&div).map_err(err)? >= r as i64, || {
                    format!("chain g={g} r={r} d={d}")
                })?;
                chains += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut graphs = 0;
    let mut witnesses = 0;
    while graphs < 50 {
        let g = random::finite_graph(&mut rng, 6, 9);
        let genus = g.genus();
        if genus < 2 {
            continue;
        }
        graphs += 1;
        for r in 1..=genus {
            for d in 1..genus + r {
                if brill_noether_number(genus as i64, r as i64, d as i64) < 0 {
                    continue;
                }
                vertex_witness(&g, r as i64, d)?
                    .ok_or_else(|| format!("no vertex witness for r={r} d={d} on {g:?}"))?;
                witnesses += 1;
            }
        }
        let bound = (genus as i64 + 3) / 2;
        let m = MetricGraph::unit(g.clone());
        let grid = grid_points(&m, 1).map_err(err)?;
        match gonality(&m, bound, &grid).map_err(err)? {
            Gonality::Found { degree, .. } => {
                ensure(degree <= bound, || "gonality above bound".into())?
            }
            Gonality::ExceedsBound { .. } => {
                return Err(format!("gonality exceeds {bound} on {g:?}"))
            }
        }
    }
    Ok(format!(
        "{chains} chain-of-loops (g,r,d) cases; {witnesses} witnesses and gonality bounds on {graphs} random graphs"
    ))
}

fn banana_ogg() -> Outcome {
    for genus in 2..=6usize {
        let g = MetricGraph::unit(families::banana(genus));
        let p = GraphPoint::Vertex(g.model().vertex_by_name("P").unwrap());
        let q = GraphPoint::Vertex(g.model().vertex_by_name("Q").unwrap());
        let d = &Divisor::point(q.clone(), genus as i64 - 1) - &Divisor::point(p.clone(), 1);
        ensure(metric::is_reduced(&g, &d, &p).map_err(err)?, || {
            format!("g={genus}: not P-reduced")
        })?;
        ensure(!d.is_effective(), || "effective".into())?;
        ensure(rank::rank_metric_value(&g, &d).map_err(err)? == -1, || {
            format!("g={genus}: rank")
        })?;
        for v in [&p, &q] {
            ensure(!rank::is_weierstrass_point(&g, v).map_err(err)?, || {
                format!("g={genus}: vertex is Weierstrass")
            })?;
        }
        if genus >= 3 {
            let mid = g
                .point_on_edge(tropdiv::EdgeId(0), frac(1, 2))
                .map_err(err)?;
            ensure(rank::is_weierstrass_point(&g, &mid).map_err(err)?, || {
                format!("g={genus}: midpoint")
            })?;
        }
    }
    Ok("banana graphs of genus 2..6".into())
}

fn abel_jacobi_kernel() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut principal = 0;
    let mut outside = 0;
    while principal < 100 || outside < 100 {
        let g = random::metric_graph(&mut rng, 5, 8, 3);
        if g.genus() == 0 {
            continue;
        }
        let lattice = PeriodLattice::new(&g);
        let base = random::point(&mut rng, &g, 4);
        if principal < 100 {
            let f = random::pl_function(&mut rng, &g, 3);
            let aj = abel_jacobi(&g, &lattice, &base, &f.div(&g)).map_err(err)?;
            ensure(aj.in_lattice, || format!("div(f) maps to {:?}", aj.reduced))?;
            principal += 1;
        }
        if outside < 100 {
            let d = random::divisor(&mut rng, &g, 0, 2, 4);
            let is_principal = metric::reduced_divisor(&g, &d, &base).is_zero();
            let aj = abel_jacobi(&g, &lattice, &base, &d).map_err(err)?;
            ensure(aj.in_lattice == is_principal, || {
                format!("AJ {:?} vs reduction", aj.reduced)
            })?;
            outside += !is_principal as usize;
        }
    }
    Ok("100 principal divisors in the lattice, 100 non-principal outside".into())
}

fn zhang_and_weights() -> Outcome {
    let mut fixtures = vec![
        families::circle(int(3)),
        families::two_loops(int(1), frac(5, 2)),
        families::theta([int(1), frac(1, 2), frac(7, 3)]),
        families::hyperelliptic_genus3(),
        MetricGraph::unit(families::complete(4)),
        MetricGraph::unit(families::petersen()),
        MetricGraph::unit(families::dhar_graph()),
        MetricGraph::unit(families::banana(4)),
        MetricGraph::unit(families::path(3))
            .with_weights(vec![1, 0, 2])
            .unwrap(),
        MetricGraph::unit(families::cycle(3))
            .with_weights(vec![0, 2, 0])
            .unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let g = random::metric_graph(&mut rng, 5, 7, 4);
        let w = (0..g.model().num_vertices())
            .map(|_| rng.gen_range(0..=1))
            .collect();
        let g = g.with_weights(w).unwrap();
        if g.weighted_genus() > 0 {
            fixtures.push(g);
        }
    }
    for g in &fixtures {
        let z = zhang_measure(g).map_err(err)?;
        ensure(z.total_mass() == int(1), || {
            format!("total mass {}", z.total_mass())
        })?;
        ensure(
            z.edge_density
                .iter()
                .chain(&z.vertex_atoms)
                .all(|x| !x.is_negative()),
            || "negative density".into(),
        )?;
    }
    for c in [
        families::circle(int(3)),
        MetricGraph::new(families::cycle(3), vec![int(1), frac(1, 2), int(3)]).unwrap(),
    ] {
        let z = zhang_measure(&c).map_err(err)?;
        let uniform = z
            .edge_density
            .iter()
            .all(|x| *x == int(1) / c.total_length());
        ensure(uniform && z.vertex_atoms.iter().all(Zero::is_zero), || {
            "circle is not uniform".into()
        })?;
    }

    let mut instances = 0;
    while instances < 50 {
        let g = random::metric_graph(&mut rng, 4, 5, 3);
        let n = g.model().num_vertices();
        let w: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=1)).collect();
        let g = g.with_weights(w).unwrap();
        if g.weighted_genus() > 4 || !g.has_weights() {
            continue;
        }
        let genus = g.weighted_genus() as i64;
        let deg = rng.gen_range(-1..=2 * genus);
        let d = random::divisor(&mut rng, &g, deg, 2, 3);
        let intrinsic = rank::weighted_rank(&g, &d).map_err(err)?;
        for len in [int(1), frac(2, 7)] {
            let explicit =
                rank::rank_metric_value(&rank::attach_weight_loops(&g, &len).map_err(err)?, &d)
                    .map_err(err)?;
            ensure(explicit == intrinsic, || {
                format!("intrinsic {intrinsic} vs loops {explicit}")
            })?;
        }
        let c = rank::weighted_riemann_roch_check(&g, &d).map_err(err)?;
        ensure(c.holds, || format!("weighted Riemann-Roch fails: {c:?}"))?;
        instances += 1;
    }
    Ok(format!(
        "total mass 1 on {} fixtures; circle uniform; weighted rank and Riemann-Roch on 50 instances",
        fixtures.len()
    ))
}

fn main() -> ExitCode {
    let mut specials = Specials(Vec::new());
    let mut failed = 0;
    let mut report = |n: usize, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS {n:>2} {name}: {msg} ({secs:.1}s)"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {n:>2} {name}: {msg} ({secs:.1}s)");
            }
        }
    };
    report(1, "Riemann-Roch identity", &mut || {
        riemann_roch(&mut specials)
    });
    report(2, "Dhar worked example", &mut dhar_example);
    report(3, "Jacobian order equals tree count", &mut kirchhoff);
    report(4, "break divisor bijection", &mut break_bijection);
    report(5, "chain-of-loops cell counts", &mut chain_counts);
    report(6, "Clifford inequality", &mut || clifford(&specials));
    report(7, "orientation rank law", &mut orientations);
    report(
        8,
        "Brill-Noether existence evidence",
        &mut brill_noether_existence,
    );
    report(9, "banana graph Weierstrass computation", &mut banana_ogg);
    report(10, "Abel-Jacobi kernel", &mut abel_jacobi_kernel);
    report(
        11,
        "canonical measure and weighted rank",
        &mut zhang_and_weights,
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
