//! Weierstrass points of banana graphs: the two vertices are never
//! Weierstrass, interior points are once the genus is at least 3.
//!
//!     cargo run --example weierstrass

use tropdiv::json::format_point;
use tropdiv::rank::{is_weierstrass_point, rank_metric_value};
use tropdiv::rational::frac;
use tropdiv::{families, Divisor, EdgeId, GraphPoint, MetricGraph};

fn main() -> tropdiv::Result<()> {
    for genus in 2..=5 {
        let g = MetricGraph::unit(families::banana(genus));
        let p = GraphPoint::Vertex(g.model().vertex_by_name("P").expect("P"));
        let q = GraphPoint::Vertex(g.model().vertex_by_name("Q").expect("Q"));
        let d = &Divisor::point(q, genus as i64 - 1) - &Divisor::point(p.clone(), 1);
        let mid = g.point_on_edge(EdgeId(0), frac(1, 2))?;
        println!(
            "g={genus}: r((g-1)Q - P) = {}, {} Weierstrass: {}, {} Weierstrass: {}",
            rank_metric_value(&g, &d)?,
            format_point(&g, &p),
            is_weierstrass_point(&g, &p)?,
            format_point(&g, &mid),
            is_weierstrass_point(&g, &mid)?
        );
    }
    Ok(())
}
