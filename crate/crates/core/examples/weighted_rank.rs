//! Rank on a vertex-weighted graph, computed intrinsically and on the graph
//! with one loop attached per unit of weight.
//!
//!     cargo run --example weighted_rank

use tropdiv::json::{format_divisor_short, parse_divisor};
use tropdiv::rank::{
    attach_weight_loops, rank_metric_value, weighted_rank, weighted_riemann_roch_check,
};
use tropdiv::rational::frac;
use tropdiv::{families, MetricGraph};

fn main() -> tropdiv::Result<()> {
    let g = MetricGraph::unit(families::cycle(3)).with_weights(vec![1, 0, 1])?;
    let loops = attach_weight_loops(&g, &frac(1, 3))?;
    println!(
        "weighted genus {}, K# = {}",
        g.weighted_genus(),
        format_divisor_short(&g, &g.weighted_canonical())
    );
    for text in ["v1:1", "v1:2", "v1:2,v3:2", "v2:4", "v2:5,v1:-1"] {
        let d = parse_divisor(&g, text)?;
        println!(
            "D = {text:<11} r# = {}  with loops = {}  weighted Riemann-Roch: {}",
            weighted_rank(&g, &d)?,
            rank_metric_value(&loops, &d)?,
            weighted_riemann_roch_check(&g, &d)?.holds
        );
    }
    Ok(())
}
