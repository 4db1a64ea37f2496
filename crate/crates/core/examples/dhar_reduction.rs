//! Reduce `v1 + v2` to the `v5`-reduced divisor on the five-vertex graph
//! made of two triangles, printing the unburnt set of each firing.
//!
//!     cargo run --example dhar_reduction

use tropdiv::json::{format_divisor_short, graph_to_json};
use tropdiv::{families, finite, Divisor, MetricGraph};

fn main() -> tropdiv::Result<()> {
    let g = families::dhar_graph();
    let m = MetricGraph::unit(g.clone());
    println!("graph: {}", graph_to_json(&m));

    let v = |name: &str| g.vertex_by_name(name).expect("vertex exists");
    let d = Divisor::from_vertex_counts([(v("v1"), 1), (v("v2"), 1)]);
    let red = finite::reduce(&g, &d, v("v5"))?;
    for (step, set) in red.trace.iter().enumerate() {
        let names: Vec<_> = set.iter().map(|&u| g.vertex_name(u)).collect();
        println!("step {}: fire {{{}}}", step + 1, names.join(","));
    }
    println!("reduced: {}", format_divisor_short(&m, &red.divisor));
    println!("firing script: {:?}", red.script);
    Ok(())
}
