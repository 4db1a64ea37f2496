//! Integral break divisors of K4 are in bijection with its sandpile group;
//! every degree-g class has exactly one break representative.
//!
//!     cargo run --example break_divisors

use tropdiv::break_divisors::{
    break_cells, break_representative, enumerate_integral_break_divisors,
};
use tropdiv::json::format_divisor_short;
use tropdiv::rational::format;
use tropdiv::{families, Divisor, MetricGraph};

fn main() -> tropdiv::Result<()> {
    let g = families::complete(4);
    let m = MetricGraph::unit(g.clone());
    let breaks = enumerate_integral_break_divisors(&g);
    println!("{} integral break divisors on K4", breaks.len());
    for b in breaks.iter().take(5) {
        println!("  {}", format_divisor_short(&m, b));
    }

    let d = Divisor::from_vertex_vec(&[5, -1, -1, 0]);
    let rep = break_representative(&g, &d)?;
    println!(
        "{} ~ {} (cell of {} spanning tree(s))",
        format_divisor_short(&m, &d),
        format_divisor_short(&m, &rep.divisor),
        rep.trees.len()
    );

    let total: tropdiv::Rational = break_cells(&m).iter().map(|c| &c.volume).sum();
    println!("total cell volume {}", format(&total));
    Ok(())
}
