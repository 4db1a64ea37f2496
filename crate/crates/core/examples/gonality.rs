//! Divisorial gonality and Clifford index on small graphs, searched over
//! the vertices and edge midpoints.
//!
//!     cargo run --example gonality

use tropdiv::brill_noether::{brill_noether_rank, clifford_index, gonality, grid_points, Gonality};
use tropdiv::json::format_divisor_short;
use tropdiv::{families, MetricGraph};

fn main() -> tropdiv::Result<()> {
    for (name, g) in [
        ("K4", MetricGraph::unit(families::complete(4))),
        ("hyperelliptic genus 3", families::hyperelliptic_genus3()),
        ("Petersen", MetricGraph::unit(families::petersen())),
    ] {
        let grid = grid_points(&g, 2)?;
        let bound = (g.genus() as i64 + 3) / 2;
        match gonality(&g, bound, &grid)? {
            Gonality::Found { degree, witness } => {
                println!(
                    "{name}: gonality {degree} via {}",
                    format_divisor_short(&g, &witness)
                )
            }
            Gonality::ExceedsBound { max_degree } => {
                println!("{name}: gonality above {max_degree}")
            }
        }
        if g.genus() <= 3 {
            println!("  Clifford index {:?}", clifford_index(&g, &grid)?.value());
        }
    }
    let bn = brill_noether_rank(&families::complete(4), 1, 3)?;
    println!("K4: w^1_3 = {} over {} classes", bn.value, bn.classes.len());
    Ok(())
}
