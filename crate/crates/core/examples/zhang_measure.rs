//! The canonical probability measure of a vertex-weighted metric graph,
//! printed as CSV.
//!
//!     cargo run --example zhang_measure

use tropdiv::rational::{frac, int};
use tropdiv::zhang::zhang_measure;
use tropdiv::{families, rational, MetricGraph};

fn main() -> tropdiv::Result<()> {
    let g = MetricGraph::new(families::banana(2), vec![int(1), frac(1, 2), int(2)])?
        .with_weights(vec![1, 0])?;
    let z = zhang_measure(&g)?;
    print!("{}", z.to_csv(&g));
    println!("total mass {}", rational::format(&z.total_mass()));
    Ok(())
}
