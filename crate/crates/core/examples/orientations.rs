//! Orientation divisors: `D_O` has rank -1 exactly when `O` is acyclic.
//!
//!     cargo run --example orientations

use tropdiv::families;
use tropdiv::orientation::orientation_rank_law;

fn main() -> tropdiv::Result<()> {
    for (name, g) in [
        ("K4", families::complete(4)),
        ("banana g=3", families::banana(3)),
    ] {
        let report = orientation_rank_law(&g)?;
        println!(
            "{name}: {} orientations, {} acyclic, law holds: {}",
            report.orientations,
            report.acyclic,
            report.holds()
        );
    }
    Ok(())
}
