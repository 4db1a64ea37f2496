//! Sandpile groups via Smith normal form, checked against spanning-tree
//! counts by determinant and by enumeration.
//!
//!     cargo run --example jacobian

use tropdiv::families;
use tropdiv::jacobian::{jacobian_structure, spanning_tree_count};

fn main() -> tropdiv::Result<()> {
    for (name, g) in [
        ("K4", families::complete(4)),
        ("K3,3", families::complete_bipartite(3, 3)),
        ("Petersen", families::petersen()),
        ("C5", families::cycle(5)),
    ] {
        let jac = jacobian_structure(&g);
        let trees = spanning_tree_count(&g)?;
        let factors: Vec<String> = jac
            .invariant_factors
            .iter()
            .map(|f| f.to_string())
            .collect();
        println!(
            "{name:<9} invariant factors [{}]  order {}  trees {}",
            factors.join(", "),
            jac.order,
            trees.enumerated
        );
    }
    Ok(())
}
