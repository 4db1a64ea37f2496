//! Cells of the Brill-Noether locus of a generic chain of loops: tableaux,
//! lingering lattice paths, sampled divisors and their ranks.
//!
//!     cargo run --example chain_of_loops

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropdiv::chain::{adjoint_check, count_cells, enumerate_cells, sample_cell, ChainOfLoops};
use tropdiv::json::format_divisor_short;

fn main() -> tropdiv::Result<()> {
    let (g, r, d) = (6, 1, 4);
    let count = count_cells(g, r, d)?;
    println!(
        "g={g} r={r} d={d}: formula {} enumerated {}",
        count.formula, count.enumerated
    );

    let chain = ChainOfLoops::generic(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for cell in enumerate_cells(g, r, d)? {
        let div = sample_cell(&chain, &cell, &mut rng)?;
        let adjoint = adjoint_check(&chain, &cell, &div)?;
        println!(
            "tableau {:?}  rank {}  adjoint is transpose: {}",
            cell.tableau.rows,
            chain.rank(&div)?,
            adjoint.is_transpose()
        );
        println!("  D = {}", format_divisor_short(chain.graph(), &div));
    }
    Ok(())
}
