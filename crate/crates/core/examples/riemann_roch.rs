//! Ranks of divisors on a metric theta graph with irrational-looking
//! lengths, and the Riemann-Roch identity `r(D) - r(K - D) = deg D - g + 1`.
//!
//!     cargo run --example riemann_roch

use tropdiv::families;
use tropdiv::json::{format_divisor_short, parse_divisor};
use tropdiv::rank;
use tropdiv::rational::{frac, int};

fn main() -> tropdiv::Result<()> {
    let g = families::theta([int(1), frac(3, 2), frac(5, 7)]);
    println!(
        "genus {}, K = {}",
        g.genus(),
        format_divisor_short(&g, &g.canonical_divisor())
    );
    for text in [
        "0",
        "P:1",
        "P:1,e2@1/2:1",
        "Q:2",
        "e1@1/3:3,P:-1",
        "P:2,Q:1",
        "P:3,Q:1",
    ] {
        let d = parse_divisor(&g, text)?;
        let c = rank::riemann_roch_check(&g, &d)?;
        println!(
            "D = {:<18} deg {:>2}  r(D) = {:>2}  r(K-D) = {:>2}  identity holds: {}",
            format_divisor_short(&g, &d),
            c.degree,
            c.rank,
            c.adjoint_rank,
            c.holds
        );
    }
    Ok(())
}
