//! Tropical dependence certificates and the support of a minimum of
//! functions from a complete linear system on a circle.
//!
//!     cargo run --example tropical_independence

use tropdiv::independence::{min_combination, verify_tropical_dependence};
use tropdiv::json::{format_point, parse_divisor};
use tropdiv::rational::{frac, int};
use tropdiv::{families, PlFunction};

fn main() -> tropdiv::Result<()> {
    let g = families::circle(int(2));
    let d = parse_divisor(&g, "v1:2,v2:2")?;
    // tents rising from v1 and from v2
    let f = PlFunction::new(&g, vec![int(0), int(1)], vec![vec![], vec![]])?;
    let h = PlFunction::new(&g, vec![int(1), int(0)], vec![vec![], vec![]])?;
    let zero = PlFunction::zero(&g);
    let fs = [f, h, zero];
    let shifts = [int(0), int(0), frac(1, 2)];
    println!(
        "dependent: {}",
        verify_tropical_dependence(&g, &fs, &shifts)?
    );
    let m = min_combination(&g, &fs, &shifts, &d)?;
    let support: Vec<_> = m
        .support_direct
        .iter()
        .map(|p| format_point(&g, p))
        .collect();
    println!(
        "support of div(min) + D: {:?} (local criterion agrees: {})",
        support,
        m.agree()
    );
    Ok(())
}
