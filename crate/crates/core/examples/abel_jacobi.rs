//! Period lattices of the two genus-2 metric graphs and the Abel-Jacobi
//! image of divisors: principal divisors land in the lattice.
//!
//!     cargo run --example abel_jacobi

use tropdiv::json::parse_divisor;
use tropdiv::rational::{format, frac, int};
use tropdiv::torus::{abel_jacobi, PeriodLattice};
use tropdiv::{families, GraphPoint, PlFunction, VertexId};

fn show(rows: &[Vec<tropdiv::Rational>]) -> String {
    let rows: Vec<String> = rows
        .iter()
        .map(|r| r.iter().map(format).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

fn main() -> tropdiv::Result<()> {
    let wedge = families::two_loops(int(1), int(1));
    let theta = families::theta([frac(1, 2), frac(1, 2), frac(1, 2)]);
    for (name, g) in [("two circles", &wedge), ("theta", &theta)] {
        let lattice = PeriodLattice::new(g);
        println!(
            "{name}: Gram {}  det {}",
            show(&lattice.gram),
            format(&lattice.determinant())
        );
    }

    let g = theta;
    let lattice = PeriodLattice::new(&g);
    let base = GraphPoint::Vertex(VertexId(0));
    let d = parse_divisor(&g, "e1@1/4:1,P:-1")?;
    let aj = abel_jacobi(&g, &lattice, &base, &d)?;
    println!(
        "AJ(e1@1/4 - P) reduced coordinates {:?}",
        aj.reduced.iter().map(format).collect::<Vec<_>>()
    );

    let f = PlFunction::new(
        &g,
        vec![int(0), int(0)],
        vec![vec![(frac(1, 4), frac(1, 4))], vec![], vec![]],
    )?;
    let aj = abel_jacobi(&g, &lattice, &base, &f.div(&g))?;
    println!("AJ(div f) in lattice: {}", aj.in_lattice);
    Ok(())
}
