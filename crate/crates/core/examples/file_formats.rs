//! Reading a graph and divisors from JSON and the short text form, and
//! writing results back.
//!
//!     cargo run --example file_formats

use tropdiv::json::{divisor_to_json, format_divisor_short, parse_divisor, parse_graph};
use tropdiv::metric;

const GRAPH: &str = r#"{
  "vertices": [{"id": "a"}, {"id": "b"}, {"id": "c", "weight": 1}],
  "edges": [
    {"id": "ab", "ends": ["a", "b"], "length": "3/2"},
    {"id": "bc", "ends": ["b", "c"], "length": "1"},
    {"id": "ca", "ends": ["c", "a"], "length": "2/3"}
  ]
}"#;

fn main() -> tropdiv::Result<()> {
    let g = parse_graph(GRAPH)?;
    println!("genus {}, weighted genus {}", g.genus(), g.weighted_genus());
    let d = parse_divisor(&g, "ab@1/2:2,c:-1")?;
    let q = g.vertex(g.model().vertex_by_name("a").expect("a"));
    let red = metric::reduce(&g, &d, &q)?;
    println!("a-reduced: {}", format_divisor_short(&g, &red.divisor));
    println!("{}", divisor_to_json(&g, &red.divisor));
    Ok(())
}
