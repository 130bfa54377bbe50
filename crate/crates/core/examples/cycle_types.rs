//! Cycle type of collinear x[β,γ] on its line minus α, for several q.
//!
//! `cargo run --example cycle_types -- 5 7 25 27`

use pgq::app::cycle_table;

fn main() {
    let qs: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("q must be an integer"))
        .collect();
    let qs = if qs.is_empty() { vec![5, 7, 9, 11, 13] } else { qs };
    for row in cycle_table(&qs).expect("odd prime powers above 3") {
        println!(
            "q = {:>2}: {:<16} over {} lines and {} pairs ({})",
            row.q,
            row.cycle_type.map_or_else(|| "varies".into(), |t| t.to_string()),
            row.lines,
            row.pairs,
            match row.matches_reference {
                Some(true) => "matches the table",
                Some(false) => "DIFFERS from the table",
                None => "no tabulated value",
            }
        );
    }
}
