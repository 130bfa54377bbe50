//! Arithmetic in GF(p^k): modulus, primitive root and a multiplication table.
//!
//! `cargo run --example field_arithmetic -- 9`

use pgq::Field;

fn main() {
    let q: u64 = std::env::args().nth(1).map_or(9, |a| a.parse().expect("q must be an integer"));
    let f = Field::with_order(q).expect("odd prime power");
    println!("GF({}) = GF({}^{})", f.order(), f.characteristic(), f.degree());
    if let Some(m) = f.modulus() {
        let terms: Vec<String> = m
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}x"),
                _ => format!("{c}x^{i}"),
            })
            .collect();
        println!("modulus: x^{} + {}", f.degree(), terms.join(" + "));
    }
    let g = f.primitive_root();
    println!("primitive root: code {} of order {}", g.code(), f.multiplicative_order(g).unwrap());

    let width = f.order().to_string().len();
    println!("\nmultiplication by code:");
    for x in f.elements() {
        let row: Vec<String> = f.elements().map(|y| format!("{:>width$}", f.mul(x, y).code())).collect();
        println!("  {}", row.join(" "));
    }
    println!("\ninverses:");
    for x in f.nonzero() {
        println!("  {:>width$} -> {:>width$}", x.code(), f.inv(x).unwrap().code());
    }
}
