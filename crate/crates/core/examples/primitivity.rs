//! Primitivity of the hole group, and the minimal blocks that certify it.
//!
//! `cargo run --example primitivity -- 7`

use pgq::moves::{hole_group_generators, omega};
use pgq::permgrp::{is_primitive, minimal_block, orbits, schreier_sims};
use pgq::Plane;

fn main() {
    let q: u64 = std::env::args().nth(1).map_or(5, |a| a.parse().expect("q must be an integer"));
    let pl = Plane::with_order(q).expect("odd prime power");
    let dom = omega(&pl, 0);
    let gens = hole_group_generators(&pl, 0).unwrap();
    // A small generating set makes the block search cheap.
    let chain = schreier_sims(&gens.generators, pl.num_points()).unwrap();
    let small = chain.reduced_generators();
    println!("q = {q}: {} generators, {} needed", gens.generators.len(), small.len());
    println!("orbits on Omega: {}", orbits(small, &dom).unwrap().len());
    for &d in dom.iter().skip(1).take(3) {
        println!("minimal block of {{{}, {d}}} has size {}", dom[0], minimal_block(small, &dom, dom[0], d).unwrap().len());
    }
    println!("primitive: {}", is_primitive(small, &dom).unwrap());

    // The same test recognises an imprimitive group: a 6-cycle keeps {0,2,4} together.
    let c6 = pgq::Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap();
    let all: Vec<usize> = (0..6).collect();
    println!("\nC6 primitive: {}", is_primitive(std::slice::from_ref(&c6), &all).unwrap());
    println!("block of {{0, 2}}: {:?}", minimal_block(&[c6], &all, 0, 2).unwrap());
}
