//! At q = 3 the hole group has order 95040 on 12 points.
//!
//! Also confirms the count by enumerating the group element by element.

use std::collections::HashSet;

use pgq::moves::hole_group_generators;
use pgq::permgrp::schreier_sims;
use pgq::Plane;

fn main() {
    let pl = Plane::with_order(3).unwrap();
    let gens = hole_group_generators(&pl, 0).unwrap();
    println!(
        "{} ordered pairs, {} identity generators dropped, {} left",
        gens.raw_count, gens.identity_count, gens.generators.len()
    );
    let chain = schreier_sims(&gens.generators, pl.num_points()).unwrap();
    println!("stabilizer chain: base {:?}, orbits {:?}", chain.base(), chain.orbit_sizes());
    println!("order {}", chain.order());

    // Breadth-first closure over compact image vectors.
    let seed: Vec<u8> = (0..pl.num_points() as u8).collect();
    let images: Vec<Vec<u8>> = gens
        .generators
        .iter()
        .map(|g| g.images().iter().map(|&i| i as u8).collect())
        .collect();
    let mut seen: HashSet<Vec<u8>> = HashSet::from([seed.clone()]);
    let mut frontier = vec![seed];
    while let Some(e) = frontier.pop() {
        for g in &images {
            let next: Vec<u8> = e.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    println!("enumerated {} elements", seen.len());
}
