use std::time::Instant;

use pgq::moves::hole_group_generators;
use pgq::permgrp::{classify, schreier_sims};
use pgq::Plane;

fn main() {
    let qs: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("q must be an integer"))
        .collect();
    let qs = if qs.is_empty() { vec![3, 5, 7] } else { qs };
    for q in qs {
        let start = Instant::now();
        let plane = Plane::with_order(q).expect("odd prime power");
        let gens = hole_group_generators(&plane, 0).expect("alpha = 0 is a point");
        let t_gens = start.elapsed();
        let chain = schreier_sims(&gens.generators, plane.num_points()).expect("same degree");
        let class = classify(&chain.order(), plane.num_points() - 1);
        println!(
            "q = {q:>2}: {} generators, order {} ({}) [gens {:.2?}, chain {:.2?}, {} strong]",
            gens.generators.len(),
            class.order,
            class.tag,
            t_gens,
            start.elapsed() - t_gens,
            chain.strong_generators().len(),
        );
    }
}
