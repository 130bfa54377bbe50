mod common;

use num_bigint::BigUint;
use pgq::app::Lcg;
use pgq::moves::hole_group_generators;
use pgq::permgrp::{factorial, is_primitive, minimal_block, schreier_sims, schreier_sims_with, ChainOptions};
use pgq::Plane;

#[test]
fn chain_order_matches_closure() {
    let groups = common::random_groups(2024, 60);
    let mut proper = 0;
    for (i, (n, gens)) in groups.iter().enumerate() {
        let size = common::closure(gens, *n).len();
        if size > 1 && BigUint::from(size) != factorial(*n) {
            proper += 1;
        }
        let expected = BigUint::from(size);
        for saturate in [true, false] {
            let chain = schreier_sims_with(gens, *n, ChainOptions { saturate }).unwrap();
            assert_eq!(chain.order(), expected, "group {i} (degree {n}, saturate {saturate})");
        }
    }
    assert!(proper >= 20, "only {proper} proper nontrivial subgroups");
}

#[test]
fn membership_matches_closure() {
    let mut rng = Lcg::new(77);
    for (n, gens) in common::random_groups(99, 30) {
        let elements = common::closure(&gens, n);
        let chain = schreier_sims(&gens, n).unwrap();
        for _ in 0..40 {
            let p = common::random_perm(&mut rng, n);
            let images: Vec<usize> = (0..n).map(|i| p.image(i)).collect();
            assert_eq!(chain.contains(&p).unwrap(), elements.contains(&images));
        }
    }
}

#[test]
fn primitivity_matches_partition_search() {
    let groups = common::random_transitive_groups(31337, 30);
    let mut seen = [0usize; 2];
    for (n, gens) in &groups {
        let dom: Vec<usize> = (0..*n).collect();
        let expected = common::brute_primitive(gens, &dom);
        assert_eq!(is_primitive(gens, &dom).unwrap(), expected, "degree {n}, {gens:?}");
        seen[expected as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "need both outcomes, got {seen:?}");
}

#[test]
fn minimal_blocks_are_blocks() {
    for (n, gens) in common::random_transitive_groups(5, 20) {
        let dom: Vec<usize> = (0..n).collect();
        for b in 1..n {
            let block = minimal_block(&gens, &dom, 0, b).unwrap();
            assert!(block.contains(&0) && block.contains(&b));
            for g in &gens {
                let image: Vec<usize> = block.iter().map(|&x| g.image(x)).collect();
                let meets = image.iter().any(|x| block.contains(x));
                assert!(!meets || image.iter().all(|x| block.contains(x)));
            }
        }
    }
}

#[test]
fn partition_counts_are_bell_numbers() {
    let bell = [1, 2, 5, 15, 52, 203, 877, 4140];
    for (n, b) in (1..=8).zip(bell) {
        assert_eq!(common::set_partitions(n).len(), b);
    }
}

#[test]
fn q3_hole_group_enumerates_to_95040() {
    let pl = Plane::with_order(3).unwrap();
    let gens = hole_group_generators(&pl, 0).unwrap();
    let elements = common::closure(&gens.generators, pl.num_points());
    assert_eq!(elements.len(), 95040);
    assert!(elements.iter().all(|e| e[0] == 0));
    let chain = schreier_sims(&gens.generators, pl.num_points()).unwrap();
    assert_eq!(chain.order(), BigUint::from(95040u32));
}
