//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use pgq::app::Lcg;
use pgq::Permutation;

/// Every element of `<gens>`, by closing the identity under right multiplication.
pub fn closure(gens: &[Permutation], degree: usize) -> HashSet<Vec<usize>> {
    let id: Vec<usize> = (0..degree).collect();
    let imgs: Vec<Vec<usize>> = gens.iter().map(|g| (0..degree).map(|i| g.image(i)).collect()).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(e) = stack.pop() {
        for g in &imgs {
            let next: Vec<usize> = e.iter().map(|&i| g[i]).collect();
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    seen
}

/// All set partitions of `items`, as block labels per item (restricted growth strings).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max {
            cur.push(b);
            go(i + 1, n, max.max(b + 1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(1, n, 1, &mut vec![0], &mut out);
    }
    out
}

/// Primitive iff no partition of `domain` other than the two trivial ones is preserved.
pub fn brute_primitive(gens: &[Permutation], domain: &[usize]) -> bool {
    let n = domain.len();
    let pos = |x: usize| domain.iter().position(|&d| d == x).expect("domain is invariant");
    for labels in set_partitions(n) {
        let blocks = labels.iter().max().map_or(0, |m| m + 1);
        if blocks == 1 || blocks == n {
            continue;
        }
        // Preserved iff same-block points map to same-block points.
        let preserved = gens.iter().all(|g| {
            (0..n).all(|i| {
                (i + 1..n).all(|j| {
                    labels[i] != labels[j] || labels[pos(g.image(domain[i]))] == labels[pos(g.image(domain[j]))]
                })
            })
        });
        if preserved {
            return false;
        }
    }
    true
}

pub fn random_perm(rng: &mut Lcg, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        v.swap(i, rng.below(i + 1));
    }
    Permutation::from_images(v).unwrap()
}

/// A permutation preserving the partition of `0..n` into consecutive blocks of size `b`.
pub fn random_block_perm(rng: &mut Lcg, n: usize, b: usize) -> Permutation {
    let outer = random_perm(rng, n / b);
    let mut v = vec![0; n];
    for blk in 0..n / b {
        let inner = random_perm(rng, b);
        for i in 0..b {
            v[blk * b + i] = outer.image(blk) * b + inner.image(i);
        }
    }
    Permutation::from_images(v).unwrap()
}

/// A sparse random permutation: one short cycle.
pub fn random_cycle(rng: &mut Lcg, n: usize) -> Permutation {
    let len = 2 + rng.below(n.min(4) - 1);
    let mut pts: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        pts.swap(i, rng.below(i + 1));
    }
    Permutation::from_cycles(n, &[&pts[..len]]).unwrap()
}

/// Random generating sets of degree 2..=8 mixing full, block-preserving and sparse generators.
pub fn random_groups(seed: u64, count: usize) -> Vec<(usize, Vec<Permutation>)> {
    let mut rng = Lcg::new(seed);
    (0..count)
        .map(|i| {
            let n = 2 + rng.below(7);
            let k = 1 + rng.below(3);
            let gens = (0..k)
                .map(|_| match i % 3 {
                    0 => random_perm(&mut rng, n),
                    1 if n.is_multiple_of(2) && n > 2 => random_block_perm(&mut rng, n, 2),
                    _ => random_cycle(&mut rng, n),
                })
                .collect();
            (n, gens)
        })
        .collect()
}

/// Transitive random groups of degree 3..=8, about half of them imprimitive by construction.
pub fn random_transitive_groups(seed: u64, count: usize) -> Vec<(usize, Vec<Permutation>)> {
    let mut rng = Lcg::new(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = 3 + rng.below(6);
        let k = 1 + rng.below(2);
        let divisor = [2, 3, 4].into_iter().find(|b| n.is_multiple_of(*b) && n > *b);
        let gens: Vec<Permutation> = match divisor {
            Some(b) if out.len() % 2 == 0 => (0..k).map(|_| random_block_perm(&mut rng, n, b)).collect(),
            _ => (0..k).map(|_| random_perm(&mut rng, n)).collect(),
        };
        let dom: Vec<usize> = (0..n).collect();
        if pgq::permgrp::orbits(&gens, &dom).unwrap().len() == 1 {
            out.push((n, gens));
        }
    }
    out
}
