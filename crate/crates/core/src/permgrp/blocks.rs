//! Orbits, minimal blocks of imprimitivity and primitivity.

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;

use super::{GroupError, Permutation};

fn check_invariant(gens: &[Permutation], domain: &[usize]) -> Result<Vec<bool>, GroupError> {
    let degree = gens.first().map_or(domain.iter().max().map_or(0, |m| m + 1), |g| g.degree());
    let mut member = vec![false; degree];
    for &x in domain {
        if x >= degree {
            return Err(GroupError::PointOutOfRange { point: x, degree });
        }
        member[x] = true;
    }
    for g in gens {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        if let Some(&x) = domain.iter().find(|&&x| !member[g.image(x)]) {
            return Err(GroupError::DomainNotInvariant { point: x });
        }
    }
    Ok(member)
}

/// Orbits of `<gens>` on `domain`, each ascending, ordered by least element.
pub fn orbits(gens: &[Permutation], domain: &[usize]) -> Result<Vec<Vec<usize>>, GroupError> {
    let member = check_invariant(gens, domain)?;
    let degree = member.len();
    let mut uf = UnionFind::<usize>::new(degree);
    for g in gens {
        for &x in domain {
            uf.union(x, g.image(x));
        }
    }
    let mut sorted: Vec<usize> = domain.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut slot = vec![usize::MAX; degree];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for x in sorted {
        let root = uf.find(x);
        if slot[root] == usize::MAX {
            slot[root] = out.len();
            out.push(Vec::new());
        }
        out[slot[root]].push(x);
    }
    Ok(out)
}

fn require_transitive(gens: &[Permutation], domain: &[usize]) -> Result<(), GroupError> {
    if orbits(gens, domain)?.len() > 1 {
        return Err(GroupError::Intransitive);
    }
    Ok(())
}

/// Union-find refinement after merging `a` and `b`; no input checks.
fn block_of(gens: &[Permutation], domain: &[usize], a: usize, b: usize) -> Vec<usize> {
    let degree = gens.first().map_or(domain.iter().max().map_or(0, |m| m + 1), |g| g.degree());
    let mut uf = UnionFind::<usize>::new(degree);
    let mut queue = vec![(a, b)];
    uf.union(a, b);
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let (u, v) = (uf.find(g.image(x)), uf.find(g.image(y)));
            if u != v {
                uf.union(u, v);
                queue.push((u, v));
            }
        }
    }
    let root = uf.find(a);
    let mut block: Vec<usize> = domain.iter().copied().filter(|&x| uf.find(x) == root).collect();
    block.sort_unstable();
    block
}

/// The smallest block of imprimitivity containing `a` and `b`.
///
/// Equals the whole domain (sorted) when no proper block contains the pair.
pub fn minimal_block(
    gens: &[Permutation],
    domain: &[usize],
    a: usize,
    b: usize,
) -> Result<Vec<usize>, GroupError> {
    if a == b {
        return Err(GroupError::SamePoint(a));
    }
    require_transitive(gens, domain)?;
    for p in [a, b] {
        if !domain.contains(&p) {
            return Err(GroupError::PointOutOfRange { point: p, degree: domain.len() });
        }
    }
    Ok(block_of(gens, domain, a, b))
}

/// Whether the transitive group `<gens>` acts primitively on `domain`.
pub fn is_primitive(gens: &[Permutation], domain: &[usize]) -> Result<bool, GroupError> {
    require_transitive(gens, domain)?;
    let Some(&d0) = domain.iter().min() else {
        return Ok(true);
    };
    let full = {
        let mut d = domain.to_vec();
        d.sort_unstable();
        d.dedup();
        d.len()
    };
    Ok(domain
        .par_iter()
        .filter(|&&d| d != d0)
        .all(|&d| block_of(gens, domain, d0, d).len() == full))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let g = [cyc(3, &[&[0, 1]])];
        assert_eq!(orbits(&g, &[0, 1, 2]).unwrap(), vec![vec![0, 1], vec![2]]);
        assert_eq!(orbits(&[], &[0, 1]).unwrap(), vec![vec![0], vec![1]]);
        assert_eq!(
            orbits(&g, &[0, 2]).unwrap_err(),
            GroupError::DomainNotInvariant { point: 0 }
        );
    }

    #[test]
    fn cyclic_four_blocks() {
        let g = [cyc(4, &[&[0, 1, 2, 3]])];
        let dom = [0, 1, 2, 3];
        assert_eq!(minimal_block(&g, &dom, 0, 2).unwrap(), vec![0, 2]);
        assert_eq!(minimal_block(&g, &dom, 0, 1).unwrap(), vec![0, 1, 2, 3]);
        assert!(!is_primitive(&g, &dom).unwrap());
    }

    #[test]
    fn symmetric_four_is_primitive() {
        let g = [cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])];
        let dom = [0, 1, 2, 3];
        assert_eq!(minimal_block(&g, &dom, 0, 1).unwrap(), vec![0, 1, 2, 3]);
        assert!(is_primitive(&g, &dom).unwrap());
    }

    #[test]
    fn intransitive_rejected() {
        let g = [cyc(4, &[&[0, 1]])];
        assert_eq!(is_primitive(&g, &[0, 1, 2, 3]).unwrap_err(), GroupError::Intransitive);
        assert_eq!(
            minimal_block(&g, &[0, 1, 2, 3], 0, 1).unwrap_err(),
            GroupError::Intransitive
        );
    }

    #[test]
    fn subdomain_with_fixed_points() {
        // Transitive on {1,2,3,4}, 0 fixed: blocks {1,3},{2,4}
        let g = [cyc(5, &[&[1, 2, 3, 4]])];
        let dom = [1, 2, 3, 4];
        assert_eq!(minimal_block(&g, &dom, 1, 3).unwrap(), vec![1, 3]);
        assert!(!is_primitive(&g, &dom).unwrap());
    }
}
