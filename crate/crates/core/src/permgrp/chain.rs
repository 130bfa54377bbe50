//! Deterministic Schreier–Sims.
//!
//! Input generators are sifted one at a time; a non-member's residue is
//! added as a strong generator and the chain is closed again by testing
//! Schreier generators level by level, deepest first. Each level remembers
//! which (orbit point, generator) pairs it has already tested.
//!
//! The closure stops early once the product of basic orbit sizes reaches an
//! upper bound for the group generated so far: the product of `|O|!` over its
//! orbits, halved when every generator is even. The product of basic orbit
//! sizes never exceeds the group order, so reaching the bound certifies both
//! the order and the completeness of the chain.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::One;
use petgraph::unionfind::UnionFind;

use super::{factorial, GroupError, Parity, Permutation};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainOptions {
    /// Stop closing the chain once the order meets the orbit/parity bound.
    pub saturate: bool,
}

impl Default for ChainOptions {
    fn default() -> Self {
        ChainOptions { saturate: true }
    }
}

#[derive(Debug, Clone)]
struct Level {
    base_point: u32,
    /// Indices into `StabilizerChain::strong` of the generators fixing earlier base points.
    gens: Vec<usize>,
    orbit: Vec<u32>,
    /// Point -> index in `orbit`, or `NONE`.
    position: Vec<u32>,
    /// `reps[i]` maps the base point to `orbit[i]`.
    reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
    /// Schreier tree edge into each orbit point: (parent orbit index, index into `gens`).
    tree: Vec<(u32, u32)>,
    tested: HashSet<(u32, u32)>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut position = vec![NONE; degree];
        position[base_point] = 0;
        Level {
            base_point: base_point as u32,
            gens: Vec::new(),
            orbit: vec![base_point as u32],
            position,
            reps: vec![Permutation::identity(degree)],
            inv_reps: vec![Permutation::identity(degree)],
            tree: vec![(NONE, NONE)],
            tested: HashSet::new(),
        }
    }

    fn push_point(&mut self, parent: usize, gen_local: usize, strong: &[Permutation]) -> bool {
        let g = &strong[self.gens[gen_local]];
        let image = g.image(self.orbit[parent] as usize);
        if self.position[image] != NONE {
            return false;
        }
        let rep = self.reps[parent].then(g);
        self.position[image] = self.orbit.len() as u32;
        self.orbit.push(image as u32);
        self.inv_reps.push(rep.inverse());
        self.reps.push(rep);
        self.tree.push((parent as u32, gen_local as u32));
        true
    }

    /// Registers a new generator and extends the orbit.
    fn add_generator(&mut self, index: usize, strong: &[Permutation]) {
        self.gens.push(index);
        let new_local = self.gens.len() - 1;
        let old_len = self.orbit.len();
        for a in 0..old_len {
            self.push_point(a, new_local, strong);
        }
        let mut next = old_len;
        while next < self.orbit.len() {
            for s in 0..self.gens.len() {
                self.push_point(next, s, strong);
            }
            next += 1;
        }
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
    strong: Vec<Permutation>,
    /// Input generators that were found not to be members when they were added.
    generators: Vec<Permutation>,
}

impl StabilizerChain {
    pub fn trivial(degree: usize) -> Self {
        StabilizerChain {
            degree,
            levels: Vec::new(),
            strong: Vec::new(),
            generators: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point as usize).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// The input generators that were not already members when sifted; they generate the group.
    pub fn reduced_generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Sifts `g` from `from_level`; returns the residue and the level where sifting stopped.
    fn sift(&self, g: &Permutation, from_level: usize) -> (Permutation, usize) {
        let mut cur = g.clone();
        let mut buf = Permutation::identity(0);
        for (i, level) in self.levels.iter().enumerate().skip(from_level) {
            let beta = cur.image(level.base_point as usize);
            let pos = level.position[beta];
            if pos == NONE {
                return (cur, i);
            }
            if pos != 0 {
                cur.then_into(&level.inv_reps[pos as usize], &mut buf);
                std::mem::swap(&mut cur, &mut buf);
            }
        }
        (cur, self.levels.len())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, GroupError> {
        if p.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        let (residue, level) = self.sift(p, 0);
        Ok(level == self.levels.len() && residue.is_identity())
    }

    /// Adds a nontrivial residue that fixes the first `depth` base points.
    fn add_strong(&mut self, h: Permutation, depth: usize) {
        if depth == self.levels.len() {
            let b = h
                .smallest_moved_point()
                .expect("residues added to the chain are nontrivial");
            self.levels.push(Level::new(b, self.degree));
        }
        self.strong.push(h);
        let index = self.strong.len() - 1;
        for level in &mut self.levels[..=depth] {
            level.add_generator(index, &self.strong);
        }
    }

    /// Restores the Schreier condition on levels `0..=start`, deepest first.
    /// Returns early with `true` if the order reaches `bound`.
    fn close(&mut self, start: usize, bound: Option<&BigUint>) -> bool {
        let saturated = |chain: &StabilizerChain| bound.is_some_and(|b| chain.order() == *b);
        if saturated(self) {
            return true;
        }
        let mut i = start as isize;
        'levels: while i >= 0 {
            let li = i as usize;
            let mut a = 0;
            while a < self.levels[li].orbit.len() {
                let mut s = 0;
                while s < self.levels[li].gens.len() {
                    let key = (a as u32, s as u32);
                    let level = &self.levels[li];
                    if level.tested.contains(&key) {
                        s += 1;
                        continue;
                    }
                    let g = &self.strong[level.gens[s]];
                    let beta = level.orbit[a] as usize;
                    let target = level.position[g.image(beta)] as usize;
                    if level.tree[target] == key {
                        self.levels[li].tested.insert(key);
                        s += 1;
                        continue;
                    }
                    let schreier = level.reps[a].then(g).then(&level.inv_reps[target]);
                    self.levels[li].tested.insert(key);
                    let (residue, depth) = self.sift(&schreier, li + 1);
                    if depth < self.levels.len() || !residue.is_identity() {
                        self.add_strong(residue, depth);
                        if saturated(self) {
                            return true;
                        }
                        i = depth as isize;
                        continue 'levels;
                    }
                    s += 1;
                }
                a += 1;
            }
            i -= 1;
        }
        false
    }

    /// Adds a generator of the group; returns whether it was new.
    fn extend(&mut self, g: &Permutation, bound: Option<&BigUint>) -> bool {
        let (residue, depth) = self.sift(g, 0);
        if depth == self.levels.len() && residue.is_identity() {
            return false;
        }
        self.generators.push(g.clone());
        self.add_strong(residue, depth);
        self.close(depth, bound);
        true
    }
}

/// Upper bound on `|<gens>|` from orbit sizes and generator parities.
fn order_bound(gens: &[Permutation], degree: usize) -> BigUint {
    let mut uf = UnionFind::<usize>::new(degree);
    for g in gens {
        for x in 0..degree {
            uf.union(x, g.image(x));
        }
    }
    let mut sizes = vec![0usize; degree];
    for x in 0..degree {
        sizes[uf.find(x)] += 1;
    }
    let bound = sizes
        .iter()
        .filter(|&&s| s > 1)
        .fold(BigUint::one(), |acc, &s| acc * factorial(s));
    let all_even = gens.iter().all(|g| g.parity() == Parity::Even);
    if all_even && sizes.iter().any(|&s| s > 1) {
        bound / 2u32
    } else {
        bound
    }
}

/// Builds a stabilizer chain for `<gens>` with default options.
pub fn schreier_sims(gens: &[Permutation], degree: usize) -> Result<StabilizerChain, GroupError> {
    schreier_sims_with(gens, degree, ChainOptions::default())
}

/// Builds a stabilizer chain for `<gens>`.
///
/// The first `4 * degree` generators seed the chain; the rest are sifted and
/// only non-members are added. Every input generator is a member of the result.
pub fn schreier_sims_with(
    gens: &[Permutation],
    degree: usize,
    options: ChainOptions,
) -> Result<StabilizerChain, GroupError> {
    if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
        return Err(GroupError::DegreeMismatch {
            expected: degree,
            found: g.degree(),
        });
    }
    let mut chain = StabilizerChain::trivial(degree);
    let seed = gens.len().min(4 * degree.max(1));
    let (head, tail) = gens.split_at(seed);
    let mut added: Vec<Permutation> = Vec::new();
    for g in head.iter().chain(tail) {
        if g.is_identity() || chain.contains(g)? {
            continue;
        }
        added.push(g.clone());
        let bound = options.saturate.then(|| order_bound(&added, degree));
        chain.extend(g, bound.as_ref());
    }
    debug_assert!(gens.iter().all(|g| chain.contains(g).unwrap()));
    Ok(chain)
}
