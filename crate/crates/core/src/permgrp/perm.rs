use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use serde::{Serialize, Serializer};

use super::GroupError;

/// A bijection of `0..degree`, acting on the right: `x^(gh) = (x^g)^h`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign(self) -> i32 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

impl Mul for Parity {
    type Output = Parity;

    fn mul(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::NotBijection);
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2], &[3, 4]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(GroupError::PointOutOfRange { point: x, degree });
                }
                if touched[x] {
                    return Err(GroupError::NotBijection);
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// Product of disjoint transpositions.
    pub fn from_transpositions(
        degree: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GroupError> {
        let mut p = Permutation::identity(degree);
        for (a, b) in pairs {
            if a >= degree || b >= degree {
                return Err(GroupError::PointOutOfRange { point: a.max(b), degree });
            }
            if p.images[a] != a as u32 || p.images[b] != b as u32 || a == b {
                return Err(GroupError::NotBijection);
            }
            p.images.swap(a, b);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    /// Writes `self` followed by `other` into `out`.
    #[inline]
    pub(crate) fn then_into(&self, other: &Permutation, out: &mut Permutation) {
        out.images.clear();
        out.images
            .extend(self.images.iter().map(|&x| other.images[x as usize]));
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Permutation { images }
    }

    /// `g^-1 * self * g`, which maps `x^g` to `(x^self)^g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[g.images[x] as usize] = g.images[y as usize];
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.images[x] as usize == x
    }

    /// Moved points, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| !self.fixes(x)).collect()
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        (0..self.degree()).find(|&x| !self.fixes(x))
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn parity(&self) -> Parity {
        let cycles = self.cycles();
        let moved: usize = cycles.iter().map(Vec::len).sum();
        if (moved - cycles.len()).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn order(&self) -> num_bigint::BigUint {
        use num_integer::Integer;
        self.cycles()
            .iter()
            .fold(num_bigint::BigUint::from(1u32), |acc, c| acc.lcm(&c.len().into()))
    }

    /// Cycle type of the restriction to `domain`, which must be invariant.
    pub fn cycle_type(&self, domain: &[usize]) -> Result<CycleType, GroupError> {
        let n = self.degree();
        let mut in_domain = vec![false; n];
        for &x in domain {
            if x >= n {
                return Err(GroupError::PointOutOfRange { point: x, degree: n });
            }
            in_domain[x] = true;
        }
        for &x in domain {
            if !in_domain[self.image(x)] {
                return Err(GroupError::DomainNotInvariant { point: x });
            }
        }
        let mut seen = vec![false; n];
        let mut counts = BTreeMap::new();
        for &start in domain {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.image(x);
            }
            *counts.entry(len).or_insert(0) += 1;
        }
        Ok(CycleType(counts))
    }

    /// Cycle type on the full domain `0..degree`.
    pub fn full_cycle_type(&self) -> CycleType {
        let domain: Vec<usize> = (0..self.degree()).collect();
        self.cycle_type(&domain).expect("the full domain is invariant")
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Multiset of cycle lengths: length -> multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CycleType(BTreeMap<usize, usize>);

impl CycleType {
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        let mut map = BTreeMap::new();
        for &(len, mult) in pairs {
            if mult > 0 {
                *map.entry(len).or_insert(0) += mult;
            }
        }
        CycleType(map)
    }

    /// Number of points covered, `Σ length * multiplicity`.
    pub fn total(&self) -> usize {
        self.0.iter().map(|(l, m)| l * m).sum()
    }

    pub fn multiplicity(&self, len: usize) -> usize {
        self.0.get(&len).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&l, &m)| (l, m))
    }
}

/// Written as `1^1.4^1`.
impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (len, mult)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{len}^{mult}")?;
        }
        Ok(())
    }
}

impl Serialize for CycleType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
