//! Permutation groups: cycle types, parity, stabilizer chains, orbits,
//! blocks and recognition of symmetric and alternating groups by order.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

mod blocks;
mod chain;
mod perm;

pub use blocks::{is_primitive, minimal_block, orbits};
pub use chain::{schreier_sims, schreier_sims_with, ChainOptions, StabilizerChain};
pub use perm::{CycleType, Parity, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("images do not form a bijection")]
    NotBijection,
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("domain is not invariant: the image of {point} leaves it")]
    DomainNotInvariant { point: usize },
    #[error("the group is not transitive on the domain")]
    Intransitive,
    #[error("points must be distinct, got {0} twice")]
    SamePoint(usize),
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupTag {
    Symmetric,
    Alternating,
    Other,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupTag::Symmetric => "symmetric",
            GroupTag::Alternating => "alternating",
            GroupTag::Other => "other",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupClass {
    pub tag: GroupTag,
    pub order: BigUint,
    pub degree: usize,
}

/// Recognizes Sym(n) and Alt(n) among groups of degree n purely by order.
pub fn classify(order: &BigUint, degree: usize) -> GroupClass {
    let full = factorial(degree);
    let tag = if *order == full {
        GroupTag::Symmetric
    } else if degree >= 2 && order * 2u32 == full {
        GroupTag::Alternating
    } else {
        GroupTag::Other
    };
    GroupClass {
        tag,
        order: order.clone(),
        degree,
    }
}
