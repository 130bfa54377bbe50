//! Elementary moves, groupoid paths and hole-group generators.
//!
//! For distinct points `β, γ` with representatives `u, v`, the involution
//! `t[β,γ]` maps `<u + s v>` to `<u - s v>` for every nonzero `s` and fixes
//! everything else. The elementary move `h[β,γ]` is the transposition
//! `(β γ)` followed by `t[β,γ]`; it slides the counter on `γ` into the hole
//! at `β`. Permutations act on the right, so a hole path `β0, β1, ..., βs`
//! denotes the product `h[β0,β1] h[β1,β2] ... h[β(s-1),βs]` read left to
//! right.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::permgrp::Permutation;
use crate::plane::{self, LineId, Plane, PlaneError, PointId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error(transparent)]
    Plane(#[from] PlaneError),
    #[error("invalid move: the hole and the target are both {0}")]
    SamePoint(PointId),
    #[error("a hole path needs at least one point")]
    EmptyPath,
    #[error("cannot concatenate: first path ends at {end}, second starts at {start}")]
    NotComposable { end: PointId, start: PointId },
}

/// The `(q - 1) / 2` transpositions of `t[β,γ]`, each as `(smaller, larger)`, ascending.
pub fn involution_pairs(
    pl: &Plane,
    beta: PointId,
    gamma: PointId,
) -> Result<Vec<(PointId, PointId)>, MoveError> {
    pl.point(beta)?;
    pl.point(gamma)?;
    if beta == gamma {
        return Err(MoveError::SamePoint(beta));
    }
    let f = pl.field();
    let (u, v) = (pl.coords(beta), pl.coords(gamma));
    let minus_one = f.from_int(-1);
    let mut pairs: Vec<(PointId, PointId)> = f
        .nonzero()
        .map(|s| {
            let sv = plane::scale(f, s, v);
            let plus = pl.point_id(&plane::add(f, u, &sv)).expect("u, v independent");
            let minus = pl
                .point_id(&plane::add(f, u, &plane::scale(f, minus_one, &sv)))
                .expect("u, v independent");
            (plus.min(minus), plus.max(minus))
        })
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    Ok(pairs)
}

pub fn involution_t(pl: &Plane, beta: PointId, gamma: PointId) -> Result<Permutation, MoveError> {
    let pairs = involution_pairs(pl, beta, gamma)?;
    Ok(Permutation::from_transpositions(pl.num_points(), pairs).expect("disjoint pairs"))
}

/// All transpositions of `h[β,γ]`: the swap `(β, γ)` first, then the pairs of `t[β,γ]`.
pub fn move_transpositions(
    pl: &Plane,
    beta: PointId,
    gamma: PointId,
) -> Result<Vec<(PointId, PointId)>, MoveError> {
    let mut pairs = vec![(beta, gamma)];
    pairs.extend(involution_pairs(pl, beta, gamma)?);
    Ok(pairs)
}

/// `h[β,γ]` with the hole at `beta` and the moved counter on `gamma`.
pub fn elementary_move(pl: &Plane, beta: PointId, gamma: PointId) -> Result<Permutation, MoveError> {
    let pairs = move_transpositions(pl, beta, gamma)?;
    Ok(Permutation::from_transpositions(pl.num_points(), pairs).expect("disjoint pairs"))
}

/// The path of the hole through the plane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HolePath(Vec<PointId>);

impl HolePath {
    pub fn new(points: Vec<PointId>) -> Result<Self, MoveError> {
        if points.is_empty() {
            return Err(MoveError::EmptyPath);
        }
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(MoveError::SamePoint(w[0]));
        }
        Ok(HolePath(points))
    }

    pub fn points(&self) -> &[PointId] {
        &self.0
    }

    pub fn source(&self) -> PointId {
        self.0[0]
    }

    pub fn target(&self) -> PointId {
        *self.0.last().expect("paths are nonempty")
    }

    /// Number of elementary moves.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn reversed(&self) -> HolePath {
        HolePath(self.0.iter().rev().copied().collect())
    }

    pub(crate) fn push(&mut self, p: PointId) -> Result<(), MoveError> {
        if p == self.target() {
            return Err(MoveError::SamePoint(p));
        }
        self.0.push(p);
        Ok(())
    }

    pub(crate) fn pop(&mut self) -> Option<PointId> {
        if self.0.len() > 1 {
            self.0.pop()
        } else {
            None
        }
    }
}

/// An element of the groupoid: a hole path together with the permutation it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidElement {
    path: HolePath,
    perm: Permutation,
}

impl GroupoidElement {
    pub fn path(&self) -> &HolePath {
        &self.path
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn source(&self) -> PointId {
        self.path.source()
    }

    pub fn target(&self) -> PointId {
        self.path.target()
    }

    /// Concatenation, defined only when `self` ends where `other` starts.
    pub fn concat(&self, other: &GroupoidElement) -> Result<GroupoidElement, MoveError> {
        if self.target() != other.source() {
            return Err(MoveError::NotComposable {
                end: self.target(),
                start: other.source(),
            });
        }
        let mut points = self.path.0.clone();
        points.extend_from_slice(&other.path.0[1..]);
        Ok(GroupoidElement {
            path: HolePath(points),
            perm: self.perm.then(&other.perm),
        })
    }
}

pub fn compose_path(pl: &Plane, path: &HolePath) -> Result<GroupoidElement, MoveError> {
    for &p in path.points() {
        pl.point(p)?;
    }
    let perm = path
        .points()
        .windows(2)
        .try_fold(Permutation::identity(pl.num_points()), |acc, w| {
            Ok::<_, MoveError>(acc.then(&elementary_move(pl, w[0], w[1])?))
        })?;
    Ok(GroupoidElement {
        path: path.clone(),
        perm,
    })
}

/// `x[β,γ] = h[α,β] h[β,γ] h[γ,α]`, a permutation fixing `alpha`.
pub fn x_generator(
    pl: &Plane,
    alpha: PointId,
    beta: PointId,
    gamma: PointId,
) -> Result<Permutation, MoveError> {
    if alpha == beta || alpha == gamma {
        return Err(MoveError::SamePoint(alpha));
    }
    if beta == gamma {
        return Err(MoveError::SamePoint(beta));
    }
    let path = HolePath::new(vec![alpha, beta, gamma, alpha])?;
    Ok(compose_path(pl, &path)?.perm)
}

/// `Ω = P(q) \ {α}`, ascending.
pub fn omega(pl: &Plane, alpha: PointId) -> Vec<PointId> {
    (0..pl.num_points()).filter(|&p| p != alpha).collect()
}

/// Generators `x[β,γ]` of the hole group at `alpha`.
#[derive(Debug, Clone)]
pub struct HoleGenerators {
    pub alpha: PointId,
    /// Non-identity generators in pair-lexicographic order of `(β, γ)`.
    pub generators: Vec<Permutation>,
    pub pairs: Vec<(PointId, PointId)>,
    /// Number of ordered pairs considered, `|Ω| (|Ω| - 1)`.
    pub raw_count: usize,
    /// Pairs whose generator was the identity and was dropped.
    pub identity_count: usize,
}

fn generators_for_pairs(
    pl: &Plane,
    alpha: PointId,
    pairs: Vec<(PointId, PointId)>,
) -> Result<HoleGenerators, MoveError> {
    let raw_count = pairs.len();
    let computed: Vec<((PointId, PointId), Permutation)> = pairs
        .into_par_iter()
        .map(|(b, c)| x_generator(pl, alpha, b, c).map(|x| ((b, c), x)))
        .collect::<Result<_, _>>()?;
    let (pairs, generators): (Vec<_>, Vec<_>) =
        computed.into_iter().filter(|(_, x)| !x.is_identity()).unzip();
    Ok(HoleGenerators {
        alpha,
        identity_count: raw_count - generators.len(),
        generators,
        pairs,
        raw_count,
    })
}

pub fn hole_group_generators(pl: &Plane, alpha: PointId) -> Result<HoleGenerators, MoveError> {
    pl.point(alpha)?;
    let omega = omega(pl, alpha);
    let pairs = omega
        .iter()
        .flat_map(|&b| omega.iter().filter(move |&&c| c != b).map(move |&c| (b, c)))
        .collect();
    generators_for_pairs(pl, alpha, pairs)
}

/// Generators of `G(ℓ)`: the `x[β,γ]` with `β, γ` on `ell` other than `alpha`.
pub fn line_group_generators(
    pl: &Plane,
    alpha: PointId,
    ell: LineId,
) -> Result<HoleGenerators, MoveError> {
    pl.point(alpha)?;
    let line = pl.line(ell)?;
    if !pl.incident(alpha, ell) {
        return Err(PlaneError::PointNotOnLine { point: alpha, line: ell }.into());
    }
    let rest: Vec<PointId> = line.point_ids.iter().copied().filter(|&p| p != alpha).collect();
    let pairs = rest
        .iter()
        .flat_map(|&b| rest.iter().filter(move |&&c| c != b).map(move |&c| (b, c)))
        .collect();
    generators_for_pairs(pl, alpha, pairs)
}

/// `x[β,γ]` restricted to the line through `alpha, beta, gamma`, computed on that line alone.
///
/// The result is a permutation of positions in `line.point_ids`.
pub fn collinear_x_on_line(
    pl: &Plane,
    alpha: PointId,
    beta: PointId,
    gamma: PointId,
) -> Result<(LineId, Permutation), MoveError> {
    if alpha == beta || alpha == gamma {
        return Err(MoveError::SamePoint(alpha));
    }
    let ell = pl.line_through(beta, gamma)?;
    if !pl.incident(alpha, ell) {
        return Err(PlaneError::PointNotOnLine { point: alpha, line: ell }.into());
    }
    let points = &pl.line(ell)?.point_ids;
    let local = |p: PointId| points.binary_search(&p).expect("move stays on its line");
    let mut acc = Permutation::identity(points.len());
    for (b, c) in [(alpha, beta), (beta, gamma), (gamma, alpha)] {
        let pairs = move_transpositions(pl, b, c)?
            .into_iter()
            .map(|(x, y)| (local(x), local(y)));
        let h = Permutation::from_transpositions(points.len(), pairs).expect("disjoint pairs");
        acc = acc.then(&h);
    }
    Ok((ell, acc))
}
