//! Conway-type sliding puzzles on the projective planes PG(2,q), q odd.
//!
//! Counters sit on all but one point of the plane; the empty point is the
//! hole. Sliding the counter on `γ` into the hole at `β` swaps the two points
//! and applies the involution of their common line that fixes both. Loops of
//! the hole based at a point `α` form the hole group, a permutation group on
//! the remaining `q^2 + q` points, which this crate builds and analyses.
//!
//! * [`gf`]: arithmetic in GF(p^k)
//! * [`plane`]: points, lines and collineations of PG(2,q)
//! * [`moves`]: elementary moves, hole paths and hole-group generators
//! * [`permgrp`]: stabilizer chains, orbits, blocks and classification
//! * [`app`]: reports, verification checks, puzzle sessions and the HTTP service

pub mod app;
pub mod gf;
pub mod moves;
pub mod permgrp;
pub mod plane;

pub use gf::{Field, FieldElement};
pub use moves::{HolePath, GroupoidElement};
pub use permgrp::{Permutation, StabilizerChain};
pub use plane::{LineId, Plane, PointId};
