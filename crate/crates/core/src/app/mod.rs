//! Reports, verification checks, puzzle sessions and the HTTP service.

use thiserror::Error;

use crate::gf::FieldError;
use crate::moves::MoveError;
use crate::permgrp::GroupError;
use crate::plane::PlaneError;
use crate::PointId;

pub mod analysis;
pub mod rng;
pub mod server;
pub mod session;

pub use analysis::{
    analyze, cycle_table, verify, AnalysisReport, Check, CheckResult, CheckStatus, CycleRow, Verifier,
};
pub use rng::Lcg;
pub use server::{router, AppState};
pub use session::{MovePreview, PuzzleSession, SessionConfig};

#[derive(Debug, Error)]
pub enum AppError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("no session with id {0}")]
    SessionNotFound(u64),
    #[error("illegal move: the hole is already at {0}")]
    IllegalMove(PointId),
    #[error("nothing to undo")]
    NothingToUndo,
}

macro_rules! invalid_from {
    ($($t:ty),*) => {$(
        impl From<$t> for AppError {
            fn from(e: $t) -> Self {
                AppError::InvalidInput(e.to_string())
            }
        }
    )*};
}

invalid_from!(FieldError, PlaneError, GroupError);

impl From<MoveError> for AppError {
    fn from(e: MoveError) -> Self {
        match e {
            MoveError::SamePoint(p) => AppError::IllegalMove(p),
            e => AppError::InvalidInput(e.to_string()),
        }
    }
}
