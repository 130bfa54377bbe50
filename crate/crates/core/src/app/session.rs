//! The sliding puzzle: counters on all points but the hole.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::rng::Lcg;
use super::AppError;
use crate::moves::{self, HolePath};
use crate::plane::{LineId, Plane, PointId};

pub const DEFAULT_SCRAMBLE_LENGTH: usize = 20;

#[derive(Debug, Clone, Default, Deserialize)]
pub struct SessionConfig {
    pub q: u64,
    #[serde(default)]
    pub alpha: Option<PointId>,
    #[serde(default)]
    pub scramble_length: Option<usize>,
    #[serde(default)]
    pub seed: Option<u64>,
}

/// What an elementary move does: swap hole and target, then the pairs of `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MovePreview {
    pub hole: PointId,
    pub target: PointId,
    pub line: LineId,
    pub swap: (PointId, PointId),
    pub pairs: Vec<(PointId, PointId)>,
}

/// Counters are labelled by their home point; `arrangement[p]` is the label on `p`.
#[derive(Debug, Clone)]
pub struct PuzzleSession {
    id: u64,
    plane: Arc<Plane>,
    alpha: PointId,
    seed: u64,
    arrangement: Vec<Option<PointId>>,
    history: HolePath,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SessionState {
    pub id: u64,
    pub q: usize,
    pub alpha: PointId,
    pub hole: PointId,
    pub arrangement: Vec<Option<PointId>>,
    pub history: HolePath,
    pub solved: bool,
    pub seed: u64,
}

impl PuzzleSession {
    /// The solved board with the hole at `alpha`, then a seeded random walk of the hole.
    pub fn create(id: u64, plane: Arc<Plane>, config: &SessionConfig) -> Result<Self, AppError> {
        let alpha = config.alpha.unwrap_or(0);
        plane.point(alpha)?;
        let arrangement = (0..plane.num_points()).map(|p| (p != alpha).then_some(p)).collect();
        let seed = config.seed.unwrap_or(0);
        let mut s = PuzzleSession {
            id,
            plane,
            alpha,
            seed,
            arrangement,
            history: HolePath::new(vec![alpha])?,
        };
        let mut rng = Lcg::new(seed);
        let others = s.plane.num_points() - 1;
        for _ in 0..config.scramble_length.unwrap_or(DEFAULT_SCRAMBLE_LENGTH) {
            let idx = rng.below(others);
            let hole = s.hole();
            s.apply(if idx < hole { idx } else { idx + 1 })?;
        }
        Ok(s)
    }

    /// Rebuilds a board by walking `path` from the solved state.
    pub fn replay(id: u64, plane: Arc<Plane>, path: &HolePath) -> Result<Self, AppError> {
        let config = SessionConfig {
            q: plane.order() as u64,
            alpha: Some(path.source()),
            scramble_length: Some(0),
            seed: None,
        };
        let mut s = PuzzleSession::create(id, plane, &config)?;
        for &p in &path.points()[1..] {
            s.apply(p)?;
        }
        Ok(s)
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn plane(&self) -> &Plane {
        &self.plane
    }

    pub fn alpha(&self) -> PointId {
        self.alpha
    }

    pub fn hole(&self) -> PointId {
        self.history.target()
    }

    pub fn arrangement(&self) -> &[Option<PointId>] {
        &self.arrangement
    }

    pub fn history(&self) -> &HolePath {
        &self.history
    }

    pub fn is_solved(&self) -> bool {
        self.hole() == self.alpha
            && self
                .arrangement
                .iter()
                .enumerate()
                .all(|(p, l)| p == self.alpha || *l == Some(p))
    }

    pub fn state(&self) -> SessionState {
        SessionState {
            id: self.id,
            q: self.plane.order(),
            alpha: self.alpha,
            hole: self.hole(),
            arrangement: self.arrangement.clone(),
            history: self.history.clone(),
            solved: self.is_solved(),
            seed: self.seed,
        }
    }

    pub fn preview(&self, target: PointId) -> Result<MovePreview, AppError> {
        let hole = self.hole();
        if target == hole {
            return Err(AppError::IllegalMove(hole));
        }
        Ok(MovePreview {
            hole,
            target,
            line: self.plane.line_through(hole, target)?,
            swap: (hole, target),
            pairs: moves::involution_pairs(&self.plane, hole, target)?,
        })
    }

    fn permute(&mut self, hole: PointId, target: PointId) -> Result<(), AppError> {
        let h = moves::elementary_move(&self.plane, hole, target)?;
        let mut next = vec![None; self.arrangement.len()];
        for (x, label) in self.arrangement.iter().enumerate() {
            next[h.image(x)] = *label;
        }
        self.arrangement = next;
        Ok(())
    }

    fn apply(&mut self, target: PointId) -> Result<(), AppError> {
        self.plane.point(target)?;
        self.permute(self.hole(), target)?;
        self.history.push(target)?;
        Ok(())
    }

    /// Slides the counter on `target` into the hole.
    pub fn make_move(&mut self, target: PointId) -> Result<MovePreview, AppError> {
        self.plane.point(target)?;
        let preview = self.preview(target)?;
        self.apply(target)?;
        Ok(preview)
    }

    /// Takes back the last move; elementary moves are involutions.
    pub fn undo(&mut self) -> Result<MovePreview, AppError> {
        let hole = self.hole();
        let points = self.history.points();
        if points.len() < 2 {
            return Err(AppError::NothingToUndo);
        }
        let back = points[points.len() - 2];
        let preview = self.preview(back)?;
        self.permute(hole, back)?;
        self.history.pop();
        Ok(preview)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn session(q: u64, len: usize, seed: u64) -> PuzzleSession {
        let plane = Arc::new(Plane::with_order(q).unwrap());
        let config = SessionConfig {
            q,
            alpha: None,
            scramble_length: Some(len),
            seed: Some(seed),
        };
        PuzzleSession::create(1, plane, &config).unwrap()
    }

    #[test]
    fn unscrambled_is_solved() {
        let s = session(5, 0, 9);
        assert!(s.is_solved());
        assert_eq!(s.hole(), 0);
        assert_eq!(s.arrangement()[0], None);
    }

    #[test]
    fn one_move_never_solves() {
        for seed in 0..20 {
            assert!(!session(5, 1, seed).is_solved());
        }
    }

    #[test]
    fn replay_matches() {
        let s = session(3, 20, 42);
        let r = PuzzleSession::replay(1, Arc::new(Plane::with_order(3).unwrap()), s.history()).unwrap();
        assert_eq!(r.arrangement(), s.arrangement());
        assert_eq!(r.hole(), s.hole());
        assert_eq!(s.history().len(), 20);
    }

    #[test]
    fn there_and_back() {
        let mut s = session(5, 3, 1);
        let before = s.arrangement().to_vec();
        let hole = s.hole();
        let target = (hole + 1) % 31;
        s.make_move(target).unwrap();
        s.make_move(hole).unwrap();
        assert_eq!(s.arrangement(), &before[..]);
    }

    #[test]
    fn undo_restores() {
        let mut s = session(7, 10, 3);
        let before = s.state();
        let target = if s.hole() == 5 { 6 } else { 5 };
        let applied = s.make_move(target).unwrap();
        let undone = s.undo().unwrap();
        assert_eq!(applied.pairs, undone.pairs);
        assert_eq!(s.state(), before);
        assert_eq!(applied.pairs.len(), 3);
    }

    #[test]
    fn illegal_moves() {
        let mut s = session(5, 0, 0);
        assert!(matches!(s.make_move(0), Err(AppError::IllegalMove(0))));
        assert!(matches!(s.make_move(31), Err(AppError::InvalidInput(_))));
        assert!(matches!(s.undo(), Err(AppError::NothingToUndo)));
    }
}
