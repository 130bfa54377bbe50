//! JSON over HTTP for the puzzle sessions.

use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use parking_lot::{Mutex, RwLock};
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::session::{MovePreview, PuzzleSession, SessionConfig, SessionState};
use super::AppError;
use crate::plane::{Plane, PointId};

/// Largest plane order the service will build.
pub const MAX_SERVICE_Q: u64 = 31;

#[derive(Clone, Default)]
pub struct AppState {
    inner: Arc<Inner>,
}

#[derive(Default)]
struct Inner {
    planes: Mutex<HashMap<u64, Arc<Plane>>>,
    sessions: RwLock<HashMap<u64, Arc<Mutex<PuzzleSession>>>>,
    next_id: AtomicU64,
}

impl AppState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn plane(&self, q: u64) -> Result<Arc<Plane>, AppError> {
        if q > MAX_SERVICE_Q {
            return Err(AppError::InvalidInput(format!(
                "q = {q} is larger than the service limit {MAX_SERVICE_Q}"
            )));
        }
        if let Some(p) = self.inner.planes.lock().get(&q) {
            return Ok(p.clone());
        }
        let plane = Arc::new(Plane::with_order(q)?);
        Ok(self.inner.planes.lock().entry(q).or_insert(plane).clone())
    }

    pub fn create_session(&self, config: &SessionConfig) -> Result<SessionState, AppError> {
        let plane = self.plane(config.q)?;
        let id = self.inner.next_id.fetch_add(1, Ordering::Relaxed) + 1;
        let session = PuzzleSession::create(id, plane, config)?;
        let state = session.state();
        self.inner.sessions.write().insert(id, Arc::new(Mutex::new(session)));
        Ok(state)
    }

    fn session(&self, id: u64) -> Result<Arc<Mutex<PuzzleSession>>, AppError> {
        self.inner
            .sessions
            .read()
            .get(&id)
            .cloned()
            .ok_or(AppError::SessionNotFound(id))
    }

    /// Runs `f` with the session locked, so moves on one session are serialized.
    pub fn with_session<T>(
        &self,
        id: u64,
        f: impl FnOnce(&mut PuzzleSession) -> Result<T, AppError>,
    ) -> Result<T, AppError> {
        let session = self.session(id)?;
        let mut guard = session.lock();
        f(&mut guard)
    }
}

impl IntoResponse for AppError {
    fn into_response(self) -> Response {
        let status = match self {
            AppError::SessionNotFound(_) => StatusCode::NOT_FOUND,
            _ => StatusCode::BAD_REQUEST,
        };
        (status, Json(json!({ "error": self.to_string() }))).into_response()
    }
}

#[derive(Serialize)]
struct PlaneView<'a> {
    q: usize,
    points: Vec<[u32; 3]>,
    lines: Vec<LineView<'a>>,
}

#[derive(Serialize)]
struct LineView<'a> {
    covector: [u32; 3],
    point_ids: &'a [PointId],
}

#[derive(Debug, Serialize)]
pub struct MoveResponse {
    pub session: SessionState,
    pub applied: MovePreview,
}

#[derive(Debug, Deserialize)]
pub struct MoveRequest {
    pub target: PointId,
}

async fn get_plane(State(st): State<AppState>, Path(q): Path<u64>) -> Result<Response, AppError> {
    let plane = st.plane(q)?;
    let view = PlaneView {
        q: plane.order(),
        points: plane.points().iter().map(|p| p.coords.map(|c| c.code())).collect(),
        lines: plane
            .lines()
            .iter()
            .map(|l| LineView {
                covector: l.covector.map(|c| c.code()),
                point_ids: &l.point_ids,
            })
            .collect(),
    };
    Ok(Json(view).into_response())
}

async fn create_session(
    State(st): State<AppState>,
    Json(config): Json<SessionConfig>,
) -> Result<Json<SessionState>, AppError> {
    st.create_session(&config).map(Json)
}

async fn get_session(State(st): State<AppState>, Path(id): Path<u64>) -> Result<Json<SessionState>, AppError> {
    st.with_session(id, |s| Ok(s.state())).map(Json)
}

async fn post_move(
    State(st): State<AppState>,
    Path(id): Path<u64>,
    Json(req): Json<MoveRequest>,
) -> Result<Json<MoveResponse>, AppError> {
    st.with_session(id, |s| {
        let applied = s.make_move(req.target)?;
        Ok(MoveResponse { session: s.state(), applied })
    })
    .map(Json)
}

async fn get_preview(
    State(st): State<AppState>,
    Path(id): Path<u64>,
    Query(req): Query<MoveRequest>,
) -> Result<Json<MovePreview>, AppError> {
    st.with_session(id, |s| {
        s.plane().point(req.target)?;
        s.preview(req.target)
    })
    .map(Json)
}

async fn post_undo(State(st): State<AppState>, Path(id): Path<u64>) -> Result<Json<MoveResponse>, AppError> {
    st.with_session(id, |s| {
        let applied = s.undo()?;
        Ok(MoveResponse { session: s.state(), applied })
    })
    .map(Json)
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/api/plane/{q}", get(get_plane))
        .route("/api/sessions", post(create_session))
        .route("/api/sessions/{id}", get(get_session))
        .route("/api/sessions/{id}/moves", post(post_move))
        .route("/api/sessions/{id}/preview", get(get_preview))
        .route("/api/sessions/{id}/undo", post(post_undo))
        .with_state(state)
}

pub async fn serve(addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(AppState::new())).await
}
