use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use pgq::app::{router, AppState, PuzzleSession, SessionConfig};
use pgq::moves::elementary_move;
use pgq::{FieldElement, Plane};
use serde_json::{json, Value};
use tower::ServiceExt;

fn config(q: u64, len: usize, seed: u64) -> SessionConfig {
    SessionConfig {
        q,
        alpha: None,
        scramble_length: Some(len),
        seed: Some(seed),
    }
}

fn new_session(q: u64, len: usize, seed: u64) -> PuzzleSession {
    let plane = Arc::new(Plane::with_order(q).unwrap());
    PuzzleSession::create(1, plane, &config(q, len, seed)).unwrap()
}

#[test]
fn scrambles_replay_deterministically() {
    for (q, seed) in [(3, 42), (5, 1), (7, 9)] {
        let a = new_session(q, 25, seed);
        let b = new_session(q, 25, seed);
        assert_eq!(a.state(), b.state());
        let plane = Arc::new(Plane::with_order(q).unwrap());
        let r = PuzzleSession::replay(1, plane, a.history()).unwrap();
        assert_eq!(r.arrangement(), a.arrangement());
    }
    assert_ne!(new_session(5, 25, 1).arrangement(), new_session(5, 25, 2).arrangement());
}

#[test]
fn reversed_history_solves() {
    for q in [3, 5, 9] {
        for seed in 0..5 {
            let mut s = new_session(q, 30, seed);
            let back = s.history().reversed();
            for &p in &back.points()[1..] {
                s.make_move(p).unwrap();
            }
            assert!(s.is_solved(), "q = {q}, seed {seed}");
        }
    }
}

#[test]
fn arrangement_follows_the_move_permutation() {
    let mut s = new_session(7, 6, 4);
    let before = s.arrangement().to_vec();
    let hole = s.hole();
    let target = (hole + 10) % s.plane().num_points();
    let h = elementary_move(s.plane(), hole, target).unwrap();
    s.make_move(target).unwrap();
    for (x, label) in before.iter().enumerate() {
        assert_eq!(s.arrangement()[h.image(x)], *label);
    }
    assert_eq!(s.arrangement()[target], None);
}

#[test]
fn worked_move_example() {
    let mut s = new_session(5, 0, 0);
    let pl = Plane::with_order(5).unwrap();
    let pt = |c| pl.point_from_codes(c).unwrap();
    let (b, c) = (pt([1, 1, 0]), pt([1, 0, 0]));
    s.make_move(b).unwrap();
    let before = s.arrangement().to_vec();
    let applied = s.make_move(c).unwrap();
    let z0 = [FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE];
    assert_eq!(applied.line, pl.line_id(&z0).unwrap());
    assert_eq!(applied.swap, (b, c));
    let (u, v, w, z) = (pt([0, 1, 0]), pt([1, 3, 0]), pt([1, 2, 0]), pt([1, 4, 0]));
    let mut pairs = vec![(u.min(v), u.max(v)), (w.min(z), w.max(z))];
    pairs.sort();
    assert_eq!(applied.pairs, pairs);
    let after = s.arrangement();
    assert_eq!((after[u], after[v]), (before[v], before[u]));
    assert_eq!((after[w], after[z]), (before[z], before[w]));
    assert_eq!((after[b], after[c]), (before[c], None));
}

#[test]
fn preview_counts() {
    for q in [5u64, 7, 9] {
        let s = new_session(q, 3, q);
        let target = if s.hole() == 1 { 2 } else { 1 };
        assert_eq!(s.preview(target).unwrap().pairs.len(), (q as usize - 1) / 2);
    }
}

async fn call(app: &axum::Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.map_or_else(Body::empty, |b| Body::from(b.to_string())))
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, serde_json::from_slice(&bytes).unwrap_or(Value::Null))
}

#[tokio::test]
async fn http_round_trip() {
    let app = router(AppState::new());

    let (st, plane) = call(&app, "GET", "/api/plane/3", None).await;
    assert_eq!(st, StatusCode::OK);
    assert_eq!(plane["q"], 3);
    assert_eq!(plane["points"].as_array().unwrap().len(), 13);
    assert_eq!(plane["points"][0], json!([1, 0, 0]));
    assert_eq!(plane["lines"][12]["point_ids"].as_array().unwrap().len(), 4);

    let (st, s) = call(&app, "POST", "/api/sessions", Some(json!({"q": 5, "scramble_length": 0}))).await;
    assert_eq!(st, StatusCode::OK);
    assert_eq!(s["solved"], true);
    assert_eq!(s["hole"], 0);
    assert_eq!(s["arrangement"][0], Value::Null);
    let id = s["id"].as_u64().unwrap();

    let (_, preview) = call(&app, "GET", &format!("/api/sessions/{id}/preview?target=7"), None).await;
    let (st, moved) = call(&app, "POST", &format!("/api/sessions/{id}/moves"), Some(json!({"target": 7}))).await;
    assert_eq!(st, StatusCode::OK);
    assert_eq!(moved["applied"], preview);
    assert_eq!(moved["session"]["hole"], 7);
    assert_eq!(moved["session"]["history"], json!([0, 7]));
    assert_eq!(moved["session"]["solved"], false);

    let (_, got) = call(&app, "GET", &format!("/api/sessions/{id}"), None).await;
    assert_eq!(got, moved["session"]);

    let (st, undone) = call(&app, "POST", &format!("/api/sessions/{id}/undo"), None).await;
    assert_eq!(st, StatusCode::OK);
    assert_eq!(undone["session"]["solved"], true);
    assert_eq!(undone["applied"]["pairs"], preview["pairs"]);
}

#[tokio::test]
async fn http_errors() {
    let app = router(AppState::new());
    let (st, body) = call(&app, "GET", "/api/plane/4", None).await;
    assert_eq!(st, StatusCode::BAD_REQUEST);
    assert!(body["error"].is_string());
    assert_eq!(call(&app, "GET", "/api/plane/33", None).await.0, StatusCode::BAD_REQUEST);
    assert_eq!(call(&app, "GET", "/api/sessions/5", None).await.0, StatusCode::NOT_FOUND);

    let (_, s) = call(&app, "POST", "/api/sessions", Some(json!({"q": 3, "seed": 42, "scramble_length": 20}))).await;
    let id = s["id"].as_u64().unwrap();
    let hole = s["hole"].as_u64().unwrap();
    let (st, _) = call(&app, "POST", &format!("/api/sessions/{id}/moves"), Some(json!({"target": hole}))).await;
    assert_eq!(st, StatusCode::BAD_REQUEST);
    let (st, _) = call(&app, "POST", &format!("/api/sessions/{id}/moves"), Some(json!({"target": 13}))).await;
    assert_eq!(st, StatusCode::BAD_REQUEST);

    let (_, fresh) = call(&app, "POST", "/api/sessions", Some(json!({"q": 3, "scramble_length": 0}))).await;
    let fid = fresh["id"].as_u64().unwrap();
    assert_ne!(fid, id);
    assert_eq!(call(&app, "POST", &format!("/api/sessions/{fid}/undo"), None).await.0, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn http_scramble_matches_library() {
    let app = router(AppState::new());
    let (_, s) = call(&app, "POST", "/api/sessions", Some(json!({"q": 3, "seed": 42, "scramble_length": 20}))).await;
    let local = new_session(3, 20, 42);
    assert_eq!(s["arrangement"], serde_json::to_value(local.arrangement()).unwrap());
    assert_eq!(s["history"], serde_json::to_value(local.history()).unwrap());
}
