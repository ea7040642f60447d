//! HTTP front end for interactive diff sessions.
//!
//! | Method | Path | |
//! |---|---|---|
//! | `POST` | `/sessions` | create from `{old, new, strip_blank?, old_name?, new_name?}` |
//! | `GET` | `/sessions/{id}` | current payload |
//! | `POST` | `/sessions/{id}/feedback` | click `{kind, old, new, revision}` |
//! | `POST` | `/sessions/{id}/undo` | |
//! | `POST` | `/sessions/{id}/redo` | |
//! | `GET` | `/sessions/{id}/export?format=unified\|actions&context=3` | text |
//! | `GET` | `/health` | |
//!
//! Session responses carry the undone-action count in an `x-redo-depth`
//! header. Sessions live in memory and expire after an idle period.

pub mod session;

use std::collections::HashMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use axum::extract::{DefaultBodyLimit, Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use idiff::{LinePair, MAX_LINES};
use serde::Deserialize;
use serde_json::json;
use tokio::net::TcpListener;
use tokio::sync::Mutex;

pub use session::{Click, ClickOutcome, LineKind, Payload, PayloadLine, Session, SessionError};

#[derive(Debug, Clone, Copy)]
pub struct ServiceConfig {
    pub idle_ttl: Duration,
    pub max_lines: usize,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        Self {
            idle_ttl: Duration::from_secs(60 * 60),
            max_lines: MAX_LINES,
        }
    }
}

type Shared = Arc<Mutex<Session>>;

#[derive(Clone)]
pub struct AppState {
    config: ServiceConfig,
    sessions: Arc<Mutex<HashMap<String, Shared>>>,
}

impl AppState {
    pub fn new(config: ServiceConfig) -> Self {
        Self {
            config,
            sessions: Arc::default(),
        }
    }

    /// Drops sessions idle for longer than the configured time.
    pub async fn expire_idle(&self) {
        let mut sessions = self.sessions.lock().await;
        let mut expired = Vec::new();
        for (id, session) in sessions.iter() {
            if let Ok(s) = session.try_lock() {
                if s.last_used.elapsed() > self.config.idle_ttl {
                    expired.push(id.clone());
                }
            }
        }
        for id in expired {
            log::info!("session {id} expired");
            sessions.remove(&id);
        }
    }

    async fn session(&self, id: &str) -> Result<Shared, ApiError> {
        self.expire_idle().await;
        self.sessions
            .lock()
            .await
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, format!("no session {id}")))
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        Self {
            status,
            message: message.into(),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "error": self.message }))).into_response()
    }
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> Self {
        let status = match e {
            SessionError::StaleRevision { .. } | SessionError::StaleClick => StatusCode::CONFLICT,
            SessionError::Feedback(_) => StatusCode::BAD_REQUEST,
        };
        ApiError::new(status, e.to_string())
    }
}

/// Runs engine work off the async workers.
async fn blocking<T: Send + 'static>(f: impl FnOnce() -> T + Send + 'static) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/sessions", post(create))
        .route("/sessions/{id}", get(show))
        .route("/sessions/{id}/feedback", post(feedback))
        .route("/sessions/{id}/undo", post(undo))
        .route("/sessions/{id}/redo", post(redo))
        .route("/sessions/{id}/export", get(export))
        .fallback(|| async { ApiError::new(StatusCode::NOT_FOUND, "no such endpoint") })
        .layer(DefaultBodyLimit::max(64 * 1024 * 1024))
        .with_state(state)
}

/// Serves until the process ends, sweeping idle sessions once a minute.
pub async fn serve(listener: TcpListener, config: ServiceConfig) -> std::io::Result<()> {
    let state = AppState::new(config);
    let sweeper = state.clone();
    tokio::spawn(async move {
        let mut tick = tokio::time::interval(Duration::from_secs(60));
        loop {
            tick.tick().await;
            sweeper.expire_idle().await;
        }
    });
    axum::serve(listener, router(state)).await
}

async fn health() -> Json<serde_json::Value> {
    Json(json!({ "status": "ok" }))
}

#[derive(Deserialize)]
struct CreateRequest {
    old: String,
    new: String,
    #[serde(default)]
    strip_blank: bool,
    old_name: Option<String>,
    new_name: Option<String>,
}

async fn create(State(app): State<AppState>, Json(req): Json<CreateRequest>) -> Result<Response, ApiError> {
    let (old_len, new_len) = (req.old.lines().count(), req.new.lines().count());
    if old_len > app.config.max_lines || new_len > app.config.max_lines {
        return Err(ApiError::new(
            StatusCode::PAYLOAD_TOO_LARGE,
            format!(
                "{old_len} old and {new_len} new lines; at most {} per side",
                app.config.max_lines
            ),
        ));
    }
    let id = uuid::Uuid::new_v4().simple().to_string();
    let session_id = id.clone();
    let session = blocking(move || {
        let pair = LinePair::from_texts(&req.old, &req.new, req.strip_blank);
        Session::new(session_id, pair, req.old_name, req.new_name)
    })
    .await?;
    let payload = session.payload(None);
    app.sessions.lock().await.insert(id, Arc::new(Mutex::new(session)));
    Ok((StatusCode::CREATED, Json(payload)).into_response())
}

pub const REDO_HEADER: &str = "x-redo-depth";

fn respond(payload: Payload, redo_depth: usize) -> Response {
    ([(REDO_HEADER, redo_depth.to_string())], Json(payload)).into_response()
}

async fn show(State(app): State<AppState>, Path(id): Path<String>) -> Result<Response, ApiError> {
    let shared = app.session(&id).await?;
    let mut session = shared.lock().await;
    session.last_used = Instant::now();
    Ok(respond(session.payload(None), session.redo_depth()))
}

/// Locks the session, runs `f` on a blocking thread and returns the payload.
async fn mutate<F>(app: &AppState, id: &str, f: F) -> Result<Response, ApiError>
where
    F: FnOnce(&mut Session) -> Result<Option<ClickOutcome>, SessionError> + Send + 'static,
{
    let shared = app.session(id).await?;
    let mut guard = shared.lock_owned().await;
    guard.last_used = Instant::now();
    let (payload, redo_depth) = blocking(move || {
        let outcome = f(&mut guard)?;
        Ok::<_, SessionError>((guard.payload(outcome.as_ref()), guard.redo_depth()))
    })
    .await??;
    Ok(respond(payload, redo_depth))
}

async fn feedback(
    State(app): State<AppState>,
    Path(id): Path<String>,
    Json(click): Json<Click>,
) -> Result<Response, ApiError> {
    mutate(&app, &id, move |s| s.click(&click).map(Some)).await
}

async fn undo(State(app): State<AppState>, Path(id): Path<String>) -> Result<Response, ApiError> {
    mutate(&app, &id, |s| {
        s.undo();
        Ok(None)
    })
    .await
}

async fn redo(State(app): State<AppState>, Path(id): Path<String>) -> Result<Response, ApiError> {
    mutate(&app, &id, |s| {
        s.redo();
        Ok(None)
    })
    .await
}

#[derive(Deserialize)]
struct ExportQuery {
    format: String,
    context: Option<usize>,
}

async fn export(
    State(app): State<AppState>,
    Path(id): Path<String>,
    Query(q): Query<ExportQuery>,
) -> Result<Response, ApiError> {
    let shared = app.session(&id).await?;
    let mut session = shared.lock().await;
    session.last_used = Instant::now();
    let (body, mime) = match q.format.as_str() {
        "unified" => (session.export_unified(q.context.unwrap_or(3)), "text/x-diff"),
        "actions" => (session.export_actions(), "application/jsonl"),
        other => {
            return Err(ApiError::new(
                StatusCode::BAD_REQUEST,
                format!("unknown export format {other:?}, expected unified or actions"),
            ))
        }
    };
    Ok(([(header::CONTENT_TYPE, mime)], body).into_response())
}
