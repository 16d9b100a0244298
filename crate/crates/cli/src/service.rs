//! HTTP API over one immutable dataset.
//!
//! `GET /api/meta`, `/api/barcode`, `/api/geometry` and `/api/cycle/{k}`.
//! Cycle bodies are computed on first request and cached; concurrent
//! requests for the same bar wait on a single computation.

use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use axum::extract::{Path, State};
use axum::http::{header, StatusCode};
use axum::response::{Html, IntoResponse, Response};
use axum::routing::get;
use axum::Router;
use tokio::sync::OnceCell;
use tower_http::services::ServeDir;

use crate::dataset::{to_json, Dataset};
use crate::error::CliError;

type CycleBody = Result<Arc<str>, String>;

pub struct AppState {
    dataset: Arc<Dataset>,
    meta: String,
    barcode: String,
    geometry: String,
    cycles: Vec<OnceCell<CycleBody>>,
    computed: AtomicUsize,
}

impl AppState {
    pub fn new(dataset: Dataset) -> Self {
        let bars = dataset.analysis.barcode().len();
        Self {
            meta: dataset.meta().to_string(),
            barcode: to_json(&dataset.barcode_record()),
            geometry: dataset.geometry().to_string(),
            cycles: (0..bars).map(|_| OnceCell::new()).collect(),
            computed: AtomicUsize::new(0),
            dataset: Arc::new(dataset),
        }
    }

    /// How many cycle bodies have been computed so far.
    pub fn computed(&self) -> usize {
        self.computed.load(Ordering::SeqCst)
    }
}

const INDEX: &str = "<!doctype html><title>pcycles</title>\
<p>No UI assets bundled. Start with <code>--static-dir</code> to serve one.</p>\
<p>API: <a href=\"/api/meta\">/api/meta</a>, <a href=\"/api/barcode\">/api/barcode</a>, \
<code>/api/cycle/{k}</code>, <a href=\"/api/geometry\">/api/geometry</a></p>";

fn json(body: impl Into<String>) -> Response {
    ([(header::CONTENT_TYPE, "application/json")], body.into()).into_response()
}

async fn meta(State(s): State<Arc<AppState>>) -> Response {
    json(s.meta.clone())
}

async fn barcode(State(s): State<Arc<AppState>>) -> Response {
    json(s.barcode.clone())
}

async fn geometry(State(s): State<Arc<AppState>>) -> Response {
    json(s.geometry.clone())
}

async fn cycle(State(s): State<Arc<AppState>>, Path(k): Path<usize>) -> Response {
    let Some(slot) = s.cycles.get(k) else {
        return (StatusCode::NOT_FOUND, format!("unknown interval {k}")).into_response();
    };
    let body = slot
        .get_or_init(|| {
            let state = Arc::clone(&s);
            async move {
                state.computed.fetch_add(1, Ordering::SeqCst);
                let dataset = Arc::clone(&state.dataset);
                tokio::task::spawn_blocking(move || {
                    dataset
                        .cycle_record(k)
                        .map(|r| Arc::from(to_json(&r)))
                        .map_err(|e| e.to_string())
                })
                .await
                .unwrap_or_else(|e| Err(e.to_string()))
            }
        })
        .await;
    match body {
        Ok(text) => json(text.to_string()),
        Err(msg) => (StatusCode::INTERNAL_SERVER_ERROR, msg.clone()).into_response(),
    }
}

pub fn router(state: Arc<AppState>, static_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/api/meta", get(meta))
        .route("/api/barcode", get(barcode))
        .route("/api/geometry", get(geometry))
        .route("/api/cycle/{k}", get(cycle))
        .with_state(state);
    match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api.route("/", get(|| async { Html(INDEX) })),
    }
}

/// Binds `127.0.0.1:port` and serves until the process is stopped.
pub async fn serve(dataset: Dataset, port: u16, static_dir: Option<PathBuf>) -> Result<(), CliError> {
    let app = router(Arc::new(AppState::new(dataset)), static_dir);
    let addr = std::net::SocketAddr::from(([127, 0, 0, 1], port));
    let io = |source| CliError::Io {
        path: PathBuf::from(addr.to_string()),
        source,
    };
    let listener = tokio::net::TcpListener::bind(addr).await.map_err(io)?;
    eprintln!("listening on http://{}", listener.local_addr().map_err(io)?);
    axum::serve(listener, app).await.map_err(io)
}
