//! Stateless HTTP JSON service over [`crate::api`].

use std::collections::HashMap;
use std::net::SocketAddr;

use axum::extract::Query;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;

use crate::api::{self, ApiError, ApiResult};

fn respond(r: ApiResult) -> Response {
    let (status, body) = match r {
        Ok(s) => (StatusCode::OK, s),
        Err(e) => (StatusCode::BAD_REQUEST, e.to_json()),
    };
    (status, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

fn query_u32(q: &HashMap<String, String>, key: &str) -> Result<u32, ApiError> {
    let v = q.get(key).ok_or_else(|| ApiError::Malformed(format!("missing query parameter {key}")))?;
    v.parse().map_err(|_| ApiError::Malformed(format!("query parameter {key} is not a natural number")))
}

async fn model(Query(q): Query<HashMap<String, String>>) -> Response {
    respond((|| api::model(query_u32(&q, "p")?, query_u32(&q, "n")?))())
}

async fn mutate(body: String) -> Response {
    respond(api::mutate_request(&body))
}

async fn quiver(body: String) -> Response {
    respond(api::quiver_request(&body))
}

async fn compat(body: String) -> Response {
    respond(api::compat_request(&body))
}

async fn not_found() -> Response {
    let body = ApiError::Malformed("no such endpoint".into()).to_json();
    (StatusCode::NOT_FOUND, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

pub fn router() -> Router {
    Router::new()
        .route("/api/model", get(model))
        .route("/api/mutate", post(mutate))
        .route("/api/quiver", post(quiver))
        .route("/api/compat", post(compat))
        .fallback(not_found)
}

pub async fn serve(listener: tokio::net::TcpListener) -> std::io::Result<()> {
    axum::serve(listener, router()).await
}

/// Binds `127.0.0.1:port` (0 picks a free port) and serves on a background thread.
pub fn spawn(port: u16) -> std::io::Result<SocketAddr> {
    let std_listener = std::net::TcpListener::bind(("127.0.0.1", port))?;
    std_listener.set_nonblocking(true)?;
    let addr = std_listener.local_addr()?;
    std::thread::spawn(move || {
        let rt = tokio::runtime::Builder::new_multi_thread().enable_all().build().expect("tokio runtime");
        rt.block_on(async move {
            let listener = tokio::net::TcpListener::from_std(std_listener).expect("listener");
            serve(listener).await.expect("server");
        });
    });
    Ok(addr)
}

/// Serves on `127.0.0.1:port` until the process exits.
pub fn run_blocking(port: u16) -> std::io::Result<()> {
    let rt = tokio::runtime::Builder::new_multi_thread().enable_all().build()?;
    rt.block_on(async move {
        let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
        eprintln!("listening on http://{}", listener.local_addr()?);
        serve(listener).await
    })
}
