//! Process-wide size guards for the exhaustive routines.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::{Error, Result};

pub const DEFAULT_EDGE_GUARD: usize = 64;
pub const DEFAULT_VERTEX_GUARD: usize = 32;
pub const DEFAULT_CYCLE_GUARD: usize = 200_000;

/// Independent-set routines store vertex sets as `u64` masks.
pub const MAX_VERTEX_GUARD: usize = 64;

pub const EDGE_GUARD_ENV: &str = "RESLAB_EDGE_GUARD";

static EDGE_GUARD: AtomicUsize = AtomicUsize::new(DEFAULT_EDGE_GUARD);
static VERTEX_GUARD: AtomicUsize = AtomicUsize::new(DEFAULT_VERTEX_GUARD);
static CYCLE_GUARD: AtomicUsize = AtomicUsize::new(DEFAULT_CYCLE_GUARD);

pub fn edge_guard() -> usize {
    EDGE_GUARD.load(Ordering::Relaxed)
}

pub fn set_edge_guard(limit: usize) {
    EDGE_GUARD.store(limit, Ordering::Relaxed);
}

pub fn vertex_guard() -> usize {
    VERTEX_GUARD.load(Ordering::Relaxed)
}

pub fn set_vertex_guard(limit: usize) -> Result<()> {
    if limit > MAX_VERTEX_GUARD {
        return Err(Error::BadParameter(format!(
            "vertex guard {limit} exceeds the supported maximum {MAX_VERTEX_GUARD}"
        )));
    }
    VERTEX_GUARD.store(limit, Ordering::Relaxed);
    Ok(())
}

pub fn cycle_guard() -> usize {
    CYCLE_GUARD.load(Ordering::Relaxed)
}

pub fn set_cycle_guard(limit: usize) {
    CYCLE_GUARD.store(limit, Ordering::Relaxed);
}

/// Reads `RESLAB_EDGE_GUARD` and installs it. Returns the value in force.
pub fn edge_guard_from_env() -> Result<usize> {
    if let Ok(raw) = std::env::var(EDGE_GUARD_ENV) {
        let limit = raw.trim().parse::<usize>().map_err(|_| Error::Schema {
            field: EDGE_GUARD_ENV.to_string(),
            message: format!("expected a non-negative integer, got {raw:?}"),
        })?;
        set_edge_guard(limit);
    }
    Ok(edge_guard())
}

pub(crate) fn check_edges(actual: usize) -> Result<()> {
    let limit = edge_guard();
    if actual > limit {
        return Err(Error::SizeLimitExceeded {
            what: "edge count",
            actual,
            limit,
        });
    }
    Ok(())
}

pub(crate) fn check_vertices(actual: usize) -> Result<()> {
    let limit = vertex_guard().min(MAX_VERTEX_GUARD);
    if actual > limit {
        return Err(Error::SizeLimitExceeded {
            what: "vertex count",
            actual,
            limit,
        });
    }
    Ok(())
}
