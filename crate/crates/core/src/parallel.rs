//! Thread pool sizing from `CLIFFORD_TYPIFY_THREADS`.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const THREADS_ENV: &str = "CLIFFORD_TYPIFY_THREADS";

/// Parses the thread cap from the environment; `None` when unset.
pub fn configured_threads() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(Some(t)),
            _ => Err(Error::Parse { pos: 0, msg: format!("{THREADS_ENV} must be an integer >= 1, got '{v}'") }),
        },
    }
}

fn pool() -> Option<&'static rayon::ThreadPool> {
    static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = configured_threads().ok().flatten()?;
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().ok()
    })
    .as_ref()
}

/// Runs `f` on the capped pool when configured, else on rayon's global pool.
pub fn install<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    match pool() {
        Some(p) => p.install(f),
        None => f(),
    }
}
