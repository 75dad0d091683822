//! Result cache: one JSON record per (engine, canonical query, version)
//! key under the cache directory.  `HURWITZ_CACHE_DIR` overrides the
//! location; `--no-cache` bypasses reads and writes.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Serialize, Deserialize)]
pub struct ComputationRecord {
    pub query: String,
    pub engine: String,
    pub result: String,
    pub wall_clock_ms: u128,
    pub version: String,
}

pub fn cache_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("HURWITZ_CACHE_DIR") {
        return PathBuf::from(dir);
    }
    if let Ok(home) = std::env::var("HOME") {
        return PathBuf::from(home).join(".cache").join("hurwitz");
    }
    PathBuf::from(".hurwitz-cache")
}

fn key_path(engine: &str, query: &str) -> PathBuf {
    let mut hasher = Sha256::new();
    hasher.update(env!("CARGO_PKG_VERSION").as_bytes());
    hasher.update([0x1f]);
    hasher.update(engine.as_bytes());
    hasher.update([0x1f]);
    hasher.update(query.as_bytes());
    let digest = hasher.finalize();
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    cache_dir().join(format!("{hex}.json"))
}

/// Returns the cached result for the key, or computes, stores, and returns
/// it.  Cache failures are not fatal; the computation always wins.
pub fn cached<F>(no_cache: bool, engine: &str, query: &str, compute: F) -> Result<String, hurwitz_core::Error>
where
    F: FnOnce() -> Result<String, hurwitz_core::Error>,
{
    let path = key_path(engine, query);
    if !no_cache {
        if let Ok(bytes) = fs::read(&path) {
            if let Ok(record) = serde_json::from_slice::<ComputationRecord>(&bytes) {
                return Ok(record.result);
            }
        }
    }
    let started = Instant::now();
    let result = compute()?;
    if !no_cache {
        let record = ComputationRecord {
            query: query.to_string(),
            engine: engine.to_string(),
            result: result.clone(),
            wall_clock_ms: started.elapsed().as_millis(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        };
        if fs::create_dir_all(cache_dir()).is_ok() {
            let _ = fs::write(&path, serde_json::to_vec_pretty(&record).unwrap());
        }
    }
    Ok(result)
}
