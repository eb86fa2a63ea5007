//! Timing runs of the census engines on one graph.

use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::delta::{run_engine, DeltaProfile, Engine, EngineError, EngineOptions};
use crate::graph::Graph;

#[derive(Debug, Clone, Serialize)]
pub struct BenchRecord {
    pub engine: String,
    pub repeat: usize,
    pub edges: usize,
    pub subsets_visited: u128,
    pub wall_time: f64,
    pub subsets_per_second: f64,
    /// Digest of the `Δ` array, comparable across engines.
    pub profile_hash: String,
}

impl BenchRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("engine {engine} (repeat {repeat}) disagrees with {reference}: {got} vs {expected}")]
    Disagreement {
        engine: Engine,
        repeat: usize,
        reference: Engine,
        expected: String,
        got: String,
    },
}

/// Short hex digest of the `Δ` array.
pub fn profile_hash(profile: &DeltaProfile) -> String {
    let mut hasher = Sha256::new();
    for d in profile.delta() {
        hasher.update(d.to_string().as_bytes());
        hasher.update(b",");
    }
    hex::encode(&hasher.finalize()[..8])
}

/// Runs each engine `repeats` times. Fails if any run's `Δ` differs from the
/// first run's.
pub fn run_bench(
    g: &Graph,
    engines: &[Engine],
    repeats: usize,
    opts: &EngineOptions,
) -> Result<Vec<BenchRecord>, BenchError> {
    let mut records = Vec::with_capacity(engines.len() * repeats);
    let mut reference: Option<(Engine, String)> = None;
    for repeat in 0..repeats {
        for &engine in engines {
            let start = Instant::now();
            let run = run_engine(g, engine, opts)?;
            let wall_time = start.elapsed().as_secs_f64();
            let hash = profile_hash(&run.profile);
            match &reference {
                None => reference = Some((engine, hash.clone())),
                Some((first, expected)) if *expected != hash => {
                    return Err(BenchError::Disagreement {
                        engine,
                        repeat,
                        reference: *first,
                        expected: expected.clone(),
                        got: hash,
                    });
                }
                Some(_) => {}
            }
            records.push(BenchRecord {
                engine: engine.name().to_string(),
                repeat,
                edges: g.edge_count(),
                subsets_visited: run.subsets_visited,
                wall_time,
                subsets_per_second: run.subsets_visited as f64 / wall_time.max(1e-9),
                profile_hash: hash,
            });
        }
    }
    Ok(records)
}
