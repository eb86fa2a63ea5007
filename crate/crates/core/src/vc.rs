//! Vertex cover counting.
//!
//! The census-based reduction is
//! `|C| = 2^|I| · (2^|V-I| - Σ_{k>=2} Δ_k · 2^(|V-I|-k))`, where `I` is the
//! set of isolated vertices and `Δ` is taken over `G - I`. Two oracles count
//! the same quantity by plain subset scans and share no code with it.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use thiserror::Error;

use crate::delta::{run_engine, DeltaProfile, Engine, EngineError, EngineOptions};
use crate::graph::{strip_isolated, Graph};

/// Largest vertex count for the subset-scan oracles.
pub const VERTEX_CAP: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("graph has {vertices} vertices; subset scans support at most {cap}")]
    VertexCap { vertices: usize, cap: usize },
    #[error("vertex {0} is isolated; strip isolated vertices first")]
    IsolatedVertex(usize),
    #[error("profile covers {profile} vertices but the graph has {graph}")]
    DimensionMismatch { profile: usize, graph: usize },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Exact number of vertex covers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverCount(BigUint);

impl CoverCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl From<u64> for CoverCount {
    fn from(v: u64) -> Self {
        CoverCount(BigUint::from(v))
    }
}

impl fmt::Display for CoverCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_vertex_cap(g: &Graph) -> Result<(), CountError> {
    if g.vertex_count() > VERTEX_CAP {
        return Err(CountError::VertexCap {
            vertices: g.vertex_count(),
            cap: VERTEX_CAP,
        });
    }
    Ok(())
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// Counts subsets `S` with an endpoint of every edge in `S`, by scanning all
/// `2^n` subsets.
pub fn brute_force_vc_count(g: &Graph) -> Result<CoverCount, CountError> {
    check_vertex_cap(g)?;
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
    let count = (0u32..1 << g.vertex_count())
        .filter(|s| {
            edges
                .iter()
                .all(|&(u, v)| (s >> u) & 1 == 1 || (s >> v) & 1 == 1)
        })
        .count();
    Ok(CoverCount::from(count as u64))
}

/// Counts independent sets by scanning all `2^n` subsets against neighbour
/// masks. Equal to the cover count since `S` covers iff `V \ S` is
/// independent.
pub fn independent_set_count(g: &Graph) -> Result<CoverCount, CountError> {
    check_vertex_cap(g)?;
    let neighbours: Vec<u32> = (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut count = 0u64;
    for set in 0u32..1 << g.vertex_count() {
        let mut rest = set;
        let mut independent = true;
        while rest != 0 {
            if neighbours[rest.trailing_zeros() as usize] & set != 0 {
                independent = false;
                break;
            }
            rest &= rest - 1;
        }
        count += u64::from(independent);
    }
    Ok(CoverCount::from(count))
}

/// `2^n - Σ_{k=2}^{n} Δ_k · 2^(n-k)` for a graph without isolated vertices.
pub fn reduced_count_no_isolated(
    g: &Graph,
    profile: &DeltaProfile,
) -> Result<CoverCount, CountError> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Err(CountError::IsolatedVertex(v));
    }
    let n = g.vertex_count();
    if profile.n() != n {
        return Err(CountError::DimensionMismatch {
            profile: profile.n(),
            graph: n,
        });
    }
    let mut sum = BigInt::from(pow2(n));
    for (k, d) in profile.delta().iter().enumerate().skip(2) {
        sum -= d * BigInt::from(pow2(n - k));
    }
    Ok(CoverCount(non_negative(sum)))
}

/// Combines an isolated-vertex count with the profile of the stripped graph.
pub fn combine_reduction(isolated: usize, stripped: &DeltaProfile) -> CoverCount {
    let h = stripped.n();
    let mut inner = BigInt::from(pow2(h));
    for k in 2..=h {
        inner -= &stripped.delta()[k] * BigInt::from(pow2(h - k));
    }
    CoverCount(pow2(isolated) * non_negative(inner))
}

/// Cover count via the census reduction using the Gray-code engine.
pub fn vc_count_reduction(g: &Graph) -> Result<CoverCount, CountError> {
    vc_count_reduction_with(g, Engine::Gray, &EngineOptions::default())
}

/// Cover count via the census reduction using any engine.
pub fn vc_count_reduction_with(
    g: &Graph,
    engine: Engine,
    opts: &EngineOptions,
) -> Result<CoverCount, CountError> {
    let split = strip_isolated(g);
    let run = run_engine(&split.stripped, engine, opts)?;
    Ok(combine_reduction(split.isolated_count(), &run.profile))
}

/// `2^n - |C|`, from the brute-force scan.
pub fn non_cover_count(g: &Graph) -> Result<BigUint, CountError> {
    let covers = brute_force_vc_count(g)?;
    Ok(pow2(g.vertex_count()) - covers.0)
}

fn non_negative(x: BigInt) -> BigUint {
    assert!(!x.is_negative(), "cover count came out negative: {x}");
    x.magnitude().clone()
}
