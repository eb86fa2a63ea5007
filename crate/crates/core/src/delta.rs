//! The odd/even census of edge-induced subgraphs.
//!
//! For a nonempty edge subset `F`, `V(F)` is the set of endpoints of `F`. The
//! census records, for every `k`, how many `F` with `|V(F)| = k` have odd
//! (`O_k`) and even (`E_k`) cardinality, and `Δ_k = O_k - E_k`.
//!
//! Three engines compute it:
//! - [`delta_naive`] enumerates every subset in rank order and recomputes
//!   `|V(F)|` from scratch.
//! - [`delta_graycode`] walks subsets in reflected Gray-code order, keeping
//!   per-vertex incidence counts so each step touches two endpoints.
//! - [`delta_by_components`] uses `W(x) = 1 - Σ_k Δ_k x^k`, which is
//!   multiplicative over disjoint unions, and enumerates one component at a
//!   time. It yields `Δ` only.
//!
//! Enumeration engines may split the rank space `[1, 2^m)` into contiguous
//! ranges processed in parallel; partial counts are merged by addition, so
//! results never depend on the thread count.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Mul, Range};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// Largest edge count the enumeration engines accept (subset ranks must fit
/// in a `u64`).
pub const EDGE_CAP: usize = 62;

/// Largest edge count for the term-by-term inclusion-exclusion evaluator.
pub const DIRECT_EDGE_CAP: usize = 20;

// Below this many edges the parallel split costs more than it saves.
const PARALLEL_MIN_EDGES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("graph has {edges} edges; this engine supports at most {cap}")]
    EdgeCap { edges: usize, cap: usize },
    #[error("a connected component has {edges} edges; at most {cap} are supported per component")]
    ComponentEdgeCap { edges: usize, cap: usize },
}

/// Selects a census engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Naive,
    Gray,
    Components,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Naive, Engine::Gray, Engine::Components];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Naive => "naive",
            Engine::Gray => "gray",
            Engine::Components => "components",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| format!("unknown engine {s:?} (expected naive, gray or components)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineOptions {
    /// Worker threads for subset enumeration; `1` runs inline.
    pub threads: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions { threads: 1 }
    }
}

/// Census of one graph, indexed by `k` in `0..=n`.
///
/// `odd` and `even` are `None` when the engine only determined `Δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaProfile {
    n: usize,
    odd: Option<Vec<BigUint>>,
    even: Option<Vec<BigUint>>,
    delta: Vec<BigInt>,
}

impl DeltaProfile {
    /// All-zero profile, as produced for an edgeless graph.
    pub fn zero(n: usize) -> Self {
        DeltaProfile {
            n,
            odd: Some(vec![BigUint::zero(); n + 1]),
            even: Some(vec![BigUint::zero(); n + 1]),
            delta: vec![BigInt::zero(); n + 1],
        }
    }

    /// Profile carrying `Δ` only.
    ///
    /// Panics unless `delta.len() == n + 1`.
    pub fn from_delta(n: usize, delta: Vec<BigInt>) -> Self {
        assert_eq!(delta.len(), n + 1, "delta must be indexed 0..=n");
        DeltaProfile {
            n,
            odd: None,
            even: None,
            delta,
        }
    }

    fn from_census(n: usize, census: Census) -> Self {
        let odd: Vec<BigUint> = census.odd.iter().map(|&c| BigUint::from(c)).collect();
        let even: Vec<BigUint> = census.even.iter().map(|&c| BigUint::from(c)).collect();
        let delta = census
            .odd
            .iter()
            .zip(&census.even)
            .map(|(&o, &e)| BigInt::from(o) - BigInt::from(e))
            .collect();
        DeltaProfile {
            n,
            odd: Some(odd),
            even: Some(even),
            delta,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn odd_counts(&self) -> Option<&[BigUint]> {
        self.odd.as_deref()
    }

    pub fn even_counts(&self) -> Option<&[BigUint]> {
        self.even.as_deref()
    }

    pub fn delta(&self) -> &[BigInt] {
        &self.delta
    }

    /// Whether `O_k` and `E_k` are available.
    pub fn has_census(&self) -> bool {
        self.odd.is_some()
    }

    pub(crate) fn delta_mut(&mut self) -> &mut [BigInt] {
        &mut self.delta
    }

    /// `Σ_k (O_k + E_k)`; equals `2^|E| - 1` for a complete census.
    pub fn census_total(&self) -> Option<BigUint> {
        let odd = self.odd.as_ref()?;
        let even = self.even.as_ref()?;
        Some(odd.iter().chain(even).sum())
    }

    /// `Σ_k Δ_k`.
    pub fn signed_sum(&self) -> BigInt {
        self.delta.iter().sum()
    }

    /// `Σ_k Δ_k · 2^(n-k)`, the number of vertex subsets missing both
    /// endpoints of some edge.
    pub fn weighted_sum(&self) -> BigInt {
        self.delta
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(k, d)| d * (BigInt::one() << (self.n - k)))
            .sum()
    }

    /// JSON object `{"n", "O", "E", "delta"}` with integers as decimal
    /// strings; `O` and `E` are `null` when not computed.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            #[serde(rename = "O")]
            odd: Option<Vec<String>>,
            #[serde(rename = "E")]
            even: Option<Vec<String>>,
            delta: Vec<String>,
        }
        let strings = |v: &[BigUint]| v.iter().map(ToString::to_string).collect();
        let repr = Repr {
            n: self.n,
            odd: self.odd.as_deref().map(strings),
            even: self.even.as_deref().map(strings),
            delta: self.delta.iter().map(ToString::to_string).collect(),
        };
        serde_json::to_string(&repr).expect("plain struct serializes")
    }

    /// CSV with header `k,O,E,delta`; `O`/`E` cells are empty when not
    /// computed.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,O,E,delta\n");
        for k in 0..=self.n {
            let cell =
                |v: &Option<Vec<BigUint>>| v.as_ref().map(|v| v[k].to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{k},{},{},{}\n",
                cell(&self.odd),
                cell(&self.even),
                self.delta[k]
            ));
        }
        out
    }
}

/// Integer polynomial with trailing zero coefficients trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn one() -> Self {
        Polynomial::new(vec![BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

/// `D(x) = Σ_k Δ_k x^k`, stored with exactly `n + 1` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaPolynomial {
    coeffs: Vec<BigInt>,
}

impl DeltaPolynomial {
    pub fn from_profile(profile: &DeltaProfile) -> Self {
        DeltaPolynomial {
            coeffs: profile.delta.clone(),
        }
    }

    /// Recovers `D = 1 - W` padded to `n + 1` coefficients.
    ///
    /// Panics if `W` has degree above `n`.
    pub fn from_companion(w: &Polynomial, n: usize) -> Self {
        assert!(
            w.degree().is_none_or(|d| d <= n),
            "companion degree exceeds vertex count"
        );
        let mut coeffs: Vec<BigInt> = (0..=n).map(|k| -w.coeff(k)).collect();
        coeffs[0] += 1;
        DeltaPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `W(x) = 1 - D(x) = Σ_{F ⊆ E} (-1)^|F| x^|V(F)|`, empty `F` included.
    pub fn companion(&self) -> Polynomial {
        let mut w: Vec<BigInt> = self.coeffs.iter().map(|c| -c).collect();
        if w.is_empty() {
            w.push(BigInt::zero());
        }
        w[0] += 1;
        Polynomial::new(w)
    }
}

/// `W = 1 - D` for a profile.
pub fn w_polynomial(profile: &DeltaProfile) -> Polynomial {
    DeltaPolynomial::from_profile(profile).companion()
}

/// Result of running an engine, with the number of nonempty edge subsets it
/// visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineRun {
    pub profile: DeltaProfile,
    pub subsets_visited: u128,
}

/// Dispatches to the selected engine.
pub fn run_engine(
    g: &Graph,
    engine: Engine,
    opts: &EngineOptions,
) -> Result<EngineRun, EngineError> {
    match engine {
        Engine::Naive => enumerate(g, opts, naive_range),
        Engine::Gray => enumerate(g, opts, gray_range),
        Engine::Components => components(g, opts),
    }
}

/// Census by plain enumeration of every nonempty edge subset.
pub fn delta_naive(g: &Graph) -> Result<DeltaProfile, EngineError> {
    run_engine(g, Engine::Naive, &EngineOptions::default()).map(|r| r.profile)
}

/// Census by Gray-code enumeration with incremental vertex counts.
pub fn delta_graycode(g: &Graph) -> Result<DeltaProfile, EngineError> {
    run_engine(g, Engine::Gray, &EngineOptions::default()).map(|r| r.profile)
}

/// `Δ` by multiplying per-component `W` polynomials.
pub fn delta_by_components(g: &Graph) -> Result<DeltaProfile, EngineError> {
    run_engine(g, Engine::Components, &EngineOptions::default()).map(|r| r.profile)
}

#[derive(Debug, Clone)]
struct Census {
    odd: Vec<u64>,
    even: Vec<u64>,
}

impl Census {
    fn new(n: usize) -> Self {
        Census {
            odd: vec![0; n + 1],
            even: vec![0; n + 1],
        }
    }

    fn merge(mut self, other: Census) -> Census {
        for (a, b) in self.odd.iter_mut().zip(other.odd) {
            *a += b;
        }
        for (a, b) in self.even.iter_mut().zip(other.even) {
            *a += b;
        }
        self
    }
}

/// Edge endpoints relabelled onto the non-isolated vertices, which number at
/// most `2m <= 124`.
struct Compact {
    endpoints: Vec<(usize, usize)>,
    vertices: usize,
}

impl Compact {
    fn new(g: &Graph) -> Self {
        let mut relabel = vec![usize::MAX; g.vertex_count()];
        let mut next = 0;
        let mut id = |v: usize| {
            if relabel[v] == usize::MAX {
                relabel[v] = next;
                next += 1;
            }
            relabel[v]
        };
        let endpoints = g.edges().iter().map(|e| (id(e.u()), id(e.v()))).collect();
        Compact {
            endpoints,
            vertices: next,
        }
    }
}

fn enumerate(
    g: &Graph,
    opts: &EngineOptions,
    scan: fn(&Compact, usize, Range<u64>) -> Census,
) -> Result<EngineRun, EngineError> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m > EDGE_CAP {
        return Err(EngineError::EdgeCap {
            edges: m,
            cap: EDGE_CAP,
        });
    }
    if m == 0 {
        return Ok(EngineRun {
            profile: DeltaProfile::zero(n),
            subsets_visited: 0,
        });
    }
    let compact = Compact::new(g);
    let end = 1u64 << m;
    let census = if opts.threads > 1 && m >= PARALLEL_MIN_EDGES {
        let ranges = split_ranges(1..end, opts.threads * 4);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            ranges
                .into_par_iter()
                .map(|r| scan(&compact, n, r))
                .reduce(|| Census::new(n), Census::merge)
        })
    } else {
        scan(&compact, n, 1..end)
    };
    Ok(EngineRun {
        profile: DeltaProfile::from_census(n, census),
        subsets_visited: u128::from(end - 1),
    })
}

/// Splits `range` into at most `parts` contiguous nonempty pieces.
fn split_ranges(range: Range<u64>, parts: usize) -> Vec<Range<u64>> {
    let len = range.end - range.start;
    let parts = (parts as u64).clamp(1, len.max(1));
    let step = len.div_ceil(parts);
    (0..parts)
        .map(|i| {
            let lo = range.start + i * step;
            lo..(lo + step).min(range.end)
        })
        .filter(|r| !r.is_empty())
        .collect()
}

fn naive_range(compact: &Compact, n: usize, ranks: Range<u64>) -> Census {
    let masks: Vec<u128> = compact
        .endpoints
        .iter()
        .map(|&(a, b)| (1u128 << a) | (1u128 << b))
        .collect();
    let mut census = Census::new(n);
    for subset in ranks {
        let mut covered = 0u128;
        let mut bits = subset;
        while bits != 0 {
            covered |= masks[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        let k = covered.count_ones() as usize;
        if subset.count_ones() % 2 == 1 {
            census.odd[k] += 1;
        } else {
            census.even[k] += 1;
        }
    }
    census
}

fn gray(rank: u64) -> u64 {
    rank ^ (rank >> 1)
}

fn gray_range(compact: &Compact, n: usize, ranks: Range<u64>) -> Census {
    let mut census = Census::new(n);
    if ranks.is_empty() {
        return census;
    }
    let mut incidence = vec![0u8; compact.vertices];
    let mut covered = 0usize;

    // Rebuild the state of the subset preceding the range.
    let mut start = gray(ranks.start - 1);
    while start != 0 {
        let (a, b) = compact.endpoints[start.trailing_zeros() as usize];
        for x in [a, b] {
            if incidence[x] == 0 {
                covered += 1;
            }
            incidence[x] += 1;
        }
        start &= start - 1;
    }

    for rank in ranks {
        let bit = rank.trailing_zeros();
        let (a, b) = compact.endpoints[bit as usize];
        if (gray(rank) >> bit) & 1 == 1 {
            for x in [a, b] {
                covered += usize::from(incidence[x] == 0);
                incidence[x] += 1;
            }
        } else {
            for x in [a, b] {
                incidence[x] -= 1;
                covered -= usize::from(incidence[x] == 0);
            }
        }
        // One bit flips per step, so |gray(rank)| has the parity of rank.
        if rank & 1 == 1 {
            census.odd[covered] += 1;
        } else {
            census.even[covered] += 1;
        }
    }
    census
}

fn components(g: &Graph, opts: &EngineOptions) -> Result<EngineRun, EngineError> {
    let n = g.vertex_count();
    let mut w = Polynomial::one();
    let mut visited = 0u128;
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = g.induced(&comp);
        if sub.edge_count() > EDGE_CAP {
            return Err(EngineError::ComponentEdgeCap {
                edges: sub.edge_count(),
                cap: EDGE_CAP,
            });
        }
        let run = enumerate(&sub, opts, gray_range)?;
        visited += run.subsets_visited;
        w = &w * &w_polynomial(&run.profile);
    }
    let d = DeltaPolynomial::from_companion(&w, n);
    Ok(EngineRun {
        profile: DeltaProfile::from_delta(n, d.coeffs),
        subsets_visited: visited,
    })
}

/// `|U|`, the number of vertex subsets that miss some edge entirely, by
/// literal inclusion-exclusion over nonempty edge subsets `F`:
/// `Σ_F (-1)^(|F|+1) · 2^(n - |V(F)|)`. Returns zero for an edgeless graph.
pub fn inclusion_exclusion_direct(g: &Graph) -> Result<BigUint, EngineError> {
    let m = g.edge_count();
    if m > DIRECT_EDGE_CAP {
        return Err(EngineError::EdgeCap {
            edges: m,
            cap: DIRECT_EDGE_CAP,
        });
    }
    let n = g.vertex_count();
    let mut total = BigInt::zero();
    for subset in 1u32..(1u32 << m) {
        let picked: Vec<_> = (0..m).filter(|i| subset >> i & 1 == 1).collect();
        let touched: BTreeSet<usize> = picked
            .iter()
            .flat_map(|&i| {
                let (u, v) = g.edges()[i].endpoints();
                [u, v]
            })
            .collect();
        let term = BigInt::one() << (n - touched.len());
        if picked.len() % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    assert!(!total.is_negative(), "a union has nonnegative size");
    Ok(total.magnitude().clone())
}
