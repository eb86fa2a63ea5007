//! Cross-checking harness: every counting route against every other, on all
//! small labelled graphs and on seeded random graphs.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::delta::{
    inclusion_exclusion_direct, run_engine, DeltaProfile, Engine, EngineOptions, DIRECT_EDGE_CAP,
};
use crate::generators::random_graph_with;
use crate::graph::{strip_isolated, Graph};
use crate::vc::{
    brute_force_vc_count, combine_reduction, independent_set_count, non_cover_count,
    reduced_count_no_isolated, VERTEX_CAP,
};

/// Largest `n` for which all labelled graphs are enumerated.
pub const MAX_EXHAUSTIVE_N: usize = 5;
/// Largest edge count accepted for random trials.
pub const MAX_RANDOM_EDGES: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyParams {
    pub exhaustive_n: usize,
    pub n_max: usize,
    pub m_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub threads: usize,
    /// Test hook: perturb the Gray-code profile used by the reduction for the
    /// graph with this index in check order.
    pub corrupt_profile_of: Option<usize>,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            exhaustive_n: 4,
            n_max: 12,
            m_max: 20,
            trials: 0,
            seed: 0,
            threads: 1,
            corrupt_profile_of: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("exhaustive-n {0} exceeds {MAX_EXHAUSTIVE_N}")]
    ExhaustiveTooLarge(usize),
    #[error("n-max {0} must lie in [2, {VERTEX_CAP}]")]
    VertexBound(usize),
    #[error("m-max {0} exceeds {MAX_RANDOM_EDGES}")]
    EdgeBound(usize),
}

impl VerifyParams {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.exhaustive_n > MAX_EXHAUSTIVE_N {
            return Err(VerifyError::ExhaustiveTooLarge(self.exhaustive_n));
        }
        if self.trials > 0 {
            if !(2..=VERTEX_CAP).contains(&self.n_max) {
                return Err(VerifyError::VertexBound(self.n_max));
            }
            if self.m_max > MAX_RANDOM_EDGES {
                return Err(VerifyError::EdgeBound(self.m_max));
            }
        }
        Ok(())
    }
}

/// One disagreement between two counting routes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// The graph in edge-list format.
    pub graph: String,
    pub expected: String,
    pub got: String,
    /// `"checked/reference"`.
    pub methods: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub exhaustive_n: usize,
    pub n_max: usize,
    pub m_max: usize,
    pub random_trials: usize,
    /// Total graphs checked, exhaustive and random.
    pub trials: usize,
    pub failures: Vec<Failure>,
    pub passing: bool,
    pub wall_time: f64,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }
}

/// Every labelled graph on `n` vertices, one per subset of the `C(n, 2)`
/// vertex pairs, in subset-rank order.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("distinct pairs")
    })
}

/// Random trial `index`: `n` uniform in `[2, n_max]`, `p` uniform in
/// `(0, 1)`, redrawn until the graph has at most `m_max` edges.
pub fn random_trial_graph(seed: u64, index: usize, n_max: usize, m_max: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    loop {
        let n = rng.gen_range(2..=n_max);
        let p = loop {
            let p: f64 = rng.gen();
            if p > 0.0 {
                break p;
            }
        };
        let g = random_graph_with(n, p, &mut rng);
        if g.edge_count() <= m_max {
            return g;
        }
    }
}

/// Runs the exhaustive sweep and the random trials.
pub fn run_verification(params: &VerifyParams) -> Result<VerificationReport, VerifyError> {
    params.validate()?;
    let start = Instant::now();

    let exhaustive: Vec<Graph> = (0..=params.exhaustive_n)
        .flat_map(labelled_graphs)
        .collect();
    let offset = exhaustive.len();
    let check =
        |(index, g): (usize, &Graph)| check_graph(g, params.corrupt_profile_of == Some(index));

    let mut failures: Vec<Failure> = exhaustive.iter().enumerate().flat_map(check).collect();

    let random = |t: usize| {
        let g = random_trial_graph(params.seed, t, params.n_max, params.m_max);
        check((offset + t, &g))
    };
    if params.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(params.threads)
            .build()
            .expect("thread pool");
        let per_trial: Vec<Vec<Failure>> =
            pool.install(|| (0..params.trials).into_par_iter().map(random).collect());
        failures.extend(per_trial.into_iter().flatten());
    } else {
        failures.extend((0..params.trials).flat_map(random));
    }

    Ok(VerificationReport {
        seed: params.seed,
        exhaustive_n: params.exhaustive_n,
        n_max: params.n_max,
        m_max: params.m_max,
        random_trials: params.trials,
        trials: offset + params.trials,
        passing: failures.is_empty(),
        failures,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

struct Checker<'a> {
    graph: &'a Graph,
    failures: Vec<Failure>,
}

impl Checker<'_> {
    fn expect_eq<T: PartialEq + ToString>(&mut self, methods: &str, expected: &T, got: &T) {
        if expected != got {
            self.failures.push(Failure {
                graph: self.graph.to_edge_list(),
                expected: expected.to_string(),
                got: got.to_string(),
                methods: methods.to_string(),
            });
        }
    }
}

fn render(profile: &DeltaProfile) -> String {
    profile.to_json()
}

/// Checks every identity on one graph. With `corrupt`, the Gray-code profile
/// feeding the reduction has its top coefficient bumped by one.
pub fn check_graph(g: &Graph, corrupt: bool) -> Vec<Failure> {
    let mut c = Checker {
        graph: g,
        failures: Vec::new(),
    };
    let n = g.vertex_count();
    let m = g.edge_count();
    let opts = EngineOptions::default();
    let run = |e| run_engine(g, e, &opts).expect("within engine caps").profile;
    let naive = run(Engine::Naive);
    let gray = run(Engine::Gray);
    let components = run(Engine::Components);

    let subsets = (BigUint::one() << m) - 1u32;
    let signed = if m == 0 {
        BigInt::zero()
    } else {
        BigInt::one()
    };
    for (name, p) in [("naive", &naive), ("gray", &gray)] {
        c.expect_eq(
            &format!("census[{name}]/2^m-1"),
            &subsets,
            &p.census_total().expect("enumeration engines keep O and E"),
        );
        let small: BigUint = [p.odd_counts(), p.even_counts()]
            .into_iter()
            .flatten()
            .flat_map(|v| v.iter().take(2))
            .sum();
        c.expect_eq(&format!("low-k[{name}]/zero"), &BigUint::zero(), &small);
    }
    c.expect_eq("signed-sum[naive]/|E|>0", &signed, &naive.signed_sum());
    c.expect_eq("gray/naive", &render(&naive), &render(&gray));
    c.expect_eq(
        "components/naive",
        &DeltaProfile::from_delta(n, naive.delta().to_vec()).to_json(),
        &components.to_json(),
    );

    let brute = brute_force_vc_count(g).expect("within vertex cap");
    let independent = independent_set_count(g).expect("within vertex cap");
    c.expect_eq("independent/brute", &brute, &independent);

    let split = strip_isolated(g);
    for engine in [Engine::Gray, Engine::Naive, Engine::Components] {
        let mut profile = run_engine(&split.stripped, engine, &opts)
            .expect("within engine caps")
            .profile;
        if corrupt && engine == Engine::Gray {
            if let Some(top) = profile.delta_mut().last_mut() {
                *top += 1;
            }
        }
        let reduced = combine_reduction(split.isolated_count(), &profile);
        c.expect_eq(&format!("reduction[{engine}]/brute"), &brute, &reduced);
    }

    if split.isolated.is_empty() {
        let eq2 = reduced_count_no_isolated(g, &naive).expect("no isolated vertices");
        c.expect_eq("no-isolated-reduction/brute", &brute, &eq2);
    }

    let non_cover = non_cover_count(g).expect("within vertex cap");
    c.expect_eq(
        "non-cover+brute/2^n",
        &(BigUint::one() << n),
        &(&non_cover + brute.value()),
    );

    if (1..=DIRECT_EDGE_CAP).contains(&m) {
        let direct = inclusion_exclusion_direct(g).expect("within direct cap");
        c.expect_eq("inclusion-exclusion/non-cover", &non_cover, &direct);
        c.expect_eq(
            "inclusion-exclusion/census",
            &BigInt::from(direct),
            &naive.weighted_sum(),
        );
    }

    c.failures
}
