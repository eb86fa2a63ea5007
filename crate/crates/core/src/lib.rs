//! Exact counting of the odd/even edge-induced subgraph census of a graph,
//! and of vertex covers through it.
//!
//! For a graph `G = (V, E)` and each `k`, `O_k` (`E_k`) is the number of
//! nonempty odd (even) edge subsets whose endpoints span exactly `k`
//! vertices, and `Δ_k = O_k - E_k`. Grouping the inclusion-exclusion sum over
//! edge subsets by vertex count gives, for a graph without isolated vertices,
//!
//! ```text
//! #covers(G) = 2^|V| - Σ_{k=2}^{|V|} Δ_k · 2^(|V|-k)
//! ```
//!
//! and isolated vertices contribute a factor of two each.
//!
//! ```
//! use oed::{delta_graycode, vc_count_reduction, brute_force_vc_count, gen_family, Family};
//!
//! let cube = gen_family(Family::CubeQ3, 0).unwrap();
//! let profile = delta_graycode(&cube).unwrap();
//! assert_eq!(profile.signed_sum(), 1.into());
//! assert_eq!(vc_count_reduction(&cube).unwrap(), brute_force_vc_count(&cube).unwrap());
//! ```
//!
//! Runnable walkthroughs live in `examples/`.

pub mod bench;
pub mod cli;
pub mod delta;
pub mod generators;
pub mod graph;
pub mod vc;
pub mod verify;

pub use delta::{
    delta_by_components, delta_graycode, delta_naive, inclusion_exclusion_direct, run_engine,
    w_polynomial, DeltaPolynomial, DeltaProfile, Engine, EngineError, EngineOptions, EngineRun,
    Polynomial, DIRECT_EDGE_CAP, EDGE_CAP,
};
pub use generators::{gen_family, random_graph, Family, FamilyError};
pub use graph::{
    check_properties, parse_edge_list, parse_graph, read_graph, strip_isolated, Edge, Graph,
    GraphError, InputFormat, IsolatedSplit, ParseError, PropertyReport,
};
pub use vc::{
    brute_force_vc_count, independent_set_count, non_cover_count, reduced_count_no_isolated,
    vc_count_reduction, vc_count_reduction_with, CountError, CoverCount, VERTEX_CAP,
};
pub use verify::{run_verification, VerificationReport, VerifyParams};
