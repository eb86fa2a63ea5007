//! Runs the cross-checking harness: all labelled graphs on up to five
//! vertices, then seeded random graphs.
//!
//! ```bash
//! cargo run --release -p oed --example verify_identities -- 7
//! ```

use oed::{run_verification, VerifyParams};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("seed must be an integer"))
        .unwrap_or(7);
    let report = run_verification(&VerifyParams {
        exhaustive_n: 5,
        n_max: 12,
        m_max: 20,
        trials: 200,
        seed,
        ..Default::default()
    })
    .expect("parameters within bounds");
    println!(
        "seed {}: {} graphs checked, {} failures, {:.2}s",
        report.seed,
        report.trials,
        report.failures.len(),
        report.wall_time
    );
    for f in &report.failures {
        println!(
            "{}: expected {} got {}\n{}",
            f.methods, f.expected, f.got, f.graph
        );
    }
    std::process::exit(if report.passing { 0 } else { 4 });
}
