//! Times the three engines on prism(8) (24 edges), optionally with several
//! threads.
//!
//! ```bash
//! cargo run --release -p oed --example engine_benchmark -- 4
//! ```

use oed::bench::run_bench;
use oed::{gen_family, Engine, EngineOptions, Family};

fn main() {
    let threads = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("thread count"))
        .unwrap_or(1);
    let g = gen_family(Family::Prism, 8).unwrap();
    let records =
        run_bench(&g, &Engine::ALL, 2, &EngineOptions { threads }).expect("engines agree");
    println!(
        "{:<11} {:>6} {:>12} {:>10} {:>14}  hash",
        "engine", "repeat", "subsets", "seconds", "subsets/s"
    );
    for r in records {
        println!(
            "{:<11} {:>6} {:>12} {:>10.3} {:>14.0}  {}",
            r.engine,
            r.repeat,
            r.subsets_visited,
            r.wall_time,
            r.subsets_per_second,
            r.profile_hash
        );
    }
}
