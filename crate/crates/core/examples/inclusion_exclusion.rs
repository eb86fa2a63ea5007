//! The non-cover count two ways: inclusion-exclusion term by term over edge
//! subsets, and the same sum grouped by induced vertex count.
//!
//! ```bash
//! cargo run -p oed --example inclusion_exclusion
//! ```

use num_bigint::BigInt;
use oed::{delta_naive, gen_family, inclusion_exclusion_direct, non_cover_count, Family};

fn main() {
    for (name, g) in [
        ("P3", gen_family(Family::Path, 3).unwrap()),
        ("K4", gen_family(Family::Complete, 4).unwrap()),
        ("K_{3,3}", gen_family(Family::CompleteBipartite, 3).unwrap()),
        ("Q3", gen_family(Family::CubeQ3, 0).unwrap()),
    ] {
        let direct = inclusion_exclusion_direct(&g).unwrap();
        let grouped = delta_naive(&g).unwrap().weighted_sum();
        let scanned = non_cover_count(&g).unwrap();
        println!(
            "{name:<8} 2^{} subsets, {} terms: direct={direct} grouped={grouped} scan={scanned}",
            g.vertex_count(),
            (1u64 << g.edge_count()) - 1
        );
        assert_eq!(BigInt::from(direct.clone()), grouped);
        assert_eq!(direct, scanned);
    }
}
