//! W(x) = 1 - Σ Δ_k x^k multiplies over disjoint unions, which lets the
//! component engine handle graphs whose total edge count is far beyond what
//! whole-graph enumeration can reach.
//!
//! ```bash
//! cargo run -p oed --example component_factorization
//! ```

use oed::{
    delta_by_components, delta_naive, gen_family, run_engine, vc_count_reduction_with,
    w_polynomial, Engine, EngineOptions, Family, Graph,
};

fn main() {
    let k3 = gen_family(Family::Complete, 3).unwrap();
    let k2 = gen_family(Family::Complete, 2).unwrap();
    let union = k3.disjoint_union(&k2);

    let w3 = w_polynomial(&delta_naive(&k3).unwrap());
    let w2 = w_polynomial(&delta_naive(&k2).unwrap());
    let w_union = w_polynomial(&delta_by_components(&union).unwrap());
    println!("W(K3)      = {:?}", w3.coeffs());
    println!("W(K2)      = {:?}", w2.coeffs());
    println!("W(K3 ⊎ K2) = {:?}", w_union.coeffs());
    assert_eq!(w_union, &w3 * &w2);

    // Ten disjoint cubes: 120 edges, out of reach for whole-graph enumeration.
    let cube = gen_family(Family::CubeQ3, 0).unwrap();
    let mut many = Graph::empty(0);
    for _ in 0..10 {
        many = many.disjoint_union(&cube);
    }
    let opts = EngineOptions::default();
    println!("\n10 x Q3: m={}", many.edge_count());
    println!(
        "gray engine:       {}",
        run_engine(&many, Engine::Gray, &opts).unwrap_err()
    );
    let run = run_engine(&many, Engine::Components, &opts).unwrap();
    println!("components engine: {} subsets visited", run.subsets_visited);
    let covers = vc_count_reduction_with(&many, Engine::Components, &opts).unwrap();
    println!(
        "covers = {covers} (35^10 = {})",
        num_bigint::BigUint::from(35u32).pow(10)
    );
}
