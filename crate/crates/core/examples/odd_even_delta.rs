//! Prints the odd/even census of a few small graphs.
//!
//! ```bash
//! cargo run -p oed --example odd_even_delta
//! ```

use oed::{delta_naive, gen_family, Family, Graph};

fn show(name: &str, g: &Graph) {
    let p = delta_naive(g).expect("small graph");
    println!("{name}: n={} m={}", g.vertex_count(), g.edge_count());
    println!("   k        O_k        E_k        Δ_k");
    let odd = p.odd_counts().expect("naive engine keeps O_k");
    let even = p.even_counts().expect("naive engine keeps E_k");
    for k in 2..=p.n() {
        println!("{k:>4} {:>10} {:>10} {:>10}", odd[k], even[k], p.delta()[k]);
    }
    println!("   Σ Δ_k = {}\n", p.signed_sum());
}

fn main() {
    show("K2", &gen_family(Family::Complete, 2).unwrap());
    show("K3", &gen_family(Family::Complete, 3).unwrap());
    show("P3", &gen_family(Family::Path, 3).unwrap());
    show("C4", &gen_family(Family::Cycle, 4).unwrap());
    show("Q3", &gen_family(Family::CubeQ3, 0).unwrap());
}
