//! Cover counts on 3-regular bipartite planar graphs: the cube and even
//! prisms.
//!
//! ```bash
//! cargo run --release -p oed --example hardness_class
//! ```

use std::time::Instant;

use oed::{brute_force_vc_count, check_properties, gen_family, vc_count_reduction, Family, Graph};

fn report(name: &str, g: &Graph) {
    let props = check_properties(g);
    let start = Instant::now();
    let count = vc_count_reduction(g).expect("within engine cap");
    let elapsed = start.elapsed();
    let oracle = brute_force_vc_count(g).expect("within vertex cap");
    println!(
        "{name:<10} n={:<3} m={:<3} regular={:?} bipartite={} covers={count} (oracle {oracle}) in {elapsed:.2?}",
        g.vertex_count(),
        g.edge_count(),
        props.regular_degree,
        props.is_bipartite,
    );
    assert_eq!(count, oracle);
}

fn main() {
    report("cube_q3", &gen_family(Family::CubeQ3, 0).unwrap());
    for size in [4, 6, 8] {
        report(
            &format!("prism({size})"),
            &gen_family(Family::Prism, size).unwrap(),
        );
    }
    match gen_family(Family::Prism, 5) {
        Err(e) => println!("prism(5): {e}"),
        Ok(_) => unreachable!("odd prisms are not bipartite"),
    }
}
