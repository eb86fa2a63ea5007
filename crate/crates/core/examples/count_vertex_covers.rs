//! Counts vertex covers of a graph given in edge-list format, through the
//! census reduction and through both subset-scan oracles.
//!
//! ```bash
//! cargo run -p oed --example count_vertex_covers            # built-in graph
//! cargo run -p oed --example count_vertex_covers -- g.txt   # your own
//! ```

use oed::{
    brute_force_vc_count, delta_graycode, independent_set_count, parse_edge_list, read_graph,
    reduced_count_no_isolated, strip_isolated, vc_count_reduction,
};

// A triangle with a pendant path, plus two isolated vertices (5 and 6).
const SAMPLE: &str = "# sample\n7 5\n0 1\n1 2\n0 2\n2 3\n3 4\n";

fn main() {
    let g = match std::env::args().nth(1) {
        Some(path) => read_graph(&path).unwrap_or_else(|e| {
            eprintln!("{e}");
            std::process::exit(2);
        }),
        None => parse_edge_list(SAMPLE.as_bytes()).unwrap(),
    };

    let split = strip_isolated(&g);
    println!(
        "n={} m={} isolated={:?}",
        g.vertex_count(),
        g.edge_count(),
        split.isolated
    );

    let profile = delta_graycode(&split.stripped).expect("within engine cap");
    let h_count = reduced_count_no_isolated(&split.stripped, &profile).unwrap();
    println!("covers of H (no isolated vertices): {h_count}");
    println!(
        "covers of G via reduction:          {}",
        vc_count_reduction(&g).unwrap()
    );

    if g.vertex_count() <= oed::VERTEX_CAP {
        println!(
            "covers of G via brute force:        {}",
            brute_force_vc_count(&g).unwrap()
        );
        println!(
            "independent sets of G:              {}",
            independent_set_count(&g).unwrap()
        );
    }
}
