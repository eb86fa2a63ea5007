//! Reading graphs: the plain edge-list format, DIMACS-style input, and the
//! diagnostics for malformed files.
//!
//! ```bash
//! cargo run -p oed --example parse_formats
//! ```

use oed::{parse_graph, Graph};

fn main() {
    let plain = "# a 4-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n";
    let dimacs = "c the same 4-cycle\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
    let (a, fa) = parse_graph(plain.as_bytes()).unwrap();
    let (b, fb) = parse_graph(dimacs.as_bytes()).unwrap();
    println!("{fa:?}: {a}\n{fb:?}: {b}");
    assert_eq!(a, b);
    print!("serialized:\n{}", a.to_edge_list());

    for bad in [
        "2 1\n0 0\n",
        "3 2\n0 1\n1 0\n",
        "3 1\n0 3\n",
        "3 2\n0 1\n",
        "3 one\n",
    ] {
        println!("{:?} -> {}", bad, parse_graph(bad.as_bytes()).unwrap_err());
    }

    // Multigraphs are rejected, not coalesced.
    println!("{}", Graph::new(2, [(0, 1), (1, 0)]).unwrap_err());
}
