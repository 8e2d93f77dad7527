//! graph6 and edge-list input/output.
//!
//!     cargo run --example graph6

use sombor::graph_io::generators::path;
use sombor::graph_io::{parse_corpus, parse_edge_list, parse_graph6, to_edge_list, to_graph6};

fn main() {
    for s in ["@", "A_", "D?{", ">>graph6<<DQc"] {
        let g = parse_graph6(s).unwrap();
        println!("{s:<14} n={} edges={:?} -> {}", g.order(), g.edges(), to_graph6(&g).unwrap());
    }

    // 100 vertices takes the 4-byte header.
    let long = to_graph6(&path(100).unwrap()).unwrap();
    println!("P100: {}... ({} bytes)", &long[..12], long.len());

    let g = parse_edge_list("# a triangle with a tail\n4 4\n0 1\n1 2\n0 2\n2 3\n").unwrap();
    print!("{}", to_edge_list(&g));

    for bad in ["A", "A~", "2 1\n0 0\n"] {
        println!("{bad:?}: {}", parse_corpus(bad).unwrap_err());
    }
}
