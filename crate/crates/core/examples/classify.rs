//! Degree classification and the three equivalent bi-regularity tests.
//!
//!     cargo run --example classify

use sombor::classify::{bi_regular_predicates, classify};
use sombor::graph_io::generators::{complete_bipartite, cycle, path, star};
use sombor::Graph;

fn main() {
    let graphs: Vec<(&str, Graph)> = vec![
        ("C6", cycle(6).unwrap()),
        ("K1,3", star(3).unwrap()),
        ("K2,3", complete_bipartite(2, 3).unwrap()),
        ("P4", path(4).unwrap()),
        ("2 K1,2", star(2).unwrap().disjoint_union(&star(2).unwrap())),
    ];
    for (name, g) in &graphs {
        let c = classify(g);
        print!(
            "{name:<7} {:?} connected={} bipartite={} edge_sumsq_constant={}",
            c.kind, c.connected, c.bipartite, c.edge_sumsq_constant
        );
        match bi_regular_predicates(g) {
            Ok(p) => println!("  predicates {:?} agree={}", p, p.agree()),
            Err(e) => println!("  predicates n/a ({e})"),
        }
    }
}
