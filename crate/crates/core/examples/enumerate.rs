//! Exhaustive enumeration, with and without isomorphism deduplication.
//!
//!     cargo run --release --example enumerate

use sombor::graph_io::enumerate::{canonical_form, enumerate_graphs, EnumerationSpec};
use sombor::graph_io::generators::path;
use sombor::graph_io::to_graph6;
use sombor::Graph;

fn main() {
    println!("{:>2} {:>8} {:>10} {:>8} {:>10}", "n", "labeled", "connected", "classes", "conn.cls");
    for n in 1..=6 {
        let count = |spec| enumerate_graphs(spec).unwrap().count();
        let spec = EnumerationSpec::labeled(n);
        println!(
            "{n:>2} {:>8} {:>10} {:>8} {:>10}",
            count(spec),
            count(spec.connected()),
            count(spec.dedup()),
            count(spec.dedup().connected())
        );
    }

    // Two labelings of P4 share one canonical form.
    let relabeled = Graph::new(4, [(1, 3), (3, 0), (0, 2)]).unwrap();
    for g in [path(4).unwrap(), relabeled] {
        let c = canonical_form(&g).unwrap();
        println!("{} -> {}", to_graph6(&g).unwrap(), to_graph6(&c).unwrap());
    }
}
