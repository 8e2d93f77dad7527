//! Every index on a few small graphs.
//!
//!     cargo run --example indices

use sombor::graph_io::generators::{complete_bipartite, cycle, path};
use sombor::indices::{evaluate, IndexId};
use sombor::Graph;

fn show(name: &str, g: &Graph, alpha: f64) {
    println!("{name} (n={}, m={})", g.order(), g.size());
    for id in IndexId::ALL {
        let param = id.is_parametric().then_some(alpha);
        match evaluate(g, id, param) {
            Ok(v) => println!("  {:<9} {:>14.6}", id.to_string(), v.value),
            Err(e) => println!("  {:<9} undefined ({e})", id.to_string()),
        }
    }
}

fn main() {
    show("C5", &cycle(5).unwrap(), 2.0);
    show("P4", &path(4).unwrap(), 3.0);
    show("K2,3", &complete_bipartite(2, 3).unwrap(), -0.5);

    // M1P with a negative exponent is undefined once a vertex is isolated.
    let g = Graph::new(3, [(0, 1)]).unwrap();
    show("K2 + K1", &g, -1.0);
}
