//! Seeded G(n, p) samples and the two alpha = 1 corollaries.
//!
//!     cargo run --example random_graphs

use sombor::bounds::sombor_corollaries;
use sombor::graph_io::{random_graph, to_graph6};
use sombor::indices::sombor;

fn main() {
    for seed in 0..8 {
        let g = random_graph(12, 0.3, seed).unwrap();
        let Ok(c) = sombor_corollaries(&g) else { continue };
        println!(
            "seed {seed}: {} m={:>2}  {:.4} <= {:.4} <= {:.4}   {:.4} <= {:.4} <= {:.4}",
            to_graph6(&g).unwrap(),
            g.size(),
            c.zagreb2_lower,
            sombor(&g),
            c.zagreb2_upper,
            c.zagreb1_lower,
            sombor(&g),
            c.zagreb1_upper
        );
    }
}
