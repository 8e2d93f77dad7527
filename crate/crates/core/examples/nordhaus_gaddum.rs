//! SO_alpha(G) + SO_alpha(complement) against its bounds.
//!
//!     cargo run --example nordhaus_gaddum

use sombor::bounds::check_nordhaus_gaddum;
use sombor::graph_io::generators::{complete, cycle, path, star};
use sombor::indices::general_sombor;

fn main() {
    for (name, g) in
        [("C5", cycle(5).unwrap()), ("P4", path(4).unwrap()), ("K1,4", star(4).unwrap()), ("K5", complete(5).unwrap())]
    {
        for alpha in [-1.0, 0.5, 2.0] {
            let so = general_sombor(&g, alpha);
            let so_bar = general_sombor(&g.complement(), alpha);
            print!("{name:<5} a={alpha:<4} SO={so:>10.5} SO(co)={so_bar:>10.5}");
            for c in check_nordhaus_gaddum(&g, alpha).unwrap() {
                print!(
                    "  {} {} {:.5} ({})",
                    c.bound,
                    c.relation,
                    c.rhs,
                    if c.equality_observed { "tight" } else { "ok" }
                );
            }
            println!();
        }
    }
}
