//! Each bound family on one graph, plus the regimes where the commonly
//! quoted direction is false.
//!
//!     cargo run --example bounds

use sombor::bounds::{check_family, check_sombor_randic_reading, BoundCheck, BoundFamily, Reading};
use sombor::graph_io::generators::path;
use sombor::graph_io::parse_graph6;

fn line(c: &BoundCheck) {
    let alpha = c.alpha.map_or("-".into(), |a| a.to_string());
    println!(
        "  {:<6} a={:<5} {:>12.6} {} {:<12.6} slack={:>+11.6} holds={:<5} tight={:<5} predicted={:?} [{:?}]",
        c.bound.as_str(),
        alpha,
        c.lhs,
        c.relation,
        c.rhs,
        c.slack,
        c.holds,
        c.equality_observed,
        c.equality_predicted,
        c.form
    );
}

fn main() {
    // K_{1,4} with the centre at vertex 4.
    let g = parse_graph6("D?{").unwrap();
    println!("K1,4");
    for family in BoundFamily::ALL {
        for alpha in [-1.0, 0.5, 1.5, 3.0] {
            let alpha = family.takes_alpha().then_some(alpha);
            if let Ok(checks) = check_family(family, &g, alpha, Reading::Verified) {
                checks.iter().for_each(line);
            }
            if alpha.is_none() {
                break;
            }
        }
    }

    println!("P3 at alpha = -1, as quoted and as verified");
    let p3 = path(3).unwrap();
    for reading in [Reading::AsPrinted, Reading::Verified] {
        check_sombor_randic_reading(&p3, -1.0, reading).unwrap().iter().for_each(line);
    }
}
