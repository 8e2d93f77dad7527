//! Every bound over every graph on 2..=6 vertices.
//!
//!     cargo run --release --example sweep

use sombor::graph_io::enumerate_orders;
use sombor::verify::{verify_corpus, VerifyOptions};

fn main() {
    let corpus = enumerate_orders(2..=6, false, false).unwrap();
    let reports = verify_corpus(corpus, &VerifyOptions::default());
    for r in &reports {
        let alpha = r.alpha.map_or("-".into(), |a| a.to_string());
        println!(
            "{:<6} a={:<5} {:<10} checked={:>6} violations={:>6} witnesses={:>6} mismatches={:>5}",
            r.bound.as_str(),
            alpha,
            format!("{:?}", r.form),
            r.graphs_checked,
            r.violations.len(),
            r.equality_witnesses.len(),
            r.equality_mismatches.len()
        );
    }
    let failing: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    if let Some(r) = failing.first() {
        let v = &r.violations[0];
        println!(
            "first violation: {} at a={:?} on {} ({:.6} {} {:.6})",
            r.bound, r.alpha, v.graph6, v.check.lhs, v.check.relation, v.check.rhs
        );
    }
}
