//! Closed forms of standard families against direct evaluation, including the
//! two path formulas.
//!
//!     cargo run --example closed_forms

use sombor::graph_io::generators::{complete, cycle, path};
use sombor::indices::{closed_form_complete, closed_form_cycle, closed_form_path, general_sombor, PathVariant};

fn main() {
    println!("{:>3} {:>5} {:>14} {:>14} {:>14} {:>14}", "n", "alpha", "K_n", "C_n", "P_n", "P_n quoted");
    for n in [2, 3, 4, 6, 10] {
        for alpha in [-1.0, 1.0, 2.0] {
            let k = closed_form_complete(n, alpha).unwrap();
            assert!((k - general_sombor(&complete(n).unwrap(), alpha)).abs() <= 1e-12 * k.abs());
            let c = closed_form_cycle(n, alpha).map_or(f64::NAN, |c| {
                assert!((c - general_sombor(&cycle(n).unwrap(), alpha)).abs() <= 1e-12 * c);
                c
            });
            let p = closed_form_path(n, alpha, PathVariant::Corrected).unwrap();
            assert!((p - general_sombor(&path(n).unwrap(), alpha)).abs() <= 1e-12 * p);
            let quoted = closed_form_path(n, alpha, PathVariant::Paper).unwrap();
            let mark = if (quoted - p).abs() > 1e-12 * p { " <- differs" } else { "" };
            println!("{n:>3} {alpha:>5} {k:>14.6} {c:>14.6} {p:>14.6} {quoted:>14.6}{mark}");
        }
    }
}
