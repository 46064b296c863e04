//! Truncated completion of a presentation into a rewriting system, with
//! normal forms, filtration dimensions and the completeness certificate.
//!
//! ```sh
//! cargo run --example rewrite_normal_forms
//! ```

use quiverloc::exactlin::Field;
use quiverloc::freealg::{format_word, parse_presentation};
use quiverloc::rewrite::complete_truncated;

fn main() {
    for text in [
        "k<x,y | x*x, y*x>",
        "k<x,y | x*y - y*x - 1>",
        "k<x1,xb1 | x1*xb1 - 1, xb1*x1 - 1, x1*x1 - 1>",
    ] {
        let p = parse_presentation(text, Field::Q).expect("parse");
        let rs = complete_truncated(&p, 6, 10_000).expect("complete");
        println!("{}", p);
        println!(
            "  {} rules, certificate: {}",
            rs.rules().len(),
            if rs.is_certified() {
                "complete"
            } else {
                "truncated (heuristic)"
            }
        );
        for rule in rs.rules() {
            println!(
                "    {} -> {}",
                format_word(&rule.lhs, &p.generators),
                p.format_poly(&rule.rhs)
            );
        }
        let filt = rs.filtration_dims(4).expect("filtration");
        println!("  dim S_0..S_4 = {:?}", filt.dims);

        // reduce a few sample polynomials
        let samples = ["x*x*x", "x*y", "y*x*y"];
        for sample in samples {
            let padded = format!(
                "k<{} | {}>",
                p.generators.join(","),
                sample
                    .replace('x', &p.generators[0])
                    .replace('y', p.generators.last().unwrap())
            );
            if let Ok(sp) = parse_presentation(&padded, Field::Q) {
                let nf = rs.normal_form(&sp.relations[0]).expect("normal form");
                println!(
                    "    nf({}) = {}",
                    sp.format_poly(&sp.relations[0]),
                    sp.format_poly(&nf)
                );
            }
        }
        println!();
    }
}
