//! Minimal projective resolutions of the vertex simples and the global
//! dimension of a construction.
//!
//! ```sh
//! cargo run --example global_dimension
//! ```

use quiverloc::exactlin::Field;
use quiverloc::freealg::parse_presentation;
use quiverloc::localize::build_construction;
use quiverloc::quiver::{global_dimension, simple_resolution};

fn main() {
    for text in ["k<x | x*x>", "k<x,y | x*x, y*x>", "k<x,y | x*y*x - 1>"] {
        let p = parse_presentation(text, Field::Q).expect("parse");
        let c = build_construction(&p).expect("build");
        println!("{}  (n = {})", p, c.n);
        for m in 1..=c.n {
            let res = simple_resolution(&c.algebra, m);
            let terms: Vec<String> = res
                .steps
                .iter()
                .map(|s| {
                    if s.summands.is_empty() {
                        "0".to_string()
                    } else {
                        s.summands
                            .iter()
                            .map(|v| format!("P{}", v))
                            .collect::<Vec<_>>()
                            .join("+")
                    }
                })
                .collect();
            println!(
                "  S_{m}: pd = {}, resolution terms {:?}, rank-exact: {}",
                res.pd(),
                terms,
                res.verify_exact(&c.algebra)
            );
        }
        println!("  global dimension = {}\n", global_dimension(&c.algebra));
    }
}
