//! Parse a presentation and build its quiver-with-relations construction.
//!
//! ```sh
//! cargo run --example parse_and_build
//! ```

use quiverloc::exactlin::Field;
use quiverloc::freealg::{construction_size, parse_presentation};
use quiverloc::localize::build_construction;

fn main() {
    for text in [
        "k<x,y | x*x, y*x>",
        "k<x,y | x*y - y*x - 1>",
        "k<x | >",
        "k<x,y | x*y*x - 1>",
    ] {
        let p = parse_presentation(text, Field::Q).expect("parse");
        let c = build_construction(&p).expect("build");
        println!("{}", p);
        println!("  construction size n   = {}", construction_size(&p));
        println!("  arrows                = {}", c.quiver.arrows.len());
        println!(
            "  relations             = {} from T, {} from the presentation",
            c.relations_t.len(),
            c.relations_yprime.len()
        );
        println!("  dim of the algebra    = {}", c.algebra.total_dim());
        println!("  inverted arrows       = {:?}", c.sigma);
        for (name, rel) in c.named_relations() {
            println!("    {:6} = {}", name, rel.format(&c.quiver));
        }
        println!();
    }
}
