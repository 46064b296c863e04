//! Group algebras through the localization: turn a group presentation into
//! an algebra presentation with formal inverses, build the construction,
//! and evaluate group words as triples.
//!
//! ```sh
//! cargo run --example group_algebra_words
//! ```

use quiverloc::exactlin::Field;
use quiverloc::freealg::group_algebra_presentation;
use quiverloc::localize::build_construction;
use quiverloc::malcolmson::Triple;

fn main() {
    // G = Z: one generator, no relators
    let pz = group_algebra_presentation(Field::Q, 1, &[]).expect("transformer");
    println!("Z:    {}", pz);

    // G = Z/2: one generator, relator x^2
    let p = group_algebra_presentation(Field::Q, 1, &[vec![1, 1]]).expect("transformer");
    println!("Z/2:  {}", p);
    let c = build_construction(&p).expect("build");
    let rs = c.rewrite_system(8, 10_000).expect("complete");
    println!(
        "      construction: n = {}, dim A = {}, rewrite rules = {}, certified = {}",
        c.n,
        c.algebra.total_dim(),
        rs.rules().len(),
        rs.is_certified()
    );

    // evaluate words in the group generator through the localization
    let x = Triple::generator_copy(&c, 1, 1); // the group generator
    let xbar = Triple::generator_copy(&c, 1, 2); // its formal inverse
    let words: Vec<(&str, Triple)> = vec![
        ("x", x.clone()),
        ("x*x", x.mul(&x, &c)),
        ("x*xb", x.mul(&xbar, &c)),
        ("x*x*x", x.mul(&x, &c).mul(&x, &c)),
    ];
    for (name, w) in words {
        let v = w.value(&c, &rs).expect("value");
        println!(
            "      value({name}) = {}  [{:?}]",
            p.format_poly(&v.poly),
            v.provenance
        );
    }
}
