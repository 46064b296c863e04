//! The triple calculus: build `a s^-1 b` forms, add and multiply them,
//! and decide equality semantically by evaluating in the matrix model.
//!
//! ```sh
//! cargo run --example malcolmson_triples
//! ```

use quiverloc::exactlin::Field;
use quiverloc::freealg::parse_presentation;
use quiverloc::localize::build_construction;
use quiverloc::malcolmson::Triple;

fn main() {
    let p = parse_presentation("k<x,y | x*x, y*x>", Field::Q).expect("parse");
    let c = build_construction(&p).expect("build");
    let rs = c.rewrite_system(8, 10_000).expect("complete");
    println!("{}\n", p);

    // copies of the generators at both levels of the quiver
    let x1 = Triple::generator_copy(&c, 1, 1);
    let x2 = Triple::generator_copy(&c, 2, 1);
    let y1 = Triple::generator_copy(&c, 1, 2);
    for (name, t) in [("x_(1,1)", &x1), ("x_(2,1)", &x2), ("y_(1,2)", &y1)] {
        let v = t.value(&c, &rs).expect("value");
        println!(
            "value({name}) = {}   [{:?}, rank {}]",
            p.format_poly(&v.poly),
            v.provenance,
            t.rank()
        );
    }

    println!();
    let sum = x1.add(&x2);
    println!(
        "value(x_(1,1) + x_(2,1)) = {}",
        p.format_poly(&sum.value(&c, &rs).expect("value").poly)
    );
    let sq = x1.mul(&x2, &c);
    println!(
        "value(x_(1,1) * x_(2,1)) = {}   (the relation x^2 kills it)",
        p.format_poly(&sq.value(&c, &rs).expect("value").poly)
    );
    let xy = x1.mul(&y1, &c);
    println!(
        "value(x * y) = {}",
        p.format_poly(&xy.value(&c, &rs).expect("value").poly)
    );

    println!();
    println!(
        "x_(1,1) == x_(2,1)?  {:?}   (the t-relations identify the copies)",
        x1.eq(&x2, &c, &rs).expect("eq")
    );
    println!(
        "x_(1,1) == y_(1,2)?  {:?}",
        x1.eq(&y1, &c, &rs).expect("eq")
    );
}
