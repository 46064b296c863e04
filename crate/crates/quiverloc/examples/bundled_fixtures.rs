//! Verify the two bundled quiver fixtures: the chain quiver localizing to
//! matrices over the Weyl algebra, and the maximal-subtree variant.
//!
//! ```sh
//! cargo run --example bundled_fixtures
//! ```

use quiverloc::localize::builtin_fixture;

fn main() {
    for name in ["weyl4", "subtree4"] {
        let f = builtin_fixture(name).expect("builtin");
        println!("{}: {}", f.name, f.description);
        println!("  target: {}", f.target);
        let report = f.verify(6, 10_000).expect("verify");
        for kill in &report.kills {
            println!(
                "  {} at entry {:?}: raw = {:16} -> {:?}",
                kill.name,
                kill.entry,
                f.target.format_poly(&kill.raw),
                kill.verdict
            );
        }
        println!(
            "  inverted arrows invertible: {} (chain composite: {:?})\n",
            report.sigma.all_ok(),
            report.sigma.composite_ok
        );
    }
}
