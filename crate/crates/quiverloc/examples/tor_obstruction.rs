//! Iterated kernel modules, Tor over the lower triangular ring, and the
//! stable-flatness obstruction.
//!
//! ```sh
//! cargo run --example tor_obstruction
//! ```

use quiverloc::exactlin::Field;
use quiverloc::torcalc::{
    ck, matrix_tor_dims, resolution_check, sigma_maps_check, stable_flatness_verdict, tor_dims,
    FinDimAlgebra,
};

fn main() {
    let algebras = [
        ("k", FinDimAlgebra::field_algebra(Field::Q)),
        ("k[e]/(e^2)", FinDimAlgebra::truncated_polynomial(Field::Q, 2)),
        ("k x k", FinDimAlgebra::split_pair(Field::Q)),
        ("k[e]/(e^3)", FinDimAlgebra::truncated_polynomial(Field::Q, 3)),
    ];
    for (name, s) in &algebras {
        let d = s.dim();
        println!("S = {name}  (dim {d})");
        let ck_dims: Vec<usize> = (0..=4).map(|j| ck(s, j).expect("ck").dim).collect();
        println!("  dim c^0..c^4 = {:?}  (law: d(d-1)^j)", ck_dims);
        for n in [3usize, 4] {
            let dims = tor_dims(s, n).expect("tor");
            let mdims = matrix_tor_dims(s, n).expect("tor");
            println!("  n = {n}: Tor dims {:?}, over the matrix ring {:?}", dims, mdims);
        }
        let res = resolution_check(s, 3).expect("resolution");
        println!(
            "  resolution terms {:?}, exact: {}",
            res.term_dims,
            res.all_ok()
        );
        let sm = sigma_maps_check(s, 3).expect("sigma maps");
        println!("  column maps invertible over the matrix ring: {}", sm.all_ok());
        println!(
            "  verdict at n = 3: {:?}\n",
            stable_flatness_verdict(s, 3).expect("verdict")
        );
    }
}
