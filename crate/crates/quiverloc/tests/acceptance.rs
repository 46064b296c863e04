//! Acceptance suite: one test per criterion, each printing a pass line.
//! Every expectation is an exact integer; there are no tolerances anywhere.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use quiverloc::exactlin::Field;
use quiverloc::freealg::{
    group_algebra_presentation, parse_presentation, NcPoly, Presentation, Word,
};
use quiverloc::localize::{
    build_construction, builtin_fixture, generation_check, image_algebra_dims,
    relation_kill_checks, sigma_invertibility_check,
};
use quiverloc::malcolmson::{EqVerdict, Triple};
use quiverloc::quiver::{simple_resolution, PathPoly, QPath};
use quiverloc::rewrite::Provenance;
use quiverloc::torcalc::{
    matrix_tor_dims, resolution_check, stable_flatness_verdict, tor_dims, FinDimAlgebra,
    FlatnessVerdict,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pass(n: usize, what: &str) {
    println!("PASS criterion {n}: {what}");
}

#[test]
fn criterion_01_localization_triad_for_x2_yx() {
    let p = parse_presentation("k<x,y | x*x, y*x>", Field::Q).unwrap();
    let c = build_construction(&p).unwrap();
    assert_eq!(c.n, 3);
    assert_eq!(c.relations_t.len(), 2);
    assert_eq!(c.relations_yprime.len(), 2);

    let rs = c.rewrite_system(c.default_degree_bound(), 10_000).unwrap();
    assert!(rs.is_certified());

    // every t and y' image vanishes, certified
    let kills = relation_kill_checks(&c.model, &c.named_relations(), &rs).unwrap();
    assert_eq!(kills.len(), 4);
    for kill in &kills {
        assert!(kill.verdict.is_zero(), "{} must die", kill.name);
        assert_eq!(kill.verdict.provenance(), Provenance::Certified);
    }

    // every inverted arrow has an exact two-sided inverse
    let sigma = sigma_invertibility_check(&c.model, &c.sigma, &rs).unwrap();
    assert!(sigma.all_ok());
    assert_eq!(sigma.composite_ok, Some(true));

    // the generated subring covers the localization
    let gen = generation_check(&c, &rs).unwrap();
    assert!(gen.all_ok());

    // dim of the image algebra two independent ways
    let dims = image_algebra_dims(&c, &rs).unwrap();
    assert_eq!(dims.formula_dim, 14);
    assert_eq!(dims.rank_dim, 14);
    assert!(dims.agree());

    pass(
        1,
        "x^2, yx localization: 2+2 relations die certified, inverses exact, generation holds, dim 14 both ways",
    );
}

#[test]
fn criterion_02_free_algebra_base_case() {
    for a in 1..=3usize {
        let names: Vec<String> = (0..a).map(|i| format!("g{}", i + 1)).collect();
        let p = Presentation::free(Field::Q, names);
        let c = build_construction(&p).unwrap();
        assert_eq!(c.n, 2);
        assert_eq!(c.quiver.arrows.len(), a + 1);
        assert!(c.relations_t.is_empty());
        assert!(c.relations_yprime.is_empty());

        let rs = c.rewrite_system(c.default_degree_bound(), 10_000).unwrap();
        let dims = image_algebra_dims(&c, &rs).unwrap();
        assert_eq!(dims.kernel_dim, 0, "the model embeds the free case");
        assert_eq!(dims.rank_dim, dims.algebra_dim);
        assert!(dims.agree());
        if a == 1 {
            assert_eq!(dims.algebra_dim, 4); // a + 3
        }
    }
    pass(
        2,
        "free algebras: n = 2, a+1 arrows, no relations, injective model (dim 4 at a = 1)",
    );
}

fn random_presentation(rng: &mut ChaCha8Rng) -> Presentation {
    let a = rng.gen_range(1..=3usize);
    let b = rng.gen_range(1..=3usize);
    let names: Vec<String> = (0..a).map(|i| format!("g{}", i + 1)).collect();
    let mut relations = Vec::new();
    while relations.len() < b {
        let mut poly = NcPoly::zero(Field::Q);
        for _ in 0..rng.gen_range(1..=3) {
            let len = rng.gen_range(0..=4usize);
            let w = Word((0..len).map(|_| rng.gen_range(0..a)).collect());
            let coeff =
                quiverloc::exactlin::Scalar::from_i64(Field::Q, rng.gen_range(-2..=2i64));
            poly.add_term(&coeff, &w);
        }
        if !poly.is_zero() {
            relations.push(poly);
        }
    }
    Presentation::new(Field::Q, names, relations).unwrap()
}

#[test]
fn criterion_03_global_dimension_of_randomized_constructions() {
    let mut rng = ChaCha8Rng::seed_from_u64(20240601);
    let mut checked = 0;
    while checked < 20 {
        let p = random_presentation(&mut rng);
        let c = build_construction(&p).unwrap();
        let a = p.num_generators();
        let mut gd = 0;
        for m in 1..=c.n {
            let res = simple_resolution(&c.algebra, m);
            assert!(
                res.verify_exact(&c.algebra),
                "resolution of simple {m} fails the rank check for {p}"
            );
            let pd = res.pd();
            gd = gd.max(pd);
            if m == c.n {
                assert_eq!(pd, 0, "top simple is projective for {p}");
            } else if m >= 2 {
                assert_eq!(pd, 1, "middle simple {m} for {p}");
                // its minimal resolution ends in a+1 copies of P_{m+1}
                assert_eq!(res.steps[1].summands, vec![m + 1; a + 1]);
            }
        }
        assert!(gd <= 2, "global dimension exceeds 2 for {p}");
        checked += 1;
    }
    pass(
        3,
        "20 random presentations (a <= 3, b <= 3, deg <= 4): gldim <= 2, pd S_n = 0, middle pd = 1, all resolutions rank-exact",
    );
}

#[test]
fn criterion_04_weyl_fixture() {
    let f = builtin_fixture("weyl4").unwrap();
    let report = f.verify(6, 10_000).unwrap();
    assert_eq!(report.kills.len(), 2);
    for kill in &report.kills {
        assert!(kill.verdict.is_zero());
        assert_eq!(kill.verdict.provenance(), Provenance::Certified);
        assert_eq!(kill.entry, (1, 4));
    }
    // the second relation reduces from exactly x*y - y*x - 1
    let raw = &report.kills[1].raw;
    let one = quiverloc::exactlin::Scalar::from_i64(Field::Q, 1);
    assert_eq!(raw.coeff(&Word(vec![0, 1])), one);
    assert_eq!(raw.coeff(&Word(vec![1, 0])), one.neg());
    assert_eq!(raw.coeff(&Word::one()), one.neg());
    assert!(report.sigma.all_ok());
    pass(
        4,
        "weyl4: both relations vanish certified in M_4 over the Weyl algebra; relation 2 is x*y - y*x - 1 at (1,4)",
    );
}

#[test]
fn criterion_05_subtree_fixture() {
    let f = builtin_fixture("subtree4").unwrap();
    let report = f.verify(6, 10_000).unwrap();
    assert_eq!(report.kills.len(), 3);
    for kill in &report.kills {
        assert!(kill.verdict.is_zero(), "{} must die", kill.name);
        assert_eq!(kill.verdict.provenance(), Provenance::Certified);
    }
    assert!(report.sigma.all_ok());
    pass(5, "subtree4: all three relations vanish in M_4(k<x,y : x^2, yx>)");
}

fn test_algebras_d_1_2_3() -> Vec<FinDimAlgebra> {
    vec![
        FinDimAlgebra::field_algebra(Field::Q),
        FinDimAlgebra::truncated_polynomial(Field::Q, 2),
        FinDimAlgebra::split_pair(Field::Q),
        FinDimAlgebra::truncated_polynomial(Field::Q, 3),
        FinDimAlgebra::upper_triangular_2(Field::Q),
    ]
}

#[test]
fn criterion_06_iterated_kernel_dimension_law() {
    for s in test_algebras_d_1_2_3() {
        let d = s.dim();
        for j in 0..=6usize {
            let m = quiverloc::torcalc::ck(&s, j).unwrap();
            assert_eq!(
                m.dim,
                d * (d - 1).pow(j as u32),
                "dim c^{j} for d = {d}"
            );
        }
    }
    pass(6, "dim c^j(S) = d(d-1)^j for d in {1,2,3}, j <= 6, on five test algebras");
}

#[test]
fn criterion_07_tor_dimensions() {
    let dual = FinDimAlgebra::truncated_polynomial(Field::Q, 2);
    assert_eq!(tor_dims(&dual, 3).unwrap(), vec![2, 0, 2]);
    assert_eq!(matrix_tor_dims(&dual, 3).unwrap(), vec![18, 0, 18]);

    let d3 = FinDimAlgebra::truncated_polynomial(Field::Q, 3);
    assert_eq!(tor_dims(&d3, 3).unwrap(), vec![3, 0, 24]);

    assert_eq!(tor_dims(&dual, 4).unwrap(), vec![2, 0, 0, 2]);

    // interior vanishing for every d <= 4, n <= 5
    for d in 1..=4usize {
        let s = FinDimAlgebra::truncated_polynomial(Field::Q, d);
        for n in 3..=5usize {
            let dims = tor_dims(&s, n).unwrap();
            assert_eq!(dims[0], d);
            for (i, &dim) in dims.iter().enumerate().take(n - 1).skip(1) {
                assert_eq!(dim, 0, "Tor_{i} interior vanishing at d = {d}, n = {n}");
            }
            assert_eq!(dims[n - 1], d * (d - 1).pow(n as u32));
        }
    }
    pass(
        7,
        "Tor dims: [2,0,2]/[18,0,18] for dual numbers, [3,0,24] at d=3, [2,0,0,2] at n=4, interior zero for d<=4, n<=5",
    );
}

#[test]
fn criterion_08_resolution_exactness() {
    for (d, n) in [(2usize, 3usize), (2, 4), (3, 3)] {
        let s = FinDimAlgebra::truncated_polynomial(Field::Q, d);
        let rep = resolution_check(&s, n).unwrap();
        assert!(rep.squares_to_zero, "(d, n) = ({d}, {n})");
        assert!(rep.exact_at_interior, "(d, n) = ({d}, {n})");
        assert!(rep.augmentation_onto, "(d, n) = ({d}, {n})");
        assert!(rep.augmentation_kernel_matches, "(d, n) = ({d}, {n})");
    }
    pass(
        8,
        "triangular-ring resolutions exact at every spot for (d, n) in {(2,3), (2,4), (3,3)}",
    );
}

#[test]
fn criterion_09_stable_flatness_verdicts() {
    let dual = FinDimAlgebra::truncated_polynomial(Field::Q, 2);
    assert_eq!(
        stable_flatness_verdict(&dual, 3).unwrap(),
        FlatnessVerdict::NotStablyFlat {
            tor_index: 2,
            dim: 18
        }
    );
    let k = FinDimAlgebra::field_algebra(Field::Q);
    assert_eq!(
        stable_flatness_verdict(&k, 3).unwrap(),
        FlatnessVerdict::NoObstructionFound
    );
    pass(
        9,
        "dual numbers at n = 3: NotStablyFlat with Tor_2 of dim 18; base field: NoObstructionFound",
    );
}

#[test]
fn criterion_10_malcolmson_calculus_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    for text in ["k<x,y | >", "k<x,y | x*x, y*x>", "k<x,y | x*y - y*x - 1>"] {
        let p = parse_presentation(text, Field::Q).unwrap();
        let c = build_construction(&p).unwrap();
        let rs = c.rewrite_system(8, 10_000).unwrap();
        assert!(rs.is_certified());
        let random_leaf = |rng: &mut ChaCha8Rng| -> Triple {
            if rng.gen_bool(0.25) {
                let f1 = PathPoly::path(Field::Q, QPath::lazy(1));
                let coeff =
                    quiverloc::exactlin::Scalar::from_i64(Field::Q, rng.gen_range(-2..=2i64));
                Triple::embed(&c, f1.scale(&coeff))
            } else {
                Triple::generator_copy(&c, rng.gen_range(1..c.n), rng.gen_range(1..=2))
            }
        };
        // depth-2 expression trees keep values inside the degree budget
        let random_triple = |rng: &mut ChaCha8Rng| -> Triple {
            let t1 = random_leaf(rng);
            let t2 = random_leaf(rng);
            match rng.gen_range(0..3) {
                0 => t1.add(&t2),
                1 => t1.mul(&t2, &c),
                _ => t1,
            }
        };
        for _ in 0..100 {
            let t1 = random_triple(&mut rng);
            let t2 = random_triple(&mut rng);
            let v1 = t1.value(&c, &rs).unwrap().poly;
            let v2 = t2.value(&c, &rs).unwrap().poly;
            let sum = t1.add(&t2);
            sum.validate(&c).unwrap();
            assert_eq!(sum.value(&c, &rs).unwrap().poly, v1.add(&v2));
            let prod = t1.mul(&t2, &c);
            prod.validate(&c).unwrap();
            assert_eq!(
                prod.value(&c, &rs).unwrap().poly,
                rs.normal_form(&v1.mul(&v2)).unwrap()
            );
        }
    }

    // the copies of a generator at different levels are certified equal
    let p = parse_presentation("k<x,y | x*x, y*x>", Field::Q).unwrap();
    let c = build_construction(&p).unwrap();
    let rs = c.rewrite_system(8, 10_000).unwrap();
    for i in 1..=2 {
        let t1 = Triple::generator_copy(&c, 1, i);
        let t2 = Triple::generator_copy(&c, 2, i);
        assert_eq!(
            t1.eq(&t2, &c, &rs).unwrap(),
            EqVerdict::Equal(Provenance::Certified)
        );
    }
    // distinct free generators are certified distinct
    let free = parse_presentation("k<x,y | >", Field::Q).unwrap();
    let cf = build_construction(&free).unwrap();
    let rsf = cf.rewrite_system(8, 10_000).unwrap();
    let x = Triple::generator_copy(&cf, 1, 1);
    let y = Triple::generator_copy(&cf, 1, 2);
    assert_eq!(
        x.eq(&y, &cf, &rsf).unwrap(),
        EqVerdict::NotEqual(Provenance::Certified)
    );
    pass(
        10,
        "100 random triples x 3 presentations: value is additive and multiplicative; generator copies certified equal, free x != y certified",
    );
}

#[test]
fn criterion_11_group_algebra_transformer() {
    // G = Z/2: the word x*x evaluates to 1 through the localization
    let p = group_algebra_presentation(Field::Q, 1, &[vec![1, 1]]).unwrap();
    let c = build_construction(&p).unwrap();
    let rs = c.rewrite_system(8, 10_000).unwrap();
    assert!(rs.is_certified());
    let x = Triple::generator_copy(&c, 1, 1);
    let value = x.mul(&x, &c).value(&c, &rs).unwrap();
    assert_eq!(value.poly, NcPoly::one(Field::Q));
    assert_eq!(value.provenance, Provenance::Certified);

    // shape law: always 2c generators and 2c + r relations
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..25 {
        let count = rng.gen_range(1..=4usize);
        let r = rng.gen_range(0..=4usize);
        let relators: Vec<Vec<i64>> = (0..r)
            .map(|_| {
                (0..rng.gen_range(1..=4))
                    .map(|_| {
                        let l = rng.gen_range(1..=count) as i64;
                        if rng.gen_bool(0.5) {
                            l
                        } else {
                            -l
                        }
                    })
                    .collect()
            })
            .collect();
        let p = group_algebra_presentation(Field::Q, count, &relators).unwrap();
        assert_eq!(p.num_generators(), 2 * count);
        assert_eq!(p.relations.len(), 2 * count + r);
    }
    pass(
        11,
        "Z/2 group algebra: x*x evaluates to 1 through the localization; transformer always yields 2c generators and 2c + r relations",
    );
}
