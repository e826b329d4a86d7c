use std::path::PathBuf;

use proptest::prelude::*;
use zinbiel_core::free::{truncated_free_algebra, Alphabet};
use zinbiel_core::graded::{Parity, Rational};
use zinbiel_core::poly::{groebner_basis, is_inconsistent};
use zinbiel_core::rota_baxter::{
    binomial_product, derived_product, derived_tower, is_rota_baxter, mirrored_binomial_product, operator_values,
    parity_shift, parity_unshift, rota_baxter_system, super_opposite, GradedOperator, RotaBaxterError,
};
use zinbiel_core::superalgebra::{verify_identity, IdentityKind, SuperAlgebra};

struct Fixture {
    name: &'static str,
    alg: SuperAlgebra,
    op: GradedOperator,
}

fn read(file: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", "rota_baxter", file].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

fn fixtures() -> Vec<Fixture> {
    [
        ("truncated_polynomials", "truncated_polynomials"),
        ("grassmann_ideal", "grassmann_ideal"),
        ("grassmann_unital", "grassmann_unital"),
        ("grassmann_unital_odd", "grassmann_unital"),
        ("dual_numbers_ideal_odd", "dual_numbers_ideal"),
    ]
    .into_iter()
    .map(|(name, alg)| {
        let alg = SuperAlgebra::parse(&read(&format!("{alg}.alg"))).unwrap();
        let op = GradedOperator::parse(&read(&format!("{name}.op")), alg.even_dim(), alg.odd_dim()).unwrap();
        Fixture { name, alg, op }
    })
    .collect()
}

fn even(f: &Fixture) -> bool {
    !f.op.parity().is_odd()
}

#[test]
fn fixtures_solve_their_residual_systems() {
    for f in fixtures() {
        assert!(verify_identity(&f.alg, IdentityKind::SuperCommutativeAssociative).holds(), "{}", f.name);
        let (slots, eqs) = rota_baxter_system(&f.alg, f.op.parity());
        let values = operator_values(&f.op, &slots);
        assert!(eqs.iter().all(|e| e.evaluate(&values) == Rational::from(0)), "{}", f.name);
        assert!(!is_inconsistent(&groebner_basis(&eqs, 100_000).unwrap()));
        assert!(is_rota_baxter(&f.alg, &f.op).unwrap().holds(), "{}", f.name);
        assert!(!f.op.matrix().iter().flatten().all(|c| *c == Rational::from(0)));
    }
}

#[test]
fn derived_products_follow_the_operator_parity() {
    for f in fixtures() {
        let z = derived_product(&f.alg, &f.op).unwrap();
        assert!(!z.is_trivial(), "{}", f.name);
        assert_eq!(z.product_parity(), f.op.parity());
        let kind = if even(&f) { IdentityKind::SuperZinbiel } else { IdentityKind::OddZinbiel };
        assert!(verify_identity(&z, kind).holds(), "{}", f.name);
    }
}

#[test]
fn derived_product_rejects_bad_inputs() {
    let fs = fixtures();
    let f = &fs[0];
    let mut not_rb = f.op.matrix().to_vec();
    not_rb[0][0] = Rational::from(2);
    let bad = GradedOperator::new(3, not_rb, Parity::Even).unwrap();
    assert!(matches!(derived_product(&f.alg, &bad), Err(RotaBaxterError::NotRotaBaxter { .. })));
    let lie = SuperAlgebra::parse("dims 2 0\n1 2 2 1\n2 1 2 -1\n").unwrap();
    let r = GradedOperator::zero(2, 0, Parity::Even);
    assert!(matches!(derived_product(&lie, &r), Err(RotaBaxterError::NotSupercommutativeAssociative { .. })));
    assert!(matches!(derived_product(&lie, &fs[1].op), Err(RotaBaxterError::DimensionMismatch { .. })));
}

#[test]
fn towers_recertify_and_match_the_binomial_closed_form() {
    for f in fixtures().iter().filter(|f| even(f)) {
        let z = derived_product(&f.alg, &f.op).unwrap();
        let tower = derived_tower(&z, &f.op, 3).unwrap();
        assert_eq!(tower.len(), 4);
        assert_eq!(tower[0], z);
        for (n, level) in tower.iter().enumerate() {
            assert_eq!(&binomial_product(&f.alg, &f.op, n).unwrap(), level, "{} n={n}", f.name);
            assert_eq!(super_opposite(&mirrored_binomial_product(&f.alg, &f.op, n).unwrap()), *level);
        }
    }
}

#[test]
fn mirrored_closed_form_is_the_opposite_product() {
    // R(x)x ≠ xR(x) order-wise already at the bottom level
    let f = &fixtures()[0];
    let mirrored = mirrored_binomial_product(&f.alg, &f.op, 0).unwrap();
    assert_ne!(mirrored, derived_product(&f.alg, &f.op).unwrap());
    assert!(!verify_identity(&mirrored, IdentityKind::SuperZinbiel).holds());
}

#[test]
fn degenerate_towers() {
    let f = &fixtures()[0];
    let z = derived_product(&f.alg, &f.op).unwrap();
    assert_eq!(derived_tower(&z, &f.op, 0).unwrap(), vec![z.clone()]);
    let zero = GradedOperator::zero(3, 0, Parity::Even);
    let tower = derived_tower(&z, &zero, 2).unwrap();
    assert!(tower[1..].iter().all(SuperAlgebra::is_trivial));
    let odd = &fixtures()[3];
    let zo = derived_product(&odd.alg, &odd.op).unwrap();
    assert!(matches!(derived_tower(&zo, &odd.op, 1), Err(RotaBaxterError::OddTowerOperator)));
}

#[test]
fn tower_rejects_an_operator_that_is_not_rota_baxter_for_the_product() {
    let f = &fixtures()[0];
    let z = derived_product(&f.alg, &f.op).unwrap();
    let id = GradedOperator::identity(3, 0);
    assert!(matches!(derived_tower(&z, &id, 2), Err(RotaBaxterError::Tower { level: 0, .. })));
}

fn zinbiel_examples() -> Vec<SuperAlgebra> {
    let free = Alphabet::parse_inline("x:odd,y:even").unwrap();
    let mut out = vec![SuperAlgebra::parse("dims 1 1\n2 2 1 1\n").unwrap(), truncated_free_algebra(&free, 3).1];
    for f in fixtures().iter().filter(|f| even(f)) {
        let z = derived_product(&f.alg, &f.op).unwrap();
        out.extend(derived_tower(&z, &f.op, 2).unwrap());
    }
    out
}

#[test]
fn parity_shift_of_zinbiel_satisfies_the_odd_identity() {
    for z in zinbiel_examples() {
        assert!(verify_identity(&z, IdentityKind::SuperZinbiel).holds());
        let star = parity_shift(&z);
        assert_eq!((star.even_dim(), star.odd_dim()), (z.odd_dim(), z.even_dim()));
        assert!(verify_identity(&star, IdentityKind::OddZinbiel).holds(), "{}", z.to_text());
        assert_eq!(parity_unshift(&star), z);
    }
}

#[test]
fn the_shift_sign_is_detected() {
    // dropping (-1)^{|a|} breaks the odd identity once iterated products are rich enough
    let (_, z) = truncated_free_algebra(&Alphabet::parse_inline("x:odd,y:even").unwrap(), 3);
    assert_eq!((z.even_dim(), z.odd_dim()), (7, 7));
    let star = parity_shift(&z);
    let unsigned: Vec<_> =
        star.constants().map(|(i, j, k, c)| ((i, j, k), c * &star.parity(i).flip().sign_rational())).collect();
    let unsigned = SuperAlgebra::from_constants(7, 7, Parity::Odd, unsigned).unwrap();
    assert!(verify_identity(&star, IdentityKind::OddZinbiel).holds());
    assert!(!verify_identity(&unsigned, IdentityKind::OddZinbiel).holds());
}

#[test]
fn unshifting_odd_products_gives_zinbiel() {
    for f in fixtures().iter().filter(|f| !even(f)) {
        let star = derived_product(&f.alg, &f.op).unwrap();
        let z = parity_unshift(&star);
        assert!(verify_identity(&z, IdentityKind::SuperZinbiel).holds(), "{}", f.name);
        assert_eq!(parity_shift(&z), star);
    }
}

fn small() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // any odd block with nonzero trace, completed by determinant over trace
    #[test]
    fn grassmann_ideal_family(a in small(), b in small(), c in small(), d in small()) {
        let trace = &a + &d;
        prop_assume!(trace != Rational::from(0));
        let det = &(&a * &d) - &(&b * &c);
        let zero = Rational::from(0);
        let m = vec![
            vec![&det / &trace, zero.clone(), zero.clone()],
            vec![zero.clone(), a, b],
            vec![zero, c, d],
        ];
        let alg = SuperAlgebra::parse(&read("grassmann_ideal.alg")).unwrap();
        let r = GradedOperator::new(1, m, Parity::Even).unwrap();
        prop_assert!(is_rota_baxter(&alg, &r).unwrap().holds());
        let z = derived_product(&alg, &r).unwrap();
        let tower = derived_tower(&z, &r, 2).unwrap();
        prop_assert_eq!(&binomial_product(&alg, &r, 2).unwrap(), &tower[2]);
        prop_assert!(verify_identity(&parity_shift(&tower[2]), IdentityKind::OddZinbiel).holds());
    }

    #[test]
    fn grassmann_unital_odd_family(a in small(), b in small(), c in small(), d in small()) {
        let alg = SuperAlgebra::parse(&read("grassmann_unital.alg")).unwrap();
        let src = format!("parity odd\n1 3 {a}\n1 4 {b}\n3 2 {c}\n4 2 {d}\n");
        let r = GradedOperator::parse(&src, 2, 2).unwrap();
        prop_assert!(is_rota_baxter(&alg, &r).unwrap().holds());
        let star = derived_product(&alg, &r).unwrap();
        prop_assert!(verify_identity(&star, IdentityKind::OddZinbiel).holds());
        prop_assert!(verify_identity(&parity_unshift(&star), IdentityKind::SuperZinbiel).holds());
    }
}
