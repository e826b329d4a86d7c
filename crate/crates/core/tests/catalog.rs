use zinbiel_core::graded::Rational;
use zinbiel_core::superalgebra::{catalog, check_algebra, lookup, verify_catalog, CatalogOptions, SuperAlgebra};

#[test]
fn full_catalog_reports_only_the_odd_square_jacobi_failure() {
    let report = verify_catalog(&catalog(), &CatalogOptions::default());
    // 14 single algebras plus 3 families at 5 samples each
    assert_eq!(report.rows.len(), 29);
    assert!(report.rows.iter().all(|r| r.anti_commutative && r.tortkara));
    assert!(report.rows.iter().all(|r| r.envelope_tortkara == Some(true)));
    assert_eq!(report.mismatches, vec!["T^2_{1|2}: Lie is false, expected true".to_string()]);
}

#[test]
fn flipped_flag_is_reported() {
    let mut entry = lookup("T⁸_{2|1}").unwrap();
    let alg = entry.algebra(None).unwrap();
    assert!(check_algebra(&entry, None, &alg, None).mismatches().is_empty());
    entry.is_lie = true;
    let row = check_algebra(&entry, None, &alg, None);
    assert_eq!(row.mismatches(), vec!["T^8_{2|1}: Lie is false, expected true".to_string()]);
}

#[test]
fn lie_but_not_tortkara_algebra_is_caught_directly_and_through_its_envelope() {
    // sl2 with h, e, f
    let sl2 = SuperAlgebra::parse(
        "dims 3 0\n1 2 2 2\n2 1 2 -2\n1 3 3 -2\n3 1 3 2\n2 3 1 1\n3 2 1 -1\n",
    )
    .unwrap();
    let entry = lookup("T¹_{2|1}").unwrap();
    let row = check_algebra(&entry, None, &sl2, Some(3));
    assert!(row.anti_commutative && row.lie && !row.tortkara);
    assert_eq!(row.envelope_tortkara, Some(false));
    let found = row.mismatches();
    assert!(found.iter().any(|m| m.contains("super Tortkara identity fails")));
    assert!(found.iter().any(|m| m.contains("Grassmann envelope is not Tortkara")));
}

#[test]
fn family_samples_are_exact() {
    let t9 = lookup("T⁹_{2|1}").unwrap();
    let a = t9.algebra(Some(&Rational::new(3, 7))).unwrap();
    assert_eq!(a.constant(0, 1, 1), Rational::new(3, 7));
    assert!(t9.algebra(None).is_err());
}
