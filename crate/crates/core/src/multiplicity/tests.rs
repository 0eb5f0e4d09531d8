use super::*;
use crate::brcomplex::tests::datum;

fn two_by_three() -> InputDatum {
    datum(&["x", "y"], &[], &[&["x", "y", "0"], &["0", "x", "y"]], &[])
}

#[test]
fn br_function_values() {
    let d = two_by_three();
    assert_eq!(br_function(&d, 0).unwrap(), 0);
    assert_eq!(br_function(&d, 1).unwrap(), 3);
    assert_eq!(br_function(&d, 2).unwrap(), 12);
    for nu in 1..=3 {
        assert_eq!(br_function_dense(&d, nu).unwrap(), br_function(&d, nu as i64).unwrap());
    }
}

#[test]
fn multiplicities() {
    let s = Sampling::default();
    let r = br_multiplicity(&two_by_three(), s).unwrap();
    assert_eq!((r.br, r.is_parameter, r.d), (3, true, 3));
    assert_eq!(r.br_poly.coeffs(), &[0, 3, 6, 3]);

    let d = datum(&["x", "y"], &[], &[&["x^2", "y^3"]], &[]);
    let r = br_multiplicity(&d, s).unwrap();
    assert_eq!((r.br, r.is_parameter), (6, true));

    let d = datum(&["x", "y"], &[], &[&["x", "y", "x*y"]], &[]);
    let r = br_multiplicity(&d, s).unwrap();
    assert_eq!((r.br, r.is_parameter), (1, false));

    let d = datum(&["x", "y"], &[], &[&["y"]], &[&["x"]]);
    let r = br_multiplicity(&d, s).unwrap();
    assert_eq!((r.br, r.is_parameter, r.d), (1, true, 1));
}

#[test]
fn koszul_polys() {
    let s = Sampling::default();
    let d = datum(&["x", "y"], &[], &[&["x^2", "y^3"]], &[]);
    assert_eq!(koszul_hilbert_poly(&d, 0, s).unwrap().coeffs(), &[6]);
    assert!(koszul_hilbert_poly(&d, 1, s).unwrap().coeffs().is_empty());
    assert_eq!(rho(&d, 0, -5, s).unwrap(), 6);
    let d = datum(&["x"], &[], &[&["x"]], &[]);
    assert_eq!(koszul_hilbert_poly(&d, 0, s).unwrap().coeffs(), &[1]);
    assert_eq!(rho(&d, 1, 7, s).unwrap(), 0);
}

#[test]
fn euler_characteristics() {
    let d = two_by_three();
    for nu in -2..=4 {
        assert_eq!(chi_b(&d, nu).unwrap(), 3, "nu = {nu}");
    }
    let d = datum(&["x", "y"], &[], &[&["x", "y", "x*y"]], &[]);
    assert_eq!(chi_b(&d, 0).unwrap(), 0);
    let d = datum(&["x", "y"], &[], &[&["x^2", "y^3"]], &[]);
    assert_eq!(chi_b(&d, 0).unwrap(), 6);
}

#[test]
fn identity_suite_small() {
    let s = Sampling::default();
    let d = two_by_three();
    let r = verify_identities(&d, (-2, 3), s, true).unwrap();
    assert!(r.all_pass, "{r:?}");
    assert_eq!(r.tserre_constant, Some(crate::report::Int(3)));
    let alt: i128 = [0i128, 1, 2]
        .iter()
        .map(|&j| if j % 2 == 0 { 1 } else { -1 } * r.sheaf_chi[j as usize].0)
        .sum();
    assert_eq!(alt, 3);

    let d = datum(&["x", "y"], &[], &[&["x", "y", "x*y"]], &[]);
    let r = verify_identities(&d, (-2, 4), s, false).unwrap();
    assert!(r.all_pass);
    assert_eq!(r.tserre_constant, Some(crate::report::Int(0)));
    assert!(!r.is_parameter);

    let d = datum(&["x", "y"], &[], &[&["y"]], &[&["x"]]);
    let r = verify_identities(&d, (-2, 2), s, true).unwrap();
    assert!(r.all_pass);
    assert_eq!(r.tserre_constant, Some(crate::report::Int(1)));
}

#[test]
fn serre_reduction() {
    let s = Sampling::default();
    let d = datum(&["x", "y"], &[], &[&["x^2", "y^3"]], &[]);
    let a = d.phi()[0].clone();
    let r = verify_serre(d.base(), &a, s).unwrap();
    assert_eq!((r.lengths.clone(), r.br.0, r.hilbert_samuel.0), (vec![6, 0, 0], 6, 6));
    assert!(r.all_pass);

    let d = datum(&["x", "y"], &[], &[&["x", "y", "x*y"]], &[]);
    let r = verify_serre(d.base(), &d.phi()[0], s).unwrap();
    assert_eq!((r.lengths.clone(), r.alternating_sum, r.expected.0), (vec![1, 1, 0, 0], 0, 0));
    assert!(r.all_pass);

    let d = datum(&["x", "y"], &[], &[&["x", "y"]], &[]);
    let r = verify_serre(d.base(), &d.phi()[0], s).unwrap();
    assert_eq!((r.lengths.clone(), r.br.0), (vec![1, 0, 0], 1));

    let d = datum(&["x", "y"], &[], &[&["x"]], &[]);
    assert_eq!(
        verify_serre(d.base(), &d.phi()[0], s).unwrap_err(),
        Error::NotIdealOfDefinition
    );
}

#[test]
fn grades() {
    let r = grade_report(&two_by_three()).unwrap();
    assert_eq!(r.grade, Some(2));
    assert!(r.all_pass, "{r:?}");
    let d = datum(&["x", "y"], &[], &[&["x", "0", "0"], &["0", "x", "0"]], &[]);
    let r = grade_report(&d).unwrap();
    assert_eq!(r.grade, Some(1));
    assert!(r.all_pass, "{r:?}");
    assert!(!r.rows[0].acyclic);
}

#[test]
fn missing_certificate() {
    let d = datum(&["x", "y"], &[], &[&["x", "0", "0"], &["0", "x", "0"]], &[]);
    assert_eq!(br_function(&d, 1).unwrap_err(), Error::CertificateMissing);
}
