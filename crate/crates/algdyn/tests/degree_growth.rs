//! Cross-module behavior: induced maps composed, measured and compared with
//! the closed-form degree machinery.

use num_bigint::BigInt;

use algdyn::algebra::{quotient_algebra, split_algebra};
use algdyn::degrees::{
    asymptotic_check, brute_force_degrees, theorem_b_predict, AsymptoticConfig, DegreeSequence,
    Provenance, DEFAULT_TERM_BUDGET,
};
use algdyn::exactnum::{IntMatrix, UniPoly};
use algdyn::induced::{induce_monomial, induce_univariate, MonomialSpec, UniRationalFunction};

fn dual_numbers() -> algdyn::algebra::Algebra {
    quotient_algebra(&UniPoly::from_i64_coeffs(&[0, 0, 1]), 't').unwrap()
}

fn seq(values: &[u32]) -> DegreeSequence {
    DegreeSequence {
        values: values.iter().map(|&v| BigInt::from(v)).collect(),
        p: 1,
        provenance: Provenance::Formula,
        truncated: false,
    }
}

#[test]
fn squaring_iterates_on_the_line() {
    let line = split_algebra(1).unwrap();
    let f = line.squaring_map().unwrap();
    let s = brute_force_degrees(&f, 3, DEFAULT_TERM_BUDGET).unwrap();
    assert_eq!(s.values, seq(&[2, 4, 8]).values);
}

#[test]
fn squaring_iterates_on_dual_numbers() {
    let v = dual_numbers();
    let phi = UniRationalFunction::from_poly(UniPoly::from_i64_coeffs(&[0, 0, 1]));
    let f = induce_univariate(&v, &phi).unwrap();
    let s = brute_force_degrees(&f, 4, DEFAULT_TERM_BUDGET).unwrap();
    assert_eq!(s.values, seq(&[2, 4, 8, 16]).values);
}

#[test]
fn classical_monomial_degrees_match_exterior_norms_up_to_constants() {
    // (x, y) ↦ (x·y, x): measured degrees 2, 3, 5, 8 against ‖∧¹Aⁿ‖
    let line = split_algebra(1).unwrap();
    let a = IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
    let f = induce_monomial(&MonomialSpec::new(a.clone(), line).unwrap()).unwrap();
    let s = brute_force_degrees(&f, 4, DEFAULT_TERM_BUDGET).unwrap();
    assert_eq!(s.values, seq(&[2, 3, 5, 8]).values);

    let predicted = theorem_b_predict(&a, 1, 1, 1, 4).unwrap();
    let out = asymptotic_check(&s, &predicted, &AsymptoticConfig::default()).unwrap();
    assert!(out.pass, "outcome: {out:?}");
}

#[test]
fn univariate_iterates_agree_with_composed_maps() {
    // f_φ^n and f_{φ^n} have the same first degree; rational φ included
    let v = dual_numbers();
    let phi = UniRationalFunction::new(
        UniPoly::from_i64_coeffs(&[1, 0, 1]),
        UniPoly::from_i64_coeffs(&[-2, 1]),
    )
    .unwrap();
    let f = induce_univariate(&v, &phi).unwrap();
    let mut g = f.clone();
    for n in 2..=3 {
        g = f.compose(&g).unwrap();
        let direct = induce_univariate(&v, &phi.iterate(n).unwrap()).unwrap();
        assert_eq!(g.map_degree().unwrap(), direct.map_degree().unwrap());
    }
}

#[test]
fn monomial_composition_matches_matrix_product() {
    // F_A ∘ F_B = F_{A·B} as reduced rational maps
    let v = dual_numbers();
    let a = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
    let b = IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
    let fa = induce_monomial(&MonomialSpec::new(a.clone(), v.clone()).unwrap()).unwrap();
    let fb = induce_monomial(&MonomialSpec::new(b.clone(), v.clone()).unwrap()).unwrap();
    let ab = a.mul(&b).unwrap();
    let fab = induce_monomial(&MonomialSpec::new(ab, v).unwrap()).unwrap();
    assert_eq!(fa.compose(&fb).unwrap(), fab);
}

#[test]
fn monomial_composition_with_inverses() {
    // same identity when one factor carries negative exponents
    let line = split_algebra(1).unwrap();
    let a = IntMatrix::from_rows(&[vec![1, 1], vec![0, -1]]).unwrap();
    let b = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
    let fa = induce_monomial(&MonomialSpec::new(a.clone(), line.clone()).unwrap()).unwrap();
    let fb = induce_monomial(&MonomialSpec::new(b.clone(), line.clone()).unwrap()).unwrap();
    let fab = induce_monomial(&MonomialSpec::new(a.mul(&b).unwrap(), line).unwrap()).unwrap();
    assert_eq!(fa.compose(&fb).unwrap(), fab);
}

#[test]
fn reduced_window_collapses_when_k_equals_m() {
    // with k = m the window is the single index p: plain exterior norms
    let a = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
    for p in 0..=2 {
        let s = theorem_b_predict(&a, 1, 1, p, 4).unwrap();
        let direct: Vec<BigInt> = (1..=4)
            .map(|n| {
                let norm = a.exterior_power(p).unwrap().pow(n).norm_max();
                if norm > BigInt::from(1) {
                    norm
                } else {
                    BigInt::from(1)
                }
            })
            .collect();
        assert_eq!(s.values, direct);
    }
}

#[test]
fn homogenized_components_stay_coprime() {
    let v = dual_numbers();
    let phi = UniRationalFunction::new(
        UniPoly::from_i64_coeffs(&[1, 0, 1]),
        UniPoly::from_i64_coeffs(&[-2, 1]),
    )
    .unwrap();
    let f = induce_univariate(&v, &phi).unwrap();
    let mut g = f.clone();
    for _ in 0..2 {
        let proj = g.homogenize_reduce().unwrap();
        assert!(proj.components_coprime());
        g = f.compose(&g).unwrap();
    }
}

#[test]
fn brute_force_respects_term_budget() {
    let line = split_algebra(1).unwrap();
    let f = line.squaring_map().unwrap();
    // a budget of zero terms stops after the first degree
    let s = brute_force_degrees(&f, 6, 0).unwrap();
    assert!(s.truncated);
    assert_eq!(s.values.len(), 1);
}
