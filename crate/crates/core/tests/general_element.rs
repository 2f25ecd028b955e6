//! Golden tests: the computed general elements against the printed component
//! formulas for valences 2, 4 and 5.

use ktinv::killing_space::{killing_check, KillingSpace, SymTensor};
use ktinv::Poly;

mod common;
use common::{golden_mismatch, K4, K5, MKT};

fn check_golden(n: usize, printed: &[&str]) {
    if let Some(msg) = golden_mismatch(n, printed) {
        panic!("{msg}");
    }
}

#[test]
fn valence_two_matrix_form() {
    check_golden(2, &MKT);
}

#[test]
fn valence_two_first_component_renders_canonically() {
    let space = KillingSpace::new(2).unwrap();
    assert_eq!(space.general.component(2).to_string(), "x^2*a5 + 2*x*a3 + a0");
}

#[test]
fn valence_four() {
    check_golden(4, &K4);
}

#[test]
fn valence_five() {
    check_golden(5, &K5);
}

#[test]
fn printed_valence_five_misprint() {
    // Taken literally, the printed middle component has a1_4*x^3, which
    // breaks the degree bound (x-degree at most 2 there) and the Killing
    // equation.
    let space = KillingSpace::new(5).unwrap();
    let literal = K5[3].replace("a1_4*t^3", "a1_4*x^3");
    let comps: Vec<Poly> = K5
        .iter()
        .rev()
        .enumerate()
        .map(|(ones, text)| Poly::parse(&space.table, if ones == 2 { &literal } else { text }).unwrap())
        .collect();
    let tensor = SymTensor::new(comps).unwrap();
    assert!(!killing_check(&tensor));
    assert!(space.coordinates(&tensor).is_err());
}

#[test]
fn general_elements_are_killing() {
    for n in 1..=8 {
        let space = KillingSpace::new(n).unwrap();
        assert!(killing_check(&space.general), "valence {n}");
    }
}

#[test]
fn valence_one_is_translations_plus_boost() {
    // a_T T + a_X X + a_H H with a_T = a1_0, a_X = b1_0, a_H = a1_1
    let space = KillingSpace::new(1).unwrap();
    let p = |s: &str| Poly::parse(&space.table, s).unwrap();
    assert_eq!(space.general.component(1), &p("a1_0 + a1_1*x"));
    assert_eq!(space.general.component(0), &p("b1_0 + a1_1*t"));
}
