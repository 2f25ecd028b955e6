//! Published reference data shared by the integration tests.
#![allow(dead_code)]

use ktinv::killing_space::KillingSpace;
use ktinv::Poly;

/// Valence-2 components, listed from all-ones down to all-twos.
pub const MKT: [&str; 3] = ["a0 + 2*a3*x + a5*x^2", "a1 + a3*t + a4*x + a5*t*x", "a2 + 2*a4*t + a5*t^2"];

pub const K4: [&str; 5] = [
    "a1_0 + 4*a1_1*x + 6*a1_2*x^2 + 4*a1_3*x^3 + a1_4*x^4",
    "(a2_0 + 3*a2_1*x + 3*a2_2*x^2 + b1_3*x^3) + t*(a1_1 + 3*a1_2*x + 3*a1_3*x^2 + a1_4*x^3)",
    "(a3_0 + 2*b2_1*x + b1_2*x^2) + 2*t*(a2_1 + 2*a2_2*x + b1_3*x^2) + t^2*(a1_2 + 2*a1_3*x + a1_4*x^2)",
    "(b2_0 + 3*b2_1*t + 3*a2_2*t^2 + a1_3*t^3) + x*(b1_1 + 3*b1_2*t + 3*b1_3*t^2 + a1_4*t^3)",
    "b1_0 + 4*b1_1*t + 6*b1_2*t^2 + 4*b1_3*t^3 + a1_4*t^4",
];

/// Valence-5 components as printed, except that the middle component's
/// `a1_4*x^3` term is read as `a1_4*t^3` (see `printed_valence_five_misprint`).
pub const K5: [&str; 6] = [
    "a1_0 + 5*a1_1*x + 10*a1_2*x^2 + 10*a1_3*x^3 + 5*a1_4*x^4 + a1_5*x^5",
    "(a2_0 + 4*a2_1*x + 6*a2_2*x^2 + 4*a2_3*x^3 + b1_4*x^4) + t*(a1_1 + 4*a1_2*x + 6*a1_3*x^2 + 4*a1_4*x^3 + a1_5*x^4)",
    "(a3_0 + 3*a3_1*x + 3*b2_2*x^2 + b1_3*x^3) + 2*t*(a2_1 + 3*a2_2*x + 3*a2_3*x^2 + b1_4*x^3) + t^2*(a1_2 + 3*a1_3*x + 3*a1_4*x^2 + a1_5*x^3)",
    "(b3_0 + 3*a3_1*t + 3*a2_2*t^2 + a1_3*t^3) + 2*x*(b2_1 + 3*b2_2*t + 3*a2_3*t^2 + a1_4*t^3) + x^2*(b1_2 + 3*b1_3*t + 3*b1_4*t^2 + a1_5*t^3)",
    "(b2_0 + 4*b2_1*t + 6*b2_2*t^2 + 4*a2_3*t^3 + a1_4*t^4) + x*(b1_1 + 4*b1_2*t + 6*b1_3*t^2 + 4*b1_4*t^3 + a1_5*t^4)",
    "b1_0 + 5*b1_1*t + 10*b1_2*t^2 + 10*b1_3*t^3 + 5*b1_4*t^4 + a1_5*t^5",
];

pub const DELTA: [&str; 3] = [
    "a5",
    "(a0 - a2)*a5 - a3^2 + a4^2",
    "(a3^2 + a4^2 - a5*(a0 + a2))^2 - 4*(a5*a1 - a3*a4)^2",
];

/// Compares rendered components against printed ones (all-ones first).
pub fn golden_mismatch(n: usize, printed: &[&str]) -> Option<String> {
    let space = KillingSpace::new(n).unwrap();
    if printed.len() != n + 1 {
        return Some(format!("valence {n}: {} printed components", printed.len()));
    }
    for (k, text) in printed.iter().enumerate() {
        let ones = n - k;
        let expected = Poly::parse(&space.table, text).unwrap().to_string();
        let got = space.general.component(ones).to_string();
        if got != expected {
            return Some(format!("valence {n}, component with {ones} ones: {got} != {expected}"));
        }
    }
    None
}
