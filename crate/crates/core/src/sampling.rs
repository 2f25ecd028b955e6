//! Seeded random rationals. Every consumer derives an independent ChaCha
//! stream per trial from `(seed, stream)`, so results do not depend on the
//! order in which trials run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ratpoly::{rat, Rational};

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `p/q` with `p ∈ [-9, 9]`, `q ∈ [1, 9]`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

/// `p/q` with `p, q ∈ [1, 9]`.
pub fn random_positive_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(1..=9), rng.gen_range(1..=9))
}

pub fn random_point(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_rational(rng)).collect()
}

/// Like [`random_point`] but with every coordinate nonzero, which keeps
/// samples off the coordinate hyperplanes where invariants often degenerate.
pub fn random_generic_point(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|_| {
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            rat(sign * rng.gen_range(1..=9), rng.gen_range(1..=9))
        })
        .collect()
}
