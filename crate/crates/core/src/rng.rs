//! Seeded randomness shared by the generators.

use rand::Rng;

use crate::Rational;

/// A positive rational with numerator and denominator drawn from `1..=100`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let n: i64 = rng.gen_range(1..=100);
    let d: i64 = rng.gen_range(1..=100);
    Rational::new(n.into(), d.into())
}
