//! Seeded generation of generic polynomials with small integer
//! coefficients. All randomness in the crate flows through ChaCha12 with
//! explicit seeds, so identical configurations reproduce identical runs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::cox::{monomial_basis, GradedPolynomial};
use crate::fan::{DivisorClass, Variety};
use crate::{rat, Rat};

pub const COEFF_BOUND: i64 = 100;

pub fn rng_from_seed(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Uniform nonzero integer in [-COEFF_BOUND, COEFF_BOUND].
pub fn nonzero_coeff(rng: &mut ChaCha12Rng) -> i64 {
    loop {
        let c = rng.gen_range(-COEFF_BOUND..=COEFF_BOUND);
        if c != 0 {
            return c;
        }
    }
}

pub fn random_rat(rng: &mut ChaCha12Rng) -> Rat {
    rat(nonzero_coeff(rng), 1)
}

/// A dense polynomial of the given degree: every monomial of the degree
/// appears, with a uniform nonzero coefficient.
pub fn dense_polynomial(
    variety: &Variety,
    alpha: &DivisorClass,
    rng: &mut ChaCha12Rng,
) -> GradedPolynomial {
    let terms: Vec<_> = monomial_basis(variety, alpha)
        .into_iter()
        .map(|m| (m, random_rat(rng)))
        .collect();
    GradedPolynomial::from_terms(variety, alpha.clone(), terms)
        .expect("basis monomials are homogeneous of the requested degree")
}

/// Dense polynomials of the given degrees, drawn from one stream.
pub fn dense_sequence(
    variety: &Variety,
    degrees: &[DivisorClass],
    rng: &mut ChaCha12Rng,
) -> Vec<GradedPolynomial> {
    degrees
        .iter()
        .map(|d| dense_polynomial(variety, d, rng))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::testfans::*;
    use num_traits::Zero;

    #[test]
    fn generation_is_deterministic() {
        let v = Variety::new(p3_fan()).unwrap();
        let alpha = v.scale_class(&v.ray_class(0), 3);
        let a = dense_polynomial(&v, &alpha, &mut rng_from_seed(7));
        let b = dense_polynomial(&v, &alpha, &mut rng_from_seed(7));
        assert_eq!(a, b);
        assert_eq!(a.n_terms(), 20);
        for (_, c) in a.terms() {
            assert!(!c.is_zero());
            assert!(c.denom() == &crate::Int::from(1));
        }
    }
}
