//! Deterministic seeding for sampled surveys and random test inputs.
//!
//! Every sampled case is generated from `(seed, case index)` alone, so
//! sampled surveys can be partitioned across workers and resumed from a
//! checkpoint without replaying a shared generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fp::FpContext;
use crate::poly::{Monomial, Polynomial};

/// SplitMix64 finalizer.
fn mix(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A fresh generator for one sample index.
pub fn rng_for_sample(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(seed, index.wrapping_add(1)))
}

/// A random sparse polynomial: up to `max_terms` monomials of total degree at
/// most `max_degree` in exactly `n` variables, nonzero coefficients. Terms may
/// merge or cancel, so the result can have fewer terms or even be zero.
pub fn random_sparse_polynomial(
    ctx: &FpContext,
    rng: &mut impl Rng,
    n: usize,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    let p = ctx.modulus();
    let num_terms = rng.gen_range(1..=max_terms.max(1));
    let mut terms = Vec::with_capacity(num_terms);
    for _ in 0..num_terms {
        let degree = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u8; n];
        for _ in 0..degree {
            exps[rng.gen_range(0..n)] += 1;
        }
        let coeff = ctx.element(rng.gen_range(1..p) as i64);
        terms.push((Monomial::new(exps), coeff));
    }
    Polynomial::from_terms(*ctx, n, terms).expect("arity is consistent")
}

/// One fully seeded random-polynomial case: the variable count is drawn
/// first (1..=max_vars), then the polynomial.
pub fn random_polynomial_case(
    ctx: &FpContext,
    seed: u64,
    index: u64,
    max_vars: usize,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    let mut rng = rng_for_sample(seed, index);
    let n = rng.gen_range(1..=max_vars.max(1));
    random_sparse_polynomial(ctx, &mut rng, n, max_degree, max_terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_index_same_stream() {
        let mut a = rng_for_sample(7, 42);
        let mut b = rng_for_sample(7, 42);
        let mut c = rng_for_sample(7, 43);
        let (x, y, z): (u64, u64, u64) = (a.gen(), b.gen(), c.gen());
        assert_eq!(x, y);
        assert_ne!(x, z);
    }

    #[test]
    fn random_polynomials_are_well_formed() {
        let ctx = FpContext::new(7).unwrap();
        let mut rng = rng_for_sample(0, 0);
        for _ in 0..50 {
            let f = random_sparse_polynomial(&ctx, &mut rng, 4, 6, 8);
            assert_eq!(f.num_vars(), 4);
            if let Some(d) = f.total_degree() {
                assert!(d <= 6);
            }
            for (_, c) in f.terms() {
                assert!(!c.is_zero());
            }
        }
    }
}
