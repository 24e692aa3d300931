//! The signed Boolean-cube sum of a polynomial, computed two independent
//! ways: brute-force vertex evaluation, and extraction of the full-support
//! coefficient after multilinear reduction. The two must always agree; the
//! cross-check is a test hook throughout the crate.

use crate::error::{domain, resource, Result};
use crate::fp::{FpContext, FpElement};
use crate::poly::{Monomial, Polynomial};

/// Largest variable count accepted by the evaluation route (2^n vertices).
pub const MAX_EVAL_VARS: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IntegralMethod {
    Evaluation,
    CoefficientExtraction,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CubeIntegralResult {
    pub value: FpElement,
    pub method: IntegralMethod,
    pub n: usize,
}

/// Sum of `(-1)^(x_1+...+x_n) f(x)` over all vertices of `{0,1}^n`, by
/// evaluating `f` at every vertex. The sign is carried as multiplication by
/// `p - 1`, so the whole computation stays inside the field.
pub fn signed_cube_sum_eval(f: &Polynomial) -> Result<FpElement> {
    let n = f.num_vars();
    if n > MAX_EVAL_VARS {
        return Err(resource(format!(
            "{n} variables means 2^{n} evaluations; the cap is {MAX_EVAL_VARS}"
        )));
    }
    let ctx = f.context();
    let minus_one = -ctx.one();
    let mut point = vec![ctx.zero(); n];
    let mut acc = ctx.zero();
    for mask in 0u64..(1u64 << n) {
        for (i, x) in point.iter_mut().enumerate() {
            *x = if mask >> i & 1 == 1 { ctx.one() } else { ctx.zero() };
        }
        let value = f.evaluate(&point);
        if mask.count_ones() % 2 == 0 {
            acc = acc + value;
        } else {
            acc = acc + minus_one * value;
        }
    }
    Ok(acc)
}

/// The same sum via coefficients: only the full-support multilinear monomial
/// survives, so the answer is `(-1)^n` times its coefficient after
/// multilinear reduction.
pub fn signed_cube_sum_coeff(f: &Polynomial) -> FpElement {
    let n = f.num_vars();
    let c = f.multilinear_reduce().coefficient_of(&Monomial::all_ones(n));
    if n % 2 == 0 {
        c
    } else {
        -c
    }
}

pub fn signed_cube_sum(f: &Polynomial, method: IntegralMethod) -> Result<CubeIntegralResult> {
    let value = match method {
        IntegralMethod::Evaluation => signed_cube_sum_eval(f)?,
        IntegralMethod::CoefficientExtraction => signed_cube_sum_coeff(f),
    };
    Ok(CubeIntegralResult {
        value,
        method,
        n: f.num_vars(),
    })
}

/// Diagnostic for the factorization that kills monomials missing a variable:
/// returns whether the multilinear monomial omits at least one variable, and
/// for `n <= 10` asserts by evaluation that its signed cube sum is then zero.
pub fn missing_variable_vanishes(ctx: &FpContext, m: &Monomial) -> Result<bool> {
    if !m.is_multilinear() {
        return Err(domain("expected a multilinear monomial"));
    }
    let missing = !m.has_full_support();
    if m.num_vars() <= 10 {
        let poly = Polynomial::from_terms(*ctx, m.num_vars(), vec![(m.clone(), ctx.one())])?;
        let sum = signed_cube_sum_eval(&poly)?;
        if missing {
            assert!(sum.is_zero(), "signed sum of {m} should vanish");
        } else {
            assert!(!sum.is_zero(), "full-support sum should be +-1");
        }
    }
    Ok(missing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::LinearForm;

    fn ctx(p: u32) -> FpContext {
        FpContext::new(p).unwrap()
    }

    #[test]
    fn full_support_monomial_integrates_to_signed_coefficient() {
        for p in [3u32, 7] {
            let c = ctx(p);
            let f =
                Polynomial::from_terms(c, 2, vec![(Monomial::all_ones(2), c.one())]).unwrap();
            assert_eq!(signed_cube_sum_eval(&f).unwrap().value(), 1);
            let g =
                Polynomial::from_terms(c, 3, vec![(Monomial::all_ones(3), c.element(2))]).unwrap();
            // (-1)^3 * 2
            assert_eq!(signed_cube_sum_eval(&g).unwrap(), -c.element(2));
        }
    }

    #[test]
    fn missing_variable_and_constants_vanish() {
        let c = ctx(5);
        let f = Polynomial::from_terms(c, 2, vec![(Monomial::new(vec![1, 0]), c.one())]).unwrap();
        assert!(signed_cube_sum_eval(&f).unwrap().is_zero());
        let one = Polynomial::one(c, 3);
        assert!(signed_cube_sum_eval(&one).unwrap().is_zero());
    }

    #[test]
    fn coefficient_route_examples() {
        let c = ctx(7);
        let f = Polynomial::from_terms(c, 2, vec![(Monomial::new(vec![2, 1]), c.element(5))])
            .unwrap();
        assert_eq!(signed_cube_sum_coeff(&f).value(), 5);
        let g = LinearForm::from_values(c, &[1, 1]).unwrap().polynomial();
        assert!(signed_cube_sum_coeff(&g).is_zero());
    }

    #[test]
    fn methods_agree_on_form_powers() {
        for p in [3u32, 5, 7] {
            let c = ctx(p);
            let form = LinearForm::from_values(c, &[1, 2, 1, 3]).unwrap();
            for e in 0..=(2 * (p - 1)).min(6) {
                let f = crate::poly::expand_power(&form, e).unwrap();
                assert_eq!(
                    signed_cube_sum_eval(&f).unwrap(),
                    signed_cube_sum_coeff(&f),
                    "p={p} e={e}"
                );
            }
        }
    }

    #[test]
    fn missing_variable_diagnostic() {
        let c = ctx(5);
        assert!(missing_variable_vanishes(&c, &Monomial::new(vec![1, 0, 1])).unwrap());
        assert!(!missing_variable_vanishes(&c, &Monomial::all_ones(3)).unwrap());
        assert!(missing_variable_vanishes(&c, &Monomial::new(vec![0])).unwrap());
        assert!(missing_variable_vanishes(&c, &Monomial::new(vec![2, 1])).is_err());
    }

    #[test]
    fn eval_handles_the_largest_polynomial_arity() {
        // The polynomial type caps out below MAX_EVAL_VARS, so the vertex
        // route accepts every representable arity.
        let c = ctx(3);
        let f = Polynomial::one(c, crate::poly::MAX_VARS);
        assert!(signed_cube_sum_eval(&f).unwrap().is_zero());
    }

    #[test]
    fn cube_sum_wrapper_reports_method() {
        let c = ctx(3);
        let f = Polynomial::one(c, 2);
        let r = signed_cube_sum(&f, IntegralMethod::Evaluation).unwrap();
        assert_eq!(r.method, IntegralMethod::Evaluation);
        assert_eq!(r.n, 2);
        assert!(r.value.is_zero());
    }
}
