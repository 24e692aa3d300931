//! Property tests pitting the sparse implementations against independent
//! brute-force oracles: dense-array polynomial multiplication, exhaustive
//! subset enumeration for the subset-sum DP, and cross-method agreement for
//! the signed cube sum.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use zerosum_core::fp::{FpContext, FpElement, FpVector2};
use zerosum_core::integral::{signed_cube_sum_coeff, signed_cube_sum_eval};
use zerosum_core::poly::{expand_power, LinearForm, Monomial, Polynomial};
use zerosum_core::zerosum::{
    find_zero_sum_subset, is_zero_sum_free, sigma_sets, witness_sums_to_zero, GroupElem,
};

fn ctx(p: u32) -> FpContext {
    FpContext::new(p).unwrap()
}

/// Dense-array polynomial: coefficients indexed by mixed-radix exponent
/// vectors. Multiplication is the full convolution over integer indices,
/// entirely independent of the sparse map representation.
#[derive(Clone)]
struct DenseOracle {
    n: usize,
    stride: usize,
    p: u64,
    coeffs: Vec<u64>,
}

impl DenseOracle {
    fn from_poly(f: &Polynomial, stride: usize) -> DenseOracle {
        let n = f.num_vars();
        let mut coeffs = vec![0u64; stride.pow(n as u32)];
        for (m, c) in f.terms() {
            let mut idx = 0usize;
            for &e in m.exponents().iter().rev() {
                assert!((e as usize) < stride);
                idx = idx * stride + e as usize;
            }
            coeffs[idx] = c.value() as u64;
        }
        DenseOracle {
            n,
            stride,
            p: f.modulus() as u64,
            coeffs,
        }
    }

    fn decode(&self, mut idx: usize) -> Vec<u8> {
        let mut exps = vec![0u8; self.n];
        for e in exps.iter_mut() {
            *e = (idx % self.stride) as u8;
            idx /= self.stride;
        }
        exps
    }

    fn multiply(&self, other: &DenseOracle) -> DenseOracle {
        assert_eq!(self.n, other.n);
        let stride = self.stride + other.stride - 1;
        let mut out = vec![0u64; stride.pow(self.n as u32)];
        for (ia, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            let ea = self.decode(ia);
            for (ib, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let eb = other.decode(ib);
                let mut idx = 0usize;
                for k in (0..self.n).rev() {
                    idx = idx * stride + ea[k] as usize + eb[k] as usize;
                }
                out[idx] = (out[idx] + ca * cb) % self.p;
            }
        }
        DenseOracle {
            n: self.n,
            stride,
            p: self.p,
            coeffs: out,
        }
    }

    fn to_terms(&self) -> BTreeMap<Vec<u8>, u32> {
        let mut out = BTreeMap::new();
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                out.insert(self.decode(idx), c as u32);
            }
        }
        out
    }
}

fn sparse_terms(f: &Polynomial) -> BTreeMap<Vec<u8>, u32> {
    f.terms()
        .map(|(m, c)| (m.exponents().to_vec(), c.value()))
        .collect()
}

/// Random sparse polynomial with every exponent below `exp_cap`.
fn arb_poly(p: u32, n: usize, exp_cap: u8, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0..exp_cap, n), 0..p);
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        let c = ctx(p);
        Polynomial::from_terms(
            c,
            n,
            terms
                .into_iter()
                .map(|(exps, coeff)| (Monomial::new(exps), c.element(coeff as i64))),
        )
        .unwrap()
    })
}

fn arb_prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![3u32, 5, 7, 11, 13])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_matches_dense_oracle_three_vars(
        p in arb_prime(),
        a in arb_poly(13, 3, 7, 10),
        b in arb_poly(13, 3, 7, 10),
    ) {
        // Rebuild over the sampled prime so coefficients stay in range.
        let c = ctx(p);
        let a = Polynomial::from_terms(c, 3, a.terms().map(|(m, v)| (m.clone(), c.element(v.value() as i64)))).unwrap();
        let b = Polynomial::from_terms(c, 3, b.terms().map(|(m, v)| (m.clone(), c.element(v.value() as i64)))).unwrap();
        let sparse = a.multiply(&b).unwrap();
        let dense = DenseOracle::from_poly(&a, 7).multiply(&DenseOracle::from_poly(&b, 7));
        prop_assert_eq!(sparse_terms(&sparse), dense.to_terms());
    }

    #[test]
    fn multiplication_matches_dense_oracle_six_vars(
        p in arb_prime(),
        seed_a in arb_poly(13, 6, 3, 12),
        seed_b in arb_poly(13, 6, 3, 12),
    ) {
        let c = ctx(p);
        let a = Polynomial::from_terms(c, 6, seed_a.terms().map(|(m, v)| (m.clone(), c.element(v.value() as i64)))).unwrap();
        let b = Polynomial::from_terms(c, 6, seed_b.terms().map(|(m, v)| (m.clone(), c.element(v.value() as i64)))).unwrap();
        let sparse = a.multiply(&b).unwrap();
        let dense = DenseOracle::from_poly(&a, 3).multiply(&DenseOracle::from_poly(&b, 3));
        prop_assert_eq!(sparse_terms(&sparse), dense.to_terms());
    }

    #[test]
    fn ring_laws(
        a in arb_poly(7, 6, 3, 8),
        b in arb_poly(7, 6, 3, 8),
        c in arb_poly(7, 6, 3, 8),
    ) {
        // Commutativity and associativity of multiplication.
        prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
        prop_assert_eq!(
            a.multiply(&b).unwrap().multiply(&c).unwrap(),
            a.multiply(&b.multiply(&c).unwrap()).unwrap()
        );
        // Distributivity.
        prop_assert_eq!(
            a.multiply(&b.add(&c).unwrap()).unwrap(),
            a.multiply(&b).unwrap().add(&a.multiply(&c).unwrap()).unwrap()
        );
        // Additive inverse.
        prop_assert!(a.add(&a.neg()).unwrap().is_zero());
        // Degree bound, with equality over a field when both factors are nonzero.
        let prod = a.multiply(&b).unwrap();
        match (a.total_degree(), b.total_degree()) {
            (Some(da), Some(db)) => prop_assert_eq!(prod.total_degree(), Some(da + db)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn expansion_matches_repeated_multiplication(
        p in arb_prime(),
        coeffs in prop::collection::vec(0i64..13, 1..5),
        e in 0u32..=8,
    ) {
        let c = ctx(p);
        let form = LinearForm::from_values(c, &coeffs).unwrap();
        prop_assume!(e <= 2 * (p - 1));
        let expanded = expand_power(&form, e).unwrap();
        let mut acc = Polynomial::one(c, coeffs.len());
        let poly = form.polynomial();
        for _ in 0..e {
            acc = acc.multiply(&poly).unwrap();
        }
        prop_assert_eq!(expanded, acc);
    }

    #[test]
    fn multilinear_reduction_agrees_on_vertices(
        p in arb_prime(),
        f in arb_poly(13, 5, 4, 10),
    ) {
        let c = ctx(p);
        let f = Polynomial::from_terms(c, 5, f.terms().map(|(m, v)| (m.clone(), c.element(v.value() as i64)))).unwrap();
        let reduced = f.multilinear_reduce();
        for mask in 0u32..(1 << 5) {
            let point: Vec<FpElement> =
                (0..5).map(|i| c.element((mask >> i & 1) as i64)).collect();
            prop_assert_eq!(f.evaluate(&point), reduced.evaluate(&point));
        }
    }

    #[test]
    fn integral_methods_agree(
        p in arb_prime(),
        f in arb_poly(13, 6, 4, 12),
    ) {
        let c = ctx(p);
        let f = Polynomial::from_terms(c, 6, f.terms().map(|(m, v)| (m.clone(), c.element(v.value() as i64)))).unwrap();
        prop_assert_eq!(signed_cube_sum_eval(&f).unwrap(), signed_cube_sum_coeff(&f));
    }

    #[test]
    fn integral_is_linear(
        f in arb_poly(7, 4, 3, 8),
        g in arb_poly(7, 4, 3, 8),
        s in 0i64..7,
        t in 0i64..7,
    ) {
        let c = ctx(7);
        let combo = f.scale(c.element(s)).add(&g.scale(c.element(t))).unwrap();
        let lhs = signed_cube_sum_eval(&combo).unwrap();
        let rhs = c.element(s) * signed_cube_sum_eval(&f).unwrap()
            + c.element(t) * signed_cube_sum_eval(&g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nonzero_leading_coefficient_forces_a_nonvanishing_vertex(
        p in arb_prime(),
        f in arb_poly(13, 4, 2, 8),
    ) {
        // Degree <= n and a nonzero coefficient on x1*...*xn force a nonzero
        // value somewhere on the cube; locate one constructively.
        let c = ctx(p);
        let n = 4;
        let f = Polynomial::from_terms(c, n, f.terms().map(|(m, v)| (m.clone(), c.element(v.value() as i64)))).unwrap();
        prop_assume!(f.total_degree().unwrap_or(0) <= n as u32);
        prop_assume!(!f.coefficient_of(&Monomial::all_ones(n)).is_zero());
        prop_assert!(!signed_cube_sum_eval(&f).unwrap().is_zero());
        let mut witness_vertex = None;
        for mask in 0u32..(1 << n) {
            let point: Vec<FpElement> =
                (0..n).map(|i| c.element((mask >> i & 1) as i64)).collect();
            if !f.evaluate(&point).is_zero() {
                witness_vertex = Some(mask);
                break;
            }
        }
        prop_assert!(witness_vertex.is_some());
    }
}

/// Exhaustive subset enumeration: sums of all `2^|A|` subsets.
fn brute_force_images<E: GroupElem>(
    c: &FpContext,
    a: &[E],
) -> (BTreeSet<usize>, BTreeSet<usize>, bool) {
    let mut sigma = BTreeSet::new();
    let mut star = BTreeSet::new();
    let mut zero_sum_exists = false;
    let group = zerosum_core::GroupContext::new(*c, E::KIND);
    for mask in 0u32..(1u32 << a.len()) {
        let mut acc = 0usize;
        for (i, e) in a.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acc = group.add(acc, e.to_index(c));
            }
        }
        sigma.insert(acc);
        if mask != 0 {
            star.insert(acc);
            if acc == 0 {
                zero_sum_exists = true;
            }
        }
    }
    (sigma, star, zero_sum_exists)
}

fn check_against_brute_force<E: GroupElem>(c: &FpContext, a: &[E]) {
    let (sigma, star, zero_sum_exists) = brute_force_images(c, a);
    let images = sigma_sets(c, a).unwrap();
    let got_sigma: BTreeSet<usize> = images.sigma.iter().map(|e| e.to_index(c)).collect();
    let got_star: BTreeSet<usize> = images.sigma_star.iter().map(|e| e.to_index(c)).collect();
    assert_eq!(got_sigma, sigma);
    assert_eq!(got_star, star);
    match find_zero_sum_subset(c, a) {
        Some(w) => {
            assert!(zero_sum_exists);
            assert!(witness_sums_to_zero(c, a, &w));
            assert!(!w.indices.is_empty());
            assert!(w.indices.windows(2).all(|x| x[0] < x[1]));
        }
        None => assert!(!zero_sum_exists),
    }
    assert_eq!(is_zero_sum_free(c, a), !zero_sum_exists);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dp_matches_brute_force_over_fp(
        p in prop::sample::select(vec![3u32, 5, 7]),
        picks in prop::collection::vec(0u32..7, 0..=12),
    ) {
        let c = ctx(p);
        // Deduplicate into a set of residues.
        let mut set: Vec<FpElement> = picks
            .into_iter()
            .map(|v| c.element(v as i64))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        set.truncate(12);
        check_against_brute_force(&c, &set);
    }

    #[test]
    fn dp_matches_brute_force_over_the_plane(
        picks in prop::collection::vec((0u32..3, 0u32..3), 0..=9),
    ) {
        let c = ctx(3);
        let set: Vec<FpVector2> = picks
            .into_iter()
            .map(|(x, y)| c.vector(x as i64, y as i64))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        check_against_brute_force(&c, &set);
    }

    #[test]
    fn subset_sum_images_are_monotone(
        vals in prop::collection::vec(0u32..7, 0..=10),
        keep in prop::collection::vec(any::<bool>(), 10),
    ) {
        let c = ctx(7);
        let b: Vec<FpElement> = vals
            .into_iter()
            .map(|v| c.element(v as i64))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let a: Vec<FpElement> = b
            .iter()
            .zip(keep.iter())
            .filter_map(|(e, &k)| k.then_some(*e))
            .collect();
        let ia = sigma_sets(&c, &a).unwrap();
        let ib = sigma_sets(&c, &b).unwrap();
        let star_a: BTreeSet<_> = ia.sigma_star.into_iter().collect();
        let star_b: BTreeSet<_> = ib.sigma_star.into_iter().collect();
        prop_assert!(star_a.is_subset(&star_b));
        // Zero-sum-freeness is downward closed.
        if is_zero_sum_free(&c, &b) {
            prop_assert!(is_zero_sum_free(&c, &a));
        }
    }
}
