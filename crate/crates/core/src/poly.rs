//! Sparse multivariate polynomial arithmetic over `F_p`.
//!
//! Terms live in an ordered map keyed by graded-lexicographic monomial order,
//! so iteration (and therefore rendering and reports) is deterministic. Zero
//! coefficients are pruned after every operation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{domain, resource, Result};
use crate::fp::{FpContext, FpElement};

/// Maximum number of variables; enough for the largest gated prime
/// (`n = p + 1 = 14` at `p = 13`).
pub const MAX_VARS: usize = 16;

/// An exponent vector. Total degree first, then lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u8>,
}

impl Monomial {
    pub fn new(exps: Vec<u8>) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        Monomial { exps }
    }

    /// The constant monomial in `n` variables.
    pub fn constant(n: usize) -> Monomial {
        Monomial::new(vec![0; n])
    }

    /// The single variable `x_{i+1}`.
    pub fn variable(n: usize, i: usize) -> Monomial {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial::new(exps)
    }

    /// The product `x_1*...*x_n`.
    pub fn all_ones(n: usize) -> Monomial {
        Monomial::new(vec![1; n])
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_multilinear(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// True iff every variable appears with a positive exponent.
    pub fn has_full_support(&self) -> bool {
        self.exps.iter().all(|&e| e >= 1)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// `c_1*x_1 + ... + c_n*x_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearForm {
    ctx: FpContext,
    coeffs: Vec<FpElement>,
}

impl LinearForm {
    pub fn new(ctx: FpContext, coeffs: Vec<FpElement>) -> Result<LinearForm> {
        if coeffs.len() > MAX_VARS {
            return Err(resource(format!(
                "linear form has {} variables, maximum is {MAX_VARS}",
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| c.modulus() != ctx.modulus()) {
            return Err(domain("linear form coefficients must share the context modulus"));
        }
        Ok(LinearForm { ctx, coeffs })
    }

    pub fn from_values(ctx: FpContext, values: &[i64]) -> Result<LinearForm> {
        LinearForm::new(ctx, values.iter().map(|&v| ctx.element(v)).collect())
    }

    pub fn context(&self) -> FpContext {
        self.ctx
    }

    pub fn num_vars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[FpElement] {
        &self.coeffs
    }

    pub fn evaluate(&self, point: &[FpElement]) -> FpElement {
        assert_eq!(point.len(), self.coeffs.len());
        let mut acc = self.ctx.zero();
        for (c, x) in self.coeffs.iter().zip(point) {
            acc = acc + *c * *x;
        }
        acc
    }

    /// The form as a degree-one polynomial.
    pub fn polynomial(&self) -> Polynomial {
        let n = self.coeffs.len();
        let mut poly = Polynomial::zero(self.ctx, n);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly.terms.insert(Monomial::variable(n, i), c.value());
            }
        }
        poly
    }
}

/// A sparse polynomial over `F_p` in a fixed number of variables.
///
/// Invariants: no stored zero coefficients; every key has length `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    ctx: FpContext,
    n: usize,
    terms: BTreeMap<Monomial, u32>,
}

impl Polynomial {
    pub fn zero(ctx: FpContext, n: usize) -> Polynomial {
        assert!(n <= MAX_VARS, "too many variables");
        Polynomial {
            ctx,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: FpContext, n: usize, c: FpElement) -> Polynomial {
        let mut poly = Polynomial::zero(ctx, n);
        if !c.is_zero() {
            poly.terms.insert(Monomial::constant(n), c.value());
        }
        poly
    }

    pub fn one(ctx: FpContext, n: usize) -> Polynomial {
        Polynomial::constant(ctx, n, ctx.one())
    }

    pub fn variable(ctx: FpContext, n: usize, i: usize) -> Polynomial {
        assert!(i < n);
        let mut poly = Polynomial::zero(ctx, n);
        poly.terms.insert(Monomial::variable(n, i), 1);
        poly
    }

    pub fn from_terms<I>(ctx: FpContext, n: usize, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (Monomial, FpElement)>,
    {
        let mut poly = Polynomial::zero(ctx, n);
        for (m, c) in terms {
            if m.num_vars() != n {
                return Err(domain(format!(
                    "monomial has {} exponents, expected {n}",
                    m.num_vars()
                )));
            }
            if c.modulus() != ctx.modulus() {
                return Err(domain("coefficient modulus does not match the context"));
            }
            poly.add_term(&m, c.value());
        }
        Ok(poly)
    }

    fn add_term(&mut self, m: &Monomial, c: u32) {
        if c == 0 {
            return;
        }
        let p = self.ctx.modulus();
        match self.terms.get_mut(m) {
            Some(cur) => {
                let v = (*cur + c) % p;
                if v == 0 {
                    self.terms.remove(m);
                } else {
                    *cur = v;
                }
            }
            None => {
                self.terms.insert(m.clone(), c % p);
            }
        }
    }

    pub fn context(&self) -> FpContext {
        self.ctx
    }

    pub fn modulus(&self) -> u32 {
        self.ctx.modulus()
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FpElement)> + '_ {
        self.terms
            .iter()
            .map(move |(m, &c)| (m, self.ctx.element(c as i64)))
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(domain(format!(
                "variable count mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        if self.ctx.modulus() != other.ctx.modulus() {
            return Err(domain(format!(
                "modulus mismatch: {} vs {}",
                self.ctx.modulus(),
                other.ctx.modulus()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let p = self.ctx.modulus();
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = p - *c;
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, t: FpElement) -> Polynomial {
        assert_eq!(t.modulus(), self.ctx.modulus(), "mixed moduli");
        let p = self.ctx.modulus() as u64;
        let mut out = Polynomial::zero(self.ctx, self.n);
        if t.is_zero() {
            return out;
        }
        for (m, &c) in &self.terms {
            let v = (c as u64 * t.value() as u64 % p) as u32;
            if v != 0 {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    /// Distributive product, reduced and normalized.
    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Polynomial::zero(self.ctx, self.n);
        let p = self.ctx.modulus() as u64;
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let c = (ca as u64 * cb as u64 % p) as u32;
                if c != 0 {
                    out.add_term(&ma.mul(mb), c);
                }
            }
        }
        Ok(out)
    }

    /// The stored coefficient of `m`, or zero.
    pub fn coefficient_of(&self, m: &Monomial) -> FpElement {
        assert_eq!(m.num_vars(), self.n, "monomial arity mismatch");
        let c = self.terms.get(m).copied().unwrap_or(0);
        self.ctx.element(c as i64)
    }

    /// All stored monomials in which every variable has a positive exponent.
    pub fn full_support_monomials(&self) -> Vec<Monomial> {
        self.terms
            .keys()
            .filter(|m| m.has_full_support())
            .cloned()
            .collect()
    }

    /// The formal mixed first partial derivative in every variable.
    pub fn partial_derivative_all(&self) -> Polynomial {
        let p = self.ctx.modulus() as u64;
        let mut out = Polynomial::zero(self.ctx, self.n);
        for (m, &c) in &self.terms {
            if !m.has_full_support() {
                continue;
            }
            let mut coeff = c as u64;
            for &e in m.exponents() {
                coeff = coeff * e as u64 % p;
            }
            if coeff == 0 {
                continue;
            }
            let lowered = Monomial::new(m.exponents().iter().map(|&e| e - 1).collect());
            out.add_term(&lowered, coeff as u32);
        }
        out
    }

    /// Collapses every positive exponent to one and merges like terms. Agrees
    /// with the original pointwise on `{0,1}^n`.
    pub fn multilinear_reduce(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.ctx, self.n);
        for (m, &c) in &self.terms {
            let squashed = Monomial::new(m.exponents().iter().map(|&e| e.min(1)).collect());
            out.add_term(&squashed, c);
        }
        out
    }

    pub fn evaluate(&self, point: &[FpElement]) -> FpElement {
        assert_eq!(point.len(), self.n, "point arity mismatch");
        let mut acc = self.ctx.zero();
        for (m, c) in self.terms() {
            let mut term = c;
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    term = term * x.pow(e as u64);
                }
            }
            acc = acc + term;
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    /// Stable rendering: terms in descending graded-lex order, e.g.
    /// `2*x1^2*x3 + x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, &c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut pieces: Vec<String> = Vec::new();
            if c != 1 || m.degree() == 0 {
                pieces.push(c.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => pieces.push(format!("x{}", i + 1)),
                    _ => pieces.push(format!("x{}^{}", i + 1, e)),
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

/// `C(a, b) mod p` by Lucas reduction of base-`p` digits; each digit binomial
/// comes from factorials of arguments below `p`.
pub(crate) fn binomial_mod_p(p: u32, a: u64, b: u64) -> u32 {
    if b > a {
        return 0;
    }
    let pp = p as u64;
    let (mut a, mut b) = (a, b);
    let mut acc = 1u64;
    while a > 0 || b > 0 {
        let (ad, bd) = ((a % pp) as u32, (b % pp) as u32);
        if bd > ad {
            return 0;
        }
        acc = acc * small_binomial(p, ad, bd) as u64 % pp;
        if acc == 0 {
            return 0;
        }
        a /= pp;
        b /= pp;
    }
    acc as u32
}

/// `C(a, b) mod p` for `a, b < p`.
fn small_binomial(p: u32, a: u32, b: u32) -> u32 {
    debug_assert!(a < p && b <= a);
    let ctx = FpContext::new(p).expect("valid prime");
    let mut num = ctx.one();
    let mut den = ctx.one();
    for i in 0..b {
        num = num * ctx.element((a - i) as i64);
        den = den * ctx.element((i + 1) as i64);
    }
    (num * den.inverse().expect("nonzero factorial")).value()
}

/// `e! / (k_1! * ... * k_r!) mod p`, as a product of prefix binomials.
pub(crate) fn multinomial_mod_p(p: u32, parts: &[u32]) -> u32 {
    let pp = p as u64;
    let mut prefix = 0u64;
    let mut acc = 1u64;
    for &k in parts {
        prefix += k as u64;
        acc = acc * binomial_mod_p(p, prefix, k as u64) as u64 % pp;
        if acc == 0 {
            return 0;
        }
    }
    acc as u32
}

/// Multinomial expansion of `form^e`, coefficients reduced mod `p` and zero
/// terms dropped. Capped at `e <= 2(p-1)`.
pub fn expand_power(form: &LinearForm, e: u32) -> Result<Polynomial> {
    let ctx = form.context();
    let p = ctx.modulus();
    if e > 2 * (p - 1) {
        return Err(resource(format!(
            "exponent {e} exceeds the expansion cap 2(p-1) = {}",
            2 * (p - 1)
        )));
    }
    let n = form.num_vars();
    let mut out = Polynomial::zero(ctx, n);
    if e == 0 {
        return Ok(Polynomial::one(ctx, n));
    }
    let active: Vec<(usize, FpElement)> = form
        .coeffs()
        .iter()
        .copied()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    if active.is_empty() {
        return Ok(out); // the zero form to a positive power
    }

    // Distribute e among the active positions.
    let mut exps = vec![0u8; n];
    let mut parts: Vec<u32> = Vec::with_capacity(active.len());
    distribute(
        &active,
        0,
        e,
        &mut exps,
        &mut parts,
        &mut |exps, parts| {
            let mut coeff = multinomial_mod_p(p, parts) as u64;
            if coeff == 0 {
                return;
            }
            for (&(_, c), &k) in active.iter().zip(parts.iter()) {
                coeff = coeff * c.pow(k as u64).value() as u64 % p as u64;
            }
            if coeff != 0 {
                out.add_term(&Monomial::new(exps.to_vec()), coeff as u32);
            }
        },
    );
    Ok(out)
}

fn distribute(
    active: &[(usize, FpElement)],
    idx: usize,
    remaining: u32,
    exps: &mut [u8],
    parts: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u8], &[u32]),
) {
    if idx == active.len() - 1 {
        exps[active[idx].0] = remaining as u8;
        parts.push(remaining);
        emit(exps, parts);
        parts.pop();
        exps[active[idx].0] = 0;
        return;
    }
    for k in 0..=remaining {
        exps[active[idx].0] = k as u8;
        parts.push(k);
        distribute(active, idx + 1, remaining - k, exps, parts, emit);
        parts.pop();
    }
    exps[active[idx].0] = 0;
}

/// The elementary symmetric polynomial `e_k(values)` mod `p`, via the product
/// recurrence over `(t + v_i)`.
pub fn elementary_symmetric(ctx: &FpContext, values: &[FpElement], k: usize) -> FpElement {
    assert!(k <= values.len(), "k exceeds the number of values");
    let mut table: Vec<FpElement> = vec![ctx.zero(); k + 1];
    table[0] = ctx.one();
    for &v in values {
        assert_eq!(v.modulus(), ctx.modulus(), "mixed moduli");
        for j in (1..=k).rev() {
            table[j] = table[j] + table[j - 1] * v;
        }
    }
    table[k]
}
