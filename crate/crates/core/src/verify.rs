//! Direct computational verification of the zero-sum results: the vanishing
//! lemma for the product of the two form powers, the indicator polynomial
//! `P` and its companion `Q`, signed-sum proof traces over canonical covering
//! sets, exhaustive/sampled covering-set surveys, and the Olson-constant
//! comparison report.
//!
//! The signed sum of `P` is computed by Gray-code vertex evaluation of the
//! two linear forms, while the signed sum of `Q` comes from targeted
//! full-support coefficient extraction. The two routes are computationally
//! independent, which is what makes their agreement worth checking.

use crate::error::{resource, verification, Result};
use crate::fp::{canonicalize_covering_set, CanonicalSet, FpContext, FpElement, FpVector2};
use crate::poly::{binomial_mod_p, expand_power, LinearForm, Polynomial};
use crate::sampling::rng_for_sample;
use crate::zerosum::{
    find_zero_sum_subset, olson_constant, witness_sums_to_zero, GroupContext, GroupKind,
    OlsonResult, Witness,
};
use rand::Rng;

/// The two linear forms whose `(p-1)`-th powers multiply to the lemma
/// polynomial: `x_1 + ... + x_p` and `x_1 + 2*x_2 + ... + p*x_p + x_{p+1}`
/// (the `p*x_p` coefficient reduces to zero; it is kept literally and relies
/// on reduction).
pub fn lemma5_forms(ctx: &FpContext) -> (LinearForm, LinearForm) {
    let p = ctx.modulus() as usize;
    let n = p + 1;
    let mut c1 = vec![0i64; n];
    let mut c2 = vec![0i64; n];
    for j in 0..n {
        if j < p {
            c1[j] = 1;
        }
        c2[j] = (j + 1) as i64;
    }
    (
        LinearForm::from_values(*ctx, &c1).expect("within variable cap"),
        LinearForm::from_values(*ctx, &c2).expect("within variable cap"),
    )
}

/// The two forms attached to a canonical covering set: `sum a_i x_i` over the
/// first `p` coordinates, and `sum j*a_j x_j` over all `p + 1`.
pub fn canonical_forms(a: &CanonicalSet) -> (LinearForm, LinearForm) {
    let ctx = a.context();
    let p = ctx.modulus() as usize;
    let n = p + 1;
    let mut c1 = Vec::with_capacity(n);
    let mut c2 = Vec::with_capacity(n);
    for (j, &coeff) in a.coeffs().iter().enumerate() {
        c1.push(if j < p { coeff } else { ctx.zero() });
        c2.push(coeff * ctx.element((j + 1) as i64));
    }
    (
        LinearForm::new(ctx, c1).expect("within variable cap"),
        LinearForm::new(ctx, c2).expect("within variable cap"),
    )
}

/// Visits every full-support monomial of `form1^e * form2^e` along with its
/// coefficient mod `p`, without expanding the product. The coefficient of a
/// fixed monomial is summed over all ways to split it between the two
/// factors, with the remaining-budget binomial recurrence supplying the
/// multinomials.
pub(crate) fn for_each_full_support_coefficient(
    form1: &LinearForm,
    form2: &LinearForm,
    e: u32,
    emit: &mut impl FnMut(&[u8], u32),
) {
    assert_eq!(form1.num_vars(), form2.num_vars());
    let ctx = form1.context();
    let p = ctx.modulus();
    let n = form1.num_vars();
    let e = e as usize;
    let total = 2 * e;
    if total < n {
        return; // degree too small for full support
    }

    // Per-variable caps and power tables.
    let mut caps = vec![0usize; n];
    let mut pow1 = vec![vec![0u64; e + 1]; n];
    let mut pow2 = vec![vec![0u64; e + 1]; n];
    let mut in1 = vec![false; n];
    let mut in2 = vec![false; n];
    for j in 0..n {
        let c1 = form1.coeffs()[j];
        let c2 = form2.coeffs()[j];
        in1[j] = !c1.is_zero();
        in2[j] = !c2.is_zero();
        caps[j] = if in1[j] { e } else { 0 } + if in2[j] { e } else { 0 };
        for k in 0..=e {
            pow1[j][k] = c1.pow(k as u64).value() as u64;
            pow2[j][k] = c2.pow(k as u64).value() as u64;
        }
    }
    if caps.iter().any(|&c| c == 0) {
        return; // a variable in neither support can never appear
    }
    let binom: Vec<Vec<u64>> = (0..=e)
        .map(|a| (0..=e).map(|b| binomial_mod_p(p, a as u64, b as u64) as u64).collect())
        .collect();
    let suffix_cap: Vec<usize> = {
        let mut s = vec![0usize; n + 1];
        for j in (0..n).rev() {
            s[j] = s[j + 1] + caps[j];
        }
        s
    };

    // Split-count DP for one monomial: table[j][r1] = sum over splits of
    // c_j..c_{n-1} with form1-budget r1 (form2 budget is determined).
    let pp = p as u64;
    let mut table = vec![vec![0u64; e + 1]; n + 1];
    let mut exps = vec![0u8; n];

    // Enumerate compositions c_0..c_{n-1}, each >= 1, summing to 2e.
    fn compose(
        j: usize,
        remaining: usize,
        n: usize,
        caps: &[usize],
        suffix_cap: &[usize],
        exps: &mut [u8],
        emit_monomial: &mut impl FnMut(&mut [u8]),
    ) {
        if j == n {
            if remaining == 0 {
                emit_monomial(exps);
            }
            return;
        }
        let vars_left_after = n - j - 1;
        let max_here = caps[j].min(remaining.saturating_sub(vars_left_after));
        for c in 1..=max_here {
            if remaining - c > suffix_cap[j + 1] {
                continue;
            }
            exps[j] = c as u8;
            compose(j + 1, remaining - c, n, caps, suffix_cap, exps, emit_monomial);
        }
        exps[j] = 0;
    }

    compose(0, total, n, &caps, &suffix_cap, &mut exps, &mut |exps| {
        // Suffix degree sums for budget accounting.
        let mut suffix_deg = vec![0usize; n + 1];
        for j in (0..n).rev() {
            suffix_deg[j] = suffix_deg[j + 1] + exps[j] as usize;
        }
        table[n].iter_mut().for_each(|v| *v = 0);
        table[n][0] = 1;
        for j in (0..n).rev() {
            let c_j = exps[j] as usize;
            for r1 in 0..=e.min(suffix_deg[j]) {
                let r2 = suffix_deg[j] - r1;
                let mut acc = 0u64;
                if r2 <= e {
                    let u_min = c_j.saturating_sub(if in2[j] { c_j } else { 0 }).max(c_j.saturating_sub(r2));
                    let u_max = if in1[j] { c_j.min(r1) } else { 0 };
                    for u in u_min..=u_max.min(c_j) {
                        let v = c_j - u;
                        if v > r2 || (v > 0 && !in2[j]) || (u > 0 && !in1[j]) {
                            continue;
                        }
                        let w = binom[r1][u] * pow1[j][u] % pp * binom[r2][v] % pp * pow2[j][v]
                            % pp
                            * table[j + 1][r1 - u]
                            % pp;
                        acc = (acc + w) % pp;
                    }
                }
                table[j][r1] = acc;
            }
            for r1 in (e.min(suffix_deg[j]) + 1)..=e {
                table[j][r1] = 0;
            }
        }
        emit(exps, table[0][e] as u32);
    });
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Lemma5Route {
    FullExpansion,
    Derivative,
    Targeted,
}

impl Lemma5Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Lemma5Route::FullExpansion => "full-expansion",
            Lemma5Route::Derivative => "derivative",
            Lemma5Route::Targeted => "targeted-coefficients",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Lemma5Report {
    pub p: u32,
    pub route: Lemma5Route,
    pub ok: bool,
    /// Full-support monomials found with nonzero coefficient (expected 0).
    pub full_support_terms: u64,
    /// Monomial shapes examined (targeted route).
    pub coefficients_checked: u64,
    /// Term count of the expanded product (expansion routes).
    pub term_count: Option<u64>,
    pub derivative_is_zero: Option<bool>,
}

/// Builds the lemma polynomial for the context prime and certifies that no
/// monomial uses every variable. Full expansion and the derivative route are
/// gated to `p <= 7`; the targeted route reaches `p <= 13`.
pub fn verify_lemma5(ctx: &FpContext, route: Lemma5Route) -> Result<Lemma5Report> {
    let p = ctx.modulus();
    match route {
        Lemma5Route::FullExpansion | Lemma5Route::Derivative if p > 7 => {
            return Err(resource(format!(
                "full expansion is gated to p <= 7, got {p}; use the targeted route"
            )));
        }
        Lemma5Route::Targeted if p > 13 => {
            return Err(resource(format!(
                "targeted extraction is gated to p <= 13, got {p}"
            )));
        }
        _ => {}
    }
    let (l1, l2) = lemma5_forms(ctx);
    let mut report = Lemma5Report {
        p,
        route,
        ok: false,
        full_support_terms: 0,
        coefficients_checked: 0,
        term_count: None,
        derivative_is_zero: None,
    };
    match route {
        Lemma5Route::FullExpansion | Lemma5Route::Derivative => {
            let f = expand_power(&l1, p - 1)?.multiply(&expand_power(&l2, p - 1)?)?;
            report.term_count = Some(f.num_terms() as u64);
            report.full_support_terms = f.full_support_monomials().len() as u64;
            if route == Lemma5Route::Derivative {
                let g = f.partial_derivative_all();
                report.derivative_is_zero = Some(g.is_zero());
                report.ok = report.full_support_terms == 0 && g.is_zero();
            } else {
                report.ok = report.full_support_terms == 0;
            }
        }
        Lemma5Route::Targeted => {
            let mut checked = 0u64;
            let mut nonzero = 0u64;
            for_each_full_support_coefficient(&l1, &l2, p - 1, &mut |_exps, coeff| {
                checked += 1;
                if coeff != 0 {
                    nonzero += 1;
                }
            });
            report.coefficients_checked = checked;
            report.full_support_terms = nonzero;
            report.ok = nonzero == 0;
        }
    }
    Ok(report)
}

/// Expanded indicator polynomial
/// `P = (1 - (sum a_i x_i)^(p-1)) * (1 - (sum j a_j x_j)^(p-1))`.
/// On `{0,1}` points it is 1 exactly on subsets of the canonical set that
/// sum to zero. Expansion is gated to `p <= 7`; larger primes are served by
/// the evaluation route inside [`proof_trace`].
pub fn build_p(a: &CanonicalSet) -> Result<Polynomial> {
    let ctx = a.context();
    let p = ctx.modulus();
    check_expansion_gate(p)?;
    let n = p as usize + 1;
    let (l1, l2) = canonical_forms(a);
    let one = Polynomial::one(ctx, n);
    let f1 = one.sub(&expand_power(&l1, p - 1)?)?;
    let f2 = one.sub(&expand_power(&l2, p - 1)?)?;
    f1.multiply(&f2)
}

/// Expanded companion product `Q = (sum a_i x_i)^(p-1) * (sum j a_j x_j)^(p-1)`.
pub fn build_q(a: &CanonicalSet) -> Result<Polynomial> {
    let ctx = a.context();
    let p = ctx.modulus();
    check_expansion_gate(p)?;
    let (l1, l2) = canonical_forms(a);
    expand_power(&l1, p - 1)?.multiply(&expand_power(&l2, p - 1)?)
}

fn check_expansion_gate(p: u32) -> Result<()> {
    if p > 7 {
        return Err(resource(format!(
            "building the expanded product is gated to p <= 7, got {p}"
        )));
    }
    Ok(())
}

/// The record of one signed-sum verification over a canonical covering set.
///
/// Invariants (all asserted by [`proof_trace`]): the evaluation-route sum of
/// `P` equals the coefficient-route sum of `Q`, both are zero, the number of
/// even-cardinality zero-sum subsets (empty set included) equals the number
/// of odd-cardinality ones, and the witness is nonempty and re-sums to zero.
#[derive(Clone, Debug)]
pub struct ProofTrace {
    pub p: u32,
    pub coeffs: Vec<u32>,
    pub i_p: FpElement,
    pub i_q: FpElement,
    pub even_zero_sum_subsets: u64,
    pub odd_zero_sum_subsets: u64,
    pub witness: Witness,
}

/// Canonicalization happens first; see [`proof_trace`].
pub fn proof_trace_from_set(ctx: &FpContext, vectors: &[FpVector2]) -> Result<ProofTrace> {
    let canonical = canonicalize_covering_set(ctx, vectors)?;
    proof_trace(&canonical)
}

/// Runs the whole signed-sum argument on one canonical covering set: the
/// signed vertex sum of `P` (Gray-code incremental evaluation of the two
/// forms), the signed sum of `Q` (targeted coefficient extraction), the
/// zero-sum subset parity tally, and a concrete witness.
pub fn proof_trace(a: &CanonicalSet) -> Result<ProofTrace> {
    let ctx = a.context();
    let p = ctx.modulus();
    if p > 13 {
        return Err(resource(format!("proof traces are gated to p <= 13, got {p}")));
    }
    let n = p as usize + 1;
    let (l1, l2) = canonical_forms(a);
    let c1: Vec<u32> = l1.coeffs().iter().map(|c| c.value()).collect();
    let c2: Vec<u32> = l2.coeffs().iter().map(|c| c.value()).collect();

    // Gray-code walk over the vertices: each step flips one coordinate and
    // updates the two form accumulators.
    let minus_one = -ctx.one();
    let exp = p as u64 - 1;
    let mut v1 = 0u32;
    let mut v2 = 0u32;
    let mut pop = 0u32;
    let mut i_p = ctx.zero();
    let mut even = 0u64;
    let mut odd = 0u64;
    let mut visit = |v1: u32, v2: u32, pop: u32| {
        let u1 = ctx.element(v1 as i64).pow(exp);
        let u2 = ctx.element(v2 as i64).pow(exp);
        let p_val = (ctx.one() - u1) * (ctx.one() - u2);
        let zero_sum = v1 == 0 && v2 == 0;
        debug_assert_eq!(p_val.value() == 1, zero_sum);
        if pop % 2 == 0 {
            i_p = i_p + p_val;
            if zero_sum {
                even += 1;
            }
        } else {
            i_p = i_p + minus_one * p_val;
            if zero_sum {
                odd += 1;
            }
        }
    };
    visit(v1, v2, pop);
    for k in 1u64..(1u64 << n) {
        let b = k.trailing_zeros() as usize;
        let now_set = (k ^ (k >> 1)) >> b & 1 == 1;
        if now_set {
            v1 = (v1 + c1[b]) % p;
            v2 = (v2 + c2[b]) % p;
            pop += 1;
        } else {
            v1 = (v1 + p - c1[b]) % p;
            v2 = (v2 + p - c2[b]) % p;
            pop -= 1;
        }
        visit(v1, v2, pop);
    }

    // Coefficient route for Q: only full-support monomials survive the signed
    // sum, with global sign (-1)^n.
    let mut q_sum = ctx.zero();
    for_each_full_support_coefficient(&l1, &l2, p - 1, &mut |_exps, coeff| {
        q_sum = q_sum + ctx.element(coeff as i64);
    });
    let i_q = if n % 2 == 0 { q_sum } else { -q_sum };

    let vectors = a.vectors();
    let witness = find_zero_sum_subset(&ctx, &vectors).ok_or_else(|| {
        verification(format!(
            "canonical covering set {:?} has no zero-sum subset",
            a.values()
        ))
    })?;
    if !witness_sums_to_zero(&ctx, &vectors, &witness) {
        return Err(verification("witness does not re-sum to zero".to_string()));
    }

    let trace = ProofTrace {
        p,
        coeffs: a.values(),
        i_p,
        i_q,
        even_zero_sum_subsets: even,
        odd_zero_sum_subsets: odd,
        witness,
    };
    if trace.i_p != trace.i_q {
        return Err(verification(format!(
            "signed sums disagree for a={:?}: eval {} vs coeff {}",
            trace.coeffs, trace.i_p, trace.i_q
        )));
    }
    if !trace.i_q.is_zero() {
        return Err(verification(format!(
            "signed sum is nonzero for a={:?}: {}",
            trace.coeffs, trace.i_q
        )));
    }
    if trace.even_zero_sum_subsets != trace.odd_zero_sum_subsets {
        return Err(verification(format!(
            "parity counts differ for a={:?}: {} even vs {} odd",
            trace.coeffs, trace.even_zero_sum_subsets, trace.odd_zero_sum_subsets
        )));
    }
    if trace.witness.is_empty() {
        return Err(verification("empty witness".to_string()));
    }
    Ok(trace)
}

/// How a survey walks its case space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SurveyMode {
    Exhaustive,
    Sampled { trials: u64, seed: u64 },
}

impl SurveyMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            SurveyMode::Exhaustive => "exhaustive",
            SurveyMode::Sampled { .. } => "sampled",
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            SurveyMode::Exhaustive => 0,
            SurveyMode::Sampled { seed, .. } => *seed,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurveyFailure {
    pub cursor: u64,
    pub tuple: Vec<u32>,
    pub message: String,
}

/// Mergeable partial state of a survey. Merging is associative as long as
/// ranges are combined in cursor order, which the runner guarantees.
#[derive(Clone, Debug, Default)]
pub struct SurveyAccum {
    pub verified: u64,
    pub failures: Vec<SurveyFailure>,
    pub min_witness: Option<u32>,
    pub max_witness: Option<u32>,
}

impl SurveyAccum {
    pub fn merge(&mut self, other: SurveyAccum) {
        self.verified += other.verified;
        self.failures.extend(other.failures);
        self.min_witness = match (self.min_witness, other.min_witness) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.max_witness = match (self.max_witness, other.max_witness) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
    }
}

#[derive(Clone, Debug)]
pub struct SurveyReport {
    pub p: u32,
    pub mode: SurveyMode,
    pub total_cases: u64,
    pub verified_cases: u64,
    pub failures: Vec<SurveyFailure>,
    pub min_witness: Option<u32>,
    pub max_witness: Option<u32>,
    pub cursor: u64,
}

/// Exhaustive or sampled sweep over canonical coefficient tuples, asserting
/// that every covering set yields a zero-sum witness that re-sums to zero.
///
/// The case space is addressed by a mixed-radix cursor (each digit runs over
/// the nonzero residues), so ranges can be partitioned across workers and
/// runs can resume from any cursor.
pub struct Theorem1Survey {
    ctx: FpContext,
    mode: SurveyMode,
}

/// Hard cap on exhaustive case counts, `(p-1)^(p+1) <= 2*10^7` (reached by
/// `p = 7`).
pub const EXHAUSTIVE_CASE_CAP: u64 = 20_000_000;

impl Theorem1Survey {
    pub fn new(ctx: FpContext, mode: SurveyMode) -> Result<Theorem1Survey> {
        let p = ctx.modulus();
        match mode {
            SurveyMode::Exhaustive => {
                let total = (p as u128 - 1).pow(p + 1);
                if total > EXHAUSTIVE_CASE_CAP as u128 {
                    return Err(resource(format!(
                        "exhaustive survey at p={p} means {total} cases; the cap is {EXHAUSTIVE_CASE_CAP}"
                    )));
                }
            }
            SurveyMode::Sampled { .. } => {
                if p > 31 {
                    return Err(resource(format!("sampled surveys are gated to p <= 31, got {p}")));
                }
            }
        }
        Ok(Theorem1Survey { ctx, mode })
    }

    pub fn context(&self) -> FpContext {
        self.ctx
    }

    pub fn mode(&self) -> SurveyMode {
        self.mode
    }

    pub fn total_cases(&self) -> u64 {
        let p = self.ctx.modulus();
        match self.mode {
            SurveyMode::Exhaustive => (p as u64 - 1).pow(p + 1),
            SurveyMode::Sampled { trials, .. } => trials,
        }
    }

    /// The coefficient tuple for a cursor position.
    pub fn tuple_at(&self, cursor: u64) -> Vec<u32> {
        let p = self.ctx.modulus();
        let n = p as usize + 1;
        match self.mode {
            SurveyMode::Exhaustive => {
                let radix = (p - 1) as u64;
                let mut digits = Vec::with_capacity(n);
                let mut c = cursor;
                for _ in 0..n {
                    digits.push((c % radix) as u32 + 1);
                    c /= radix;
                }
                digits
            }
            SurveyMode::Sampled { seed, .. } => {
                let mut rng = rng_for_sample(seed, cursor);
                (0..n).map(|_| rng.gen_range(1..p)).collect()
            }
        }
    }

    /// Verifies the half-open cursor range single-threaded.
    pub fn run_range(&self, start: u64, end: u64) -> SurveyAccum {
        let p = self.ctx.modulus() as usize;
        let group = GroupContext::new(self.ctx, GroupKind::Fp2);
        let mut scratch = crate::zerosum::DpScratch::new(group.order());
        let mut witness: Vec<usize> = Vec::new();
        let mut elems = vec![0usize; p + 1];
        let mut accum = SurveyAccum::default();
        for cursor in start..end {
            let tuple = self.tuple_at(cursor);
            // Canonical vectors, linearized: (a_i, i*a_i) for slopes 1..p-1,
            // then (a_p, 0) and (0, a_{p+1}).
            for (j, &a) in tuple.iter().enumerate() {
                let a = a as usize;
                let (x, y) = if j < p - 1 {
                    (a, (j + 1) * a % p)
                } else if j == p - 1 {
                    (a, 0)
                } else {
                    (0, a)
                };
                elems[j] = x * p + y;
            }
            if scratch.zero_sum_witness(&group, &elems, &mut witness) {
                let mut acc = 0usize;
                for &i in &witness {
                    acc = group.add(acc, elems[i]);
                }
                if acc == 0 {
                    accum.verified += 1;
                    let len = witness.len() as u32;
                    accum.min_witness = Some(accum.min_witness.map_or(len, |m| m.min(len)));
                    accum.max_witness = Some(accum.max_witness.map_or(len, |m| m.max(len)));
                } else {
                    accum.failures.push(SurveyFailure {
                        cursor,
                        tuple,
                        message: "witness does not re-sum to zero".to_string(),
                    });
                }
            } else {
                accum.failures.push(SurveyFailure {
                    cursor,
                    tuple,
                    message: "no zero-sum witness".to_string(),
                });
            }
        }
        accum
    }

    /// Runs from `start_cursor` to completion, dispatching blocks of cases to
    /// `workers` threads and merging partials in cursor order. `on_block` is
    /// invoked after each merged block with the cursor reached and the
    /// cumulative state; checkpoints hook in there.
    pub fn run(
        &self,
        workers: usize,
        start_cursor: u64,
        resume: SurveyAccum,
        block_size: u64,
        on_block: &mut dyn FnMut(u64, &SurveyAccum),
    ) -> SurveyReport {
        let workers = workers.max(1);
        let total = self.total_cases();
        let block_size = block_size.max(1);
        let mut accum = resume;
        let mut cursor = start_cursor.min(total);
        while cursor < total {
            let block_end = (cursor + block_size).min(total);
            let span = block_end - cursor;
            let chunk = span.div_ceil(workers as u64);
            let partials: Vec<SurveyAccum> = std::thread::scope(|scope| {
                let mut handles = Vec::new();
                let mut from = cursor;
                while from < block_end {
                    let to = (from + chunk).min(block_end);
                    handles.push(scope.spawn(move || self.run_range(from, to)));
                    from = to;
                }
                handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
            });
            for partial in partials {
                accum.merge(partial);
            }
            cursor = block_end;
            on_block(cursor, &accum);
        }
        SurveyReport {
            p: self.ctx.modulus(),
            mode: self.mode,
            total_cases: total,
            verified_cases: accum.verified,
            failures: accum.failures,
            min_witness: accum.min_witness,
            max_witness: accum.max_witness,
            cursor,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TraceFailure {
    pub cursor: u64,
    pub tuple: Vec<u32>,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct TraceSurveyReport {
    pub p: u32,
    pub mode: SurveyMode,
    pub total: u64,
    pub verified: u64,
    pub failures: Vec<TraceFailure>,
}

/// Runs [`proof_trace`] over canonical tuples: every tuple exhaustively
/// (gated to `p <= 5`), or seeded samples (gated to `p <= 13`).
pub fn survey_proof_traces(ctx: &FpContext, mode: SurveyMode) -> Result<TraceSurveyReport> {
    let p = ctx.modulus();
    let n = p as usize + 1;
    let total = match mode {
        SurveyMode::Exhaustive => {
            let count = (p as u128 - 1).pow(p + 1);
            if count > 4096 {
                return Err(resource(format!(
                    "exhaustive trace survey at p={p} means {count} traces; the gate is p <= 5"
                )));
            }
            count as u64
        }
        SurveyMode::Sampled { trials, .. } => {
            if p > 13 {
                return Err(resource(format!("trace surveys are gated to p <= 13, got {p}")));
            }
            trials
        }
    };
    let mut report = TraceSurveyReport {
        p,
        mode,
        total,
        verified: 0,
        failures: Vec::new(),
    };
    for cursor in 0..total {
        let tuple: Vec<u32> = match mode {
            SurveyMode::Exhaustive => {
                let radix = (p - 1) as u64;
                let mut digits = Vec::with_capacity(n);
                let mut c = cursor;
                for _ in 0..n {
                    digits.push((c % radix) as u32 + 1);
                    c /= radix;
                }
                digits
            }
            SurveyMode::Sampled { seed, .. } => {
                let mut rng = rng_for_sample(seed, cursor);
                (0..n).map(|_| rng.gen_range(1..p)).collect()
            }
        };
        let canonical = CanonicalSet::from_values(*ctx, &tuple)?;
        match proof_trace(&canonical) {
            Ok(_) => report.verified += 1,
            Err(e) => report.failures.push(TraceFailure {
                cursor,
                tuple,
                message: e.to_string(),
            }),
        }
    }
    Ok(report)
}

/// Both sides of the Olson-constant comparison for the plane. The two values
/// are computed and reported; equality is an observation, never an assertion.
#[derive(Clone, Debug)]
pub struct GrtReport {
    pub p: u32,
    /// Exact Olson constant of the plane.
    pub plane: OlsonResult,
    /// Exact Olson constant of the line.
    pub line: OlsonResult,
    /// `p + OL(F_p) - 1`.
    pub rhs: usize,
    pub observed_equal: bool,
}

pub fn grt_report(ctx: &FpContext) -> Result<GrtReport> {
    let p = ctx.modulus();
    if p > 5 {
        return Err(resource(format!(
            "plane Olson search is gated to p <= 5, got {p}"
        )));
    }
    let plane = olson_constant(ctx, GroupKind::Fp2)?;
    let line = olson_constant(ctx, GroupKind::Fp)?;
    let rhs = p as usize + line.olson_constant - 1;
    Ok(GrtReport {
        p,
        observed_equal: plane.olson_constant == rhs,
        rhs,
        plane,
        line,
    })
}
