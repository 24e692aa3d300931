//! Subset-sum machinery over `F_p` and the plane `F_p x F_p`: subset-sum
//! images, zero-sum witnesses, zero-sum-free testing, Olson constants,
//! Balandraud's bounds, and the sequence results driven by power-sum systems.
//!
//! Sets and sequences share one dynamic-programming core over linearized
//! group indices (a plane vector `(x, y)` lives at index `x*p + y`). The DP
//! records only first-reach predecessor events, so witnesses are stable under
//! input order and across platforms.

use rand::Rng;

use crate::error::{domain, resource, Result};
use crate::fp::{FpContext, FpElement, FpVector2};
use crate::sampling::rng_for_sample;

/// Which ambient group an index-based computation runs in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupKind {
    Fp,
    Fp2,
}

impl GroupKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            GroupKind::Fp => "fp",
            GroupKind::Fp2 => "fp2",
        }
    }
}

/// A group element in report-friendly form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupValue {
    Scalar(u32),
    Vector(u32, u32),
}

impl std::fmt::Display for GroupValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupValue::Scalar(v) => write!(f, "{v}"),
            GroupValue::Vector(x, y) => write!(f, "({x},{y})"),
        }
    }
}

/// Group context: the prime together with the rank (line or plane).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GroupContext {
    ctx: FpContext,
    kind: GroupKind,
}

impl GroupContext {
    pub fn new(ctx: FpContext, kind: GroupKind) -> GroupContext {
        GroupContext { ctx, kind }
    }

    pub fn field(&self) -> FpContext {
        self.ctx
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        let p = self.ctx.modulus() as usize;
        match self.kind {
            GroupKind::Fp => p,
            GroupKind::Fp2 => p * p,
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        let p = self.ctx.modulus() as usize;
        match self.kind {
            GroupKind::Fp => {
                let s = a + b;
                if s >= p {
                    s - p
                } else {
                    s
                }
            }
            GroupKind::Fp2 => {
                let (ax, ay) = (a / p, a % p);
                let (bx, by) = (b / p, b % p);
                let mut x = ax + bx;
                if x >= p {
                    x -= p;
                }
                let mut y = ay + by;
                if y >= p {
                    y -= p;
                }
                x * p + y
            }
        }
    }

    pub fn neg(&self, a: usize) -> usize {
        let p = self.ctx.modulus() as usize;
        match self.kind {
            GroupKind::Fp => {
                if a == 0 {
                    0
                } else {
                    p - a
                }
            }
            GroupKind::Fp2 => {
                let (x, y) = (a / p, a % p);
                let nx = if x == 0 { 0 } else { p - x };
                let ny = if y == 0 { 0 } else { p - y };
                nx * p + ny
            }
        }
    }

    pub fn value(&self, idx: usize) -> GroupValue {
        let p = self.ctx.modulus() as usize;
        match self.kind {
            GroupKind::Fp => GroupValue::Scalar(idx as u32),
            GroupKind::Fp2 => GroupValue::Vector((idx / p) as u32, (idx % p) as u32),
        }
    }
}

/// Elements that linearize into a table index.
pub trait GroupElem: Copy + Ord + std::fmt::Debug {
    const KIND: GroupKind;
    fn to_index(self, ctx: &FpContext) -> usize;
    fn from_index(ctx: &FpContext, idx: usize) -> Self;
    fn group_value(self, ctx: &FpContext) -> GroupValue;
}

impl GroupElem for FpElement {
    const KIND: GroupKind = GroupKind::Fp;
    fn to_index(self, _ctx: &FpContext) -> usize {
        self.value() as usize
    }
    fn from_index(ctx: &FpContext, idx: usize) -> Self {
        ctx.element(idx as i64)
    }
    fn group_value(self, _ctx: &FpContext) -> GroupValue {
        GroupValue::Scalar(self.value())
    }
}

impl GroupElem for FpVector2 {
    const KIND: GroupKind = GroupKind::Fp2;
    fn to_index(self, ctx: &FpContext) -> usize {
        self.x.value() as usize * ctx.modulus() as usize + self.y.value() as usize
    }
    fn from_index(ctx: &FpContext, idx: usize) -> Self {
        let p = ctx.modulus() as usize;
        ctx.vector((idx / p) as i64, (idx % p) as i64)
    }
    fn group_value(self, _ctx: &FpContext) -> GroupValue {
        GroupValue::Vector(self.x.value(), self.y.value())
    }
}

/// A nonempty set of positions into the input whose elements sum to zero.
/// Positions are zero-based and sorted ascending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub indices: Vec<usize>,
}

impl Witness {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Reachable-sums table with first-reach predecessor links.
///
/// After processing all of `A`, `reachable` is the full subset-sum image
/// (zero included via the empty set); the nonempty-subset image additionally
/// tracks whether zero is reachable from a nonempty subset.
pub struct SubsetSumTable {
    group: GroupContext,
    reachable: Vec<bool>,
    predecessor: Vec<Option<(usize, usize)>>,
    zero_hit: Option<(usize, usize)>,
}

impl SubsetSumTable {
    /// One left-to-right pass over the element indices.
    pub fn build(group: GroupContext, elems: &[usize]) -> SubsetSumTable {
        let order = group.order();
        let mut reachable = vec![false; order];
        let mut predecessor: Vec<Option<(usize, usize)>> = vec![None; order];
        let mut list: Vec<usize> = Vec::with_capacity(order);
        let mut zero_hit = None;
        reachable[0] = true;
        list.push(0);
        for (i, &g) in elems.iter().enumerate() {
            debug_assert!(g < order);
            let snapshot = list.len();
            for t in 0..snapshot {
                let s = list[t];
                let ns = group.add(s, g);
                if ns == 0 {
                    if zero_hit.is_none() {
                        zero_hit = Some((i, s));
                    }
                } else if !reachable[ns] {
                    reachable[ns] = true;
                    predecessor[ns] = Some((i, s));
                    list.push(ns);
                }
            }
        }
        SubsetSumTable {
            group,
            reachable,
            predecessor,
            zero_hit,
        }
    }

    pub fn group(&self) -> &GroupContext {
        &self.group
    }

    pub fn reachable(&self) -> &[bool] {
        &self.reachable
    }

    /// Indices of the full subset-sum image (zero always present).
    pub fn sigma_indices(&self) -> Vec<usize> {
        (0..self.group.order()).filter(|&s| self.reachable[s]).collect()
    }

    /// Indices of the nonempty-subset image.
    pub fn sigma_star_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        if self.zero_hit.is_some() {
            out.push(0);
        }
        out.extend((1..self.group.order()).filter(|&s| self.reachable[s]));
        out
    }

    /// Reconstructs a subset with the given nonzero sum from the predecessor
    /// chain. Position lists are sorted ascending.
    pub fn witness_for(&self, target: usize) -> Option<Witness> {
        if target == 0 {
            return self.zero_sum_witness();
        }
        if !self.reachable[target] {
            return None;
        }
        let mut indices = Vec::new();
        let mut s = target;
        while s != 0 {
            let (i, prev) = self.predecessor[s].expect("reachable sums have predecessors");
            indices.push(i);
            s = prev;
        }
        indices.sort_unstable();
        Some(Witness { indices })
    }

    /// A nonempty subset summing to zero, if one exists. Exact: the DP covers
    /// every subset.
    pub fn zero_sum_witness(&self) -> Option<Witness> {
        let (i, s) = self.zero_hit?;
        let mut indices = vec![i];
        let mut cur = s;
        while cur != 0 {
            let (j, prev) = self.predecessor[cur].expect("reachable sums have predecessors");
            indices.push(j);
            cur = prev;
        }
        indices.sort_unstable();
        Some(Witness { indices })
    }
}

/// The subset-sum images of a duplicate-free set, sorted.
pub struct SigmaSets<E> {
    pub sigma: Vec<E>,
    pub sigma_star: Vec<E>,
}

pub fn sigma_sets<E: GroupElem>(ctx: &FpContext, a: &[E]) -> Result<SigmaSets<E>> {
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(domain("duplicate element in a set-semantics input"));
    }
    let group = GroupContext::new(*ctx, E::KIND);
    let indices: Vec<usize> = a.iter().map(|e| e.to_index(ctx)).collect();
    let table = SubsetSumTable::build(group, &indices);
    Ok(SigmaSets {
        sigma: table
            .sigma_indices()
            .into_iter()
            .map(|i| E::from_index(ctx, i))
            .collect(),
        sigma_star: table
            .sigma_star_indices()
            .into_iter()
            .map(|i| E::from_index(ctx, i))
            .collect(),
    })
}

/// A witness for the indexed input, or `None` iff the input is zero-sum-free.
/// Every returned witness is re-summed before being handed out.
pub fn find_zero_sum_subset<E: GroupElem>(ctx: &FpContext, a: &[E]) -> Option<Witness> {
    let group = GroupContext::new(*ctx, E::KIND);
    let indices: Vec<usize> = a.iter().map(|e| e.to_index(ctx)).collect();
    let table = SubsetSumTable::build(group, &indices);
    let witness = table.zero_sum_witness()?;
    assert!(witness_sums_to_zero(ctx, a, &witness), "witness must re-sum to zero");
    Some(witness)
}

pub fn is_zero_sum_free<E: GroupElem>(ctx: &FpContext, a: &[E]) -> bool {
    find_zero_sum_subset(ctx, a).is_none()
}

/// Re-sums the witnessed positions; used on every witness-returning path.
pub fn witness_sums_to_zero<E: GroupElem>(ctx: &FpContext, a: &[E], witness: &Witness) -> bool {
    if witness.is_empty() {
        return false;
    }
    let group = GroupContext::new(*ctx, E::KIND);
    let mut acc = 0usize;
    for &i in &witness.indices {
        acc = group.add(acc, a[i].to_index(ctx));
    }
    acc == 0
}

/// Reusable buffers for the allocation-free DP used by surveys.
pub(crate) struct DpScratch {
    reach: Vec<bool>,
    pred: Vec<(u32, u32)>,
    list: Vec<u32>,
}

impl DpScratch {
    pub(crate) fn new(order: usize) -> DpScratch {
        DpScratch {
            reach: vec![false; order],
            pred: vec![(0, 0); order],
            list: Vec::with_capacity(order),
        }
    }

    /// First-reach DP; fills `out` with a sorted zero-sum witness and returns
    /// true, or returns false when the input is zero-sum-free.
    pub(crate) fn zero_sum_witness(
        &mut self,
        group: &GroupContext,
        elems: &[usize],
        out: &mut Vec<usize>,
    ) -> bool {
        self.reach.iter_mut().for_each(|r| *r = false);
        self.list.clear();
        self.reach[0] = true;
        self.list.push(0);
        let mut hit: Option<(u32, u32)> = None;
        'outer: for (i, &g) in elems.iter().enumerate() {
            let snapshot = self.list.len();
            for t in 0..snapshot {
                let s = self.list[t] as usize;
                let ns = group.add(s, g);
                if ns == 0 {
                    hit = Some((i as u32, s as u32));
                    break 'outer;
                }
                if !self.reach[ns] {
                    self.reach[ns] = true;
                    self.pred[ns] = (i as u32, s as u32);
                    self.list.push(ns as u32);
                }
            }
        }
        let Some((i, s)) = hit else {
            return false;
        };
        out.clear();
        out.push(i as usize);
        let mut cur = s;
        while cur != 0 {
            let (j, prev) = self.pred[cur as usize];
            out.push(j as usize);
            cur = prev;
        }
        out.sort_unstable();
        true
    }
}

/// Exact Olson constant and a maximum zero-sum-free witness set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OlsonResult {
    pub p: u32,
    pub group: GroupKind,
    pub olson_constant: usize,
    pub extremal_set: Vec<GroupValue>,
}

/// Branch-and-bound maximum zero-sum-free subset search. Candidates are taken
/// in ascending index order; a branch is pruned as soon as its partial
/// nonempty-sum image contains zero, or when it cannot beat the incumbent.
pub fn olson_constant(ctx: &FpContext, kind: GroupKind) -> Result<OlsonResult> {
    let p = ctx.modulus();
    match kind {
        GroupKind::Fp if p > 31 => {
            return Err(resource(format!("olson search over F_p is gated to p <= 31, got {p}")));
        }
        GroupKind::Fp2 if p > 5 => {
            return Err(resource(format!(
                "olson search over the plane is gated to p <= 5, got {p}"
            )));
        }
        _ => {}
    }
    let group = GroupContext::new(*ctx, kind);
    let order = group.order();
    assert!(order <= 64, "bitmask search requires order <= 64");
    let candidates: Vec<usize> = (1..order).collect();
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    search_max_zero_sum_free(&group, &candidates, 0, 0u64, &mut current, &mut best);

    let extremal: Vec<usize> = best;
    // The search already guarantees freeness; re-check through the DP anyway.
    let table = SubsetSumTable::build(group, &extremal);
    assert!(
        table.zero_sum_witness().is_none(),
        "extremal set must be zero-sum-free"
    );
    Ok(OlsonResult {
        p,
        group: kind,
        olson_constant: extremal.len() + 1,
        extremal_set: extremal.into_iter().map(|i| group.value(i)).collect(),
    })
}

fn search_max_zero_sum_free(
    group: &GroupContext,
    candidates: &[usize],
    next: usize,
    star_mask: u64,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    if next == candidates.len() || current.len() + (candidates.len() - next) <= best.len() {
        return;
    }
    let g = candidates[next];
    // Include g: new image = old | (old + g) | {g}.
    let mut new_mask = star_mask | 1u64 << g;
    let mut bits = star_mask;
    while bits != 0 {
        let s = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        new_mask |= 1u64 << group.add(s, g);
    }
    if new_mask & 1 == 0 {
        current.push(g);
        search_max_zero_sum_free(group, candidates, next + 1, new_mask, current, best);
        current.pop();
    }
    search_max_zero_sum_free(group, candidates, next + 1, star_mask, current, best);
}

/// One checked set in the subset-sum lower-bound sweep.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BalandraudCase {
    pub set: Vec<u32>,
    pub d: usize,
    pub sigma_size: usize,
    pub sigma_star_size: usize,
    pub sigma_bound: usize,
    pub sigma_star_bound: usize,
}

#[derive(Clone, Debug)]
pub struct BalandraudReport {
    pub p: u32,
    pub sets_checked: u64,
    pub violations: Vec<BalandraudCase>,
    pub tight_count: u64,
    pub tight_example: Option<BalandraudCase>,
}

/// Exhaustively checks `|Sigma(A)| >= min(p, d(d+1)/2 + 1)` and
/// `|Sigma*(A)| >= min(p, d(d+1)/2)` over every `A` in `F_p \ {0}` with
/// `A` disjoint from `-A` (choose at most one element from each pair
/// `{x, -x}`). Tightness is equality in the nonempty-sum bound for `d >= 1`.
pub fn balandraud_check(ctx: &FpContext) -> Result<BalandraudReport> {
    let p = ctx.modulus();
    if p > 13 {
        return Err(resource(format!(
            "exhaustive sweep is gated to p <= 13 (3^((p-1)/2) sets), got {p}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..=(p as usize - 1) / 2)
        .map(|x| (x, p as usize - x))
        .collect();
    let m = pairs.len();
    let total = 3u64.pow(m as u32);
    let mut report = BalandraudReport {
        p,
        sets_checked: 0,
        violations: Vec::new(),
        tight_count: 0,
        tight_example: None,
    };
    let mut set: Vec<usize> = Vec::with_capacity(m);
    for code in 0..total {
        set.clear();
        let mut c = code;
        for &(x, nx) in &pairs {
            match c % 3 {
                1 => set.push(x),
                2 => set.push(nx),
                _ => {}
            }
            c /= 3;
        }
        let d = set.len();
        // Bitmask subset-sum DP over order p (p <= 13 fits easily in u64).
        let mut sigma: u64 = 1;
        let mut star: u64 = 0;
        for &g in &set {
            let mut add_star = 1u64 << g;
            let mut bits = star;
            while bits != 0 {
                let s = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                add_star |= 1u64 << ((s + g) % p as usize);
            }
            star |= add_star;
            let mut add_sigma = 0u64;
            let mut bits = sigma;
            while bits != 0 {
                let s = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                add_sigma |= 1u64 << ((s + g) % p as usize);
            }
            sigma |= add_sigma;
        }
        let sigma_size = sigma.count_ones() as usize;
        let star_size = star.count_ones() as usize;
        let half = d * (d + 1) / 2;
        let case = BalandraudCase {
            set: set.iter().map(|&x| x as u32).collect(),
            d,
            sigma_size,
            sigma_star_size: star_size,
            sigma_bound: (p as usize).min(half + 1),
            sigma_star_bound: (p as usize).min(half),
        };
        if sigma_size < case.sigma_bound || star_size < case.sigma_star_bound {
            report.violations.push(case.clone());
        } else if d >= 1 && star_size == case.sigma_star_bound {
            report.tight_count += 1;
            if report.tight_example.is_none() {
                report.tight_example = Some(case);
            }
        }
        report.sets_checked += 1;
    }
    Ok(report)
}

/// Zero-sum subsequence search for a sequence (repetition allowed). `None`
/// means the whole sequence is zero-sum-free; callers that require a witness
/// for lengths `>= 2p - 1` treat absence as a verification failure.
pub fn theorem4_check(ctx: &FpContext, seq: &[FpVector2]) -> Option<Witness> {
    let group = GroupContext::new(*ctx, GroupKind::Fp2);
    let indices: Vec<usize> = seq.iter().map(|v| v.to_index(ctx)).collect();
    let table = SubsetSumTable::build(group, &indices);
    let witness = table.zero_sum_witness()?;
    assert!(witness_sums_to_zero(ctx, seq, &witness), "witness must re-sum to zero");
    Some(witness)
}

/// The extremal sequence of length `2(p-1)`: `p-1` copies each of `(1,0)` and
/// `(0,1)`. It has no zero-sum subsequence, which shows the length bound
/// `2p - 1` is sharp.
pub fn sharpness_sequence(ctx: &FpContext) -> Vec<FpVector2> {
    let p = ctx.modulus() as usize;
    let mut seq = vec![ctx.vector(1, 0); p - 1];
    seq.extend(vec![ctx.vector(0, 1); p - 1]);
    seq
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SequenceSurveyMode {
    Exhaustive,
    Sampled { trials: u64, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct Theorem4Failure {
    pub case_index: u64,
    pub sequence: Vec<(u32, u32)>,
}

#[derive(Clone, Debug)]
pub struct Theorem4Report {
    pub p: u32,
    pub mode: SequenceSurveyMode,
    pub length: usize,
    pub total: u64,
    pub found: u64,
    pub absent: u64,
    /// Sequences of length `>= 2p - 1` with no witness (expected empty).
    pub failures: Vec<Theorem4Failure>,
    pub witness_required: bool,
}

fn multiset_count(order: usize, length: usize) -> u128 {
    // C(order + length - 1, length)
    let mut acc: u128 = 1;
    for i in 0..length {
        acc = acc * (order + length - 1 - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Runs the zero-sum subsequence check over every length-`length` multiset of
/// plane vectors (zero vector included).
pub fn theorem4_exhaustive(ctx: &FpContext, length: usize) -> Result<Theorem4Report> {
    let group = GroupContext::new(*ctx, GroupKind::Fp2);
    let order = group.order();
    let total = multiset_count(order, length);
    if total > 10_000_000 {
        return Err(resource(format!(
            "{total} multisets of length {length} over {order} elements exceeds the 10^7 gate"
        )));
    }
    let mut report = Theorem4Report {
        p: ctx.modulus(),
        mode: SequenceSurveyMode::Exhaustive,
        length,
        total: total as u64,
        found: 0,
        absent: 0,
        failures: Vec::new(),
        witness_required: length >= 2 * ctx.modulus() as usize - 1,
    };
    let mut scratch = DpScratch::new(order);
    let mut witness = Vec::new();
    let mut elems = vec![0usize; length];
    let mut case_index = 0u64;
    loop {
        run_sequence_case(ctx, &group, &elems, &mut scratch, &mut witness, case_index, &mut report);
        case_index += 1;
        // Next nondecreasing tuple.
        let mut i = length;
        loop {
            if i == 0 {
                assert_eq!(report.found + report.absent, report.total);
                return Ok(report);
            }
            i -= 1;
            if elems[i] + 1 < order {
                let v = elems[i] + 1;
                for e in elems.iter_mut().skip(i) {
                    *e = v;
                }
                break;
            }
        }
    }
}

/// Seeded random length-`length` sequences (positions drawn uniformly over
/// the whole plane, repetition allowed).
pub fn theorem4_sampled(ctx: &FpContext, length: usize, trials: u64, seed: u64) -> Result<Theorem4Report> {
    let group = GroupContext::new(*ctx, GroupKind::Fp2);
    let order = group.order();
    let mut report = Theorem4Report {
        p: ctx.modulus(),
        mode: SequenceSurveyMode::Sampled { trials, seed },
        length,
        total: trials,
        found: 0,
        absent: 0,
        failures: Vec::new(),
        witness_required: length >= 2 * ctx.modulus() as usize - 1,
    };
    let mut scratch = DpScratch::new(order);
    let mut witness = Vec::new();
    let mut elems = vec![0usize; length];
    for case_index in 0..trials {
        let mut rng = rng_for_sample(seed, case_index);
        for e in elems.iter_mut() {
            *e = rng.gen_range(0..order);
        }
        run_sequence_case(ctx, &group, &elems, &mut scratch, &mut witness, case_index, &mut report);
    }
    Ok(report)
}

fn run_sequence_case(
    ctx: &FpContext,
    group: &GroupContext,
    elems: &[usize],
    scratch: &mut DpScratch,
    witness: &mut Vec<usize>,
    case_index: u64,
    report: &mut Theorem4Report,
) {
    if scratch.zero_sum_witness(group, elems, witness) {
        let mut acc = 0usize;
        for &i in witness.iter() {
            acc = group.add(acc, elems[i]);
        }
        assert_eq!(acc, 0, "witness must re-sum to zero");
        report.found += 1;
    } else {
        report.absent += 1;
        if report.witness_required {
            let p = ctx.modulus() as usize;
            report.failures.push(Theorem4Failure {
                case_index,
                sequence: elems.iter().map(|&e| ((e / p) as u32, (e % p) as u32)).collect(),
            });
        }
    }
}

/// A nonzero common zero of the two power-sum polynomials attached to a
/// vector sequence, together with its support.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CwWitness {
    pub point: Vec<u32>,
    pub support: Vec<usize>,
}

/// Scans all of `F_p^n` in odometer order (first coordinate fastest) for a
/// nonzero common zero of `f_j(x) = sum_i v_i[j] * x_i^(p-1)`. The support of
/// any such point indexes a zero-sum subset, because `x^(p-1) = 1` exactly on
/// nonzero residues.
pub fn cw_witness_search(ctx: &FpContext, vectors: &[FpVector2]) -> Result<Option<CwWitness>> {
    let p = ctx.modulus();
    let n = vectors.len();
    if n > 12 || p > 5 {
        return Err(resource(format!(
            "point scan is gated to n <= 12 and p <= 5, got n={n}, p={p}"
        )));
    }
    if n == 0 {
        return Ok(None);
    }
    let a1: Vec<u32> = vectors.iter().map(|v| v.x.value()).collect();
    let a2: Vec<u32> = vectors.iter().map(|v| v.y.value()).collect();
    let mut digits = vec![0u32; n];
    let mut s1 = 0u32;
    let mut s2 = 0u32;
    loop {
        // Advance the odometer, maintaining the two support sums.
        let mut i = 0;
        loop {
            if i == n {
                return Ok(None);
            }
            if digits[i] + 1 < p {
                if digits[i] == 0 {
                    s1 = (s1 + a1[i]) % p;
                    s2 = (s2 + a2[i]) % p;
                }
                digits[i] += 1;
                break;
            }
            digits[i] = 0;
            s1 = (s1 + p - a1[i]) % p;
            s2 = (s2 + p - a2[i]) % p;
            i += 1;
        }
        if s1 == 0 && s2 == 0 {
            let support: Vec<usize> = (0..n).filter(|&i| digits[i] != 0).collect();
            debug_assert!(!support.is_empty());
            let mut sum = ctx.vector(0, 0);
            for &i in &support {
                sum = sum + vectors[i];
            }
            assert!(sum.is_zero(), "support must index a zero-sum subset");
            return Ok(Some(CwWitness {
                point: digits.clone(),
                support,
            }));
        }
    }
}
