//! Exact arithmetic in `F_p` and the projective-direction geometry of the
//! plane `F_p x F_p`.
//!
//! Every value carries its modulus; mixing moduli is a checked bug guard.
//! Supported moduli are odd primes up to [`MAX_PRIME`], which keeps all
//! intermediate products comfortably inside machine words.

use std::fmt;

use crate::error::{domain, Error, Result};

/// Largest supported prime modulus.
pub const MAX_PRIME: u32 = 61;

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A validated prime-field context. Cheap to copy; passed explicitly to
/// everything that needs the modulus.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FpContext {
    p: u32,
}

impl FpContext {
    /// Creates a context for an odd prime `3 <= p <= 61`.
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(domain(format!("{p} is not prime")));
        }
        if p < 3 {
            return Err(domain("modulus must be an odd prime >= 3"));
        }
        if p > MAX_PRIME {
            return Err(Error::Resource(format!(
                "p={p} exceeds the supported maximum {MAX_PRIME}"
            )));
        }
        Ok(FpContext { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary integer into the canonical residue range.
    pub fn element(&self, value: i64) -> FpElement {
        FpElement {
            value: value.rem_euclid(self.p as i64) as u32,
            p: self.p,
        }
    }

    pub fn zero(&self) -> FpElement {
        self.element(0)
    }

    pub fn one(&self) -> FpElement {
        self.element(1)
    }

    pub fn vector(&self, x: i64, y: i64) -> FpVector2 {
        FpVector2 {
            x: self.element(x),
            y: self.element(y),
        }
    }

    /// All residues `0..p` in order.
    pub fn elements(&self) -> impl Iterator<Item = FpElement> + '_ {
        let p = self.p;
        (0..p).map(move |v| FpElement { value: v, p })
    }

    /// All nonzero residues `1..p` in order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FpElement> + '_ {
        let p = self.p;
        (1..p).map(move |v| FpElement { value: v, p })
    }

    /// The `p + 1` directions through the origin: slopes `0..p`, then vertical.
    pub fn directions(&self) -> Vec<Direction> {
        let mut out: Vec<Direction> = (0..self.p).map(Direction::Slope).collect();
        out.push(Direction::Vertical);
        out
    }
}

/// A canonical residue mod an odd prime. Always satisfies `0 <= value < p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpElement {
    value: u32,
    p: u32,
}

impl FpElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn context(&self) -> FpContext {
        FpContext { p: self.p }
    }

    fn check_same_modulus(&self, other: &FpElement) {
        assert_eq!(
            self.p, other.p,
            "mixed moduli: {} vs {}",
            self.p, other.p
        );
    }

    /// Binary exponentiation with a nonnegative exponent.
    pub fn pow(self, mut e: u64) -> FpElement {
        let p = self.p as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        FpElement {
            value: acc as u32,
            p: self.p,
        }
    }

    /// Multiplicative inverse; zero has none.
    pub fn inverse(self) -> Result<FpElement> {
        if self.value == 0 {
            return Err(domain(format!("0 has no inverse mod {}", self.p)));
        }
        // Fermat: a^(p-2) * a = a^(p-1) = 1.
        Ok(self.pow(self.p as u64 - 2))
    }
}

impl std::ops::Add for FpElement {
    type Output = FpElement;
    fn add(self, rhs: FpElement) -> FpElement {
        self.check_same_modulus(&rhs);
        let mut v = self.value + rhs.value;
        if v >= self.p {
            v -= self.p;
        }
        FpElement { value: v, p: self.p }
    }
}

impl std::ops::Sub for FpElement {
    type Output = FpElement;
    fn sub(self, rhs: FpElement) -> FpElement {
        self.check_same_modulus(&rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.p - (rhs.value - self.value)
        };
        FpElement { value: v, p: self.p }
    }
}

impl std::ops::Mul for FpElement {
    type Output = FpElement;
    fn mul(self, rhs: FpElement) -> FpElement {
        self.check_same_modulus(&rhs);
        let v = (self.value as u64 * rhs.value as u64 % self.p as u64) as u32;
        FpElement { value: v, p: self.p }
    }
}

impl std::ops::Neg for FpElement {
    type Output = FpElement;
    fn neg(self) -> FpElement {
        let v = if self.value == 0 { 0 } else { self.p - self.value };
        FpElement { value: v, p: self.p }
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

/// A plane vector with componentwise arithmetic mod `p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpVector2 {
    pub x: FpElement,
    pub y: FpElement,
}

impl FpVector2 {
    pub fn new(x: FpElement, y: FpElement) -> FpVector2 {
        x.check_same_modulus(&y);
        FpVector2 { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn modulus(&self) -> u32 {
        self.x.modulus()
    }

    pub fn scale(&self, t: FpElement) -> FpVector2 {
        FpVector2 {
            x: self.x * t,
            y: self.y * t,
        }
    }
}

impl std::ops::Add for FpVector2 {
    type Output = FpVector2;
    fn add(self, rhs: FpVector2) -> FpVector2 {
        FpVector2 {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

impl std::ops::Neg for FpVector2 {
    type Output = FpVector2;
    fn neg(self) -> FpVector2 {
        FpVector2 {
            x: -self.x,
            y: -self.y,
        }
    }
}

impl fmt::Display for FpVector2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Debug for FpVector2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) (mod {})", self.x.value(), self.y.value(), self.modulus())
    }
}

/// One of the `p + 1` lines through the origin. `Slope(s)` is the line
/// `y = s*x`; `Vertical` is the line `x = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Direction {
    Slope(u32),
    Vertical,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Slope(s) => write!(f, "slope {s}"),
            Direction::Vertical => write!(f, "vertical"),
        }
    }
}

/// The direction of a nonzero vector; invariant under nonzero scaling.
pub fn direction_of(v: FpVector2) -> Result<Direction> {
    if v.is_zero() {
        return Err(domain("the zero vector has no direction"));
    }
    if v.x.is_zero() {
        Ok(Direction::Vertical)
    } else {
        let slope = v.y * v.x.inverse().expect("nonzero x");
        Ok(Direction::Slope(slope.value()))
    }
}

/// True iff the set meets every one of the `p + 1` directions.
pub fn covers_all_directions(ctx: &FpContext, vectors: &[FpVector2]) -> Result<bool> {
    let mut seen = vec![false; ctx.p as usize + 1];
    for &v in vectors {
        seen[direction_index(ctx, direction_of(v)?)] = true;
    }
    Ok(seen.iter().all(|&b| b))
}

/// Maps a direction to `0..=p`: slopes by value, vertical last.
pub fn direction_index(ctx: &FpContext, d: Direction) -> usize {
    match d {
        Direction::Slope(s) => {
            debug_assert!(s < ctx.p);
            s as usize
        }
        Direction::Vertical => ctx.p as usize,
    }
}

/// A covering set normalized to one vector per direction, stored as the
/// coordinate array `a_1..a_{p+1}` of nonzero residues:
/// `a_i` for `1 <= i <= p-1` is the x-coordinate of the slope-`i`
/// representative `(a_i, i*a_i)`, `a_p` is the x-coordinate of the slope-0
/// representative `(a_p, 0)`, and `a_{p+1}` is the y-coordinate of the
/// vertical representative `(0, a_{p+1})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalSet {
    ctx: FpContext,
    coeffs: Vec<FpElement>,
}

impl CanonicalSet {
    /// Builds a canonical set from the coefficient array; all entries must be
    /// nonzero and there must be exactly `p + 1` of them.
    pub fn new(ctx: FpContext, coeffs: Vec<FpElement>) -> Result<Self> {
        if coeffs.len() != ctx.p as usize + 1 {
            return Err(domain(format!(
                "expected {} coefficients, got {}",
                ctx.p + 1,
                coeffs.len()
            )));
        }
        for (i, a) in coeffs.iter().enumerate() {
            if a.modulus() != ctx.modulus() {
                return Err(domain("coefficient modulus does not match the context"));
            }
            if a.is_zero() {
                return Err(domain(format!("coefficient a_{} must be nonzero", i + 1)));
            }
        }
        Ok(CanonicalSet { ctx, coeffs })
    }

    /// Convenience constructor from raw residues.
    pub fn from_values(ctx: FpContext, values: &[u32]) -> Result<Self> {
        let coeffs = values.iter().map(|&v| ctx.element(v as i64)).collect();
        CanonicalSet::new(ctx, coeffs)
    }

    pub fn context(&self) -> FpContext {
        self.ctx
    }

    /// The coefficients `a_1..a_{p+1}`.
    pub fn coeffs(&self) -> &[FpElement] {
        &self.coeffs
    }

    pub fn values(&self) -> Vec<u32> {
        self.coeffs.iter().map(|a| a.value()).collect()
    }

    /// Materializes the `p + 1` vectors, in coefficient order.
    pub fn vectors(&self) -> Vec<FpVector2> {
        let p = self.ctx.p;
        let mut out = Vec::with_capacity(p as usize + 1);
        for i in 1..p {
            let a = self.coeffs[i as usize - 1];
            out.push(FpVector2::new(a, a * self.ctx.element(i as i64)));
        }
        out.push(FpVector2::new(self.coeffs[p as usize - 1], self.ctx.zero()));
        out.push(FpVector2::new(self.ctx.zero(), self.coeffs[p as usize]));
        out
    }
}

/// Selects one representative per direction (smallest x, then smallest y, in
/// residue order) and reads off the canonical coefficient array. The result
/// is a subset of the input, so any zero-sum subset of it is a zero-sum
/// subset of the input.
pub fn canonicalize_covering_set(ctx: &FpContext, vectors: &[FpVector2]) -> Result<CanonicalSet> {
    let p = ctx.p;
    let mut reps: Vec<Option<FpVector2>> = vec![None; p as usize + 1];
    for &v in vectors {
        let idx = direction_index(ctx, direction_of(v)?);
        let better = match reps[idx] {
            None => true,
            Some(cur) => (v.x.value(), v.y.value()) < (cur.x.value(), cur.y.value()),
        };
        if better {
            reps[idx] = Some(v);
        }
    }
    for (idx, rep) in reps.iter().enumerate() {
        if rep.is_none() {
            let d = if idx == p as usize {
                Direction::Vertical
            } else {
                Direction::Slope(idx as u32)
            };
            return Err(domain(format!("not a covering set: direction '{d}' is missing")));
        }
    }
    // Slot order: slopes 1..p-1, then slope 0, then vertical.
    let mut coeffs = Vec::with_capacity(p as usize + 1);
    for slope in 1..p {
        coeffs.push(reps[slope as usize].unwrap().x);
    }
    coeffs.push(reps[0].unwrap().x);
    coeffs.push(reps[p as usize].unwrap().y);
    CanonicalSet::new(*ctx, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u32) -> FpContext {
        FpContext::new(p).unwrap()
    }

    #[test]
    fn context_rejects_bad_moduli() {
        assert!(FpContext::new(4).is_err());
        assert!(FpContext::new(2).is_err());
        assert!(FpContext::new(1).is_err());
        assert!(matches!(FpContext::new(67), Err(Error::Resource(_))));
        assert!(FpContext::new(61).is_ok());
    }

    #[test]
    fn arithmetic_is_canonical() {
        let c = ctx(3);
        assert_eq!((c.element(2) + c.element(2)).value(), 1);
        assert_eq!((c.element(1) - c.element(2)).value(), 2);
        assert_eq!((-c.element(0)).value(), 0);
        let c5 = ctx(5);
        assert_eq!((c5.element(3) * c5.element(4)).value(), 2);
    }

    #[test]
    fn inverse_by_scan() {
        // Independent oracle: scan all residues for a*x = 1.
        let c = ctx(5);
        let a = c.element(2);
        let inv = a.inverse().unwrap();
        assert_eq!(inv.value(), 3);
        for p in [3u32, 5, 7, 11, 13] {
            let c = ctx(p);
            for a in c.nonzero_elements() {
                let scan = c
                    .nonzero_elements()
                    .find(|x| (a * *x).value() == 1)
                    .unwrap();
                assert_eq!(a.inverse().unwrap(), scan);
            }
        }
        assert!(c.zero().inverse().is_err());
    }

    #[test]
    fn fermat_little_theorem() {
        let c = ctx(7);
        assert_eq!(c.element(3).pow(6).value(), 1);
        for p in [3u32, 5, 7, 11, 13, 61] {
            let c = ctx(p);
            for a in c.nonzero_elements() {
                assert_eq!(a.pow(p as u64 - 1).value(), 1);
            }
        }
    }

    #[test]
    fn directions_basic() {
        let c = ctx(5);
        assert_eq!(direction_of(c.vector(2, 4)).unwrap(), Direction::Slope(2));
        assert_eq!(direction_of(c.vector(0, 3)).unwrap(), Direction::Vertical);
        assert_eq!(
            direction_of(c.vector(1, 2)).unwrap(),
            direction_of(c.vector(3, 1)).unwrap()
        );
        assert!(direction_of(c.vector(0, 0)).is_err());
    }

    #[test]
    fn direction_scaling_invariance() {
        for p in [3u32, 5, 7, 11] {
            let c = ctx(p);
            for x in 0..p {
                for y in 0..p {
                    let v = c.vector(x as i64, y as i64);
                    if v.is_zero() {
                        continue;
                    }
                    let d = direction_of(v).unwrap();
                    for t in c.nonzero_elements() {
                        assert_eq!(direction_of(v.scale(t)).unwrap(), d);
                    }
                }
            }
        }
    }

    #[test]
    fn direction_classes_partition_punctured_plane() {
        for p in [3u32, 5, 7, 13] {
            let c = ctx(p);
            let mut counts = vec![0usize; p as usize + 1];
            for x in 0..p {
                for y in 0..p {
                    let v = c.vector(x as i64, y as i64);
                    if v.is_zero() {
                        continue;
                    }
                    counts[direction_index(&c, direction_of(v).unwrap())] += 1;
                }
            }
            assert_eq!(counts.len(), p as usize + 1);
            assert!(counts.iter().all(|&n| n == p as usize - 1));
        }
    }

    #[test]
    fn covering_detection() {
        let c = ctx(3);
        let yes = vec![c.vector(1, 1), c.vector(1, 2), c.vector(1, 0), c.vector(0, 1)];
        assert!(covers_all_directions(&c, &yes).unwrap());
        let no = vec![c.vector(1, 1), c.vector(2, 2), c.vector(1, 0), c.vector(0, 1)];
        assert!(!covers_all_directions(&c, &no).unwrap());

        let c5 = ctx(5);
        let mut all = Vec::new();
        for x in 0..5 {
            for y in 0..5 {
                let v = c5.vector(x, y);
                if !v.is_zero() {
                    all.push(v);
                }
            }
        }
        assert_eq!(all.len(), 24);
        assert!(covers_all_directions(&c5, &all).unwrap());
    }

    #[test]
    fn canonicalize_examples() {
        let c = ctx(3);
        let a = canonicalize_covering_set(
            &c,
            &[c.vector(1, 1), c.vector(1, 2), c.vector(2, 0), c.vector(0, 2)],
        )
        .unwrap();
        assert_eq!(a.values(), vec![1, 1, 2, 2]);

        // Tie-break picks (1,1) over (2,2) on the slope-1 line.
        let a = canonicalize_covering_set(
            &c,
            &[
                c.vector(2, 2),
                c.vector(1, 1),
                c.vector(1, 2),
                c.vector(1, 0),
                c.vector(0, 1),
            ],
        )
        .unwrap();
        assert_eq!(a.values(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn canonicalize_full_plane_p5() {
        let c = ctx(5);
        let mut all = Vec::new();
        for x in 0..5 {
            for y in 0..5 {
                let v = c.vector(x, y);
                if !v.is_zero() {
                    all.push(v);
                }
            }
        }
        let a = canonicalize_covering_set(&c, &all).unwrap();
        assert_eq!(a.values(), vec![1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn canonicalize_reports_missing_direction() {
        let c = ctx(3);
        let err = canonicalize_covering_set(
            &c,
            &[c.vector(1, 1), c.vector(2, 2), c.vector(1, 0), c.vector(0, 1)],
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("slope 2"), "unexpected message: {msg}");
    }

    #[test]
    fn canonicalize_is_idempotent_on_transversals() {
        for p in [3u32, 5, 7] {
            let c = ctx(p);
            // An arbitrary transversal: a_i = 1 + (i mod (p-1)).
            let values: Vec<u32> = (0..=p).map(|i| 1 + (i % (p - 1))).collect();
            let canon = CanonicalSet::from_values(c, &values).unwrap();
            let again = canonicalize_covering_set(&c, &canon.vectors()).unwrap();
            assert_eq!(again, canon);
        }
    }

    #[test]
    fn canonical_vectors_shape() {
        let c = ctx(3);
        let a = CanonicalSet::from_values(c, &[1, 1, 1, 1]).unwrap();
        assert_eq!(
            a.vectors(),
            vec![c.vector(1, 1), c.vector(1, 2), c.vector(1, 0), c.vector(0, 1)]
        );
    }

    #[test]
    #[should_panic(expected = "mixed moduli")]
    fn mixed_moduli_are_rejected() {
        let a = ctx(3).element(1);
        let b = ctx(5).element(1);
        let _ = a + b;
    }
}
