//! Two-generator numerical semigroups and the lattice-point coding of
//! their gaps.
//!
//! For coprime `2 <= alpha < beta` the semigroup is the set of all
//! `x*alpha + y*beta` with nonnegative `x, y`. Every gap `e` (a natural
//! number outside the semigroup) can be written uniquely as
//! `alpha*beta - a*alpha - b*beta` with `a` in `[1, beta-1]` and `b` in
//! `[1, alpha-1]`, which identifies it with the lattice point `(a, b)`.
//! The coding is extended to the axes (`a = 0` or `b = 0`) so that
//! syzygy generators, which may lie in the semigroup, also get a point.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A numerical semigroup generated by two coprime integers
/// `2 <= alpha < beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SemigroupPair {
    alpha: u64,
    beta: u64,
    /// Inverse of `beta` modulo `alpha`, cached for membership tests.
    beta_inv: u64,
}

/// A point `(a, b)` of the gap lattice, coding the value
/// `alpha*beta - a*alpha - b*beta`.
///
/// Strict gaps have `1 <= a <= beta-1` and `1 <= b <= alpha-1`; the
/// extended coding also admits points on the axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub a: u64,
    pub b: u64,
}

impl LatticePoint {
    pub const fn new(a: u64, b: u64) -> Self {
        LatticePoint { a, b }
    }

    /// Compares two points in the gap order: `p <= q` iff `p.a <= q.a`
    /// and `p.b >= q.b`, strictly when both inequalities are strict.
    pub fn order(self, other: LatticePoint) -> GapOrder {
        use core::cmp::Ordering::*;
        match (self.a.cmp(&other.a), self.b.cmp(&other.b)) {
            (Equal, Equal) => GapOrder::Equal,
            (Less, Greater) => GapOrder::StrictlyLess,
            (Less, Equal) | (Equal, Greater) => GapOrder::WeaklyLess,
            (Greater, Less) => GapOrder::StrictlyGreater,
            (Greater, Equal) | (Equal, Less) => GapOrder::WeaklyGreater,
            (Less, Less) | (Greater, Greater) => GapOrder::Incomparable,
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Outcome of comparing two gaps under the partial order on lattice
/// points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapOrder {
    StrictlyLess,
    WeaklyLess,
    Equal,
    StrictlyGreater,
    WeaklyGreater,
    Incomparable,
}

impl GapOrder {
    /// True for `Equal`, `WeaklyLess` and `StrictlyLess`.
    pub fn is_less_or_equal(self) -> bool {
        matches!(
            self,
            GapOrder::Equal | GapOrder::WeaklyLess | GapOrder::StrictlyLess
        )
    }
}

impl SemigroupPair {
    /// Validates and builds the semigroup. Requires `2 <= alpha < beta`,
    /// `gcd(alpha, beta) = 1`, and `alpha * beta` representable in 64
    /// bits (the product bounds every value the crate handles).
    pub fn new(alpha: u64, beta: u64) -> Result<Self, Error> {
        if alpha < 2 {
            return Err(Error::AlphaTooSmall { alpha });
        }
        if alpha >= beta {
            return Err(Error::NotIncreasing { alpha, beta });
        }
        let g = gcd(alpha, beta);
        if g != 1 {
            return Err(Error::NotCoprime { alpha, beta, gcd: g });
        }
        if alpha.checked_mul(beta).is_none() {
            return Err(Error::ProductOverflow { alpha, beta });
        }
        let beta_inv = mod_inverse(beta % alpha, alpha);
        Ok(SemigroupPair { alpha, beta, beta_inv })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    /// `alpha * beta`; the label of the lattice origin `(0, 0)`.
    pub fn product(&self) -> u64 {
        self.alpha * self.beta
    }

    /// The conductor `(alpha - 1)(beta - 1)`: the least `N` with
    /// `[N, oo)` entirely inside the semigroup.
    pub fn conductor(&self) -> u64 {
        (self.alpha - 1) * (self.beta - 1)
    }

    /// Membership test for `n` in `alpha*N + beta*N`.
    ///
    /// `n` is a member iff it dominates the smallest member in its
    /// residue class mod `alpha`, which is `y*beta` for
    /// `y = n * beta^-1 mod alpha`.
    pub fn contains(&self, n: u64) -> bool {
        let y = mulmod(n % self.alpha, self.beta_inv, self.alpha);
        n >= y * self.beta
    }

    /// Signed variant of [`contains`](Self::contains); negatives are
    /// never members.
    pub fn contains_signed(&self, n: i64) -> bool {
        n >= 0 && self.contains(n as u64)
    }

    /// All gaps in ascending order; there are exactly
    /// `(alpha-1)(beta-1)/2` of them.
    pub fn gaps(&self) -> Vec<u64> {
        (1..self.conductor()).filter(|&n| !self.contains(n)).collect()
    }

    /// The strict lattice point of a gap `e`, i.e. the unique `(a, b)`
    /// with `e = alpha*beta - a*alpha - b*beta`, `1 <= a <= beta-1`,
    /// `1 <= b <= alpha-1`.
    pub fn gap_to_point(&self, e: u64) -> Result<LatticePoint, Error> {
        if self.contains(e) {
            return Err(Error::NotAGap { value: e });
        }
        // b = -e * beta^-1 mod alpha, which is nonzero for gaps.
        let r = mulmod(e % self.alpha, self.beta_inv, self.alpha);
        let b = self.alpha - r;
        debug_assert!(b >= 1 && b < self.alpha);
        let a = (self.product() - e - b * self.beta) / self.alpha;
        debug_assert!(a >= 1 && a < self.beta);
        Ok(LatticePoint { a, b })
    }

    /// The value `alpha*beta - a*alpha - b*beta` of an extended lattice
    /// point with `0 <= a <= beta`, `0 <= b <= alpha`. Points on the
    /// axes may code semigroup elements; points above the diagonal give
    /// negative values.
    pub fn point_to_value(&self, p: LatticePoint) -> Result<i64, Error> {
        if p.a > self.beta || p.b > self.alpha {
            return Err(Error::PointOutOfRange { a: p.a, b: p.b });
        }
        let used = (p.a as i128) * (self.alpha as i128) + (p.b as i128) * (self.beta as i128);
        i64::try_from(self.product() as i128 - used)
            .map_err(|_| Error::PointOutOfRange { a: p.a, b: p.b })
    }

    /// Value of a point known to lie weakly below the diagonal, where
    /// the result is a natural number.
    pub(crate) fn value_below_diagonal(&self, p: LatticePoint) -> u64 {
        let used = p.a * self.alpha + p.b * self.beta;
        debug_assert!(used <= self.product());
        self.product() - used
    }

    /// The unique extended point of a value `v` in `(0, alpha*beta]`,
    /// searching `0 <= b <= alpha-1` (plus the origin for
    /// `v = alpha*beta`). Returns `None` when `alpha*beta - v` is not a
    /// semigroup element, i.e. when no extended coding exists.
    pub(crate) fn extended_point(&self, v: u64) -> Option<LatticePoint> {
        if v == 0 || v > self.product() {
            return None;
        }
        let w = self.product() - v;
        let b = mulmod(w % self.alpha, self.beta_inv, self.alpha);
        if w < b * self.beta {
            return None;
        }
        let a = (w - b * self.beta) / self.alpha;
        debug_assert!(a < self.beta || (a == 0 && b == 0) || v == self.product());
        Some(LatticePoint { a, b })
    }

    /// Compares two gaps in the partial order induced by their lattice
    /// points. Both arguments must be gaps.
    pub fn precede(&self, e1: u64, e2: u64) -> Result<GapOrder, Error> {
        let p1 = self.gap_to_point(e1)?;
        let p2 = self.gap_to_point(e2)?;
        Ok(p1.order(p2))
    }
}

impl fmt::Display for SemigroupPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.alpha, self.beta)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Inverse of `x` modulo `m` for coprime `x`, `m`, via extended Euclid,
/// reduced to `[0, m)`.
fn mod_inverse(x: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (x as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    (old_s.rem_euclid(m as i128)) as u64
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive-search membership oracle, independent of the closed
    /// form used by `contains`.
    fn contains_oracle(s: &SemigroupPair, n: u64) -> bool {
        for x in 0..=2 * s.beta() {
            for y in 0..=2 * s.alpha() {
                if x * s.alpha() + y * s.beta() == n {
                    return true;
                }
            }
        }
        false
    }

    fn pair(alpha: u64, beta: u64) -> SemigroupPair {
        SemigroupPair::new(alpha, beta).unwrap()
    }

    #[test]
    fn constructor_accepts_valid_pairs() {
        assert_eq!(pair(5, 7).alpha(), 5);
        assert_eq!(pair(5, 7).beta(), 7);
        pair(2, 3);
    }

    #[test]
    fn constructor_rejects_invalid_pairs() {
        assert_eq!(
            SemigroupPair::new(4, 6),
            Err(Error::NotCoprime { alpha: 4, beta: 6, gcd: 2 })
        );
        assert_eq!(
            SemigroupPair::new(7, 5),
            Err(Error::NotIncreasing { alpha: 7, beta: 5 })
        );
        assert_eq!(SemigroupPair::new(5, 5), Err(Error::NotIncreasing { alpha: 5, beta: 5 }));
        assert_eq!(SemigroupPair::new(1, 4), Err(Error::AlphaTooSmall { alpha: 1 }));
        assert_eq!(SemigroupPair::new(0, 4), Err(Error::AlphaTooSmall { alpha: 0 }));
        assert!(matches!(
            SemigroupPair::new(u64::MAX / 2, u64::MAX / 2 + 1),
            Err(Error::ProductOverflow { .. })
        ));
    }

    #[test]
    fn membership_examples() {
        let s = pair(5, 7);
        assert!(s.contains(24));
        assert!(!s.contains(23));
        assert!(!s.contains_signed(-1));
        assert!(s.contains(0));
    }

    #[test]
    fn membership_matches_oracle() {
        for &(alpha, beta) in &[(2, 3), (3, 4), (5, 7), (4, 9), (5, 6)] {
            let s = pair(alpha, beta);
            for n in 0..=2 * s.product() {
                assert_eq!(s.contains(n), contains_oracle(&s, n), "{s} at {n}");
            }
        }
    }

    #[test]
    fn conductor_examples() {
        assert_eq!(pair(5, 7).conductor(), 24);
        assert_eq!(pair(2, 3).conductor(), 2);
        // Derived: brute-force largest gap plus one.
        let s = pair(3, 4);
        let max_gap = (0..=s.product()).filter(|&n| !contains_oracle(&s, n)).max().unwrap();
        assert_eq!(s.conductor(), max_gap + 1);
        assert_eq!(s.conductor(), 6);
    }

    #[test]
    fn everything_from_conductor_on_is_member() {
        for &(alpha, beta) in &[(2, 3), (3, 4), (5, 7), (4, 9)] {
            let s = pair(alpha, beta);
            for n in s.conductor()..=2 * s.product() {
                assert!(s.contains(n));
            }
        }
    }

    #[test]
    fn gaps_examples() {
        assert_eq!(pair(2, 3).gaps(), [1]);
        assert_eq!(pair(3, 4).gaps(), [1, 2, 5]);
        let gaps = pair(5, 7).gaps();
        assert_eq!(gaps.len(), 12);
        assert!(gaps.contains(&23));
        assert!(gaps.contains(&18));
    }

    #[test]
    fn gap_count_formula() {
        for &(alpha, beta) in &[(2, 3), (2, 9), (3, 4), (5, 7), (4, 9), (6, 7)] {
            let s = pair(alpha, beta);
            assert_eq!(s.gaps().len() as u64, (alpha - 1) * (beta - 1) / 2);
        }
    }

    #[test]
    fn gap_to_point_examples() {
        let s = pair(5, 7);
        assert_eq!(s.gap_to_point(9).unwrap(), LatticePoint::new(1, 3));
        assert_eq!(s.gap_to_point(18).unwrap(), LatticePoint::new(2, 1));
        assert_eq!(pair(3, 4).gap_to_point(5).unwrap(), LatticePoint::new(1, 1));
        assert_eq!(s.gap_to_point(24), Err(Error::NotAGap { value: 24 }));
        assert_eq!(s.gap_to_point(0), Err(Error::NotAGap { value: 0 }));
    }

    #[test]
    fn gap_point_round_trip_is_unique() {
        for &(alpha, beta) in &[(2, 3), (3, 4), (5, 7), (4, 9), (6, 7)] {
            let s = pair(alpha, beta);
            for e in s.gaps() {
                let p = s.gap_to_point(e).unwrap();
                assert!(1 <= p.a && p.a <= beta - 1);
                assert!(1 <= p.b && p.b <= alpha - 1);
                assert_eq!(s.point_to_value(p).unwrap(), e as i64);
                // Uniqueness within the strict ranges, by exhaustion.
                let mut hits = 0;
                for a in 1..beta {
                    for b in 1..alpha {
                        if s.point_to_value(LatticePoint::new(a, b)).unwrap() == e as i64 {
                            hits += 1;
                        }
                    }
                }
                assert_eq!(hits, 1);
            }
        }
    }

    #[test]
    fn point_to_value_examples() {
        let s = pair(5, 7);
        assert_eq!(s.point_to_value(LatticePoint::new(0, 3)).unwrap(), 14);
        assert_eq!(s.point_to_value(LatticePoint::new(0, 0)).unwrap(), 35);
        assert_eq!(s.point_to_value(LatticePoint::new(4, 0)).unwrap(), 15);
        assert_eq!(s.point_to_value(LatticePoint::new(7, 5)).unwrap(), -35);
        assert_eq!(
            s.point_to_value(LatticePoint::new(8, 0)),
            Err(Error::PointOutOfRange { a: 8, b: 0 })
        );
        assert_eq!(
            s.point_to_value(LatticePoint::new(0, 6)),
            Err(Error::PointOutOfRange { a: 0, b: 6 })
        );
    }

    #[test]
    fn extended_point_inverts_values() {
        for &(alpha, beta) in &[(2, 3), (3, 4), (5, 7)] {
            let s = pair(alpha, beta);
            for v in 1..=s.product() {
                if let Some(p) = s.extended_point(v) {
                    assert_eq!(s.point_to_value(p).unwrap(), v as i64);
                    assert!(p.a <= beta && p.b < alpha || v == s.product());
                } else {
                    // No extended coding: alpha*beta - v is not a member.
                    assert!(!s.contains(s.product() - v), "{s} value {v}");
                }
            }
        }
    }

    #[test]
    fn precede_examples() {
        let s = pair(5, 7);
        assert_eq!(s.precede(9, 11), Ok(GapOrder::StrictlyLess));
        assert_eq!(s.precede(9, 9), Ok(GapOrder::Equal));
        assert_eq!(s.precede(23, 11), Ok(GapOrder::Incomparable));
        assert_eq!(s.precede(11, 9), Ok(GapOrder::StrictlyGreater));
        assert_eq!(s.precede(7, 9), Err(Error::NotAGap { value: 7 }));
    }

    #[test]
    fn precede_is_a_partial_order() {
        let s = pair(5, 7);
        let gaps = s.gaps();
        for &e1 in &gaps {
            assert_eq!(s.precede(e1, e1), Ok(GapOrder::Equal));
            for &e2 in &gaps {
                let o12 = s.precede(e1, e2).unwrap();
                let o21 = s.precede(e2, e1).unwrap();
                // Antisymmetry.
                if o12.is_less_or_equal() && o21.is_less_or_equal() {
                    assert_eq!(e1, e2);
                }
                // Strict implies weak comparability.
                if o12 == GapOrder::StrictlyLess {
                    assert!(o12.is_less_or_equal());
                }
                // Transitivity.
                for &e3 in &gaps {
                    let o23 = s.precede(e2, e3).unwrap();
                    if o12.is_less_or_equal() && o23.is_less_or_equal() {
                        assert!(s.precede(e1, e3).unwrap().is_less_or_equal());
                    }
                }
            }
        }
    }
}
