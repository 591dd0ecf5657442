//! Normalized semimodules over a two-generator numerical semigroup.
//!
//! A semimodule is a nonempty subset of the naturals closed under adding
//! semigroup elements. Working with the normalized representative
//! (containing 0) of its isomorphism class, the unique minimal
//! generating set is a lean set: pairwise differences avoid the
//! semigroup. Membership is materialized as a bit table over `[0, B)`
//! with `B = c + max(generators) + 1`; beyond `B` everything is a
//! member, because `g + [c, oo)` covers the tail of each generator.

use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::Error;
use crate::semigroup::{LatticePoint, SemigroupPair};

/// Shifts a generating set so that its minimum becomes 0.
pub fn normalize(gens: &[u64]) -> Result<Vec<u64>, Error> {
    let min = *gens.iter().min().ok_or(Error::EmptyGenerators)?;
    Ok(gens.iter().map(|&g| g - min).collect())
}

/// True iff all pairwise absolute differences avoid the semigroup.
///
/// Duplicate elements make the set trivially non-lean (0 is a member of
/// every semigroup).
pub fn is_lean(s: &SemigroupPair, set: &[u64]) -> bool {
    set.iter().enumerate().all(|(i, &x)| {
        set[i + 1..].iter().all(|&y| !s.contains(x.abs_diff(y)))
    })
}

/// Removes every generator reachable from another one by adding a
/// semigroup element, then sorts canonically: 0 first, gaps by
/// increasing `a`-coordinate.
///
/// Expects a normalized input (containing 0); the survivors are then
/// exactly 0 and gaps of the semigroup, and they form a lean set.
pub fn minimalize(s: &SemigroupPair, gens: &[u64]) -> Vec<u64> {
    debug_assert!(gens.contains(&0));
    let mut distinct: Vec<u64> = gens.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut kept: Vec<u64> = distinct
        .iter()
        .copied()
        .filter(|&g| {
            !distinct
                .iter()
                .any(|&other| other != g && g >= other && s.contains(g - other))
        })
        .collect();
    kept.sort_unstable_by_key(|&g| {
        if g == 0 {
            0
        } else {
            s.gap_to_point(g).expect("nonzero minimal generator is a gap").a
        }
    });
    kept
}

/// A normalized semimodule with its minimal generators and a bounded
/// membership table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semimodule {
    semigroup: SemigroupPair,
    generators: Vec<u64>,
    points: Vec<LatticePoint>,
    table: BitSet,
    bound: u64,
}

impl Semimodule {
    /// Builds the semimodule generated by `gens`: normalizes, drops
    /// redundant generators (duplicates silently), sorts canonically and
    /// materializes membership.
    pub fn new(semigroup: SemigroupPair, gens: &[u64]) -> Result<Self, Error> {
        let generators = minimalize(&semigroup, &normalize(gens)?);
        // 0 sits at (0, alpha) in the extended labelling: the start of
        // the lattice path.
        let mut points = Vec::with_capacity(generators.len());
        points.push(LatticePoint::new(0, semigroup.alpha()));
        for &g in &generators[1..] {
            points.push(semigroup.gap_to_point(g)?);
        }

        let max_gen = *generators.last().unwrap_or(&0).max(generators.first().unwrap_or(&0));
        let max_gen = generators.iter().copied().max().unwrap_or(0);
        let bound = semigroup
            .conductor()
            .checked_add(max_gen)
            .and_then(|b| b.checked_add(1))
            .expect("membership bound overflows u64");
        let len = usize::try_from(bound).expect("membership table exceeds address space");
        let mut table = BitSet::with_len(len);
        for &g in &generators {
            for n in g..bound {
                if semigroup.contains(n - g) {
                    table.set(n as usize);
                }
            }
        }
        Ok(Semimodule { semigroup, generators, points, table, bound })
    }

    pub fn semigroup(&self) -> &SemigroupPair {
        &self.semigroup
    }

    /// Minimal generators, canonically sorted; the first is always 0.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Lattice points of the minimal generators; the origin generator 0
    /// is placed at `(0, alpha)`.
    pub fn generator_points(&self) -> &[LatticePoint] {
        &self.points
    }

    /// True when 0 is the only minimal generator, i.e. the semimodule is
    /// the semigroup itself.
    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }

    /// Everything at or above this bound is a member.
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.bound || self.table.get(n as usize)
    }

    pub fn contains_signed(&self, n: i64) -> bool {
        n >= 0 && self.contains(n as u64)
    }

    /// All naturals outside the semimodule, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.bound).filter(|&n| !self.table.get(n as usize)).collect()
    }

    /// Largest gap plus one, straight from the membership table; 0 when
    /// the semimodule is all of the naturals.
    pub fn conductor_bruteforce(&self) -> u64 {
        self.gaps().last().map_or(0, |&g| g + 1)
    }

    /// The Apéry set with respect to `modulus`, which must be a nonzero
    /// semigroup element: the least member in each residue class.
    pub fn apery(&self, modulus: u64) -> Result<AperySet, Error> {
        if modulus == 0 || !self.semigroup.contains(modulus) {
            return Err(Error::InvalidAperyModulus { modulus });
        }
        let len = usize::try_from(modulus).expect("Apéry modulus exceeds address space");
        let mut representatives = Vec::with_capacity(len);
        for r in 0..modulus {
            let mut n = r;
            while !self.contains(n) {
                n += modulus;
            }
            representatives.push(n);
        }
        Ok(AperySet { modulus, representatives })
    }

    /// Conductor through the Apéry set: `max Ap(D, s) - s + 1`.
    pub fn conductor_via_apery(&self, modulus: u64) -> Result<u64, Error> {
        let ap = self.apery(modulus)?;
        Ok(ap.max() + 1 - modulus)
    }
}

/// The Apéry set of a semimodule with respect to a nonzero semigroup
/// element `s`: one representative per residue class mod `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    modulus: u64,
    representatives: Vec<u64>,
}

impl AperySet {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Representatives indexed by residue: `representatives()[r]` is the
    /// least member congruent to `r`.
    pub fn representatives(&self) -> &[u64] {
        &self.representatives
    }

    /// Largest representative under the natural order.
    pub fn max(&self) -> u64 {
        *self.representatives.iter().max().expect("modulus is nonzero")
    }
}
