//! Lattice certificates and a table-backed lattice view of a poset.

use alloc::vec::Vec;
use core::ops::Deref;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::Poset;
use crate::set::ElementSet;

/// What exhaustive checks found out about a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCert {
    /// Every pair has a meet and a join.
    pub is_lattice: bool,
    /// Every subset, `∅` included, has an infimum and a supremum.
    pub is_complete: bool,
    /// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples. False for non-lattices.
    pub is_distributive: bool,
    /// Whether `x ∧ (y ∨ z) = (x ∨ y) ∧ (x ∨ z)` holds for all triples.
    /// Reported next to distributivity, never used in place of it. False for non-lattices.
    pub cross_identity: bool,
    pub bottom: Option<usize>,
    pub top: Option<usize>,
}

/// Computes a [`LatticeCert`] by pairwise and triple checks.
///
/// Completeness is decided as lattice + bottom + top, which on a finite
/// carrier agrees with [`is_complete_exhaustive`].
pub fn certify(p: &Poset) -> LatticeCert {
    let bottom = p.bottom();
    let top = p.top();
    let lattice = Lattice::new(p.clone()).ok();
    let (is_distributive, cross_identity) = match &lattice {
        Some(l) => (l.is_distributive(), l.satisfies_cross_identity()),
        None => (false, false),
    };
    LatticeCert {
        is_lattice: lattice.is_some(),
        is_complete: lattice.is_some() && bottom.is_some() && top.is_some(),
        is_distributive,
        cross_identity,
        bottom,
        top,
    }
}

/// Definition-literal completeness: every one of the `2^n` subsets has an
/// infimum and a supremum.
pub fn is_complete_exhaustive(p: &Poset, limits: &Limits) -> Result<bool> {
    limits.check_exhaustive("complete-lattice subset scan", p.len())?;
    Ok(p.carrier()
        .subsets()
        .all(|s| p.infimum(s).is_some() && p.supremum(s).is_some()))
}

/// A finite lattice with precomputed meet and join tables.
///
/// Every finite lattice with at least one element is bounded, hence
/// complete; constructing a `Lattice` certifies both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<u8>,
    join: Vec<u8>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    pub fn new(poset: Poset) -> Result<Lattice> {
        let n = poset.len();
        let mut meet = Vec::with_capacity(n * n);
        let mut join = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                meet.push(poset.meet(x, y).ok_or(Error::NotALattice)? as u8);
                join.push(poset.join(x, y).ok_or(Error::NotALattice)? as u8);
            }
        }
        let bottom = poset.bottom().ok_or(Error::NotALattice)?;
        let top = poset.top().ok_or(Error::NotALattice)?;
        Ok(Lattice {
            poset,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.poset.len() + y] as usize
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.poset.len() + y] as usize
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    /// Infimum of any subset; `inf(∅) = top`.
    pub fn inf(&self, s: ElementSet) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Supremum of any subset; `sup(∅) = bottom`.
    pub fn sup(&self, s: ElementSet) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn is_distributive(&self) -> bool {
        self.all_triples(|x, y, z| {
            self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
        })
    }

    /// Checks `x ∧ (y ∨ z) = (x ∨ y) ∧ (x ∨ z)` on all triples.
    pub fn satisfies_cross_identity(&self) -> bool {
        self.all_triples(|x, y, z| {
            self.meet(x, self.join(y, z)) == self.meet(self.join(x, y), self.join(x, z))
        })
    }

    fn all_triples(&self, law: impl Fn(usize, usize, usize) -> bool) -> bool {
        let n = self.poset.len();
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| law(x, y, z))))
    }

    /// The order dual, which is again a lattice.
    pub fn dual(&self) -> Lattice {
        Lattice {
            poset: self.poset.dual(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }
}

impl Deref for Lattice {
    type Target = Poset;
    fn deref(&self) -> &Poset {
        &self.poset
    }
}

impl TryFrom<Poset> for Lattice {
    type Error = Error;
    fn try_from(p: Poset) -> Result<Lattice> {
        Lattice::new(p)
    }
}
