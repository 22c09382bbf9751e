//! Set filters on finite posets and the two filter convergences.
//!
//! A filter on a finite carrier is closed under finite intersections, so it
//! contains the intersection of all its members and equals the family of
//! supersets of that set. [`SetFilter`] stores this generator only.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::Poset;
use crate::set::ElementSet;

/// The filter `{S ⊆ X : S ⊇ generator}` on a poset `X`. The generator is never empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SetFilter<'a> {
    poset: &'a Poset,
    generator: ElementSet,
}

/// How the closing clause of star-convergence is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum StarReading {
    /// Every super-filter has a further super-filter converging to the point.
    #[default]
    NestedConverges,
    /// The quantifiers stand, but the filter itself must converge to the point.
    OuterConverges,
}

impl<'a> SetFilter<'a> {
    pub fn principal(poset: &'a Poset, generator: ElementSet) -> Result<Self> {
        poset.check_set(generator)?;
        if generator.is_empty() {
            return Err(Error::EmptyFilter);
        }
        Ok(SetFilter { poset, generator })
    }

    /// The filter generated by `base`: all sets containing some base member.
    ///
    /// Its generator is the intersection of the base. Fails if the base is
    /// empty, has an empty member, or has empty intersection.
    pub fn from_base(poset: &'a Poset, base: &[ElementSet]) -> Result<Self> {
        if base.is_empty() || base.iter().any(|b| b.is_empty()) {
            return Err(Error::EmptyFilter);
        }
        for &b in base {
            poset.check_set(b)?;
        }
        let generator = base.iter().fold(poset.carrier(), |acc, &b| acc & b);
        SetFilter::principal(poset, generator)
    }

    pub fn poset(&self) -> &'a Poset {
        self.poset
    }

    pub fn generator(&self) -> ElementSet {
        self.generator
    }

    /// Whether `s` belongs to the filter.
    pub fn contains(&self, s: ElementSet) -> bool {
        self.generator.is_subset(s) && s.within(self.poset.len())
    }

    /// Materialises every member of the filter, in increasing mask order.
    pub fn members(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        limits.check_exhaustive("filter materialisation", self.poset.len())?;
        let free = self.poset.carrier() - self.generator;
        Ok(free.subsets().map(|s| s | self.generator).collect())
    }

    /// Upper bounds of the filter: the union of `F^u` over its members, which
    /// is `generator^u` because every member contains the generator.
    pub fn upper(&self) -> ElementSet {
        self.poset.upper_bounds(self.generator)
    }

    /// Lower bounds of the filter, dual to [`SetFilter::upper`].
    pub fn lower(&self) -> ElementSet {
        self.poset.lower_bounds(self.generator)
    }

    /// `inf(upper) = x = sup(lower)`. Missing bounds make this false.
    pub fn order_converges(&self, x: usize) -> bool {
        self.poset.infimum(self.upper()) == Some(x) && self.poset.supremum(self.lower()) == Some(x)
    }

    /// Every point the filter order-converges to (at most one).
    pub fn order_limits(&self) -> Vec<usize> {
        (0..self.poset.len())
            .filter(|&x| self.order_converges(x))
            .collect()
    }

    /// Whether `other` is a super-filter of `self` (contains every member of `self`).
    pub fn is_contained_in(&self, other: &SetFilter<'_>) -> bool {
        let same_poset = core::ptr::eq(self.poset, other.poset) || self.poset == other.poset;
        same_poset && other.generator.is_subset(self.generator)
    }

    /// All super-filters: one per nonempty subset of the generator.
    pub fn super_filters(&self, limits: &Limits) -> Result<Vec<SetFilter<'a>>> {
        limits.check_exhaustive("super-filter enumeration", self.generator.len())?;
        Ok(self
            .generator
            .subsets()
            .filter(|s| !s.is_empty())
            .map(|generator| SetFilter {
                poset: self.poset,
                generator,
            })
            .collect())
    }

    /// Star-convergence to `x`, evaluated over every super-filter.
    pub fn star_converges(&self, x: usize, limits: &Limits) -> Result<bool> {
        self.star_converges_with(x, StarReading::NestedConverges, limits)
    }

    pub fn star_converges_with(
        &self,
        x: usize,
        reading: StarReading,
        limits: &Limits,
    ) -> Result<bool> {
        let members: Vec<usize> = self.generator.to_vec();
        let k = members.len();
        limits.check_exhaustive("star-convergence generator", k)?;
        let expand = |compressed: usize| -> ElementSet {
            members
                .iter()
                .enumerate()
                .filter(|&(b, _)| compressed >> b & 1 == 1)
                .map(|(_, &m)| m)
                .collect()
        };
        match reading {
            StarReading::OuterConverges => {
                // each super-filter is a super-filter of itself, so the inner existential never fails
                Ok(self.order_converges(x))
            }
            StarReading::NestedConverges => {
                // reachable[m]: some nonempty G ⊆ m generates a filter converging to x
                let mut reachable = vec![false; 1 << k];
                for (m, slot) in reachable.iter_mut().enumerate().skip(1) {
                    let g = SetFilter {
                        poset: self.poset,
                        generator: expand(m),
                    };
                    *slot = g.order_converges(x);
                }
                for b in 0..k {
                    for m in 0..1usize << k {
                        if m >> b & 1 == 1 && reachable[m ^ (1 << b)] {
                            reachable[m] = true;
                        }
                    }
                }
                Ok(reachable.iter().skip(1).all(|&r| r))
            }
        }
    }

    /// Both sides of `x ∈ F^u ⇔ ↓x ∈ F`, evaluated independently.
    pub fn down_set_criterion(&self, x: usize) -> DownSetCriterion {
        DownSetCriterion {
            upper_bound: self.upper().contains(x),
            down_set_member: self.contains(self.poset.down_set(x)),
        }
    }
}

/// The two sides of the principal down-set criterion for filter upper bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DownSetCriterion {
    /// `x ∈ F^u`
    pub upper_bound: bool,
    /// `↓x ∈ F`
    pub down_set_member: bool,
}

impl DownSetCriterion {
    pub fn agrees(&self) -> bool {
        self.upper_bound == self.down_set_member
    }
}

/// Every filter on `poset`, ordered by generator mask.
pub fn all_filters<'a>(
    poset: &'a Poset,
    limits: &Limits,
) -> Result<impl Iterator<Item = SetFilter<'a>>> {
    limits.check_exhaustive("filter enumeration", poset.len())?;
    Ok(poset
        .carrier()
        .subsets()
        .filter(|s| !s.is_empty())
        .map(move |generator| SetFilter { poset, generator }))
}

/// Whether a family is a filter base: no empty member, and any two members
/// contain a common member.
pub fn is_filter_base(base: &[ElementSet]) -> bool {
    !base.is_empty()
        && base.iter().all(|b| !b.is_empty())
        && base.iter().all(|&a| {
            base.iter()
                .all(|&b| base.iter().any(|c| c.is_subset(a & b)))
        })
}
