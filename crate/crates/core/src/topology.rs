//! Topologies on finite carriers.
//!
//! A topology on a finite set is determined by the smallest open set
//! containing each point, so [`FiniteTopology`] stores one neighbourhood
//! mask per point. Two topologies are equal iff these masks agree. The full
//! family of open sets is produced on demand by [`FiniteTopology::opens`].

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::{Poset, TupleIndex};
use crate::set::{ElementSet, MAX_CARRIER};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTopology {
    carrier: usize,
    /// `neighbourhood[x]` is the intersection of all open sets containing `x`.
    neighbourhood: Vec<ElementSet>,
}

impl FiniteTopology {
    /// Coarsest topology in which every set of `subbasis` is open.
    pub fn from_open_subbasis(carrier: usize, subbasis: &[ElementSet]) -> Result<Self> {
        check_carrier(carrier)?;
        for &s in subbasis {
            check_within(carrier, s)?;
        }
        let full = ElementSet::full(carrier);
        let neighbourhood = (0..carrier)
            .map(|x| {
                subbasis
                    .iter()
                    .filter(|s| s.contains(x))
                    .fold(full, |acc, &s| acc & s)
            })
            .collect();
        Ok(FiniteTopology {
            carrier,
            neighbourhood,
        })
    }

    /// Coarsest topology in which every set of `closed` is closed.
    pub fn from_closed_subbasis(carrier: usize, closed: &[ElementSet]) -> Result<Self> {
        check_carrier(carrier)?;
        let opens: Vec<ElementSet> = closed
            .iter()
            .map(|&c| check_within(carrier, c).map(|_| c.complement(carrier)))
            .collect::<Result<_>>()?;
        FiniteTopology::from_open_subbasis(carrier, &opens)
    }

    /// Accepts `family` as the complete list of open sets, checking the axioms.
    pub fn from_open_family(carrier: usize, family: &[ElementSet]) -> Result<Self> {
        let t = FiniteTopology::from_open_subbasis(carrier, family)?;
        let given: BTreeSet<ElementSet> = family.iter().copied().collect();
        let is_topology = given.contains(&ElementSet::EMPTY)
            && given.contains(&ElementSet::full(carrier))
            && given.iter().all(|&a| {
                given
                    .iter()
                    .all(|&b| given.contains(&(a | b)) && given.contains(&(a & b)))
            });
        if is_topology {
            Ok(t)
        } else {
            Err(Error::NotATopology)
        }
    }

    pub fn discrete(carrier: usize) -> Result<Self> {
        let singletons: Vec<_> = (0..carrier).map(ElementSet::singleton).collect();
        FiniteTopology::from_open_subbasis(carrier, &singletons)
    }

    pub fn indiscrete(carrier: usize) -> Result<Self> {
        FiniteTopology::from_open_subbasis(carrier, &[])
    }

    #[inline]
    pub fn carrier_size(&self) -> usize {
        self.carrier
    }

    /// Smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> ElementSet {
        self.neighbourhood[x]
    }

    pub fn is_open(&self, s: ElementSet) -> bool {
        s.within(self.carrier) && s.iter().all(|x| self.neighbourhood[x].is_subset(s))
    }

    pub fn is_closed(&self, s: ElementSet) -> bool {
        s.within(self.carrier) && self.is_open(s.complement(self.carrier))
    }

    /// Every open set, sorted by mask value.
    pub fn opens(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        limits.check_exhaustive("open-set enumeration", self.carrier)?;
        let mut out = Vec::new();
        self.collect_opens(0, ElementSet::EMPTY, ElementSet::EMPTY, &mut out);
        out.sort_unstable();
        Ok(out)
    }

    fn collect_opens(
        &self,
        x: usize,
        inside: ElementSet,
        outside: ElementSet,
        out: &mut Vec<ElementSet>,
    ) {
        if x == self.carrier {
            out.push(inside);
            return;
        }
        if inside.contains(x) {
            return self.collect_opens(x + 1, inside, outside, out);
        }
        let forced = self.neighbourhood[x];
        if forced.is_disjoint(outside) {
            self.collect_opens(x + 1, inside | forced, outside, out);
        }
        self.collect_opens(x + 1, inside, outside.with(x), out);
    }

    /// Every closed set, sorted by mask value.
    pub fn closed_sets(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        let mut closed: Vec<ElementSet> = self
            .opens(limits)?
            .into_iter()
            .map(|o| o.complement(self.carrier))
            .collect();
        closed.sort_unstable();
        Ok(closed)
    }

    /// Distinct points have disjoint open neighbourhoods, checked pair by pair.
    pub fn is_hausdorff(&self) -> bool {
        self.distinct_pairs()
            .all(|(x, y)| self.neighbourhood[x].is_disjoint(self.neighbourhood[y]))
    }

    /// For distinct points, each has an open set missing the other.
    pub fn is_t1(&self) -> bool {
        self.distinct_pairs()
            .all(|(x, y)| !self.neighbourhood[x].contains(y))
    }

    /// Every singleton is open.
    pub fn is_discrete(&self) -> bool {
        (0..self.carrier).all(|x| self.is_open(ElementSet::singleton(x)))
    }

    fn distinct_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.carrier;
        (0..n).flat_map(move |x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
    }

    /// Whether `map` pulls every open set of `codomain` back to an open set of `self`.
    ///
    /// Open sets of a finite space are unions of point neighbourhoods and
    /// preimages commute with unions, so the neighbourhoods suffice.
    pub fn pulls_back_opens(&self, codomain: &FiniteTopology, map: &[usize]) -> Result<bool> {
        if map.len() != self.carrier {
            return Err(Error::CarrierMismatch {
                expected: self.carrier,
                found: map.len(),
            });
        }
        if let Some((element, &image)) =
            map.iter().enumerate().find(|(_, &y)| y >= codomain.carrier)
        {
            return Err(Error::MapOutOfRange { element, image });
        }
        Ok(codomain
            .neighbourhood
            .iter()
            .all(|&u| self.is_open(u.preimage(map))))
    }
}

fn check_carrier(carrier: usize) -> Result<()> {
    crate::limits::guard("topology carrier", carrier as u128, MAX_CARRIER as u128)
}

fn check_within(carrier: usize, s: ElementSet) -> Result<()> {
    match (s - ElementSet::full(carrier)).first() {
        None => Ok(()),
        Some(index) => Err(Error::IndexOutOfRange {
            index,
            size: carrier,
        }),
    }
}

/// Closed subbasis `{↓x} ∪ {↑x}`.
pub fn interval_topology(p: &Poset) -> FiniteTopology {
    let mut closed: Vec<ElementSet> = (0..p.len()).map(|x| p.down_set(x)).collect();
    closed.extend((0..p.len()).map(|x| p.up_set(x)));
    FiniteTopology::from_closed_subbasis(p.len(), &closed).expect("poset sets lie in its carrier")
}

/// Closed subbasis `{↓x}` only.
pub fn lower_topology(p: &Poset) -> FiniteTopology {
    let closed: Vec<ElementSet> = (0..p.len()).map(|x| p.down_set(x)).collect();
    FiniteTopology::from_closed_subbasis(p.len(), &closed).expect("poset sets lie in its carrier")
}

/// Closed subbasis `{↑x}` only.
pub fn upper_topology(p: &Poset) -> FiniteTopology {
    let closed: Vec<ElementSet> = (0..p.len()).map(|x| p.up_set(x)).collect();
    FiniteTopology::from_closed_subbasis(p.len(), &closed).expect("poset sets lie in its carrier")
}

/// Product topology on tuples indexed as in [`crate::order::product`],
/// generated by the preimages of open sets under the coordinate projections.
pub fn product_topology(factors: &[&FiniteTopology], limits: &Limits) -> Result<FiniteTopology> {
    if factors.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let index = TupleIndex::new(factors.iter().map(|t| t.carrier_size()).collect());
    limits.check_relational("product topology carrier", index.count())?;
    let n = index.count() as usize;
    let mut subbasis = Vec::new();
    for (j, t) in factors.iter().enumerate() {
        // each factor's neighbourhoods generate its opens, so their preimages suffice
        for x in 0..t.carrier_size() {
            let u = t.neighbourhood(x);
            let preimage: ElementSet = (0..n)
                .filter(|&i| u.contains(index.coordinate(i, j)))
                .collect();
            subbasis.push(preimage);
        }
    }
    FiniteTopology::from_open_subbasis(n, &subbasis)
}

pub fn topologies_equal(a: &FiniteTopology, b: &FiniteTopology) -> Result<bool> {
    if a.carrier != b.carrier {
        return Err(Error::CarrierMismatch {
            expected: a.carrier,
            found: b.carrier,
        });
    }
    Ok(a == b)
}

/// Reference generation of the closed family: start from `closed ∪ {∅, X}`,
/// then alternately close under pairwise union and pairwise intersection until
/// nothing changes. Quadratic in the family size; meant for small carriers.
pub fn closed_family_by_fixpoint(
    carrier: usize,
    closed: &[ElementSet],
    limits: &Limits,
) -> Result<Vec<ElementSet>> {
    limits.check_exhaustive("fixpoint closure", carrier)?;
    let mut family: BTreeSet<ElementSet> = closed.iter().copied().collect();
    for &c in closed {
        check_within(carrier, c)?;
    }
    family.insert(ElementSet::EMPTY);
    family.insert(ElementSet::full(carrier));
    loop {
        let before = family.len();
        for op in [
            |a: ElementSet, b: ElementSet| a | b,
            |a: ElementSet, b: ElementSet| a & b,
        ] {
            loop {
                let current: Vec<ElementSet> = family.iter().copied().collect();
                let grown = current.len();
                for (i, &a) in current.iter().enumerate() {
                    for &b in &current[i + 1..] {
                        family.insert(op(a, b));
                    }
                }
                if family.len() == grown {
                    break;
                }
            }
        }
        if family.len() == before {
            return Ok(family.into_iter().collect());
        }
    }
}

/// Topology from the fixpoint closed family; see [`closed_family_by_fixpoint`].
pub fn from_closed_subbasis_by_fixpoint(
    carrier: usize,
    closed: &[ElementSet],
    limits: &Limits,
) -> Result<FiniteTopology> {
    let family = closed_family_by_fixpoint(carrier, closed, limits)?;
    let opens: Vec<ElementSet> = family.iter().map(|c| c.complement(carrier)).collect();
    FiniteTopology::from_open_family(carrier, &opens)
}
