//! Breadth of finite lattices, measured through infima.
//!
//! A lattice has breadth at most `n` when every finite subset `F` contains
//! some `A` with `|A| <= n` and `inf A = inf F`. Subsets whose infimum no
//! proper subset attains are called irredundant; the breadth is the size of
//! the largest one.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::limits::Limits;
use crate::set::{k_subsets, ElementSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BreadthMethod {
    /// Every nonempty subset checked against the definition.
    Exhaustive,
    /// Only subsets of size `n + 1` checked for breadth `<= n`.
    SizeBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreadthReport {
    pub breadth: usize,
    /// An irredundant set of `breadth` elements. Empty only for the one-element
    /// lattice, where no element differs from `inf ∅`.
    pub witness: ElementSet,
    pub method: BreadthMethod,
}

/// Whether a breadth bound holds, with a violating subset when it does not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BreadthCheck {
    pub holds: bool,
    pub counterexample: Option<ElementSet>,
}

/// Depth-first search for `A ⊆ members`, `|A| <= budget`, whose meet with
/// `acc` equals `target`.
fn attains(l: &Lattice, members: &[usize], budget: usize, acc: usize, target: usize) -> bool {
    if acc == target {
        return true;
    }
    if budget == 0 {
        return false;
    }
    members.iter().enumerate().any(|(i, &x)| {
        let next = l.meet(acc, x);
        // an element that leaves the meet unchanged only spends budget
        next != acc && attains(l, &members[i + 1..], budget - 1, next, target)
    })
}

fn attained_by_small_subset(l: &Lattice, f: ElementSet, n: usize) -> bool {
    let members = f.to_vec();
    attains(l, &members, n, l.top(), l.inf(f))
}

/// Definition check of `breadth <= n` over every nonempty subset.
pub fn has_breadth_at_most(l: &Lattice, n: usize, limits: &Limits) -> Result<BreadthCheck> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, size: 0 });
    }
    limits.check_exhaustive("breadth subset scan", l.len())?;
    let violation = l
        .carrier()
        .subsets()
        .filter(|f| !f.is_empty())
        .find(|&f| !attained_by_small_subset(l, f, n));
    Ok(BreadthCheck {
        holds: violation.is_none(),
        counterexample: violation,
    })
}

/// `breadth <= n` decided from the subsets of size `n + 1` alone: each must
/// have a proper subset with the same infimum.
pub fn has_breadth_at_most_by_size_bound(
    l: &Lattice,
    n: usize,
    limits: &Limits,
) -> Result<BreadthCheck> {
    limits.check_exhaustive("breadth subset scan", l.len())?;
    let violation = k_subsets(l.carrier(), n + 1).find(|&f| !attained_by_small_subset(l, f, n));
    Ok(BreadthCheck {
        holds: violation.is_none(),
        counterexample: violation,
    })
}

/// No proper subset of `f` (the empty set included) has the same infimum.
pub fn is_irredundant(l: &Lattice, f: ElementSet) -> bool {
    let target = l.inf(f);
    f.subsets().filter(|&a| a != f).all(|a| l.inf(a) != target)
}

/// Least `n` with breadth `<= n`, via the size-bound reduction.
pub fn compute_breadth(l: &Lattice, limits: &Limits) -> Result<BreadthReport> {
    breadth_with(l, limits, BreadthMethod::SizeBound)
}

/// Least `n` with breadth `<= n`, via the full definition.
pub fn compute_breadth_exhaustive(l: &Lattice, limits: &Limits) -> Result<BreadthReport> {
    breadth_with(l, limits, BreadthMethod::Exhaustive)
}

fn breadth_with(l: &Lattice, limits: &Limits, method: BreadthMethod) -> Result<BreadthReport> {
    limits.check_exhaustive("breadth subset scan", l.len())?;
    // the irredundant singletons are the elements other than the top
    let mut witness = (l.carrier().without(l.top()))
        .first()
        .map_or(ElementSet::EMPTY, ElementSet::singleton);
    for n in 1..=l.len() {
        let check = match method {
            BreadthMethod::Exhaustive => has_breadth_at_most(l, n, limits)?,
            BreadthMethod::SizeBound => has_breadth_at_most_by_size_bound(l, n, limits)?,
        };
        match check.counterexample {
            None => {
                debug_assert!(witness.is_empty() || is_irredundant(l, witness));
                return Ok(BreadthReport {
                    breadth: n,
                    witness,
                    method,
                });
            }
            Some(f) => witness = smallest_irredundant_core(l, f, n + 1),
        }
    }
    unreachable!("every lattice has breadth at most its size")
}

/// A counterexample to `breadth <= n - 1` contains an irredundant subset of
/// size `n`; the size-bound search already returns one, the definition
/// search may return a larger set.
fn smallest_irredundant_core(l: &Lattice, f: ElementSet, size: usize) -> ElementSet {
    if f.len() == size && is_irredundant(l, f) {
        return f;
    }
    k_subsets(f, size)
        .find(|&a| is_irredundant(l, a))
        .expect("a violating set contains an irredundant subset of the next size")
}

/// Breadth of the order dual, i.e. breadth measured through suprema.
pub fn compute_dual_breadth(l: &Lattice, limits: &Limits) -> Result<BreadthReport> {
    compute_breadth(&l.dual(), limits)
}

/// Index in `2^n` (see [`crate::library::boolean_power`]) of the vector that
/// is 0 at position `m` and 1 elsewhere.
pub fn e_family(n: usize, m: usize) -> Result<usize> {
    if n == 0 || n > 6 {
        return Err(Error::LimitExceeded {
            what: "boolean power exponent",
            size: n as u128,
            limit: 6,
        });
    }
    if m >= n {
        return Err(Error::IndexOutOfRange { index: m, size: n });
    }
    Ok(((1usize << n) - 1) & !(1usize << (n - 1 - m)))
}

/// `{e_0, .., e_{n-1}}` in `2^n`.
pub fn e_family_set(n: usize) -> Result<ElementSet> {
    (0..n)
        .map(|m| e_family(n, m))
        .collect::<Result<Vec<_>>>()
        .map(ElementSet::from_indices)
}
