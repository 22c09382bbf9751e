//! Seeded generators for posets and lattices. All randomness comes from a
//! ChaCha stream seeded by the caller.

use std::collections::BTreeSet;

use ordlab_core::library::{m3, n5};
use ordlab_core::{certify, ElementSet, Error as CoreError, Poset};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LabError, LabResult};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Builds a poset on `n` points from a strict order given on "slots", then
/// scatters the slots over element indices with a random permutation.
fn scattered<R: Rng>(
    n: usize,
    below: impl Fn(usize, usize) -> bool,
    prefix: &str,
    rng: &mut R,
) -> Poset {
    let mut slot_of: Vec<usize> = (0..n).collect();
    slot_of.shuffle(rng);
    let labels: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    Poset::from_relation(labels, |x, y| x == y || below(slot_of[x], slot_of[y]))
        .expect("generated relation is a partial order")
}

/// A random poset on `size` points (1..=64): random edges along a random
/// linear order, transitively closed, with a random edge density.
pub fn random_poset<R: Rng>(size: usize, rng: &mut R) -> Poset {
    assert!((1..=64).contains(&size), "poset size must be in 1..=64");
    let density: f64 = rng.gen_range(0.05..0.6);
    // strict up-sets over slots, closed from the top down
    let mut up = vec![ElementSet::EMPTY; size];
    for i in (0..size).rev() {
        for j in i + 1..size {
            if rng.gen_bool(density) {
                up[i] = up[i].with(j) | up[j];
            }
        }
    }
    scattered(size, |a, b| up[a].contains(b), "p", rng)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeShape {
    /// A sublattice of the down-set lattice of a random poset.
    Distributive,
    /// M3 or N5 stacked with a random distributive lattice (size >= 5).
    NonDistributive,
}

/// A lattice with exactly `size` elements, deterministic in `seed`. Sizes of
/// at least 5 pick the shape with a coin flip.
pub fn random_lattice(size: usize, seed: u64) -> LabResult<Poset> {
    let mut rng = seeded(seed);
    let shape = if size >= 5 && rng.gen_bool(0.5) {
        LatticeShape::NonDistributive
    } else {
        LatticeShape::Distributive
    };
    random_lattice_with(size, shape, &mut rng)
}

pub fn random_lattice_with<R: Rng>(
    size: usize,
    shape: LatticeShape,
    rng: &mut R,
) -> LabResult<Poset> {
    if size > 64 {
        let err = CoreError::LimitExceeded {
            what: "lattice size",
            size: size as u128,
            limit: 64,
        };
        return Err(LabError::core("random lattice", err));
    }
    if size == 0 {
        return Err(LabError::core("random lattice", CoreError::EmptyCarrier));
    }
    let lattice = match shape {
        LatticeShape::Distributive => {
            let family = distributive_family(size, rng)?;
            scattered(size, |a, b| a != b && family[a] & !family[b] == 0, "x", rng)
        }
        LatticeShape::NonDistributive => {
            if size < 5 {
                return Err(LabError::Generation(format!(
                    "no non-distributive lattice has {size} elements"
                )));
            }
            let fragment = if rng.gen_bool(0.5) { m3() } else { n5() };
            let rest = family_poset(&distributive_family(size - 4, rng)?);
            let stacked = if rng.gen_bool(0.5) {
                vertical_sum(&fragment, &rest)
            } else {
                vertical_sum(&rest, &fragment)
            };
            scattered(size, |a, b| a != b && stacked.leq(a, b), "x", rng)
        }
    };
    let cert = certify(&lattice);
    if !cert.is_lattice {
        return Err(LabError::Generation(
            "generated structure is not a lattice".into(),
        ));
    }
    Ok(lattice)
}

fn family_poset(family: &[u64]) -> Poset {
    let labels: Vec<String> = (0..family.len()).map(|i| i.to_string()).collect();
    Poset::from_relation(labels, |a, b| family[a] & !family[b] == 0)
        .expect("inclusion is a partial order")
}

/// `lower` below `upper`, with the top of `lower` identified with the bottom of `upper`.
fn vertical_sum(lower: &Poset, upper: &Poset) -> Poset {
    assert!(lower.top().is_some(), "lower summand needs a top");
    let bottom = upper.bottom().expect("upper summand needs a bottom");
    let rest: Vec<usize> = (0..upper.len()).filter(|&y| y != bottom).collect();
    let n = lower.len() + rest.len();
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    // indices below lower.len() are lower's; the rest map to upper
    let side = |i: usize| {
        if i < lower.len() {
            (true, i)
        } else {
            (false, rest[i - lower.len()])
        }
    };
    Poset::from_relation(labels, |a, b| match (side(a), side(b)) {
        ((true, x), (true, y)) => lower.leq(x, y),
        ((false, x), (false, y)) => upper.leq(x, y),
        ((true, _), (false, _)) => true,
        ((false, _), (true, _)) => false,
    })
    .expect("vertical sum is a partial order")
}

/// Down-set masks of a random poset forming a `{∪, ∩}`-closed family of
/// exactly `size` members containing `∅` and the whole carrier, sorted by
/// (cardinality, mask).
fn distributive_family<R: Rng>(size: usize, rng: &mut R) -> LabResult<Vec<u64>> {
    if size == 1 {
        return Ok(vec![0]);
    }
    for _ in 0..256 {
        let k = rng.gen_range(1..=(size - 1).min(12));
        let q = random_poset(k, rng);
        let full = q.carrier().bits();
        let mut downs: Vec<u64> = q
            .carrier()
            .subsets()
            .filter(|&s| q.is_down_set(s))
            .map(|s| s.bits())
            .filter(|&s| s != 0 && s != full)
            .collect();
        if downs.len() + 2 < size {
            continue;
        }
        downs.shuffle(rng);
        let mut family: BTreeSet<u64> = [0, full].into_iter().collect();
        for d in downs {
            if family.len() == size {
                break;
            }
            if family.contains(&d) {
                continue;
            }
            let mut grown = family.clone();
            grown.insert(d);
            if close(&mut grown, size) {
                family = grown;
            }
        }
        if family.len() == size {
            let mut out: Vec<u64> = family.into_iter().collect();
            out.sort_by_key(|&m| (m.count_ones(), m));
            return Ok(out);
        }
    }
    Err(LabError::Generation(format!(
        "no distributive lattice of size {size} found after 256 attempts"
    )))
}

/// Closes under pairwise union and intersection; false once the family
/// grows past `cap`.
fn close(family: &mut BTreeSet<u64>, cap: usize) -> bool {
    loop {
        let members: Vec<u64> = family.iter().copied().collect();
        let before = family.len();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                family.insert(a | b);
                family.insert(a & b);
            }
            if family.len() > cap {
                return false;
            }
        }
        if family.len() == before {
            return true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattices_have_the_requested_size_and_are_lattices() {
        for size in 1..=16 {
            for seed in 0..20 {
                let p = random_lattice(size, seed).unwrap();
                assert_eq!(p.len(), size);
                let cert = certify(&p);
                assert!(
                    cert.is_lattice && cert.is_complete,
                    "size {size} seed {seed}"
                );
            }
        }
    }

    #[test]
    fn size_two_is_the_two_chain() {
        let p = random_lattice(2, 99).unwrap();
        assert!(p.leq(0, 1) || p.leq(1, 0));
    }

    #[test]
    fn same_seed_same_lattice() {
        for seed in [0, 1, 42, u64::MAX] {
            let a = random_lattice(9, seed).unwrap();
            let b = random_lattice(9, seed).unwrap();
            assert!(a.same_order(&b) && a.labels() == b.labels());
        }
    }

    #[test]
    fn both_shapes_occur() {
        let flags: Vec<bool> = (0..40)
            .map(|s| certify(&random_lattice(8, s).unwrap()).is_distributive)
            .collect();
        assert!(flags.contains(&true) && flags.contains(&false));
        let mut rng = seeded(3);
        for size in 5..=12 {
            let p = random_lattice_with(size, LatticeShape::NonDistributive, &mut rng).unwrap();
            assert!(!certify(&p).is_distributive);
            let d = random_lattice_with(size, LatticeShape::Distributive, &mut rng).unwrap();
            assert!(certify(&d).is_distributive);
        }
        assert!(random_lattice_with(4, LatticeShape::NonDistributive, &mut rng).is_err());
    }

    #[test]
    fn random_posets_are_deterministic_and_varied() {
        let a: Vec<Poset> = (0..10).map(|s| random_poset(6, &mut seeded(s))).collect();
        let b: Vec<Poset> = (0..10).map(|s| random_poset(6, &mut seeded(s))).collect();
        assert!(a.iter().zip(&b).all(|(x, y)| x.same_order(y)));
        assert!(a.iter().any(|p| p.covers().len() != a[0].covers().len()));
    }
}
