//! Standard small posets and lattices.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::{product, Poset};
use crate::set::ElementSet;

/// The chain `0 < 1 < .. < k-1`, labelled by its digits. `chain(2)` is the lattice `2`.
pub fn chain(k: usize) -> Poset {
    assert!((1..=64).contains(&k), "chain length must be in 1..=64");
    let labels: Vec<String> = (0..k).map(|i| i.to_string()).collect();
    let covers: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    Poset::from_covers(labels, &covers).expect("chain covers are valid")
}

/// `k` pairwise incomparable elements `a0, a1, ..`.
pub fn antichain(k: usize) -> Poset {
    assert!((1..=64).contains(&k), "antichain size must be in 1..=64");
    let labels: Vec<String> = (0..k).map(|i| format!("a{i}")).collect();
    Poset::from_covers(labels, &[]).expect("antichain is valid")
}

/// An antichain of `k` atoms with a bottom `0` and top `1` added.
/// `bounded_antichain(3)` is M3.
pub fn bounded_antichain(k: usize) -> Poset {
    assert!((1..=62).contains(&k), "atom count must be in 1..=62");
    let mut labels = Vec::with_capacity(k + 2);
    labels.push("0".to_string());
    labels.extend((0..k).map(|i| atom_label(i, k)));
    labels.push("1".to_string());
    let mut covers = Vec::with_capacity(2 * k);
    for i in 1..=k {
        covers.push((0, i));
        covers.push((i, k + 1));
    }
    Poset::from_covers(labels, &covers).expect("bounded antichain covers are valid")
}

fn atom_label(i: usize, k: usize) -> String {
    if k <= 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("a{i}")
    }
}

/// The diamond: `0 < a, b, c < 1`.
pub fn m3() -> Poset {
    bounded_antichain(3)
}

/// The pentagon: `0 < a < b < 1` and `0 < c < 1`.
pub fn n5() -> Poset {
    Poset::from_covers(
        alloc::vec!["0", "a", "b", "c", "1"],
        &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
    )
    .expect("pentagon covers are valid")
}

/// `2^n`: `n`-bit vectors ordered pointwise, labelled by their bit strings
/// with position 0 first. Indices follow the product convention, so the
/// index of a vector is its label read as a binary number.
pub fn boolean_power(n: usize, limits: &Limits) -> Result<Poset> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    limits.check_relational("boolean power size", 1u128 << n.min(127))?;
    let size = 1usize << n;
    let labels: Vec<String> = (0..size).map(|i| bit_label(i, n)).collect();
    let mut covers = Vec::new();
    for x in 0..size {
        for b in 0..n {
            if x & (1 << b) == 0 {
                covers.push((x, x | (1 << b)));
            }
        }
    }
    Poset::from_covers(labels, &covers)
}

fn bit_label(index: usize, n: usize) -> String {
    (0..n)
        .map(|pos| {
            if index >> (n - 1 - pos) & 1 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

/// Parses a library name: `2`, `chain<k>`, `antichain<k>`, `M<k>` (bounded
/// antichain), `M3`, `N5`, `2^<n>` or `bool<n>`.
pub fn by_name(name: &str, limits: &Limits) -> Option<Result<Poset>> {
    let count = |s: &str| s.parse::<usize>().ok().filter(|&k| k >= 1);
    if name == "2" {
        return Some(Ok(chain(2)));
    }
    if name == "N5" {
        return Some(Ok(n5()));
    }
    if let Some(k) = name.strip_prefix("chain").and_then(count) {
        return Some(guarded(k, 64, "chain length").map(|_| chain(k)));
    }
    if let Some(k) = name.strip_prefix("antichain").and_then(count) {
        return Some(guarded(k, 64, "antichain size").map(|_| antichain(k)));
    }
    if let Some(k) = name.strip_prefix('M').and_then(count) {
        return Some(guarded(k, 62, "atom count").map(|_| bounded_antichain(k)));
    }
    let power = name
        .strip_prefix("2^")
        .or_else(|| name.strip_prefix("bool"));
    if let Some(n) = power.and_then(count) {
        return Some(boolean_power(n, limits));
    }
    None
}

fn guarded(k: usize, max: usize, what: &'static str) -> Result<()> {
    crate::limits::guard(what, k as u128, max as u128)
}

/// Named lattices used by campaigns: chains, bounded antichains, boolean
/// powers, M3, N5 and binary products of small chains, each with at most
/// `max_size` elements. Order is deterministic.
pub fn standard_lattices(max_size: usize) -> Vec<(String, Poset)> {
    let limits = Limits::default();
    let mut out: Vec<(String, Poset)> = Vec::new();
    for k in 1..=max_size.min(64) {
        out.push((format!("chain{k}"), chain(k)));
    }
    for n in 2..=6 {
        if 1usize << n <= max_size {
            out.push((
                format!("2^{n}"),
                boolean_power(n, &limits).expect("within limits"),
            ));
        }
    }
    for k in 3..=max_size.saturating_sub(2).min(62) {
        out.push((format!("M{k}"), bounded_antichain(k)));
    }
    if max_size >= 5 {
        out.push(("N5".into(), n5()));
    }
    for a in 2..=max_size {
        for b in a..=max_size {
            if a * b <= max_size && a * b > 4 {
                let p = product(&[&chain(a), &chain(b)], &limits).expect("within limits");
                out.push((format!("chain{a}xchain{b}"), p));
            }
        }
    }
    out
}

/// Every poset on `{0, .., n-1}` whose order refines the integer order
/// (`x <= y` in the poset implies `x <= y` as integers). Each poset of size `n` is isomorphic to at least one of these.
pub fn naturally_labelled_posets(n: usize) -> Vec<Poset> {
    assert!(
        (1..=7).contains(&n),
        "natural labellings are enumerated for 1..=7 elements"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .collect();
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        // strict up-set masks; transitivity checked directly
        let mut up = alloc::vec![ElementSet::EMPTY; n];
        for (b, &(x, y)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                up[x] = up[x].with(y);
            }
        }
        let transitive = (0..n).all(|x| up[x].iter().all(|y| up[y].is_subset(up[x])));
        if transitive {
            let up = (0..n).map(|x| up[x].with(x)).collect();
            out.push(Poset::from_up_sets(labels.clone(), up));
        }
    }
    out
}
