//! Brute-force reference evaluations used to gate the library's shortcuts.
//!
//! Nothing here calls the library's bound, infimum, filter, topology or
//! breadth routines: posets are read only through `leq`, and every notion
//! is evaluated straight from its definition over explicit subsets.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ordlab_core::Poset;

/// Explicit order relation, `rel[x][y]` iff `x <= y`.
pub struct Rel {
    pub n: usize,
    pub rel: Vec<Vec<bool>>,
}

impl Rel {
    pub fn of(p: &Poset) -> Rel {
        let n = p.len();
        Rel {
            n,
            rel: (0..n)
                .map(|x| (0..n).map(|y| p.leq(x, y)).collect())
                .collect(),
        }
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.rel[x][y]
    }

    pub fn members(&self, s: u64) -> Vec<usize> {
        (0..self.n).filter(|&i| s >> i & 1 == 1).collect()
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn upper(&self, s: u64) -> u64 {
        let m = self.members(s);
        (0..self.n)
            .filter(|&x| m.iter().all(|&a| self.leq(a, x)))
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn lower(&self, s: u64) -> u64 {
        let m = self.members(s);
        (0..self.n)
            .filter(|&x| m.iter().all(|&a| self.leq(x, a)))
            .fold(0, |acc, x| acc | 1 << x)
    }

    /// Largest lower bound, straight from the definition (including `inf ∅`).
    pub fn inf(&self, s: u64) -> Option<usize> {
        let lb = self.members(self.lower(s));
        lb.iter()
            .copied()
            .find(|&g| lb.iter().all(|&y| self.leq(y, g)))
    }

    pub fn sup(&self, s: u64) -> Option<usize> {
        let ub = self.members(self.upper(s));
        ub.iter()
            .copied()
            .find(|&g| ub.iter().all(|&y| self.leq(g, y)))
    }

    pub fn down(&self, x: usize) -> u64 {
        (0..self.n)
            .filter(|&y| self.leq(y, x))
            .fold(0, |acc, y| acc | 1 << y)
    }

    pub fn is_complete_lattice(&self) -> bool {
        (0..=self.full()).all(|s| self.inf(s).is_some() && self.sup(s).is_some())
    }
}

/// All subsets of `mask`.
pub fn submasks(mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut s = mask;
    loop {
        out.push(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & mask;
    }
    out
}

/// Members of the filter with generator `g` on a carrier of `n` points.
pub fn filter_members(n: usize, g: u64) -> Vec<u64> {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    submasks(full & !g).into_iter().map(|s| s | g).collect()
}

/// `ℱ^u` as the union of `F^u` over every member `F`.
pub fn filter_upper_by_union(r: &Rel, g: u64) -> u64 {
    filter_members(r.n, g)
        .into_iter()
        .fold(0, |acc, f| acc | r.upper(f))
}

pub fn filter_lower_by_union(r: &Rel, g: u64) -> u64 {
    filter_members(r.n, g)
        .into_iter()
        .fold(0, |acc, f| acc | r.lower(f))
}

/// `ℱ → x` evaluated from the union definition of `ℱ^u`, `ℱ^ℓ`.
pub fn order_converges(r: &Rel, g: u64, x: usize) -> bool {
    r.inf(filter_upper_by_union(r, g)) == Some(x) && r.sup(filter_lower_by_union(r, g)) == Some(x)
}

/// Star-convergence with super-filters enumerated as families: a filter
/// contains another iff its generator is a subset of the other's.
pub fn star_converges(r: &Rel, g: u64, x: usize) -> bool {
    submasks(g).into_iter().filter(|&f1| f1 != 0).all(|f1| {
        submasks(f1)
            .into_iter()
            .filter(|&h| h != 0)
            .any(|h| order_converges(r, h, x))
    })
}

/// Every family of subsets of an `n`-set (`n <= 4`) satisfying the three
/// filter axioms, as bit masks over the `2^n` subsets.
pub fn filters_by_axioms(n: usize) -> Vec<u64> {
    assert!(n <= 4);
    let subsets = 1usize << n;
    let full = (1usize << n) - 1;
    let mut out = Vec::new();
    for family in 0u64..1 << subsets {
        let has = |s: usize| family >> s & 1 == 1;
        let members: Vec<usize> = (0..subsets).filter(|&s| has(s)).collect();
        if has(0) {
            continue;
        }
        let meets = members.iter().all(|&a| members.iter().all(|&b| has(a & b)));
        let upward = members
            .iter()
            .all(|&a| (0..subsets).filter(|&u| u & a == a).all(|u| has(u & full)));
        if meets && upward {
            out.push(family);
        }
    }
    out
}

/// Every topology on an `n`-set (`n <= 4`), as bit masks over the `2^n` subsets.
pub fn all_topologies(n: usize) -> Vec<u64> {
    assert!(n <= 4);
    let subsets = 1usize << n;
    let full = subsets - 1;
    let mut out = Vec::new();
    for family in 0u64..1 << subsets {
        let has = |s: usize| family >> s & 1 == 1;
        if !has(0) || !has(full) {
            continue;
        }
        let members: Vec<usize> = (0..subsets).filter(|&s| has(s)).collect();
        if members
            .iter()
            .all(|&a| members.iter().all(|&b| has(a | b) && has(a & b)))
        {
            out.push(family);
        }
    }
    out
}

/// The coarsest topology in which every set of `closed` is closed: the
/// intersection of all topologies that qualify. Returned as sorted open sets.
pub fn coarsest_with_closed(n: usize, topologies: &[u64], closed: &[u64]) -> Vec<u64> {
    let full = (1u64 << n) - 1;
    let coarsest = topologies
        .iter()
        .filter(|&&t| closed.iter().all(|&c| t >> (full & !c) & 1 == 1))
        .fold(u64::MAX, |acc, &t| acc & t);
    (0..1u64 << n).filter(|&s| coarsest >> s & 1 == 1).collect()
}

/// Hausdorff property over an explicit open family.
pub fn hausdorff_by_family(n: usize, opens: &[u64]) -> bool {
    (0..n).all(|x| {
        (0..n).filter(|&y| y != x).all(|y| {
            opens
                .iter()
                .any(|&u| u >> x & 1 == 1 && opens.iter().any(|&v| v >> y & 1 == 1 && u & v == 0))
        })
    })
}

/// Continuity over explicit open families: every open preimage is open.
pub fn continuous_by_family(map: &[usize], dom_opens: &[u64], cod_opens: &[u64]) -> bool {
    let dom: BTreeSet<u64> = dom_opens.iter().copied().collect();
    cod_opens.iter().all(|&u| {
        let pre = map
            .iter()
            .enumerate()
            .filter(|&(_, &y)| u >> y & 1 == 1)
            .fold(0u64, |acc, (x, _)| acc | 1 << x);
        dom.contains(&pre)
    })
}

/// Complete homomorphism by definition: every subset's infimum and supremum
/// are carried to the infimum and supremum of the image.
pub fn is_complete_hom(dom: &Rel, cod: &Rel, map: &[usize]) -> bool {
    (0..=dom.full()).all(|s| {
        let image = dom
            .members(s)
            .iter()
            .fold(0u64, |acc, &x| acc | 1 << map[x]);
        dom.inf(s).map(|i| map[i]) == cod.inf(image) && dom.sup(s).map(|i| map[i]) == cod.sup(image)
    })
}

/// Breadth `<= n` by definition: every nonempty `F` has `A ⊆ F`, `|A| <= n`,
/// with `inf A = inf F`.
pub fn breadth_at_most(r: &Rel, n: usize) -> bool {
    (1..=r.full()).all(|f| {
        let target = r.inf(f);
        submasks(f)
            .into_iter()
            .any(|a| a.count_ones() as usize <= n && r.inf(a) == target)
    })
}

/// Least `n >= 1` with breadth `<= n`.
pub fn breadth(r: &Rel) -> usize {
    (1..=r.n)
        .find(|&n| breadth_at_most(r, n))
        .unwrap_or(r.n.max(1))
}
