//! Finite posets stored as principal down-set and up-set masks.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::set::{ElementSet, MAX_CARRIER};

/// A finite partially ordered set on `{0, .., n-1}` with display labels.
///
/// `down[x]` holds `↓x = {y : y <= x}` and `up[x]` holds `↑x`. Values are
/// immutable once built; every constructor establishes reflexivity,
/// antisymmetry and transitivity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    labels: Vec<String>,
    down: Vec<ElementSet>,
    up: Vec<ElementSet>,
}

impl Poset {
    /// Builds a poset from its Hasse diagram.
    ///
    /// Each pair `(i, j)` states that `labels[i]` is covered by `labels[j]`.
    /// The order is the reflexive-transitive closure. Edges that repeat,
    /// loop, or are implied by other edges are rejected: the input must be
    /// exactly a cover relation.
    pub fn from_covers<S: Into<String>>(
        labels: Vec<S>,
        covers: &[(usize, usize)],
    ) -> Result<Poset> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        check_labels(&labels)?;

        let mut succ = vec![ElementSet::EMPTY; n];
        for &(i, j) in covers {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, size: n });
                }
            }
            if i == j {
                return Err(Error::Cycle { element: i });
            }
            if succ[i].contains(j) {
                return Err(Error::NotACover { lower: i, upper: j });
            }
            succ[i] = succ[i].with(j);
        }

        let order = topological_order(&succ)?;

        // strict up-sets, filled from maximal elements downwards
        let mut strict_up = vec![ElementSet::EMPTY; n];
        for &x in order.iter().rev() {
            strict_up[x] = succ[x].iter().fold(succ[x], |acc, s| acc | strict_up[s]);
        }

        for &(i, j) in covers {
            let implied = (succ[i].without(j))
                .iter()
                .any(|k| strict_up[k].contains(j));
            if implied {
                return Err(Error::NotACover { lower: i, upper: j });
            }
        }

        let up: Vec<ElementSet> = (0..n).map(|x| strict_up[x].with(x)).collect();
        Ok(Poset::from_up_sets(labels, up))
    }

    /// Builds a poset from a relation given by `leq(x, y)`, checking the axioms.
    pub fn from_relation<S, F>(labels: Vec<S>, leq: F) -> Result<Poset>
    where
        S: Into<String>,
        F: Fn(usize, usize) -> bool,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_labels(&labels)?;
        let n = labels.len();
        let up: Vec<ElementSet> = (0..n)
            .map(|x| (0..n).filter(|&y| leq(x, y)).collect())
            .collect();
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::NotACover { lower: x, upper: x });
            }
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::Cycle { element: x });
                }
                if !up[y].is_subset(up[x]) {
                    // not transitive: some z above y is not above x
                    let z = (up[y] - up[x]).first().unwrap_or(y);
                    return Err(Error::NotACover { lower: x, upper: z });
                }
            }
        }
        Ok(Poset::from_up_sets(labels, up))
    }

    /// Trusted constructor: `up` must already be a partial order.
    pub(crate) fn from_up_sets(labels: Vec<String>, up: Vec<ElementSet>) -> Poset {
        let n = labels.len();
        let mut down = vec![ElementSet::EMPTY; n];
        for (x, u) in up.iter().enumerate() {
            for y in u.iter() {
                down[y] = down[y].with(x);
            }
        }
        Poset { labels, down, up }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: a poset has at least one element.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                size: self.len(),
            })
        }
    }

    pub fn check_set(&self, s: ElementSet) -> Result<()> {
        match (s - self.carrier()).first() {
            None => Ok(()),
            Some(index) => Err(Error::IndexOutOfRange {
                index,
                size: self.len(),
            }),
        }
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// `↓x = {y : y <= x}`.
    #[inline]
    pub fn down_set(&self, x: usize) -> ElementSet {
        self.down[x]
    }

    /// `↑x = {y : x <= y}`.
    #[inline]
    pub fn up_set(&self, x: usize) -> ElementSet {
        self.up[x]
    }

    /// Closed interval `[x, y] = ↑x ∩ ↓y`; empty unless `x <= y`.
    pub fn interval(&self, x: usize, y: usize) -> ElementSet {
        self.up[x] & self.down[y]
    }

    pub fn is_down_set(&self, d: ElementSet) -> bool {
        d.iter().all(|x| self.down[x].is_subset(d))
    }

    pub fn is_up_set(&self, u: ElementSet) -> bool {
        u.iter().all(|x| self.up[x].is_subset(u))
    }

    /// `S^u`, the elements above every member of `s`. `∅^u` is the carrier.
    pub fn upper_bounds(&self, s: ElementSet) -> ElementSet {
        s.iter().fold(self.carrier(), |acc, x| acc & self.up[x])
    }

    /// `S^ℓ`, the elements below every member of `s`.
    pub fn lower_bounds(&self, s: ElementSet) -> ElementSet {
        s.iter().fold(self.carrier(), |acc, x| acc & self.down[x])
    }

    /// The largest element of `s`, if it has one.
    pub fn greatest(&self, s: ElementSet) -> Option<usize> {
        s.iter().find(|&g| s.is_subset(self.down[g]))
    }

    /// The smallest element of `s`, if it has one.
    pub fn least(&self, s: ElementSet) -> Option<usize> {
        s.iter().find(|&g| s.is_subset(self.up[g]))
    }

    /// Greatest lower bound of `s`. `inf(∅)` is the top element when one exists.
    pub fn infimum(&self, s: ElementSet) -> Option<usize> {
        self.greatest(self.lower_bounds(s))
    }

    /// Least upper bound of `s`. `sup(∅)` is the bottom element when one exists.
    pub fn supremum(&self, s: ElementSet) -> Option<usize> {
        self.least(self.upper_bounds(s))
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.greatest(self.down[x] & self.down[y])
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.least(self.up[x] & self.up[y])
    }

    pub fn bottom(&self) -> Option<usize> {
        self.least(self.carrier())
    }

    pub fn top(&self) -> Option<usize> {
        self.greatest(self.carrier())
    }

    /// Hasse diagram: pairs `(x, y)` with `y` covering `x`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for y in 0..self.len() {
            let below = self.down[y].without(y);
            let mut not_covered = ElementSet::EMPTY;
            for z in below.iter() {
                not_covered = not_covered | self.down[z].without(z);
            }
            for x in (below - not_covered).iter() {
                out.push((x, y));
            }
        }
        out.sort_unstable();
        out
    }

    /// Number of covers on a longest chain.
    pub fn height(&self) -> usize {
        // longest chain ending at x, processed in an order compatible with <=
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.down[x].len());
        let mut best = vec![0usize; self.len()];
        for &x in &order {
            best[x] = self.down[x]
                .without(x)
                .iter()
                .map(|y| best[y] + 1)
                .max()
                .unwrap_or(0);
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// The same carrier and labels with the order reversed.
    pub fn dual(&self) -> Poset {
        Poset {
            labels: self.labels.clone(),
            down: self.up.clone(),
            up: self.down.clone(),
        }
    }

    /// Whether two posets have the same order on identical indices (labels ignored).
    pub fn same_order(&self, other: &Poset) -> bool {
        self.down == other.down
    }

    /// True iff `map` is a bijection onto `other` that preserves and reflects order.
    pub fn is_isomorphism(&self, other: &Poset, map: &[usize]) -> bool {
        let n = self.len();
        if other.len() != n || map.len() != n {
            return false;
        }
        let image: ElementSet = map.iter().copied().collect();
        if map.iter().any(|&m| m >= n) || image.len() != n {
            return false;
        }
        (0..n).all(|x| (0..n).all(|y| self.leq(x, y) == other.leq(map[x], map[y])))
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    if labels.len() > MAX_CARRIER {
        return Err(Error::LimitExceeded {
            what: "poset elements",
            size: labels.len() as u128,
            limit: MAX_CARRIER as u128,
        });
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Kahn's algorithm over successor masks. On a cycle, reports an element on it.
fn topological_order(succ: &[ElementSet]) -> Result<Vec<usize>> {
    let n = succ.len();
    let mut indegree = vec![0usize; n];
    for s in succ {
        for j in s.iter() {
            indegree[j] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = ready.pop() {
        order.push(x);
        for j in succ[x].iter() {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.push(j);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // every unplaced node has an unplaced predecessor; walking back n steps lands on a cycle
    let mut x = (0..n).find(|&x| indegree[x] > 0).unwrap_or(0);
    for _ in 0..n {
        x = (0..n)
            .find(|&p| indegree[p] > 0 && succ[p].contains(x))
            .unwrap_or(x);
    }
    Err(Error::Cycle { element: x })
}

/// Mixed-radix indexing of tuples: the last coordinate varies fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleIndex {
    radices: Vec<usize>,
}

impl TupleIndex {
    pub fn new(radices: Vec<usize>) -> TupleIndex {
        TupleIndex { radices }
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    /// Total number of tuples, saturating.
    pub fn count(&self) -> u128 {
        self.radices
            .iter()
            .fold(1u128, |acc, &r| acc.saturating_mul(r as u128))
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.radices)
            .fold(0, |acc, (&c, &r)| acc * r + c)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut coords = vec![0; self.radices.len()];
        for (c, &r) in coords.iter_mut().zip(&self.radices).rev() {
            *c = index % r;
            index /= r;
        }
        coords
    }

    /// Coordinate `j` of the tuple with the given index.
    pub fn coordinate(&self, index: usize, j: usize) -> usize {
        let stride: usize = self.radices[j + 1..].iter().product();
        (index / stride) % self.radices[j]
    }
}

/// Pointwise product. Tuples are indexed by [`TupleIndex`] over the factor sizes;
/// labels render as `(a,b,..)`. A single factor is returned unchanged.
pub fn product(factors: &[&Poset], limits: &Limits) -> Result<Poset> {
    if factors.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    if let [only] = factors {
        limits.check_relational("product size", only.len() as u128)?;
        return Ok((*only).clone());
    }
    let index = TupleIndex::new(factors.iter().map(|p| p.len()).collect());
    limits.check_relational("product size", index.count())?;
    let n = index.count() as usize;
    let tuples: Vec<Vec<usize>> = (0..n).map(|i| index.decode(i)).collect();
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().zip(factors).map(|(&c, p)| p.label(c)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let up = tuples
        .iter()
        .map(|t| {
            (0..n)
                .filter(|&o| {
                    t.iter()
                        .zip(&tuples[o])
                        .zip(factors)
                        .all(|((&a, &b), p)| p.leq(a, b))
                })
                .collect()
        })
        .collect();
    Ok(Poset::from_up_sets(labels, up))
}
