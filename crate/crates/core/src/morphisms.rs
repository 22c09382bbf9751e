//! Maps between finite lattices: classification, preimages of intervals,
//! continuity, image filters, and the filter-convergence preservation checks.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::filters::{SetFilter, StarReading};
use crate::lattice::Lattice;
use crate::limits::{guard, Limits};
use crate::order::Poset;
use crate::set::ElementSet;
use crate::topology::FiniteTopology;

/// Strongest structure a map preserves. Variants are ordered weakest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomClass {
    NotOrderPreserving,
    OrderPreserving,
    /// Preserves binary meets and joins.
    LatticeHom,
    /// Preserves infima and suprema of all subsets, `∅` included.
    CompleteHom,
}

impl HomClass {
    pub fn name(self) -> &'static str {
        match self {
            HomClass::NotOrderPreserving => "not-order-preserving",
            HomClass::OrderPreserving => "order-preserving",
            HomClass::LatticeHom => "lattice-hom",
            HomClass::CompleteHom => "complete-hom",
        }
    }
}

/// A total map between two finite lattices with its classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeHom<'a> {
    domain: &'a Lattice,
    codomain: &'a Lattice,
    map: Vec<usize>,
    class: HomClass,
}

impl<'a> LatticeHom<'a> {
    /// Checks totality and classifies `map` exhaustively.
    pub fn classify(domain: &'a Lattice, codomain: &'a Lattice, map: Vec<usize>) -> Result<Self> {
        check_map(domain.len(), codomain.len(), &map)?;
        let class = classify_map(domain, codomain, &map);
        Ok(LatticeHom {
            domain,
            codomain,
            map,
            class,
        })
    }

    pub fn domain(&self) -> &'a Lattice {
        self.domain
    }

    pub fn codomain(&self) -> &'a Lattice {
        self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn class(&self) -> HomClass {
        self.class
    }

    pub fn is_complete(&self) -> bool {
        self.class == HomClass::CompleteHom
    }

    /// `f⁻¹([x, y])` and whether it is an interval `[inf, sup]` of itself.
    pub fn preimage_interval(&self, x: usize, y: usize) -> Result<PreimageReport> {
        self.codomain.check_element(x)?;
        self.codomain.check_element(y)?;
        if !self.codomain.leq(x, y) {
            return Err(Error::NotAnInterval { lower: x, upper: y });
        }
        let preimage = self.codomain.interval(x, y).preimage(&self.map);
        if preimage.is_empty() {
            return Ok(PreimageReport::Empty);
        }
        let lower = self.domain.inf(preimage);
        let upper = self.domain.sup(preimage);
        let span = self.domain.interval(lower, upper);
        Ok(match ((span - preimage) | (preimage - span)).first() {
            None => PreimageReport::Interval { lower, upper },
            Some(witness) => PreimageReport::NonInterval {
                preimage,
                lower,
                upper,
                witness,
            },
        })
    }

    /// First codomain interval (in index order) whose preimage is neither
    /// empty nor an interval.
    pub fn find_non_interval_preimage(&self) -> Option<(usize, usize, PreimageReport)> {
        let n = self.codomain.len();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.codomain.leq(x, y))
            .find_map(|(x, y)| {
                let report = self.preimage_interval(x, y).expect("x <= y checked");
                matches!(report, PreimageReport::NonInterval { .. }).then_some((x, y, report))
            })
    }

    /// First subbasic closed set `↓y` or `↑y` of the codomain whose preimage
    /// is neither empty nor of the same form in the domain.
    pub fn find_non_subbasic_preimage(&self) -> Option<SubbasicFailure> {
        let (dom, cod) = (self.domain.poset(), self.codomain.poset());
        for kind in [SubbasicKind::Down, SubbasicKind::Up] {
            for y in 0..cod.len() {
                let closed = match kind {
                    SubbasicKind::Down => cod.down_set(y),
                    SubbasicKind::Up => cod.up_set(y),
                };
                let preimage = closed.preimage(&self.map);
                let principal = match kind {
                    SubbasicKind::Down => dom.greatest(preimage).map(|g| dom.down_set(g)),
                    SubbasicKind::Up => dom.least(preimage).map(|g| dom.up_set(g)),
                };
                if !preimage.is_empty() && principal != Some(preimage) {
                    return Some(SubbasicFailure {
                        kind,
                        point: y,
                        preimage,
                    });
                }
            }
        }
        None
    }
}

/// Result of pulling a codomain interval back along a map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PreimageReport {
    Empty,
    /// The preimage is exactly `[lower, upper]`.
    Interval {
        lower: usize,
        upper: usize,
    },
    /// `witness` lies in exactly one of the preimage and `[lower, upper]`.
    NonInterval {
        preimage: ElementSet,
        lower: usize,
        upper: usize,
        witness: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubbasicKind {
    /// `↓y`
    Down,
    /// `↑y`
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubbasicFailure {
    pub kind: SubbasicKind,
    pub point: usize,
    pub preimage: ElementSet,
}

fn check_map(domain: usize, codomain: usize, map: &[usize]) -> Result<()> {
    if map.len() != domain {
        return Err(Error::MapNotTotal {
            expected: domain,
            found: map.len(),
        });
    }
    match map.iter().enumerate().find(|(_, &y)| y >= codomain) {
        Some((element, &image)) => Err(Error::MapOutOfRange { element, image }),
        None => Ok(()),
    }
}

/// `x <= y ⇒ f(x) <= f(y)` for all pairs.
pub fn is_order_preserving(domain: &Poset, codomain: &Poset, map: &[usize]) -> bool {
    let n = domain.len();
    (0..n).all(|x| {
        domain
            .up_set(x)
            .iter()
            .all(|y| codomain.leq(map[x], map[y]))
    })
}

fn preserves_binary(domain: &Lattice, codomain: &Lattice, map: &[usize]) -> bool {
    let n = domain.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            map[domain.meet(x, y)] == codomain.meet(map[x], map[y])
                && map[domain.join(x, y)] == codomain.join(map[x], map[y])
        })
    })
}

/// Classification with completeness decided as: lattice hom that sends
/// bottom to bottom and top to top. On finite lattices this agrees with
/// [`preserves_all_extrema`].
fn classify_map(domain: &Lattice, codomain: &Lattice, map: &[usize]) -> HomClass {
    if !is_order_preserving(domain, codomain, map) {
        HomClass::NotOrderPreserving
    } else if !preserves_binary(domain, codomain, map) {
        HomClass::OrderPreserving
    } else if map[domain.bottom()] == codomain.bottom() && map[domain.top()] == codomain.top() {
        HomClass::CompleteHom
    } else {
        HomClass::LatticeHom
    }
}

/// Definition-literal completeness: `f(inf S) = inf f(S)` and
/// `f(sup S) = sup f(S)` for every one of the `2^n` subsets `S`.
pub fn preserves_all_extrema(
    domain: &Lattice,
    codomain: &Lattice,
    map: &[usize],
    limits: &Limits,
) -> Result<bool> {
    check_map(domain.len(), codomain.len(), map)?;
    limits.check_exhaustive("complete-hom subset scan", domain.len())?;
    Ok(domain.carrier().subsets().all(|s| {
        let image = s.image(map);
        map[domain.inf(s)] == codomain.inf(image) && map[domain.sup(s)] == codomain.sup(image)
    }))
}

/// Whether `map` is continuous from `domain` to `codomain`.
pub fn is_continuous(
    map: &[usize],
    domain: &FiniteTopology,
    codomain: &FiniteTopology,
) -> Result<bool> {
    domain.pulls_back_opens(codomain, map)
}

/// The filter generated by the pointwise images of the members of `filter`.
/// Its generator is the image of the generator.
pub fn image_filter<'b>(
    map: &[usize],
    filter: &SetFilter<'_>,
    codomain: &'b Poset,
) -> Result<SetFilter<'b>> {
    check_map(filter.poset().len(), codomain.len(), map)?;
    SetFilter::principal(codomain, filter.generator().image(map))
}

/// Which filters a preservation check walks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterScope {
    /// Every filter on the domain.
    All,
    /// Only filters generated by a single point. Sound wherever the
    /// convergent filters are exactly the point-generated ones.
    PointGenerated,
}

/// Largest carrier on which the test suite confirms exhaustively that the
/// order-convergent filters are exactly the point-generated ones.
pub const POINT_FILTERS_CONFIRMED_UP_TO: usize = 6;

impl FilterScope {
    pub fn for_domain(size: usize) -> FilterScope {
        if size <= POINT_FILTERS_CONFIRMED_UP_TO {
            FilterScope::PointGenerated
        } else {
            FilterScope::All
        }
    }

    fn generators(self, poset: &Poset, limits: &Limits) -> Result<Vec<ElementSet>> {
        match self {
            FilterScope::PointGenerated => {
                Ok((0..poset.len()).map(ElementSet::singleton).collect())
            }
            FilterScope::All => {
                limits.check_exhaustive("filter enumeration", poset.len())?;
                Ok(poset
                    .carrier()
                    .subsets()
                    .filter(|s| !s.is_empty())
                    .collect())
            }
        }
    }
}

/// Outcome of a preservation check over filter/point pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreservationReport {
    pub scope: FilterScope,
    pub filters_checked: usize,
    /// Pairs `(F, x)` satisfying the hypothesis.
    pub pairs_checked: usize,
    /// First pair whose image fails the conclusion.
    pub violation: Option<(ElementSet, usize)>,
}

impl PreservationReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// For every filter `F → x` on the domain, checks `f(F) → f(x)`.
pub fn check_order_convergence_preserved(
    h: &LatticeHom<'_>,
    limits: &Limits,
) -> Result<PreservationReport> {
    check_order_convergence_preserved_in(h, FilterScope::for_domain(h.domain.len()), limits)
}

pub fn check_order_convergence_preserved_in(
    h: &LatticeHom<'_>,
    scope: FilterScope,
    limits: &Limits,
) -> Result<PreservationReport> {
    preservation(h, scope, limits, |f, x| Ok(f.order_converges(x)))
}

/// For every filter star-converging to `x` on the domain, checks that its
/// image star-converges to `f(x)`.
pub fn check_star_convergence_preserved(
    h: &LatticeHom<'_>,
    limits: &Limits,
) -> Result<PreservationReport> {
    check_star_convergence_preserved_in(h, FilterScope::for_domain(h.domain.len()), limits)
}

pub fn check_star_convergence_preserved_in(
    h: &LatticeHom<'_>,
    scope: FilterScope,
    limits: &Limits,
) -> Result<PreservationReport> {
    preservation(h, scope, limits, |f, x| {
        f.star_converges_with(x, StarReading::NestedConverges, limits)
    })
}

fn preservation(
    h: &LatticeHom<'_>,
    scope: FilterScope,
    limits: &Limits,
    converges: impl Fn(&SetFilter<'_>, usize) -> Result<bool>,
) -> Result<PreservationReport> {
    if !h.is_complete() {
        return Err(Error::NotCompleteHom);
    }
    let (dom, cod) = (h.domain.poset(), h.codomain.poset());
    let generators = scope.generators(dom, limits)?;
    let mut report = PreservationReport {
        scope,
        filters_checked: generators.len(),
        pairs_checked: 0,
        violation: None,
    };
    for g in generators {
        let filter = SetFilter::principal(dom, g)?;
        for x in 0..dom.len() {
            if !converges(&filter, x)? {
                continue;
            }
            report.pairs_checked += 1;
            let image = image_filter(&h.map, &filter, cod)?;
            if !converges(&image, h.map[x])? {
                report.violation = Some((g, x));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// For filters `G ⊇ F` (as families) on the domain of `map`, whether
/// `f(G) ⊇ f(F)`. Fails if `g` is not a super-filter of `f`.
pub fn check_image_monotone(
    map: &[usize],
    f: &SetFilter<'_>,
    g: &SetFilter<'_>,
    codomain: &Poset,
) -> Result<bool> {
    if !f.is_contained_in(g) {
        return Err(Error::NotSuperFilter);
    }
    let image_f = image_filter(map, f, codomain)?;
    let image_g = image_filter(map, g, codomain)?;
    // f(G) ⊇ f(F) iff every member of f(F) lies in f(G), iff gen f(G) ⊆ gen f(F)
    Ok(image_g.generator().is_subset(image_f.generator()))
}

/// Every total map `{0..domain} → {0..codomain}` in lexicographic order.
pub fn all_maps(
    domain: usize,
    codomain: usize,
    limits: &Limits,
) -> Result<impl Iterator<Item = Vec<usize>>> {
    guard(
        "map candidates",
        candidates(domain, codomain),
        limits.map_candidates,
    )?;
    let mut next = (codomain > 0 || domain == 0).then(|| vec![0usize; domain]);
    Ok(core::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut i = domain;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < codomain {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }))
}

fn candidates(domain: usize, codomain: usize) -> u128 {
    (0..domain).fold(1u128, |acc, _| acc.saturating_mul(codomain as u128))
}

/// All maps `domain → codomain` whose class is at least `at_least`, sorted by map.
///
/// When order preservation is required, assignments are pruned against
/// already-assigned comparable elements.
pub fn enumerate_homs<'a>(
    domain: &'a Lattice,
    codomain: &'a Lattice,
    at_least: HomClass,
    limits: &Limits,
) -> Result<Vec<LatticeHom<'a>>> {
    let (n, m) = (domain.len(), codomain.len());
    guard("map candidates", candidates(n, m), limits.map_candidates)?;
    let prune = at_least >= HomClass::OrderPreserving;
    // linear extension: fewer elements below comes first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (domain.down_set(x).len(), x));

    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut assigned = ElementSet::EMPTY;
    fill(
        domain,
        codomain,
        &order,
        0,
        prune,
        &mut map,
        &mut assigned,
        &mut |map| {
            let class = classify_map(domain, codomain, map);
            if class >= at_least {
                out.push(LatticeHom {
                    domain,
                    codomain,
                    map: map.to_vec(),
                    class,
                });
            }
        },
    );
    out.sort_by(|a, b| a.map.cmp(&b.map));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    domain: &Lattice,
    codomain: &Lattice,
    order: &[usize],
    depth: usize,
    prune: bool,
    map: &mut [usize],
    assigned: &mut ElementSet,
    emit: &mut impl FnMut(&[usize]),
) {
    if depth == order.len() {
        emit(map);
        return;
    }
    let x = order[depth];
    for y in 0..codomain.len() {
        if prune {
            let below_ok = (domain.down_set(x) & *assigned)
                .iter()
                .all(|z| codomain.leq(map[z], y));
            let above_ok = (domain.up_set(x) & *assigned)
                .iter()
                .all(|z| codomain.leq(y, map[z]));
            if !(below_ok && above_ok) {
                continue;
            }
        }
        map[x] = y;
        *assigned = assigned.with(x);
        fill(
            domain,
            codomain,
            order,
            depth + 1,
            prune,
            map,
            assigned,
            emit,
        );
        *assigned = assigned.without(x);
    }
    map[x] = usize::MAX;
}
