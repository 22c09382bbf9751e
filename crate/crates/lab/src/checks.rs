//! The single checks behind each subcommand. Campaigns call the same
//! functions, so a witness they emit replays through the CLI unchanged.

use ordlab_core::breadth::{
    compute_breadth, compute_dual_breadth, e_family_set, has_breadth_at_most, is_irredundant,
};
use ordlab_core::filters::StarReading;
use ordlab_core::morphisms::{
    check_image_monotone, check_order_convergence_preserved, check_star_convergence_preserved,
    is_continuous, is_order_preserving, FilterScope, HomClass, PreimageReport, PreservationReport,
    SubbasicKind,
};
use ordlab_core::topology::{
    interval_topology, lower_topology, product_topology, upper_topology, FiniteTopology,
};
use ordlab_core::{certify, product, ElementSet, Lattice, LatticeHom, Limits, Poset, SetFilter};
use serde::Serialize;

use crate::error::{Context, LabError, LabResult};
use crate::io::{labels_of, FilterLiteral, PosetFile};

/// A check's JSON output and, when it contradicts an expected law, why.
#[derive(Debug)]
pub struct Verdict<T> {
    pub output: T,
    pub violation: Option<String>,
}

impl<T> Verdict<T> {
    fn new(output: T, violation: Option<String>) -> Self {
        Verdict { output, violation }
    }

    pub fn failed(&self) -> bool {
        self.violation.is_some()
    }
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub size: usize,
    pub is_lattice: bool,
    pub is_complete: bool,
    pub is_distributive: bool,
    pub cross_identity: bool,
    pub bottom: Option<String>,
    pub top: Option<String>,
}

pub fn check(p: &Poset) -> CheckReport {
    let cert = certify(p);
    CheckReport {
        size: p.len(),
        is_lattice: cert.is_lattice,
        is_complete: cert.is_complete,
        is_distributive: cert.is_distributive,
        cross_identity: cert.cross_identity,
        bottom: cert.bottom.map(|x| p.label(x).to_string()),
        top: cert.top.map(|x| p.label(x).to_string()),
    }
}

#[derive(Debug, Serialize)]
pub struct BreadthOutput {
    pub breadth: usize,
    pub witness: Vec<String>,
}

/// Breadth (or dual breadth) with an independent re-check of the witness
/// and of the bound. `expect` adds an equality requirement.
pub fn breadth(
    p: &Poset,
    dual: bool,
    expect: Option<usize>,
    limits: &Limits,
) -> LabResult<Verdict<BreadthOutput>> {
    let lattice = Lattice::new(p.clone()).context("breadth")?;
    let target = if dual {
        lattice.dual()
    } else {
        lattice.clone()
    };
    let report = if dual {
        compute_dual_breadth(&lattice, limits)
    } else {
        compute_breadth(&lattice, limits)
    }
    .context("breadth")?;
    let n = report.breadth;
    let mut violation = None;
    let witness_ok = if target.len() == 1 {
        report.witness.is_empty()
    } else {
        report.witness.len() == n && is_irredundant(&target, report.witness)
    };
    if !witness_ok {
        violation = Some(format!(
            "witness of size {} is not irredundant",
            report.witness.len()
        ));
    } else if !has_breadth_at_most(&target, n, limits)
        .context("breadth")?
        .holds
    {
        violation = Some(format!("breadth bound {n} fails on some subset"));
    } else if n > 1
        && has_breadth_at_most(&target, n - 1, limits)
            .context("breadth")?
            .holds
    {
        violation = Some(format!("breadth bound {} already holds", n - 1));
    } else if let Some(e) = expect.filter(|&e| e != n) {
        violation = Some(format!("expected breadth {e}, computed {n}"));
    }
    let output = BreadthOutput {
        breadth: n,
        witness: labels_of(p, report.witness),
    };
    Ok(Verdict::new(output, violation))
}

/// The `e_m` family of `2^n` as labels.
pub fn e_family_labels(p: &Poset, n: usize) -> LabResult<Vec<String>> {
    Ok(labels_of(p, e_family_set(n).context("e family")?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TopologyKind {
    Interval,
    Lower,
    Upper,
}

impl TopologyKind {
    pub fn of(self, p: &Poset) -> FiniteTopology {
        match self {
            TopologyKind::Interval => interval_topology(p),
            TopologyKind::Lower => lower_topology(p),
            TopologyKind::Upper => upper_topology(p),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SeparationReport {
    pub kind: TopologyKind,
    pub hausdorff: bool,
    pub t1: bool,
    pub discrete: bool,
}

/// Separation properties. Interval topologies of finite posets must be Hausdorff.
pub fn hausdorff(p: &Poset, kind: TopologyKind) -> Verdict<SeparationReport> {
    let t = kind.of(p);
    let output = SeparationReport {
        kind,
        hausdorff: t.is_hausdorff(),
        t1: t.is_t1(),
        discrete: t.is_discrete(),
    };
    let violation = (kind == TopologyKind::Interval && !output.hausdorff)
        .then(|| "interval topology of a finite poset is not Hausdorff".to_string());
    Verdict::new(output, violation)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ConvergenceMode {
    Order,
    Star,
}

#[derive(Debug, Serialize)]
pub struct ConvergeReport {
    pub generator: Vec<String>,
    pub mode: ConvergenceMode,
    pub complete_lattice: bool,
    /// Points the filter converges to.
    pub limits: Vec<String>,
    /// Star mode only: points reached when the closing clause is read as
    /// the filter itself converging.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outer_reading_limits: Option<Vec<String>>,
    pub upper: Vec<String>,
    pub lower: Vec<String>,
    /// Points `x` where `x ∈ F^u` and `↓x ∈ F` disagree.
    pub criterion_failures: Vec<String>,
}

/// Convergence of the filter generated by `generator`, plus two laws that
/// must hold: the down-set criterion at every point and, on complete
/// lattices, convergence exactly to the generating point.
pub fn converge(
    p: &Poset,
    generator: ElementSet,
    mode: ConvergenceMode,
    limits: &Limits,
) -> LabResult<Verdict<ConvergeReport>> {
    let filter = SetFilter::principal(p, generator).context("generator")?;
    let complete = certify(p).is_complete;
    let points = |reading: StarReading| -> LabResult<ElementSet> {
        let mut out = ElementSet::EMPTY;
        for x in 0..p.len() {
            let hit = match mode {
                ConvergenceMode::Order => filter.order_converges(x),
                ConvergenceMode::Star => filter
                    .star_converges_with(x, reading, limits)
                    .context("star convergence")?,
            };
            if hit {
                out = out.with(x);
            }
        }
        Ok(out)
    };
    let reached = points(StarReading::NestedConverges)?;
    let outer = match mode {
        ConvergenceMode::Star => Some(labels_of(p, points(StarReading::OuterConverges)?)),
        ConvergenceMode::Order => None,
    };
    let failures: ElementSet = (0..p.len())
        .filter(|&x| !filter.down_set_criterion(x).agrees())
        .collect();
    let mut violation = (!failures.is_empty()).then(|| "down-set criterion disagrees".to_string());
    if complete && violation.is_none() {
        let expected = if generator.len() == 1 {
            generator
        } else {
            ElementSet::EMPTY
        };
        if reached != expected {
            violation =
                Some("on a finite complete lattice only point-generated filters converge".into());
        }
    }
    let output = ConvergeReport {
        generator: labels_of(p, generator),
        mode,
        complete_lattice: complete,
        limits: labels_of(p, reached),
        outer_reading_limits: outer,
        upper: labels_of(p, filter.upper()),
        lower: labels_of(p, filter.lower()),
        criterion_failures: labels_of(p, failures),
    };
    Ok(Verdict::new(output, violation))
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum ProductOutput {
    Poset(PosetFile),
    Verified {
        poset: PosetFile,
        interval_topology_is_product: bool,
    },
}

/// The product poset; with `verify`, also whether its interval topology is
/// the product of the factors' interval topologies.
pub fn product_of(
    factors: &[Poset],
    verify: bool,
    limits: &Limits,
) -> LabResult<Verdict<ProductOutput>> {
    let refs: Vec<&Poset> = factors.iter().collect();
    let p = product(&refs, limits).context("product")?;
    if !verify {
        return Ok(Verdict::new(
            ProductOutput::Poset(PosetFile::from_poset(&p)),
            None,
        ));
    }
    let equal = interval_topology_is_product(&p, factors, limits)?;
    let violation =
        (!equal).then(|| "interval topology differs from the product topology".to_string());
    Ok(Verdict::new(
        ProductOutput::Verified {
            poset: PosetFile::from_poset(&p),
            interval_topology_is_product: equal,
        },
        violation,
    ))
}

pub fn interval_topology_is_product(
    p: &Poset,
    factors: &[Poset],
    limits: &Limits,
) -> LabResult<bool> {
    let tops: Vec<FiniteTopology> = factors.iter().map(interval_topology).collect();
    let refs: Vec<&FiniteTopology> = tops.iter().collect();
    let prod = product_topology(&refs, limits).context("product topology")?;
    ordlab_core::topology::topologies_equal(&interval_topology(p), &prod)
        .context("product topology")
}

/// Which parts of the hom report to compute.
#[derive(Clone, Copy, Debug)]
pub struct HomChecks {
    pub preimages: bool,
    pub continuity: bool,
    pub order_convergence: bool,
    pub star_convergence: bool,
    pub image_monotone: bool,
}

impl HomChecks {
    pub const ALL: HomChecks = HomChecks {
        preimages: true,
        continuity: true,
        order_convergence: true,
        star_convergence: true,
        image_monotone: true,
    };
    pub const NONE: HomChecks = HomChecks {
        preimages: false,
        continuity: false,
        order_convergence: false,
        star_convergence: false,
        image_monotone: false,
    };
}

#[derive(Debug, Serialize)]
pub struct HomReport {
    pub class: &'static str,
    pub lattices: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preimages: Option<PreimageScan>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub continuity: Option<Continuity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_convergence: Option<PreservationOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star_convergence: Option<PreservationOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_monotone: Option<NestedScan>,
}

#[derive(Debug, Serialize)]
pub struct PreimageScan {
    pub intervals_checked: usize,
    pub non_interval: Option<NonInterval>,
    pub non_subbasic: Option<NonSubbasic>,
}

#[derive(Debug, Serialize)]
pub struct NonInterval {
    pub interval: [String; 2],
    pub preimage: Vec<String>,
    pub inf: String,
    pub sup: String,
    pub witness: String,
}

#[derive(Debug, Serialize)]
pub struct NonSubbasic {
    /// `down` for `↓point`, `up` for `↑point`.
    pub set: &'static str,
    pub point: String,
    pub preimage: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Continuity {
    pub interval: bool,
    pub lower: bool,
    pub upper: bool,
}

#[derive(Debug, Serialize)]
pub struct PreservationOut {
    pub scope: &'static str,
    pub filters_checked: usize,
    pub pairs_checked: usize,
    pub violation: Option<ConvergenceViolation>,
}

#[derive(Debug, Serialize)]
pub struct ConvergenceViolation {
    pub filter: FilterLiteral,
    pub point: String,
}

#[derive(Debug, Serialize)]
pub struct NestedScan {
    pub pairs_checked: usize,
    pub violation: Option<NestedViolation>,
}

#[derive(Debug, Serialize)]
pub struct NestedViolation {
    pub filter: FilterLiteral,
    pub super_filter: FilterLiteral,
}

/// Largest domain for which `hom` scans every nested filter pair (`3^n` pairs).
pub const NESTED_SCAN_MAX: usize = 10;

/// Classifies a map and runs the requested checks. A violation is any
/// failure of a law the map's class guarantees.
pub fn hom(
    domain: &Poset,
    codomain: &Poset,
    map: &[usize],
    checks: HomChecks,
    limits: &Limits,
) -> LabResult<Verdict<HomReport>> {
    let lattices = (
        Lattice::new(domain.clone()).ok(),
        Lattice::new(codomain.clone()).ok(),
    );
    let mut violations: Vec<String> = Vec::new();
    let mut report = HomReport {
        class: "",
        lattices: false,
        preimages: None,
        continuity: None,
        order_convergence: None,
        star_convergence: None,
        image_monotone: None,
    };
    let order_preserving;
    if let (Some(dl), Some(cl)) = &lattices {
        let h = LatticeHom::classify(dl, cl, map.to_vec()).context("map")?;
        report.class = h.class().name();
        report.lattices = true;
        order_preserving = h.class() >= HomClass::OrderPreserving;
        if checks.preimages {
            let scan = preimage_scan(&h);
            if h.is_complete() && scan.non_interval.is_some() {
                violations.push("complete hom with a non-interval preimage".into());
            }
            if h.is_complete() && scan.non_subbasic.is_some() {
                violations.push("complete hom with a non-subbasic preimage".into());
            }
            report.preimages = Some(scan);
        }
        if h.is_complete() && checks.order_convergence {
            let r = check_order_convergence_preserved(&h, limits).context("order convergence")?;
            if !r.passed() {
                violations.push("image of a convergent filter does not converge".into());
            }
            report.order_convergence = Some(preservation_out(domain, &r));
        }
        if h.is_complete() && checks.star_convergence {
            let r = check_star_convergence_preserved(&h, limits).context("star convergence")?;
            if !r.passed() {
                violations.push("image of a star-convergent filter does not star-converge".into());
            }
            report.star_convergence = Some(preservation_out(domain, &r));
        }
    } else {
        if let Some(e) = map_error(domain, codomain, map) {
            return Err(e);
        }
        order_preserving = is_order_preserving(domain, codomain, map);
        report.class = if order_preserving {
            HomClass::OrderPreserving.name()
        } else {
            HomClass::NotOrderPreserving.name()
        };
    }
    if checks.continuity {
        let cont = |kind: TopologyKind| {
            is_continuous(map, &kind.of(domain), &kind.of(codomain)).context("continuity")
        };
        let c = Continuity {
            interval: cont(TopologyKind::Interval)?,
            lower: cont(TopologyKind::Lower)?,
            upper: cont(TopologyKind::Upper)?,
        };
        if !c.interval {
            violations.push("map is not continuous between finite interval topologies".into());
        }
        if order_preserving && !(c.lower && c.upper) {
            violations.push(
                "order-preserving map is not continuous in the lower/upper topologies".into(),
            );
        }
        report.continuity = Some(c);
    }
    if checks.image_monotone && domain.len() <= NESTED_SCAN_MAX.min(limits.exhaustive_elements) {
        let scan = nested_scan(domain, codomain, map)?;
        if scan.violation.is_some() {
            violations.push("image of a super-filter does not contain the image filter".into());
        }
        report.image_monotone = Some(scan);
    }
    let violation = (!violations.is_empty()).then(|| violations.join("; "));
    Ok(Verdict::new(report, violation))
}

fn preimage_scan(h: &LatticeHom<'_>) -> PreimageScan {
    let (d, c) = (h.domain().poset(), h.codomain().poset());
    let intervals_checked = (0..c.len()).map(|x| c.up_set(x).len()).sum();
    let non_interval = h.find_non_interval_preimage().map(|(x, y, r)| match r {
        PreimageReport::NonInterval {
            preimage,
            lower,
            upper,
            witness,
        } => NonInterval {
            interval: [c.label(x).to_string(), c.label(y).to_string()],
            preimage: labels_of(d, preimage),
            inf: d.label(lower).to_string(),
            sup: d.label(upper).to_string(),
            witness: d.label(witness).to_string(),
        },
        _ => unreachable!("only non-interval reports are returned"),
    });
    let non_subbasic = h.find_non_subbasic_preimage().map(|f| NonSubbasic {
        set: match f.kind {
            SubbasicKind::Down => "down",
            SubbasicKind::Up => "up",
        },
        point: c.label(f.point).to_string(),
        preimage: labels_of(d, f.preimage),
    });
    PreimageScan {
        intervals_checked,
        non_interval,
        non_subbasic,
    }
}

fn preservation_out(domain: &Poset, r: &PreservationReport) -> PreservationOut {
    PreservationOut {
        scope: match r.scope {
            FilterScope::All => "all",
            FilterScope::PointGenerated => "point-generated",
        },
        filters_checked: r.filters_checked,
        pairs_checked: r.pairs_checked,
        violation: r.violation.map(|(g, x)| ConvergenceViolation {
            filter: FilterLiteral::of(domain, g),
            point: domain.label(x).to_string(),
        }),
    }
}

/// Every pair of filters `F ⊆ G` on the domain: `f(G) ⊇ f(F)`.
pub fn nested_scan(domain: &Poset, codomain: &Poset, map: &[usize]) -> LabResult<NestedScan> {
    let mut pairs_checked = 0;
    for fg in domain.carrier().subsets().filter(|s| !s.is_empty()) {
        let f = SetFilter::principal(domain, fg).context("filter")?;
        for gg in fg.subsets().filter(|s| !s.is_empty()) {
            let g = SetFilter::principal(domain, gg).context("filter")?;
            pairs_checked += 1;
            if !check_image_monotone(map, &f, &g, codomain).context("image filter")? {
                let violation = NestedViolation {
                    filter: FilterLiteral::of(domain, fg),
                    super_filter: FilterLiteral::of(domain, gg),
                };
                return Ok(NestedScan {
                    pairs_checked,
                    violation: Some(violation),
                });
            }
        }
    }
    Ok(NestedScan {
        pairs_checked,
        violation: None,
    })
}

/// Rejects maps whose length or images do not fit the two carriers.
fn map_error(domain: &Poset, codomain: &Poset, map: &[usize]) -> Option<LabError> {
    if map.len() != domain.len() {
        return Some(LabError::malformed(
            "map",
            format!("{} images for {} elements", map.len(), domain.len()),
        ));
    }
    map.iter()
        .position(|&y| y >= codomain.len())
        .map(|x| LabError::malformed("map", format!("image of element {x} is out of range")))
}
