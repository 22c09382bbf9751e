//! Verification campaigns: a named check run over a deterministic family of
//! library instances plus `trials` seeded random ones.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use ordlab_core::library::{
    antichain, boolean_power, chain, m3, naturally_labelled_posets, standard_lattices,
};
use ordlab_core::morphisms::{all_maps, enumerate_homs, HomClass};
use ordlab_core::{Error as CoreError, Lattice, Limits, Poset};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::checks::{self, ConvergenceMode, HomChecks, TopologyKind, Verdict};
use crate::error::{Context, LabError, LabResult};
use crate::io::{render, FilterLiteral, HomFile, PosetFile};
use crate::random::{random_lattice, random_poset, seeded};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CampaignName {
    Prop21,
    Lemma2,
    Lemma3,
    Fact11,
    ProductLemma,
    Hausdorff,
    Breadth2n,
    StarPreservation,
}

impl CampaignName {
    pub const ALL: [CampaignName; 8] = [
        CampaignName::Prop21,
        CampaignName::Lemma2,
        CampaignName::Lemma3,
        CampaignName::Fact11,
        CampaignName::ProductLemma,
        CampaignName::Hausdorff,
        CampaignName::Breadth2n,
        CampaignName::StarPreservation,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CampaignName::Prop21 => "prop-2-1",
            CampaignName::Lemma2 => "lemma-2",
            CampaignName::Lemma3 => "lemma-3",
            CampaignName::Fact11 => "fact-1-1",
            CampaignName::ProductLemma => "product-lemma",
            CampaignName::Hausdorff => "hausdorff",
            CampaignName::Breadth2n => "breadth-2n",
            CampaignName::StarPreservation => "star-preservation",
        }
    }

    /// Carrier bound used when none is given.
    pub fn default_limit(self) -> usize {
        match self {
            CampaignName::Prop21 => 6,
            CampaignName::Lemma2 | CampaignName::StarPreservation | CampaignName::Fact11 => 5,
            CampaignName::Lemma3 => 4,
            CampaignName::ProductLemma => 64,
            CampaignName::Hausdorff => 8,
            CampaignName::Breadth2n => 16,
        }
    }

    /// Whether the campaign walks all subsets of its carriers.
    fn exhaustive(self) -> bool {
        !matches!(self, CampaignName::ProductLemma | CampaignName::Hausdorff)
    }
}

impl fmt::Display for CampaignName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CampaignName {
    type Err = LabError;

    fn from_str(s: &str) -> LabResult<Self> {
        CampaignName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = CampaignName::ALL.iter().map(|c| c.as_str()).collect();
                LabError::Usage(format!(
                    "unknown campaign {s:?}; known: {}",
                    known.join(", ")
                ))
            })
    }
}

impl Serialize for CampaignName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CampaignSpec {
    pub name: CampaignName,
    pub size_limit: usize,
    /// Random instances on top of the fixed family; 0 runs the fixed family only.
    pub trials: u64,
    pub seed: u64,
}

impl CampaignSpec {
    pub fn new(name: CampaignName) -> CampaignSpec {
        CampaignSpec {
            name,
            size_limit: name.default_limit(),
            trials: 0,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Counterexample,
}

/// A failing instance, replayable as `ordlab <subcommand> <inputs as files...> <args...>`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub subcommand: String,
    pub inputs: Vec<serde_json::Value>,
    pub args: Vec<String>,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignResult {
    pub campaign: CampaignSpec,
    pub instances_checked: u64,
    pub status: Status,
    /// Named tallies describing what was covered.
    pub counts: BTreeMap<String, u64>,
    pub witness: Option<Witness>,
}

impl CampaignResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

struct Run<'a> {
    limits: &'a Limits,
    instances: u64,
    counts: BTreeMap<String, u64>,
    witness: Option<Witness>,
}

impl Run<'_> {
    fn tally(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    fn fail(
        &mut self,
        subcommand: &str,
        inputs: Vec<serde_json::Value>,
        args: Vec<String>,
        reason: String,
    ) {
        self.witness = Some(Witness {
            subcommand: subcommand.into(),
            inputs,
            args,
            reason,
        });
    }

    fn failed(&self) -> bool {
        self.witness.is_some()
    }
}

fn json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("witness inputs serialize")
}

pub fn run_campaign(spec: &CampaignSpec, limits: &Limits) -> LabResult<CampaignResult> {
    let bound = if spec.name.exhaustive() {
        limits.exhaustive_elements
    } else {
        limits.relational_elements.min(64)
    };
    if spec.size_limit == 0 {
        return Err(LabError::Usage("--limit must be at least 1".into()));
    }
    if spec.size_limit > bound {
        let err = CoreError::LimitExceeded {
            what: "campaign size limit",
            size: spec.size_limit as u128,
            limit: bound as u128,
        };
        return Err(LabError::core(spec.name.as_str(), err));
    }
    let mut run = Run {
        limits,
        instances: 0,
        counts: BTreeMap::new(),
        witness: None,
    };
    let mut rng = seeded(spec.seed);
    match spec.name {
        CampaignName::Prop21 => hom_campaign(spec, &mut run, &mut rng, HomCampaign::Preimages)?,
        CampaignName::Lemma2 => hom_campaign(spec, &mut run, &mut rng, HomCampaign::Order)?,
        CampaignName::StarPreservation => {
            hom_campaign(spec, &mut run, &mut rng, HomCampaign::Star)?
        }
        CampaignName::Lemma3 => image_monotone(spec, &mut run, &mut rng)?,
        CampaignName::Fact11 => down_set_criterion(spec, &mut run, &mut rng)?,
        CampaignName::ProductLemma => product_lemma(spec, &mut run, &mut rng)?,
        CampaignName::Hausdorff => hausdorff(spec, &mut run, &mut rng)?,
        CampaignName::Breadth2n => breadth_powers(spec, &mut run, &mut rng)?,
    }
    let status = if run.failed() {
        Status::Counterexample
    } else {
        Status::Pass
    };
    Ok(CampaignResult {
        campaign: *spec,
        instances_checked: run.instances,
        status,
        counts: run.counts,
        witness: run.witness,
    })
}

/// Random lattices with 2..=limit elements (1 when the limit is 1).
fn random_lattices(spec: &CampaignSpec, rng: &mut ChaCha8Rng) -> LabResult<Vec<Poset>> {
    let lo = spec.size_limit.min(2);
    (0..spec.trials)
        .map(|_| {
            let size = rng.gen_range(lo..=spec.size_limit);
            random_lattice(size, rng.gen())
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum HomCampaign {
    Preimages,
    Order,
    Star,
}

/// Complete homs between library lattices (every ordered pair), then between
/// random pairs and from each random lattice to itself.
fn hom_campaign(
    spec: &CampaignSpec,
    run: &mut Run<'_>,
    rng: &mut ChaCha8Rng,
    kind: HomCampaign,
) -> LabResult<()> {
    let mut lattices: Vec<Lattice> = standard_lattices(spec.size_limit)
        .into_iter()
        .map(|(_, p)| Lattice::new(p).expect("library lattices are lattices"))
        .collect();
    run.tally("library_lattices", lattices.len() as u64);
    let library = lattices.len();
    let mut pairs: Vec<(usize, usize)> = (0..library)
        .flat_map(|a| (0..library).map(move |b| (a, b)))
        .collect();
    for (i, p) in random_lattices(spec, rng)?.into_iter().enumerate() {
        lattices.push(Lattice::new(p).expect("generated lattices are lattices"));
        let me = library + i;
        pairs.push((me, me));
        if i % 2 == 1 {
            pairs.push((me - 1, me));
        }
    }
    run.tally("random_lattices", (lattices.len() - library) as u64);

    let mode = match kind {
        HomCampaign::Star => ConvergenceMode::Star,
        _ => ConvergenceMode::Order,
    };
    if kind != HomCampaign::Preimages {
        // the convergence law that lets preservation checks use point filters
        for l in &lattices {
            degeneracy_law(l.poset(), mode, run)?;
            if run.failed() {
                return Ok(());
            }
        }
    }
    let checks = match kind {
        HomCampaign::Preimages => HomChecks {
            preimages: true,
            continuity: true,
            ..HomChecks::NONE
        },
        HomCampaign::Order => HomChecks {
            order_convergence: true,
            ..HomChecks::NONE
        },
        HomCampaign::Star => HomChecks {
            star_convergence: true,
            ..HomChecks::NONE
        },
    };
    for (a, b) in pairs {
        let (dom, cod) = (&lattices[a], &lattices[b]);
        let homs = enumerate_homs(dom, cod, HomClass::CompleteHom, run.limits)
            .context("hom enumeration")?;
        run.tally("lattice_pairs", 1);
        for h in homs {
            run.instances += 1;
            let verdict = checks::hom(dom.poset(), cod.poset(), h.map(), checks, run.limits)?;
            if let Some(out) = &verdict.output.preimages {
                run.tally("intervals", out.intervals_checked as u64);
            }
            for r in [
                &verdict.output.order_convergence,
                &verdict.output.star_convergence,
            ]
            .into_iter()
            .flatten()
            {
                run.tally("convergent_pairs", r.pairs_checked as u64);
            }
            if let Some(reason) = verdict.violation {
                let hom = HomFile::inline(dom.poset(), cod.poset(), h.map());
                run.fail("hom", vec![json(&hom)], vec![], reason);
                return Ok(());
            }
        }
    }
    Ok(())
}

/// Every filter on `p` against the convergence law, through the `converge` check.
fn degeneracy_law(p: &Poset, mode: ConvergenceMode, run: &mut Run<'_>) -> LabResult<()> {
    if p.len() > run.limits.exhaustive_elements {
        return Ok(());
    }
    for g in p.carrier().subsets().filter(|s| !s.is_empty()) {
        let verdict = checks::converge(p, g, mode, run.limits)?;
        run.tally("filters_checked", 1);
        if let Some(reason) = verdict.violation {
            fail_converge(run, p, g, mode, reason);
            return Ok(());
        }
    }
    Ok(())
}

fn fail_converge(
    run: &mut Run<'_>,
    p: &Poset,
    g: ordlab_core::ElementSet,
    mode: ConvergenceMode,
    reason: String,
) {
    let literal = render(&FilterLiteral::of(p, g), false);
    let mode = match mode {
        ConvergenceMode::Order => "order",
        ConvergenceMode::Star => "star",
    };
    let args = vec!["--generator".into(), literal, "--mode".into(), mode.into()];
    run.fail(
        "converge",
        vec![json(&PosetFile::from_poset(p))],
        args,
        reason,
    );
}

/// Every map between antichain carriers of size <= limit, every nested
/// filter pair; then random maps between random carriers.
fn image_monotone(spec: &CampaignSpec, run: &mut Run<'_>, rng: &mut ChaCha8Rng) -> LabResult<()> {
    let check = |run: &mut Run<'_>, dom: &Poset, cod: &Poset, map: &[usize]| -> LabResult<bool> {
        let scan = checks::nested_scan(dom, cod, map)?;
        run.instances += scan.pairs_checked as u64;
        run.tally("maps", 1);
        if scan.violation.is_some() {
            let hom = HomFile::inline(dom, cod, map);
            run.fail(
                "hom",
                vec![json(&hom)],
                vec![],
                "image of a super-filter does not contain the image filter".into(),
            );
            return Ok(false);
        }
        Ok(true)
    };
    for n in 1..=spec.size_limit {
        for m in 1..=spec.size_limit {
            let (dom, cod) = (antichain(n), antichain(m));
            for map in all_maps(n, m, run.limits).context("map enumeration")? {
                if !check(run, &dom, &cod, &map)? {
                    return Ok(());
                }
            }
        }
    }
    for _ in 0..spec.trials {
        let n = rng.gen_range(1..=spec.size_limit);
        let m = rng.gen_range(1..=spec.size_limit);
        let dom = random_poset(n, rng);
        let cod = random_poset(m, rng);
        let map: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
        run.tally("random_maps", 1);
        if !check(run, &dom, &cod, &map)? {
            return Ok(());
        }
    }
    Ok(())
}

/// Largest carrier whose posets are all enumerated.
const ALL_POSETS_UP_TO: usize = 6;

fn criterion_on(
    p: &Poset,
    generators: impl Iterator<Item = ordlab_core::ElementSet>,
    run: &mut Run<'_>,
) -> LabResult<()> {
    for g in generators {
        let filter = ordlab_core::SetFilter::principal(p, g).context("filter")?;
        for x in 0..p.len() {
            run.instances += 1;
            if !filter.down_set_criterion(x).agrees() {
                fail_converge(
                    run,
                    p,
                    g,
                    ConvergenceMode::Order,
                    "down-set criterion disagrees".into(),
                );
                return Ok(());
            }
        }
    }
    Ok(())
}

/// `x ∈ F^u ⇔ ↓x ∈ F` for every filter and point of every poset up to the
/// limit (capped at 6 elements), then on random posets.
fn down_set_criterion(
    spec: &CampaignSpec,
    run: &mut Run<'_>,
    rng: &mut ChaCha8Rng,
) -> LabResult<()> {
    let exhaustive = spec.size_limit.min(ALL_POSETS_UP_TO);
    run.tally("all_posets_up_to", exhaustive as u64);
    for n in 1..=exhaustive {
        for p in naturally_labelled_posets(n) {
            run.tally("posets", 1);
            criterion_on(&p, p.carrier().subsets().filter(|s| !s.is_empty()), run)?;
            if run.failed() {
                return Ok(());
            }
        }
    }
    for _ in 0..spec.trials {
        let size = rng.gen_range(1..=spec.size_limit);
        let p = random_poset(size, rng);
        run.tally("random_posets", 1);
        if size <= 10 {
            criterion_on(&p, p.carrier().subsets().filter(|s| !s.is_empty()), run)?;
        } else {
            let full = p.carrier().bits();
            let gens: Vec<_> = (0..64)
                .map(|_| ordlab_core::ElementSet::from_bits(rng.gen::<u64>() & full))
                .filter(|s| !s.is_empty())
                .collect();
            criterion_on(&p, gens.into_iter(), run)?;
        }
        if run.failed() {
            return Ok(());
        }
    }
    Ok(())
}

/// Ordered tuples (length >= 2) of the factors `2`, `chain3`, `2^2`, `M3`
/// whose product fits the limit, then random factor pairs.
fn product_lemma(spec: &CampaignSpec, run: &mut Run<'_>, rng: &mut ChaCha8Rng) -> LabResult<()> {
    let factors = product_factors();
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(vec![], 1)];
    while let Some((t, size)) = stack.pop() {
        if t.len() >= 2 {
            tuples.push(t.clone());
        }
        for (i, f) in factors.iter().enumerate().rev() {
            if size * f.len() <= spec.size_limit {
                let mut next = t.clone();
                next.push(i);
                stack.push((next, size * f.len()));
            }
        }
    }
    tuples.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let check = |run: &mut Run<'_>, ps: Vec<Poset>| -> LabResult<bool> {
        run.instances += 1;
        let verdict: Verdict<_> = checks::product_of(&ps, true, run.limits)?;
        if let Some(reason) = verdict.violation {
            let inputs = ps.iter().map(|p| json(&PosetFile::from_poset(p))).collect();
            run.fail("product", inputs, vec!["--verify-topology".into()], reason);
            return Ok(false);
        }
        Ok(true)
    };
    for t in tuples {
        run.tally(&format!("tuples_of_length_{}", t.len()), 1);
        if !check(run, t.iter().map(|&i| factors[i].clone()).collect())? {
            return Ok(());
        }
    }
    for _ in 0..spec.trials {
        let a = random_poset(rng.gen_range(1..=4), rng);
        let b = random_poset(rng.gen_range(1..=4), rng);
        if a.len() * b.len() > spec.size_limit {
            continue;
        }
        run.tally("random_pairs", 1);
        if !check(run, vec![a, b])? {
            return Ok(());
        }
    }
    Ok(())
}

/// The factors of the product campaign: `2`, `chain3`, `2^2`, `M3`.
pub fn product_factors() -> Vec<Poset> {
    vec![
        chain(2),
        chain(3),
        boolean_power(2, &Limits::default()).expect("2^2 fits"),
        m3(),
    ]
}

/// Library posets, every poset up to 5 elements, and random posets: the
/// interval topology must be Hausdorff.
fn hausdorff(spec: &CampaignSpec, run: &mut Run<'_>, rng: &mut ChaCha8Rng) -> LabResult<()> {
    let limit = spec.size_limit;
    let mut posets: Vec<Poset> = standard_lattices(limit)
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    posets.extend((1..=limit).map(antichain));
    run.tally("library_posets", posets.len() as u64);
    for n in 1..=limit.min(5) {
        let all = naturally_labelled_posets(n);
        run.tally("enumerated_posets", all.len() as u64);
        posets.extend(all);
    }
    for _ in 0..spec.trials {
        posets.push(random_poset(rng.gen_range(1..=limit), rng));
    }
    run.tally("random_posets", spec.trials);
    for p in &posets {
        run.instances += 1;
        let verdict = checks::hausdorff(p, TopologyKind::Interval);
        if let Some(reason) = verdict.violation {
            run.fail(
                "hausdorff",
                vec![json(&PosetFile::from_poset(p))],
                vec!["--kind".into(), "interval".into()],
                reason,
            );
            return Ok(());
        }
        if !checks::hausdorff(p, TopologyKind::Lower).output.hausdorff {
            run.tally("non_hausdorff_lower_topologies", 1);
        }
    }
    Ok(())
}

/// `breadth(2^n) = n` with the `e_m` family as witness, for every `2^n`
/// within the limit; random lattices get the self-consistency checks.
fn breadth_powers(spec: &CampaignSpec, run: &mut Run<'_>, rng: &mut ChaCha8Rng) -> LabResult<()> {
    let mut n = 1;
    while 1usize << n <= spec.size_limit {
        let p = boolean_power(n, run.limits).context("boolean power")?;
        let verdict = checks::breadth(&p, false, Some(n), run.limits)?;
        run.instances += 1;
        run.tally(&format!("breadth_of_2^{n}"), verdict.output.breadth as u64);
        let mut reason = verdict.violation;
        if reason.is_none() && verdict.output.witness != checks::e_family_labels(&p, n)? {
            reason = Some("witness is not the e_m family".into());
        }
        if let Some(reason) = reason {
            let args = vec!["--expect".into(), n.to_string()];
            run.fail(
                "breadth",
                vec![json(&PosetFile::from_poset(&p))],
                args,
                reason,
            );
            return Ok(());
        }
        n += 1;
    }
    for p in random_lattices(spec, rng)? {
        run.instances += 1;
        run.tally("random_lattices", 1);
        let verdict = checks::breadth(&p, false, None, run.limits)?;
        if let Some(reason) = verdict.violation {
            run.fail(
                "breadth",
                vec![json(&PosetFile::from_poset(&p))],
                vec![],
                reason,
            );
            return Ok(());
        }
    }
    Ok(())
}
