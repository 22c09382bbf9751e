use proptest::prelude::*;

use ordlab_core::breadth::{
    compute_breadth, compute_dual_breadth, has_breadth_at_most, is_irredundant,
};
use ordlab_core::filters::all_filters;
use ordlab_core::lattice::Lattice;
use ordlab_core::library::{
    boolean_power, chain, m3, naturally_labelled_posets, standard_lattices,
};
use ordlab_core::morphisms::{
    all_maps, check_image_monotone, enumerate_homs, image_filter, is_continuous,
    is_order_preserving, HomClass, PreimageReport,
};
use ordlab_core::topology::{interval_topology, lower_topology, product_topology, FiniteTopology};
use ordlab_core::{product, ElementSet, Limits, Poset, SetFilter};

/// A poset on `n <= 8` points: random strict relation along a random
/// linear order, transitively closed.
#[allow(clippy::needless_range_loop)]
fn poset_strategy(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), pairs),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, bits, perm)| {
            let mut rel = vec![vec![false; n]; n];
            let mut k = 0;
            for i in 0..n {
                rel[i][i] = true;
                for j in i + 1..n {
                    rel[i][j] = bits[k];
                    k += 1;
                }
            }
            for m in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if rel[i][m] && rel[m][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
            let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            // relabel through the permutation so minimal elements are not always low indices
            let mut inv = vec![0; n];
            for (i, &p) in perm.iter().enumerate() {
                inv[p] = i;
            }
            Poset::from_relation(labels, |x, y| rel[inv[x]][inv[y]]).unwrap()
        })
}

fn subset_of(p: &Poset) -> impl Strategy<Value = ElementSet> {
    let full = p.carrier().bits();
    any::<u64>().prop_map(move |b| ElementSet::from_bits(b & full))
}

proptest! {
    #[test]
    fn down_sets_contain_their_point(p in poset_strategy(8)) {
        for x in 0..p.len() {
            let d = p.down_set(x);
            prop_assert!(p.is_down_set(d) && d.contains(x));
            prop_assert!(p.is_up_set(p.up_set(x)) && p.up_set(x).contains(x));
        }
    }

    #[test]
    fn bounds_are_antitone((p, s, t) in poset_strategy(8).prop_flat_map(|p| {
        let (a, b) = (subset_of(&p), subset_of(&p));
        (Just(p), a, b)
    })) {
        prop_assert_eq!(p.lower_bounds(ElementSet::EMPTY), p.carrier());
        let small = s & t;
        prop_assert!(p.upper_bounds(s).is_subset(p.upper_bounds(small)));
        prop_assert!(p.lower_bounds(s).is_subset(p.lower_bounds(small)));
    }

    #[test]
    fn infimum_is_greatest_lower_bound((p, s) in poset_strategy(8).prop_flat_map(|p| {
        let s = subset_of(&p);
        (Just(p), s)
    })) {
        let lb = p.lower_bounds(s);
        if let Some(i) = p.infimum(s) {
            prop_assert!(lb.contains(i));
            prop_assert!(lb.iter().all(|y| p.leq(y, i)));
        } else {
            prop_assert!(lb.iter().all(|g| !lb.iter().all(|y| p.leq(y, g))));
        }
        if let Some(j) = p.supremum(s) {
            let ub = p.upper_bounds(s);
            prop_assert!(ub.contains(j) && ub.iter().all(|y| p.leq(j, y)));
        }
    }

    #[test]
    fn generated_topologies_satisfy_axioms(
        n in 1usize..=8,
        raw in proptest::collection::vec(any::<u64>(), 0..6),
    ) {
        let l = Limits::default();
        let closed: Vec<ElementSet> = raw.iter().map(|&b| ElementSet::from_bits(b) & ElementSet::full(n)).collect();
        let t = FiniteTopology::from_closed_subbasis(n, &closed).unwrap();
        let opens = t.opens(&l).unwrap();
        prop_assert!(opens.contains(&ElementSet::EMPTY) && opens.contains(&ElementSet::full(n)));
        for &a in &opens {
            for &b in &opens {
                prop_assert!(opens.binary_search(&(a | b)).is_ok());
                prop_assert!(opens.binary_search(&(a & b)).is_ok());
            }
        }
        for &c in &closed {
            prop_assert!(t.is_closed(c));
        }
        // regenerating from the closed family is idempotent
        let again = FiniteTopology::from_closed_subbasis(n, &t.closed_sets(&l).unwrap()).unwrap();
        prop_assert_eq!(&again, &t);
        // adding a closed set never removes open sets
        let mut more = closed.clone();
        more.push(ElementSet::from_bits(raw.first().copied().unwrap_or(1).rotate_left(7)) & ElementSet::full(n));
        let finer = FiniteTopology::from_closed_subbasis(n, &more).unwrap();
        prop_assert!(opens.iter().all(|&o| finer.is_open(o)));
    }

    #[test]
    fn interval_topologies_are_discrete(p in poset_strategy(8)) {
        let t = interval_topology(&p);
        prop_assert!(t.is_discrete());
        prop_assert!(t.is_hausdorff());
    }

    #[test]
    fn image_filters_are_monotone(
        (n, m, map, g, sub) in (1usize..=6, 1usize..=6).prop_flat_map(|(n, m)| (
            Just(n),
            Just(m),
            proptest::collection::vec(0..m, n),
            1u64..(1 << n),
            any::<u64>(),
        ))
    ) {
        let (dom, cod) = (ordlab_core::library::antichain(n), ordlab_core::library::antichain(m));
        let f = SetFilter::principal(&dom, ElementSet::from_bits(g)).unwrap();
        let smaller = ElementSet::from_bits(g & sub);
        let gen = if smaller.is_empty() { f.generator() } else { smaller };
        let sup = SetFilter::principal(&dom, gen).unwrap();
        prop_assert!(check_image_monotone(&map, &f, &sup, &cod).unwrap());
        let img = image_filter(&map, &f, &cod).unwrap();
        prop_assert_eq!(img.generator(), f.generator().image(&map));
    }
}

#[test]
fn element_lies_between_bounds_of_its_set() {
    for n in 1..=6 {
        for p in naturally_labelled_posets(n) {
            for s in p.carrier().subsets() {
                let low = p.supremum(p.lower_bounds(s));
                let high = p.infimum(p.upper_bounds(s));
                for a in s.iter() {
                    if let Some(lo) = low {
                        assert!(p.leq(lo, a));
                    }
                    if let Some(hi) = high {
                        assert!(p.leq(a, hi));
                    }
                }
            }
        }
    }
}

#[test]
fn products_associate() {
    let l = Limits::default();
    let (a, b, c) = (chain(2), chain(3), m3());
    let flat = product(&[&a, &b, &c], &l).unwrap();
    let left = product(&[&product(&[&a, &b], &l).unwrap(), &c], &l).unwrap();
    let right = product(&[&a, &product(&[&b, &c], &l).unwrap()], &l).unwrap();
    let identity: Vec<usize> = (0..flat.len()).collect();
    assert!(flat.is_isomorphism(&left, &identity));
    assert!(flat.is_isomorphism(&right, &identity));
    assert_eq!(flat.len(), 30);
}

#[test]
fn boolean_powers_are_distributive_up_to_four() {
    let l = Limits::default();
    for n in 1..=4 {
        assert!(ordlab_core::certify(&boolean_power(n, &l).unwrap()).is_distributive);
    }
}

#[test]
fn product_lemma_on_small_factors() {
    let l = Limits::default();
    let factors = [chain(2), chain(3), boolean_power(2, &l).unwrap(), m3()];
    for a in &factors {
        for b in &factors {
            let p = product(&[a, b], &l).unwrap();
            let prod =
                product_topology(&[&interval_topology(a), &interval_topology(b)], &l).unwrap();
            assert_eq!(interval_topology(&p), prod);
        }
    }
}

#[test]
fn order_preserving_maps_respect_down_sets_and_lower_topologies() {
    let l = Limits::default();
    for n in 1..=4 {
        for p in naturally_labelled_posets(n) {
            let t = lower_topology(&p);
            for q in naturally_labelled_posets(n.min(3)) {
                let tq = lower_topology(&q);
                for map in all_maps(p.len(), q.len(), &l).unwrap() {
                    if !is_order_preserving(&p, &q, &map) {
                        continue;
                    }
                    for x in 0..p.len() {
                        assert!(p.down_set(x).image(&map).is_subset(q.down_set(map[x])));
                    }
                    assert!(is_continuous(&map, &t, &tq).unwrap());
                }
            }
        }
    }
}

#[test]
fn complete_hom_preimages_are_intervals() {
    let l = Limits::default();
    let lattices: Vec<Lattice> = standard_lattices(6)
        .into_iter()
        .map(|(_, p)| Lattice::new(p).unwrap())
        .collect();
    for dom in &lattices {
        for cod in &lattices {
            for h in enumerate_homs(dom, cod, HomClass::CompleteHom, &l).unwrap() {
                assert!(h.find_non_interval_preimage().is_none());
                assert!(h.find_non_subbasic_preimage().is_none());
                for x in 0..cod.len() {
                    for y in cod.up_set(x).iter() {
                        let r = h.preimage_interval(x, y).unwrap();
                        assert!(!matches!(r, PreimageReport::NonInterval { .. }));
                    }
                }
            }
        }
    }
}

#[test]
fn order_limits_are_unique() {
    let l = Limits::default();
    for n in 1..=5 {
        for p in naturally_labelled_posets(n) {
            for f in all_filters(&p, &l).unwrap() {
                assert!(f.order_limits().len() <= 1);
            }
        }
    }
}

#[test]
fn breadth_is_monotone_and_witnessed() {
    let l = Limits::default();
    for (_, p) in standard_lattices(8) {
        let lat = Lattice::new(p).unwrap();
        let report = compute_breadth(&lat, &l).unwrap();
        assert!(report.witness.is_empty() || is_irredundant(&lat, report.witness));
        assert_eq!(
            report.witness.len(),
            if lat.len() == 1 { 0 } else { report.breadth }
        );
        let mut held = false;
        for n in 1..=lat.len().min(5) {
            let holds = has_breadth_at_most(&lat, n, &l).unwrap().holds;
            assert!(!held || holds, "breadth bound lost at {n}");
            assert_eq!(holds, n >= report.breadth);
            held = holds;
        }
    }
}

#[test]
fn dual_breadth_of_self_dual_boolean_powers() {
    let l = Limits::default();
    for n in 1..=4 {
        let lat = Lattice::new(boolean_power(n, &l).unwrap()).unwrap();
        assert_eq!(
            compute_dual_breadth(&lat, &l).unwrap().breadth,
            compute_breadth(&lat, &l).unwrap().breadth
        );
    }
}
