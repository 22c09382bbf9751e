//! Brute-force checks that justify every shortcut the library takes.

mod support {
    pub mod oracles;
}

use ordlab_core::breadth::{self, compute_breadth, compute_breadth_exhaustive};
use ordlab_core::filters::{all_filters, SetFilter};
use ordlab_core::lattice::{certify, is_complete_exhaustive, Lattice};
use ordlab_core::library::{
    boolean_power, chain, m3, n5, naturally_labelled_posets, standard_lattices,
};
use ordlab_core::morphisms::{
    all_maps, is_continuous, preserves_all_extrema, HomClass, LatticeHom,
};
use ordlab_core::topology::{
    closed_family_by_fixpoint, interval_topology, lower_topology, product_topology, upper_topology,
    FiniteTopology,
};
use ordlab_core::{ElementSet, Limits, Poset};
use support::oracles::{self as oracle, Rel};

fn posets_up_to(n: usize) -> impl Iterator<Item = Poset> {
    (1..=n).flat_map(naturally_labelled_posets)
}

fn lattices_up_to(n: usize) -> Vec<Lattice> {
    posets_up_to(n)
        .filter_map(|p| Lattice::new(p).ok())
        .collect()
}

#[test]
fn finite_filters_are_principal() {
    for n in 1..=4 {
        let families = oracle::filters_by_axioms(n);
        // the empty family satisfies the axioms vacuously and has no generator
        assert_eq!(families[0], 0);
        let families = &families[1..];
        // one filter per nonempty generator
        assert_eq!(families.len(), (1 << n) - 1, "carrier {n}");
        for &family in families {
            let members: Vec<u64> = (0..1u64 << n).filter(|&s| family >> s & 1 == 1).collect();
            let generator = members.iter().fold((1u64 << n) - 1, |acc, &s| acc & s);
            let principal: Vec<u64> = (0..1u64 << n)
                .filter(|&s| s & generator == generator)
                .collect();
            assert_eq!(members, principal);
        }
    }
}

#[test]
fn filter_upper_matches_definitional_union() {
    let l = Limits::default();
    for p in posets_up_to(6) {
        let r = Rel::of(&p);
        for f in all_filters(&p, &l).unwrap() {
            let g = f.generator().bits();
            assert_eq!(
                f.upper().bits(),
                oracle::filter_upper_by_union(&r, g),
                "{p:?} {g:b}"
            );
            assert_eq!(
                f.lower().bits(),
                oracle::filter_lower_by_union(&r, g),
                "{p:?} {g:b}"
            );
        }
    }
}

#[test]
fn materialised_filters_satisfy_axioms() {
    let l = Limits::default();
    for p in posets_up_to(4) {
        for f in all_filters(&p, &l).unwrap() {
            let members: Vec<ElementSet> = f.members(&l).unwrap();
            assert!(!members.contains(&ElementSet::EMPTY));
            for &a in &members {
                for &b in &members {
                    assert!(members.contains(&(a & b)));
                }
                for u in p.carrier().subsets().filter(|u| u.is_superset(a)) {
                    assert!(members.contains(&u));
                }
            }
        }
    }
}

#[test]
fn size_bound_breadth_matches_definition() {
    let l = Limits::default();
    for lat in lattices_up_to(6) {
        let r = Rel::of(&lat);
        let expected = oracle::breadth(&r);
        assert_eq!(
            compute_breadth(&lat, &l).unwrap().breadth,
            expected,
            "{lat:?}"
        );
        assert_eq!(
            compute_breadth_exhaustive(&lat, &l).unwrap().breadth,
            expected
        );
        for n in 1..=lat.len() {
            let full = breadth::has_breadth_at_most(&lat, n, &l).unwrap().holds;
            let bound = breadth::has_breadth_at_most_by_size_bound(&lat, n, &l)
                .unwrap()
                .holds;
            assert_eq!(full, oracle::breadth_at_most(&r, n));
            assert_eq!(bound, full, "n = {n}, {lat:?}");
        }
    }
}

#[test]
fn complete_hom_shortcut_matches_definition() {
    let l = Limits::default();
    let lattices: Vec<Lattice> = standard_lattices(5)
        .into_iter()
        .map(|(_, p)| Lattice::new(p).unwrap())
        .collect();
    let mut complete = 0;
    for dom in &lattices {
        let rd = Rel::of(dom);
        for cod in &lattices {
            let rc = Rel::of(cod);
            for map in all_maps(dom.len(), cod.len(), &l).unwrap() {
                let h = LatticeHom::classify(dom, cod, map.clone()).unwrap();
                let literal = oracle::is_complete_hom(&rd, &rc, &map);
                assert_eq!(h.is_complete(), literal, "{map:?}");
                assert_eq!(preserves_all_extrema(dom, cod, &map, &l).unwrap(), literal);
                complete += usize::from(literal);
            }
        }
    }
    assert!(complete > 0);
}

#[test]
fn completeness_certificate_matches_all_subsets() {
    let l = Limits::default();
    for p in posets_up_to(6) {
        let literal = Rel::of(&p).is_complete_lattice();
        assert_eq!(certify(&p).is_complete, literal);
        assert_eq!(is_complete_exhaustive(&p, &l).unwrap(), literal);
    }
}

#[test]
fn distributive_law_forms_on_cube_and_diamond() {
    let l = Limits::default();
    let check = |lat: &Lattice| {
        let n = lat.len();
        let (mut standard, mut cross) = (true, true);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = lat.meet(x, lat.join(y, z));
                    standard &= lhs == lat.join(lat.meet(x, y), lat.meet(x, z));
                    cross &= lhs == lat.meet(lat.join(x, y), lat.join(x, z));
                }
            }
        }
        (standard, cross)
    };
    let cube = Lattice::new(boolean_power(3, &l).unwrap()).unwrap();
    let diamond = Lattice::new(m3()).unwrap();
    for lat in [&cube, &diamond] {
        let cert = certify(lat);
        assert_eq!((cert.is_distributive, cert.cross_identity), check(lat));
    }
    assert_eq!(check(&cube), (true, false));
    assert_eq!(check(&diamond), (false, false));
}

#[test]
fn generation_matches_brute_force_topologies() {
    let l = Limits::default();
    for n in 1..=4 {
        let tops = oracle::all_topologies(n);
        let all_sets: Vec<u64> = (0..1u64 << n).collect();
        let mut subbases: Vec<Vec<u64>> = vec![vec![]];
        subbases.extend(all_sets.iter().map(|&a| vec![a]));
        for (i, &a) in all_sets.iter().enumerate() {
            for &b in &all_sets[i + 1..] {
                subbases.push(vec![a, b]);
                for &c in all_sets.iter().step_by(3) {
                    subbases.push(vec![a, b, c]);
                }
            }
        }
        for closed in subbases {
            let expected = oracle::coarsest_with_closed(n, &tops, &closed);
            let sets: Vec<ElementSet> = closed.iter().map(|&c| ElementSet::from_bits(c)).collect();
            let t = FiniteTopology::from_closed_subbasis(n, &sets).unwrap();
            let got: Vec<u64> = t.opens(&l).unwrap().iter().map(|s| s.bits()).collect();
            assert_eq!(got, expected, "carrier {n}, closed {closed:?}");
            let by_fixpoint: Vec<u64> = closed_family_by_fixpoint(n, &sets, &l)
                .unwrap()
                .iter()
                .map(|c| c.complement(n).bits())
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            assert_eq!(by_fixpoint, expected);
        }
    }
}

#[test]
fn lower_topologies_on_square_have_six_opens() {
    let l = Limits::default();
    let low = lower_topology(&chain(2));
    let prod = product_topology(&[&low, &low], &l).unwrap();
    // brute force: topologies on 4 points containing the projection preimages
    // of the Sierpinski opens {1} (index = 2·first + second)
    let first_is_one = 0b1100u64;
    let second_is_one = 0b1010u64;
    let tops = oracle::all_topologies(4);
    let closed = [0b1111 & !first_is_one, 0b1111 & !second_is_one];
    let expected = oracle::coarsest_with_closed(4, &tops, &closed);
    let got: Vec<u64> = prod.opens(&l).unwrap().iter().map(|s| s.bits()).collect();
    assert_eq!(got, expected);
    assert_eq!(got.len(), 6);
}

#[test]
fn separation_and_continuity_match_literal_families() {
    let l = Limits::default();
    for p in posets_up_to(4) {
        let kinds = [
            interval_topology(&p),
            lower_topology(&p),
            upper_topology(&p),
        ];
        for t in &kinds {
            let opens: Vec<u64> = t.opens(&l).unwrap().iter().map(|s| s.bits()).collect();
            assert_eq!(
                t.is_hausdorff(),
                oracle::hausdorff_by_family(p.len(), &opens)
            );
        }
        let lower = &kinds[1];
        let opens: Vec<u64> = lower.opens(&l).unwrap().iter().map(|s| s.bits()).collect();
        for map in all_maps(p.len(), p.len(), &l).unwrap() {
            assert_eq!(
                is_continuous(&map, lower, lower).unwrap(),
                oracle::continuous_by_family(&map, &opens, &opens),
                "{p:?} {map:?}"
            );
        }
    }
}

#[test]
fn convergent_filters_are_point_generated() {
    let l = Limits::default();
    for p in posets_up_to(6) {
        let r = Rel::of(&p);
        let complete = r.is_complete_lattice();
        for f in all_filters(&p, &l).unwrap() {
            for x in 0..p.len() {
                let converges = f.order_converges(x);
                assert_eq!(
                    converges,
                    oracle::order_converges(&r, f.generator().bits(), x)
                );
                if complete {
                    assert_eq!(converges, f.generator() == ElementSet::singleton(x));
                }
            }
        }
    }
}

#[test]
fn star_convergence_matches_definition_and_law() {
    let l = Limits::default();
    for p in posets_up_to(5) {
        let r = Rel::of(&p);
        let complete = r.is_complete_lattice();
        for f in all_filters(&p, &l).unwrap() {
            for x in 0..p.len() {
                let star = f.star_converges(x, &l).unwrap();
                assert_eq!(
                    star,
                    oracle::star_converges(&r, f.generator().bits(), x),
                    "{p:?}"
                );
                if complete {
                    assert_eq!(star, f.generator() == ElementSet::singleton(x));
                }
            }
        }
    }
}

#[test]
fn down_set_criterion_holds_exhaustively() {
    let l = Limits::default();
    for p in posets_up_to(5) {
        let r = Rel::of(&p);
        for f in all_filters(&p, &l).unwrap() {
            let members = oracle::filter_members(p.len(), f.generator().bits());
            for x in 0..p.len() {
                let c = f.down_set_criterion(x);
                assert!(c.agrees());
                assert_eq!(
                    c.upper_bound,
                    oracle::filter_upper_by_union(&r, f.generator().bits()) >> x & 1 == 1
                );
                assert_eq!(c.down_set_member, members.contains(&r.down(x)));
            }
        }
    }
}

#[test]
fn complete_homs_classified_on_pentagon() {
    let l = Limits::default();
    let pent = Lattice::new(n5()).unwrap();
    let homs =
        ordlab_core::morphisms::enumerate_homs(&pent, &pent, HomClass::CompleteHom, &l).unwrap();
    let r = Rel::of(&pent);
    let literal = all_maps(5, 5, &l)
        .unwrap()
        .filter(|m| oracle::is_complete_hom(&r, &r, m))
        .count();
    assert_eq!(homs.len(), literal);
}

#[test]
fn super_filters_are_exactly_the_containing_filters() {
    let l = Limits::default();
    for p in posets_up_to(4) {
        for f in all_filters(&p, &l).unwrap() {
            let fam_f = oracle::filter_members(p.len(), f.generator().bits());
            let expected: Vec<u64> = all_filters(&p, &l)
                .unwrap()
                .filter(|g| {
                    let fam_g = oracle::filter_members(p.len(), g.generator().bits());
                    fam_f.iter().all(|s| fam_g.contains(s))
                })
                .map(|g| g.generator().bits())
                .collect();
            let got: Vec<u64> = f
                .super_filters(&l)
                .unwrap()
                .iter()
                .map(|g| g.generator().bits())
                .collect();
            assert_eq!(got, expected);
            assert!(f
                .super_filters(&l)
                .unwrap()
                .iter()
                .all(|g: &SetFilter<'_>| f.is_contained_in(g)));
        }
    }
}
