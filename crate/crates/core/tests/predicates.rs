use hollow_core::catalog::{self, desk_catalog};
use hollow_core::construct::{amalgam, regular, theta_power};
use hollow_core::predicates::*;
use hollow_core::{enumerate_acts, Act, ElemSet, Lattice, Monoid, Subact};
use proptest::prelude::*;

fn sub(act: &Act, bits: u64) -> Subact {
    act.subact(ElemSet::from_bits(bits)).unwrap()
}

#[test]
fn two_thetas_over_every_catalog_monoid() {
    for e in desk_catalog() {
        let a = theta_power(&e.monoid, 2);
        let t1 = sub(&a, 0b01);
        assert!(is_coessential(&a, t1).holds, "{}", e.spec);
        assert!(is_coessential_by_criterion(&a, t1).holds);
        assert!(!is_superfluous(&a, t1).holds);
        assert!(is_co_uniform(&a).holds);
        let hollow = is_hollow(&a);
        assert!(!hollow.holds);
        assert_eq!(hollow.witness, Some(Witness::pair(ElemSet::from_bits(0b01), ElemSet::from_bits(0b10))));
    }
}

#[test]
fn three_thetas_over_every_catalog_monoid() {
    for e in desk_catalog() {
        let a = theta_power(&e.monoid, 3);
        assert!(!is_co_uniform(&a).holds, "{}", e.spec);
        for r in SupplementReading::ALL {
            assert!(is_supplemented(&a, r).holds, "{} {r}", e.spec);
        }
    }
}

#[test]
fn amalgams_along_proper_right_ideals() {
    for e in desk_catalog() {
        let s = regular(&e.monoid);
        for i in Lattice::of(&s).proper() {
            let am = amalgam(&s, sub(&s, i.bits())).unwrap();
            assert!(is_indecomposable(&am).holds, "{} along {:?}", e.spec, i.to_vec());
            assert!(!is_hollow(&am).holds, "{} along {:?}", e.spec, i.to_vec());
        }
    }
}

#[test]
fn radicals_of_small_acts() {
    let s2 = regular(&catalog::s2());
    let r = radical(&s2);
    assert_eq!(r.subset, ElemSet::singleton(1));
    assert!(!r.is_whole);
    assert!(is_hollow(&s2).holds);

    let t2 = theta_power(&catalog::s2(), 2);
    let r = radical(&t2);
    assert!(r.subset.is_empty());
    assert_eq!(r.maximals, vec![ElemSet::from_bits(0b01), ElemSet::from_bits(0b10)]);
}

#[test]
fn groups_have_simple_regular_acts() {
    let c3 = regular(&catalog::cyclic_group(3));
    let r = radical(&c3);
    assert!(r.is_whole && r.maximals.is_empty());
    assert!(!is_local_monoid(&catalog::cyclic_group(3)).holds);
    assert!(is_local_monoid(&catalog::s2()).holds);
}

#[test]
fn projective_examples() {
    assert!(is_projective(&regular(&catalog::full_transformation(2))).holds);
    assert!(!is_projective(&theta_power(&catalog::cyclic_group(2), 1)).holds);
    assert!(is_projective(&theta_power(&catalog::s2(), 2)).holds);
}

fn small_act() -> impl Strategy<Value = Act> {
    let monoids: Vec<Monoid> = desk_catalog()
        .into_iter()
        .map(|e| e.monoid)
        .filter(|m| m.size() <= 4)
        .collect();
    (0..monoids.len(), 1usize..=5, any::<prop::sample::Index>()).prop_map(move |(i, n, pick)| {
        let acts = enumerate_acts(&monoids[i], n, true);
        acts[pick.index(acts.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn superfluous_subacts_are_coessential(act in small_act()) {
        for b in hollow_core::all_subacts(&act) {
            if is_superfluous(&act, b).holds {
                prop_assert!(is_coessential(&act, b).holds);
            }
            prop_assert_eq!(is_coessential(&act, b).holds, is_coessential_by_criterion(&act, b).holds);
        }
    }

    #[test]
    fn hollow_sits_between_cyclic_and_co_uniform(act in small_act()) {
        let hollow = is_hollow(&act).holds;
        if cyclicity(&act).is_cyclic {
            prop_assert!(hollow);
        }
        if hollow {
            prop_assert!(is_co_uniform(&act).holds);
            prop_assert!(is_indecomposable(&act).holds);
        }
        prop_assert_eq!(hollow, hollow_by_decomposition(&act));
        prop_assert_eq!(hollow, hollow_by_locality(&act));
    }

    #[test]
    fn radical_is_the_union_of_superfluous_subacts(act in small_act()) {
        let l = Lattice::of(&act);
        let r = radical_in(&l);
        prop_assert_eq!(r.subset, radical_as_union(&l));
        prop_assert_eq!(r.is_whole, r.maximals.is_empty());
    }

    #[test]
    fn supplement_criterion_matches_definition(act in small_act()) {
        let l = Lattice::of(&act);
        for b in l.proper() {
            for &c in l.subacts() {
                if b.union(c) == l.top() {
                    prop_assert_eq!(supplement_in(&l, b, c).is_ok(), supplement_by_criterion(&l, b, c));
                }
            }
        }
    }

    #[test]
    fn strict_supplements_are_relaxed_ones(act in small_act()) {
        let l = Lattice::of(&act);
        for b in l.proper() {
            let strict = supplements_in(&l, b, SupplementReading::Strict);
            let relaxed = supplements_in(&l, b, SupplementReading::Relaxed);
            prop_assert!(strict.iter().all(|c| relaxed.contains(c)));
            prop_assert!(relaxed.len() - strict.len() <= 1);
        }
    }

    #[test]
    fn uniserial_characterizations_agree(act in small_act()) {
        let u = is_uniserial(&act).holds;
        prop_assert_eq!(u, uniserial_by_hollow_subacts(&act));
        prop_assert_eq!(u, uniserial_by_two_generated(&act));
    }
}
