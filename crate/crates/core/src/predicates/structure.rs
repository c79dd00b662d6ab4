use crate::act::{Act, Subact};
use crate::bitset::ElemSet;
use crate::lattice::Lattice;

use super::radical::maximals_of;
use super::small::{coessential_in, superfluous_in};
use super::{PropertyVerdict, Witness};

/// Connected components of `within` under `a ~ a·s`. Components are listed
/// by least element.
pub(crate) fn components(act: &Act, within: ElemSet) -> Vec<ElemSet> {
    let mut parent: Vec<usize> = (0..act.size()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for a in within.iter() {
        for b in act.cyclic(a).iter() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut comps: Vec<(usize, ElemSet)> = Vec::new();
    for a in within.iter() {
        let r = find(&mut parent, a);
        match comps.iter_mut().find(|(root, _)| *root == r) {
            Some((_, set)) => set.insert(a),
            None => comps.push((r, ElemSet::singleton(a))),
        }
    }
    comps.sort_by_key(|(_, s)| s.first());
    comps.into_iter().map(|(_, s)| s).collect()
}

/// The decomposition of an act into indecomposable subacts.
pub fn decompose(act: &Act) -> Vec<Subact> {
    components(act, act.full())
        .into_iter()
        .map(Subact::new_unchecked)
        .collect()
}

pub fn is_indecomposable(act: &Act) -> PropertyVerdict {
    let comps = components(act, act.full());
    if comps.len() == 1 {
        PropertyVerdict::yes()
    } else {
        PropertyVerdict::no(Witness::subacts(&comps))
    }
}

/// Cyclicity data for an act.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclicity {
    pub is_cyclic: bool,
    pub is_locally_cyclic: bool,
    pub is_simple: bool,
    /// Every `a` with `aS = A`.
    pub generators: Vec<usize>,
    /// A pair lying in no common cyclic subact.
    pub separated_pair: Option<(usize, usize)>,
}

pub fn cyclicity(act: &Act) -> Cyclicity {
    cyclicity_in(act, act.full())
}

pub(crate) fn cyclicity_in(act: &Act, top: ElemSet) -> Cyclicity {
    let generators: Vec<usize> = top.iter().filter(|&a| act.cyclic(a) == top).collect();
    let mut separated_pair = None;
    'outer: for a in top.iter() {
        for b in top.iter().filter(|&b| b > a) {
            let both = ElemSet::singleton(a).with(b);
            if !top.iter().any(|c| both.is_subset(act.cyclic(c))) {
                separated_pair = Some((a, b));
                break 'outer;
            }
        }
    }
    let is_simple = top.iter().all(|a| act.cyclic(a) == top);
    Cyclicity {
        is_cyclic: !generators.is_empty(),
        is_locally_cyclic: separated_pair.is_none(),
        is_simple,
        generators,
        separated_pair,
    }
}

/// A proper subact `B` with a proper `C`, `B ∪ C = top`, if the top is not
/// hollow.
pub fn hollow_in(l: &Lattice) -> Option<(ElemSet, ElemSet)> {
    l.proper().find_map(|b| superfluous_in(l, b).map(|c| (b, c)))
}

/// A proper subact `B` with a proper `C`, `C ∩ B ≠ ∅`, `B ∪ C = top`, if
/// the top is not co-uniform.
pub fn co_uniform_in(l: &Lattice) -> Option<(ElemSet, ElemSet)> {
    l.proper().find_map(|b| coessential_in(l, b).map(|c| (b, c)))
}

/// Hollow: every proper subact is superfluous.
pub fn is_hollow(act: &Act) -> PropertyVerdict {
    let l = Lattice::of(act);
    PropertyVerdict::from_option(hollow_in(&l).map(|(b, c)| Witness::pair(b, c)))
}

/// Co-uniform: every proper subact is coessential.
pub fn is_co_uniform(act: &Act) -> PropertyVerdict {
    let l = Lattice::of(act);
    PropertyVerdict::from_option(co_uniform_in(&l).map(|(b, c)| Witness::pair(b, c)))
}

/// Hollow as indecomposable and co-uniform.
pub fn hollow_by_decomposition(act: &Act) -> bool {
    is_indecomposable(act).holds && is_co_uniform(act).holds
}

/// Finite-case characterization: simple, or cyclic with exactly one
/// maximal subact.
pub fn hollow_by_locality(act: &Act) -> bool {
    let l = Lattice::of(act);
    l.is_simple() || (cyclicity(act).is_cyclic && maximals_of(&l).len() == 1)
}

/// Uniserial: subacts are totally ordered by inclusion.
pub fn is_uniserial(act: &Act) -> PropertyVerdict {
    let l = Lattice::of(act);
    let subs = l.subacts();
    for (i, &x) in subs.iter().enumerate() {
        for &y in &subs[i + 1..] {
            if !x.is_subset(y) && !y.is_subset(x) {
                return PropertyVerdict::no(Witness::pair(x, y));
            }
        }
    }
    PropertyVerdict::yes()
}

/// Every subact is hollow.
pub fn uniserial_by_hollow_subacts(act: &Act) -> bool {
    let l = Lattice::of(act);
    l.subacts().iter().all(|&x| hollow_in(&l.within(x)).is_none())
}

/// Every subact generated by at most two elements is hollow.
pub fn uniserial_by_two_generated(act: &Act) -> bool {
    let l = Lattice::of(act);
    (0..act.size()).all(|a| {
        (a..act.size()).all(|b| {
            let x = act.cyclic(a).union(act.cyclic(b));
            hollow_in(&l.within(x)).is_none()
        })
    })
}

/// All generating sets from which no element can be dropped, in bitset
/// order. Such a set picks exactly one generator of each maximal cyclic
/// subact.
pub fn minimal_generating_sets(act: &Act) -> Vec<ElemSet> {
    let mut tops: Vec<ElemSet> = Vec::new();
    for &c in act.cyclic_subacts() {
        let dominated = act.cyclic_subacts().iter().any(|&d| c.is_proper_subset(d));
        if !dominated && !tops.contains(&c) {
            tops.push(c);
        }
    }
    let choices: Vec<Vec<usize>> = tops
        .iter()
        .map(|&t| (0..act.size()).filter(|&a| act.cyclic(a) == t).collect())
        .collect();
    let mut out = vec![ElemSet::EMPTY];
    for options in &choices {
        out = out
            .iter()
            .flat_map(|&partial| options.iter().map(move |&a| partial.with(a)))
            .collect();
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::construct::{amalgam, regular, theta, theta_power};
    use crate::enumerate::enumerate_acts;

    #[test]
    fn theta_pair_is_co_uniform_not_hollow() {
        let a = theta_power(&catalog::s2(), 2);
        assert!(is_co_uniform(&a).holds);
        let v = is_hollow(&a);
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::pair(ElemSet::from_bits(0b01), ElemSet::from_bits(0b10))));
    }

    #[test]
    fn amalgam_is_indecomposable_not_hollow() {
        let s = regular(&catalog::s2());
        let am = amalgam(&s, s.subact(ElemSet::singleton(1)).unwrap()).unwrap();
        assert!(is_indecomposable(&am).holds);
        assert_eq!(decompose(&am).len(), 1);
        assert!(!is_hollow(&am).holds);
        assert!(is_hollow(&s).holds);
    }

    #[test]
    fn three_thetas_decompose_into_three() {
        let a = theta_power(&catalog::s2(), 3);
        assert_eq!(decompose(&a).len(), 3);
        assert!(!is_co_uniform(&a).holds);
        assert_eq!(decompose(&theta(&catalog::s2())).len(), 1);
    }

    #[test]
    fn cyclicity_examples() {
        let s = regular(&catalog::s2());
        let c = cyclicity(&s);
        assert!(c.is_cyclic && c.is_locally_cyclic && !c.is_simple);
        assert_eq!(c.generators, vec![0]);
        let t = cyclicity(&theta(&catalog::s2()));
        assert!(t.is_cyclic && t.is_simple);
        let t2 = cyclicity(&theta_power(&catalog::s2(), 2));
        assert!(!t2.is_cyclic && !t2.is_locally_cyclic && !t2.is_simple);
        assert_eq!(t2.separated_pair, Some((0, 1)));
    }

    #[test]
    fn uniserial_examples() {
        let m = catalog::min_chain(3);
        // {1,2,3} with x·s = min(x, s), e acting trivially
        let chain = {
            let r = regular(&m);
            let (sub, _) = crate::construct::induced(&r, r.subact(ElemSet::from_bits(0b1110)).unwrap());
            sub
        };
        assert!(is_uniserial(&chain).holds);
        let l = Lattice::of(&chain);
        assert_eq!(l.len(), 3);
        assert!(!is_uniserial(&theta_power(&catalog::s2(), 2)).holds);
        assert!(is_uniserial(&theta(&catalog::s2())).holds);
    }

    #[test]
    fn minimal_generating_sets_examples() {
        let m = catalog::s2();
        assert_eq!(minimal_generating_sets(&regular(&m)), vec![ElemSet::singleton(0)]);
        assert_eq!(minimal_generating_sets(&theta_power(&m, 2)), vec![ElemSet::from_bits(0b11)]);
        assert_eq!(minimal_generating_sets(&theta(&m)), vec![ElemSet::singleton(0)]);
    }

    /// Independent oracle: subsets that generate and lose that by dropping
    /// any element.
    fn brute_minimal_generating_sets(act: &Act) -> Vec<ElemSet> {
        (1u64..(1 << act.size()))
            .map(ElemSet::from_bits)
            .filter(|&x| act.closure(x) == act.full())
            .filter(|&x| x.iter().all(|a| act.closure(x.without(a)) != act.full()))
            .collect()
    }

    #[test]
    fn minimal_generating_sets_match_brute_force() {
        for e in catalog::desk_catalog().into_iter().filter(|e| e.monoid.size() <= 3) {
            for n in 1..=4 {
                for act in enumerate_acts(&e.monoid, n, true) {
                    assert_eq!(minimal_generating_sets(&act), brute_minimal_generating_sets(&act));
                }
            }
        }
    }

    #[test]
    fn decomposition_partitions_act() {
        for e in catalog::desk_catalog().into_iter().filter(|e| e.monoid.size() <= 3) {
            for act in enumerate_acts(&e.monoid, 4, true) {
                let comps = decompose(&act);
                let union = comps.iter().fold(ElemSet::EMPTY, |u, c| u.union(c.set()));
                assert_eq!(union, act.full());
                for (i, x) in comps.iter().enumerate() {
                    assert!(act.is_closed(x.set()));
                    for y in &comps[i + 1..] {
                        assert!(x.set().is_disjoint(y.set()));
                    }
                    let (sub, _) = crate::construct::induced(&act, *x);
                    assert!(is_indecomposable(&sub).holds);
                }
            }
        }
    }
}
