//! Subact lattices.
//!
//! Every subact is a union of cyclic subacts `aS`, so the lattice is the
//! union-closure of the distinct cyclic subacts. The subacts of a subact `C`
//! are exactly the subacts of the ambient act contained in `C`, which lets one
//! lattice serve every subact of an act through [`Lattice::within`].

use std::collections::HashSet;

use crate::act::{Act, Subact};
use crate::bitset::ElemSet;

/// All subacts of an act `A` (or of a subact of `A`), sorted by bitset order.
#[derive(Clone, Debug)]
pub struct Lattice {
    top: ElemSet,
    subacts: Vec<ElemSet>,
}

impl Lattice {
    pub fn of(act: &Act) -> Self {
        let mut cyclic: Vec<ElemSet> = act.cyclic_subacts().to_vec();
        cyclic.sort_unstable();
        cyclic.dedup();
        let mut seen: HashSet<ElemSet> = cyclic.iter().copied().collect();
        let mut subacts = cyclic.clone();
        let mut i = 0;
        while i < subacts.len() {
            let s = subacts[i];
            for &c in &cyclic {
                let u = s.union(c);
                if seen.insert(u) {
                    subacts.push(u);
                }
            }
            i += 1;
        }
        subacts.sort_unstable();
        Lattice { top: act.full(), subacts }
    }

    /// The lattice of the subact `c`, whose members must be a subact.
    pub fn within(&self, c: ElemSet) -> Self {
        debug_assert!(self.subacts.binary_search(&c).is_ok());
        Lattice {
            top: c,
            subacts: self.subacts.iter().copied().filter(|s| s.is_subset(c)).collect(),
        }
    }

    /// The top element (the act, or the subact this lattice was restricted to).
    #[inline]
    pub fn top(&self) -> ElemSet {
        self.top
    }

    pub fn subacts(&self) -> &[ElemSet] {
        &self.subacts
    }

    pub fn proper(&self) -> impl Iterator<Item = ElemSet> + '_ {
        let top = self.top;
        self.subacts.iter().copied().filter(move |&s| s != top)
    }

    pub fn contains(&self, s: ElemSet) -> bool {
        self.subacts.binary_search(&s).is_ok()
    }

    pub fn len(&self) -> usize {
        self.subacts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subacts.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        self.subacts.len() == 1
    }

    /// Proper subacts not strictly contained in another proper subact.
    pub fn maximals(&self) -> Vec<ElemSet> {
        let proper: Vec<ElemSet> = self.proper().collect();
        proper
            .iter()
            .copied()
            .filter(|&m| !proper.iter().any(|&o| m.is_proper_subset(o)))
            .collect()
    }

    /// Subacts contained in `b`, i.e. the lattice of `b` without the
    /// bookkeeping of [`within`](Self::within).
    pub fn below(&self, b: ElemSet) -> impl Iterator<Item = ElemSet> + '_ {
        self.subacts.iter().copied().filter(move |s| s.is_subset(b))
    }
}

/// Every subact of `act`, in bitset order.
pub fn all_subacts(act: &Act) -> Vec<Subact> {
    Lattice::of(act)
        .subacts()
        .iter()
        .map(|&s| Subact::new_unchecked(s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::construct;
    use proptest::prelude::*;

    /// Independent oracle: every nonempty closed subset.
    fn brute_force(act: &Act) -> Vec<ElemSet> {
        (1u64..(1u64 << act.size()))
            .map(ElemSet::from_bits)
            .filter(|&s| act.is_closed(s))
            .collect()
    }

    #[test]
    fn theta_coproduct_has_every_subset() {
        let t2 = construct::theta_power(&catalog::s2(), 2);
        let l = Lattice::of(&t2);
        assert_eq!(l.subacts(), &[
            ElemSet::from_bits(0b01),
            ElemSet::from_bits(0b10),
            ElemSet::from_bits(0b11)
        ]);
    }

    #[test]
    fn s2_regular_act() {
        let a = construct::regular(&catalog::s2());
        // {0} is element 1, the whole act is {0, 1}
        assert_eq!(Lattice::of(&a).subacts(), &[ElemSet::from_bits(0b10), ElemSet::from_bits(0b11)]);
    }

    #[test]
    fn theta_is_simple() {
        let theta = construct::theta(&catalog::s2());
        let l = Lattice::of(&theta);
        assert!(l.is_simple());
        assert!(l.maximals().is_empty());
    }

    #[test]
    fn matches_brute_force_on_small_corpus() {
        for entry in catalog::desk_catalog().into_iter().filter(|e| e.monoid.size() <= 4) {
            for n in 1..=4 {
                for act in crate::enumerate::enumerate_acts(&entry.monoid, n, false) {
                    assert_eq!(Lattice::of(&act).subacts(), brute_force(&act).as_slice());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn within_is_downset(ix in 0usize..1000, jx in 0usize..64) {
            let acts = crate::enumerate::enumerate_acts(&catalog::min_chain(2), 4, false);
            let act = &acts[ix % acts.len()];
            let l = Lattice::of(act);
            let c = l.subacts()[jx % l.len()];
            let sub = l.within(c);
            prop_assert_eq!(sub.top(), c);
            for s in l.subacts() {
                prop_assert_eq!(sub.contains(*s), s.is_subset(c));
            }
            // union and intersection closure
            for &x in l.subacts() {
                for &y in l.subacts() {
                    prop_assert!(l.contains(x.union(y)));
                    let i = x.intersection(y);
                    prop_assert!(i.is_empty() || l.contains(i));
                }
            }
        }
    }
}
