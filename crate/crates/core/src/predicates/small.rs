use crate::act::{Act, Subact};
use crate::bitset::ElemSet;
use crate::construct::rees_quotient;
use crate::hom::Hom;
use crate::lattice::Lattice;

use super::{PropertyVerdict, Witness};

/// A proper subact `C` of the lattice top with `b ∪ C = top`, if any.
/// `None` means `b` is superfluous in the top. `b` may be empty or the top.
pub fn superfluous_in(l: &Lattice, b: ElemSet) -> Option<ElemSet> {
    l.proper().find(|&c| b.union(c) == l.top())
}

/// `B ≤ₛ A`: `B ∪ C ≠ A` for every proper subact `C`.
pub fn is_superfluous(act: &Act, b: Subact) -> PropertyVerdict {
    let l = Lattice::of(act);
    PropertyVerdict::from_option(superfluous_in(&l, b.set()).map(|c| Witness::pair(b.set(), c)))
}

/// Finite-case characterization: `b` lies in every maximal subact.
pub fn superfluous_by_maximals(l: &Lattice, b: ElemSet) -> bool {
    l.maximals().iter().all(|&m| b.is_subset(m))
}

/// A proper subact `C` with `C ∩ b ≠ ∅` and `C ∪ b = top`, if any. `None`
/// means `b` is coessential in the top.
pub fn coessential_in(l: &Lattice, b: ElemSet) -> Option<ElemSet> {
    l.proper()
        .find(|&c| !c.is_disjoint(b) && b.union(c) == l.top())
}

/// `B ≪ A` by definition: the projection `A -> A/B` is a cover.
pub fn is_coessential(act: &Act, b: Subact) -> PropertyVerdict {
    let (_, pi) = rees_quotient(act, b);
    is_cover(&pi)
}

/// `B ≪ A` through the criterion: for every proper `C`, `C ∩ B ≠ ∅` implies
/// `C ∪ B ≠ A`.
pub fn is_coessential_by_criterion(act: &Act, b: Subact) -> PropertyVerdict {
    let l = Lattice::of(act);
    PropertyVerdict::from_option(coessential_in(&l, b.set()).map(|c| Witness::pair(b.set(), c)))
}

/// Whether `f` is a coessential epimorphism: onto, and not onto when
/// restricted to any proper subact of the source. Restrictions only need
/// checking on maximal subacts. The witness is a maximal subact still
/// mapping onto the target.
pub fn is_cover(f: &Hom) -> PropertyVerdict {
    if !f.is_epi() {
        return PropertyVerdict::no(Witness::NotEpi);
    }
    let target = f.target().full();
    let l = Lattice::of(f.source());
    let onto = l.maximals().into_iter().find(|&m| f.image_of(m) == target);
    PropertyVerdict::from_option(onto.map(Witness::subact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::construct::{amalgam, regular, theta, theta_power};

    fn sub(act: &Act, bits: u64) -> Subact {
        act.subact(ElemSet::from_bits(bits)).unwrap()
    }

    #[test]
    fn theta_pair_singleton_is_coessential_not_superfluous() {
        for e in catalog::desk_catalog() {
            let a = theta_power(&e.monoid, 2);
            let b = sub(&a, 0b01);
            let v = is_superfluous(&a, b);
            assert!(!v.holds);
            assert_eq!(v.witness, Some(Witness::pair(b.set(), ElemSet::from_bits(0b10))));
            assert!(is_coessential(&a, b).holds);
            assert!(is_coessential_by_criterion(&a, b).holds);
        }
    }

    #[test]
    fn zero_of_s2_is_superfluous() {
        let a = regular(&catalog::s2());
        let b = sub(&a, 0b10);
        assert!(is_superfluous(&a, b).holds);
        assert!(is_coessential(&a, b).holds);
        assert!(!is_superfluous(&a, a.whole()).holds);
    }

    #[test]
    fn simple_act_is_superfluous_in_itself() {
        let t = theta(&catalog::s2());
        assert!(is_superfluous(&t, t.whole()).holds);
        assert!(is_coessential(&t, t.whole()).holds);
    }

    #[test]
    fn amalgam_branch_is_not_coessential() {
        let s = regular(&catalog::s2());
        let am = amalgam(&s, sub(&s, 0b10)).unwrap();
        // elements: 0, 1_a, 1_b
        let branch_a = sub(&am, 0b011);
        let v = is_coessential_by_criterion(&am, branch_a);
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::pair(branch_a.set(), ElemSet::from_bits(0b101))));
        assert!(!is_coessential(&am, branch_a).holds);
    }

    #[test]
    fn identity_is_cover_and_total_collapse_is_not() {
        let a = theta_power(&catalog::s2(), 2);
        assert!(is_cover(&Hom::identity(&a)).holds);
        let (_, pi) = rees_quotient(&a, a.whole());
        let v = is_cover(&pi);
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::subact(ElemSet::from_bits(0b01))));
    }

    #[test]
    fn non_epi_is_not_cover() {
        let a = regular(&catalog::s2());
        let h = Hom::new(&a, &a, vec![1, 1]).unwrap();
        assert_eq!(is_cover(&h).witness, Some(Witness::NotEpi));
    }

    #[test]
    fn empty_set_counts_as_superfluous() {
        let a = theta_power(&catalog::s2(), 2);
        let l = Lattice::of(&a);
        assert_eq!(superfluous_in(&l, ElemSet::EMPTY), None);
        assert!(superfluous_by_maximals(&l, ElemSet::EMPTY));
    }
}
