//! Lattice-level helpers shared by the claim checkers.

use crate::act::{Act, Subact};
use crate::bitset::ElemSet;
use crate::construct::rees_quotient;
use crate::hom::Hom;
use crate::lattice::Lattice;
use crate::predicates::{co_uniform_in, coessential_in, components, hollow_in, superfluous_in};

/// An act with its subact lattice and, for claims about maps, a
/// homomorphism out of it together with the target's lattice.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub act: Act,
    pub lat: Lattice,
    pub hom: Option<HomCtx>,
}

#[derive(Clone, Debug)]
pub struct HomCtx {
    pub f: Hom,
    pub target: Lattice,
}

/// A Rees factor `A/C` with its lattice and projection.
pub(crate) struct Quot {
    pub lat: Lattice,
    pub pi: Hom,
}

impl Quot {
    /// `B/C`, the image of `b` (for `C ⊆ B`).
    pub fn img(&self, b: ElemSet) -> ElemSet {
        self.pi.image_of(b)
    }
}

impl Ctx {
    pub fn new(act: Act, hom: Option<Hom>) -> Self {
        let lat = Lattice::of(&act);
        let hom = hom.map(|f| HomCtx { target: Lattice::of(f.target()), f });
        Ctx { act, lat, hom }
    }

    pub fn top(&self) -> ElemSet {
        self.lat.top()
    }

    pub(crate) fn hom(&self) -> &HomCtx {
        self.hom.as_ref().expect("claim needs a homomorphism")
    }

    pub(crate) fn quotient(&self, c: ElemSet) -> Quot {
        let (q, pi) = rees_quotient(&self.act, Subact::new_unchecked(c));
        Quot { lat: Lattice::of(&q), pi }
    }

    pub(crate) fn within(&self, c: ElemSet) -> Lattice {
        self.lat.within(c)
    }

    pub(crate) fn is_cyclic(&self, top: ElemSet) -> bool {
        top.iter().any(|a| self.act.cyclic(a) == top)
    }

    pub(crate) fn is_locally_cyclic(&self, top: ElemSet) -> bool {
        top.iter().all(|a| {
            top.iter()
                .filter(|&b| b > a)
                .all(|b| top.iter().any(|c| self.act.cyclic(c).contains(a) && self.act.cyclic(c).contains(b)))
        })
    }

    pub(crate) fn components(&self, top: ElemSet) -> Vec<ElemSet> {
        components(&self.act, top)
    }

    pub(crate) fn is_indecomposable(&self, top: ElemSet) -> bool {
        self.components(top).len() == 1
    }
}

pub(crate) fn sup(l: &Lattice, b: ElemSet) -> bool {
    superfluous_in(l, b).is_none()
}

pub(crate) fn coess(l: &Lattice, b: ElemSet) -> bool {
    coessential_in(l, b).is_none()
}

pub(crate) fn hollow(l: &Lattice) -> bool {
    hollow_in(l).is_none()
}

pub(crate) fn co_uniform(l: &Lattice) -> bool {
    co_uniform_in(l).is_none()
}

pub(crate) fn local(l: &Lattice) -> bool {
    l.maximals().len() == 1
}

/// `Rad` as a set: the intersection of the maximal subacts, or the top when
/// there are none.
pub(crate) fn rad(l: &Lattice) -> ElemSet {
    l.maximals().into_iter().fold(l.top(), ElemSet::intersection)
}

/// `b ≤ₛ x` for a subact `x` of the lattice, without building `l.within(x)`.
pub(crate) fn sup_under(l: &Lattice, x: ElemSet, b: ElemSet) -> bool {
    !l.below(x).any(|c| c != x && b.union(c) == x)
}

/// `b ≪ x` through the criterion, like [`sup_under`].
pub(crate) fn coess_under(l: &Lattice, x: ElemSet, b: ElemSet) -> bool {
    !l.below(x).any(|c| c != x && !c.is_disjoint(b) && b.union(c) == x)
}
