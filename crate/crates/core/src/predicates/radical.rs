use crate::act::{Act, Subact};
use crate::bitset::ElemSet;
use crate::construct::regular;
use crate::lattice::Lattice;
use crate::monoid::Monoid;

use super::small::superfluous_in;
use super::{PropertyVerdict, Witness};

pub(crate) fn maximals_of(l: &Lattice) -> Vec<ElemSet> {
    l.maximals()
}

pub fn maximal_subacts(act: &Act) -> Vec<Subact> {
    Lattice::of(act)
        .maximals()
        .into_iter()
        .map(Subact::new_unchecked)
        .collect()
}

/// `Rad(A)`: the intersection of the maximal subacts, or `A` itself when
/// there are none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalResult {
    /// Possibly empty.
    pub subset: ElemSet,
    /// `Max(A) = ∅`, so the radical is the whole act by convention.
    pub is_whole: bool,
    pub maximals: Vec<ElemSet>,
}

pub fn radical_in(l: &Lattice) -> RadicalResult {
    let maximals = l.maximals();
    if maximals.is_empty() {
        return RadicalResult { subset: l.top(), is_whole: true, maximals };
    }
    let subset = maximals.iter().fold(l.top(), |acc, &m| acc.intersection(m));
    RadicalResult { subset, is_whole: false, maximals }
}

pub fn radical(act: &Act) -> RadicalResult {
    radical_in(&Lattice::of(act))
}

/// The union of all superfluous subacts (empty when there are none).
pub fn radical_as_union(l: &Lattice) -> ElemSet {
    l.subacts()
        .iter()
        .copied()
        .filter(|&b| superfluous_in(l, b).is_none())
        .fold(ElemSet::EMPTY, ElemSet::union)
}

/// Local: exactly one maximal subact. The witness lists the maximals.
pub fn is_local_act(act: &Act) -> PropertyVerdict {
    let max = Lattice::of(act).maximals();
    if max.len() == 1 {
        PropertyVerdict::yes()
    } else {
        PropertyVerdict::no(Witness::subacts(&max))
    }
}

/// Right-ideal structure of a monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMonoidReport {
    /// Elements with no right inverse.
    pub non_invertible: ElemSet,
    pub is_group: bool,
    /// Maximal proper right ideals (maximal subacts of `S_S`).
    pub maximal_right_ideals: Vec<ElemSet>,
    /// Maximal proper left ideals.
    pub maximal_left_ideals: Vec<ElemSet>,
}

pub fn local_monoid_report(m: &Monoid) -> LocalMonoidReport {
    let non_invertible: ElemSet = (0..m.size()).filter(|&s| !m.is_right_invertible(s)).collect();
    LocalMonoidReport {
        non_invertible,
        is_group: m.is_group(),
        maximal_right_ideals: Lattice::of(&regular(m)).maximals(),
        maximal_left_ideals: Lattice::of(&regular(&m.opposite())).maximals(),
    }
}

/// Local monoid: the non-right-invertible elements are nonempty (they then
/// form the unique maximal right ideal). Groups are not local.
pub fn is_local_monoid(m: &Monoid) -> PropertyVerdict {
    let r = local_monoid_report(m);
    if r.non_invertible.is_empty() {
        PropertyVerdict::no(Witness::Note { note: "group: every element is right invertible".into() })
    } else {
        PropertyVerdict::yes()
    }
}
