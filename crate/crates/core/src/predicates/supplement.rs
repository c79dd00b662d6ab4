use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::act::{Act, Subact};
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::Lattice;

use super::small::superfluous_in;
use super::{PropertyVerdict, Witness};

/// Which subacts may serve as supplements.
///
/// A supplement of a proper subact `B` is a subact `C` with `B ∪ C = A`
/// that has no proper subact `D` with `B ∪ D = A`. Under the strict reading
/// `C` must itself be proper. Under the relaxed reading `C = A` is allowed,
/// which happens exactly when `B` is superfluous.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SupplementReading {
    Strict,
    Relaxed,
}

impl SupplementReading {
    pub const ALL: [SupplementReading; 2] = [SupplementReading::Strict, SupplementReading::Relaxed];

    fn admits(self, l: &Lattice, c: ElemSet) -> bool {
        self == SupplementReading::Relaxed || c != l.top()
    }
}

impl fmt::Display for SupplementReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SupplementReading::Strict => "strict",
            SupplementReading::Relaxed => "relaxed",
        })
    }
}

impl FromStr for SupplementReading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(SupplementReading::Strict),
            "relaxed" => Ok(SupplementReading::Relaxed),
            _ => Err(Error::Invalid(format!("unknown reading `{s}`"))),
        }
    }
}

/// Checks the two supplement conditions for `c` against `b` (ignoring
/// properness). On failure: a note when `b ∪ c` is not the top, otherwise a
/// proper subact `D ⊊ c` with `b ∪ D` the top.
pub fn supplement_in(l: &Lattice, b: ElemSet, c: ElemSet) -> Result<(), Witness> {
    if b.union(c) != l.top() {
        return Err(Witness::Note { note: "B ∪ C is not the whole act".into() });
    }
    match l.below(c).find(|&d| d != c && b.union(d) == l.top()) {
        Some(d) => Err(Witness::subact(d)),
        None => Ok(()),
    }
}

/// Every supplement of `b`, in bitset order.
pub fn supplements_in(l: &Lattice, b: ElemSet, reading: SupplementReading) -> Vec<ElemSet> {
    l.subacts()
        .iter()
        .copied()
        .filter(|&c| reading.admits(l, c) && supplement_in(l, b, c).is_ok())
        .collect()
}

/// A proper subact with no supplement, if any.
pub fn supplemented_in(l: &Lattice, reading: SupplementReading) -> Option<ElemSet> {
    l.proper().find(|&b| supplements_in(l, b, reading).is_empty())
}

/// Whether `c` is a supplement of the proper subact `b`.
pub fn is_supplement(act: &Act, b: Subact, c: Subact, reading: SupplementReading) -> Result<PropertyVerdict> {
    let l = Lattice::of(act);
    if b.set() == l.top() || !reading.admits(&l, c.set()) {
        return Err(Error::NotProper);
    }
    Ok(PropertyVerdict::from_option(supplement_in(&l, b.set(), c.set()).err()))
}

pub fn supplements_of(act: &Act, b: Subact, reading: SupplementReading) -> Result<Vec<Subact>> {
    let l = Lattice::of(act);
    if b.set() == l.top() {
        return Err(Error::NotProper);
    }
    Ok(supplements_in(&l, b.set(), reading)
        .into_iter()
        .map(Subact::new_unchecked)
        .collect())
}

/// Every proper subact has a supplement. Acts without proper subacts are
/// supplemented vacuously. The witness is a proper subact lacking one.
pub fn is_supplemented(act: &Act, reading: SupplementReading) -> PropertyVerdict {
    let l = Lattice::of(act);
    PropertyVerdict::from_option(supplemented_in(&l, reading).map(Witness::subact))
}

/// Given `b ∪ c = top`: `c` is a supplement of `b` iff `c ∩ b = ∅` or
/// `c ∩ b ≤ₛ c`. Returns false when `b ∪ c` is not the top.
pub fn supplement_by_criterion(l: &Lattice, b: ElemSet, c: ElemSet) -> bool {
    if b.union(c) != l.top() {
        return false;
    }
    let meet = c.intersection(b);
    meet.is_empty() || superfluous_in(&l.within(c), meet).is_none()
}
