//! Properties of acts and subacts.
//!
//! Where a property has a second characterization, both are exposed so one
//! can serve as an oracle for the other:
//!
//! | property     | definitional                 | characterization                        |
//! |--------------|------------------------------|-----------------------------------------|
//! | superfluous  | [`is_superfluous`]           | [`superfluous_by_maximals`]             |
//! | coessential  | [`is_coessential`] (cover)   | [`is_coessential_by_criterion`]         |
//! | hollow       | [`is_hollow`]                | [`hollow_by_decomposition`], [`hollow_by_locality`] |
//! | uniserial    | [`is_uniserial`]             | [`uniserial_by_hollow_subacts`], [`uniserial_by_two_generated`] |
//! | radical      | [`radical`]                  | [`radical_as_union`]                    |
//! | supplement   | [`is_supplement`]            | [`supplement_by_criterion`]             |
//! | projective   | [`is_projective`]            | [`projective_by_splitting`]             |
//!
//! The empty set is never a subact, but it shows up as an intersection or a
//! radical. It counts as superfluous: `∅ ∪ C = C` is proper for proper `C`.

mod projective;
mod radical;
mod small;
mod structure;
mod supplement;

use serde::{Deserialize, Serialize};

use crate::bitset::ElemSet;

pub use projective::{is_projective, projective_by_splitting};
pub use radical::{
    is_local_act, is_local_monoid, local_monoid_report, maximal_subacts, radical, radical_as_union,
    radical_in, LocalMonoidReport, RadicalResult,
};
pub use small::{
    coessential_in, is_coessential, is_coessential_by_criterion, is_cover, is_superfluous,
    superfluous_by_maximals, superfluous_in,
};
pub(crate) use structure::components;
pub use structure::{
    co_uniform_in, cyclicity, decompose, hollow_by_decomposition, hollow_by_locality, hollow_in,
    is_co_uniform, is_hollow, is_indecomposable, is_uniserial, minimal_generating_sets,
    uniserial_by_hollow_subacts, uniserial_by_two_generated, Cyclicity,
};
pub use supplement::{
    is_supplement, is_supplemented, supplement_by_criterion, supplement_in, supplemented_in,
    supplements_in, supplements_of, SupplementReading,
};

/// The outcome of checking a property, with a counterexample when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

/// What a failing check found. Sets are element-index lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Witness {
    /// A subact that violates the defining condition.
    Subact { subact: Vec<usize> },
    /// `subact` fails because of `partner` (e.g. their union is the whole act).
    Pair { subact: Vec<usize>, partner: Vec<usize> },
    /// Subacts that together witness the failure (e.g. a decomposition).
    Subacts { subacts: Vec<Vec<usize>> },
    Element { element: usize },
    Elements { first: usize, second: usize },
    NotEpi,
    Note { note: String },
}

impl PropertyVerdict {
    pub fn yes() -> Self {
        PropertyVerdict { holds: true, witness: None }
    }

    pub fn no(witness: Witness) -> Self {
        PropertyVerdict { holds: false, witness: Some(witness) }
    }

    pub(crate) fn from_option(failure: Option<Witness>) -> Self {
        match failure {
            None => Self::yes(),
            Some(w) => Self::no(w),
        }
    }
}

impl Witness {
    pub fn subact(s: ElemSet) -> Self {
        Witness::Subact { subact: s.to_vec() }
    }

    pub fn pair(s: ElemSet, partner: ElemSet) -> Self {
        Witness::Pair { subact: s.to_vec(), partner: partner.to_vec() }
    }

    pub fn subacts(sets: &[ElemSet]) -> Self {
        Witness::Subacts { subacts: sets.iter().map(|s| s.to_vec()).collect() }
    }
}
