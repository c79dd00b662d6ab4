//! Exhaustive checking of claims about acts over a corpus of small monoids.
//!
//! The [registry](claims::registry) holds one [`Claim`] per statement. A run
//! of [`run_suite`] produces one [`ClaimReport`] per claim and supplement
//! reading, and every failure it reports can be fed back through [`replay`].

mod claims;
mod corpus;
mod ctx;
mod strictness;
mod suite;

pub use claims::{find, registry, Claim, OpenQuestion, Reading, Scope};
pub use corpus::{Corpus, Descriptor};
pub use ctx::{Ctx, HomCtx};
pub use strictness::{strictness_witness_search, StrictnessEntry, NO_FINITE_WITNESS};
pub use suite::{
    replay, run_suite, run_suite_with, select, suite_passed, ClaimReport, Failure, Mode, FAILURE_CAP,
};
