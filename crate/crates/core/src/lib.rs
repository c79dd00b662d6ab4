//! Finite right acts over finite monoids.
//!
//! The crate builds validated monoids, acts, subacts and homomorphisms,
//! decides the subact-level properties of an act (superfluous and
//! coessential subacts, hollow, co-uniform, local, radical, supplements,
//! uniserial, projective), enumerates acts up to isomorphism and checks a
//! registry of claims about these notions exhaustively over a corpus.
//!
//! ```
//! use hollow_core::{catalog, construct::theta_power, predicates::*};
//!
//! let a = theta_power(&catalog::s2(), 2);
//! let b = a.subact(hollow_core::ElemSet::singleton(0)).unwrap();
//! assert!(is_coessential(&a, b).holds);
//! assert!(!is_superfluous(&a, b).holds);
//! assert!(is_co_uniform(&a).holds && !is_hollow(&a).holds);
//! ```

pub mod act;
pub mod bitset;
pub mod catalog;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod hom;
pub mod lab;
pub mod lattice;
pub mod monoid;
pub mod par;
pub mod predicates;

pub use act::{Act, Subact};
pub use bitset::ElemSet;
pub use catalog::MonoidSpec;
pub use enumerate::{act_isomorphic, enumerate_acts};
pub use error::{Error, Result};
pub use hom::{hom_queries, homomorphisms, Hom};
pub use lattice::{all_subacts, Lattice};
pub use monoid::Monoid;
pub use par::Execution;
