//! Finite bounded posets with an antitone involutive complementation.
//!
//! The crate covers the order kernel ([`poset`]), the axiom checks for
//! orthomodular, generalized orthomodular and Boolean posets ([`ortho`]),
//! compatibility, commutator and discriminator ([`logic`]), horizontal sums
//! and the built-in example structures ([`constructs`]), canonical forms
//! ([`canon`]) and an orderly enumerator with the verification certificates
//! built on it ([`enumerate`]).

pub mod canon;
pub mod constructs;
pub mod enumerate;
pub mod error;
pub mod logic;
pub mod ortho;
pub mod poset;
pub mod report;
pub mod subset;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use error::{Error, Result};
pub use ortho::{complements_of, validate_orthoposet, Classification, Involution, OmOutcome, OrthoPoset};
pub use poset::Poset;
pub use report::{CheckReport, Witness};
pub use subset::Subset;
