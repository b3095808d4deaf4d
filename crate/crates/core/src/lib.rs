//! Finite left restriction monoids and their actions.
//!
//! Every structure is a finite table over dense indices. The crate builds,
//! checks and cross-checks:
//!
//! - left restriction monoids and their Boolean refinement ([`restriction`]),
//! - matched pairs `[E|M]` and the monoid `S[E|M]` ([`matched_pair`]),
//! - supported actions with their Cartesian closed structure ([`actions`]),
//! - `[E|M]`-sets and the functors to and from supported actions ([`em_sets`]),
//! - partial units and the extension of actions along them ([`etale`]).
//!
//! All checks produce an [`AxiomReport`] that lists every law with its
//! lexicographically least counterexample.

pub mod actions;
pub mod algebra;
pub mod document;
pub mod em_sets;
pub mod error;
pub mod etale;
pub mod generators;
pub mod matched_pair;
pub mod report;
pub mod restriction;
pub mod search;

pub use actions::{BooleanSemantics, Exponential, LabeledAction, SupportedAction};
pub use document::StructureDocument;
pub use em_sets::{EmSet, FromAction, ToAction};
pub use algebra::{BooleanAlgebra, FiniteMonoid, Partition, RightCongruence, Semilattice};
pub use matched_pair::{BuiltLrm, ExtractedPair, MPHom, MatchedPair, PairBase};
pub use etale::{EtaleTable, PartialUnits};
pub use error::{Error, Result, StructureError, Violation};
pub use report::{AxiomReport, AxiomResult, LawSet, Status};
pub use restriction::{BooleanLrm, LeftRestrictionMonoid, SubLrm};
