//! Exact graded Frobenius characteristics for the Orlik–Terao algebra of the
//! braid arrangement, the configuration-space cohomology rings it is compared
//! against, and the graph-level Poincaré polynomial identities.

pub mod character;
pub mod error;
pub mod graph;
mod memo;
pub mod partition;
pub mod recursion;
pub mod rep;
pub mod series;
pub mod store;
pub mod symfunc;
pub mod verifier;

pub use character::{character_table, CharacterTable};
pub use error::{Error, Result};
pub use partition::{enumerate_partitions, Partition};
pub use series::QSeries;
pub use symfunc::{Basis, SymFunc, SymFuncDoc, TermDoc};
