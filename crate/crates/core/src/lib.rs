//! Exact character theory of the symmetric and alternating groups, with an
//! application to the singularity of normal Cayley graphs.

pub mod algebraic;
pub mod blocks;
pub mod cayley;
pub mod characters;
pub mod config;
pub mod error;
pub mod groups;
pub mod labels;
pub mod partition;
pub mod vanishing;

pub use algebraic::AlgebraicValue;
pub use config::Config;
pub use error::{Error, Result};
pub use labels::{CharacterLabel, ClassLabel, GroupKind, Half};
pub use partition::Partition;
