//! Exact symmetric-group characters and an adaptive identification scheme.
//!
//! An oracle answers `χ_λ(α)` for compositions `α` of `n` while hiding the
//! partition `λ`. [`identify::identify`] recovers `λ` with polynomially many
//! queries, and [`distinguish::distinguish`] turns that into a certificate
//! that two given characters differ.

pub mod cli;
pub mod distinguish;
pub mod error;
pub mod identify;
pub mod mn_eval;
pub mod oracle;
pub mod partitions;

pub use distinguish::{distinguish, Separator};
pub use error::{Error, Result};
pub use identify::{identify, IdentifyResult};
pub use mn_eval::{chi, CharValue, Sign};
pub use oracle::{counting_oracle, exact_oracle, CharacterOracle};
pub use partitions::{Composition, Partition};
