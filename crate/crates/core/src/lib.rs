//! Conjugacy classes of Weyl groups and the unipotent classes they map to.
//!
//! The central objects are the surjection Φ from Weyl group classes to
//! unipotent classes, its fixed-space minimizing section Ψ, and the
//! comparison maps ρ and π between characteristic `p` and characteristic 0.

pub mod atlas;
pub mod classical_maps;
pub mod error;
pub mod exceptional_tables;
pub mod oracle;
pub mod partitions;
pub mod special_classes;
pub mod weyl_classes;

pub use classical_maps::{phi, pi, psi, rho, UnipotentSymbol};
pub use error::{Error, Result};
pub use partitions::{EpsilonMap, MarkedPartition, Partition};
pub use weyl_classes::{CarterLabel, LabelComponent, Series};
pub use weyl_classes::{CharVariant, ClassSymbol, ClassicalPair, Family, GroupContext};
