//! Polyhedral maps as flag systems, their monodromy groups, and the minimal
//! regular covers those groups define.
//!
//! The crate builds prisms, antiprisms, Platonic solids, and arbitrary face
//! lists as flag systems with three fixed-point-free involutions, computes
//! their monodromy groups as permutation groups with deterministic stabilizer
//! chains, and checks the structural facts about their minimal regular
//! covers: presentations (via Todd–Coxeter coset enumeration), flag-stabilizer
//! generating sets (spanning-tree and lollipop words), normal-subgroup
//! structure, and cover topology (Euler characteristic, orientability,
//! genus).
//!
//! Everything is exact integer computation and every construction is
//! deterministic: repeated runs produce identical chains, tables, and
//! reports.

pub mod cosets;
pub mod covers;
pub mod flags;
pub mod monodromy;
pub mod perm;
pub mod report;
pub mod stabilizer;
pub mod words;

pub use flags::{FVector, FaceListMap, Family, FlagSystem, PlatonicSolid};
pub use monodromy::MonodromyGroup;
pub use perm::{Perm, PermGroup};
pub use words::{Letter, Word};

/// Default cap on full subgroup enumerations.
pub const DEFAULT_ENUM_CAP: usize = 100_000;
/// Default cap on live cosets during coset enumeration.
pub const DEFAULT_COSET_CAP: usize = 1_000_000;
