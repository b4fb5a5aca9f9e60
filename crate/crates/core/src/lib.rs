//! Exact enumeration and bijection checks for pattern avoidance in
//! alternating permutations, transversals of AD-Young diagrams and
//! permutations of fixed descent type.
//!
//! Module map:
//! - [`perm`], [`class`], [`doubling`]: permutations, containment, classes,
//!   shortest alternating containers.
//! - [`enumerate`]: pruned counting and generation, optionally parallel.
//! - [`young`]: AD-Young diagrams and their transversals.
//! - [`extension`]: dominant regions, successor diagrams and the
//!   reinsertion map behind the extension theorem.
//! - [`jf`]: cyclic shifts and the bijection between `F_3`- and
//!   `J_3`-avoiding transversals.
//! - [`descent`]: injections between descent-type classes.
//! - [`equivalence`]: count-sequence classification of patterns.
//! - [`tables`]: published count tables used as reference data.
//! - [`verify`]: exhaustive sweeps shared by the CLI and the acceptance suite.

pub mod class;
pub mod descent;
pub mod doubling;
pub mod enumerate;
pub mod equivalence;
pub mod extension;
pub mod jf;
pub mod par;
pub mod perm;
pub mod tables;
pub mod verify;
pub mod young;

pub use class::{PermClass, Step};
pub use enumerate::{count_avoiders, count_avoiders_with, generate, sequence, EnumError};
pub use par::Parallelism;
pub use perm::{Matcher, PermError, Permutation};
