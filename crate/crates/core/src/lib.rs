//! Dimensions of simple modules for higher Jones algebras: the semisimple
//! quotients of symmetric group, Hecke, Brauer and BMW algebras cut out by
//! fusion tensor powers of the natural module.
//!
//! The crate is organised bottom-up:
//!
//! * [`root_data`]: weights, dominance, bottom alcoves, dot-action reduction;
//! * [`branching`]: multiplicity engines for V^⊗r;
//! * [`jones_algebras`]: named algebras, weight sets and dimension rows;
//! * [`oracle`]: brute-force verifiers kept independent of the engines.

pub mod branching;
pub mod error;
pub mod jones_algebras;
pub mod oracle;
pub mod root_data;

pub use branching::{
    delta_mults, fusion_mults, fusion_mults_altsum, fusion_step, minuscule_walk_mults, FusionTower,
    MultiplicityTable, SignedWeightMultiset,
};
pub use error::{Error, Result};
pub use jones_algebras::{AlgebraConfig, DimensionRow, HigherJones};
pub use root_data::{AlcoveParams, Family, RootSystem, SignedAlcovePoint, Weight};
