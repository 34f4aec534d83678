//! Exact-arithmetic computational Lie theory.
//!
//! Constructs finite root systems from Cartan matrices, enumerates Weyl
//! groups with inversion sets and tau-invariants, builds integer Chevalley
//! structure constants with adjoint and classical defining representations,
//! classifies nilpotent orbits by constrained partitions under the dominance
//! closure order, and realizes Steinberg's map from Weyl elements to
//! orbital-variety labels.  On top of these primitives the [`analysis`]
//! module runs tau-obstruction scans over orbit covering pairs and the
//! concrete B2/G2/D4 degeneration scenarios, together with the type-A
//! sweeps (Robinson-Schensted fibers, Richardson dimension identities)
//! that support the union-of-orbital-varieties conjecture for sl_n.
//!
//! Everything is computed over exact integers and rationals; random
//! sampling is used only to pick Zariski-generic elements, with seeds
//! recorded so every result is reproducible bit for bit.
//!
//! The crate is `no_std` (with `alloc`); IO, caching, and the CLI live in
//! the companion `orbilab` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod chevalley;
pub mod linalg;
pub mod nilorbits;
pub mod rootsys;
pub mod rsk;
pub mod steinberg;
pub mod weyl;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Library version stamped into caches and reports.
pub const LIB_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Convention stamp: canonical root order, structure-constant signs, the
/// D4 node numbering, and the Robinson-Schensted fiber convention are all
/// fixed by this tag.  Caches written under a different stamp are rejected.
pub const CONVENTION_STAMP: &str = "order=height-lex;signs=extraspecial;d4=center3;rs=calibrated";
