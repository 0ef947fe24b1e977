//! Discrete averaging dynamics on cyclic rhythms.
//!
//! A rhythm with `n` onsets in an `N`-pulse cycle can be smoothed by moving
//! every onset to the discrete midpoint between itself and its successor.
//! Iterating that step always settles into a *maximally even* pattern: the
//! inter-onset intervals end up differing by at most one. This crate models
//! the objects involved (residues, onset sets, ascending cycles, inscribed
//! polygons, interval vectors), the averaging maps that connect them, and the
//! long-run behaviour of the iteration — how far a rhythm is from its final
//! cycle, whether that cycle is a fixed point or a rotation loop, and why the
//! spread of the interval vector collapses step by step.
//!
//! The [`oracle`] module re-derives the key facts by brute force (exhaustive
//! enumeration, naive re-implementations, generic cycle detection) so the
//! fast paths can be cross-checked instead of trusted.

pub mod averages;
pub mod dynamics;
mod error;
pub mod notation;
pub mod oracle;
pub mod residue;
pub mod rhythm;
pub mod transforms;

pub use error::{Error, ParseError};
pub use residue::Residue;
pub use rhythm::{AscendingCycle, OnsetRhythm, PolygonView};
pub use transforms::DifferenceVector;
pub use dynamics::{OrbitReport, TerminalClass};
