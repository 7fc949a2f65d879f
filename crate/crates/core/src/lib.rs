//! Lexicographic bitableaux and the crystal structures that live on them.
//!
//! A bitableau of shape `lam` with entries in `[n] x [m]` is a filling by
//! pairs `(top, bottom)` that is semistandard in the lexicographic order.
//! The crate provides:
//!
//! * the `gl_m` crystal on bottom entries ([`glm_crystal`]), whose highest
//!   weights count the monomial coefficients of `s_lam * s_nu`;
//! * insertion algorithms, including the Burge variant on columns
//!   ([`insertion`]);
//! * an independent symmetric-function oracle for Kronecker coefficients
//!   ([`symfunc`]);
//! * Kronecker tableaux and the map `phi` ([`kronecker`]);
//! * search tools for candidate top crystals ([`completion`]).
//!
//! ```
//! use bitableau::bitableau::Bitableau;
//! use bitableau::glm_crystal::{crystal_op_bitableau, Convention};
//! use bitableau::word::Direction;
//!
//! let t = Bitableau::with_bounds(&[vec![(1, 1), (2, 1)]], 2, 2).unwrap();
//! let lowered = crystal_op_bitableau(&t, 1, Direction::Lower, Convention::W).unwrap();
//! assert_eq!(lowered.tuples(), vec![vec![(1, 1), (2, 2)]]);
//! assert_eq!(lowered.a_weight(), t.a_weight());
//! ```

pub mod bitableau;
pub mod completion;
pub mod crystal;
pub mod error;
pub mod glm_crystal;
pub mod insertion;
pub mod kronecker;
pub mod partition;
pub mod symfunc;
pub mod tableau;
pub mod word;

pub use crate::bitableau::{Bitableau, Pair};
pub use crate::error::{Error, Result};
pub use crate::partition::{Partition, WeightVector};
pub use crate::tableau::{SkewSsyt, Ssyt};

/// Runs the code blocks of the guide as doc-tests so the two cannot drift.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/bitableaux.md")]
    struct Bitableaux;
    #[doc = include_str!("../../../book/src/crystals.md")]
    struct Crystals;
    #[doc = include_str!("../../../book/src/insertion.md")]
    struct Insertion;
    #[doc = include_str!("../../../book/src/kronecker.md")]
    struct Kronecker;
    #[doc = include_str!("../../../book/src/completion.md")]
    struct Completion;
}
