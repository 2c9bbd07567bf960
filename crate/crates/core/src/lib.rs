//! Pseudo fuzzy sets.
//!
//! Every element of a pseudo fuzzy set carries two grades: a positive
//! membership `mu` in `[0, 1]` and a negative membership `lambda` in
//! `[-1, 0]`. This crate provides
//!
//! * validated [`MembershipPair`]s, their magnitude sum `|mu| + |lambda|` and
//!   the three-way [`CaseLabel`] classification ([`membership`]);
//! * pseudo triangular fuzzy numbers of [`Kind::Dependent`]
//!   (`lambda = mu - 1`) and [`Kind::Independent`] (`lambda = -mu`) kinds,
//!   with alpha- and beta-cuts and sampling ([`ptfn`]);
//! * level-cut arithmetic and a brute-force extension-principle reference
//!   ([`arith`]).
//!
//! ```
//! use pseudo_fuzzy::{CaseLabel, PseudoTfn, Tolerance};
//!
//! let fever = PseudoTfn::dependent(37.0, 39.5, 42.0)?;
//! let pair = fever.pair_at(38.0)?;
//! assert!((pair.mu() - 0.4).abs() < 1e-12);
//! assert!((pair.lambda() + 0.6).abs() < 1e-12);
//! assert_eq!(pair.classify(Tolerance::default()), CaseLabel::CaseB);
//! # Ok::<(), pseudo_fuzzy::Error>(())
//! ```
//!
//! The guide in `book/` walks through the concepts with runnable listings.

pub mod arith;
mod error;
pub mod interval;
pub mod membership;
pub mod ptfn;

pub use arith::{BinaryOpCode, CutTable};
pub use error::{Error, Result};
pub use interval::Interval;
pub use membership::{
    CaseLabel, DiscretePseudoFuzzySet, MembershipPair, PseudoFuzzyElement, Tolerance,
};
pub use ptfn::{Kind, PseudoTfn, TriangleShape};
