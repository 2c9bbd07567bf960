//! The guide in `book/` is written for mdbook, which cannot run listings that
//! depend on workspace crates. Each chapter is pulled in here as the doc
//! comment of an empty module instead, so `cargo test` runs every listing as
//! a doctest against the current library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/membership.md")]
pub mod membership {}

#[doc = include_str!("../../../book/src/ptfn.md")]
pub mod ptfn {}

#[doc = include_str!("../../../book/src/cuts.md")]
pub mod cuts {}

#[doc = include_str!("../../../book/src/arithmetic.md")]
pub mod arithmetic {}

#[doc = include_str!("../../../book/src/cold-fever.md")]
pub mod cold_fever {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
