//! The guide from `book/` re-exposed as rustdoc so its code blocks run as
//! doctests; `cargo test` therefore keeps prose and library in sync. Each
//! module below is one chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/formulas.md")]
pub mod formulas {}

#[doc = include_str!("../../../book/src/kripke-models.md")]
pub mod kripke_models {}

#[doc = include_str!("../../../book/src/canonical-trees.md")]
pub mod canonical_trees {}

#[doc = include_str!("../../../book/src/deciding.md")]
pub mod deciding {}

#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
