//! Decision procedures for the strictly positive provability logics RJ, RC
//! and RCω.
//!
//! The calculi derive sequents `A |- B` between strictly positive formulas:
//! conjunctions of variables, `T` and diamonds labelled by a natural number
//! or `w`. RJ is the base system, RC adds monotonicity of diamonds along the
//! label order, and RCω further identifies `<w>A` with something at least as
//! strong as `A` (persistence).
//!
//! Derivability is decided in polynomial time by building a concrete Kripke
//! model out of the antecedent's parse tree, closing it under the frame
//! conditions of the logic, and model-checking the consequent at the root.
//! When the answer is negative that very model is an explicit countermodel,
//! so every "no" comes with a checkable witness. An independent axiomatic
//! proof search and a bounded semantic model search ([`oracle`]) referee the
//! decision procedure.
//!
//! ```
//! use rcw::{decide, Logic, Sequent, Verdict};
//!
//! let s: Sequent = "<w>(p & q) |- <w>p & <w>q".parse().unwrap();
//! assert_eq!(decide(&s, Logic::Rj), Verdict::Provable);
//!
//! let t: Sequent = "<w>p & <w>q |- <w>(p & q)".parse().unwrap();
//! assert!(matches!(decide(&t, Logic::Rcw), Verdict::NotProvable(_)));
//! ```

pub mod checker;
pub mod decide;
pub mod formula;
pub mod kripke;
pub mod oracle;
pub mod tree;

pub use checker::{check, check_sequent, find_homomorphism};
pub use decide::{countermodel, decide, relabel_check, Logic, Verdict};
pub use formula::{adequate_closure, order, AdequateSet, Formula, Modality, Sequent, Signature};
pub use kripke::{closure, expand, generated_submodel, is_frame, is_persistent, persist_valuation,
    FrameKind, Model, NodeId};
pub use tree::{canonical_tree, rc_model, rcw_model, rj_model};
