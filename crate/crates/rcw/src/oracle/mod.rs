//! Independent referees for [`decide`](crate::decide::decide).
//!
//! The decision procedure rests on one theorem; this module cross-examines it
//! with machinery that shares none of its code paths: bounded backward proof
//! search over the axiomatization, exhaustive small-model refutation, and the
//! canonical-model constructions with their truth-lemma checks. Both referee
//! halves are sound, so a [`CrossCheck::Provable`] and a
//! [`CrossCheck::NotProvable`] can never both be reachable for one sequent;
//! what the budgets leave undecided comes back as
//! [`CrossCheck::Inconclusive`].

use crate::decide::Logic;
use crate::formula::Sequent;
use crate::kripke::Model;

mod canonical;
mod proof;
mod refute;

pub use canonical::{
    canonical_model, irreflexive_canonical_model, truth_lemma_check, CanonicalModel, Theory,
    TruthViolation, Variant,
};
pub use proof::{prove_bounded, Axiom, Derivation, Step};
pub use refute::refute_by_models;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("adequate set has {0} formulas, the canonical construction is capped at 14")]
    PhiTooLarge(usize),
    #[error("model search is capped at 5 nodes, got {0}")]
    TooManyNodes(usize),
}

/// Budgets for [`cross_check`]. `size_cap` bounds cut formulas in proof
/// search and defaults to twice the larger side of the sequent; `max_nodes`
/// bounds countermodel search and must stay within the refutation guard.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budgets {
    pub depth: usize,
    pub size_cap: Option<usize>,
    pub max_nodes: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            depth: 8,
            size_cap: None,
            max_nodes: 4,
        }
    }
}

/// A referee verdict: a checkable derivation, a falsifying model, or an
/// admission that the budgets were too small to tell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossCheck {
    Provable(Derivation),
    NotProvable(Model),
    Inconclusive,
}

/// Try to settle the sequent independently of the decision procedure.
///
/// Small models refute most underivable sequents quickly, so a two-node
/// refutation pass runs before proof search; the full model budget is spent
/// only if the proof search also comes up empty.
pub fn cross_check(s: &Sequent, logic: Logic, budgets: &Budgets) -> Result<CrossCheck, OracleError> {
    let cap = budgets
        .size_cap
        .unwrap_or_else(|| 2 * s.antecedent.size().max(s.consequent.size()));
    let quick = budgets.max_nodes.min(2);
    if let Some(m) = refute_by_models(s, logic, quick)? {
        return Ok(CrossCheck::NotProvable(m));
    }
    if let Some(d) = prove_bounded(s, logic, budgets.depth, cap) {
        return Ok(CrossCheck::Provable(d));
    }
    if budgets.max_nodes > quick {
        if let Some(m) = refute_by_models(s, logic, budgets.max_nodes)? {
            return Ok(CrossCheck::NotProvable(m));
        }
    }
    Ok(CrossCheck::Inconclusive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::check;
    use crate::decide::{decide, Verdict};

    fn seq(s: &str) -> Sequent {
        s.parse().unwrap()
    }

    #[test]
    fn referee_proves_the_distribution_sequent() {
        let s = seq("<w>(p & q) |- <w>p & <w>q");
        match cross_check(&s, Logic::Rj, &Budgets::default()).unwrap() {
            CrossCheck::Provable(d) => {
                assert!(d.validate(Logic::Rj));
                assert_eq!(d.sequent, s);
            }
            other => panic!("expected a derivation, got {other:?}"),
        }
    }

    #[test]
    fn referee_refutes_the_converse() {
        let s = seq("<w>p & <w>q |- <w>(p & q)");
        match cross_check(&s, Logic::Rcw, &Budgets::default()).unwrap() {
            CrossCheck::NotProvable(m) => {
                let root = m.root().unwrap();
                assert!(check(&m, root, &s.antecedent));
                assert!(!check(&m, root, &s.consequent));
            }
            other => panic!("expected a countermodel, got {other:?}"),
        }
    }

    #[test]
    fn starved_budgets_admit_defeat() {
        let s = seq("<w>p & <w>q |- <w>(p & q)");
        let tiny = Budgets {
            depth: 1,
            size_cap: Some(1),
            max_nodes: 1,
        };
        assert_eq!(cross_check(&s, Logic::Rcw, &tiny).unwrap(), CrossCheck::Inconclusive);
    }

    #[test]
    fn conclusive_referee_answers_match_decide() {
        let samples = [
            "p |- p",
            "p |- q",
            "<w>p |- p",
            "<1>p |- <0>p",
            "<0>p |- <1>p",
            "<1>p & <0>q |- <1>(p & <0>q)",
            "<w>(p & q) |- <w>q",
            "T |- <0>T",
        ];
        for logic in [Logic::Rj, Logic::Rc, Logic::Rcw] {
            for s in samples {
                let s = seq(s);
                let verdict = decide(&s, logic);
                match cross_check(&s, logic, &Budgets::default()).unwrap() {
                    CrossCheck::Provable(_) => {
                        assert_eq!(verdict, Verdict::Provable, "{s} in {logic}")
                    }
                    CrossCheck::NotProvable(_) => {
                        assert!(!verdict.is_provable(), "{s} in {logic}")
                    }
                    CrossCheck::Inconclusive => panic!("budget too small for {s}"),
                }
            }
        }
    }
}
