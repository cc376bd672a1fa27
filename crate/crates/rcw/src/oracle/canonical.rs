//! Filtrated canonical models over adequate sets.

use std::collections::BTreeSet;

use crate::checker::check;
use crate::decide::Logic;
use crate::formula::{AdequateSet, Formula, Modality, Sequent};
use crate::kripke::{Model, NodeId};

use super::OracleError;

/// A deductively closed subset of the adequate set. Closure is judged by
/// the decision procedure handed to the constructors, with the empty
/// conjunction read as `T`, so the empty set is never closed.
pub type Theory = BTreeSet<Formula>;

/// Which canonical construction [`truth_lemma_check`] should exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Plain,
    Irreflexive,
}

/// A canonical model; node `i` is the theory `theories[i]`. There is no
/// distinguished root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalModel {
    pub model: Model,
    pub theories: Vec<Theory>,
}

/// A place where forcing and membership disagree; a correct decision
/// procedure never produces one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthViolation {
    pub node: NodeId,
    pub formula: Formula,
    pub forced: bool,
    pub member: bool,
}

/// The canonical model of `logic` over `phi`, using `decider` to settle
/// which subsets are theories. Nodes are theories; `x R_a y` holds when
/// conditions R1 to R3 below do; `p` is true exactly at the theories
/// containing it.
pub fn canonical_model<F>(
    phi: &AdequateSet,
    logic: Logic,
    decider: F,
) -> Result<CanonicalModel, OracleError>
where
    F: Fn(&Sequent, Logic) -> bool,
{
    build(phi, logic, &decider, Variant::Plain)
}

/// The irreflexive refinement: keep an `a`-edge only when some `<a>A` of
/// the source is missing from the target. The construction is tied to RCω;
/// it yields an irreflexive RJ-model that is persistent and realizes every
/// RCω-theory.
pub fn irreflexive_canonical_model<F>(
    phi: &AdequateSet,
    decider: F,
) -> Result<CanonicalModel, OracleError>
where
    F: Fn(&Sequent, Logic) -> bool,
{
    build(phi, Logic::Rcw, &decider, Variant::Irreflexive)
}

/// Compare forcing against membership for every member formula at every
/// theory of the chosen construction. A sound and complete `decider`
/// leaves the report empty; anything else points at a concrete defect.
pub fn truth_lemma_check<F>(
    phi: &AdequateSet,
    logic: Logic,
    decider: F,
    variant: Variant,
) -> Result<Vec<TruthViolation>, OracleError>
where
    F: Fn(&Sequent, Logic) -> bool,
{
    if variant == Variant::Irreflexive {
        assert_eq!(logic, Logic::Rcw, "the irreflexive construction is tied to RCω");
    }
    let cm = build(phi, logic, &decider, variant)?;
    let mut violations = Vec::new();
    for (node, theory) in cm.theories.iter().enumerate() {
        for f in phi {
            let forced = check(&cm.model, node, f);
            let member = theory.contains(f);
            if forced != member {
                violations.push(TruthViolation {
                    node,
                    formula: f.clone(),
                    forced,
                    member,
                });
            }
        }
    }
    Ok(violations)
}

fn build<F>(
    phi: &AdequateSet,
    logic: Logic,
    decider: &F,
    variant: Variant,
) -> Result<CanonicalModel, OracleError>
where
    F: Fn(&Sequent, Logic) -> bool,
{
    if phi.len() > 14 {
        return Err(OracleError::PhiTooLarge(phi.len()));
    }
    let theories = enumerate_theories(phi, logic, decider);
    let mut model = Model::with_nodes(theories.len());
    for (node, x) in theories.iter().enumerate() {
        for f in x {
            if let Formula::Var(p) = f {
                model.set_true(p.clone(), node);
            }
        }
    }
    let labels = phi.signature();
    for &alpha in &labels {
        for (xi, x) in theories.iter().enumerate() {
            for (yi, y) in theories.iter().enumerate() {
                if related(phi, x, y, alpha)
                    && (variant == Variant::Plain || proper(x, y, alpha))
                {
                    model.add_edge(alpha, xi, yi);
                }
            }
        }
    }
    Ok(CanonicalModel { model, theories })
}

fn enumerate_theories<F>(phi: &AdequateSet, logic: Logic, decider: &F) -> Vec<Theory>
where
    F: Fn(&Sequent, Logic) -> bool,
{
    let formulas: Vec<&Formula> = phi.iter().collect();
    let mut theories = Vec::new();
    'subsets: for mask in 0u32..(1u32 << formulas.len()) {
        let members: Vec<Formula> = formulas
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, f)| (*f).clone())
            .collect();
        let antecedent = Formula::conj(members.iter().cloned());
        for (i, f) in formulas.iter().enumerate() {
            if mask >> i & 1 == 0 && decider(&Sequent::new(antecedent.clone(), (*f).clone()), logic)
            {
                continue 'subsets;
            }
        }
        theories.push(members.into_iter().collect());
    }
    theories
}

// x R_a y asks, for every formula A:
//   R1. A ∈ y and aA ∈ Φ imply aA ∈ x;
//   R2. bA ∈ y and aA ∈ Φ imply min(a,b)A ∈ x;
//   R3. bA ∈ x and b < a imply bA ∈ y.
fn related(phi: &AdequateSet, x: &Theory, y: &Theory, alpha: Modality) -> bool {
    for a in y {
        let lifted = Formula::dia(alpha, a.clone());
        if phi.contains(&lifted) && !x.contains(&lifted) {
            return false;
        }
        if let Formula::Dia(beta, body) = a {
            if phi.contains(&Formula::dia(alpha, body.as_ref().clone()))
                && !x.contains(&Formula::dia(alpha.min(*beta), body.as_ref().clone()))
            {
                return false;
            }
        }
    }
    x.iter().all(|a| match a {
        Formula::Dia(beta, _) if *beta < alpha => y.contains(a),
        _ => true,
    })
}

// R4. Some aA lies in x but not in y.
fn proper(x: &Theory, y: &Theory, alpha: Modality) -> bool {
    x.iter()
        .any(|a| matches!(a, Formula::Dia(b, _) if *b == alpha) && !y.contains(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::decide;
    use crate::formula::adequate_closure;
    use crate::kripke::{is_frame, is_persistent, FrameKind};

    fn via_decide(s: &Sequent, logic: Logic) -> bool {
        decide(s, logic).is_provable()
    }

    fn phi_for(seeds: &[&str]) -> AdequateSet {
        adequate_closure(seeds.iter().map(|f| f.parse::<Formula>().unwrap()))
    }

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    fn assert_phi_monotone(cm: &CanonicalModel, phi: &AdequateSet) {
        let labels = phi.signature();
        for member in phi {
            if let Formula::Dia(a, body) = member {
                for &b in labels.iter().filter(|&&b| *a < b) {
                    let stronger = Formula::dia(b, body.as_ref().clone());
                    for node in 0..cm.theories.len() {
                        if check(&cm.model, node, &stronger) {
                            assert!(
                                check(&cm.model, node, member),
                                "monotonicity fails at {node} for {member}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rcw_theories_over_one_variable() {
        let phi = phi_for(&["p"]);
        assert_eq!(phi.len(), 3);
        let cm = canonical_model(&phi, Logic::Rcw, via_decide).unwrap();
        let expect: Vec<Theory> = vec![
            [f("T")].into_iter().collect(),
            [f("T"), f("p")].into_iter().collect(),
            [f("T"), f("p"), f("<w>p")].into_iter().collect(),
        ];
        assert_eq!(cm.theories, expect, "persistence closes <w>p under p");
    }

    #[test]
    fn rc_keeps_the_theory_rcw_rules_out() {
        let phi = phi_for(&["p"]);
        let cm = canonical_model(&phi, Logic::Rc, via_decide).unwrap();
        assert_eq!(cm.theories.len(), 4);
        assert!(cm
            .theories
            .contains(&[f("T"), f("<w>p")].into_iter().collect()));
        assert!(is_frame(&cm.model, &phi.signature(), FrameKind::Rc));
        let report = truth_lemma_check(&phi, Logic::Rc, via_decide, Variant::Plain).unwrap();
        assert_eq!(report, Vec::new());
    }

    #[test]
    fn the_rcw_canonical_model_is_a_persistent_rc_model() {
        let phi = phi_for(&["<0>p"]);
        assert_eq!(phi.len(), 4);
        let cm = canonical_model(&phi, Logic::Rcw, via_decide).unwrap();
        assert_eq!(cm.theories.len(), 5);
        assert!(is_frame(&cm.model, &phi.signature(), FrameKind::Rc));
        assert!(is_persistent(&cm.model));
        let report = truth_lemma_check(&phi, Logic::Rcw, via_decide, Variant::Plain).unwrap();
        assert_eq!(report, Vec::new());
    }

    #[test]
    fn the_truth_lemma_holds_across_logics_and_seeds() {
        for seeds in [&["<1>p & q"][..], &["<w>p", "<0>q"][..], &["<2><1>p"][..]] {
            let phi = phi_for(seeds);
            for logic in [Logic::Rj, Logic::Rc, Logic::Rcw] {
                let report =
                    truth_lemma_check(&phi, logic, via_decide, Variant::Plain).unwrap();
                assert_eq!(report, Vec::new(), "{seeds:?} under {logic}");
            }
        }
    }

    #[test]
    fn the_irreflexive_refinement_is_an_exact_rj_model() {
        let phi = phi_for(&["<0>p"]);
        let cm = irreflexive_canonical_model(&phi, via_decide).unwrap();
        for (_, x, y) in cm.model.all_edges() {
            assert_ne!(x, y, "R4 bans loops");
        }
        assert!(is_frame(&cm.model, &phi.signature(), FrameKind::Rj));
        assert!(is_persistent(&cm.model));
        assert_phi_monotone(&cm, &phi);
        let report =
            truth_lemma_check(&phi, Logic::Rcw, via_decide, Variant::Irreflexive).unwrap();
        assert_eq!(report, Vec::new());
    }

    #[test]
    fn oversized_adequate_sets_are_rejected() {
        let seeds: Vec<Formula> = (0..8).map(|i| Formula::var(format!("p{i}"))).collect();
        let phi = adequate_closure(seeds);
        assert_eq!(phi.len(), 17);
        assert_eq!(
            canonical_model(&phi, Logic::Rj, via_decide),
            Err(OracleError::PhiTooLarge(17))
        );
    }

    #[test]
    fn a_broken_decider_is_caught_by_the_truth_lemma() {
        let phi = phi_for(&["p"]);
        let report =
            truth_lemma_check(&phi, Logic::Rcw, |_: &Sequent, _| false, Variant::Plain).unwrap();
        assert!(!report.is_empty());
        assert!(report.iter().all(|v| v.forced != v.member));
    }
}
