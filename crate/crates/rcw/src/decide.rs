//! Decision procedures for RJ, RC and RCω.
//!
//! Provability reduces to one model check: `A |- B` holds exactly when `B` is
//! true at the root of the canonical closure of `A`'s parse tree, taken over
//! `l(A)` for RJ and over `l({A,B})` for RC and RCω (with the persisted
//! valuation for the latter). A failed check hands back the canonical model
//! itself as the countermodel, so every negative verdict is independently
//! re-checkable.

use std::collections::BTreeMap;

use crate::checker::check;
use crate::formula::{Formula, Modality, Sequent};
use crate::kripke::{generated_submodel, Model};
use crate::tree::{rc_model, rcw_model, rj_model};

/// The three logics, in increasing deductive strength. RC adds label
/// monotonicity to RJ; RCω further adds the persistence axiom `<w>A |- A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Logic {
    Rj,
    Rc,
    Rcw,
}

impl std::fmt::Display for Logic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Logic::Rj => "RJ",
            Logic::Rc => "RC",
            Logic::Rcw => "RCω",
        })
    }
}

/// Outcome of [`decide`]. A negative verdict carries a rooted model of the
/// chosen logic's frame class satisfying the antecedent but not the
/// consequent at its root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Provable,
    NotProvable(Model),
}

impl Verdict {
    pub fn is_provable(&self) -> bool {
        matches!(self, Verdict::Provable)
    }

    /// The countermodel, if the verdict is negative.
    pub fn witness(&self) -> Option<&Model> {
        match self {
            Verdict::Provable => None,
            Verdict::NotProvable(m) => Some(m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecideError {
    #[error("the sequent is provable in {0}, no countermodel exists")]
    SequentProvable(Logic),
    #[error("bad label map: {0}")]
    BadLabelMap(String),
}

/// Decide `A |- B` in the given logic.
///
/// The canonical model of the antecedent is built first; it doubles as the
/// witness on the negative side. When the consequent uses a label absent
/// from the antecedent (RJ) or exceeding its largest label (RC, RCω) the
/// model check is skipped: no strictly positive formula can force a label
/// its model's edges lack, so such sequents are never provable.
pub fn decide(s: &Sequent, logic: Logic) -> Verdict {
    let model = match logic {
        Logic::Rj => rj_model(&s.antecedent, &s.antecedent.signature()),
        Logic::Rc => rc_model(&s.antecedent, &s.signature()),
        Logic::Rcw => rcw_model(&s.antecedent, &s.signature()),
    };
    let left = s.antecedent.signature();
    let right = s.consequent.signature();
    let underivable = match logic {
        Logic::Rj => !right.is_subset(&left),
        Logic::Rc | Logic::Rcw => match (left.last(), right.last()) {
            (_, None) => false,
            (None, Some(_)) => true,
            (Some(a), Some(b)) => b > a,
        },
    };
    let root = model.root().expect("canonical models are rooted");
    if underivable || !check(&model, root, &s.consequent) {
        Verdict::NotProvable(model)
    } else {
        Verdict::Provable
    }
}

/// The countermodel for an unprovable sequent: the negative witness of
/// [`decide`], restricted to the part reachable from its root.
pub fn countermodel(s: &Sequent, logic: Logic) -> Result<Model, DecideError> {
    match decide(s, logic) {
        Verdict::Provable => Err(DecideError::SequentProvable(logic)),
        Verdict::NotProvable(m) => {
            let root = m.root().expect("canonical models are rooted");
            Ok(generated_submodel(&m, root).expect("root lies in the model"))
        }
    }
}

/// Check that a strictly increasing relabelling leaves the verdict alone.
/// Derivability only depends on the relative order of the labels in the
/// sequent, so this is a metamorphic test hook. The map must cover `l(s)`,
/// be strictly increasing on it, and fix `w` if it occurs.
pub fn relabel_check(
    s: &Sequent,
    logic: Logic,
    map: &BTreeMap<Modality, Modality>,
) -> Result<bool, DecideError> {
    let labels = s.signature();
    let mut previous: Option<(Modality, Modality)> = None;
    for &l in &labels {
        let Some(&image) = map.get(&l) else {
            return Err(DecideError::BadLabelMap(format!(
                "label {l} is missing from the map"
            )));
        };
        if l == Modality::Omega && image != Modality::Omega {
            return Err(DecideError::BadLabelMap("w must stay fixed".into()));
        }
        if let Some((pl, pi)) = previous {
            if image <= pi {
                return Err(DecideError::BadLabelMap(format!(
                    "not strictly increasing: {pl} -> {pi} but {l} -> {image}"
                )));
            }
        }
        previous = Some((l, image));
    }
    let mapped = Sequent::new(
        relabel(&s.antecedent, map),
        relabel(&s.consequent, map),
    );
    Ok(decide(s, logic).is_provable() == decide(&mapped, logic).is_provable())
}

fn relabel(f: &Formula, map: &BTreeMap<Modality, Modality>) -> Formula {
    match f {
        Formula::Var(_) | Formula::Top => f.clone(),
        Formula::And(l, r) => Formula::and(relabel(l, map), relabel(r, map)),
        Formula::Dia(a, b) => Formula::dia(map[a], relabel(b, map)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::check_sequent;
    use crate::kripke::{is_frame, is_persistent, FrameKind};

    fn seq(s: &str) -> Sequent {
        s.parse().unwrap()
    }

    fn assert_witness(s: &str, logic: Logic) -> Model {
        let s = seq(s);
        let Verdict::NotProvable(m) = decide(&s, logic) else {
            panic!("expected a countermodel for {s} in {logic}");
        };
        let root = m.root().unwrap();
        assert!(check(&m, root, &s.antecedent), "antecedent at root");
        assert!(!check(&m, root, &s.consequent), "consequent at root");
        let kind = if logic == Logic::Rj { FrameKind::Rj } else { FrameKind::Rc };
        assert!(is_frame(&m, &s.signature(), kind));
        if logic == Logic::Rcw {
            assert!(is_persistent(&m));
        }
        m
    }

    #[test]
    fn conjunction_distributes_over_one_diamond() {
        assert!(decide(&seq("<w>(p & q) |- <w>p & <w>q"), Logic::Rj).is_provable());
        let m = assert_witness("<w>p & <w>q |- <w>(p & q)", Logic::Rcw);
        assert_eq!(m.node_count(), 3);
    }

    #[test]
    fn larger_diamonds_absorb_smaller_conjuncts() {
        assert!(decide(&seq("<1>p & <0>q |- <1>(p & <0>q)"), Logic::Rj).is_provable());
        assert_witness("<1>(p & <0>q) |- <0>(q & <1>p)", Logic::Rcw);
    }

    #[test]
    fn persistence_separates_rcw_from_rc() {
        let s = seq("<w>p |- p");
        assert!(decide(&s, Logic::Rcw).is_provable());
        assert_witness("<w>p |- p", Logic::Rc);
        assert_witness("<w>p |- p", Logic::Rj);
    }

    #[test]
    fn monotonicity_separates_rc_from_rj() {
        assert!(decide(&seq("<1>p |- <0>p"), Logic::Rc).is_provable());
        assert_witness("<0>p |- <1>p", Logic::Rc);
        assert_witness("<1>p |- <0>p", Logic::Rj);
    }

    #[test]
    fn fresh_consequent_labels_are_never_derivable() {
        let m = assert_witness("<1>p |- <2>p", Logic::Rj);
        assert_eq!(m.node_count(), 2);
        assert_witness("p |- <0>p", Logic::Rc);
        assert_witness("p & q |- <w>T", Logic::Rcw);
    }

    #[test]
    fn facts_decide_by_inclusion() {
        for logic in [Logic::Rj, Logic::Rc, Logic::Rcw] {
            assert!(decide(&seq("p & q |- q"), logic).is_provable());
            assert!(decide(&seq("p |- T"), logic).is_provable());
            assert_witness("p |- q", logic);
        }
    }

    #[test]
    fn verdicts_respect_the_logic_chain() {
        for s in ["<w>p |- p", "<1>p |- <0>p", "<w>p & <w>q |- <w>(p & q)", "p |- p"] {
            let s = seq(s);
            let rj = decide(&s, Logic::Rj).is_provable();
            let rc = decide(&s, Logic::Rc).is_provable();
            let rcw = decide(&s, Logic::Rcw).is_provable();
            assert!(!rj || rc, "{s}");
            assert!(!rc || rcw, "{s}");
        }
    }

    #[test]
    fn countermodels_falsify_over_the_reachable_part() {
        let m = countermodel(&seq("p |- q"), Logic::Rc).unwrap();
        assert_eq!(m.node_count(), 1);
        assert!(m.is_true("p", m.root().unwrap()));
        assert!(!m.is_true("q", m.root().unwrap()));
        assert!(!check_sequent(&m, &seq("p |- q")));

        let m = countermodel(&seq("<w>p |- p"), Logic::Rc).unwrap();
        assert_eq!(m.node_count(), 2);

        assert_eq!(
            countermodel(&seq("p |- p"), Logic::Rcw),
            Err(DecideError::SequentProvable(Logic::Rcw))
        );
    }

    #[test]
    fn relabelling_preserves_verdicts() {
        let w = Modality::Omega;
        let n = Modality::Nat;
        let s = seq("<5>p & <0>q |- <w>T & <0>(q & q)");
        let map = BTreeMap::from([(n(0), n(1)), (n(5), n(7)), (w, w)]);
        assert_eq!(relabel_check(&s, Logic::Rc, &map), Ok(true));
        let identity = BTreeMap::from([(n(0), n(0)), (n(5), n(5)), (w, w)]);
        assert_eq!(relabel_check(&s, Logic::Rcw, &identity), Ok(true));

        let doubled = BTreeMap::from([(n(1), n(2)), (n(2), n(4))]);
        let axiom = seq("<2>p & <1>q |- <2>(p & <1>q)");
        assert_eq!(relabel_check(&axiom, Logic::Rj, &doubled), Ok(true));
        assert!(decide(&axiom, Logic::Rj).is_provable());
    }

    #[test]
    fn bad_label_maps_are_rejected() {
        let w = Modality::Omega;
        let n = Modality::Nat;
        let s = seq("<0>p |- <5>p & <w>T");
        let missing = BTreeMap::from([(n(0), n(1)), (w, w)]);
        let crossing = BTreeMap::from([(n(0), n(3)), (n(5), n(2)), (w, w)]);
        let moved = BTreeMap::from([(n(0), n(0)), (n(5), n(6)), (w, n(9))]);
        for map in [missing, crossing, moved] {
            assert!(matches!(
                relabel_check(&s, Logic::Rc, &map),
                Err(DecideError::BadLabelMap(_))
            ));
        }
    }
}
