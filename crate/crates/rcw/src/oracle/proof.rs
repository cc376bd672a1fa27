//! Bounded backward proof search over the axiomatization.

use std::collections::HashMap;
use std::fmt;

use crate::decide::Logic;
use crate::formula::{Formula, Modality, Sequent};

/// The axiom schemata. `Monotone` is admissible from RC up and
/// `Persistence` only in RCω; everything else belongs to RJ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// A ⊢ A
    Identity,
    /// A ⊢ ⊤
    Truth,
    /// A ∧ B ⊢ A
    AndLeft,
    /// A ∧ B ⊢ B
    AndRight,
    /// αα A ⊢ α A
    Transitivity,
    /// αβ A ⊢ β A for α ≥ β
    NestLeft,
    /// βα A ⊢ β A for α ≥ β
    NestRight,
    /// α A ∧ β B ⊢ α (A ∧ β B) for α > β
    Join,
    /// α A ⊢ β A for α > β
    Monotone,
    /// ω A ⊢ A
    Persistence,
}

impl Axiom {
    pub const ALL: [Axiom; 10] = [
        Axiom::Identity,
        Axiom::Truth,
        Axiom::AndLeft,
        Axiom::AndRight,
        Axiom::Transitivity,
        Axiom::NestLeft,
        Axiom::NestRight,
        Axiom::Join,
        Axiom::Monotone,
        Axiom::Persistence,
    ];

    pub fn admissible(self, logic: Logic) -> bool {
        match self {
            Axiom::Monotone => logic >= Logic::Rc,
            Axiom::Persistence => logic == Logic::Rcw,
            _ => true,
        }
    }

    /// Does the sequent instantiate this schema?
    pub fn matches(self, s: &Sequent) -> bool {
        let (a, b) = (&s.antecedent, &s.consequent);
        match self {
            Axiom::Identity => a == b,
            Axiom::Truth => *b == Formula::Top,
            Axiom::AndLeft => matches!(a, Formula::And(l, _) if l.as_ref() == b),
            Axiom::AndRight => matches!(a, Formula::And(_, r) if r.as_ref() == b),
            Axiom::Transitivity => match (a, b) {
                (Formula::Dia(x, inner), Formula::Dia(y, _)) => x == y && inner.as_ref() == b,
                _ => false,
            },
            Axiom::NestLeft => match (a, b) {
                (Formula::Dia(x, inner), Formula::Dia(y, _)) => x >= y && inner.as_ref() == b,
                _ => false,
            },
            Axiom::NestRight => match (a, b) {
                (Formula::Dia(x, inner), Formula::Dia(y, body)) => match inner.as_ref() {
                    Formula::Dia(z, c) => x == y && z >= x && c == body,
                    _ => false,
                },
                _ => false,
            },
            Axiom::Join => match (a, b) {
                (Formula::And(l, r), Formula::Dia(y, body)) => match (l.as_ref(), body.as_ref()) {
                    (Formula::Dia(x, la), Formula::And(ba, bb)) => {
                        let beta = match r.as_ref() {
                            Formula::Dia(v, _) => v,
                            _ => return false,
                        };
                        x == y && x > beta && ba == la && bb == r
                    }
                    _ => false,
                },
                _ => false,
            },
            Axiom::Monotone => match (a, b) {
                (Formula::Dia(x, la), Formula::Dia(y, lb)) => x > y && la == lb,
                _ => false,
            },
            Axiom::Persistence => {
                matches!(a, Formula::Dia(Modality::Omega, inner) if inner.as_ref() == b)
            }
        }
    }

    fn name(self) -> &'static str {
        match self {
            Axiom::Identity => "identity",
            Axiom::Truth => "truth",
            Axiom::AndLeft => "and-left",
            Axiom::AndRight => "and-right",
            Axiom::Transitivity => "transitivity",
            Axiom::NestLeft => "nest-left",
            Axiom::NestRight => "nest-right",
            Axiom::Join => "join",
            Axiom::Monotone => "monotone",
            Axiom::Persistence => "persistence",
        }
    }
}

/// The inference drawn at a derivation node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Axiom(Axiom),
    /// From A ⊢ B and B ⊢ C conclude A ⊢ C.
    Syllogism(Box<Derivation>, Box<Derivation>),
    /// From A ⊢ B and A ⊢ C conclude A ⊢ B ∧ C.
    ConjIntro(Box<Derivation>, Box<Derivation>),
    /// From A ⊢ B conclude α A ⊢ α B.
    DiaMono(Box<Derivation>),
}

/// A derivation tree with its conclusion at every node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub sequent: Sequent,
    pub step: Step,
}

impl Derivation {
    /// Height of the tree; an axiom leaf has depth 1.
    pub fn depth(&self) -> usize {
        1 + match &self.step {
            Step::Axiom(_) => 0,
            Step::Syllogism(l, r) | Step::ConjIntro(l, r) => l.depth().max(r.depth()),
            Step::DiaMono(d) => d.depth(),
        }
    }

    /// Re-check the whole tree: leaves must instantiate schemata admissible
    /// in `logic` and every inner conclusion must follow from its children.
    pub fn validate(&self, logic: Logic) -> bool {
        let s = &self.sequent;
        match &self.step {
            Step::Axiom(ax) => ax.admissible(logic) && ax.matches(s),
            Step::Syllogism(l, r) => {
                l.sequent.antecedent == s.antecedent
                    && l.sequent.consequent == r.sequent.antecedent
                    && r.sequent.consequent == s.consequent
                    && l.validate(logic)
                    && r.validate(logic)
            }
            Step::ConjIntro(l, r) => match &s.consequent {
                Formula::And(x, y) => {
                    l.sequent.antecedent == s.antecedent
                        && r.sequent.antecedent == s.antecedent
                        && l.sequent.consequent == **x
                        && r.sequent.consequent == **y
                        && l.validate(logic)
                        && r.validate(logic)
                }
                _ => false,
            },
            Step::DiaMono(d) => match (&s.antecedent, &s.consequent) {
                (Formula::Dia(x, a), Formula::Dia(y, b)) => {
                    x == y
                        && d.sequent.antecedent == **a
                        && d.sequent.consequent == **b
                        && d.validate(logic)
                }
                _ => false,
            },
        }
    }

    fn rule_name(&self) -> &'static str {
        match &self.step {
            Step::Axiom(ax) => ax.name(),
            Step::Syllogism(..) => "syllogism",
            Step::ConjIntro(..) => "conjunction",
            Step::DiaMono(_) => "diamond-mono",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let children: Vec<serde_json::Value> = match &self.step {
            Step::Axiom(_) => Vec::new(),
            Step::Syllogism(l, r) | Step::ConjIntro(l, r) => vec![l.to_json(), r.to_json()],
            Step::DiaMono(d) => vec![d.to_json()],
        };
        serde_json::json!({
            "rule": self.rule_name(),
            "sequent": self.sequent.to_string(),
            "children": children,
        })
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, indent: usize) -> fmt::Result {
        writeln!(f, "{:indent$}{}: {}", "", self.rule_name(), self.sequent)?;
        match &self.step {
            Step::Axiom(_) => Ok(()),
            Step::Syllogism(l, r) | Step::ConjIntro(l, r) => {
                l.fmt_at(f, indent + 2)?;
                r.fmt_at(f, indent + 2)
            }
            Step::DiaMono(d) => d.fmt_at(f, indent + 2),
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

/// Search for a derivation of `s` of depth at most `depth`, cutting only
/// through formulas of size at most `size_cap`.
///
/// The search is complete relative to its budgets over the cut universe
/// (subformulas of the goal, their single-diamond wraps with labels of the
/// goal, and conjunctions of pairs of those), so `None` means only that no
/// derivation fits the budgets.
pub fn prove_bounded(s: &Sequent, logic: Logic, depth: usize, size_cap: usize) -> Option<Derivation> {
    let universe = cut_universe(s, size_cap);
    let mut searcher = Searcher::new(s, logic, &universe);
    let (a0, b0) = (searcher.a0, searcher.b0);
    // Deepen iteratively: shallow proofs are the common case and the deep
    // search spaces dwarf the repeated shallow ones.
    (1..=depth).find_map(|d| searcher.prove(a0, b0, d))
}

/// Vocabulary of a pooled formula as bitmasks over the goal sequent's
/// labels and variables (bit order follows the label order), plus the
/// indices of its largest label anywhere and at the top level. `-1` stands
/// for "none".
#[derive(Clone, Copy)]
struct Vocab {
    labels: u64,
    vars: u64,
    max_label: i32,
    top_max: i32,
}

/// The search runs on interned formulas: the cut universe is closed under
/// the subformulas every rule can descend into, so each reachable sequent
/// is a pair of pool indices and the memo tables never hash a tree.
struct Searcher {
    logic: Logic,
    pool: Vec<Formula>,
    /// Conjuncts of pool entry `i`, if it is a conjunction.
    conj: Vec<Option<(u32, u32)>>,
    /// Label and body of pool entry `i`, if it is a diamond.
    dia: Vec<Option<(Modality, u32)>>,
    vocab: Vec<Vocab>,
    /// When the goal has more labels or variables than the masks can hold,
    /// vocabulary pruning is disabled rather than made unsound.
    masks_ok: bool,
    cuts: Vec<u32>,
    a0: u32,
    b0: u32,
    won: HashMap<(u32, u32), (Derivation, usize)>,
    // Remaining depth at which the sequent already failed; a retry is only
    // worthwhile with more room than that.
    lost: HashMap<(u32, u32), usize>,
}

impl Searcher {
    fn new(s: &Sequent, logic: Logic, universe: &[Formula]) -> Searcher {
        let mut pool = Vec::new();
        let mut index: HashMap<Formula, u32> = HashMap::new();
        let mut conj = Vec::new();
        let mut dia = Vec::new();
        let a0 = intern(&s.antecedent, &mut pool, &mut index, &mut conj, &mut dia);
        let b0 = intern(&s.consequent, &mut pool, &mut index, &mut conj, &mut dia);
        let cuts: Vec<u32> = universe
            .iter()
            .map(|f| intern(f, &mut pool, &mut index, &mut conj, &mut dia))
            .collect();

        let labels: Vec<Modality> = s.signature().into_iter().collect();
        let vars: Vec<String> = s.antecedent.variables().into_iter().collect();
        let masks_ok = labels.len() <= 64 && vars.len() <= 64;
        // The `min` keeps the shifts in range when the masks are disabled.
        let label_bit = |l: Modality| labels.iter().position(|&x| x == l).unwrap_or(0).min(63) as i32;
        let var_bit = |v: &str| vars.iter().position(|x| x == v).unwrap_or(0).min(63);
        let mut vocab: Vec<Vocab> = Vec::with_capacity(pool.len());
        for i in 0..pool.len() {
            let v = if let Some((l, r)) = conj[i] {
                let (vl, vr) = (vocab[l as usize], vocab[r as usize]);
                Vocab {
                    labels: vl.labels | vr.labels,
                    vars: vl.vars | vr.vars,
                    max_label: vl.max_label.max(vr.max_label),
                    top_max: vl.top_max.max(vr.top_max),
                }
            } else if let Some((x, b)) = dia[i] {
                let vb = vocab[b as usize];
                let bit = label_bit(x);
                Vocab {
                    labels: vb.labels | (1 << bit),
                    vars: vb.vars,
                    max_label: vb.max_label.max(bit),
                    top_max: bit,
                }
            } else {
                match &pool[i] {
                    Formula::Var(name) => Vocab {
                        labels: 0,
                        // Consequent-only variables can miss from the goal's
                        // antecedent list; lumping them onto bit 0 is fine
                        // once pruning is conservative about it.
                        vars: if vars.iter().any(|x| x == name) {
                            1 << var_bit(name)
                        } else {
                            u64::MAX
                        },
                        max_label: -1,
                        top_max: -1,
                    },
                    _ => Vocab { labels: 0, vars: 0, max_label: -1, top_max: -1 },
                }
            };
            vocab.push(v);
        }

        Searcher {
            logic,
            pool,
            conj,
            dia,
            vocab,
            masks_ok,
            cuts,
            a0,
            b0,
            won: HashMap::new(),
            lost: HashMap::new(),
        }
    }

    // Every axiom keeps the consequent's variables and labels inside the
    // antecedent's (for RC and RCω only the maximum label is preserved,
    // since monotonicity moves labels downward), and every axiom deriving a
    // diamond exposes a top-level diamond at least as large on its left;
    // all three containments survive the rules, so a goal that steps
    // outside the envelope has no derivation and the search drops it
    // without expanding anything.
    fn admits(&self, upper: u32, lower: u32) -> bool {
        if !self.masks_ok {
            return true;
        }
        let (u, l) = (&self.vocab[upper as usize], &self.vocab[lower as usize]);
        if l.vars & !u.vars != 0 || l.top_max > u.top_max {
            return false;
        }
        match self.logic {
            Logic::Rj => l.labels & !u.labels == 0,
            Logic::Rc | Logic::Rcw => l.max_label <= u.max_label,
        }
    }

    /// First axiom whose schema the sequent `pool[a] |- pool[b]`
    /// instantiates, in the order of [`Axiom::ALL`].
    fn axiom_at(&self, a: u32, b: u32) -> Option<Axiom> {
        if a == b {
            return Some(Axiom::Identity);
        }
        if matches!(self.pool[b as usize], Formula::Top) {
            return Some(Axiom::Truth);
        }
        if let Some((l, r)) = self.conj[a as usize] {
            if l == b {
                return Some(Axiom::AndLeft);
            }
            if r == b {
                return Some(Axiom::AndRight);
            }
            if let Some((y, body)) = self.dia[b as usize] {
                if let (Some((x, la)), Some((ba, bb))) =
                    (self.dia[l as usize], self.conj[body as usize])
                {
                    if let Some((beta, _)) = self.dia[r as usize] {
                        if x == y && x > beta && ba == la && bb == r {
                            return Some(Axiom::Join);
                        }
                    }
                }
            }
        }
        if let Some((x, inner)) = self.dia[a as usize] {
            if let Some((y, body)) = self.dia[b as usize] {
                if x == y && inner == b {
                    return Some(Axiom::Transitivity);
                }
                if x >= y && inner == b {
                    return Some(Axiom::NestLeft);
                }
                if let Some((z, c)) = self.dia[inner as usize] {
                    if x == y && z >= x && c == body {
                        return Some(Axiom::NestRight);
                    }
                }
                if self.logic >= Logic::Rc && x > y && inner == body {
                    return Some(Axiom::Monotone);
                }
            }
            if self.logic == Logic::Rcw && x == Modality::Omega && inner == b {
                return Some(Axiom::Persistence);
            }
        }
        None
    }

    fn sequent(&self, a: u32, b: u32) -> Sequent {
        Sequent::new(self.pool[a as usize].clone(), self.pool[b as usize].clone())
    }

    fn prove(&mut self, a: u32, b: u32, depth: usize) -> Option<Derivation> {
        if depth == 0 {
            return None;
        }
        if let Some((d, dd)) = self.won.get(&(a, b)) {
            if *dd <= depth {
                return Some(d.clone());
            }
        }
        if let Some(&tried) = self.lost.get(&(a, b)) {
            if tried >= depth {
                return None;
            }
        }
        if let Some(d) = self.attempt(a, b, depth) {
            let dd = d.depth();
            self.won.insert((a, b), (d.clone(), dd));
            return Some(d);
        }
        self.lost.insert((a, b), depth);
        None
    }

    fn attempt(&mut self, a: u32, b: u32, depth: usize) -> Option<Derivation> {
        if let Some(ax) = self.axiom_at(a, b) {
            return Some(Derivation {
                sequent: self.sequent(a, b),
                step: Step::Axiom(ax),
            });
        }
        if depth < 2 || !self.admits(a, b) {
            return None;
        }
        if let Some((l, r)) = self.conj[b as usize] {
            if let Some(dl) = self.prove(a, l, depth - 1) {
                if let Some(dr) = self.prove(a, r, depth - 1) {
                    return Some(Derivation {
                        sequent: self.sequent(a, b),
                        step: Step::ConjIntro(Box::new(dl), Box::new(dr)),
                    });
                }
            }
        }
        if let (Some((x, ia)), Some((y, ib))) = (self.dia[a as usize], self.dia[b as usize]) {
            if x == y {
                if let Some(d) = self.prove(ia, ib, depth - 1) {
                    return Some(Derivation {
                        sequent: self.sequent(a, b),
                        step: Step::DiaMono(Box::new(d)),
                    });
                }
            }
        }
        for i in 0..self.cuts.len() {
            let c = self.cuts[i];
            if c == a || c == b || !self.admits(a, c) || !self.admits(c, b) {
                continue;
            }
            if let Some(dl) = self.prove(a, c, depth - 1) {
                if let Some(dr) = self.prove(c, b, depth - 1) {
                    return Some(Derivation {
                        sequent: self.sequent(a, b),
                        step: Step::Syllogism(Box::new(dl), Box::new(dr)),
                    });
                }
            }
        }
        None
    }
}

/// Index of `f` in the pool, interning it and its subformulas on first
/// sight. Children precede parents, so the component tables can be read
/// off in one forward pass.
fn intern(
    f: &Formula,
    pool: &mut Vec<Formula>,
    index: &mut HashMap<Formula, u32>,
    conj: &mut Vec<Option<(u32, u32)>>,
    dia: &mut Vec<Option<(Modality, u32)>>,
) -> u32 {
    if let Some(&i) = index.get(f) {
        return i;
    }
    let (c, d) = match f {
        Formula::And(l, r) => {
            let li = intern(l, pool, index, conj, dia);
            let ri = intern(r, pool, index, conj, dia);
            (Some((li, ri)), None)
        }
        Formula::Dia(x, body) => {
            let bi = intern(body, pool, index, conj, dia);
            (None, Some((*x, bi)))
        }
        _ => (None, None),
    };
    let id = pool.len() as u32;
    pool.push(f.clone());
    index.insert(f.clone(), id);
    conj.push(c);
    dia.push(d);
    id
}

fn cut_universe(s: &Sequent, size_cap: usize) -> Vec<Formula> {
    let mut base = s.antecedent.subformulas();
    base.extend(s.consequent.subformulas());
    let labels = s.signature();
    let wraps: std::collections::BTreeSet<Formula> = base
        .iter()
        .flat_map(|f| labels.iter().map(|&l| Formula::dia(l, f.clone())))
        .filter(|f| f.size() <= size_cap)
        .collect();
    let mut pool: Vec<&Formula> = base.iter().chain(&wraps).collect();
    pool.sort();
    pool.dedup();
    let pairs: std::collections::BTreeSet<Formula> = pool
        .iter()
        .flat_map(|l| {
            pool.iter()
                .map(|r| Formula::and((*l).clone(), (*r).clone()))
        })
        .filter(|f| f.size() <= size_cap)
        .collect();
    let mut cuts: Vec<Formula> = Vec::new();
    for tier in [base, wraps, pairs] {
        for f in tier {
            if f.size() <= size_cap && !cuts.contains(&f) {
                cuts.push(f);
            }
        }
    }
    cuts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Sequent {
        s.parse().unwrap()
    }

    fn prove(s: &str, logic: Logic) -> Option<Derivation> {
        let s = seq(s);
        let cap = 2 * s.antecedent.size().max(s.consequent.size());
        let d = prove_bounded(&s, logic, 8, cap)?;
        assert!(d.validate(logic), "search returned an invalid tree for {s}");
        assert_eq!(d.sequent, s);
        Some(d)
    }

    #[test]
    fn identity_needs_one_level() {
        let s = seq("p & <1>q |- p & <1>q");
        let d = prove_bounded(&s, Logic::Rj, 1, 10).unwrap();
        assert_eq!(d.step, Step::Axiom(Axiom::Identity));
        assert_eq!(d.depth(), 1);
    }

    #[test]
    fn distribution_splits_into_two_monotone_branches() {
        let d = prove("<w>(p & q) |- <w>p & <w>q", Logic::Rj).unwrap();
        assert_eq!(d.depth(), 3);
        match &d.step {
            Step::ConjIntro(l, r) => {
                assert!(matches!(l.step, Step::DiaMono(_)));
                assert!(matches!(r.step, Step::DiaMono(_)));
            }
            other => panic!("expected a conjunction introduction, got {other:?}"),
        }
    }

    #[test]
    fn join_is_a_leaf() {
        let d = prove("<1>p & <0>q |- <1>(p & <0>q)", Logic::Rj).unwrap();
        assert_eq!(d.step, Step::Axiom(Axiom::Join));
    }

    #[test]
    fn nested_diamonds_collapse_onto_the_smaller_label() {
        let left = prove("<1><0>p |- <0>p", Logic::Rj).unwrap();
        assert_eq!(left.step, Step::Axiom(Axiom::NestLeft));
        let right = prove("<0><1>p |- <0>p", Logic::Rj).unwrap();
        assert_eq!(right.step, Step::Axiom(Axiom::NestRight));
        let twice = prove("<w><w>p |- <w>p", Logic::Rj).unwrap();
        assert_eq!(twice.step, Step::Axiom(Axiom::Transitivity));
    }

    #[test]
    fn syllogism_threads_a_cut_through_a_conjunct() {
        let d = prove("<1>(p & q) & <0>r |- <1>p", Logic::Rj).unwrap();
        match &d.step {
            Step::Syllogism(l, r) => {
                assert_eq!(l.sequent, seq("<1>(p & q) & <0>r |- <1>(p & q)"));
                assert_eq!(r.sequent, seq("<1>(p & q) |- <1>p"));
            }
            other => panic!("expected a cut, got {other:?}"),
        }
    }

    #[test]
    fn stronger_logics_unlock_their_axioms() {
        assert!(prove("<1>p |- <0>p", Logic::Rj).is_none());
        let mono = prove("<1>p |- <0>p", Logic::Rc).unwrap();
        assert_eq!(mono.step, Step::Axiom(Axiom::Monotone));

        assert!(prove("<w>p |- p", Logic::Rc).is_none());
        let persist = prove("<w>p |- p", Logic::Rcw).unwrap();
        assert_eq!(persist.step, Step::Axiom(Axiom::Persistence));
    }

    #[test]
    fn depth_budget_is_a_hard_ceiling() {
        let s = seq("<w>(p & q) |- <w>p & <w>q");
        assert!(prove_bounded(&s, Logic::Rj, 2, 20).is_none());
        let d = prove_bounded(&s, Logic::Rj, 3, 20).unwrap();
        assert!(d.depth() <= 3);
    }

    #[test]
    fn size_cap_limits_the_cuts() {
        let s = seq("<1>(p & q) & <0>r |- <1>p");
        assert!(prove_bounded(&s, Logic::Rj, 8, 3).is_none());
        assert!(prove_bounded(&s, Logic::Rj, 8, 4).is_some());
    }

    #[test]
    fn validate_polices_leaves_and_inner_nodes() {
        let bogus = Derivation {
            sequent: seq("p |- q"),
            step: Step::Axiom(Axiom::Identity),
        };
        assert!(!bogus.validate(Logic::Rj));

        let mono = Derivation {
            sequent: seq("<1>p |- <0>p"),
            step: Step::Axiom(Axiom::Monotone),
        };
        assert!(mono.validate(Logic::Rc));
        assert!(!mono.validate(Logic::Rj));

        let mismatched = Derivation {
            sequent: seq("p |- q & r"),
            step: Step::ConjIntro(
                Box::new(Derivation {
                    sequent: seq("p |- q"),
                    step: Step::Axiom(Axiom::Identity),
                }),
                Box::new(Derivation {
                    sequent: seq("p |- r"),
                    step: Step::Axiom(Axiom::Identity),
                }),
            ),
        };
        assert!(!mismatched.validate(Logic::Rj));
    }

    #[test]
    fn renderings_show_the_tree() {
        let d = prove("<w>(p & q) |- <w>p & <w>q", Logic::Rj).unwrap();
        let text = d.to_string();
        assert!(text.starts_with("conjunction: <w>(p & q) |- <w>p & <w>q\n"));
        assert!(text.contains("\n  diamond-mono: <w>(p & q) |- <w>p\n"));
        assert!(text.contains("\n    and-left: p & q |- p\n"));

        let json = d.to_json();
        assert_eq!(json["rule"], "conjunction");
        assert_eq!(json["sequent"], "<w>(p & q) |- <w>p & <w>q");
        assert_eq!(json["children"].as_array().unwrap().len(), 2);
        assert_eq!(json["children"][0]["children"][0]["rule"], "and-left");
    }

    #[test]
    fn axiom_schemata_respect_their_side_conditions() {
        assert!(Axiom::NestLeft.matches(&seq("<1><1>p |- <1>p")));
        assert!(!Axiom::NestLeft.matches(&seq("<0><1>p |- <1>p")));
        assert!(Axiom::NestRight.matches(&seq("<0><1>p |- <0>p")));
        assert!(!Axiom::NestRight.matches(&seq("<1><0>p |- <1>p")));
        assert!(Axiom::Join.matches(&seq("<w>p & <2>q |- <w>(p & <2>q)")));
        assert!(!Axiom::Join.matches(&seq("<2>p & <2>q |- <2>(p & <2>q)")));
        assert!(!Axiom::Monotone.matches(&seq("<1>p |- <1>p")));
        assert!(Axiom::Persistence.matches(&seq("<w>(p & q) |- p & q")));
        assert!(!Axiom::Persistence.matches(&seq("<2>p |- p")));
    }
}
