//! Strictly positive formulas over graded diamonds.
//!
//! The language is `p | T | A & B | <a>A` where the label `a` is a natural
//! number or `w`, with `0 < 1 < 2 < ... < w`. There is no negation, no
//! disjunction and no nesting of sequents: everything downstream works with
//! single formulas and with sequents `A |- B` between them.
//!
//! Besides the AST this module holds the textual syntax ([`parse`]), the
//! label signature, substitution, subformula sets, adequate closures and the
//! ordered normal form used by the model builders.

use std::borrow::Borrow;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

mod order;
mod parse;

pub use order::order;
pub(crate) use order::{order_view, Ordered};
pub use parse::ParseError;

/// A diamond label: either a finite stage or the limit label `w`.
///
/// The derived order puts every `Nat` below `Omega` and compares naturals
/// numerically, which is precisely the order the frame conditions and the
/// axioms refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Modality {
    Nat(u64),
    Omega,
}

impl fmt::Display for Modality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modality::Nat(n) => write!(f, "{n}"),
            Modality::Omega => f.write_str("w"),
        }
    }
}

impl Serialize for Modality {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Modality::Nat(n) => s.serialize_u64(*n),
            Modality::Omega => s.serialize_str("w"),
        }
    }
}

impl<'de> Deserialize<'de> for Modality {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Modality;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a natural number or the string \"w\"")
            }
            fn visit_u64<E: de::Error>(self, n: u64) -> Result<Modality, E> {
                Ok(Modality::Nat(n))
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Modality, E> {
                match s {
                    "w" => Ok(Modality::Omega),
                    other => Err(E::custom(format!("unknown modality {other:?}"))),
                }
            }
        }
        d.deserialize_any(V)
    }
}

/// A strictly positive formula.
///
/// Conjunction is binary; n-ary input like `p & q & r` parses left-nested.
/// The structural derive of `Ord` gives an arbitrary but fixed total order
/// that keeps set-valued operations deterministic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Var(String),
    Top,
    And(Box<Formula>, Box<Formula>),
    Dia(Modality, Box<Formula>),
}

/// The set of labels occurring in a formula or sequent.
pub type Signature = BTreeSet<Modality>;

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Self {
        Formula::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn dia(label: Modality, body: Formula) -> Self {
        Formula::Dia(label, Box::new(body))
    }

    /// Right-nested conjunction of `items`; `Top` when empty.
    pub fn conj<I: IntoIterator<Item = Formula>>(items: I) -> Self
    where
        I::IntoIter: DoubleEndedIterator,
    {
        let mut iter = items.into_iter().rev();
        let last = match iter.next() {
            Some(f) => f,
            None => return Formula::Top,
        };
        iter.fold(last, |acc, f| Formula::and(f, acc))
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        let mut n = 0;
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            n += 1;
            match f {
                Formula::Var(_) | Formula::Top => {}
                Formula::And(l, r) => {
                    stack.push(l);
                    stack.push(r);
                }
                Formula::Dia(_, b) => stack.push(b),
            }
        }
        n
    }

    /// Labels occurring in the formula.
    pub fn signature(&self) -> Signature {
        let mut sig = Signature::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            match f {
                Formula::Var(_) | Formula::Top => {}
                Formula::And(l, r) => {
                    stack.push(l);
                    stack.push(r);
                }
                Formula::Dia(m, b) => {
                    sig.insert(*m);
                    stack.push(b);
                }
            }
        }
        sig
    }

    /// Variables occurring in the formula.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut vars = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            match f {
                Formula::Var(p) => {
                    vars.insert(p.clone());
                }
                Formula::Top => {}
                Formula::And(l, r) => {
                    stack.push(l);
                    stack.push(r);
                }
                Formula::Dia(_, b) => stack.push(b),
            }
        }
        vars
    }

    /// Capture-free replacement of every occurrence of the variable `var`.
    pub fn substitute(&self, var: &str, replacement: &Formula) -> Formula {
        match self {
            Formula::Var(p) if p == var => replacement.clone(),
            Formula::Var(_) | Formula::Top => self.clone(),
            Formula::And(l, r) => Formula::and(
                l.substitute(var, replacement),
                r.substitute(var, replacement),
            ),
            Formula::Dia(m, b) => Formula::dia(*m, b.substitute(var, replacement)),
        }
    }

    /// All subformulas, including the formula itself (set semantics).
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            if !out.insert(f.clone()) {
                continue;
            }
            match f {
                Formula::Var(_) | Formula::Top => {}
                Formula::And(l, r) => {
                    stack.push(l);
                    stack.push(r);
                }
                Formula::Dia(_, b) => stack.push(b),
            }
        }
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Conjunction associates to the left in the grammar, so only right
        // conjuncts and diamond bodies that are themselves conjunctions need
        // parentheses.
        fn atom(fm: &Formula, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if matches!(fm, Formula::And(..)) {
                write!(f, "({fm})")
            } else {
                write!(f, "{fm}")
            }
        }
        match self {
            Formula::Var(p) => f.write_str(p),
            Formula::Top => f.write_str("T"),
            Formula::And(l, r) => {
                write!(f, "{l} & ")?;
                atom(r, f)
            }
            Formula::Dia(m, b) => {
                write!(f, "<{m}>")?;
                atom(b, f)
            }
        }
    }
}

impl FromStr for Formula {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse::formula(s)
    }
}

/// A sequent `A |- B` between strictly positive formulas.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequent {
    pub antecedent: Formula,
    pub consequent: Formula,
}

impl Sequent {
    pub fn new(antecedent: Formula, consequent: Formula) -> Self {
        Sequent {
            antecedent,
            consequent,
        }
    }

    /// Labels occurring on either side.
    pub fn signature(&self) -> Signature {
        let mut sig = self.antecedent.signature();
        sig.extend(self.consequent.signature());
        sig
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut vars = self.antecedent.variables();
        vars.extend(self.consequent.variables());
        vars
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.antecedent, self.consequent)
    }
}

impl FromStr for Sequent {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse::sequent(s)
    }
}

/// A finite set of formulas closed under the four adequacy rules: it
/// contains `T`, is closed under subformulas, promotes `<b>A` to `<a>A`
/// whenever `b < a` and `a` already occurs in the set, and contains `<w>p`
/// for every variable `p` it mentions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdequateSet(BTreeSet<Formula>);

impl AdequateSet {
    pub fn formulas(&self) -> &BTreeSet<Formula> {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Formula> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.0.contains(f)
    }

    /// Labels occurring in the member formulas.
    pub fn signature(&self) -> Signature {
        let mut sig = Signature::new();
        for f in &self.0 {
            sig.extend(f.signature());
        }
        sig
    }
}

impl<'a> IntoIterator for &'a AdequateSet {
    type Item = &'a Formula;
    type IntoIter = std::collections::btree_set::Iter<'a, Formula>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Least adequate set containing `seed`.
///
/// Saturation terminates: subformulas and `T` stay within a fixed universe,
/// and promotions only ever use labels already present or `w`.
pub fn adequate_closure<I>(seed: I) -> AdequateSet
where
    I: IntoIterator,
    I::Item: Borrow<Formula>,
{
    let mut set: BTreeSet<Formula> = BTreeSet::new();
    for f in seed {
        set.extend(f.borrow().subformulas());
    }
    set.insert(Formula::Top);

    loop {
        let mut added: Vec<Formula> = Vec::new();
        let labels: Signature = {
            let mut sig = Signature::new();
            for f in &set {
                sig.extend(f.signature());
            }
            sig
        };
        for f in &set {
            match f {
                Formula::Var(p) => {
                    let up = Formula::dia(Modality::Omega, Formula::var(p.clone()));
                    if !set.contains(&up) {
                        added.push(up);
                    }
                }
                Formula::Dia(b, body) => {
                    for a in labels.iter().filter(|a| **a > *b) {
                        let up = Formula::Dia(*a, body.clone());
                        if !set.contains(&up) {
                            added.push(up);
                        }
                    }
                }
                _ => {}
            }
        }
        if added.is_empty() {
            break;
        }
        for f in added {
            set.extend(f.subformulas());
            set.insert(f);
        }
    }
    AdequateSet(set)
}
