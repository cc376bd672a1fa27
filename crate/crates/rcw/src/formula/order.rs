//! The ordered normal form.
//!
//! An ordered formula is a fact (`T` or a conjunction of variables) followed
//! by diamond conjuncts `<m_0>A_0 & ... & <m_{k-1}>A_{k-1}` whose labels are
//! weakly decreasing and where each body `A_i` is itself ordered and only
//! uses labels `>= m_i`. Every formula is equivalent to an ordered one over
//! the base calculus, and the rewrite neither invents labels nor changes the
//! node count of the canonical tree.

use super::{Formula, Modality};

/// Flattened view of an ordered formula. `diamonds` is weakly decreasing by
/// label; `fact` keeps variable conjuncts in source order (duplicates and
/// all), so rebuilding is stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Ordered {
    pub fact: Vec<String>,
    pub diamonds: Vec<(Modality, Ordered)>,
}

impl Ordered {
    pub fn to_formula(&self) -> Formula {
        let conjuncts: Vec<Formula> = self
            .fact
            .iter()
            .map(|p| Formula::var(p.clone()))
            .chain(
                self.diamonds
                    .iter()
                    .map(|(m, sub)| Formula::dia(*m, sub.to_formula())),
            )
            .collect();
        // A redundant `T` conjunct is only kept when there is nothing else.
        Formula::conj(conjuncts)
    }
}

/// Stable descending merge: ties prefer the left operand, preserving
/// left-to-right source order.
fn merge(
    lhs: Vec<(Modality, Ordered)>,
    rhs: Vec<(Modality, Ordered)>,
) -> Vec<(Modality, Ordered)> {
    let mut out = Vec::with_capacity(lhs.len() + rhs.len());
    let mut lhs = lhs.into_iter().peekable();
    let mut rhs = rhs.into_iter().peekable();
    loop {
        match (lhs.peek(), rhs.peek()) {
            (Some((a, _)), Some((b, _))) => {
                if a >= b {
                    out.push(lhs.next().unwrap());
                } else {
                    out.push(rhs.next().unwrap());
                }
            }
            (Some(_), None) => out.push(lhs.next().unwrap()),
            (None, Some(_)) => out.push(rhs.next().unwrap()),
            (None, None) => return out,
        }
    }
}

pub(crate) fn order_view(f: &Formula) -> Ordered {
    match f {
        Formula::Top => Ordered {
            fact: Vec::new(),
            diamonds: Vec::new(),
        },
        Formula::Var(p) => Ordered {
            fact: vec![p.clone()],
            diamonds: Vec::new(),
        },
        Formula::And(l, r) => {
            let lv = order_view(l);
            let rv = order_view(r);
            let mut fact = lv.fact;
            fact.extend(rv.fact);
            Ordered {
                fact,
                diamonds: merge(lv.diamonds, rv.diamonds),
            }
        }
        Formula::Dia(m, body) => {
            // <m>(F & <m_0>B_0 & ... ) with a suffix of labels below m pulls
            // that suffix out of the diamond; what stays inside only uses
            // labels >= m, so the result is ordered with strictly larger
            // head label than everything pulled out.
            let bv = order_view(body);
            let split = bv
                .diamonds
                .iter()
                .position(|(l, _)| *l < *m)
                .unwrap_or(bv.diamonds.len());
            let mut inside = bv.diamonds;
            let spill = inside.split_off(split);
            let inner = Ordered {
                fact: bv.fact,
                diamonds: inside,
            };
            let mut diamonds = Vec::with_capacity(1 + spill.len());
            diamonds.push((*m, inner));
            diamonds.extend(spill);
            Ordered {
                fact: Vec::new(),
                diamonds,
            }
        }
    }
}

/// Equivalent ordered form of `f` (over the base calculus, hence over all
/// three). Idempotent; never introduces new labels.
pub fn order(f: &Formula) -> Formula {
    order_view(f).to_formula()
}
