//! Canonical trees and their frame closures.
//!
//! `T[A]` is the parse tree of `A` read as a Kripke model: conjunction merges
//! roots, a diamond hangs its body below a fresh root. The closures `RJ_S[A]`
//! and `RC_S[A]` extend the tree to the least model satisfying the respective
//! frame conditions over `S`, and `RCw_S[A]` additionally persists the
//! valuation down `w`-edges. These models are canonical: `A |- B` holds
//! exactly when `B` is true at the root of the closure (see [`crate::decide`]).
//!
//! Both closures are built directly rather than by fixpoint iteration. For
//! `RJ` the added edges are read off root-to-node paths; for `RC` they follow
//! a recursion over the ordered form of `A`. The generic
//! [`closure`](crate::kripke::closure) computes the same models and is kept
//! as an independent oracle for tests.

use crate::formula::{order_view, Formula, Ordered, Signature};
use crate::kripke::{persist_valuation, Model, NodeId};
use crate::Modality;

/// The parse tree of `A` as a rooted model. Nodes are numbered in pre-order
/// with the root at 0, so a formula with `d` diamonds yields nodes `0..=d`.
pub fn canonical_tree(a: &Formula) -> Model {
    let mut m = Model::new();
    let root = m.fresh_node();
    m.set_root(Some(root));
    let mut stack = vec![(root, a)];
    while let Some((node, f)) = stack.pop() {
        match f {
            Formula::Var(p) => m.set_true(p.clone(), node),
            Formula::Top => {}
            Formula::And(l, r) => {
                stack.push((node, r));
                stack.push((node, l));
            }
            Formula::Dia(label, body) => {
                let child = m.fresh_node();
                m.add_edge(*label, node, child);
                stack.push((child, body));
            }
        }
    }
    m
}

/// The least extension of `T[A]` that is an RJ frame. Requires
/// `sig` to cover `l(A)`; the result does not otherwise depend on `sig`.
///
/// An edge `x R_n y` of the closure is characterized by the meet `z` of `x`
/// and `y` in the tree: `n` is the minimum label on the path from `z` down to
/// `y`, and either `z = x` or the path minimum from `z` to `x` exceeds `n`.
/// The construction enumerates exactly those pairs, node by node, in time
/// quadratic in the tree size.
pub fn rj_model(a: &Formula, sig: &Signature) -> Model {
    assert!(
        a.signature().is_subset(sig),
        "signature must cover the formula labels"
    );
    let mut m = canonical_tree(a);
    let n = m.node_count();
    let mut kids = vec![Vec::new(); n];
    for (label, x, y) in m.all_edges().collect::<Vec<_>>() {
        kids[x].push((label, y));
    }
    for z in 0..n {
        // Descendants of z per child branch, with the minimum label on the
        // path from z.
        let branches: Vec<Vec<(NodeId, Modality)>> = kids[z]
            .iter()
            .map(|&(c, w)| {
                let mut list = Vec::new();
                let mut stack = vec![(w, c)];
                while let Some((x, mx)) = stack.pop() {
                    list.push((x, mx));
                    for &(d, y) in &kids[x] {
                        stack.push((y, mx.min(d)));
                    }
                }
                list
            })
            .collect();
        for b in &branches {
            for &(x, mx) in b {
                m.add_edge(mx, z, x);
            }
        }
        // Condition J across distinct branches: the steeper path wins an edge
        // onto the shallower one.
        for (i, bi) in branches.iter().enumerate() {
            for (j, bj) in branches.iter().enumerate() {
                if i == j {
                    continue;
                }
                for &(x, mx) in bi {
                    for &(y, my) in bj {
                        if mx > my {
                            m.add_edge(my, x, y);
                        }
                    }
                }
            }
        }
    }
    m
}

/// The least extension of `T[order(A)]` that is an RC frame over `sig`,
/// which must cover `l(A)`.
///
/// Built by recursion on the ordered form. A block for `F & /\ <m_i>A_i`
/// consists of a fresh root satisfying `F` and the recursively built
/// sub-blocks, where the sub-block for `A_i` is closed over `sig` cut to
/// `[m_i, w]`. Three families of edges are added, with `n` ranging over the
/// current cut of `sig` and blocks grouped by equal label:
///
/// 1. root edges `r R_n x` into each block with label `m_i >= n`;
/// 2. all pairs `x R_n y` inside the union of the groups with label `> n`,
///    loops included, for `n` strictly below that union's least group label;
/// 3. `x R_{m} y` from every node of a strictly-larger-label group into each
///    group with label `m`.
///
/// Node numbering coincides with the pre-order numbering of
/// `canonical_tree(order(A))`, and the result equals the generic frame
/// closure of that tree.
pub fn rc_model(a: &Formula, sig: &Signature) -> Model {
    assert!(
        a.signature().is_subset(sig),
        "signature must cover the formula labels"
    );
    let mut m = Model::new();
    let root = build_rc(&mut m, &order_view(a), sig, Modality::Nat(0));
    m.set_root(Some(root));
    m
}

/// As [`rc_model`], with the valuation persisted down `w`-edges. This is the
/// canonical countermodel search space once the persistence axiom is present.
pub fn rcw_model(a: &Formula, sig: &Signature) -> Model {
    persist_valuation(&rc_model(a, sig))
}

/// Recursive block builder for [`rc_model`]. `floor` restricts `sig` to the
/// labels admitted at this depth; nodes are allocated contiguously so each
/// block is an id range.
fn build_rc(m: &mut Model, o: &Ordered, sig: &Signature, floor: Modality) -> NodeId {
    let root = m.fresh_node();
    for p in &o.fact {
        m.set_true(p.clone(), root);
    }
    let mut blocks: Vec<(Modality, NodeId, NodeId)> = Vec::new();
    for (label, body) in &o.diamonds {
        let start = m.node_count();
        build_rc(m, body, sig, *label);
        blocks.push((*label, start, m.node_count()));
    }

    let first = root + 1;
    let mut u = 0;
    while u < blocks.len() {
        let g = blocks[u].0;
        let group_start = blocks[u].1;
        while u < blocks.len() && blocks[u].0 == g {
            u += 1;
        }
        let group_end = blocks[u - 1].2;

        for &n in sig.range(floor..=g) {
            for x in group_start..group_end {
                m.add_edge(n, root, x);
            }
        }
        for x in first..group_start {
            for y in group_start..group_end {
                m.add_edge(g, x, y);
            }
        }
        let lower = if u < blocks.len() { blocks[u].0.max(floor) } else { floor };
        for &n in sig.range(lower..g) {
            for x in first..group_end {
                for y in first..group_end {
                    m.add_edge(n, x, y);
                }
            }
        }
    }
    root
}
