//! Truth in finite Kripke models.
//!
//! Forcing is the usual one for strictly positive formulas: variables read
//! the valuation, conjunction is pointwise, and `<a>A` holds at `x` when some
//! `a`-successor satisfies `A`. A sequent is true in a model when the
//! consequent holds wherever the antecedent does.
//!
//! [`find_homomorphism`] gives a second, independent route to the same truth
//! relation: `A` is true at `x` exactly when the canonical tree of `A` maps
//! homomorphically into the model with its root landing on `x`.

use std::collections::{BTreeMap, BTreeSet};

use crate::formula::{Formula, Sequent};
use crate::kripke::{Model, ModelError, NodeId};
use crate::Modality;

/// Nodes of `m` satisfying `f`, computed bottom-up over the distinct
/// subformulas with one pass over the relevant edge set per diamond.
pub(crate) fn satisfying_nodes(m: &Model, f: &Formula) -> BTreeSet<NodeId> {
    let nodes: Vec<NodeId> = m.nodes().collect();
    let index: BTreeMap<NodeId, usize> =
        nodes.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    // Proper subformulas are strictly smaller, so size order is bottom-up.
    let mut subs: Vec<Formula> = f.subformulas().into_iter().collect();
    subs.sort_by_key(Formula::size);
    let mut rows: BTreeMap<&Formula, Vec<bool>> = BTreeMap::new();
    for g in &subs {
        let row = match g {
            Formula::Top => vec![true; nodes.len()],
            Formula::Var(p) => nodes.iter().map(|&x| m.is_true(p, x)).collect(),
            Formula::And(l, r) => {
                let (rl, rr) = (&rows[l.as_ref()], &rows[r.as_ref()]);
                rl.iter().zip(rr).map(|(a, b)| *a && *b).collect()
            }
            Formula::Dia(label, body) => {
                let body_row = &rows[body.as_ref()];
                let mut row = vec![false; nodes.len()];
                for (x, y) in m.edges_with(*label) {
                    if body_row[index[&y]] {
                        row[index[&x]] = true;
                    }
                }
                row
            }
        };
        rows.insert(g, row);
    }
    let top = &rows[f];
    nodes
        .iter()
        .enumerate()
        .filter_map(|(i, &x)| top[i].then_some(x))
        .collect()
}

/// Is `f` true at `node`? Panics if the node is not in the model.
pub fn check(m: &Model, node: NodeId, f: &Formula) -> bool {
    assert!(m.contains_node(node), "node {node} is not in the model");
    satisfying_nodes(m, f).contains(&node)
}

/// Is the sequent true in `m`, that is, does the consequent hold at every
/// node satisfying the antecedent?
pub fn check_sequent(m: &Model, s: &Sequent) -> bool {
    satisfying_nodes(m, &s.antecedent).is_subset(&satisfying_nodes(m, &s.consequent))
}

/// Search for a homomorphism of the rooted tree `src` into `dst` sending the
/// root to `x`: edges map to same-labelled edges and true variables stay
/// true. Children are matched in ascending node order against ascending
/// destination successors, so the returned witness is deterministic.
pub fn find_homomorphism(
    src: &Model,
    dst: &Model,
    x: NodeId,
) -> Result<Option<BTreeMap<NodeId, NodeId>>, ModelError> {
    if !dst.contains_node(x) {
        return Err(ModelError::UnknownNode(x));
    }
    let root = src.root().ok_or(ModelError::NotTreelike)?;
    let mut indegree: BTreeMap<NodeId, usize> = src.nodes().map(|v| (v, 0)).collect();
    let mut kids: BTreeMap<NodeId, Vec<(Modality, NodeId)>> =
        src.nodes().map(|v| (v, Vec::new())).collect();
    for (label, u, v) in src.all_edges() {
        *indegree.get_mut(&v).ok_or(ModelError::UnknownNode(v))? += 1;
        kids.get_mut(&u).unwrap().push((label, v));
    }
    for list in kids.values_mut() {
        list.sort_by_key(|&(_, v)| v);
    }
    if indegree[&root] != 0 || src.nodes().any(|v| v != root && indegree[&v] != 1) {
        return Err(ModelError::NotTreelike);
    }
    let mut seen = BTreeSet::from([root]);
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for &(_, c) in &kids[&v] {
            if seen.insert(c) {
                stack.push(c);
            }
        }
    }
    if seen.len() != src.node_count() {
        return Err(ModelError::NotTreelike);
    }

    let mut out = Vec::new();
    if embed(src, dst, &kids, root, x, &mut out) {
        Ok(Some(out.into_iter().collect()))
    } else {
        Ok(None)
    }
}

/// Subtrees constrain each other only through their parent's image, so each
/// child can commit to its least workable candidate independently.
fn embed(
    src: &Model,
    dst: &Model,
    kids: &BTreeMap<NodeId, Vec<(Modality, NodeId)>>,
    v: NodeId,
    w: NodeId,
    out: &mut Vec<(NodeId, NodeId)>,
) -> bool {
    if !src.true_vars(v).all(|p| dst.is_true(p, w)) {
        return false;
    }
    let mark = out.len();
    out.push((v, w));
    for &(label, c) in &kids[&v] {
        let mut placed = false;
        for cand in dst.successors(label, w).collect::<Vec<_>>() {
            let sub = out.len();
            if embed(src, dst, kids, c, cand, out) {
                placed = true;
                break;
            }
            out.truncate(sub);
        }
        if !placed {
            out.truncate(mark);
            return false;
        }
    }
    true
}
