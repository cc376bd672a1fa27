//! Finite Kripke models with one relation per label.
//!
//! A model is a finite node set, a family of edge relations indexed by
//! labels, a valuation and an optional root. The frame conditions of
//! interest:
//!
//! ```text
//! polytransitivity   x -a-> y -b-> z   implies  x -min(a,b)-> z
//! condition J        x -a-> y, x -b-> z, a > b  implies  y -b-> z
//! monotonicity (RC)  x -a-> y, b < a   implies  x -b-> y
//! ```
//!
//! quantified over labels in a fixed finite signature. Persistence is a
//! property of the valuation, not the frame: truth of variables flows
//! backwards along `w`-edges.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::formula::{Modality, Signature};

mod closure;
mod io;

pub use closure::{closure, expand};

/// Node identifiers are small integers; the constructions in [`crate::tree`]
/// allocate them densely from 0, but nothing requires that.
pub type NodeId = usize;

/// Which closure conditions apply: `Rj` is polytransitivity plus condition
/// J; `Rc` adds monotonicity. RCω uses `Rc` frames with a persistent
/// valuation on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrameKind {
    Rj,
    Rc,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("node {0} is not in the model")]
    UnknownNode(NodeId),
    #[error("model is not a frame for the given signature and kind")]
    NotAFrame,
    #[error("label {0} already lies in the signature")]
    LabelInSignature(Modality),
    #[error("model is not a rooted tree")]
    NotTreelike,
    #[error("invalid model: {0}")]
    Invalid(String),
}

/// A finite Kripke model.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Model {
    nodes: BTreeSet<NodeId>,
    root: Option<NodeId>,
    edges: BTreeMap<Modality, BTreeMap<NodeId, BTreeSet<NodeId>>>,
    val: BTreeMap<String, BTreeSet<NodeId>>,
}

impl Model {
    pub fn new() -> Self {
        Model::default()
    }

    /// Model with nodes `0..n`, no edges, empty valuation.
    pub fn with_nodes(n: usize) -> Self {
        Model {
            nodes: (0..n).collect(),
            ..Model::default()
        }
    }

    pub fn add_node(&mut self, id: NodeId) {
        self.nodes.insert(id);
    }

    /// Allocates the smallest fresh identifier.
    pub fn fresh_node(&mut self) -> NodeId {
        let id = self.nodes.last().map_or(0, |m| m + 1);
        self.nodes.insert(id);
        id
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes.iter().copied()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn contains_node(&self, id: NodeId) -> bool {
        self.nodes.contains(&id)
    }

    pub fn root(&self) -> Option<NodeId> {
        self.root
    }

    pub fn set_root(&mut self, root: Option<NodeId>) {
        if let Some(r) = root {
            assert!(self.nodes.contains(&r), "root {r} is not a node");
        }
        self.root = root;
    }

    /// Inserts an edge, returning whether it was new.
    pub fn add_edge(&mut self, label: Modality, from: NodeId, to: NodeId) -> bool {
        assert!(
            self.nodes.contains(&from) && self.nodes.contains(&to),
            "edge endpoints must be nodes"
        );
        self.edges
            .entry(label)
            .or_default()
            .entry(from)
            .or_default()
            .insert(to)
    }

    pub fn has_edge(&self, label: Modality, from: NodeId, to: NodeId) -> bool {
        self.edges
            .get(&label)
            .and_then(|m| m.get(&from))
            .is_some_and(|s| s.contains(&to))
    }

    pub fn successors(&self, label: Modality, from: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.edges
            .get(&label)
            .and_then(|m| m.get(&from))
            .into_iter()
            .flat_map(|s| s.iter().copied())
    }

    /// Labels that carry at least one edge.
    pub fn edge_signature(&self) -> Signature {
        self.edges
            .iter()
            .filter(|(_, m)| m.values().any(|s| !s.is_empty()))
            .map(|(l, _)| *l)
            .collect()
    }

    /// All edges with the given label, ordered by `(from, to)`.
    pub fn edges_with(&self, label: Modality) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.edges
            .get(&label)
            .into_iter()
            .flat_map(|m| m.iter().flat_map(|(x, s)| s.iter().map(|y| (*x, *y))))
    }

    /// All edges, ordered by `(label, from, to)`.
    pub fn all_edges(&self) -> impl Iterator<Item = (Modality, NodeId, NodeId)> + '_ {
        self.edges.iter().flat_map(|(l, m)| {
            m.iter()
                .flat_map(move |(x, s)| s.iter().map(move |y| (*l, *x, *y)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges
            .values()
            .map(|m| m.values().map(|s| s.len()).sum::<usize>())
            .sum()
    }

    pub fn set_true(&mut self, var: impl Into<String>, node: NodeId) {
        assert!(self.nodes.contains(&node), "valuation on unknown node");
        self.val.entry(var.into()).or_default().insert(node);
    }

    pub fn is_true(&self, var: &str, node: NodeId) -> bool {
        self.val.get(var).is_some_and(|s| s.contains(&node))
    }

    /// Variables with the sets of nodes where they hold.
    pub fn valuation(&self) -> &BTreeMap<String, BTreeSet<NodeId>> {
        &self.val
    }

    pub fn clear_valuation(&mut self) {
        self.val.clear();
    }

    /// Variables true at `node`.
    pub fn true_vars(&self, node: NodeId) -> impl Iterator<Item = &str> {
        self.val
            .iter()
            .filter(move |(_, s)| s.contains(&node))
            .map(|(v, _)| v.as_str())
    }
}

/// Does `m` satisfy the frame conditions of `kind` over the signature `sig`?
///
/// Labels carrying edges must lie inside `sig`; if not, the model is not a
/// frame for that signature at all and the answer is `false`.
pub fn is_frame(m: &Model, sig: &Signature, kind: FrameKind) -> bool {
    if !m.edge_signature().is_subset(sig) {
        return false;
    }
    for &a in sig {
        for &b in sig {
            let low = a.min(b);
            // polytransitivity
            for (x, y) in m.edges_with(a) {
                for z in m.successors(b, y) {
                    if !m.has_edge(low, x, z) {
                        return false;
                    }
                }
            }
            // condition J
            if a > b {
                for (x, y) in m.edges_with(a) {
                    for z in m.successors(b, x) {
                        if !m.has_edge(b, y, z) {
                            return false;
                        }
                    }
                }
                // monotonicity
                if kind == FrameKind::Rc {
                    for (x, y) in m.edges_with(a) {
                        if !m.has_edge(b, x, y) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Does truth of variables flow backwards along `w`-edges?
pub fn is_persistent(m: &Model) -> bool {
    m.edges_with(Modality::Omega)
        .all(|(x, y)| m.true_vars(y).all(|v| m.is_true(v, x)))
}

/// Restriction of `m` to the nodes reachable from `from` (via any label),
/// rooted there. Node identities are preserved.
pub fn generated_submodel(m: &Model, from: NodeId) -> Result<Model, ModelError> {
    if !m.contains_node(from) {
        return Err(ModelError::UnknownNode(from));
    }
    let labels: Vec<Modality> = m.edges.keys().copied().collect();
    let mut keep = BTreeSet::from([from]);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &l in &labels {
            for y in m.successors(l, x) {
                if keep.insert(y) {
                    queue.push_back(y);
                }
            }
        }
    }
    let mut out = Model::new();
    out.nodes = keep.clone();
    out.root = Some(from);
    for (l, succ) in &m.edges {
        for (x, ys) in succ {
            if !keep.contains(x) {
                continue;
            }
            let kept: BTreeSet<NodeId> = ys.intersection(&keep).copied().collect();
            if !kept.is_empty() {
                out.edges.entry(*l).or_default().insert(*x, kept);
            }
        }
    }
    for (v, s) in &m.val {
        let kept: BTreeSet<NodeId> = s.intersection(&keep).copied().collect();
        if !kept.is_empty() {
            out.val.insert(v.clone(), kept);
        }
    }
    Ok(out)
}

/// The persistent valuation over the same frame: a variable becomes true
/// wherever it already was, or where some `w`-successor makes it true.
/// With `R_w` transitive (as in every closed frame) one pass suffices and
/// the result passes [`is_persistent`].
pub fn persist_valuation(m: &Model) -> Model {
    let mut out = m.clone();
    let omega_edges: Vec<(NodeId, NodeId)> = m.edges_with(Modality::Omega).collect();
    for (var, holds) in &m.val {
        let extra: BTreeSet<NodeId> = omega_edges
            .iter()
            .filter(|(_, y)| holds.contains(y))
            .map(|(x, _)| *x)
            .collect();
        if !extra.is_empty() {
            out.val.get_mut(var).unwrap().extend(extra);
        }
    }
    out
}
