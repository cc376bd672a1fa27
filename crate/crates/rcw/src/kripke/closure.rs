//! Worklist closure under the frame conditions, and signature expansion.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::formula::{Modality, Signature};

use super::{is_frame, FrameKind, Model, ModelError, NodeId};

type Pairs = BTreeSet<(NodeId, NodeId)>;

/// Least extension of `m`'s edges satisfying the conditions of `kind` over
/// `sig`. Nodes, valuation and root are untouched; every original edge
/// survives. Terminates because at most `|nodes|^2 * |sig|` edges exist.
pub fn closure(m: &Model, sig: &Signature, kind: FrameKind) -> Model {
    let labels: Vec<Modality> = sig.iter().copied().collect();
    let mut out = m.clone();
    // FIFO worklist of edges not yet combined with the rest.
    let mut queue: VecDeque<(Modality, NodeId, NodeId)> = out.all_edges().collect();
    // Predecessor index per label, maintained alongside `out`.
    let mut preds: BTreeMap<Modality, BTreeMap<NodeId, BTreeSet<NodeId>>> = BTreeMap::new();
    for (l, x, y) in out.all_edges() {
        preds.entry(l).or_default().entry(y).or_default().insert(x);
    }

    macro_rules! push {
        ($queue:ident, $out:ident, $preds:ident, $l:expr, $x:expr, $y:expr) => {
            if $out.add_edge($l, $x, $y) {
                $preds.entry($l).or_default().entry($y).or_default().insert($x);
                $queue.push_back(($l, $x, $y));
            }
        };
    }

    while let Some((a, x, y)) = queue.pop_front() {
        for &b in &labels {
            let low = a.min(b);
            // polytransitivity, new edge on the left: x -a-> y -b-> z
            let zs: Vec<NodeId> = out.successors(b, y).collect();
            for z in zs {
                push!(queue, out, preds, low, x, z);
            }
            // polytransitivity, new edge on the right: w -b-> x -a-> y
            let ws: Vec<NodeId> = preds
                .get(&b)
                .and_then(|p| p.get(&x))
                .map(|s| s.iter().copied().collect())
                .unwrap_or_default();
            for w in ws {
                push!(queue, out, preds, low, w, y);
            }
            if b < a {
                // condition J with the new edge as the large premise:
                // x -a-> y and x -b-> z give y -b-> z
                let zs: Vec<NodeId> = out.successors(b, x).collect();
                for z in zs {
                    push!(queue, out, preds, b, y, z);
                }
                // monotonicity
                if kind == FrameKind::Rc {
                    push!(queue, out, preds, b, x, y);
                }
            }
            if b > a {
                // condition J with the new edge as the small premise:
                // x -b-> v and x -a-> y give v -a-> y
                let vs: Vec<NodeId> = out.successors(b, x).collect();
                for v in vs {
                    push!(queue, out, preds, a, v, y);
                }
            }
        }
    }
    out
}

/// Defines the relation for a fresh label `a` not in `sig` on an RC-frame,
/// yielding an RC-frame over `sig ∪ {a}` with the original reducts intact.
///
/// With no label above `a` the new relation is empty. Otherwise it starts
/// from the union of the relations above `a` and iterates
/// `R ∪ R;R ∪ (R_b)^-1;R` for every larger `b` until nothing changes.
pub fn expand(m: &Model, sig: &Signature, label: Modality) -> Result<Model, ModelError> {
    if sig.contains(&label) {
        return Err(ModelError::LabelInSignature(label));
    }
    if !is_frame(m, sig, FrameKind::Rc) {
        return Err(ModelError::NotAFrame);
    }
    let above: Vec<Modality> = sig.iter().copied().filter(|b| *b > label).collect();
    let mut out = m.clone();
    if above.is_empty() {
        return Ok(out);
    }

    let mut rel: Pairs = above
        .iter()
        .flat_map(|b| m.edges_with(*b))
        .collect();
    loop {
        let mut next = rel.clone();
        // R;R
        for &(x, y) in &rel {
            for &(y2, z) in rel.range((y, 0)..=(y, NodeId::MAX)) {
                debug_assert_eq!(y, y2);
                next.insert((x, z));
            }
        }
        // (R_b)^-1;R for each larger b: from x -b-> y and x -> z infer y -> z
        for &b in &above {
            for (x, y) in m.edges_with(b) {
                for &(x2, z) in rel.range((x, 0)..=(x, NodeId::MAX)) {
                    debug_assert_eq!(x, x2);
                    next.insert((y, z));
                }
            }
        }
        if next.len() == rel.len() {
            break;
        }
        rel = next;
    }
    for (x, y) in rel {
        out.add_edge(label, x, y);
    }
    Ok(out)
}
