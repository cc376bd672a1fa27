//! Exhaustive search for small countermodels.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::checker::check;
use crate::decide::Logic;
use crate::formula::{Formula, Modality, Sequent, Signature};
use crate::kripke::{closure, generated_submodel, FrameKind, Model, NodeId};

use super::OracleError;

/// Search for a rooted model over `ℓ(s)` with at most `max_nodes` nodes
/// making the antecedent true and the consequent false at the root. The
/// first hit in a fixed enumeration is returned, so results are stable.
///
/// Candidate frames come from cached catalogues of closed frames, keyed by
/// node count, number of labels and frame kind. Small catalogues list every
/// closed frame; larger ones only close bounded sets of base edges, so a
/// `None` from a large budget still means nothing beyond "not refuted here".
/// Any returned model is re-checked semantically before it leaves.
pub fn refute_by_models(
    s: &Sequent,
    logic: Logic,
    max_nodes: usize,
) -> Result<Option<Model>, OracleError> {
    if max_nodes > 5 {
        return Err(OracleError::TooManyNodes(max_nodes));
    }
    let labels: Vec<Modality> = s.signature().into_iter().collect();
    let vars: Vec<String> = s.variables().into_iter().collect();
    let kind = match logic {
        Logic::Rj => FrameKind::Rj,
        Logic::Rc | Logic::Rcw => FrameKind::Rc,
    };
    for n in 1..=max_nodes {
        if n * vars.len() > 20 {
            break;
        }
        for pattern in catalog(n, labels.len(), kind).iter() {
            if let Some(m) = refute_on(s, logic, n, &labels, &vars, pattern) {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

// A closed frame with anonymous labels `0..k`, plus per-label predecessor
// bitmasks so formulas evaluate in a few word operations per node set.
struct Pattern {
    edges: Vec<(usize, NodeId, NodeId)>,
    preds: Vec<Vec<u32>>,
}

fn refute_on(
    s: &Sequent,
    logic: Logic,
    n: usize,
    labels: &[Modality],
    vars: &[String],
    pattern: &Pattern,
) -> Option<Model> {
    let all = (1u32 << n) - 1;
    let v = vars.len();
    let omega_edges: Vec<(NodeId, NodeId)> = match labels.iter().position(|l| *l == Modality::Omega)
    {
        Some(w) if logic == Logic::Rcw => pattern
            .edges
            .iter()
            .filter(|&&(l, _, _)| l == w)
            .map(|&(_, x, y)| (x, y))
            .collect(),
        _ => Vec::new(),
    };
    let mut var_masks: BTreeMap<&str, u32> = BTreeMap::new();
    'masks: for mask in 0u32..(1u32 << (n * v)) {
        var_masks.clear();
        for (j, name) in vars.iter().enumerate() {
            let mut bits = 0u32;
            for i in 0..n {
                bits |= (mask >> (i * v + j) & 1) << i;
            }
            var_masks.insert(name, bits);
        }
        for &(x, y) in &omega_edges {
            for bits in var_masks.values() {
                if bits >> y & 1 == 1 && bits >> x & 1 == 0 {
                    continue 'masks;
                }
            }
        }
        let holds_a = eval(&s.antecedent, labels, pattern, &var_masks, all, n);
        let holds_b = eval(&s.consequent, labels, pattern, &var_masks, all, n);
        let witnesses = holds_a & !holds_b;
        if witnesses != 0 {
            let root = witnesses.trailing_zeros() as NodeId;
            return Some(realize(s, n, labels, vars, pattern, mask, root));
        }
    }
    None
}

fn eval(
    f: &Formula,
    labels: &[Modality],
    pattern: &Pattern,
    var_masks: &BTreeMap<&str, u32>,
    all: u32,
    n: usize,
) -> u32 {
    match f {
        Formula::Var(p) => var_masks[p.as_str()],
        Formula::Top => all,
        Formula::And(l, r) => {
            eval(l, labels, pattern, var_masks, all, n)
                & eval(r, labels, pattern, var_masks, all, n)
        }
        Formula::Dia(a, body) => {
            let inner = eval(body, labels, pattern, var_masks, all, n);
            let preds = &pattern.preds[labels.iter().position(|l| l == a).unwrap()];
            let mut out = 0;
            for y in 0..n {
                if inner >> y & 1 == 1 {
                    out |= preds[y];
                }
            }
            out
        }
    }
}

fn realize(
    s: &Sequent,
    n: usize,
    labels: &[Modality],
    vars: &[String],
    pattern: &Pattern,
    mask: u32,
    root: NodeId,
) -> Model {
    let mut m = Model::with_nodes(n);
    for &(l, x, y) in &pattern.edges {
        m.add_edge(labels[l], x, y);
    }
    for (j, name) in vars.iter().enumerate() {
        for i in 0..n {
            if mask >> (i * vars.len() + j) & 1 == 1 {
                m.set_true(name.clone(), i);
            }
        }
    }
    m.set_root(Some(root));
    let m = generated_submodel(&m, root).expect("the witness is a node of the model");
    assert!(
        check(&m, root, &s.antecedent) && !check(&m, root, &s.consequent),
        "countermodel search produced a non-countermodel for {s}"
    );
    m
}

fn catalog(n: usize, k: usize, kind: FrameKind) -> Arc<Vec<Pattern>> {
    type Cache = Mutex<HashMap<(usize, usize, FrameKind), Arc<Vec<Pattern>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let mut cache = CACHE.get_or_init(|| Mutex::new(HashMap::new())).lock().unwrap();
    cache
        .entry((n, k, kind))
        .or_insert_with(|| Arc::new(build_catalog(n, k, kind)))
        .clone()
}

fn build_catalog(n: usize, k: usize, kind: FrameKind) -> Vec<Pattern> {
    let slots = n * n * k;
    let sig: Signature = (0..k as u64).map(Modality::Nat).collect();
    let mut seen: BTreeSet<Vec<(usize, NodeId, NodeId)>> = BTreeSet::new();
    let mut admit = |base: &[usize]| {
        let mut m = Model::with_nodes(n);
        for &slot in base {
            m.add_edge(Modality::Nat((slot / (n * n)) as u64), slot / n % n, slot % n);
        }
        let closed = closure(&m, &sig, kind);
        seen.insert(
            closed
                .all_edges()
                .map(|(l, x, y)| match l {
                    Modality::Nat(i) => (i as usize, x, y),
                    Modality::Omega => unreachable!("closure stays inside the signature"),
                })
                .collect(),
        );
    };
    match base_bound(slots) {
        None => {
            for mask in 0u32..(1u32 << slots) {
                let base: Vec<usize> = (0..slots).filter(|&i| mask >> i & 1 == 1).collect();
                admit(&base);
            }
        }
        Some(bound) => {
            for size in 0..=bound {
                for base in combinations(slots, size) {
                    admit(&base);
                }
            }
        }
    }
    let mut edge_sets: Vec<_> = seen.into_iter().collect();
    edge_sets.sort_by_key(Vec::len);
    edge_sets
        .into_iter()
        .map(|edges| {
            let mut preds = vec![vec![0u32; n]; k];
            for &(l, x, y) in &edges {
                preds[l][y] |= 1 << x;
            }
            Pattern { edges, preds }
        })
        .collect()
}

// Every closed frame is the closure of itself, so enumerating all base sets
// lists every frame exactly. That stops being affordable past 2^16 bases;
// beyond it we close every base of at most `b` edges, with `b` the largest
// bound keeping the enumeration under thirty thousand closures.
fn base_bound(slots: usize) -> Option<usize> {
    if slots <= 16 {
        return None;
    }
    let mut total = 1u64;
    let mut bound = 0;
    for b in 0..4 {
        let mut c = 1u64;
        for i in 0..=b {
            c = c * (slots - i) as u64 / (i as u64 + 1);
        }
        if total + c > 30_000 {
            break;
        }
        total += c;
        bound = b + 1;
    }
    Some(bound)
}

fn combinations(total: usize, choose: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, total: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=total - left {
            cur.push(i);
            go(i + 1, total, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, total, choose, &mut Vec::with_capacity(choose), &mut out);
    out
}
