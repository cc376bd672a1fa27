//! Generators and helpers shared by the integration suites.
#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rcw::{Formula, Logic, Model, Modality};

pub const LABELS: [Modality; 4] = [
    Modality::Nat(0),
    Modality::Nat(1),
    Modality::Nat(2),
    Modality::Omega,
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniform-ish random formula with exactly `size` nodes.
pub fn random_formula(
    rng: &mut ChaCha8Rng,
    size: usize,
    vars: &[&str],
    labels: &[Modality],
) -> Formula {
    if size <= 1 {
        if rng.random_bool(0.85) {
            Formula::var(*vars.choose(rng).unwrap())
        } else {
            Formula::Top
        }
    } else if size == 2 || rng.random_bool(0.5) {
        Formula::dia(
            *labels.choose(rng).unwrap(),
            random_formula(rng, size - 1, vars, labels),
        )
    } else {
        let left = rng.random_range(1..size - 1);
        Formula::and(
            random_formula(rng, left, vars, labels),
            random_formula(rng, size - 1 - left, vars, labels),
        )
    }
}

/// Some formula `B` with `A |- B` derivable in `logic`, built by chaining
/// `fuel` sound inference steps, so the pair is provable by construction.
pub fn consequence(rng: &mut ChaCha8Rng, logic: Logic, a: &Formula, fuel: usize) -> Formula {
    let mut cur = a.clone();
    for _ in 0..fuel {
        cur = one_step(rng, logic, &cur);
    }
    cur
}

fn one_step(rng: &mut ChaCha8Rng, logic: Logic, a: &Formula) -> Formula {
    let mut options: Vec<Formula> = vec![a.clone()];
    if rng.random_bool(0.2) {
        options.push(Formula::Top);
    }
    options.push(Formula::and(a.clone(), a.clone()));
    match a {
        Formula::And(l, r) => {
            options.push(l.as_ref().clone());
            options.push(r.as_ref().clone());
            if let (Formula::Dia(x, body), Formula::Dia(y, _)) = (l.as_ref(), r.as_ref()) {
                if x > y {
                    options.push(Formula::dia(
                        *x,
                        Formula::and(body.as_ref().clone(), r.as_ref().clone()),
                    ));
                }
            }
        }
        Formula::Dia(x, inner) => {
            options.push(Formula::dia(*x, one_step(rng, logic, inner)));
            if let Formula::Dia(y, c) = inner.as_ref() {
                if x >= y {
                    options.push(Formula::dia(*y, c.as_ref().clone()));
                }
                if y >= x {
                    options.push(Formula::dia(*x, c.as_ref().clone()));
                }
            }
            if logic >= Logic::Rc {
                let smaller: Vec<Modality> =
                    LABELS.iter().copied().filter(|l| l < x).collect();
                if let Some(&l) = smaller.choose(rng) {
                    options.push(Formula::dia(l, inner.as_ref().clone()));
                }
            }
            if logic == Logic::Rcw && *x == Modality::Omega {
                options.push(inner.as_ref().clone());
            }
        }
        _ => {}
    }
    options.choose(rng).unwrap().clone()
}

/// An arbitrary model: up to `max_nodes` nodes, each labelled edge drawn
/// with probability 1/4, each variable true with probability 2/5.
pub fn random_model(
    rng: &mut ChaCha8Rng,
    max_nodes: usize,
    vars: &[&str],
    labels: &[Modality],
) -> Model {
    let n = rng.random_range(1..=max_nodes);
    let mut m = Model::with_nodes(n);
    for &l in labels {
        for x in 0..n {
            for y in 0..n {
                if rng.random_bool(0.25) {
                    m.add_edge(l, x, y);
                }
            }
        }
    }
    for &v in vars {
        for x in 0..n {
            if rng.random_bool(0.4) {
                m.set_true(v, x);
            }
        }
    }
    m
}

/// All formulas over `vars` and `labels`, grouped by exact size; entry `s`
/// of the result lists the formulas of size `s` (entry 0 is empty).
pub fn formulas_by_size(max: usize, vars: &[&str], labels: &[Modality]) -> Vec<Vec<Formula>> {
    let mut sizes: Vec<Vec<Formula>> = vec![Vec::new(); max + 1];
    for &v in vars {
        sizes[1].push(Formula::var(v));
    }
    sizes[1].push(Formula::Top);
    for n in 2..=max {
        let mut out = Vec::new();
        for &l in labels {
            for f in &sizes[n - 1] {
                out.push(Formula::dia(l, f.clone()));
            }
        }
        for i in 1..n - 1 {
            for a in &sizes[i] {
                for b in &sizes[n - 1 - i] {
                    out.push(Formula::and(a.clone(), b.clone()));
                }
            }
        }
        sizes[n] = out;
    }
    sizes
}

/// Run `f` on a thread with a 64 MiB stack; deep formulas are cheap to
/// build but their recursive drops outgrow default test stacks.
pub fn with_big_stack<T, F>(f: F) -> T
where
    T: Send + 'static,
    F: FnOnce() -> T + Send + 'static,
{
    std::thread::Builder::new()
        .stack_size(64 * 1024 * 1024)
        .spawn(f)
        .expect("failed to spawn the worker thread")
        .join()
        .expect("the worker thread panicked")
}
