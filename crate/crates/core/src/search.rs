//! Include-first branch and bound over a fixed list of items.
//!
//! Each item (a candidate edge or matrix cell) is either taken, when the
//! state admits it without creating a forbidden copy, or skipped. A branch is
//! cut when its upper bound cannot beat the shared incumbent.
//!
//! The top of the tree is split into prefixes that rayon workers explore with
//! one atomic incumbent. Node counts therefore depend on scheduling, but the
//! value does not, and the witness is recomputed afterwards by a sequential
//! pass that returns the first optimal solution in depth-first order, so it
//! is independent of the worker count as well.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Search limits. A search that hits a limit reports its best value as a
/// lower bound flagged inexact.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
    pub workers: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: None, max_seconds: None, workers: 1 }
    }
}

impl Budget {
    pub fn with_workers(workers: usize) -> Self {
        Budget { workers: workers.max(1), ..Budget::default() }
    }

    pub fn with_max_nodes(max_nodes: u64) -> Self {
        Budget { max_nodes: Some(max_nodes), ..Budget::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_ms: u64,
}

pub(crate) trait SearchState: Clone + Send + Sync {
    fn item_count(&self) -> usize;
    /// Takes `item` if the state stays free; returns whether it was taken.
    fn try_push(&mut self, item: usize) -> bool;
    fn pop(&mut self, item: usize);
    fn value(&self) -> usize;
    /// Upper bound on the value of any completion once items `< next` are decided.
    fn upper_bound(&self, next: usize) -> usize;
}

#[derive(Debug, Clone)]
pub(crate) struct Outcome {
    pub value: usize,
    pub chosen: Vec<usize>,
    pub exact: bool,
    pub stats: SearchStats,
}

struct Shared {
    incumbent: AtomicUsize,
    nodes: AtomicU64,
    aborted: AtomicBool,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    flush_every: u64,
}

impl Shared {
    fn flush(&self, pending: &mut u64) {
        let total = self.nodes.fetch_add(*pending, Ordering::Relaxed) + *pending;
        *pending = 0;
        let over_nodes = self.max_nodes.is_some_and(|m| total > m);
        let over_time = self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.aborted.store(true, Ordering::Relaxed);
        }
    }
}

/// A value with the items that attain it.
type Best = Option<(usize, Vec<usize>)>;

struct Local {
    pending: u64,
    best: Best,
    cut: bool,
}

fn dfs<S: SearchState>(state: &mut S, next: usize, chosen: &mut Vec<usize>, shared: &Shared, local: &mut Local) {
    local.pending += 1;
    if local.pending >= shared.flush_every {
        shared.flush(&mut local.pending);
    }
    if shared.aborted.load(Ordering::Relaxed) {
        local.cut = true;
        return;
    }
    let value = state.value();
    if local.best.as_ref().is_none_or(|(v, _)| value > *v) {
        local.best = Some((value, chosen.clone()));
        shared.incumbent.fetch_max(value, Ordering::Relaxed);
    }
    if next == state.item_count() || state.upper_bound(next) <= shared.incumbent.load(Ordering::Relaxed) {
        return;
    }
    if state.try_push(next) {
        chosen.push(next);
        dfs(state, next + 1, chosen, shared, local);
        chosen.pop();
        state.pop(next);
    }
    dfs(state, next + 1, chosen, shared, local);
}

// Sequential pass for the first solution (depth-first order) of value >= target.
fn first_reaching<S: SearchState>(state: &mut S, next: usize, target: usize, chosen: &mut Vec<usize>) -> bool {
    if state.value() >= target {
        return true;
    }
    if next == state.item_count() || state.upper_bound(next) < target {
        return false;
    }
    if state.try_push(next) {
        chosen.push(next);
        if first_reaching(state, next + 1, target, chosen) {
            return true;
        }
        chosen.pop();
        state.pop(next);
    }
    first_reaching(state, next + 1, target, chosen)
}

struct Prefix<S> {
    state: S,
    next: usize,
    chosen: Vec<usize>,
}

fn split<S: SearchState>(root: Prefix<S>, depth: usize) -> Vec<Prefix<S>> {
    let mut out = Vec::new();
    let mut stack = vec![root];
    // emulate include-first depth-first order
    while let Some(p) = stack.pop() {
        if p.next >= depth || p.next == p.state.item_count() {
            out.push(p);
            continue;
        }
        let skip = Prefix { state: p.state.clone(), next: p.next + 1, chosen: p.chosen.clone() };
        stack.push(skip);
        let mut take = p;
        if take.state.try_push(take.next) {
            take.chosen.push(take.next);
            take.next += 1;
            stack.push(take);
        }
    }
    out
}

/// Maximizes `value` over admissible item subsets.
///
/// With `force_first`, item 0 is taken up front when admissible; callers use
/// this only where symmetry guarantees an optimal solution containing it.
pub(crate) fn branch_and_bound<S: SearchState>(root: S, force_first: bool, budget: &Budget) -> Outcome {
    let start = Instant::now();
    let mut root = root;
    let mut first = 0;
    let mut forced = Vec::new();
    if force_first && root.item_count() > 0 && root.try_push(0) {
        forced.push(0);
        first = 1;
    }
    let shared = Shared {
        incumbent: AtomicUsize::new(root.value()),
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        max_nodes: budget.max_nodes,
        deadline: budget.max_seconds.map(|s| start + Duration::from_secs_f64(s.max(0.0))),
        flush_every: budget.max_nodes.map_or(1024, |m| (m / 4).clamp(1, 1024)),
    };
    let workers = budget.workers.max(1);
    let depth = if workers == 1 { first } else { (first + split_depth(workers)).min(root.item_count()) };
    let prefixes = split(Prefix { state: root.clone(), next: first, chosen: forced.clone() }, depth);

    let run = |p: &Prefix<S>| {
        let mut state = p.state.clone();
        let mut chosen = p.chosen.clone();
        let mut local = Local { pending: 0, best: None, cut: false };
        dfs(&mut state, p.next, &mut chosen, &shared, &mut local);
        shared.flush(&mut local.pending);
        (local.best, local.cut)
    };
    let results: Vec<(Best, bool)> = if workers == 1 {
        prefixes.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
        pool.install(|| prefixes.par_iter().map(run).collect())
    };
    let exact = results.iter().all(|(_, cut)| !cut);
    let (mut value, mut chosen) = (root.value(), forced.clone());
    for (v, c) in results.into_iter().filter_map(|(best, _)| best) {
        if v > value {
            value = v;
            chosen = c;
        }
    }
    if exact {
        let mut state = root.clone();
        let mut first_chosen = forced;
        let found = first_reaching(&mut state, first, value, &mut first_chosen);
        debug_assert!(found, "optimal value must be reachable");
        if found {
            chosen = first_chosen;
        }
    }
    let stats =
        SearchStats { nodes: shared.nodes.load(Ordering::Relaxed), elapsed_ms: start.elapsed().as_millis() as u64 };
    Outcome { value, chosen, exact, stats }
}

fn split_depth(workers: usize) -> usize {
    // about 16 prefixes per worker before infeasible branches are dropped
    let target = (workers * 16).next_power_of_two();
    target.trailing_zeros() as usize
}
