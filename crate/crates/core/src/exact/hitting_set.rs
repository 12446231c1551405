//! Branch and bound for minimum hitting set on the translate family.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::TranslateFamily;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Optimal hitting set plus search statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSet {
    /// Chosen universe elements, ascending.
    pub elements: Vec<usize>,
    pub nodes: u64,
}

impl HittingSet {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub deadline: Option<Instant>,
    pub threads: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            deadline: None,
            threads: 1,
        }
    }
}

struct Shared {
    best: AtomicUsize,
    nodes: AtomicU64,
    aborted: AtomicBool,
    deadline: Option<Instant>,
}

/// Minimum hitting set of `fam` without time limit, single-threaded.
pub fn min_hitting_set(fam: &TranslateFamily) -> HittingSet {
    min_hitting_set_with(fam, Limits::default()).expect("no deadline")
}

/// Minimum hitting set of `fam`.
///
/// The root branches on the elements of the first set, the `i`-th branch
/// forbidding the first `i - 1` of them. Branches share the incumbent size but
/// only prune subtrees that cannot reach it, so each branch returns its first
/// optimal solution in search order whatever the scheduling, and the overall
/// answer is the lexicographically least candidate of minimum size.
pub fn min_hitting_set_with(fam: &TranslateFamily, limits: Limits) -> Result<HittingSet> {
    let start = Instant::now();
    let greedy = greedy(fam);
    if fam.sets.is_empty() {
        return Ok(HittingSet {
            elements: Vec::new(),
            nodes: 0,
        });
    }
    let shared = Shared {
        best: AtomicUsize::new(greedy.len()),
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        deadline: limits.deadline,
    };
    let root = &fam.sets[0];
    let run_branch = |i: usize| -> Option<Vec<usize>> {
        let mut search = Search::new(fam, &shared);
        for &e in &root[..i] {
            search.forbidden[e] = true;
        }
        search.choose(root[i]);
        search.dfs();
        shared.nodes.fetch_add(search.nodes, Ordering::Relaxed);
        search.best
    };
    let branches: Vec<Option<Vec<usize>>> = if limits.threads <= 1 {
        (0..root.len()).map(run_branch).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(limits.threads)
            .build()
            .map_err(|e| Error::Range(format!("thread pool: {e}")))?;
        pool.install(|| (0..root.len()).into_par_iter().map(run_branch).collect())
    };
    let nodes = shared.nodes.load(Ordering::Relaxed);
    if shared.aborted.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded {
            nodes,
            elapsed: start.elapsed(),
        });
    }
    let elements = branches
        .into_iter()
        .flatten()
        .chain(std::iter::once(greedy))
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
        .expect("greedy candidate");
    Ok(HittingSet { elements, nodes })
}

/// Repeatedly takes the element hitting the most unhit sets, lowest index on ties.
fn greedy(fam: &TranslateFamily) -> Vec<usize> {
    let mut hit = vec![false; fam.sets.len()];
    let mut remaining = fam.sets.len();
    let mut chosen = Vec::new();
    while remaining > 0 {
        let (best, _) = (0..fam.universe_size)
            .map(|e| (e, fam.incidence[e].iter().filter(|&&t| !hit[t]).count()))
            .max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)))
            .expect("nonempty universe");
        for &t in &fam.incidence[best] {
            if !hit[t] {
                hit[t] = true;
                remaining -= 1;
            }
        }
        chosen.push(best);
    }
    chosen.sort_unstable();
    chosen
}

const DEADLINE_CHECK_INTERVAL: u64 = 1 << 12;

struct Search<'a> {
    fam: &'a TranslateFamily,
    shared: &'a Shared,
    /// Chosen elements in each set.
    cover: Vec<u32>,
    uncovered: usize,
    forbidden: Vec<bool>,
    chosen: Vec<usize>,
    best: Option<Vec<usize>>,
    nodes: u64,
    scratch: BitSet,
}

impl<'a> Search<'a> {
    fn new(fam: &'a TranslateFamily, shared: &'a Shared) -> Self {
        Search {
            fam,
            shared,
            cover: vec![0; fam.sets.len()],
            uncovered: fam.sets.len(),
            forbidden: vec![false; fam.universe_size],
            chosen: Vec::new(),
            best: None,
            nodes: 0,
            scratch: BitSet::new(fam.universe_size),
        }
    }

    fn choose(&mut self, e: usize) {
        for &t in &self.fam.incidence[e] {
            if self.cover[t] == 0 {
                self.uncovered -= 1;
            }
            self.cover[t] += 1;
        }
        self.chosen.push(e);
    }

    fn unchoose(&mut self, e: usize) {
        for &t in &self.fam.incidence[e] {
            self.cover[t] -= 1;
            if self.cover[t] == 0 {
                self.uncovered += 1;
            }
        }
        self.chosen.pop();
    }

    /// Greedy packing of unhit sets pairwise disjoint on allowed elements;
    /// each needs its own element.
    fn packing_bound(&mut self) -> usize {
        self.scratch = BitSet::new(self.fam.universe_size);
        let mut packed = 0;
        for (t, set) in self.fam.sets.iter().enumerate() {
            if self.cover[t] > 0 {
                continue;
            }
            let allowed = || set.iter().copied().filter(|&e| !self.forbidden[e]);
            if allowed().all(|e| !self.scratch.contains(e)) {
                let picks: Vec<usize> = allowed().collect();
                for e in picks {
                    self.scratch.insert(e);
                }
                packed += 1;
            }
        }
        packed
    }

    fn dfs(&mut self) {
        self.nodes += 1;
        if self.nodes % DEADLINE_CHECK_INTERVAL == 0 {
            if let Some(deadline) = self.shared.deadline {
                if Instant::now() >= deadline {
                    self.shared.aborted.store(true, Ordering::Relaxed);
                }
            }
        }
        if self.shared.aborted.load(Ordering::Relaxed) {
            return;
        }
        if self.uncovered == 0 {
            let mut sol = self.chosen.clone();
            sol.sort_unstable();
            self.shared.best.fetch_min(sol.len(), Ordering::Relaxed);
            self.best = Some(sol);
            return;
        }
        let local_best = self.best.as_ref().map_or(usize::MAX, Vec::len);
        let shared_best = self.shared.best.load(Ordering::Relaxed);
        let degree_bound = self.uncovered.div_ceil(self.fam.max_sets_per_element);
        let admissible = |lb: usize| lb < local_best && lb <= shared_best;
        if !admissible(self.chosen.len() + degree_bound) {
            return;
        }
        if !admissible(self.chosen.len() + self.packing_bound()) {
            return;
        }

        // fail first: the unhit set with the fewest allowed elements
        let mut pick: Option<(usize, usize)> = None;
        for (t, set) in self.fam.sets.iter().enumerate() {
            if self.cover[t] > 0 {
                continue;
            }
            let free = set.iter().filter(|&&e| !self.forbidden[e]).count();
            if pick.is_none_or(|(_, f)| free < f) {
                pick = Some((t, free));
            }
        }
        let (t, free) = pick.expect("some set is unhit");
        if free == 0 {
            return;
        }
        let branch: Vec<usize> = self.fam.sets[t]
            .iter()
            .copied()
            .filter(|&e| !self.forbidden[e])
            .collect();
        for &e in &branch {
            self.choose(e);
            self.dfs();
            self.unchoose(e);
            self.forbidden[e] = true;
        }
        for &e in &branch {
            self.forbidden[e] = false;
        }
    }
}

/// A deadline `budget` from now.
pub fn deadline_after(budget: Option<Duration>) -> Option<Instant> {
    budget.map(|b| Instant::now() + b)
}
