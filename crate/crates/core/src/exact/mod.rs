//! Exact `N(G, S)` on small groups.
//!
//! `B` avoids every translate of `S` exactly when `G \ B` meets every
//! translate, so the largest avoiding set is the complement of a minimum
//! hitting set of the translate family and `N(G, S) = |G| - tau + 1`.

mod hitting_set;
mod naive;

use std::time::{Duration, Instant};

pub use hitting_set::{min_hitting_set, min_hitting_set_with, HittingSet, Limits};
pub use naive::{naive_exact, NAIVE_LIMIT};

use crate::abelian::{quotient, stabilizer, Group, GroupSubset};
use crate::bounds::{bounds_report, thm1_lower};
use crate::constructions::construct_thm1;
use crate::error::{Error, Result};

/// The translates `g' + S`, one per coset of the stabilizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslateFamily {
    pub(crate) universe_size: usize,
    pub(crate) sets: Vec<Vec<usize>>,
    pub(crate) incidence: Vec<Vec<usize>>,
    pub(crate) set_size: usize,
    /// `|S| / |H|`: every element lies in exactly this many sets.
    pub(crate) max_sets_per_element: usize,
    group: Group,
}

impl TranslateFamily {
    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    /// Elements of the `i`-th translate, ascending.
    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn set_as_subset(&self, i: usize) -> GroupSubset {
        GroupSubset::from_indices(&self.group, self.sets[i].iter().copied())
            .expect("translate inside the group")
    }

    /// Indices of the sets containing element `e`.
    pub fn sets_containing(&self, e: usize) -> &[usize] {
        &self.incidence[e]
    }

    pub fn is_hit_by(&self, hitting: &GroupSubset) -> bool {
        self.sets
            .iter()
            .all(|s| s.iter().any(|&e| hitting.contains(e)))
    }
}

/// The translates of `S` over the canonical transversal of its stabilizer.
pub fn translate_family(group: &Group, pattern: &GroupSubset) -> Result<TranslateFamily> {
    if pattern.group() != group {
        return Err(Error::DomainMismatch);
    }
    let h = stabilizer(pattern)?;
    let q = quotient(group, &h)?;
    let elems = pattern.indices();
    let mut incidence = vec![Vec::new(); group.size()];
    let sets: Vec<Vec<usize>> = q
        .representatives()
        .iter()
        .enumerate()
        .map(|(t, &g)| {
            let mut set: Vec<usize> = elems.iter().map(|&s| group.add_index(g, s)).collect();
            set.sort_unstable();
            for &e in &set {
                incidence[e].push(t);
            }
            set
        })
        .collect();
    Ok(TranslateFamily {
        universe_size: group.size(),
        sets,
        incidence,
        set_size: elems.len(),
        max_sets_per_element: elems.len() / h.order(),
        group: group.clone(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BranchAndBound,
    /// `S` is a coset, so `N = (|S| - 1)/|S| |G| + 1` holds exactly.
    Corollary,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::BranchAndBound => "branch-and-bound",
            Method::Corollary => "corollary",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactConfig {
    /// Largest group order handed to the solver.
    pub max_group_size: usize,
    pub time_limit: Option<Duration>,
    pub threads: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            max_group_size: 40,
            time_limit: None,
            threads: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub n_value: usize,
    /// Avoiding set of size `n_value - 1`.
    pub max_avoider: GroupSubset,
    /// Complement of `max_avoider`; meets every translate.
    pub min_hitting_set: GroupSubset,
    /// The search ran to completion.
    pub optimal: bool,
    pub method: Method,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// `N(G, S)` by minimum hitting set.
pub fn exact_n(group: &Group, pattern: &GroupSubset, cfg: &ExactConfig) -> Result<ExactResult> {
    let start = Instant::now();
    let fam = translate_family(group, pattern)?;
    if group.size() > cfg.max_group_size {
        return Err(Error::SizeLimit {
            size: group.size(),
            limit: cfg.max_group_size,
        });
    }
    let limits = Limits {
        deadline: hitting_set::deadline_after(cfg.time_limit),
        threads: cfg.threads.max(1),
    };
    let hs = min_hitting_set_with(&fam, limits)?;
    let hitting = GroupSubset::from_indices(group, hs.elements.iter().copied())?;
    Ok(ExactResult {
        n_value: group.size() - hs.size() + 1,
        max_avoider: hitting.complement(),
        min_hitting_set: hitting,
        optimal: true,
        method: Method::BranchAndBound,
        nodes: hs.nodes,
        elapsed: start.elapsed(),
    })
}

/// Like [`exact_n`], but answers coset patterns in closed form at any size.
pub fn solve(group: &Group, pattern: &GroupSubset, cfg: &ExactConfig) -> Result<ExactResult> {
    let start = Instant::now();
    let report = bounds_report(pattern)?;
    if report.h != report.s {
        return exact_n(group, pattern, cfg);
    }
    let cert = construct_thm1(group, pattern)?;
    debug_assert!(cert.verified);
    let n_value = thm1_lower(report.group_size, report.h)? as usize;
    debug_assert_eq!(cert.size() + 1, n_value);
    Ok(ExactResult {
        n_value,
        min_hitting_set: cert.avoiding_set.complement(),
        max_avoider: cert.avoiding_set,
        optimal: true,
        method: Method::Corollary,
        nodes: 0,
        elapsed: start.elapsed(),
    })
}
