use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_pattern, Certificate, Verifier};
use crate::abelian::{Group, GroupSubset};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Budget and seed for [`search_avoider`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    pub max_random_restarts: usize,
    pub max_repair_steps: usize,
    /// Largest group order for which exhaustive search is attempted.
    pub exact_fallback_limit: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            max_random_restarts: 64,
            max_repair_steps: 100_000,
            exact_fallback_limit: 64,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        if self.max_random_restarts == 0
            || self.max_repair_steps == 0
            || self.exact_fallback_limit == 0
        {
            return Err(Error::Range("search limits must be at least 1".into()));
        }
        Ok(())
    }
}

/// Finds an avoiding set of exactly `target` elements.
///
/// Uniform random `target`-subsets are tried first. The last sample is then
/// repaired: while some translate lies inside it, one element of that
/// translate is swapped for a uniform element outside. Groups no larger than
/// `exact_fallback_limit` finally get an exhaustive depth-first search.
///
/// Below `ceil(|G|^(1 - 1/|S|))` an avoiding set of every size exists when
/// `S` has trivial stabilizer, so the fallback always succeeds there. Other
/// patterns are accepted; success is then not guaranteed.
pub fn search_avoider(
    group: &Group,
    pattern: &GroupSubset,
    target: usize,
    cfg: &SearchConfig,
) -> Result<Certificate> {
    check_pattern(group, pattern)?;
    cfg.validate()?;
    let n = group.size();
    if target > n {
        return Err(Error::Range(format!("target {target} exceeds |G| = {n}")));
    }
    let verifier = Verifier::new(pattern)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut current = BitSet::new(n);
    for _ in 0..cfg.max_random_restarts {
        current = BitSet::new(n);
        for i in index::sample(&mut rng, n, target) {
            current.insert(i);
        }
        if verifier.first_violation(&current).is_none() {
            return Ok(verifier.certify(GroupSubset::from_bits(group, current)));
        }
    }

    if let Some(found) = repair(&verifier, group, current, cfg.max_repair_steps, &mut rng) {
        return Ok(verifier.certify(GroupSubset::from_bits(group, found)));
    }

    if n <= cfg.exact_fallback_limit {
        if let Some(found) = exhaustive(&verifier, n, target) {
            return Ok(verifier.certify(GroupSubset::from_bits(group, found)));
        }
    }
    Err(Error::SearchExhausted { target })
}

fn repair(
    verifier: &Verifier,
    group: &Group,
    mut current: BitSet,
    max_steps: usize,
    rng: &mut ChaCha8Rng,
) -> Option<BitSet> {
    let elems = verifier.pattern_elems();
    for _ in 0..max_steps {
        let Some(g) = verifier.first_violation(&current) else {
            return Some(current);
        };
        let out = group.add_index(g, elems[rng.random_range(0..elems.len())]);
        current.remove(out);
        let outside: Vec<usize> = current.complement().iter().filter(|&x| x != out).collect();
        if outside.is_empty() {
            return None;
        }
        current.insert(outside[rng.random_range(0..outside.len())]);
    }
    verifier
        .first_violation(&current)
        .is_none()
        .then_some(current)
}

/// Depth-first search over elements in ascending order, including before excluding.
fn exhaustive(verifier: &Verifier, n: usize, target: usize) -> Option<BitSet> {
    let elems = verifier.pattern_elems();
    let group = verifier.pattern.group();
    let translates = verifier.representatives();
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, &g) in translates.iter().enumerate() {
        for &s in elems {
            touching[group.add_index(g, s)].push(t);
        }
    }
    let mut dfs = Dfs {
        touching,
        filled: vec![0; translates.len()],
        full: elems.len(),
        chosen: BitSet::new(n),
        target,
    };
    dfs.run(0, 0).then_some(dfs.chosen)
}

struct Dfs {
    touching: Vec<Vec<usize>>,
    /// Chosen elements inside each translate.
    filled: Vec<usize>,
    full: usize,
    chosen: BitSet,
    target: usize,
}

impl Dfs {
    fn run(&mut self, next: usize, count: usize) -> bool {
        if count == self.target {
            return true;
        }
        let n = self.touching.len();
        if n - next < self.target - count {
            return false;
        }
        if self.touching[next]
            .iter()
            .all(|&t| self.filled[t] + 1 < self.full)
        {
            for &t in &self.touching[next] {
                self.filled[t] += 1;
            }
            self.chosen.insert(next);
            if self.run(next + 1, count + 1) {
                return true;
            }
            self.chosen.remove(next);
            for &t in &self.touching[next] {
                self.filled[t] -= 1;
            }
        }
        self.run(next + 1, count)
    }
}
