use crate::abelian::{Group, GroupSubset};
use crate::error::{Error, Result};

pub const NAIVE_LIMIT: usize = 16;

/// `N(G, S)` by enumerating all `2^|G|` subsets and testing each against
/// all `|G|` translates. Shares no code with the hitting-set path.
pub fn naive_exact(group: &Group, pattern: &GroupSubset) -> Result<usize> {
    if pattern.group() != group {
        return Err(Error::DomainMismatch);
    }
    if pattern.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = group.size();
    if n > NAIVE_LIMIT {
        return Err(Error::SizeLimit {
            size: n,
            limit: NAIVE_LIMIT,
        });
    }
    let translates: Vec<u32> = group
        .elements()
        .map(|g| {
            pattern
                .iter()
                .map(|s| 1u32 << group.add(&g, &group.element(s).unwrap()).unwrap().flat())
                .fold(0, |acc, bit| acc | bit)
        })
        .collect();
    let best = (0u32..1 << n)
        .filter(|&a| translates.iter().all(|&t| t & !a != 0))
        .map(u32::count_ones)
        .max()
        .expect("the empty set avoids");
    Ok(best as usize + 1)
}
