//! Fixtures shared by the benchmarks.

use shiftfree::{subgroup_generated, Group, GroupSubset};

/// `Z2024` and the union of the cosets `r + H`, `r in 0..n`, of its
/// order-8 subgroup `H`.
pub fn c2024_cosets(n: usize) -> (Group, GroupSubset) {
    let g = Group::cyclic(2024).expect("valid order");
    let h = subgroup_generated(&g, &[g.element(2024 / 8).expect("in range")]).expect("same group");
    let mut s = GroupSubset::empty(&g);
    for r in 0..n {
        let coset = h
            .as_subset()
            .translate(&g.element(r).expect("in range"))
            .expect("same group");
        s = s.union(&coset).expect("same group");
    }
    (g, s)
}

/// A pattern in `Z_n` with trivial stabilizer, for the exact solver.
pub fn sidon_like(n: usize) -> (Group, GroupSubset) {
    let g = Group::cyclic(n).expect("valid order");
    let s =
        GroupSubset::from_indices(&g, [0, 1, 3, 7].into_iter().map(|x| x % n)).expect("in range");
    (g, s)
}
