use proptest::prelude::*;
use shiftfree::bounds::{thm2_lower, upper_bound};
use shiftfree::constructions::build_thm2;
use shiftfree::exact::{min_hitting_set, translate_family};
use shiftfree::{
    construct_thm1, exact_n, naive_exact, quotient, stabilizer, subgroup_generated, verify_avoids,
    ExactConfig, Group, GroupSubset, SearchConfig,
};

fn small_groups() -> Vec<Group> {
    [
        vec![1],
        vec![2],
        vec![3],
        vec![4],
        vec![2, 2],
        vec![5],
        vec![6],
        vec![3, 2],
        vec![7],
        vec![8],
        vec![2, 4],
        vec![2, 2, 2],
    ]
    .iter()
    .map(|o| Group::new(o).unwrap())
    .collect()
}

fn from_mask(g: &Group, mask: u32) -> GroupSubset {
    GroupSubset::from_indices(g, (0..g.size()).filter(|i| mask >> i & 1 == 1)).unwrap()
}

#[test]
fn solver_agrees_with_enumeration_and_bounds() {
    for g in small_groups() {
        let n = g.size();
        for mask in 1u32..1 << n {
            let s = from_mask(&g, mask);
            let r = exact_n(&g, &s, &ExactConfig::default()).unwrap();
            assert_eq!(r.n_value, naive_exact(&g, &s).unwrap(), "{s:?}");

            let h = stabilizer(&s).unwrap().order() as u64;
            let (gs, ss) = (n as u64, s.len() as u64);
            let nv = r.n_value as u64;
            assert!(thm2_lower(gs, h, ss).unwrap() <= nv);
            assert!(nv <= upper_bound(gs, ss).unwrap());
            if h == ss {
                assert_eq!(nv, (ss - 1) * gs / ss + 1);
            }

            // complements of each other
            assert!(r
                .max_avoider
                .intersection(&r.min_hitting_set)
                .unwrap()
                .is_empty());
            assert_eq!(
                r.max_avoider.union(&r.min_hitting_set).unwrap(),
                GroupSubset::full(&g)
            );
            assert!(verify_avoids(&r.max_avoider, &s).unwrap().verified);
            assert!(translate_family(&g, &s)
                .unwrap()
                .is_hit_by(&r.min_hitting_set));
            assert!(r.n_value >= s.len());
        }
    }
}

#[test]
fn exact_value_is_translation_invariant() {
    let g = Group::new(&[2, 4]).unwrap();
    for mask in 1u32..1 << 8 {
        let s = from_mask(&g, mask);
        let base = exact_n(&g, &s, &ExactConfig::default()).unwrap().n_value;
        for t in g.elements() {
            let moved = s.translate(&t).unwrap();
            assert_eq!(
                exact_n(&g, &moved, &ExactConfig::default())
                    .unwrap()
                    .n_value,
                base
            );
        }
    }
}

#[test]
fn containment_does_not_depend_on_the_transversal() {
    // pick the largest element of each coset instead of the least
    let g = Group::new(&[2, 6]).unwrap();
    for smask in 1u32..1 << 12 {
        let s = from_mask(&g, smask);
        let h = stabilizer(&s).unwrap();
        let q = quotient(&g, &h).unwrap();
        let mut alt = vec![0; q.quotient().size()];
        for (x, &c) in q.projection().iter().enumerate() {
            alt[c] = x;
        }
        for amask in (0u32..1 << 12).step_by(37) {
            let a = from_mask(&g, amask);
            let via_alt = alt.iter().any(|&r| {
                s.translate(&g.element(r).unwrap())
                    .unwrap()
                    .is_subset(&a)
                    .unwrap()
            });
            assert_eq!(!via_alt, verify_avoids(&a, &s).unwrap().verified);
        }
    }
}

#[test]
fn hitting_set_on_z9_matches_enumeration() {
    // Z9 with S = {0,1,3}: every element hits three translates
    let g = Group::cyclic(9).unwrap();
    let s = GroupSubset::from_indices(&g, [0, 1, 3]).unwrap();
    let fam = translate_family(&g, &s).unwrap();
    let hs = min_hitting_set(&fam);
    let hit = GroupSubset::from_indices(&g, hs.elements.iter().copied()).unwrap();
    assert!(fam.is_hit_by(&hit));
    assert_eq!(g.size() - hs.size() + 1, naive_exact(&g, &s).unwrap());
}

/// A random group of order at most 512, a subgroup `H` with `|G/H| <= 64`,
/// and `S` a union of `H`-cosets.
fn instance() -> impl Strategy<Value = (Vec<usize>, Vec<usize>, Vec<usize>, u64)> {
    (
        prop::collection::vec(2usize..=16, 1..=3),
        prop::collection::vec(0usize..10_000, 1..=3),
        prop::collection::vec(0usize..10_000, 1..=6),
        any::<u64>(),
    )
        .prop_filter("order at most 512", |(o, _, _, _)| {
            o.iter().product::<usize>() <= 512
        })
}

fn build(orders: &[usize], gens: &[usize], reps: &[usize]) -> Option<(Group, GroupSubset)> {
    let g = Group::new(orders).unwrap();
    let gens: Vec<_> = gens
        .iter()
        .map(|&x| g.element(x % g.size()).unwrap())
        .collect();
    let h = subgroup_generated(&g, &gens).unwrap();
    if g.size() / h.order() > 64 {
        return None;
    }
    let mut s = GroupSubset::empty(&g);
    for &r in reps {
        s = s
            .union(
                &h.as_subset()
                    .translate(&g.element(r % g.size()).unwrap())
                    .unwrap(),
            )
            .unwrap();
    }
    Some((g, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructions_are_certified((orders, gens, reps, seed) in instance()) {
        let Some((g, s)) = build(&orders, &gens, &reps) else { return Ok(()); };
        let h = stabilizer(&s).unwrap().order();
        let c1 = construct_thm1(&g, &s).unwrap();
        prop_assert!(c1.verified);
        prop_assert_eq!(c1.size(), g.size() - g.size() / h);

        let cfg = SearchConfig { seed, ..SearchConfig::default() };
        let c2 = build_thm2(&g, &s, &cfg).unwrap();
        prop_assert!(c2.certificate.verified);
        let expected = thm2_lower(g.size() as u64, h as u64, s.len() as u64).unwrap() - 1;
        prop_assert_eq!(c2.certificate.size() as u64, expected);
        // no translate fits in the lifted part alone
        prop_assert!(verify_avoids(&c2.lifted, &s).unwrap().verified);
        prop_assert_eq!(build_thm2(&g, &s, &cfg).unwrap().certificate, c2.certificate);
    }
}
