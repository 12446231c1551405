//! Avoiding sets: sets `B` with `g + S` not contained in `B` for every `g`.
//!
//! Containment only needs checking at one representative per coset of the
//! stabilizer `H` of `S`, since `g + S = g' + S` whenever `g - g'` lies in `H`.

mod search;

pub use search::{search_avoider, SearchConfig};

use crate::abelian::{
    project_subset, quotient, stabilizer, Element, Group, GroupSubset, QuotientView,
};
use crate::bitset::BitSet;
use crate::bounds::ceil_root_power;
use crate::error::{Error, Result};

/// An avoiding-set candidate together with the outcome of checking it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub avoiding_set: GroupSubset,
    pub pattern: GroupSubset,
    pub verified: bool,
    /// Least transversal element `g` with `g + S` inside the candidate.
    pub witness: Option<Element>,
}

impl Certificate {
    pub fn size(&self) -> usize {
        self.avoiding_set.len()
    }
}

/// Translate containment test over the canonical transversal of `H_G(S)`.
pub(crate) struct Verifier {
    pattern: GroupSubset,
    elems: Vec<usize>,
    reps: Vec<usize>,
}

impl Verifier {
    pub(crate) fn new(pattern: &GroupSubset) -> Result<Verifier> {
        let h = stabilizer(pattern)?;
        let q = quotient(pattern.group(), &h)?;
        Ok(Verifier {
            pattern: pattern.clone(),
            elems: pattern.indices(),
            reps: q.representatives().to_vec(),
        })
    }

    pub(crate) fn pattern_elems(&self) -> &[usize] {
        &self.elems
    }

    pub(crate) fn representatives(&self) -> &[usize] {
        &self.reps
    }

    pub(crate) fn first_violation(&self, host: &BitSet) -> Option<usize> {
        if host.count() < self.elems.len() {
            return None;
        }
        self.reps
            .iter()
            .copied()
            .find(|&g| self.pattern.translate_fits(&self.elems, g, host))
    }

    pub(crate) fn certify(&self, set: GroupSubset) -> Certificate {
        let witness = self
            .first_violation(set.bits())
            .map(|g| set.group().element(g).expect("representative in range"));
        Certificate {
            avoiding_set: set,
            pattern: self.pattern.clone(),
            verified: witness.is_none(),
            witness,
        }
    }
}

fn check_pattern(group: &Group, pattern: &GroupSubset) -> Result<()> {
    if pattern.group() != group {
        return Err(Error::DomainMismatch);
    }
    if pattern.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(())
}

/// Checks that no translate of `pattern` lies inside `candidate`.
pub fn verify_avoids(candidate: &GroupSubset, pattern: &GroupSubset) -> Result<Certificate> {
    check_pattern(candidate.group(), pattern)?;
    Ok(Verifier::new(pattern)?.certify(candidate.clone()))
}

/// Largest flat index in every coset, indexed by class.
fn coset_maxima(q: &QuotientView) -> Vec<usize> {
    let mut last = vec![0; q.quotient().size()];
    for (x, &c) in q.projection().iter().enumerate() {
        last[c] = x;
    }
    last
}

/// `G` minus the largest element of every coset of `H_G(S)`.
pub fn construct_thm1(group: &Group, pattern: &GroupSubset) -> Result<Certificate> {
    check_pattern(group, pattern)?;
    let h = stabilizer(pattern)?;
    let q = quotient(group, &h)?;
    let mut set = GroupSubset::full(group);
    for x in coset_maxima(&q) {
        set.remove(x);
    }
    verify_avoids(&set, pattern)
}

/// The pieces of the lifted construction `B = B1 ∪ B2`.
#[derive(Clone, Debug)]
pub struct Thm2Construction {
    pub quotient: QuotientView,
    /// `S / H` inside the quotient.
    pub pattern_mod_h: GroupSubset,
    /// Avoiding set for `S / H` in `G / H`.
    pub quotient_avoider: GroupSubset,
    /// Full cosets over the quotient avoider.
    pub lifted: GroupSubset,
    /// Every other coset, each missing its largest element.
    pub punctured: GroupSubset,
    pub certificate: Certificate,
}

/// Builds an avoiding set of size `thm2_lower - 1`.
///
/// Finds an avoiding set for `S/H` in `G/H` of size
/// `ceil(|G/H|^(1 - 1/|S/H|)) - 1` with [`search_avoider`], takes its full
/// preimage, and adds every remaining coset with one element punched out.
pub fn build_thm2(
    group: &Group,
    pattern: &GroupSubset,
    cfg: &SearchConfig,
) -> Result<Thm2Construction> {
    check_pattern(group, pattern)?;
    let h = stabilizer(pattern)?;
    let q = quotient(group, &h)?;
    let pattern_mod_h = project_subset(pattern, &q)?;
    let classes = q.quotient().size() as u64;
    let s_prime = pattern_mod_h.len() as u32;
    let target = ceil_root_power(classes, s_prime - 1, s_prime) - 1;
    let quotient_avoider =
        search_avoider(q.quotient(), &pattern_mod_h, target as usize, cfg)?.avoiding_set;

    let lifted = q.preimage(&quotient_avoider)?;
    let maxima = coset_maxima(&q);
    let mut punctured = q.preimage(&quotient_avoider.complement())?;
    for c in quotient_avoider.complement().iter() {
        punctured.remove(maxima[c]);
    }
    let avoider = lifted.union(&punctured)?;
    let certificate = verify_avoids(&avoider, pattern)?;
    Ok(Thm2Construction {
        quotient: q,
        pattern_mod_h,
        quotient_avoider,
        lifted,
        punctured,
        certificate,
    })
}

pub fn construct_thm2(
    group: &Group,
    pattern: &GroupSubset,
    cfg: &SearchConfig,
) -> Result<Certificate> {
    build_thm2(group, pattern, cfg).map(|c| c.certificate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::subgroup_generated;
    use crate::bounds::thm2_lower;

    fn subset(g: &Group, idx: &[usize]) -> GroupSubset {
        GroupSubset::from_indices(g, idx.iter().copied()).unwrap()
    }

    /// Checks every `g` in `G`, no transversal shortcut.
    fn naive_avoids(candidate: &GroupSubset, pattern: &GroupSubset) -> bool {
        let g = candidate.group();
        g.elements()
            .all(|x| !pattern.translate(&x).unwrap().is_subset(candidate).unwrap())
    }

    #[test]
    fn verify_examples() {
        let z6 = Group::cyclic(6).unwrap();
        let s = subset(&z6, &[0, 1]);
        let c = verify_avoids(&subset(&z6, &[0, 2, 4]), &s).unwrap();
        assert!(c.verified && c.witness.is_none());

        let c = verify_avoids(&GroupSubset::full(&z6), &s).unwrap();
        assert!(!c.verified);
        assert_eq!(c.witness, Some(z6.zero()));

        let c = verify_avoids(&subset(&z6, &[0, 1, 3]), &s).unwrap();
        assert_eq!(c.witness.map(|w| w.flat()), Some(0));

        let c = verify_avoids(&subset(&z6, &[3]), &s).unwrap();
        assert!(c.verified);

        let z4 = Group::cyclic(4).unwrap();
        assert!(
            verify_avoids(&subset(&z4, &[0, 1]), &subset(&z4, &[0, 2]))
                .unwrap()
                .verified
        );
        assert_eq!(
            verify_avoids(&subset(&z4, &[0, 1]), &GroupSubset::empty(&z4)),
            Err(Error::EmptySet)
        );
        assert_eq!(
            verify_avoids(&subset(&z6, &[0, 1]), &subset(&z4, &[0])),
            Err(Error::DomainMismatch)
        );
    }

    #[test]
    fn verify_matches_naive_exhaustive() {
        for orders in [vec![6], vec![2, 3], vec![2, 4], vec![3, 3], vec![2, 2, 2]] {
            let g = Group::new(&orders).unwrap();
            let n = g.size();
            let all: Vec<GroupSubset> = (0u32..1 << n)
                .map(|m| GroupSubset::from_indices(&g, (0..n).filter(|i| m >> i & 1 == 1)).unwrap())
                .collect();
            for s in all.iter().skip(1) {
                let v = Verifier::new(s).unwrap();
                for a in &all {
                    let cert = v.certify(a.clone());
                    assert_eq!(cert.verified, naive_avoids(a, s), "{a:?} vs {s:?}");
                    if let Some(w) = cert.witness {
                        assert!(s.translate(&w).unwrap().is_subset(a).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn thm1_examples() {
        let z4 = Group::cyclic(4).unwrap();
        let c = construct_thm1(&z4, &subset(&z4, &[0, 2])).unwrap();
        assert_eq!(c.avoiding_set.indices(), [0, 1]);
        assert!(c.verified);

        let g = Group::new(&[2, 3]).unwrap();
        let c = construct_thm1(&g, &GroupSubset::full(&g)).unwrap();
        assert_eq!(c.avoiding_set.indices(), [0, 1, 2, 3, 4]);
        assert!(c.verified);

        let z6 = Group::cyclic(6).unwrap();
        let c = construct_thm1(&z6, &subset(&z6, &[0, 1])).unwrap();
        assert!(c.avoiding_set.is_empty() && c.verified);
    }

    #[test]
    fn thm2_coset_pattern_reduces_to_thm1() {
        let g = Group::cyclic(12).unwrap();
        let s = subset(&g, &[1, 5, 9]);
        let c = build_thm2(&g, &s, &SearchConfig::default()).unwrap();
        assert!(c.quotient_avoider.is_empty());
        assert_eq!(c.certificate.size(), 12 - 4);
        assert!(c.certificate.verified);
    }

    #[test]
    fn thm2_trivial_stabilizer_is_quotient_avoider() {
        let g = Group::cyclic(10).unwrap();
        let s = subset(&g, &[0, 1, 3]);
        let c = build_thm2(&g, &s, &SearchConfig::default()).unwrap();
        assert!(c.punctured.is_empty());
        // ceil(10^(2/3)) - 1 = 4
        assert_eq!(c.certificate.size(), 4);
        assert_eq!(c.lifted, c.certificate.avoiding_set);
        assert!(c.certificate.verified);
    }

    #[test]
    fn thm2_c2024_two_cosets() {
        let g = Group::cyclic(2024).unwrap();
        let h = subgroup_generated(&g, &[g.element(253).unwrap()]).unwrap();
        let s = h
            .as_subset()
            .union(&h.as_subset().translate(&g.element(1).unwrap()).unwrap())
            .unwrap();
        let c = build_thm2(&g, &s, &SearchConfig::default()).unwrap();
        assert_eq!(c.certificate.size(), 1786);
        assert_eq!(
            c.certificate.size() as u64,
            thm2_lower(2024, 8, 16).unwrap() - 1
        );
        assert!(c.certificate.verified);
        assert!(naive_avoids(&c.certificate.avoiding_set, &s));
    }

    #[test]
    fn thm2_parts_behave_as_in_the_argument() {
        let g = Group::new(&[4, 6]).unwrap();
        let h = subgroup_generated(&g, &[g.element_from_coords(&[2, 0]).unwrap()]).unwrap();
        let mut s = GroupSubset::empty(&g);
        for r in [0, 1, 4, 9] {
            s = s
                .union(&h.as_subset().translate(&g.element(r).unwrap()).unwrap())
                .unwrap();
        }
        let c = build_thm2(&g, &s, &SearchConfig::default()).unwrap();
        assert!(c.certificate.verified);
        let b = &c.certificate.avoiding_set;
        assert!(c.lifted.intersection(&c.punctured).unwrap().is_empty());
        for x in g.elements() {
            let t = s.translate(&x).unwrap();
            assert!(!t.is_subset(&c.lifted).unwrap());
            if !t.intersection(&c.punctured).unwrap().is_empty() {
                // the translate reaches a punctured coset and so misses its hole
                assert!(!t.is_subset(b).unwrap());
            }
        }
    }

    #[test]
    fn thm2_is_deterministic() {
        let g = Group::cyclic(91).unwrap();
        let s = subset(&g, &[0, 1, 5]);
        let cfg = SearchConfig {
            seed: 7,
            ..SearchConfig::default()
        };
        let a = construct_thm2(&g, &s, &cfg).unwrap();
        let b = construct_thm2(&g, &s, &cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.verified);
    }
}
