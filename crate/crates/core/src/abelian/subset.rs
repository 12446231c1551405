use std::fmt;

use crate::abelian::group::{Element, Group};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A subset of a group, stored as a bitset over flat indices.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupSubset {
    group: Group,
    bits: BitSet,
}

impl GroupSubset {
    pub fn empty(group: &Group) -> Self {
        GroupSubset {
            group: group.clone(),
            bits: BitSet::new(group.size()),
        }
    }

    pub fn full(group: &Group) -> Self {
        GroupSubset {
            group: group.clone(),
            bits: BitSet::full(group.size()),
        }
    }

    /// Builds a subset from flat indices; duplicates are ignored.
    pub fn from_indices<I>(group: &Group, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut out = GroupSubset::empty(group);
        for i in indices {
            if i >= group.size() {
                return Err(Error::InvalidElement(format!(
                    "index {i} outside group of order {}",
                    group.size()
                )));
            }
            out.bits.insert(i);
        }
        Ok(out)
    }

    pub fn from_elements<'a, I>(group: &Group, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Element>,
    {
        let mut out = GroupSubset::empty(group);
        for e in elements {
            if e.group() != group {
                return Err(Error::DomainMismatch);
            }
            out.bits.insert(e.flat());
        }
        Ok(out)
    }

    pub(crate) fn from_bits(group: &Group, bits: BitSet) -> Self {
        debug_assert_eq!(bits.capacity(), group.size());
        GroupSubset {
            group: group.clone(),
            bits,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn contains(&self, flat: usize) -> bool {
        self.bits.contains(flat)
    }

    pub fn insert(&mut self, flat: usize) -> bool {
        self.bits.insert(flat)
    }

    pub fn remove(&mut self, flat: usize) -> bool {
        self.bits.remove(flat)
    }

    /// Flat indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.bits.iter().collect()
    }

    fn same_group(&self, other: &GroupSubset) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::DomainMismatch)
        }
    }

    pub fn is_subset(&self, other: &GroupSubset) -> Result<bool> {
        self.same_group(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    pub fn union(&self, other: &GroupSubset) -> Result<GroupSubset> {
        self.same_group(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(GroupSubset::from_bits(&self.group, bits))
    }

    pub fn intersection(&self, other: &GroupSubset) -> Result<GroupSubset> {
        self.same_group(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(GroupSubset::from_bits(&self.group, bits))
    }

    pub fn complement(&self) -> GroupSubset {
        GroupSubset::from_bits(&self.group, self.bits.complement())
    }

    /// `g + S`.
    pub fn translate(&self, g: &Element) -> Result<GroupSubset> {
        if g.group() != &self.group {
            return Err(Error::DomainMismatch);
        }
        Ok(self.translate_index(g.flat()))
    }

    pub(crate) fn translate_index(&self, g: usize) -> GroupSubset {
        let mut bits = BitSet::new(self.group.size());
        for s in self.bits.iter() {
            bits.insert(self.group.add_index(g, s));
        }
        GroupSubset::from_bits(&self.group, bits)
    }

    /// Whether `g + self` lies inside `host`, without materializing the translate.
    #[inline]
    pub(crate) fn translate_fits(&self, elems: &[usize], g: usize, host: &BitSet) -> bool {
        elems
            .iter()
            .all(|&s| host.contains(self.group.add_index(g, s)))
    }
}

impl fmt::Debug for GroupSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in {}", self.bits, self.group)
    }
}

/// `g + S`.
pub fn translate_subset(set: &GroupSubset, g: &Element) -> Result<GroupSubset> {
    set.translate(g)
}

/// A subset known to be a subgroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup(GroupSubset);

impl Subgroup {
    /// Validates the subgroup axioms exhaustively.
    pub fn try_new(set: GroupSubset) -> Result<Subgroup> {
        let g = set.group().clone();
        if !set.contains(0) {
            return Err(Error::NotSubgroup("missing the identity".into()));
        }
        let elems = set.indices();
        for &a in &elems {
            if !set.contains(g.neg_index(a)) {
                return Err(Error::NotSubgroup(format!("{a} has no inverse in the set")));
            }
            for &b in &elems {
                if !set.contains(g.add_index(a, b)) {
                    return Err(Error::NotSubgroup(format!("{a} + {b} leaves the set")));
                }
            }
        }
        Ok(Subgroup(set))
    }

    pub(crate) fn new_unchecked(set: GroupSubset) -> Subgroup {
        debug_assert!(Subgroup::try_new(set.clone()).is_ok());
        Subgroup(set)
    }

    pub fn trivial(group: &Group) -> Subgroup {
        let mut set = GroupSubset::empty(group);
        set.insert(0);
        Subgroup(set)
    }

    pub fn whole(group: &Group) -> Subgroup {
        Subgroup(GroupSubset::full(group))
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn group(&self) -> &Group {
        self.0.group()
    }

    pub fn as_subset(&self) -> &GroupSubset {
        &self.0
    }

    pub fn into_subset(self) -> GroupSubset {
        self.0
    }

    /// The coset `a + H` as flat indices, ascending.
    pub fn coset(&self, a: usize) -> Vec<usize> {
        let g = self.group();
        let mut out: Vec<usize> = self.0.iter().map(|h| g.add_index(a, h)).collect();
        out.sort_unstable();
        out
    }
}

/// `H_G(S) = { h : h + S = S }`.
///
/// Any stabilizing `h` maps the least element `s0` of `S` into `S`, so only the
/// `|S|` candidates `t - s0` with `t` in `S` are tested.
pub fn stabilizer(set: &GroupSubset) -> Result<Subgroup> {
    let s0 = set.bits().first().ok_or(Error::EmptySet)?;
    let g = set.group();
    let elems = set.indices();
    let mut out = GroupSubset::empty(g);
    for &t in &elems {
        let h = g.sub_index(t, s0);
        if set.translate_fits(&elems, h, set.bits()) {
            out.insert(h);
        }
    }
    Ok(Subgroup::new_unchecked(out))
}

/// Smallest subgroup containing `gens`, by closure under addition.
pub fn subgroup_generated(group: &Group, gens: &[Element]) -> Result<Subgroup> {
    if gens.iter().any(|e| e.group() != group) {
        return Err(Error::DomainMismatch);
    }
    let gens: Vec<usize> = gens.iter().map(Element::flat).collect();
    let mut set = GroupSubset::empty(group);
    set.insert(0);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &gen in &gens {
            let y = group.add_index(x, gen);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    Ok(Subgroup::new_unchecked(set))
}
