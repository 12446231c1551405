use std::sync::Arc;

use crate::abelian::group::{Element, Group};
use crate::abelian::subset::{GroupSubset, Subgroup};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Coset partition of `G` by `H`: minimal representatives (ascending) and the
/// class index of every element.
fn partition(group: &Group, h: &Subgroup) -> (Vec<usize>, Vec<usize>) {
    let n = group.size();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::with_capacity(n / h.order());
    let members = h.as_subset().indices();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let class = reps.len();
        reps.push(x);
        for &y in &members {
            class_of[group.add_index(x, y)] = class;
        }
    }
    (reps, class_of)
}

/// The canonical transversal of `G/H`: the least flat index of every coset, ascending.
pub fn transversal(group: &Group, h: &Subgroup) -> Result<Vec<Element>> {
    if h.group() != group {
        return Err(Error::DomainMismatch);
    }
    let (reps, _) = partition(group, h);
    reps.into_iter().map(|r| group.element(r)).collect()
}

/// `G/H` as a group of coset classes, with the projection from `G`.
#[derive(Clone, Debug)]
pub struct QuotientView {
    base: Group,
    modulus: Subgroup,
    quotient: Group,
    reps: Vec<usize>,
    projection: Arc<[usize]>,
}

impl QuotientView {
    pub fn base(&self) -> &Group {
        &self.base
    }

    pub fn modulus(&self) -> &Subgroup {
        &self.modulus
    }

    pub fn quotient(&self) -> &Group {
        &self.quotient
    }

    /// Class index of a base element.
    #[inline]
    pub fn project(&self, flat: usize) -> usize {
        self.projection[flat]
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    /// Minimal base representative of a class.
    pub fn representative(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    /// Sum of two classes: add representatives in the base, then project.
    pub fn class_sum(&self, a: usize, b: usize) -> usize {
        self.quotient.add_index(a, b)
    }

    /// `{ b in G : b + H in classes }`.
    pub fn preimage(&self, classes: &GroupSubset) -> Result<GroupSubset> {
        if classes.group() != &self.quotient {
            return Err(Error::DomainMismatch);
        }
        let mut bits = BitSet::new(self.base.size());
        for (x, &c) in self.projection.iter().enumerate() {
            if classes.contains(c) {
                bits.insert(x);
            }
        }
        Ok(GroupSubset::from_bits(&self.base, bits))
    }
}

pub fn quotient(group: &Group, h: &Subgroup) -> Result<QuotientView> {
    if h.group() != group {
        return Err(Error::DomainMismatch);
    }
    let (reps, class_of) = partition(group, h);
    let projection: Arc<[usize]> = class_of.into();
    let quotient = Group::quotient_of(group.clone(), reps.clone(), projection.clone());
    Ok(QuotientView {
        base: group.clone(),
        modulus: h.clone(),
        quotient,
        reps,
        projection,
    })
}

/// `S/H` for `S` a union of `H`-cosets.
pub fn project_subset(set: &GroupSubset, q: &QuotientView) -> Result<GroupSubset> {
    if set.group() != q.base() {
        return Err(Error::DomainMismatch);
    }
    let mut out = GroupSubset::empty(q.quotient());
    for x in set.iter() {
        out.insert(q.project(x));
    }
    if out.len() * q.modulus().order() != set.len() {
        return Err(Error::NotCosetUnion);
    }
    Ok(out)
}
