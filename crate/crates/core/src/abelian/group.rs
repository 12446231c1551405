use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite abelian group.
///
/// Two presentations are supported. A product of cyclic factors
/// `Z_{m1} x ... x Z_{mk}` addresses elements by the little-endian mixed-radix
/// index `a1 + m1*(a2 + m2*(...))`. A quotient `G/H` addresses each coset by
/// its position in the ascending list of minimal coset representatives, and
/// adds classes by adding representatives in `G` and projecting back.
///
/// Cloning is cheap; the presentation is shared.
#[derive(Clone)]
pub struct Group(Arc<Presentation>);

#[derive(PartialEq, Eq)]
enum Presentation {
    Product {
        orders: Vec<usize>,
        size: usize,
    },
    Quotient {
        base: Group,
        /// Minimal representative of each class, ascending.
        reps: Vec<usize>,
        /// Class index of each base element.
        class_of: Arc<[usize]>,
    },
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Group {}

impl Group {
    /// Builds `Z_{m1} x ... x Z_{mk}`. Factors of order one are kept.
    pub fn new(orders: &[usize]) -> Result<Group> {
        if orders.is_empty() {
            return Err(Error::InvalidGroup("no cyclic factors given".into()));
        }
        if let Some(pos) = orders.iter().position(|&m| m == 0) {
            return Err(Error::InvalidGroup(format!("factor {pos} has order 0")));
        }
        let size = orders
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m))
            .ok_or_else(|| Error::InvalidGroup("group order overflows".into()))?;
        Ok(Group(Arc::new(Presentation::Product {
            orders: orders.to_vec(),
            size,
        })))
    }

    pub fn cyclic(order: usize) -> Result<Group> {
        Group::new(&[order])
    }

    pub(crate) fn quotient_of(base: Group, reps: Vec<usize>, class_of: Arc<[usize]>) -> Group {
        Group(Arc::new(Presentation::Quotient {
            base,
            reps,
            class_of,
        }))
    }

    #[inline]
    pub fn size(&self) -> usize {
        match &*self.0 {
            Presentation::Product { size, .. } => *size,
            Presentation::Quotient { reps, .. } => reps.len(),
        }
    }

    /// Cyclic factor orders, or `None` for a quotient presentation.
    pub fn orders(&self) -> Option<&[usize]> {
        match &*self.0 {
            Presentation::Product { orders, .. } => Some(orders),
            Presentation::Quotient { .. } => None,
        }
    }

    /// True when the presentation has at most one factor of order above one.
    pub fn is_cyclic_presentation(&self) -> bool {
        self.orders()
            .is_some_and(|o| o.iter().filter(|&&m| m > 1).count() <= 1)
    }

    #[inline]
    pub fn add_index(&self, a: usize, b: usize) -> usize {
        match &*self.0 {
            Presentation::Product { orders, .. } => {
                if let [m] = orders.as_slice() {
                    let s = a + b;
                    return if s >= *m { s - m } else { s };
                }
                let (mut a, mut b) = (a, b);
                let mut out = 0;
                let mut stride = 1;
                for &m in orders {
                    let mut d = a % m + b % m;
                    if d >= m {
                        d -= m;
                    }
                    out += d * stride;
                    stride *= m;
                    a /= m;
                    b /= m;
                }
                out
            }
            Presentation::Quotient {
                base,
                reps,
                class_of,
            } => class_of[base.add_index(reps[a], reps[b])],
        }
    }

    #[inline]
    pub fn neg_index(&self, a: usize) -> usize {
        match &*self.0 {
            Presentation::Product { orders, .. } => {
                let mut a = a;
                let mut out = 0;
                let mut stride = 1;
                for &m in orders {
                    let d = a % m;
                    out += if d == 0 { 0 } else { m - d } * stride;
                    stride *= m;
                    a /= m;
                }
                out
            }
            Presentation::Quotient {
                base,
                reps,
                class_of,
            } => class_of[base.neg_index(reps[a])],
        }
    }

    #[inline]
    pub fn sub_index(&self, a: usize, b: usize) -> usize {
        self.add_index(a, self.neg_index(b))
    }

    /// Coordinates of a flat index. A quotient has one coordinate, the class index.
    pub fn coords_of(&self, flat: usize) -> Vec<usize> {
        match &*self.0 {
            Presentation::Product { orders, .. } => {
                let mut rest = flat;
                orders
                    .iter()
                    .map(|&m| {
                        let d = rest % m;
                        rest /= m;
                        d
                    })
                    .collect()
            }
            Presentation::Quotient { .. } => vec![flat],
        }
    }

    pub fn flat_of(&self, coords: &[usize]) -> Result<usize> {
        match &*self.0 {
            Presentation::Product { orders, .. } => {
                if coords.len() != orders.len() {
                    return Err(Error::InvalidElement(format!(
                        "expected {} coordinates, got {}",
                        orders.len(),
                        coords.len()
                    )));
                }
                let mut flat = 0;
                let mut stride = 1;
                for (i, (&a, &m)) in coords.iter().zip(orders).enumerate() {
                    if a >= m {
                        return Err(Error::InvalidElement(format!(
                            "coordinate {i} is {a}, must be below {m}"
                        )));
                    }
                    flat += a * stride;
                    stride *= m;
                }
                Ok(flat)
            }
            Presentation::Quotient { .. } => match coords {
                [c] if *c < self.size() => Ok(*c),
                _ => Err(Error::InvalidElement(format!(
                    "{coords:?} is not a class index"
                ))),
            },
        }
    }

    pub fn zero(&self) -> Element {
        Element {
            group: self.clone(),
            flat: 0,
        }
    }

    pub fn element(&self, flat: usize) -> Result<Element> {
        if flat >= self.size() {
            return Err(Error::InvalidElement(format!(
                "index {flat} outside group of order {}",
                self.size()
            )));
        }
        Ok(Element {
            group: self.clone(),
            flat,
        })
    }

    pub fn element_from_coords(&self, coords: &[usize]) -> Result<Element> {
        let flat = self.flat_of(coords)?;
        Ok(Element {
            group: self.clone(),
            flat,
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size()).map(|flat| Element {
            group: self.clone(),
            flat,
        })
    }

    fn check(&self, e: &Element) -> Result<()> {
        if e.group == *self {
            Ok(())
        } else {
            Err(Error::DomainMismatch)
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(Element {
            group: self.clone(),
            flat: self.add_index(a.flat, b.flat),
        })
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        Ok(Element {
            group: self.clone(),
            flat: self.neg_index(a.flat),
        })
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({self})")
    }
}

/// Canonical text form: `Z4xZ2`, with order-one factors dropped (`Z1` when
/// nothing remains). Quotients print as `(G)/H<order>`.
impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Presentation::Product { orders, .. } => {
                let parts: Vec<String> = orders
                    .iter()
                    .filter(|&&m| m > 1)
                    .map(|m| format!("Z{m}"))
                    .collect();
                if parts.is_empty() {
                    f.write_str("Z1")
                } else {
                    f.write_str(&parts.join("x"))
                }
            }
            Presentation::Quotient { base, reps, .. } => {
                write!(f, "({base})/H{}", base.size() / reps.len())
            }
        }
    }
}

/// An element of a [`Group`], identified by its flat index.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    group: Group,
    flat: usize,
}

impl Element {
    #[inline]
    pub fn flat(&self) -> usize {
        self.flat
    }

    pub fn coords(&self) -> Vec<usize> {
        self.group.coords_of(self.flat)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.flat, self.coords())
    }
}
