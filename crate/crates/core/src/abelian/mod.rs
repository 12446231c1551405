//! Finite abelian groups as products of cyclic factors, with subsets,
//! stabilizers, transversals and quotients.

mod group;
mod quotient;
mod subset;

pub use group::{Element, Group};
pub use quotient::{project_subset, quotient, transversal, QuotientView};
pub use subset::{stabilizer, subgroup_generated, translate_subset, GroupSubset, Subgroup};
