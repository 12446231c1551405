//! Translate-avoidance numbers in finite abelian groups.
//!
//! For a finite abelian group `G` and a nonempty pattern `S`, `N(G, S)` is the
//! least `N` such that every `N`-element subset of `G` contains a translate
//! `g + S`. This crate evaluates closed-form lower and upper bounds on
//! `N(G, S)` in exact integer arithmetic, builds verified avoiding sets that
//! realize the lower bounds, and computes `N(G, S)` exactly on small groups
//! through a minimum hitting set search.

pub mod abelian;
pub mod bitset;
pub mod bounds;
pub mod constructions;
mod error;
pub mod exact;

pub use abelian::{
    project_subset, quotient, stabilizer, subgroup_generated, translate_subset, transversal,
    Element, Group, GroupSubset, QuotientView, Subgroup,
};
pub use bounds::{bounds_report, BoundsReport};
pub use constructions::{
    construct_thm1, construct_thm2, search_avoider, verify_avoids, Certificate, SearchConfig,
};
pub use error::{Error, Result};
pub use exact::{
    exact_n, naive_exact, solve, translate_family, ExactConfig, ExactResult, Method,
    TranslateFamily,
};
