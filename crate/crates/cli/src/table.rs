use shiftfree::{bounds_report, solve, ExactConfig, Group, Method};

use crate::report::{GroupDoc, MetaDoc, TableDoc, TableRow};
use crate::spec::parse_set;

pub const EXAMPLE_ORDER: usize = 2024;
pub const EXAMPLE_SUBGROUP: usize = 8;
pub const EXAMPLE_ROWS: usize = 10;

/// Bounds for `S` the union of `n` cosets (representatives `0..n`) of the
/// order-8 subgroup of `Z2024`, for `n = 1..=10`. Rows whose pattern is a
/// single coset carry the exact value.
pub fn example_table(seed: u64) -> TableDoc {
    let group = Group::cyclic(EXAMPLE_ORDER).expect("valid order");
    let rows = (1..=EXAMPLE_ROWS)
        .map(|n| {
            let reps: Vec<String> = (0..n).map(|r| r.to_string()).collect();
            let spec = format!("cosets(order={EXAMPLE_SUBGROUP}; reps={})", reps.join(","));
            let set = parse_set(&group, &spec).expect("well-formed coset spec");
            let report = bounds_report(&set).expect("nonempty pattern");
            let exact = (report.h == report.s).then(|| {
                let r = solve(&group, &set, &ExactConfig::default()).expect("closed form");
                debug_assert_eq!(r.method, Method::Corollary);
                r.n_value as u64
            });
            TableRow {
                n,
                s: report.s,
                h: report.h,
                thm2_lower: report.thm2_lower,
                upper: report.upper,
                exact,
            }
        })
        .collect();
    TableDoc {
        group: GroupDoc::new(&group),
        subgroup_order: EXAMPLE_SUBGROUP,
        rows,
        meta: MetaDoc::new(seed),
    }
}
