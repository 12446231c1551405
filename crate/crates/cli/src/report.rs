//! Machine-readable documents and their text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use shiftfree::{BoundsReport, Group, GroupSubset, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub orders: Vec<usize>,
    pub size: usize,
}

impl GroupDoc {
    pub fn new(group: &Group) -> Self {
        GroupDoc {
            orders: group.orders().map(<[usize]>::to_vec).unwrap_or_default(),
            size: group.size(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetDoc {
    pub elements: Vec<usize>,
    pub size: usize,
}

impl SetDoc {
    pub fn new(set: &GroupSubset) -> Self {
        SetDoc {
            elements: set.indices(),
            size: set.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerDoc {
    pub elements: Vec<usize>,
    pub order: usize,
}

impl StabilizerDoc {
    pub fn new(h: &Subgroup) -> Self {
        StabilizerDoc {
            elements: h.as_subset().indices(),
            order: h.order(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub thm1_lower: u64,
    pub lemma_lower: u64,
    pub thm2_lower: u64,
    pub upper: u64,
    pub best_lower: u64,
    pub transversal_size: u64,
    /// Lower and upper bounds meet.
    pub coincide: bool,
}

impl BoundsDoc {
    pub fn new(r: &BoundsReport) -> Self {
        BoundsDoc {
            thm1_lower: r.thm1_lower,
            lemma_lower: r.lemma_lower,
            thm2_lower: r.thm2_lower,
            upper: r.upper,
            best_lower: r.best_lower,
            transversal_size: r.transversal_size(),
            coincide: r.is_tight(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactDoc {
    pub n: usize,
    pub method: String,
    pub avoider: Vec<usize>,
    pub hitting_set: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaDoc {
    pub seed: u64,
    pub version: String,
}

impl MetaDoc {
    pub fn new(seed: u64) -> Self {
        MetaDoc {
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// Output of `bounds` and `exact`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub group: GroupDoc,
    pub set: SetDoc,
    pub stabilizer: StabilizerDoc,
    pub bounds: BoundsDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactDoc>,
    pub meta: MetaDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub method: String,
    pub elements: Vec<usize>,
    pub size: usize,
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
}

/// Output of `construct`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructDoc {
    pub group: GroupDoc,
    pub set: SetDoc,
    pub stabilizer: StabilizerDoc,
    pub certificate: CertificateDoc,
    pub meta: MetaDoc,
}

/// Output of `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub group: GroupDoc,
    pub set: SetDoc,
    pub candidate: SetDoc,
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
    pub meta: MetaDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub s: u64,
    pub h: u64,
    pub thm2_lower: u64,
    pub upper: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<u64>,
}

impl TableRow {
    /// `=1772` when the value is known, `[1787, 1898]` otherwise.
    pub fn bracket(&self) -> String {
        match self.exact {
            Some(n) => format!("={n}"),
            None => format!("[{}, {}]", self.thm2_lower, self.upper),
        }
    }
}

/// Output of `table`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub group: GroupDoc,
    pub subgroup_order: usize,
    pub rows: Vec<TableRow>,
    pub meta: MetaDoc,
}

pub fn format_set(elements: &[usize]) -> String {
    let parts: Vec<String> = elements.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

/// How flat indices map to coordinates, for groups with several factors.
pub fn coordinate_legend(group: &Group) -> Option<String> {
    let orders = group.orders()?;
    if orders.len() < 2 {
        return None;
    }
    let mut terms = vec!["a1".to_string()];
    let mut stride = 1;
    for (i, pair) in orders.windows(2).enumerate() {
        stride *= pair[0];
        terms.push(format!("{stride}*a{}", i + 2));
    }
    let coords: Vec<String> = orders
        .iter()
        .enumerate()
        .map(|(i, m)| format!("a{} mod {m}", i + 1))
        .collect();
    Some(format!(
        "flat = {} for ({})",
        terms.join(" + "),
        coords.join(", ")
    ))
}

fn header(out: &mut String, group: &Group, set: &SetDoc, stab: &StabilizerDoc) {
    let _ = writeln!(out, "group        {group} (order {})", group.size());
    if let Some(legend) = coordinate_legend(group) {
        let _ = writeln!(out, "coordinates  {legend}");
    }
    let _ = writeln!(
        out,
        "set          {} ({} elements)",
        format_set(&set.elements),
        set.size
    );
    let _ = writeln!(
        out,
        "stabilizer   {} (order {})",
        format_set(&stab.elements),
        stab.order
    );
}

impl ReportDoc {
    pub fn to_text(&self, group: &Group) -> String {
        let mut out = String::new();
        header(&mut out, group, &self.set, &self.stabilizer);
        let b = &self.bounds;
        let _ = writeln!(out, "transversal  {}", b.transversal_size);
        let _ = writeln!(out, "thm1_lower   {}", b.thm1_lower);
        let _ = writeln!(out, "lemma_lower  {}", b.lemma_lower);
        let _ = writeln!(out, "thm2_lower   {}", b.thm2_lower);
        let _ = writeln!(out, "upper        {}", b.upper);
        if b.coincide {
            let _ = writeln!(out, "bounds       coincide, N = {}", b.upper);
        } else {
            let _ = writeln!(out, "bounds       N in [{}, {}]", b.best_lower, b.upper);
        }
        if let Some(e) = &self.exact {
            let _ = writeln!(out, "N            {} ({})", e.n, e.method);
            let _ = writeln!(out, "avoider      {}", format_set(&e.avoider));
            let _ = writeln!(out, "hitting set  {}", format_set(&e.hitting_set));
        }
        out
    }

    pub fn to_csv(&self, group: &Group) -> String {
        let b = &self.bounds;
        format!(
            "group,size,s,h,thm1_lower,lemma_lower,thm2_lower,upper\n{},{},{},{},{},{},{},{}\n",
            group,
            group.size(),
            self.set.size,
            self.stabilizer.order,
            b.thm1_lower,
            b.lemma_lower,
            b.thm2_lower,
            b.upper
        )
    }
}

impl ConstructDoc {
    pub fn to_text(&self, group: &Group) -> String {
        let mut out = String::new();
        header(&mut out, group, &self.set, &self.stabilizer);
        let c = &self.certificate;
        let _ = writeln!(out, "method       {}", c.method);
        let _ = writeln!(out, "size         {}", c.size);
        let _ = writeln!(out, "verified     {}", c.verified);
        if let Some(w) = c.witness {
            let _ = writeln!(out, "witness      g = {w}");
        }
        let _ = writeln!(out, "avoider      {}", format_set(&c.elements));
        out
    }
}

impl VerifyDoc {
    pub fn to_text(&self, group: &Group) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group        {group} (order {})", group.size());
        if let Some(legend) = coordinate_legend(group) {
            let _ = writeln!(out, "coordinates  {legend}");
        }
        let _ = writeln!(out, "set          {}", format_set(&self.set.elements));
        let _ = writeln!(out, "candidate    {}", format_set(&self.candidate.elements));
        let _ = writeln!(out, "verified     {}", self.verified);
        if let Some(w) = self.witness {
            let _ = writeln!(
                out,
                "witness      g = {w} (g + S lies inside the candidate)"
            );
        }
        out
    }
}

impl TableDoc {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "N(Z{}, S), S a union of n cosets of the order-{} subgroup\n",
            self.group.size, self.subgroup_order
        );
        out.push_str(" n  N\n");
        for row in &self.rows {
            let _ = writeln!(out, "{:>2}  {}", row.n, row.bracket());
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,s,h,thm2_lower,upper,exact\n");
        for r in &self.rows {
            let exact = r.exact.map(|e| e.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                r.n, r.s, r.h, r.thm2_lower, r.upper, exact
            );
        }
        out
    }
}
