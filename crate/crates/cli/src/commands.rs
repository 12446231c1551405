use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shiftfree::{
    bounds_report, construct_thm1, construct_thm2, search_avoider, solve, stabilizer,
    verify_avoids, Certificate, Error, ExactConfig, Group, GroupSubset, SearchConfig,
};

use crate::report::{
    BoundsDoc, CertificateDoc, ConstructDoc, ExactDoc, GroupDoc, MetaDoc, ReportDoc, SetDoc,
    StabilizerDoc, VerifyDoc,
};
use crate::spec::{parse_group, parse_set, ParseError};
use crate::table::example_table;

pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const NOT_VERIFIED: u8 = 2;
    pub const BUDGET: u8 = 3;
    pub const SEARCH_EXHAUSTED: u8 = 4;
}

#[derive(Debug, Parser)]
#[command(
    name = "shiftfree",
    version,
    about = "Translate-avoidance numbers in finite abelian groups"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Solver threads.
    #[arg(long, global = true, env = "SHIFTFREE_THREADS", default_value_t = 1)]
    pub threads: usize,
    /// Wall-clock limit for the exact solver, in milliseconds.
    #[arg(long, global = true)]
    pub budget_ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructMethod {
    Thm1,
    Thm2,
    Search,
}

impl ConstructMethod {
    fn name(self) -> &'static str {
        match self {
            ConstructMethod::Thm1 => "thm1",
            ConstructMethod::Thm2 => "thm2",
            ConstructMethod::Search => "search",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All closed-form bounds on N(G, S).
    Bounds { group: String, set: String },
    /// N(G, S) exactly, by minimum hitting set (closed form for cosets).
    Exact {
        group: String,
        set: String,
        /// Largest group order handed to the solver.
        #[arg(long, default_value_t = 40)]
        max_order: usize,
    },
    /// A verified avoiding set.
    Construct {
        group: String,
        set: String,
        #[arg(long, value_enum, default_value_t = ConstructMethod::Thm2)]
        method: ConstructMethod,
        /// Size of the avoiding set (search only).
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, default_value_t = 64)]
        max_restarts: usize,
        #[arg(long, default_value_t = 100_000)]
        max_repair_steps: usize,
        #[arg(long, default_value_t = 64)]
        fallback_limit: usize,
    },
    /// Checks that CANDIDATE contains no translate of SET.
    Verify {
        group: String,
        set: String,
        candidate: String,
    },
    /// Bounds for unions of cosets of the order-8 subgroup of Z2024.
    Table,
}

/// Result of one invocation: primary stream, diagnostics, exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: exit::OK,
        }
    }

    fn fail(code: u8, message: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code,
        }
    }
}

impl From<ParseError> for Outcome {
    fn from(e: ParseError) -> Self {
        Outcome::fail(exit::USAGE, e)
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } | Error::SizeLimit { .. } => exit::BUDGET,
        Error::SearchExhausted { .. } => exit::SEARCH_EXHAUSTED,
        _ => exit::USAGE,
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::fail(error_code(&e), e)
    }
}

fn json<T: serde::Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable document");
    s.push('\n');
    s
}

fn csv_unsupported(what: &str) -> Outcome {
    Outcome::fail(
        exit::USAGE,
        format!("csv output is not available for `{what}`"),
    )
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Bounds { group, set } => cmd_bounds(&cli.global, group, set),
        Command::Exact {
            group,
            set,
            max_order,
        } => cmd_exact(&cli.global, group, set, *max_order),
        Command::Construct {
            group,
            set,
            method,
            target,
            max_restarts,
            max_repair_steps,
            fallback_limit,
        } => {
            let search = SearchConfig {
                seed: cli.global.seed,
                max_random_restarts: *max_restarts,
                max_repair_steps: *max_repair_steps,
                exact_fallback_limit: *fallback_limit,
            };
            cmd_construct(&cli.global, group, set, *method, *target, &search)
        }
        Command::Verify {
            group,
            set,
            candidate,
        } => cmd_verify(&cli.global, group, set, candidate),
        Command::Table => Ok(cmd_table(&cli.global)),
    };
    result.unwrap_or_else(|e| e)
}

fn parse_pattern(group: &str, set: &str) -> Result<(Group, GroupSubset), Outcome> {
    let g = parse_group(group)?;
    let s = parse_set(&g, set)?;
    if s.is_empty() {
        return Err(Error::EmptySet.into());
    }
    Ok((g, s))
}

fn report_doc(group: &Group, set: &GroupSubset, seed: u64) -> Result<ReportDoc, Outcome> {
    let h = stabilizer(set)?;
    let report = bounds_report(set)?;
    Ok(ReportDoc {
        group: GroupDoc::new(group),
        set: SetDoc::new(set),
        stabilizer: StabilizerDoc::new(&h),
        bounds: BoundsDoc::new(&report),
        exact: None,
        meta: MetaDoc::new(seed),
    })
}

fn render_report(opts: &GlobalOpts, group: &Group, doc: &ReportDoc) -> String {
    match opts.format {
        Format::Text => doc.to_text(group),
        Format::Json => json(doc),
        Format::Csv => doc.to_csv(group),
    }
}

pub fn cmd_bounds(opts: &GlobalOpts, group: &str, set: &str) -> Result<Outcome, Outcome> {
    let (g, s) = parse_pattern(group, set)?;
    let doc = report_doc(&g, &s, opts.seed)?;
    Ok(Outcome::ok(render_report(opts, &g, &doc)))
}

pub fn cmd_exact(
    opts: &GlobalOpts,
    group: &str,
    set: &str,
    max_order: usize,
) -> Result<Outcome, Outcome> {
    if opts.format == Format::Csv {
        return Err(csv_unsupported("exact"));
    }
    let (g, s) = parse_pattern(group, set)?;
    let mut doc = report_doc(&g, &s, opts.seed)?;
    let cfg = ExactConfig {
        max_group_size: max_order,
        time_limit: opts.budget_ms.map(Duration::from_millis),
        threads: opts.threads.max(1),
    };
    match solve(&g, &s, &cfg) {
        Ok(r) => {
            doc.exact = Some(ExactDoc {
                n: r.n_value,
                method: r.method.as_str().to_string(),
                avoider: r.max_avoider.indices(),
                hitting_set: r.min_hitting_set.indices(),
            });
            Ok(Outcome {
                stdout: render_report(opts, &g, &doc),
                stderr: format!(
                    "solver: {} nodes, {:.3} ms\n",
                    r.nodes,
                    r.elapsed.as_secs_f64() * 1e3
                ),
                code: exit::OK,
            })
        }
        Err(e @ (Error::BudgetExceeded { .. } | Error::SizeLimit { .. })) => Ok(Outcome {
            stdout: render_report(opts, &g, &doc),
            stderr: format!("error: {e}; only bounds are reported\n"),
            code: exit::BUDGET,
        }),
        Err(e) => Err(e.into()),
    }
}

pub fn cmd_construct(
    opts: &GlobalOpts,
    group: &str,
    set: &str,
    method: ConstructMethod,
    target: Option<usize>,
    search: &SearchConfig,
) -> Result<Outcome, Outcome> {
    if opts.format == Format::Csv {
        return Err(csv_unsupported("construct"));
    }
    let (g, s) = parse_pattern(group, set)?;
    let cert: Certificate = match (method, target) {
        (ConstructMethod::Thm1, None) => construct_thm1(&g, &s)?,
        (ConstructMethod::Thm2, None) => construct_thm2(&g, &s, search)?,
        (ConstructMethod::Search, Some(t)) => search_avoider(&g, &s, t, search)?,
        (ConstructMethod::Search, None) => {
            return Err(Outcome::fail(exit::USAGE, "--method search needs --target"))
        }
        (_, Some(_)) => {
            return Err(Outcome::fail(
                exit::USAGE,
                "--target is only valid with --method search",
            ))
        }
    };
    let doc = ConstructDoc {
        group: GroupDoc::new(&g),
        set: SetDoc::new(&s),
        stabilizer: StabilizerDoc::new(&stabilizer(&s)?),
        certificate: CertificateDoc {
            method: method.name().to_string(),
            elements: cert.avoiding_set.indices(),
            size: cert.size(),
            verified: cert.verified,
            witness: cert.witness.as_ref().map(|w| w.flat()),
        },
        meta: MetaDoc::new(opts.seed),
    };
    let stdout = match opts.format {
        Format::Json => json(&doc),
        _ => doc.to_text(&g),
    };
    let code = if cert.verified {
        exit::OK
    } else {
        exit::NOT_VERIFIED
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code,
    })
}

pub fn cmd_verify(
    opts: &GlobalOpts,
    group: &str,
    set: &str,
    candidate: &str,
) -> Result<Outcome, Outcome> {
    if opts.format == Format::Csv {
        return Err(csv_unsupported("verify"));
    }
    let (g, s) = parse_pattern(group, set)?;
    let c = parse_set(&g, candidate)?;
    let cert = verify_avoids(&c, &s)?;
    let doc = VerifyDoc {
        group: GroupDoc::new(&g),
        set: SetDoc::new(&s),
        candidate: SetDoc::new(&c),
        verified: cert.verified,
        witness: cert.witness.as_ref().map(|w| w.flat()),
        meta: MetaDoc::new(opts.seed),
    };
    let stdout = match opts.format {
        Format::Json => json(&doc),
        _ => doc.to_text(&g),
    };
    let code = if cert.verified {
        exit::OK
    } else {
        exit::NOT_VERIFIED
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code,
    })
}

pub fn cmd_table(opts: &GlobalOpts) -> Outcome {
    let doc = example_table(opts.seed);
    Outcome::ok(match opts.format {
        Format::Text => doc.to_text(),
        Format::Json => json(&doc),
        Format::Csv => doc.to_csv(),
    })
}
