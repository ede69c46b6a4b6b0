//! Command-line front end. `run` is pure apart from reading table and record
//! files, so the binary is a thin wrapper that prints and exits.

use crate::canonical::{
    bound_4r, bound_band, canonical_form, count_formula, enumerate_canonical_pairs, tightness_witness,
};
use crate::classify::{candidate_pairs, census_by_order, classify, classify_with, CensusReport, Filter};
use crate::endo::{enumerate_automorphisms, enumerate_endomorphisms, is_idempotent, orbits_under, EndoPair};
use crate::error::{Error, Result};
use crate::group::{format_cayley, parse_group_spec, ppc_decompose, AbelianSpec, FiniteGroup, Limits, DEFAULT_CAP};
use crate::interchange::{check_basic_identities, magma_props, InterchangeNearRing, RingRecord};
use crate::structures::{enumerate_ideals, matrix_ring, quotient, IDEAL_SEARCH_LIMIT};
use crate::verify::{run_suite, VerifyOptions};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

#[derive(Parser, Debug)]
#[command(name = "icr", version, about = "Interchange near rings on finite groups")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest group order accepted.
    #[arg(long, global = true, env = "ICR_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Subcommand, Debug)]
pub enum CommandArgs {
    /// Order, abelian flag, ppc-basis and endomorphism counts of a group.
    Info { group: String },
    /// List End(G), or Aut(G) with --autos.
    Endos {
        group: String,
        #[arg(long)]
        autos: bool,
    },
    /// Isomorphism classes of interchange near rings on a group.
    Classify {
        group: String,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
    },
    /// Class counts summed over every known group of one order.
    Census {
        #[arg(long)]
        order: u64,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
    },
    /// Canonical triples for r copies of Z_{p^n}.
    Canonical {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: usize,
        /// Classify the group and compare against the triples.
        #[arg(long)]
        verify: bool,
    },
    /// Class-count bounds for ppc-rank r and the cyclic groups attaining them.
    Bounds {
        #[arg(long)]
        r: usize,
    },
    /// Product table of the ring generated by a pair, e.g. "(0220),(0220)".
    Table {
        #[arg(required_unless_present = "record")]
        group: Option<String>,
        #[arg(required_unless_present = "record")]
        pair: Option<String>,
        /// Load the ring from a JSON record written by `table --json`.
        #[arg(long, conflicts_with_all = ["group", "pair"])]
        record: Option<PathBuf>,
    },
    /// Ideals of a ring and the quotient by each.
    Ideals { group: String, pair: String },
    /// The ring of n x n matrices over a ring.
    Matrix {
        group: String,
        pair: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Run the theorem suite over the built-in groups.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_order: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Associative,
    Commutative,
    Band,
    Essential,
}

impl From<FilterArg> for Filter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => Filter::All,
            FilterArg::Associative => Filter::Associative,
            FilterArg::Commutative => Filter::Commutative,
            FilterArg::Band => Filter::Band,
            FilterArg::Essential => Filter::Essential,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// One resolved invocation.
#[derive(Debug)]
pub struct JobConfig {
    pub command: CommandArgs,
    pub output: OutputFormat,
    pub cap: usize,
}

impl From<Cli> for JobConfig {
    fn from(cli: Cli) -> Self {
        JobConfig {
            command: cli.command,
            output: if cli.json { OutputFormat::Json } else { OutputFormat::Text },
            cap: cli.cap,
        }
    }
}

/// Exit status and text produced by one run.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::BudgetExceeded { .. } => EXIT_CAP,
        Error::Verification(_) | Error::PropertyMismatch(_) => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

pub fn run(cfg: &JobConfig) -> Outcome {
    let limits = Limits::with_cap(cfg.cap);
    let json = cfg.output == OutputFormat::Json;
    match dispatch(&cfg.command, &limits, json) {
        Ok((text, ok)) => Outcome {
            code: if ok { 0 } else { EXIT_VERIFY },
            stdout: text,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn to_json(value: impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("report serialises");
    s.push('\n');
    s
}

fn group_arc(spec: &str, limits: &Limits) -> Result<Arc<FiniteGroup>> {
    parse_group_spec(spec, limits).map(Arc::new)
}

fn ring_from(spec: &str, pair: &str, limits: &Limits) -> Result<InterchangeNearRing> {
    let g = group_arc(spec, limits)?;
    let p = EndoPair::parse(&g, pair)?;
    InterchangeNearRing::from_pair(&g, p)
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Returns the report and whether every check in it passed.
fn dispatch(cmd: &CommandArgs, limits: &Limits, json: bool) -> Result<(String, bool)> {
    let mut out = String::new();
    match cmd {
        CommandArgs::Info { group } => {
            let g = parse_group_spec(group, limits)?;
            let ends = enumerate_endomorphisms(&g, limits)?;
            let autos = enumerate_automorphisms(&g, limits)?;
            let basis = ppc_decompose(&g).ok();
            if json {
                out = to_json(json!({
                    "format": 1,
                    "group": g.name(),
                    "order": g.order(),
                    "abelian": g.is_abelian(),
                    "centre_order": g.centre().len(),
                    "endomorphisms": ends.len(),
                    "automorphisms": autos.len(),
                    "idempotents": ends.iter().filter(|e| is_idempotent(e)).count(),
                    "ppc_basis": basis.as_ref().map(|b| b.elements().to_vec()),
                    "ppc_orders": basis.as_ref().map(|b| b.orders().to_vec()),
                }));
            } else {
                writeln!(out, "group        {}", g.name()).unwrap();
                writeln!(out, "order        {}", g.order()).unwrap();
                writeln!(out, "abelian      {}", yn(g.is_abelian())).unwrap();
                writeln!(out, "centre       {}", g.centre().len()).unwrap();
                writeln!(out, "End          {}", ends.len()).unwrap();
                writeln!(out, "Aut          {}", autos.len()).unwrap();
                writeln!(out, "idempotents  {}", ends.iter().filter(|e| is_idempotent(e)).count()).unwrap();
                if let Some(b) = basis {
                    writeln!(out, "ppc-rank     {}", b.rank()).unwrap();
                    writeln!(out, "ppc-basis    {:?} of orders {:?}", b.elements(), b.orders()).unwrap();
                }
            }
        }
        CommandArgs::Endos { group, autos } => {
            let g = parse_group_spec(group, limits)?;
            let list = if *autos {
                enumerate_automorphisms(&g, limits)?
            } else {
                enumerate_endomorphisms(&g, limits)?
            };
            if json {
                let items: Vec<_> = list
                    .iter()
                    .map(|e| {
                        json!({
                            "map": e.notation(),
                            "automorphism": e.is_bijective(),
                            "idempotent": is_idempotent(e),
                        })
                    })
                    .collect();
                out = to_json(json!({"format": 1, "group": g.name(), "count": list.len(), "maps": items}));
            } else {
                let what = if *autos { "automorphisms" } else { "endomorphisms" };
                writeln!(out, "{} {what} of {}", list.len(), g.name()).unwrap();
                for e in &list {
                    let mut flags = Vec::new();
                    if e.is_bijective() {
                        flags.push("automorphism");
                    }
                    if is_idempotent(e) {
                        flags.push("idempotent");
                    }
                    writeln!(out, "  {}  {}", e, flags.join(" ")).unwrap();
                }
            }
        }
        CommandArgs::Classify { group, filter } => {
            let g = parse_group_spec(group, limits)?;
            let report = classify(&g, (*filter).into(), limits)?;
            out = if json {
                to_json(json!({"format": 1, "report": report}))
            } else {
                census_text(&report)
            };
        }
        CommandArgs::Census { order, filter } => {
            let c = census_by_order(*order, (*filter).into(), limits)?;
            if json {
                out = to_json(json!({"format": 1, "census": c}));
            } else {
                writeln!(out, "order {}, filter {}: {} classes", c.order, c.filter, c.total).unwrap();
                for (name, count) in &c.per_group {
                    writeln!(out, "  {name:<14} {count}").unwrap();
                }
                if !c.complete {
                    writeln!(out, "incomplete: non-abelian groups of order {} are missing", c.order).unwrap();
                }
            }
        }
        CommandArgs::Canonical { p, n, r, verify } => {
            let modulus = p
                .checked_pow(*n)
                .filter(|_| crate::arith::is_prime(*p) && *n >= 1)
                .ok_or_else(|| Error::Parse(format!("need a prime p and n >= 1, got p={p} n={n}")))?;
            let triples = enumerate_canonical_pairs(*r as u32);
            let formula = count_formula(*r as u32);
            let mut ok = triples.len() as u128 == formula;
            let mut classes = None;
            if *verify {
                let g = FiniteGroup::abelian(&AbelianSpec::homocyclic(modulus, *r)?, limits)?;
                let ends = enumerate_endomorphisms(&g, limits)?;
                let autos = enumerate_automorphisms(&g, limits)?;
                let pairs = candidate_pairs(&g, &ends, Filter::Associative, limits)?;
                let orbits = orbits_under(&autos, &pairs);
                let mut seen = Vec::new();
                for o in &orbits {
                    let t = canonical_form(&g, o.representative())?;
                    ok &= !seen.contains(&t);
                    seen.push(t);
                }
                seen.sort();
                ok &= seen == triples;
                classes = Some(orbits.len());
            }
            if json {
                out = to_json(json!({
                    "format": 1, "p": p, "n": n, "r": r,
                    "triples": triples.iter().map(|t| [t.s, t.t1, t.t2]).collect::<Vec<_>>(),
                    "formula": formula as u64,
                    "classes": classes,
                    "passed": ok,
                }));
            } else {
                writeln!(out, "r = {r}: {} canonical triples (s,t1,t2), formula gives {formula}", triples.len()).unwrap();
                for t in &triples {
                    writeln!(out, "  {t}").unwrap();
                }
                if let Some(c) = classes {
                    writeln!(
                        out,
                        "Z{modulus}^{r}: {c} classes of associative rings; one per triple: {}",
                        if ok { "PASS" } else { "FAIL" }
                    )
                    .unwrap();
                }
            }
            return Ok((out, ok));
        }
        CommandArgs::Bounds { r } => {
            let r32 = *r as u32;
            let fmt = |b: Option<u128>| b.map_or("overflow".to_string(), |v| v.to_string());
            let witness = match tightness_witness(*r, limits) {
                Ok(g) => {
                    let ends = enumerate_endomorphisms(&g, limits)?;
                    let autos = enumerate_automorphisms(&g, limits)?;
                    let a = classify_with(&g, &ends, &autos, Filter::Associative, limits)?;
                    Some((g.name().to_string(), a.total_classes, a.counts.band.unwrap_or(0)))
                }
                Err(Error::CapExceeded { .. }) => None,
                Err(e) => return Err(e),
            };
            let ok = witness.as_ref().is_none_or(|(_, a, b)| {
                Some(*a as u128) == bound_4r(r32) && Some(*b as u128) == bound_band(r32)
            });
            if json {
                out = to_json(json!({
                    "format": 1, "r": r,
                    "associative_bound": fmt(bound_4r(r32)),
                    "band_bound": fmt(bound_band(r32)),
                    "homocyclic_count": count_formula(r32) as u64,
                    "witness": witness.as_ref().map(|(n, a, b)| json!({"group": n, "associative": a, "band": b})),
                    "passed": ok,
                }));
            } else {
                writeln!(out, "ppc-rank {r}").unwrap();
                writeln!(out, "  associative classes at most  {}", fmt(bound_4r(r32))).unwrap();
                writeln!(out, "  band classes at most         {}", fmt(bound_band(r32))).unwrap();
                writeln!(out, "  on r copies of Z_(p^n)       {}", count_formula(r32)).unwrap();
                match &witness {
                    Some((name, a, b)) => writeln!(
                        out,
                        "  {name}: {a} associative, {b} band: {}",
                        if ok { "attained" } else { "NOT attained" }
                    )
                    .unwrap(),
                    None => writeln!(out, "  witness group exceeds the size cap").unwrap(),
                }
            }
            return Ok((out, ok));
        }
        CommandArgs::Table { group, pair, record } => {
            let ring = match record {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    let rec: RingRecord = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
                    rec.to_ring(limits)?
                }
                None => ring_from(
                    group.as_deref().unwrap_or_default(),
                    pair.as_deref().unwrap_or_default(),
                    limits,
                )?,
            };
            out = if json {
                to_json(RingRecord::new(&ring)?)
            } else {
                format_cayley(ring.order(), ring.product_table())
            };
        }
        CommandArgs::Ideals { group, pair } => {
            let ring = ring_from(group, pair, limits)?;
            if ring.order() > IDEAL_SEARCH_LIMIT {
                return Err(Error::BudgetExceeded {
                    what: "subset search for ideals".into(),
                    needed: 1u128 << ring.order(),
                    budget: 1 << IDEAL_SEARCH_LIMIT,
                });
            }
            let ideals = enumerate_ideals(&ring)?;
            let mut items = Vec::new();
            for i in &ideals {
                let q = quotient(&ring, i)?;
                items.push((i.clone(), q));
            }
            if json {
                let list: Vec<_> = items
                    .iter()
                    .map(|(i, q)| {
                        json!({
                            "ideal": i,
                            "quotient_order": q.ring.order(),
                            "quotient_pair": q.ring.pair().notation(),
                            "quotient_product": q.ring.product_rows(),
                        })
                    })
                    .collect();
                out = to_json(json!({"format": 1, "ring": ring.pair().notation(), "ideals": list}));
            } else {
                writeln!(out, "{} ideals of {} with pair {}", ideals.len(), ring.group().name(), ring.pair()).unwrap();
                for (i, q) in &items {
                    writeln!(out, "  {:?}  quotient of order {} with pair {}", i, q.ring.order(), q.ring.pair()).unwrap();
                }
            }
        }
        CommandArgs::Matrix { group, pair, n } => {
            let ring = ring_from(group, pair, limits)?;
            let m = matrix_ring(&ring, *n, limits)?;
            let props = magma_props(&m.ring)?;
            let identities = check_basic_identities(&m.ring).passed();
            if json {
                out = to_json(json!({
                    "format": 1,
                    "base": ring.pair().notation(),
                    "n": n,
                    "order": m.ring.order(),
                    "pair": m.ring.pair().notation(),
                    "props": props,
                    "identities_hold": identities,
                }));
            } else {
                writeln!(out, "M{n} over {} with pair {}", ring.group().name(), ring.pair()).unwrap();
                writeln!(out, "  order             {}", m.ring.order()).unwrap();
                writeln!(out, "  interchange law   holds").unwrap();
                writeln!(out, "  associative       {}", yn(props.associative)).unwrap();
                writeln!(out, "  commutative       {}", yn(props.commutative)).unwrap();
                writeln!(out, "  idempotent        {}", yn(props.idempotent)).unwrap();
                writeln!(out, "  basic identities  {}", if identities { "hold" } else { "FAIL" }).unwrap();
            }
            return Ok((out, identities));
        }
        CommandArgs::Verify { max_order } => {
            let opts = VerifyOptions {
                max_order: *max_order,
                ..VerifyOptions::default()
            };
            let outcomes = run_suite(&opts, limits)?;
            let ok = outcomes.iter().all(|o| o.passed);
            if json {
                out = to_json(json!({"format": 1, "passed": ok, "checks": outcomes}));
            } else {
                for o in &outcomes {
                    writeln!(out, "{} {}: {}", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail).unwrap();
                }
            }
            return Ok((out, ok));
        }
    }
    Ok((out, true))
}

fn census_text(report: &CensusReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{} (order {}), filter {}: {} classes",
        report.group, report.order, report.filter, report.total_classes
    )
    .unwrap();
    let c = &report.counts;
    let fields = [
        ("all", c.all),
        ("associative", c.associative),
        ("commutative", c.commutative),
        ("commutative+associative", c.commutative_associative),
        ("idempotent", c.idempotent),
        ("band", c.band),
        ("essential (3)", c.essential3),
        ("essential (4)", c.essential4),
        ("inessential", c.inessential),
    ];
    for (name, v) in fields {
        if let Some(v) = v {
            writeln!(out, "  {name:<24} {v}").unwrap();
        }
    }
    let width = report.representatives.iter().map(|r| r.pair.len()).max().unwrap_or(4).max(4);
    writeln!(out, "  {:<width$}  size  assoc  comm  idem  tag", "pair").unwrap();
    for r in &report.representatives {
        let p = &r.props;
        writeln!(
            out,
            "  {:<width$}  {:>4}  {:<5}  {:<4}  {:<4}  {}",
            r.pair,
            r.orbit_size,
            yn(p.associative),
            yn(p.commutative),
            yn(p.idempotent),
            p.essential_tag.as_str()
        )
        .unwrap();
    }
    out
}

/// Parses `args` (program name first) and runs them.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&JobConfig::from(cli)),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}
