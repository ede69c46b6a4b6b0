//! The theorem suite behind `icr verify`.
//!
//! Every check runs over the built-in corpus of groups and reports one
//! outcome; nothing here panics on a failed check.

use crate::canonical::{count_formula, diagonalize_pair, homocyclic_type};
use crate::classify::{candidate_pairs, classify_with, group_corpus, Filter};
use crate::endo::{enumerate_automorphisms, enumerate_endomorphisms, orbits_under, Endomorphism};
use crate::error::Result;
use crate::group::{AbelianSpec, Elem, FiniteGroup, Limits};
use crate::interchange::{check_basic_identities, extract_pair, magma_props, InterchangeNearRing};
use serde::Serialize;
use std::collections::{HashMap, HashSet};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Groups of every order up to this bound are checked.
    pub max_order: u64,
    /// `(p, n, r)`: groups `r` copies of `Z_{p^n}` for the exact class count.
    pub homocyclic: Vec<(u64, u32, usize)>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_order: 8,
            homocyclic: vec![(2, 1, 1), (2, 1, 2), (2, 1, 3), (3, 1, 1), (3, 1, 2), (2, 2, 1), (2, 2, 2)],
        }
    }
}

fn outcome(name: impl Into<String>, failures: Vec<String>, checked: usize) -> CheckOutcome {
    CheckOutcome {
        name: name.into(),
        passed: failures.is_empty(),
        detail: match failures.first() {
            None => format!("{checked} cases"),
            Some(f) => format!("{} failures of {checked}; first: {f}", failures.len()),
        },
    }
}

/// The least product table among all transports `x -> a(x)` of `r` by automorphisms.
fn transported_minimum(r: &InterchangeNearRing, autos: &[Endomorphism]) -> Vec<Elem> {
    let n = r.order();
    let mut best: Option<Vec<Elem>> = None;
    let mut table = vec![0; n * n];
    for a in autos {
        for x in 0..n as Elem {
            for y in 0..n as Elem {
                table[a.apply(x) as usize * n + a.apply(y) as usize] = a.apply(r.mul(x, y));
            }
        }
        if best.as_ref().is_none_or(|b| table < *b) {
            best = Some(table.clone());
        }
    }
    best.unwrap_or_default()
}

/// Runs every check and returns the outcomes in a fixed order.
pub fn run_suite(opts: &VerifyOptions, limits: &Limits) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let mut bijection = Vec::new();
    let mut identities = Vec::new();
    let mut props = Vec::new();
    let mut similarity = Vec::new();
    let mut rings_seen = 0usize;
    let mut group_names = Vec::new();
    for k in 1..=opts.max_order {
        let (groups, _) = group_corpus(k, limits)?;
        for g in groups {
            group_names.push(g.name().to_string());
            let ends = enumerate_endomorphisms(&g, limits)?;
            let autos = enumerate_automorphisms(&g, limits)?;
            let pairs = candidate_pairs(&g, &ends, Filter::All, limits)?;
            let orbits = orbits_under(&autos, &pairs);
            let ga = Arc::new(g.clone());
            let mut tables = HashSet::new();
            let mut class_of_table: HashMap<Vec<Elem>, usize> = HashMap::new();
            for (oi, orbit) in orbits.iter().enumerate() {
                for pair in &orbit.members {
                    rings_seen += 1;
                    let tag = format!("{} {pair}", g.name());
                    let ring = match InterchangeNearRing::from_pair(&ga, pair.clone()) {
                        Ok(r) => r,
                        Err(e) => {
                            bijection.push(format!("{tag}: {e}"));
                            continue;
                        }
                    };
                    match extract_pair(&g, ring.product_table()) {
                        Ok(p) if &p == pair => {}
                        Ok(p) => bijection.push(format!("{tag}: extracted {p}")),
                        Err(e) => bijection.push(format!("{tag}: {e}")),
                    }
                    if !tables.insert(ring.product_table().to_vec()) {
                        bijection.push(format!("{tag}: product table repeated"));
                    }
                    let report = check_basic_identities(&ring);
                    if !report.passed() {
                        identities.push(format!("{tag}: {:?}", report.failures));
                    }
                    if let Err(e) = magma_props(&ring) {
                        props.push(format!("{tag}: {e}"));
                    }
                    let canon = transported_minimum(&ring, &autos);
                    match class_of_table.get(&canon) {
                        Some(&c) if c != oi => similarity.push(format!("{tag}: isomorphic to a non-similar pair")),
                        Some(_) => {}
                        None => {
                            if pair != orbit.representative() {
                                similarity.push(format!("{tag}: not isomorphic to its similar representative"));
                            }
                            class_of_table.insert(canon, oi);
                        }
                    }
                }
            }
        }
    }
    let scope = format!("groups {}", group_names.join(", "));
    out.push(outcome(format!("pair/ring bijection ({scope})"), bijection, rings_seen));
    out.push(outcome("zero, distributivity, splitting and negation identities", identities, rings_seen));
    out.push(outcome(
        "associativity from the pair agrees with triples and one-sided conditions",
        props,
        rings_seen,
    ));
    out.push(outcome("similarity agrees with isomorphism by transport", similarity, rings_seen));

    let mut counts = Vec::new();
    let mut diag = Vec::new();
    let mut diag_cases = 0;
    for &(p, n, r) in &opts.homocyclic {
        let spec = AbelianSpec::homocyclic(p.pow(n), r)?;
        let g = FiniteGroup::abelian(&spec, limits)?;
        let ends = enumerate_endomorphisms(&g, limits)?;
        let autos = enumerate_automorphisms(&g, limits)?;
        let report = classify_with(&g, &ends, &autos, Filter::Associative, limits)?;
        let expect = count_formula(r as u32);
        if report.total_classes as u128 != expect {
            counts.push(format!("{}: {} classes, expected {expect}", g.name(), report.total_classes));
        }
        if report.counts.commutative_associative != Some(r + 1) {
            counts.push(format!(
                "{}: {:?} commutative classes, expected {}",
                g.name(),
                report.counts.commutative_associative,
                r + 1
            ));
        }
        debug_assert!(homocyclic_type(&g).is_some());
        for pair in candidate_pairs(&g, &ends, Filter::Associative, limits)? {
            diag_cases += 1;
            if let Err(e) = diagonalize_pair(&g, &pair) {
                diag.push(format!("{} {pair}: {e}", g.name()));
            }
        }
    }
    out.push(outcome("associative class counts on homocyclic groups", counts, opts.homocyclic.len()));
    out.push(outcome("diagonalisation of commuting idempotent pairs", diag, diag_cases));
    Ok(out)
}
