//! Census of interchange near rings on a group, up to isomorphism.
//!
//! Isomorphism classes are similarity orbits of image-commuting pairs, so a
//! census is: enumerate candidate pairs, split them into orbits, and read
//! properties off one representative per orbit.

use crate::arith::{factorize, is_abelian_number, partitions};
use crate::canonical::{bound_4r, bound_band};
use crate::endo::{
    burnside_orbit_count, commutes, enumerate_automorphisms, enumerate_endomorphisms, is_idempotent,
    is_image_commuting, orbits_under, EndoPair, Endomorphism,
};
use crate::error::{Error, Result};
use crate::group::{parse_group_spec, ppc_rank, AbelianSpec, FiniteGroup, Limits};
use crate::interchange::{magma_props, pair_props, EssentialTag, InterchangeNearRing, MagmaProps};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    #[default]
    All,
    Associative,
    Commutative,
    Band,
    Essential,
}

impl Filter {
    pub const ALL: [Filter; 5] = [
        Filter::All,
        Filter::Associative,
        Filter::Commutative,
        Filter::Band,
        Filter::Essential,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Filter::All => "all",
            Filter::Associative => "associative",
            Filter::Commutative => "commutative",
            Filter::Band => "band",
            Filter::Essential => "essential",
        }
    }

    pub fn accepts(self, p: &MagmaProps) -> bool {
        match self {
            Filter::All => true,
            Filter::Associative => p.associative,
            Filter::Commutative => p.commutative,
            Filter::Band => p.band(),
            Filter::Essential => p.essential_tag.is_essential4(),
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Filter::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown filter {s:?}")))
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Class counts per property. A field is `None` when the filter that produced
/// the census does not enumerate every class with that property.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusCounts {
    pub all: Option<usize>,
    pub associative: Option<usize>,
    pub commutative: Option<usize>,
    pub commutative_associative: Option<usize>,
    pub idempotent: Option<usize>,
    pub band: Option<usize>,
    /// Classes of `(zeta,zeta)`, `(iota,zeta)`, `(zeta,iota)`.
    pub essential3: Option<usize>,
    /// The above plus the additive copy `(iota,iota)`.
    pub essential4: Option<usize>,
    pub inessential: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub pair: String,
    pub orbit_size: usize,
    pub props: MagmaProps,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub group: String,
    pub order: usize,
    pub filter: Filter,
    /// Number of classes passing the filter.
    pub total_classes: usize,
    pub counts: CensusCounts,
    /// One entry per class, sorted by representative pair.
    pub representatives: Vec<ClassRecord>,
}

/// Candidate pairs for a filter: a union of full similarity orbits that
/// contains every pair the filter accepts.
pub fn candidate_pairs(g: &FiniteGroup, ends: &[Endomorphism], filter: Filter, limits: &Limits) -> Result<Vec<EndoPair>> {
    let pair = |a: &Endomorphism, b: &Endomorphism| EndoPair {
        first: a.clone(),
        second: b.clone(),
    };
    let budget_check = |needed: u128| {
        if needed > limits.endo_budget as u128 {
            Err(Error::BudgetExceeded {
                what: format!("{filter} pairs on {}", g.name()),
                needed,
                budget: limits.endo_budget,
            })
        } else {
            Ok(())
        }
    };
    let mut out = Vec::new();
    match filter {
        Filter::All => {
            budget_check((ends.len() as u128).pow(2))?;
            for a in ends {
                for b in ends {
                    let p = pair(a, b);
                    if is_image_commuting(g, &p) {
                        out.push(p);
                    }
                }
            }
        }
        Filter::Associative | Filter::Band => {
            let idem: Vec<&Endomorphism> = ends.iter().filter(|e| is_idempotent(e)).collect();
            budget_check((idem.len() as u128).pow(2))?;
            for &a in &idem {
                for &b in &idem {
                    if !commutes(a, b) {
                        continue;
                    }
                    let p = pair(a, b);
                    if is_image_commuting(g, &p) {
                        out.push(p);
                    }
                }
            }
        }
        Filter::Commutative => {
            for a in ends {
                let p = pair(a, a);
                if is_image_commuting(g, &p) {
                    out.push(p);
                }
            }
        }
        Filter::Essential => {
            let (z, i) = (Endomorphism::zero(g), Endomorphism::identity(g));
            for p in [pair(&z, &z), pair(&i, &z), pair(&z, &i), pair(&i, &i)] {
                if is_image_commuting(g, &p) && !out.contains(&p) {
                    out.push(p);
                }
            }
        }
    }
    Ok(out)
}

/// Property fields fully enumerated by a filter's candidate set.
fn covered(filter: Filter) -> [bool; 9] {
    // all, assoc, comm, comm_assoc, idem, band, ess3, ess4, iness
    match filter {
        Filter::All => [true; 9],
        Filter::Associative => [false, true, false, true, false, true, true, true, false],
        Filter::Commutative => [false, false, true, true, false, false, false, false, false],
        Filter::Band => [false, false, false, false, false, true, false, false, false],
        Filter::Essential => [false, false, false, false, false, false, true, true, false],
    }
}

/// Classifies all interchange near rings on `g` whose class passes `filter`.
pub fn classify(g: &FiniteGroup, filter: Filter, limits: &Limits) -> Result<CensusReport> {
    let ends = enumerate_endomorphisms(g, limits)?;
    let autos = enumerate_automorphisms(g, limits)?;
    classify_with(g, &ends, &autos, filter, limits)
}

/// As [`classify`] with End(G) and Aut(G) supplied by the caller.
pub fn classify_with(
    g: &FiniteGroup,
    ends: &[Endomorphism],
    autos: &[Endomorphism],
    filter: Filter,
    limits: &Limits,
) -> Result<CensusReport> {
    let pairs = candidate_pairs(g, ends, filter, limits)?;
    let orbits = orbits_under(autos, &pairs);
    if (autos.len() as u128) * (pairs.len() as u128) <= 1 << 26 {
        let recount = burnside_orbit_count(autos, &pairs);
        if recount != Some(orbits.len()) {
            return Err(Error::Verification(format!(
                "Burnside recount {recount:?} differs from {} orbits on {}",
                orbits.len(),
                g.name()
            )));
        }
    }
    let group = Arc::new(g.clone());
    let mut tallies = [0usize; 9];
    let mut representatives = Vec::new();
    for orbit in &orbits {
        let rep = orbit.representative();
        let ring = InterchangeNearRing::from_pair(&group, rep.clone())?;
        let props = magma_props(&ring)?;
        if cfg!(debug_assertions) {
            for m in &orbit.members[1..] {
                if pair_props(g, m) != props {
                    return Err(Error::Verification(format!("properties vary across the orbit of {rep}")));
                }
            }
        }
        let flags = [
            true,
            props.associative,
            props.commutative,
            props.commutative && props.associative,
            props.idempotent,
            props.band(),
            props.essential_tag.is_essential3(),
            props.essential_tag.is_essential4(),
            props.essential_tag == EssentialTag::Inessential,
        ];
        for (t, f) in tallies.iter_mut().zip(flags) {
            *t += f as usize;
        }
        if filter.accepts(&props) {
            representatives.push(ClassRecord {
                pair: rep.notation(),
                orbit_size: orbit.len(),
                props,
            });
        }
    }
    let cov = covered(filter);
    let pick = |i: usize| cov[i].then_some(tallies[i]);
    let counts = CensusCounts {
        all: pick(0),
        associative: pick(1),
        commutative: pick(2),
        commutative_associative: pick(3),
        idempotent: pick(4),
        band: pick(5),
        essential3: pick(6),
        essential4: pick(7),
        inessential: pick(8),
    };
    if let Ok(r) = ppc_rank(g) {
        let r = r as u32;
        let over = |count: Option<usize>, bound: Option<u128>| match (count, bound) {
            (Some(c), Some(b)) => c as u128 > b,
            _ => false,
        };
        if over(counts.associative, bound_4r(r)) || over(counts.band, bound_band(r)) {
            return Err(Error::Verification(format!(
                "associative or band count exceeds the rank-{r} bound on {}",
                g.name()
            )));
        }
    }
    Ok(CensusReport {
        group: g.name().to_string(),
        order: g.order(),
        filter,
        total_classes: representatives.len(),
        counts,
        representatives,
    })
}

/// Abelian groups of order `k` in invariant-factor form, e.g. `Z12`, `Z6+Z2`.
pub fn abelian_groups_of_order(k: u64) -> Vec<AbelianSpec> {
    let mut specs: Vec<Vec<u64>> = vec![vec![]];
    for (p, e) in factorize(k) {
        let mut next = Vec::new();
        for spec in &specs {
            for part in partitions(e) {
                let mut factors = spec.clone();
                for (i, &a) in part.iter().enumerate() {
                    let q = p.pow(a);
                    if i < factors.len() {
                        factors[i] *= q;
                    } else {
                        factors.push(q);
                    }
                }
                next.push(factors);
            }
        }
        specs = next;
    }
    specs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
    specs
        .into_iter()
        .map(|f| AbelianSpec::new(f).expect("prime powers are at least 2"))
        .collect()
}

/// Every group of order `k` this crate knows about, and whether that list is
/// all groups of order `k` up to isomorphism.
pub fn group_corpus(k: u64, limits: &Limits) -> Result<(Vec<FiniteGroup>, bool)> {
    if k == 0 {
        return Err(Error::Parse("group order must be positive".into()));
    }
    limits.check_order(k as u128)?;
    let mut groups = abelian_groups_of_order(k)
        .iter()
        .map(|s| FiniteGroup::abelian(s, limits))
        .collect::<Result<Vec<_>>>()?;
    let extra: &[&str] = match k {
        6 => &["S3"],
        8 => &["D4", "Q8"],
        _ => &[],
    };
    for name in extra {
        groups.push(parse_group_spec(name, limits)?);
    }
    Ok((groups, k <= 8 || is_abelian_number(k)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCensus {
    pub order: u64,
    pub filter: Filter,
    pub total: usize,
    /// False when groups of this order exist that the corpus lacks.
    pub complete: bool,
    pub per_group: Vec<(String, usize)>,
}

/// Sums class counts over the corpus of order `k`. Non-isomorphic additive
/// groups never give isomorphic rings, so the sum is the count for order `k`.
pub fn census_by_order(k: u64, filter: Filter, limits: &Limits) -> Result<OrderCensus> {
    let (groups, complete) = group_corpus(k, limits)?;
    let mut per_group = Vec::new();
    for g in &groups {
        let report = classify(g, filter, limits)?;
        per_group.push((report.group, report.total_classes));
    }
    Ok(OrderCensus {
        order: k,
        filter,
        total: per_group.iter().map(|(_, c)| c).sum(),
        complete,
        per_group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::{enumerate_endomorphisms_ordered, DfsOrder};

    fn group(spec: &str) -> FiniteGroup {
        parse_group_spec(spec, &Limits::default()).unwrap()
    }

    #[test]
    fn s3_census() {
        let all = classify(&group("S3"), Filter::All, &Limits::default()).unwrap();
        assert_eq!(all.total_classes, 10);
        assert_eq!(all.counts.essential3, Some(3));
        assert_eq!(all.counts.essential4, Some(3));
        assert_eq!(all.counts.inessential, Some(7));
        assert_eq!(all.counts.associative, Some(6));
        let assoc = classify(&group("S3"), Filter::Associative, &Limits::default()).unwrap();
        assert_eq!(assoc.total_classes, 6);
        assert_eq!(assoc.counts.all, None);
    }

    #[test]
    fn c6_census() {
        let l = Limits::default();
        let r = classify(&group("Z6"), Filter::Associative, &l).unwrap();
        assert_eq!(r.total_classes, 16);
        assert_eq!(r.counts.commutative_associative, Some(4));
        assert_eq!(r.counts.band, Some(4));
        assert_eq!(classify(&group("Z6"), Filter::Band, &l).unwrap().total_classes, 4);
    }

    #[test]
    fn filters_agree_with_full_census() {
        let l = Limits::default();
        for spec in ["S3", "V", "Z4", "Z4+Z2", "D4"] {
            let g = group(spec);
            let all = classify(&g, Filter::All, &l).unwrap();
            for f in Filter::ALL {
                let expect = all.representatives.iter().filter(|c| f.accepts(&c.props)).count();
                assert_eq!(classify(&g, f, &l).unwrap().total_classes, expect, "{spec} {f}");
            }
        }
    }

    #[test]
    fn dfs_order_does_not_change_counts() {
        let l = Limits::default();
        for spec in ["D4", "Z4+Z2"] {
            let g = group(spec);
            let autos = enumerate_automorphisms(&g, &l).unwrap();
            let mut down = enumerate_endomorphisms_ordered(&g, &l, DfsOrder::Descending).unwrap();
            down.reverse();
            let mut rev_autos = autos.clone();
            rev_autos.reverse();
            let a = classify(&g, Filter::All, &l).unwrap();
            let b = classify_with(&g, &down, &rev_autos, Filter::All, &l).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn invariant_factor_corpus() {
        let names = |k| abelian_groups_of_order(k).iter().map(AbelianSpec::name).collect::<Vec<_>>();
        assert_eq!(names(8), vec!["Z8", "Z4+Z2", "Z2+Z2+Z2"]);
        assert_eq!(names(12), vec!["Z12", "Z6+Z2"]);
        assert_eq!(names(1), vec!["Z1"]);
        let (g8, complete) = group_corpus(8, &Limits::default()).unwrap();
        assert_eq!(g8.len(), 5);
        assert!(complete);
        assert!(!group_corpus(10, &Limits::default()).unwrap().1);
        assert!(group_corpus(9, &Limits::default()).unwrap().1);
    }

    #[test]
    fn order_census() {
        let l = Limits::default();
        assert_eq!(census_by_order(6, Filter::Associative, &l).unwrap().total, 22);
        assert_eq!(census_by_order(1, Filter::All, &l).unwrap().total, 1);
    }

    #[test]
    fn filter_parsing() {
        assert_eq!("band".parse::<Filter>().unwrap(), Filter::Band);
        assert!("rings".parse::<Filter>().is_err());
    }
}
