//! Similarity classes: orbits of endomorphism pairs under simultaneous
//! conjugation `(f, h) -> (a^-1 f a, a^-1 h a)` by all automorphisms `a`.

use super::{conjugate_with_inverse, EndoPair, Endomorphism};
use crate::error::Result;
use crate::group::{FiniteGroup, Limits};
use std::collections::HashMap;

/// One similarity class restricted to the input set. `members` is sorted and
/// `members[0]` is the representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub members: Vec<EndoPair>,
}

impl Orbit {
    pub fn representative(&self) -> &EndoPair {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Enumerates Aut(G) and partitions `pairs` into similarity orbits.
pub fn similarity_orbits(g: &FiniteGroup, pairs: &[EndoPair], limits: &Limits) -> Result<Vec<Orbit>> {
    let autos = super::enumerate_automorphisms(g, limits)?;
    Ok(orbits_under(&autos, pairs))
}

/// Partitions `pairs` under conjugation by every map in `autos`, which must
/// be the full automorphism group. Orbits are sorted by representative.
///
/// Pairs whose conjugates fall outside the input are still grouped correctly
/// as long as the input is a union of full orbits; otherwise each orbit is
/// the trace of a full orbit on the input.
pub fn orbits_under(autos: &[Endomorphism], pairs: &[EndoPair]) -> Vec<Orbit> {
    let mut sorted: Vec<&EndoPair> = pairs.iter().collect();
    sorted.sort_unstable();
    sorted.dedup();
    let index: HashMap<&EndoPair, usize> = sorted.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let inverses: Vec<Endomorphism> = autos
        .iter()
        .map(|a| a.inverse().expect("automorphism is invertible"))
        .collect();
    // conjugation memo keyed by component, shared across the two slots
    let mut memo: HashMap<(usize, &Endomorphism), Endomorphism> = HashMap::new();
    let mut seen = vec![false; sorted.len()];
    let mut orbits = Vec::new();
    for start in 0..sorted.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let seed = sorted[start];
        let mut members = vec![start];
        for (k, (a, inv)) in autos.iter().zip(&inverses).enumerate() {
            let first = memo
                .entry((k, &seed.first))
                .or_insert_with(|| conjugate_with_inverse(a, inv, &seed.first))
                .clone();
            let second = memo
                .entry((k, &seed.second))
                .or_insert_with(|| conjugate_with_inverse(a, inv, &seed.second))
                .clone();
            let image = EndoPair { first, second };
            if let Some(&j) = index.get(&image) {
                if !seen[j] {
                    seen[j] = true;
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        orbits.push(Orbit {
            members: members.into_iter().map(|i| sorted[i].clone()).collect(),
        });
        if memo.len() > 1 << 20 {
            memo.clear();
        }
    }
    orbits
}

/// Orbit count by Burnside's lemma: the mean number of pairs fixed by an
/// automorphism. `pairs` must be a union of full orbits. Returns `None` if
/// the fixed-point total is not divisible by `|autos|`, which signals that
/// the input is not closed under conjugation.
pub fn burnside_orbit_count(autos: &[Endomorphism], pairs: &[EndoPair]) -> Option<usize> {
    if autos.is_empty() {
        return None;
    }
    let mut distinct: HashMap<&Endomorphism, usize> = HashMap::new();
    let mut indexed = Vec::with_capacity(pairs.len());
    for p in pairs {
        let next = distinct.len();
        let i = *distinct.entry(&p.first).or_insert(next);
        let next = distinct.len();
        let j = *distinct.entry(&p.second).or_insert(next);
        indexed.push((i, j));
    }
    let mut ends: Vec<&Endomorphism> = vec![distinct.keys().next()?; distinct.len()];
    for (&e, &i) in &distinct {
        ends[i] = e;
    }
    let mut fixed_total = 0usize;
    let mut fixed = vec![false; ends.len()];
    for a in autos {
        // a^-1 f a = f  iff  f a = a f
        for (slot, f) in fixed.iter_mut().zip(&ends) {
            *slot = (0..f.degree() as u32).all(|x| f.apply(a.apply(x)) == a.apply(f.apply(x)));
        }
        fixed_total += indexed.iter().filter(|&&(i, j)| fixed[i] && fixed[j]).count();
    }
    fixed_total.is_multiple_of(autos.len()).then(|| fixed_total / autos.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::{enumerate_automorphisms, enumerate_endomorphisms};
    use crate::group::parse_group_spec;

    fn singleton_pairs(g: &FiniteGroup) -> Vec<EndoPair> {
        enumerate_endomorphisms(g, &Limits::default())
            .unwrap()
            .into_iter()
            .map(|e| EndoPair::new(e, Endomorphism::identity(g)).unwrap())
            .collect()
    }

    #[test]
    fn s3_endomorphism_classes() {
        let g = FiniteGroup::s3();
        let orbits = similarity_orbits(&g, &singleton_pairs(&g), &Limits::default()).unwrap();
        let classes: Vec<Vec<String>> = orbits
            .iter()
            .map(|o| o.members.iter().map(|p| p.first.notation()).collect())
            .collect();
        assert_eq!(
            classes,
            vec![
                vec!["(000000)"],
                vec!["(000333)", "(000444)", "(000555)"],
                vec!["(012345)"],
                vec!["(012453)", "(012534)"],
                vec!["(021354)", "(021435)", "(021543)"],
            ]
        );
    }

    #[test]
    fn klein_commuting_idempotent_orbit() {
        let l = Limits::default();
        let g = parse_group_spec("V", &l).unwrap();
        let autos = enumerate_automorphisms(&g, &l).unwrap();
        let pair = |s: &str| EndoPair::parse(&g, s).unwrap();
        let pairs: Vec<EndoPair> = ["(0022),(0101)", "(0033),(0110)", "(0220),(0303)", "(0101),(0022)"]
            .map(pair)
            .to_vec();
        let orbits = orbits_under(&autos, &pairs);
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].representative(), &pair("(0022),(0101)"));
    }

    #[test]
    fn cyclic_classes_are_singletons() {
        let g = parse_group_spec("Z6", &Limits::default()).unwrap();
        let pairs = singleton_pairs(&g);
        let orbits = similarity_orbits(&g, &pairs, &Limits::default()).unwrap();
        assert_eq!(orbits.len(), pairs.len());
    }

    #[test]
    fn burnside_agrees_with_orbits() {
        let l = Limits::default();
        for spec in ["S3", "V", "Z4+Z2", "D4"] {
            let g = parse_group_spec(spec, &l).unwrap();
            let autos = enumerate_automorphisms(&g, &l).unwrap();
            let ends = enumerate_endomorphisms(&g, &l).unwrap();
            let pairs: Vec<EndoPair> = ends
                .iter()
                .flat_map(|a| ends.iter().map(move |b| EndoPair::new(a.clone(), b.clone()).unwrap()))
                .collect();
            let orbits = orbits_under(&autos, &pairs);
            assert_eq!(burnside_orbit_count(&autos, &pairs), Some(orbits.len()), "{spec}");
            assert_eq!(orbits.iter().map(Orbit::len).sum::<usize>(), pairs.len());
        }
    }
}
