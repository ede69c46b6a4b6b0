mod common;

use common::*;
use icr::endo::{EndoPair, Endomorphism};
use icr::group::{parse_group_spec, FiniteGroup, Limits};
use icr::interchange::{are_isomorphic, check_interchange_law, extract_pair, magma_props, InterchangeNearRing, IsoVerdict};
use proptest::prelude::*;
use std::sync::{Arc, OnceLock};

struct Fixture {
    group: Arc<FiniteGroup>,
    table: Tbl,
    pairs: Vec<(Map, Map)>,
    autos: Autos,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        ["Z2", "Z5", "Z6", "V", "Z4+Z2", "S3", "D4", "Q8", "Z3+Z3", "Z12"]
            .iter()
            .map(|s| {
                let group = Arc::new(parse_group_spec(s, &Limits::default()).unwrap());
                let table = Tbl::of(&group);
                let endos = brute_endos(&table);
                let pairs = image_commuting_pairs(&table, &endos);
                let autos = Autos::from_endos(&endos);
                Fixture {
                    group,
                    table,
                    pairs,
                    autos,
                }
            })
            .collect()
    })
}

fn ring(f: &Fixture, (e, h): &(Map, Map)) -> InterchangeNearRing {
    let pair = EndoPair::new(
        Endomorphism::new(&f.group, e.clone()).unwrap(),
        Endomorphism::new(&f.group, h.clone()).unwrap(),
    )
    .unwrap();
    InterchangeNearRing::from_pair(&f.group, pair).unwrap()
}

/// (fixture, pair index, automorphism index) as raw selectors.
fn selection() -> impl Strategy<Value = (usize, prop::sample::Index, prop::sample::Index)> {
    (0..fixtures().len(), any::<prop::sample::Index>(), any::<prop::sample::Index>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pair_round_trips((fi, pi, _) in selection()) {
        let f = &fixtures()[fi];
        let p = &f.pairs[pi.index(f.pairs.len())];
        let r = ring(f, p);
        let expected = product(&f.table, &p.0, &p.1);
        prop_assert_eq!(r.product_table(), expected.as_slice());
        prop_assert!(interchange_literal(&f.table, r.product_table()).is_none());
        let back = extract_pair(&f.group, r.product_table()).unwrap();
        prop_assert_eq!(back.first.as_slice(), p.0.as_slice());
        prop_assert_eq!(back.second.as_slice(), p.1.as_slice());
        let text = r.pair().notation();
        prop_assert_eq!(&EndoPair::parse(&f.group, &text).unwrap(), r.pair());
    }

    #[test]
    fn conjugate_pairs_give_isomorphic_rings((fi, pi, ai) in selection()) {
        let f = &fixtures()[fi];
        let p = &f.pairs[pi.index(f.pairs.len())];
        let (a, ainv) = &f.autos.maps[ai.index(f.autos.len())];
        let q = (compose(ainv, &compose(&p.0, a)), compose(ainv, &compose(&p.1, a)));
        let (r1, r2) = (ring(f, p), ring(f, &q));
        match are_isomorphic(&r1, &r2, &Limits::default()).unwrap() {
            IsoVerdict::Isomorphic { phi } => {
                let phi = phi.as_slice();
                prop_assert!(is_bijective(phi) && is_hom(&f.table, phi));
                for x in f.table.elems() {
                    for y in f.table.elems() {
                        prop_assert_eq!(phi[r1.mul(x, y) as usize], r2.mul(phi[x as usize], phi[y as usize]));
                    }
                }
            }
            IsoVerdict::NotIsomorphic { reason } => prop_assert!(false, "not isomorphic: {}", reason),
        }
        let n = f.table.n;
        prop_assert_eq!(
            transport_min(n, r1.product_table(), &f.autos),
            transport_min(n, r2.product_table(), &f.autos)
        );
    }

    #[test]
    fn law_check_matches_literal_search((fi, pi, _) in selection(), edits in prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>()), 0..3)) {
        let f = &fixtures()[fi];
        let n = f.table.n;
        let p = &f.pairs[pi.index(f.pairs.len())];
        let mut table = product(&f.table, &p.0, &p.1);
        for (cell, value) in edits {
            table[cell.index(n * n)] = value.index(n) as u32;
        }
        let literal = interchange_literal(&f.table, &table).is_none();
        prop_assert_eq!(interchange_quadratic(&f.table, &table).is_none(), literal);
        prop_assert_eq!(check_interchange_law(&f.group, &table).is_ok(), literal);
    }

    #[test]
    fn flags_match_table((fi, pi, _) in selection()) {
        let f = &fixtures()[fi];
        let n = f.table.n;
        let p = &f.pairs[pi.index(f.pairs.len())];
        let r = ring(f, p);
        let props = magma_props(&r).unwrap();
        let t = r.product_table();
        prop_assert_eq!(props.associative, associative(n, t));
        prop_assert_eq!(props.commutative, commutative(n, t));
        prop_assert_eq!(props.idempotent, idempotent_magma(n, t));
        prop_assert_eq!(props.zero_semigroup, t.iter().all(|&v| v == 0));
    }
}
