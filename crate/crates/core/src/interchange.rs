//! Interchange near rings `(G, +, .)` with `x . y = e(x) + h(y)`.
//!
//! Every property here is decided twice: once from the generating pair
//! and once from the product table. Disagreement is reported as
//! [`Error::PropertyMismatch`] and means a bug, not bad input.

use crate::endo::{
    check_homomorphism, commutes, conjugate_with_inverse, enumerate_automorphisms,
    image_commuting_witness, is_idempotent, sums_to_identity, EndoPair, Endomorphism,
};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Limits};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Largest order for which quadruple and triple checks run exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 64;
const SAMPLE_SEED: u64 = 0x1c2_0001;
const SAMPLES: usize = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterchangeNearRing {
    group: Arc<FiniteGroup>,
    product: Vec<Elem>,
    pair: EndoPair,
}

impl InterchangeNearRing {
    /// The ring generated by an image-commuting pair.
    pub fn from_pair(group: &Arc<FiniteGroup>, pair: EndoPair) -> Result<Self> {
        let g = group.as_ref();
        if pair.first.degree() != g.order() || pair.second.degree() != g.order() {
            return Err(Error::GroupMismatch);
        }
        check_homomorphism(g, pair.first.as_slice())?;
        check_homomorphism(g, pair.second.as_slice())?;
        if let Some((x, y)) = image_commuting_witness(g, &pair) {
            return Err(Error::NotImageCommuting { x, y });
        }
        let n = g.order();
        let mut product = Vec::with_capacity(n * n);
        for x in g.elements() {
            let ex = pair.first.apply(x);
            product.extend(g.elements().map(|y| g.add(ex, pair.second.apply(y))));
        }
        debug_assert!(n > 24 || check_interchange_exhaustive(g, &product).is_ok());
        Ok(InterchangeNearRing {
            group: Arc::clone(group),
            product,
            pair,
        })
    }

    /// Recovers the ring from a raw `n*n` product table, checking the law first.
    pub fn from_product(group: &Arc<FiniteGroup>, product: Vec<Elem>) -> Result<Self> {
        let pair = extract_pair(group, &product)?;
        let ring = Self::from_pair(group, pair)?;
        if ring.product != product {
            return Err(Error::Verification("rebuilt product differs from input".into()));
        }
        Ok(ring)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn pair(&self) -> &EndoPair {
        &self.pair
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.product[x as usize * self.group.order() + y as usize]
    }

    pub fn product_table(&self) -> &[Elem] {
        &self.product
    }

    pub fn product_rows(&self) -> Vec<Vec<Elem>> {
        self.product.chunks(self.order()).map(<[Elem]>::to_vec).collect()
    }
}

/// `(x . 0, 0 . x)` read off a product table that satisfies the interchange law.
pub fn extract_pair(g: &FiniteGroup, product: &[Elem]) -> Result<EndoPair> {
    let n = g.order();
    if product.len() != n * n {
        return Err(Error::WrongLength {
            got: product.len(),
            expected: n * n,
        });
    }
    if let Some(&bad) = product.iter().find(|&&v| v as usize >= n) {
        return Err(Error::Parse(format!("product entry {bad} out of range")));
    }
    check_interchange_law(g, product)?;
    let first = (0..n).map(|x| product[x * n]).collect();
    let second = product[..n].to_vec();
    EndoPair::new(
        Endomorphism::from_map_unchecked(first),
        Endomorphism::from_map_unchecked(second),
    )
}

fn quadruple_holds(g: &FiniteGroup, p: &[Elem], q: [Elem; 4]) -> bool {
    let n = g.order();
    let [w, x, y, z] = q;
    let at = |a: Elem, b: Elem| p[a as usize * n + b as usize];
    at(g.add(w, x), g.add(y, z)) == g.add(at(w, y), at(x, z))
}

/// Decides `(w + x) . (y + z) = (w . y) + (x . z)` in `O(n^2)`.
///
/// The law holds exactly when `0 . 0 = 0`, `x . y = x . 0 + 0 . y`, both
/// one-sided maps are homomorphisms and their images commute; each failed
/// condition yields a genuine violating quadruple. Orders up to
/// [`EXHAUSTIVE_LIMIT`] are also checked over all quadruples and the two
/// verdicts compared.
pub fn check_interchange_law(g: &FiniteGroup, product: &[Elem]) -> Result<()> {
    let fast = check_interchange_fast(g, product);
    if g.order() <= EXHAUSTIVE_LIMIT {
        let full = check_interchange_exhaustive(g, product);
        if fast.is_ok() != full.is_ok() {
            return Err(Error::PropertyMismatch("interchange law"));
        }
    }
    fast
}

fn violation(q: [Elem; 4]) -> Error {
    let [w, x, y, z] = q;
    Error::InterchangeViolation { w, x, y, z }
}

fn check_interchange_fast(g: &FiniteGroup, p: &[Elem]) -> Result<()> {
    let n = g.order();
    let at = |a: Elem, b: Elem| p[a as usize * n + b as usize];
    let candidates = || {
        let mut out = Vec::new();
        if at(0, 0) != 0 {
            out.push([0, 0, 0, 0]);
        }
        for x in g.elements() {
            for y in g.elements() {
                if at(x, y) != g.add(at(x, 0), at(0, y)) {
                    out.push([x, 0, 0, y]);
                }
                if at(g.add(x, y), 0) != g.add(at(x, 0), at(y, 0)) {
                    out.push([x, y, 0, 0]);
                }
                if at(0, g.add(x, y)) != g.add(at(0, x), at(0, y)) {
                    out.push([0, 0, x, y]);
                }
                if g.add(at(x, 0), at(0, y)) != g.add(at(0, y), at(x, 0)) {
                    out.push([0, x, y, 0]);
                }
                if !out.is_empty() {
                    return out;
                }
            }
        }
        out
    };
    match candidates().into_iter().find(|&q| !quadruple_holds(g, p, q)) {
        Some(q) => Err(violation(q)),
        None => Ok(()),
    }
}

/// All `n^4` quadruples.
pub fn check_interchange_exhaustive(g: &FiniteGroup, p: &[Elem]) -> Result<()> {
    let n = g.order();
    for w in g.elements() {
        for x in g.elements() {
            let wx = g.add(w, x) as usize * n;
            for y in g.elements() {
                let wy = p[w as usize * n + y as usize];
                for z in g.elements() {
                    let lhs = p[wx + g.add(y, z) as usize];
                    if lhs != g.add(wy, p[x as usize * n + z as usize]) {
                        return Err(violation([w, x, y, z]));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Failures of the four basic identities, each with its witness elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub failures: Vec<(String, Vec<Elem>)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `0.0 = 0`; zero distributes on both sides; `x.y = x.0 + 0.y`;
/// `(-x).(-y) = -(x.y)`. All exhaustive.
pub fn check_basic_identities(r: &InterchangeNearRing) -> IdentityReport {
    let g = r.group();
    let mut report = IdentityReport::default();
    let mut fail = |name: &str, w: Vec<Elem>| {
        if !report.failures.iter().any(|(n, _)| n == name) {
            report.failures.push((name.to_string(), w));
        }
    };
    if r.mul(0, 0) != 0 {
        fail("zero_idempotent", vec![0]);
    }
    for x in g.elements() {
        for y in g.elements() {
            let s = g.add(x, y);
            if r.mul(0, s) != g.add(r.mul(0, x), r.mul(0, y)) || r.mul(s, 0) != g.add(r.mul(x, 0), r.mul(y, 0)) {
                fail("zero_distributes", vec![x, y]);
            }
            if r.mul(x, y) != g.add(r.mul(x, 0), r.mul(0, y)) {
                fail("splits_through_zero", vec![x, y]);
            }
            if r.mul(g.neg(x), g.neg(y)) != g.neg(r.mul(x, y)) {
                fail("negation", vec![x, y]);
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EssentialTag {
    /// `(zeta, zeta)`: `x . y = 0`.
    Zero,
    /// `(iota, zeta)`: `x . y = x`.
    LeftZero,
    /// `(zeta, iota)`: `x . y = y`.
    RightZero,
    /// `(iota, iota)`: `x . y = x + y`, the improper one.
    AdditiveCopy,
    Inessential,
}

impl EssentialTag {
    pub fn of(pair: &EndoPair) -> Self {
        let kind = |f: &Endomorphism| {
            if f.is_zero() {
                Some(false)
            } else if f.is_identity() {
                Some(true)
            } else {
                None
            }
        };
        match (kind(&pair.first), kind(&pair.second)) {
            (Some(false), Some(false)) => EssentialTag::Zero,
            (Some(true), Some(false)) => EssentialTag::LeftZero,
            (Some(false), Some(true)) => EssentialTag::RightZero,
            (Some(true), Some(true)) => EssentialTag::AdditiveCopy,
            _ => EssentialTag::Inessential,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EssentialTag::Zero => "zero",
            EssentialTag::LeftZero => "left_zero",
            EssentialTag::RightZero => "right_zero",
            EssentialTag::AdditiveCopy => "additive_copy",
            EssentialTag::Inessential => "inessential",
        }
    }

    /// Essential in the narrow sense: zero, left zero or right zero.
    pub fn is_essential3(self) -> bool {
        matches!(self, EssentialTag::Zero | EssentialTag::LeftZero | EssentialTag::RightZero)
    }

    /// Also counts the additive copy.
    pub fn is_essential4(self) -> bool {
        self != EssentialTag::Inessential
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MagmaProps {
    pub associative: bool,
    pub commutative: bool,
    pub idempotent: bool,
    pub zero_semigroup: bool,
    pub proper: bool,
    pub essential_tag: EssentialTag,
}

impl MagmaProps {
    /// Associative and idempotent.
    pub fn band(&self) -> bool {
        self.associative && self.idempotent
    }
}

/// The three one-sided conditions `(x.0).0 = x.0`, `(0.x).0 = 0.(x.0)` and
/// `0.(0.x) = 0.x`, which together are equivalent to associativity.
pub fn one_sided_associativity(r: &InterchangeNearRing) -> bool {
    r.group().elements().all(|x| {
        let x0 = r.mul(x, 0);
        let ox = r.mul(0, x);
        r.mul(x0, 0) == x0 && r.mul(ox, 0) == r.mul(0, x0) && r.mul(0, ox) == ox
    })
}

/// Element `a` with `a.x = x.a = a` for all `x`.
pub fn annihilator(r: &InterchangeNearRing) -> Option<Elem> {
    r.group()
        .elements()
        .find(|&a| r.group().elements().all(|x| r.mul(a, x) == a && r.mul(x, a) == a))
}

fn structural_props(g: &FiniteGroup, pair: &EndoPair) -> MagmaProps {
    let (e, h) = (&pair.first, &pair.second);
    let tag = EssentialTag::of(pair);
    MagmaProps {
        associative: is_idempotent(e) && is_idempotent(h) && commutes(e, h),
        commutative: e == h,
        idempotent: sums_to_identity(g, e, h),
        zero_semigroup: e.is_zero() && h.is_zero(),
        proper: !(e.is_identity() && h.is_identity()),
        essential_tag: tag,
    }
}

fn table_props(r: &InterchangeNearRing) -> MagmaProps {
    let g = r.group();
    let n = g.order();
    let triples: Box<dyn Iterator<Item = [Elem; 3]>> = if n <= EXHAUSTIVE_LIMIT {
        Box::new(g.elements().flat_map(move |x| {
            g.elements()
                .flat_map(move |y| g.elements().map(move |z| [x, y, z]))
        }))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let samples: Vec<[Elem; 3]> = (0..SAMPLES)
            .map(|_| [0; 3].map(|_| rng.gen_range(0..n as Elem)))
            .collect();
        Box::new(samples.into_iter())
    };
    let mut associative = true;
    for [x, y, z] in triples {
        if r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z)) {
            associative = false;
            break;
        }
    }
    let first = r.mul(0, 0);
    let pairs = || g.elements().flat_map(|x| g.elements().map(move |y| (x, y)));
    MagmaProps {
        associative,
        commutative: pairs().all(|(x, y)| r.mul(x, y) == r.mul(y, x)),
        idempotent: g.elements().all(|x| r.mul(x, x) == x),
        zero_semigroup: r.product_table().iter().all(|&v| v == first),
        proper: r.product_table() != g.add_table(),
        essential_tag: table_tag(r),
    }
}

/// Essential tag read from the table alone.
fn table_tag(r: &InterchangeNearRing) -> EssentialTag {
    let g = r.group();
    let all = |f: &dyn Fn(Elem, Elem) -> Elem| {
        g.elements()
            .all(|x| g.elements().all(|y| r.mul(x, y) == f(x, y)))
    };
    if all(&|_, _| 0) {
        EssentialTag::Zero
    } else if all(&|x, _| x) {
        EssentialTag::LeftZero
    } else if all(&|_, y| y) {
        EssentialTag::RightZero
    } else if all(&|x, y| g.add(x, y)) {
        EssentialTag::AdditiveCopy
    } else {
        EssentialTag::Inessential
    }
}

/// Properties from the generating pair, cross-checked against the table.
///
/// Triple checks are exhaustive up to [`EXHAUSTIVE_LIMIT`] and seeded
/// samples above it; a sampled check can only confirm, never refute, an
/// associative verdict, so a mismatch there is still a hard error.
pub fn magma_props(r: &InterchangeNearRing) -> Result<MagmaProps> {
    let s = structural_props(r.group(), r.pair());
    let t = table_props(r);
    let checks = [
        ("associative", s.associative == t.associative),
        ("associative via one-sided conditions", s.associative == one_sided_associativity(r)),
        ("commutative", s.commutative == t.commutative),
        ("idempotent", s.idempotent == t.idempotent),
        ("zero semigroup", s.zero_semigroup == t.zero_semigroup),
        ("proper", s.proper == t.proper),
        ("essential tag", s.essential_tag == t.essential_tag),
        ("annihilator forces zero semigroup", annihilator(r).is_none() || s.zero_semigroup),
    ];
    match checks.iter().find(|(_, ok)| !ok) {
        Some((what, _)) => Err(Error::PropertyMismatch(what)),
        None => Ok(s),
    }
}

/// Properties from the generating pair only; no table work.
pub fn pair_props(g: &FiniteGroup, pair: &EndoPair) -> MagmaProps {
    structural_props(g, pair)
}

/// Outcome of an isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// `phi` is an isomorphism from the first ring onto the second.
    Isomorphic { phi: Endomorphism },
    NotIsomorphic { reason: &'static str },
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic { .. })
    }
}

/// Largest order for which the similarity verdict is cross-checked by a
/// direct search for a product-preserving automorphism.
pub const ISO_CROSS_CHECK_LIMIT: usize = 8;

/// Decides isomorphism through pair similarity.
pub fn are_isomorphic(r1: &InterchangeNearRing, r2: &InterchangeNearRing, limits: &Limits) -> Result<IsoVerdict> {
    if !r1.group().same_table(r2.group()) {
        return Ok(IsoVerdict::NotIsomorphic {
            reason: "additive groups differ",
        });
    }
    let autos = enumerate_automorphisms(r1.group(), limits)?;
    are_isomorphic_with(r1, r2, &autos)
}

/// As [`are_isomorphic`] with a precomputed Aut(G).
pub fn are_isomorphic_with(
    r1: &InterchangeNearRing,
    r2: &InterchangeNearRing,
    autos: &[Endomorphism],
) -> Result<IsoVerdict> {
    if !r1.group().same_table(r2.group()) {
        return Ok(IsoVerdict::NotIsomorphic {
            reason: "additive groups differ",
        });
    }
    let similar = autos.iter().find_map(|a| {
        let inv = a.inverse()?;
        let p = r1.pair();
        let c = EndoPair {
            first: conjugate_with_inverse(a, &inv, &p.first),
            second: conjugate_with_inverse(a, &inv, &p.second),
        };
        (&c == r2.pair()).then_some(inv)
    });
    let verdict = match similar {
        // a^-1 e1 a = e2 makes a^-1 a ring isomorphism R1 -> R2
        Some(phi) => IsoVerdict::Isomorphic { phi },
        None => IsoVerdict::NotIsomorphic {
            reason: "pairs are not similar",
        },
    };
    if let IsoVerdict::Isomorphic { phi } = &verdict {
        if !preserves_product(r1, r2, phi) {
            return Err(Error::PropertyMismatch("similarity witness is not a ring isomorphism"));
        }
    }
    if r1.order() <= ISO_CROSS_CHECK_LIMIT {
        let direct = autos.iter().any(|phi| preserves_product(r1, r2, phi));
        if direct != verdict.is_isomorphic() {
            return Err(Error::PropertyMismatch("similarity versus direct isomorphism search"));
        }
    }
    Ok(verdict)
}

/// `phi(x .1 y) = phi(x) .2 phi(y)` for all `x, y`.
pub fn preserves_product(r1: &InterchangeNearRing, r2: &InterchangeNearRing, phi: &Endomorphism) -> bool {
    let g = r1.group();
    g.elements().all(|x| {
        g.elements()
            .all(|y| phi.apply(r1.mul(x, y)) == r2.mul(phi.apply(x), phi.apply(y)))
    })
}

/// `sum_i (x_i . y_i) = (sum_i x_i) . (sum_i y_i)`, sums taken left to right.
pub fn n_fold_identity_holds(r: &InterchangeNearRing, xs: &[Elem], ys: &[Elem]) -> bool {
    assert_eq!(xs.len(), ys.len(), "n-fold identity needs equal-length sequences");
    let g = r.group();
    let lhs = xs.iter().zip(ys).fold(0, |acc, (&x, &y)| g.add(acc, r.mul(x, y)));
    let sx = xs.iter().fold(0, |acc, &x| g.add(acc, x));
    let sy = ys.iter().fold(0, |acc, &y| g.add(acc, y));
    lhs == r.mul(sx, sy)
}

/// Serialisable view of a ring: additive table, generating pair, product and properties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingRecord {
    pub format: u32,
    pub group: String,
    pub order: usize,
    pub add_table: Vec<Vec<Elem>>,
    pub pair: [String; 2],
    pub product_table: Vec<Vec<Elem>>,
    pub props: MagmaProps,
}

impl RingRecord {
    pub fn new(r: &InterchangeNearRing) -> Result<Self> {
        Ok(RingRecord {
            format: 1,
            group: r.group().name().to_string(),
            order: r.order(),
            add_table: r.group().rows(),
            pair: [r.pair().first.notation(), r.pair().second.notation()],
            product_table: r.product_rows(),
            props: magma_props(r)?,
        })
    }

    /// Rebuilds the ring from the tables and checks the stored pair and properties.
    pub fn to_ring(&self, limits: &Limits) -> Result<InterchangeNearRing> {
        if self.format != 1 {
            return Err(Error::Parse(format!("unsupported record format {}", self.format)));
        }
        let g = Arc::new(FiniteGroup::from_table(self.group.clone(), &self.add_table, limits)?);
        let n = g.order();
        if self.product_table.len() != n || self.product_table.iter().any(|row| row.len() != n) {
            return Err(Error::Parse("product table shape does not match the group".into()));
        }
        let ring = InterchangeNearRing::from_product(&g, self.product_table.concat())?;
        let stored = EndoPair::parse(&g, &format!("{},{}", self.pair[0], self.pair[1]))?;
        if &stored != ring.pair() {
            return Err(Error::Verification("stored pair disagrees with product table".into()));
        }
        if magma_props(&ring)? != self.props {
            return Err(Error::Verification("stored properties disagree with product table".into()));
        }
        Ok(ring)
    }
}
