//! Subrings, ideals, quotients and matrix rings.

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Limits};
use crate::interchange::InterchangeNearRing;
use std::fmt;
use std::sync::Arc;

/// Largest ring order for which ideals are found by trying every subset.
pub const IDEAL_SEARCH_LIMIT: usize = 16;

/// Why a subset is not a subring or not an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsetFailure {
    Empty,
    OutOfRange(Elem),
    NotClosedUnderAdd(Elem, Elem),
    NotClosedUnderNeg(Elem),
    NotClosedUnderMul(Elem, Elem),
    /// `g + x - g` leaves the subset.
    NotNormal { g: Elem, x: Elem },
}

impl fmt::Display for SubsetFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsetFailure::Empty => write!(f, "empty subset"),
            SubsetFailure::OutOfRange(x) => write!(f, "element {x} is not in the ring"),
            SubsetFailure::NotClosedUnderAdd(x, y) => write!(f, "{x} + {y} leaves the subset"),
            SubsetFailure::NotClosedUnderNeg(x) => write!(f, "-{x} leaves the subset"),
            SubsetFailure::NotClosedUnderMul(x, y) => write!(f, "{x} . {y} leaves the subset"),
            SubsetFailure::NotNormal { g, x } => write!(f, "{g} + {x} - {g} leaves the subset"),
        }
    }
}

fn membership(r: &InterchangeNearRing, elems: &[Elem]) -> std::result::Result<Vec<bool>, SubsetFailure> {
    if elems.is_empty() {
        return Err(SubsetFailure::Empty);
    }
    let mut inside = vec![false; r.order()];
    for &x in elems {
        *inside.get_mut(x as usize).ok_or(SubsetFailure::OutOfRange(x))? = true;
    }
    Ok(inside)
}

/// Closed under `+`, negation and the product.
pub fn check_subring(r: &InterchangeNearRing, elems: &[Elem]) -> std::result::Result<(), SubsetFailure> {
    let inside = membership(r, elems)?;
    let g = r.group();
    let members: Vec<Elem> = g.elements().filter(|&x| inside[x as usize]).collect();
    for &x in &members {
        if !inside[g.neg(x) as usize] {
            return Err(SubsetFailure::NotClosedUnderNeg(x));
        }
        for &y in &members {
            if !inside[g.add(x, y) as usize] {
                return Err(SubsetFailure::NotClosedUnderAdd(x, y));
            }
            if !inside[r.mul(x, y) as usize] {
                return Err(SubsetFailure::NotClosedUnderMul(x, y));
            }
        }
    }
    Ok(())
}

/// A subring whose additive group is normal.
pub fn check_ideal(r: &InterchangeNearRing, elems: &[Elem]) -> std::result::Result<(), SubsetFailure> {
    check_subring(r, elems)?;
    let g = r.group();
    for &x in elems {
        for h in g.elements() {
            let c = g.sub(g.add(h, x), h);
            if !elems.contains(&c) {
                return Err(SubsetFailure::NotNormal { g: h, x });
            }
        }
    }
    Ok(())
}

pub fn is_subring(r: &InterchangeNearRing, elems: &[Elem]) -> bool {
    check_subring(r, elems).is_ok()
}

pub fn is_ideal(r: &InterchangeNearRing, elems: &[Elem]) -> bool {
    check_ideal(r, elems).is_ok()
}

/// Every ideal, found by testing all subsets containing 0. Sorted by size,
/// then lexicographically.
pub fn enumerate_ideals(r: &InterchangeNearRing) -> Result<Vec<Vec<Elem>>> {
    let n = r.order();
    if n > IDEAL_SEARCH_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "subset search for ideals".into(),
            needed: 1u128 << n,
            budget: 1 << IDEAL_SEARCH_LIMIT,
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << (n - 1) {
        let subset: Vec<Elem> = std::iter::once(0)
            .chain((1..n as Elem).filter(|&x| mask >> (x - 1) & 1 == 1))
            .collect();
        if is_ideal(r, &subset) {
            out.push(subset);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Ideals not strictly contained in any proper ideal; `R` itself is excluded.
pub fn maximal_ideals(r: &InterchangeNearRing) -> Result<Vec<Vec<Elem>>> {
    let ideals = enumerate_ideals(r)?;
    let n = r.order();
    let proper: Vec<&Vec<Elem>> = ideals.iter().filter(|i| i.len() < n).collect();
    let contains = |big: &[Elem], small: &[Elem]| small.iter().all(|x| big.contains(x));
    Ok(proper
        .iter()
        .filter(|&&i| !proper.iter().any(|&j| j.len() > i.len() && contains(j, i)))
        .map(|&i| i.clone())
        .collect())
}

/// Non-trivial with no ideals besides `{0}` and `R`.
pub fn is_simple(r: &InterchangeNearRing) -> Result<bool> {
    Ok(r.order() > 1 && enumerate_ideals(r)?.len() == 2)
}

/// `R / I` with its cosets. Coset `k` is `cosets[k]`; cosets are sorted by
/// least member, so the ideal itself is coset 0.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ring: InterchangeNearRing,
    pub cosets: Vec<Vec<Elem>>,
}

/// Builds the quotient by an ideal, checking that `+` and the product are
/// well defined on cosets for every pair of elements.
pub fn quotient(r: &InterchangeNearRing, ideal: &[Elem]) -> Result<Quotient> {
    check_ideal(r, ideal).map_err(|f| Error::BadSubset {
        what: "an ideal",
        reason: f.to_string(),
    })?;
    let g = r.group();
    let n = r.order();
    const NONE: usize = usize::MAX;
    let mut coset_of = vec![NONE; n];
    let mut cosets: Vec<Vec<Elem>> = Vec::new();
    for x in g.elements() {
        if coset_of[x as usize] != NONE {
            continue;
        }
        let mut c: Vec<Elem> = ideal.iter().map(|&i| g.add(x, i)).collect();
        c.sort_unstable();
        for &y in &c {
            coset_of[y as usize] = cosets.len();
        }
        cosets.push(c);
    }
    // elements are visited in increasing order, so cosets are already sorted by least member
    let m = cosets.len();
    let mut add = vec![0 as Elem; m * m];
    let mut product = vec![0 as Elem; m * m];
    for (a, ca) in cosets.iter().enumerate() {
        for (b, cb) in cosets.iter().enumerate() {
            add[a * m + b] = coset_of[g.add(ca[0], cb[0]) as usize] as Elem;
            product[a * m + b] = coset_of[r.mul(ca[0], cb[0]) as usize] as Elem;
        }
    }
    for x in g.elements() {
        for y in g.elements() {
            let (a, b) = (coset_of[x as usize], coset_of[y as usize]);
            if coset_of[g.add(x, y) as usize] != add[a * m + b] as usize {
                return Err(Error::Verification(format!("coset sum of {x} and {y} is not well defined")));
            }
            if coset_of[r.mul(x, y) as usize] != product[a * m + b] as usize {
                return Err(Error::Verification(format!("coset product of {x} and {y} is not well defined")));
            }
        }
    }
    let rows: Vec<Vec<Elem>> = add.chunks(m).map(<[Elem]>::to_vec).collect();
    let qg = Arc::new(FiniteGroup::from_table(format!("{}/I", g.name()), &rows, &Limits::with_cap(n))?);
    let ring = InterchangeNearRing::from_product(&qg, product)?;
    Ok(Quotient { ring, cosets })
}

/// `n x n` matrices over `R` with entrywise sum and
/// `(A . B)_ij = sum_k a_ik . b_kj`, the sum taken in increasing `k`.
///
/// A matrix is encoded in mixed radix over its entries in row-major order,
/// entry `(0,0)` least significant.
#[derive(Clone, Debug)]
pub struct MatrixRing {
    pub ring: InterchangeNearRing,
    pub size: usize,
    base: usize,
}

impl MatrixRing {
    pub fn encode(&self, entries: &[Elem]) -> Elem {
        entries.iter().rev().fold(0, |acc, &e| acc * self.base as Elem + e)
    }

    pub fn decode(&self, mut m: Elem) -> Vec<Elem> {
        (0..self.size * self.size)
            .map(|_| {
                let e = m % self.base as Elem;
                m /= self.base as Elem;
                e
            })
            .collect()
    }
}

pub fn matrix_ring(r: &InterchangeNearRing, n: usize, limits: &Limits) -> Result<MatrixRing> {
    if n == 0 {
        return Err(Error::Parse("matrix size must be at least 1".into()));
    }
    let base = r.order();
    let cells = n * n;
    let order = (base as u128)
        .checked_pow(cells as u32)
        .ok_or(Error::CapExceeded {
            order: usize::MAX,
            cap: limits.order_cap,
        })?;
    limits.check_order(order)?;
    let order = order as usize;
    let g = r.group();
    let proto = MatrixRing {
        ring: r.clone(),
        size: n,
        base,
    };
    let decoded: Vec<Vec<Elem>> = (0..order as Elem).map(|m| proto.decode(m)).collect();
    let mut add = Vec::with_capacity(order * order);
    let mut product = Vec::with_capacity(order * order);
    let mut sum = vec![0 as Elem; cells];
    let mut prod = vec![0 as Elem; cells];
    for a in &decoded {
        for b in &decoded {
            for k in 0..cells {
                sum[k] = g.add(a[k], b[k]);
            }
            for i in 0..n {
                for j in 0..n {
                    prod[i * n + j] = (0..n).fold(0, |acc, k| g.add(acc, r.mul(a[i * n + k], b[k * n + j])));
                }
            }
            add.push(proto.encode(&sum));
            product.push(proto.encode(&prod));
        }
    }
    let name = format!("M{n}({})", g.name());
    let mg = Arc::new(FiniteGroup::from_flat(name, order, add)?);
    let ring = InterchangeNearRing::from_product(&mg, product)?;
    Ok(MatrixRing { ring, ..proto })
}
