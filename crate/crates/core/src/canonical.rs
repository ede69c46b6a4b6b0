//! Diagonal forms of commuting idempotent pairs on finite abelian groups.
//!
//! A commuting idempotent pair `(e1, e2)` splits `A` into four summands
//! according to whether each map fixes or kills an element. Sending the
//! standard ppc-basis onto a ppc-basis of that split conjugates the pair to
//! diagonal form. On `r` copies of `Z_{p^n}` a further permutation of the
//! basis gives a normal form described by three integers `(s, t1, t2)`.

use crate::arith::first_primes;
use crate::endo::{compose, EndoPair, Endomorphism};
use crate::error::{Error, Result};
use crate::group::{ppc_decompose, subgroup_ppc_basis, AbelianSpec, Elem, FiniteGroup, Limits, PpcBasis};
use serde::Serialize;
use std::fmt;

/// `e_i -> d_i e_i` on the standard ppc-basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DiagonalEndo {
    pub coefficients: Vec<u64>,
}

impl DiagonalEndo {
    pub fn is_idempotent(&self) -> bool {
        self.coefficients.iter().all(|&d| d <= 1)
    }

    pub fn to_endomorphism(&self, g: &FiniteGroup, basis: &PpcBasis) -> Result<Endomorphism> {
        let images: Vec<Elem> = basis
            .elements()
            .iter()
            .zip(&self.coefficients)
            .map(|(&e, &d)| g.mul(d, e))
            .collect();
        Endomorphism::from_basis_images(g, basis, &images)
    }

    /// Reads the coefficients of `f`, or `None` if `f` is not diagonal.
    pub fn of(g: &FiniteGroup, basis: &PpcBasis, f: &Endomorphism) -> Option<Self> {
        let mut coefficients = Vec::with_capacity(basis.rank());
        for (i, &e) in basis.elements().iter().enumerate() {
            let c = basis.coords(f.apply(e))?;
            if c.iter().enumerate().any(|(j, &v)| j != i && v != 0) {
                return None;
            }
            coefficients.push(c[i]);
        }
        debug_assert_eq!(
            DiagonalEndo { coefficients: coefficients.clone() }.to_endomorphism(g, basis).ok().as_ref(),
            Some(f)
        );
        Some(DiagonalEndo { coefficients })
    }
}

/// `alpha^-1 e_k alpha = delta_k` for `k = 1, 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagonalization {
    pub alpha: Endomorphism,
    pub first: DiagonalEndo,
    pub second: DiagonalEndo,
}

fn check_commuting_idempotent(pair: &EndoPair) -> Result<()> {
    if pair.is_commuting_idempotent() {
        Ok(())
    } else {
        Err(Error::NotCommutingIdempotents)
    }
}

/// Conjugates a commuting idempotent pair on an abelian group to a pair of
/// `{0,1}`-diagonal maps on the standard ppc-basis.
///
/// The four summands are taken in the order fixed-by-both, fixed-by-first
/// only, fixed-by-second only, killed-by-both. Each standard basis element
/// is matched with the first unused summand basis element of the same order.
pub fn diagonalize_pair(g: &FiniteGroup, pair: &EndoPair) -> Result<Diagonalization> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if pair.first.degree() != g.order() || pair.second.degree() != g.order() {
        return Err(Error::GroupMismatch);
    }
    check_commuting_idempotent(pair)?;
    let standard = ppc_decompose(g)?;
    let (e1, e2) = (&pair.first, &pair.second);
    let summand = |fix1: bool, fix2: bool| -> Vec<Elem> {
        let hit = |f: &Endomorphism, x: Elem, fix: bool| f.apply(x) == if fix { x } else { 0 };
        g.elements().filter(|&x| hit(e1, x, fix1) && hit(e2, x, fix2)).collect()
    };
    let mut xs: Vec<(Elem, u64)> = Vec::with_capacity(standard.rank());
    for (fix1, fix2) in [(true, true), (true, false), (false, true), (false, false)] {
        let b = subgroup_ppc_basis(g, &summand(fix1, fix2))?;
        xs.extend(b.elements().iter().copied().zip(b.orders().iter().copied()));
    }
    if xs.len() != standard.rank() {
        return Err(Error::Verification(format!(
            "summand bases have {} elements, rank is {}",
            xs.len(),
            standard.rank()
        )));
    }
    let mut used = vec![false; xs.len()];
    let mut images = Vec::with_capacity(xs.len());
    for &o in standard.orders() {
        let j = (0..xs.len())
            .find(|&j| !used[j] && xs[j].1 == o)
            .ok_or_else(|| Error::Verification("summand orders do not match the standard basis".into()))?;
        used[j] = true;
        images.push(xs[j].0);
    }
    let alpha = Endomorphism::from_basis_images(g, &standard, &images)?;
    let inv = alpha
        .inverse()
        .ok_or_else(|| Error::Verification("summand bases do not form a basis".into()))?;
    let conj = |f: &Endomorphism| compose(&inv, &compose(f, &alpha));
    let diag = |f: &Endomorphism| {
        DiagonalEndo::of(g, &standard, &conj(f))
            .filter(DiagonalEndo::is_idempotent)
            .ok_or_else(|| Error::Verification(format!("conjugate of {f} is not a 0/1 diagonal")))
    };
    Ok(Diagonalization {
        first: diag(e1)?,
        second: diag(e2)?,
        alpha,
    })
}

/// `0 <= t1 <= s <= t2 <= r`. `delta1` fixes `e_1..e_s` and kills the rest;
/// `delta2` fixes `e_1..e_t1` and `e_{s+1}..e_t2` and kills the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalTriple {
    pub s: u32,
    pub t1: u32,
    pub t2: u32,
}

impl CanonicalTriple {
    pub fn new(s: u32, t1: u32, t2: u32, r: u32) -> Result<Self> {
        if t1 <= s && s <= t2 && t2 <= r {
            Ok(CanonicalTriple { s, t1, t2 })
        } else {
            Err(Error::Parse(format!("({s},{t1},{t2}) is not a canonical triple for rank {r}")))
        }
    }

    /// 1-based indices fixed by `delta1`.
    pub fn fixed_by_first(&self) -> std::ops::RangeInclusive<u32> {
        1..=self.s
    }

    /// Indices among `1..=s` fixed by `delta2`.
    pub fn fixed_by_second_inside(&self) -> std::ops::RangeInclusive<u32> {
        1..=self.t1
    }

    /// Indices among `s+1..=r` fixed by `delta2`.
    pub fn fixed_by_second_outside(&self) -> std::ops::RangeInclusive<u32> {
        self.s + 1..=self.t2
    }

    pub fn diagonals(&self, r: u32) -> (DiagonalEndo, DiagonalEndo) {
        let d1 = (1..=r).map(|i| (i <= self.s) as u64).collect();
        let d2 = (1..=r)
            .map(|i| (i <= self.t1 || (self.s < i && i <= self.t2)) as u64)
            .collect();
        (DiagonalEndo { coefficients: d1 }, DiagonalEndo { coefficients: d2 })
    }

    /// The canonical pair itself as endomorphisms of `g`.
    pub fn pair(&self, g: &FiniteGroup) -> Result<EndoPair> {
        let basis = ppc_decompose(g)?;
        let (d1, d2) = self.diagonals(basis.rank() as u32);
        EndoPair::new(d1.to_endomorphism(g, &basis)?, d2.to_endomorphism(g, &basis)?)
    }
}

impl fmt::Display for CanonicalTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.s, self.t1, self.t2)
    }
}

/// `Some((p^n, r))` when `g` is `r` copies of `Z_{p^n}`.
pub fn homocyclic_type(g: &FiniteGroup) -> Option<(u64, usize)> {
    let basis = ppc_decompose(g).ok()?;
    match basis.orders() {
        [] => Some((1, 0)),
        [o, rest @ ..] if rest.iter().all(|x| x == o) => Some((*o, basis.rank())),
        _ => None,
    }
}

/// The canonical triple of a commuting idempotent pair on `r` copies of `Z_{p^n}`.
///
/// Reads `s`, `t1` and `t2` off the diagonal form: `s` counts basis elements
/// fixed by `delta1`, `t1` those fixed by both, and `t2 - s` those fixed by
/// `delta2` alone. These counts are ranks of summands, hence similarity invariants.
pub fn canonical_form(g: &FiniteGroup, pair: &EndoPair) -> Result<CanonicalTriple> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let (_, r) = homocyclic_type(g).ok_or(Error::NotElementaryAbelian)?;
    let d = diagonalize_pair(g, pair)?;
    let (a, b) = (&d.first.coefficients, &d.second.coefficients);
    let both = a.iter().zip(b).filter(|&(&x, &y)| x == 1 && y == 1).count() as u32;
    let s = a.iter().filter(|&&x| x == 1).count() as u32;
    let only2 = a.iter().zip(b).filter(|&(&x, &y)| x == 0 && y == 1).count() as u32;
    CanonicalTriple::new(s, both, s + only2, r as u32)
}

/// All triples `0 <= t1 <= s <= t2 <= r`, sorted.
pub fn enumerate_canonical_pairs(r: u32) -> Vec<CanonicalTriple> {
    let mut out = Vec::new();
    for s in 0..=r {
        for t1 in 0..=s {
            for t2 in s..=r {
                out.push(CanonicalTriple { s, t1, t2 });
            }
        }
    }
    out
}

/// `(r+1)(r+2)(r+3)/6`.
pub fn count_formula(r: u32) -> u128 {
    let r = r as u128;
    (r + 1) * (r + 2) * (r + 3) / 6
}

/// `4^r`, `None` on overflow.
pub fn bound_4r(r: u32) -> Option<u128> {
    4u128.checked_pow(r)
}

/// `2^r`, `None` on overflow.
pub fn bound_band(r: u32) -> Option<u128> {
    2u128.checked_pow(r)
}

/// `Z_{p_1 ... p_r}` for the first `r` primes.
pub fn tightness_witness(r: usize, limits: &Limits) -> Result<FiniteGroup> {
    let n = first_primes(r)
        .into_iter()
        .try_fold(1u64, u64::checked_mul)
        .ok_or(Error::CapExceeded {
            order: usize::MAX,
            cap: limits.order_cap,
        })?;
    limits.check_order(n as u128)?;
    FiniteGroup::abelian(&AbelianSpec::cyclic(n)?, limits)
}

/// The automorphism permuting the standard basis of `r` copies of `Z_{p^n}`:
/// `e_i -> e_{perm[i]}`.
pub fn permutation_automorphism(g: &FiniteGroup, perm: &[usize]) -> Result<Endomorphism> {
    homocyclic_type(g).ok_or(Error::NotElementaryAbelian)?;
    let basis = ppc_decompose(g)?;
    let mut seen = vec![false; basis.rank()];
    if perm.len() != basis.rank() || perm.iter().any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true)) {
        return Err(Error::Parse(format!("{perm:?} is not a permutation of the basis")));
    }
    let images: Vec<Elem> = perm.iter().map(|&i| basis.elements()[i]).collect();
    Endomorphism::from_basis_images(g, &basis, &images)
}
