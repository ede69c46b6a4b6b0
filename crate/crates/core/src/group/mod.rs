//! Finite groups written additively, stored as dense Cayley tables.
//!
//! Elements are the indices `0..n`, and index 0 is always the identity. Every
//! constructor validates the full set of group axioms, so a [`FiniteGroup`]
//! value is known to be a group.

mod ppc;
mod table;

pub use ppc::{ppc_decompose, ppc_rank, subgroup_ppc_basis, PpcBasis};
pub use table::{format_cayley, parse_cayley, parse_group_spec, read_cayley_file};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Element index. Index 0 is the identity.
pub type Elem = u32;

pub const DEFAULT_CAP: usize = 256;

/// Size limits applied before any exhaustive work starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order accepted by constructors.
    pub order_cap: usize,
    /// Largest endomorphism set that may be materialised.
    pub endo_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: DEFAULT_CAP,
            endo_budget: 1 << 18,
        }
    }
}

impl Limits {
    pub fn with_cap(order_cap: usize) -> Self {
        Limits {
            order_cap,
            ..Limits::default()
        }
    }

    pub fn check_order(&self, order: u128) -> Result<()> {
        if order > self.order_cap as u128 {
            return Err(Error::CapExceeded {
                order: usize::try_from(order).unwrap_or(usize::MAX),
                cap: self.order_cap,
            });
        }
        Ok(())
    }
}

/// The direct sum `Z_{m1} + ... + Z_{mk}`. The empty list is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianSpec {
    factors: Vec<u64>,
}

impl AbelianSpec {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = factors.iter().find(|&&m| m < 2) {
            return Err(Error::BadFactor(bad));
        }
        Ok(AbelianSpec { factors })
    }

    pub fn cyclic(m: u64) -> Result<Self> {
        if m == 1 {
            return Ok(AbelianSpec { factors: vec![] });
        }
        Self::new(vec![m])
    }

    /// `r` copies of `Z_{p^n}`.
    pub fn homocyclic(modulus: u64, r: usize) -> Result<Self> {
        Self::new(vec![modulus; r])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u128 {
        self.factors.iter().map(|&m| m as u128).product()
    }

    pub fn name(&self) -> String {
        if self.factors.is_empty() {
            return "Z1".to_string();
        }
        self.factors
            .iter()
            .map(|m| format!("Z{m}"))
            .collect::<Vec<_>>()
            .join("+")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    add: Vec<Elem>,
    neg: Vec<Elem>,
    orders: Vec<u64>,
    abelian: bool,
    spec: Option<AbelianSpec>,
}

impl FiniteGroup {
    /// Builds `Z_{m1} + ... + Z_{mk}` in mixed-radix order, first factor least significant.
    pub fn abelian(spec: &AbelianSpec, limits: &Limits) -> Result<Self> {
        limits.check_order(spec.order())?;
        let n = spec.order() as usize;
        let radices = spec.factors();
        let digits = |mut x: usize| -> Vec<u64> {
            radices
                .iter()
                .map(|&m| {
                    let d = (x as u64) % m;
                    x /= m as usize;
                    d
                })
                .collect()
        };
        let compose = |ds: &[u64]| -> Elem {
            let mut idx = 0u64;
            for (d, &m) in ds.iter().zip(radices).rev() {
                idx = idx * m + d;
            }
            idx as Elem
        };
        let coords: Vec<Vec<u64>> = (0..n).map(digits).collect();
        let mut add = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let sum: Vec<u64> = coords[x]
                    .iter()
                    .zip(&coords[y])
                    .zip(radices)
                    .map(|((a, b), m)| (a + b) % m)
                    .collect();
                add[x * n + y] = compose(&sum);
            }
        }
        let mut g = Self::from_flat_unchecked(spec.name(), n, add);
        g.spec = Some(spec.clone());
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// Validates a square Cayley table whose row `x` lists `x + y`.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<Elem>], limits: &Limits) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        limits.check_order(n as u128)?;
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v as usize >= n {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v as u64,
                    });
                }
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(name, n, flat)
    }

    pub(crate) fn from_flat(name: impl Into<String>, n: usize, add: Vec<Elem>) -> Result<Self> {
        let g = Self::from_flat_unchecked(name.into(), n, add);
        g.validate()?;
        Ok(g)
    }

    fn from_flat_unchecked(name: String, n: usize, add: Vec<Elem>) -> Self {
        let mut neg = vec![0; n];
        for x in 0..n {
            if let Some(y) = (0..n).find(|&y| add[x * n + y] == 0) {
                neg[x] = y as Elem;
            }
        }
        let mut abelian = true;
        'outer: for x in 0..n {
            for y in (x + 1)..n {
                if add[x * n + y] != add[y * n + x] {
                    abelian = false;
                    break 'outer;
                }
            }
        }
        let mut g = FiniteGroup {
            name,
            n,
            add,
            neg,
            orders: vec![],
            abelian,
            spec: None,
        };
        g.orders = (0..n as Elem).map(|x| g.compute_order(x)).collect();
        g
    }

    fn compute_order(&self, x: Elem) -> u64 {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 && k <= self.n as u64 {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    /// Identity, inverses, Latin-square and associativity checks, in that order.
    fn validate(&self) -> Result<()> {
        let n = self.n;
        for x in 0..n {
            if self.add[x] as usize != x || self.add[x * n] as usize != x {
                return Err(Error::MissingIdentity { x: x as Elem });
            }
        }
        for x in 0..n {
            let y = self.neg[x] as usize;
            if self.add[x * n + y] != 0 || self.add[y * n + x] != 0 {
                return Err(Error::MissingInverse { x: x as Elem });
            }
        }
        let mut seen = vec![usize::MAX; n];
        for x in 0..n {
            for y in 0..n {
                let v = self.add[x * n + y] as usize;
                if seen[v] == x {
                    return Err(Error::NotLatin {
                        line: "row",
                        index: x as Elem,
                        value: v as Elem,
                    });
                }
                seen[v] = x;
            }
        }
        seen.fill(usize::MAX);
        for y in 0..n {
            for x in 0..n {
                let v = self.add[x * n + y] as usize;
                if seen[v] == y {
                    return Err(Error::NotLatin {
                        line: "column",
                        index: y as Elem,
                        value: v as Elem,
                    });
                }
                seen[v] = y;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.add[x * n + y] as usize;
                for z in 0..n {
                    if self.add[xy * n + z] != self.add[x * n + self.add[y * n + z] as usize] {
                        return Err(Error::NonAssociative {
                            x: x as Elem,
                            y: y as Elem,
                            z: z as Elem,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        Self::from_flat_unchecked("Z1".into(), 1, vec![0])
    }

    /// The symmetric group on three letters with elements `0, a, 2a, b, a+b, 2a+b`
    /// (indices 0..6), from the presentation `3a = 0, 2b = 0, b + a = 2a + b`.
    pub fn s3() -> Self {
        // i*a + j*b  <->  i + 3j
        let n = 6;
        let mut add = vec![0; n * n];
        for x in 0..n {
            let (i, j) = (x % 3, x / 3);
            for y in 0..n {
                let (k, l) = (y % 3, y / 3);
                // j*b + k*a = (-1)^j k*a + j*b
                let moved = if j == 0 { k } else { (3 - k) % 3 };
                add[x * n + y] = (((i + moved) % 3) + 3 * ((j + l) % 2)) as Elem;
            }
        }
        let g = Self::from_flat_unchecked("S3".into(), n, add);
        debug_assert!(g.validate().is_ok());
        g
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn is_trivial(&self) -> bool {
        self.n == 1
    }

    /// Present when the group was built from an [`AbelianSpec`].
    pub fn spec(&self) -> Option<&AbelianSpec> {
        self.spec.as_ref()
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add[x as usize * self.n + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x as usize]
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    /// `k * x` by repeated addition (k may be zero).
    pub fn mul(&self, k: u64, x: Elem) -> Elem {
        let k = k % self.orders[x as usize];
        (0..k).fold(0, |acc, _| self.add(acc, x))
    }

    pub fn element_order(&self, x: Elem) -> u64 {
        self.orders[x as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.n as Elem
    }

    /// Flat row-major addition table.
    pub fn add_table(&self) -> &[Elem] {
        &self.add
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.add.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Same carrier and same addition table (names are ignored).
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.n == other.n && self.add == other.add
    }

    /// Elements commuting with everything.
    pub fn centre(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&z| self.elements().all(|x| self.add(z, x) == self.add(x, z)))
            .collect()
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_generated(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut member = vec![false; self.n];
        let mut list = vec![0];
        member[0] = true;
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &g in gens {
                let y = self.add(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    /// Checks closure under addition and negation and that 0 is present.
    pub fn is_subgroup(&self, elems: &[Elem]) -> bool {
        let mut member = vec![false; self.n];
        for &e in elems {
            member[e as usize] = true;
        }
        member[0]
            && elems.iter().all(|&x| {
                member[self.neg(x) as usize] && elems.iter().all(|&y| member[self.add(x, y) as usize])
            })
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.n)
    }
}
