//! Prime-power cyclic (ppc) bases of finite abelian groups and subgroups.

use super::{Elem, FiniteGroup};
use crate::arith::{factorize, prime_power};
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

/// A basis `b_1..b_r` of prime-power orders; every element of the spanned
/// (sub)group is `sum c_i b_i` for exactly one coordinate vector `c`.
///
/// Basis elements are sorted by `(prime, exponent)` ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PpcBasis {
    elements: Vec<Elem>,
    orders: Vec<u64>,
    /// Element at mixed-radix coordinate index `k` (first coordinate least significant).
    by_index: Vec<Elem>,
    /// Inverse of `by_index`, `NONE` outside the spanned subgroup.
    index_of: Vec<u32>,
}

impl PpcBasis {
    fn build(g: &FiniteGroup, elements: Vec<Elem>) -> Result<Self> {
        let orders: Vec<u64> = elements.iter().map(|&b| g.element_order(b)).collect();
        let size: u64 = orders.iter().product();
        let mut by_index = Vec::with_capacity(size as usize);
        let mut index_of = vec![NONE; g.order()];
        by_index.push(0);
        index_of[0] = 0;
        // Extend coordinate by coordinate: block for b_i holds c*b_i + (earlier span).
        let mut span = 1usize;
        for (&b, &o) in elements.iter().zip(&orders) {
            let mut shift = 0;
            for _ in 1..o {
                shift = g.add(shift, b);
                for k in 0..span {
                    let x = g.add(by_index[k], shift);
                    by_index.push(x);
                }
            }
            span *= o as usize;
        }
        for (k, &x) in by_index.iter().enumerate() {
            if index_of[x as usize] != NONE && k != 0 {
                return Err(Error::Verification(format!(
                    "ppc basis {elements:?} is not independent"
                )));
            }
            index_of[x as usize] = k as u32;
        }
        Ok(PpcBasis {
            elements,
            orders,
            by_index,
            index_of,
        })
    }

    pub fn rank(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of elements in the spanned subgroup.
    pub fn span_size(&self) -> usize {
        self.by_index.len()
    }

    /// Spanned elements in coordinate order.
    pub fn spanned(&self) -> &[Elem] {
        &self.by_index
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.index_of[x as usize] != NONE
    }

    /// Coordinate vector of `x`, `None` when `x` lies outside the span.
    pub fn coords(&self, x: Elem) -> Option<Vec<u64>> {
        let mut k = self.index_of[x as usize];
        if k == NONE {
            return None;
        }
        Some(
            self.orders
                .iter()
                .map(|&o| {
                    let c = k as u64 % o;
                    k /= o as u32;
                    c
                })
                .collect(),
        )
    }

    /// `sum c_i b_i`, coordinates reduced modulo the basis orders.
    pub fn element(&self, coords: &[u64]) -> Elem {
        let mut k = 0u64;
        for (c, &o) in coords.iter().zip(&self.orders).rev() {
            k = k * o + c % o;
        }
        self.by_index[k as usize]
    }

    /// For each coordinate index `k > 0`: the index `k - weight(i)` and the basis slot `i`
    /// of its first non-zero coordinate. Lets linear maps be evaluated in one pass.
    pub(crate) fn predecessor_steps(&self) -> Vec<(u32, u8)> {
        let mut steps = vec![(0u32, 0u8); self.by_index.len()];
        for (k, step) in steps.iter_mut().enumerate().skip(1) {
            let mut rest = k as u64;
            let mut weight = 1u64;
            for (i, &o) in self.orders.iter().enumerate() {
                if !rest.is_multiple_of(o) {
                    *step = ((k as u64 - weight) as u32, i as u8);
                    break;
                }
                rest /= o;
                weight *= o;
            }
        }
        steps
    }
}

/// Standard ppc-basis of an abelian group.
///
/// Groups built from an [`AbelianSpec`](super::AbelianSpec) split each cyclic
/// factor into coprime prime-power parts; table-built groups go through a
/// bounded basis search. The trivial group has the empty basis.
pub fn ppc_decompose(g: &FiniteGroup) -> Result<PpcBasis> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let Some(spec) = g.spec() else {
        let all: Vec<Elem> = g.elements().collect();
        return subgroup_ppc_basis(g, &all);
    };
    let mut parts: Vec<(u64, u32, Elem)> = Vec::new();
    let mut weight = 1u64;
    for &m in spec.factors() {
        // unit vector of this factor has index `weight`
        let unit = weight as Elem;
        for (p, e) in factorize(m) {
            let pe = p.pow(e);
            parts.push((p, e, g.mul(m / pe, unit)));
        }
        weight *= m;
    }
    parts.sort_by_key(|&(p, e, _)| (p, e));
    PpcBasis::build(g, parts.into_iter().map(|(_, _, b)| b).collect())
}

pub fn ppc_rank(g: &FiniteGroup) -> Result<usize> {
    Ok(ppc_decompose(g)?.rank())
}

/// Ppc-basis of the subgroup `elems` of an abelian group, found by backtracking
/// over candidates with the required orders. Deterministic: candidates are tried
/// in ascending index order.
pub fn subgroup_ppc_basis(g: &FiniteGroup, elems: &[Elem]) -> Result<PpcBasis> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if !g.is_subgroup(elems) {
        return Err(Error::BadSubset {
            what: "a subgroup",
            reason: "not closed under the group operations".into(),
        });
    }
    let mut sorted = elems.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut basis: Vec<(u64, u32, Elem)> = Vec::new();
    for (p, _) in factorize(sorted.len() as u64) {
        let primary: Vec<Elem> = sorted
            .iter()
            .copied()
            .filter(|&x| x == 0 || prime_power(g.element_order(x)).is_some_and(|(q, _)| q == p))
            .collect();
        let exponents = primary_type(g, &primary, p);
        let mut needed: Vec<u32> = exponents.clone();
        needed.sort_unstable_by(|a, b| b.cmp(a));
        let mut member = vec![false; g.order()];
        member[0] = true;
        let mut chosen = Vec::new();
        if !search(g, &primary, p, &needed, &mut member, &mut vec![0], &mut chosen) {
            return Err(Error::Verification(format!(
                "no ppc basis found for the {p}-primary part"
            )));
        }
        for b in chosen {
            let (_, e) = prime_power(g.element_order(b)).expect("prime power order");
            basis.push((p, e, b));
        }
    }
    basis.sort_by_key(|&(p, e, _)| (p, e));
    let result = PpcBasis::build(g, basis.into_iter().map(|(_, _, b)| b).collect())?;
    if result.span_size() != sorted.len() {
        return Err(Error::Verification("ppc basis does not span".into()));
    }
    Ok(result)
}

/// Exponents `e` of the cyclic factors `Z_{p^e}` of an abelian p-group, from
/// the sizes of the layers `{x : p^k x = 0}`.
fn primary_type(g: &FiniteGroup, primary: &[Elem], p: u64) -> Vec<u32> {
    let max_exp = primary
        .iter()
        .map(|&x| prime_power(g.element_order(x)).map_or(0, |(_, e)| e))
        .max()
        .unwrap_or(0);
    // at_least[k] = number of factors with exponent >= k
    let layer = |k: u32| primary.iter().filter(|&&x| p.pow(k).is_multiple_of(g.element_order(x))).count();
    let mut at_least = vec![0u32; max_exp as usize + 2];
    for k in 1..=max_exp {
        let ratio = layer(k) / layer(k - 1);
        at_least[k as usize] = (ratio as f64).log(p as f64).round() as u32;
    }
    let mut out = Vec::new();
    for k in 1..=max_exp {
        let exactly = at_least[k as usize] - at_least[k as usize + 1];
        out.extend(std::iter::repeat_n(k, exactly as usize));
    }
    out
}

fn search(
    g: &FiniteGroup,
    primary: &[Elem],
    p: u64,
    needed: &[u32],
    member: &mut Vec<bool>,
    span: &mut Vec<Elem>,
    chosen: &mut Vec<Elem>,
) -> bool {
    let Some((&exp, rest)) = needed.split_first() else {
        return true;
    };
    let order = p.pow(exp);
    for &x in primary {
        if member[x as usize] || g.element_order(x) != order {
            continue;
        }
        // independent iff no non-zero multiple of x falls in the span
        let mut multiple = x;
        let mut independent = true;
        for _ in 1..order {
            if member[multiple as usize] {
                independent = false;
                break;
            }
            multiple = g.add(multiple, x);
        }
        if !independent {
            continue;
        }
        let old_len = span.len();
        let mut shift = 0;
        for _ in 1..order {
            shift = g.add(shift, x);
            for k in 0..old_len {
                let y = g.add(span[k], shift);
                member[y as usize] = true;
                span.push(y);
            }
        }
        chosen.push(x);
        if search(g, primary, p, rest, member, span, chosen) {
            return true;
        }
        chosen.pop();
        for &y in &span[old_len..] {
            member[y as usize] = false;
        }
        span.truncate(old_len);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{AbelianSpec, Limits};

    fn ab(f: &[u64]) -> FiniteGroup {
        FiniteGroup::abelian(&AbelianSpec::new(f.to_vec()).unwrap(), &Limits::default()).unwrap()
    }

    fn table_copy(g: &FiniteGroup) -> FiniteGroup {
        FiniteGroup::from_table("copy", &g.rows(), &Limits::default()).unwrap()
    }

    #[test]
    fn c6_has_rank_two() {
        let b = ppc_decompose(&ab(&[6])).unwrap();
        assert_eq!(b.orders(), &[2, 3]);
        assert_eq!(b.elements(), &[3, 2]);
        let t = ppc_decompose(&table_copy(&ab(&[6]))).unwrap();
        assert_eq!(t.orders(), &[2, 3]);
    }

    #[test]
    fn trivial_and_klein() {
        assert_eq!(ppc_rank(&FiniteGroup::trivial()).unwrap(), 0);
        let v = ppc_decompose(&ab(&[2, 2])).unwrap();
        assert_eq!(v.orders(), &[2, 2]);
        assert_eq!(v.elements(), &[1, 2]);
    }

    #[test]
    fn z30_splits_into_three() {
        assert_eq!(ppc_rank(&ab(&[30])).unwrap(), 3);
    }

    #[test]
    fn non_abelian_rejected() {
        assert_eq!(ppc_decompose(&FiniteGroup::s3()), Err(Error::NotAbelian));
    }

    #[test]
    fn rank_is_an_isomorphism_invariant() {
        assert_eq!(ppc_rank(&ab(&[2, 3])).unwrap(), ppc_rank(&ab(&[3, 2])).unwrap());
        assert_eq!(ppc_rank(&ab(&[12, 2])).unwrap(), 3);
        assert_eq!(ppc_rank(&table_copy(&ab(&[12, 2]))).unwrap(), 3);
        assert_eq!(ppc_decompose(&table_copy(&ab(&[8, 4, 2]))).unwrap().orders(), &[2, 4, 8]);
    }

    #[test]
    fn coordinates_round_trip() {
        for f in [&[4u64, 2][..], &[6, 10], &[9, 3], &[2, 2, 2]] {
            let g = ab(f);
            let b = ppc_decompose(&g).unwrap();
            assert_eq!(b.span_size(), g.order());
            for x in g.elements() {
                let c = b.coords(x).unwrap();
                assert_eq!(b.element(&c), x);
            }
        }
    }

    #[test]
    fn subgroup_basis() {
        let g = ab(&[4, 2]);
        // {0, 2, 4, 6} = <(2,0), (0,1)>
        let sub = vec![0, 2, 4, 6];
        let b = subgroup_ppc_basis(&g, &sub).unwrap();
        assert_eq!(b.orders(), &[2, 2]);
        assert_eq!(b.span_size(), 4);
        assert!(subgroup_ppc_basis(&g, &[0, 1]).is_err());
    }
}
