//! Exhaustive enumeration of End(G) and Aut(G).
//!
//! Abelian groups: an endomorphism is fixed by the images of a ppc-basis,
//! and `b_i` may go to any element whose order divides `|b_i|`. Non-abelian
//! groups: DFS over images of a greedy generating set, closing each choice
//! under right translation by generators and rejecting on the first clash.

use super::Endomorphism;
use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::group::{ppc_decompose, Elem, FiniteGroup, Limits, PpcBasis};

const UNSET: Elem = Elem::MAX;

/// Order in which DFS branches are explored. Results are sorted afterwards,
/// so this only matters for cross-checking determinism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DfsOrder {
    #[default]
    Ascending,
    Descending,
}

/// `|End(G)|` for abelian `G`: the product of `gcd(|b_i|, |b_j|)` over basis pairs.
/// `None` for non-abelian groups.
pub fn endomorphism_count(g: &FiniteGroup) -> Option<u128> {
    let basis = ppc_decompose(g).ok()?;
    let o = basis.orders();
    Some(
        o.iter()
            .flat_map(|&a| o.iter().map(move |&b| gcd(a, b) as u128))
            .product(),
    )
}

/// Calls `visit` once per endomorphism, in an unspecified but deterministic order.
/// Returning `false` from `visit` stops the walk early.
pub fn for_each_endomorphism(g: &FiniteGroup, order: DfsOrder, mut visit: impl FnMut(&[Elem]) -> bool) {
    if g.is_abelian() {
        let basis = ppc_decompose(g).expect("abelian group has a ppc basis");
        abelian_walk(g, &basis, order, &mut visit);
    } else {
        generic_walk(g, order, &mut visit);
    }
}

/// All endomorphisms, sorted lexicographically by image array.
pub fn enumerate_endomorphisms(g: &FiniteGroup, limits: &Limits) -> Result<Vec<Endomorphism>> {
    enumerate_endomorphisms_ordered(g, limits, DfsOrder::Ascending)
}

pub fn enumerate_endomorphisms_ordered(
    g: &FiniteGroup,
    limits: &Limits,
    order: DfsOrder,
) -> Result<Vec<Endomorphism>> {
    limits.check_order(g.order() as u128)?;
    if let Some(count) = endomorphism_count(g) {
        if count > limits.endo_budget as u128 {
            return Err(Error::BudgetExceeded {
                what: format!("End({})", g.name()),
                needed: count,
                budget: limits.endo_budget,
            });
        }
    }
    let mut out = Vec::new();
    let mut over = false;
    for_each_endomorphism(g, order, |m| {
        out.push(Endomorphism::from_map_unchecked(m.to_vec()));
        over = out.len() > limits.endo_budget;
        !over
    });
    if over {
        return Err(Error::BudgetExceeded {
            what: format!("End({})", g.name()),
            needed: out.len() as u128,
            budget: limits.endo_budget,
        });
    }
    out.sort_unstable();
    debug_assert!(out.iter().all(|e| super::check_homomorphism(g, e.as_slice()).is_ok()));
    Ok(out)
}

/// All automorphisms, sorted. Abelian groups are searched directly over
/// independent basis images, so this stays cheap even when End(G) is large.
pub fn enumerate_automorphisms(g: &FiniteGroup, limits: &Limits) -> Result<Vec<Endomorphism>> {
    limits.check_order(g.order() as u128)?;
    let mut out = Vec::new();
    if g.is_abelian() {
        let basis = ppc_decompose(g)?;
        let mut images = Vec::with_capacity(basis.rank());
        let mut span = vec![false; g.order()];
        span[0] = true;
        if !abelian_autos(g, &basis, &mut images, &span, &mut out, limits.endo_budget) {
            return Err(Error::BudgetExceeded {
                what: format!("Aut({})", g.name()),
                needed: out.len() as u128,
                budget: limits.endo_budget,
            });
        }
    } else {
        for e in enumerate_endomorphisms(g, limits)? {
            if e.is_bijective() {
                out.push(e);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Writes the linear extension of basis images `img` into `map`.
pub(crate) fn extend_linearly(
    g: &FiniteGroup,
    basis: &PpcBasis,
    steps: &[(u32, u8)],
    img: &[Elem],
    map: &mut [Elem],
) {
    let by_index = basis.spanned();
    let mut values = vec![0 as Elem; by_index.len()];
    for k in 1..by_index.len() {
        let (pred, slot) = steps[k];
        values[k] = g.add(values[pred as usize], img[slot as usize]);
        map[by_index[k] as usize] = values[k];
    }
    map[0] = 0;
}

fn candidates(g: &FiniteGroup, order: u64, dfs: DfsOrder) -> Vec<Elem> {
    let mut c: Vec<Elem> = g.elements().filter(|&y| order.is_multiple_of(g.element_order(y))).collect();
    if dfs == DfsOrder::Descending {
        c.reverse();
    }
    c
}

fn abelian_walk(g: &FiniteGroup, basis: &PpcBasis, dfs: DfsOrder, visit: &mut dyn FnMut(&[Elem]) -> bool) {
    let steps = basis.predecessor_steps();
    let cands: Vec<Vec<Elem>> = basis.orders().iter().map(|&o| candidates(g, o, dfs)).collect();
    let r = basis.rank();
    let mut pos = vec![0usize; r];
    let mut img: Vec<Elem> = cands.iter().map(|c| c[0]).collect();
    let mut map = vec![0 as Elem; g.order()];
    loop {
        extend_linearly(g, basis, &steps, &img, &mut map);
        if !visit(&map) {
            return;
        }
        // odometer, last slot fastest
        let mut i = r;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            pos[i] += 1;
            if pos[i] < cands[i].len() {
                img[i] = cands[i][pos[i]];
                break;
            }
            pos[i] = 0;
            img[i] = cands[i][0];
        }
    }
}

fn abelian_autos(
    g: &FiniteGroup,
    basis: &PpcBasis,
    images: &mut Vec<Elem>,
    span: &[bool],
    out: &mut Vec<Endomorphism>,
    budget: usize,
) -> bool {
    let i = images.len();
    if i == basis.rank() {
        if out.len() >= budget {
            return false;
        }
        let mut map = vec![0; g.order()];
        extend_linearly(g, basis, &basis.predecessor_steps(), images, &mut map);
        out.push(Endomorphism::from_map_unchecked(map));
        return true;
    }
    let o = basis.orders()[i];
    for y in g.elements() {
        if g.element_order(y) != o {
            continue;
        }
        // y must meet the current span trivially
        let mut multiple = y;
        let mut disjoint = true;
        for _ in 1..o {
            if span[multiple as usize] {
                disjoint = false;
                break;
            }
            multiple = g.add(multiple, y);
        }
        if !disjoint {
            continue;
        }
        let mut next = span.to_vec();
        let members: Vec<Elem> = g.elements().filter(|&s| span[s as usize]).collect();
        let mut shift = y;
        for _ in 1..o {
            for &s in &members {
                next[g.add(s, shift) as usize] = true;
            }
            shift = g.add(shift, y);
        }
        images.push(y);
        let ok = abelian_autos(g, basis, images, &next, out, budget);
        images.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Greedy generating set: repeatedly add the least element outside the
/// current subgroup, preferring elements of larger order.
fn generating_set(g: &FiniteGroup) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut sub = vec![0 as Elem];
    while sub.len() < g.order() {
        let mut inside = vec![false; g.order()];
        for &x in &sub {
            inside[x as usize] = true;
        }
        let next = g
            .elements()
            .filter(|&x| !inside[x as usize])
            .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
            .expect("proper subgroup has a complement element");
        gens.push(next);
        sub = g.subgroup_generated(&gens);
    }
    gens
}

fn generic_walk(g: &FiniteGroup, dfs: DfsOrder, visit: &mut dyn FnMut(&[Elem]) -> bool) {
    let gens = generating_set(g);
    let cands: Vec<Vec<Elem>> = gens.iter().map(|&x| candidates(g, g.element_order(x), dfs)).collect();
    let mut img = vec![0 as Elem; gens.len()];
    let mut map = vec![UNSET; g.order()];
    let mut queue = Vec::with_capacity(g.order());
    generic_dfs(g, &gens, &cands, 0, &mut img, &mut map, &mut queue, visit);
}

#[allow(clippy::too_many_arguments)]
fn generic_dfs(
    g: &FiniteGroup,
    gens: &[Elem],
    cands: &[Vec<Elem>],
    depth: usize,
    img: &mut [Elem],
    map: &mut [Elem],
    queue: &mut Vec<Elem>,
    visit: &mut dyn FnMut(&[Elem]) -> bool,
) -> bool {
    if depth == gens.len() {
        if close_under_generators(g, gens, img, map, queue) {
            return visit(map);
        }
        return true;
    }
    for &y in &cands[depth] {
        img[depth] = y;
        // partial consistency: the subgroup of the first depth+1 generators must close
        if depth + 1 < gens.len() && !close_under_generators(g, &gens[..=depth], &img[..=depth], map, queue) {
            continue;
        }
        if !generic_dfs(g, gens, cands, depth + 1, img, map, queue, visit) {
            return false;
        }
    }
    true
}

/// Propagates `f(x + g_i) = f(x) + img_i` from `f(0) = 0`. Returns false on a
/// conflict. On success over a full generating set, `map` is a homomorphism.
fn close_under_generators(g: &FiniteGroup, gens: &[Elem], img: &[Elem], map: &mut [Elem], queue: &mut Vec<Elem>) -> bool {
    map.fill(UNSET);
    map[0] = 0;
    queue.clear();
    queue.push(0);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(img) {
            let y = g.add(x, s);
            let v = g.add(map[x as usize], t);
            match map[y as usize] {
                UNSET => {
                    map[y as usize] = v;
                    queue.push(y);
                }
                w if w != v => return false,
                _ => {}
            }
        }
    }
    true
}
