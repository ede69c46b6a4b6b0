//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's enumeration, classification or law-checking code; groups
//! are read only through their addition tables.

#![allow(dead_code)]

use icr::group::FiniteGroup;
use std::collections::HashSet;

pub type Map = Vec<u32>;

/// An addition table with negation precomputed.
pub struct Tbl {
    pub n: usize,
    pub add: Vec<u32>,
    pub neg: Vec<u32>,
}

impl Tbl {
    pub fn of(g: &FiniteGroup) -> Self {
        Self::from_flat(g.order(), g.add_table().to_vec())
    }

    pub fn from_flat(n: usize, add: Vec<u32>) -> Self {
        let neg = (0..n)
            .map(|x| (0..n as u32).find(|&y| add[x * n + y as usize] == 0).expect("inverse"))
            .collect();
        Tbl { n, add, neg }
    }

    #[inline]
    pub fn add(&self, x: u32, y: u32) -> u32 {
        self.add[x as usize * self.n + y as usize]
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg[y as usize])
    }

    pub fn elems(&self) -> std::ops::Range<u32> {
        0..self.n as u32
    }
}

/// Every endomorphism, by depth-first assignment of images with each
/// homomorphism constraint tested as soon as its three entries are known.
pub fn brute_endos(t: &Tbl) -> Vec<Map> {
    let n = t.n;
    let mut checks: Vec<Vec<(u32, u32, u32)>> = vec![Vec::new(); n];
    for x in t.elems() {
        for y in t.elems() {
            let z = t.add(x, y);
            checks[x.max(y).max(z) as usize].push((x, y, z));
        }
    }
    let mut out = Vec::new();
    let mut f = vec![0u32; n];
    fn go(k: usize, t: &Tbl, checks: &[Vec<(u32, u32, u32)>], f: &mut Map, out: &mut Vec<Map>) {
        if k == t.n {
            out.push(f.clone());
            return;
        }
        for v in 0..t.n as u32 {
            f[k] = v;
            if checks[k].iter().all(|&(x, y, z)| f[z as usize] == t.add(f[x as usize], f[y as usize])) {
                go(k + 1, t, checks, f, out);
            }
        }
    }
    // f(0) = 0 is forced by f(0) = f(0) + f(0).
    go(1, t, &checks, &mut f, &mut out);
    out.sort();
    out
}

pub fn is_bijective(f: &[u32]) -> bool {
    let mut seen = vec![false; f.len()];
    f.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
}

pub fn invert(f: &[u32]) -> Map {
    let mut inv = vec![0; f.len()];
    for (x, &y) in f.iter().enumerate() {
        inv[y as usize] = x as u32;
    }
    inv
}

/// `f o g`, applying `g` first.
pub fn compose(f: &[u32], g: &[u32]) -> Map {
    g.iter().map(|&y| f[y as usize]).collect()
}

pub fn is_hom(t: &Tbl, f: &[u32]) -> bool {
    t.elems()
        .all(|x| t.elems().all(|y| f[t.add(x, y) as usize] == t.add(f[x as usize], f[y as usize])))
}

pub fn is_idem(f: &[u32]) -> bool {
    f.iter().all(|&y| f[y as usize] == y)
}

pub fn commute(f: &[u32], g: &[u32]) -> bool {
    (0..f.len()).all(|x| f[g[x] as usize] == g[f[x] as usize])
}

/// Automorphisms paired with their inverses.
pub struct Autos {
    pub maps: Vec<(Map, Map)>,
}

impl Autos {
    pub fn from_endos(endos: &[Map]) -> Self {
        Autos {
            maps: endos
                .iter()
                .filter(|f| is_bijective(f))
                .map(|f| (f.clone(), invert(f)))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }
}

pub fn image_commuting(t: &Tbl, e: &[u32], h: &[u32]) -> bool {
    e.iter().all(|&a| h.iter().all(|&b| t.add(a, b) == t.add(b, a)))
}

/// `x . y = e(x) + h(y)`, row-major.
pub fn product(t: &Tbl, e: &[u32], h: &[u32]) -> Map {
    e.iter().flat_map(|&a| h.iter().map(move |&b| t.add(a, b))).collect()
}

pub fn associative(n: usize, p: &[u32]) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| {
            let xy = p[x * n + y] as usize;
            (0..n).all(|z| p[xy * n + z] == p[x * n + p[y * n + z] as usize])
        })
    })
}

pub fn commutative(n: usize, p: &[u32]) -> bool {
    (0..n).all(|x| (0..n).all(|y| p[x * n + y] == p[y * n + x]))
}

pub fn idempotent_magma(n: usize, p: &[u32]) -> bool {
    (0..n).all(|x| p[x * n + x] as usize == x)
}

/// The least product table among all transports by additive automorphisms.
/// Two products on the same group are isomorphic exactly when these agree,
/// since every ring isomorphism is in particular an additive automorphism.
pub fn transport_min(n: usize, p: &[u32], autos: &Autos) -> Map {
    let mut best = p.to_vec();
    'auto: for (a, ainv) in &autos.maps {
        let mut less = false;
        let mut cur = Vec::with_capacity(n * n);
        for u in 0..n {
            let x = ainv[u] as usize;
            for v in 0..n {
                let val = a[p[x * n + ainv[v] as usize] as usize];
                if !less {
                    let b = best[u * n + v];
                    if val > b {
                        continue 'auto;
                    }
                    less = val < b;
                }
                cur.push(val);
            }
        }
        if less {
            best = cur;
        }
    }
    best
}

/// The least simultaneous conjugate `(a^-1 e a, a^-1 h a)`.
pub fn pair_orbit_min(e: &[u32], h: &[u32], autos: &Autos) -> (Map, Map) {
    autos
        .maps
        .iter()
        .map(|(a, ainv)| (compose(ainv, &compose(e, a)), compose(ainv, &compose(h, a))))
        .min()
        .expect("identity is an automorphism")
}

/// The interchange law checked on every quadruple.
pub fn interchange_literal(t: &Tbl, p: &[u32]) -> Option<[u32; 4]> {
    let n = t.n;
    for w in t.elems() {
        for x in t.elems() {
            let wx = t.add(w, x) as usize;
            for y in t.elems() {
                let wy = p[w as usize * n + y as usize];
                for z in t.elems() {
                    if p[wx * n + t.add(y, z) as usize] != t.add(wy, p[x as usize * n + z as usize]) {
                        return Some([w, x, y, z]);
                    }
                }
            }
        }
    }
    None
}

/// The interchange law checked through an equivalent set of quadratic
/// conditions. Taking `(w,x,y,z) = (0,0,0,0), (x,0,0,y), (x,y,0,0), (0,0,x,y)`
/// and `(0,x,y,0)` forces `0.0 = 0`, the splitting `x.y = x.0 + 0.y`,
/// additivity of both one-sided maps and commuting images; conversely these
/// give `(w+x).(y+z) = w.0 + x.0 + 0.y + 0.z = (w.y) + (x.z)`.
pub fn interchange_quadratic(t: &Tbl, p: &[u32]) -> Option<[u32; 4]> {
    let n = t.n;
    let m = |x: u32, y: u32| p[x as usize * n + y as usize];
    if m(0, 0) != 0 {
        return Some([0, 0, 0, 0]);
    }
    for x in t.elems() {
        for y in t.elems() {
            if m(x, y) != t.add(m(x, 0), m(0, y)) {
                return Some([x, 0, 0, y]);
            }
            if m(t.add(x, y), 0) != t.add(m(x, 0), m(y, 0)) {
                return Some([x, y, 0, 0]);
            }
            if m(0, t.add(x, y)) != t.add(m(0, x), m(0, y)) {
                return Some([0, 0, x, y]);
            }
            if t.add(m(0, y), m(x, 0)) != t.add(m(x, 0), m(0, y)) {
                return Some([0, x, y, 0]);
            }
        }
    }
    None
}

/// Normal subgroups, by testing every subset containing 0.
pub fn normal_subgroups(t: &Tbl) -> Vec<Vec<u32>> {
    assert!(t.n <= 16, "subset search");
    let mut out = Vec::new();
    for mask in 0u32..(1 << (t.n - 1)) {
        let full = (mask << 1) | 1;
        let inside = |x: u32| full >> x & 1 == 1;
        let s: Vec<u32> = t.elems().filter(|&x| inside(x)).collect();
        let closed = s.iter().all(|&x| s.iter().all(|&y| inside(t.sub(x, y))));
        let normal = closed && s.iter().all(|&x| t.elems().all(|g| inside(t.sub(t.add(g, x), g))));
        if normal {
            out.push(s);
        }
    }
    out
}

/// Subsets of the normal subgroups closed under the product.
pub fn ideals_of(t: &Tbl, p: &[u32], normals: &[Vec<u32>]) -> Vec<Vec<u32>> {
    normals
        .iter()
        .filter(|s| {
            let set: HashSet<u32> = s.iter().copied().collect();
            s.iter().all(|&x| s.iter().all(|&y| set.contains(&p[x as usize * t.n + y as usize])))
        })
        .cloned()
        .collect()
}

/// Every image-commuting pair of endomorphisms.
pub fn image_commuting_pairs(t: &Tbl, endos: &[Map]) -> Vec<(Map, Map)> {
    let mut out = Vec::new();
    for e in endos {
        for h in endos {
            if image_commuting(t, e, h) {
                out.push((e.clone(), h.clone()));
            }
        }
    }
    out
}

/// Products passing `keep`, grouped into isomorphism classes; returns the
/// transported minima of the classes.
pub fn classes(t: &Tbl, endos: &[Map], autos: &Autos, keep: impl Fn(&[u32]) -> bool) -> HashSet<Map> {
    image_commuting_pairs(t, endos)
        .into_iter()
        .map(|(e, h)| product(t, &e, &h))
        .filter(|p| keep(p))
        .map(|p| transport_min(t.n, &p, autos))
        .collect()
}

/// Parses the `(0abc)` image-list notation.
pub fn map(s: &str) -> Map {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    if inner.contains(' ') {
        inner.split_whitespace().map(|d| d.parse().unwrap()).collect()
    } else {
        inner.chars().map(|c| c.to_digit(36).unwrap()).collect()
    }
}
