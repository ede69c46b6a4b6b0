//! Endomorphisms of finite groups, their pairs, and similarity under
//! simultaneous conjugation by automorphisms.

mod enumerate;
mod orbit;

pub use enumerate::{
    endomorphism_count, enumerate_automorphisms, enumerate_endomorphisms,
    enumerate_endomorphisms_ordered, for_each_endomorphism, DfsOrder,
};
use enumerate::extend_linearly;
pub use orbit::{burnside_orbit_count, orbits_under, similarity_orbits, Orbit};

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, PpcBasis};
use std::fmt;

/// A homomorphism `G -> G`, stored as the image of every element.
///
/// Ordering is lexicographic on the image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Endomorphism {
    map: Vec<Elem>,
}

impl Endomorphism {
    /// Validates `map` as a homomorphism of `g`.
    pub fn new(g: &FiniteGroup, map: Vec<Elem>) -> Result<Self> {
        check_homomorphism(g, &map)?;
        Ok(Endomorphism { map })
    }

    /// The homomorphism sending basis element `b_i` to `images[i]`. Each image
    /// order must divide the order of its basis element; the basis must span `g`.
    pub fn from_basis_images(g: &FiniteGroup, basis: &PpcBasis, images: &[Elem]) -> Result<Self> {
        if images.len() != basis.rank() {
            return Err(Error::WrongLength {
                got: images.len(),
                expected: basis.rank(),
            });
        }
        if basis.span_size() != g.order() {
            return Err(Error::Verification("basis does not span the group".into()));
        }
        for (i, (&y, &o)) in images.iter().zip(basis.orders()).enumerate() {
            if y as usize >= g.order() || o % g.element_order(y) != 0 {
                return Err(Error::NotHomomorphism {
                    x: basis.elements()[i],
                    y,
                });
            }
        }
        let mut map = vec![0; g.order()];
        extend_linearly(g, basis, &basis.predecessor_steps(), images, &mut map);
        debug_assert!(check_homomorphism(g, &map).is_ok());
        Ok(Endomorphism { map })
    }

    pub(crate) fn from_map_unchecked(map: Vec<Elem>) -> Self {
        Endomorphism { map }
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Endomorphism {
            map: g.elements().collect(),
        }
    }

    pub fn zero(g: &FiniteGroup) -> Self {
        Endomorphism {
            map: vec![0; g.order()],
        }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x as usize]
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.map
    }

    pub fn into_vec(self) -> Vec<Elem> {
        self.map
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i as Elem == v)
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(|&v| v == 0)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.map.len()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
    }

    pub fn inverse(&self) -> Option<Endomorphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y as usize] = x as Elem;
        }
        Some(Endomorphism { map: inv })
    }

    /// Sorted image set.
    pub fn image(&self) -> Vec<Elem> {
        let mut im = self.map.clone();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn kernel(&self) -> Vec<Elem> {
        (0..self.map.len() as Elem)
            .filter(|&x| self.map[x as usize] == 0)
            .collect()
    }

    /// The image-list notation `(0vwxyz)`; entries are space-separated once
    /// the group has more than ten elements.
    pub fn notation(&self) -> String {
        let sep = if self.map.len() > 10 { " " } else { "" };
        let body: Vec<String> = self.map.iter().map(|v| v.to_string()).collect();
        format!("({})", body.join(sep))
    }

    /// Parses the image-list notation, `iota`/`id` or `zeta`/`zero`.
    pub fn parse(g: &FiniteGroup, text: &str) -> Result<Self> {
        let text = text.trim();
        match text {
            "iota" | "id" => return Ok(Self::identity(g)),
            "zeta" | "zero" => return Ok(Self::zero(g)),
            _ => {}
        }
        let inner = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("endomorphism {text:?} must be parenthesised")))?;
        let map: Vec<Elem> = if inner.contains(char::is_whitespace) || g.order() > 10 {
            inner
                .split_whitespace()
                .map(|t| t.parse::<Elem>().map_err(|_| Error::Parse(format!("bad image {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            inner
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as Elem)
                        .ok_or_else(|| Error::Parse(format!("bad image {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        if let Some(&bad) = map.iter().find(|&&v| v as usize >= g.order()) {
            return Err(Error::Parse(format!("image {bad} out of range")));
        }
        Self::new(g, map)
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

/// Exhaustive check of `map(x + y) = map(x) + map(y)`.
pub fn check_homomorphism(g: &FiniteGroup, map: &[Elem]) -> Result<()> {
    if map.len() != g.order() {
        return Err(Error::WrongLength {
            got: map.len(),
            expected: g.order(),
        });
    }
    for x in g.elements() {
        for y in g.elements() {
            if map[g.add(x, y) as usize] != g.add(map[x as usize], map[y as usize]) {
                return Err(Error::NotHomomorphism { x, y });
            }
        }
    }
    Ok(())
}

/// Left composition: `(f . g)(x) = f(g(x))`.
pub fn compose(f: &Endomorphism, g: &Endomorphism) -> Endomorphism {
    assert_eq!(f.degree(), g.degree(), "composing maps of different groups");
    Endomorphism {
        map: g.map.iter().map(|&y| f.map[y as usize]).collect(),
    }
}

pub fn is_idempotent(f: &Endomorphism) -> bool {
    f.map.iter().all(|&y| f.map[y as usize] == y)
}

pub fn commutes(f: &Endomorphism, g: &Endomorphism) -> bool {
    (0..f.degree()).all(|x| f.map[g.map[x] as usize] == g.map[f.map[x] as usize])
}

/// `alpha^-1 . f . alpha`.
pub fn conjugate(alpha: &Endomorphism, f: &Endomorphism) -> Result<Endomorphism> {
    let inv = alpha.inverse().ok_or(Error::NotAutomorphism)?;
    Ok(conjugate_with_inverse(alpha, &inv, f))
}

#[inline]
pub(crate) fn conjugate_with_inverse(
    alpha: &Endomorphism,
    alpha_inv: &Endomorphism,
    f: &Endomorphism,
) -> Endomorphism {
    Endomorphism {
        map: alpha
            .map
            .iter()
            .map(|&y| alpha_inv.map[f.map[y as usize] as usize])
            .collect(),
    }
}

/// `f(x) + h(x) = x` for every `x`.
pub fn sums_to_identity(g: &FiniteGroup, f: &Endomorphism, h: &Endomorphism) -> bool {
    g.elements().all(|x| g.add(f.apply(x), h.apply(x)) == x)
}

/// An ordered pair `(first, second)` of endomorphisms of one group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EndoPair {
    pub first: Endomorphism,
    pub second: Endomorphism,
}

impl EndoPair {
    pub fn new(first: Endomorphism, second: Endomorphism) -> Result<Self> {
        if first.degree() != second.degree() {
            return Err(Error::GroupMismatch);
        }
        Ok(EndoPair { first, second })
    }

    pub fn zeta_zeta(g: &FiniteGroup) -> Self {
        EndoPair {
            first: Endomorphism::zero(g),
            second: Endomorphism::zero(g),
        }
    }

    /// Two endomorphisms in image-list notation separated by a comma.
    pub fn parse(g: &FiniteGroup, text: &str) -> Result<Self> {
        let (a, b) = text
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("pair {text:?} needs two comma-separated maps")))?;
        Self::new(Endomorphism::parse(g, a)?, Endomorphism::parse(g, b)?)
    }

    pub fn conjugate_by(&self, alpha: &Endomorphism) -> Result<EndoPair> {
        let inv = alpha.inverse().ok_or(Error::NotAutomorphism)?;
        Ok(EndoPair {
            first: conjugate_with_inverse(alpha, &inv, &self.first),
            second: conjugate_with_inverse(alpha, &inv, &self.second),
        })
    }

    pub fn is_commuting_idempotent(&self) -> bool {
        is_idempotent(&self.first) && is_idempotent(&self.second) && commutes(&self.first, &self.second)
    }

    pub fn notation(&self) -> String {
        format!("{},{}", self.first, self.second)
    }
}

impl fmt::Display for EndoPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.first, self.second)
    }
}

/// A witness `(x, y)` with `first(x) + second(y) != second(y) + first(x)`.
pub fn image_commuting_witness(g: &FiniteGroup, pair: &EndoPair) -> Option<(Elem, Elem)> {
    if g.is_abelian() {
        return None;
    }
    // only images matter; pick one preimage per image element
    let preimages = |f: &Endomorphism| {
        let mut first_pre = vec![None; g.order()];
        for x in g.elements() {
            first_pre[f.apply(x) as usize].get_or_insert(x);
        }
        first_pre
            .into_iter()
            .enumerate()
            .filter_map(|(v, x)| x.map(|x| (v as Elem, x)))
            .collect::<Vec<_>>()
    };
    let a = preimages(&pair.first);
    let b = preimages(&pair.second);
    for &(u, x) in &a {
        for &(v, y) in &b {
            if g.add(u, v) != g.add(v, u) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_image_commuting(g: &FiniteGroup, pair: &EndoPair) -> bool {
    image_commuting_witness(g, pair).is_none()
}
