//! Crisp subsets and the crisp ideal hierarchy.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hemiring::{ElementId, GammaHemiring};

/// A subset of the carrier, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrispSubset {
    size: usize,
    mask: u64,
}

impl CrispSubset {
    pub fn empty(size: usize) -> Self {
        CrispSubset { size, mask: 0 }
    }

    pub fn full(size: usize) -> Self {
        let mask = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
        CrispSubset { size, mask }
    }

    pub fn from_mask(size: usize, mask: u64) -> Self {
        debug_assert!(mask & !Self::full(size).mask == 0);
        CrispSubset { size, mask }
    }

    pub fn from_members(size: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = Self::empty(size);
        for m in members {
            if m >= size {
                return Err(Error::ElementOutOfRange(m));
            }
            set.insert(ElementId(m));
        }
        Ok(set)
    }

    pub fn carrier_size(&self) -> usize {
        self.size
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn contains(&self, x: ElementId) -> bool {
        self.mask >> x.0 & 1 == 1
    }

    pub fn insert(&mut self, x: ElementId) {
        self.mask |= 1 << x.0;
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.size)
    }

    pub fn is_subset(&self, other: &CrispSubset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn union(&self, other: &CrispSubset) -> Self {
        CrispSubset { size: self.size, mask: self.mask | other.mask }
    }

    pub fn intersection(&self, other: &CrispSubset) -> Self {
        CrispSubset { size: self.size, mask: self.mask & other.mask }
    }

    pub fn members(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.size).map(ElementId).filter(|&x| self.contains(x))
    }

    pub fn non_members(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.size).map(ElementId).filter(|&x| !self.contains(x))
    }
}

/// Ordered by cardinality, then by bitmask.
impl Ord for CrispSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.size, self.len(), self.mask).cmp(&(other.size, other.len(), other.mask))
    }
}

impl PartialOrd for CrispSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CrispSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for CrispSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// How primeness of a crisp h-ideal is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PrimeMethod {
    /// Quantify over all pairs of h-ideals; `H Gamma K` is the h-ideal generated by the products.
    ByDefinition,
    /// As `ByDefinition` but with `H Gamma K` taken as the bare set of products.
    ByDefinitionRawProducts,
    /// `a Gamma S Gamma b` inside `I` forces `a` or `b` into `I`.
    ByElements,
}

/// A tuple showing a subset is not h-closed: `x + a + z = b + z` with `a, b` inside, `x` outside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HWitness {
    pub x: ElementId,
    pub a: ElementId,
    pub b: ElementId,
    pub z: ElementId,
}

fn check_size(h: &GammaHemiring, a: &CrispSubset) -> Result<()> {
    if a.carrier_size() != h.s_size() {
        return Err(Error::SizeMismatch { expected: h.s_size(), found: a.carrier_size() });
    }
    Ok(())
}

fn nonempty(h: &GammaHemiring, a: &CrispSubset) -> Result<()> {
    check_size(h, a)?;
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(())
}

fn additively_closed(h: &GammaHemiring, a: &CrispSubset) -> bool {
    a.contains(ElementId::ZERO) && a.members().all(|x| a.members().all(|y| a.contains(h.add(x, y))))
}

fn absorbs_left(h: &GammaHemiring, a: &CrispSubset) -> bool {
    h.elements().all(|s| h.gammas().all(|g| a.members().all(|x| a.contains(h.mul(s, g, x)))))
}

fn absorbs_right(h: &GammaHemiring, a: &CrispSubset) -> bool {
    h.elements().all(|s| h.gammas().all(|g| a.members().all(|x| a.contains(h.mul(x, g, s)))))
}

pub fn is_left_ideal(h: &GammaHemiring, a: &CrispSubset) -> Result<bool> {
    nonempty(h, a)?;
    Ok(additively_closed(h, a) && absorbs_left(h, a))
}

pub fn is_right_ideal(h: &GammaHemiring, a: &CrispSubset) -> Result<bool> {
    nonempty(h, a)?;
    Ok(additively_closed(h, a) && absorbs_right(h, a))
}

pub fn is_ideal(h: &GammaHemiring, a: &CrispSubset, side: Side) -> Result<bool> {
    nonempty(h, a)?;
    Ok(additively_closed(h, a)
        && match side {
            Side::Left => absorbs_left(h, a),
            Side::Right => absorbs_right(h, a),
            Side::TwoSided => absorbs_left(h, a) && absorbs_right(h, a),
        })
}

/// First tuple (in index order) breaking the h-condition.
pub fn h_condition_witness(h: &GammaHemiring, a: &CrispSubset) -> Option<HWitness> {
    for x in a.non_members() {
        for p in a.members() {
            for q in a.members() {
                if let Some(z) = h.h_witness(x, p, q) {
                    return Some(HWitness { x, a: p, b: q, z });
                }
            }
        }
    }
    None
}

fn h_closed(h: &GammaHemiring, a: &CrispSubset) -> bool {
    a.non_members().all(|x| a.members().all(|p| a.members().all(|q| !h.h_reachable(x, p, q))))
}

pub fn is_h_ideal(h: &GammaHemiring, a: &CrispSubset, side: Side) -> Result<bool> {
    Ok(is_ideal(h, a, side)? && h_closed(h, a))
}

/// Least h-ideal containing the ideal `a`, by saturating under the h-condition.
pub fn h_closure(h: &GammaHemiring, a: &CrispSubset, side: Side) -> Result<CrispSubset> {
    if !is_ideal(h, a, side)? {
        return Err(Error::Precondition(format!("{a} is not an ideal")));
    }
    Ok(saturate_h(h, *a))
}

fn saturate_h(h: &GammaHemiring, mut cur: CrispSubset) -> CrispSubset {
    loop {
        let mut next = cur;
        for x in cur.non_members() {
            if cur.members().any(|p| cur.members().any(|q| h.h_reachable(x, p, q))) {
                next.insert(x);
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Smallest two-sided ideal containing `seed` (and zero).
pub fn generated_ideal(h: &GammaHemiring, seed: &CrispSubset) -> CrispSubset {
    let mut cur = *seed;
    cur.insert(ElementId::ZERO);
    loop {
        let mut next = cur;
        for x in cur.members() {
            for y in cur.members() {
                next.insert(h.add(x, y));
            }
            for s in h.elements() {
                for g in h.gammas() {
                    next.insert(h.mul(s, g, x));
                    next.insert(h.mul(x, g, s));
                }
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// The bare set `{ p gamma q : p in A, q in B }`.
pub fn product_set(h: &GammaHemiring, a: &CrispSubset, b: &CrispSubset) -> CrispSubset {
    let mut out = CrispSubset::empty(h.s_size());
    for p in a.members() {
        for g in h.gammas() {
            for q in b.members() {
                out.insert(h.mul(p, g, q));
            }
        }
    }
    out
}

/// `A Gamma B` as an h-ideal: the h-closure of the ideal generated by all products.
pub fn ideal_product(h: &GammaHemiring, a: &CrispSubset, b: &CrispSubset) -> CrispSubset {
    saturate_h(h, generated_ideal(h, &product_set(h, a, b)))
}

/// All two-sided h-ideals, ordered by cardinality and then bitmask.
pub fn enumerate_h_ideals(h: &GammaHemiring) -> Vec<CrispSubset> {
    let n = h.s_size();
    assert!(n < 32, "subset enumeration is limited to small carriers");
    // every h-ideal contains zero, so only odd masks are candidates
    let mut out: Vec<CrispSubset> = (0u64..1 << n)
        .filter(|m| m & 1 == 1)
        .map(|m| CrispSubset::from_mask(n, m))
        .filter(|a| is_h_ideal(h, a, Side::TwoSided).unwrap_or(false))
        .collect();
    out.sort();
    out
}

/// Primeness of a two-sided h-ideal; "proper" means `I != S`.
pub fn is_prime_h_ideal(h: &GammaHemiring, i: &CrispSubset, method: PrimeMethod) -> Result<bool> {
    if !is_h_ideal(h, i, Side::TwoSided)? {
        return Err(Error::Precondition(format!("{i} is not an h-ideal")));
    }
    if i.is_full() {
        return Ok(false);
    }
    Ok(match method {
        PrimeMethod::ByElements => prime_by_elements(h, i),
        PrimeMethod::ByDefinition | PrimeMethod::ByDefinitionRawProducts => {
            let ideals = enumerate_h_ideals(h);
            ideals.iter().all(|hh| {
                ideals.iter().all(|kk| {
                    let prod = if method == PrimeMethod::ByDefinition {
                        ideal_product(h, hh, kk)
                    } else {
                        product_set(h, hh, kk)
                    };
                    !prod.is_subset(i) || hh.is_subset(i) || kk.is_subset(i)
                })
            })
        }
    })
}

fn prime_by_elements(h: &GammaHemiring, i: &CrispSubset) -> bool {
    i.non_members().all(|a| {
        i.non_members().all(|b| {
            h.gammas().any(|al| h.elements().any(|s| h.gammas().any(|g| !i.contains(h.sandwich(a, al, s, g, b)))))
        })
    })
}

/// `<x, A> = { y : x Gamma S Gamma y inside A }`.
pub fn crisp_extension(h: &GammaHemiring, x: ElementId, a: &CrispSubset) -> CrispSubset {
    let mut out = CrispSubset::empty(h.s_size());
    for y in h.elements() {
        let inside =
            h.gammas().all(|al| h.elements().all(|s| h.gammas().all(|g| a.contains(h.sandwich(x, al, s, g, y)))));
        if inside {
            out.insert(y);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(h: &GammaHemiring, m: &[usize]) -> CrispSubset {
        CrispSubset::from_members(h.s_size(), m.iter().copied()).unwrap()
    }

    #[test]
    fn one_sided_ideal_examples() {
        let z4 = fixtures::z4();
        let a = set(&z4, &[0, 2]);
        assert!(is_left_ideal(&z4, &a).unwrap() && is_right_ideal(&z4, &a).unwrap());
        let b2 = fixtures::b2();
        let zero = set(&b2, &[0]);
        assert!(is_left_ideal(&b2, &zero).unwrap() && is_right_ideal(&b2, &zero).unwrap());
        assert!(!is_left_ideal(&z4, &set(&z4, &[0, 1])).unwrap());
        assert!(matches!(is_left_ideal(&z4, &set(&z4, &[])), Err(Error::EmptySubset)));
    }

    #[test]
    fn h_ideal_examples() {
        let z4 = fixtures::z4();
        assert!(is_h_ideal(&z4, &set(&z4, &[0, 2]), Side::TwoSided).unwrap());
        let b2 = fixtures::b2();
        let zero = set(&b2, &[0]);
        assert!(!is_h_ideal(&b2, &zero, Side::TwoSided).unwrap());
        let w = h_condition_witness(&b2, &zero).unwrap();
        assert_eq!((w.x, w.z), (ElementId(1), ElementId(1)));
        for h in [fixtures::t1(), b2, z4] {
            assert!(is_h_ideal(&h, &CrispSubset::full(h.s_size()), Side::TwoSided).unwrap());
        }
    }

    #[test]
    fn closure_examples() {
        let b2 = fixtures::b2();
        assert_eq!(h_closure(&b2, &set(&b2, &[0]), Side::TwoSided).unwrap(), set(&b2, &[0, 1]));
        let z4 = fixtures::z4();
        assert_eq!(h_closure(&z4, &set(&z4, &[0, 2]), Side::TwoSided).unwrap(), set(&z4, &[0, 2]));
        assert_eq!(h_closure(&z4, &set(&z4, &[0]), Side::TwoSided).unwrap(), set(&z4, &[0]));
        assert!(h_closure(&z4, &set(&z4, &[0, 1]), Side::TwoSided).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let z4 = fixtures::z4();
        assert_eq!(enumerate_h_ideals(&z4), vec![set(&z4, &[0]), set(&z4, &[0, 2]), set(&z4, &[0, 1, 2, 3])]);
        let b2 = fixtures::b2();
        assert_eq!(enumerate_h_ideals(&b2), vec![set(&b2, &[0, 1])]);
        let t1 = fixtures::t1();
        assert_eq!(enumerate_h_ideals(&t1), vec![set(&t1, &[0])]);
    }

    #[test]
    fn prime_examples_agree_across_methods() {
        let z4 = fixtures::z4();
        let cases = [(vec![0, 2], true), (vec![0], false), (vec![0, 1, 2, 3], false)];
        for (m, expected) in cases {
            for method in [PrimeMethod::ByElements, PrimeMethod::ByDefinition, PrimeMethod::ByDefinitionRawProducts] {
                assert_eq!(is_prime_h_ideal(&z4, &set(&z4, &m), method).unwrap(), expected);
            }
        }
        assert!(is_prime_h_ideal(&z4, &set(&z4, &[0, 1]), PrimeMethod::ByElements).is_err());
    }

    #[test]
    fn crisp_extension_examples() {
        let z4 = fixtures::z4();
        let a = set(&z4, &[0, 2]);
        assert!(crisp_extension(&z4, ElementId(2), &a).is_full());
        assert_eq!(crisp_extension(&z4, ElementId(1), &a), a);
        let full = CrispSubset::full(4);
        for x in z4.elements() {
            assert!(crisp_extension(&z4, x, &full).is_full());
        }
    }

    #[test]
    fn display_and_order() {
        let z4 = fixtures::z4();
        assert_eq!(set(&z4, &[2, 0]).to_string(), "{0,2}");
        assert!(set(&z4, &[0, 3]) > set(&z4, &[0, 1]));
        assert!(set(&z4, &[0, 1, 2]) > set(&z4, &[0, 3]));
    }
}
