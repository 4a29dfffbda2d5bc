//! Fuzzy subsets with exact grades and the fuzzy h-ideal classes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crisp::CrispSubset;
use crate::error::{Error, Result};
use crate::hemiring::{ElementId, GammaHemiring};
use crate::homomorphism::Homomorphism;
use crate::mutation::Mutation;
use crate::product::{generalized_h_product, h_product};
use crate::rational::UnitRational;

/// A total map from the carrier into `[0,1]`; index `i` holds the grade of element `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FuzzySubset {
    grades: Vec<UnitRational>,
}

impl FuzzySubset {
    pub fn from_grades(grades: Vec<UnitRational>) -> Self {
        FuzzySubset { grades }
    }

    /// `lambda_A`: 1 on `A`, 0 elsewhere.
    pub fn characteristic(a: &CrispSubset) -> Self {
        let grades = (0..a.carrier_size())
            .map(|i| if a.contains(ElementId(i)) { UnitRational::ONE } else { UnitRational::ZERO })
            .collect();
        FuzzySubset { grades }
    }

    pub fn constant(h: &GammaHemiring, c: UnitRational) -> Self {
        FuzzySubset { grades: vec![c; h.s_size()] }
    }

    /// The constant-one subset, which is also the characteristic function of `S`.
    pub fn one(h: &GammaHemiring) -> Self {
        Self::constant(h, UnitRational::ONE)
    }

    pub fn grades(&self) -> &[UnitRational] {
        &self.grades
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    #[inline]
    pub fn grade(&self, x: ElementId) -> UnitRational {
        self.grades[x.0]
    }

    pub fn check_carrier(&self, h: &GammaHemiring) -> Result<()> {
        if self.grades.len() != h.s_size() {
            return Err(Error::SizeMismatch { expected: h.s_size(), found: self.grades.len() });
        }
        Ok(())
    }

    /// Pointwise `self <= other`.
    pub fn is_subset(&self, other: &FuzzySubset) -> bool {
        self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b)
    }

    /// Pointwise minimum.
    pub fn intersection(&self, other: &FuzzySubset) -> FuzzySubset {
        let grades = self.grades.iter().zip(&other.grades).map(|(a, b)| *a.min(b)).collect();
        FuzzySubset { grades }
    }

    pub fn is_constant(&self) -> bool {
        self.grades.windows(2).all(|w| w[0] == w[1])
    }

    /// Distinct grades, ascending.
    pub fn image(&self) -> Vec<UnitRational> {
        let mut v = self.grades.clone();
        v.sort();
        v.dedup();
        v
    }

    pub fn max_grade(&self) -> UnitRational {
        self.grades.iter().copied().max().unwrap_or(UnitRational::ZERO)
    }

    /// `{ x : mu(x) = mu(0) }`.
    pub fn level_zero(&self) -> CrispSubset {
        let mut out = CrispSubset::empty(self.len());
        for (i, g) in self.grades.iter().enumerate() {
            if *g == self.grades[0] {
                out.insert(ElementId(i));
            }
        }
        out
    }

    /// `{ x : mu(x) > 0 }`.
    pub fn support(&self) -> CrispSubset {
        let mut out = CrispSubset::empty(self.len());
        for (i, g) in self.grades.iter().enumerate() {
            if !g.is_zero() {
                out.insert(ElementId(i));
            }
        }
        out
    }

    pub fn is_nonempty(&self) -> bool {
        self.grades.iter().any(|g| !g.is_zero())
    }
}

impl fmt::Display for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.grades.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Which grade inequality failed, and where.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzyWitness {
    pub condition: String,
    pub at: Vec<(String, usize)>,
}

impl FuzzyWitness {
    fn new(condition: &str, at: &[(&str, ElementId)]) -> Self {
        FuzzyWitness { condition: condition.to_string(), at: at.iter().map(|(k, v)| (k.to_string(), v.0)).collect() }
    }
}

impl fmt::Display for FuzzyWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.condition)?;
        if !self.at.is_empty() {
            f.write_str(" at ")?;
            for (i, (k, v)) in self.at.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{k}={v}")?;
            }
        }
        Ok(())
    }
}

/// Membership in each fuzzy ideal class, with the first failure for each false flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzyClassification {
    pub nonempty: bool,
    pub left_h_ideal: bool,
    pub right_h_ideal: bool,
    pub h_ideal: bool,
    pub h_bi_ideal: bool,
    pub h_interior_ideal: bool,
    pub h_quasi_ideal: bool,
    pub witnesses: Vec<(String, FuzzyWitness)>,
}

impl FuzzyClassification {
    pub fn witness(&self, flag: &str) -> Option<&FuzzyWitness> {
        self.witnesses.iter().find(|(f, _)| f == flag).map(|(_, w)| w)
    }
}

// Witnesses store Gamma indices in element slots.
fn g(x: crate::hemiring::GammaId) -> ElementId {
    ElementId(x.0)
}

fn additive_failure(h: &GammaHemiring, mu: &FuzzySubset) -> Option<FuzzyWitness> {
    for x in h.elements() {
        for y in h.elements() {
            if mu.grade(h.add(x, y)) < mu.grade(x).min(mu.grade(y)) {
                return Some(FuzzyWitness::new("additive", &[("x", x), ("y", y)]));
            }
        }
    }
    None
}

fn left_failure(h: &GammaHemiring, mu: &FuzzySubset) -> Option<FuzzyWitness> {
    for x in h.elements() {
        for gm in h.gammas() {
            for y in h.elements() {
                if mu.grade(h.mul(x, gm, y)) < mu.grade(y) {
                    return Some(FuzzyWitness::new("left", &[("x", x), ("gamma", g(gm)), ("y", y)]));
                }
            }
        }
    }
    None
}

fn right_failure(h: &GammaHemiring, mu: &FuzzySubset) -> Option<FuzzyWitness> {
    for x in h.elements() {
        for gm in h.gammas() {
            for y in h.elements() {
                if mu.grade(h.mul(x, gm, y)) < mu.grade(x) {
                    return Some(FuzzyWitness::new("right", &[("x", x), ("gamma", g(gm)), ("y", y)]));
                }
            }
        }
    }
    None
}

/// `x + a + z = b + z` must give `mu(x) >= min(mu(a), mu(b))`.
fn h_condition_failure(h: &GammaHemiring, mu: &FuzzySubset) -> Option<FuzzyWitness> {
    for x in h.elements() {
        for a in h.elements() {
            for b in h.elements() {
                if mu.grade(x) < mu.grade(a).min(mu.grade(b)) {
                    if let Some(z) = h.h_witness(x, a, b) {
                        return Some(FuzzyWitness::new("h-condition", &[("x", x), ("a", a), ("b", b), ("z", z)]));
                    }
                }
            }
        }
    }
    None
}

fn weak_product_failure(h: &GammaHemiring, mu: &FuzzySubset) -> Option<FuzzyWitness> {
    for x in h.elements() {
        for gm in h.gammas() {
            for y in h.elements() {
                if mu.grade(h.mul(x, gm, y)) < mu.grade(x).min(mu.grade(y)) {
                    return Some(FuzzyWitness::new("subsemiring", &[("x", x), ("gamma", g(gm)), ("y", y)]));
                }
            }
        }
    }
    None
}

/// Scans `mu(x alpha y beta z)` against `bound(x, y, z)`.
fn triple_failure(
    h: &GammaHemiring,
    mu: &FuzzySubset,
    label: &str,
    bound: impl Fn(ElementId, ElementId, ElementId) -> UnitRational,
) -> Option<FuzzyWitness> {
    for x in h.elements() {
        for al in h.gammas() {
            for y in h.elements() {
                for be in h.gammas() {
                    for z in h.elements() {
                        if mu.grade(h.sandwich(x, al, y, be, z)) < bound(x, y, z) {
                            return Some(FuzzyWitness::new(
                                label,
                                &[("x", x), ("alpha", g(al)), ("y", y), ("beta", g(be)), ("z", z)],
                            ));
                        }
                    }
                }
            }
        }
    }
    None
}

/// `(mu o_h chi_S) cap (chi_S o_h mu) <= mu`, first failing element.
pub fn quasi_containment_failure(h: &GammaHemiring, mu: &FuzzySubset) -> Result<Option<ElementId>> {
    let one = FuzzySubset::one(h);
    let (left, right) = if h.mutation() == Mutation::QuasiGammaProduct {
        (h_product(h, mu, &one)?, h_product(h, &one, mu)?)
    } else {
        (generalized_h_product(h, mu, &one)?, generalized_h_product(h, &one, mu)?)
    };
    Ok(h.elements().find(|&x| left.grade(x).min(right.grade(x)) > mu.grade(x)))
}

fn first(conds: impl IntoIterator<Item = Option<FuzzyWitness>>) -> Option<FuzzyWitness> {
    conds.into_iter().flatten().next()
}

/// Full quantifier scan over every clause of the fuzzy ideal classes.
pub fn classify_fuzzy(h: &GammaHemiring, mu: &FuzzySubset) -> Result<FuzzyClassification> {
    mu.check_carrier(h)?;
    let nonempty = mu.is_nonempty();
    let empty = (!nonempty).then(|| FuzzyWitness::new("empty", &[]));
    let add = additive_failure(h, mu);
    let hcond = h_condition_failure(h, mu);
    let left = left_failure(h, mu);
    let right = right_failure(h, mu);
    let weak = weak_product_failure(h, mu);
    let bi = triple_failure(h, mu, "bi", |x, _, z| mu.grade(x).min(mu.grade(z)));
    let interior = triple_failure(h, mu, "interior", |_, y, _| mu.grade(y));
    let quasi = quasi_containment_failure(h, mu)?.map(|x| FuzzyWitness::new("quasi-containment", &[("x", x)]));

    let base = || [empty.clone(), add.clone()];
    let flags = [
        ("left_h_ideal", first(base().into_iter().chain([left.clone(), hcond.clone()]))),
        ("right_h_ideal", first(base().into_iter().chain([right.clone(), hcond.clone()]))),
        ("h_ideal", first(base().into_iter().chain([left, right, hcond.clone()]))),
        ("h_bi_ideal", first(base().into_iter().chain([hcond.clone(), weak.clone(), bi]))),
        ("h_interior_ideal", first(base().into_iter().chain([hcond.clone(), weak, interior]))),
        ("h_quasi_ideal", first(base().into_iter().chain([hcond, quasi]))),
    ];
    let holds = |i: usize| flags[i].1.is_none();
    Ok(FuzzyClassification {
        nonempty,
        left_h_ideal: holds(0),
        right_h_ideal: holds(1),
        h_ideal: holds(2),
        h_bi_ideal: holds(3),
        h_interior_ideal: holds(4),
        h_quasi_ideal: holds(5),
        witnesses: flags.into_iter().filter_map(|(name, w)| w.map(|w| (name.to_string(), w))).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FuzzyClass {
    LeftHIdeal,
    RightHIdeal,
    HIdeal,
    BiIdeal,
    InteriorIdeal,
    QuasiIdeal,
}

/// Decides one class without computing the others.
pub fn is_fuzzy(h: &GammaHemiring, mu: &FuzzySubset, class: FuzzyClass) -> Result<bool> {
    mu.check_carrier(h)?;
    if !mu.is_nonempty() || additive_failure(h, mu).is_some() || h_condition_failure(h, mu).is_some() {
        return Ok(false);
    }
    Ok(match class {
        FuzzyClass::LeftHIdeal => left_failure(h, mu).is_none(),
        FuzzyClass::RightHIdeal => right_failure(h, mu).is_none(),
        FuzzyClass::HIdeal => left_failure(h, mu).is_none() && right_failure(h, mu).is_none(),
        FuzzyClass::BiIdeal => {
            weak_product_failure(h, mu).is_none()
                && triple_failure(h, mu, "bi", |x, _, z| mu.grade(x).min(mu.grade(z))).is_none()
        }
        FuzzyClass::InteriorIdeal => {
            weak_product_failure(h, mu).is_none() && triple_failure(h, mu, "interior", |_, y, _| mu.grade(y)).is_none()
        }
        FuzzyClass::QuasiIdeal => quasi_containment_failure(h, mu)?.is_none(),
    })
}

/// Two-sided fuzzy h-ideal.
pub fn is_fuzzy_h_ideal(h: &GammaHemiring, mu: &FuzzySubset) -> Result<bool> {
    is_fuzzy(h, mu, FuzzyClass::HIdeal)
}

/// `mu+(x) = mu(x) - mu(0) + 1`.
pub fn plus_transform(mu: &FuzzySubset) -> Result<FuzzySubset> {
    let at_zero = mu.grades[0];
    let grades = mu
        .grades
        .iter()
        .map(|&g| {
            if g <= at_zero {
                UnitRational::ONE.checked_sub(at_zero.checked_sub(g)?)
            } else {
                Err(Error::GradeOutOfRange(format!("{g} - {at_zero} + 1")))
            }
        })
        .collect::<Result<_>>()?;
    Ok(FuzzySubset { grades })
}

/// `beta * mu(y) + alpha` for `beta` in `(0,1]` and `alpha` in `[0, 1 - max mu]`.
pub fn affine_transform(mu: &FuzzySubset, beta: UnitRational, alpha: UnitRational) -> Result<FuzzySubset> {
    if beta.is_zero() {
        return Err(Error::Precondition("beta must lie in (0,1]".into()));
    }
    let headroom = UnitRational::ONE.checked_sub(mu.max_grade())?;
    if alpha > headroom {
        return Err(Error::Precondition(format!("alpha must lie in [0,{headroom}]")));
    }
    let grades = mu.grades.iter().map(|g| (beta * *g).checked_add(alpha)).collect::<Result<_>>()?;
    Ok(FuzzySubset { grades })
}

/// `(mu x nu)(a,b) = min(mu(a), nu(b))` on [`GammaHemiring::product_hemiring`].
pub fn cartesian(h: &GammaHemiring, mu: &FuzzySubset, nu: &FuzzySubset) -> Result<FuzzySubset> {
    mu.check_carrier(h)?;
    nu.check_carrier(h)?;
    let mut grades = Vec::with_capacity(h.s_size() * h.s_size());
    for a in h.elements() {
        for b in h.elements() {
            grades.push(mu.grade(a).min(nu.grade(b)));
        }
    }
    Ok(FuzzySubset { grades })
}

/// `f(mu)(y)`: max of `mu` over the fiber of `y`, 0 on an empty fiber.
pub fn image(f: &Homomorphism<'_>, mu: &FuzzySubset) -> Result<FuzzySubset> {
    mu.check_carrier(f.source())?;
    let mut grades = vec![UnitRational::ZERO; f.target().s_size()];
    for x in f.source().elements() {
        let slot = &mut grades[f.apply(x).0];
        *slot = (*slot).max(mu.grade(x));
    }
    Ok(FuzzySubset { grades })
}

/// `f^-1(sigma)(x) = sigma(f(x))`.
pub fn preimage(f: &Homomorphism<'_>, sigma: &FuzzySubset) -> Result<FuzzySubset> {
    sigma.check_carrier(f.target())?;
    let grades = f.source().elements().map(|x| sigma.grade(f.apply(x))).collect();
    Ok(FuzzySubset { grades })
}

/// A finite set of admissible grades; always contains 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grid(Vec<UnitRational>);

impl Grid {
    pub fn new(values: impl IntoIterator<Item = UnitRational>) -> Result<Self> {
        let mut v: Vec<_> = values.into_iter().collect();
        v.sort();
        v.dedup();
        if v.first() != Some(&UnitRational::ZERO) || v.last() != Some(&UnitRational::ONE) {
            return Err(Error::Family("grid must contain 0 and 1".into()));
        }
        Ok(Grid(v))
    }

    /// `{0, 1/2, 1}`.
    pub fn standard() -> Self {
        Grid(vec![UnitRational::ZERO, UnitRational::HALF, UnitRational::ONE])
    }

    pub fn binary() -> Self {
        Grid(vec![UnitRational::ZERO, UnitRational::ONE])
    }

    pub fn values(&self) -> &[UnitRational] {
        &self.0
    }
}

impl std::str::FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Grid::new(s.split(',').map(str::parse).collect::<Result<Vec<UnitRational>>>()?)
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// All `|grid|^n` grade assignments; element 0 varies slowest, grades ascend.
pub fn enumerate_grid_fuzzy(h: &GammaHemiring, grid: &Grid) -> GridFuzzyIter {
    GridFuzzyIter { grid: grid.0.clone(), digits: Some(vec![0; h.s_size()]) }
}

pub struct GridFuzzyIter {
    grid: Vec<UnitRational>,
    digits: Option<Vec<usize>>,
}

impl Iterator for GridFuzzyIter {
    type Item = FuzzySubset;

    fn next(&mut self) -> Option<FuzzySubset> {
        let digits = self.digits.as_mut()?;
        let out = FuzzySubset { grades: digits.iter().map(|&d| self.grid[d]).collect() };
        let mut i = digits.len();
        loop {
            if i == 0 {
                self.digits = None;
                break;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < self.grid.len() {
                break;
            }
            digits[i] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::homomorphism::Homomorphism;

    fn q(s: &str) -> UnitRational {
        s.parse().unwrap()
    }

    fn fz(s: &str) -> FuzzySubset {
        FuzzySubset::from_grades(s.split_whitespace().map(q).collect())
    }

    fn set(n: usize, m: &[usize]) -> CrispSubset {
        CrispSubset::from_members(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn constructors() {
        let z4 = fixtures::z4();
        assert_eq!(FuzzySubset::characteristic(&set(4, &[0, 2])), fz("1 0 1 0"));
        assert_eq!(FuzzySubset::constant(&z4, UnitRational::ONE), FuzzySubset::characteristic(&set(4, &[0, 1, 2, 3])));
        assert_eq!(FuzzySubset::characteristic(&set(1, &[0])), fz("1"));
    }

    #[test]
    fn level_sets() {
        let mu = fixtures::mu_p();
        assert_eq!(mu.level_zero(), set(4, &[0, 2]));
        assert!(mu.support().is_full());
        assert!(fz("0 0 0 0").support().is_empty());
    }

    #[test]
    fn classify_mu_p() {
        let c = classify_fuzzy(&fixtures::z4(), &fixtures::mu_p()).unwrap();
        assert!(c.nonempty && c.left_h_ideal && c.right_h_ideal && c.h_ideal);
        assert!(c.h_bi_ideal && c.h_interior_ideal && c.h_quasi_ideal);
        assert!(c.witnesses.is_empty());
    }

    #[test]
    fn classify_b2_fails_only_the_h_condition() {
        let b2 = fixtures::b2();
        let mu = fz("1 1/2");
        assert!(left_failure(&b2, &mu).is_none());
        assert!(right_failure(&b2, &mu).is_none());
        let c = classify_fuzzy(&b2, &mu).unwrap();
        assert!(!c.h_ideal);
        let w = c.witness("h_ideal").unwrap();
        assert_eq!(w.condition, "h-condition");
        assert_eq!(w.at[0], ("x".to_string(), 1));
    }

    #[test]
    fn constants_are_in_every_class() {
        for h in [fixtures::b2(), fixtures::z4(), fixtures::t1()] {
            for c in ["1", "1/2", "1/3"] {
                let k = classify_fuzzy(&h, &FuzzySubset::constant(&h, q(c))).unwrap();
                assert!(k.h_ideal && k.h_bi_ideal && k.h_interior_ideal && k.h_quasi_ideal, "{c}");
            }
            let zero = classify_fuzzy(&h, &FuzzySubset::constant(&h, UnitRational::ZERO)).unwrap();
            assert!(!zero.nonempty && !zero.left_h_ideal && !zero.h_quasi_ideal);
        }
    }

    #[test]
    fn transforms() {
        let mu = fixtures::mu_p();
        assert_eq!(plus_transform(&mu).unwrap(), mu);
        assert_eq!(plus_transform(&fz("1/2 0 1/2 1/4")).unwrap(), fz("1 1/2 1 3/4"));
        assert!(plus_transform(&fz("0 1")).is_err());
        assert_eq!(affine_transform(&fz("1/2 0"), q("1/2"), q("1/4")).unwrap(), fz("1/2 1/4"));
        assert!(affine_transform(&mu, q("1/2"), q("1/4")).is_err());
        assert!(affine_transform(&mu, UnitRational::ZERO, UnitRational::ZERO).is_err());
        let z4 = fixtures::z4();
        let prod = cartesian(&z4, &mu, &mu).unwrap();
        assert_eq!(prod.grade(z4.pair_index(ElementId(1), ElementId(2))), q("1/2"));
    }

    #[test]
    fn affine_arithmetic() {
        let scaled = fz("1/2 1/4 1/2 1/4");
        assert_eq!(affine_transform(&scaled, UnitRational::ONE, q("1/4")).unwrap(), fz("3/4 1/2 3/4 1/2"));
    }

    #[test]
    fn image_and_preimage() {
        let (z4, z2) = (fixtures::z4(), fixtures::z2_over_z4());
        let id = Homomorphism::identity(&z4);
        let mu = fixtures::mu_p();
        assert_eq!(image(&id, &mu).unwrap(), mu);
        assert_eq!(preimage(&id, &mu).unwrap(), mu);
        let f = Homomorphism::new(&z4, &z2, [0, 1, 0, 1].map(ElementId).to_vec()).unwrap();
        assert_eq!(preimage(&f, &fz("1 0")).unwrap(), fz("1 0 1 0"));
        assert_eq!(image(&f, &mu).unwrap().grade(ElementId(0)), UnitRational::ONE);
    }

    #[test]
    fn grid_enumeration_counts() {
        let g3 = Grid::standard();
        assert_eq!(enumerate_grid_fuzzy(&fixtures::t1(), &Grid::binary()).count(), 2);
        assert_eq!(enumerate_grid_fuzzy(&fixtures::z4(), &g3).count(), 81);
        let b2: Vec<_> = enumerate_grid_fuzzy(&fixtures::b2(), &Grid::binary()).collect();
        assert_eq!(b2, vec![fz("0 0"), fz("0 1"), fz("1 0"), fz("1 1")]);
    }

    #[test]
    fn grid_requires_endpoints() {
        assert!("1/2".parse::<Grid>().is_err());
        assert!("0,1/2".parse::<Grid>().is_err());
        assert_eq!("1,0,1/2".parse::<Grid>().unwrap(), Grid::standard());
    }
}
