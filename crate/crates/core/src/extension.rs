//! The extension `<x, mu>` of a fuzzy subset by an element.

use crate::error::{Error, Result};
use crate::fuzzy::{is_fuzzy_h_ideal, FuzzySubset};
use crate::hemiring::{ElementId, GammaHemiring, GammaId};
use crate::mutation::Mutation;
use crate::prime::prime_by_characterization;
use crate::rational::UnitRational;

/// `min` of `mu(x alpha s gamma y)` over independent `alpha, gamma` and `s`.
fn sandwich_inf(h: &GammaHemiring, mu: &FuzzySubset, x: ElementId, y: ElementId) -> UnitRational {
    let grades = h
        .gammas()
        .flat_map(|al| h.elements().flat_map(move |s| h.gammas().map(move |g| mu.grade(h.sandwich(x, al, s, g, y)))));
    let picked = if h.mutation() == Mutation::ExtensionSupremum { grades.max() } else { grades.min() };
    picked.expect("carriers are nonempty")
}

/// `<x, mu>(y) = inf { mu(x alpha s gamma y) : alpha, gamma in Gamma, s in S }`.
pub fn fuzzy_extension(h: &GammaHemiring, x: ElementId, mu: &FuzzySubset) -> Result<FuzzySubset> {
    h.check_element(x)?;
    mu.check_carrier(h)?;
    Ok(FuzzySubset::from_grades(h.elements().map(|y| sandwich_inf(h, mu, x, y)).collect()))
}

/// Whether `min over alpha,s,gamma of mu(x alpha s gamma y) = max(mu(x), mu(y))` for all `x, y`.
pub fn inf_max_holds(h: &GammaHemiring, mu: &FuzzySubset) -> bool {
    h.elements().all(|x| h.elements().all(|y| sandwich_inf(h, mu, x, y) == mu.grade(x).max(mu.grade(y))))
}

/// [`inf_max_holds`] restricted to fuzzy h-ideals.
pub fn inf_max_criterion(h: &GammaHemiring, mu: &FuzzySubset) -> Result<bool> {
    if !is_fuzzy_h_ideal(h, mu)? {
        return Err(Error::Precondition(format!("({mu}) is not a fuzzy h-ideal")));
    }
    Ok(inf_max_holds(h, mu))
}

/// `<x, mu>(y) = min over s1, eta, delta of <x eta s1 delta x, mu>(y)`, checked at every `y`.
pub fn extension_inf_identity_holds(h: &GammaHemiring, x: ElementId, mu: &FuzzySubset) -> Result<bool> {
    let lhs = fuzzy_extension(h, x, mu)?;
    let mut rhs = vec![UnitRational::ONE; h.s_size()];
    for eta in h.gammas() {
        for s1 in h.elements() {
            for delta in h.gammas() {
                let ext = fuzzy_extension(h, h.sandwich(x, eta, s1, delta, x), mu)?;
                for (slot, g) in rhs.iter_mut().zip(ext.grades()) {
                    *slot = (*slot).min(*g);
                }
            }
        }
    }
    Ok(lhs.grades() == rhs.as_slice())
}

/// The identity above, for prime `mu` only.
pub fn extension_inf_identity_check(h: &GammaHemiring, x: ElementId, mu: &FuzzySubset) -> Result<bool> {
    if !prime_by_characterization(h, mu)? {
        return Err(Error::Precondition(format!("({mu}) is not a prime fuzzy h-ideal")));
    }
    extension_inf_identity_holds(h, x, mu)
}

/// `[<(x gamma)^k x, mu> for k in 0..=n_max]`.
pub fn iterated_extension_chain(
    h: &GammaHemiring,
    x: ElementId,
    gamma: GammaId,
    mu: &FuzzySubset,
    n_max: usize,
) -> Result<Vec<FuzzySubset>> {
    h.check_gamma(gamma)?;
    (0..=n_max).map(|k| fuzzy_extension(h, h.gamma_power(x, gamma, k), mu)).collect()
}
