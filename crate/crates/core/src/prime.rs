//! Prime and semiprime fuzzy h-ideals.
//!
//! The decision procedure of record is the finite characterization: grade 1
//! at zero, exactly two grades `{t, 1}`, and a prime level set at zero. The
//! defining quantification over all fuzzy h-ideals is only approximated, by
//! ranging over grid-valued fuzzy h-ideals; it can refute primeness but
//! never certify it beyond grid resolution.

use serde::{Deserialize, Serialize};

use crate::crisp::{is_prime_h_ideal, PrimeMethod};
use crate::error::{Error, Result};
use crate::fuzzy::{enumerate_grid_fuzzy, is_fuzzy_h_ideal, FuzzySubset, Grid};
use crate::hemiring::GammaHemiring;
use crate::product::h_product;
use crate::rational::UnitRational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FuzzyPrimeMethod {
    Characterization,
    GridDefinition(Grid),
}

fn require_h_ideal(h: &GammaHemiring, mu: &FuzzySubset) -> Result<()> {
    if !is_fuzzy_h_ideal(h, mu)? {
        return Err(Error::Precondition(format!("({mu}) is not a fuzzy h-ideal")));
    }
    Ok(())
}

/// Grade 1 at zero, image exactly `{t, 1}` with `t < 1`, and `mu_0` a prime h-ideal.
pub fn prime_by_characterization(h: &GammaHemiring, mu: &FuzzySubset) -> Result<bool> {
    require_h_ideal(h, mu)?;
    Ok(mu.grades()[0] == UnitRational::ONE
        && mu.image().len() == 2
        && is_prime_h_ideal(h, &mu.level_zero(), PrimeMethod::ByElements)?)
}

/// Grid-valued fuzzy h-ideals, in enumeration order.
pub fn grid_h_ideals(h: &GammaHemiring, grid: &Grid) -> Vec<FuzzySubset> {
    enumerate_grid_fuzzy(h, grid).filter(|f| is_fuzzy_h_ideal(h, f).unwrap_or(false)).collect()
}

/// First pair `(sigma, theta)` of grid-valued fuzzy h-ideals with
/// `sigma Gamma_h theta <= mu` but neither factor below `mu`.
pub fn prime_grid_counterexample(
    h: &GammaHemiring,
    mu: &FuzzySubset,
    ideals: &[FuzzySubset],
) -> Result<Option<(FuzzySubset, FuzzySubset)>> {
    for sigma in ideals.iter().filter(|s| !s.is_subset(mu)) {
        for theta in ideals.iter().filter(|t| !t.is_subset(mu)) {
            if h_product(h, sigma, theta)?.is_subset(mu) {
                return Ok(Some((sigma.clone(), theta.clone())));
            }
        }
    }
    Ok(None)
}

/// First grid-valued fuzzy h-ideal `theta` with `theta Gamma_h theta <= mu` but `theta` not below `mu`.
pub fn semiprime_grid_counterexample(
    h: &GammaHemiring,
    mu: &FuzzySubset,
    ideals: &[FuzzySubset],
) -> Result<Option<FuzzySubset>> {
    for theta in ideals.iter().filter(|t| !t.is_subset(mu)) {
        if h_product(h, theta, theta)?.is_subset(mu) {
            return Ok(Some(theta.clone()));
        }
    }
    Ok(None)
}

pub fn is_prime_fuzzy(h: &GammaHemiring, mu: &FuzzySubset, method: &FuzzyPrimeMethod) -> Result<bool> {
    match method {
        FuzzyPrimeMethod::Characterization => prime_by_characterization(h, mu),
        FuzzyPrimeMethod::GridDefinition(grid) => {
            require_h_ideal(h, mu)?;
            if mu.is_constant() {
                return Ok(false);
            }
            Ok(prime_grid_counterexample(h, mu, &grid_h_ideals(h, grid))?.is_none())
        }
    }
}

pub fn is_semiprime_fuzzy_grid(h: &GammaHemiring, mu: &FuzzySubset, grid: &Grid) -> Result<bool> {
    require_h_ideal(h, mu)?;
    if mu.is_constant() {
        return Ok(false);
    }
    Ok(semiprime_grid_counterexample(h, mu, &grid_h_ideals(h, grid))?.is_none())
}
