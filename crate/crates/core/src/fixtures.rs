//! Small hand-built structures used throughout the tests and the CLI.
//!
//! None of these come from the literature; each is brute-force validated
//! when constructed.

use crate::fuzzy::FuzzySubset;
use crate::hemiring::{GammaHemiring, RawTables};
use crate::rational::UnitRational;

fn modular_raw(name: &str, s: usize, g: usize) -> RawTables {
    RawTables {
        name: name.to_string(),
        s_size: s,
        g_size: g,
        s_add: (0..s).map(|a| (0..s).map(|b| (a + b) % s).collect()).collect(),
        g_add: (0..g).map(|a| (0..g).map(|b| (a + b) % g).collect()).collect(),
        product: (0..s).map(|a| (0..g).map(|c| (0..s).map(|b| (a * c * b) % s).collect()).collect()).collect(),
    }
}

fn boolean_raw(name: &str, product: impl Fn(usize, usize, usize) -> usize) -> RawTables {
    let or = |a: usize, b: usize| a | b;
    RawTables {
        name: name.to_string(),
        s_size: 2,
        g_size: 2,
        s_add: (0..2).map(|a| (0..2).map(|b| or(a, b)).collect()).collect(),
        g_add: (0..2).map(|a| (0..2).map(|b| or(a, b)).collect()).collect(),
        product: (0..2).map(|a| (0..2).map(|c| (0..2).map(|b| product(a, c, b)).collect()).collect()).collect(),
    }
}

/// The one-element structure.
pub fn t1() -> GammaHemiring {
    GammaHemiring::new(modular_raw("T1", 1, 1)).expect("T1 is a Gamma-hemiring")
}

/// `S = Gamma = {0,1}` with logical or as addition and `a gamma b = a and gamma and b`.
pub fn b2() -> GammaHemiring {
    GammaHemiring::new(boolean_raw("B2", |a, c, b| a & c & b)).expect("B2 is a Gamma-hemiring")
}

/// B2 with the product replaced by `a or gamma or b`; violates the zero axioms.
pub fn b2_or_product() -> RawTables {
    boolean_raw("B2-or", |a, c, b| a | c | b)
}

/// `S = Gamma = Z mod 4`, `a gamma b = a*gamma*b mod 4`.
pub fn z4() -> GammaHemiring {
    GammaHemiring::new(modular_raw("Z4", 4, 4)).expect("Z4 is a Gamma-hemiring")
}

/// `S = Z mod 2` acted on by `Gamma = Z mod 4`, `a gamma b = a*gamma*b mod 2`.
pub fn z2_over_z4() -> GammaHemiring {
    GammaHemiring::new(modular_raw("Z2", 2, 4)).expect("Z2 over Z4 is a Gamma-hemiring")
}

/// `S = Gamma = Z mod 2` with the field product; `{0}` is a prime h-ideal.
pub fn z2() -> GammaHemiring {
    GammaHemiring::new(modular_raw("Z2F", 2, 2)).expect("Z2 is a Gamma-hemiring")
}

/// `S = (Z mod 2)^6` under xor with basis `a1 a2 a3 e1 e2 e3` (bits 0 to 5),
/// `Gamma = Z mod 2`, and `a gamma b = gamma * (a . b)` where the only nonzero
/// basis products are `ai . ai = ei`. Every triple product vanishes.
///
/// Sums of two products and sums of three products differ here, which the
/// smaller structures cannot show.
pub fn three_lines() -> GammaHemiring {
    let mul = |a: usize, b: usize| (a & b & 0b111) << 3;
    let raw = RawTables {
        name: "L3".to_string(),
        s_size: 64,
        g_size: 2,
        s_add: (0..64).map(|a| (0..64).map(|b| a ^ b).collect()).collect(),
        g_add: (0..2).map(|a| (0..2).map(|b| a ^ b).collect()).collect(),
        product: (0..64)
            .map(|a| (0..2).map(|c| (0..64).map(|b| if c == 1 { mul(a, b) } else { 0 }).collect()).collect())
            .collect(),
    };
    GammaHemiring::new(raw).expect("L3 is a Gamma-hemiring")
}

/// On [`three_lines`]: the generators `ai`, every sum of at most two `ei`, and 0.
/// Sums of two products stay inside it; `e1 + e2 + e3` does not.
pub fn three_lines_quasi_probe() -> FuzzySubset {
    let e = |i: usize| 1usize << (3 + i);
    let mut members = vec![0, 1, 2, 4, e(0), e(1), e(2), e(0) ^ e(1), e(0) ^ e(2), e(1) ^ e(2)];
    members.sort_unstable();
    FuzzySubset::from_grades(
        (0..64).map(|x| if members.contains(&x) { UnitRational::ONE } else { UnitRational::ZERO }).collect(),
    )
}

/// The two-valued fuzzy h-ideal `(1, 1/2, 1, 1/2)` on [`z4`].
pub fn mu_p() -> FuzzySubset {
    let h = UnitRational::HALF;
    FuzzySubset::from_grades(vec![UnitRational::ONE, h, UnitRational::ONE, h])
}
