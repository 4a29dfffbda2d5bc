//! Slow reference evaluations used by claims that compare an optimized
//! routine against the definition it implements. Nothing here goes through
//! the precomputed reachability table of [`GammaHemiring`].

use crate::fuzzy::FuzzySubset;
use crate::hemiring::{ElementId, GammaHemiring};
use crate::rational::UnitRational;

/// `exists z: x + u + z = v + z`, by scanning `z` over the carrier.
pub fn reachable_by_scan(h: &GammaHemiring, x: ElementId, u: ElementId, v: ElementId) -> bool {
    h.elements().any(|z| h.add(h.add(x, u), z) == h.add(v, z))
}

/// Generalized h-product with sum lengths bounded by `n_max`, built layer by
/// layer: layer `n` maps each pair `(sum of n products, sum of n products)`
/// to the best grade attainable for it.
pub fn layered_generalized_product(
    h: &GammaHemiring,
    mu: &FuzzySubset,
    theta: &FuzzySubset,
    n_max: usize,
) -> FuzzySubset {
    let s = h.s_size();
    let mut single: Vec<Option<UnitRational>> = vec![None; s * s];
    for a in h.elements() {
        for g in h.gammas() {
            for b in h.elements() {
                for c in h.elements() {
                    for d in h.gammas() {
                        for e in h.elements() {
                            let v = mu.grade(a).min(theta.grade(b)).min(mu.grade(c)).min(theta.grade(e));
                            let idx = h.mul(a, g, b).0 * s + h.mul(c, d, e).0;
                            single[idx] = Some(single[idx].map_or(v, |o| o.max(v)));
                        }
                    }
                }
            }
        }
    }
    let mut best = single.clone();
    let mut layer = single.clone();
    for _ in 1..n_max {
        let mut next: Vec<Option<UnitRational>> = vec![None; s * s];
        for (i, li) in layer.iter().enumerate() {
            let Some(li) = li else { continue };
            for (j, sj) in single.iter().enumerate() {
                let Some(sj) = sj else { continue };
                let u = h.add(ElementId(i / s), ElementId(j / s));
                let v = h.add(ElementId(i % s), ElementId(j % s));
                let idx = u.0 * s + v.0;
                let g = (*li).min(*sj);
                next[idx] = Some(next[idx].map_or(g, |o| o.max(g)));
            }
        }
        for (b, n) in best.iter_mut().zip(&next) {
            if let Some(n) = n {
                *b = Some(b.map_or(*n, |o| o.max(*n)));
            }
        }
        layer = next;
    }
    let grades = h
        .elements()
        .map(|x| {
            let mut acc = UnitRational::ZERO;
            for (i, b) in best.iter().enumerate() {
                if let Some(b) = b {
                    if reachable_by_scan(h, x, ElementId(i / s), ElementId(i % s)) {
                        acc = acc.max(*b);
                    }
                }
            }
            acc
        })
        .collect();
    FuzzySubset::from_grades(grades)
}

/// Layered product with the sum-length bound `s_size^2`.
pub fn reference_generalized_product(h: &GammaHemiring, mu: &FuzzySubset, theta: &FuzzySubset) -> FuzzySubset {
    layered_generalized_product(h, mu, theta, h.s_size() * h.s_size())
}

/// First `x` with `min((mu o_h 1)(x), (1 o_h mu)(x)) > mu(x)`, via the reference product.
pub fn reference_quasi_failure(h: &GammaHemiring, mu: &FuzzySubset) -> Option<ElementId> {
    let one = FuzzySubset::one(h);
    let left = reference_generalized_product(h, mu, &one);
    let right = reference_generalized_product(h, &one, mu);
    h.elements().find(|&x| left.grade(x).min(right.grade(x)) > mu.grade(x))
}
