//! The two h-products of fuzzy subsets.
//!
//! Both are maxima of minima over finite index sets. The single-term product
//! scans every balanced pair of products directly. The generalized product
//! allows sums of any common length `n`; it is computed per threshold `t` as
//! the least fixed point of the pairs of equal-length sums of products whose
//! factors all clear `t`.

use crate::error::Result;
use crate::fuzzy::FuzzySubset;
use crate::hemiring::{ElementId, GammaHemiring};
use crate::rational::UnitRational;

fn check(h: &GammaHemiring, mu: &FuzzySubset, theta: &FuzzySubset) -> Result<()> {
    mu.check_carrier(h)?;
    theta.check_carrier(h)
}

/// For each element `p`, the best `min(mu(a), theta(b))` over `a gamma b = p`,
/// or `None` when `p` is not a product.
fn best_factorization(h: &GammaHemiring, mu: &FuzzySubset, theta: &FuzzySubset) -> Vec<Option<UnitRational>> {
    let mut best: Vec<Option<UnitRational>> = vec![None; h.s_size()];
    for a in h.elements() {
        for g in h.gammas() {
            for b in h.elements() {
                let p = h.mul(a, g, b);
                let v = mu.grade(a).min(theta.grade(b));
                best[p.0] = Some(best[p.0].map_or(v, |old| old.max(v)));
            }
        }
    }
    best
}

/// `(mu Gamma_h theta)(x)`: max over `x + a1 gamma b1 + z = a2 delta b2 + z`
/// of `min(mu(a1), mu(a2), theta(b1), theta(b2))`, 0 if no such tuple.
pub fn h_product(h: &GammaHemiring, mu: &FuzzySubset, theta: &FuzzySubset) -> Result<FuzzySubset> {
    check(h, mu, theta)?;
    // the four-way min splits into one min per side, and the sides are chosen independently
    let best = best_factorization(h, mu, theta);
    let grades = h
        .elements()
        .map(|x| {
            let mut acc = UnitRational::ZERO;
            for p in h.elements() {
                let Some(bp) = best[p.0] else { continue };
                for q in h.elements() {
                    let Some(bq) = best[q.0] else { continue };
                    if h.h_reachable(x, p, q) {
                        acc = acc.max(bp.min(bq));
                    }
                }
            }
            acc
        })
        .collect();
    Ok(FuzzySubset::from_grades(grades))
}

/// Pairs `(sum of n products, sum of n products)` drawn from `level`, any `n >= 1`.
fn balanced_sums(h: &GammaHemiring, level: &[ElementId]) -> Vec<bool> {
    let s = h.s_size();
    let mut seen = vec![false; s * s];
    let mut stack = Vec::new();
    for &p in level {
        for &q in level {
            if !seen[p.0 * s + q.0] {
                seen[p.0 * s + q.0] = true;
                stack.push((p, q));
            }
        }
    }
    while let Some((u, v)) = stack.pop() {
        for &p in level {
            let u2 = h.add(u, p);
            for &q in level {
                let v2 = h.add(v, q);
                let idx = u2.0 * s + v2.0;
                if !seen[idx] {
                    seen[idx] = true;
                    stack.push((u2, v2));
                }
            }
        }
    }
    seen
}

/// `(mu o_h theta)(x)`: the supremum over all `n >= 1` and all
/// `x + sum a_i gamma_i b_i + z = sum c_i delta_i d_i + z` of the minimum of
/// every `mu(a_i), mu(c_i), theta(b_i), theta(d_i)`; 0 if inexpressible.
pub fn generalized_h_product(h: &GammaHemiring, mu: &FuzzySubset, theta: &FuzzySubset) -> Result<FuzzySubset> {
    check(h, mu, theta)?;
    let s = h.s_size();
    let best = best_factorization(h, mu, theta);
    let mut thresholds: Vec<UnitRational> = best.iter().flatten().copied().collect();
    thresholds.sort_unstable_by(|a, b| b.cmp(a));
    thresholds.dedup();

    let mut grades: Vec<Option<UnitRational>> = vec![None; s];
    for t in thresholds {
        if grades.iter().all(Option::is_some) {
            break;
        }
        let level: Vec<ElementId> = h.elements().filter(|p| best[p.0].is_some_and(|b| b >= t)).collect();
        let pairs = balanced_sums(h, &level);
        for x in h.elements() {
            if grades[x.0].is_some() {
                continue;
            }
            let hit = h.elements().any(|u| h.elements().any(|v| pairs[u.0 * s + v.0] && h.h_reachable(x, u, v)));
            if hit {
                grades[x.0] = Some(t);
            }
        }
    }
    Ok(FuzzySubset::from_grades(grades.into_iter().map(|g| g.unwrap_or(UnitRational::ZERO)).collect()))
}
