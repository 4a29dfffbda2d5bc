//! The fixed-point generalized h-product against a direct evaluation that
//! walks the sum lengths one at a time.

use ghr_core::enumerate::enumerate_hemirings;
use ghr_core::fixtures;
use ghr_core::fuzzy::{enumerate_grid_fuzzy, FuzzySubset, Grid};
use ghr_core::product::{generalized_h_product, h_product};
use ghr_core::{ElementId, GammaHemiring, UnitRational};
use std::collections::BTreeSet;

/// Products `a gamma b` whose factors both clear `t`.
fn products_at(h: &GammaHemiring, mu: &FuzzySubset, theta: &FuzzySubset, t: UnitRational) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for a in h.elements().filter(|&a| mu.grade(a) >= t) {
        for g in h.gammas() {
            for b in h.elements().filter(|&b| theta.grade(b) >= t) {
                out.insert(h.mul(a, g, b).0);
            }
        }
    }
    out
}

/// Supremum over `n <= n_max` of the grades of `x`, where a grade `t` is
/// attained when `x + u + z = v + z` for sums `u, v` of `n` products each
/// with every factor at least `t`.
fn by_lengths(h: &GammaHemiring, mu: &FuzzySubset, theta: &FuzzySubset, n_max: usize) -> Vec<UnitRational> {
    let mut grades: BTreeSet<UnitRational> = mu.grades().iter().chain(theta.grades()).copied().collect();
    grades.remove(&UnitRational::ZERO);
    let mut out = vec![UnitRational::ZERO; h.s_size()];
    for &t in &grades {
        let prods = products_at(h, mu, theta, t);
        if prods.is_empty() {
            continue;
        }
        let mut sums: BTreeSet<(usize, usize)> =
            prods.iter().flat_map(|&p| prods.iter().map(move |&q| (p, q))).collect();
        let mut all = sums.clone();
        for _ in 1..n_max {
            let mut next = BTreeSet::new();
            for &(u, v) in &sums {
                for &p in &prods {
                    for &q in &prods {
                        next.insert((h.add(ElementId(u), ElementId(p)).0, h.add(ElementId(v), ElementId(q)).0));
                    }
                }
            }
            all.extend(next.iter().copied());
            sums = next;
        }
        for x in h.elements() {
            let hit = all
                .iter()
                .any(|&(u, v)| h.elements().any(|z| h.add(h.add(x, ElementId(u)), z) == h.add(ElementId(v), z)));
            if hit && out[x.0] < t {
                out[x.0] = t;
            }
        }
    }
    out
}

#[test]
fn fixed_point_matches_bounded_lengths() {
    let grid = Grid::standard();
    let mut structures = 0;
    let mut pairs = 0u64;
    for h in enumerate_hemirings(3, 2) {
        let subsets: Vec<FuzzySubset> = enumerate_grid_fuzzy(&h, &grid).collect();
        let n_max = h.s_size() * h.s_size();
        for mu in &subsets {
            for theta in &subsets {
                let fast = generalized_h_product(&h, mu, theta).unwrap();
                assert_eq!(fast.grades(), by_lengths(&h, mu, theta, n_max).as_slice(), "{} ({mu}) ({theta})", h.name());
                pairs += 1;
            }
        }
        structures += 1;
    }
    assert_eq!(structures, 66);
    assert!(pairs > 40_000);
}

#[test]
fn length_one_is_the_single_term_product() {
    let grid = Grid::standard();
    for h in enumerate_hemirings(2, 2).chain([fixtures::z4()]) {
        let subsets: Vec<FuzzySubset> = enumerate_grid_fuzzy(&h, &grid).step_by(7).collect();
        for mu in &subsets {
            for theta in &subsets {
                assert_eq!(h_product(&h, mu, theta).unwrap().grades(), by_lengths(&h, mu, theta, 1).as_slice());
            }
        }
    }
}

#[test]
fn three_term_sums_matter_on_three_lines() {
    let h = fixtures::three_lines();
    let mu = fixtures::three_lines_quasi_probe();
    let one = FuzzySubset::one(&h);
    let top = ElementId(0b111000);
    assert_eq!(h_product(&h, &mu, &one).unwrap().grade(top), UnitRational::ZERO);
    assert_eq!(generalized_h_product(&h, &mu, &one).unwrap().grade(top), UnitRational::ONE);
    assert_eq!(by_lengths(&h, &mu, &one, 3)[top.0], UnitRational::ONE);
}
