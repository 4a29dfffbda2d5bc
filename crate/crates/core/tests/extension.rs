//! The extension `<x, mu>` against a literal infimum scan.

use ghr_core::crisp::{crisp_extension, CrispSubset};
use ghr_core::enumerate::enumerate_hemirings;
use ghr_core::extension::fuzzy_extension;
use ghr_core::fixtures;
use ghr_core::fuzzy::FuzzySubset;
use ghr_core::{GammaHemiring, UnitRational};

fn extension_by_scan(h: &GammaHemiring, x: usize, mu: &FuzzySubset) -> Vec<UnitRational> {
    let x = ghr_core::ElementId(x);
    h.elements()
        .map(|y| {
            let mut inf = UnitRational::ONE;
            for al in h.gammas() {
                for s in h.elements() {
                    for g in h.gammas() {
                        inf = inf.min(mu.grade(h.mul(h.mul(x, al, s), g, y)));
                    }
                }
            }
            inf
        })
        .collect()
}

#[test]
fn prime_extension_dichotomy_on_z4() {
    let h = fixtures::z4();
    let mu = fixtures::mu_p();
    let by_one = fuzzy_extension(&h, ghr_core::ElementId(1), &mu).unwrap();
    let by_two = fuzzy_extension(&h, ghr_core::ElementId(2), &mu).unwrap();
    assert_eq!(by_one, mu);
    assert_eq!(by_two, FuzzySubset::one(&h));
    assert_eq!(by_one.grades(), extension_by_scan(&h, 1, &mu).as_slice());
    assert_eq!(by_two.grades(), extension_by_scan(&h, 2, &mu).as_slice());
}

fn translation_holds(h: &GammaHemiring) -> usize {
    let n = h.s_size();
    let mut checked = 0;
    for mask in 0u64..1 << n {
        let a = CrispSubset::from_mask(n, mask);
        let lambda = FuzzySubset::characteristic(&a);
        for x in h.elements() {
            let lhs = fuzzy_extension(h, x, &lambda).unwrap();
            let rhs = FuzzySubset::characteristic(&crisp_extension(h, x, &a));
            assert_eq!(lhs, rhs, "{} x={} A={a}", h.name(), x.0);
            assert_eq!(lhs.grades(), extension_by_scan(h, x.0, &lambda).as_slice());
            checked += 1;
        }
    }
    checked
}

#[test]
fn lambda_translation_on_z4() {
    assert_eq!(translation_holds(&fixtures::z4()), 16 * 4);
}

#[test]
fn lambda_translation_on_small_family() {
    let total: usize = enumerate_hemirings(2, 3).map(|h| translation_holds(&h)).sum();
    assert!(total > 0);
}

#[test]
fn extension_matches_scan_on_graded_subsets() {
    let grid = ghr_core::fuzzy::Grid::standard();
    for h in enumerate_hemirings(3, 2) {
        for mu in ghr_core::fuzzy::enumerate_grid_fuzzy(&h, &grid) {
            for x in 0..h.s_size() {
                let fast = fuzzy_extension(&h, ghr_core::ElementId(x), &mu).unwrap();
                assert_eq!(fast.grades(), extension_by_scan(&h, x, &mu).as_slice());
            }
        }
    }
}
