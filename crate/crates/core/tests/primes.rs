//! Crisp and fuzzy primeness: the element test against the ideal-pair test,
//! and the two-valued characterization against grid counterexample search.

use ghr_core::crisp::{enumerate_h_ideals, is_prime_h_ideal, CrispSubset, PrimeMethod};
use ghr_core::enumerate::enumerate_hemirings;
use ghr_core::fixtures;
use ghr_core::fuzzy::{FuzzySubset, Grid};
use ghr_core::prime::{grid_h_ideals, prime_by_characterization, prime_grid_counterexample};
use ghr_core::GammaHemiring;

/// `a Gamma S Gamma b` inside `I` forces `a` or `b` into `I`, scanned directly.
fn prime_by_scan(h: &GammaHemiring, i: &CrispSubset) -> bool {
    if i.is_full() {
        return false;
    }
    h.elements().all(|a| {
        h.elements().all(|b| {
            let inside =
                h.gammas().all(|al| h.elements().all(|s| h.gammas().all(|g| i.contains(h.mul(h.mul(a, al, s), g, b)))));
            !inside || i.contains(a) || i.contains(b)
        })
    })
}

#[test]
fn element_and_ideal_pair_tests_agree() {
    let mut ideals = 0;
    let mut primes = 0;
    for h in enumerate_hemirings(3, 2).chain([fixtures::z4(), fixtures::z2_over_z4()]) {
        for i in enumerate_h_ideals(&h) {
            let by_elements = is_prime_h_ideal(&h, &i, PrimeMethod::ByElements).unwrap();
            let by_definition = is_prime_h_ideal(&h, &i, PrimeMethod::ByDefinition).unwrap();
            assert_eq!(by_elements, by_definition, "{} {i}", h.name());
            assert_eq!(by_elements, prime_by_scan(&h, &i), "{} {i}", h.name());
            ideals += 1;
            primes += by_elements as usize;
        }
    }
    assert!(primes > 1 && primes < ideals);
}

#[test]
fn z4_prime_h_ideals() {
    let h = fixtures::z4();
    let found: Vec<String> = enumerate_h_ideals(&h)
        .into_iter()
        .filter(|i| is_prime_h_ideal(&h, i, PrimeMethod::ByElements).unwrap())
        .map(|i| i.to_string())
        .collect();
    let zero_two = CrispSubset::from_members(4, [0, 2]).unwrap();
    assert_eq!(found, vec![zero_two.to_string()]);
}

#[test]
fn characterized_primes_have_no_grid_counterexample() {
    let grid = Grid::standard();
    let mut primes = 0;
    for h in enumerate_hemirings(3, 2).chain([fixtures::z4(), fixtures::z2()]) {
        let ideals = grid_h_ideals(&h, &grid);
        for mu in &ideals {
            if prime_by_characterization(&h, mu).unwrap() {
                primes += 1;
                assert_eq!(prime_grid_counterexample(&h, mu, &ideals).unwrap(), None, "{} ({mu})", h.name());
            }
        }
    }
    assert!(primes > 0);
}

#[test]
fn z4_characterization_examples() {
    let h = fixtures::z4();
    let chi0 = FuzzySubset::characteristic(&CrispSubset::from_members(4, [0]).unwrap());
    assert!(!prime_by_characterization(&h, &chi0).unwrap());
    assert!(prime_by_characterization(&h, &fixtures::mu_p()).unwrap());
    // the grid search also sees {0} is not prime: (0,2) Gamma (0,2) lands in it
    let ideals = grid_h_ideals(&h, &Grid::standard());
    assert!(prime_grid_counterexample(&h, &chi0, &ideals).unwrap().is_some());
}
