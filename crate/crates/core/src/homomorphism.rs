//! Γ-homomorphisms between structures that share one Γ component.

use crate::error::{Error, Result};
use crate::hemiring::{ElementId, GammaHemiring, ValidationReport, Violation};

/// Whether the two structures carry literally the same Γ table.
pub fn same_gamma(a: &GammaHemiring, b: &GammaHemiring) -> bool {
    a.g_size() == b.g_size() && a.gammas().all(|x| a.gammas().all(|y| a.gamma_add(x, y) == b.gamma_add(x, y)))
}

#[derive(Clone, Debug)]
pub struct Homomorphism<'a> {
    source: &'a GammaHemiring,
    target: &'a GammaHemiring,
    map: Vec<ElementId>,
}

impl<'a> Homomorphism<'a> {
    /// Checks shapes only; use [`Homomorphism::check`] for the morphism laws.
    pub fn new(source: &'a GammaHemiring, target: &'a GammaHemiring, map: Vec<ElementId>) -> Result<Self> {
        if !same_gamma(source, target) {
            return Err(Error::GammaMismatch);
        }
        if map.len() != source.s_size() {
            return Err(Error::SizeMismatch { expected: source.s_size(), found: map.len() });
        }
        if let Some(bad) = map.iter().find(|e| !target.contains(**e)) {
            return Err(Error::ElementOutOfRange(bad.0));
        }
        Ok(Homomorphism { source, target, map })
    }

    pub fn identity(h: &'a GammaHemiring) -> Self {
        Homomorphism { source: h, target: h, map: h.elements().collect() }
    }

    pub fn source(&self) -> &'a GammaHemiring {
        self.source
    }

    pub fn target(&self) -> &'a GammaHemiring {
        self.target
    }

    pub fn map(&self) -> &[ElementId] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: ElementId) -> ElementId {
        self.map[x.0]
    }

    pub fn is_surjective(&self) -> bool {
        self.target.elements().all(|y| self.map.contains(&y))
    }

    /// Additivity, multiplicativity and zero preservation, one witness each.
    pub fn check(&self) -> ValidationReport {
        let (r, s) = (self.source, self.target);
        let mut violations = Vec::new();
        let w = |pairs: &[(&str, usize)]| pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect();

        'add: for a in r.elements() {
            for b in r.elements() {
                if self.apply(r.add(a, b)) != s.add(self.apply(a), self.apply(b)) {
                    violations.push(Violation { label: "additive".into(), witness: w(&[("a", a.0), ("b", b.0)]) });
                    break 'add;
                }
            }
        }
        'mul: for a in r.elements() {
            for al in r.gammas() {
                for b in r.elements() {
                    if self.apply(r.mul(a, al, b)) != s.mul(self.apply(a), al, self.apply(b)) {
                        violations.push(Violation {
                            label: "multiplicative".into(),
                            witness: w(&[("a", a.0), ("alpha", al.0), ("b", b.0)]),
                        });
                        break 'mul;
                    }
                }
            }
        }
        if self.apply(ElementId::ZERO) != ElementId::ZERO {
            violations.push(Violation {
                label: "zero-preserving".into(),
                witness: w(&[("f(0)", self.apply(ElementId::ZERO).0)]),
            });
        }
        ValidationReport::from_violations(violations)
    }
}

pub fn check_homomorphism(
    source: &GammaHemiring,
    target: &GammaHemiring,
    map: Vec<ElementId>,
) -> Result<ValidationReport> {
    Ok(Homomorphism::new(source, target, map)?.check())
}

/// Every Γ-homomorphism `source -> target`, maps in lexicographic order.
pub fn all_homomorphisms<'a>(source: &'a GammaHemiring, target: &'a GammaHemiring) -> Vec<Homomorphism<'a>> {
    if !same_gamma(source, target) {
        return Vec::new();
    }
    let n = source.s_size();
    let m = target.s_size();
    let mut out = Vec::new();
    let mut map = vec![ElementId::ZERO; n];
    loop {
        let f = Homomorphism { source, target, map: map.clone() };
        if f.check().valid {
            out.push(f);
        }
        // odometer over positions 1..n; position 0 stays at zero
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            if map[i].0 + 1 < m {
                map[i].0 += 1;
                break;
            }
            map[i] = ElementId::ZERO;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ids(v: &[usize]) -> Vec<ElementId> {
        v.iter().copied().map(ElementId).collect()
    }

    #[test]
    fn identity_is_a_homomorphism() {
        let z4 = fixtures::z4();
        assert!(Homomorphism::identity(&z4).check().valid);
    }

    #[test]
    fn reduction_mod_two() {
        let (z4, z2) = (fixtures::z4(), fixtures::z2_over_z4());
        let report = check_homomorphism(&z4, &z2, ids(&[0, 1, 0, 1])).unwrap();
        assert!(report.valid, "{:?}", report.violations);
    }

    #[test]
    fn shift_is_not_zero_preserving() {
        let z4 = fixtures::z4();
        let report = check_homomorphism(&z4, &z4, ids(&[1, 2, 3, 0])).unwrap();
        assert!(!report.valid);
        assert!(report.violations.iter().any(|v| v.label == "zero-preserving"));
    }

    #[test]
    fn gamma_mismatch_is_structural() {
        let (z4, b2) = (fixtures::z4(), fixtures::b2());
        assert!(matches!(check_homomorphism(&b2, &z4, ids(&[0, 0])), Err(Error::GammaMismatch)));
    }

    #[test]
    fn product_projections_are_homomorphisms() {
        for h in [fixtures::b2(), fixtures::z4(), fixtures::t1()] {
            let p = h.product_hemiring().unwrap();
            let first = p.elements().map(|e| h.pair_components(e).0).collect();
            let second = p.elements().map(|e| h.pair_components(e).1).collect();
            assert!(check_homomorphism(&p, &h, first).unwrap().valid);
            assert!(check_homomorphism(&p, &h, second).unwrap().valid);
        }
    }

    #[test]
    fn enumerates_endomorphisms_of_z4() {
        let z4 = fixtures::z4();
        let all = all_homomorphisms(&z4, &z4);
        // x -> k x mod 4 must also satisfy k a g b = k a g k b, i.e. k^2 = k
        let maps: Vec<Vec<ElementId>> = all.iter().map(|f| f.map().to_vec()).collect();
        assert_eq!(maps, vec![ids(&[0, 0, 0, 0]), ids(&[0, 1, 2, 3])]);
    }
}
