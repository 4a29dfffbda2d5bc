use super::oracle::{reference_generalized_product, reference_quasi_failure};
use super::{Ctx, Tally};
use crate::crisp::{
    crisp_extension, h_closure, is_h_ideal, is_ideal, is_prime_h_ideal, CrispSubset, PrimeMethod, Side,
};
use crate::error::{Error, Result};
use crate::extension::{extension_inf_identity_holds, fuzzy_extension, inf_max_holds, iterated_extension_chain};
use crate::fuzzy::{
    affine_transform, cartesian, classify_fuzzy, image, is_fuzzy, plus_transform, preimage, quasi_containment_failure,
    FuzzyClass, FuzzySubset,
};
use crate::hemiring::{validate_hemiring, GammaHemiring, MAX_CARRIER};
use crate::homomorphism::{all_homomorphisms, check_homomorphism};
use crate::prime::{prime_grid_counterexample, semiprime_grid_counterexample};
use crate::product::{generalized_h_product, h_product};
use crate::rational::UnitRational;

type Check = fn(&[Ctx], usize) -> Result<Tally>;

/// One executable statement.
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    /// Stated only for commutative structures; other structures are exploratory.
    pub commutative_only: bool,
    pub(crate) check: Check,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id)
    }
}

/// Shorthand names that expand to several claims.
pub const ALIASES: &[(&str, &[&str])] = &[("DICHOTOMY", &["THM-EXT-FIXED", "THM-EXT-UNIT"])];

const fn claim(id: &'static str, statement: &'static str, commutative_only: bool, check: Check) -> Claim {
    Claim { id, statement, commutative_only, check }
}

static REGISTRY: [Claim; 34] = [
    claim(
        "GAMMA-HEMIRING",
        "axioms hold; S x S is a Gamma-hemiring with homomorphic projections; (x g)^(m+n+1) x splits",
        false,
        gamma_hemiring,
    ),
    claim("H-CLOSURE", "the h-closure of an ideal is the least h-ideal containing it", false, h_closure_least),
    claim(
        "THM-PRIME-ELEMENTS",
        "an h-ideal is prime iff a Gamma S Gamma b inside I forces a or b into I",
        false,
        prime_elements,
    ),
    claim(
        "DEF-GENERALIZED-PRODUCT",
        "the fixed-point o_h product equals the layered definition",
        false,
        generalized_product,
    ),
    claim(
        "FUZZY-CRISP-BRIDGE",
        "chi_A is a fuzzy (left/right) h-ideal iff A is a (left/right) h-ideal",
        false,
        crisp_bridge,
    ),
    claim("PRODUCT-CONTAINMENT", "Gamma_h lies below o_h; both products are monotone", false, product_containment),
    claim("DEF-QUASI", "the quasi-ideal containment agrees with the reference o_h product", false, quasi_definition),
    claim(
        "THM-PRIME-CHARACTERIZATION",
        "a fuzzy h-ideal prime by characterization has no grid counterexample",
        false,
        prime_characterization,
    ),
    claim("THM-EXT-RIGHT-HIDEAL", "<x,mu> is a fuzzy right h-ideal when mu is", false, ext_right),
    claim("NOTE-EXT-TWO-SIDED", "<x,mu> is a fuzzy h-ideal when mu is", true, ext_two_sided),
    claim("PROP-EXT-INTERSECTION", "<x, mu cap nu> is a fuzzy h-ideal", true, ext_intersection),
    claim("PROP-EXT-PREIMAGE", "<z, f^-1(phi)> is a fuzzy right h-ideal", false, ext_preimage),
    claim("PROP-EXT-IMAGE", "<z, f(mu)> is a fuzzy right h-ideal for surjective f", false, ext_image),
    claim("PROP-EXT-CONTAINS", "mu lies below <x,mu>", false, ext_contains),
    claim("PROP-EXT-CHAIN", "<(x g)^(n-1) x, mu> lies below <(x g)^n x, mu>", false, ext_chain),
    claim("PROP-EXT-SUPPORT", "mu(x) > 0 makes <x,mu> positive everywhere", false, ext_support),
    claim("PROP-EXT-BI", "<x,mu> is a fuzzy h-bi-ideal when mu is", true, ext_bi),
    claim("PROP-EXT-INTERIOR", "<x,mu> is a fuzzy h-interior ideal when mu is", true, ext_interior),
    claim("PROP-EXT-QUASI", "<x,mu> is a fuzzy h-quasi-ideal when mu is", false, ext_quasi),
    claim("REMARK-QUASI-BI", "<x,mu> is a fuzzy h-bi-ideal when mu is an h-quasi-ideal", true, quasi_bi),
    claim("PROP-EXT-PLUS", "<x, mu+> is a fuzzy right h-ideal, two-sided on commutative structures", false, ext_plus),
    claim(
        "PROP-EXT-AFFINE",
        "<x, beta mu + alpha> is a fuzzy right h-ideal, two-sided on commutative structures",
        false,
        ext_affine,
    ),
    claim(
        "PROP-EXT-CARTESIAN",
        "<x, mu x nu> is a fuzzy right h-ideal of S x S, two-sided on commutative structures",
        false,
        ext_cartesian,
    ),
    claim(
        "THM-CARTESIAN-EXT",
        "<x,mu> x <y,nu> is a fuzzy right h-ideal of S x S, two-sided on commutative structures",
        false,
        cartesian_ext,
    ),
    claim("PROP-INF-MAX", "for Im mu = {t,1}: inf mu(x a s g y) = max(mu(x), mu(y)) iff mu is prime", false, inf_max),
    claim(
        "PROP-EXT-PRIME",
        "for prime mu, <x,mu> satisfies the inf-max criterion with at most two grades",
        false,
        ext_prime,
    ),
    claim(
        "PROP-EXT-SEMIPRIME",
        "for grid-semiprime mu, <x,mu> is constant or has no grid counterexample",
        false,
        ext_semiprime,
    ),
    claim("PROP-EXT-INF-IDENTITY", "for prime mu, <x,mu> = min over <x n s d x, mu>", false, ext_inf_identity),
    claim("PROP-LAMBDA-TRANSLATION", "<x, chi_A> = chi_<x,A>", false, lambda_translation),
    claim("THM-EXT-FIXED", "for prime mu and mu(x) < 1, <x,mu> = mu", false, ext_fixed),
    claim("THM-EXT-UNIT", "for prime mu and mu(x) = 1, <x,mu> is constantly 1", false, ext_unit),
    claim(
        "COR-PRIME-CHARACTERISTIC",
        "for a prime h-ideal I and x outside I, <x, chi_I> = chi_I",
        false,
        prime_characteristic,
    ),
    claim("THM-CONSTANT", "if <x,mu> = mu for every x then mu is constant", true, constant),
    claim("ENUMERATION", "every table in the family validates", false, enumeration_valid),
];

pub fn registry() -> &'static [Claim] {
    &REGISTRY
}

/// Registry entries for `names` (aliases expanded, duplicates dropped);
/// every claim when `names` is empty.
pub fn resolve_claims<S: AsRef<str>>(names: &[S]) -> Result<Vec<&'static Claim>> {
    if names.is_empty() {
        return Ok(REGISTRY.iter().collect());
    }
    let mut out: Vec<&'static Claim> = Vec::new();
    for name in names {
        let name = name.as_ref().trim();
        let expanded: Vec<&str> = match ALIASES.iter().find(|(a, _)| a.eq_ignore_ascii_case(name)) {
            Some((_, ids)) => ids.to_vec(),
            None => vec![name],
        };
        for id in expanded {
            let c = REGISTRY
                .iter()
                .find(|c| c.id.eq_ignore_ascii_case(id))
                .ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
            if !out.iter().any(|o| o.id == c.id) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

fn at(h: &GammaHemiring, what: String) -> String {
    format!("{}: {what}", h.name())
}

fn all_subsets(h: &GammaHemiring) -> impl Iterator<Item = CrispSubset> + '_ {
    let n = h.s_size();
    assert!(n < 32, "subset enumeration is limited to small carriers");
    (0u64..1 << n).map(move |m| CrispSubset::from_mask(n, m))
}

/// Right h-ideal always; two-sided as well when the structure is commutative.
fn expected_side_failure(h: &GammaHemiring, mu: &FuzzySubset) -> Result<Option<&'static str>> {
    if !is_fuzzy(h, mu, FuzzyClass::RightHIdeal)? {
        return Ok(Some("not a fuzzy right h-ideal"));
    }
    if h.is_commutative() && !is_fuzzy(h, mu, FuzzyClass::HIdeal)? {
        return Ok(Some("not a fuzzy h-ideal"));
    }
    Ok(None)
}

fn distinct_extensions(h: &GammaHemiring, mu: &FuzzySubset) -> Result<Vec<FuzzySubset>> {
    let mut out: Vec<FuzzySubset> = Vec::new();
    for x in h.elements() {
        let e = fuzzy_extension(h, x, mu)?;
        if !out.contains(&e) {
            out.push(e);
        }
    }
    Ok(out)
}

fn gamma_hemiring(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let h = &ctxs[i].h;
    let mut t = Tally::default();
    if h.s_size() * h.s_size() <= MAX_CARRIER {
        t.see(true);
        let p = h.product_hemiring()?;
        let report = validate_hemiring(&p.to_raw())?;
        if let Some(v) = report.violations.first() {
            return t.fail(at(h, format!("S x S: {v}")));
        }
        for (k, name) in [(0, "first"), (1, "second")] {
            let map = p
                .elements()
                .map(|e| {
                    let (a, b) = h.pair_components(e);
                    if k == 0 {
                        a
                    } else {
                        b
                    }
                })
                .collect();
            if let Some(v) = check_homomorphism(&p, h, map)?.violations.first() {
                return t.fail(at(h, format!("{name} projection: {v}")));
            }
        }
    }
    for x in h.elements() {
        for g in h.gammas() {
            for m in 0..3 {
                for n in 0..3 {
                    t.see(true);
                    let lhs = h.gamma_power(x, g, m + n + 1);
                    let rhs = h.mul(h.gamma_power(x, g, m), g, h.gamma_power(x, g, n));
                    if lhs != rhs {
                        return t.fail(at(h, format!("x={} gamma={} m={m} n={n}", x.0, g.0)));
                    }
                }
            }
        }
    }
    Ok(t)
}

fn enumeration_valid(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let h = &ctxs[i].h;
    let mut t = Tally::default();
    t.see(true);
    if let Some(v) = validate_hemiring(&h.to_raw())?.violations.first() {
        return t.fail(at(h, v.to_string()));
    }
    Ok(t)
}

fn h_closure_least(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for a in all_subsets(h).skip(1) {
        if !t.see(is_ideal(h, &a, Side::TwoSided)?) {
            continue;
        }
        let c = h_closure(h, &a, Side::TwoSided)?;
        if !is_h_ideal(h, &c, Side::TwoSided)? || !a.is_subset(&c) {
            return t.fail(at(h, format!("A={a}: closure {c} is not an h-ideal above A")));
        }
        if h_closure(h, &c, Side::TwoSided)? != c {
            return t.fail(at(h, format!("A={a}: closure {c} is not idempotent")));
        }
        if let Some(j) = ctx.crisp_h_ideals.iter().find(|j| a.is_subset(j) && !c.is_subset(j)) {
            return t.fail(at(h, format!("A={a}: closure {c} is not below h-ideal {j}")));
        }
    }
    Ok(t)
}

fn prime_elements(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for ideal in &ctx.crisp_h_ideals {
        t.see(true);
        let by_elements = is_prime_h_ideal(h, ideal, PrimeMethod::ByElements)?;
        for method in [PrimeMethod::ByDefinition, PrimeMethod::ByDefinitionRawProducts] {
            let by_def = is_prime_h_ideal(h, ideal, method)?;
            if by_def != by_elements {
                return t.fail(at(h, format!("I={ideal}: {method:?} says {by_def}, by elements says {by_elements}")));
            }
        }
    }
    Ok(t)
}

fn generalized_product(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for mu in &ctx.subsets {
        for theta in &ctx.subsets {
            t.see(true);
            let fast = generalized_h_product(h, mu, theta)?;
            let slow = reference_generalized_product(h, mu, theta);
            if fast != slow {
                return t.fail(at(h, format!("mu={mu:?} theta={theta:?}: {fast:?} vs reference {slow:?}")));
            }
        }
    }
    Ok(t)
}

fn crisp_bridge(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let h = &ctxs[i].h;
    let mut t = Tally::default();
    for a in all_subsets(h).skip(1) {
        t.see(true);
        let c = classify_fuzzy(h, &FuzzySubset::characteristic(&a))?;
        let pairs = [
            ("h-ideal", c.h_ideal, is_h_ideal(h, &a, Side::TwoSided)?),
            ("left h-ideal", c.left_h_ideal, is_h_ideal(h, &a, Side::Left)?),
            ("right h-ideal", c.right_h_ideal, is_h_ideal(h, &a, Side::Right)?),
        ];
        if let Some((name, fuzzy, crisp)) = pairs.iter().find(|(_, f, c)| f != c) {
            return t.fail(at(h, format!("A={a}: {name} fuzzy={fuzzy} crisp={crisp}")));
        }
    }
    Ok(t)
}

/// Each single-position step up the grid from `mu`.
fn covers(ctx: &Ctx, mu: &FuzzySubset) -> Vec<FuzzySubset> {
    let grid = ctx.grid.values();
    (0..mu.len())
        .filter_map(|k| {
            let pos = grid.iter().position(|g| *g == mu.grades()[k])?;
            let up = *grid.get(pos + 1)?;
            let mut grades = mu.grades().to_vec();
            grades[k] = up;
            Some(FuzzySubset::from_grades(grades))
        })
        .collect()
}

fn product_containment(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for mu in &ctx.subsets {
        for theta in &ctx.subsets {
            t.see(true);
            let single = h_product(h, mu, theta)?;
            let general = generalized_h_product(h, mu, theta)?;
            if !single.is_subset(&general) {
                return t.fail(at(h, format!("mu={mu:?} theta={theta:?}: {single:?} not below {general:?}")));
            }
            let bigger = covers(ctx, mu)
                .into_iter()
                .map(|m| (m, theta.clone()))
                .chain(covers(ctx, theta).into_iter().map(|th| (mu.clone(), th)));
            for (m2, th2) in bigger {
                t.see(true);
                if !single.is_subset(&h_product(h, &m2, &th2)?)
                    || !general.is_subset(&generalized_h_product(h, &m2, &th2)?)
                {
                    return t.fail(at(h, format!("mu={mu:?} theta={theta:?} raised to {m2:?} {th2:?}: not monotone")));
                }
            }
        }
    }
    Ok(t)
}

fn quasi_definition(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for mu in &ctx.subsets {
        t.see(true);
        let fast = quasi_containment_failure(h, mu)?;
        let slow = reference_quasi_failure(h, mu);
        if fast != slow {
            return t.fail(at(h, format!("mu={mu:?}: containment fails at {fast:?}, reference at {slow:?}")));
        }
    }
    Ok(t)
}

fn prime_characterization(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let ideals: Vec<FuzzySubset> = ctx.h_ideals().cloned().collect();
    let mut t = Tally::default();
    for (mu, prime) in ctx.subsets.iter().zip(&ctx.prime) {
        if !t.see(*prime) {
            continue;
        }
        if let Some((sigma, theta)) = prime_grid_counterexample(h, mu, &ideals)? {
            return t.fail(at(h, format!("mu={mu:?}: sigma={sigma:?} theta={theta:?}")));
        }
    }
    Ok(t)
}

/// For every `mu` picked by `hyp` and every `x`: `<x,mu>` must be in `class`.
fn extension_preserves(
    ctx: &Ctx,
    hyp: impl Fn(&crate::fuzzy::FuzzyClassification) -> bool,
    class: FuzzyClass,
) -> Result<Tally> {
    let h = &ctx.h;
    let mut t = Tally::default();
    for mu in ctx.select(hyp) {
        for x in h.elements() {
            t.see(true);
            let e = fuzzy_extension(h, x, mu)?;
            if !is_fuzzy(h, &e, class)? {
                return t.fail(at(h, format!("mu={mu:?} x={}: <x,mu>={e:?} is not {class:?}", x.0)));
            }
        }
    }
    Ok(t)
}

fn ext_right(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    extension_preserves(&ctxs[i], |c| c.right_h_ideal, FuzzyClass::RightHIdeal)
}

fn ext_two_sided(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    extension_preserves(&ctxs[i], |c| c.h_ideal, FuzzyClass::HIdeal)
}

fn ext_bi(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    extension_preserves(&ctxs[i], |c| c.h_bi_ideal, FuzzyClass::BiIdeal)
}

fn ext_interior(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    extension_preserves(&ctxs[i], |c| c.h_interior_ideal, FuzzyClass::InteriorIdeal)
}

fn ext_quasi(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    extension_preserves(&ctxs[i], |c| c.h_quasi_ideal, FuzzyClass::QuasiIdeal)
}

fn quasi_bi(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    extension_preserves(&ctxs[i], |c| c.h_quasi_ideal, FuzzyClass::BiIdeal)
}

fn ext_intersection(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let ideals: Vec<&FuzzySubset> = ctx.h_ideals().collect();
    let mut t = Tally::default();
    for mu in &ideals {
        for nu in &ideals {
            let meet = mu.intersection(nu);
            for x in h.elements() {
                t.see(true);
                let e = fuzzy_extension(h, x, &meet)?;
                if !is_fuzzy(h, &e, FuzzyClass::HIdeal)? {
                    return t.fail(at(h, format!("mu={mu:?} nu={nu:?} x={}: {e:?}", x.0)));
                }
            }
        }
    }
    Ok(t)
}

fn ext_preimage(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let src = &ctxs[i].h;
    let mut t = Tally::default();
    for target in ctxs {
        for f in all_homomorphisms(src, &target.h) {
            for phi in target.select(|c| c.right_h_ideal) {
                let pulled = preimage(&f, phi)?;
                for z in src.elements() {
                    t.see(true);
                    let e = fuzzy_extension(src, z, &pulled)?;
                    if !is_fuzzy(src, &e, FuzzyClass::RightHIdeal)? {
                        return t.fail(at(
                            src,
                            format!("f={:?} into {} phi={phi:?} z={}: {e:?}", f.map(), target.h.name(), z.0),
                        ));
                    }
                }
            }
        }
    }
    Ok(t)
}

fn ext_image(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let src = &ctxs[i];
    let mut t = Tally::default();
    for target in ctxs {
        let k = &target.h;
        for f in all_homomorphisms(&src.h, k).into_iter().filter(|f| f.is_surjective()) {
            for mu in src.select(|c| c.right_h_ideal) {
                let pushed = image(&f, mu)?;
                for z in k.elements() {
                    t.see(true);
                    let e = fuzzy_extension(k, z, &pushed)?;
                    if !is_fuzzy(k, &e, FuzzyClass::RightHIdeal)? {
                        return t
                            .fail(at(&src.h, format!("f={:?} onto {} mu={mu:?} z={}: {e:?}", f.map(), k.name(), z.0)));
                    }
                }
            }
        }
    }
    Ok(t)
}

fn ext_contains(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for mu in ctx.h_ideals() {
        for x in h.elements() {
            t.see(true);
            let e = fuzzy_extension(h, x, mu)?;
            if !mu.is_subset(&e) {
                return t.fail(at(h, format!("mu={mu:?} x={}: <x,mu>={e:?}", x.0)));
            }
        }
    }
    Ok(t)
}

fn ext_chain(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for mu in ctx.h_ideals() {
        for x in h.elements() {
            for g in h.gammas() {
                t.see(true);
                let chain = iterated_extension_chain(h, x, g, mu, 3)?;
                if let Some(k) = chain.windows(2).position(|w| !w[0].is_subset(&w[1])) {
                    return t.fail(at(h, format!("mu={mu:?} x={} gamma={} step {k}: {chain:?}", x.0, g.0)));
                }
            }
        }
    }
    Ok(t)
}

fn ext_support(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for mu in ctx.h_ideals() {
        for x in h.elements() {
            if !t.see(!mu.grade(x).is_zero()) {
                continue;
            }
            let e = fuzzy_extension(h, x, mu)?;
            if !e.support().is_full() {
                return t.fail(at(h, format!("mu={mu:?} x={}: <x,mu>={e:?}", x.0)));
            }
        }
    }
    Ok(t)
}

fn transformed_extension(ctx: &Ctx, transforms: impl Fn(&FuzzySubset) -> Result<Vec<FuzzySubset>>) -> Result<Tally> {
    let h = &ctx.h;
    let mut t = Tally::default();
    for mu in ctx.h_ideals() {
        for nu in transforms(mu)? {
            for x in h.elements() {
                t.see(true);
                let e = fuzzy_extension(h, x, &nu)?;
                if let Some(why) = expected_side_failure(h, &e)? {
                    return t.fail(at(h, format!("mu={mu:?} transformed={nu:?} x={}: {e:?} {why}", x.0)));
                }
            }
        }
    }
    Ok(t)
}

fn ext_plus(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    transformed_extension(&ctxs[i], |mu| Ok(vec![plus_transform(mu)?]))
}

fn ext_affine(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let grid = ctxs[i].grid.values().to_vec();
    transformed_extension(&ctxs[i], move |mu| {
        let headroom = UnitRational::ONE.checked_sub(mu.max_grade())?;
        let mut out = Vec::new();
        for &beta in grid.iter().filter(|b| !b.is_zero()) {
            for &alpha in grid.iter().filter(|a| **a <= headroom) {
                out.push(affine_transform(mu, beta, alpha)?);
            }
        }
        Ok(out)
    })
}

fn ext_cartesian(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    if h.s_size() * h.s_size() > MAX_CARRIER {
        return Ok(t);
    }
    let p = h.product_hemiring()?;
    for mu in ctx.h_ideals() {
        for nu in ctx.h_ideals() {
            let m = cartesian(h, mu, nu)?;
            for e in distinct_extensions(&p, &m)? {
                t.see(true);
                if let Some(why) = expected_side_failure(&p, &e)? {
                    return t.fail(at(h, format!("mu={mu:?} nu={nu:?}: extension {e:?} {why}")));
                }
            }
        }
    }
    Ok(t)
}

fn cartesian_ext(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    if h.s_size() * h.s_size() > MAX_CARRIER {
        return Ok(t);
    }
    let p = h.product_hemiring()?;
    let exts: Vec<(&FuzzySubset, Vec<FuzzySubset>)> =
        ctx.h_ideals().map(|mu| Ok((mu, distinct_extensions(h, mu)?))).collect::<Result<_>>()?;
    for (mu, emu) in &exts {
        for (nu, enu) in &exts {
            for a in emu {
                for b in enu {
                    t.see(true);
                    let c = cartesian(h, a, b)?;
                    if let Some(why) = expected_side_failure(&p, &c)? {
                        return t.fail(at(h, format!("mu={mu:?} nu={nu:?}: {a:?} x {b:?} {why}")));
                    }
                }
            }
        }
    }
    Ok(t)
}

fn inf_max(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for ((mu, c), prime) in ctx.subsets.iter().zip(&ctx.class).zip(&ctx.prime) {
        let shape = c.h_ideal && mu.grades()[0].is_one() && mu.image().len() == 2;
        if !t.see(shape) {
            continue;
        }
        let holds = inf_max_holds(h, mu);
        if holds != *prime {
            return t.fail(at(h, format!("mu={mu:?}: criterion {holds}, prime {prime}")));
        }
    }
    Ok(t)
}

fn ext_prime(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for mu in ctx.primes() {
        for x in h.elements() {
            t.see(true);
            let e = fuzzy_extension(h, x, mu)?;
            if !inf_max_holds(h, &e) || e.image().len() > 2 {
                return t.fail(at(h, format!("mu={mu:?} x={}: <x,mu>={e:?}", x.0)));
            }
        }
    }
    Ok(t)
}

fn ext_semiprime(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let ideals: Vec<FuzzySubset> = ctx.h_ideals().cloned().collect();
    let mut t = Tally::default();
    for mu in &ideals {
        let semiprime = !mu.is_constant() && semiprime_grid_counterexample(h, mu, &ideals)?.is_none();
        if !semiprime {
            t.see(false);
            continue;
        }
        for x in h.elements() {
            t.see(true);
            let e = fuzzy_extension(h, x, mu)?;
            if e.is_constant() {
                continue;
            }
            if let Some(theta) = semiprime_grid_counterexample(h, &e, &ideals)? {
                return t.fail(at(h, format!("mu={mu:?} x={}: <x,mu>={e:?} theta={theta:?}", x.0)));
            }
        }
    }
    Ok(t)
}

fn ext_inf_identity(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for mu in ctx.primes() {
        for x in h.elements() {
            t.see(true);
            if !extension_inf_identity_holds(h, x, mu)? {
                return t.fail(at(h, format!("mu={mu:?} x={}", x.0)));
            }
        }
    }
    Ok(t)
}

fn lambda_translation(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let h = &ctxs[i].h;
    let mut t = Tally::default();
    for a in all_subsets(h) {
        for x in h.elements() {
            t.see(true);
            let fuzzy = fuzzy_extension(h, x, &FuzzySubset::characteristic(&a))?;
            let crisp = FuzzySubset::characteristic(&crisp_extension(h, x, &a));
            if fuzzy != crisp {
                return t.fail(at(h, format!("A={a} x={}: {fuzzy:?} vs {crisp:?}", x.0)));
            }
        }
    }
    Ok(t)
}

fn dichotomy(ctx: &Ctx, in_level_zero: bool) -> Result<Tally> {
    let h = &ctx.h;
    let mut t = Tally::default();
    for mu in ctx.primes() {
        let expected = if in_level_zero { FuzzySubset::one(h) } else { mu.clone() };
        for x in h.elements() {
            if !t.see(mu.grade(x).is_one() == in_level_zero) {
                continue;
            }
            let e = fuzzy_extension(h, x, mu)?;
            if e != expected {
                return t.fail(at(h, format!("mu={mu:?} x={}: <x,mu>={e:?}", x.0)));
            }
        }
    }
    Ok(t)
}

fn ext_fixed(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    dichotomy(&ctxs[i], false)
}

fn ext_unit(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    dichotomy(&ctxs[i], true)
}

fn prime_characteristic(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for (ideal, prime) in ctx.crisp_h_ideals.iter().zip(&ctx.crisp_prime) {
        let chi = FuzzySubset::characteristic(ideal);
        for x in h.elements() {
            if !t.see(*prime && !ideal.contains(x)) {
                continue;
            }
            let e = fuzzy_extension(h, x, &chi)?;
            if e != chi {
                return t.fail(at(h, format!("I={ideal} x={}: {e:?}", x.0)));
            }
        }
    }
    Ok(t)
}

fn constant(ctxs: &[Ctx], i: usize) -> Result<Tally> {
    let ctx = &ctxs[i];
    let h = &ctx.h;
    let mut t = Tally::default();
    for mu in ctx.h_ideals() {
        let mut fixed = true;
        for x in h.elements() {
            if fuzzy_extension(h, x, mu)? != *mu {
                fixed = false;
                break;
            }
        }
        if !t.see(fixed) {
            continue;
        }
        if !mu.is_constant() {
            return t.fail(at(h, format!("mu={mu:?} is fixed by every extension")));
        }
    }
    Ok(t)
}
