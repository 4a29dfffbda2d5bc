//! Finite Γ-hemirings stored as operation tables.
//!
//! Both carriers keep their additive zero at index 0. The ternary product is
//! stored flat, indexed `[a][gamma][b]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mutation::Mutation;

/// Largest carrier the crate accepts; crisp subsets are 64-bit masks.
pub const MAX_CARRIER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GammaId(pub usize);

impl ElementId {
    pub const ZERO: ElementId = ElementId(0);
}

impl GammaId {
    pub const ZERO: GammaId = GammaId(0);
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for GammaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Unvalidated operation tables, as read from a file or produced by enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTables {
    pub name: String,
    pub s_size: usize,
    pub g_size: usize,
    pub s_add: Vec<Vec<usize>>,
    pub g_add: Vec<Vec<usize>>,
    /// Indexed `[a][gamma][b]`.
    pub product: Vec<Vec<Vec<usize>>>,
}

/// One failed instance of a law, with the tuple that breaks it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub label: String,
    pub witness: Vec<(String, usize)>,
}

impl Violation {
    fn new(label: &str, witness: &[(&str, usize)]) -> Self {
        Violation { label: label.to_string(), witness: witness.iter().map(|&(k, v)| (k.to_string(), v)).collect() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.label)?;
        for (i, (k, v)) in self.witness.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub(crate) fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport { valid: violations.is_empty(), violations }
    }
}

pub const AXIOM_LABELS: [&str; 12] = [
    "S-commutativity",
    "S-associativity",
    "S-zero",
    "Gamma-commutativity",
    "Gamma-associativity",
    "Gamma-zero",
    "axiom (i)",
    "axiom (ii)",
    "axiom (iii)",
    "axiom (iv)",
    "axiom (v)",
    "axiom (vi)",
];

fn check_square(name: &str, table: &[Vec<usize>], n: usize) -> Result<()> {
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(Error::Malformed(format!("{name} must be a {n}x{n} table")));
    }
    if let Some(&bad) = table.iter().flatten().find(|&&e| e >= n) {
        return Err(Error::Malformed(format!("{name} entry {bad} out of range 0..{n}")));
    }
    Ok(())
}

fn check_structure(raw: &RawTables) -> Result<()> {
    if raw.s_size == 0 || raw.g_size == 0 {
        return Err(Error::Malformed("carrier sizes must be positive".into()));
    }
    if raw.s_size > MAX_CARRIER {
        return Err(Error::CarrierTooLarge(raw.s_size));
    }
    check_square("s_add", &raw.s_add, raw.s_size)?;
    check_square("g_add", &raw.g_add, raw.g_size)?;
    let (s, g) = (raw.s_size, raw.g_size);
    let shape_ok = raw.product.len() == s
        && raw.product.iter().all(|plane| plane.len() == g && plane.iter().all(|row| row.len() == s));
    if !shape_ok {
        return Err(Error::Malformed(format!("product must be a {s}x{g}x{s} table")));
    }
    if let Some(&bad) = raw.product.iter().flatten().flatten().find(|&&e| e >= s) {
        return Err(Error::Malformed(format!("product entry {bad} out of range 0..{s}")));
    }
    Ok(())
}

/// Scan every axiom; `per_axiom` bounds the witnesses kept for each one.
fn scan_axioms(raw: &RawTables, per_axiom: usize) -> Vec<Violation> {
    let (s, g) = (raw.s_size, raw.g_size);
    let add = |a: usize, b: usize| raw.s_add[a][b];
    let gadd = |a: usize, b: usize| raw.g_add[a][b];
    let mul = |a: usize, al: usize, b: usize| raw.product[a][al][b];

    let mut out = Vec::new();
    let mut found = [0usize; 12];
    let mut push = |idx: usize, w: &[(&str, usize)]| {
        if found[idx] < per_axiom {
            found[idx] += 1;
            out.push(Violation::new(AXIOM_LABELS[idx], w));
        }
    };

    for (idx, n, op) in [(0usize, s, &add as &dyn Fn(usize, usize) -> usize), (3, g, &gadd)] {
        for a in 0..n {
            for b in 0..n {
                if op(a, b) != op(b, a) {
                    push(idx, &[("a", a), ("b", b)]);
                }
                for c in 0..n {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        push(idx + 1, &[("a", a), ("b", b), ("c", c)]);
                    }
                }
            }
            if op(0, a) != a || op(a, 0) != a {
                push(idx + 2, &[("a", a)]);
            }
        }
    }

    for a in 0..s {
        for b in 0..s {
            for al in 0..g {
                for c in 0..s {
                    if mul(add(a, b), al, c) != add(mul(a, al, c), mul(b, al, c)) {
                        push(6, &[("a", a), ("b", b), ("alpha", al), ("c", c)]);
                    }
                    if mul(a, al, add(b, c)) != add(mul(a, al, b), mul(a, al, c)) {
                        push(7, &[("a", a), ("alpha", al), ("b", b), ("c", c)]);
                    }
                }
            }
        }
    }
    for a in 0..s {
        for al in 0..g {
            for be in 0..g {
                for b in 0..s {
                    if mul(a, gadd(al, be), b) != add(mul(a, al, b), mul(a, be, b)) {
                        push(8, &[("a", a), ("alpha", al), ("beta", be), ("b", b)]);
                    }
                }
            }
        }
    }
    for a in 0..s {
        for al in 0..g {
            for b in 0..s {
                for be in 0..g {
                    for c in 0..s {
                        if mul(a, al, mul(b, be, c)) != mul(mul(a, al, b), be, c) {
                            push(9, &[("a", a), ("alpha", al), ("b", b), ("beta", be), ("c", c)]);
                        }
                    }
                }
            }
        }
    }
    for al in 0..g {
        for a in 0..s {
            if mul(0, al, a) != 0 || mul(a, al, 0) != 0 {
                push(10, &[("alpha", al), ("a", a)]);
            }
        }
    }
    for a in 0..s {
        for b in 0..s {
            if mul(a, 0, b) != 0 {
                push(11, &[("a", a), ("gamma", 0), ("b", b)]);
            }
        }
    }
    // Keep report order aligned with the axiom list, not the scan order.
    out.sort_by_key(|v| AXIOM_LABELS.iter().position(|l| *l == v.label));
    out
}

/// Checks the Γ-hemiring axioms, reporting at most one witness per axiom.
///
/// Structural problems (wrong dimensions, entries out of range) are errors,
/// not violations.
pub fn validate_hemiring(raw: &RawTables) -> Result<ValidationReport> {
    check_structure(raw)?;
    Ok(ValidationReport::from_violations(scan_axioms(raw, 1)))
}

/// Like [`validate_hemiring`] but lists every violating tuple.
pub fn validate_hemiring_verbose(raw: &RawTables) -> Result<ValidationReport> {
    check_structure(raw)?;
    Ok(ValidationReport::from_violations(scan_axioms(raw, usize::MAX)))
}

/// A validated finite Γ-hemiring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaHemiring {
    name: String,
    s_size: usize,
    g_size: usize,
    s_add: Vec<usize>,
    g_add: Vec<usize>,
    product: Vec<usize>,
    /// `balanced[p * s + v]` iff some `z` has `p + z = v + z`.
    balanced: Vec<bool>,
    commutative: bool,
    mutation: Mutation,
}

impl GammaHemiring {
    pub fn new(raw: RawTables) -> Result<Self> {
        let report = validate_hemiring(&raw)?;
        if !report.valid {
            return Err(Error::InvalidStructure(report));
        }
        Ok(Self::build(raw))
    }

    /// Builds without checking the axioms; only the table shapes are checked.
    pub fn new_unchecked(raw: RawTables) -> Result<Self> {
        check_structure(&raw)?;
        Ok(Self::build(raw))
    }

    fn build(raw: RawTables) -> Self {
        let (s, g) = (raw.s_size, raw.g_size);
        let s_add: Vec<usize> = raw.s_add.into_iter().flatten().collect();
        let g_add: Vec<usize> = raw.g_add.into_iter().flatten().collect();
        let product: Vec<usize> = raw.product.into_iter().flatten().flatten().collect();
        let mut h = GammaHemiring {
            name: raw.name,
            s_size: s,
            g_size: g,
            s_add,
            g_add,
            product,
            balanced: Vec::new(),
            commutative: false,
            mutation: Mutation::None,
        };
        h.balanced = h.balance_table();
        h.commutative = (0..s).all(|a| {
            (0..g).all(|al| (0..s).all(|b| h.product[(a * g + al) * s + b] == h.product[(b * g + al) * s + a]))
        });
        h
    }

    fn balance_table(&self) -> Vec<bool> {
        let s = self.s_size;
        let mut t = vec![false; s * s];
        for p in 0..s {
            for v in 0..s {
                t[p * s + v] = match self.mutation {
                    Mutation::DroppedZ => p == v,
                    _ => (0..s).any(|z| self.s_add[p * s + z] == self.s_add[v * s + z]),
                };
            }
        }
        t
    }

    /// Returns a copy whose operations exhibit the given fault.
    pub fn with_mutation(&self, mutation: Mutation) -> Self {
        let mut h = self.clone();
        h.mutation = mutation;
        h.balanced = h.balance_table();
        h
    }

    pub fn mutation(&self) -> Mutation {
        self.mutation
    }

    pub fn to_raw(&self) -> RawTables {
        let (s, g) = (self.s_size, self.g_size);
        RawTables {
            name: self.name.clone(),
            s_size: s,
            g_size: g,
            s_add: self.s_add.chunks(s).map(<[usize]>::to_vec).collect(),
            g_add: self.g_add.chunks(g).map(<[usize]>::to_vec).collect(),
            product: self.product.chunks(g * s).map(|plane| plane.chunks(s).map(<[usize]>::to_vec).collect()).collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn s_size(&self) -> usize {
        self.s_size
    }

    pub fn g_size(&self) -> usize {
        self.g_size
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.s_size).map(ElementId)
    }

    pub fn gammas(&self) -> impl Iterator<Item = GammaId> + Clone {
        (0..self.g_size).map(GammaId)
    }

    pub fn contains(&self, x: ElementId) -> bool {
        x.0 < self.s_size
    }

    pub fn check_element(&self, x: ElementId) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(x.0))
        }
    }

    pub fn check_gamma(&self, g: GammaId) -> Result<()> {
        if g.0 < self.g_size {
            Ok(())
        } else {
            Err(Error::GammaOutOfRange(g.0))
        }
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.s_add[a.0 * self.s_size + b.0])
    }

    #[inline]
    pub fn gamma_add(&self, a: GammaId, b: GammaId) -> GammaId {
        GammaId(self.g_add[a.0 * self.g_size + b.0])
    }

    /// The ternary product `a gamma b`.
    #[inline]
    pub fn mul(&self, a: ElementId, gamma: GammaId, b: ElementId) -> ElementId {
        ElementId(self.product[(a.0 * self.g_size + gamma.0) * self.s_size + b.0])
    }

    /// `x alpha s gamma y`, the pattern the extension ranges over.
    #[inline]
    pub fn sandwich(&self, x: ElementId, alpha: GammaId, s: ElementId, gamma: GammaId, y: ElementId) -> ElementId {
        self.mul(self.mul(x, alpha, s), gamma, y)
    }

    /// `a gamma b == b gamma a` for every `a, b, gamma`.
    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// Whether `(S,+)` is a group, i.e. every element has an additive inverse.
    pub fn additive_group(&self) -> bool {
        self.elements().all(|a| self.elements().any(|b| self.add(a, b) == ElementId::ZERO))
    }

    /// `p + z = v + z` for some `z`.
    #[inline]
    pub fn balanced(&self, p: ElementId, v: ElementId) -> bool {
        self.balanced[p.0 * self.s_size + v.0]
    }

    /// Whether some `z` satisfies `x + u + z = v + z`.
    #[inline]
    pub fn h_reachable(&self, x: ElementId, u: ElementId, v: ElementId) -> bool {
        self.balanced(self.add(x, u), v)
    }

    /// Smallest `z` with `x + u + z = v + z`, if any.
    pub fn h_witness(&self, x: ElementId, u: ElementId, v: ElementId) -> Option<ElementId> {
        let p = self.add(x, u);
        match self.mutation {
            Mutation::DroppedZ => (p == v).then_some(ElementId::ZERO),
            _ => self.elements().find(|&z| self.add(p, z) == self.add(v, z)),
        }
    }

    /// `(x gamma)^n x`: `x` for `n = 0`, then `x gamma ((x gamma)^(n-1) x)`.
    pub fn gamma_power(&self, x: ElementId, gamma: GammaId, n: usize) -> ElementId {
        let mut acc = x;
        for _ in 0..n {
            acc = self.mul(x, gamma, acc);
        }
        acc
    }

    /// Sum of a sequence of elements; the empty sum is zero.
    pub fn sum(&self, items: impl IntoIterator<Item = ElementId>) -> ElementId {
        items.into_iter().fold(ElementId::ZERO, |acc, e| self.add(acc, e))
    }

    /// Index of the pair `(a, b)` in [`GammaHemiring::product_hemiring`].
    pub fn pair_index(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(a.0 * self.s_size + b.0)
    }

    pub fn pair_components(&self, p: ElementId) -> (ElementId, ElementId) {
        (ElementId(p.0 / self.s_size), ElementId(p.0 % self.s_size))
    }

    /// The structure on `S x S` with componentwise addition, the same Γ and
    /// `(a,b) gamma (c,d) = (a gamma c, b gamma d)`. Pair `(a,b)` sits at
    /// index `a * s_size + b`.
    pub fn product_hemiring(&self) -> Result<GammaHemiring> {
        let (s, g) = (self.s_size, self.g_size);
        let n = s * s;
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        let split = |p: usize| (ElementId(p / s), ElementId(p % s));
        let join = |a: ElementId, b: ElementId| a.0 * s + b.0;
        let s_add = (0..n)
            .map(|p| {
                (0..n)
                    .map(|q| {
                        let ((a, b), (c, d)) = (split(p), split(q));
                        join(self.add(a, c), self.add(b, d))
                    })
                    .collect()
            })
            .collect();
        let product = (0..n)
            .map(|p| {
                self.gammas()
                    .map(|gm| {
                        (0..n)
                            .map(|q| {
                                let ((a, b), (c, d)) = (split(p), split(q));
                                join(self.mul(a, gm, c), self.mul(b, gm, d))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let raw = RawTables {
            name: format!("{}x{}", self.name, self.name),
            s_size: n,
            g_size: g,
            s_add,
            g_add: self.to_raw().g_add,
            product,
        };
        let mut h = Self::new(raw)?;
        h.mutation = self.mutation;
        h.balanced = h.balance_table();
        Ok(h)
    }
}
