//! Executable claims about Γ-hemirings, checked over exhaustively enumerated
//! small structures and grid-valued fuzzy subsets.
//!
//! Each claim quantifies over one structure at a time (homomorphism claims
//! also range over every other structure of the family as a target). Work
//! items run in parallel; reports are merged in registry order and, within a
//! claim, in structure order, so output never depends on scheduling.

mod claims;
pub mod oracle;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use claims::{registry, resolve_claims, Claim, ALIASES};

use crate::crisp::{enumerate_h_ideals, is_prime_h_ideal, CrispSubset, PrimeMethod};
use crate::enumerate::{enumerate_hemirings, is_canonical};
use crate::error::{Error, Result};
use crate::fuzzy::{classify_fuzzy, enumerate_grid_fuzzy, FuzzyClassification, FuzzySubset, Grid};
use crate::hemiring::GammaHemiring;
use crate::mutation::Mutation;
use crate::prime::prime_by_characterization;

/// Where the structures of a family come from.
#[derive(Clone, Debug)]
pub enum StructureSource {
    Enumerated { s_max: usize, g_max: usize, canonical_only: bool },
    Fixtures(Vec<GammaHemiring>),
}

#[derive(Clone, Debug)]
pub struct InstanceFamily {
    pub source: StructureSource,
    pub grid: Grid,
}

impl InstanceFamily {
    pub fn enumerated(s_max: usize, g_max: usize, grid: Grid) -> Result<Self> {
        if s_max == 0 || g_max == 0 {
            return Err(Error::Family("size bounds must be at least 1".into()));
        }
        Ok(InstanceFamily { source: StructureSource::Enumerated { s_max, g_max, canonical_only: false }, grid })
    }

    pub fn fixtures(structures: Vec<GammaHemiring>, grid: Grid) -> Result<Self> {
        if structures.is_empty() {
            return Err(Error::Family("fixture list is empty".into()));
        }
        Ok(InstanceFamily { source: StructureSource::Fixtures(structures), grid })
    }

    /// Keep one structure per isomorphism class. Only a speed lever.
    pub fn canonical_only(mut self) -> Self {
        if let StructureSource::Enumerated { canonical_only, .. } = &mut self.source {
            *canonical_only = true;
        }
        self
    }

    pub fn structures(&self) -> Vec<GammaHemiring> {
        match &self.source {
            StructureSource::Enumerated { s_max, g_max, canonical_only } => {
                enumerate_hemirings(*s_max, *g_max).filter(|h| !canonical_only || is_canonical(h)).collect()
            }
            StructureSource::Fixtures(list) => list.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// No instance of the family satisfied the claim's hypothesis.
    Vacuous,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Vacuous => "VACUOUS",
        })
    }
}

/// Outcome on noncommutative structures for claims stated only for commutative ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exploratory {
    pub instances_checked: u64,
    pub hypothesis_instances: u64,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub claim: String,
    pub instances_checked: u64,
    pub hypothesis_instances: u64,
    pub verdict: Verdict,
    pub witness: Option<String>,
    pub exploratory: Option<Exploratory>,
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<28} instances={:<8} hypothesis={:<8} {}",
            self.claim, self.instances_checked, self.hypothesis_instances, self.verdict
        )?;
        if let Some(w) = &self.witness {
            write!(f, "  witness: {w}")?;
        }
        if let Some(e) = &self.exploratory {
            write!(
                f,
                "  [noncommutative: {} of {}{}]",
                if e.holds { "holds" } else { "fails" },
                e.hypothesis_instances,
                e.witness.as_ref().map(|w| format!(", {w}")).unwrap_or_default()
            )?;
        }
        Ok(())
    }
}

/// Per-structure data shared by all claims.
pub(crate) struct Ctx {
    pub h: GammaHemiring,
    pub grid: Grid,
    pub subsets: Vec<FuzzySubset>,
    pub class: Vec<FuzzyClassification>,
    /// Prime by characterization; false for non-h-ideals.
    pub prime: Vec<bool>,
    pub crisp_h_ideals: Vec<CrispSubset>,
    pub crisp_prime: Vec<bool>,
}

impl Ctx {
    fn build(h: GammaHemiring, grid: &Grid) -> Result<Self> {
        let subsets: Vec<FuzzySubset> = enumerate_grid_fuzzy(&h, grid).collect();
        let class = subsets.iter().map(|mu| classify_fuzzy(&h, mu)).collect::<Result<Vec<_>>>()?;
        let prime = subsets
            .iter()
            .zip(&class)
            .map(|(mu, c)| if c.h_ideal { prime_by_characterization(&h, mu) } else { Ok(false) })
            .collect::<Result<Vec<_>>>()?;
        let crisp_h_ideals = enumerate_h_ideals(&h);
        let crisp_prime = crisp_h_ideals
            .iter()
            .map(|i| is_prime_h_ideal(&h, i, PrimeMethod::ByElements))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ctx { h, grid: grid.clone(), subsets, class, prime, crisp_h_ideals, crisp_prime })
    }

    pub fn select(&self, pick: impl Fn(&FuzzyClassification) -> bool) -> impl Iterator<Item = &FuzzySubset> {
        self.subsets.iter().zip(&self.class).filter(move |(_, c)| pick(c)).map(|(mu, _)| mu)
    }

    pub fn h_ideals(&self) -> impl Iterator<Item = &FuzzySubset> {
        self.select(|c| c.h_ideal)
    }

    pub fn primes(&self) -> impl Iterator<Item = &FuzzySubset> {
        self.subsets.iter().zip(&self.prime).filter(|(_, p)| **p).map(|(mu, _)| mu)
    }
}

/// Counts and first failure of one claim on one structure.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    pub checked: u64,
    pub hypothesis: u64,
    pub witness: Option<String>,
}

impl Tally {
    /// One scanned input; `hyp` says whether it satisfied the hypothesis.
    pub fn see(&mut self, hyp: bool) -> bool {
        self.checked += 1;
        if hyp {
            self.hypothesis += 1;
        }
        hyp
    }

    pub fn fail(mut self, witness: String) -> Result<Tally> {
        self.witness = Some(witness);
        Ok(self)
    }
}

fn merge(tallies: impl Iterator<Item = Tally>) -> (u64, u64, Option<String>) {
    let (mut c, mut hyp, mut w) = (0, 0, None);
    for t in tallies {
        c += t.checked;
        hyp += t.hypothesis;
        if w.is_none() {
            w = t.witness;
        }
    }
    (c, hyp, w)
}

/// Runs `claims` over `family`.
pub fn run_claims(family: &InstanceFamily, claims: &[&Claim]) -> Result<Vec<TheoremReport>> {
    run_claims_with(family, claims, Mutation::None)
}

/// Runs `claims` with every structure of `family` carrying `mutation`.
pub fn run_claims_with(family: &InstanceFamily, claims: &[&Claim], mutation: Mutation) -> Result<Vec<TheoremReport>> {
    let structures: Vec<GammaHemiring> = family.structures().into_iter().map(|h| h.with_mutation(mutation)).collect();
    let ctxs = structures.into_par_iter().map(|h| Ctx::build(h, &family.grid)).collect::<Result<Vec<_>>>()?;
    let items: Vec<(usize, usize)> = (0..claims.len()).flat_map(|c| (0..ctxs.len()).map(move |i| (c, i))).collect();
    let tallies: Vec<Tally> = items
        .par_iter()
        .map(|&(c, i)| {
            (claims[c].check)(&ctxs, i).unwrap_or_else(|e| Tally {
                checked: 1,
                hypothesis: 1,
                witness: Some(format!("{}: error: {e}", ctxs[i].h.name())),
            })
        })
        .collect();

    let n = ctxs.len();
    Ok(claims
        .iter()
        .enumerate()
        .map(|(c, claim)| {
            let row = &tallies[c * n..(c + 1) * n];
            let in_scope = |i: &usize| !claim.commutative_only || ctxs[*i].h.is_commutative();
            let (checked, hyp, witness) = merge((0..n).filter(in_scope).map(|i| row[i].clone()));
            let verdict = if witness.is_some() {
                Verdict::Fail
            } else if hyp == 0 {
                Verdict::Vacuous
            } else {
                Verdict::Pass
            };
            let out_of_scope: Vec<usize> = (0..n).filter(|i| !in_scope(i)).collect();
            let exploratory = (!out_of_scope.is_empty()).then(|| {
                let (c, hyp, w) = merge(out_of_scope.iter().map(|&i| row[i].clone()));
                Exploratory { instances_checked: c, hypothesis_instances: hyp, holds: w.is_none(), witness: w }
            });
            TheoremReport {
                claim: claim.id.to_string(),
                instances_checked: checked,
                hypothesis_instances: hyp,
                verdict,
                witness,
                exploratory,
            }
        })
        .collect())
}

/// Claims that fail under one mutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationRun {
    pub mutation: Mutation,
    pub failed: Vec<String>,
}

/// Re-runs `claims` under each registered mutation and lists the failures.
pub fn mutation_sensitivity(family: &InstanceFamily, claims: &[&Claim]) -> Result<Vec<MutationRun>> {
    Mutation::ALL
        .iter()
        .map(|&m| {
            let reports = run_claims_with(family, claims, m)?;
            Ok(MutationRun {
                mutation: m,
                failed: reports.into_iter().filter(|r| r.verdict == Verdict::Fail).map(|r| r.claim).collect(),
            })
        })
        .collect()
}
