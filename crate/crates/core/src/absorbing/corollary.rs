//! Checkers for two consequences of `(√I)^3 ⊆ I` for 3-absorbing ideals with
//! prime radical: every `(I : x)` with `x ∈ √I` is 2-absorbing, and the
//! colon ideals `(I : xy)` form a chain of prime ideals.

use std::collections::HashMap;

use crate::absorbing::{is_n_absorbing, AbsorbingReport};
use crate::error::{Error, HypothesisFailure, Result};
use crate::ideal::Ideal;
use crate::limits::Limits;
use crate::ring::Elem;

/// Verifies that `I` is 3-absorbing and `√I` is prime, returning `√I`.
fn hypotheses(ideal: &Ideal, limits: &Limits) -> Result<Ideal> {
    let ring = ideal.ring();
    let three = is_n_absorbing(ideal, 3, limits)?;
    if let Some(w) = three.witness {
        return Err(Error::Hypothesis(HypothesisFailure::NotThreeAbsorbing {
            witness: ring.render_all(w.tuple()),
        }));
    }
    let radical = ideal.radical();
    let prime = is_n_absorbing(&radical, 1, limits)?;
    if let Some(w) = prime.witness {
        return Err(Error::Hypothesis(HypothesisFailure::RadicalNotPrime {
            pair: ring.render_all(w.tuple()),
        }));
    }
    Ok(radical)
}

#[derive(Debug, Clone)]
pub enum ColonOutcome {
    /// `x ∈ I`, so `(I : x) = R`; decision procedures need proper ideals.
    UnitIdealSkipped,
    Checked(AbsorbingReport),
}

#[derive(Debug, Clone)]
pub struct ColonCheck {
    pub x: Elem,
    pub colon: Ideal,
    pub outcome: ColonOutcome,
}

impl ColonCheck {
    pub fn holds(&self) -> bool {
        match &self.outcome {
            ColonOutcome::UnitIdealSkipped => true,
            ColonOutcome::Checked(r) => r.holds,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ColonTwoAbsorbingReport {
    pub radical: Ideal,
    pub checks: Vec<ColonCheck>,
}

impl ColonTwoAbsorbingReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(ColonCheck::holds)
    }
}

/// For every `x ∈ √I`, decides whether `(I : x)` is 2-absorbing.
pub fn check_colon_two_absorbing(
    ideal: &Ideal,
    limits: &Limits,
) -> Result<ColonTwoAbsorbingReport> {
    let radical = hypotheses(ideal, limits)?;
    let mut checks = Vec::new();
    for x in radical.elements() {
        let colon = ideal.colon(x)?;
        let outcome = if colon.is_unit() {
            ColonOutcome::UnitIdealSkipped
        } else {
            ColonOutcome::Checked(is_n_absorbing(&colon, 2, limits)?)
        };
        checks.push(ColonCheck { x, colon, outcome });
    }
    Ok(ColonTwoAbsorbingReport { radical, checks })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainFailure {
    /// Neither of `(I : xy)`, `(I : xz)` contains the other.
    Incomparable { x: Elem, y: Elem, z: Elem },
    /// `(I : xy)` is not prime.
    NotPrime { x: Elem, y: Elem },
}

#[derive(Debug, Clone)]
pub struct ChainReport {
    pub radical: Ideal,
    /// Triples `(x, y, z)` with `xy, xz ∉ I` that were compared.
    pub triples_checked: u64,
    /// Triples skipped because `xy ∈ I` or `xz ∈ I` (a colon ideal is `R`).
    pub unit_skipped: u64,
    /// Distinct proper colon ideals `(I : xy)` met.
    pub colon_ideals: Vec<Ideal>,
    pub failures: Vec<ChainFailure>,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For all `x, y, z ∈ √I` with `xy, xz ∉ I`: `(I : xy)` and `(I : xz)` are
/// comparable, and `(I : xy)` is 1-absorbing.
pub fn check_chain_comparability(ideal: &Ideal, limits: &Limits) -> Result<ChainReport> {
    let radical = hypotheses(ideal, limits)?;
    let ring = ideal.ring();
    let p: Vec<Elem> = radical.elements().collect();
    // colon ideal and primality per product value xy
    let mut cache: HashMap<Elem, (Ideal, bool)> = HashMap::new();
    let mut colon_for = |w: Elem| -> Result<(Ideal, bool)> {
        if let Some(hit) = cache.get(&w) {
            return Ok(hit.clone());
        }
        let colon = ideal.colon(w)?;
        let prime = is_n_absorbing(&colon, 1, limits)?.holds;
        cache.insert(w, (colon.clone(), prime));
        Ok((colon, prime))
    };
    let mut report = ChainReport {
        radical: radical.clone(),
        triples_checked: 0,
        unit_skipped: 0,
        colon_ideals: Vec::new(),
        failures: Vec::new(),
    };
    for &x in &p {
        for &y in &p {
            let xy = ring.mul(x, y);
            let xy_in = ideal.contains(xy);
            if !xy_in {
                let (cxy, prime) = colon_for(xy)?;
                if !prime {
                    report.failures.push(ChainFailure::NotPrime { x, y });
                }
                if !report.colon_ideals.contains(&cxy) {
                    report.colon_ideals.push(cxy);
                }
            }
            for &z in &p {
                let xz = ring.mul(x, z);
                if xy_in || ideal.contains(xz) {
                    report.unit_skipped += 1;
                    continue;
                }
                report.triples_checked += 1;
                let (cxy, _) = colon_for(xy)?;
                let (cxz, _) = colon_for(xz)?;
                if !(cxy.is_subset(&cxz) || cxz.is_subset(&cxy)) {
                    report.failures.push(ChainFailure::Incomparable { x, y, z });
                }
            }
        }
    }
    report.colon_ideals.sort();
    Ok(report)
}
