//! The built-in ring corpus, manifest files, and the per-ring theorem scan.

use rayon::prelude::*;
use serde::Serialize;

use crate::absorbing::{check_element_power, check_radical_power, omega};
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, Ideal};
use crate::limits::Limits;
use crate::ring::{Ring, RingDescriptor};

/// `Zmod:n` for `2 <= n <= 36`, `F_p[x]/(x^k)` for `p ∈ {2,3}`,
/// `k ∈ {2,3}`, and two products.
pub fn builtin_specs() -> Vec<String> {
    let mut specs: Vec<String> = (2..=36).map(|n| format!("Zmod:{n}")).collect();
    for p in [2, 3] {
        specs.push(format!("PolyQuot:{{p:{p},poly:[0,0,1]}}"));
        specs.push(format!("PolyQuot:{{p:{p},poly:[0,0,0,1]}}"));
    }
    specs.push("Product:[Zmod:4,Zmod:3]".into());
    specs.push("Product:[Zmod:2,Zmod:2]".into());
    specs
}

pub fn builtin_corpus() -> Vec<RingDescriptor> {
    builtin_specs()
        .iter()
        .map(|s| s.parse().expect("built-in spec parses"))
        .collect()
}

/// One ring spec per line; blank lines and `#` comments are skipped.
pub fn parse_manifest(text: &str) -> Result<Vec<RingDescriptor>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let desc = line
            .parse::<RingDescriptor>()
            .map_err(|e| Error::Domain(format!("manifest line {}: {e}", lineno + 1)))?;
        out.push(desc);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealSummary {
    pub ideal: String,
    pub size: usize,
    pub radical: String,
    /// `None` when the ideal is not absorbing up to the cap.
    pub omega: Option<u32>,
    /// `(√I)^ω ⊆ I`.
    pub radical_power_holds: Option<bool>,
    /// `a^ω ∈ I` for every `a ∈ √I`.
    pub element_power_holds: Option<bool>,
    /// `(√I)^(ω-1) ⊄ I`, recorded for `ω >= 2`.
    pub sharp: Option<bool>,
}

impl IdealSummary {
    pub fn failed(&self) -> bool {
        self.radical_power_holds == Some(false) || self.element_power_holds == Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingSummary {
    pub ring: String,
    pub size: usize,
    pub ideals: Vec<IdealSummary>,
    pub failures: usize,
    pub sharp_instances: usize,
    pub omega_unknown: usize,
}

pub fn scan_ideal(ideal: &Ideal, limits: &Limits) -> Result<IdealSummary> {
    let om = omega(ideal, limits.omega_cap, limits)?;
    let exact = om.levels.iter().all(|l| l.is_exhaustive());
    let value = om.value.filter(|_| exact);
    let (radical_power_holds, element_power_holds, sharp) = match value {
        Some(w) => (
            Some(check_radical_power(ideal, w)?),
            Some(check_element_power(ideal, w)),
            if w >= 2 {
                Some(!check_radical_power(ideal, w - 1)?)
            } else {
                None
            },
        ),
        None => (None, None, None),
    };
    Ok(IdealSummary {
        ideal: ideal.render(),
        size: ideal.len(),
        radical: ideal.radical().render(),
        omega: value,
        radical_power_holds,
        element_power_holds,
        sharp,
    })
}

/// Runs [`scan_ideal`] on every proper ideal of `ring`.
pub fn scan_ring(ring: &Ring, limits: &Limits) -> Result<RingSummary> {
    let ideals = enumerate_ideals(ring, limits.max_ring_size)?
        .into_iter()
        .filter(Ideal::is_proper)
        .map(|i| scan_ideal(&i, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(RingSummary {
        ring: ring.to_string(),
        size: ring.size(),
        failures: ideals.iter().filter(|i| i.failed()).count(),
        sharp_instances: ideals.iter().filter(|i| i.sharp == Some(true)).count(),
        omega_unknown: ideals.iter().filter(|i| i.omega.is_none()).count(),
        ideals,
    })
}

/// Scans each ring in parallel; results keep manifest order.
pub fn scan_corpus(rings: &[RingDescriptor], limits: &Limits) -> Vec<Result<RingSummary>> {
    rings
        .par_iter()
        .map(|d| {
            let ring = Ring::build_with_cap(d, limits.max_ring_size)?;
            scan_ring(&ring, limits)
        })
        .collect()
}
