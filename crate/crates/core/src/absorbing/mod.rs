//! The n-absorbing property and the statements built on it.
//!
//! An ideal `I` is n-absorbing when `a_1 ⋯ a_{n+1} ∈ I` forces one of the
//! n-fold sub-products `a_1 ⋯ â_i ⋯ a_{n+1}` into `I`. A tuple with the full
//! product in `I` and every sub-product outside `I` is a witness that `I` is
//! not n-absorbing.
//!
//! The exhaustive scan only visits non-decreasing tuples: the condition is
//! symmetric, and the lexicographically smallest failing tuple is always
//! sorted. A prefix of length `d <= n` whose product already lies in `I`
//! cuts its whole subtree, since dropping any later entry keeps that prefix.

mod corollary;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use corollary::{
    check_chain_comparability, check_colon_two_absorbing, ChainFailure, ChainReport, ColonCheck,
    ColonOutcome, ColonTwoAbsorbingReport,
};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::limits::Limits;
use crate::ring::{quotient_ring, Elem, Ring};

/// A tuple showing that an ideal is not n-absorbing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsorbingWitness {
    n: u32,
    tuple: Vec<Elem>,
}

impl AbsorbingWitness {
    /// Validates the witness invariants against `ideal`.
    pub fn new(ideal: &Ideal, tuple: Vec<Elem>) -> Result<Self> {
        if tuple.len() < 2 {
            return Err(Error::Domain("a witness has at least two entries".into()));
        }
        let w = AbsorbingWitness {
            n: tuple.len() as u32 - 1,
            tuple,
        };
        if !w.check(ideal) {
            return Err(Error::InvariantViolation(format!(
                "{:?} is not a failing tuple for {ideal}",
                ideal.ring().render_all(&w.tuple)
            )));
        }
        Ok(w)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn tuple(&self) -> &[Elem] {
        &self.tuple
    }

    /// Full product in the ideal, every omitted product outside it.
    pub fn check(&self, ideal: &Ideal) -> bool {
        let ring = ideal.ring();
        if !self.tuple.iter().all(|&e| ring.contains(e)) {
            return false;
        }
        if !ideal.contains(ring.product(self.tuple.iter().copied())) {
            return false;
        }
        (0..self.tuple.len()).all(|skip| {
            let sub = self
                .tuple
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &e)| e);
            !ideal.contains(ring.product(sub))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    /// Seeded uniform sampling; a positive answer is not a proof.
    Sampled {
        seed: u64,
        samples: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsorbingReport {
    pub n: u32,
    pub holds: bool,
    pub witness: Option<AbsorbingWitness>,
    pub tuples_scanned: u64,
    pub mode: ScanMode,
}

impl AbsorbingReport {
    pub fn is_exhaustive(&self) -> bool {
        self.mode == ScanMode::Exhaustive
    }
}

/// `C(size + k - 1, k)`, the number of non-decreasing k-tuples.
pub fn multiset_count(size: usize, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (size as u128 + i) / (i + 1);
    }
    acc
}

/// Decides whether `ideal` is n-absorbing.
///
/// Exhaustive when the number of non-decreasing `(n+1)`-tuples fits
/// `limits.max_scan_tuples`; otherwise seeded sampling if allowed, else a
/// resource error. The exhaustive witness is the lexicographically smallest
/// failing tuple in canonical element order.
pub fn is_n_absorbing(ideal: &Ideal, n: u32, limits: &Limits) -> Result<AbsorbingReport> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let size = ideal.ring().size();
    let candidates = multiset_count(size, n as usize + 1);
    if candidates <= limits.max_scan_tuples as u128 {
        return Ok(scan_exhaustive(ideal, n));
    }
    if limits.allow_sampling {
        return scan_sampled(ideal, n, limits.seed, limits.sample_count);
    }
    Err(Error::ResourceLimit {
        what: format!("{n}-absorbing scan of {ideal} in {}", ideal.ring()),
        needed: candidates,
        cap: limits.max_scan_tuples as u128,
    })
}

struct Block {
    leaves: u64,
    witness: Option<Vec<u32>>,
}

fn scan_exhaustive(ideal: &Ideal, n: u32) -> AbsorbingReport {
    let ring = ideal.ring();
    let size = ring.size() as u32;
    let blocks: Vec<Block> = (0..size)
        .into_par_iter()
        .map(|first| scan_block(ring, ideal, n as usize + 1, first))
        .collect();
    let mut tuples_scanned = 0;
    let mut witness = None;
    for block in blocks {
        tuples_scanned += block.leaves;
        if let Some(t) = block.witness {
            let tuple = t.into_iter().map(|i| ring.wrap(i)).collect();
            witness = Some(AbsorbingWitness { n, tuple });
            break;
        }
    }
    debug_assert!(witness.as_ref().is_none_or(|w| w.check(ideal)));
    AbsorbingReport {
        n,
        holds: witness.is_none(),
        witness,
        tuples_scanned,
        mode: ScanMode::Exhaustive,
    }
}

fn scan_block(ring: &Ring, ideal: &Ideal, len: usize, first: u32) -> Block {
    let mut tuple = vec![first; len];
    // prefix[d] = product of tuple[..d]
    let mut prefix = vec![0u32; len + 1];
    prefix[0] = ring.one().index() as u32;
    prefix[1] = first;
    let mut block = Block {
        leaves: 0,
        witness: None,
    };
    if len > 1 && ideal.contains_raw(first) {
        return block;
    }
    descend(ring, ideal, &mut tuple, &mut prefix, 1, &mut block);
    block
}

fn descend(
    ring: &Ring,
    ideal: &Ideal,
    tuple: &mut [u32],
    prefix: &mut [u32],
    depth: usize,
    block: &mut Block,
) -> bool {
    let len = tuple.len();
    if depth == len {
        block.leaves += 1;
        if is_failing(ring, ideal, tuple, prefix) {
            block.witness = Some(tuple.to_vec());
            return true;
        }
        return false;
    }
    let size = ring.size() as u32;
    for x in tuple[depth - 1]..size {
        tuple[depth] = x;
        let p = ring.mul_raw(prefix[depth], x);
        prefix[depth + 1] = p;
        // a prefix of at most n entries inside I survives in some omitted product
        if depth + 1 < len && ideal.contains_raw(p) {
            continue;
        }
        if descend(ring, ideal, tuple, prefix, depth + 1, block) {
            return true;
        }
    }
    false
}

fn is_failing(ring: &Ring, ideal: &Ideal, tuple: &[u32], prefix: &[u32]) -> bool {
    let len = tuple.len();
    if !ideal.contains_raw(prefix[len]) {
        return false;
    }
    let mut suffix = ring.one().index() as u32;
    for skip in (0..len).rev() {
        let omitted = ring.mul_raw(prefix[skip], suffix);
        if ideal.contains_raw(omitted) {
            return false;
        }
        suffix = ring.mul_raw(suffix, tuple[skip]);
    }
    true
}

fn scan_sampled(ideal: &Ideal, n: u32, seed: u64, samples: u64) -> Result<AbsorbingReport> {
    let ring = ideal.ring();
    let size = ring.size() as u32;
    let len = n as usize + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tuple = vec![0u32; len];
    let mut prefix = vec![0u32; len + 1];
    prefix[0] = ring.one().index() as u32;
    for drawn in 1..=samples {
        for d in 0..len {
            tuple[d] = rng.random_range(0..size);
            prefix[d + 1] = ring.mul_raw(prefix[d], tuple[d]);
        }
        if is_failing(ring, ideal, &tuple, &prefix) {
            let elems = tuple.iter().map(|&i| ring.wrap(i)).collect();
            return Ok(AbsorbingReport {
                n,
                holds: false,
                witness: Some(AbsorbingWitness::new(ideal, elems)?),
                tuples_scanned: drawn,
                mode: ScanMode::Sampled { seed, samples },
            });
        }
    }
    Ok(AbsorbingReport {
        n,
        holds: true,
        witness: None,
        tuples_scanned: samples,
        mode: ScanMode::Sampled { seed, samples },
    })
}

/// Result of the ω search: the least `n <= cap` for which the ideal is
/// n-absorbing, with the report of every level tried.
#[derive(Debug, Clone)]
pub struct OmegaReport {
    pub value: Option<u32>,
    pub cap: u32,
    pub levels: Vec<AbsorbingReport>,
}

impl OmegaReport {
    pub fn exceeds_cap(&self) -> bool {
        self.value.is_none()
    }
}

/// Linear search `n = 1, 2, ..., cap`. Absorbing ideals stay absorbing as `n`
/// grows, so the first success is the minimum.
pub fn omega(ideal: &Ideal, cap: u32, limits: &Limits) -> Result<OmegaReport> {
    if cap == 0 {
        return Err(Error::Domain("omega cap must be at least 1".into()));
    }
    let mut levels = Vec::new();
    for n in 1..=cap {
        let report = is_n_absorbing(ideal, n, limits)?;
        let holds = report.holds;
        levels.push(report);
        if holds {
            if n > 1 && levels[n as usize - 2].holds {
                return Err(Error::InvariantViolation(format!(
                    "omega search passed level {} without stopping",
                    n - 1
                )));
            }
            return Ok(OmegaReport {
                value: Some(n),
                cap,
                levels,
            });
        }
    }
    Ok(OmegaReport {
        value: None,
        cap,
        levels,
    })
}

/// Whether `(√I)^n ⊆ I`, on materialized sets.
pub fn check_radical_power(ideal: &Ideal, n: u32) -> Result<bool> {
    Ok(ideal.radical().power(n)?.is_subset(ideal))
}

/// Whether `a^n ∈ I` for every `a ∈ √I`.
pub fn check_element_power(ideal: &Ideal, n: u32) -> bool {
    let ring = ideal.ring();
    ideal
        .radical()
        .elements()
        .all(|a| ideal.contains(ring.pow(a, n as u64)))
}

/// Both sides of the reduction to the zero ideal of `R/I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionCheck {
    pub absorbing_in_ring: bool,
    pub zero_absorbing_in_quotient: bool,
    pub radical_power_in_ring: bool,
    pub radical_power_in_quotient: bool,
}

impl ReductionCheck {
    /// Both equivalences hold.
    pub fn holds(&self) -> bool {
        self.absorbing_in_ring == self.zero_absorbing_in_quotient
            && self.radical_power_in_ring == self.radical_power_in_quotient
    }
}

/// Compares `I` in `R` with `(0)` in `R/I`: n-absorbing on both sides, and
/// `(√I)^n ⊆ I` against `(√0)^n = 0`.
pub fn check_quotient_reduction(ideal: &Ideal, n: u32, limits: &Limits) -> Result<ReductionCheck> {
    let map = quotient_ring(ideal.ring(), ideal)?;
    let zero = Ideal::zero(map.quotient());
    Ok(ReductionCheck {
        absorbing_in_ring: is_n_absorbing(ideal, n, limits)?.holds,
        zero_absorbing_in_quotient: is_n_absorbing(&zero, n, limits)?.holds,
        radical_power_in_ring: check_radical_power(ideal, n)?,
        radical_power_in_quotient: check_radical_power(&zero, n)?,
    })
}
