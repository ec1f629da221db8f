//! Running the multi-degree induction on concrete nilpotent generators and
//! recording every step as a checkable certificate.
//!
//! For generators `a_1..a_n` of `J` in a ring where `(0)` is n-absorbing,
//! the induction shows `J^k_α = 0` for every multi-degree `α` with
//! `n <= |α| <= n² - n`, walking `α` in `≻`-descending order. Degrees above
//! `n² - n` vanish outright because some exponent reaches `n` and
//! `a_i^n = 0`. The last class, `α = (1, ..., 1)`, contains `a_1 ⋯ a_n`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::absorbing::{is_n_absorbing, ScanMode};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::limits::Limits;
use crate::proof::lemma::find_zero_diagonal;
use crate::proof::matrix::{build_c_matrix, for_each_vector, VectorScan};
use crate::proof::monomial::{
    delta_set, eval_monomial, monomials_with_multideg, order_compare, Monomial, OrderMode,
};
use crate::ring::{Elem, Ring};

pub const TRACE_SCHEMA: &str = "absorbing-trace/1";

/// Recorded in every trace header.
pub const DELTA_CONVENTION: &str = "sorted multi-degrees only; an unsorted exponent class \
     gives the same ideal as its sorted form after permuting the generators";

/// Serialized certificate of one induction run. Elements are canonical text
/// of `ring`; matrix and sequence indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTrace {
    pub schema: String,
    pub ring: String,
    pub generators: Vec<String>,
    pub n: u32,
    pub delta_convention: String,
    pub hypotheses: Hypotheses,
    /// `n² - n + 1`: every class of at least this degree is zero.
    pub high_degree_bound: u32,
    /// `a_i^n` for each generator.
    pub high_degree_powers: Vec<String>,
    pub steps: Vec<TraceStep>,
    /// `a_1 ⋯ a_n` by direct multiplication.
    pub final_product: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypotheses {
    /// How `(0)` was found to be n-absorbing.
    pub zero_absorbing_mode: String,
    pub zero_absorbing_tuples: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// The monomial's image is zero by direct evaluation.
    TriviallyZero,
    /// Zero established through the matrix argument.
    Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub alpha: Vec<u32>,
    pub monomial: Vec<u32>,
    pub kind: StepKind,
    /// Generator index of each `y_t`.
    #[serde(default)]
    pub variables: Vec<usize>,
    #[serde(default)]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub subdiagonal_justifications: Vec<Justification>,
    #[serde(default)]
    pub projective_zero: Option<ProjectiveZeroCert>,
    #[serde(default)]
    pub j_sequence: Vec<usize>,
    #[serde(default)]
    pub diagonal_index: Option<usize>,
    /// The image `g` of the monomial, concluded to be zero.
    pub conclusion: String,
}

/// Entry `(i, j)` below the diagonal is the image of a monomial of
/// multi-degree `beta ≻ alpha`, already shown to vanish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Justification {
    pub i: usize,
    pub j: usize,
    pub beta: Vec<u32>,
    pub entry: String,
}

/// Both certifications that `C` is projectively zero: a direct scan, and
/// the colon argument (`g J = 0`, then n-absorbing `(0)` drops one factor
/// `y_i` from `g · Σ c_j y_j = 0`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveZeroCert {
    /// `exhaustive` or `sampled`.
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    pub vectors_checked: u64,
    /// `g a_i = 0` for every generator.
    pub annihilates_generators: bool,
    /// Probes where some `(g / y_i) Σ c_j y_j` vanished.
    pub located_by_absorbing: u64,
    /// Probes settled only because `g` itself is zero.
    pub g_zero_probes: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TraceOptions {
    /// Run the matrix argument even when a monomial's image is already zero.
    pub full_machinery: bool,
}

impl ProofTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Domain(format!("malformed trace: {e}")))
    }

    pub fn matrix_steps(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::Matrix)
            .count()
    }
}

impl fmt::Display for ProofTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} generators [{}] n={}: {} steps ({} via matrices), product {}",
            self.ring,
            self.generators.join(","),
            self.n,
            self.steps.len(),
            self.matrix_steps(),
            self.final_product
        )
    }
}

pub fn prove_radical_power_zero(ring: &Ring, gens: &[Elem], limits: &Limits) -> Result<ProofTrace> {
    prove_radical_power_zero_with(ring, gens, limits, TraceOptions::default())
}

/// Runs the induction for `gens` and returns its trace. Requires `(0)` to
/// be `gens.len()`-absorbing and every generator to be nilpotent.
pub fn prove_radical_power_zero_with(
    ring: &Ring,
    gens: &[Elem],
    limits: &Limits,
    options: TraceOptions,
) -> Result<ProofTrace> {
    let n = gens.len() as u32;
    if n == 0 {
        return Err(Error::Domain("at least one generator is required".into()));
    }
    for &a in gens {
        ring.owns(a)?;
        if !ring.is_zero(ring.pow(a, ring.size() as u64)) {
            return Err(Error::Precondition(format!(
                "generator {} is not nilpotent",
                ring.render(a)
            )));
        }
    }
    let zero = Ideal::zero(ring);
    let absorbing = is_n_absorbing(&zero, n, limits)?;
    if let Some(w) = &absorbing.witness {
        return Err(Error::Precondition(format!(
            "(0) is not {n}-absorbing in {ring}, witness {:?}",
            ring.render_all(w.tuple())
        )));
    }
    let zero_absorbing_mode = match absorbing.mode {
        ScanMode::Exhaustive => "exhaustive".to_string(),
        ScanMode::Sampled { seed, samples } => format!("sampled(seed={seed},samples={samples})"),
    };
    let final_product = ring.product(gens.iter().copied());
    let powers: Vec<Elem> = gens.iter().map(|&a| ring.pow(a, n as u64)).collect();
    if let Some(&p) = powers.iter().find(|&&p| !ring.is_zero(p)) {
        return Err(Error::TraceInconsistency(format!(
            "a nilpotent generator has non-zero {n}-th power {}",
            ring.render(p)
        )));
    }
    let mut trace = ProofTrace {
        schema: TRACE_SCHEMA.to_string(),
        ring: ring.to_string(),
        generators: ring.render_all(gens),
        n,
        delta_convention: DELTA_CONVENTION.to_string(),
        hypotheses: Hypotheses {
            zero_absorbing_mode,
            zero_absorbing_tuples: absorbing.tuples_scanned,
        },
        high_degree_bound: n * n - n + 1,
        high_degree_powers: ring.render_all(&powers),
        steps: Vec::new(),
        final_product: ring.render(final_product),
    };
    if n == 1 {
        // (0) prime and a_1 nilpotent
        return Ok(trace);
    }

    let mut proven: HashSet<Vec<u32>> = HashSet::new();
    for alpha in delta_set(n)? {
        for monomial in monomials_with_multideg(alpha.profile(), n as usize)? {
            let g = eval_monomial(ring, gens, &monomial)?;
            let step = if ring.is_zero(g) && !options.full_machinery {
                TraceStep {
                    alpha: alpha.profile().to_vec(),
                    monomial: monomial.exponents().to_vec(),
                    kind: StepKind::TriviallyZero,
                    variables: Vec::new(),
                    matrix: None,
                    subdiagonal_justifications: Vec::new(),
                    projective_zero: None,
                    j_sequence: Vec::new(),
                    diagonal_index: None,
                    conclusion: ring.render(g),
                }
            } else {
                let seed = limits.seed.wrapping_add(trace.steps.len() as u64);
                matrix_step(
                    ring,
                    gens,
                    alpha.profile(),
                    &monomial,
                    g,
                    &proven,
                    limits,
                    seed,
                )?
            };
            trace.steps.push(step);
        }
        proven.insert(alpha.profile().to_vec());
    }

    if !ring.is_zero(final_product) {
        return Err(Error::TraceInconsistency(format!(
            "induction finished but a_1 ⋯ a_n = {}",
            ring.render(final_product)
        )));
    }
    Ok(trace)
}

#[allow(clippy::too_many_arguments)]
fn matrix_step(
    ring: &Ring,
    gens: &[Elem],
    alpha: &[u32],
    monomial: &Monomial,
    g: Elem,
    proven: &HashSet<Vec<u32>>,
    limits: &Limits,
    seed: u64,
) -> Result<TraceStep> {
    let inconsistent =
        |msg: String| Error::TraceInconsistency(format!("monomial {monomial}: {msg}"));
    let cm = build_c_matrix(ring, gens, monomial)?;
    let c = &cm.matrix;
    let m = c.size();

    let mut justifications = Vec::new();
    for i in 0..m {
        for j in 0..i {
            let beta = cm.entry_monomial(i, j).multideg();
            if order_compare(beta.profile(), alpha, OrderMode::Succ)? != std::cmp::Ordering::Greater
            {
                return Err(inconsistent(format!(
                    "{:?} does not succeed {alpha:?}",
                    beta.profile()
                )));
            }
            if !proven.contains(beta.profile()) {
                return Err(inconsistent(format!(
                    "class {:?} not yet proven",
                    beta.profile()
                )));
            }
            let entry = c.get(i, j);
            if !ring.is_zero(entry) {
                return Err(inconsistent(format!(
                    "entry ({i},{j}) is {}",
                    ring.render(entry)
                )));
            }
            justifications.push(Justification {
                i,
                j,
                beta: beta.profile().to_vec(),
                entry: ring.render(entry),
            });
        }
    }

    // g J ⊆ J^{k+1} = 0
    let annihilates = gens.iter().all(|&a| ring.is_zero(ring.mul(g, a)));
    if !annihilates {
        return Err(inconsistent("g does not annihilate J".into()));
    }
    let ys: Vec<Elem> = cm.variables.iter().map(|&v| gens[v]).collect();
    let divided: Vec<Elem> = cm
        .variables
        .iter()
        .map(|&v| eval_monomial(ring, gens, &monomial.without(v).expect("positive exponent")))
        .collect::<Result<_>>()?;
    let scan = VectorScan::choose(
        ring.size(),
        m,
        limits.max_vector_scan,
        seed,
        limits.sample_count,
    );
    let mut located = 0u64;
    let mut g_zero = 0u64;
    let mut failure: Option<String> = None;
    let vectors_checked = for_each_vector(ring, m, scan, |v| {
        let image = c.apply_raw(v);
        if !image.iter().any(|&x| ring.is_zero(x)) {
            failure = Some(format!(
                "C v has no zero coordinate for v = {:?}",
                ring.render_all(v)
            ));
            return false;
        }
        let s = ring.sum(v.iter().zip(&ys).map(|(&cj, &y)| ring.mul(cj, y)));
        if !ring.is_zero(ring.mul(g, s)) {
            failure = Some("g · Σ c_j y_j is non-zero".into());
            return false;
        }
        let hit = (0..m).find(|&i| ring.is_zero(ring.mul(divided[i], s)));
        match hit {
            Some(i) => {
                if image[i] != ring.mul(divided[i], s) {
                    failure = Some(format!("π_{i}(C v) differs from (g / y_i) Σ c_j y_j"));
                    return false;
                }
                located += 1;
            }
            None if ring.is_zero(g) => g_zero += 1,
            None => {
                failure = Some("no factor y_i can be dropped from g · Σ c_j y_j = 0".into());
                return false;
            }
        }
        true
    });
    if let Some(msg) = failure {
        return Err(inconsistent(msg));
    }

    let zd = find_zero_diagonal(c).map_err(|e| inconsistent(e.to_string()))?;
    let diagonal = c.get(zd.index, zd.index);
    if diagonal != g || !ring.is_zero(diagonal) {
        return Err(inconsistent(format!(
            "diagonal entry {} does not conclude g = 0",
            ring.render(diagonal)
        )));
    }
    let (method, seed, samples) = match scan {
        VectorScan::Exhaustive => ("exhaustive", None, None),
        VectorScan::Sampled { seed, count } => ("sampled", Some(seed), Some(count)),
    };
    Ok(TraceStep {
        alpha: alpha.to_vec(),
        monomial: monomial.exponents().to_vec(),
        kind: StepKind::Matrix,
        variables: cm.variables.clone(),
        matrix: Some(c.rendered_rows()),
        subdiagonal_justifications: justifications,
        projective_zero: Some(ProjectiveZeroCert {
            method: method.to_string(),
            seed,
            samples,
            vectors_checked,
            annihilates_generators: annihilates,
            located_by_absorbing: located,
            g_zero_probes: g_zero,
        }),
        j_sequence: zd.sequence,
        diagonal_index: Some(zd.index),
        conclusion: ring.render(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::verify::verify_trace;

    fn prove(spec: &str, gens: &str, full: bool) -> Result<ProofTrace> {
        let ring = Ring::parse(spec).unwrap();
        let gens = ring.parse_elements(gens).unwrap();
        let options = TraceOptions {
            full_machinery: full,
        };
        prove_radical_power_zero_with(&ring, &gens, &Limits::default(), options)
    }

    #[test]
    fn round_trips() {
        let limits = Limits::default();
        for (spec, gens) in [("Zmod:4", "2,2"), ("Zmod:8", "2,4,6"), ("Zmod:27", "3,3,3")] {
            for full in [false, true] {
                let trace = prove(spec, gens, full).unwrap();
                assert_eq!(trace.final_product, "0");
                assert!(verify_trace(&trace, &limits).valid, "{spec} {gens} {full}");
                let back = ProofTrace::from_json(&trace.to_json()).unwrap();
                assert_eq!(back, trace);
            }
        }
    }

    #[test]
    fn step_layout() {
        let t = prove("Zmod:4", "2,2", false).unwrap();
        let monomials: Vec<&[u32]> = t.steps.iter().map(|s| s.monomial.as_slice()).collect();
        assert_eq!(monomials, [&[2, 0][..], &[0, 2], &[1, 1]]);
        assert!(t.steps.iter().all(|s| s.kind == StepKind::TriviallyZero));
        assert_eq!(t.high_degree_bound, 3);

        let full = prove("Zmod:8", "2,4,6", true).unwrap();
        assert_eq!(full.matrix_steps(), full.steps.len());
        let last = full.steps.last().unwrap();
        assert_eq!(last.monomial, [1, 1, 1]);
        assert_eq!(last.subdiagonal_justifications.len(), 3);
        assert!(last.diagonal_index.is_some());
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            prove("Zmod:8", "2,3", false),
            Err(Error::Precondition(_))
        ));
        // (0) is not 2-absorbing in Z/8
        assert!(matches!(
            prove("Zmod:8", "2,4", false),
            Err(Error::Precondition(_))
        ));
        assert!(prove("Zmod:8", "", false).is_err());
        let one = prove("Zmod:7", "0", false).unwrap();
        assert!(one.steps.is_empty());
    }
}
