//! Independent re-checking of a [`ProofTrace`].
//!
//! The verifier only trusts ring arithmetic and the absorbing decision
//! procedure. Step enumeration, variable ordering, matrix entries, the index
//! sequence and every conclusion are recomputed here from the trace data.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::absorbing::is_n_absorbing;
use crate::ideal::Ideal;
use crate::limits::Limits;
use crate::proof::matrix::{for_each_vector, VectorScan};
use crate::proof::trace::{ProofTrace, StepKind, TraceStep, TRACE_SCHEMA};
use crate::ring::{Elem, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceVerdict {
    pub valid: bool,
    /// Index into `steps` of the first failing step; `None` for header
    /// failures or a valid trace.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl TraceVerdict {
    fn ok() -> Self {
        TraceVerdict {
            valid: true,
            step: None,
            reason: None,
        }
    }
}

struct Failure {
    step: Option<usize>,
    reason: String,
}

fn fail<T>(step: Option<usize>, reason: impl Into<String>) -> Result<T, Failure> {
    Err(Failure {
        step,
        reason: reason.into(),
    })
}

pub fn verify_trace(trace: &ProofTrace, limits: &Limits) -> TraceVerdict {
    match check(trace, limits) {
        Ok(()) => TraceVerdict::ok(),
        Err(f) => TraceVerdict {
            valid: false,
            step: f.step,
            reason: Some(f.reason),
        },
    }
}

fn image(ring: &Ring, gens: &[Elem], exps: &[u32]) -> Elem {
    let mut acc = ring.one();
    for (&a, &e) in gens.iter().zip(exps) {
        for _ in 0..e {
            acc = ring.mul(acc, a);
        }
    }
    acc
}

fn parse_elem(ring: &Ring, text: &str, step: Option<usize>) -> Result<Elem, Failure> {
    ring.parse_element(text)
        .or_else(|e| fail(step, format!("bad element {text:?}: {e}")))
}

/// Partitions of `d` into at most `k` parts.
fn partition_count(d: u32, k: u32) -> u64 {
    // p[i][j]: partitions of i into parts of size at most j, equal to the
    // count into at most j parts by conjugation
    let d = d as usize;
    let k = k as usize;
    let mut p = vec![vec![0u64; k + 1]; d + 1];
    for row in p.iter_mut().take(1) {
        row.iter_mut().for_each(|x| *x = 1);
    }
    for i in 1..=d {
        for j in 1..=k {
            p[i][j] = p[i][j - 1] + if i >= j { p[i - j][j] } else { 0 };
        }
    }
    p[d][k]
}

/// Distinct arrangements of `alpha`.
fn arrangements(alpha: &[u32]) -> u64 {
    let mut sorted = alpha.to_vec();
    sorted.sort_unstable();
    let mut count = 1u64;
    let mut run = 0u64;
    for (placed, i) in (1u64..).zip(0..sorted.len()) {
        run = if i > 0 && sorted[i] == sorted[i - 1] {
            run + 1
        } else {
            1
        };
        count = count * placed / run;
    }
    count
}

fn check(trace: &ProofTrace, limits: &Limits) -> Result<(), Failure> {
    if trace.schema != TRACE_SCHEMA {
        return fail(None, format!("unknown schema {:?}", trace.schema));
    }
    let ring = Ring::build_with_cap(
        &trace
            .ring
            .parse()
            .or_else(|e| fail(None, format!("bad ring {:?}: {e}", trace.ring)))?,
        limits.max_ring_size,
    )
    .or_else(|e| fail(None, format!("cannot build ring: {e}")))?;
    let gens = trace
        .generators
        .iter()
        .map(|t| parse_elem(&ring, t, None))
        .collect::<Result<Vec<_>, _>>()?;
    let n = gens.len();
    if n == 0 || trace.n as usize != n {
        return fail(None, format!("n = {} but {} generators", trace.n, n));
    }
    let n32 = n as u32;

    // hypotheses
    for &a in &gens {
        let mut p = a;
        for _ in 1..ring.size() {
            p = ring.mul(p, a);
        }
        if !ring.is_zero(p) {
            return fail(
                None,
                format!("generator {} is not nilpotent", ring.render(a)),
            );
        }
    }
    match is_n_absorbing(&Ideal::zero(&ring), n32, limits) {
        Ok(r) if r.holds => {}
        Ok(_) => return fail(None, format!("(0) is not {n}-absorbing")),
        Err(e) => {
            return fail(
                None,
                format!("cannot decide whether (0) is {n}-absorbing: {e}"),
            )
        }
    }
    if trace.high_degree_bound != n32 * n32 - n32 + 1 {
        return fail(
            None,
            format!("high-degree bound {} is wrong", trace.high_degree_bound),
        );
    }
    if trace.high_degree_powers.len() != n {
        return fail(None, "one n-th power per generator expected");
    }
    for (t, &a) in trace.high_degree_powers.iter().zip(&gens) {
        let claimed = parse_elem(&ring, t, None)?;
        let actual = image(&ring, &[a], &[n32]);
        if claimed != actual || !ring.is_zero(actual) {
            return fail(
                None,
                format!("power {t} of {} is not a verified zero", ring.render(a)),
            );
        }
    }
    let product = parse_elem(&ring, &trace.final_product, None)?;
    let actual = image(&ring, &gens, &vec![1; n]);
    if product != actual || !ring.is_zero(actual) {
        return fail(
            None,
            format!(
                "final product {} is not a verified zero",
                trace.final_product
            ),
        );
    }
    if n == 1 {
        if !trace.steps.is_empty() {
            return fail(None, "n = 1 needs no induction steps");
        }
        return Ok(());
    }

    check_enumeration(trace, n32)?;

    let mut completed: HashSet<Vec<u32>> = HashSet::new();
    let mut current: Vec<u32> = trace.steps[0].alpha.clone();
    for (idx, step) in trace.steps.iter().enumerate() {
        if step.alpha != current {
            completed.insert(std::mem::replace(&mut current, step.alpha.clone()));
        }
        check_step(&ring, &gens, step, idx, &completed)?;
    }
    let last = trace.steps.last().expect("non-empty");
    if last.monomial != vec![1; n] {
        return fail(
            Some(trace.steps.len() - 1),
            "the last step is not x_1 ⋯ x_n",
        );
    }
    Ok(())
}

/// Steps must be exactly the monomials of `n <= |α| <= n² - n`, grouped by
/// `α` in `≻`-descending order, lex-descending within a group.
fn check_enumeration(trace: &ProofTrace, n: u32) -> Result<(), Failure> {
    let top = n * n - n;
    let steps = &trace.steps;
    if steps.is_empty() {
        return fail(None, "no induction steps");
    }
    let key = |a: &[u32]| (a.iter().sum::<u32>(), a.to_vec());
    let mut groups = 0u64;
    let mut group_len = 0u64;
    for (idx, step) in steps.iter().enumerate() {
        let at = Some(idx);
        if step.alpha.len() != n as usize || step.monomial.len() != n as usize {
            return fail(at, "wrong number of variables");
        }
        if step.alpha.windows(2).any(|w| w[0] < w[1]) {
            return fail(at, format!("{:?} is not sorted", step.alpha));
        }
        let degree: u32 = step.alpha.iter().sum();
        if degree < n || degree > top {
            return fail(
                at,
                format!("{:?} is outside the induction range", step.alpha),
            );
        }
        let mut sorted = step.monomial.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted != step.alpha {
            return fail(
                at,
                format!(
                    "monomial {:?} is not in class {:?}",
                    step.monomial, step.alpha
                ),
            );
        }
        let new_group = idx == 0 || steps[idx - 1].alpha != step.alpha;
        if new_group {
            if idx > 0 {
                let prev = &steps[idx - 1];
                if key(&prev.alpha) <= key(&step.alpha) {
                    return fail(at, "classes are not in ≻-descending order");
                }
                if group_len != arrangements(&prev.alpha) {
                    return fail(
                        Some(idx - 1),
                        format!("class {:?} is incomplete", prev.alpha),
                    );
                }
            }
            groups += 1;
            group_len = 1;
        } else {
            if steps[idx - 1].monomial <= step.monomial {
                return fail(at, "monomials are not lex-descending within their class");
            }
            group_len += 1;
        }
    }
    let last = &steps[steps.len() - 1];
    if group_len != arrangements(&last.alpha) {
        return fail(
            Some(steps.len() - 1),
            format!("class {:?} is incomplete", last.alpha),
        );
    }
    let expected: u64 = (n..=top).map(|d| partition_count(d, n)).sum();
    if groups != expected {
        return fail(None, format!("{groups} classes, expected {expected}"));
    }
    Ok(())
}

fn check_step(
    ring: &Ring,
    gens: &[Elem],
    step: &TraceStep,
    idx: usize,
    completed: &HashSet<Vec<u32>>,
) -> Result<(), Failure> {
    let at = Some(idx);
    let g = image(ring, gens, &step.monomial);
    let conclusion = parse_elem(ring, &step.conclusion, at)?;
    if conclusion != g {
        return fail(
            at,
            format!(
                "conclusion {} but the monomial evaluates to {}",
                step.conclusion,
                ring.render(g)
            ),
        );
    }
    if !ring.is_zero(g) {
        return fail(at, format!("monomial evaluates to {}", ring.render(g)));
    }
    if step.kind == StepKind::TriviallyZero {
        return Ok(());
    }

    // variable labels
    let mut vars: Vec<usize> = (0..gens.len()).filter(|&i| step.monomial[i] > 0).collect();
    vars.sort_by_key(|&i| (std::cmp::Reverse(step.monomial[i]), i));
    if step.variables != vars {
        return fail(
            at,
            format!("variables {:?}, expected {vars:?}", step.variables),
        );
    }
    let m = vars.len();
    let shifted = |i: usize, j: usize| {
        let mut e = step.monomial.clone();
        e[vars[i]] -= 1;
        e[vars[j]] += 1;
        e
    };

    // matrix entries
    let Some(rows) = &step.matrix else {
        return fail(at, "matrix step without a matrix");
    };
    if rows.len() != m || rows.iter().any(|r| r.len() != m) {
        return fail(at, "matrix has the wrong shape");
    }
    let mut c = vec![ring.zero(); m * m];
    for i in 0..m {
        for j in 0..m {
            let claimed = parse_elem(ring, &rows[i][j], at)?;
            let actual = image(ring, gens, &shifted(i, j));
            if claimed != actual {
                return fail(
                    at,
                    format!(
                        "entry ({i},{j}) is {}, not {}",
                        ring.render(actual),
                        rows[i][j]
                    ),
                );
            }
            c[i * m + j] = actual;
        }
    }

    // below the diagonal
    let mut justified = HashSet::new();
    for jst in &step.subdiagonal_justifications {
        if jst.i >= m || jst.j >= jst.i {
            return fail(
                at,
                format!(
                    "justification ({},{}) is not below the diagonal",
                    jst.i, jst.j
                ),
            );
        }
        let mut beta = shifted(jst.i, jst.j);
        beta.sort_unstable_by(|a, b| b.cmp(a));
        if beta != jst.beta {
            return fail(
                at,
                format!(
                    "entry ({},{}) has class {beta:?}, not {:?}",
                    jst.i, jst.j, jst.beta
                ),
            );
        }
        if (beta.iter().sum::<u32>(), &beta) <= (step.alpha.iter().sum::<u32>(), &step.alpha) {
            return fail(at, format!("{beta:?} does not succeed {:?}", step.alpha));
        }
        if !completed.contains(&beta) {
            return fail(at, format!("class {beta:?} was not established earlier"));
        }
        if !ring.is_zero(c[jst.i * m + jst.j]) || parse_elem(ring, &jst.entry, at)? != ring.zero() {
            return fail(at, format!("entry ({},{}) is not zero", jst.i, jst.j));
        }
        justified.insert((jst.i, jst.j));
    }
    if justified.len() != m * (m - 1) / 2 {
        return fail(at, "some entry below the diagonal is unjustified");
    }

    // projective zero, both directly and through the colon argument
    let Some(cert) = &step.projective_zero else {
        return fail(at, "matrix step without a projective-zero certificate");
    };
    let scan = match (cert.method.as_str(), cert.seed, cert.samples) {
        ("exhaustive", None, None) => VectorScan::Exhaustive,
        ("sampled", Some(seed), Some(count)) => VectorScan::Sampled { seed, count },
        _ => return fail(at, format!("unknown scan {:?}", cert.method)),
    };
    let annihilates = gens.iter().all(|&a| ring.is_zero(ring.mul(g, a)));
    if annihilates != cert.annihilates_generators || !annihilates {
        return fail(at, "g does not annihilate every generator");
    }
    let ys: Vec<Elem> = vars.iter().map(|&v| gens[v]).collect();
    let divided: Vec<Elem> = vars
        .iter()
        .map(|&v| {
            let mut e = step.monomial.clone();
            e[v] -= 1;
            image(ring, gens, &e)
        })
        .collect();
    let mut located = 0u64;
    let mut g_zero = 0u64;
    let mut bad: Option<String> = None;
    let checked = for_each_vector(ring, m, scan, |v| {
        let has_zero = (0..m).any(|i| {
            let coord = ring.sum((0..m).map(|j| ring.mul(c[i * m + j], v[j])));
            ring.is_zero(coord)
        });
        if !has_zero {
            bad = Some(format!(
                "C v has no zero coordinate for v = {:?}",
                ring.render_all(v)
            ));
            return false;
        }
        let s = ring.sum(v.iter().zip(&ys).map(|(&x, &y)| ring.mul(x, y)));
        if (0..m).any(|i| ring.is_zero(ring.mul(divided[i], s))) {
            located += 1;
        } else if ring.is_zero(g) {
            g_zero += 1;
        } else {
            bad = Some("no factor can be dropped from g · Σ c_j y_j".into());
            return false;
        }
        true
    });
    if let Some(reason) = bad {
        return fail(at, reason);
    }
    if checked != cert.vectors_checked
        || located != cert.located_by_absorbing
        || g_zero != cert.g_zero_probes
    {
        return fail(
            at,
            "projective-zero counts do not match a re-run of the scan",
        );
    }

    // the index sequence
    let mut probe = vec![ring.zero(); m];
    probe[m - 1] = ring.one();
    let mut seq: Vec<usize> = Vec::new();
    let index = loop {
        if seq.len() > m {
            return fail(at, "index sequence did not repeat within m + 1 probes");
        }
        let zero_at = (0..m)
            .rev()
            .find(|&i| ring.is_zero(ring.sum((0..m).map(|j| ring.mul(c[i * m + j], probe[j])))));
        let Some(j) = zero_at else {
            return fail(at, "a probe maps to a vector without zero coordinates");
        };
        let repeat = seq.last() == Some(&j);
        seq.push(j);
        if repeat {
            break j;
        }
        probe[j] = ring.add(probe[j], ring.one());
    };
    if step.j_sequence != seq || step.diagonal_index != Some(index) {
        return fail(
            at,
            format!("index sequence {:?}, expected {seq:?}", step.j_sequence),
        );
    }
    if !ring.is_zero(c[index * m + index]) || c[index * m + index] != g {
        return fail(
            at,
            format!("diagonal entry {index} does not conclude g = 0"),
        );
    }
    Ok(())
}
