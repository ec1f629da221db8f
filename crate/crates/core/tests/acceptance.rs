//! The acceptance suite: every criterion runs in one test and prints a
//! PASS/FAIL line. Lines go straight to stderr so they appear in normal
//! `cargo test` output.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::Instant;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use absorbing_ideals::absorbing::{
    check_chain_comparability, check_colon_two_absorbing, check_quotient_reduction, is_n_absorbing,
};
use absorbing_ideals::cli::{execute, Command, CommandConfig};
use absorbing_ideals::corpus::builtin_specs;
use absorbing_ideals::proof::{
    find_zero_diagonal, monomials_with_multideg, partitions, prove_radical_power_zero_with,
    verify_trace, Monomial, SquareMatrix, TraceOptions,
};
use absorbing_ideals::{enumerate_ideals, Elem, Ideal, Limits, Ring};

const MAX_N: u32 = 4;
const SEED: u64 = 2024;

struct Entry {
    ring: Ring,
    ideal: Ideal,
    /// `absorbing[n - 1]`: whether the ideal is n-absorbing, n = 1..=4.
    absorbing: Vec<bool>,
}

impl Entry {
    fn omega(&self) -> Option<u32> {
        self.absorbing.iter().position(|&h| h).map(|i| i as u32 + 1)
    }
}

fn corpus(limits: &Limits) -> Vec<Entry> {
    let mut out = Vec::new();
    for spec in builtin_specs() {
        let ring = Ring::parse(&spec).unwrap();
        for ideal in enumerate_ideals(&ring, limits.max_ring_size).unwrap() {
            if !ideal.is_proper() {
                continue;
            }
            let absorbing = (1..=MAX_N)
                .map(|n| {
                    let r = is_n_absorbing(&ideal, n, limits).unwrap();
                    assert!(r.is_exhaustive());
                    r.holds
                })
                .collect();
            out.push(Entry {
                ring: ring.clone(),
                ideal,
                absorbing,
            });
        }
    }
    out
}

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn label(e: &Entry) -> String {
    format!("{} {}", e.ring, e.ideal)
}

fn main_theorem(corpus: &[Entry]) -> Outcome {
    let mut checked = 0;
    for e in corpus {
        let Some(w) = e.omega() else { continue };
        if !e.ideal.radical().power(w).unwrap().is_subset(&e.ideal) {
            return Err(format!("(√I)^{w} ⊄ I for {}", label(e)));
        }
        checked += 1;
    }
    Ok(format!("{checked} ideals with ω <= 4, zero failures"))
}

fn sharpness(corpus: &[Entry]) -> Outcome {
    let sharp: Vec<String> = corpus
        .iter()
        .filter(|e| matches!(e.omega(), Some(w) if w >= 2))
        .filter(|e| {
            let w = e.omega().unwrap();
            !e.ideal.radical().power(w - 1).unwrap().is_subset(&e.ideal)
        })
        .map(label)
        .collect();
    if !sharp.iter().any(|s| s == "Zmod:8 (0)") {
        return Err("Zmod:8 (0) not found sharp".into());
    }
    let z8 = corpus.iter().find(|e| label(e) == "Zmod:8 (0)").unwrap();
    let square = z8.ideal.radical().power(2).unwrap();
    if square.render() != "(4)" || z8.omega() != Some(3) {
        return Err(format!("Zmod:8: ω = {:?}, (√0)^2 = {square}", z8.omega()));
    }
    Ok(format!(
        "{} sharp instances, including Zmod:8 (0) with (√0)^2 = (4)",
        sharp.len()
    ))
}

fn element_power(corpus: &[Entry]) -> Outcome {
    let mut checked = 0u64;
    for e in corpus {
        let Some(w) = e.omega() else { continue };
        for a in e.ideal.radical().elements() {
            if !e.ideal.contains(e.ring.pow(a, w as u64)) {
                return Err(format!("{}^{w} ∉ I for {}", e.ring.render(a), label(e)));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} radical elements, zero failures"))
}

fn reduction(corpus: &[Entry], limits: &Limits) -> Outcome {
    let mut checked = 0;
    for e in corpus {
        for n in 1..=MAX_N {
            let r = check_quotient_reduction(&e.ideal, n, limits).map_err(|x| x.to_string())?;
            if !r.holds() || r.absorbing_in_ring != e.absorbing[n as usize - 1] {
                return Err(format!("{} n={n}: {r:?}", label(e)));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (ideal, n) pairs, zero failures"))
}

fn monotonicity(corpus: &[Entry]) -> Outcome {
    let mut pairs = 0;
    for e in corpus {
        for n in 1..MAX_N as usize {
            for k in n + 1..=MAX_N as usize {
                if e.absorbing[n - 1] && !e.absorbing[k - 1] {
                    return Err(format!("{} is {n}- but not {k}-absorbing", label(e)));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (n, k) pairs, zero failures"))
}

/// Every vector, every coordinate: does some coordinate of `C v` vanish?
fn projectively_zero_oracle(r: &Ring, c: &[Vec<Elem>]) -> bool {
    let m = c.len();
    let q = r.size();
    (0..q.pow(m as u32)).all(|code| {
        let mut v = Vec::with_capacity(m);
        let mut x = code;
        for _ in 0..m {
            v.push(r.element(x % q).unwrap());
            x /= q;
        }
        c.iter().any(|row| {
            let dot = row
                .iter()
                .zip(&v)
                .fold(r.zero(), |acc, (&a, &b)| r.add(acc, r.mul(a, b)));
            r.is_zero(dot)
        })
    })
}

fn zero_diagonal_suite() -> Outcome {
    let mut projective = 0u64;
    let mut nonzero_diag = 0u64;
    let mut total = 0u64;
    for spec in ["Zmod:4", "Zmod:6"] {
        let r = Ring::parse(spec).unwrap();
        let q = r.size();
        for m in 1..=3usize {
            let cells = m * (m + 1) / 2;
            for code in 0..q.pow(cells as u32) {
                let mut x = code;
                let mut rows = vec![vec![r.zero(); m]; m];
                for (i, row) in rows.iter_mut().enumerate() {
                    for cell in row.iter_mut().skip(i) {
                        *cell = r.element(x % q).unwrap();
                        x /= q;
                    }
                }
                total += 1;
                let pz = projectively_zero_oracle(&r, &rows);
                let all_nonzero = (0..m).all(|i| !r.is_zero(rows[i][i]));
                let c = SquareMatrix::from_rows(&r, rows).unwrap();
                if all_nonzero {
                    nonzero_diag += 1;
                    if pz {
                        return Err(format!(
                            "{spec} {c:?}: projectively zero with non-zero diagonal"
                        ));
                    }
                }
                if pz {
                    projective += 1;
                    match find_zero_diagonal(&c) {
                        Ok(z)
                            if r.is_zero(c.get(z.index, z.index)) && z.sequence.len() <= m + 1 => {}
                        other => return Err(format!("{spec} {c:?}: {other:?}")),
                    }
                }
            }
        }
    }
    Ok(format!(
        "{total} matrices exhaustively: {projective} projectively zero all resolved, \
         {nonzero_diag} with non-zero diagonal all rejected"
    ))
}

fn worked_examples() -> Outcome {
    let md = Monomial::new(vec![2, 4, 2]).multideg();
    if md.profile() != [4, 2, 2] || Monomial::new(vec![4, 2, 2]).multideg() != md {
        return Err(format!("multideg(x^2 y^4 z^2) = {:?}", md.profile()));
    }
    let classes = partitions(3, 3);
    if classes != [vec![3, 0, 0], vec![2, 1, 0], vec![1, 1, 1]] {
        return Err(format!("degree 3 classes {classes:?}"));
    }
    let render = |alpha: &[u32]| -> BTreeSet<String> {
        monomials_with_multideg(alpha, 3)
            .unwrap()
            .iter()
            .map(|m| m.to_string())
            .collect()
    };
    let expected: [&[&str]; 3] = [
        &["x1^3", "x2^3", "x3^3"],
        &[
            "x1^2*x2", "x1^2*x3", "x1*x2^2", "x2^2*x3", "x1*x3^2", "x2*x3^2",
        ],
        &["x1*x2*x3"],
    ];
    for (alpha, want) in classes.iter().zip(expected) {
        let want: BTreeSet<String> = want.iter().map(|s| s.to_string()).collect();
        if render(alpha) != want {
            return Err(format!(
                "generators of class {alpha:?}: {:?}",
                render(alpha)
            ));
        }
    }
    // symbolic C for g = ab with a^2 = b^2 = 0: an entry vanishes exactly
    // when some exponent reaches 2
    let g = Monomial::new(vec![1, 1]);
    let vars = [0usize, 1];
    let mut symbolic = vec![vec![String::new(); 2]; 2];
    for (i, &vi) in vars.iter().enumerate() {
        for (j, &vj) in vars.iter().enumerate() {
            let e = g.shifted(vi, vj).unwrap();
            symbolic[i][j] = if e.exponents().iter().any(|&k| k >= 2) {
                "0".into()
            } else {
                e.to_string()
            };
        }
    }
    if symbolic != [["x1*x2", "0"], ["0", "x1*x2"]] {
        return Err(format!("symbolic C = {symbolic:?}"));
    }
    Ok("multideg, degree-3 classes with generator sets, and C = diag(ab, ab)".into())
}

fn round_trip(r: &Ring, gens: &[Elem], limits: &Limits, full: bool) -> Result<(), String> {
    let options = TraceOptions {
        full_machinery: full,
    };
    let trace = prove_radical_power_zero_with(r, gens, limits, options)
        .map_err(|e| format!("{r} {:?}: {e}", r.render_all(gens)))?;
    let verdict = verify_trace(&trace, limits);
    if !verdict.valid {
        return Err(format!(
            "{r} {:?}: {:?}",
            r.render_all(gens),
            verdict.reason
        ));
    }
    let direct = r.product(gens.iter().copied());
    if r.parse_element(&trace.final_product).ok() != Some(direct) {
        return Err(format!(
            "{r}: final product {} vs {}",
            trace.final_product,
            r.render(direct)
        ));
    }
    Ok(())
}

fn nilpotent_tuples(r: &Ring, n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Elem>> {
    let nil: Vec<Elem> = Ideal::zero(r).radical().elements().collect();
    let total = nil.len().checked_pow(n as u32).unwrap_or(usize::MAX);
    if total <= 200 {
        (0..total)
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let e = nil[code % nil.len()];
                        code /= nil.len();
                        e
                    })
                    .collect()
            })
            .collect()
    } else {
        (0..200)
            .map(|_| (0..n).map(|_| *nil.choose(rng).unwrap()).collect())
            .collect()
    }
}

fn trace_suite(corpus: &[Entry], limits: &Limits) -> Outcome {
    for (spec, gens) in [("Zmod:4", "2,2"), ("Zmod:8", "2,4,6"), ("Zmod:27", "3,3,3")] {
        let r = Ring::parse(spec).unwrap();
        let gens = r.parse_elements(gens).unwrap();
        round_trip(&r, &gens, limits, false)?;
        round_trip(&r, &gens, limits, true)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut traces = 0;
    let mut rings = 0;
    for e in corpus.iter().filter(|e| e.ideal.is_zero()) {
        let Some(n) = e.omega() else { continue };
        rings += 1;
        let power_zero = e.ideal.radical().power(n).unwrap().is_zero();
        for (k, gens) in nilpotent_tuples(&e.ring, n as usize, &mut rng)
            .iter()
            .enumerate()
        {
            round_trip(&e.ring, gens, limits, k == 0)?;
            traces += 1;
        }
        if !power_zero {
            return Err(format!("{}: traces succeed but (√0)^{n} ≠ 0", e.ring));
        }
    }
    Ok(format!(
        "3 mandatory instances and {traces} traces over {rings} rings verified"
    ))
}

fn corollary_suite(corpus: &[Entry], limits: &Limits) -> Outcome {
    let mut instances = Vec::new();
    for e in corpus {
        if !e.absorbing[2] || !is_n_absorbing(&e.ideal.radical(), 1, limits).unwrap().holds {
            continue;
        }
        let colon = check_colon_two_absorbing(&e.ideal, limits).map_err(|x| x.to_string())?;
        let chain = check_chain_comparability(&e.ideal, limits).map_err(|x| x.to_string())?;
        if !colon.holds() || !chain.holds() {
            return Err(format!("{}: {:?}", label(e), chain.failures));
        }
        instances.push(label(e));
    }
    for must in ["Zmod:8 (0)", "Zmod:27 (0)"] {
        if !instances.iter().any(|s| s == must) {
            return Err(format!("{must} missing"));
        }
    }
    Ok(format!(
        "{} instances including Zmod:8 (0) and Zmod:27 (0)",
        instances.len()
    ))
}

fn determinism() -> Outcome {
    let scan = || {
        let mut c = CommandConfig::new(Command::CorpusScan);
        c.limits.seed = SEED;
        execute(&c).render()
    };
    let trace = || {
        let mut c = CommandConfig::new(Command::Trace);
        c.ring = Some("Zmod:16".into());
        c.gens = Some("2,6,10,14".into());
        c.full_machinery = true;
        c.limits.seed = SEED;
        c.limits.max_vector_scan = 64;
        c.limits.sample_count = 256;
        execute(&c).render()
    };
    let (a, b) = (scan(), scan());
    if a != b {
        return Err("corpus-scan reports differ".into());
    }
    let (t1, t2) = (trace(), trace());
    if t1 != t2 || !t1.contains("\"sampled\"") {
        return Err("seeded trace reports differ or were not sampled".into());
    }
    Ok(format!(
        "corpus-scan ({} bytes) and a sampled trace ({} bytes) byte-identical",
        a.len(),
        t1.len()
    ))
}

#[test]
fn acceptance_suite() {
    let limits = Limits {
        seed: SEED,
        ..Limits::default()
    };
    let start = Instant::now();
    let corpus = corpus(&limits);
    let mut err = std::io::stderr();
    writeln!(
        err,
        "corpus: {} proper ideals in {:.1?}",
        corpus.len(),
        start.elapsed()
    )
    .unwrap();
    let criteria: Vec<Criterion> = vec![
        (
            "main theorem (√I)^ω ⊆ I",
            Box::new(|| main_theorem(&corpus)),
        ),
        ("sharpness", Box::new(|| sharpness(&corpus))),
        (
            "element powers a^ω ∈ I",
            Box::new(|| element_power(&corpus)),
        ),
        ("reduction to R/I", Box::new(|| reduction(&corpus, &limits))),
        ("monotonicity", Box::new(|| monotonicity(&corpus))),
        ("zero-diagonal lemma", Box::new(zero_diagonal_suite)),
        ("worked examples", Box::new(worked_examples)),
        (
            "proof-trace round trip",
            Box::new(|| trace_suite(&corpus, &limits)),
        ),
        (
            "colon corollaries",
            Box::new(|| corollary_suite(&corpus, &limits)),
        ),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = run();
        let took = started.elapsed();
        let line = match outcome {
            Ok(detail) => format!("criterion {:>2} PASS  {name}: {detail} [{took:.1?}]", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!("criterion {:>2} FAIL  {name}: {why} [{took:.1?}]", i + 1)
            }
        };
        writeln!(err, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
