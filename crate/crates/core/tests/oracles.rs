//! Library results against brute-force computations written from the
//! definitions alone.

use std::collections::BTreeSet;

use absorbing_ideals::absorbing::{is_n_absorbing, omega};
use absorbing_ideals::corpus::builtin_specs;
use absorbing_ideals::{enumerate_ideals, Elem, Ideal, Limits, Ring};

fn ring(spec: &str) -> Ring {
    Ring::parse(spec).unwrap()
}

fn indices<I: IntoIterator<Item = Elem>>(it: I) -> BTreeSet<usize> {
    it.into_iter().map(Elem::index).collect()
}

fn prime_factor_count(mut n: u64) -> u32 {
    let mut count = 0;
    let mut p = 2;
    while n > 1 {
        while n.is_multiple_of(p) {
            n /= p;
            count += 1;
        }
        p += 1;
    }
    count
}

/// Additive closure of `seeds` closed under multiplication by the ring.
fn ideal_closure(r: &Ring, seeds: &[Elem]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([0]);
    let mut frontier: Vec<Elem> = Vec::new();
    for &s in seeds {
        for x in r.elements() {
            frontier.push(r.mul(s, x));
        }
    }
    loop {
        let mut grew = false;
        let members: Vec<usize> = set.iter().copied().collect();
        for &f in &frontier {
            for &m in &members {
                let sum = r.add(f, r.element(m).unwrap());
                grew |= set.insert(sum.index());
            }
        }
        if !grew {
            return set;
        }
    }
}

#[test]
fn ring_axioms_hold_exhaustively() {
    for spec in builtin_specs() {
        let r = ring(&spec);
        if r.size() > 27 {
            continue;
        }
        let els: Vec<Elem> = r.elements().collect();
        for &a in &els {
            assert_eq!(r.add(a, r.zero()), a);
            assert_eq!(r.mul(a, r.one()), a);
            assert!(r.is_zero(r.add(a, r.neg(a))));
            for &b in &els {
                assert_eq!(r.add(a, b), r.add(b, a), "{spec}");
                assert_eq!(r.mul(a, b), r.mul(b, a), "{spec}");
                for &c in &els {
                    assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)), "{spec}");
                    assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)), "{spec}");
                    assert_eq!(
                        r.mul(a, r.add(b, c)),
                        r.add(r.mul(a, b), r.mul(a, c)),
                        "{spec}"
                    );
                }
            }
        }
    }
}

#[test]
fn product_of_coprime_moduli_matches_zmod() {
    let z12 = ring("Zmod:12");
    let crt = ring("Product:[Zmod:4,Zmod:3]");
    let to_crt = |x: usize| {
        crt.parse_element(&format!("({},{})", x % 4, x % 3))
            .unwrap()
    };
    for x in 0..12 {
        for y in 0..12 {
            let (ex, ey) = (z12.element(x).unwrap(), z12.element(y).unwrap());
            assert_eq!(
                to_crt(z12.mul(ex, ey).index()),
                crt.mul(to_crt(x), to_crt(y))
            );
            assert_eq!(
                to_crt(z12.add(ex, ey).index()),
                crt.add(to_crt(x), to_crt(y))
            );
        }
    }
    let a: Vec<usize> = enumerate_ideals(&z12, 4096)
        .unwrap()
        .iter()
        .map(Ideal::len)
        .collect();
    let b: Vec<usize> = enumerate_ideals(&crt, 4096)
        .unwrap()
        .iter()
        .map(Ideal::len)
        .collect();
    assert_eq!(a, b);
}

#[test]
fn polynomial_quotient_multiplication() {
    // F_3[x]/(x^3 + 2x + 1), coefficients constant first
    let r = ring("PolyQuot:{p:3,poly:[1,2,0,1]}");
    let modulus = [1u64, 2, 0];
    let coeffs = |i: usize| [i as u64 % 3, (i as u64 / 3) % 3, i as u64 / 9];
    for a in 0..27 {
        for b in 0..27 {
            let (ca, cb) = (coeffs(a), coeffs(b));
            let mut prod = [0u64; 5];
            for i in 0..3 {
                for j in 0..3 {
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % 3;
                }
            }
            for d in (3..5).rev() {
                let lead = prod[d];
                prod[d] = 0;
                for (k, &m) in modulus.iter().enumerate() {
                    prod[d - 3 + k] = (prod[d - 3 + k] + 3 * 3 - lead * m % 3) % 3;
                }
            }
            let expected = (prod[0] + 3 * prod[1] + 9 * prod[2]) as usize;
            let got = r.mul(r.element(a).unwrap(), r.element(b).unwrap());
            assert_eq!(got.index(), expected, "{a} * {b}");
        }
    }
}

#[test]
fn zmod_ideals_are_the_divisors() {
    for n in 2..=36u64 {
        let r = ring(&format!("Zmod:{n}"));
        let ideals = enumerate_ideals(&r, 4096).unwrap();
        let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        assert_eq!(ideals.len(), divisors.len(), "Z/{n}");
        for d in divisors {
            let members: BTreeSet<usize> = (0..n).step_by(d as usize).map(|x| x as usize).collect();
            assert!(
                ideals.iter().any(|i| indices(i.elements()) == members),
                "Z/{n} ({d})"
            );
        }
    }
}

#[test]
fn ideal_operations_match_definitions() {
    for spec in [
        "Zmod:24",
        "Zmod:36",
        "Product:[Zmod:4,Zmod:3]",
        "PolyQuot:{p:2,poly:[0,0,0,1]}",
    ] {
        let r = ring(spec);
        let ideals = enumerate_ideals(&r, 4096).unwrap();
        for i in &ideals {
            let radical: BTreeSet<usize> = r
                .elements()
                .filter(|&a| (1..=r.size() as u64).any(|k| i.contains(r.pow(a, k))))
                .map(Elem::index)
                .collect();
            assert_eq!(indices(i.radical().elements()), radical, "{spec} {i}");
            for x in r.elements() {
                let colon: BTreeSet<usize> = r
                    .elements()
                    .filter(|&a| i.contains(r.mul(a, x)))
                    .map(Elem::index)
                    .collect();
                assert_eq!(indices(i.colon(x).unwrap().elements()), colon);
            }
            for j in &ideals {
                let products: Vec<Elem> = i
                    .elements()
                    .flat_map(|a| j.elements().map(move |b| (a, b)))
                    .map(|(a, b)| r.mul(a, b))
                    .collect();
                assert_eq!(
                    indices(i.product(j).unwrap().elements()),
                    ideal_closure(&r, &products),
                    "{spec} {i}{j}"
                );
            }
        }
    }
}

/// Smallest failing (n+1)-tuple over all ordered tuples, by index.
fn brute_force_witness(i: &Ideal, n: usize) -> Option<Vec<usize>> {
    let r = i.ring();
    let q = r.size();
    let k = n + 1;
    let total = q.pow(k as u32);
    'tuples: for code in 0..total {
        let mut t = vec![0usize; k];
        let mut c = code;
        for slot in t.iter_mut().rev() {
            *slot = c % q;
            c /= q;
        }
        let els: Vec<Elem> = t.iter().map(|&x| r.element(x).unwrap()).collect();
        if !i.contains(r.product(els.iter().copied())) {
            continue;
        }
        for skip in 0..k {
            let sub = els
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .map(|(_, &e)| e);
            if i.contains(r.product(sub)) {
                continue 'tuples;
            }
        }
        return Some(t);
    }
    None
}

#[test]
fn absorbing_decision_matches_brute_force() {
    let limits = Limits::default();
    for spec in [
        "Zmod:8",
        "Zmod:12",
        "Zmod:9",
        "Product:[Zmod:2,Zmod:2]",
        "PolyQuot:{p:2,poly:[0,0,1]}",
    ] {
        let r = ring(spec);
        for i in enumerate_ideals(&r, 4096)
            .unwrap()
            .iter()
            .filter(|i| i.is_proper())
        {
            for n in 1..=3 {
                let report = is_n_absorbing(i, n, &limits).unwrap();
                let oracle = brute_force_witness(i, n as usize);
                assert_eq!(report.holds, oracle.is_none(), "{spec} {i} n={n}");
                let got = report
                    .witness
                    .map(|w| w.tuple().iter().map(|e| e.index()).collect());
                assert_eq!(got, oracle, "{spec} {i} n={n}");
            }
        }
    }
}

#[test]
fn omega_of_zero_ideal_counts_prime_factors() {
    let limits = Limits::default();
    for n in 2..=36u64 {
        let r = ring(&format!("Zmod:{n}"));
        let expected = Some(prime_factor_count(n)).filter(|&w| w <= 4);
        assert_eq!(
            omega(&Ideal::zero(&r), 4, &limits).unwrap().value,
            expected,
            "Z/{n}"
        );
    }
}
