//! Monomials in `x_1..x_n`, their unordered multi-degrees, the `≻` order, and
//! their images under `x_i ↦ a_i`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{Elem, Ring};

/// `x_1^{e_1} ⋯ x_n^{e_n}`, stored as the exponent tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn variables(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Exponents sorted non-increasing.
    pub fn multideg(&self) -> MultiDegree {
        let mut profile = self.exponents.clone();
        profile.sort_unstable_by(|a, b| b.cmp(a));
        MultiDegree { profile }
    }

    /// The monomial with one factor `x_from` traded for `x_to`. `None` if
    /// `x_from` does not divide it.
    pub fn shifted(&self, from: usize, to: usize) -> Option<Monomial> {
        if self.exponents[from] == 0 {
            return None;
        }
        let mut exponents = self.exponents.clone();
        exponents[from] -= 1;
        exponents[to] += 1;
        Some(Monomial { exponents })
    }

    /// The monomial divided by `x_var`, if `x_var` divides it.
    pub fn without(&self, var: usize) -> Option<Monomial> {
        if self.exponents[var] == 0 {
            return None;
        }
        let mut exponents = self.exponents.clone();
        exponents[var] -= 1;
        Some(Monomial { exponents })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                f.write_str("*")?;
            }
            wrote = true;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if !wrote {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// An exponent profile sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiDegree {
    profile: Vec<u32>,
}

impl MultiDegree {
    pub fn new(profile: Vec<u32>) -> Result<Self> {
        if profile.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "{profile:?} is not a multi-degree: multi-degrees are always of the form \
                 (n,m,l,...) with n >= m >= l >= ..."
            )));
        }
        Ok(MultiDegree { profile })
    }

    pub fn profile(&self) -> &[u32] {
        &self.profile
    }

    pub fn degree(&self) -> u32 {
        self.profile.iter().sum()
    }
}

/// Which order [`order_compare`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderMode {
    /// `α ≥ β` iff the leftmost non-zero coordinate of `α - β` is positive.
    Lex,
    /// Total degree first, then lex.
    Succ,
}

/// Compares `alpha` with `beta`.
pub fn order_compare(alpha: &[u32], beta: &[u32], mode: OrderMode) -> Result<Ordering> {
    if alpha.len() != beta.len() {
        return Err(Error::Domain(format!(
            "cannot compare tuples of lengths {} and {}",
            alpha.len(),
            beta.len()
        )));
    }
    let lex = alpha.cmp(beta);
    Ok(match mode {
        OrderMode::Lex => lex,
        OrderMode::Succ => {
            let da: u64 = alpha.iter().map(|&x| x as u64).sum();
            let db: u64 = beta.iter().map(|&x| x as u64).sum();
            da.cmp(&db).then(lex)
        }
    })
}

/// Partitions of `total` into at most `parts` parts, padded with zeros to
/// length `parts`, in lex-descending order.
pub fn partitions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // the remaining slots can hold at most slots * max
        if rest as u64 > slots as u64 * max as u64 {
            return;
        }
        for part in (0..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(
        total,
        total,
        parts,
        &mut Vec::with_capacity(parts),
        &mut out,
    );
    out
}

/// Multi-degrees `α` of `n` variables with `n <= |α| <= n² - n`, in
/// `≻`-descending order. The first is `(n² - n, 0, ..., 0)`.
pub fn delta_set(n: u32) -> Result<Vec<MultiDegree>> {
    if n < 2 {
        return Err(Error::Domain(
            "the induction range is defined for n >= 2; n = 1 needs no induction".into(),
        ));
    }
    let top = n * n - n;
    let mut out = Vec::new();
    for degree in (n..=top).rev() {
        out.extend(
            partitions(degree, n as usize)
                .into_iter()
                .map(|profile| MultiDegree { profile }),
        );
    }
    Ok(out)
}

fn prev_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (0..v.len().saturating_sub(1))
        .rev()
        .find(|&i| v[i] > v[i + 1])
    else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] < v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// All exponent tuples whose sorted form is `alpha`, lex-descending.
pub fn monomials_with_multideg(alpha: &[u32], variables: usize) -> Result<Vec<Monomial>> {
    let alpha = MultiDegree::new(alpha.to_vec())?;
    if alpha.profile.len() != variables {
        return Err(Error::Domain(format!(
            "multi-degree {:?} has length {}, expected {variables}",
            alpha.profile,
            alpha.profile.len()
        )));
    }
    let mut cur = alpha.profile;
    let mut out = vec![Monomial::new(cur.clone())];
    while prev_permutation(&mut cur) {
        out.push(Monomial::new(cur.clone()));
    }
    Ok(out)
}

/// `∏ a_i^{e_i}`: the image of the monomial under `x_i ↦ a_i`.
pub fn eval_monomial(ring: &Ring, gens: &[Elem], m: &Monomial) -> Result<Elem> {
    if gens.len() != m.variables() {
        return Err(Error::Domain(format!(
            "{} generators for a monomial in {} variables",
            gens.len(),
            m.variables()
        )));
    }
    for &g in gens {
        ring.owns(g)?;
    }
    Ok(ring.product(
        gens.iter()
            .zip(m.exponents())
            .map(|(&a, &e)| ring.pow(a, e as u64)),
    ))
}

/// `J^k_α`: the ideal generated by the images of all monomials of
/// multi-degree `α`.
pub fn j_k_alpha(ring: &Ring, gens: &[Elem], alpha: &[u32]) -> Result<Ideal> {
    let images = monomials_with_multideg(alpha, gens.len())?
        .iter()
        .map(|m| eval_monomial(ring, gens, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::generated(ring, &images)?)
}
