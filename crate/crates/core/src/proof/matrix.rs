//! Square matrices over a finite ring, seen as linear self-maps of `R^m`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::proof::monomial::{eval_monomial, Monomial};
use crate::ring::{Elem, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    ring: Ring,
    m: usize,
    // row-major
    entries: Vec<Elem>,
}

impl std::fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.rendered_rows()).finish()
    }
}

impl SquareMatrix {
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(Error::Domain("matrix must be square with m >= 1".into()));
        }
        let entries: Vec<Elem> = rows.into_iter().flatten().collect();
        for &e in &entries {
            ring.owns(e)?;
        }
        Ok(SquareMatrix {
            ring: ring.clone(),
            m,
            entries,
        })
    }

    /// Builds from rows of canonical element text.
    pub fn parse(ring: &Ring, rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|t| ring.parse_element(t))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SquareMatrix::from_rows(ring, rows)
    }

    pub fn diagonal(ring: &Ring, diag: &[Elem]) -> Result<Self> {
        let m = diag.len();
        let rows = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| if i == j { diag[i] } else { ring.zero() })
                    .collect()
            })
            .collect();
        SquareMatrix::from_rows(ring, rows)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.m
    }

    /// Entry in row `i`, column `j` (0-based).
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.m + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        self.entries.chunks(self.m)
    }

    pub fn rendered_rows(&self) -> Vec<Vec<String>> {
        self.rows().map(|r| self.ring.render_all(r)).collect()
    }

    /// `C v`.
    pub fn apply(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.m {
            return Err(Error::Domain(format!(
                "vector of length {} for a {}x{} matrix",
                v.len(),
                self.m,
                self.m
            )));
        }
        for &c in v {
            self.ring.owns(c)?;
        }
        Ok(self.apply_raw(v))
    }

    pub(crate) fn apply_raw(&self, v: &[Elem]) -> Vec<Elem> {
        let ring = &self.ring;
        self.rows()
            .map(|row| ring.sum(row.iter().zip(v).map(|(&a, &c)| ring.mul(a, c))))
            .collect()
    }
}

/// How vectors of `R^m` are probed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorScan {
    /// Every vector, lexicographically with the first coordinate most
    /// significant.
    Exhaustive,
    /// `count` vectors with coordinates drawn uniformly, in order, from
    /// `ChaCha8Rng::seed_from_u64(seed)`.
    Sampled { seed: u64, count: u64 },
}

impl VectorScan {
    /// Exhaustive when `|R|^m` fits `max_vectors`, otherwise sampled.
    pub fn choose(ring_size: usize, m: usize, max_vectors: u64, seed: u64, samples: u64) -> Self {
        match vector_count(ring_size, m) {
            Some(total) if total <= max_vectors as u128 => VectorScan::Exhaustive,
            _ => VectorScan::Sampled {
                seed,
                count: samples,
            },
        }
    }
}

/// `|R|^m`, or `None` on overflow.
pub fn vector_count(ring_size: usize, m: usize) -> Option<u128> {
    (ring_size as u128).checked_pow(m as u32)
}

/// Calls `visit` with each probe vector in scan order until it returns
/// `false`. Returns the number of vectors visited.
pub fn for_each_vector(
    ring: &Ring,
    m: usize,
    scan: VectorScan,
    mut visit: impl FnMut(&[Elem]) -> bool,
) -> u64 {
    let size = ring.size() as u32;
    let mut v = vec![ring.zero(); m];
    let mut visited = 0;
    match scan {
        VectorScan::Exhaustive => {
            let mut digits = vec![0u32; m];
            loop {
                visited += 1;
                if !visit(&v) {
                    return visited;
                }
                let mut pos = m;
                loop {
                    if pos == 0 {
                        return visited;
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < size {
                        v[pos] = ring.wrap(digits[pos]);
                        break;
                    }
                    digits[pos] = 0;
                    v[pos] = ring.zero();
                }
            }
        }
        VectorScan::Sampled { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                for c in v.iter_mut() {
                    *c = ring.wrap(rng.random_range(0..size));
                }
                visited += 1;
                if !visit(&v) {
                    break;
                }
            }
            visited
        }
    }
}

pub fn is_upper_triangular(c: &SquareMatrix) -> bool {
    first_subdiagonal_nonzero(c).is_none()
}

/// The first `(i, j)` with `i > j` and a non-zero entry, row by row.
pub fn first_subdiagonal_nonzero(c: &SquareMatrix) -> Option<(usize, usize)> {
    (0..c.m)
        .flat_map(|i| (0..i).map(move |j| (i, j)))
        .find(|&(i, j)| !c.ring.is_zero(c.get(i, j)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveZeroReport {
    pub holds: bool,
    /// First probed `v` with every coordinate of `C v` non-zero.
    pub counterexample: Option<Vec<Elem>>,
    pub vectors_checked: u64,
    pub scan: VectorScan,
}

impl ProjectiveZeroReport {
    pub fn is_exhaustive(&self) -> bool {
        self.scan == VectorScan::Exhaustive
    }
}

/// Whether every probed `C v` has a zero coordinate. Exhaustive scans
/// beyond `max_vectors` are refused.
pub fn is_projectively_zero(
    c: &SquareMatrix,
    scan: VectorScan,
    max_vectors: u64,
) -> Result<ProjectiveZeroReport> {
    if scan == VectorScan::Exhaustive {
        let total = vector_count(c.ring.size(), c.m).unwrap_or(u128::MAX);
        if total > max_vectors as u128 {
            return Err(Error::ResourceLimit {
                what: format!("projective-zero scan of a {}x{} matrix", c.m, c.m),
                needed: total,
                cap: max_vectors as u128,
            });
        }
    }
    let ring = &c.ring;
    let mut counterexample = None;
    let vectors_checked = for_each_vector(ring, c.m, scan, |v| {
        let out = c.apply_raw(v);
        if out.iter().any(|&x| ring.is_zero(x)) {
            true
        } else {
            counterexample = Some(v.to_vec());
            false
        }
    });
    Ok(ProjectiveZeroReport {
        holds: counterexample.is_none(),
        counterexample,
        vectors_checked,
        scan,
    })
}

/// The matrix `((y_j / y_i) g)` for `g` the image of a monomial, with its
/// variable labels.
#[derive(Debug, Clone)]
pub struct CMatrix {
    pub matrix: SquareMatrix,
    pub monomial: Monomial,
    /// `y_t = a_{variables[t]}`, ordered by exponent non-increasing, ties by
    /// generator index.
    pub variables: Vec<usize>,
    /// Exponent of each `y_t` in the monomial.
    pub exponents: Vec<u32>,
}

impl CMatrix {
    /// Exponent tuple behind entry `(i, j)`: the monomial with one factor
    /// `y_i` traded for `y_j`.
    pub fn entry_monomial(&self, i: usize, j: usize) -> Monomial {
        self.monomial
            .shifted(self.variables[i], self.variables[j])
            .expect("every labelled variable has a positive exponent")
    }
}

/// The variables of `m` with positive exponent, by exponent non-increasing
/// and then by index.
pub fn ordered_support(m: &Monomial) -> Vec<usize> {
    let mut vars: Vec<usize> = (0..m.variables())
        .filter(|&i| m.exponents()[i] > 0)
        .collect();
    vars.sort_by(|&a, &b| m.exponents()[b].cmp(&m.exponents()[a]).then(a.cmp(&b)));
    vars
}

/// Builds `C` by formal exponent arithmetic: entry `(i, j)` is the image of
/// the monomial with `y_i`'s exponent lowered by one and `y_j`'s raised by
/// one. No ring division is involved.
pub fn build_c_matrix(ring: &Ring, gens: &[Elem], m: &Monomial) -> Result<CMatrix> {
    let variables = ordered_support(m);
    if variables.is_empty() {
        return Err(Error::Domain(
            "the constant monomial has no variables to label".into(),
        ));
    }
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
    let size = variables.len();
    let mut rows = Vec::with_capacity(size);
    for &vi in &variables {
        let mut row = Vec::with_capacity(size);
        for &vj in &variables {
            let shifted = m.shifted(vi, vj).expect("positive exponent");
            row.push(eval_monomial(ring, gens, &shifted)?);
        }
        rows.push(row);
    }
    let exponents = variables.iter().map(|&v| m.exponents()[v]).collect();
    Ok(CMatrix {
        matrix: SquareMatrix::from_rows(ring, rows)?,
        monomial: m.clone(),
        variables,
        exponents,
    })
}
