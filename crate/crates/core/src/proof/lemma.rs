//! A projectively zero upper-triangular map has a zero on its diagonal, and
//! the index can be found constructively.
//!
//! Starting from the probe `e_m`, each step takes the largest index `j` with
//! `π_j(C · probe) = 0` and adds `e_j` to the probe. Upper-triangularity
//! forces the indices to be non-increasing; the first repeat `j_{k+1} = j_k`
//! gives `C(j_k, j_k) = π_{j_k}(C · probe) - π_{j_k}(C · previous probe) = 0`.
//! A strictly decreasing run can last at most `m` steps, so the search ends
//! within `m + 1` probes.

use thiserror::Error;

use crate::proof::matrix::{first_subdiagonal_nonzero, SquareMatrix};

/// A zero diagonal entry and the index sequence that located it. Indices are
/// 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDiagonal {
    pub index: usize,
    /// `j_1, j_2, ...`, ending with the repeated index.
    pub sequence: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZeroDiagonalError {
    #[error("matrix is not upper-triangular: entry ({row}, {col}) is non-zero")]
    NotUpperTriangular { row: usize, col: usize },
    /// The probe maps to a vector without zero coordinates, so the matrix is
    /// not projectively zero.
    #[error("probe vector ({}) has no zero coordinate in its image", vector.join(","))]
    NoZeroCoordinate { vector: Vec<String> },
    #[error("index sequence {sequence:?} broke the zero-diagonal argument: {reason}")]
    Contradiction {
        sequence: Vec<usize>,
        reason: String,
    },
}

/// Runs the index sequence on `c`. Fails if `c` is not upper-triangular or
/// a probe exposes that `c` is not projectively zero.
pub fn find_zero_diagonal(c: &SquareMatrix) -> Result<ZeroDiagonal, ZeroDiagonalError> {
    if let Some((row, col)) = first_subdiagonal_nonzero(c) {
        return Err(ZeroDiagonalError::NotUpperTriangular { row, col });
    }
    let ring = c.ring();
    let m = c.size();
    let mut probe = vec![ring.zero(); m];
    probe[m - 1] = ring.one();
    let mut sequence: Vec<usize> = Vec::with_capacity(m + 1);
    while sequence.len() <= m {
        let image = c.apply_raw(&probe);
        let Some(j) = (0..m).rev().find(|&i| ring.is_zero(image[i])) else {
            return Err(ZeroDiagonalError::NoZeroCoordinate {
                vector: ring.render_all(&probe),
            });
        };
        if let Some(&prev) = sequence.last() {
            if j > prev {
                sequence.push(j);
                return Err(ZeroDiagonalError::Contradiction {
                    sequence,
                    reason: "index increased".into(),
                });
            }
            if j == prev {
                sequence.push(j);
                if !ring.is_zero(c.get(j, j)) {
                    return Err(ZeroDiagonalError::Contradiction {
                        sequence,
                        reason: format!("repeated index {j} has a non-zero diagonal entry"),
                    });
                }
                return Ok(ZeroDiagonal { index: j, sequence });
            }
        }
        sequence.push(j);
        probe[j] = ring.add(probe[j], ring.one());
    }
    Err(ZeroDiagonalError::Contradiction {
        sequence,
        reason: format!("no repeat within {} probes", m + 1),
    })
}
