//! Executable, checkable procedures around n-absorbing ideals of finite
//! commutative rings.
//!
//! An ideal `I` of a commutative ring is *n-absorbing* when every product of
//! `n + 1` elements landing in `I` already has a sub-product of `n` of those
//! elements in `I`. For such ideals `(√I)^n ⊆ I`. This crate provides:
//!
//! * [`ring`]: finite rings (`Z/n`, `F_p[x]/(f)`, products, quotients) with
//!   canonical element enumeration and a small text grammar;
//! * [`ideal`]: ideals as materialized element sets, with radical, product,
//!   power, colon and the full ideal lattice;
//! * [`absorbing`]: the n-absorbing decision procedure, `ω(I)`, and checkers
//!   for the radical-power bound, the quotient reduction and two corollaries;
//! * [`proof`]: the multi-degree induction on concrete generators, the
//!   zero-diagonal search for projectively zero upper-triangular matrices,
//!   and a proof-trace generator with an independent verifier;
//! * [`cli`]: command dispatch producing deterministic JSON reports.

pub mod absorbing;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod ideal;
pub mod limits;
pub mod proof;
pub mod ring;

pub use error::{Error, ParseError, Result, RingError};
pub use ideal::{enumerate_ideals, Ideal};
pub use limits::Limits;
pub use ring::{quotient_ring, Elem, ElemLiteral, QuotientMap, Ring, RingDescriptor};
