//! Constacyclic codes over the finite chain ring `F_{p^m}[u]/<u^e>` and their
//! matrix-product structure.
//!
//! A `(1+wu)`-constacyclic code of length `p^k n` (with `gcd(p, n) = 1`) is
//! monomially equivalent to a matrix-product code `[C_{p^k-1}, ..., C_0] * A_{p^k}`
//! of nested cyclic codes of length `n`. This crate builds every piece of that
//! picture explicitly:
//!
//! - [`field`]: `F_{p^m}` arithmetic, polynomials and the factorization of `x^n - 1`;
//! - [`ring`]: the chain ring `R` and its extension `R_k = R[v]/<v^{p^k} - (1+wu)>`;
//! - [`codes`]: linear codes as explicit `F_{p^m}`-row spaces, towers, torsion
//!   codes and matrix-product codes;
//! - [`consta`]: the constacyclic family itself (permutation, monomial map,
//!   `A_{p^k}`, decomposition, recursion, distances and equivalence checks);
//! - [`cli`]: the `ccring` command-line front end.
//!
//! Distance computations enumerate codewords exhaustively. With the default
//! `parallel` feature the enumeration is split across a rayon pool; without it
//! the same chunked loop runs sequentially and returns the identical result.

pub mod cli;
pub mod codes;
pub mod consta;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod linalg;
pub mod ring;

pub use error::{Error, Result};

/// Default cap on the number of codewords an exhaustive search may visit.
pub const DEFAULT_ENUM_LIMIT: u64 = 1 << 24;
