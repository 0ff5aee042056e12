//! Linear codes held as explicit `F_{p^m}`-row spaces.
//!
//! A word of length `len` carries `depth` field coordinates per position.
//! Over `R` the coordinates are the `u`-adic digits of each symbol; over `R_k`
//! they are the `(v-1)`-adic digits. In both cases multiplication by the
//! chain-ring generator shifts every position's digits up by one layer, which
//! is all the module structure the code layer needs.

mod product;
mod tower;

pub use product::ProductMatrix;
pub use tower::{cyclic_from_tower, CyclicTower};

use std::sync::Arc;

use crate::enumerate::{MinWeight, WeightKernel};
use crate::field::{FieldCtx, Fq, FqPoly};
use crate::linalg::{self, Rows};
use crate::ring::{ChainRing, RElem};
use crate::{Error, Result};

/// A code as the RREF basis of its coordinate image in `F_{p^m}^{len * depth}`.
#[derive(Clone, Debug)]
pub struct CodeSpace {
    field: Arc<FieldCtx>,
    len: usize,
    depth: usize,
    basis: Rows,
    pivots: Vec<usize>,
}

impl PartialEq for CodeSpace {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.depth == other.depth && self.basis == other.basis
    }
}

impl Eq for CodeSpace {}

/// Multiplies every position by `z^s`, where `z` shifts the layers up.
pub fn shift_layers(word: &[Fq], depth: usize, s: usize) -> Vec<Fq> {
    let mut out = vec![Fq::ZERO; word.len()];
    for (src, dst) in word.chunks(depth).zip(out.chunks_mut(depth)) {
        if s < depth {
            dst[s..].copy_from_slice(&src[..depth - s]);
        }
    }
    out
}

/// Cyclic shift `(c_0, ..., c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2})`.
pub fn cyclic_shift(word: &[Fq], depth: usize) -> Vec<Fq> {
    let mut out = word.to_vec();
    out.rotate_right(depth);
    out
}

/// Number of positions with a nonzero coordinate.
pub fn hamming_weight(word: &[Fq], depth: usize) -> usize {
    word.chunks(depth).filter(|c| c.iter().any(|x| !x.is_zero())).count()
}

/// Flattens a word over `R` into `u`-adic coordinates.
pub fn flatten(word: &[RElem]) -> Vec<Fq> {
    word.iter().flat_map(|c| c.coeffs().iter().copied()).collect()
}

/// Inverse of [`flatten`].
pub fn unflatten(ring: &ChainRing, word: &[Fq]) -> Vec<RElem> {
    word.chunks(ring.e())
        .map(|c| ring.from_coeffs(c.to_vec()).expect("chunk of length e"))
        .collect()
}

impl CodeSpace {
    pub fn zero(field: Arc<FieldCtx>, len: usize, depth: usize) -> Self {
        CodeSpace { field, len, depth, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Arc<FieldCtx>, len: usize, depth: usize) -> Self {
        let w = len * depth;
        let basis = (0..w)
            .map(|i| (0..w).map(|j| if i == j { Fq::ONE } else { Fq::ZERO }).collect())
            .collect();
        CodeSpace { field, len, depth, basis, pivots: (0..w).collect() }
    }

    /// `F_{p^m}`-span of `rows`, with no closure applied.
    pub fn from_rows(field: Arc<FieldCtx>, len: usize, depth: usize, rows: Rows) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != len * depth) {
            return Err(Error::LengthMismatch { expected: len * depth, got: r.len() });
        }
        let (basis, pivots) = linalg::rref(&field, rows);
        Ok(CodeSpace { field, len, depth, basis, pivots })
    }

    /// Smallest subspace containing `gens` and closed under the layer shift.
    pub fn span_layered(field: Arc<FieldCtx>, len: usize, depth: usize, gens: &[Vec<Fq>]) -> Result<Self> {
        let rows = gens
            .iter()
            .flat_map(|g| (0..depth).map(move |s| shift_layers(g, depth, s)))
            .collect();
        Self::from_rows(field, len, depth, rows)
    }

    /// The `R`-submodule of `R^len` generated by `gens`.
    pub fn span(ring: &ChainRing, len: usize, gens: &[Vec<RElem>]) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.len() != len) {
            return Err(Error::LengthMismatch { expected: len, got: g.len() });
        }
        let flat: Vec<Vec<Fq>> = gens.iter().map(|g| flatten(g)).collect();
        Self::span_layered(ring.field_arc().clone(), len, ring.e(), &flat)
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn basis(&self) -> &Rows {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// `a` with `|C| = p^a`.
    pub fn log_size(&self) -> usize {
        self.field.m() * self.dim()
    }

    pub fn contains(&self, word: &[Fq]) -> Result<bool> {
        if word.len() != self.len * self.depth {
            return Err(Error::LengthMismatch { expected: self.len * self.depth, got: word.len() });
        }
        let res = linalg::reduce(&self.field, &self.basis, &self.pivots, word);
        Ok(res.iter().all(|c| c.is_zero()))
    }

    pub fn contains_r(&self, word: &[RElem]) -> Result<bool> {
        self.contains(&flatten(word))
    }

    pub fn is_subcode_of(&self, other: &CodeSpace) -> Result<bool> {
        for row in &self.basis {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `f` maps the code into itself.
    pub fn is_closed_under(&self, f: impl Fn(&[Fq]) -> Vec<Fq>) -> bool {
        self.basis.iter().all(|r| self.contains(&f(r)).unwrap_or(false))
    }

    pub fn is_module(&self) -> bool {
        self.is_closed_under(|w| shift_layers(w, self.depth, 1))
    }

    pub fn is_cyclic(&self) -> bool {
        self.is_closed_under(|w| cyclic_shift(w, self.depth))
    }

    /// `{c_s : c in C, c_0 = ... = c_{s-1} = 0}` as a length-`len` code over
    /// the field, where `c_t` is the layer-`t` part of `c`. For a module over
    /// a chain ring with generator `z` this is the reduction of `(C : z^s)`.
    pub fn torsion_space(&self, s: usize) -> Result<CodeSpace> {
        if s >= self.depth {
            return Err(Error::OutOfRange { index: s, len: self.depth });
        }
        let (len, depth) = (self.len, self.depth);
        let layer_major: Rows = self
            .basis
            .iter()
            .map(|r| (0..depth).flat_map(|t| (0..len).map(move |i| r[i * depth + t])).collect())
            .collect();
        let (red, pivots) = linalg::rref(&self.field, layer_major);
        let rows = red
            .iter()
            .zip(&pivots)
            .filter(|(_, &piv)| piv >= s * len)
            .map(|(r, _)| r[s * len..(s + 1) * len].to_vec())
            .collect();
        CodeSpace::from_rows(self.field.clone(), len, 1, rows)
    }

    /// Generator polynomial of the cyclic torsion code `Tor_s`, with the zero
    /// code reported as `x^len - 1`.
    pub fn torsion(&self, s: usize) -> Result<FqPoly> {
        if !self.is_cyclic() {
            return Err(Error::NotClosed("the cyclic shift"));
        }
        let tor = self.torsion_space(s)?;
        Ok(tor.generator_poly(Fq::ONE))
    }

    /// Monic generator of a depth-one code that is an ideal of
    /// `F[x]/<x^len - gamma>`; the zero code gives `x^len - gamma`.
    pub fn generator_poly(&self, gamma: Fq) -> FqPoly {
        let f = &self.field;
        let modulus = FqPoly::x_n_minus(f, self.len, gamma);
        self.basis.iter().fold(modulus, |g, r| {
            f.poly_gcd(&g, &FqPoly::new(r.iter().step_by(self.depth).copied().collect()))
        })
    }

    fn kernel(&self, limit: u64) -> Result<WeightKernel> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        let kernel = WeightKernel::new(&self.field, self.len, self.depth, &self.basis);
        kernel.check_limit(limit)?;
        Ok(kernel)
    }

    /// A nonzero codeword of minimum Hamming weight, by exhaustive enumeration.
    pub fn min_weight_word(&self, limit: u64) -> Result<MinWeight> {
        self.kernel(limit)?.min_weight().ok_or(Error::ZeroCode)
    }

    pub fn min_distance(&self, limit: u64) -> Result<usize> {
        self.min_weight_word(limit).map(|w| w.weight)
    }
}
