use std::sync::{Arc, OnceLock};

use super::params::derive;
use super::{a_matrix, ConstaParams, MonomialMap};
use crate::codes::{cyclic_from_tower, flatten, unflatten, CodeSpace, CyclicTower, ProductMatrix};
use crate::field::{factor_xn_minus_1, Fq, FqPoly};
use crate::ring::{ChainRing, RElem, RkElem, RkRing};
use crate::{Error, Result};

/// All `(1+wu)`-constacyclic codes of length `p^k n` over `R` for fixed
/// `(p, m, e, k, n, w)`, indexed by exponent vectors over the factors of
/// `x^n - 1`.
#[derive(Debug)]
pub struct ConstaFamily {
    base: ChainRing,
    omega: RElem,
    gamma: RElem,
    params: ConstaParams,
    factors: Vec<FqPoly>,
    rk: RkRing,
    map: MonomialMap,
    a: ProductMatrix,
    pub(super) deltas: OnceLock<Result<Vec<usize>>>,
}

/// A code `C = <G(x)>` of the family with its spanned coordinate space.
#[derive(Clone, Debug)]
pub struct ConstaCode {
    pub exps: Vec<usize>,
    pub generator: FqPoly,
    pub space: CodeSpace,
}

/// `Theta(C) = [C_{p^k-1}, ..., C_0] * A_{p^k}`.
#[derive(Clone, Debug)]
pub struct MPDecomposition {
    /// Towers in bracket order: index `i` holds `C_{p^k-1-i}`.
    pub towers: Vec<CyclicTower>,
    pub a: ProductMatrix,
}

impl MPDecomposition {
    /// Tower of `C_rho`.
    pub fn tower(&self, rho: usize) -> &CyclicTower {
        &self.towers[self.towers.len() - 1 - rho]
    }

    pub fn constituent_codes(&self, base: &ChainRing) -> Result<Vec<CodeSpace>> {
        self.towers.iter().map(|t| cyclic_from_tower(base, t)).collect()
    }

    pub fn matrix_product(&self, base: &ChainRing) -> Result<CodeSpace> {
        self.a.matrix_product(&self.constituent_codes(base)?)
    }

    pub fn is_nested(&self, base: &ChainRing) -> bool {
        self.towers.windows(2).all(|w| w[1].is_subcode_of(base.field(), &w[0]))
    }
}

impl ConstaFamily {
    /// Any `k >= 0`; at `k = 0` the family is the `(1+wu)`-constacyclic codes
    /// of length `n`.
    pub fn new(base: ChainRing, k: u32, n: usize, omega: RElem) -> Result<Self> {
        let params = derive(&base, k, n, &omega)?;
        let factors = factor_xn_minus_1(base.field(), n)?;
        let rk = RkRing::new(base.clone(), k, omega.clone())?;
        let map = MonomialMap::new(&base, &params, &omega)?;
        let a = a_matrix(base.field(), k);
        let gamma = base.add(&base.one(), &base.mul(&omega, &base.u()));
        Ok(ConstaFamily { base, omega, gamma, params, factors, rk, map, a, deltas: OnceLock::new() })
    }

    pub fn base(&self) -> &ChainRing {
        &self.base
    }

    pub fn field_arc(&self) -> &Arc<crate::field::FieldCtx> {
        self.base.field_arc()
    }

    pub fn omega(&self) -> &RElem {
        &self.omega
    }

    /// `1 + w u`
    pub fn gamma(&self) -> &RElem {
        &self.gamma
    }

    pub fn params(&self) -> &ConstaParams {
        &self.params
    }

    pub fn factors(&self) -> &[FqPoly] {
        &self.factors
    }

    pub fn rk(&self) -> &RkRing {
        &self.rk
    }

    pub fn monomial_map(&self) -> &MonomialMap {
        &self.map
    }

    pub fn a(&self) -> &ProductMatrix {
        &self.a
    }

    /// `(p^k e + 1)^r`
    pub fn code_count(&self) -> u128 {
        ((self.params.pk * self.params.e) as u128 + 1).saturating_pow(self.factors.len() as u32)
    }

    pub fn check_exponents(&self, exps: &[usize]) -> Result<()> {
        if exps.len() != self.factors.len() {
            return Err(Error::InvalidExponents(format!(
                "expected {} exponents, got {}",
                self.factors.len(),
                exps.len()
            )));
        }
        let top = self.params.pk * self.params.e;
        if let Some(i) = exps.iter().find(|&&i| i > top) {
            return Err(Error::InvalidExponents(format!("exponent {i} exceeds p^k e = {top}")));
        }
        Ok(())
    }

    /// Every exponent vector, first coordinate fastest.
    pub fn all_exponents(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let (r, base) = (self.factors.len(), self.params.pk * self.params.e + 1);
        (0..self.code_count()).map(move |mut idx| {
            (0..r)
                .map(|_| {
                    let d = (idx % base as u128) as usize;
                    idx /= base as u128;
                    d
                })
                .collect()
        })
    }

    /// `m sum_t (p^k e - i_t) deg f_t`
    pub fn formula_log_size(&self, exps: &[usize]) -> usize {
        let top = self.params.pk * self.params.e;
        self.params.m
            * exps
                .iter()
                .zip(&self.factors)
                .map(|(&i, f)| (top - i) * f.degree().unwrap_or(0))
                .sum::<usize>()
    }

    /// `G = prod_t f_t^{i_t}`
    pub fn generator(&self, exps: &[usize]) -> Result<FqPoly> {
        self.check_exponents(exps)?;
        let f = self.base.field();
        Ok(f.poly_product(
            self.factors.iter().zip(exps).map(|(g, &i)| f.poly_pow(g, i)).collect::<Vec<_>>().iter(),
        ))
    }

    /// Reduction of an `F_{p^m}[x]` polynomial modulo `x^N - (1+wu)`.
    pub fn reduce_poly(&self, g: &FqPoly) -> Vec<RElem> {
        let b = &self.base;
        let big_n = self.params.big_n;
        let mut word = vec![b.zero(); big_n];
        for (d, &c) in g.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = b.scale(c, &b.pow(&self.gamma, (d / big_n) as u64));
            word[d % big_n] = b.add(&word[d % big_n], &term);
        }
        word
    }

    /// Multiplication by `x` in `R[x]/<x^N - (1+wu)>`.
    pub fn consta_shift(&self, word: &[RElem]) -> Vec<RElem> {
        let mut out = word.to_vec();
        out.rotate_right(1);
        out[0] = self.base.mul(&self.gamma, &out[0]);
        out
    }

    pub fn code(&self, exps: &[usize]) -> Result<ConstaCode> {
        let generator = self.generator(exps)?;
        let mut word = self.reduce_poly(&generator);
        let mut gens = Vec::with_capacity(self.params.big_n);
        for _ in 0..self.params.big_n {
            let next = self.consta_shift(&word);
            gens.push(std::mem::replace(&mut word, next));
        }
        let space = CodeSpace::span(&self.base, self.params.big_n, &gens)?;
        let formula = self.formula_log_size(exps);
        if space.log_size() != formula {
            return Err(Error::Inconsistent(format!(
                "spanned code has log size {} but the formula gives {formula}",
                space.log_size()
            )));
        }
        Ok(ConstaCode { exps: exps.to_vec(), generator, space })
    }

    /// `g_s = prod_{i_t > s} f_t` for `s < p^k e`.
    pub fn torsion_generators(&self, exps: &[usize]) -> Result<Vec<FqPoly>> {
        self.check_exponents(exps)?;
        let f = self.base.field();
        Ok((0..self.params.pk * self.params.e)
            .map(|s| {
                f.poly_product(self.factors.iter().zip(exps).filter(|(_, &i)| i > s).map(|(g, _)| g))
            })
            .collect())
    }

    /// Towers `C_rho = (g_rho, g_{p^k + rho}, ..., g_{(e-1) p^k + rho})`.
    pub fn decompose(&self, exps: &[usize]) -> Result<MPDecomposition> {
        let g = self.torsion_generators(exps)?;
        let (pk, e, n) = (self.params.pk, self.params.e, self.params.n);
        let towers = (0..pk)
            .rev()
            .map(|rho| {
                let gens = (0..e).map(|s| g[s * pk + rho].clone()).collect();
                CyclicTower::new(self.base.field(), n, gens)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MPDecomposition { towers, a: self.a.clone() })
    }

    /// Exponent vectors of `C^(0), ..., C^(p-1)` in the family of length
    /// `p^{k-1} n`: the exponent of `f_t` in `C^(j)` counts the pairs
    /// `(lambda, l)` with `i_t > lambda p^k + j p^{k-1} + l`.
    pub fn recurse(&self, exps: &[usize]) -> Result<Vec<Vec<usize>>> {
        self.check_exponents(exps)?;
        let ConstaParams { p, k, pk, e, .. } = self.params;
        if k == 0 {
            return Err(Error::InvalidParams("recursion needs k >= 1".into()));
        }
        let sub = pk / p as usize;
        Ok((0..p as usize)
            .map(|j| {
                exps.iter()
                    .map(|&i| {
                        (0..e)
                            .map(|lambda| {
                                let lo = lambda * pk + j * sub;
                                i.saturating_sub(lo).min(sub)
                            })
                            .sum()
                    })
                    .collect()
            })
            .collect())
    }

    /// The family of length `p^{k-1} n` with the same `R`, `n` and `w`.
    pub fn child(&self) -> Result<ConstaFamily> {
        if self.params.k == 0 {
            return Err(Error::InvalidParams("recursion needs k >= 1".into()));
        }
        ConstaFamily::new(self.base.clone(), self.params.k - 1, self.params.n, self.omega.clone())
    }

    /// `psi phi`: position `j` becomes `v^{n' j} sum_t a_{j+tn} v^t` in `R_k`.
    pub fn psi_phi(&self, a: &[RElem]) -> Result<Vec<RkElem>> {
        let ConstaParams { n, pk, big_n, pkl, n_prime, .. } = self.params;
        if a.len() != big_n {
            return Err(Error::LengthMismatch { expected: big_n, got: a.len() });
        }
        (0..n)
            .map(|j| {
                let coords = (0..pk).map(|t| a[j + t * n].clone()).collect();
                let inner = self.rk.from_coords(coords)?;
                Ok(self.rk.mul(&self.rk.v_pow(n_prime * j as u64 % pkl), &inner))
            })
            .collect()
    }

    pub fn psi_phi_inverse(&self, b: &[RkElem]) -> Result<Vec<RElem>> {
        let ConstaParams { n, pk, big_n, pkl, n_prime, .. } = self.params;
        if b.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: b.len() });
        }
        let mut out = vec![self.base.zero(); big_n];
        for (j, bj) in b.iter().enumerate() {
            let back = (pkl - n_prime * j as u64 % pkl) % pkl;
            let inner = self.rk.mul(&self.rk.v_pow(back), bj);
            for t in 0..pk {
                out[j + t * n] = inner.coords()[t].clone();
            }
        }
        Ok(out)
    }

    /// Product in `R[x]/<x^N - (1+wu)>`.
    pub fn consta_mul(&self, a: &[RElem], b: &[RElem]) -> Vec<RElem> {
        let r = &self.base;
        let big_n = a.len();
        let mut out = vec![r.zero(); big_n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let mut t = r.mul(x, y);
                if i + j >= big_n {
                    t = r.mul(&t, &self.gamma);
                }
                let d = (i + j) % big_n;
                out[d] = r.add(&out[d], &t);
            }
        }
        out
    }

    /// Product in `R_k[x]/<x^n - 1>`.
    pub fn rk_cyclic_mul(&self, a: &[RkElem], b: &[RkElem]) -> Vec<RkElem> {
        let n = a.len();
        let mut out = vec![self.rk.zero(); n];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let d = (i + j) % n;
                out[d] = self.rk.add(&out[d], &self.rk.mul(x, y));
            }
        }
        out
    }

    /// `psi phi (C)` as a code over `R_k` in `(v-1)`-adic coordinates.
    pub fn image_code(&self, code: &ConstaCode) -> Result<CodeSpace> {
        let rows = code
            .space
            .basis()
            .iter()
            .map(|row| {
                let img = self.psi_phi(&unflatten(&self.base, row))?;
                Ok(img.iter().flat_map(|x| self.rk.v1_expansion(x)).collect())
            })
            .collect::<Result<Vec<Vec<Fq>>>>()?;
        CodeSpace::from_rows(self.field_arc().clone(), self.params.n, self.rk.dim(), rows)
    }

    /// `Tor_s(psi phi (C))` for `s < p^k e`, read off the image code.
    pub fn image_torsions(&self, code: &ConstaCode) -> Result<Vec<FqPoly>> {
        let img = self.image_code(code)?;
        if !img.is_module() {
            return Err(Error::NotClosed("multiplication by v - 1"));
        }
        (0..self.rk.dim()).map(|s| img.torsion(s)).collect()
    }

    /// `Theta` applied to a flattened word over `R`.
    pub fn theta(&self, word: &[Fq]) -> Result<Vec<Fq>> {
        Ok(flatten(&self.map.apply(&self.base, &unflatten(&self.base, word))?))
    }

    pub fn theta_inverse(&self, word: &[Fq]) -> Result<Vec<Fq>> {
        Ok(flatten(&self.map.apply_inverse(&self.base, &unflatten(&self.base, word))?))
    }
}
