use super::{cyclic_shift, CodeSpace};
use crate::field::{FieldCtx, Fq, FqPoly};
use crate::ring::ChainRing;
use crate::{Error, Result};

/// Generators `g_0, ..., g_{e-1}` of the torsion codes of a cyclic code over
/// `R`, with `g_{e-1} | ... | g_0 | x^n - 1`. The zero torsion code is
/// written as `x^n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicTower {
    n: usize,
    gens: Vec<FqPoly>,
}

impl CyclicTower {
    pub fn new(field: &FieldCtx, n: usize, gens: Vec<FqPoly>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidTower("empty tower".into()));
        }
        let modulus = FqPoly::x_n_minus(field, n, Fq::ONE);
        let mut above = &modulus;
        for (s, g) in gens.iter().enumerate() {
            if !g.is_monic() {
                return Err(Error::InvalidTower(format!("g_{s} = {g} is not monic")));
            }
            if !field.poly_divides(g, above) {
                return Err(Error::InvalidTower(format!("g_{s} = {g} does not divide {above}")));
            }
            above = g;
        }
        Ok(CyclicTower { n, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[FqPoly] {
        &self.gens
    }

    /// `m * sum_s (n - deg g_s)`
    pub fn log_size(&self, field: &FieldCtx) -> usize {
        field.m() * self.gens.iter().map(|g| self.n - g.degree().unwrap_or(0)).sum::<usize>()
    }

    /// Whether this tower's code is contained in `other`'s.
    pub fn is_subcode_of(&self, field: &FieldCtx, other: &CyclicTower) -> bool {
        self.n == other.n
            && self.gens.len() == other.gens.len()
            && self.gens.iter().zip(&other.gens).all(|(g, h)| field.poly_divides(h, g))
    }
}

/// The cyclic code `<sum_s u^s g_s(x)>` of length `n` over `R`.
pub fn cyclic_from_tower(ring: &ChainRing, tower: &CyclicTower) -> Result<CodeSpace> {
    let (e, n) = (ring.e(), tower.n);
    if tower.gens.len() != e {
        return Err(Error::LengthMismatch { expected: e, got: tower.gens.len() });
    }
    let field = ring.field();
    let modulus = FqPoly::x_n_minus(field, n, Fq::ONE);
    let mut word = vec![Fq::ZERO; n * e];
    for (s, g) in tower.gens.iter().enumerate() {
        let r = field.poly_rem(g, &modulus)?;
        for (i, &c) in r.coeffs().iter().enumerate() {
            word[i * e + s] = c;
        }
    }
    let mut gens = Vec::with_capacity(n);
    for _ in 0..n {
        let next = cyclic_shift(&word, e);
        gens.push(std::mem::replace(&mut word, next));
    }
    let code = CodeSpace::span_layered(ring.field_arc().clone(), n, e, &gens)?;
    debug_assert_eq!(code.log_size(), tower.log_size(field));
    Ok(code)
}
