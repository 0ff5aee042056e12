//! The chain ring `R = F_{p^m}[u]/<u^e>` and its extension
//! `R_k = R[v]/<v^{p^k} - (1 + w u)>`.

mod ext;

pub use ext::{RkElem, RkRing, V1Basis};

use std::sync::Arc;

use rand::Rng;

use crate::field::{FieldCtx, Fq};
use crate::{Error, Result};

/// Element `b_0 + b_1 u + ... + b_{e-1} u^{e-1}` of `R`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RElem(Vec<Fq>);

impl RElem {
    pub fn coeffs(&self) -> &[Fq] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

#[derive(Clone, Debug)]
pub struct ChainRing {
    field: Arc<FieldCtx>,
    e: usize,
}

impl ChainRing {
    pub fn new(field: Arc<FieldCtx>, e: usize) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidParams("e must be positive".into()));
        }
        Ok(ChainRing { field, e })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// `p^{m e}`
    pub fn order(&self) -> u64 {
        (self.field.order() as u64).saturating_pow(self.e as u32)
    }

    pub fn zero(&self) -> RElem {
        RElem(vec![Fq::ZERO; self.e])
    }

    pub fn one(&self) -> RElem {
        self.constant(Fq::ONE)
    }

    pub fn constant(&self, c: Fq) -> RElem {
        let mut v = vec![Fq::ZERO; self.e];
        v[0] = c;
        RElem(v)
    }

    /// `u` (zero when `e = 1`).
    pub fn u(&self) -> RElem {
        let mut v = vec![Fq::ZERO; self.e];
        if self.e > 1 {
            v[1] = Fq::ONE;
        }
        RElem(v)
    }

    pub fn from_coeffs(&self, coeffs: Vec<Fq>) -> Result<RElem> {
        if coeffs.len() != self.e {
            return Err(Error::LengthMismatch { expected: self.e, got: coeffs.len() });
        }
        if let Some(c) = coeffs.iter().find(|c| !self.field.contains(**c)) {
            return Err(Error::Parse(format!("{} is not a field element", c.0)));
        }
        Ok(RElem(coeffs))
    }

    /// The `u`-adic expansion `(b_0, ..., b_{e-1})`.
    pub fn u_adic(&self, a: &RElem) -> Vec<Fq> {
        a.0.clone()
    }

    pub fn add(&self, a: &RElem, b: &RElem) -> RElem {
        RElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.field.add(x, y)).collect())
    }

    pub fn sub(&self, a: &RElem, b: &RElem) -> RElem {
        RElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.field.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &RElem) -> RElem {
        RElem(a.0.iter().map(|&x| self.field.neg(x)).collect())
    }

    pub fn scale(&self, c: Fq, a: &RElem) -> RElem {
        RElem(a.0.iter().map(|&x| self.field.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &RElem, b: &RElem) -> RElem {
        let f = &self.field;
        let mut out = vec![Fq::ZERO; self.e];
        for (i, &x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.0[..self.e - i].iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        RElem(out)
    }

    /// Multiplication by `u^s`: shifts coordinates up, dropping overflow.
    pub fn mul_u_pow(&self, a: &RElem, s: usize) -> RElem {
        let mut out = vec![Fq::ZERO; self.e];
        if s < self.e {
            out[s..].copy_from_slice(&a.0[..self.e - s]);
        }
        RElem(out)
    }

    pub fn pow(&self, a: &RElem, mut exp: u64) -> RElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_unit(&self, a: &RElem) -> bool {
        !a.0[0].is_zero()
    }

    /// `b_0^{-1} * sum_{i<e} (-n)^i` where `a = b_0 (1 + n)` with `n` nilpotent.
    pub fn inverse(&self, a: &RElem) -> Result<RElem> {
        if !self.is_unit(a) {
            return Err(Error::NotUnit);
        }
        let b0_inv = self.field.inv(a.0[0]);
        let normalized = self.scale(b0_inv, a);
        let neg_nil = self.neg(&self.sub(&normalized, &self.one()));
        let mut term = self.one();
        let mut sum = self.one();
        for _ in 1..self.e {
            term = self.mul(&term, &neg_nil);
            sum = self.add(&sum, &term);
        }
        Ok(self.scale(b0_inv, &sum))
    }

    /// Every element, in encoding order (`b_0` fastest).
    pub fn elements(&self) -> impl Iterator<Item = RElem> + '_ {
        let q = self.field.order() as u64;
        (0..self.order()).map(move |mut idx| {
            RElem(
                (0..self.e)
                    .map(|_| {
                        let c = Fq((idx % q) as u32);
                        idx /= q;
                        c
                    })
                    .collect(),
            )
        })
    }

    pub fn random<G: Rng + ?Sized>(&self, rng: &mut G) -> RElem {
        let q = self.field.order();
        RElem((0..self.e).map(|_| Fq(rng.gen_range(0..q))).collect())
    }

    /// `"b0,b1,...,b_{e-1}"`. Shorter inputs are padded with zeros.
    pub fn parse(&self, text: &str) -> Result<RElem> {
        let mut coeffs = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map(Fq)
                    .map_err(|_| Error::Parse(format!("bad ring coordinate {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() > self.e {
            return Err(Error::Parse(format!(
                "ring element {text:?} has more than e = {} coordinates",
                self.e
            )));
        }
        coeffs.resize(self.e, Fq::ZERO);
        self.from_coeffs(coeffs)
    }

    pub fn format(&self, a: &RElem) -> String {
        a.0.iter().map(|c| c.0.to_string()).collect::<Vec<_>>().join(",")
    }
}
