use std::cmp::Ordering;
use std::fmt;

use super::{FieldCtx, Fq};
use crate::{Error, Result};

/// Polynomial over `F_{p^m}`, coefficients low degree first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FqPoly(Vec<Fq>);

impl FqPoly {
    pub fn new(mut coeffs: Vec<Fq>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FqPoly(coeffs)
    }

    pub fn zero() -> Self {
        FqPoly(Vec::new())
    }

    pub fn one() -> Self {
        FqPoly(vec![Fq::ONE])
    }

    pub fn x() -> Self {
        FqPoly(vec![Fq::ZERO, Fq::ONE])
    }

    pub fn constant(c: Fq) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Fq, deg: usize) -> Self {
        let mut v = vec![Fq::ZERO; deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    /// `x^n - gamma`.
    pub fn x_n_minus(ctx: &FieldCtx, n: usize, gamma: Fq) -> Self {
        let mut v = vec![Fq::ZERO; n + 1];
        v[0] = ctx.neg(gamma);
        v[n] = Fq::ONE;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<Fq> {
        self.0
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Fq {
        self.0.get(i).copied().unwrap_or(Fq::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<Fq> {
        self.0.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Some(Fq::ONE)
    }

    /// Canonical order: degree first, then coefficients from the constant
    /// term upwards.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }

    /// Comma-separated coefficient encodings, low degree first (`"0"` for zero).
    pub fn to_text(&self) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        self.0.iter().map(|c| c.0.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .map(|t| {
                let v: u32 = t
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))?;
                if v >= ctx.order() {
                    return Err(Error::Parse(format!(
                        "coefficient {v} outside F_{}^{}",
                        ctx.p(),
                        ctx.m()
                    )));
                }
                Ok(Fq(v))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.0) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "x")?,
                (1, v) => write!(f, "{v}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                (_, v) => write!(f, "{v}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FieldCtx {
    pub fn poly_add(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let n = a.0.len().max(b.0.len());
        FqPoly::new((0..n).map(|i| self.add(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn poly_sub(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let n = a.0.len().max(b.0.len());
        FqPoly::new((0..n).map(|i| self.sub(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn poly_scale(&self, c: Fq, a: &FqPoly) -> FqPoly {
        FqPoly::new(a.0.iter().map(|&x| self.mul(c, x)).collect())
    }

    pub fn poly_mul(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        if a.is_zero() || b.is_zero() {
            return FqPoly::zero();
        }
        let mut out = vec![Fq::ZERO; a.0.len() + b.0.len() - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        FqPoly::new(out)
    }

    pub fn poly_pow(&self, a: &FqPoly, e: usize) -> FqPoly {
        let mut acc = FqPoly::one();
        for _ in 0..e {
            acc = self.poly_mul(&acc, a);
        }
        acc
    }

    pub fn poly_product<'a>(&self, polys: impl IntoIterator<Item = &'a FqPoly>) -> FqPoly {
        polys.into_iter().fold(FqPoly::one(), |acc, f| self.poly_mul(&acc, f))
    }

    /// Euclidean division: `a = q*b + r` with `deg r < deg b`.
    pub fn poly_divmod(&self, a: &FqPoly, b: &FqPoly) -> Result<(FqPoly, FqPoly)> {
        let Some(db) = b.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = self.inv(b.lead().unwrap());
        let mut rem = a.0.clone();
        if rem.len() <= db {
            return Ok((FqPoly::zero(), a.clone()));
        }
        let mut quot = vec![Fq::ZERO; rem.len() - db];
        for d in (db..rem.len()).rev() {
            let c = rem[d];
            if c.is_zero() {
                continue;
            }
            let f = self.mul(c, lead_inv);
            quot[d - db] = f;
            for (j, &bj) in b.0.iter().enumerate() {
                let idx = d - db + j;
                rem[idx] = self.sub(rem[idx], self.mul(f, bj));
            }
        }
        rem.truncate(db);
        Ok((FqPoly::new(quot), FqPoly::new(rem)))
    }

    pub fn poly_rem(&self, a: &FqPoly, b: &FqPoly) -> Result<FqPoly> {
        Ok(self.poly_divmod(a, b)?.1)
    }

    pub fn poly_divides(&self, d: &FqPoly, a: &FqPoly) -> bool {
        match self.poly_rem(a, d) {
            Ok(r) => r.is_zero(),
            Err(_) => a.is_zero(),
        }
    }

    pub fn poly_monic(&self, a: &FqPoly) -> FqPoly {
        match a.lead() {
            Some(l) => self.poly_scale(self.inv(l), a),
            None => FqPoly::zero(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn poly_gcd(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.poly_rem(&x, &y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        self.poly_monic(&x)
    }

    pub fn poly_mulmod(&self, a: &FqPoly, b: &FqPoly, f: &FqPoly) -> FqPoly {
        self.poly_rem(&self.poly_mul(a, b), f).expect("nonzero modulus")
    }

    pub fn poly_powmod(&self, a: &FqPoly, mut e: u64, f: &FqPoly) -> FqPoly {
        let mut base = self.poly_rem(a, f).expect("nonzero modulus");
        let mut acc = self.poly_rem(&FqPoly::one(), f).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mulmod(&acc, &base, f);
            }
            base = self.poly_mulmod(&base, &base, f);
            e >>= 1;
        }
        acc
    }

    pub fn poly_eval(&self, a: &FqPoly, x: Fq) -> Fq {
        a.0.iter().rev().fold(Fq::ZERO, |acc, &c| self.add(self.mul(acc, x), c))
    }
}
