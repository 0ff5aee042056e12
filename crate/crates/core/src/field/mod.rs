//! Arithmetic in `F_{p^m}`.
//!
//! Elements are stored as the base-`p` integer of their polynomial-basis
//! coordinates, low-degree digit least significant: over `F_9 = F_3[y]/<y^2+1>`
//! the element `2 + y` is `Fq(2 + 1*3) = Fq(5)`. The same integer is the wire
//! format used by the CLI and JSON reports, and its natural order fixes every
//! lexicographic order in the crate.

mod factor;
mod irreducible;
mod poly;

pub use factor::{factor_xn_minus_1, fq_consta_min_distance};
pub use irreducible::{is_irreducible, is_irreducible_trial};
pub use poly::FqPoly;

use crate::{Error, Result};

/// Largest field order a [`FieldCtx`] will tabulate.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fq(pub u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The field `F_{p^m}` together with log/antilog tables.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    m: usize,
    order: u32,
    /// `p^i` for `i <= m`.
    place: Vec<u32>,
    /// Monic modulus over `F_p`, low degree first. `[0, 1]` for prime fields.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldCtx {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::build(p, 1, None)
    }

    /// Builds `F_{p^m}`.
    ///
    /// When `modulus` is `None` and `m >= 2`, the lexicographically smallest
    /// monic irreducible of degree `m` is selected, comparing coefficient
    /// vectors from the constant term upwards.
    pub fn build(p: u32, m: usize, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if p > 251 {
            return Err(Error::UnsupportedField(format!("p = {p} exceeds 251")));
        }
        if m == 0 {
            return Err(Error::UnsupportedField("m must be positive".into()));
        }
        let order = (p as u64).checked_pow(m as u32).filter(|&q| q <= MAX_FIELD_ORDER);
        let Some(order) = order else {
            return Err(Error::UnsupportedField(format!(
                "{p}^{m} exceeds the supported order {MAX_FIELD_ORDER}"
            )));
        };
        let prime = if m == 1 { None } else { Some(Self::prime(p)?) };
        let modulus = match (modulus, &prime) {
            (Some(f), Some(fp)) => {
                if f.len() != m + 1 || f[m] != 1 || f.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(format!(
                        "expected a monic polynomial of degree {m} over F_{p}"
                    )));
                }
                let poly = FqPoly::new(f.iter().map(|&c| Fq(c)).collect());
                if !is_irreducible(fp, &poly) {
                    return Err(Error::InvalidModulus("modulus is reducible".into()));
                }
                f.to_vec()
            }
            (Some(f), None) => {
                // Prime fields ignore the modulus apart from a degree check.
                if f.len() != 2 || f[1] != 1 || f[0] >= p {
                    return Err(Error::InvalidModulus("expected a monic linear polynomial".into()));
                }
                vec![0, 1]
            }
            (None, Some(fp)) => smallest_irreducible(fp, m),
            (None, None) => vec![0, 1],
        };
        let mut place = Vec::with_capacity(m + 1);
        let mut acc = 1u32;
        for _ in 0..=m {
            place.push(acc);
            acc = acc.saturating_mul(p);
        }
        let mut ctx = FieldCtx {
            p,
            m,
            order: order as u32,
            place,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
        };
        ctx.build_tables();
        Ok(ctx)
    }

    fn build_tables(&mut self) {
        let q = self.order as u64;
        let group = q - 1;
        let factors = prime_factors(group);
        let gen = (1..self.order)
            .map(Fq)
            .find(|&g| factors.iter().all(|&r| self.pow_slow(g, group / r) != Fq::ONE))
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(2 * group as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = Fq::ONE;
        for i in 0..group {
            exp.push(x.0);
            log[x.0 as usize] = i as u32;
            x = self.mul_slow(x, gen);
        }
        let first = exp.clone();
        exp.extend(first);
        self.exp = exp;
        self.log = log;
        if self.order <= 256 {
            let q = self.order;
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = self.add_digits(Fq(a), Fq(b)).0;
                }
            }
            self.add_table = Some(t);
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// The defining modulus over `F_p` (low degree first), `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        (self.m > 1).then_some(self.modulus.as_slice())
    }

    /// The fixed primitive element used by the log tables.
    pub fn primitive(&self) -> Fq {
        Fq(self.exp[1])
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.order).map(Fq)
    }

    /// The basis element `y^j` of the polynomial basis.
    pub fn basis_element(&self, j: usize) -> Fq {
        Fq(self.place[j])
    }

    pub fn digits(&self, a: Fq) -> Vec<u32> {
        let mut v = a.0;
        (0..self.m)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Fq {
        debug_assert_eq!(digits.len(), self.m);
        Fq(digits.iter().rev().fold(0, |acc, &d| acc * self.p + d))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Fq {
        Fq(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn contains(&self, a: Fq) -> bool {
        a.0 < self.order
    }

    fn add_digits(&self, a: Fq, b: Fq) -> Fq {
        if self.m == 1 {
            return Fq((a.0 + b.0) % self.p);
        }
        let (mut x, mut y, mut out) = (a.0, b.0, 0);
        for i in 0..self.m {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * self.place[i];
            x /= self.p;
            y /= self.p;
        }
        Fq(out)
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        match &self.add_table {
            Some(t) => Fq(t[(a.0 * self.order + b.0) as usize]),
            None => self.add_digits(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        if self.m == 1 {
            return Fq((self.p - a.0) % self.p);
        }
        let mut x = a.0;
        let mut out = 0;
        for i in 0..self.m {
            out += ((self.p - x % self.p) % self.p) * self.place[i];
            x /= self.p;
        }
        Fq(out)
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.is_zero() || b.is_zero() {
            return Fq::ZERO;
        }
        Fq(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: Fq) -> Fq {
        assert!(!a.is_zero(), "inverse of zero in F_{}^{}", self.p, self.m);
        let group = self.order - 1;
        Fq(self.exp[((group - self.log[a.0 as usize]) % group) as usize])
    }

    pub fn div(&self, a: Fq, b: Fq) -> Fq {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if e == 0 {
            return Fq::ONE;
        }
        if a.is_zero() {
            return Fq::ZERO;
        }
        let group = (self.order - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % group)) % group;
        Fq(self.exp[l as usize])
    }

    /// Schoolbook multiplication modulo the defining polynomial; used only
    /// while the tables are being built.
    fn mul_slow(&self, a: Fq, b: Fq) -> Fq {
        let p = self.p;
        let m = self.m;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u32; 2 * m];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for d in (m..2 * m).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for (i, &f) in self.modulus.iter().enumerate().take(m) {
                let idx = d - m + i;
                prod[idx] = (prod[idx] + (p - c) * f) % p;
            }
            prod[d] = 0;
        }
        self.from_digits(&prod[..m])
    }

    fn pow_slow(&self, a: Fq, mut e: u64) -> Fq {
        let mut base = a;
        let mut acc = Fq::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

/// Lexicographically smallest monic irreducible of degree `m` over `F_p`,
/// coefficient vectors compared from the constant term up.
fn smallest_irreducible(fp: &FieldCtx, m: usize) -> Vec<u32> {
    let p = fp.p() as u64;
    let count = p.pow(m as u32);
    for idx in 0..count {
        // The constant term is the most significant digit of `idx`.
        let mut coeffs = vec![0u32; m + 1];
        let mut rest = idx;
        for c in coeffs[..m].iter_mut().rev() {
            *c = (rest % p) as u32;
            rest /= p;
        }
        coeffs[m] = 1;
        if coeffs[0] == 0 {
            continue;
        }
        let poly = FqPoly::new(coeffs.iter().map(|&c| Fq(c)).collect());
        if is_irreducible(fp, &poly) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
