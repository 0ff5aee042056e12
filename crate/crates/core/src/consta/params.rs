use serde::Serialize;

use crate::ring::{ChainRing, RElem};
use crate::{Error, Result};

/// Derived integers of a `(1+wu)`-constacyclic family of length `p^k n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstaParams {
    pub p: u64,
    pub m: usize,
    pub e: usize,
    pub k: u32,
    pub n: usize,
    /// `p^k`
    pub pk: usize,
    /// `N = p^k n`
    pub big_n: usize,
    /// smallest `l >= 1` with `p^l >= e`
    pub l: u32,
    /// `p^{k+l}`
    pub pkl: u64,
    /// `n^{-1} mod p^{k+l}`
    pub n_prime: u64,
    /// `n' = q p^k + n''`
    pub q: u64,
    pub n_pp: u64,
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `a^{-1} mod m` by the extended Euclidean algorithm.
pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as u64)
}

pub(crate) fn derive(base: &ChainRing, k: u32, n: usize, omega: &RElem) -> Result<ConstaParams> {
    let f = base.field();
    let (p, e) = (f.p() as u64, base.e());
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    if gcd(p, n as u64) != 1 {
        return Err(Error::NotCoprime { p, n: n as u64 });
    }
    if omega.coeffs().len() != e {
        return Err(Error::LengthMismatch { expected: e, got: omega.coeffs().len() });
    }
    if !base.is_unit(omega) {
        return Err(Error::NotUnit);
    }
    let mut l = 1;
    while p.pow(l) < e as u64 {
        l += 1;
    }
    let pk = p
        .checked_pow(k)
        .filter(|&pk| pk * n as u64 <= 1 << 16)
        .ok_or_else(|| Error::InvalidParams(format!("p^k n too large for k = {k}")))?;
    let pkl = pk * p.pow(l);
    let n_prime = mod_inverse(n as u64, pkl).expect("gcd(n, p) = 1");
    Ok(ConstaParams {
        p,
        m: f.m(),
        e,
        k,
        n,
        pk: pk as usize,
        big_n: pk as usize * n,
        l,
        pkl,
        n_prime,
        q: n_prime / pk,
        n_pp: n_prime % pk,
    })
}

/// Parameters for `k >= 1`.
pub fn derive_params(base: &ChainRing, k: u32, n: usize, omega: &RElem) -> Result<ConstaParams> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1; use eta_for_k0 for k = 0".into()));
    }
    derive(base, k, n, omega)
}

impl ConstaParams {
    /// `rho(j + lambda n) = j + n ((lambda - j n'') mod p^k)`
    pub fn rho(&self, i: usize) -> Result<usize> {
        if i >= self.big_n {
            return Err(Error::OutOfRange { index: i, len: self.big_n });
        }
        let (j, lambda) = (i % self.n, i / self.n);
        let pk = self.pk as i64;
        let shifted = (lambda as i64 - (j as i64 * self.n_pp as i64) % pk).rem_euclid(pk);
        Ok(j + self.n * shifted as usize)
    }
}

/// The unique `eta in R^x` with `eta^n = 1 + w u`, namely `(1+wu)^{n'_0}`
/// with `n'_0 n = 1 mod p^l`.
pub fn eta_for_k0(base: &ChainRing, n: usize, omega: &RElem) -> Result<RElem> {
    let params = derive(base, 0, n, omega)?;
    let gamma = base.add(&base.one(), &base.mul(omega, &base.u()));
    let eta = base.pow(&gamma, params.n_prime);
    if base.pow(&eta, n as u64) != gamma {
        return Err(Error::Inconsistent("eta^n differs from 1 + w u".into()));
    }
    Ok(eta)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::{FieldCtx, Fq};

    fn ring(p: u32, e: usize) -> ChainRing {
        ChainRing::new(Arc::new(FieldCtx::prime(p).unwrap()), e).unwrap()
    }

    #[test]
    fn params_at_n10() {
        let r = ring(3, 2);
        let pr = derive_params(&r, 2, 10, &r.one()).unwrap();
        assert_eq!((pr.l, pr.n_prime, pr.q, pr.n_pp), (1, 19, 2, 1));
        assert_eq!(pr.big_n, 90);
        let got: Vec<usize> = [0, 1, 2, 11, 23, 80, 81, 88, 89].iter().map(|&i| pr.rho(i).unwrap()).collect();
        assert_eq!(got, vec![0, 81, 72, 1, 83, 80, 71, 8, 89]);
        assert!(pr.rho(90).is_err());
    }

    #[test]
    fn small_params() {
        let r = ring(2, 2);
        let pr = derive_params(&r, 1, 3, &r.one()).unwrap();
        assert_eq!((pr.l, pr.n_prime, pr.q, pr.n_pp), (1, 3, 1, 1));
        for k in 1..4 {
            let pr = derive_params(&r, k, 1, &r.one()).unwrap();
            assert_eq!((pr.n_prime, pr.q, pr.n_pp), (1, 0, 1));
        }
        assert_eq!(derive_params(&r, 1, 4, &r.one()).unwrap_err(), Error::NotCoprime { p: 2, n: 4 });
        assert_eq!(derive_params(&r, 1, 3, &r.u()).unwrap_err(), Error::NotUnit);
        assert!(derive_params(&r, 0, 3, &r.one()).is_err());
        assert_eq!(derive_params(&ring(2, 5), 1, 3, &ring(2, 5).one()).unwrap().l, 3);
    }

    #[test]
    fn rho_is_a_bijection() {
        for (p, e, k, n) in [(3, 2, 2, 10), (2, 3, 3, 5), (5, 2, 1, 6), (3, 4, 1, 7)] {
            let r = ring(p, e);
            let pr = derive_params(&r, k, n, &r.one()).unwrap();
            let mut seen = vec![false; pr.big_n];
            for i in 0..pr.big_n {
                seen[pr.rho(i).unwrap()] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn eta_values() {
        let r = ring(3, 2);
        assert_eq!(eta_for_k0(&r, 10, &r.one()).unwrap(), r.parse("1,1").unwrap());
        let w = r.parse("2,1").unwrap();
        // n = 1 mod p^l gives eta = 1 + w u
        assert_eq!(eta_for_k0(&r, 4, &w).unwrap(), r.add(&r.one(), &r.mul(&w, &r.u())));
        assert!(eta_for_k0(&r, 6, &w).is_err());
    }

    /// Unique among units congruent to 1 mod u; for even `n` and odd `p`,
    /// `-eta` is a second root in `R^x`.
    #[test]
    fn eta_is_the_unique_root() {
        for (p, e, n, w) in [(3, 2, 10, "1"), (2, 3, 5, "1,1"), (5, 2, 3, "3,1"), (3, 3, 4, "2")] {
            let r = ring(p, e);
            let w = r.parse(w).unwrap();
            let gamma = r.add(&r.one(), &r.mul(&w, &r.u()));
            let roots: Vec<RElem> =
                r.elements().filter(|a| a.coeffs()[0] == Fq::ONE && r.pow(a, n as u64) == gamma).collect();
            assert_eq!(roots, vec![eta_for_k0(&r, n, &w).unwrap()]);
        }
    }
}
