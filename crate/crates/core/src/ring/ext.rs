use rand::Rng;

use super::{ChainRing, RElem};
use crate::field::{FieldCtx, Fq};
use crate::linalg::{self, Rows};
use crate::{Error, Result};

/// Element of `R_k`, stored by its coefficients of `v^0, ..., v^{p^k - 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RkElem(Vec<RElem>);

impl RkElem {
    pub fn coords(&self) -> &[RElem] {
        &self.0
    }
}

/// Change of basis between monomial coordinates `{u^i v^j}` (index `j*e + i`)
/// and the `(v-1)`-power basis `{(v-1)^s : s < p^k e}`.
#[derive(Clone, Debug)]
pub struct V1Basis {
    /// Row `s` holds the monomial coordinates of `(v-1)^s`.
    forward: Rows,
    inverse: Rows,
}

impl V1Basis {
    pub fn forward(&self) -> &Rows {
        &self.forward
    }

    pub fn inverse(&self) -> &Rows {
        &self.inverse
    }
}

/// `R_k = R[v]/<v^{p^k} - (1 + w u)>`.
#[derive(Clone, Debug)]
pub struct RkRing {
    base: ChainRing,
    k: u32,
    pk: usize,
    omega: RElem,
    /// `1 + w u`
    gamma: RElem,
    basis: V1Basis,
}

impl RkRing {
    pub fn new(base: ChainRing, k: u32, omega: RElem) -> Result<Self> {
        if omega.coeffs().len() != base.e() {
            return Err(Error::LengthMismatch { expected: base.e(), got: omega.coeffs().len() });
        }
        if !base.is_unit(&omega) {
            return Err(Error::NotUnit);
        }
        let pk = (base.field().p() as usize)
            .checked_pow(k)
            .filter(|&pk| pk * base.e() <= 4096)
            .ok_or_else(|| Error::InvalidParams(format!("p^k e too large for k = {k}")))?;
        let gamma = base.add(&base.one(), &base.mul(&omega, &base.u()));
        let mut ring = RkRing {
            base,
            k,
            pk,
            omega,
            gamma,
            basis: V1Basis { forward: Vec::new(), inverse: Vec::new() },
        };
        let dim = ring.dim();
        let vm1 = ring.v_minus_one();
        let mut forward = Vec::with_capacity(dim);
        let mut power = ring.one();
        for _ in 0..dim {
            forward.push(ring.monomial_coords(&power));
            power = ring.mul(&power, &vm1);
        }
        let inverse = linalg::inverse(ring.field(), &forward)
            .ok_or_else(|| Error::Inconsistent("(v-1)-powers are not a basis of R_k".into()))?;
        ring.basis = V1Basis { forward, inverse };
        Ok(ring)
    }

    pub fn base(&self) -> &ChainRing {
        &self.base
    }

    pub fn field(&self) -> &FieldCtx {
        self.base.field()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `p^k`
    pub fn pk(&self) -> usize {
        self.pk
    }

    pub fn omega(&self) -> &RElem {
        &self.omega
    }

    /// `p^k e`, the `F_{p^m}`-dimension of `R_k`.
    pub fn dim(&self) -> usize {
        self.pk * self.base.e()
    }

    pub fn v1_basis(&self) -> &V1Basis {
        &self.basis
    }

    pub fn zero(&self) -> RkElem {
        RkElem(vec![self.base.zero(); self.pk])
    }

    pub fn one(&self) -> RkElem {
        self.from_r(&self.base.one())
    }

    pub fn from_r(&self, a: &RElem) -> RkElem {
        let mut v = vec![self.base.zero(); self.pk];
        v[0] = a.clone();
        RkElem(v)
    }

    pub fn from_coords(&self, coords: Vec<RElem>) -> Result<RkElem> {
        if coords.len() != self.pk {
            return Err(Error::LengthMismatch { expected: self.pk, got: coords.len() });
        }
        Ok(RkElem(coords))
    }

    pub fn v(&self) -> RkElem {
        self.v_pow(1)
    }

    /// `v^i`; uses `v^{p^k} = 1 + w u`.
    pub fn v_pow(&self, i: u64) -> RkElem {
        if self.pk == 1 {
            return self.from_r(&self.base.pow(&self.gamma, i));
        }
        let mut v = vec![self.base.zero(); self.pk];
        v[(i % self.pk as u64) as usize] = self.base.pow(&self.gamma, i / self.pk as u64);
        RkElem(v)
    }

    pub fn v_minus_one(&self) -> RkElem {
        self.sub(&self.v(), &self.one())
    }

    pub fn add(&self, a: &RkElem, b: &RkElem) -> RkElem {
        RkElem(a.0.iter().zip(&b.0).map(|(x, y)| self.base.add(x, y)).collect())
    }

    pub fn sub(&self, a: &RkElem, b: &RkElem) -> RkElem {
        RkElem(a.0.iter().zip(&b.0).map(|(x, y)| self.base.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &RkElem) -> RkElem {
        RkElem(a.0.iter().map(|x| self.base.neg(x)).collect())
    }

    pub fn scale_r(&self, c: &RElem, a: &RkElem) -> RkElem {
        RkElem(a.0.iter().map(|x| self.base.mul(c, x)).collect())
    }

    /// Product reduced with `v^{p^k} = 1 + w u`.
    pub fn mul(&self, a: &RkElem, b: &RkElem) -> RkElem {
        let r = &self.base;
        if self.pk == 1 {
            return RkElem(vec![r.mul(&a.0[0], &b.0[0])]);
        }
        let mut prod = vec![r.zero(); 2 * self.pk - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                prod[i + j] = r.add(&prod[i + j], &r.mul(x, y));
            }
        }
        for d in (self.pk..prod.len()).rev() {
            let c = std::mem::replace(&mut prod[d], r.zero());
            let lowered = r.mul(&c, &self.gamma);
            prod[d - self.pk] = r.add(&prod[d - self.pk], &lowered);
        }
        prod.truncate(self.pk);
        RkElem(prod)
    }

    /// Checked product: both operands must carry `p^k` coordinates of length `e`.
    pub fn checked_mul(&self, a: &RkElem, b: &RkElem) -> Result<RkElem> {
        for x in [a, b] {
            if x.0.len() != self.pk {
                return Err(Error::LengthMismatch { expected: self.pk, got: x.0.len() });
            }
            if let Some(c) = x.0.iter().find(|c| c.coeffs().len() != self.base.e()) {
                return Err(Error::LengthMismatch { expected: self.base.e(), got: c.coeffs().len() });
            }
        }
        Ok(self.mul(a, b))
    }

    pub fn pow(&self, a: &RkElem, mut exp: u64) -> RkElem {
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

    /// Monomial coordinates over `F_{p^m}`, index `j*e + i` for `u^i v^j`.
    pub fn monomial_coords(&self, a: &RkElem) -> Vec<Fq> {
        a.0.iter().flat_map(|c| c.coeffs().iter().copied()).collect()
    }

    pub fn from_monomial_coords(&self, coords: &[Fq]) -> RkElem {
        let e = self.base.e();
        RkElem(
            coords
                .chunks(e)
                .map(|c| self.base.from_coeffs(c.to_vec()).expect("chunk of length e"))
                .collect(),
        )
    }

    /// Coefficients `a_s` with `a = sum_s a_s (v-1)^s`.
    pub fn v1_expansion(&self, a: &RkElem) -> Vec<Fq> {
        linalg::vec_mat(self.field(), &self.monomial_coords(a), &self.basis.inverse)
    }

    pub fn from_v1_expansion(&self, coeffs: &[Fq]) -> RkElem {
        self.from_monomial_coords(&linalg::vec_mat(self.field(), coeffs, &self.basis.forward))
    }

    /// Reduction modulo `v - 1` onto `F_{p^m}`.
    pub fn tau(&self, a: &RkElem) -> Fq {
        self.v1_expansion(a)[0]
    }

    /// Smallest `t` with `(v-1)^t = 0`, found by repeated multiplication.
    pub fn nilpotency_index(&self) -> usize {
        let vm1 = self.v_minus_one();
        let zero = self.zero();
        let mut power = self.one();
        let mut t = 0;
        while power != zero {
            power = self.mul(&power, &vm1);
            t += 1;
            assert!(t <= self.dim() + 1, "v - 1 is not nilpotent");
        }
        t
    }

    /// RREF basis of the ideal `g R_k` as an `F_{p^m}`-space in monomial coordinates.
    pub fn ideal_basis(&self, g: &RkElem) -> Rows {
        let e = self.base.e();
        let rows: Rows = (0..self.pk)
            .flat_map(|j| (0..e).map(move |i| (i, j)))
            .map(|(i, j)| {
                let mono = self.scale_r(&self.base.mul_u_pow(&self.base.one(), i), &self.v_pow(j as u64));
                self.monomial_coords(&self.mul(g, &mono))
            })
            .collect();
        linalg::rref(self.field(), rows).0
    }

    pub fn random<G: Rng + ?Sized>(&self, rng: &mut G) -> RkElem {
        RkElem((0..self.pk).map(|_| self.base.random(rng)).collect())
    }

    /// Every element of `R_k` in encoding order; only sensible for tiny rings.
    pub fn elements(&self) -> impl Iterator<Item = RkElem> + '_ {
        let q = self.field().order() as u64;
        let total = q.saturating_pow(self.dim() as u32);
        (0..total).map(move |mut idx| {
            let coords: Vec<Fq> = (0..self.dim())
                .map(|_| {
                    let c = Fq((idx % q) as u32);
                    idx /= q;
                    c
                })
                .collect();
            self.from_monomial_coords(&coords)
        })
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn rk(p: u32, e: usize, k: u32, omega: &str) -> RkRing {
        let base = ChainRing::new(Arc::new(FieldCtx::prime(p).unwrap()), e).unwrap();
        let w = base.parse(omega).unwrap();
        RkRing::new(base, k, w).unwrap()
    }

    #[test]
    fn defining_relation() {
        let r = rk(3, 2, 2, "1");
        let top = r.v_pow(8);
        let prod = r.mul(&r.v(), &top);
        assert_eq!(prod, r.from_r(&r.base().parse("1,1").unwrap()));
    }

    #[test]
    fn v_minus_one_to_the_pk_is_omega_u() {
        for (p, e, k, w) in [(3, 2, 2, "1"), (2, 3, 1, "1,1"), (3, 2, 1, "2,1"), (2, 2, 2, "1")] {
            let r = rk(p, e, k, w);
            let lhs = r.pow(&r.v_minus_one(), r.pk() as u64);
            let base = r.base();
            let rhs = r.from_r(&base.mul(r.omega(), &base.u()));
            assert_eq!(lhs, rhs);
            assert_eq!(r.nilpotency_index(), r.dim());
        }
    }

    #[test]
    fn nilpotency_indices() {
        assert_eq!(rk(3, 2, 2, "1").nilpotency_index(), 18);
        assert_eq!(rk(2, 2, 1, "1").nilpotency_index(), 4);
        // k = 0: R_0 = R and v - 1 = w u
        assert_eq!(rk(3, 3, 0, "1").nilpotency_index(), 3);
    }

    #[test]
    fn v1_expansions() {
        let r = rk(3, 2, 2, "1");
        let mut expect = vec![Fq::ZERO; r.dim()];
        expect[0] = Fq::ONE;
        assert_eq!(r.v1_expansion(&r.one()), expect);
        expect[1] = Fq::ONE;
        assert_eq!(r.v1_expansion(&r.v()), expect);
        let u = r.from_r(&r.base().u());
        let mut e_u = vec![Fq::ZERO; r.dim()];
        e_u[r.pk()] = Fq::ONE;
        assert_eq!(r.v1_expansion(&u), e_u);
        assert_eq!(r.tau(&u), Fq::ZERO);
        assert_eq!(r.tau(&r.one()), Fq::ONE);
    }

    #[test]
    fn tau_is_multiplicative() {
        let r = rk(3, 2, 1, "2,1");
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = r.field();
        for _ in 0..200 {
            let a = r.random(&mut rng);
            let b = r.random(&mut rng);
            assert_eq!(r.tau(&r.mul(&a, &b)), f.mul(r.tau(&a), r.tau(&b)));
            assert_eq!(r.tau(&r.add(&a, &b)), f.add(r.tau(&a), r.tau(&b)));
            assert_eq!(r.from_v1_expansion(&r.v1_expansion(&a)), a);
        }
    }

    #[test]
    fn rejects_non_unit_omega() {
        let base = ChainRing::new(Arc::new(FieldCtx::prime(3).unwrap()), 2).unwrap();
        let w = base.parse("0,1").unwrap();
        assert_eq!(RkRing::new(base, 1, w).unwrap_err(), Error::NotUnit);
    }

    #[test]
    fn checked_mul_rejects_foreign_elements() {
        let a = rk(3, 2, 1, "1");
        let b = rk(3, 2, 2, "1");
        assert!(a.checked_mul(&a.v(), &b.v()).is_err());
        assert_eq!(a.checked_mul(&a.v(), &a.v()).unwrap(), a.v_pow(2));
    }
}
