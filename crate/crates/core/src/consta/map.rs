use super::ConstaParams;
use crate::ring::{ChainRing, RElem};
use crate::{Error, Result};

/// `Theta(a)_i = s_i a_{rho(i)}` with units `s_i`, stored as a permutation
/// plus one unit per position.
///
/// Write `i = j + lambda n` and `rho(i) = j + t n`. The coefficient
/// `a_{j+tn}` arrives at `x^{j + (t + j n') n}`, and reducing this with
/// `x^{p^k n} = 1 + wu` gives `s_i = (1+wu)^{floor((t + j n') / p^k)}`. The
/// exponent is `q j` plus a carry of `floor((t + j n'') / p^k)`.
#[derive(Clone, Debug)]
pub struct MonomialMap {
    perm: Vec<usize>,
    scales: Vec<RElem>,
    inv_scales: Vec<RElem>,
}

impl MonomialMap {
    pub fn new(base: &ChainRing, params: &ConstaParams, omega: &RElem) -> Result<Self> {
        Self::build(base, params, omega, true)
    }

    /// The variant without the carry, `s_i = (1+wu)^{q (i mod n)}`. It agrees
    /// with [`MonomialMap::new`] wherever `t + j n'' < p^k`.
    pub fn block_diagonal(base: &ChainRing, params: &ConstaParams, omega: &RElem) -> Result<Self> {
        Self::build(base, params, omega, false)
    }

    fn build(base: &ChainRing, params: &ConstaParams, omega: &RElem, carry: bool) -> Result<Self> {
        let perm = (0..params.big_n).map(|i| params.rho(i)).collect::<Result<Vec<_>>>()?;
        let gamma = base.add(&base.one(), &base.mul(omega, &base.u()));
        let (n, pk) = (params.n as u64, params.pk as u64);
        let scales: Vec<RElem> = (0..params.big_n as u64)
            .map(|i| {
                let (j, lambda) = (i % n, i / n);
                let t = (lambda + pk - j * params.n_pp % pk) % pk;
                let exp = if carry { (t + j * params.n_prime) / pk } else { j * params.q };
                base.pow(&gamma, exp)
            })
            .collect();
        let inv_scales = scales.iter().map(|s| base.inverse(s)).collect::<Result<Vec<_>>>()?;
        Ok(MonomialMap { perm, scales, inv_scales })
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// Diagonal unit at position `i`.
    pub fn scale(&self, i: usize) -> &RElem {
        &self.scales[i]
    }

    fn check(&self, word: &[RElem]) -> Result<()> {
        if word.len() != self.perm.len() {
            return Err(Error::LengthMismatch { expected: self.perm.len(), got: word.len() });
        }
        Ok(())
    }

    pub fn apply(&self, base: &ChainRing, word: &[RElem]) -> Result<Vec<RElem>> {
        self.check(word)?;
        Ok((0..word.len()).map(|i| base.mul(self.scale(i), &word[self.perm[i]])).collect())
    }

    pub fn apply_inverse(&self, base: &ChainRing, word: &[RElem]) -> Result<Vec<RElem>> {
        self.check(word)?;
        let mut out = vec![base.zero(); word.len()];
        for (i, w) in word.iter().enumerate() {
            out[self.perm[i]] = base.mul(&self.inv_scales[i], w);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::consta::derive_params;
    use crate::field::FieldCtx;

    fn weight(w: &[RElem]) -> usize {
        w.iter().filter(|c| !c.is_zero()).count()
    }

    #[test]
    fn scale_at_n10() {
        let r = ChainRing::new(Arc::new(FieldCtx::prime(3).unwrap()), 2).unwrap();
        let pr = derive_params(&r, 2, 10, &r.one()).unwrap();
        let map = MonomialMap::new(&r, &pr, &r.one()).unwrap();
        let mut w = vec![r.zero(); 90];
        w[1] = r.parse("2,1").unwrap();
        let out = map.apply(&r, &w).unwrap();
        assert_eq!(map.scale(11), &r.parse("1,2").unwrap());
        assert_eq!(out[11], r.mul(&r.parse("1,2").unwrap(), &w[1]));
        assert_eq!(weight(&out), 1);
        // i = 12: j = 2, t = 8 carries once past p^k
        assert_eq!(map.permutation()[12], 82);
        assert_eq!(map.scale(12), &r.parse("1,2").unwrap());
        let plain = MonomialMap::block_diagonal(&r, &pr, &r.one()).unwrap();
        assert_eq!(plain.scale(12), &r.parse("1,1").unwrap());
        assert_eq!(plain.scale(11), map.scale(11));
    }

    #[test]
    fn weight_preserving_and_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (p, e, k, n, w) in [(3, 2, 2, 10, "1"), (2, 3, 1, 3, "1,1"), (5, 2, 1, 3, "2,4")] {
            let r = ChainRing::new(Arc::new(FieldCtx::prime(p).unwrap()), e).unwrap();
            let w = r.parse(w).unwrap();
            let pr = derive_params(&r, k, n, &w).unwrap();
            let map = MonomialMap::new(&r, &pr, &w).unwrap();
            for _ in 0..50 {
                let word: Vec<RElem> = (0..pr.big_n)
                    .map(|i| if i % 3 == 0 { r.zero() } else { r.random(&mut rng) })
                    .collect();
                let img = map.apply(&r, &word).unwrap();
                assert_eq!(weight(&img), weight(&word));
                assert_eq!(map.apply_inverse(&r, &img).unwrap(), word);
            }
            assert!(map.apply(&r, &[r.one()]).is_err());
        }
    }

    #[test]
    fn q_zero_is_a_permutation() {
        let r = ChainRing::new(Arc::new(FieldCtx::prime(2).unwrap()), 2).unwrap();
        let pr = derive_params(&r, 2, 1, &r.one()).unwrap();
        assert_eq!(pr.q, 0);
        let map = MonomialMap::new(&r, &pr, &r.one()).unwrap();
        let word: Vec<RElem> = (0..4).map(|i| r.constant(crate::field::Fq(i % 2))).collect();
        let img = map.apply(&r, &word).unwrap();
        for i in 0..4 {
            assert_eq!(img[i], word[map.permutation()[i]]);
        }
    }
}
