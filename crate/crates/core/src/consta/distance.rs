use serde::Serialize;

use super::ConstaFamily;
use crate::codes::{cyclic_from_tower, unflatten};
use crate::field::{fq_consta_min_distance, FieldCtx, Fq, FqPoly};
use crate::ring::RElem;
use crate::{Error, Result};

/// Codes above this size are not enumerated when validating the closed form.
pub const DELTA_CHECK_LIMIT: u64 = 1 << 20;

/// Closed form for the minimum distance `delta_j` of `<(x-1)^{p^k-j}>` in
/// `F[x]/<x^{p^k} - 1>`, for `1 <= j <= p^k`.
pub fn delta_closed_form(p: u64, k: u32, j: u64) -> u64 {
    let pk = p.pow(k);
    assert!((1..=pk).contains(&j), "j = {j} outside 1..={pk}");
    if j == pk {
        return 1;
    }
    for gamma in 1..p {
        let lo = pk - gamma * pk / p;
        if (lo..lo + pk / p).contains(&j) {
            return gamma + 1;
        }
    }
    for s in 1..k {
        let (hi, step) = (p.pow(k - s), p.pow(k - s - 1));
        for t in 1..p {
            let lo = hi - t * step;
            if (lo..lo + step).contains(&j) {
                return (t + 1) * p.pow(s);
            }
        }
    }
    unreachable!("the closed form covers 1..=p^k")
}

/// `delta_j` by enumerating `<(x-1)^{p^k-j}>`.
pub fn delta_brute(field: &FieldCtx, k: u32, j: usize, limit: u64) -> Result<usize> {
    let pk = (field.p() as usize).pow(k);
    let g = field.poly_pow(&FqPoly::new(vec![field.neg(Fq::ONE), Fq::ONE]), pk - j);
    fq_consta_min_distance(field, &g, pk, Fq::ONE, limit)
}

/// `(delta_1, ..., delta_{p^k})` from the closed form, checked against
/// enumeration for every `j` with at most `limit` codewords.
pub fn delta_profile(field: &FieldCtx, k: u32, limit: u64) -> Result<Vec<usize>> {
    let p = field.p() as u64;
    let q = field.order() as u128;
    (1..=p.pow(k))
        .map(|j| {
            let closed = delta_closed_form(p, k, j) as usize;
            if q.checked_pow(j as u32).is_some_and(|c| c <= limit as u128) {
                let brute = delta_brute(field, k, j as usize, limit)?;
                if brute != closed {
                    return Err(Error::Inconsistent(format!(
                        "delta_{j}: closed form gives {closed}, enumeration gives {brute}"
                    )));
                }
            }
            Ok(closed)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    /// `d_rho` for `rho = 0..p^k`; `None` marks a zero constituent.
    pub d_i: Vec<Option<usize>>,
    pub delta: Vec<usize>,
    pub d: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChildCode {
    pub j: usize,
    pub exps: Vec<usize>,
    pub log_size: usize,
    pub d: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursiveReport {
    pub children: Vec<ChildCode>,
    pub d: usize,
}

/// A minimum-weight codeword of `C` built through the decomposition.
#[derive(Clone, Debug)]
pub struct Witness {
    pub rho: usize,
    pub word: Vec<RElem>,
    pub weight: usize,
}

impl ConstaFamily {
    pub fn delta(&self) -> Result<Vec<usize>> {
        self.deltas
            .get_or_init(|| delta_profile(self.base().field(), self.params().k, DELTA_CHECK_LIMIT))
            .clone()
    }

    /// `min_rho delta_{p^k - rho} d_rho` over the nonzero constituents.
    pub fn constacyclic_distance(&self, exps: &[usize], limit: u64) -> Result<DistanceReport> {
        let dec = self.decompose(exps)?;
        let delta = self.delta()?;
        let pk = self.params().pk;
        let d_i = (0..pk)
            .map(|rho| {
                let c = cyclic_from_tower(self.base(), dec.tower(rho))?;
                if c.is_zero() {
                    Ok(None)
                } else {
                    c.min_distance(limit).map(Some)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let d = d_i
            .iter()
            .enumerate()
            .filter_map(|(rho, d)| d.map(|d| delta[pk - rho - 1] * d))
            .min()
            .ok_or(Error::ZeroCode)?;
        Ok(DistanceReport { d_i, delta, d })
    }

    /// Minimum distance through `C ~ [C^(p-1), ..., C^(0)] * A_p`, recursing
    /// down to `k = 0` where the codes are enumerated directly.
    pub fn recursive_distance(&self, exps: &[usize], limit: u64) -> Result<RecursiveReport> {
        let child = self.child()?;
        let kids = self.recurse(exps)?;
        let ap = super::a_matrix(self.base().field(), 1);
        let delta = ap.prefix_distances(self.field_arc(), limit)?;
        let p = kids.len();
        let mut children = Vec::with_capacity(p);
        for (j, kexps) in kids.into_iter().enumerate() {
            let d = child.distance_any(&kexps, limit)?;
            let log_size = child.formula_log_size(&kexps);
            children.push(ChildCode { j, exps: kexps, log_size, d });
        }
        let d = children
            .iter()
            .filter_map(|c| c.d.map(|d| delta[p - 1 - c.j] * d))
            .min()
            .ok_or(Error::ZeroCode)?;
        Ok(RecursiveReport { children, d })
    }

    fn distance_any(&self, exps: &[usize], limit: u64) -> Result<Option<usize>> {
        if self.formula_log_size(exps) == 0 {
            return Ok(None);
        }
        if self.params().k == 0 {
            return self.code(exps)?.space.min_distance(limit).map(Some);
        }
        self.recursive_distance(exps, limit).map(|r| Some(r.d))
    }

    /// Builds `w_b c` blockwise from a minimum-weight word `w` of the prefix
    /// code of `A_{p^k}` and a minimum-weight word `c` of the constituent
    /// achieving the distance, then pulls it back into `C`.
    pub fn min_weight_witness(&self, exps: &[usize], limit: u64) -> Result<Witness> {
        let report = self.constacyclic_distance(exps, limit)?;
        let pk = self.params().pk;
        let rho = (0..pk)
            .filter(|&rho| report.d_i[rho].is_some_and(|d| report.delta[pk - rho - 1] * d == report.d))
            .max()
            .expect("some constituent attains d");
        let dec = self.decompose(exps)?;
        let c = cyclic_from_tower(self.base(), dec.tower(rho))?.min_weight_word(limit)?;
        let w = self.a().prefix_code(self.field_arc(), pk - rho)?.min_weight_word(limit)?;
        let f = self.base().field();
        let mut mp_word = Vec::with_capacity(pk * c.word.len());
        for &wb in &w.word {
            mp_word.extend(c.word.iter().map(|&x| f.mul(wb, x)));
        }
        let pulled = self.theta_inverse(&mp_word)?;
        let code = self.code(exps)?;
        if !code.space.contains(&pulled)? {
            return Err(Error::Inconsistent("pulled-back witness is not a codeword".into()));
        }
        let word = unflatten(self.base(), &pulled);
        let weight = word.iter().filter(|x| !x.is_zero()).count();
        Ok(Witness { rho, word, weight })
    }
}
