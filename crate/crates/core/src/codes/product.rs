use std::sync::Arc;

use super::CodeSpace;
use crate::field::{FieldCtx, Fq};
use crate::linalg::{self, Rows};
use crate::{Error, Result};

/// An `alpha x beta` matrix over `F_{p^m}` with `alpha <= beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductMatrix {
    rows: Rows,
    beta: usize,
}

/// Calls `f` on every `t`-subset of `0..n` in lexicographic order until it
/// returns `false`.
fn for_each_subset(n: usize, t: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut idx: Vec<usize> = (0..t).collect();
    loop {
        if !f(&idx) {
            return false;
        }
        let Some(i) = (0..t).rev().find(|&i| idx[i] < n - t + i) else {
            return true;
        };
        idx[i] += 1;
        for j in i + 1..t {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl ProductMatrix {
    pub fn new(rows: Rows) -> Result<Self> {
        let beta = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || beta == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        if rows.iter().any(|r| r.len() != beta) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        if rows.len() > beta {
            return Err(Error::InvalidMatrix(format!("{} rows exceed {beta} columns", rows.len())));
        }
        Ok(ProductMatrix { rows, beta })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Fq::ONE } else { Fq::ZERO }).collect())
            .collect();
        ProductMatrix { rows, beta: n }
    }

    pub fn rows(&self) -> &Rows {
        &self.rows
    }

    pub fn alpha(&self) -> usize {
        self.rows.len()
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn is_frr(&self, field: &FieldCtx) -> bool {
        linalg::rank(field, &self.rows) == self.alpha()
    }

    /// Every `t x t` minor taken from the first `t` rows is nonsingular.
    pub fn is_nsc(&self, field: &FieldCtx) -> bool {
        (1..=self.alpha()).all(|t| {
            for_each_subset(self.beta, t, |cols| {
                let minor: Rows =
                    self.rows[..t].iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
                linalg::rank(field, &minor) == t
            })
        })
    }

    /// The length-`beta` code spanned by the first `i` rows.
    pub fn prefix_code(&self, field: &Arc<FieldCtx>, i: usize) -> Result<CodeSpace> {
        if i == 0 || i > self.alpha() {
            return Err(Error::OutOfRange { index: i, len: self.alpha() + 1 });
        }
        if let Some(z) = self.rows[..i].iter().position(|r| r.iter().all(|c| c.is_zero())) {
            return Err(Error::InvalidMatrix(format!("row {} is zero", z + 1)));
        }
        CodeSpace::from_rows(field.clone(), self.beta, 1, self.rows[..i].to_vec())
    }

    /// `delta_i`, the minimum distance of the prefix code of the first `i` rows.
    pub fn prefix_distances(&self, field: &Arc<FieldCtx>, limit: u64) -> Result<Vec<usize>> {
        (1..=self.alpha()).map(|i| self.prefix_code(field, i)?.min_distance(limit)).collect()
    }

    /// `[C_1, ..., C_alpha] * A`, flattened column-major: position `j * n + r`
    /// holds `sum_i a_ij c_i[r]`.
    pub fn matrix_product(&self, codes: &[CodeSpace]) -> Result<CodeSpace> {
        if codes.len() != self.alpha() {
            return Err(Error::LengthMismatch { expected: self.alpha(), got: codes.len() });
        }
        let (n, depth) = (codes[0].len(), codes[0].depth());
        if let Some(c) = codes.iter().find(|c| c.len() != n || c.depth() != depth) {
            return Err(Error::LengthMismatch { expected: n, got: c.len() });
        }
        let field = codes[0].field_arc().clone();
        let width = n * depth;
        let mut rows = Vec::new();
        for (code, arow) in codes.iter().zip(&self.rows) {
            for b in code.basis() {
                let mut row = vec![Fq::ZERO; width * self.beta];
                for (j, &a) in arow.iter().enumerate() {
                    linalg::axpy(&field, &mut row[j * width..(j + 1) * width], a, b);
                }
                rows.push(row);
            }
        }
        CodeSpace::from_rows(field, n * self.beta, depth, rows)
    }

    /// `min_i delta_i d_i`, the distance of a matrix-product code whose
    /// constituents are nested with distances `d`.
    pub fn mp_distance(&self, field: &Arc<FieldCtx>, d: &[usize], limit: u64) -> Result<usize> {
        if d.len() != self.alpha() {
            return Err(Error::LengthMismatch { expected: self.alpha(), got: d.len() });
        }
        let deltas = self.prefix_distances(field, limit)?;
        Ok(deltas.iter().zip(d).map(|(a, b)| a * b).min().expect("alpha >= 1"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ChainRing;
    use crate::DEFAULT_ENUM_LIMIT;

    fn f3() -> Arc<FieldCtx> {
        Arc::new(FieldCtx::prime(3).unwrap())
    }

    fn a3(f: &FieldCtx) -> ProductMatrix {
        let v = [[1, 1, 1], [2, 1, 0], [1, 0, 0]];
        ProductMatrix::new(v.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn nsc_and_frr() {
        let f = f3();
        assert!(a3(&f).is_nsc(&f));
        assert!(a3(&f).is_frr(&f));
        let id = ProductMatrix::identity(2);
        assert!(id.is_frr(&f));
        assert!(!id.is_nsc(&f));
    }

    #[test]
    fn subsets_are_enumerated() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
    }

    #[test]
    fn product_sizes_and_distance() {
        let f = f3();
        let r = ChainRing::new(f.clone(), 2).unwrap();
        let mut g = vec![r.zero(); 4];
        g[0] = r.one();
        g[1] = r.one();
        let c = CodeSpace::span(&r, 4, &[g]).unwrap();
        let one = ProductMatrix::new(vec![vec![Fq::ONE]]).unwrap();
        assert_eq!(one.matrix_product(std::slice::from_ref(&c)).unwrap(), c);
        let full = CodeSpace::full(f.clone(), 4, 2);
        let codes = [full.clone(), c.clone(), c.clone()];
        let id = ProductMatrix::identity(3);
        let mp = id.matrix_product(&codes).unwrap();
        assert_eq!(mp.log_size(), 8 + 2 + 2);
        let a = a3(&f);
        let mp = a.matrix_product(&codes).unwrap();
        assert_eq!(mp.log_size(), 12);
        let d = [full.min_distance(DEFAULT_ENUM_LIMIT).unwrap(), 2, 2];
        assert_eq!(a.mp_distance(&f, &d, DEFAULT_ENUM_LIMIT).unwrap(), 2);
        assert_eq!(mp.min_distance(DEFAULT_ENUM_LIMIT).unwrap(), 2);
        assert_eq!(a.mp_distance(&f, &[2, 2, 2], DEFAULT_ENUM_LIMIT).unwrap(), 2);
        assert_eq!(a.mp_distance(&f, &[5, 5, 5], DEFAULT_ENUM_LIMIT).unwrap(), 5);
        assert_eq!(id.mp_distance(&f, &[4, 3, 7], DEFAULT_ENUM_LIMIT).unwrap(), 3);
    }

    #[test]
    fn zero_rows_are_rejected() {
        let f = f3();
        let a = ProductMatrix::new(vec![vec![Fq::ZERO, Fq::ZERO], vec![Fq::ONE, Fq::ZERO]]).unwrap();
        assert!(matches!(a.prefix_distances(&f, 100), Err(Error::InvalidMatrix(_))));
        assert!(ProductMatrix::new(vec![vec![Fq::ONE]; 2]).is_err());
    }
}
