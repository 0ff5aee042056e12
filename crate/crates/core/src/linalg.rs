//! Dense linear algebra over `F_{p^m}` on row vectors.

use crate::field::{FieldCtx, Fq};

pub type Rows = Vec<Vec<Fq>>;

/// `dst += c * src`
#[inline]
pub fn axpy(ctx: &FieldCtx, dst: &mut [Fq], c: Fq, src: &[Fq]) {
    if c.is_zero() {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = ctx.add(*d, ctx.mul(c, s));
        }
    }
}

pub fn scale(ctx: &FieldCtx, c: Fq, v: &[Fq]) -> Vec<Fq> {
    v.iter().map(|&x| ctx.mul(c, x)).collect()
}

/// Reduced row-echelon form. Zero rows are dropped; pivots are ascending.
pub fn rref(ctx: &FieldCtx, mut rows: Rows) -> (Rows, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = ctx.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = ctx.mul(inv, *x);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let c = ctx.neg(row[col]);
                axpy(ctx, row, c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Residual of `v` after elimination against an RREF basis.
pub fn reduce(ctx: &FieldCtx, basis: &[Vec<Fq>], pivots: &[usize], v: &[Fq]) -> Vec<Fq> {
    let mut out = v.to_vec();
    for (row, &col) in basis.iter().zip(pivots) {
        if !out[col].is_zero() {
            let c = ctx.neg(out[col]);
            axpy(ctx, &mut out, c, row);
        }
    }
    out
}

pub fn rank(ctx: &FieldCtx, rows: &[Vec<Fq>]) -> usize {
    rref(ctx, rows.to_vec()).0.len()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(ctx: &FieldCtx, a: &[Vec<Fq>]) -> Option<Rows> {
    let n = a.len();
    let aug: Rows = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Fq::ONE } else { Fq::ZERO }));
            r
        })
        .collect();
    let (red, pivots) = rref(ctx, aug);
    if red.len() < n || pivots.iter().take(n).enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Row vector times matrix.
pub fn vec_mat(ctx: &FieldCtx, v: &[Fq], a: &[Vec<Fq>]) -> Vec<Fq> {
    let cols = a.first().map_or(0, Vec::len);
    let mut out = vec![Fq::ZERO; cols];
    for (&c, row) in v.iter().zip(a) {
        axpy(ctx, &mut out, c, row);
    }
    out
}

pub fn mat_mul(ctx: &FieldCtx, a: &[Vec<Fq>], b: &[Vec<Fq>]) -> Rows {
    a.iter().map(|row| vec_mat(ctx, row, b)).collect()
}

/// Kronecker product `a (x) b`: block `(i, j)` is `a[i][j] * b`.
pub fn kron(ctx: &FieldCtx, a: &[Vec<Fq>], b: &[Vec<Fq>]) -> Rows {
    let (br, bc) = (b.len(), b.first().map_or(0, Vec::len));
    let ac = a.first().map_or(0, Vec::len);
    let mut out = vec![vec![Fq::ZERO; ac * bc]; a.len() * br];
    for (i, arow) in a.iter().enumerate() {
        for (j, &x) in arow.iter().enumerate() {
            for (s, brow) in b.iter().enumerate() {
                for (t, &y) in brow.iter().enumerate() {
                    out[i * br + s][j * bc + t] = ctx.mul(x, y);
                }
            }
        }
    }
    out
}
