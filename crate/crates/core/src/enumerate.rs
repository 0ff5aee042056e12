//! Exhaustive minimum-weight search over a linear code.
//!
//! The code is handed over as `F_{p^m}`-rows of a layered word: `len`
//! positions, each carrying `depth` field coordinates (the `u`-adic layers of
//! a ring symbol). A position counts towards the Hamming weight when any of
//! its coordinates is nonzero.
//!
//! Every field coordinate is expanded into `m` prime-field digits so that the
//! code becomes an `F_p`-space spanned by `m * rows` vectors. The message space
//! is then walked in modular `p`-ary Gray order, where each step adds one
//! generator, so a step costs `O(support)` instead of a full re-encode.
//!
//! The message space is split on its top digits into chunks. Chunks are
//! scanned independently (in parallel with the `parallel` feature) and the
//! reduction picks the smallest `(weight, chunk, step)`, so the witness word
//! does not depend on how chunks are scheduled.

use crate::field::{FieldCtx, Fq};
use crate::{Error, Result};

/// Target number of chunks before the remainder is walked by Gray code.
const CHUNK_TARGET: u64 = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeight {
    pub weight: usize,
    /// The minimum-weight word, flattened position-major.
    pub word: Vec<Fq>,
}

#[derive(Clone, Debug)]
pub struct WeightKernel {
    p: u8,
    m: usize,
    len: usize,
    /// Digits per position (`depth * m`).
    width: usize,
    rows: Vec<Vec<u8>>,
    supports: Vec<Vec<u32>>,
}

struct ChunkBest {
    weight: usize,
    digits: Vec<u8>,
}

impl WeightKernel {
    /// `rows` must be linearly independent over `F_{p^m}`; each has
    /// `len * depth` coordinates, position-major.
    pub fn new(ctx: &FieldCtx, len: usize, depth: usize, rows: &[Vec<Fq>]) -> Self {
        let m = ctx.m();
        let width = depth * m;
        let mut out_rows = Vec::with_capacity(rows.len() * m);
        for row in rows {
            debug_assert_eq!(row.len(), len * depth);
            for j in 0..m {
                let scale = ctx.basis_element(j);
                let mut digits = Vec::with_capacity(len * width);
                for &c in row {
                    for d in ctx.digits(ctx.mul(scale, c)) {
                        digits.push(d as u8);
                    }
                }
                out_rows.push(digits);
            }
        }
        let supports = out_rows
            .iter()
            .map(|r| {
                (0..len)
                    .filter(|&pos| r[pos * width..(pos + 1) * width].iter().any(|&d| d != 0))
                    .map(|pos| pos as u32)
                    .collect()
            })
            .collect();
        WeightKernel { p: ctx.p() as u8, m, len, width, rows: out_rows, supports }
    }

    /// Number of codewords, zero included.
    pub fn codeword_count(&self) -> u128 {
        (self.p as u128).checked_pow(self.rows.len() as u32).unwrap_or(u128::MAX)
    }

    pub fn check_limit(&self, limit: u64) -> Result<()> {
        let count = self.codeword_count();
        if count > limit as u128 {
            return Err(Error::ThresholdExceeded { count, limit });
        }
        Ok(())
    }

    fn split(&self) -> (usize, u64) {
        let total = self.rows.len();
        let mut high = 0;
        let mut chunks = 1u64;
        while high < total && chunks < CHUNK_TARGET {
            high += 1;
            chunks *= self.p as u64;
        }
        (total - high, chunks)
    }

    fn add_row(&self, cur: &mut [u8], nz: &mut [u16], weight: &mut usize, r: usize, times: u8) {
        let p = self.p;
        let row = &self.rows[r];
        for &pos in &self.supports[r] {
            let base = pos as usize * self.width;
            let before = nz[pos as usize];
            let mut count = before;
            for d in base..base + self.width {
                let add = row[d];
                if add == 0 {
                    continue;
                }
                let old = cur[d];
                let new = ((old as u16 + add as u16 * times as u16) % p as u16) as u8;
                cur[d] = new;
                match (old == 0, new == 0) {
                    (true, false) => count += 1,
                    (false, true) => count -= 1,
                    _ => {}
                }
            }
            nz[pos as usize] = count;
            match (before == 0, count == 0) {
                (true, false) => *weight += 1,
                (false, true) => *weight -= 1,
                _ => {}
            }
        }
    }

    /// Scans chunk `chunk`: its top digits are fixed by `chunk`, the low
    /// `low` generators are walked in Gray order.
    fn scan_chunk(&self, low: usize, chunk: u64) -> Option<ChunkBest> {
        let p = self.p;
        let mut cur = vec![0u8; self.len * self.width];
        let mut nz = vec![0u16; self.len];
        let mut weight = 0usize;
        let mut rest = chunk;
        for r in low..self.rows.len() {
            let digit = (rest % p as u64) as u8;
            rest /= p as u64;
            if digit != 0 {
                self.add_row(&mut cur, &mut nz, &mut weight, r, digit);
            }
        }
        let mut best: Option<ChunkBest> = None;
        let consider = |weight: usize, cur: &[u8], best: &mut Option<ChunkBest>| {
            if weight > 0 && best.as_ref().is_none_or(|b| weight < b.weight) {
                *best = Some(ChunkBest { weight, digits: cur.to_vec() });
            }
        };
        consider(weight, &cur, &mut best);
        let mut counter = vec![0u8; low];
        loop {
            if best.as_ref().is_some_and(|b| b.weight == 1) {
                break;
            }
            let mut j = 0;
            while j < low && counter[j] == p - 1 {
                counter[j] = 0;
                j += 1;
            }
            if j == low {
                break;
            }
            counter[j] += 1;
            self.add_row(&mut cur, &mut nz, &mut weight, j, 1);
            consider(weight, &cur, &mut best);
        }
        best
    }

    fn finish(&self, best: Option<ChunkBest>) -> Option<MinWeight> {
        best.map(|b| {
            let p = self.p as u32;
            let word = b
                .digits
                .chunks(self.m)
                .map(|ds| Fq(ds.iter().rev().fold(0u32, |acc, &d| acc * p + d as u32)))
                .collect();
            MinWeight { weight: b.weight, word }
        })
    }

    pub fn min_weight_sequential(&self) -> Option<MinWeight> {
        let (low, chunks) = self.split();
        let mut best: Option<ChunkBest> = None;
        for c in 0..chunks {
            if let Some(b) = self.scan_chunk(low, c) {
                if best.as_ref().is_none_or(|x| b.weight < x.weight) {
                    best = Some(b);
                }
            }
            if best.as_ref().is_some_and(|b| b.weight == 1) {
                break;
            }
        }
        self.finish(best)
    }

    #[cfg(feature = "parallel")]
    pub fn min_weight_parallel(&self) -> Option<MinWeight> {
        use rayon::prelude::*;
        let (low, chunks) = self.split();
        let best = (0..chunks)
            .into_par_iter()
            .filter_map(|c| self.scan_chunk(low, c).map(|b| (b.weight, c, b)))
            .min_by_key(|&(w, c, _)| (w, c))
            .map(|(_, _, b)| b);
        self.finish(best)
    }

    /// Minimum nonzero weight and a witness, `None` for the zero code.
    pub fn min_weight(&self) -> Option<MinWeight> {
        #[cfg(feature = "parallel")]
        {
            self.min_weight_parallel()
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.min_weight_sequential()
        }
    }
}
