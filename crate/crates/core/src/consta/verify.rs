use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{ConstaFamily, MPDecomposition};
use crate::codes::CodeSpace;
use crate::field::Fq;
use crate::linalg;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Generators forward, the whole matrix-product basis backward, torsion codes.
    Full,
    /// Random codewords in both directions.
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerificationReport {
    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check { name: name.into(), passed, detail });
        self.passed = self.checks.iter().all(|c| c.passed);
    }

    fn push_result(&mut self, name: &str, r: Result<(bool, String)>) {
        match r {
            Ok((ok, detail)) => self.push(name, ok, detail),
            Err(e) => self.push(name, false, e.to_string()),
        }
    }
}

fn random_codeword(code: &CodeSpace, rng: &mut ChaCha8Rng) -> Vec<Fq> {
    let f = code.field();
    let mut w = vec![Fq::ZERO; code.len() * code.depth()];
    for row in code.basis() {
        linalg::axpy(f, &mut w, Fq(rng.gen_range(0..f.order())), row);
    }
    w
}

fn count_outside(words: impl Iterator<Item = Result<Vec<Fq>>>, code: &CodeSpace) -> Result<(usize, usize)> {
    let (mut total, mut bad) = (0, 0);
    for w in words {
        total += 1;
        if !code.contains(&w?)? {
            bad += 1;
        }
    }
    Ok((total, bad))
}

impl ConstaFamily {
    /// Checks `Theta(C) = [C_{p^k-1}, ..., C_0] * A_{p^k}` for the given exponents.
    pub fn verify_equivalence(&self, exps: &[usize], mode: VerifyMode) -> VerificationReport {
        match self.decompose(exps) {
            Ok(dec) => self.verify_decomposition(exps, &dec, mode),
            Err(e) => {
                let mut rep = VerificationReport::default();
                rep.push("decomposition", false, e.to_string());
                rep
            }
        }
    }

    /// Checks a candidate decomposition of `C`; failures become report
    /// entries rather than errors.
    pub fn verify_decomposition(&self, exps: &[usize], dec: &MPDecomposition, mode: VerifyMode) -> VerificationReport {
        let mut rep = VerificationReport { checks: Vec::new(), passed: true };
        let code = match self.code(exps) {
            Ok(c) => c,
            Err(e) => {
                rep.push("code size matches formula", false, e.to_string());
                return rep;
            }
        };
        let size = code.space.log_size();
        rep.push("code size matches formula", true, format!("log_p |C| = {size}"));
        let base = self.base();
        rep.push("towers nested", dec.is_nested(base), String::new());

        let mp = match dec.constituent_codes(base).and_then(|cs| {
            let sum: usize = cs.iter().map(CodeSpace::log_size).sum();
            Ok((sum, dec.a.matrix_product(&cs)?))
        }) {
            Ok((sum, mp)) => {
                rep.push("constituent sizes sum to code size", sum == size, format!("{sum} vs {size}"));
                mp
            }
            Err(e) => {
                rep.push("matrix-product code", false, e.to_string());
                return rep;
            }
        };
        rep.push(
            "matrix-product size equals code size",
            mp.log_size() == size,
            format!("{} vs {size}", mp.log_size()),
        );

        match mode {
            VerifyMode::Full => {
                let gen = self.reduce_poly(&code.generator);
                let mut shifts = Vec::with_capacity(self.params().big_n);
                let mut cur = gen;
                for _ in 0..self.params().big_n {
                    let next = self.consta_shift(&cur);
                    shifts.push(crate::codes::flatten(&std::mem::replace(&mut cur, next)));
                }
                let fwd = count_outside(shifts.iter().map(|w| self.theta(w)), &mp);
                rep.push_result("images of x^i G lie in the matrix-product code", summary(fwd));
                let back = count_outside(mp.basis().iter().map(|w| self.theta_inverse(w)), &code.space);
                rep.push_result("pullbacks of the matrix-product basis lie in C", summary(back));
                let tors = self.torsion_generators(exps).and_then(|g| {
                    let got = self.image_torsions(&code)?;
                    let bad = g.iter().zip(&got).filter(|(a, b)| a != b).count();
                    Ok((bad == 0, format!("{bad} of {} differ", g.len())))
                });
                rep.push_result("torsion codes of the image match g_s", tors);
            }
            VerifyMode::Sampled { samples, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let fwd: Vec<Vec<Fq>> = (0..samples).map(|_| random_codeword(&code.space, &mut rng)).collect();
                let fwd = count_outside(fwd.iter().map(|w| self.theta(w)), &mp);
                rep.push_result("images of sampled codewords lie in the matrix-product code", summary(fwd));
                let back: Vec<Vec<Fq>> = (0..samples).map(|_| random_codeword(&mp, &mut rng)).collect();
                let back = count_outside(back.iter().map(|w| self.theta_inverse(w)), &code.space);
                rep.push_result("pullbacks of sampled matrix-product codewords lie in C", summary(back));
            }
        }
        rep
    }
}

fn summary(r: Result<(usize, usize)>) -> Result<(bool, String)> {
    r.map(|(total, bad)| (bad == 0, format!("{bad} of {total} outside")))
}
