use std::collections::HashMap;

use super::{FieldCtx, Fq, FqPoly};
use crate::enumerate::WeightKernel;
use crate::{Error, Result};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn multiplicative_order(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut x = a % n;
    let mut ord = 1;
    while x != 1 {
        x = x * (a % n) % n;
        ord += 1;
    }
    ord
}

/// The `q`-cyclotomic cosets modulo `n`, each sorted, in order of their least element.
pub(crate) fn cyclotomic_cosets(q: u64, n: u64) -> Vec<Vec<u64>> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = s;
        while !seen[x as usize] {
            seen[x as usize] = true;
            coset.push(x);
            x = x * q % n;
        }
        coset.sort_unstable();
        out.push(coset);
    }
    out
}

/// Monic irreducible factors of `x^n - 1` over `F_{p^m}`, in canonical order
/// (ascending degree, then coefficients from the constant term up).
///
/// Each factor is the minimal polynomial of a cyclotomic coset of roots of
/// unity, computed in the splitting field `F_{p^{m*ord}}` where `ord` is the
/// multiplicative order of `p^m` modulo `n`.
pub fn factor_xn_minus_1(ctx: &FieldCtx, n: usize) -> Result<Vec<FqPoly>> {
    let p = ctx.p() as u64;
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    if gcd(p, n as u64) != 1 {
        return Err(Error::NotCoprime { p, n: n as u64 });
    }
    let q = ctx.order() as u64;
    let ord = multiplicative_order(q, n as u64) as usize;
    let big = FieldCtx::build(ctx.p(), ctx.m() * ord, None)?;
    let embed = embedding(ctx, &big)?;
    let back: HashMap<Fq, Fq> = embed.iter().enumerate().map(|(i, &b)| (b, Fq(i as u32))).collect();

    let big_order = big.order() as u64;
    let zeta = big.pow(big.primitive(), (big_order - 1) / n as u64);
    let mut factors = Vec::new();
    for coset in cyclotomic_cosets(q, n as u64) {
        let mut minpoly = FqPoly::one();
        for &j in &coset {
            let root = big.pow(zeta, j);
            let linear = FqPoly::new(vec![big.neg(root), Fq::ONE]);
            minpoly = big.poly_mul(&minpoly, &linear);
        }
        let coeffs = minpoly
            .coeffs()
            .iter()
            .map(|c| {
                back.get(c).copied().ok_or_else(|| {
                    Error::Inconsistent("minimal polynomial left the base field".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        factors.push(FqPoly::new(coeffs));
    }
    factors.sort_by(|a, b| a.cmp_canonical(b));

    let product = ctx.poly_product(&factors);
    if product != FqPoly::x_n_minus(ctx, n, Fq::ONE) {
        return Err(Error::Inconsistent("factors do not multiply to x^n - 1".into()));
    }
    Ok(factors)
}

/// Field embedding `F_{p^m} -> F_{p^M}` (`m | M`) as a lookup table indexed by
/// the small field's encoding. The generator `y` of the small field is sent to
/// the root of its modulus with the smallest discrete log in the large field.
fn embedding(small: &FieldCtx, big: &FieldCtx) -> Result<Vec<Fq>> {
    if small.m() == 1 {
        return Ok(small.elements().map(|a| Fq(a.0)).collect());
    }
    let modulus: Vec<Fq> = small.modulus().unwrap().iter().map(|&c| Fq(c)).collect();
    let modulus = FqPoly::new(modulus);
    let big_group = big.order() as u64 - 1;
    let small_group = small.order() as u64 - 1;
    let sub_gen = big.pow(big.primitive(), big_group / small_group);
    let root = (0..small_group)
        .map(|i| big.pow(sub_gen, i))
        .find(|&b| big.poly_eval(&modulus, b).is_zero())
        .ok_or_else(|| Error::Inconsistent("no root of the modulus in the extension".into()))?;
    let powers: Vec<Fq> = (0..small.m()).map(|j| big.pow(root, j as u64)).collect();
    Ok(small
        .elements()
        .map(|a| {
            small
                .digits(a)
                .iter()
                .zip(&powers)
                .fold(Fq::ZERO, |acc, (&d, &r)| big.add(acc, big.mul(Fq(d), r)))
        })
        .collect())
}

/// Exact minimum distance of the `gamma`-constacyclic code `<g>` of length `n`
/// over `F_{p^m}`, by enumerating all `q^{n - deg g}` codewords.
pub fn fq_consta_min_distance(
    ctx: &FieldCtx,
    g: &FqPoly,
    n: usize,
    gamma: Fq,
    limit: u64,
) -> Result<usize> {
    let Some(deg) = g.degree() else {
        return Err(Error::ZeroCode);
    };
    let modulus = FqPoly::x_n_minus(ctx, n, gamma);
    if !ctx.poly_divides(g, &modulus) {
        return Err(Error::InvalidParams(format!("{g} does not divide x^{n} - {}", gamma.0)));
    }
    if deg >= n {
        return Err(Error::ZeroCode);
    }
    let rows: Vec<Vec<Fq>> = (0..n - deg)
        .map(|i| {
            let mut row = vec![Fq::ZERO; n];
            row[i..i + deg + 1].copy_from_slice(g.coeffs());
            row
        })
        .collect();
    let kernel = WeightKernel::new(ctx, n, 1, &rows);
    kernel.check_limit(limit)?;
    kernel.min_weight().map(|w| w.weight).ok_or(Error::ZeroCode)
}
