use super::{prime_factors, FieldCtx, Fq, FqPoly};

/// Rabin's irreducibility test over `F_q`: `f` of degree `d` is irreducible iff
/// `x^{q^d} = x mod f` and `gcd(x^{q^{d/r}} - x, f) = 1` for every prime `r | d`.
pub fn is_irreducible(ctx: &FieldCtx, f: &FqPoly) -> bool {
    let Some(d) = f.degree() else {
        return false;
    };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let q = ctx.order() as u64;
    let x = FqPoly::x();
    // frob[i] = x^{q^i} mod f
    let mut frob = Vec::with_capacity(d + 1);
    frob.push(ctx.poly_rem(&x, f).expect("nonzero modulus"));
    for i in 0..d {
        let next = ctx.poly_powmod(&frob[i], q, f);
        frob.push(next);
    }
    if frob[d] != frob[0] {
        return false;
    }
    prime_factors(d as u64).into_iter().all(|r| {
        let h = ctx.poly_sub(&frob[d / r as usize], &x);
        ctx.poly_gcd(&h, f) == FqPoly::one()
    })
}

/// Trial division by every monic polynomial of degree `1..=deg f / 2`.
/// Exponential in the degree; kept as an independent check for small inputs.
pub fn is_irreducible_trial(ctx: &FieldCtx, f: &FqPoly) -> bool {
    let Some(d) = f.degree() else {
        return false;
    };
    if d == 0 {
        return false;
    }
    let q = ctx.order() as u64;
    for deg in 1..=d / 2 {
        for idx in 0..q.pow(deg as u32) {
            let mut coeffs = Vec::with_capacity(deg + 1);
            let mut rest = idx;
            for _ in 0..deg {
                coeffs.push(Fq((rest % q) as u32));
                rest /= q;
            }
            coeffs.push(Fq::ONE);
            if ctx.poly_divides(&FqPoly::new(coeffs), f) {
                return false;
            }
        }
    }
    true
}
