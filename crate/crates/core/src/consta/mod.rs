//! `(1+wu)`-constacyclic codes of length `p^k n` over `R` and their
//! matrix-product structure.
//!
//! Every such code is `C = <prod_t f_t^{i_t}>` for the monic irreducible
//! factors `f_t` of `x^n - 1` and exponents `0 <= i_t <= p^k e`. The monomial
//! map `Theta` carries `C` onto `[C_{p^k-1}, ..., C_0] * A_{p^k}`, a
//! matrix-product code of nested cyclic codes of length `n` over `R`.

mod amatrix;
mod distance;
mod family;
mod map;
mod params;
mod verify;

pub use amatrix::{a_matrix, a_matrix_direct, a_matrix_kron, binomial_mod_p};
pub use distance::{
    delta_brute, delta_closed_form, delta_profile, ChildCode, DistanceReport, RecursiveReport, Witness,
    DELTA_CHECK_LIMIT,
};
pub use family::{ConstaCode, ConstaFamily, MPDecomposition};
pub use map::MonomialMap;
pub use params::{derive_params, eta_for_k0, ConstaParams};
pub use verify::{Check, VerificationReport, VerifyMode};

/// Parses `"7,2,18,15"`.
pub fn parse_exponents(text: &str) -> crate::Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| crate::Error::Parse(format!("bad exponent {t:?}")))
        })
        .collect()
}
