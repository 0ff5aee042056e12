use crate::codes::ProductMatrix;
use crate::field::{FieldCtx, Fq};
use crate::linalg;

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// `C(a, b) mod p` by Lucas' theorem.
pub fn binomial_mod_p(mut a: u64, mut b: u64, p: u64) -> u64 {
    let mut acc = 1;
    while (a > 0 || b > 0) && acc != 0 {
        let (ai, bi) = (a % p, b % p);
        if bi > ai {
            return 0;
        }
        let (mut num, mut den) = (1u64, 1u64);
        for t in 0..bi {
            num = num * (ai - t) % p;
            den = den * (t + 1) % p;
        }
        acc = acc * num % p * pow_mod(den, p - 2, p) % p;
        a /= p;
        b /= p;
    }
    acc
}

/// `A_{p^k}` from the entry formula `(-1)^{p^k-i-j+1} C(p^k-i, j-1)`, indices from 1.
pub fn a_matrix_direct(field: &FieldCtx, k: u32) -> Vec<Vec<Fq>> {
    let p = field.p() as u64;
    let pk = p.pow(k) as i64;
    (1..=pk)
        .map(|i| {
            (1..=pk)
                .map(|j| {
                    if pk - i < j - 1 {
                        return Fq::ZERO;
                    }
                    let c = binomial_mod_p((pk - i) as u64, (j - 1) as u64, p) as i64;
                    let sign = if (pk - i - j + 1).rem_euclid(2) == 0 { 1 } else { -1 };
                    field.from_int(sign * c)
                })
                .collect()
        })
        .collect()
}

/// `A_{p^k} = A_p (x) A_{p^{k-1}}`, starting from `A_1 = [1]`.
pub fn a_matrix_kron(field: &FieldCtx, k: u32) -> Vec<Vec<Fq>> {
    let ap = a_matrix_direct(field, 1);
    (0..k).fold(vec![vec![Fq::ONE]], |acc, _| linalg::kron(field, &ap, &acc))
}

/// `A_{p^k}` over `F_{p^m}`; both constructions are computed and must agree.
pub fn a_matrix(field: &FieldCtx, k: u32) -> ProductMatrix {
    let direct = a_matrix_direct(field, k);
    assert_eq!(direct, a_matrix_kron(field, k), "A_(p^k) formula disagrees with its Kronecker form");
    ProductMatrix::new(direct).expect("A_(p^k) is square and nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(a: &[Vec<Fq>]) -> Vec<Vec<u32>> {
        a.iter().map(|r| r.iter().map(|c| c.0).collect()).collect()
    }

    #[test]
    fn lucas_matches_pascal() {
        for p in [2u64, 3, 5, 7] {
            let mut row = vec![1u64];
            for a in 0..40u64 {
                for (b, &c) in row.iter().enumerate() {
                    assert_eq!(binomial_mod_p(a, b as u64, p), c % p, "C({a},{b}) mod {p}");
                }
                assert_eq!(binomial_mod_p(a, a + 1, p), 0);
                let mut next = vec![1u64; row.len() + 1];
                for b in 1..row.len() {
                    next[b] = (row[b - 1] + row[b]) % (p * p * p * p);
                }
                row = next;
            }
        }
    }

    #[test]
    fn small_a_matrices() {
        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(ints(&a_matrix_direct(&f3, 0)), vec![vec![1]]);
        assert_eq!(ints(a_matrix(&f3, 1).rows()), vec![vec![1, 1, 1], vec![2, 1, 0], vec![1, 0, 0]]);
        let a9 = a_matrix(&f3, 2);
        let a3 = a_matrix_direct(&f3, 1);
        // block (I, J) of A_9 is c_IJ * A_3 with c = A_3
        for (bi, brow) in a3.iter().enumerate() {
            for (bj, &c) in brow.iter().enumerate() {
                for s in 0..3 {
                    for t in 0..3 {
                        assert_eq!(a9.rows()[bi * 3 + s][bj * 3 + t], f3.mul(c, a3[s][t]));
                    }
                }
            }
        }
        assert!(!a9.is_nsc(&f3));
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(ints(a_matrix(&f2, 1).rows()), vec![vec![1, 1], vec![1, 0]]);
    }
}
