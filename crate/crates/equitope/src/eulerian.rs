//! Eulerian polynomials A_n(z), defined by Σ_{t≥0} t^n z^t = A_n(z)/(1-z)^{n+1}.
//!
//! A_0 = 1 by the defining identity. For n ≥ 1, A_n has no constant term
//! and the coefficients of (1/z)A_n(z) are the Eulerian numbers A_{n,k}
//! counting permutations of [n] by ascents.

use crate::poly::Polynomial;
use crate::rational::Rational;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;

/// Eulerian numbers A_{n,k} for k = 0..n-1 (row n ≥ 1).
pub fn eulerian_numbers(n: usize) -> Vec<BigInt> {
    assert!(n >= 1);
    // A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1)
    let mut row: Vec<BigInt> = vec![BigInt::from(1)];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m];
        for k in 0..m {
            let mut v = BigInt::zero();
            if k < row.len() {
                v += BigInt::from((k + 1) as u64) * &row[k];
            }
            if k >= 1 && k - 1 < row.len() {
                v += BigInt::from((m - k) as u64) * &row[k - 1];
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

pub fn eulerian_polynomial(n: usize) -> Polynomial<Rational> {
    if n == 0 {
        return Polynomial::one();
    }
    let numbers = eulerian_numbers(n);
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend(numbers.into_iter().map(Rational::from_integer));
    Polynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use crate::series::RationalSeries;

    #[test]
    fn small_cases() {
        let p = |v: &[i64]| Polynomial::new(v.iter().map(|&c| rat_int(c)).collect::<Vec<_>>());
        assert_eq!(eulerian_polynomial(0), p(&[1]));
        assert_eq!(eulerian_polynomial(1), p(&[0, 1]));
        assert_eq!(eulerian_polynomial(2), p(&[0, 1, 1]));
        assert_eq!(eulerian_polynomial(3), p(&[0, 1, 4, 1]));
    }

    #[test]
    fn defining_identity() {
        // A_n(z)/(1-z)^{n+1} has coefficients t^n
        for n in 0..=5usize {
            let s = RationalSeries::new(eulerian_polynomial(n), &[(1, n + 1)]);
            let coeffs = s.coefficients(8);
            for (t, c) in coeffs.iter().enumerate() {
                let expect = if n == 0 { 1 } else { (t as i64).pow(n as u32) };
                assert_eq!(c, &rat_int(expect), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn row_sums_are_factorials() {
        // A_n(1) = n!
        for n in 0..=7usize {
            let val = eulerian_polynomial(n).eval_rational(&rat_int(1));
            let mut fact = 1i64;
            for j in 1..=n as i64 {
                fact *= j;
            }
            assert_eq!(val, rat_int(fact));
        }
    }
}
