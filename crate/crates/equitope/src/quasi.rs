//! Quasipolynomials: one polynomial constituent per residue class of
//! t mod N. Period 1 is a genuine polynomial.

use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::Ring;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq)]
pub struct Quasipolynomial<R: Ring> {
    period: usize,
    /// constituents[j] is used for t ≡ j (mod period); polynomials in t
    constituents: Vec<Polynomial<R>>,
}

impl<R: Ring> Quasipolynomial<R> {
    pub fn new(constituents: Vec<Polynomial<R>>) -> Self {
        assert!(!constituents.is_empty());
        Quasipolynomial { period: constituents.len(), constituents }.minimized()
    }

    pub fn zero() -> Self {
        Quasipolynomial { period: 1, constituents: vec![Polynomial::zero()] }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn constituents(&self) -> &[Polynomial<R>] {
        &self.constituents
    }

    pub fn is_polynomial(&self) -> bool {
        self.period == 1
    }

    pub fn evaluate(&self, t: i64) -> R {
        let j = t.rem_euclid(self.period as i64) as usize;
        let tv = Rational::from_integer(BigInt::from(t));
        self.constituents[j].eval_rational(&tv)
    }

    /// Largest degree over all constituents.
    pub fn degree(&self) -> usize {
        self.constituents.iter().map(|c| c.degree()).max().unwrap_or(0)
    }

    /// Reduces the period to the smallest divisor with equal constituents.
    fn minimized(self) -> Self {
        let n = self.period;
        'outer: for p in 1..n {
            if n % p != 0 {
                continue;
            }
            for j in 0..n {
                if self.constituents[j] != self.constituents[j % p] {
                    continue 'outer;
                }
            }
            return Quasipolynomial { period: p, constituents: self.constituents[..p].to_vec() };
        }
        self
    }

    /// From a series numerator H over (1-z^N)^D with deg H ≤ ND-1: the
    /// residue-j constituent is Σ_{c ≡ j (N)} H_c · binom((t-c)/N + D-1, D-1).
    pub(crate) fn from_standard_form(numerator: &Polynomial<R>, n: usize, d: usize) -> Self {
        let mut constituents = Vec::with_capacity(n);
        for j in 0..n {
            let mut poly_t: Polynomial<R> = Polynomial::zero();
            let mut c = j;
            while c <= numerator.degree() {
                let hc = numerator.coeff(c);
                if !hc.is_zero() {
                    // binom((t-c)/N + D-1, D-1) as a polynomial in t
                    let mut b: Polynomial<Rational> = Polynomial::one();
                    for i in 0..d.saturating_sub(1) {
                        // factor ((t - c) / N + D - 1 - i)
                        let constant = Rational::new(
                            BigInt::from((n * (d - 1 - i)) as i64 - c as i64),
                            BigInt::from(n as i64),
                        );
                        let linear = Polynomial::new(vec![
                            constant,
                            Rational::new(BigInt::from(1), BigInt::from(n as i64)),
                        ]);
                        b = b.mul(&linear);
                    }
                    let mut fact = BigInt::from(1);
                    for i in 1..d {
                        fact *= BigInt::from(i);
                    }
                    b = b.scale(&Rational::new(BigInt::from(1), fact));
                    let lifted = Polynomial::new(
                        b.coeffs().iter().map(|q| R::from_rational(q).mul(&hc)).collect(),
                    );
                    poly_t = poly_t.add(&lifted);
                }
                c += n;
            }
            constituents.push(poly_t);
        }
        Quasipolynomial::new(constituents)
    }
}
