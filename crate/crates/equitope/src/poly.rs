//! Dense univariate polynomials over a coefficient ring.
//!
//! The coefficient vector is indexed by degree and kept trimmed: the
//! leading coefficient is nonzero unless the polynomial is zero (empty
//! vector).

use crate::rational::{rat_int, Rational};
use crate::ring::Ring;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed};

#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![R::one()] }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The monomial c·z^d.
    pub fn monomial(c: R, d: usize) -> Self {
        let mut coeffs = vec![R::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    /// 1 - z^a
    pub fn one_minus_z_pow(a: usize) -> Self {
        let mut coeffs = vec![R::zero(); a + 1];
        coeffs[0] = R::one();
        coeffs[a] = R::one().neg();
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> R {
        self.coeffs.get(d).cloned().unwrap_or_else(R::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    pub fn scale_ring(&self, r: &R) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul(r)).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitutes z ↦ z^k.
    pub fn compose_z_pow(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut out = vec![R::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[i * k] = c.clone();
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> R {
        let xr = R::from_rational(x);
        self.eval(&xr)
    }

    /// Exact division, valid whenever the divisor's leading coefficient
    /// is 1 or -1. Returns None if a nonzero remainder appears.
    pub fn div_exact_unit_leading(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let lead = divisor.coeffs.last().unwrap();
        let lead_is_one = *lead == R::one();
        let lead_is_minus_one = *lead == R::one().neg();
        assert!(lead_is_one || lead_is_minus_one, "divisor leading coefficient must be a unit");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut quot = vec![R::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = if lead_is_one { rem[i].clone() } else { rem[i].neg() };
            quot[i - dd] = q.clone();
            for (k, c) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + k] = rem[i - dd + k].sub(&q.mul(c));
            }
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Coefficients of the power series self / Π(1-z^{a}) factors up to
    /// `degree_bound` inclusive. Each factor (1-z^a)^m contributes the
    /// recurrence of the geometric series.
    pub fn series_coefficients(&self, denominator: &[(usize, usize)], degree_bound: usize) -> Vec<R> {
        let mut coeffs: Vec<R> = (0..=degree_bound).map(|i| self.coeff(i)).collect();
        for &(a, m) in denominator {
            for _ in 0..m {
                // multiply by 1/(1-z^a): prefix sums with stride a
                for i in a..=degree_bound {
                    coeffs[i] = coeffs[i].add(&coeffs[i - a].clone());
                }
            }
        }
        coeffs
    }
}

impl Polynomial<Rational> {
    /// Division with remainder over the rationals.
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().unwrap();
        let mut quot = vec![rat_int(0); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / lead;
            quot[i - dd] = q.clone();
            for (k, c) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + k] = &rem[i - dd + k] - &q * c;
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divmod(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic gcd over the rationals.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn make_monic(self) -> Self {
        if self.is_zero() {
            return self;
        }
        let lead = self.coeffs.last().unwrap().clone();
        let inv = rat_int(1) / lead;
        self.scale(&inv)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.denom().is_one() && !c.numer().is_negative())
    }
}

/// binom(t + shift, d) expanded as a polynomial in t with rational
/// coefficients: (t+shift)(t+shift-1)⋯(t+shift-d+1)/d!.
pub fn binomial_in_t(shift: i64, d: usize) -> Polynomial<Rational> {
    let mut p = Polynomial::one();
    for j in 0..d {
        let linear = Polynomial::new(vec![
            Rational::from_integer(BigInt::from(shift - j as i64)),
            rat_int(1),
        ]);
        p = p.mul(&linear);
    }
    let mut fact = BigInt::one();
    for j in 1..=d {
        fact *= BigInt::from(j);
    }
    p.scale(&Rational::new(BigInt::one(), fact))
}

/// Exact binomial coefficient binom(n, k) for integer n (possibly
/// negative) and k ≥ 0.
pub fn binomial(n: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k as i64 {
        num *= BigInt::from(n - j);
        den *= BigInt::from(j + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn p(v: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(v.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]); // 1+z
        let b = p(&[1, -1]); // 1-z
        assert_eq!(a.mul(&b), p(&[1, 0, -1]));
        assert_eq!(a.add(&b), p(&[2]));
        assert_eq!(a.pow(2), p(&[1, 2, 1]));
        assert_eq!(a.compose_z_pow(2), p(&[1, 0, 1]));
    }

    #[test]
    fn exact_division() {
        // (1-z³)/(1-z) = 1+z+z²
        let num = Polynomial::<Rational>::one_minus_z_pow(3);
        let den = Polynomial::<Rational>::one_minus_z_pow(1);
        assert_eq!(num.div_exact_unit_leading(&den), Some(p(&[1, 1, 1])));
        // (1+z)/(1-z) is not a polynomial
        assert_eq!(p(&[1, 1]).div_exact_unit_leading(&den), None);
    }

    #[test]
    fn series_expansion() {
        // (1+z)/(1-z) = 1 + 2z + 2z² + ...
        let out = p(&[1, 1]).series_coefficients(&[(1, 1)], 4);
        assert_eq!(out, alloc::vec![rat_int(1), rat_int(2), rat_int(2), rat_int(2), rat_int(2)]);
    }

    #[test]
    fn binomial_polynomials() {
        // binom(t+2, 2) = (t²+3t+2)/2
        let b = binomial_in_t(2, 2);
        assert_eq!(b, Polynomial::new(alloc::vec![rat_int(1), rat(3, 2), rat(1, 2)]));
        assert_eq!(b.eval_rational(&rat_int(3)), rat_int(10));
        assert_eq!(binomial(-3, 2), BigInt::from(6));
        assert_eq!(binomial(5, 2), BigInt::from(10));
    }
}
