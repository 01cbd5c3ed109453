//! Exact cyclotomic numbers: elements of ℚ(ζ_N) with ζ_N = exp(2πi/N).
//!
//! A value is stored as a coefficient vector over the powers
//! ζ_N^0, …, ζ_N^{N-1}, kept in canonical form: reduced modulo the N-th
//! cyclotomic polynomial Φ_N and with the conductor shrunk to the
//! smallest cyclotomic field containing the value. Rational numbers are
//! exactly the values with conductor 1, so equality and "is this an
//! integer?" questions are structural.

use crate::rational::{rat_int, rational_to_string, Rational};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Element of the cyclotomic field ℚ(ζ_conductor), in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

/// Coefficients of the n-th cyclotomic polynomial Φ_n, ascending by degree.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    // Build via Φ_n(z) = Π_{d|n} (z^d - 1)^{μ(n/d)}: multiply the μ=1
    // factors together, then divide out the μ=-1 factors exactly.
    let mut numerators = Vec::new();
    let mut denominators = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            match moebius(n / d) {
                1 => numerators.push(d),
                -1 => denominators.push(d),
                _ => {}
            }
        }
    }
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for d in numerators {
        poly = poly_mul_z_pow_minus_one(&poly, d as usize);
    }
    for d in denominators {
        poly = poly_exact_div_z_pow_minus_one(&poly, d as usize);
    }
    poly
}

fn moebius(mut n: u32) -> i32 {
    let mut m = 1i32;
    let mut p = 2u32;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            m = -m;
        }
        p += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}

// p(z) * (z^d - 1)
fn poly_mul_z_pow_minus_one(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

// p(z) / (z^d - 1), exact
fn poly_exact_div_z_pow_minus_one(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = p.to_vec();
    let deg = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); deg.saturating_sub(d) + 1];
    for i in (d..=deg).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - d] = c.clone();
        rem[i] = BigInt::zero();
        rem[i - d] += c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact cyclotomic division");
    quot
}

impl Cyclotomic {
    /// Builds Σ coeffs[j]·ζ_n^j and reduces to canonical form.
    pub fn new(conductor: u32, coeffs: Vec<Rational>) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let mut folded = vec![rat_int(0); conductor as usize];
        for (j, c) in coeffs.into_iter().enumerate() {
            let idx = j % conductor as usize;
            folded[idx] = &folded[idx] + c;
        }
        let mut v = Cyclotomic { conductor, coeffs: folded };
        v.reduce();
        v
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// ζ_n^k
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let idx = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![rat_int(0); n as usize];
        coeffs[idx] = rat_int(1);
        Cyclotomic::new(n, coeffs)
    }

    pub fn zero() -> Self {
        Self::from_rational(rat_int(0))
    }

    pub fn one() -> Self {
        Self::from_rational(rat_int(1))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficient vector over ζ^0 … ζ^{conductor-1}.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_integer(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].denom().is_one()
    }

    pub fn is_nonnegative_integer(&self) -> bool {
        self.is_integer() && !self.coeffs[0].numer().is_negative()
    }

    fn lift_to(&self, conductor: u32) -> Vec<Rational> {
        debug_assert!(conductor % self.conductor == 0);
        let step = (conductor / self.conductor) as usize;
        let mut out = vec![rat_int(0); conductor as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[j * step] = c.clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = num_integer::lcm(self.conductor, other.conductor);
        let mut a = self.lift_to(n);
        for (i, c) in other.lift_to(n).into_iter().enumerate() {
            a[i] = &a[i] + c;
        }
        Cyclotomic::new(n, a)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = num_integer::lcm(self.conductor, other.conductor);
        let a = self.lift_to(n);
        let b = other.lift_to(n);
        let m = n as usize;
        let mut prod = vec![rat_int(0); m];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let idx = (i + j) % m;
                prod[idx] = &prod[idx] + ca * cb;
            }
        }
        Cyclotomic::new(n, prod)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Complex conjugate: ζ^j ↦ ζ^{-j}.
    pub fn conj(&self) -> Self {
        let n = self.conductor as usize;
        let mut out = vec![rat_int(0); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[(n - j) % n] = c.clone();
            }
        }
        Cyclotomic::new(self.conductor, out)
    }

    /// Galois action ζ ↦ ζ^a for gcd(a, conductor) = 1.
    pub fn galois(&self, a: u32) -> Self {
        let n = self.conductor as usize;
        debug_assert!((a as usize).gcd(&n) == 1);
        let mut out = vec![rat_int(0); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let idx = (j * a as usize) % n;
                out[idx] = &out[idx] + c;
            }
        }
        Cyclotomic::new(self.conductor, out)
    }

    // Canonical form: reduce modulo Φ_N, then shrink the conductor while
    // the value lies in a smaller cyclotomic field.
    fn reduce(&mut self) {
        if self.conductor == 1 {
            return;
        }
        self.reduce_mod_cyclotomic();
        loop {
            let n = self.conductor;
            if n == 1 {
                break;
            }
            let mut shrunk = false;
            let mut p = 2u32;
            while p <= n {
                if n % p == 0 {
                    if let Some(smaller) = self.try_express_in(n / p) {
                        *self = smaller;
                        shrunk = true;
                        break;
                    }
                }
                p += 1;
            }
            if !shrunk {
                break;
            }
        }
    }

    fn reduce_mod_cyclotomic(&mut self) {
        let n = self.conductor;
        let phi_n = cyclotomic_polynomial(n);
        let deg_phi = phi_n.len() - 1;
        // Remainder of the coefficient vector modulo Φ_n; Φ_n is monic so
        // the division stays exact over ℚ.
        let mut rem = self.coeffs.clone();
        for i in (deg_phi..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let factor = rem[i].clone();
            rem[i] = rat_int(0);
            for (k, c) in phi_n.iter().enumerate().take(deg_phi) {
                if !c.is_zero() {
                    rem[i - deg_phi + k] = &rem[i - deg_phi + k] - &factor * Rational::from_integer(c.clone());
                }
            }
        }
        rem.truncate(deg_phi.max(1));
        rem.resize(n as usize, rat_int(0));
        self.coeffs = rem;
    }

    // Attempts to rewrite the value over ℚ(ζ_m) for m | conductor by
    // solving for coordinates in the embedded basis ζ_m^i = ζ_n^{i·n/m}.
    fn try_express_in(&self, m: u32) -> Option<Cyclotomic> {
        let n = self.conductor;
        let phi_m = cyclotomic_polynomial(m).len() - 1;
        let phi_m = phi_m.max(1);
        // Basis images: reduce ζ_n^{i n/m} mod Φ_n for i = 0..φ(m)-1.
        let deg_n = (cyclotomic_polynomial(n).len() - 1).max(1);
        let mut basis: Vec<Vec<Rational>> = Vec::with_capacity(phi_m);
        for i in 0..phi_m {
            let img = Cyclotomic::root_of_unity_unreduced(n, (i as u32 * (n / m)) as usize);
            basis.push(img);
        }
        // Solve Σ x_i basis_i = self over the first deg_n coordinates.
        let mut matrix: Vec<Vec<Rational>> = Vec::with_capacity(deg_n);
        for row in 0..deg_n {
            let mut r: Vec<Rational> = basis.iter().map(|b| b[row].clone()).collect();
            r.push(self.coeffs[row].clone());
            matrix.push(r);
        }
        let sol = solve_dense(matrix, phi_m)?;
        let mut coeffs = sol;
        coeffs.resize(m as usize, rat_int(0));
        let mut out = Cyclotomic { conductor: m, coeffs };
        if m > 1 {
            out.reduce_mod_cyclotomic();
        }
        Some(out)
    }

    // ζ_n^k reduced mod Φ_n, as a raw coefficient vector of length n.
    fn root_of_unity_unreduced(n: u32, k: usize) -> Vec<Rational> {
        let mut coeffs = vec![rat_int(0); n as usize];
        coeffs[k % n as usize] = rat_int(1);
        let mut v = Cyclotomic { conductor: n, coeffs };
        v.reduce_mod_cyclotomic();
        v.coeffs
    }
}

// Gaussian elimination for a small dense system with augmented column;
// returns None when inconsistent.
fn solve_dense(mut m: Vec<Vec<Rational>>, unknowns: usize) -> Option<Vec<Rational>> {
    let rows = m.len();
    let mut pivot_rows: Vec<(usize, usize)> = Vec::new();
    let mut r = 0usize;
    for col in 0..unknowns {
        let Some(pr) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][col].clone();
        for i in 0..rows {
            if i != r && !m[i][col].is_zero() {
                let factor = &m[i][col] / &inv;
                for j in col..=unknowns {
                    m[i][j] = &m[i][j] - &factor * &m[r][j];
                }
            }
        }
        pivot_rows.push((r, col));
        r += 1;
        if r == rows {
            break;
        }
    }
    // Inconsistent when a zero row has nonzero RHS.
    for i in r..rows {
        if !m[i][unknowns].is_zero() {
            return None;
        }
    }
    let mut sol = vec![rat_int(0); unknowns];
    for (row, col) in pivot_rows {
        sol[col] = &m[row][unknowns] / &m[row][col];
    }
    Some(sol)
}

mod ring_impl {
    use super::Cyclotomic;
    use crate::rational::Rational;
    use crate::ring::Ring;

    impl Ring for Cyclotomic {
        fn zero() -> Self {
            Cyclotomic::zero()
        }
        fn one() -> Self {
            Cyclotomic::one()
        }
        fn is_zero(&self) -> bool {
            Cyclotomic::is_zero(self)
        }
        fn add(&self, other: &Self) -> Self {
            Cyclotomic::add(self, other)
        }
        fn sub(&self, other: &Self) -> Self {
            Cyclotomic::sub(self, other)
        }
        fn mul(&self, other: &Self) -> Self {
            Cyclotomic::mul(self, other)
        }
        fn neg(&self) -> Self {
            Cyclotomic::neg(self)
        }
        fn from_rational(r: &Rational) -> Self {
            Cyclotomic::from_rational(r.clone())
        }
        fn scale(&self, r: &Rational) -> Self {
            Cyclotomic::scale(self, r)
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = rational_to_string(c);
            let term: String = if j == 0 {
                s
            } else {
                let base = if j == 1 {
                    alloc::format!("z{}", self.conductor)
                } else {
                    alloc::format!("z{}^{}", self.conductor, j)
                };
                if c.is_one() {
                    base
                } else if *c == -rat_int(1) {
                    alloc::format!("-{base}")
                } else {
                    alloc::format!("{s}*{base}")
                }
            };
            if first {
                write!(f, "{term}")?;
                first = false;
            } else if term.starts_with('-') {
                write!(f, "{term}")?;
            } else {
                write!(f, "+{term}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let phi = |n: u32| -> Vec<i64> {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(phi(1), vec![-1, 1]);
        assert_eq!(phi(2), vec![1, 1]);
        assert_eq!(phi(3), vec![1, 1, 1]);
        assert_eq!(phi(4), vec![1, 0, 1]);
        assert_eq!(phi(6), vec![1, -1, 1]);
        assert_eq!(phi(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn root_of_unity_identities() {
        // ζ₃ · ζ₃² = 1
        assert_eq!(z(3, 1).mul(&z(3, 2)), Cyclotomic::one());
        // (1+ζ₃)(1+ζ₃²) = 1, expanding with 1+ζ₃+ζ₃² = 0
        let a = Cyclotomic::one().add(&z(3, 1));
        let b = Cyclotomic::one().add(&z(3, 2));
        assert_eq!(a.mul(&b), Cyclotomic::one());
        // rational embedding: 2/3 · 3/2 = 1
        let r = Cyclotomic::from_rational(rat(2, 3));
        let s = Cyclotomic::from_rational(rat(3, 2));
        assert_eq!(r.mul(&s), Cyclotomic::one());
    }

    #[test]
    fn conductor_shrinks() {
        // ζ₄² = -1 is rational
        let v = z(4, 1).mul(&z(4, 1));
        assert_eq!(v, Cyclotomic::from_int(-1));
        assert!(v.is_integer());
        // ζ₆ lives in conductor 6 but ζ₆² = ζ₃
        assert_eq!(z(6, 2), z(3, 1));
        // 1 + ζ₃ + ζ₃² = 0
        let s = Cyclotomic::one().add(&z(3, 1)).add(&z(3, 2));
        assert!(s.is_zero());
        assert_eq!(s.conductor(), 1);
    }

    #[test]
    fn conjugation_and_galois() {
        assert_eq!(z(5, 1).conj(), z(5, 4));
        assert_eq!(z(5, 2).galois(3), z(5, 6 % 5));
        // |1 + ζ₅|² is real: v · conj(v) equals its own conjugate
        let v = Cyclotomic::one().add(&z(5, 1));
        let norm = v.mul(&v.conj());
        assert_eq!(norm, norm.conj());
    }

    #[test]
    fn mixed_conductor_arithmetic() {
        // ζ₂ = -1 under the hood
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
        let v = z(3, 1).add(&z(4, 1)); // lives in conductor 12
        assert_eq!(v.conductor(), 12);
        let back = v.sub(&z(4, 1));
        assert_eq!(back, z(3, 1));
    }
}
