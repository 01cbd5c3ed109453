//! Rational power series: a numerator polynomial over a structured
//! denominator Π(1-z^a)^m.
//!
//! The denominator is stored in factored form; equality is decided by
//! cross-multiplication so that (1+z)/(1-z²) and 1/(1-z) compare equal.

use crate::poly::Polynomial;
use crate::quasi::Quasipolynomial;
use crate::rational::Rational;
use crate::ring::Ring;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct RationalSeries<R: Ring> {
    numerator: Polynomial<R>,
    /// exponent a ↦ multiplicity m, representing Π (1-z^a)^m
    denominator: BTreeMap<usize, usize>,
}

/// Result of asking a series whether it is secretly a polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum SeriesPolynomial<R: Ring> {
    Polynomial(Polynomial<R>),
    /// Not a polynomial; carries the power-series coefficients up to the
    /// requested degree bound.
    NotPolynomial { coefficients: Vec<R> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonstandardDenominator;

impl core::fmt::Display for NonstandardDenominator {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "series cannot be rewritten over (1-z^N)^D with matching degree bound")
    }
}

impl<R: Ring> RationalSeries<R> {
    pub fn new(numerator: Polynomial<R>, factors: &[(usize, usize)]) -> Self {
        let mut denominator = BTreeMap::new();
        for &(a, m) in factors {
            if m > 0 {
                assert!(a >= 1);
                *denominator.entry(a).or_insert(0) += m;
            }
        }
        RationalSeries { numerator, denominator }
    }

    pub fn from_polynomial(p: Polynomial<R>) -> Self {
        RationalSeries { numerator: p, denominator: BTreeMap::new() }
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn numerator(&self) -> &Polynomial<R> {
        &self.numerator
    }

    /// Denominator factors (a, m), sorted by a.
    pub fn denominator_factors(&self) -> Vec<(usize, usize)> {
        self.denominator.iter().map(|(&a, &m)| (a, m)).collect()
    }

    pub fn denominator_polynomial(&self) -> Polynomial<R> {
        let mut p = Polynomial::one();
        for (&a, &m) in &self.denominator {
            p = p.mul(&Polynomial::one_minus_z_pow(a).pow(m));
        }
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        // common denominator: factor-wise max multiplicity
        let mut common = self.denominator.clone();
        for (&a, &m) in &other.denominator {
            let e = common.entry(a).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |s: &Self| -> Polynomial<R> {
            let mut p = s.numerator.clone();
            for (&a, &m) in &common {
                let have = s.denominator.get(&a).copied().unwrap_or(0);
                if m > have {
                    p = p.mul(&Polynomial::one_minus_z_pow(a).pow(m - have));
                }
            }
            p
        };
        let numerator = lift(self).add(&lift(other));
        RationalSeries { numerator, denominator: common }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut denominator = self.denominator.clone();
        for (&a, &m) in &other.denominator {
            *denominator.entry(a).or_insert(0) += m;
        }
        RationalSeries { numerator: self.numerator.mul(&other.numerator), denominator }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        RationalSeries { numerator: self.numerator.scale(r), denominator: self.denominator.clone() }
    }

    pub fn neg(&self) -> Self {
        RationalSeries { numerator: self.numerator.neg(), denominator: self.denominator.clone() }
    }

    /// Cancels denominator factors (1-z^a) that divide the numerator
    /// exactly; the value of the series is unchanged.
    pub fn reduced(&self) -> Self {
        let mut numerator = self.numerator.clone();
        let mut denominator = BTreeMap::new();
        for (&a, &m) in &self.denominator {
            let factor = Polynomial::one_minus_z_pow(a);
            let mut left = m;
            while left > 0 {
                match numerator.div_exact_unit_leading(&factor) {
                    Some(q) => {
                        numerator = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                denominator.insert(a, left);
            }
        }
        RationalSeries { numerator, denominator }
    }

    /// Power-series coefficients of degrees 0..=degree_bound.
    pub fn coefficients(&self, degree_bound: usize) -> Vec<R> {
        let factors = self.denominator_factors();
        self.numerator.series_coefficients(&factors, degree_bound)
    }

    /// Exact polynomiality test by repeated division; never truncation.
    pub fn to_polynomial(&self, degree_bound: usize) -> SeriesPolynomial<R> {
        match self.reduced() {
            s if s.denominator.is_empty() => SeriesPolynomial::Polynomial(s.numerator),
            _ => SeriesPolynomial::NotPolynomial { coefficients: self.coefficients(degree_bound) },
        }
    }

    /// Degree of the denominator as a polynomial: Σ a·m.
    pub fn denominator_degree(&self) -> usize {
        self.denominator.iter().map(|(&a, &m)| a * m).sum()
    }

    /// Rewrites the series over (1-z^N)^D with N the lcm of the factor
    /// exponents and D the total multiplicity, then reads off the
    /// quasipolynomial of period N whose value at every t ≥ 0 is the t-th
    /// series coefficient. Fails when the series is not proper (numerator
    /// degree not below denominator degree), since no quasipolynomial can
    /// match from t = 0 in that case.
    pub fn to_quasipolynomial(&self) -> Result<Quasipolynomial<R>, NonstandardDenominator> {
        let s = self.reduced();
        if s.numerator.is_zero() {
            return Ok(Quasipolynomial::zero());
        }
        if s.denominator.is_empty() || s.numerator.degree() >= s.denominator_degree() {
            return Err(NonstandardDenominator);
        }
        let mut n = 1usize;
        let mut total = 0usize;
        for (&a, &m) in &s.denominator {
            n = num_integer::lcm(n, a);
            total += m;
        }
        // numerator over (1-z^N)^total
        let mut numer = s.numerator.clone();
        for (&a, &m) in &s.denominator {
            if a != n {
                // (1-z^N)/(1-z^a) = 1 + z^a + z^{2a} + ... + z^{N-a}
                let mut q = Vec::new();
                for i in 0..=(n - a) {
                    if i % a == 0 {
                        q.push(R::one());
                    } else {
                        q.push(R::zero());
                    }
                }
                numer = numer.mul(&Polynomial::new(q).pow(m));
            }
        }
        debug_assert!(numer.degree() <= n * total - 1);
        Ok(Quasipolynomial::from_standard_form(&numer, n, total))
    }
}

impl<R: Ring> PartialEq for RationalSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        // cross-multiplied numerators must agree
        let left = self.numerator.mul(&other.denominator_polynomial());
        let right = other.numerator.mul(&self.denominator_polynomial());
        left == right
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    type QSeries = RationalSeries<Rational>;

    fn poly(v: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(v.iter().map(|&c| rat_int(c)).collect())
    }

    fn geom() -> QSeries {
        QSeries::new(Polynomial::one(), &[(1, 1)])
    }

    #[test]
    fn add_and_mul() {
        let two = geom().add(&geom());
        assert_eq!(two.numerator(), &poly(&[2]));
        assert_eq!(two.denominator_factors(), alloc::vec![(1, 1)]);

        let sq = geom().mul(&geom());
        assert_eq!(sq.denominator_factors(), alloc::vec![(1, 2)]);
        assert_eq!(sq.coefficients(4), alloc::vec![rat_int(1), rat_int(2), rat_int(3), rat_int(4), rat_int(5)]);
    }

    #[test]
    fn reduced_equality() {
        // (1+z)/(1-z²) == 1/(1-z) by cross-multiplication
        let a = QSeries::new(poly(&[1, 1]), &[(2, 1)]);
        assert_eq!(a, geom());
        // whole structural factors cancel greedily by ascending a:
        // (1-z²)/((1-z²)(1-z)) consumes the (1-z) factor first
        let b = QSeries::new(Polynomial::one_minus_z_pow(2), &[(2, 1), (1, 1)]);
        let r = b.reduced();
        assert_eq!(r.numerator(), &poly(&[1, 1]));
        assert_eq!(r.denominator_factors(), alloc::vec![(2, 1)]);
        assert_eq!(r, geom());
    }

    #[test]
    fn polynomiality() {
        // (1-z³)/(1-z) = 1+z+z²
        let s = QSeries::new(Polynomial::one_minus_z_pow(3), &[(1, 1)]);
        assert_eq!(s.to_polynomial(4), SeriesPolynomial::Polynomial(poly(&[1, 1, 1])));
        // (1+z)/(1-z) is not polynomial; coefficients 1,2,2,2,2
        let s = QSeries::new(poly(&[1, 1]), &[(1, 1)]);
        assert_eq!(
            s.to_polynomial(4),
            SeriesPolynomial::NotPolynomial {
                coefficients: alloc::vec![rat_int(1), rat_int(2), rat_int(2), rat_int(2), rat_int(2)]
            }
        );
    }

    #[test]
    fn quasipolynomial_round_trip() {
        // (1+4z+z²)/(1-z)³ evaluates as 3t²+3t+1
        let s = QSeries::new(poly(&[1, 4, 1]), &[(1, 3)]);
        let q = s.to_quasipolynomial().unwrap();
        assert_eq!(q.period(), 1);
        for t in 0..10i64 {
            assert_eq!(q.evaluate(t), rat_int(3 * t * t + 3 * t + 1));
        }
        // 1/(1-z²): period 2, constituents 1 and 0
        let s = QSeries::new(Polynomial::one(), &[(2, 1)]);
        let q = s.to_quasipolynomial().unwrap();
        assert_eq!(q.period(), 2);
        for t in 0..8i64 {
            assert_eq!(q.evaluate(t), rat_int(if t % 2 == 0 { 1 } else { 0 }));
        }
        // 1/(1-z): constant 1
        let q = geom().to_quasipolynomial().unwrap();
        assert_eq!(q.period(), 1);
        assert_eq!(q.evaluate(5), rat_int(1));
    }

    #[test]
    fn improper_series_rejected() {
        let s = QSeries::new(poly(&[0, 0, 0, 1, 1]), &[(1, 1)]);
        assert_eq!(s.to_quasipolynomial(), Err(NonstandardDenominator));
    }

    #[test]
    fn quasipolynomial_matches_series_everywhere() {
        // mixed denominator (1-z)(1-z²)² exercises the lcm rewrite
        let s = QSeries::new(poly(&[2, -1, 3]), &[(1, 1), (2, 2)]);
        let q = s.to_quasipolynomial().unwrap();
        let coeffs = s.coefficients(30);
        for (t, c) in coeffs.iter().enumerate() {
            assert_eq!(&q.evaluate(t as i64), c, "mismatch at t={t}");
        }
    }
}
