//! Exact linear programming over the rationals.
//!
//! A dense two-phase simplex with Bland's rule decides feasibility of
//! V-representation membership queries and computes coordinate ranges of
//! convex fibers. Arithmetic runs on an i128-backed rational kernel and
//! falls back to arbitrary precision when any intermediate value
//! overflows, so results are always exact.

use crate::rational::Rational;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arithmetic kernel for the simplex. Operations may fail (overflow),
/// in which case the driver retries with `Rational`.
pub(crate) trait Scalar: Clone {
    fn from_rational(r: &Rational) -> Option<Self>;
    fn to_rational(&self) -> Rational;
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn try_add(&self, o: &Self) -> Option<Self>;
    fn try_sub(&self, o: &Self) -> Option<Self>;
    fn try_mul(&self, o: &Self) -> Option<Self>;
    fn try_div(&self, o: &Self) -> Option<Self>;
    fn try_neg(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Option<Self> {
        Some(r.clone())
    }
    fn to_rational(&self) -> Rational {
        self.clone()
    }
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        <Rational as Signed>::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        <Rational as Signed>::is_negative(self)
    }
    fn try_add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn try_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn try_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn try_neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Rational on i128 with checked arithmetic; denominator kept positive
/// and the fraction reduced.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Q128 {
    n: i128,
    d: i128,
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Q128 {
    fn reduce(n: i128, d: i128) -> Option<Q128> {
        debug_assert!(d != 0);
        let g = gcd_i128(n, d);
        let (mut n, mut d) = if g == 0 { (0, 1) } else { (n / g, d / g) };
        if d < 0 {
            n = n.checked_neg()?;
            d = d.checked_neg()?;
        }
        Some(Q128 { n, d })
    }
}

impl Scalar for Q128 {
    fn from_rational(r: &Rational) -> Option<Self> {
        let n: i128 = r.numer().try_into().ok()?;
        let d: i128 = r.denom().try_into().ok()?;
        // headroom so products of two reduced values stay in range
        if n.abs() > (1 << 96) || d > (1 << 96) {
            return None;
        }
        Q128::reduce(n, d)
    }
    fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.n), BigInt::from(self.d))
    }
    fn zero() -> Self {
        Q128 { n: 0, d: 1 }
    }
    fn is_zero(&self) -> bool {
        self.n == 0
    }
    fn is_positive(&self) -> bool {
        self.n > 0
    }
    fn is_negative(&self) -> bool {
        self.n < 0
    }
    fn try_add(&self, o: &Self) -> Option<Self> {
        let left = self.n.checked_mul(o.d)?;
        let right = o.n.checked_mul(self.d)?;
        Q128::reduce(left.checked_add(right)?, self.d.checked_mul(o.d)?)
    }
    fn try_sub(&self, o: &Self) -> Option<Self> {
        let left = self.n.checked_mul(o.d)?;
        let right = o.n.checked_mul(self.d)?;
        Q128::reduce(left.checked_sub(right)?, self.d.checked_mul(o.d)?)
    }
    fn try_mul(&self, o: &Self) -> Option<Self> {
        Q128::reduce(self.n.checked_mul(o.n)?, self.d.checked_mul(o.d)?)
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        if o.n == 0 {
            return None;
        }
        Q128::reduce(self.n.checked_mul(o.d)?, self.d.checked_mul(o.n)?)
    }
    fn try_neg(&self) -> Option<Self> {
        Some(Q128 { n: self.n.checked_neg()?, d: self.d })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Optimal(Rational),
    Unbounded,
}

/// maximize c·x subject to A x = b, x ≥ 0 (exact).
pub fn solve_equality_form(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    match run::<Q128>(a, b, c) {
        Some(out) => out,
        None => run::<Rational>(a, b, c).expect("rational simplex cannot overflow"),
    }
}

fn run<S: Scalar>(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Option<LpOutcome> {
    let m = a.len();
    let n = if m == 0 { c.len() } else { a[0].len() };
    let width = n + m + 1; // real columns, artificial columns, RHS
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<S> = Vec::with_capacity(width);
        for j in 0..n {
            row.push(S::from_rational(&a[i][j])?);
        }
        for k in 0..m {
            row.push(if k == i {
                S::from_rational(&Rational::one())?
            } else {
                S::zero()
            });
        }
        row.push(S::from_rational(&b[i])?);
        if row[width - 1].is_negative() {
            for v in row.iter_mut() {
                *v = v.try_neg()?;
            }
        }
        rows.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase I: minimize the sum of artificials. The reduced-cost row for
    // maximizing -(sum of artificials) from the all-artificial basis is
    // the columnwise sum of the constraint rows.
    let mut obj: Vec<S> = vec![S::zero(); width];
    for row in &rows {
        for j in 0..width {
            obj[j] = obj[j].try_add(&row[j])?;
        }
    }
    // artificial columns start basic: zero their reduced costs
    for j in n..n + m {
        obj[j] = S::zero();
    }
    loop {
        let Some(enter) = (0..n + m).find(|&j| !basis.contains(&j) && obj[j].is_positive()) else {
            break;
        };
        if !pivot_step(&mut rows, &mut obj, &mut basis, enter, width)? {
            // column nonpositive everywhere: cannot happen in phase I
            // (objective bounded below by 0); treat as no progress
            break;
        }
    }
    if obj[width - 1].is_positive() {
        return Some(LpOutcome::Infeasible);
    }

    // Drive basic artificials out; drop redundant rows.
    let mut keep: Vec<bool> = vec![true; rows.len()];
    for i in 0..rows.len() {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !rows[i][j].is_zero()) {
                pivot_at(&mut rows, &mut obj, i, j, width)?;
                basis[i] = j;
            } else {
                keep[i] = false;
            }
        }
    }
    let mut filtered_rows = Vec::new();
    let mut filtered_basis = Vec::new();
    for (i, k) in keep.iter().enumerate() {
        if *k {
            filtered_rows.push(rows[i].clone());
            filtered_basis.push(basis[i]);
        }
    }
    let mut rows = filtered_rows;
    let mut basis = filtered_basis;

    // Phase II objective: reduced costs of c over the current basis.
    let mut obj: Vec<S> = vec![S::zero(); width];
    for (j, cj) in c.iter().enumerate() {
        obj[j] = S::from_rational(cj)?;
    }
    for (i, &bi) in basis.iter().enumerate() {
        if !obj[bi].is_zero() {
            let factor = obj[bi].clone();
            for j in 0..width {
                obj[j] = obj[j].try_sub(&factor.try_mul(&rows[i][j])?)?;
            }
        }
    }
    loop {
        // Bland: smallest-index real column with positive reduced cost
        let Some(enter) = (0..n).find(|&j| !basis.contains(&j) && obj[j].is_positive()) else {
            break;
        };
        if !pivot_step(&mut rows, &mut obj, &mut basis, enter, width)? {
            return Some(LpOutcome::Unbounded);
        }
    }
    // objective value from the basic solution
    let mut value = S::zero();
    for (i, &bi) in basis.iter().enumerate() {
        if bi < n {
            let cv = S::from_rational(&c[bi])?;
            value = value.try_add(&cv.try_mul(&rows[i][width - 1])?)?;
        }
    }
    Some(LpOutcome::Optimal(value.to_rational()))
}

/// Ratio test (Bland tie-break on basis index) and pivot. Returns
/// Ok(false) when the entering column has no positive entry.
fn pivot_step<S: Scalar>(
    rows: &mut [Vec<S>],
    obj: &mut [S],
    basis: &mut [usize],
    enter: usize,
    width: usize,
) -> Option<bool> {
    let mut leave: Option<usize> = None;
    for i in 0..rows.len() {
        if rows[i][enter].is_positive() {
            let better = match leave {
                None => true,
                Some(l) => {
                    // compare rhs_i / a_i vs rhs_l / a_l by cross-multiplication
                    let lhs = rows[i][width - 1].try_mul(&rows[l][enter])?;
                    let rhs = rows[l][width - 1].try_mul(&rows[i][enter])?;
                    let diff = lhs.try_sub(&rhs)?;
                    diff.is_negative() || (diff.is_zero() && basis[i] < basis[l])
                }
            };
            if better {
                leave = Some(i);
            }
        }
    }
    let Some(r) = leave else {
        return Some(false);
    };
    pivot_at(rows, obj, r, enter, width)?;
    basis[r] = enter;
    Some(true)
}

fn pivot_at<S: Scalar>(
    rows: &mut [Vec<S>],
    obj: &mut [S],
    r: usize,
    c: usize,
    width: usize,
) -> Option<()> {
    let pivot = rows[r][c].clone();
    for j in 0..width {
        rows[r][j] = rows[r][j].try_div(&pivot)?;
    }
    for i in 0..rows.len() {
        if i != r && !rows[i][c].is_zero() {
            let f = rows[i][c].clone();
            for j in 0..width {
                rows[i][j] = rows[i][j].try_sub(&f.try_mul(&rows[r][j])?)?;
            }
        }
    }
    if !obj[c].is_zero() {
        let f = obj[c].clone();
        for j in 0..width {
            obj[j] = obj[j].try_sub(&f.try_mul(&rows[r][j])?)?;
        }
    }
    Some(())
}

/// Is `target` a convex combination of `points`? Exact.
pub fn in_convex_hull(points: &[Vec<Rational>], target: &[Rational]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = target.len();
    let mut a: Vec<Vec<Rational>> = Vec::with_capacity(dim + 1);
    for coord in 0..dim {
        a.push(points.iter().map(|p| p[coord].clone()).collect());
    }
    a.push(vec![Rational::one(); points.len()]);
    let mut b: Vec<Rational> = target.to_vec();
    b.push(Rational::one());
    let c = vec![<Rational as Zero>::zero(); points.len()];
    matches!(solve_equality_form(&a, &b, &c), LpOutcome::Optimal(_))
}

/// Range of coordinate `coord` over the convex hull of `points`
/// intersected with { x[i] = v for (i, v) in pinned }. None when that
/// slice is empty.
pub fn hull_coordinate_range(
    points: &[Vec<Rational>],
    pinned: &[(usize, Rational)],
    coord: usize,
) -> Option<(Rational, Rational)> {
    if points.is_empty() {
        return None;
    }
    let mut a: Vec<Vec<Rational>> = Vec::with_capacity(pinned.len() + 1);
    let mut b: Vec<Rational> = Vec::with_capacity(pinned.len() + 1);
    for (i, v) in pinned {
        a.push(points.iter().map(|p| p[*i].clone()).collect());
        b.push(v.clone());
    }
    a.push(vec![Rational::one(); points.len()]);
    b.push(Rational::one());
    let c_max: Vec<Rational> = points.iter().map(|p| p[coord].clone()).collect();
    let c_min: Vec<Rational> = c_max.iter().map(|v| -v).collect();
    let hi = match solve_equality_form(&a, &b, &c_max) {
        LpOutcome::Optimal(v) => v,
        LpOutcome::Infeasible => return None,
        LpOutcome::Unbounded => unreachable!("convex combinations are bounded"),
    };
    let lo = match solve_equality_form(&a, &b, &c_min) {
        LpOutcome::Optimal(v) => -v,
        LpOutcome::Infeasible => return None,
        LpOutcome::Unbounded => unreachable!("convex combinations are bounded"),
    };
    Some((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|p| p.iter().map(|&c| rat_int(c)).collect()).collect()
    }

    #[test]
    fn hull_membership() {
        let square = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(in_convex_hull(&square, &[rat(1, 2), rat(1, 2)]));
        assert!(in_convex_hull(&square, &[rat_int(1), rat_int(1)]));
        assert!(!in_convex_hull(&square, &[rat(3, 2), rat(1, 2)]));
        assert!(!in_convex_hull(&square, &[rat(1, 2), rat(-1, 10)]));
    }

    #[test]
    fn coordinate_ranges() {
        let triangle = pts(&[&[0, 0], &[2, 0], &[0, 2]]);
        let (lo, hi) = hull_coordinate_range(&triangle, &[], 0).unwrap();
        assert_eq!((lo, hi), (rat_int(0), rat_int(2)));
        let (lo, hi) = hull_coordinate_range(&triangle, &[(0, rat_int(1))], 1).unwrap();
        assert_eq!((lo, hi), (rat_int(0), rat_int(1)));
        assert!(hull_coordinate_range(&triangle, &[(0, rat_int(3))], 1).is_none());
    }

    #[test]
    fn overflow_falls_back_to_bignum() {
        // huge coordinates exceed the i128 conversion guard
        let big = Rational::from_integer(BigInt::from(2).pow(200));
        let seg = alloc::vec![alloc::vec![-big.clone()], alloc::vec![big.clone()]];
        assert!(in_convex_hull(&seg, &[rat_int(3)]));
        assert!(!in_convex_hull(&seg, &[&big * rat_int(2)]));
    }
}
