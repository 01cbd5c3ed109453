//! Small dense exact linear algebra: rational elimination, integer
//! Hermite/Smith normal forms, kernels, and characteristic polynomials.
//!
//! Matrices are row-major `Vec<Vec<_>>`; everything here is desk-scale
//! (dimensions below ~12), so simple cubic algorithms are used
//! throughout.

use crate::rational::Rational;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;
pub type QMat = Vec<Vec<Rational>>;

pub fn identity_int(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn int_to_rat(m: &IMat) -> QMat {
    m.iter()
        .map(|row| row.iter().map(|c| Rational::from_integer(c.clone())).collect())
        .collect()
}

pub fn mat_mul_int(a: &IMat, b: &IMat) -> IMat {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![BigInt::zero(); cols]; rows];
    for i in 0..rows {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                out[i][j] += &a[i][k] * &bk[j];
            }
        }
    }
    out
}

pub fn mat_mul_rat(a: &QMat, b: &QMat) -> QMat {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![Rational::zero(); cols]; rows];
    for i in 0..rows {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                out[i][j] = &out[i][j] + &a[i][k] * &bk[j];
            }
        }
    }
    out
}

pub fn mat_vec_rat(a: &QMat, v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(c, x)| c * x).fold(Rational::zero(), |s, t| s + t))
        .collect()
}

/// Rank over the rationals.
pub fn rat_rank(m: &QMat) -> usize {
    let mut m = m.to_vec();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..rows {
            if i != rank && !m[i][col].is_zero() {
                let f = &m[i][col] / &m[rank][col];
                for j in col..cols {
                    m[i][j] = &m[i][j] - &f * &m[rank][j];
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Solves A·x = b over the rationals; None when inconsistent. Free
/// variables are set to zero.
pub fn rat_solve(a: &QMat, b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: QMat = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0usize;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && !m[i][col].is_zero() {
                let f = &m[i][col] / &m[r][col];
                for j in col..=cols {
                    m[i][j] = &m[i][j] - &f * &m[r][j];
                }
            }
        }
        pivots.push((r, col));
        r += 1;
        if r == rows {
            break;
        }
    }
    for i in r..rows {
        if !m[i][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, col) in pivots {
        x[col] = &m[row][cols] / &m[row][col];
    }
    Some(x)
}

/// Determinant over the rationals.
pub fn rat_det(m: &QMat) -> Rational {
    let n = m.len();
    let mut m = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(col, p);
            det = -det;
        }
        det = det * &m[col][col];
        for i in col + 1..n {
            if !m[i][col].is_zero() {
                let f = &m[i][col] / &m[col][col];
                for j in col..n {
                    m[i][j] = &m[i][j] - &f * &m[col][j];
                }
            }
        }
    }
    det
}

/// Row Hermite form with transformation: returns (H, U) with U·M = H,
/// U unimodular, H in row echelon form with nonnegative pivots.
pub fn row_hnf_with_transform(m: &IMat) -> (IMat, IMat) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut h = m.to_vec();
    let mut u = identity_int(rows);
    let mut r = 0usize;
    for col in 0..cols {
        if r == rows {
            break;
        }
        // clear the column below position r with gcd row operations
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !h[i][col].is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(b) => {
                            if h[i][col].magnitude() < h[b][col].magnitude() {
                                Some(i)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
            }
            let Some(p) = best else {
                break;
            };
            h.swap(r, p);
            u.swap(r, p);
            let mut any = false;
            for i in r + 1..rows {
                if !h[i][col].is_zero() {
                    let q = h[i][col].div_floor(&h[r][col]);
                    if !q.is_zero() {
                        for j in 0..cols {
                            let t = &h[r][j] * &q;
                            h[i][j] -= t;
                        }
                        for j in 0..rows {
                            let t = &u[r][j] * &q;
                            u[i][j] -= t;
                        }
                    }
                    if !h[i][col].is_zero() {
                        any = true;
                    }
                }
            }
            if !any {
                break;
            }
        }
        if !h[r][col].is_zero() {
            if h[r][col].is_negative() {
                for j in 0..cols {
                    h[r][j] = -h[r][j].clone();
                }
                for j in 0..rows {
                    u[r][j] = -u[r][j].clone();
                }
            }
            r += 1;
        }
    }
    (h, u)
}

/// Basis (rows) of the saturated lattice {x ∈ ℤ^n : M·x = 0}.
pub fn integer_kernel(m: &IMat) -> IMat {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    if rows == 0 {
        return identity_int(cols);
    }
    // transpose, then rows of U matching zero rows of H span the kernel
    let mt: IMat = (0..cols).map(|j| (0..rows).map(|i| m[i][j].clone()).collect()).collect();
    let (h, u) = row_hnf_with_transform(&mt);
    let mut out = Vec::new();
    for (i, hrow) in h.iter().enumerate() {
        if hrow.iter().all(|c| c.is_zero()) {
            out.push(u[i].clone());
        }
    }
    out
}

/// Smith normal form data: nonzero elementary divisors d_1 | d_2 | …,
/// plus the unimodular matrix W such that the row lattice of the input
/// equals the lattice spanned by { d_i · (row i of W) }. The first
/// `divisors.len()` rows of W give a basis of the saturation.
pub struct Smith {
    pub divisors: Vec<BigInt>,
    pub w: IMat,
}

pub fn smith_normal_form(m: &IMat) -> Smith {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut d = m.to_vec();
    let mut w = identity_int(cols);
    let k = rows.min(cols);
    let mut t = 0usize;
    while t < k {
        // find a nonzero pivot in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d[i][j].is_zero()
                    && pivot
                        .map(|(pi, pj): (usize, usize)| {
                            d[i][j].magnitude() < d[pi][pj].magnitude()
                        })
                        .unwrap_or(true)
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        d.swap(t, pi);
        if pj != t {
            for row in d.iter_mut() {
                row.swap(t, pj);
            }
            w.swap(t, pj); // inverse of a column swap is the row swap on W
        }
        let mut dirty = false;
        // clear column t with row ops
        for i in t + 1..rows {
            if !d[i][t].is_zero() {
                let q = d[i][t].div_floor(&d[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &d[t][j] * &q;
                        d[i][j] -= v;
                    }
                }
                if !d[i][t].is_zero() {
                    dirty = true;
                }
            }
        }
        // clear row t with column ops, mirroring inverse ops onto W rows
        for j in t + 1..cols {
            if !d[t][j].is_zero() {
                let q = d[t][j].div_floor(&d[t][t]);
                if !q.is_zero() {
                    for row in d.iter_mut() {
                        let v = &row[t] * &q;
                        row[j] -= v;
                    }
                    // col_j -= q·col_t  ⇒  W := E^{-1}·W adds q·row_j to row_t
                    let add: Vec<BigInt> = w[j].iter().map(|c| c * &q).collect();
                    for (c, a) in w[t].iter_mut().zip(add) {
                        *c += a;
                    }
                }
                if !d[t][j].is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue; // pivot shrank; repeat this block
        }
        t += 1;
    }
    // collect nonzero diagonal entries and fix divisibility chain
    let mut divisors: Vec<BigInt> = (0..k).map(|i| d[i][i].abs()).filter(|v| !v.is_zero()).collect();
    // enforce d_i | d_{i+1} by gcd/lcm swaps on the multiset (W rows are
    // only used in the saturated case where all divisors are 1)
    let n = divisors.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = divisors[i].gcd(&divisors[j]);
            let l = if g.is_zero() { BigInt::zero() } else { &divisors[i] / &g * &divisors[j] };
            divisors[i] = g;
            divisors[j] = l;
        }
    }
    Smith { divisors, w }
}

/// Number of lattice points in (equivalently, relative volume of) the
/// half-open parallelepiped spanned by integer vectors: the index of the
/// lattice they generate inside its saturation, i.e. the product of the
/// elementary divisors. None when the vectors are dependent.
pub fn parallelepiped_volume(vectors: &IMat) -> Option<BigInt> {
    if vectors.is_empty() {
        return Some(BigInt::one());
    }
    let rank = rat_rank(&int_to_rat(vectors));
    if rank < vectors.len() {
        return None;
    }
    let smith = smith_normal_form(vectors);
    Some(smith.divisors.iter().product())
}

/// Coefficients of det(I - z·M) for a square rational matrix, ascending
/// in z, via the Faddeev–LeVerrier recurrence for the characteristic
/// polynomial.
pub fn det_one_minus_z(m: &QMat) -> Vec<Rational> {
    let n = m.len();
    // B_0 = I; b_k = -tr(M·B_{k-1})/k; B_k = M·B_{k-1} + b_k·I.
    // Then det(I - zM) = 1 + b_1 z + … + b_n z^n.
    let mut coeffs = vec![Rational::one()];
    let mut b: QMat = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for k in 1..=n {
        let mb = mat_mul_rat(m, &b);
        let bk = -trace(&mb) / Rational::from_integer(BigInt::from(k as i64));
        coeffs.push(bk.clone());
        b = mb;
        for (i, row) in b.iter_mut().enumerate() {
            row[i] = &row[i] + &bk;
        }
    }
    coeffs
}

fn trace(m: &QMat) -> Rational {
    m.iter().enumerate().map(|(i, row)| row[i].clone()).fold(Rational::zero(), |s, t| s + t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn im(rows: &[&[i64]]) -> IMat {
        rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect()
    }

    #[test]
    fn kernel_is_saturated() {
        // kernel of (2  4) in Z^2 is spanned by (2,-1), primitive
        let k = integer_kernel(&im(&[&[2, 4]]));
        assert_eq!(k.len(), 1);
        let g = k[0][0].gcd(&k[0][1]);
        assert_eq!(g, BigInt::one());
        assert!(2 * &k[0][0] + 4 * &k[0][1] == BigInt::zero());
    }

    #[test]
    fn double_kernel_gives_saturation() {
        // rows span a rank-1 sublattice of Z^2 of index 3 in its saturation
        let a = im(&[&[3, 3]]);
        let equations = integer_kernel(&a);
        let sat = integer_kernel(&equations);
        assert_eq!(sat.len(), 1);
        assert_eq!(sat[0][0].abs(), sat[0][1].abs());
        assert_eq!(sat[0][0].abs(), BigInt::one());
    }

    #[test]
    fn parallelepiped_volumes() {
        assert_eq!(parallelepiped_volume(&im(&[&[1, -1]])), Some(BigInt::one()));
        assert_eq!(parallelepiped_volume(&im(&[&[2, 0], &[0, 3]])), Some(BigInt::from(6)));
        assert_eq!(parallelepiped_volume(&im(&[&[1, 1], &[1, -1]])), Some(BigInt::from(2)));
        assert_eq!(parallelepiped_volume(&im(&[&[1, 1], &[2, 2]])), None);
    }

    #[test]
    fn smith_saturated_basis() {
        let b = im(&[&[2, 1, 0], &[0, 1, 1]]);
        let s = smith_normal_form(&b);
        assert_eq!(s.divisors, alloc::vec![BigInt::one(), BigInt::one()]);
        // first two rows of W span the same lattice: check both b-rows
        // are integer combinations of them
        let w2 = alloc::vec![s.w[0].clone(), s.w[1].clone()];
        for row in &b {
            let a: QMat = (0..3)
                .map(|j| (0..2).map(|i| Rational::from_integer(w2[i][j].clone())).collect())
                .collect();
            let rhs: Vec<Rational> =
                row.iter().map(|c| Rational::from_integer(c.clone())).collect();
            let sol = rat_solve(&a, &rhs).expect("consistent");
            assert!(sol.iter().all(|c| c.denom().is_one()));
        }
    }

    #[test]
    fn det_one_minus_z_permutation() {
        // 3-cycle permutation matrix: det(I - zM) = 1 - z^3
        let m: QMat = alloc::vec![
            alloc::vec![rat_int(0), rat_int(0), rat_int(1)],
            alloc::vec![rat_int(1), rat_int(0), rat_int(0)],
            alloc::vec![rat_int(0), rat_int(1), rat_int(0)],
        ];
        let c = det_one_minus_z(&m);
        assert_eq!(c, alloc::vec![rat_int(1), rat_int(0), rat_int(0), rat_int(-1)]);
    }
}
