//! Rational polytopes in V-representation: exact membership, lattice
//! point enumeration, dilation, faces, and Ehrhart series.
//!
//! A polytope carries its affine lattice M' = ℤ^{n+1} ∩ span{(v,1)},
//! computed by saturation; every lattice point of every dilate lies in
//! M', which is the lattice the group representation is restricted to.

use crate::linalg::{self, IMat, QMat};
use crate::lp;
use crate::poly::{binomial_in_t, Polynomial};
use crate::rational::{common_denominator, Rational};
use crate::series::RationalSeries;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeError {
    NoVertices,
    DimensionMismatch,
    /// the fitted Ehrhart series disagreed with a recounted dilate
    VerificationFailed,
    DimensionTooLarge,
    DegreeExceedsDimension,
}

impl fmt::Display for PolytopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeError::NoVertices => write!(f, "polytope needs at least one vertex"),
            PolytopeError::DimensionMismatch => write!(f, "point dimension does not match"),
            PolytopeError::VerificationFailed => {
                write!(f, "Ehrhart series failed verification on extra dilates")
            }
            PolytopeError::DimensionTooLarge => write!(f, "dimension exceeds the supported range"),
            PolytopeError::DegreeExceedsDimension => {
                write!(f, "h* degree exceeds the polytope dimension")
            }
        }
    }
}

/// Face of a polytope, recorded as the set of vertices maximizing some
/// rational linear functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertex_subset: Vec<usize>,
    pub dim: usize,
}

/// Rational polytope given by its vertices.
#[derive(Clone)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<Rational>>,
    dim: usize,
    denominator: BigInt,
    /// basis rows of M' = ℤ^{n+1} ∩ span{(v,1)}
    affine_basis: IMat,
    /// ambient coordinates over which the affine hull projects bijectively
    free_coords: Vec<usize>,
    /// (n+1)×(d+1) map sending (x_free, t) to the full point (x, t)
    affine_map: QMat,
}

impl fmt::Debug for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LatticePolytope(ambient={}, dim={}, vertices={}, denom={})",
            self.ambient_dim,
            self.dim,
            self.vertices.len(),
            self.denominator
        )
    }
}

impl LatticePolytope {
    /// Builds the polytope from a spanning point set: duplicates and
    /// non-extreme points are removed by exact LP.
    pub fn from_points(points: Vec<Vec<Rational>>) -> Result<Self, PolytopeError> {
        if points.is_empty() {
            return Err(PolytopeError::NoVertices);
        }
        let ambient_dim = points[0].len();
        if points.iter().any(|p| p.len() != ambient_dim) {
            return Err(PolytopeError::DimensionMismatch);
        }
        let mut vertices: Vec<Vec<Rational>> = points;
        vertices.sort();
        vertices.dedup();
        // vertex irredundancy: drop points inside the hull of the others
        let mut keep = vec![true; vertices.len()];
        for i in 0..vertices.len() {
            let others: Vec<Vec<Rational>> = vertices
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i && keep[j])
                .map(|(_, v)| v.clone())
                .collect();
            if !others.is_empty() && lp::in_convex_hull(&others, &vertices[i]) {
                keep[i] = false;
            }
        }
        let vertices: Vec<Vec<Rational>> = vertices
            .into_iter()
            .zip(keep)
            .filter_map(|(v, k)| k.then_some(v))
            .collect();

        let dim = linalg::rat_rank(
            &vertices[1..]
                .iter()
                .map(|v| {
                    v.iter().zip(&vertices[0]).map(|(a, b)| a - b).collect::<Vec<Rational>>()
                })
                .collect::<Vec<_>>(),
        );
        let denominator = common_denominator(vertices.iter());

        // M' = saturation of span{(v,1)} in Z^{n+1}
        let homog: IMat = vertices
            .iter()
            .map(|v| {
                let mut row = v.clone();
                row.push(Rational::from_integer(BigInt::one()));
                let l = common_denominator(core::iter::once(&row));
                row.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
            })
            .collect();
        let equations = linalg::integer_kernel(&homog);
        let affine_basis = if equations.is_empty() {
            linalg::identity_int(ambient_dim + 1)
        } else {
            linalg::integer_kernel(&equations)
        };
        debug_assert_eq!(affine_basis.len(), dim + 1);

        // free coordinates: greedily grow an invertible column minor,
        // height column first
        let basis_q = linalg::int_to_rat(&affine_basis);
        let mut selected: Vec<usize> = vec![ambient_dim];
        for j in 0..ambient_dim {
            if selected.len() == dim + 1 {
                break;
            }
            let mut trial = selected.clone();
            trial.push(j);
            let cols: QMat = basis_q
                .iter()
                .map(|row| trial.iter().map(|&c| row[c].clone()).collect())
                .collect();
            if linalg::rat_rank(&cols) == trial.len() {
                selected.push(j);
            }
        }
        debug_assert_eq!(selected.len(), dim + 1);
        let free_coords: Vec<usize> = selected[1..].to_vec();

        // affine_map·(x_free, t) = full homogeneous point: columns of the
        // selected minor inverted against the basis
        let order: Vec<usize> = free_coords.iter().copied().chain([ambient_dim]).collect();
        let sel: QMat = basis_q
            .iter()
            .map(|row| order.iter().map(|&c| row[c].clone()).collect())
            .collect();
        let sel_inv = invert(&sel);
        // full = Bᵀ · (sel⁻¹ · rhs)
        let bt: QMat = (0..=ambient_dim)
            .map(|j| basis_q.iter().map(|row| row[j].clone()).collect())
            .collect();
        let affine_map = linalg::mat_mul_rat(&bt, &sel_inv);

        Ok(LatticePolytope {
            ambient_dim,
            vertices,
            dim,
            denominator,
            affine_basis,
            free_coords,
            affine_map,
        })
    }

    pub fn from_integer_points(points: &[Vec<i64>]) -> Result<Self, PolytopeError> {
        Self::from_points(
            points
                .iter()
                .map(|p| p.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
                .collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Smallest k with kP a lattice polytope.
    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    /// Basis rows of the affine lattice M' ⊂ ℤ^{n+1}.
    pub fn affine_basis(&self) -> &IMat {
        &self.affine_basis
    }

    pub fn is_lattice_polytope(&self) -> bool {
        self.denominator.is_one()
    }

    /// Exact membership via LP feasibility.
    pub fn contains(&self, x: &[Rational]) -> Result<bool, PolytopeError> {
        if x.len() != self.ambient_dim {
            return Err(PolytopeError::DimensionMismatch);
        }
        Ok(lp::in_convex_hull(&self.vertices, x))
    }

    /// Coordinates of a homogeneous point (x, h) in the affine basis;
    /// None when the point is outside the affine span.
    pub fn express_homogeneous(&self, point: &[Rational]) -> Option<Vec<Rational>> {
        let cols: QMat = (0..=self.ambient_dim)
            .map(|j| self.affine_basis.iter().map(|row| Rational::from_integer(row[j].clone())).collect())
            .collect();
        linalg::rat_solve(&cols, point)
    }

    /// All lattice points of the t-th dilate, sorted lexicographically.
    ///
    /// The integer bounding box of tP is scanned along the free
    /// coordinates of the affine hull; at each level the exact feasible
    /// interval is computed by LP, and complete free assignments extend
    /// affinely to the unique point of the hull, which is kept when its
    /// remaining coordinates are integers.
    pub fn lattice_points(&self, t: u64) -> Vec<Vec<BigInt>> {
        let t_rat = Rational::from_integer(BigInt::from(t));
        if t == 0 {
            let origin = vec![BigInt::zero(); self.ambient_dim];
            return vec![origin];
        }
        let scaled: Vec<Vec<Rational>> =
            self.vertices.iter().map(|v| v.iter().map(|c| c * &t_rat).collect()).collect();
        let mut out: Vec<Vec<BigInt>> = Vec::new();
        if self.dim == 0 {
            let p = &scaled[0];
            if p.iter().all(|c| c.denom().is_one()) {
                out.push(p.iter().map(|c| c.to_integer()).collect());
            }
            return out;
        }
        let mut pinned: Vec<(usize, Rational)> = Vec::new();
        self.scan_level(&scaled, t, 0, &mut pinned, &mut out);
        out.sort();
        out
    }

    fn scan_level(
        &self,
        scaled: &[Vec<Rational>],
        t: u64,
        level: usize,
        pinned: &mut Vec<(usize, Rational)>,
        out: &mut Vec<Vec<BigInt>>,
    ) {
        let coord = self.free_coords[level];
        let Some((lo, hi)) = lp::hull_coordinate_range(scaled, pinned, coord) else {
            return;
        };
        let lo_int = lo.ceil().to_integer();
        let hi_int = hi.floor().to_integer();
        let last = level + 1 == self.free_coords.len();
        let mut v = lo_int.clone();
        while v <= hi_int {
            let value = Rational::from_integer(v.clone());
            if last {
                // assemble the unique affine extension and check
                // integrality of the dependent coordinates
                let mut rhs: Vec<Rational> =
                    pinned.iter().map(|(_, val)| val.clone()).collect();
                rhs.push(value);
                rhs.push(Rational::from_integer(BigInt::from(t)));
                let full = linalg::mat_vec_rat(&self.affine_map, &rhs);
                if full[..self.ambient_dim].iter().all(|c| c.denom().is_one()) {
                    out.push(full[..self.ambient_dim].iter().map(|c| c.to_integer()).collect());
                }
            } else {
                pinned.push((coord, value));
                self.scan_level(scaled, t, level + 1, pinned, out);
                pinned.pop();
            }
            v += 1;
        }
    }

    /// Number of lattice points of the t-th dilate.
    pub fn count_lattice_points(&self, t: u64) -> BigInt {
        BigInt::from(self.lattice_points(t).len())
    }

    /// Ehrhart series h*(P;z)/(1-z^k)^{d+1}: the numerator is fitted from
    /// the first k(d+1) dilates and verified against two more.
    pub fn ehrhart_series(&self) -> Result<RationalSeries<Rational>, PolytopeError> {
        let k = self
            .denominator
            .to_usize()
            .ok_or(PolytopeError::DimensionTooLarge)?;
        let d = self.dim;
        let fit = k * (d + 1);
        let counts: Vec<BigInt> = (0..fit as u64 + 2).map(|t| self.count_lattice_points(t)).collect();
        // numerator = (Σ L_t z^t)·(1-z^k)^{d+1}, truncated below degree fit
        let mut numer = vec![Rational::from_integer(BigInt::zero()); fit];
        for (j, cell) in numer.iter_mut().enumerate() {
            let mut acc = BigInt::zero();
            let mut s = 0usize;
            while s <= d + 1 && s * k <= j {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                acc += crate::poly::binomial((d + 1) as i64, s as u32)
                    * BigInt::from(sign)
                    * &counts[j - s * k];
                s += 1;
            }
            *cell = Rational::from_integer(acc);
        }
        let series = RationalSeries::new(Polynomial::new(numer), &[(k, d + 1)]);
        // verification on two extra dilates
        let expanded = series.coefficients(fit + 1);
        for (t, expect) in counts.iter().enumerate().take(fit + 2).skip(fit) {
            if &expanded[t] != &Rational::from_integer(expect.clone()) {
                return Err(PolytopeError::VerificationFailed);
            }
        }
        Ok(series)
    }

    /// Complete face list (dimensions 0..=dim, including the polytope
    /// itself): facet hyperplanes are enumerated in projected
    /// coordinates, then vertex sets are closed under intersection.
    pub fn faces(&self) -> Result<Vec<Face>, PolytopeError> {
        if self.dim > 6 {
            return Err(PolytopeError::DimensionTooLarge);
        }
        let full: Vec<usize> = (0..self.vertices.len()).collect();
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        sets.insert(full.clone());
        if self.dim > 0 {
            let projected: Vec<Vec<Rational>> = self
                .vertices
                .iter()
                .map(|v| self.free_coords.iter().map(|&c| v[c].clone()).collect())
                .collect();
            let facets = facet_vertex_sets(&projected, self.dim);
            let mut frontier: Vec<Vec<usize>> = facets.iter().cloned().collect();
            sets.extend(facets.iter().cloned());
            // closure under pairwise intersection
            while let Some(s) = frontier.pop() {
                for f in facets.iter() {
                    let inter: Vec<usize> =
                        s.iter().copied().filter(|i| f.binary_search(i).is_ok()).collect();
                    if !inter.is_empty() && sets.insert(inter.clone()) {
                        frontier.push(inter);
                    }
                }
            }
        }
        let faces = sets
            .into_iter()
            .map(|vertex_subset| {
                let dim = if vertex_subset.len() <= 1 {
                    0
                } else {
                    let v0 = &self.vertices[vertex_subset[0]];
                    linalg::rat_rank(
                        &vertex_subset[1..]
                            .iter()
                            .map(|&i| {
                                self.vertices[i]
                                    .iter()
                                    .zip(v0)
                                    .map(|(a, b)| a - b)
                                    .collect::<Vec<Rational>>()
                            })
                            .collect::<Vec<_>>(),
                    )
                };
                Face { vertex_subset, dim }
            })
            .collect();
        Ok(faces)
    }

    /// Sub-polytope spanned by a vertex subset.
    pub fn face_polytope(&self, face: &Face) -> LatticePolytope {
        LatticePolytope::from_points(
            face.vertex_subset.iter().map(|&i| self.vertices[i].clone()).collect(),
        )
        .expect("face has vertices")
    }
}

fn invert(m: &QMat) -> QMat {
    let n = m.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Rational::from_integer(BigInt::zero()); n];
        e[j] = Rational::from_integer(BigInt::one());
        cols.push(linalg::rat_solve(m, &e).expect("matrix is invertible"));
    }
    // cols[j] is the j-th column of the inverse
    (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
}

/// L_P(t) = Σ h*_i·binom(t+d-i, d), as a polynomial in t.
pub fn hstar_to_ehrhart_polynomial(
    hstar: &Polynomial<Rational>,
    d: usize,
) -> Result<Polynomial<Rational>, PolytopeError> {
    if !hstar.is_zero() && hstar.degree() > d {
        return Err(PolytopeError::DegreeExceedsDimension);
    }
    let mut acc = Polynomial::zero();
    for (i, h) in hstar.coeffs().iter().enumerate() {
        if !crate::ring::Ring::is_zero(h) {
            acc = acc.add(&binomial_in_t(d as i64 - i as i64, d).scale(h));
        }
    }
    Ok(acc)
}

// Supporting hyperplanes of the facets of a full-dimensional point set
// in dimension d, found by an incremental simplicial hull; each facet is
// returned as its sorted incident-vertex index set.
fn facet_vertex_sets(points: &[Vec<Rational>], d: usize) -> Vec<Vec<usize>> {
    assert!(d >= 1);
    // initial affinely independent set
    let mut independent: Vec<usize> = vec![0];
    for i in 1..points.len() {
        if independent.len() == d + 1 {
            break;
        }
        let mut trial = independent.clone();
        trial.push(i);
        let diffs: QMat = trial[1..]
            .iter()
            .map(|&j| {
                points[j]
                    .iter()
                    .zip(&points[trial[0]])
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        if linalg::rat_rank(&diffs) == trial.len() - 1 {
            independent.push(i);
        }
    }
    assert_eq!(independent.len(), d + 1, "points must span dimension d");
    // fixed interior reference point: centroid of the initial simplex
    let denom = Rational::from_integer(BigInt::from((d + 1) as i64));
    let interior: Vec<Rational> = (0..d)
        .map(|c| {
            independent
                .iter()
                .map(|&i| points[i][c].clone())
                .fold(Rational::from_integer(BigInt::zero()), |s, v| s + v)
                / &denom
        })
        .collect();

    // hyperplane through d points, oriented with a·interior < b
    let hyperplane = |subset: &[usize]| -> Option<(Vec<Rational>, Rational)> {
        let base = &points[subset[0]];
        let diffs: QMat = subset[1..]
            .iter()
            .map(|&j| points[j].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let normal_space = linalg::integer_kernel(&clear_denominators(&diffs));
        if normal_space.len() != 1 {
            return None;
        }
        let mut a: Vec<Rational> =
            normal_space[0].iter().map(|c| Rational::from_integer(c.clone())).collect();
        let mut b = dot(&a, base);
        match dot(&a, &interior).cmp(&b) {
            core::cmp::Ordering::Less => {}
            core::cmp::Ordering::Greater => {
                a = a.iter().map(|c| -c).collect();
                b = -b;
            }
            core::cmp::Ordering::Equal => return None,
        }
        Some((a, b))
    };

    // simplicial facets of the initial simplex
    let mut facets: Vec<(Vec<usize>, Vec<Rational>, Rational)> = Vec::new();
    for skip in 0..=d {
        let simplex: Vec<usize> = independent
            .iter()
            .enumerate()
            .filter_map(|(i, &v)| (i != skip).then_some(v))
            .collect();
        let (a, b) = hyperplane(&simplex).expect("simplex facet");
        facets.push((simplex, a, b));
    }
    // insert remaining points
    for p in 0..points.len() {
        if independent.contains(&p) {
            continue;
        }
        let pv = &points[p];
        let violated: Vec<usize> = facets
            .iter()
            .enumerate()
            .filter_map(|(i, (_, a, b))| (dot(a, pv) > *b).then_some(i))
            .collect();
        if violated.is_empty() {
            continue;
        }
        // horizon ridges: (d-1)-subsets on exactly one violated facet
        let mut ridge_count: alloc::collections::BTreeMap<Vec<usize>, usize> =
            alloc::collections::BTreeMap::new();
        for &fi in &violated {
            let simplex = &facets[fi].0;
            for skip in 0..simplex.len() {
                let mut ridge: Vec<usize> = simplex
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &v)| (i != skip).then_some(v))
                    .collect();
                ridge.sort_unstable();
                *ridge_count.entry(ridge).or_insert(0) += 1;
            }
        }
        let violated_set: BTreeSet<usize> = violated.iter().copied().collect();
        let mut next: Vec<(Vec<usize>, Vec<Rational>, Rational)> = facets
            .iter()
            .enumerate()
            .filter(|(i, _)| !violated_set.contains(i))
            .map(|(_, f)| f.clone())
            .collect();
        for (ridge, count) in ridge_count {
            if count != 1 {
                continue;
            }
            let mut simplex = ridge.clone();
            simplex.push(p);
            if let Some((a, b)) = hyperplane(&simplex) {
                next.push((simplex, a, b));
            }
        }
        facets = next;
    }
    // dedupe hyperplanes and collect exact incident-vertex sets
    let mut seen: BTreeSet<(Vec<BigInt>, BigInt)> = BTreeSet::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (_, a, b) in &facets {
        let key = normalize_hyperplane(a, b);
        if seen.insert(key) {
            let set: Vec<usize> = points
                .iter()
                .enumerate()
                .filter_map(|(i, v)| (dot(a, v) == *b).then_some(i))
                .collect();
            out.push(set);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).fold(Rational::from_integer(BigInt::zero()), |s, t| s + t)
}

fn clear_denominators(m: &QMat) -> IMat {
    m.iter()
        .map(|row| {
            let l = common_denominator(core::iter::once(&row.to_vec()));
            row.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect()
}

fn normalize_hyperplane(a: &[Rational], b: &Rational) -> (Vec<BigInt>, BigInt) {
    let mut row = a.to_vec();
    row.push(b.clone());
    let l = common_denominator(core::iter::once(&row));
    let ints: Vec<BigInt> =
        row.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let ints: Vec<BigInt> = if g.is_zero() { ints } else { ints.iter().map(|v| v / &g).collect() };
    let b_out = ints.last().unwrap().clone();
    (ints[..ints.len() - 1].to_vec(), b_out)
}

/// Permutahedron Π_n: convex hull of the permutations of (1, 2, …, n).
pub fn permutahedron(n: usize) -> LatticePolytope {
    fn perms(items: &mut Vec<i64>, k: usize, out: &mut Vec<Vec<i64>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            perms(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut base: Vec<i64> = (1..=n as i64).collect();
    let mut all = Vec::new();
    perms(&mut base, 0, &mut all);
    LatticePolytope::from_integer_points(&all).expect("permutahedron")
}

/// Unit cube [0,1]^n.
pub fn unit_cube(n: usize) -> LatticePolytope {
    let mut pts = Vec::with_capacity(1 << n);
    for mask in 0..(1u32 << n) {
        pts.push((0..n).map(|i| ((mask >> i) & 1) as i64).collect());
    }
    LatticePolytope::from_integer_points(&pts).expect("cube")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::series::SeriesPolynomial;

    #[test]
    fn construction_prunes_redundant_vertices() {
        // barycenter of a triangle is not a vertex
        let p = LatticePolytope::from_integer_points(&[
            vec![0, 0],
            vec![3, 0],
            vec![0, 3],
            vec![1, 1],
        ])
        .unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(p.dim(), 2);
        assert!(p.is_lattice_polytope());
    }

    #[test]
    fn membership_permutahedron() {
        let pi3 = permutahedron(3);
        assert_eq!(pi3.dim(), 2);
        assert!(pi3.contains(&[rat_int(2), rat_int(2), rat_int(2)]).unwrap());
        assert!(!pi3.contains(&[rat_int(1), rat_int(1), rat_int(1)]).unwrap());
        for v in pi3.vertices() {
            assert!(pi3.contains(v).unwrap());
        }
    }

    #[test]
    fn membership_agrees_with_barycentric_solve_on_simplices() {
        // independent oracle: solve for barycentric coordinates exactly
        let simplex = LatticePolytope::from_integer_points(&[
            vec![0, 0, 0],
            vec![2, 0, 0],
            vec![0, 3, 0],
            vec![0, 0, 4],
        ])
        .unwrap();
        let bary_contains = |x: &[Rational]| -> bool {
            let mut a: QMat = (0..3)
                .map(|c| simplex.vertices().iter().map(|v| v[c].clone()).collect())
                .collect();
            a.push(vec![rat_int(1); 4]);
            let mut rhs = x.to_vec();
            rhs.push(rat_int(1));
            match linalg::rat_solve(&a, &rhs) {
                Some(sol) => sol.iter().all(|c| !c.numer().is_negative()),
                None => false,
            }
        };
        let probes = [
            vec![rat_int(0), rat_int(0), rat_int(0)],
            vec![rat_int(1), rat_int(1), rat_int(1)],
            vec![rat(1, 2), rat(1, 3), rat(1, 4)],
            vec![rat_int(2), rat_int(3), rat_int(4)],
            vec![rat_int(1), rat_int(0), rat_int(3)],
            vec![rat(-1, 7), rat_int(0), rat_int(0)],
        ];
        for x in &probes {
            assert_eq!(simplex.contains(x).unwrap(), bary_contains(x), "{x:?}");
        }
    }

    #[test]
    fn lattice_point_counts() {
        let pi3 = permutahedron(3);
        // L(Π₃;t) = 3t²+3t+1
        for t in 0..=4u64 {
            let expect = 3 * t * t + 3 * t + 1;
            assert_eq!(pi3.count_lattice_points(t), BigInt::from(expect));
        }
        // dilate 0 is the origin
        assert_eq!(pi3.lattice_points(0), vec![vec![BigInt::zero(); 3]]);
        // height-1 points of Π₃ are the six permutations and the barycenter
        let pts = pi3.lattice_points(1);
        assert_eq!(pts.len(), 7);
        assert!(pts.contains(&vec![BigInt::from(2), BigInt::from(2), BigInt::from(2)]));
    }

    #[test]
    fn ehrhart_series_pi3() {
        let pi3 = permutahedron(3);
        let s = pi3.ehrhart_series().unwrap();
        let expect = RationalSeries::new(
            Polynomial::new(vec![rat_int(1), rat_int(4), rat_int(1)]),
            &[(1, 3)],
        );
        assert_eq!(s, expect);
    }

    #[test]
    fn ehrhart_series_point_and_rational_segment() {
        // single lattice point: 1/(1-z)
        let pt = LatticePolytope::from_integer_points(&[vec![5]]).unwrap();
        let s = pt.ehrhart_series().unwrap();
        assert_eq!(s, RationalSeries::new(Polynomial::one(), &[(1, 1)]));
        // segment [0, 1/2]: L(t) = floor(t/2)+1, over (1-z²)²
        let seg = LatticePolytope::from_points(vec![vec![rat_int(0)], vec![rat(1, 2)]]).unwrap();
        assert_eq!(*seg.denominator(), BigInt::from(2));
        let s = seg.ehrhart_series().unwrap();
        let coeffs = s.coefficients(9);
        for (t, c) in coeffs.iter().enumerate() {
            assert_eq!(c, &rat_int(t as i64 / 2 + 1));
        }
        // h* of the half-open description: numerator fitted over (1-z²)²
        assert_eq!(s.denominator_factors(), vec![(2, 2)]);
    }

    #[test]
    fn hstar_recovers_ehrhart_polynomial() {
        // (1,4,1), d=2 → 3t²+3t+1
        let h = Polynomial::new(vec![rat_int(1), rat_int(4), rat_int(1)]);
        let l = hstar_to_ehrhart_polynomial(&h, 2).unwrap();
        assert_eq!(l, Polynomial::new(vec![rat_int(1), rat_int(3), rat_int(3)]));
        // h* = 1, d = 0 → constant 1
        let one = hstar_to_ehrhart_polynomial(&Polynomial::one(), 0).unwrap();
        assert_eq!(one, Polynomial::one());
        // (1,1,1), d=2 → binom(t+2,2)+binom(t+1,2)+binom(t,2)
        let h = Polynomial::new(vec![rat_int(1), rat_int(1), rat_int(1)]);
        let l = hstar_to_ehrhart_polynomial(&h, 2).unwrap();
        let expect = binomial_in_t(2, 2).add(&binomial_in_t(1, 2)).add(&binomial_in_t(0, 2));
        assert_eq!(l, expect);
        // degree guard
        let too_big = Polynomial::new(vec![rat_int(1), rat_int(1), rat_int(1), rat_int(1)]);
        assert_eq!(
            hstar_to_ehrhart_polynomial(&too_big, 2),
            Err(PolytopeError::DegreeExceedsDimension)
        );
    }

    #[test]
    fn faces_of_small_polytopes() {
        // 0/1 square: 4 vertices + 4 edges + itself
        let sq = unit_cube(2);
        let faces = sq.faces().unwrap();
        assert_eq!(faces.len(), 9);
        assert_eq!(faces.iter().filter(|f| f.dim == 0).count(), 4);
        assert_eq!(faces.iter().filter(|f| f.dim == 1 && f.vertex_subset.len() == 2).count(), 4);
        // hexagon: 6 + 6 + 1
        let pi3 = permutahedron(3);
        let faces = pi3.faces().unwrap();
        assert_eq!(faces.len(), 13);
        // 3-simplex in R⁴: 4 + 6 + 4 + 1
        let simplex = LatticePolytope::from_integer_points(&[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ])
        .unwrap();
        let faces = simplex.faces().unwrap();
        assert_eq!(faces.len(), 15);
        // boundary Euler characteristic: Σ (-1)^dim over proper faces is
        // 1 - (-1)^d, i.e. alternating sum over ALL faces equals 1
        for p in [&sq, &pi3, &simplex] {
            let sum: i64 = p
                .faces()
                .unwrap()
                .iter()
                .map(|f| if f.dim % 2 == 0 { 1 } else { -1 })
                .sum();
            assert_eq!(sum, 1, "{p:?}");
        }
    }

    #[test]
    fn ehrhart_leading_term_is_volume_for_cube() {
        let cube = unit_cube(3);
        let s = cube.ehrhart_series().unwrap();
        // h*(1) = normalized volume = 3! for the unit cube
        let h1 = s.numerator().eval_rational(&rat_int(1));
        assert_eq!(h1, rat_int(6));
        match s.to_polynomial(4) {
            SeriesPolynomial::NotPolynomial { .. } => {}
            SeriesPolynomial::Polynomial(_) => panic!("Ehrhart series is never polynomial"),
        }
    }
}
