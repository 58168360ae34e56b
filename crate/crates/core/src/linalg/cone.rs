//! Rational polyhedral cones: facet normals, extreme rays, Hilbert bases and
//! monoid membership.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::fm::{feasible_strict, Inequality, InequalitySystem, Relation};
use super::lattice::Sublattice;
use super::matrix::{
    dot, dot_rat, inverse_rat, is_zero_vec, nullspace_rat, primitive, primitive_int, rank_int, rat_vec, IntMatrix,
    IntVector, RatVector,
};
use super::snf::smith_normal_form;
use super::LinalgError;

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_subset<F: FnMut(&[usize])>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Primitive inward facet normals of the cone spanned by `gens` in `Q^dim`.
///
/// The cone must be full-dimensional; normals are returned sorted. A cone
/// that is all of `Q^dim` has no facets.
pub fn facet_normals(gens: &[IntVector], dim: usize) -> Result<Vec<IntVector>, LinalgError> {
    let gens: Vec<IntVector> = gens.iter().filter(|g| !is_zero_vec(g)).cloned().collect();
    if rank_int(&gens, dim) < dim {
        return Err(LinalgError::NotFullDimensional { dim, rank: rank_int(&gens, dim) });
    }
    if dim == 0 {
        return Ok(Vec::new());
    }
    let mut found: BTreeSet<IntVector> = BTreeSet::new();
    let mut distinct: Vec<IntVector> = gens.iter().map(|g| primitive_int(g)).collect();
    distinct.sort();
    distinct.dedup();
    for_each_subset(distinct.len(), dim - 1, |subset| {
        let rows: Vec<RatVector> = subset.iter().map(|&i| rat_vec(&distinct[i])).collect();
        let kernel = nullspace_rat(&rows, dim);
        if kernel.len() != 1 {
            return;
        }
        let n = primitive(&kernel[0]);
        for cand in [n.clone(), n.iter().map(|x| -x).collect::<IntVector>()] {
            if distinct.iter().all(|g| !dot(&cand, g).is_negative()) {
                found.insert(cand);
            }
        }
    });
    Ok(found.into_iter().collect())
}

/// Primitive integer facet normals of `cone(generators)` expressed in the
/// dual basis of `lattice`. The generators must span the lattice's Q-span.
pub fn dual_cone_rays(generators: &[RatVector], lattice: &Sublattice) -> Result<Vec<IntVector>, LinalgError> {
    let coords = coordinates_in(generators, lattice)?;
    facet_normals(&coords, lattice.rank())
}

fn coordinates_in(generators: &[RatVector], lattice: &Sublattice) -> Result<Vec<IntVector>, LinalgError> {
    generators
        .iter()
        .map(|g| lattice.rational_coordinates(g).map(|c| primitive(&c)).ok_or(LinalgError::OutsideSpan))
        .collect()
}

/// Primitive generators of the extreme rays of a full-dimensional cone,
/// given the cone's generators and its facet normals.
pub fn extreme_rays(gens: &[IntVector], normals: &[IntVector], dim: usize) -> Vec<IntVector> {
    let mut rays: BTreeSet<IntVector> = BTreeSet::new();
    for g in gens.iter().filter(|g| !is_zero_vec(g)) {
        let tight: Vec<IntVector> = normals.iter().filter(|n| dot(n, g).is_zero()).cloned().collect();
        if rank_int(&tight, dim) + 1 == dim {
            rays.insert(primitive_int(g));
        }
    }
    rays.into_iter().collect()
}

fn is_pointed(normals: &[IntVector], dim: usize) -> bool {
    rank_int(normals, dim) == dim
}

fn in_cone(normals: &[IntVector], x: &[BigInt]) -> bool {
    normals.iter().all(|n| !dot(n, x).is_negative())
}

/// Lattice points `Σ λ_i g_i` with `λ ∈ [0,1)^dim` for linearly independent
/// integer rows `g_i` spanning `Q^dim`.
fn parallelepiped_points(gens: &[IntVector], dim: usize) -> Vec<IntVector> {
    let g = IntMatrix::new(gens.to_vec(), dim);
    let ginv = inverse_rat(&g.to_rational_rows(), dim).expect("independent generators");
    let s = smith_normal_form(&g);
    let vinv = s.v.unimodular_inverse().expect("Smith transform is unimodular");
    let divisors = s.diagonal();
    let mut out = Vec::new();
    let mut y = vec![BigInt::zero(); dim];
    loop {
        // x = y · V^{-1} runs over coset representatives of Z^dim / (row span of G).
        let mut x = vec![BigInt::zero(); dim];
        for (yi, row) in y.iter().zip(vinv.rows()) {
            for (xj, r) in x.iter_mut().zip(row) {
                *xj += yi * r;
            }
        }
        let xr = rat_vec(&x);
        let lambda: RatVector = (0..dim)
            .map(|j| xr.iter().zip(&ginv).fold(BigRational::zero(), |acc, (xi, row)| acc + xi * &row[j]))
            .collect();
        let mut p = vec![BigRational::zero(); dim];
        for (l, gi) in lambda.iter().zip(gens) {
            let frac = l - l.floor();
            for (pj, gij) in p.iter_mut().zip(gi) {
                *pj += &frac * BigRational::from_integer(gij.clone());
            }
        }
        out.push(p.into_iter().map(|v| v.to_integer()).collect());

        let mut i = 0;
        loop {
            if i == dim {
                return out;
            }
            y[i] += 1;
            if y[i] < divisors[i] {
                break;
            }
            y[i] = BigInt::zero();
            i += 1;
        }
    }
}

/// Hilbert basis of a full-dimensional pointed cone in `Z^dim`.
pub(crate) fn hilbert_basis_full(gens: &[IntVector], dim: usize) -> Result<Vec<IntVector>, LinalgError> {
    if dim == 0 {
        return Ok(Vec::new());
    }
    let normals = facet_normals(gens, dim)?;
    if !is_pointed(&normals, dim) {
        return Err(LinalgError::NotPointed);
    }
    let rays = extreme_rays(gens, &normals, dim);
    let mut candidates: BTreeSet<IntVector> = rays.iter().cloned().collect();
    // Every irreducible element lies in the half-open parallelepiped of some
    // simplicial subcone spanned by extreme rays.
    for_each_subset(rays.len(), dim, |subset| {
        let sub: Vec<IntVector> = subset.iter().map(|&i| rays[i].clone()).collect();
        if rank_int(&sub, dim) == dim {
            candidates.extend(parallelepiped_points(&sub, dim).into_iter().filter(|p| !is_zero_vec(p)));
        }
    });
    let cands: Vec<IntVector> = candidates.into_iter().collect();
    let basis = cands
        .iter()
        .filter(|x| {
            !cands.iter().any(|c| {
                c != *x && {
                    let diff: IntVector = x.iter().zip(c).map(|(a, b)| a - b).collect();
                    in_cone(&normals, &diff)
                }
            })
        })
        .cloned()
        .collect();
    Ok(basis)
}

/// Minimal generating set of the monoid `lattice ∩ cone(generators)`.
///
/// Generators must lie in the Q-span of the lattice; the cone need not be
/// full-dimensional there but must be pointed.
pub fn hilbert_basis(generators: &[IntVector], lattice: &Sublattice) -> Result<Vec<IntVector>, LinalgError> {
    let gens: Vec<RatVector> = generators.iter().filter(|g| !is_zero_vec(g)).map(|g| rat_vec(g)).collect();
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    // Work inside lattice ∩ span(generators), in coordinates of that lattice.
    let coords = coordinates_in(&gens, lattice)?;
    let span = Sublattice::hermite_basis(&coords, lattice.rank())?.saturate();
    let inner: Vec<IntVector> = coords
        .iter()
        .map(|c| primitive(&span.rational_coordinates(&rat_vec(c)).expect("inside own span")))
        .collect();
    let hb = hilbert_basis_full(&inner, span.rank())?;
    let mut out: Vec<IntVector> = hb.iter().map(|h| lattice.point(&span.point(h))).collect();
    out.sort();
    Ok(out)
}

/// A rational functional strictly positive on every nonzero generator, or
/// `None` if no such functional exists (the generators do not lie in a
/// pointed cone with zero as a vertex).
pub fn positive_grading(generators: &[IntVector], dim: usize) -> Option<RatVector> {
    let mut sys = InequalitySystem::new(dim);
    for g in generators.iter().filter(|g| !is_zero_vec(g)) {
        sys.push(Inequality::homogeneous(rat_vec(g), Relation::Gt));
    }
    feasible_strict(&sys).witness().cloned()
}

/// Is `element` a nonnegative integer combination of `generators`?
pub fn in_monoid(element: &[BigInt], generators: &[IntVector]) -> Result<bool, LinalgError> {
    let dim = element.len();
    if let Some(bad) = generators.iter().find(|g| g.len() != dim) {
        return Err(LinalgError::DimensionMismatch { expected: dim, found: bad.len() });
    }
    if is_zero_vec(element) {
        return Ok(true);
    }
    let gens: Vec<IntVector> = generators.iter().filter(|g| !is_zero_vec(g)).cloned().collect();
    let grading = positive_grading(&gens, dim).ok_or(LinalgError::NotPointed)?;
    let deg = |v: &[BigInt]| dot_rat(&grading, &rat_vec(v));
    let degrees: Vec<BigRational> = gens.iter().map(|g| deg(g)).collect();
    let mut dead: HashSet<(IntVector, usize)> = HashSet::new();
    Ok(search(element.to_vec(), 0, &gens, &degrees, &deg(element), &mut dead))
}

fn search(
    rest: IntVector,
    start: usize,
    gens: &[IntVector],
    degrees: &[BigRational],
    rest_deg: &BigRational,
    dead: &mut HashSet<(IntVector, usize)>,
) -> bool {
    if is_zero_vec(&rest) {
        return true;
    }
    if !rest_deg.is_positive() || dead.contains(&(rest.clone(), start)) {
        return false;
    }
    for i in start..gens.len() {
        if degrees[i] > *rest_deg {
            continue;
        }
        let next: IntVector = rest.iter().zip(&gens[i]).map(|(a, b)| a - b).collect();
        let next_deg = rest_deg - &degrees[i];
        if search(next, i, gens, degrees, &next_deg, dead) {
            return true;
        }
    }
    dead.insert((rest, start));
    false
}

/// One-line check that a primitive functional `n` is nonnegative on `gens` and
/// vanishes on a codimension-one set of them.
pub fn is_facet_normal(n: &[BigInt], gens: &[IntVector], dim: usize) -> bool {
    let tight: Vec<IntVector> = gens.iter().filter(|g| dot(n, g).is_zero()).cloned().collect();
    gens.iter().all(|g| !dot(n, g).is_negative()) && rank_int(&tight, dim) + 1 == dim && primitive_int(n) == n
}
