//! Sublattices of `Z^n` kept in Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{is_zero_vec, rat_vec, IntMatrix, IntVector, RatVector};
use super::snf::smith_normal_form;
use super::LinalgError;

/// Row lattice with a basis in Hermite normal form: row echelon, positive
/// pivots, entries above each pivot reduced into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sublattice {
    ambient: usize,
    basis: Vec<IntVector>,
    pivots: Vec<usize>,
}

fn hermite_rows(mut rows: Vec<IntVector>, ncols: usize) -> (Vec<IntVector>, Vec<usize>) {
    rows.retain(|r| !is_zero_vec(r));
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        loop {
            let best = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by_key(|&i| rows[i][c].abs());
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut clean = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
                if !rows[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            if q.is_zero() {
                continue;
            }
            let pivot_row = rows[r].clone();
            for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                *x -= &q * p;
            }
        }
        pivots.push(c);
        r += 1;
        rows.retain(|row| !is_zero_vec(row));
    }
    rows.truncate(pivots.len());
    (rows, pivots)
}

impl Sublattice {
    /// Integer row span of `rows` inside `Z^ambient`.
    pub fn hermite_basis(rows: &[IntVector], ambient: usize) -> Result<Self, LinalgError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ambient) {
            return Err(LinalgError::DimensionMismatch { expected: ambient, found: bad.len() });
        }
        let (basis, pivots) = hermite_rows(rows.to_vec(), ambient);
        Ok(Self { ambient, basis, pivots })
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: IntMatrix::identity(ambient).into_rows(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[IntVector] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::new(self.basis.clone(), self.ambient)
    }

    /// Rational coordinates of `v` in the basis, if `v` lies in the Q-span.
    pub fn rational_coordinates(&self, v: &[BigRational]) -> Option<RatVector> {
        if v.len() != self.ambient {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let q = &rest[p] / BigRational::from_integer(row[p].clone());
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * BigRational::from_integer(b.clone());
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    /// Integer coordinates of `v` in the basis, if `v` is a lattice point.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<IntVector> {
        let coords = self.rational_coordinates(&rat_vec(v))?;
        coords.into_iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn in_span(&self, v: &[BigRational]) -> bool {
        self.rational_coordinates(v).is_some()
    }

    /// Point with the given coordinates.
    pub fn point(&self, coords: &[BigInt]) -> IntVector {
        let mut out = vec![BigInt::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            for (o, b) in out.iter_mut().zip(row) {
                *o += c * b;
            }
        }
        out
    }

    /// `Q-span ∩ Z^n`, the smallest saturated lattice containing this one.
    pub fn saturate(&self) -> Self {
        if self.rank() == 0 {
            return self.clone();
        }
        let s = smith_normal_form(&self.basis_matrix());
        let vinv = s.v.unimodular_inverse().expect("Smith transform is unimodular");
        let rows: Vec<IntVector> = vinv.rows()[..self.rank()].to_vec();
        Self::hermite_basis(&rows, self.ambient).expect("dimensions agree")
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate().basis == self.basis
    }

    /// Index of this lattice inside its saturation.
    pub fn index_in_saturation(&self) -> BigInt {
        let s = smith_normal_form(&self.basis_matrix());
        s.divisors().iter().fold(BigInt::one(), |acc, d| acc * d)
    }
}

/// Free-function spelling used by callers that think in terms of rows.
pub fn hermite_basis(rows: &[IntVector], ambient: usize) -> Result<Sublattice, LinalgError> {
    Sublattice::hermite_basis(rows, ambient)
}

pub fn in_lattice(lattice: &Sublattice, v: &[BigInt]) -> bool {
    lattice.contains(v)
}

pub fn saturate(lattice: &Sublattice) -> Sublattice {
    lattice.saturate()
}

/// True iff the (pairwise distinct) vectors are part of a basis of `Z^rank`.
pub fn extends_to_basis(vectors: &[IntVector], rank: usize) -> Result<bool, LinalgError> {
    Ok(extension_divisors(vectors, rank)?.0)
}

/// As [`extends_to_basis`], also returning the Smith divisors of the stacked matrix.
pub fn extension_divisors(vectors: &[IntVector], rank: usize) -> Result<(bool, Vec<BigInt>), LinalgError> {
    if let Some(bad) = vectors.iter().find(|r| r.len() != rank) {
        return Err(LinalgError::DimensionMismatch { expected: rank, found: bad.len() });
    }
    for (i, a) in vectors.iter().enumerate() {
        if vectors[i + 1..].contains(a) {
            return Err(LinalgError::DuplicateVector(a.iter().map(|x| x.to_string()).collect()));
        }
    }
    if vectors.is_empty() {
        return Ok((true, Vec::new()));
    }
    let s = smith_normal_form(&IntMatrix::new(vectors.to_vec(), rank));
    let diag = s.diagonal();
    let ok = diag.len() == vectors.len() && diag.iter().all(One::is_one);
    Ok((ok, diag))
}
