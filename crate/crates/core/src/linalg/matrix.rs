//! Dense exact matrices and the handful of rational routines the rest of the
//! crate leans on (rank, kernels, inverses, primitive scaling).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntVector = Vec<BigInt>;
pub type RatVector = Vec<BigRational>;

/// Dense integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: Vec<IntVector>,
    ncols: usize,
}

impl IntMatrix {
    /// Panics if the rows have inconsistent lengths.
    pub fn new(rows: Vec<IntVector>, ncols: usize) -> Self {
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "row length does not match column count {ncols}"
        );
        Self { rows, ncols }
    }

    pub fn from_i64(rows: &[Vec<i64>], ncols: usize) -> Self {
        Self::new(rows.iter().map(|r| int_vec(r)).collect(), ncols)
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self::new(vec![vec![BigInt::zero(); ncols]; nrows], ncols)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &IntVector {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<IntVector> {
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.rows[i][j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                t.rows[j][i] = v.clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows(), "dimension mismatch in product");
        let mut out = Self::zeros(self.nrows(), other.ncols);
        for i in 0..self.nrows() {
            for k in 0..self.ncols {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    out.rows[i][j] += a * &other.rows[k][j];
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, v)| i == j || v.is_zero()))
    }

    /// Determinant of a square matrix (fraction-free Bareiss elimination).
    pub fn det(&self) -> BigInt {
        let n = self.nrows();
        assert_eq!(n, self.ncols, "determinant of a non-square matrix");
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn to_rational_rows(&self) -> Vec<RatVector> {
        self.rows.iter().map(|r| rat_vec(r)).collect()
    }

    /// Exact inverse of a unimodular matrix; `None` if the matrix is singular
    /// or the inverse is not integral.
    pub fn unimodular_inverse(&self) -> Option<Self> {
        let inv = inverse_rat(&self.to_rational_rows(), self.ncols)?;
        let rows: Option<Vec<IntVector>> = inv
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.is_integer().then(|| x.to_integer())).collect())
            .collect();
        rows.map(|r| Self::new(r, self.ncols))
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn int_vec(v: &[i64]) -> IntVector {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn rat_vec(v: &[BigInt]) -> RatVector {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[BigRational], b: &[BigRational]) -> BigRational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn vec_gcd(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Smallest integer vector on the ray through `v` (zero stays zero).
pub fn primitive(v: &[BigRational]) -> IntVector {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled: IntVector = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    primitive_int(&scaled)
}

pub fn primitive_int(v: &[BigInt]) -> IntVector {
    let g = vec_gcd(v);
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [RatVector], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_rat(rows: &[RatVector], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

pub fn rank_int(rows: &[IntVector], ncols: usize) -> usize {
    rank_rat(&rows.iter().map(|r| rat_vec(r)).collect::<Vec<_>>(), ncols)
}

/// Basis of `{x : row · x = 0 for every row}`.
pub fn nullspace_rat(rows: &[RatVector], ncols: usize) -> Vec<RatVector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn inverse_rat(rows: &[RatVector], n: usize) -> Option<Vec<RatVector>> {
    if rows.len() != n {
        return None;
    }
    let mut aug: Vec<RatVector> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            v
        })
        .collect();
    let pivots = rref(&mut aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solve `x · basis = target` for `x` (the rows of `basis` independent).
pub fn solve_row_combination(basis: &[RatVector], target: &[BigRational]) -> Option<RatVector> {
    let k = basis.len();
    let n = target.len();
    // Columns of the system are the basis rows; augment with the target column.
    let mut sys: Vec<RatVector> = (0..n)
        .map(|j| {
            let mut row: RatVector = basis.iter().map(|b| b[j].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    let pivots = rref(&mut sys, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = sys[r][k].clone();
    }
    Some(x)
}

pub fn abs_min_nonzero<'a, I: Iterator<Item = &'a BigInt>>(it: I) -> Option<BigInt> {
    it.filter(|x| !x.is_zero()).map(|x| x.abs()).min()
}
