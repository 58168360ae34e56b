//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{IntMatrix, IntVector};

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The diagonal entries of `D`, including trailing zeros up to `min(m, n)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.nrows().min(self.d.ncols());
        (0..k).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Nonzero invariant factors.
    pub fn divisors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.divisors().len()
    }
}

fn swap_cols(m: &mut [IntVector], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// row[dst] -= q * row[src]
fn row_axpy(m: &mut [IntVector], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let src_row = m[src].clone();
    for (x, s) in m[dst].iter_mut().zip(&src_row) {
        *x -= q * s;
    }
}

/// col[dst] -= q * col[src]
fn col_axpy(m: &mut [IntVector], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        let t = q * &row[src];
        row[dst] -= t;
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut d = m.clone().into_rows();
    let mut u = IntMatrix::identity(nr).into_rows();
    let mut v = IntMatrix::identity(nc).into_rows();

    for t in 0..nr.min(nc) {
        // Pivot: smallest nonzero magnitude in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !d[i][j].is_zero() && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..nr {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = d[i][t].div_floor(&d[t][t]);
                row_axpy(&mut d, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                if !d[i][t].is_zero() {
                    d.swap(t, i);
                    u.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..nc {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = d[t][j].div_floor(&d[t][t]);
                col_axpy(&mut d, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                if !d[t][j].is_zero() {
                    swap_cols(&mut d, t, j);
                    swap_cols(&mut v, t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let offender = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !d[i][j].is_multiple_of(&d[t][t])));
            match offender {
                Some(i) => {
                    let neg_one = BigInt::from(-1);
                    row_axpy(&mut d, t, i, &neg_one);
                    row_axpy(&mut u, t, i, &neg_one);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }

    SmithDecomposition {
        u: IntMatrix::new(u, nr),
        d: IntMatrix::new(d, nc),
        v: IntMatrix::new(v, nc),
    }
}
