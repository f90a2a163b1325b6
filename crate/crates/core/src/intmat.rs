//! Dense integer matrices with exact (checked) arithmetic: Hermite normal
//! form, kernel lattice bases, ranks and minors.

use crate::error::{Error, Result};
use crate::vecops;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>, // row-major
}

impl IntMat {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> IntMat {
        assert_eq!(data.len(), rows * cols);
        IntMat { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> IntMat {
        IntMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMat {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> IntMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend_from_slice(row);
        }
        IntMat { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// M * v with overflow detection.
    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        (0..self.rows)
            .map(|i| vecops::checked_dot(self.row(i), v))
            .collect()
    }

    /// Submatrix on the given row and column index sets.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> IntMat {
        let mut data = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &i in row_idx {
            for &j in col_idx {
                data.push(self[(i, j)]);
            }
        }
        IntMat::new(row_idx.len(), col_idx.len(), data)
    }

    /// Restriction to a subset of columns (all rows).
    pub fn restrict_columns(&self, col_idx: &[usize]) -> IntMat {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, col_idx)
    }

    /// Rank by fraction-free Gaussian elimination over i128.
    pub fn rank(&self) -> Result<usize> {
        let mut a: Vec<Vec<i128>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        rank_i128(&mut a, self.cols)
    }

    /// Determinant of a square matrix (Bareiss).
    pub fn det(&self) -> Result<i64> {
        assert_eq!(self.rows, self.cols);
        let mut a: Vec<Vec<i128>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let d = det_bareiss_i128(&mut a)?;
        i64::try_from(d).map_err(|_| Error::Overflow)
    }

    /// Column-style Hermite reduction: returns (rank, kernel lattice basis).
    ///
    /// The kernel basis consists of n - rank linearly independent integer
    /// vectors generating the full saturated kernel {v : M v = 0}; this is
    /// automatic because the basis comes out of a unimodular transform.
    pub fn kernel_basis(&self) -> Result<(usize, Vec<Vec<i64>>)> {
        let d = self.rows;
        let n = self.cols;
        // work on a copy of M, track column operations in U
        let mut m = self.clone();
        let mut u = IntMat::identity(n);
        let mut pivot_col = 0usize;
        for r in 0..d {
            if pivot_col == n {
                break;
            }
            loop {
                // column with the smallest nonzero |entry| in row r among active columns
                let mut best: Option<(usize, i64)> = None;
                for j in pivot_col..n {
                    let v = m[(r, j)];
                    if v != 0 {
                        let a = v.checked_abs().ok_or(Error::Overflow)?;
                        if best.map_or(true, |(_, b)| a < b) {
                            best = Some((j, a));
                        }
                    }
                }
                let Some((jmin, _)) = best else { break };
                let mut reduced_any = false;
                for j in pivot_col..n {
                    if j == jmin || m[(r, j)] == 0 {
                        continue;
                    }
                    let q = m[(r, j)].div_euclid(m[(r, jmin)]);
                    if q != 0 {
                        m.col_sub_mul(j, q, jmin)?;
                        u.col_sub_mul(j, q, jmin)?;
                    }
                    reduced_any = true;
                }
                if !reduced_any {
                    // single nonzero left: make it the pivot
                    m.swap_cols(pivot_col, jmin);
                    u.swap_cols(pivot_col, jmin);
                    if m[(r, pivot_col)] < 0 {
                        m.negate_col(pivot_col);
                        u.negate_col(pivot_col);
                    }
                    pivot_col += 1;
                    break;
                }
            }
        }
        let rank = pivot_col;
        let kernel = (rank..n).map(|j| u.col(j)).collect();
        Ok((rank, kernel))
    }

    fn col_sub_mul(&mut self, j: usize, q: i64, jsrc: usize) -> Result<()> {
        for i in 0..self.rows {
            let p = q.checked_mul(self[(i, jsrc)]).ok_or(Error::Overflow)?;
            self[(i, j)] = self[(i, j)].checked_sub(p).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let c = self.cols;
            self.data.swap(i * c + a, i * c + b);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

fn rank_i128(a: &mut [Vec<i128>], cols: usize) -> Result<usize> {
    let rows = a.len();
    let mut rank = 0usize;
    let mut col = 0usize;
    while rank < rows && col < cols {
        // partial pivot: any nonzero
        let Some(p) = (rank..rows).find(|&i| a[i][col] != 0) else {
            col += 1;
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            if a[i][col] == 0 {
                continue;
            }
            // integer row elimination: a[i] = a[i]*a[rank][col] - a[rank]*a[i][col]
            let f1 = a[rank][col];
            let f2 = a[i][col];
            for j in col..cols {
                let t = a[i][j]
                    .checked_mul(f1)
                    .and_then(|x| a[rank][j].checked_mul(f2).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow)?;
                a[i][j] = t;
            }
            // keep entries small
            let g = row_gcd(&a[i][col..cols]);
            if g > 1 {
                for j in col..cols {
                    a[i][j] /= g;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    Ok(rank)
}

fn row_gcd(row: &[i128]) -> i128 {
    let mut g: i128 = 0;
    for &x in row {
        g = gcd_i128(g, x.abs());
        if g == 1 {
            break;
        }
    }
    g.max(1)
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

fn det_bareiss_i128(a: &mut [Vec<i128>]) -> Result<i128> {
    let n = a.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign: i128 = 1;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Ok(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow)?;
                a[i][j] = t / prev; // exact division (Bareiss)
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Canonical row-style Hermite normal form of the lattice spanned by the
/// given generators. Two generating sets span the same lattice iff their
/// canonical forms are equal. Zero rows are dropped.
pub fn row_hnf_canonical(generators: &[Vec<i64>], n: usize) -> Result<Vec<Vec<i64>>> {
    let mut rows: Vec<Vec<i64>> = generators
        .iter()
        .filter(|r| !vecops::is_zero(r))
        .cloned()
        .collect();
    for r in &rows {
        assert_eq!(r.len(), n);
    }
    let mut fixed = 0usize; // rows above are in final position
    for col in 0..n {
        loop {
            let mut best: Option<(usize, i64)> = None;
            for i in fixed..rows.len() {
                let v = rows[i][col];
                if v != 0 {
                    let a = v.checked_abs().ok_or(Error::Overflow)?;
                    if best.map_or(true, |(_, b)| a < b) {
                        best = Some((i, a));
                    }
                }
            }
            let Some((imin, _)) = best else { break };
            let mut reduced_any = false;
            for i in fixed..rows.len() {
                if i == imin || rows[i][col] == 0 {
                    continue;
                }
                let q = rows[i][col].div_euclid(rows[imin][col]);
                if q != 0 {
                    let new = vecops::checked_sub_mul(&rows[i], q, &rows[imin])?;
                    rows[i] = new;
                }
                reduced_any = true;
            }
            if !reduced_any {
                rows.swap(fixed, imin);
                if rows[fixed][col] < 0 {
                    rows[fixed] = vecops::neg(&rows[fixed]);
                }
                // reduce the entries above the pivot into [0, pivot)
                let pivot = rows[fixed][col];
                for i in 0..fixed {
                    let q = rows[i][col].div_euclid(pivot);
                    if q != 0 {
                        rows[i] = vecops::checked_sub_mul(&rows[i], q, &rows[fixed])?;
                    }
                }
                fixed += 1;
                break;
            }
        }
    }
    rows.truncate(fixed);
    Ok(rows)
}

/// Lattice equality of two generating sets in Z^n.
pub fn same_lattice(a: &[Vec<i64>], b: &[Vec<i64>], n: usize) -> Result<bool> {
    Ok(row_hnf_canonical(a, n)? == row_hnf_canonical(b, n)?)
}
