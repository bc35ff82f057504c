//! Dense matrices over a prime field, with reduced row echelon form, kernels
//! and linear solving. Row-major storage; vectors are columns and matrices
//! act on the left.

use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: PrimeField,
    entries: Vec<u64>,
}

/// Output of row reduction: the unique RREF together with rank and pivot
/// columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: PrimeField) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, field: PrimeField) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>], field: PrimeField) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = Self::zeros(r, c, field);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, field.reduce_i64(x));
            }
        }
        m
    }

    pub fn from_row_vectors(rows: &[Vec<u64>], cols: usize, field: PrimeField) -> Self {
        let mut m = Self::zeros(rows.len(), cols, field);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            m.entries[i * cols..(i + 1) * cols].copy_from_slice(row);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(v < self.field.p());
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        assert_eq!(self.field, other.field);
        let p = self.field.p();
        let mut out = Matrix::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, (cur + a * other.get(k, j)) % p);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.field, other.field);
        let mut out = self.clone();
        for (x, &y) in out.entries.iter_mut().zip(&other.entries) {
            *x = self.field.add(*x, y);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.field, other.field);
        let mut out = self.clone();
        for (x, &y) in out.entries.iter_mut().zip(&other.entries) {
            *x = self.field.sub(*x, y);
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for x in out.entries.iter_mut() {
            *x = self.field.neg(*x);
        }
        out
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let mut out = self.clone();
        for x in out.entries.iter_mut() {
            *x = self.field.mul(*x, c);
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "shape mismatch in matrix apply");
        let p = self.field.p();
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &x)| (acc + a * x) % p)
            })
            .collect()
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows, self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.field, other.field);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            entries,
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.field, other.field);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    pub fn block_diag(blocks: &[&Matrix], field: PrimeField) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols, field);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            assert_eq!(b.field, field);
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// The unique reduced row echelon form, with rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let p = self.field.p();
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            // Find a pivot at or below row r.
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, col) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let (a, b) = (m.get(r, j), m.get(pr, j));
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.get(r, col));
            if inv != 1 {
                for j in col..m.cols {
                    m.set(r, j, f.mul(m.get(r, j), inv));
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, col);
                if factor == 0 {
                    continue;
                }
                for j in col..m.cols {
                    let v = (m.get(i, j) + (p - factor) * m.get(r, j)) % p;
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of `{v : self * v = 0}`, one kernel vector per row, in RREF.
    pub fn kernel_matrix(&self) -> Matrix {
        let red = self.rref();
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !red.pivots.contains(c))
            .collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u64; self.cols];
            v[fc] = 1;
            for (r, &pc) in red.pivots.iter().enumerate() {
                v[pc] = self.field.neg(red.matrix.get(r, fc));
            }
            rows.push(v);
        }
        // Free columns increase, so the rows already form an echelon basis;
        // normalize through rref for the canonical form.
        Matrix::from_row_vectors(&rows, self.cols, self.field)
            .rref()
            .matrix
            .truncated_to_rank()
    }

    /// Drop trailing zero rows (after rref).
    fn truncated_to_rank(self) -> Matrix {
        let rank = (0..self.rows)
            .take_while(|&i| self.row(i).iter().any(|&x| x != 0))
            .count();
        Matrix {
            rows: rank,
            cols: self.cols,
            field: self.field,
            entries: self.entries[..rank * self.cols].to_vec(),
        }
    }

    /// Some `x` with `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[u64]) -> Result<Option<Vec<u64>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: matrix has {} rows, rhs has {}",
                self.rows,
                b.len()
            )));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let red = aug.rref();
        if red.pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u64; self.cols];
        for (r, &pc) in red.pivots.iter().enumerate() {
            x[pc] = red.matrix.get(r, self.cols);
        }
        Ok(Some(x))
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{}", self.rows, self.cols, self.field.p())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let m = Matrix::identity(2, f2());
        let red = m.rref();
        assert_eq!(red.matrix, m);
        assert_eq!(red.rank, 2);
        assert_eq!(red.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_zero_matrix() {
        let m = Matrix::zeros(3, 2, f2());
        let red = m.rref();
        assert_eq!(red.matrix, m);
        assert_eq!(red.rank, 0);
        assert!(red.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one_over_f2() {
        let m = Matrix::from_rows(&[vec![1, 1], vec![1, 1]], f2());
        let red = m.rref();
        assert_eq!(red.rank, 1);
        assert_eq!(red.matrix, Matrix::from_rows(&[vec![1, 1], vec![0, 0]], f2()));
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let id = Matrix::identity(3, f2());
        assert_eq!(id.kernel_matrix().rows(), 0);
        let z = Matrix::zeros(4, 4, f2());
        assert_eq!(z.kernel_matrix(), Matrix::identity(4, f2()));
    }

    #[test]
    fn kernel_matches_exhaustive_enumeration_over_f2() {
        // Oracle: enumerate all four vectors of F_2^2 for the 1x2 matrix [1 1].
        let m = Matrix::from_rows(&[vec![1, 1]], f2());
        let mut expected = Vec::new();
        for a in 0..2u64 {
            for b in 0..2u64 {
                if (a + b) % 2 == 0 && (a, b) != (0, 0) {
                    expected.push(vec![a, b]);
                }
            }
        }
        assert_eq!(expected, vec![vec![1, 1]]);
        let k = m.kernel_matrix();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), &[1, 1]);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = Matrix::identity(2, f2());
        assert_eq!(id.solve(&[1, 0]).unwrap(), Some(vec![1, 0]));
        let z = Matrix::zeros(2, 2, f2());
        assert_eq!(z.solve(&[1, 0]).unwrap(), None);
        assert!(id.solve(&[1, 0, 0]).is_err());
    }

    #[test]
    fn solve_underdetermined_lands_in_solution_set() {
        // Oracle: exhaust F_2^2 for [[1,1],[0,0]] x = (1,0): solutions {(1,0),(0,1)}.
        let m = Matrix::from_rows(&[vec![1, 1], vec![0, 0]], f2());
        let x = m.solve(&[1, 0]).unwrap().unwrap();
        assert!(x == vec![1, 0] || x == vec![0, 1]);
        assert_eq!(m.apply(&x), vec![1, 0]);
    }

    #[test]
    fn product_and_transpose() {
        let f = PrimeField::new(5).unwrap();
        let a = Matrix::from_rows(&[vec![1, 2], vec![3, 4]], f);
        let b = Matrix::from_rows(&[vec![0, 1], vec![1, 1]], f);
        let ab = a.mul(&b);
        assert_eq!(ab, Matrix::from_rows(&[vec![2, 3], vec![4, 2]], f));
        assert_eq!(a.transpose().transpose(), a);
    }
}
