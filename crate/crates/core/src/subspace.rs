//! Subspaces of `F_p^n` in canonical (reduced row echelon) form.
//!
//! The RREF basis is a canonical form: two subspaces are equal iff their
//! stored bases are identical, which is what the submodule-lattice
//! deduplication relies on.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    field: PrimeField,
    /// RREF, one basis vector per row, no zero rows.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize, field: PrimeField) -> Self {
        Subspace {
            ambient_dim,
            field,
            basis: Matrix::zeros(0, ambient_dim, field),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize, field: PrimeField) -> Self {
        Self::from_spanning(&Matrix::identity(ambient_dim, field))
    }

    /// The span of the rows of `spanning`.
    pub fn from_spanning(spanning: &Matrix) -> Self {
        let red = spanning.rref();
        let rank = red.rank;
        let rows: Vec<Vec<u64>> = (0..rank).map(|i| red.matrix.row(i).to_vec()).collect();
        Subspace {
            ambient_dim: spanning.cols(),
            field: spanning.field(),
            basis: Matrix::from_row_vectors(&rows, spanning.cols(), spanning.field()),
            pivots: red.pivots,
        }
    }

    pub fn from_vectors(vectors: &[Vec<u64>], ambient_dim: usize, field: PrimeField) -> Self {
        Self::from_spanning(&Matrix::from_row_vectors(vectors, ambient_dim, field))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Basis matrix, one vector per row, in RREF.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[u64]> {
        (0..self.dim()).map(|i| self.basis.row(i))
    }

    /// Reduce `v` modulo the subspace; the result has zeros at all pivots.
    pub fn reduce_vector(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            for j in 0..self.ambient_dim {
                out[j] = self.field.sub(out[j], self.field.mul(c, self.basis.get(r, j)));
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[u64]) -> bool {
        self.reduce_vector(v).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        other.basis_vectors().all(|v| self.contains_vector(v))
    }

    /// Coordinates of `v` in the RREF basis (entries of `v` at the pivots),
    /// or `None` when `v` is outside the subspace.
    pub fn coords_of(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Lattice meet and join via the Zassenhaus block trick: row-reduce
    /// `[U | U; V | 0]`; left-half pivot rows span the sum and rows with zero
    /// left half have right halves spanning the intersection.
    pub fn meet_join(&self, other: &Subspace) -> Result<(Subspace, Subspace)> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        let n = self.ambient_dim;
        let f = self.field;
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(self.dim() + other.dim());
        for v in self.basis_vectors() {
            let mut row = v.to_vec();
            row.extend_from_slice(v);
            rows.push(row);
        }
        for v in other.basis_vectors() {
            let mut row = v.to_vec();
            row.resize(2 * n, 0);
            rows.push(row);
        }
        let big = Matrix::from_row_vectors(&rows, 2 * n, f).rref();
        let mut sum_rows = Vec::new();
        let mut meet_rows = Vec::new();
        for i in 0..big.rank {
            let row = big.matrix.row(i);
            if row[..n].iter().any(|&x| x != 0) {
                sum_rows.push(row[..n].to_vec());
            } else {
                meet_rows.push(row[n..].to_vec());
            }
        }
        let join = Subspace::from_vectors(&sum_rows, n, f);
        let meet = Subspace::from_vectors(&meet_rows, n, f);
        Ok((meet, join))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self.meet_join(other)?.1)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self.meet_join(other)?.0)
    }

    /// Projection onto a complement (a matrix with kernel exactly `self`)
    /// and a right inverse of it.
    pub fn quotient_data(&self) -> (Matrix, Matrix) {
        let n = self.ambient_dim;
        let f = self.field;
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let q = free.len();
        // projection: reduce modulo the subspace, then read off free coords.
        let mut projection = Matrix::zeros(q, n, f);
        for j in 0..n {
            let mut e = vec![0u64; n];
            e[j] = 1;
            let reduced = self.reduce_vector(&e);
            for (qi, &fc) in free.iter().enumerate() {
                projection.set(qi, j, reduced[fc]);
            }
        }
        let mut lift = Matrix::zeros(n, q, f);
        for (qi, &fc) in free.iter().enumerate() {
            lift.set(fc, qi, 1);
        }
        (projection, lift)
    }

    /// Columns of the result are the basis vectors; embeds coordinates back
    /// into the ambient space.
    pub fn embedding_matrix(&self) -> Matrix {
        self.basis.transpose()
    }

    /// Image of the subspace under a matrix acting on the ambient space.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        let rows: Vec<Vec<u64>> = self.basis_vectors().map(|v| m.apply(v)).collect();
        Subspace::from_vectors(&rows, m.rows(), self.field)
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace dim {} of F_{}^{} {:?}",
            self.dim(),
            self.field.p(),
            self.ambient_dim,
            (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect::<Vec<_>>()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn meet_join_idempotent() {
        let u = Subspace::from_vectors(&[vec![1, 0, 1], vec![0, 1, 0]], 3, f2());
        let (meet, join) = u.meet_join(&u).unwrap();
        assert_eq!(meet, u);
        assert_eq!(join, u);
    }

    #[test]
    fn meet_join_full_and_zero() {
        let full = Subspace::full(3, f2());
        let zero = Subspace::zero(3, f2());
        let (meet, join) = full.meet_join(&zero).unwrap();
        assert_eq!(meet, zero);
        assert_eq!(join, full);
    }

    #[test]
    fn meet_join_of_axes_in_plane() {
        let x = Subspace::from_vectors(&[vec![1, 0]], 2, f2());
        let y = Subspace::from_vectors(&[vec![0, 1]], 2, f2());
        let (meet, join) = x.meet_join(&y).unwrap();
        assert!(meet.is_zero());
        assert!(join.is_full());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let u = Subspace::zero(2, f2());
        let v = Subspace::zero(3, f2());
        assert!(u.meet_join(&v).is_err());
    }

    #[test]
    fn quotient_of_zero_subspace_is_identity() {
        let u = Subspace::zero(3, f2());
        let (proj, lift) = u.quotient_data();
        assert_eq!(proj, Matrix::identity(3, f2()));
        assert_eq!(proj.mul(&lift), Matrix::identity(3, f2()));
    }

    #[test]
    fn quotient_of_full_subspace_is_zero_dimensional() {
        let u = Subspace::full(2, f2());
        let (proj, lift) = u.quotient_data();
        assert_eq!(proj.rows(), 0);
        assert_eq!(lift.cols(), 0);
    }

    #[test]
    fn quotient_by_diagonal_line_in_f2_squared() {
        // Verified by multiplying out both identities.
        let u = Subspace::from_vectors(&[vec![1, 1]], 2, f2());
        let (proj, lift) = u.quotient_data();
        assert_eq!(proj.rows(), 1);
        assert_eq!(proj.mul(&lift), Matrix::identity(1, f2()));
        // kernel of projection is exactly u, checked by membership both ways
        let k = proj.kernel_matrix();
        let ker = Subspace::from_spanning(&k);
        assert_eq!(ker, u);
    }

    #[test]
    fn canonical_form_is_presentation_independent() {
        let f = PrimeField::new(3).unwrap();
        let a = Subspace::from_vectors(&[vec![1, 2, 0], vec![0, 1, 1]], 3, f);
        // same space, different spanning set
        let b = Subspace::from_vectors(&[vec![1, 0, 1], vec![1, 1, 2], vec![1, 2, 0]], 3, f);
        assert_eq!(a, b);
    }
}
