//! Linear subspaces in canonical form.
//!
//! A subspace of `ℂⁿ` is stored by its reduced column-echelon basis: each basis
//! vector has a leading 1 in its pivot row, every other basis vector vanishes
//! there, and pivots increase. Two subspaces are equal iff their bases are.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::matrix::{self, combine, is_zero_vector, null_space, rref, Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace { dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        Subspace::span(dim, (0..dim).map(|k| matrix::unit_vector(dim, k)))
    }

    /// Canonical span of `vectors` in `ℂ^dim`. Panics if a vector has the wrong length.
    pub fn span<I: IntoIterator<Item = Vector>>(dim: usize, vectors: I) -> Self {
        let mut rows: Vec<Vector> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), dim, "vector length"))
            .filter(|v| !is_zero_vector(v))
            .collect();
        let pivots = rref(&mut rows, dim);
        Subspace { dim, basis: rows, pivots }
    }

    pub fn try_span(dim: usize, vectors: Vec<Vector>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
        }
        Ok(Subspace::span(dim, vectors))
    }

    pub fn from_matrix_columns(m: &Matrix) -> Self {
        Subspace::span(m.rows(), m.columns())
    }

    /// Dimension of the ambient space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `dim × rank` matrix whose columns are the canonical basis.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.dim, &self.basis)
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.dim
    }

    /// `v − P v` where `P` is the echelon projection; zero iff `v` lies in the subspace.
    pub fn residual(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &(&c * y);
                }
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        v.len() == self.dim && is_zero_vector(&self.residual(v))
    }

    pub fn includes(&self, other: &Subspace) -> bool {
        debug_assert_eq!(self.dim, other.dim);
        other.rank() <= self.rank() && other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn meet(&self, other: &Subspace) -> Subspace {
        debug_assert_eq!(self.dim, other.dim);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.dim);
        }
        // Coefficients c with Σ cᵢ aᵢ ∈ other: the residuals against `other` must cancel.
        let residuals: Vec<Vector> = self.basis.iter().map(|a| other.residual(a)).collect();
        let k = self.rank();
        let equations: Vec<Vector> = (0..self.dim).map(|i| (0..k).map(|j| residuals[j][i].clone()).collect()).collect();
        let coeffs = null_space(equations, k);
        Subspace::span(self.dim, coeffs.iter().map(|c| combine(self.dim, c, &self.basis)))
    }

    pub fn join(&self, other: &Subspace) -> Subspace {
        debug_assert_eq!(self.dim, other.dim);
        Subspace::span(self.dim, self.basis.iter().chain(&other.basis).cloned())
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::AmbientMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(self.meet(other))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(self.join(other))
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(self.includes(other))
    }

    /// Image under `m` (a `k × dim` matrix).
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.dim, "map shape");
        Subspace::span(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }

    /// Coordinates `range` of every vector: the image under a coordinate projection.
    pub fn project(&self, range: Range<usize>) -> Subspace {
        let n = range.len();
        Subspace::span(n, self.basis.iter().map(|v| v[range.clone()].to_vec()))
    }

    /// Image under the coordinate projection keeping `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> Subspace {
        Subspace::span(indices.len(), self.basis.iter().map(|v| indices.iter().map(|&i| v[i].clone()).collect()))
    }

    /// `{v ∈ self : v[range] = 0}`.
    pub fn vanishing_on(&self, range: Range<usize>) -> Subspace {
        let k = self.rank();
        let equations: Vec<Vector> = range.map(|i| (0..k).map(|j| self.basis[j][i].clone()).collect()).collect();
        let coeffs = null_space(equations, k);
        Subspace::span(self.dim, coeffs.iter().map(|c| combine(self.dim, c, &self.basis)))
    }

    /// Embeds into `ℂ^total` at coordinate offset `at`.
    pub fn embed(&self, total: usize, at: usize) -> Subspace {
        assert!(at + self.dim <= total, "embedding out of range");
        Subspace::span(
            total,
            self.basis.iter().map(|v| {
                let mut w = matrix::zero_vector(total);
                w[at..at + self.dim].clone_from_slice(v);
                w
            }),
        )
    }

    /// Cartesian product `self × other` in `ℂ^(dim + other.dim)`.
    pub fn product(&self, other: &Subspace) -> Subspace {
        let total = self.dim + other.dim;
        self.embed(total, 0).join(&other.embed(total, self.dim))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = Subspace::span(3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, vec![v(&[1, 3, 4]), v(&[2, 5, 7]), v(&[0, 0, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 1]);
        assert_eq!(a.basis()[0], v(&[1, 0, 1]));
    }

    #[test]
    fn lattice_basics() {
        let e1 = Subspace::span(2, vec![v(&[1, 0])]);
        let e2 = Subspace::span(2, vec![v(&[0, 1])]);
        assert!(e1.meet(&e2).is_zero());
        assert!(e1.join(&e2).is_full());
        assert_eq!(e1.meet(&e1), e1);
        assert!(e1.intersect(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn vanishing_and_projection() {
        let g = Subspace::span(4, vec![v(&[1, 0, 0, 0]), v(&[0, 1, 1, 0]), v(&[0, 0, 0, 1])]);
        let ker = g.vanishing_on(2..4).project(0..2);
        assert_eq!(ker, Subspace::span(2, vec![v(&[1, 0])]));
        assert_eq!(g.project(0..2), Subspace::full(2));
    }
}
