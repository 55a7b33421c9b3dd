//! Weyl families, minimality and Nevanlinna negative squares.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Signed;
use serde::Serialize;

use super::{relation_in, GreensBoundaryRelation};
use crate::error::{Error, Result};
use crate::matrix::{combine, null_space, Matrix, Vector};
use crate::relation::LinearRelation;
use crate::scalar::Scalar;
use crate::spectrum::{negative_eigenvalue_count, Mode};
use crate::subspace::Subspace;

/// `M(z) = Γ(R̂_z(T))` as a relation in `ℋ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WeylSample {
    pub z: Scalar,
    #[serde(serialize_with = "graph_of")]
    pub family: LinearRelation,
    pub is_operator: bool,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "rows_of")]
    pub matrix: Option<Matrix>,
}

fn graph_of<S: serde::Serializer>(r: &LinearRelation, s: S) -> std::result::Result<S::Ok, S::Error> {
    r.graph().basis().serialize(s)
}

fn rows_of<S: serde::Serializer>(m: &Option<Matrix>, s: S) -> std::result::Result<S::Ok, S::Error> {
    m.as_ref().map(Matrix::to_rows).serialize(s)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MinimalityReport {
    pub minimal: bool,
    /// Dimension of the span of the defect subspaces.
    pub span_dim: usize,
    pub dim: usize,
    /// Supplied points of regular type for `S`; the others are skipped.
    pub regular_points: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NevanlinnaReport {
    pub points: Vec<Scalar>,
    pub negative_squares: usize,
    /// Eigenvalues of the kernel matrix in ascending order.
    pub kernel_eigenvalues: Vec<f64>,
}

/// `{±i, ±2i, 1 + i, −1 + i}` minus the points where `S` has an eigenvalue.
pub fn default_grid(g: &GreensBoundaryRelation) -> Vec<Scalar> {
    let s = g.s();
    [
        Scalar::gauss(0, 1),
        Scalar::gauss(0, -1),
        Scalar::gauss(0, 2),
        Scalar::gauss(0, -2),
        Scalar::gauss(1, 1),
        Scalar::gauss(-1, 1),
    ]
    .into_iter()
    .filter(|z| s.is_point_of_regular_type(z))
    .collect()
}

impl GreensBoundaryRelation {
    pub fn weyl_family(&self, z: &Scalar) -> WeylSample {
        let (k, h) = (self.nk(), self.nh());
        let basis = self.graph().basis();
        // Coefficients c with F′c = zFc pick out the part of Γ over R̂_z(T).
        let rows: Vec<Vector> = (0..k).map(|i| basis.iter().map(|v| &v[k + i] - &(z * &v[i])).collect()).collect();
        let hats: Vec<Vector> = basis.iter().map(|v| v[2 * k..].to_vec()).collect();
        let graph = Subspace::span(2 * h, null_space(rows, basis.len()).iter().map(|c| combine(2 * h, c, &hats)));
        let family = relation_in(&self.h, graph);
        let is_operator = family.is_operator();
        let matrix = family.operator_matrix();
        WeylSample { z: z.clone(), family, is_operator, matrix }
    }

    /// Whether the defect subspaces `R_z(T)` over the regular-type points of `S` span `𝒦`.
    pub fn is_minimal(&self, points: &[Scalar]) -> Result<MinimalityReport> {
        let s = self.s();
        let t = self.t();
        let regular_points: Vec<Scalar> = points.iter().filter(|z| s.is_point_of_regular_type(z)).cloned().collect();
        if regular_points.is_empty() {
            return Err(Error::EmptyRegularSet);
        }
        let span = regular_points.iter().fold(Subspace::zero(self.nk()), |acc, z| acc.join(&t.defect_subspace(z)));
        Ok(MinimalityReport { minimal: span.is_full(), span_dim: span.rank(), dim: self.nk(), regular_points })
    }

    /// Exact Nevanlinna kernel with blocks `(G M(zᵢ) − M(zⱼ)ᴴ G) / (zᵢ − z̄ⱼ)`, `G` the Gram of `ℋ`.
    pub fn nevanlinna_kernel(&self, points: &[Scalar]) -> Result<Matrix> {
        for (a, z) in points.iter().enumerate() {
            if !z.im().is_positive() || points[..a].contains(z) {
                return Err(Error::InvalidSamplePoints);
            }
        }
        let gh = self.h.gram();
        let ms = points
            .iter()
            .map(|z| self.weyl_family(z).matrix.ok_or_else(|| Error::NonOperatorWeylValue(Box::new(z.clone()))))
            .collect::<Result<Vec<Matrix>>>()?;
        let n = self.nh();
        let mut kernel = Matrix::zeros(n * points.len(), n * points.len());
        for (i, (zi, mi)) in points.iter().zip(&ms).enumerate() {
            for (j, (zj, mj)) in points.iter().zip(&ms).enumerate() {
                let den = (zi - &zj.conj()).inv().expect("upper half-plane");
                let block = gh.mul(mi).sub(&mj.conj_transpose().mul(gh)).scale(&den);
                kernel.set_block(i * n, j * n, &block);
            }
        }
        Ok(kernel)
    }

    /// Negative eigenvalues of the Nevanlinna kernel; float mode only.
    pub fn nevanlinna_negative_squares(&self, points: &[Scalar], mode: &Mode) -> Result<NevanlinnaReport> {
        let cfg = mode.float_config()?;
        let kernel = self.nevanlinna_kernel(points)?;
        let m: DMatrix<Complex64> = kernel.to_c64();
        let negative_squares = negative_eigenvalue_count(&m, cfg.kernel_eps);
        let mut kernel_eigenvalues: Vec<f64> = if m.nrows() == 0 {
            Vec::new()
        } else {
            let h = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
            h.symmetric_eigenvalues().iter().cloned().collect()
        };
        kernel_eigenvalues.sort_by(f64::total_cmp);
        Ok(NevanlinnaReport { points: points.to_vec(), negative_squares, kernel_eigenvalues })
    }
}
