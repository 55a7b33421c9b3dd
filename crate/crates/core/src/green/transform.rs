//! The main transformation `𝒥: (f, f′, h, h′) ↦ ((f, h), (f′, −h′))`.

use super::{relation_in, GreensBoundaryRelation};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::relation::LinearRelation;
use crate::space::{KreinSpace, Space};
use crate::subspace::Subspace;

/// `𝒥` on a single vector of `𝒦² × ℋ²` with `dim 𝒦 = k`, `dim ℋ = h`.
pub fn jay(k: usize, h: usize, v: &[crate::Scalar]) -> Vector {
    assert_eq!(v.len(), 2 * k + 2 * h, "vector length");
    let (f, fp) = (&v[..k], &v[k..2 * k]);
    let (hh, hp) = (&v[2 * k..2 * k + h], &v[2 * k + h..]);
    let mut out = Vec::with_capacity(v.len());
    out.extend_from_slice(f);
    out.extend_from_slice(hh);
    out.extend_from_slice(fp);
    out.extend(hp.iter().map(|x| -x));
    out
}

/// `𝒥⁻¹: ((a, b), (a′, b′)) ↦ (a, a′, b, −b′)`.
pub fn jay_inverse(k: usize, h: usize, w: &[crate::Scalar]) -> Vector {
    assert_eq!(w.len(), 2 * k + 2 * h, "vector length");
    let (a, b) = (&w[..k], &w[k..k + h]);
    let (ap, bp) = (&w[k + h..2 * k + h], &w[2 * k + h..]);
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(a);
    out.extend_from_slice(ap);
    out.extend_from_slice(b);
    out.extend(bp.iter().map(|x| -x));
    out
}

impl GreensBoundaryRelation {
    /// `Ã = 𝒥(Γ)`, a relation in `𝒦 × ℋ` with `[·,·]_𝒦 + (·,·)_ℋ`.
    pub fn main_transformation(&self) -> LinearRelation {
        let (k, h) = (self.nk(), self.nh());
        let side = KreinSpace::graph_side(&self.k, &self.h).expect("H is Hilbert");
        let graph = Subspace::span(2 * (k + h), self.graph().basis().iter().map(|v| jay(k, h, v)));
        relation_in(&side, graph)
    }
}

/// `Γ = 𝒥⁻¹(Ã)`; `Ã` must be symmetric in `𝒦 × ℋ`.
pub fn inverse_main_transformation(a: &LinearRelation, k: &Space, h: &Space) -> Result<GreensBoundaryRelation> {
    if !h.is_hilbert() {
        return Err(Error::HilbertRequired);
    }
    let (nk, nh) = (k.dim(), h.dim());
    let want = Matrix::block_diag(&[k.gram(), h.gram()]);
    for side in [a.from_space(), a.to_space()] {
        if side.gram() != &want {
            return Err(Error::SpaceMismatch("relation does not act in K × H".into()));
        }
    }
    if !a.is_symmetric() {
        return Err(Error::SymmetryRequired);
    }
    let graph = Subspace::span(2 * (nk + nh), a.graph().basis().iter().map(|w| jay_inverse(nk, nh, w)));
    GreensBoundaryRelation::build(k.clone(), h.clone(), graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn round_trip_on_vectors() {
        let x = v(&[1, 2, 3, 4, 5, 6, 7]);
        let (k, h) = (2, 1);
        let x = &x[..2 * k + 2 * h];
        assert_eq!(jay_inverse(k, h, &jay(k, h, x)), x.to_vec());
        assert_eq!(jay(1, 1, &v(&[1, 2, 3, 4])), v(&[1, 3, 2, -4]));
    }

    #[test]
    fn diagonal_relation_gives_trivial_unitary() {
        let k = KreinSpace::new(Matrix::from_ints(&[&[-1]]), "K").unwrap();
        let h = KreinSpace::hilbert(1, "H");
        let side = KreinSpace::graph_side(&k, &h).unwrap();
        let a = LinearRelation::from_columns(side.clone(), side, vec![v(&[1, 1, 0, 0]), v(&[0, 0, 1, 1])]).unwrap();
        assert!(a.is_self_adjoint());
        let g = inverse_main_transformation(&a, &k, &h).unwrap();
        assert_eq!(g.main_transformation().graph(), a.graph());
        let f = g.flags();
        assert!(f.unitary_boundary);
        // Γ = {((x, y), (x, −y))} is a unitary operator, so it is not trivial.
        assert!(!f.trivial);
        assert!(g.gamma().is_operator());
    }
}
