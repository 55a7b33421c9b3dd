//! Green's boundary relations `Γ: 𝒦² → ℋ²`.
//!
//! Graph vectors are laid out as `(f, f′, h, h′)` with `f, f′ ∈ 𝒦` and `h, h′ ∈ ℋ`.

mod reports;
mod transform;
mod weyl;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Vector;
use crate::relation::LinearRelation;
use crate::space::{KreinSpace, Space};
use crate::subspace::Subspace;

pub use reports::{ClosureReport, MinimalityConsequences, RangeDensityReport};
pub use transform::{inverse_main_transformation, jay, jay_inverse};
pub use weyl::{default_grid, MinimalityReport, NevanlinnaReport, WeylSample};

/// Attached to every report so finite-dimensional answers are not read as infinite-dimensional claims.
pub const FINITE_DIMENSION_NOTE: &str = "finite dimension: every subspace and relation is closed, \
closures are identities, dense means full, bounded means single-valued, and the three maximality \
conditions coincide";

#[derive(Clone, Debug)]
pub struct GreensBoundaryRelation {
    k: Space,
    h: Space,
    gamma: LinearRelation,
}

/// A relation in `space` with the given graph.
pub(crate) fn relation_in(space: &Space, graph: Subspace) -> LinearRelation {
    LinearRelation::new(space.clone(), space.clone(), graph).expect("graph lives in space²")
}

fn graph_columns<S: Serializer>(r: &LinearRelation, s: S) -> std::result::Result<S::Ok, S::Error> {
    r.graph().basis().serialize(s)
}

/// Lemma-level symmetry of the kernels and multivalued parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentSymmetry {
    pub ker_gamma0: bool,
    pub ker_gamma1: bool,
    pub ker_gamma: bool,
    pub mul_gamma0: bool,
    pub mul_gamma1: bool,
    pub mul_gamma: bool,
}

impl ComponentSymmetry {
    pub fn all(&self) -> bool {
        self.ker_gamma0 && self.ker_gamma1 && self.ker_gamma && self.mul_gamma0 && self.mul_gamma1 && self.mul_gamma
    }
}

/// `T = dom Γ`, `S = T⁺`, `M` the isotropic part of `dom Γ`, `N = ker Γ`, and the range-side analogues.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerivedObjects {
    #[serde(rename = "T", serialize_with = "graph_columns")]
    pub t: LinearRelation,
    #[serde(rename = "S", serialize_with = "graph_columns")]
    pub s: LinearRelation,
    #[serde(rename = "M", serialize_with = "graph_columns")]
    pub m: LinearRelation,
    #[serde(rename = "N", serialize_with = "graph_columns")]
    pub n: LinearRelation,
    #[serde(rename = "S~", serialize_with = "graph_columns")]
    pub s_tilde: LinearRelation,
    #[serde(rename = "M~", serialize_with = "graph_columns")]
    pub m_tilde: LinearRelation,
    #[serde(rename = "N~", serialize_with = "graph_columns")]
    pub n_tilde: LinearRelation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Maximality {
    /// `(dom Γ)⁺ ⊆ dom Γ` with the adjoint solved directly.
    pub cond222: bool,
    /// `(dom Γ)⁺ ⊆ dom Γ` with the adjoint taken through the product-space companion.
    pub cond223: bool,
    /// `(dom Γ)^[⊥] ⊆ dom Γ` in `𝒦²`.
    pub cond228: bool,
    /// `S⁺ = dom Γ`, checked only when the condition holds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_adjoint_is_dom: Option<bool>,
    pub note: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundaryFlags {
    pub greens: bool,
    pub isometric_boundary: bool,
    pub unitary_boundary: bool,
    pub ordinary_triple: bool,
    pub ab_generalized: bool,
    pub b_generalized: bool,
    pub quasi_boundary: bool,
    pub s_generalized: bool,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundaryClassification {
    pub flags: BoundaryFlags,
    pub maximality: Maximality,
    pub derived: DerivedObjects,
    pub note: &'static str,
}

impl GreensBoundaryRelation {
    /// Certifies the Green identity on all pairs of graph basis vectors.
    pub fn build(k: Space, h: Space, graph: Subspace) -> Result<Self> {
        if !h.is_hilbert() {
            return Err(Error::HilbertRequired);
        }
        let (kd, hd) = (KreinSpace::doubled(&k), KreinSpace::doubled(&h));
        let gamma = LinearRelation::new(kd.clone(), hd.clone(), graph)?;
        // [x, y] in 𝒦² × ℋ² is [f̂, ĝ]_𝒦² − [ĥ, k̂]_ℋ², the Green defect.
        let prod = KreinSpace::product(&kd, &hd);
        let basis = gamma.graph().basis();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let defect = prod.form(x, y);
                if !defect.is_zero() {
                    return Err(Error::GreenIdentityViolation { i, j, defect: Box::new(defect) });
                }
            }
        }
        Ok(GreensBoundaryRelation { k, h, gamma })
    }

    pub fn from_columns(k: Space, h: Space, columns: Vec<Vector>) -> Result<Self> {
        let n = 2 * k.dim() + 2 * h.dim();
        let graph = Subspace::try_span(n, columns)?;
        GreensBoundaryRelation::build(k, h, graph)
    }

    pub fn k(&self) -> &Space {
        &self.k
    }

    pub fn h(&self) -> &Space {
        &self.h
    }

    /// `Γ` as a relation from `𝒦²` to `ℋ²`.
    pub fn gamma(&self) -> &LinearRelation {
        &self.gamma
    }

    pub fn graph(&self) -> &Subspace {
        self.gamma.graph()
    }

    pub fn doubled_k(&self) -> &Space {
        self.gamma.from_space()
    }

    pub fn doubled_h(&self) -> &Space {
        self.gamma.to_space()
    }

    fn nk(&self) -> usize {
        self.k.dim()
    }

    fn nh(&self) -> usize {
        self.h.dim()
    }

    /// `(Γ₀, Γ₁)` as relations `𝒦² → ℋ`.
    pub fn components(&self) -> (LinearRelation, LinearRelation) {
        let (k2, h) = (2 * self.nk(), self.nh());
        let g = self.graph();
        let g0 = g.project(0..k2 + h);
        let idx: Vec<usize> = (0..k2).chain(k2 + h..k2 + 2 * h).collect();
        let g1 = g.select(&idx);
        let kd = self.doubled_k().clone();
        (
            LinearRelation::new(kd.clone(), self.h.clone(), g0).expect("shape"),
            LinearRelation::new(kd, self.h.clone(), g1).expect("shape"),
        )
    }

    /// Kernels of `Γ₀`, `Γ₁`, `Γ` as relations in `𝒦` and the multivalued parts as relations in `ℋ`,
    /// with `mul Γ₀` read as `{(h, 0)}` and `mul Γ₁` as `{(0, h′)}`.
    pub fn component_symmetry(&self) -> ComponentSymmetry {
        let (g0, g1) = self.components();
        let h = self.nh();
        let in_k = |s: Subspace| relation_in(&self.k, s).is_symmetric();
        let in_h = |s: Subspace| relation_in(&self.h, s).is_symmetric();
        ComponentSymmetry {
            ker_gamma0: in_k(g0.ker()),
            ker_gamma1: in_k(g1.ker()),
            ker_gamma: in_k(self.gamma.ker()),
            mul_gamma0: in_h(g0.mul().embed(2 * h, 0)),
            mul_gamma1: in_h(g1.mul().embed(2 * h, h)),
            mul_gamma: in_h(self.gamma.mul()),
        }
    }

    /// `T = dom Γ` as a relation in `𝒦`.
    pub fn t(&self) -> LinearRelation {
        relation_in(&self.k, self.gamma.dom())
    }

    /// `S = (dom Γ)⁺`.
    pub fn s(&self) -> LinearRelation {
        self.t().adjoint()
    }

    pub fn derived_objects(&self) -> DerivedObjects {
        let dom = self.gamma.dom();
        let ran = self.gamma.ran();
        let t = relation_in(&self.k, dom.clone());
        let s = t.adjoint();
        let m = relation_in(&self.k, self.doubled_k().isotropic_part(&dom));
        let n = relation_in(&self.k, self.gamma.ker());
        let s_tilde = relation_in(&self.h, ran.clone()).adjoint();
        let m_tilde = relation_in(&self.h, self.doubled_h().isotropic_part(&ran));
        let n_tilde = relation_in(&self.h, self.gamma.mul());
        DerivedObjects { t, s, m, n, s_tilde, m_tilde, n_tilde }
    }

    pub fn check_maximality(&self) -> Maximality {
        let dom = self.gamma.dom();
        let t = relation_in(&self.k, dom.clone());
        let s = t.adjoint();
        let cond222 = dom.includes(s.graph());
        let cond223 = dom.includes(t.adjoint_via_companion().graph());
        let cond228 = dom.includes(&self.doubled_k().orthogonal_companion(&dom));
        let s_adjoint_is_dom = cond222.then(|| s.adjoint().graph() == &dom);
        Maximality { cond222, cond223, cond228, s_adjoint_is_dom, note: FINITE_DIMENSION_NOTE }
    }

    /// Whether `Γ = ker Γ × mul Γ`.
    pub fn is_trivial(&self) -> bool {
        &self.gamma.ker().product(&self.gamma.mul()) == self.graph()
    }

    /// `ker Γ₀` is a self-adjoint relation; `operator` additionally asks for `mul ker Γ₀ = {0}`.
    fn ker_gamma0_self_adjoint(&self, g0: &LinearRelation) -> (bool, bool) {
        let a = relation_in(&self.k, g0.ker());
        let sa = a.is_self_adjoint();
        (sa, sa && a.is_operator())
    }

    pub fn flags_with(&self, maximality: &Maximality) -> BoundaryFlags {
        let (g0, _) = self.components();
        let isometric_boundary = maximality.cond222;
        let ran_full = self.gamma.ran().is_full();
        let ran0_full = g0.ran().is_full();
        let (ker0_sa, ker0_sa_op) = self.ker_gamma0_self_adjoint(&g0);
        let unitary_boundary = self.gamma.is_unitary();
        let ab_generalized = isometric_boundary && ran0_full && ker0_sa;
        BoundaryFlags {
            greens: true,
            isometric_boundary,
            unitary_boundary,
            ordinary_triple: ran_full && maximality.cond228,
            ab_generalized,
            b_generalized: ab_generalized && ran0_full,
            quasi_boundary: isometric_boundary && ran_full && ker0_sa_op,
            s_generalized: unitary_boundary && ker0_sa_op,
            trivial: self.is_trivial(),
        }
    }

    pub fn flags(&self) -> BoundaryFlags {
        self.flags_with(&self.check_maximality())
    }

    pub fn classify_boundary(&self) -> BoundaryClassification {
        let maximality = self.check_maximality();
        let flags = self.flags_with(&maximality);
        BoundaryClassification { flags, maximality, derived: self.derived_objects(), note: FINITE_DIMENSION_NOTE }
    }

    /// Restriction of `Γ` to `A × ℋ²` for a subspace `A ⊆ 𝒦²`; the result is again a Green relation.
    pub fn restrict(&self, a: &Subspace) -> Result<GreensBoundaryRelation> {
        let gamma = self.gamma.restrict(a)?;
        Ok(GreensBoundaryRelation { k: self.k.clone(), h: self.h.clone(), gamma })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::scalar::Scalar;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    fn line(g: i64) -> Space {
        KreinSpace::new(Matrix::from_ints(&[&[g]]), "line").unwrap()
    }

    pub(crate) fn identity_gamma() -> GreensBoundaryRelation {
        let (k, h) = (KreinSpace::hilbert(1, "K"), KreinSpace::hilbert(1, "H"));
        GreensBoundaryRelation::from_columns(k, h, vec![v(&[1, 0, 1, 0]), v(&[0, 1, 0, 1])]).unwrap()
    }

    #[test]
    fn identity_gamma_is_ordinary() {
        let g = identity_gamma();
        let c = g.classify_boundary();
        assert!(c.flags.ordinary_triple && c.flags.unitary_boundary && c.flags.b_generalized);
        assert!(c.derived.s.graph().is_zero());
        assert!(c.derived.m.graph().is_zero() && c.derived.n.graph().is_zero());
        // ker Γ₀ = {0} × ℂ is self-adjoint but multivalued.
        assert!(!c.flags.s_generalized && !c.flags.quasi_boundary);
        assert!(c.maximality.cond222 && c.maximality.cond223 && c.maximality.cond228);
        assert!(g.component_symmetry().all());
    }

    #[test]
    fn sign_flip_is_rejected() {
        let err = GreensBoundaryRelation::from_columns(line(-1), line(1), vec![v(&[1, 0, 1, 0]), v(&[0, 1, 0, 1])])
            .unwrap_err();
        assert!(matches!(err, Error::GreenIdentityViolation { .. }));
    }

    #[test]
    fn zero_gamma_fails_maximality() {
        let g = GreensBoundaryRelation::from_columns(line(1), line(1), vec![]).unwrap();
        let m = g.check_maximality();
        assert!(!m.cond222 && !m.cond223 && !m.cond228);
        assert!(g.s().graph().is_full());
    }
}
