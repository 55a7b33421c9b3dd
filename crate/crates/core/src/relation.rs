//! Linear relations between Krein spaces.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{self, combine, null_space, Matrix, Vector};
use crate::scalar::Scalar;
use crate::space::{same_space, KreinSpace, Space};
use crate::subspace::Subspace;

/// A subspace of `from ⊕ to`.
#[derive(Clone, Debug)]
pub struct LinearRelation {
    from: Space,
    to: Space,
    graph: Subspace,
}

impl PartialEq for LinearRelation {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
            && (same_space(&self.from, &other.from) || *self.from == *other.from)
            && (same_space(&self.to, &other.to) || *self.to == *other.to)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Parts {
    pub dom: Subspace,
    pub ran: Subspace,
    pub ker: Subspace,
    pub mul: Subspace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RelationClassification {
    pub operator: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetric: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub self_adjoint: Option<bool>,
    pub isometric: bool,
    pub unitary: bool,
    pub neutral_in_product: bool,
    pub hyper_maximal_in_product: bool,
}

fn compatible(a: &Space, b: &Space) -> bool {
    same_space(a, b) || **a == **b
}

/// Pairs of coefficient vectors `(a, b)` spanning `{Σ aᵢ lᵢ = Σ bⱼ rⱼ}`.
fn matching(n: usize, left: &[Vector], right: &[Vector]) -> Vec<(Vector, Vector)> {
    let (ka, kb) = (left.len(), right.len());
    let rows: Vec<Vector> =
        (0..n).map(|i| left.iter().map(|v| v[i].clone()).chain(right.iter().map(|v| -&v[i])).collect()).collect();
    null_space(rows, ka + kb)
        .into_iter()
        .map(|mut c| {
            let b = c.split_off(ka);
            (c, b)
        })
        .collect()
}

fn concat(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

impl LinearRelation {
    pub fn new(from: Space, to: Space, graph: Subspace) -> Result<Self> {
        let want = from.dim() + to.dim();
        if graph.dim() != want {
            return Err(Error::DimensionMismatch { expected: want, got: graph.dim() });
        }
        Ok(LinearRelation { from, to, graph })
    }

    /// Relation spanned by the given `(f, g)` column vectors of length `dim from + dim to`.
    pub fn from_columns(from: Space, to: Space, columns: Vec<Vector>) -> Result<Self> {
        let n = from.dim() + to.dim();
        let graph = Subspace::try_span(n, columns)?;
        LinearRelation::new(from, to, graph)
    }

    pub fn from_pairs(from: Space, to: Space, pairs: &[(Vector, Vector)]) -> Result<Self> {
        for (f, g) in pairs {
            if f.len() != from.dim() || g.len() != to.dim() {
                return Err(Error::DimensionMismatch { expected: from.dim() + to.dim(), got: f.len() + g.len() });
            }
        }
        let n = from.dim() + to.dim();
        let graph = Subspace::span(n, pairs.iter().map(|(f, g)| concat(f, g)));
        LinearRelation::new(from, to, graph)
    }

    /// Graph of the operator with matrix `m` (`dim to × dim from`).
    pub fn operator(from: Space, to: Space, m: &Matrix) -> Result<Self> {
        if m.rows() != to.dim() || m.cols() != from.dim() {
            return Err(Error::DimensionMismatch { expected: to.dim() * from.dim(), got: m.rows() * m.cols() });
        }
        let n = from.dim();
        let pairs: Vec<(Vector, Vector)> = (0..n).map(|j| (matrix::unit_vector(n, j), m.column(j))).collect();
        LinearRelation::from_pairs(from, to, &pairs)
    }

    pub fn identity(space: &Space) -> Self {
        LinearRelation::operator(space.clone(), space.clone(), &Matrix::identity(space.dim())).expect("square")
    }

    /// `{(0, 0)}`.
    pub fn zero(from: Space, to: Space) -> Self {
        let n = from.dim() + to.dim();
        LinearRelation { from, to, graph: Subspace::zero(n) }
    }

    /// `from × to`.
    pub fn everything(from: Space, to: Space) -> Self {
        let n = from.dim() + to.dim();
        LinearRelation { from, to, graph: Subspace::full(n) }
    }

    pub fn from_space(&self) -> &Space {
        &self.from
    }

    pub fn to_space(&self) -> &Space {
        &self.to
    }

    pub fn graph(&self) -> &Subspace {
        &self.graph
    }

    /// Whether the relation acts in a single space object.
    pub fn is_endo(&self) -> bool {
        same_space(&self.from, &self.to)
    }

    fn nf(&self) -> usize {
        self.from.dim()
    }

    fn nt(&self) -> usize {
        self.to.dim()
    }

    /// Canonical basis split into `(f, g)` pairs.
    pub fn pairs(&self) -> Vec<(Vector, Vector)> {
        let s = self.nf();
        self.graph.basis().iter().map(|v| (v[..s].to_vec(), v[s..].to_vec())).collect()
    }

    pub fn dom(&self) -> Subspace {
        self.graph.project(0..self.nf())
    }

    pub fn ran(&self) -> Subspace {
        self.graph.project(self.nf()..self.nf() + self.nt())
    }

    pub fn ker(&self) -> Subspace {
        self.graph.vanishing_on(self.nf()..self.nf() + self.nt()).project(0..self.nf())
    }

    pub fn mul(&self) -> Subspace {
        self.graph.vanishing_on(0..self.nf()).project(self.nf()..self.nf() + self.nt())
    }

    pub fn parts(&self) -> Parts {
        Parts { dom: self.dom(), ran: self.ran(), ker: self.ker(), mul: self.mul() }
    }

    pub fn is_operator(&self) -> bool {
        self.graph.vanishing_on(0..self.nf()).is_zero()
    }

    /// Matrix of an everywhere defined operator, if the relation is one.
    pub fn operator_matrix(&self) -> Option<Matrix> {
        if !self.is_operator() || self.graph.rank() != self.nf() {
            return None;
        }
        // An everywhere defined operator has the canonical basis (eⱼ, A eⱼ).
        let pairs = self.pairs();
        Some(Matrix::from_columns(self.nt(), &pairs.into_iter().map(|(_, g)| g).collect::<Vec<_>>()))
    }

    pub fn inverse(&self) -> LinearRelation {
        let s = self.nf();
        let graph = Subspace::span(self.graph.dim(), self.graph.basis().iter().map(|v| concat(&v[s..], &v[..s])));
        LinearRelation { from: self.to.clone(), to: self.from.clone(), graph }
    }

    /// `zT = {(f, z g)}`.
    pub fn scale(&self, z: &Scalar) -> LinearRelation {
        let pairs: Vec<(Vector, Vector)> =
            self.pairs().into_iter().map(|(f, g)| (f, matrix::scale_vector(z, &g))).collect();
        LinearRelation::from_pairs(self.from.clone(), self.to.clone(), &pairs).expect("same shape")
    }

    fn check_parallel(&self, other: &LinearRelation) -> Result<()> {
        if !compatible(&self.from, &other.from) || !compatible(&self.to, &other.to) {
            return Err(Error::SpaceMismatch("relations act between different spaces".into()));
        }
        Ok(())
    }

    /// `S + T = {(f, g + k) : (f, g) ∈ S, (f, k) ∈ T}`.
    pub fn operator_sum(&self, other: &LinearRelation) -> Result<LinearRelation> {
        self.check_parallel(other)?;
        let (sp, tp) = (self.pairs(), other.pairs());
        let sf: Vec<Vector> = sp.iter().map(|p| p.0.clone()).collect();
        let sg: Vec<Vector> = sp.iter().map(|p| p.1.clone()).collect();
        let tf: Vec<Vector> = tp.iter().map(|p| p.0.clone()).collect();
        let tk: Vec<Vector> = tp.iter().map(|p| p.1.clone()).collect();
        let (nf, nt) = (self.nf(), self.nt());
        let pairs: Vec<(Vector, Vector)> = matching(nf, &sf, &tf)
            .into_iter()
            .map(|(a, b)| (combine(nf, &a, &sf), matrix::add_vectors(&combine(nt, &a, &sg), &combine(nt, &b, &tk))))
            .collect();
        LinearRelation::from_pairs(self.from.clone(), self.to.clone(), &pairs)
    }

    /// `S +̂ T = {(f + h, g + k)}`.
    pub fn componentwise_sum(&self, other: &LinearRelation) -> Result<LinearRelation> {
        self.check_parallel(other)?;
        Ok(LinearRelation { from: self.from.clone(), to: self.to.clone(), graph: self.graph.join(&other.graph) })
    }

    /// `S ∔ T`, defined only when `S ∩ T = {0}`.
    pub fn disjoint_sum(&self, other: &LinearRelation) -> Result<LinearRelation> {
        self.check_parallel(other)?;
        let common = self.graph.meet(&other.graph);
        if !common.is_zero() {
            return Err(Error::NotDisjoint(common.rank()));
        }
        self.componentwise_sum(other)
    }

    /// `U T = {(f, k) : (f, g) ∈ T, (g, k) ∈ U}`.
    pub fn compose(u: &LinearRelation, t: &LinearRelation) -> Result<LinearRelation> {
        if !compatible(&t.to, &u.from) {
            return Err(Error::SpaceMismatch("compose: target of T differs from source of U".into()));
        }
        let (tp, up) = (t.pairs(), u.pairs());
        let tf: Vec<Vector> = tp.iter().map(|p| p.0.clone()).collect();
        let tg: Vec<Vector> = tp.iter().map(|p| p.1.clone()).collect();
        let ug: Vec<Vector> = up.iter().map(|p| p.0.clone()).collect();
        let uk: Vec<Vector> = up.iter().map(|p| p.1.clone()).collect();
        let (nf, nm, nt) = (t.nf(), t.nt(), u.nt());
        let pairs: Vec<(Vector, Vector)> =
            matching(nm, &tg, &ug).into_iter().map(|(a, b)| (combine(nf, &a, &tf), combine(nt, &b, &uk))).collect();
        LinearRelation::from_pairs(t.from.clone(), u.to.clone(), &pairs)
    }

    /// `R ∩ (D × to)`.
    pub fn restrict(&self, d: &Subspace) -> Result<LinearRelation> {
        if d.dim() != self.nf() {
            return Err(Error::AmbientMismatch { left: self.nf(), right: d.dim() });
        }
        let cyl = d.product(&Subspace::full(self.nt()));
        Ok(LinearRelation { from: self.from.clone(), to: self.to.clone(), graph: self.graph.meet(&cyl) })
    }

    /// `R − z = R + (−z)I`.
    pub fn shift_by(&self, z: &Scalar) -> Result<LinearRelation> {
        if !compatible(&self.from, &self.to) {
            return Err(Error::SameSpaceRequired);
        }
        let id = LinearRelation::operator(self.from.clone(), self.to.clone(), &Matrix::identity(self.nf()))?;
        self.operator_sum(&id.scale(&-z))
    }

    /// `T* = {(k, h) : [f, h] = [g, k] for all (f, g) ∈ T}`, solved directly.
    pub fn adjoint(&self) -> LinearRelation {
        let (nf, nt) = (self.nf(), self.nt());
        let rows: Vec<Vector> = self
            .pairs()
            .iter()
            .map(|(f, g)| {
                let gy: Vector = self.to.gram().mul_vec(g).iter().map(|x| -x.conj()).collect();
                let gx: Vector = self.from.gram().mul_vec(f).iter().map(Scalar::conj).collect();
                concat(&gy, &gx)
            })
            .collect();
        let graph = Subspace::span(nf + nt, null_space(rows, nf + nt));
        LinearRelation { from: self.to.clone(), to: self.from.clone(), graph }
    }

    /// `T* = (T^[⊥])⁻¹` with the companion taken in `from × to`.
    pub fn adjoint_via_companion(&self) -> LinearRelation {
        let prod = KreinSpace::product(&self.from, &self.to);
        let comp = prod.orthogonal_companion(&self.graph);
        LinearRelation { from: self.from.clone(), to: self.to.clone(), graph: comp }.inverse()
    }

    pub fn classify(&self) -> Result<RelationClassification> {
        let adj = self.adjoint();
        let inv = self.inverse();
        let isometric = adj.graph.includes(&inv.graph);
        let unitary = isometric && inv.graph.includes(&adj.graph);
        let prod = KreinSpace::product(&self.from, &self.to).classify_subspace(&self.graph);
        if isometric != prod.neutral || unitary != prod.hyper_maximal_neutral {
            return Err(Error::RouteMismatch("isometry/unitarity vs product-space geometry".into()));
        }
        let (symmetric, self_adjoint) = if self.is_endo() {
            let sym = adj.graph.includes(&self.graph);
            let sa = sym && self.graph.includes(&adj.graph);
            let dbl = KreinSpace::doubled(&self.from).classify_subspace(&self.graph);
            if sym != dbl.neutral || sa != dbl.hyper_maximal_neutral {
                return Err(Error::RouteMismatch("symmetry vs doubled-space geometry".into()));
            }
            (Some(sym), Some(sa))
        } else {
            (None, None)
        };
        Ok(RelationClassification {
            operator: self.is_operator(),
            symmetric,
            self_adjoint,
            isometric,
            unitary,
            neutral_in_product: prod.neutral,
            hyper_maximal_in_product: prod.hyper_maximal_neutral,
        })
    }

    /// `A ⊆ A⁺`; requires a relation in a single space.
    pub fn is_symmetric(&self) -> bool {
        self.adjoint().graph.includes(&self.graph)
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.adjoint().graph == self.graph
    }

    pub fn is_isometric(&self) -> bool {
        self.adjoint().graph.includes(&self.inverse().graph)
    }

    pub fn is_unitary(&self) -> bool {
        self.adjoint().graph == self.inverse().graph
    }

    /// Coefficient vectors `c` with `Σ cⱼ gⱼ = z Σ cⱼ fⱼ`.
    fn eigen_coefficients(&self, z: &Scalar) -> Vec<Vector> {
        assert_eq!(self.nf(), self.nt(), "relation must act in one space");
        let n = self.nf();
        let pairs = self.pairs();
        let rows: Vec<Vector> = (0..n).map(|i| pairs.iter().map(|(f, g)| &g[i] - &(z * &f[i])).collect()).collect();
        null_space(rows, pairs.len())
    }

    /// `ker(R − z) = {f : (f, z f) ∈ R}`.
    pub fn defect_subspace(&self, z: &Scalar) -> Subspace {
        let n = self.nf();
        let fs: Vec<Vector> = self.pairs().into_iter().map(|p| p.0).collect();
        Subspace::span(n, self.eigen_coefficients(z).iter().map(|c| combine(n, c, &fs)))
    }

    pub fn has_eigenvalue_at(&self, z: &Scalar) -> bool {
        !self.defect_subspace(z).is_zero()
    }

    /// In finite dimension `(R − z)⁻¹` is bounded as soon as it is single-valued.
    pub fn is_point_of_regular_type(&self, z: &Scalar) -> bool {
        self.defect_subspace(z).is_zero()
    }

    /// `ran(R − z) = {g − z f}`.
    pub fn shifted_range(&self, z: &Scalar) -> Subspace {
        let n = self.nt();
        Subspace::span(n, self.pairs().into_iter().map(|(f, g)| g.iter().zip(&f).map(|(a, b)| a - &(z * b)).collect()))
    }

    pub fn is_regular_point(&self, z: &Scalar) -> bool {
        self.is_point_of_regular_type(z) && self.shifted_range(z).is_full()
    }

    /// `A₁ [+] A₂` in `K₁ [+] K₂`; the two spaces must be distinct objects.
    pub fn direct_orthogonal_sum(a1: &LinearRelation, a2: &LinearRelation) -> Result<LinearRelation> {
        if !a1.is_endo() || !a2.is_endo() {
            return Err(Error::SameSpaceRequired);
        }
        if same_space(&a1.from, &a2.from) {
            return Err(Error::SharedSpace);
        }
        let ambient = KreinSpace::orthogonal_sum(&a1.from, &a2.from);
        let (n1, n2) = (a1.nf(), a2.nf());
        let z1 = matrix::zero_vector(n1);
        let z2 = matrix::zero_vector(n2);
        let mut pairs = Vec::new();
        for (f, g) in a1.pairs() {
            pairs.push((concat(&f, &z2), concat(&g, &z2)));
        }
        for (f, g) in a2.pairs() {
            pairs.push((concat(&z1, &f), concat(&z1, &g)));
        }
        LinearRelation::from_pairs(ambient.clone(), ambient, &pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(g: i64) -> Space {
        KreinSpace::new(Matrix::from_ints(&[&[g]]), "c").unwrap()
    }

    #[test]
    fn parts_of_multivalued_part() {
        let c2 = KreinSpace::hilbert(2, "c2");
        let v = |xs: &[i64]| xs.iter().map(|&x| Scalar::from_int(x)).collect::<Vector>();
        let t = LinearRelation::from_columns(c2.clone(), c2.clone(), vec![v(&[0, 0, 1, 2])]).unwrap();
        let p = t.parts();
        assert!(p.dom.is_zero());
        assert_eq!(p.mul.rank(), 1);
        assert!(!t.is_operator());
    }

    #[test]
    fn full_relation_over_negative_line() {
        let k = line(-1);
        let a1 = LinearRelation::everything(k.clone(), k.clone());
        assert!(a1.adjoint().graph().is_zero());
        assert_eq!(a1.adjoint(), a1.adjoint_via_companion());
        let c = a1.classify().unwrap();
        assert_eq!(c.symmetric, Some(false));
    }

    #[test]
    fn identity_is_unitary_and_self_adjoint() {
        let h = KreinSpace::hilbert(2, "h");
        let id = LinearRelation::identity(&h);
        let c = id.classify().unwrap();
        assert!(c.unitary && c.isometric && c.operator);
        assert_eq!(c.self_adjoint, Some(true));
        assert_eq!(id.adjoint(), id);
        assert!(id.has_eigenvalue_at(&Scalar::one()));
        assert!(id.is_regular_point(&Scalar::zero()));
    }

    #[test]
    fn flags_absent_between_distinct_spaces() {
        let (a, b) = (line(1), line(1));
        let id = LinearRelation::operator(a, b, &Matrix::identity(1)).unwrap();
        let c = id.classify().unwrap();
        assert!(c.symmetric.is_none() && c.unitary);
    }
}
