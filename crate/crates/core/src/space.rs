//! Finite-dimensional Krein spaces.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::matrix::{dot_h, Matrix, Vector};
use crate::scalar::{Rational, Scalar};
use crate::subspace::Subspace;

/// Shared handle. Two relations act in "the same" space iff their handles are pointer-equal.
pub type Space = Arc<KreinSpace>;

pub fn same_space(a: &Space, b: &Space) -> bool {
    Arc::ptr_eq(a, b)
}

/// A basis `Q` with `Qᴴ G Q = diag(signs)`, signs in `{+1, −1}`.
#[derive(Clone, Debug)]
pub struct Splitting {
    basis: Matrix,
    signs: Vec<i8>,
}

impl Splitting {
    pub fn new(basis: Matrix, signs: Vec<i8>) -> Self {
        Splitting { basis, signs }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    fn block_diag(a: &Splitting, b: &Splitting, flip_b: bool) -> Splitting {
        let mut signs = a.signs.clone();
        signs.extend(b.signs.iter().map(|&s| if flip_b { -s } else { s }));
        Splitting { basis: Matrix::block_diag(&[&a.basis, &b.basis]), signs }
    }
}

#[derive(Clone, Debug)]
pub struct KreinSpace {
    gram: Matrix,
    label: String,
    positive: usize,
    negative: usize,
    splitting: Option<Splitting>,
}

impl PartialEq for KreinSpace {
    fn eq(&self, other: &Self) -> bool {
        self.gram == other.gram && self.label == other.label
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SubspaceClass {
    pub neutral: bool,
    pub hyper_maximal_neutral: bool,
    pub non_degenerate: bool,
}

impl KreinSpace {
    /// Validates that `gram` is Hermitian and invertible.
    pub fn new(gram: Matrix, label: impl Into<String>) -> Result<Space> {
        if !gram.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let (q, d) = diagonalize(&gram).ok_or(Error::DegenerateForm)?;
        let negative = d.iter().filter(|x| x.is_negative()).count();
        let positive = d.len() - negative;
        let splitting = split_from_diagonal(q, &d);
        Ok(Arc::new(KreinSpace { gram, label: label.into(), positive, negative, splitting }))
    }

    /// Trusted constructor: `splitting` must satisfy `Qᴴ G Q = diag(signs)`.
    pub fn with_splitting(gram: Matrix, label: impl Into<String>, splitting: Splitting) -> Space {
        let negative = splitting.signs.iter().filter(|&&s| s < 0).count();
        let positive = splitting.signs.len() - negative;
        Arc::new(KreinSpace { gram, label: label.into(), positive, negative, splitting: Some(splitting) })
    }

    pub fn hilbert(dim: usize, label: impl Into<String>) -> Space {
        KreinSpace::with_splitting(Matrix::identity(dim), label, Splitting::new(Matrix::identity(dim), vec![1; dim]))
    }

    /// `𝒦²` with Gram `[[0, −iG], [iG, 0]]`.
    pub fn doubled(k: &Space) -> Space {
        let n = k.dim();
        let g = &k.gram;
        let i = Scalar::i();
        let gram = Matrix::from_blocks(&Matrix::zeros(n, n), &g.scale(&-&i), &g.scale(&i), &Matrix::zeros(n, n));
        // Hyperbolic pairs vⱼ = (eⱼ, 0), wⱼ = (0, i G⁻¹ eⱼ) with [vⱼ, wⱼ] = 1.
        let ginv = g.inverse().expect("gram is invertible");
        let half = Scalar::ratio(1, 2, 0, 1);
        let mut basis = Matrix::zeros(2 * n, 2 * n);
        let mut signs = Vec::with_capacity(2 * n);
        for j in 0..n {
            for (col, sign) in [(2 * j, 1i8), (2 * j + 1, -1i8)] {
                basis[(j, col)] = Scalar::one();
                let c = if sign > 0 { &i * &half } else { -(&i * &half) };
                for r in 0..n {
                    basis[(n + r, col)] = &c * &ginv[(r, j)];
                }
                signs.push(sign);
            }
        }
        KreinSpace::with_splitting(gram, format!("{}²", k.label), Splitting::new(basis, signs))
    }

    /// `X × Y` with Gram `diag(G_X, −G_Y)`.
    pub fn product(x: &Space, y: &Space) -> Space {
        let gram = Matrix::block_diag(&[&x.gram, &y.gram.scale(&Scalar::from_int(-1))]);
        let label = format!("{}×{}", x.label, y.label);
        match (&x.splitting, &y.splitting) {
            (Some(a), Some(b)) => KreinSpace::with_splitting(gram, label, Splitting::block_diag(a, b, true)),
            _ => Arc::new(KreinSpace {
                gram,
                label,
                positive: x.positive + y.negative,
                negative: x.negative + y.positive,
                splitting: None,
            }),
        }
    }

    /// `K [+] H` with Gram `diag(G_K, G_H)`.
    pub fn orthogonal_sum(a: &Space, b: &Space) -> Space {
        let gram = Matrix::block_diag(&[&a.gram, &b.gram]);
        let label = format!("{}[+]{}", a.label, b.label);
        match (&a.splitting, &b.splitting) {
            (Some(p), Some(q)) => KreinSpace::with_splitting(gram, label, Splitting::block_diag(p, q, false)),
            _ => Arc::new(KreinSpace {
                gram,
                label,
                positive: a.positive + b.positive,
                negative: a.negative + b.negative,
                splitting: None,
            }),
        }
    }

    /// `K × H` with `[·,·]_K + (·,·)_H`; `H` must be a Hilbert space.
    pub fn graph_side(k: &Space, h: &Space) -> Result<Space> {
        if !h.is_hilbert() {
            return Err(Error::HilbertRequired);
        }
        Ok(KreinSpace::orthogonal_sum(k, h))
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn negative_index(&self) -> usize {
        self.negative
    }

    pub fn positive_index(&self) -> usize {
        self.positive
    }

    pub fn is_hilbert(&self) -> bool {
        self.negative == 0
    }

    pub fn is_balanced(&self) -> bool {
        self.positive == self.negative
    }

    pub fn splitting(&self) -> Option<&Splitting> {
        self.splitting.as_ref()
    }

    /// `[x, y] = yᴴ G x`.
    pub fn inner_product(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), got: v.len() });
            }
        }
        Ok(self.form(x, y))
    }

    pub(crate) fn form(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot_h(&self.gram.mul_vec(x), y)
    }

    fn assert_lives(&self, a: &Subspace) {
        assert_eq!(a.dim(), self.dim(), "subspace does not live in this space");
    }

    /// `A^[⊥] = {y : [x, y] = 0 for all x ∈ A}`.
    pub fn orthogonal_companion(&self, a: &Subspace) -> Subspace {
        self.assert_lives(a);
        // [a, y] = 0 ⇔ (G a)ᴴ y = 0.
        let rows: Vec<Vector> =
            a.basis().iter().map(|v| self.gram.mul_vec(v).iter().map(Scalar::conj).collect()).collect();
        Subspace::span(self.dim(), crate::matrix::null_space(rows, self.dim()))
    }

    pub fn isotropic_part(&self, a: &Subspace) -> Subspace {
        a.meet(&self.orthogonal_companion(a))
    }

    /// Whether the form vanishes on `A × A`.
    pub fn is_neutral(&self, a: &Subspace) -> bool {
        self.assert_lives(a);
        let images: Vec<Vector> = a.basis().iter().map(|v| self.gram.mul_vec(v)).collect();
        images.iter().all(|gx| a.basis().iter().all(|y| dot_h(gx, y).is_zero()))
    }

    pub fn classify_subspace(&self, a: &Subspace) -> SubspaceClass {
        let comp = self.orthogonal_companion(a);
        let neutral = comp.includes(a);
        SubspaceClass {
            neutral,
            hyper_maximal_neutral: neutral && a.includes(&comp),
            non_degenerate: a.meet(&comp).is_zero(),
        }
    }
}

/// Exact congruence diagonalization: returns `Q` (columns) and `d` with
/// `Qᴴ G Q = diag(d)`, or `None` when `G` is singular.
pub fn diagonalize(gram: &Matrix) -> Option<(Matrix, Vec<Rational>)> {
    let n = gram.rows();
    let mut m = gram.clone();
    let mut q = Matrix::identity(n);
    let mut d = Vec::with_capacity(n);
    for k in 0..n {
        if let Some(p) = (k..n).find(|&p| !m[(p, p)].is_zero()) {
            swap_basis(&mut m, &mut q, k, p);
        } else {
            let (i, j) = (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).find(|&(i, j)| !m[(i, j)].is_zero())?;
            // With mᵢᵢ = mⱼⱼ = 0, replacing qᵢ by qᵢ + t qⱼ for t = conj(mᵢⱼ) gives [qᵢ, qᵢ] = 2|mᵢⱼ|².
            let t = m[(i, j)].conj();
            add_basis(&mut m, &mut q, i, j, &t);
            swap_basis(&mut m, &mut q, k, i);
        }
        let pivot = m[(k, k)].clone();
        for j in k + 1..n {
            if m[(k, j)].is_zero() {
                continue;
            }
            let c = -(&m[(k, j)] / &pivot);
            add_basis(&mut m, &mut q, j, k, &c);
        }
        d.push(pivot.re().clone());
    }
    Some((q, d))
}

/// `q_j ← q_j + c q_k`, updating `M = Qᴴ G Q` by congruence.
fn add_basis(m: &mut Matrix, q: &mut Matrix, j: usize, k: usize, c: &Scalar) {
    let n = m.rows();
    for r in 0..n {
        let v = &q[(r, k)] * c;
        q[(r, j)] += &v;
    }
    for r in 0..n {
        let v = &m[(r, k)] * c;
        m[(r, j)] += &v;
    }
    let cc = c.conj();
    for s in 0..n {
        let v = &m[(k, s)] * &cc;
        m[(j, s)] += &v;
    }
}

fn swap_basis(m: &mut Matrix, q: &mut Matrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    let n = m.rows();
    for r in 0..n {
        let t = q[(r, a)].clone();
        q[(r, a)] = q[(r, b)].clone();
        q[(r, b)] = t;
        let t = m[(r, a)].clone();
        m[(r, a)] = m[(r, b)].clone();
        m[(r, b)] = t;
    }
    for s in 0..n {
        let t = m[(a, s)].clone();
        m[(a, s)] = m[(b, s)].clone();
        m[(b, s)] = t;
    }
}

/// Rescales a diagonalizing basis to signs ±1 when every `|dₖ|` is a norm `|a|²`, `a ∈ ℚ(i)`.
fn split_from_diagonal(mut q: Matrix, d: &[Rational]) -> Option<Splitting> {
    let mut signs = Vec::with_capacity(d.len());
    for (k, dk) in d.iter().enumerate() {
        let a = gaussian_root_of_norm(&dk.abs())?;
        let inv = a.inv()?;
        for r in 0..q.rows() {
            q[(r, k)] = &q[(r, k)] * &inv;
        }
        signs.push(if dk.is_negative() { -1 } else { 1 });
    }
    Some(Splitting::new(q, signs))
}

/// Some `a ∈ ℚ(i)` with `|a|² = r` for positive rational `r`, if one is found.
pub fn gaussian_root_of_norm(r: &Rational) -> Option<Scalar> {
    let n: BigInt = r.numer() * r.denom();
    let den = Rational::from_integer(r.denom().clone());
    let root = n.sqrt();
    if &root * &root == n {
        return Some(Scalar::from_real(Rational::from_integer(root) / den));
    }
    let small = n.to_u64().filter(|&v| v <= 1_000_000_000_000)?;
    let mut x: u64 = 1;
    while x * x < small {
        let rest = small - x * x;
        let y = rest.sqrt();
        if y * y == rest {
            let re = Rational::from_integer(BigInt::from(x)) / &den;
            let im = Rational::from_integer(BigInt::from(y)) / &den;
            return Some(Scalar::new(re, im));
        }
        x += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inertia_of_small_grams() {
        let s = KreinSpace::new(Matrix::from_ints(&[&[1, 0], &[0, -1]]), "d").unwrap();
        assert_eq!((s.positive_index(), s.negative_index()), (1, 1));
        let h = Matrix::from_rows(vec![vec![Scalar::zero(), -Scalar::i()], vec![Scalar::i(), Scalar::zero()]]);
        let s = KreinSpace::new(h, "h").unwrap();
        assert_eq!(s.negative_index(), 1);
        assert!(s.splitting().is_some());
        assert!(KreinSpace::new(Matrix::from_ints(&[&[1, 1], &[1, 1]]), "s").is_err());
        assert!(KreinSpace::new(Matrix::from_ints(&[&[1, 2], &[0, 1]]), "n").is_err());
    }

    #[test]
    fn splitting_diagonalizes() {
        for g in [
            Matrix::from_ints(&[&[2, 1], &[1, -3]]),
            Matrix::from_ints(&[&[0, 5], &[5, 0]]),
            Matrix::from_ints(&[&[4, 0, 0], &[0, 0, 2], &[0, 2, 0]]),
        ] {
            let s = KreinSpace::new(g, "g").unwrap();
            if let Some(sp) = s.splitting() {
                let q = sp.basis();
                let d = q.conj_transpose().mul(s.gram()).mul(q);
                let want: Vec<Scalar> = sp.signs().iter().map(|&x| Scalar::from_int(x as i64)).collect();
                assert_eq!(d, Matrix::diagonal(&want));
            }
        }
    }

    #[test]
    fn doubled_splitting_is_valid() {
        let k = KreinSpace::new(Matrix::from_ints(&[&[2, 1], &[1, -1]]), "k").unwrap();
        let d = KreinSpace::doubled(&k);
        let sp = d.splitting().unwrap();
        let q = sp.basis();
        let m = q.conj_transpose().mul(d.gram()).mul(q);
        let want: Vec<Scalar> = sp.signs().iter().map(|&x| Scalar::from_int(x as i64)).collect();
        assert_eq!(m, Matrix::diagonal(&want));
        assert_eq!(d.negative_index(), 2);
    }
}
