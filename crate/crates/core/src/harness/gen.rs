//! Random instance generators.
//!
//! Neutral subspaces are built exactly in the coordinates of a space's rational splitting
//! basis, so every generated object is certified by exact arithmetic.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::GeneratorConfig;
use crate::error::{Error, Result};
use crate::green::{inverse_main_transformation, GreensBoundaryRelation};
use crate::matrix::{combine, unit_vector, Matrix, Vector};
use crate::relation::LinearRelation;
use crate::scalar::{Rational, Scalar};
use crate::space::{KreinSpace, Space, Splitting};
use crate::spectrum::Mode;
use crate::subspace::Subspace;

/// Retries per generated instance.
pub const RETRY_BUDGET: usize = 100;

/// Rational points on the unit circle, from Pythagorean triples.
const PYTHAGOREAN: [(i64, i64, i64); 5] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GbrKind {
    /// Any neutral graph in `𝒦² × ℋ²`.
    Any,
    /// `𝒥⁻¹(A₁ [+] A₂)` with `A₁` self-adjoint and `A₂` symmetric.
    IsometricBoundary,
    /// `𝒥⁻¹(A₁ [+] A₂)` with both self-adjoint.
    UnitaryBoundary,
    /// Unitary with `ran Γ = ℋ²`, from a hyper-maximal neutral graph.
    Ordinary,
    /// Unitary with `ran Γ = ℋ²`, from a self-adjoint relation in `𝒦 × ℋ`.
    Surjective,
    /// Hyper-maximal neutral graph in `𝒦² × ℋ²`.
    GenericUnitary,
    /// A unitary relation restricted to `A⁺` for a symmetric `A` between `ker Γ` and `dom Γ`.
    GenericIsometricBoundary,
}

pub struct Gen {
    rng: ChaCha8Rng,
    cfg: GeneratorConfig,
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn exhausted(what: &str) -> Error {
    Error::GenerationExhausted(what.into())
}

impl Gen {
    /// Independent stream for one trial of a run.
    pub fn for_trial(cfg: &GeneratorConfig, trial: usize) -> Self {
        let seed = splitmix(cfg.seed ^ splitmix(trial as u64));
        Gen { rng: ChaCha8Rng::seed_from_u64(seed), cfg: cfg.clone() }
    }

    pub fn config(&self) -> &GeneratorConfig {
        &self.cfg
    }

    pub fn mode(&self) -> Mode {
        self.cfg.mode()
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    /// Uniform on `lo..=hi`.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    pub fn dim(&mut self) -> usize {
        self.between(1, self.cfg.max_dim)
    }

    /// Mostly integers in `[−b, b]`; otherwise a denominator in `[2, b]`.
    pub fn rational(&mut self) -> Rational {
        let b = self.cfg.entry_bound.max(1) as i64;
        let n = self.rng.random_range(-b..=b);
        let d = if b >= 2 && self.chance(0.25) { self.rng.random_range(2..=b) } else { 1 };
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn scalar(&mut self) -> Scalar {
        let re = self.rational();
        let im = if self.chance(0.5) { self.rational() } else { Rational::from_integer(0.into()) };
        Scalar::new(re, im)
    }

    /// Random entries, about a third of them zero.
    pub fn vector(&mut self, n: usize) -> Vector {
        (0..n).map(|_| if self.chance(0.3) { Scalar::zero() } else { self.scalar() }).collect()
    }

    pub fn unimodular(&mut self) -> Scalar {
        let (p, q, r) = match self.below(3) {
            0 => (1, 0, 1),
            1 => (0, 1, 1),
            _ => {
                let (p, q, r) = PYTHAGOREAN[self.below(PYTHAGOREAN.len())];
                if self.chance(0.5) {
                    (p, q, r)
                } else {
                    (q, p, r)
                }
            }
        };
        let p = if self.chance(0.5) { p } else { -p };
        let q = if self.chance(0.5) { q } else { -q };
        Scalar::ratio(p, r, q, r)
    }

    /// Invertible matrix with small entries: a permuted product of unit-triangular factors.
    fn small_invertible(&mut self, n: usize) -> Matrix {
        if self.chance(0.25) {
            return Matrix::identity(n);
        }
        let small = |g: &mut Gen| match g.below(5) {
            0 | 1 => Scalar::zero(),
            2 => Scalar::one(),
            3 => Scalar::from_int(-1),
            _ => {
                if g.chance(0.5) {
                    Scalar::i()
                } else {
                    Scalar::from_int(2)
                }
            }
        };
        let mut l = Matrix::identity(n);
        let mut u = Matrix::identity(n);
        for i in 0..n {
            for j in 0..i {
                l[(i, j)] = small(self);
                u[(j, i)] = small(self);
            }
            u[(i, i)] = match self.below(4) {
                0 => Scalar::from_int(2),
                1 => Scalar::from_int(-1),
                _ => Scalar::one(),
            };
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        let p = Matrix::from_columns(n, &perm.iter().map(|&k| unit_vector(n, k)).collect::<Vec<_>>());
        p.mul(&l).mul(&u)
    }

    /// `G = Pᴴ diag(+1, …, −1, …) P` with its splitting basis `P⁻¹`.
    pub fn krein_space(&mut self, dim: usize, kappa: usize, label: &str) -> Space {
        assert!(kappa <= dim, "kappa ≤ dim");
        let signs: Vec<i8> = (0..dim).map(|i| if i < dim - kappa { 1 } else { -1 }).collect();
        let d = Matrix::diagonal(&signs.iter().map(|&s| Scalar::from_int(s as i64)).collect::<Vec<_>>());
        let p = self.small_invertible(dim);
        let gram = p.conj_transpose().mul(&d).mul(&p);
        let q = p.inverse().expect("invertible by construction");
        KreinSpace::with_splitting(gram, label, Splitting::new(q, signs))
    }

    /// Negative index from the config, or uniform on `0..=dim`.
    pub fn kappa_for(&mut self, dim: usize) -> usize {
        match self.cfg.kappa {
            Some(k) => k.min(dim),
            None => self.between(0, dim),
        }
    }

    pub fn any_krein_space(&mut self, label: &str) -> Space {
        let dim = self.dim();
        let kappa = self.kappa_for(dim);
        self.krein_space(dim, kappa, label)
    }

    pub fn hilbert_space(&mut self, dim: usize, label: &str) -> Space {
        self.krein_space(dim, 0, label)
    }

    /// Random skew-Hermitian `m × m` matrix: zero, sparse or dense.
    fn skew_hermitian(&mut self, m: usize) -> Matrix {
        let mut w = Matrix::zeros(m, m);
        let density = [0.0, 0.3, 1.0][self.below(3)];
        for i in 0..m {
            for j in i..m {
                if !self.chance(density) {
                    continue;
                }
                if i == j {
                    w[(i, i)] = Scalar::new(Rational::from_integer(0.into()), self.rational());
                } else {
                    let z = self.scalar();
                    w[(j, i)] = -z.conj();
                    w[(i, j)] = z;
                }
            }
        }
        w
    }

    /// A `k`-dimensional neutral subspace of `space`.
    pub fn neutral(&mut self, space: &Space, k: usize) -> Result<Subspace> {
        let split = space.splitting().ok_or(Error::NoRationalSplitting)?;
        let n = space.dim();
        let mut pos: Vec<usize> = (0..n).filter(|&i| split.signs()[i] > 0).collect();
        let mut neg: Vec<usize> = (0..n).filter(|&i| split.signs()[i] < 0).collect();
        let m = pos.len().min(neg.len());
        if k > m {
            return Err(Error::NeutralTooLarge { requested: k, max: m });
        }
        pos.shuffle(&mut self.rng);
        neg.shuffle(&mut self.rng);
        // ℓᵢ = e_p + u e_n and ℓ′ᵢ = e_p − u e_n are neutral with [ℓᵢ, ℓ′ⱼ] = 2δᵢⱼ,
        // so xᵢ = ℓᵢ + Σⱼ Cⱼᵢ ℓ′ⱼ spans a neutral subspace iff C is skew-Hermitian.
        let mut ell = Vec::with_capacity(m);
        let mut ell_p = Vec::with_capacity(m);
        for i in 0..m {
            let u = self.unimodular();
            let mut a = unit_vector(n, pos[i]);
            let mut b = unit_vector(n, pos[i]);
            a[neg[i]] = u.clone();
            b[neg[i]] = -u;
            ell.push(a);
            ell_p.push(b);
        }
        let c = self.skew_hermitian(m);
        let xs: Vec<Vector> = (0..m)
            .map(|i| {
                let mut v = ell[i].clone();
                for (j, lp) in ell_p.iter().enumerate() {
                    let cji = &c[(j, i)];
                    if !cji.is_zero() {
                        v = crate::matrix::add_vectors(&v, &crate::matrix::scale_vector(cji, lp));
                    }
                }
                v
            })
            .collect();
        let mut chosen = if k == m {
            xs
        } else {
            let mut out = None;
            for _ in 0..RETRY_BUDGET {
                let combos: Vec<Vector> = (0..k).map(|_| combine(n, &self.vector(m), &xs)).collect();
                if Subspace::span(n, combos.clone()).rank() == k {
                    out = Some(combos);
                    break;
                }
            }
            out.ok_or_else(|| exhausted("neutral combinations"))?
        };
        if self.chance(0.3) {
            if let Some(u) = self.cayley(split.signs()) {
                chosen = chosen.iter().map(|x| u.mul_vec(x)).collect();
            }
        }
        let q = split.basis();
        let a = Subspace::span(n, chosen.iter().map(|x| q.mul_vec(x)));
        debug_assert!(space.is_neutral(&a) && a.rank() == k);
        Ok(a)
    }

    /// `U = (I − A)(I + A)⁻¹` with `A = D W`, `W` skew-Hermitian: a `D`-unitary mixing matrix.
    fn cayley(&mut self, signs: &[i8]) -> Option<Matrix> {
        let n = signs.len();
        let mut w = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                if self.chance(0.25) {
                    let z = Scalar::from_int(self.between(1, 2) as i64)
                        * if self.chance(0.5) { Scalar::one() } else { Scalar::i() };
                    w[(j, i)] = -z.conj();
                    w[(i, j)] = z;
                }
            }
        }
        let d = Matrix::diagonal(&signs.iter().map(|&s| Scalar::from_int(s as i64)).collect::<Vec<_>>());
        let a = d.mul(&w);
        let id = Matrix::identity(n);
        let inv = id.add(&a).inverse()?;
        Some(id.sub(&a).mul(&inv))
    }

    pub fn hyper_maximal(&mut self, space: &Space) -> Result<Subspace> {
        if !space.is_balanced() {
            return Err(Error::UnbalancedSignature {
                positive: space.positive_index(),
                negative: space.negative_index(),
            });
        }
        self.neutral(space, space.dim() / 2)
    }

    /// Neutral subspace of uniformly random dimension.
    pub fn any_neutral(&mut self, space: &Space) -> Result<Subspace> {
        let m = space.positive_index().min(space.negative_index());
        let k = self.between(0, m);
        self.neutral(space, k)
    }

    /// Random subspace of `ℂⁿ` with occasional vectors vanishing on `zero_block`.
    pub fn subspace(&mut self, n: usize, zero_blocks: &[std::ops::Range<usize>]) -> Subspace {
        let r = self.between(0, n);
        let vs: Vec<Vector> = (0..r)
            .map(|_| {
                let mut v = self.vector(n);
                for block in zero_blocks {
                    if self.chance(0.15) {
                        for x in &mut v[block.clone()] {
                            *x = Scalar::zero();
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::span(n, vs)
    }

    pub fn relation(&mut self, x: &Space, y: &Space) -> LinearRelation {
        let (nx, ny) = (x.dim(), y.dim());
        let graph = self.subspace(nx + ny, &[0..nx, nx..nx + ny]);
        LinearRelation::new(x.clone(), y.clone(), graph).expect("shape")
    }

    pub fn isometric_relation(&mut self, x: &Space, y: &Space) -> Result<LinearRelation> {
        let prod = KreinSpace::product(x, y);
        LinearRelation::new(x.clone(), y.clone(), self.any_neutral(&prod)?)
    }

    pub fn unitary_relation(&mut self, x: &Space, y: &Space) -> Result<LinearRelation> {
        let prod = KreinSpace::product(x, y);
        LinearRelation::new(x.clone(), y.clone(), self.hyper_maximal(&prod)?)
    }

    pub fn symmetric_relation(&mut self, space: &Space) -> Result<LinearRelation> {
        let graph = self.any_neutral(&KreinSpace::doubled(space))?;
        LinearRelation::new(space.clone(), space.clone(), graph)
    }

    pub fn self_adjoint_relation(&mut self, space: &Space) -> Result<LinearRelation> {
        let graph = self.hyper_maximal(&KreinSpace::doubled(space))?;
        LinearRelation::new(space.clone(), space.clone(), graph)
    }

    /// Dimensions for boundary-relation suites, capped at 3.
    pub fn gbr_dims(&mut self, k_at_least_h: bool) -> (usize, usize) {
        let cap = self.cfg.max_dim.min(3);
        let k = self.between(1, cap);
        let h = if k_at_least_h { self.between(1, k) } else { self.between(1, cap) };
        (k, h)
    }

    /// `K` with a negative index from the config (default uniform on `0..=min(dim, 1)` when `low_kappa`).
    pub fn gbr_spaces(&mut self, k_at_least_h: bool, low_kappa: bool) -> (Space, Space) {
        let (k, h) = self.gbr_dims(k_at_least_h);
        let kappa = match (self.cfg.kappa, low_kappa) {
            (Some(c), _) => c.min(k),
            (None, true) => self.between(0, 1.min(k)),
            (None, false) => self.between(0, k),
        };
        (self.krein_space(k, kappa, "K"), self.hilbert_space(h, "H"))
    }

    pub fn gbr(&mut self, k: &Space, h: &Space, kind: GbrKind) -> Result<GreensBoundaryRelation> {
        for _ in 0..RETRY_BUDGET {
            if let Some(g) = self.try_gbr(k, h, kind)? {
                return Ok(g);
            }
        }
        Err(exhausted(&format!("{kind:?} boundary relation")))
    }

    fn try_gbr(&mut self, k: &Space, h: &Space, kind: GbrKind) -> Result<Option<GreensBoundaryRelation>> {
        let kd = KreinSpace::doubled(k);
        let hd = KreinSpace::doubled(h);
        let prod = KreinSpace::product(&kd, &hd);
        let g = match kind {
            GbrKind::Any => {
                let graph = self.any_neutral(&prod)?;
                GreensBoundaryRelation::build(k.clone(), h.clone(), graph)?
            }
            GbrKind::GenericUnitary | GbrKind::Ordinary => {
                let graph = self.hyper_maximal(&prod)?;
                GreensBoundaryRelation::build(k.clone(), h.clone(), graph)?
            }
            GbrKind::UnitaryBoundary | GbrKind::IsometricBoundary => {
                let a1 = self.self_adjoint_relation(k)?;
                let a2 = if kind == GbrKind::UnitaryBoundary {
                    self.self_adjoint_relation(h)?
                } else {
                    self.symmetric_relation(h)?
                };
                inverse_main_transformation(&LinearRelation::direct_orthogonal_sum(&a1, &a2)?, k, h)?
            }
            GbrKind::Surjective => {
                let side = KreinSpace::graph_side(k, h)?;
                let a = self.self_adjoint_relation(&side)?;
                inverse_main_transformation(&a, k, h)?
            }
            GbrKind::GenericIsometricBoundary => {
                let graph = self.hyper_maximal(&prod)?;
                let g = GreensBoundaryRelation::build(k.clone(), h.clone(), graph)?;
                let theta = self.symmetric_relation(h)?;
                // A = Γ⁻¹(Θ) is symmetric and contains ker Γ = S, so Γ restricted to A⁺ keeps maximality.
                let nk2 = 2 * k.dim();
                let cyl = Subspace::full(nk2).product(theta.graph());
                let a = g.graph().meet(&cyl).project(0..nk2);
                let a_rel = LinearRelation::new(k.clone(), k.clone(), a).expect("shape");
                g.restrict(a_rel.adjoint().graph())?
            }
        };
        let f = g.flags();
        let ran_full = g.gamma().ran().is_full();
        let ok = match kind {
            GbrKind::Any => f.greens,
            GbrKind::IsometricBoundary | GbrKind::GenericIsometricBoundary => f.isometric_boundary,
            GbrKind::UnitaryBoundary | GbrKind::GenericUnitary => f.unitary_boundary,
            GbrKind::Ordinary => f.ordinary_triple && f.unitary_boundary,
            GbrKind::Surjective => ran_full && f.isometric_boundary,
        };
        Ok(ok.then_some(g))
    }

    /// One of the kinds, uniformly.
    pub fn any_kind(&mut self, kinds: &[GbrKind]) -> GbrKind {
        kinds[self.below(kinds.len())]
    }
}
