//! Float-mode spectral computations.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::relation::LinearRelation;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatConfig {
    /// Absolute tolerance for float comparisons.
    pub eps: f64,
    /// Sign threshold for kernel eigenvalues in negative-square counts.
    pub kernel_eps: f64,
}

impl Default for FloatConfig {
    fn default() -> Self {
        FloatConfig { eps: 1e-9, kernel_eps: 1e-8 }
    }
}

/// Arithmetic mode of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub enum Mode {
    #[default]
    Exact,
    Float(FloatConfig),
}

impl Mode {
    pub fn float() -> Self {
        Mode::Float(FloatConfig::default())
    }

    pub fn float_config(&self) -> Result<FloatConfig> {
        match self {
            Mode::Exact => Err(Error::FloatModeRequired),
            Mode::Float(c) => Ok(*c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "camelCase")]
pub enum Spectrum {
    /// Finitely many finite eigenvalues.
    #[serde(rename_all = "camelCase")]
    Finite { eigenvalues: Vec<[f64; 2]>, infinite_eigenvalue: bool },
    /// `ker(R − z) ≠ {0}` for every `z`.
    #[serde(rename_all = "camelCase")]
    Degenerate { infinite_eigenvalue: bool },
}

impl Spectrum {
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        match self {
            Spectrum::Finite { eigenvalues, .. } => eigenvalues.iter().map(|p| Complex64::new(p[0], p[1])).collect(),
            Spectrum::Degenerate { .. } => Vec::new(),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, Spectrum::Degenerate { .. })
    }
}

/// Probe points for the generic rank of a pencil; arbitrary non-special rationals.
fn probes() -> [Scalar; 3] {
    [Scalar::ratio(7, 3, 11, 5), Scalar::ratio(-13, 7, 5, 11), Scalar::ratio(17, 19, -23, 29)]
}

/// Orthonormalized pencil `(F, F′)` of the relation's graph basis.
fn normalized_pencil(r: &LinearRelation) -> (DMatrix<Complex64>, DMatrix<Complex64>) {
    let n = r.from_space().dim();
    let g = r.graph().basis_matrix().to_c64();
    let q = g.qr().q();
    let f = q.rows(0, n).into_owned();
    let fp = q.rows(n, n).into_owned();
    (f, fp)
}

fn smallest_singular_value(m: &DMatrix<Complex64>) -> f64 {
    if m.ncols() == 0 {
        return f64::INFINITY;
    }
    if m.nrows() < m.ncols() {
        return 0.0;
    }
    m.clone().singular_values().iter().cloned().fold(f64::INFINITY, f64::min)
}

/// `σ_min(F′ − zF) / √(1 + |z|²)` on the orthonormalized pencil.
pub fn pencil_residual(r: &LinearRelation, z: Complex64) -> f64 {
    let (f, fp) = normalized_pencil(r);
    pencil_residual_of(&f, &fp, z)
}

fn pencil_residual_of(f: &DMatrix<Complex64>, fp: &DMatrix<Complex64>, z: Complex64) -> f64 {
    let p = fp - f * z;
    smallest_singular_value(&p) / (1.0 + z.norm_sqr()).sqrt()
}

/// Minimum of [`pencil_residual`] over `grid`.
pub fn pencil_scan(r: &LinearRelation, grid: &[Complex64]) -> f64 {
    let (f, fp) = normalized_pencil(r);
    grid.iter().map(|&z| pencil_residual_of(&f, &fp, z)).fold(f64::INFINITY, f64::min)
}

/// The square grid `[−radius, radius]²` with `steps` points per side.
pub fn scan_grid(radius: f64, steps: usize) -> Vec<Complex64> {
    let h = 2.0 * radius / (steps.max(2) - 1) as f64;
    let mut out = Vec::with_capacity(steps * steps);
    for a in 0..steps {
        for b in 0..steps {
            out.push(Complex64::new(-radius + a as f64 * h, -radius + b as f64 * h));
        }
    }
    out
}

/// Deterministic pseudo-random compression matrix.
fn compression(rows: usize, cols: usize) -> DMatrix<Complex64> {
    let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    DMatrix::from_fn(rows, cols, |_, _| Complex64::new(next(), next()))
}

/// All finite eigenvalues of a relation in one space, from the pencil `(F′, F)`.
pub fn finite_eigenvalues(r: &LinearRelation, mode: &Mode) -> Result<Spectrum> {
    let cfg = mode.float_config()?;
    if r.from_space().dim() != r.to_space().dim() {
        return Err(Error::SameSpaceRequired);
    }
    let infinite_eigenvalue = !r.mul().is_zero();
    let d = r.graph().rank();
    if d == 0 {
        return Ok(Spectrum::Finite { eigenvalues: Vec::new(), infinite_eigenvalue });
    }
    // z is an eigenvalue iff rank(F′ − zF) < d, so a deficient generic rank means every z is one.
    // The columns of F′ − zF span ran(R − z).
    let generic_rank = probes().iter().map(|z| r.shifted_range(z).rank()).max().unwrap_or(0);
    if generic_rank < d {
        return Ok(Spectrum::Degenerate { infinite_eigenvalue });
    }
    let (f, fp) = normalized_pencil(r);
    let q = compression(d, f.nrows());
    let a = &q * &fp;
    let b = &q * &f;
    let sigma = Complex64::new(0.311_805_479, 0.573_412_207);
    let shifted = &a - &b * sigma;
    let Some(inv) = shifted.try_inverse() else {
        return Err(Error::RouteMismatch("pencil shift hit a singular point".into()));
    };
    let c = inv * &b;
    let mus = c.schur().eigenvalues().ok_or_else(|| Error::RouteMismatch("Schur form did not triangularize".into()))?;
    let accept = 1e-6;
    let mut found: Vec<Complex64> = Vec::new();
    for mu in mus.iter() {
        if mu.norm() < 1e-12 {
            continue;
        }
        let z = sigma + mu.inv();
        if pencil_residual_of(&f, &fp, z) > accept {
            continue;
        }
        let tol = cfg.eps.max(1e-7) * (1.0 + z.norm());
        if !found.iter().any(|w| (w - z).norm() <= tol) {
            found.push(z);
        }
    }
    found.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    let eigenvalues = found.into_iter().map(|z| [z.re, z.im]).collect();
    Ok(Spectrum::Finite { eigenvalues, infinite_eigenvalue })
}

/// Number of eigenvalues of a Hermitian matrix below `−eps`.
pub fn negative_eigenvalue_count(m: &DMatrix<Complex64>, eps: f64) -> usize {
    if m.nrows() == 0 {
        return 0;
    }
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    h.symmetric_eigenvalues().iter().filter(|&&l| l < -eps).count()
}
