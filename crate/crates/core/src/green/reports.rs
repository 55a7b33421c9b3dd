//! Consequence reports: closure, range density, minimality.

use serde::Serialize;

use super::{relation_in, GreensBoundaryRelation, FINITE_DIMENSION_NOTE};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::spectrum::{finite_eigenvalues, pencil_scan, scan_grid, Mode, Spectrum};

/// Pencil residuals above this count as "no eigenvalue" in the scan.
pub const SCAN_THRESHOLD: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClosureReport {
    /// Hypothesis: `ran Γ` is non-degenerate in `ℋ²`.
    pub ran_non_degenerate: bool,
    pub closure_is_gbr: bool,
    pub ker_closed_symmetric: bool,
    pub maximality_preserved: bool,
    pub s_equals_s_hat: bool,
    pub m_hat_in_s_hat: bool,
    pub note: &'static str,
}

impl ClosureReport {
    pub fn holds(&self) -> bool {
        self.closure_is_gbr
            && self.ker_closed_symmetric
            && self.maximality_preserved
            && self.s_equals_s_hat
            && self.m_hat_in_s_hat
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RangeDensityReport {
    /// `Γ` is single-valued.
    pub gamma_operator: bool,
    /// `ran Γ₀ = Γ₀(ker Γ₁)`.
    pub ran_gamma0_from_ker_gamma1: bool,
    /// `Γ₀(ker Γ₁) = ℋ`.
    pub gamma0_ker_gamma1_full: bool,
    /// `Γ₁(ker Γ₀) = ℋ`.
    pub gamma1_ker_gamma0_full: bool,
    pub s0_self_adjoint: bool,
    pub s1_self_adjoint: bool,
    /// `S = S₀ ∩ S₁`.
    pub s_is_meet: bool,
    /// `S⁺ = S₀ +̂ S₁`.
    pub s_adjoint_is_sum: bool,
}

impl RangeDensityReport {
    pub fn holds(&self) -> bool {
        self.gamma_operator
            && self.ran_gamma0_from_ker_gamma1
            && self.gamma0_ker_gamma1_full
            && self.gamma1_ker_gamma0_full
            && self.s0_self_adjoint
            && self.s1_self_adjoint
            && self.s_is_meet
            && self.s_adjoint_is_sum
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MinimalityConsequences {
    /// `mul S = {0}`.
    pub s_operator: bool,
    /// Rational candidates checked exactly.
    pub candidates: usize,
    /// Candidates at which `S` has an eigenvalue.
    pub exact_hits: Vec<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Spectrum>,
    /// Smallest normalized pencil residual of `S` over the scan grid.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan_min: Option<f64>,
    pub no_eigenvalues: bool,
}

impl MinimalityConsequences {
    pub fn holds(&self) -> bool {
        self.s_operator && self.no_eigenvalues
    }
}

impl GreensBoundaryRelation {
    /// Closure statements, which degenerate to checks on `Γ` itself.
    pub fn closure_properties(&self) -> ClosureReport {
        let closure = GreensBoundaryRelation::build(self.k.clone(), self.h.clone(), self.graph().clone());
        let closure_is_gbr = closure.is_ok();
        let bar = closure.unwrap_or_else(|_| self.clone());
        let ker_closed_symmetric = relation_in(&self.k, bar.gamma.ker()).is_symmetric();
        let maximality_preserved = !self.check_maximality().cond222 || bar.check_maximality().cond222;
        let s_hat = bar.s();
        let m_hat = bar.doubled_k().isotropic_part(&bar.gamma.dom());
        ClosureReport {
            ran_non_degenerate: self.doubled_h().isotropic_part(&self.gamma.ran()).is_zero(),
            closure_is_gbr,
            ker_closed_symmetric,
            maximality_preserved,
            s_equals_s_hat: self.s() == s_hat,
            m_hat_in_s_hat: s_hat.graph().includes(&m_hat),
            note: FINITE_DIMENSION_NOTE,
        }
    }

    /// Consequences of `ran Γ = ℋ²` together with maximality.
    pub fn range_density_consequences(&self) -> Result<RangeDensityReport> {
        let mut unmet = Vec::new();
        if !self.gamma.ran().is_full() {
            unmet.push("ran Γ ≠ ℋ²");
        }
        if !self.check_maximality().cond222 {
            unmet.push("maximality condition fails");
        }
        if !unmet.is_empty() {
            return Err(Error::PreconditionUnmet(unmet.join("; ")));
        }
        let (k2, h) = (2 * self.nk(), self.nh());
        let (g0, g1) = self.components();
        let g = self.graph();
        let g0_ker_g1 = g.vanishing_on(k2 + h..k2 + 2 * h).project(k2..k2 + h);
        let g1_ker_g0 = g.vanishing_on(k2..k2 + h).project(k2 + h..k2 + 2 * h);
        let s0 = relation_in(&self.k, g0.ker());
        let s1 = relation_in(&self.k, g1.ker());
        let s = self.s();
        let sum = s0.componentwise_sum(&s1)?;
        Ok(RangeDensityReport {
            gamma_operator: self.gamma.is_operator(),
            ran_gamma0_from_ker_gamma1: g0.ran() == g0_ker_g1,
            gamma0_ker_gamma1_full: g0_ker_g1.is_full(),
            gamma1_ker_gamma0_full: g1_ker_g0.is_full(),
            s0_self_adjoint: s0.is_self_adjoint(),
            s1_self_adjoint: s1.is_self_adjoint(),
            s_is_meet: s.graph() == &s0.graph().meet(s1.graph()),
            s_adjoint_is_sum: s.adjoint() == sum,
        })
    }

    /// For a minimal relation satisfying maximality: `S` is an operator without eigenvalues.
    /// The float spectrum and pencil scan run only in float mode.
    pub fn minimality_consequences(&self, grid: &[Scalar], mode: &Mode) -> Result<MinimalityConsequences> {
        if !self.check_maximality().cond222 {
            return Err(Error::PreconditionUnmet("maximality condition fails".into()));
        }
        if !self.is_minimal(grid)?.minimal {
            return Err(Error::PreconditionUnmet("not minimal on the supplied grid".into()));
        }
        let s = self.s();
        let mut candidates: Vec<Scalar> = grid.iter().flat_map(|z| [z.clone(), z.conj()]).collect();
        for a in -3..=3 {
            for b in -3..=3 {
                candidates.push(Scalar::gauss(a, b));
            }
        }
        candidates.dedup();
        let exact_hits: Vec<Scalar> = candidates.iter().filter(|z| s.has_eigenvalue_at(z)).cloned().collect();
        let (spectrum, scan_min) = match mode {
            Mode::Exact => (None, None),
            Mode::Float(_) => {
                let spec = finite_eigenvalues(&s, mode)?;
                (Some(spec), Some(pencil_scan(&s, &scan_grid(3.0, 31))))
            }
        };
        let float_clear = match (&spectrum, scan_min) {
            (Some(sp), Some(m)) => !sp.is_degenerate() && sp.eigenvalues().is_empty() && m > SCAN_THRESHOLD,
            _ => true,
        };
        Ok(MinimalityConsequences {
            s_operator: s.mul().is_zero(),
            candidates: candidates.len(),
            no_eigenvalues: exact_hits.is_empty() && float_clear,
            exact_hits,
            spectrum,
            scan_min,
        })
    }
}
