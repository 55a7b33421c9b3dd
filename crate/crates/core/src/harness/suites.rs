//! Registered property suites. Each body draws one instance from its generator and checks it.

use super::gen::{GbrKind, Gen};
use super::Outcome;
use crate::error::{Error, Result};
use crate::green::{default_grid, inverse_main_transformation, jay, jay_inverse, relation_in, GreensBoundaryRelation};
use crate::json::Instance;
use crate::matrix::{Matrix, Vector};
use crate::relation::LinearRelation;
use crate::scalar::Scalar;
use crate::space::{KreinSpace, Space};
use crate::subspace::Subspace;

pub(crate) struct Suite {
    pub id: &'static str,
    /// Golden suites ignore the requested trial count.
    pub fixed_trials: Option<usize>,
    pub run: fn(&mut Gen) -> Result<Outcome>,
}

pub const REQUIRED_SUITES: [&str; 21] = [
    "lemma2.6",
    "prop2.8",
    "cor2.16",
    "prop3.4",
    "prop3.8",
    "prop3.10",
    "prop4.2",
    "thm4.6",
    "prop5.2",
    "thm5.5",
    "cor5.6",
    "cor5.8",
    "prop5.10",
    "lemma5.18",
    "example5.19",
    "prop5.20",
    "prop6.4",
    "thm6.6",
    "prop7.2",
    "lemma7.3",
    "prop7.4",
];

const fn suite(id: &'static str, run: fn(&mut Gen) -> Result<Outcome>) -> Suite {
    Suite { id, fixed_trials: None, run }
}

static SUITES: &[Suite] = &[
    suite("lemma2.6", lemma_2_6),
    suite("prop2.8", prop_2_8),
    suite("cor2.16", cor_2_16),
    suite("prop3.4", prop_3_4),
    suite("prop3.8", prop_3_8),
    suite("prop3.10", prop_3_10),
    suite("prop4.2", prop_4_2),
    suite("thm4.6", thm_4_6),
    suite("prop5.2", prop_5_2),
    suite("thm5.5", thm_5_5),
    suite("cor5.6", cor_5_6),
    suite("cor5.8", cor_5_8),
    suite("prop5.10", prop_5_10),
    suite("lemma5.18", lemma_5_18),
    Suite { id: "example5.19", fixed_trials: Some(1), run: example_5_19 },
    suite("prop5.20", prop_5_20),
    suite("prop6.4", prop_6_4),
    suite("thm6.6", thm_6_6),
    suite("prop7.2", prop_7_2),
    suite("lemma7.3", lemma_7_3),
    suite("prop7.4", prop_7_4),
    suite("adjoint-routes", adjoint_routes),
    suite("main-transform", main_transform),
    suite("weyl-symmetry", weyl_symmetry),
    // Triviality of every unitary boundary relation, read literally; expected to fail.
    suite("prop5.20-literal", prop_5_20_literal),
];

/// All registered ids: the required ones first, then the extras.
pub fn suite_ids() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.id).collect()
}

pub(crate) fn lookup(id: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.id == id)
}

/// Fails the trial with a message and the offending instance, built only on failure.
macro_rules! ensure {
    ($cond:expr, $inst:expr, $($msg:tt)+) => {
        if !$cond {
            return Ok(Outcome::Fail { message: format!($($msg)+), instance: Instance::to_value(&$inst) });
        }
    };
}

fn gi(g: &GreensBoundaryRelation) -> Instance {
    Instance::Gbr(g.clone())
}

fn ri(r: &LinearRelation) -> Instance {
    Instance::Relation(r.clone())
}

fn pass_if(applicable: bool) -> Result<Outcome> {
    Ok(if applicable { Outcome::Pass } else { Outcome::Vacuous })
}

/// A boundary relation of one of `kinds`; kinds with `ran Γ = ℋ²` force `dim K ≥ dim H`.
fn pick(g: &mut Gen, kinds: &[GbrKind], k_at_least_h: bool, low_kappa: bool) -> Result<GreensBoundaryRelation> {
    let kind = g.any_kind(kinds);
    let need = k_at_least_h || matches!(kind, GbrKind::Ordinary | GbrKind::Surjective);
    let (k, h) = g.gbr_spaces(need, low_kappa);
    g.gbr(&k, &h, kind)
}

fn other_space(g: &mut Gen, x: &Space, endo_chance: f64) -> Space {
    if g.chance(endo_chance) {
        x.clone()
    } else {
        g.any_krein_space("Y")
    }
}

/// Small random spaces for suites whose work grows with the square of the dimension.
fn small_space(g: &mut Gen, cap: usize, label: &str) -> Space {
    let dim = g.between(1, g.config().max_dim.min(cap));
    let kappa = g.kappa_for(dim);
    g.krein_space(dim, kappa, label)
}

/// `Γᵢ(ker Γⱼ)` for `(i, j) = (0, 1)` and `(1, 0)`.
fn cross_images(gamma: &GreensBoundaryRelation) -> (Subspace, Subspace) {
    let (k2, h) = (2 * gamma.k().dim(), gamma.h().dim());
    let graph = gamma.graph();
    (
        graph.vanishing_on(k2 + h..k2 + 2 * h).project(k2..k2 + h),
        graph.vanishing_on(k2..k2 + h).project(k2 + h..k2 + 2 * h),
    )
}

fn lemma_2_6(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma = pick(g, &[Any, Any, GenericUnitary, GenericIsometricBoundary], false, false)?;
    let sym = gamma.component_symmetry();
    ensure!(sym.all(), gi(&gamma), "kernels or multivalued parts not symmetric: {sym:?}");
    let (g0, g1) = gamma.components();
    // ker Γ₀ ∩ ker Γ₁ can exceed ker Γ by the f̂ with (f̂, (0, h′)) ∈ Γ and (0, h′) ∉ mul Γ.
    let meet = g0.ker().meet(&g1.ker());
    ensure!(meet.includes(&gamma.gamma().ker()), gi(&gamma), "ker Γ ⊄ ker Γ₀ ∩ ker Γ₁");
    if gamma.gamma().is_operator() {
        ensure!(gamma.gamma().ker() == meet, gi(&gamma), "single-valued Γ with ker Γ ≠ ker Γ₀ ∩ ker Γ₁");
    }
    Ok(Outcome::Pass)
}

fn prop_2_8(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma = pick(g, &[Any, GenericUnitary, GenericIsometricBoundary, IsometricBoundary], false, false)?;
    let m = gamma.check_maximality();
    ensure!(m.cond222 == m.cond223 && m.cond223 == m.cond228, gi(&gamma), "maximality conditions disagree: {m:?}");
    let s = gamma.s();
    let dom = gamma.gamma().dom();
    let exists = s.is_symmetric() && s.adjoint().graph() == &dom;
    ensure!(m.cond222 == exists, gi(&gamma), "maximality {} but symmetric S with S⁺ = dom Γ {}", m.cond222, exists);
    if m.cond223 {
        let d = gamma.derived_objects();
        ensure!(d.m.graph() == d.s.graph(), gi(&gamma), "M ≠ S under maximality");
    }
    Ok(Outcome::Pass)
}

fn cor_2_16(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma =
        pick(g, &[GenericUnitary, GenericIsometricBoundary, IsometricBoundary, UnitaryBoundary, Any], false, false)?;
    if !gamma.check_maximality().cond222 {
        // S ⊄ dom Γ, so no A with S ⊆ A ⊆ A⁺ ⊆ dom Γ exists.
        return Ok(Outcome::Vacuous);
    }
    // A = S + Γ⁻¹(Θ): S is orthogonal to dom Γ and Γ⁻¹(Θ) is neutral by the Green identity.
    let theta = g.symmetric_relation(gamma.h())?;
    let nk2 = 2 * gamma.k().dim();
    let pre = gamma.graph().meet(&Subspace::full(nk2).product(theta.graph())).project(0..nk2);
    let s = gamma.s();
    let a = relation_in(gamma.k(), s.graph().join(&pre));
    let a_plus = a.adjoint();
    let dom = gamma.gamma().dom();
    ensure!(
        a.graph().includes(s.graph()) && a_plus.graph().includes(a.graph()) && dom.includes(a_plus.graph()),
        gi(&gamma),
        "S ⊆ A ⊆ A⁺ ⊆ dom Γ fails for the constructed A"
    );
    let restricted = gamma.restrict(a_plus.graph())?;
    ensure!(restricted.check_maximality().cond222, gi(&restricted), "Γ restricted to A⁺ violates maximality");
    Ok(Outcome::Pass)
}

fn prop_3_4(g: &mut Gen) -> Result<Outcome> {
    let x = g.any_krein_space("X");
    let y = other_space(g, &x, 0.3);
    let r = g.relation(&x, &y);
    let adj = r.adjoint();
    let n = adj.graph().dim();
    ensure!(&Subspace::span(n, adj.graph().basis().to_vec()) == adj.graph(), ri(&r), "(i) adjoint graph not canonical");
    let closure = LinearRelation::new(x.clone(), y.clone(), r.graph().clone())?;
    ensure!(closure.adjoint() == adj, ri(&r), "(ii) adjoint of the closure differs");
    ensure!(adj.adjoint() == r, ri(&r), "(iii) R** ≠ R");
    ensure!(x.orthogonal_companion(&r.dom()) == adj.mul(), ri(&r), "(iv) (dom R)^[⊥] ≠ mul R*");
    ensure!(adj.ker() == y.orthogonal_companion(&r.ran()), ri(&r), "(v) ker R* ≠ (ran R)^[⊥]");
    // (T⁻¹)^[⊥] in X × Y equals (T^[⊥] in Y × X)⁻¹ for T = R⁻¹ : Y → X.
    let t = r.inverse();
    let lhs = KreinSpace::product(&x, &y).orthogonal_companion(t.inverse().graph());
    let comp = KreinSpace::product(&y, &x).orthogonal_companion(t.graph());
    let rhs = LinearRelation::new(y.clone(), x.clone(), comp)?.inverse();
    ensure!(&lhs == rhs.graph(), ri(&r), "companion of the inverse differs from inverse of the companion");
    Ok(Outcome::Pass)
}

fn adjoint_routes(g: &mut Gen) -> Result<Outcome> {
    let x = g.any_krein_space("X");
    let y = other_space(g, &x, 0.3);
    let r = g.relation(&x, &y);
    ensure!(r.adjoint() == r.adjoint_via_companion(), ri(&r), "direct and companion adjoints differ");
    Ok(Outcome::Pass)
}

fn prop_3_8(g: &mut Gen) -> Result<Outcome> {
    let x = g.any_krein_space("X");
    let y = other_space(g, &x, 0.2);
    let prod = KreinSpace::product(&x, &y);
    let v = match g.below(3) {
        0 => g.isometric_relation(&x, &y)?,
        1 if prod.is_balanced() => g.unitary_relation(&x, &y)?,
        1 => g.isometric_relation(&x, &y)?,
        _ => g.relation(&x, &y),
    };
    let neutral = prod.is_neutral(v.graph());
    let class = prod.classify_subspace(v.graph());
    ensure!(v.is_isometric() == neutral, ri(&v), "isometric {} but neutral {}", v.is_isometric(), neutral);
    ensure!(
        v.is_unitary() == class.hyper_maximal_neutral,
        ri(&v),
        "unitary {} but hyper-maximal neutral {}",
        v.is_unitary(),
        class.hyper_maximal_neutral
    );
    let c = v.classify()?;
    ensure!(c.isometric == neutral && c.unitary == class.hyper_maximal_neutral, ri(&v), "classification disagrees");
    Ok(Outcome::Pass)
}

fn sigma(n: usize, v: &[Scalar]) -> Vector {
    let mi = -Scalar::i();
    v[n..].iter().chain(&v[..n]).map(|x| &mi * x).collect()
}

fn prop_3_10(g: &mut Gen) -> Result<Outcome> {
    let k = g.any_krein_space("K");
    let n = k.dim();
    let a = match g.below(3) {
        0 => g.symmetric_relation(&k)?,
        1 => g.self_adjoint_relation(&k)?,
        _ => g.relation(&k, &k),
    };
    let dbl = KreinSpace::doubled(&k);
    let kk = KreinSpace::product(&k, &k);
    let (f, h) = (g.vector(2 * n), g.vector(2 * n));
    let lhs = dbl.inner_product(&f, &h)?;
    let rhs = kk.inner_product(&sigma(n, &f), &h)?;
    ensure!(
        lhs == rhs,
        Instance::Space(k.clone()),
        "[f̂, ĝ] in K² is {lhs} but [Σf̂, ĝ] in K×K is {rhs} for {f:?}, {h:?}"
    );
    let neutral = dbl.is_neutral(a.graph());
    let class = dbl.classify_subspace(a.graph());
    ensure!(a.is_symmetric() == neutral, ri(&a), "symmetric {} but neutral in K² {}", a.is_symmetric(), neutral);
    ensure!(a.is_self_adjoint() == class.hyper_maximal_neutral, ri(&a), "self-adjoint vs hyper-maximal neutral");
    let comp = kk.orthogonal_companion(a.graph());
    let inv = a.inverse();
    ensure!(a.is_symmetric() == comp.includes(inv.graph()), ri(&a), "symmetric vs A⁻¹ ⊆ A^[⊥] in K×K");
    ensure!(a.is_self_adjoint() == (&comp == inv.graph()), ri(&a), "self-adjoint vs A⁻¹ = A^[⊥] in K×K");
    let c = a.classify()?;
    ensure!(
        c.symmetric == Some(neutral) && c.self_adjoint == Some(class.hyper_maximal_neutral),
        ri(&a),
        "classification disagrees"
    );
    Ok(Outcome::Pass)
}

fn prop_4_2(g: &mut Gen) -> Result<Outcome> {
    let x = g.any_krein_space("X");
    let y = other_space(g, &x, 0.2);
    let v = g.isometric_relation(&x, &y)?;
    let p = v.parts();
    let mut applicable = false;
    if y.isotropic_part(&p.ran).is_zero() {
        applicable = true;
        ensure!(x.isotropic_part(&p.dom) == p.ker, ri(&v), "(i) isotropic part of dom V ≠ ker V");
    }
    if p.ran.is_full() {
        applicable = true;
        ensure!(v.is_operator(), ri(&v), "(ii) full range but V multivalued");
    }
    if p.dom.is_full() {
        applicable = true;
        ensure!(v.inverse().is_operator(), ri(&v), "(iii) full domain but V⁻¹ multivalued");
    }
    if p.dom.is_full() && p.ran.is_full() {
        ensure!(v.is_unitary() && v.is_operator(), ri(&v), "(iv)/(v) full domain and range but not a unitary operator");
    }
    pass_if(applicable)
}

fn companion_identities(x: &Space, y: &Space, v: &LinearRelation) -> bool {
    let p = v.parts();
    y.orthogonal_companion(&p.ran) == p.mul && x.orthogonal_companion(&p.dom) == p.ker
}

fn thm_4_6(g: &mut Gen) -> Result<Outcome> {
    let x = g.any_krein_space("X");
    let y = other_space(g, &x, 0.2);
    let v = g.isometric_relation(&x, &y)?;
    let p = v.parts();
    let left = y.isotropic_part(&p.ran) == p.mul;
    let right = x.isotropic_part(&p.dom) == p.ker;
    ensure!(left == right, ri(&v), "(i) isotropic(ran) = mul is {left} but isotropic(dom) = ker is {right}");
    let both = companion_identities(&x, &y, &v);
    ensure!(!both || v.adjoint() == v.inverse(), ri(&v), "(ii) companion identities hold but V* ≠ V⁻¹");
    ensure!(both == v.is_unitary(), ri(&v), "(ii) companion identities {both} but unitary {}", v.is_unitary());
    if (p.dom.is_full() && p.ran.is_full()) || (p.ran.is_full() && p.dom.is_full()) {
        ensure!(v.is_unitary() && v.is_operator() && p.ker.is_zero(), ri(&v), "(iii) not a standard unitary operator");
    }
    // Same signature on both sides, so unitary relations exist.
    let y2 = g.krein_space(x.dim(), x.negative_index(), "Y");
    let u = g.unitary_relation(&x, &y2)?;
    ensure!(companion_identities(&x, &y2, &u), ri(&u), "(ii) unitary V violates the companion identities");
    ensure!(u.adjoint() == u.inverse(), ri(&u), "unitary V with V* ≠ V⁻¹");
    Ok(Outcome::Pass)
}

fn prop_5_2(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma = pick(g, &[Any, Any, GenericUnitary, GenericIsometricBoundary, Surjective], false, false)?;
    let p = gamma.gamma().parts();
    let mut applicable = false;
    if gamma.doubled_h().isotropic_part(&p.ran).is_zero() {
        applicable = true;
        let m = gamma.doubled_k().isotropic_part(&p.dom);
        ensure!(m == p.ker, gi(&gamma), "(i) non-degenerate range but M ≠ ker Γ");
    }
    if p.ran.is_full() {
        applicable = true;
        ensure!(gamma.gamma().is_operator(), gi(&gamma), "(ii) ran Γ = ℋ² but Γ multivalued");
    }
    if p.dom.is_full() {
        applicable = true;
        ensure!(p.ker.is_zero(), gi(&gamma), "(iii) dom Γ = 𝒦² but Γ⁻¹ multivalued");
    }
    if p.dom.is_full() && p.ran.is_full() {
        ensure!(
            gamma.gamma().is_unitary() && gamma.gamma().is_operator(),
            gi(&gamma),
            "(iv)/(v) not a unitary operator"
        );
    }
    pass_if(applicable)
}

fn thm_5_5(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma =
        pick(g, &[Any, GenericUnitary, UnitaryBoundary, IsometricBoundary, GenericIsometricBoundary], false, false)?;
    let d = gamma.derived_objects();
    let left = d.m_tilde.graph() == d.n_tilde.graph();
    let right = d.m.graph() == d.n.graph();
    ensure!(left == right, gi(&gamma), "(i) M̃ = mul Γ is {left} but M = ker Γ is {right}");
    let p = gamma.gamma().parts();
    let both = gamma.doubled_h().orthogonal_companion(&p.ran) == p.mul
        && gamma.doubled_k().orthogonal_companion(&p.dom) == p.ker;
    let unitary = gamma.gamma().is_unitary();
    ensure!(!unitary || both, gi(&gamma), "(ii) unitary Γ violates the companion identities");
    ensure!(
        !both || gamma.gamma().adjoint() == gamma.gamma().inverse(),
        gi(&gamma),
        "(ii) identities hold but Γ* ≠ Γ⁻¹"
    );
    Ok(Outcome::Pass)
}

fn cor_5_6(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma = pick(g, &[GenericUnitary, Ordinary, GenericIsometricBoundary, Surjective, Any], true, false)?;
    let ran_nondegenerate = gamma.doubled_h().isotropic_part(&gamma.gamma().ran()).is_zero();
    if !(ran_nondegenerate && gamma.check_maximality().cond223) {
        return Ok(Outcome::Vacuous);
    }
    let d = gamma.derived_objects();
    ensure!(d.m.graph() == d.n.graph() && d.n.graph() == d.s.graph(), gi(&gamma), "M = N = S fails");
    Ok(Outcome::Pass)
}

fn cor_5_8(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma = pick(g, &[Ordinary, GenericUnitary, Surjective, Any, GenericIsometricBoundary], true, false)?;
    let m = gamma.check_maximality();
    let ran_full = gamma.gamma().ran().is_full();
    let s = gamma.s();
    // Ordinary boundary triple for S⁺: a surjective operator on dom Γ = S⁺ with kernel S.
    let triple = gamma.gamma().is_operator()
        && ran_full
        && s.is_symmetric()
        && &gamma.gamma().ker() == s.graph()
        && s.adjoint().graph() == &gamma.gamma().dom();
    ensure!(
        (ran_full && m.cond228) == triple,
        gi(&gamma),
        "ran Γ = ℋ² ∧ maximality is {} but ordinary triple is {triple}",
        ran_full && m.cond228
    );
    ensure!(gamma.flags().ordinary_triple == triple, gi(&gamma), "ordinary flag disagrees with the triple definition");
    if triple {
        let (g0, g1) = gamma.components();
        ensure!(g0.is_operator() && g1.is_operator(), gi(&gamma), "ordinary triple with multivalued Γ₀ or Γ₁");
    }
    Ok(Outcome::Pass)
}

fn prop_5_10(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma = pick(
        g,
        &[GenericUnitary, UnitaryBoundary, Ordinary, GenericUnitary, Any, GenericIsometricBoundary],
        false,
        false,
    )?;
    let prod = KreinSpace::product(gamma.doubled_k(), gamma.doubled_h());
    let graph = gamma.graph();
    let unitary = gamma.gamma().is_unitary();
    let hyper = prod.classify_subspace(graph).hyper_maximal_neutral;
    ensure!(unitary == hyper, gi(&gamma), "(i) unitary {unitary} but hyper-maximal neutral {hyper}");
    // (5.4): Γ^[⊥] ⊆ Γ in 𝒦² × ℋ².
    let implication = graph.includes(&prod.orthogonal_companion(graph));
    ensure!(unitary == implication, gi(&gamma), "(i) unitary {unitary} but Γ^[⊥] ⊆ Γ is {implication}");
    if unitary {
        let m = gamma.check_maximality();
        ensure!(m.cond223 && m.cond222, gi(&gamma), "(ii) unitary Γ fails maximality");
        let d = gamma.derived_objects();
        ensure!(d.m.graph() == d.n.graph() && d.n.graph() == d.s.graph(), gi(&gamma), "(iii) M = N = S fails");
        ensure!(
            d.m_tilde.graph() == d.n_tilde.graph() && d.n_tilde.graph() == d.s_tilde.graph(),
            gi(&gamma),
            "(iii) M̃ = Ñ = S̃ fails"
        );
    }
    Ok(Outcome::Pass)
}

fn lemma_5_18(g: &mut Gen) -> Result<Outcome> {
    let k1 = small_space(g, 3, "K1");
    let k2 = small_space(g, 3, "K2");
    let draw = |g: &mut Gen, k: &Space| -> Result<LinearRelation> {
        Ok(match g.below(10) {
            0 => g.relation(k, k),
            1..=4 => g.symmetric_relation(k)?,
            _ => g.self_adjoint_relation(k)?,
        })
    };
    let a1 = draw(g, &k1)?;
    let a2 = draw(g, &k2)?;
    ensure!(
        LinearRelation::direct_orthogonal_sum(&a1, &a1) == Err(Error::SharedSpace),
        ri(&a1),
        "direct sum over a shared space was accepted"
    );
    let at = LinearRelation::direct_orthogonal_sum(&a1, &a2)?;
    let (s1, s2, st) = (a1.is_symmetric(), a2.is_symmetric(), at.is_symmetric());
    let (sa1, sa2, sat) = (a1.is_self_adjoint(), a2.is_self_adjoint(), at.is_self_adjoint());
    ensure!(!st || (s1 && s2), ri(&at), "symmetric sum with a non-symmetric summand");
    ensure!(!sat || (sa1 && sa2), ri(&at), "self-adjoint sum with a non-self-adjoint summand");
    ensure!(!(s1 && s2) || st, ri(&at), "symmetric summands with a non-symmetric sum");
    ensure!(!(sa1 && sa2) || sat, ri(&at), "self-adjoint summands with a non-self-adjoint sum");
    pass_if(st || (s1 && s2))
}

fn ints(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Scalar::from_int(x)).collect()
}

fn example_5_19(_: &mut Gen) -> Result<Outcome> {
    let k = KreinSpace::new(Matrix::from_ints(&[&[-1]]), "K")?;
    let h = KreinSpace::hilbert(1, "H");
    let side = KreinSpace::graph_side(&k, &h)?;
    let at = LinearRelation::from_columns(side.clone(), side.clone(), vec![ints(&[1, 1, 0, 0]), ints(&[0, 0, 1, 1])])?;
    ensure!(at.classify()?.self_adjoint == Some(true), ri(&at), "Ã is not self-adjoint");
    for a in [LinearRelation::everything(k.clone(), k.clone()), LinearRelation::everything(h.clone(), h.clone())] {
        ensure!(a.adjoint().graph().is_zero(), ri(&a), "adjoint of the full relation is not {{(0, 0)}}");
        ensure!(a.classify()?.symmetric == Some(false), ri(&a), "full relation classified symmetric");
    }
    let a1 = LinearRelation::everything(k.clone(), k.clone());
    let a2 = LinearRelation::everything(h.clone(), h.clone());
    let sum = LinearRelation::direct_orthogonal_sum(&a1, &a2)?;
    ensure!(!sum.is_self_adjoint() && sum.graph() != at.graph(), ri(&sum), "Ã arises as a direct orthogonal sum");
    let gamma = inverse_main_transformation(&at, &k, &h)?;
    let f = gamma.flags();
    ensure!(f.unitary_boundary && gamma.gamma().is_operator(), gi(&gamma), "𝒥⁻¹(Ã) is not a unitary operator");
    ensure!(!f.trivial, gi(&gamma), "𝒥⁻¹(Ã) is trivial although ker Γ = {{0}}");
    Ok(Outcome::Pass)
}

fn prop_5_20(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma = pick(g, &[UnitaryBoundary, IsometricBoundary], false, false)?;
    let p = gamma.gamma().parts();
    ensure!(gamma.is_trivial(), gi(&gamma), "Γ ≠ ker Γ × mul Γ");
    ensure!(p.dom == p.ker && p.ran == p.mul, gi(&gamma), "dom Γ ≠ ker Γ or ran Γ ≠ mul Γ");
    let at = gamma.main_transformation();
    ensure!(at.is_symmetric(), gi(&gamma), "Ã is not symmetric");
    ensure!(gamma.flags().unitary_boundary == at.is_self_adjoint(), gi(&gamma), "unitary vs Ã self-adjoint");
    Ok(Outcome::Pass)
}

fn prop_5_20_literal(g: &mut Gen) -> Result<Outcome> {
    let gamma = pick(g, &[GbrKind::GenericUnitary], false, false)?;
    ensure!(gamma.is_trivial(), gi(&gamma), "unitary boundary relation is not trivial");
    Ok(Outcome::Pass)
}

fn main_transform(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma = pick(g, &[Any, GenericUnitary, GenericIsometricBoundary, UnitaryBoundary], false, false)?;
    let (k, h) = (gamma.k().clone(), gamma.h().clone());
    let (nk, nh) = (k.dim(), h.dim());
    let v = g.vector(2 * (nk + nh));
    ensure!(jay_inverse(nk, nh, &jay(nk, nh, &v)) == v, gi(&gamma), "𝒥⁻¹𝒥 v ≠ v for {v:?}");
    ensure!(jay(nk, nh, &jay_inverse(nk, nh, &v)) == v, gi(&gamma), "𝒥𝒥⁻¹ v ≠ v for {v:?}");
    if nk == nh {
        ensure!(jay(nk, nh, &jay(nk, nh, &v)) == v, gi(&gamma), "𝒥² v ≠ v for {v:?}");
    }
    let at = gamma.main_transformation();
    ensure!(at.is_symmetric() == gamma.gamma().is_isometric(), gi(&gamma), "isometric Γ vs symmetric Ã");
    ensure!(at.is_self_adjoint() == gamma.gamma().is_unitary(), gi(&gamma), "unitary Γ vs self-adjoint Ã");
    ensure!(inverse_main_transformation(&at, &k, &h)?.graph() == gamma.graph(), gi(&gamma), "𝒥⁻¹(𝒥(Γ)) ≠ Γ");
    let side = KreinSpace::graph_side(&k, &h)?;
    let a = if g.chance(0.5) { g.self_adjoint_relation(&side)? } else { g.symmetric_relation(&side)? };
    let back = inverse_main_transformation(&a, &k, &h)?;
    ensure!(back.gamma().is_unitary() == a.is_self_adjoint(), ri(&a), "self-adjoint Ã vs unitary Γ");
    ensure!(back.main_transformation().graph() == a.graph(), ri(&a), "𝒥(𝒥⁻¹(Ã)) ≠ Ã");
    Ok(Outcome::Pass)
}

const WEYL_POINTS: [(i64, i64); 5] = [(0, 1), (0, 2), (1, 1), (-1, 2), (2, 3)];

fn weyl_symmetry(g: &mut Gen) -> Result<Outcome> {
    let gamma = pick(g, &[GbrKind::GenericUnitary, GbrKind::UnitaryBoundary], false, false)?;
    let (a, b) = WEYL_POINTS[g.below(WEYL_POINTS.len())];
    let z = Scalar::gauss(a, b);
    let m = gamma.weyl_family(&z).family;
    let m_bar = gamma.weyl_family(&z.conj()).family;
    ensure!(m.adjoint().graph() == m_bar.graph(), gi(&gamma), "M({z})* ≠ M(z̄)");
    Ok(Outcome::Pass)
}

/// Grid points `z` with neither `z` nor `z̄` an eigenvalue of `S`.
fn conjugate_closed_grid(gamma: &GreensBoundaryRelation) -> Vec<Scalar> {
    let s = gamma.s();
    default_grid(gamma).into_iter().filter(|z| s.is_point_of_regular_type(&z.conj())).collect()
}

fn prop_6_4(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma = pick(g, &[GenericUnitary, GenericUnitary, GenericIsometricBoundary], false, true)?;
    if !gamma.check_maximality().cond222 {
        return Ok(Outcome::Vacuous);
    }
    let grid = conjugate_closed_grid(&gamma);
    match gamma.is_minimal(&grid) {
        Ok(r) if r.minimal => {}
        Ok(_) | Err(Error::EmptyRegularSet) => return Ok(Outcome::Vacuous),
        Err(e) => return Err(e),
    }
    let c = gamma.minimality_consequences(&grid, &g.mode())?;
    ensure!(c.s_operator, gi(&gamma), "minimal Γ with multivalued S");
    ensure!(c.no_eigenvalues, gi(&gamma), "minimal Γ but S has eigenvalues: {c:?}");
    Ok(Outcome::Pass)
}

const NEVANLINNA_POINTS: [(i64, i64); 4] = [(0, 1), (0, 2), (1, 1), (-1, 2)];

fn thm_6_6(g: &mut Gen) -> Result<Outcome> {
    let gamma = pick(g, &[GbrKind::GenericUnitary], true, true)?;
    let kappa = gamma.k().negative_index();
    if kappa > 1 {
        return Ok(Outcome::Vacuous);
    }
    match gamma.is_minimal(&default_grid(&gamma)) {
        Ok(r) if r.minimal => {}
        Ok(_) | Err(Error::EmptyRegularSet) => return Ok(Outcome::Vacuous),
        Err(e) => return Err(e),
    }
    let points: Vec<Scalar> = NEVANLINNA_POINTS.iter().map(|&(a, b)| Scalar::gauss(a, b)).collect();
    let mode = g.mode();
    let mut evaluated = false;
    for mask in 1u32..16 {
        let subset: Vec<Scalar> = (0..4).filter(|i| mask & (1 << i) != 0).map(|i| points[i].clone()).collect();
        let report = match gamma.nevanlinna_negative_squares(&subset, &mode) {
            Ok(r) => r,
            Err(Error::NonOperatorWeylValue(_)) => continue,
            Err(e) => return Err(e),
        };
        evaluated = true;
        ensure!(
            report.negative_squares <= kappa,
            gi(&gamma),
            "{} negative squares exceed κ = {kappa} on {subset:?}",
            report.negative_squares
        );
    }
    pass_if(evaluated)
}

fn prop_7_2(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma = pick(g, &[Any, GenericUnitary, Ordinary, GenericIsometricBoundary], true, false)?;
    let r = gamma.closure_properties();
    if !r.ran_non_degenerate {
        return Ok(Outcome::Vacuous);
    }
    ensure!(r.holds(), gi(&gamma), "closure properties fail: {r:?}");
    Ok(Outcome::Pass)
}

fn lemma_7_3(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma = pick(g, &[Surjective, Ordinary, GenericUnitary, Any], true, false)?;
    if !gamma.gamma().ran().is_full() {
        return Ok(Outcome::Vacuous);
    }
    let (a, b) = cross_images(&gamma);
    ensure!(a.is_full(), gi(&gamma), "Γ₀(ker Γ₁) ≠ ℋ");
    ensure!(b.is_full(), gi(&gamma), "Γ₁(ker Γ₀) ≠ ℋ");
    Ok(Outcome::Pass)
}

fn prop_7_4(g: &mut Gen) -> Result<Outcome> {
    use GbrKind::*;
    let gamma = pick(g, &[Surjective, Ordinary, GenericUnitary], true, false)?;
    let r = match gamma.range_density_consequences() {
        Ok(r) => r,
        Err(Error::PreconditionUnmet(_)) => return Ok(Outcome::Vacuous),
        Err(e) => return Err(e),
    };
    ensure!(r.holds(), gi(&gamma), "range density consequences fail: {r:?}");
    Ok(Outcome::Pass)
}
