//! Worked examples with hand-computed expectations.

use krel::green::{inverse_main_transformation, jay, jay_inverse};
use krel::spectrum::finite_eigenvalues;
use krel::{
    Error, GreensBoundaryRelation, KreinSpace, LinearRelation, Matrix, Mode, Scalar, Space, Spectrum, Subspace, Vector,
};

fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Scalar::from_int(x)).collect()
}

fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

fn space(rows: &[&[i64]]) -> Space {
    KreinSpace::new(Matrix::from_ints(rows), "test").unwrap()
}

fn line(sign: i64) -> Space {
    space(&[&[sign]])
}

fn swap_form() -> Space {
    KreinSpace::new(Matrix::from_rows(vec![vec![s("0"), s("-i")], vec![s("i"), s("0")]]), "swap").unwrap()
}

fn identity_gamma() -> GreensBoundaryRelation {
    GreensBoundaryRelation::from_columns(line(1), line(1), vec![v(&[1, 0, 1, 0]), v(&[0, 1, 0, 1])]).unwrap()
}

fn zero_gamma() -> GreensBoundaryRelation {
    GreensBoundaryRelation::build(line(1), line(1), Subspace::zero(4)).unwrap()
}

/// Ã = {((a, a), (b, b))} in 𝒦 × ℋ with 𝒦 = (ℂ, −|·|²), ℋ = ℂ.
fn tilde_a() -> (Space, Space, LinearRelation) {
    let (k, h) = (line(-1), line(1));
    let side = KreinSpace::graph_side(&k, &h).unwrap();
    let a = LinearRelation::from_columns(side.clone(), side, vec![v(&[1, 1, 0, 0]), v(&[0, 0, 1, 1])]).unwrap();
    (k, h, a)
}

// ---- spaces ----

#[test]
fn inner_product_examples() {
    assert_eq!(line(1).inner_product(&v(&[1]), &v(&[1])).unwrap(), s("1"));
    assert_eq!(line(-1).inner_product(&v(&[1]), &v(&[1])).unwrap(), s("-1"));
    // yᴴ G x with x = e₁, y = e₂ picks G₂₁ = i.
    assert_eq!(swap_form().inner_product(&v(&[1, 0]), &v(&[0, 1])).unwrap(), s("i"));
}

#[test]
fn negative_index_examples() {
    assert_eq!(KreinSpace::hilbert(2, "I").negative_index(), 0);
    assert_eq!(space(&[&[1, 0], &[0, -1]]).negative_index(), 1);
    // Characteristic polynomial λ² − 1.
    assert_eq!(swap_form().negative_index(), 1);
}

#[test]
fn doubled_space_examples() {
    let d = KreinSpace::doubled(&line(1));
    assert_eq!(d.gram(), &Matrix::from_rows(vec![vec![s("0"), s("-i")], vec![s("i"), s("0")]]));
    let d = KreinSpace::doubled(&line(-1));
    assert_eq!(d.gram(), &Matrix::from_rows(vec![vec![s("0"), s("i")], vec![s("-i"), s("0")]]));
}

#[test]
fn product_space_examples() {
    let p = KreinSpace::product(&line(1), &line(1));
    assert_eq!(p.gram(), &Matrix::from_ints(&[&[1, 0], &[0, -1]]));

    let kk = KreinSpace::doubled(&line(1));
    let hh = KreinSpace::doubled(&KreinSpace::hilbert(1, "H"));
    let p = KreinSpace::product(&kk, &hh);
    let (z, i, mi) = (s("0"), s("i"), s("-i"));
    let expected = Matrix::from_rows(vec![
        vec![z.clone(), mi.clone(), z.clone(), z.clone()],
        vec![i.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), i.clone()],
        vec![z.clone(), z.clone(), mi.clone(), z.clone()],
    ]);
    assert_eq!(p.gram(), &expected);

    let p = KreinSpace::product(&space(&[&[2, 1], &[1, -3]]), &line(1));
    assert_eq!(p.inner_product(&v(&[4, -7, 0]), &v(&[0, 0, 5])).unwrap(), s("0"));
}

#[test]
fn graph_side_space_examples() {
    let g = KreinSpace::graph_side(&line(-1), &line(1)).unwrap();
    assert_eq!(g.gram(), &Matrix::from_ints(&[&[-1, 0], &[0, 1]]));
    assert_eq!(g.negative_index(), 1);
    let g = KreinSpace::graph_side(&line(1), &line(1)).unwrap();
    assert_eq!(g.gram(), &Matrix::identity(2));
    assert_eq!(KreinSpace::graph_side(&line(1), &line(-1)).unwrap_err(), Error::HilbertRequired);
}

#[test]
fn companion_and_isotropic_part_examples() {
    let k = space(&[&[1, 0], &[0, -1]]);
    assert!(k.orthogonal_companion(&Subspace::zero(2)).is_full());
    assert!(k.orthogonal_companion(&Subspace::full(2)).is_zero());

    let neutral = Subspace::span(2, [v(&[1, 1])]);
    assert_eq!(k.isotropic_part(&neutral), neutral);
    let c = k.classify_subspace(&neutral);
    assert!(c.neutral && c.hyper_maximal_neutral && !c.non_degenerate);

    let hilbert = KreinSpace::hilbert(2, "I");
    let e1 = Subspace::span(2, [v(&[1, 0])]);
    assert!(hilbert.isotropic_part(&e1).is_zero());
    assert!(hilbert.classify_subspace(&e1).non_degenerate);
    assert!(hilbert.isotropic_part(&Subspace::full(2)).is_zero());

    let zero = k.classify_subspace(&Subspace::zero(2));
    assert!(zero.neutral && !zero.hyper_maximal_neutral);
}

#[test]
fn lattice_examples() {
    let a = Subspace::span(3, [v(&[1, 2, 0]), v(&[0, 1, 1])]);
    assert_eq!(a.intersect(&a).unwrap(), a);
    assert_eq!(a.sum(&a).unwrap(), a);
    let e1 = Subspace::span(2, [v(&[1, 0])]);
    let e2 = Subspace::span(2, [v(&[0, 1])]);
    assert!(e1.intersect(&e2).unwrap().is_zero());
    assert!(e1.sum(&e2).unwrap().is_full());
    assert!(a.intersect(&e1).is_err());
}

#[test]
fn canonical_form_ignores_spanning_set() {
    let a = Subspace::span(3, [v(&[1, 2, 3]), v(&[0, 1, 1])]);
    let b = Subspace::span(3, [v(&[2, 5, 7]), v(&[1, 1, 2]), v(&[3, 6, 9])]);
    assert_eq!(a, b);
    assert_eq!(a.basis(), b.basis());
}

// ---- relations ----

#[test]
fn parts_examples() {
    let c2 = KreinSpace::hilbert(2, "C2");
    let p = LinearRelation::identity(&c2).parts();
    assert!(p.dom.is_full() && p.ran.is_full() && p.ker.is_zero() && p.mul.is_zero());

    let t_inf = LinearRelation::from_columns(c2.clone(), c2, vec![v(&[0, 0, 1, 2])]).unwrap();
    let p = t_inf.parts();
    assert!(p.dom.is_zero());
    assert_eq!(p.mul, Subspace::span(2, [v(&[1, 2])]));
}

#[test]
fn relation_algebra_examples() {
    let c2 = KreinSpace::hilbert(2, "C2");
    let t = LinearRelation::from_columns(c2.clone(), c2.clone(), vec![v(&[1, 0, 2, 1]), v(&[0, 0, 0, 1])]).unwrap();
    assert_eq!(t.inverse().inverse(), t);
    assert_eq!(LinearRelation::compose(&LinearRelation::identity(&c2), &t).unwrap(), t);

    assert_eq!(t.disjoint_sum(&t).unwrap_err(), Error::NotDisjoint(2));
    let u = LinearRelation::from_columns(c2.clone(), c2, vec![v(&[0, 1, 0, 0])]).unwrap();
    assert_eq!(t.disjoint_sum(&u).unwrap().graph().rank(), 3);
}

#[test]
fn adjoint_examples() {
    let c2 = KreinSpace::hilbert(2, "C2");
    let id = LinearRelation::identity(&c2);
    assert_eq!(id.adjoint(), id);
    assert_eq!(id.adjoint_via_companion(), id);

    let k = line(-1);
    let full = LinearRelation::everything(k.clone(), k);
    assert!(full.adjoint().graph().is_zero());
    assert!(full.adjoint_via_companion().graph().is_zero());
}

#[test]
fn relation_classification_examples() {
    let c = LinearRelation::identity(&line(1)).classify().unwrap();
    assert!(c.isometric && c.unitary && c.operator);

    let (_, _, a) = tilde_a();
    assert_eq!(a.classify().unwrap().self_adjoint, Some(true));

    let k = line(-1);
    let full = LinearRelation::everything(k.clone(), k);
    let c = full.classify().unwrap();
    assert_eq!(c.symmetric, Some(false));
    assert_eq!(c.self_adjoint, Some(false));
}

#[test]
fn symmetric_flags_need_one_space() {
    let c = LinearRelation::operator(line(1), line(-1), &Matrix::identity(1)).unwrap().classify().unwrap();
    assert_eq!((c.symmetric, c.self_adjoint), (None, None));
    assert!(!c.isometric);
}

fn eigenvalues(r: &LinearRelation) -> Vec<[f64; 2]> {
    match finite_eigenvalues(r, &Mode::float()).unwrap() {
        Spectrum::Finite { eigenvalues, .. } => eigenvalues,
        other => panic!("unexpected {other:?}"),
    }
}

fn close(a: &[[f64; 2]], b: &[[f64; 2]]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x[0] - y[0]).abs() < 1e-9 && (x[1] - y[1]).abs() < 1e-9)
}

#[test]
fn finite_eigenvalue_examples() {
    let c2 = KreinSpace::hilbert(2, "C2");
    assert!(close(&eigenvalues(&LinearRelation::identity(&c2)), &[[1.0, 0.0]]));
    let d = LinearRelation::operator(c2.clone(), c2.clone(), &Matrix::from_ints(&[&[2, 0], &[0, 3]])).unwrap();
    assert!(close(&eigenvalues(&d), &[[2.0, 0.0], [3.0, 0.0]]));

    let everything = LinearRelation::everything(c2.clone(), c2.clone());
    assert!(finite_eigenvalues(&everything, &Mode::float()).unwrap().is_degenerate());
    assert_eq!(finite_eigenvalues(&d, &Mode::Exact).unwrap_err(), Error::FloatModeRequired);
}

#[test]
fn regular_type_examples() {
    let c2 = KreinSpace::hilbert(2, "C2");
    let id = LinearRelation::identity(&c2);
    assert!(id.has_eigenvalue_at(&s("1")));
    assert!(id.defect_subspace(&s("1")).is_full());
    assert!(id.is_regular_point(&s("0")));

    let zero_op = LinearRelation::operator(c2.clone(), c2, &Matrix::zeros(2, 2)).unwrap();
    assert!(zero_op.is_point_of_regular_type(&s("i")));
    assert!(zero_op.is_regular_point(&s("i")));
    assert!(!zero_op.is_point_of_regular_type(&s("0")));
}

#[test]
fn direct_orthogonal_sum_examples() {
    let (k1, k2) = (line(1), line(1));
    let sum =
        LinearRelation::direct_orthogonal_sum(&LinearRelation::identity(&k1), &LinearRelation::identity(&k2)).unwrap();
    assert!(sum.is_self_adjoint());
    assert_eq!(sum.graph(), &Subspace::span(4, [v(&[1, 0, 1, 0]), v(&[0, 1, 0, 1])]));

    let shared = LinearRelation::identity(&k1);
    assert_eq!(LinearRelation::direct_orthogonal_sum(&shared, &shared).unwrap_err(), Error::SharedSpace);

    // Ã couples the two coordinates, so no pair of one-dimensional relations produces it.
    let (_, _, a) = tilde_a();
    let (ka, kb) = (line(-1), line(1));
    let lines = |sp: &Space| {
        vec![
            LinearRelation::zero(sp.clone(), sp.clone()),
            LinearRelation::everything(sp.clone(), sp.clone()),
            LinearRelation::identity(sp),
            LinearRelation::from_columns(sp.clone(), sp.clone(), vec![v(&[1, 0])]).unwrap(),
            LinearRelation::from_columns(sp.clone(), sp.clone(), vec![v(&[0, 1])]).unwrap(),
        ]
    };
    for a1 in lines(&ka) {
        for a2 in lines(&kb) {
            let d = LinearRelation::direct_orthogonal_sum(&a1, &a2).unwrap();
            assert_ne!(d.graph(), a.graph());
        }
    }
}

// ---- boundary relations ----

#[test]
fn green_identity_acceptance() {
    identity_gamma();
    zero_gamma();
    let err =
        GreensBoundaryRelation::from_columns(line(-1), line(1), vec![v(&[1, 0, 1, 0]), v(&[0, 1, 0, 1])]).unwrap_err();
    match err {
        Error::GreenIdentityViolation { defect, .. } => assert!(!defect.is_zero()),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn components_of_identity_gamma() {
    let g = identity_gamma();
    let (g0, g1) = g.components();
    let kk = g.doubled_k().clone();
    let h = line(1);
    // Γ₀(f, f′) = f and Γ₁(f, f′) = f′.
    let e0 = LinearRelation::from_columns(kk.clone(), h.clone(), vec![v(&[1, 0, 1]), v(&[0, 1, 0])]).unwrap();
    let e1 = LinearRelation::from_columns(kk, h, vec![v(&[1, 0, 0]), v(&[0, 1, 1])]).unwrap();
    assert_eq!(g0.graph(), e0.graph());
    assert_eq!(g1.graph(), e1.graph());
    assert!(g.component_symmetry().all());

    let (z0, z1) = zero_gamma().components();
    assert!(z0.graph().is_zero() && z1.graph().is_zero());
    assert!(zero_gamma().component_symmetry().all());
}

#[test]
fn derived_objects_examples() {
    let d = identity_gamma().derived_objects();
    assert!(d.s.graph().is_zero() && d.n.graph().is_zero() && d.m.graph().is_zero());
    assert!(d.t.graph().is_full());

    let d = zero_gamma().derived_objects();
    assert!(d.t.graph().is_zero());
    assert!(d.s.graph().is_full());
}

#[test]
fn maximality_examples() {
    let m = identity_gamma().check_maximality();
    assert!(m.cond222 && m.cond223 && m.cond228);
    assert_eq!(m.s_adjoint_is_dom, Some(true));

    let m = zero_gamma().check_maximality();
    assert!(!m.cond222 && !m.cond223 && !m.cond228);

    // Identity Γ over ℂ² restricted to the neutral line {(a e₁, a e₁)}: (dom)⁺ = {g₁ = g′₁} has dimension 3.
    let c2 = KreinSpace::hilbert(2, "K");
    let id2 = GreensBoundaryRelation::from_columns(
        c2.clone(),
        KreinSpace::hilbert(2, "H"),
        (0..4).map(|j| (0..8).map(|r| Scalar::from_int((r % 4 == j) as i64)).collect()).collect(),
    )
    .unwrap();
    let g = id2.restrict(&Subspace::span(4, [v(&[1, 0, 1, 0])])).unwrap();
    let m = g.check_maximality();
    assert!(!m.cond222 && !m.cond223 && !m.cond228);
    assert_eq!(g.s().graph().rank(), 3);
    assert!(g.s().graph().rank() > g.t().graph().rank());
}

#[test]
fn identity_gamma_flags() {
    let f = identity_gamma().flags();
    assert!(f.greens && f.isometric_boundary && f.unitary_boundary && f.ordinary_triple);
    assert!(f.ab_generalized && f.b_generalized);
    // ker Γ₀ = {0} × ℂ is self-adjoint but multivalued.
    assert!(!f.quasi_boundary && !f.s_generalized);
    assert!(!f.trivial);
}

#[test]
fn zero_gamma_flags() {
    let f = zero_gamma().flags();
    assert!(f.greens && f.trivial);
    assert!(!f.isometric_boundary && !f.unitary_boundary && !f.ordinary_triple);
    assert!(!f.ab_generalized && !f.b_generalized && !f.quasi_boundary && !f.s_generalized);
}

#[test]
fn coupled_pair_gives_nontrivial_unitary_gamma() {
    let (k, h, a) = tilde_a();
    let g = inverse_main_transformation(&a, &k, &h).unwrap();
    // Γ(f, f′) = (f, −f′).
    assert_eq!(g.graph(), &Subspace::span(4, [v(&[1, 0, 1, 0]), v(&[0, 1, 0, -1])]));
    let f = g.flags();
    assert!(f.unitary_boundary && f.ordinary_triple);
    assert!(!f.trivial);
    assert_eq!(g.main_transformation(), a);
}

#[test]
fn inverse_main_transformation_needs_symmetry() {
    let (k, h) = (line(-1), line(1));
    let side = KreinSpace::graph_side(&k, &h).unwrap();
    let a = LinearRelation::everything(side.clone(), side);
    assert_eq!(inverse_main_transformation(&a, &k, &h).unwrap_err(), Error::SymmetryRequired);
}

#[test]
fn jay_examples() {
    let x = v(&[1, 2, 3, 4]);
    assert_eq!(jay(1, 1, &x), v(&[1, 3, 2, -4]));
    assert_eq!(jay(1, 1, &jay(1, 1, &x)), x);
    let y = v(&[1, 2, 3, 4, 5, 6, 7, 8]);
    assert_eq!(jay_inverse(2, 2, &jay(2, 2, &y)), y);
    assert_eq!(jay(2, 2, &jay(2, 2, &y)), y);
}

#[test]
fn weyl_of_identity_gamma_is_multiplication() {
    let g = identity_gamma();
    for z in ["i", "1+i", "2-3*i"] {
        let w = g.weyl_family(&s(z));
        assert!(w.is_operator);
        assert_eq!(w.matrix, Some(Matrix::from_rows(vec![vec![s(z)]])));
    }
    let w = zero_gamma().weyl_family(&s("i"));
    assert!(w.family.graph().is_zero());
}

#[test]
fn minimality_examples() {
    let r = identity_gamma().is_minimal(&[s("i")]).unwrap();
    assert!(r.minimal && r.span_dim == 1);

    // K = ℂ², Γ acts as the identity on the first coordinate and kills (0, 1; 0, 0).
    let k = KreinSpace::hilbert(2, "K");
    let g = GreensBoundaryRelation::from_columns(
        k,
        line(1),
        vec![v(&[1, 0, 0, 0, 1, 0]), v(&[0, 0, 1, 0, 0, 1]), v(&[0, 1, 0, 0, 0, 0])],
    )
    .unwrap();
    let r = g.is_minimal(&[s("i")]).unwrap();
    assert!(!r.minimal);
    assert_eq!((r.span_dim, r.dim), (1, 2));

    // S = everything on the second coordinate: every point is an eigenvalue of S.
    let g = GreensBoundaryRelation::from_columns(
        KreinSpace::hilbert(2, "K"),
        line(1),
        vec![v(&[1, 0, 0, 0, 1, 0]), v(&[0, 0, 1, 0, 0, 1])],
    )
    .unwrap();
    assert_eq!(g.is_minimal(&[s("i"), s("2*i")]).unwrap_err(), Error::EmptyRegularSet);
}

#[test]
fn nevanlinna_examples() {
    let g = identity_gamma();
    let r = g.nevanlinna_negative_squares(&[s("i"), s("2*i")], &Mode::float()).unwrap();
    assert_eq!(r.negative_squares, 0);

    // One point: (M(i) − M(i)*) / (i − (−i)) = 2i / 2i = 1.
    let kernel = g.nevanlinna_kernel(&[s("i")]).unwrap();
    assert_eq!(kernel, Matrix::identity(1));
    let r = g.nevanlinna_negative_squares(&[s("i")], &Mode::float()).unwrap();
    assert_eq!(r.negative_squares, 0);

    // M(z) = −z for the coupled pair is anti-Nevanlinna.
    let (k, h, a) = tilde_a();
    let g = inverse_main_transformation(&a, &k, &h).unwrap();
    assert_eq!(g.weyl_family(&s("i")).matrix, Some(Matrix::from_rows(vec![vec![s("-i")]])));
    let r = g.nevanlinna_negative_squares(&[s("i")], &Mode::float()).unwrap();
    assert_eq!(r.negative_squares, 1);

    assert_eq!(identity_gamma().nevanlinna_kernel(&[s("-i")]).unwrap_err(), Error::InvalidSamplePoints);
    assert_eq!(identity_gamma().nevanlinna_kernel(&[s("i"), s("i")]).unwrap_err(), Error::InvalidSamplePoints);
    assert_eq!(zero_gamma().nevanlinna_kernel(&[s("i")]).unwrap_err(), Error::NonOperatorWeylValue(Box::new(s("i"))));
    assert_eq!(
        identity_gamma().nevanlinna_negative_squares(&[s("i")], &Mode::Exact).unwrap_err(),
        Error::FloatModeRequired
    );
}

#[test]
fn closure_and_range_density_reports() {
    let g = identity_gamma();
    assert!(g.closure_properties().holds());

    let r = g.range_density_consequences().unwrap();
    assert!(r.holds());
    // S₀ = ker Γ₀ = {0} × ℂ and S₁ = ker Γ₁ = ℂ × {0}; their sum is everything, which is S⁺ since S = {(0, 0)}.
    let (g0, g1) = g.components();
    let (s0, s1) = (g0.ker(), g1.ker());
    assert_eq!(s0, Subspace::span(2, [v(&[0, 1])]));
    assert_eq!(s1, Subspace::span(2, [v(&[1, 0])]));
    let k = line(1);
    let s0 = LinearRelation::new(k.clone(), k.clone(), s0).unwrap();
    let s1 = LinearRelation::new(k.clone(), k.clone(), s1).unwrap();
    assert!(s0.is_self_adjoint() && s1.is_self_adjoint());
    assert_eq!(s0.componentwise_sum(&s1).unwrap().graph(), g.s().adjoint().graph());

    assert!(matches!(zero_gamma().range_density_consequences().unwrap_err(), Error::PreconditionUnmet(_)));
}
