//! Structural invariants over random spaces, subspaces and relations.

use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

use krel::green::inverse_main_transformation;
use krel::harness::Gen;
use krel::json::parse_instance;
use krel::spectrum::finite_eigenvalues;
use krel::{
    GeneratorConfig, Instance, KreinSpace, LinearRelation, Matrix, Mode, Scalar, Space, Spectrum, Subspace, Vector,
};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| Scalar::gauss(a, b))
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(scalar(), n)
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(vector(n), 0..=max)
}

/// `Pᴴ D P` for an invertible `P` and signs `D`, with the number of negative signs.
fn space_of(max_dim: usize) -> impl Strategy<Value = (Space, usize)> {
    (1..=max_dim)
        .prop_flat_map(|n| (prop::collection::vec(vector(n), n), prop::collection::vec(any::<bool>(), n)))
        .prop_filter_map("singular congruence", |(rows, negative)| {
            let p = Matrix::from_rows(rows);
            p.inverse()?;
            let d = Matrix::diagonal(
                &negative.iter().map(|&neg| Scalar::from_int(if neg { -1 } else { 1 })).collect::<Vec<_>>(),
            );
            let gram = p.conj_transpose().mul(&d).mul(&p);
            let kappa = negative.iter().filter(|&&b| b).count();
            Some((KreinSpace::new(gram, "X").ok()?, kappa))
        })
}

fn space_with_subspace(max_dim: usize) -> impl Strategy<Value = (Space, Subspace)> {
    space_of(max_dim).prop_flat_map(|(x, _)| {
        let n = x.dim();
        vectors(n, n).prop_map(move |vs| (x.clone(), Subspace::span(n, vs)))
    })
}

fn relation(max_dim: usize) -> impl Strategy<Value = LinearRelation> {
    (space_of(max_dim), space_of(max_dim)).prop_flat_map(|((x, _), (y, _))| {
        let n = x.dim() + y.dim();
        vectors(n, n).prop_map(move |cols| LinearRelation::from_columns(x.clone(), y.clone(), cols).unwrap())
    })
}

fn endo_relation(max_dim: usize) -> impl Strategy<Value = LinearRelation> {
    space_of(max_dim).prop_flat_map(|(x, _)| {
        let n = 2 * x.dim();
        vectors(n, n).prop_map(move |cols| LinearRelation::from_columns(x.clone(), x.clone(), cols).unwrap())
    })
}

fn float_signature(m: &Matrix) -> (usize, usize) {
    let h: DMatrix<Complex64> = m.to_c64();
    let eig = h.symmetric_eigenvalues();
    (eig.iter().filter(|&&l| l > 1e-9).count(), eig.iter().filter(|&&l| l < -1e-9).count())
}

fn float_rank(vs: &[Vector], n: usize) -> usize {
    if vs.is_empty() {
        return 0;
    }
    Matrix::from_columns(n, vs).to_c64().rank(1e-9)
}

fn cfg() -> ProptestConfig {
    ProptestConfig { cases: 96, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn companion_is_an_involution((x, a) in space_with_subspace(6)) {
        let c = x.orthogonal_companion(&a);
        prop_assert_eq!(a.rank() + c.rank(), x.dim());
        prop_assert_eq!(x.orthogonal_companion(&c), a.clone());
        for u in a.basis() {
            for w in c.basis() {
                prop_assert!(x.inner_product(u, w).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn negative_index_matches_congruence_and_eigenvalues((x, kappa) in space_of(6)) {
        prop_assert_eq!(x.negative_index(), kappa);
        prop_assert_eq!(float_signature(x.gram()), (x.dim() - kappa, kappa));
    }

    #[test]
    fn doubled_space_is_balanced((x, _) in space_of(4)) {
        let d = KreinSpace::doubled(&x);
        prop_assert!(KreinSpace::new(d.gram().clone(), "check").is_ok());
        prop_assert_eq!(d.negative_index(), x.dim());
        prop_assert_eq!(float_signature(d.gram()), (x.dim(), x.dim()));
    }

    #[test]
    fn product_space_signature(((x, kx), (y, ky)) in (space_of(4), space_of(4))) {
        let p = KreinSpace::product(&x, &y);
        prop_assert!(KreinSpace::new(p.gram().clone(), "check").is_ok());
        prop_assert_eq!(p.negative_index(), kx + (y.dim() - ky));
        let side = KreinSpace::graph_side(&x, &KreinSpace::hilbert(y.dim(), "H")).unwrap();
        prop_assert_eq!(side.negative_index(), kx);
    }

    #[test]
    fn hyper_maximal_iff_self_companion((x, a) in space_with_subspace(6)) {
        let c = x.classify_subspace(&a);
        prop_assert_eq!(c.hyper_maximal_neutral, x.orthogonal_companion(&a) == a);
        prop_assert_eq!(c.neutral, x.orthogonal_companion(&a).includes(&a));
        prop_assert_eq!(c.non_degenerate, x.isotropic_part(&a).is_zero());
        if c.hyper_maximal_neutral {
            prop_assert_eq!(2 * a.rank(), x.dim());
        }
    }

    #[test]
    fn canonical_form_is_unique(vs in vectors(5, 5), c in scalar()) {
        let a = Subspace::span(5, vs.clone());
        // Unit lower-triangular recombination keeps the span.
        let mut mixed: Vec<Vector> = Vec::new();
        for (k, v) in vs.iter().enumerate().rev() {
            let mut w = v.clone();
            if k > 0 {
                for (wi, ui) in w.iter_mut().zip(&vs[k - 1]) {
                    *wi = &*wi + &(&c * ui);
                }
            }
            mixed.push(w);
        }
        let b = Subspace::span(5, mixed);
        prop_assert_eq!(a.basis(), b.basis());
        prop_assert_eq!(a.rank(), float_rank(&vs, 5));
    }

    #[test]
    fn lattice_dimension_formula(a in vectors(6, 6), b in vectors(6, 6)) {
        let (sa, sb) = (Subspace::span(6, a.clone()), Subspace::span(6, b.clone()));
        let join = sa.sum(&sb).unwrap();
        let meet = sa.intersect(&sb).unwrap();
        prop_assert_eq!(join.rank() + meet.rank(), sa.rank() + sb.rank());
        let both: Vec<Vector> = a.into_iter().chain(b).collect();
        prop_assert_eq!(join.rank(), float_rank(&both, 6));
        prop_assert!(sa.includes(&meet) && sb.includes(&meet) && join.includes(&sa) && join.includes(&sb));
    }

    #[test]
    fn adjoint_routes_and_identities(r in relation(3)) {
        let adj = r.adjoint();
        prop_assert_eq!(&adj, &r.adjoint_via_companion());
        prop_assert_eq!(adj.adjoint(), r.clone());
        let (x, y) = (r.from_space(), r.to_space());
        prop_assert_eq!(x.orthogonal_companion(&r.dom()), adj.mul());
        prop_assert_eq!(adj.ker(), y.orthogonal_companion(&r.ran()));
        // Every pair of the adjoint satisfies [f, h] = [g, k] against every pair of r.
        for (f, g) in r.pairs() {
            for (h, k) in adj.pairs() {
                prop_assert_eq!(x.inner_product(&f, &k).unwrap(), y.inner_product(&g, &h).unwrap());
            }
        }
    }

    #[test]
    fn companion_commutes_with_inverse(r in relation(3)) {
        let (x, y) = (r.from_space().clone(), r.to_space().clone());
        let xy = KreinSpace::product(&x, &y);
        let yx = KreinSpace::product(&y, &x);
        let lhs = yx.orthogonal_companion(r.inverse().graph());
        let rhs = LinearRelation::new(x, y, xy.orthogonal_companion(r.graph())).unwrap().inverse();
        prop_assert_eq!(&lhs, rhs.graph());
    }

    #[test]
    fn isometry_and_symmetry_through_neutrality(r in relation(3), e in endo_relation(3)) {
        let c = r.classify().unwrap();
        let product = KreinSpace::product(r.from_space(), r.to_space());
        let sc = product.classify_subspace(r.graph());
        prop_assert_eq!(c.isometric, sc.neutral);
        prop_assert_eq!(c.unitary, sc.hyper_maximal_neutral);
        prop_assert_eq!(c.isometric, r.adjoint().graph().includes(r.inverse().graph()));

        let c = e.classify().unwrap();
        let doubled = KreinSpace::doubled(e.from_space());
        let dc = doubled.classify_subspace(e.graph());
        prop_assert_eq!(c.symmetric, Some(dc.neutral));
        prop_assert_eq!(c.self_adjoint, Some(dc.hyper_maximal_neutral));
        prop_assert_eq!(dc.neutral, e.adjoint().graph().includes(e.graph()));
        prop_assert_eq!(dc.hyper_maximal_neutral, e.adjoint() == e);
    }

    #[test]
    fn doubled_form_is_a_rotated_product_form((x, _) in space_of(3), seed in any::<u64>()) {
        let n = x.dim();
        let mut g = Gen::for_trial(&GeneratorConfig { seed, ..Default::default() }, 0);
        let (f, h) = (g.vector(2 * n), g.vector(2 * n));
        // Σ(f, f′) = (−i f′, −i f).
        let mi = Scalar::gauss(0, -1);
        let sigma: Vector = f[n..].iter().chain(&f[..n]).map(|c| &mi * c).collect();
        let lhs = KreinSpace::doubled(&x).inner_product(&f, &h).unwrap();
        let rhs = KreinSpace::product(&x, &x).inner_product(&sigma, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_text_round_trip(z in scalar(), d in 1i64..9) {
        let q = Scalar::ratio(3, d, -5, d + 1);
        for w in [z, q] {
            prop_assert_eq!(w.to_string().parse::<Scalar>().unwrap(), w);
        }
    }

    #[test]
    fn relation_documents_round_trip(r in relation(3)) {
        let text = Instance::Relation(r.clone()).to_value().to_string();
        match parse_instance(&text).unwrap() {
            Instance::Relation(back) => prop_assert_eq!(back.graph(), r.graph()),
            other => prop_assert!(false, "parsed as {}", other.kind()),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn self_adjoint_relations_have_real_spectrum(seed in any::<u64>()) {
        let mut g = Gen::for_trial(&GeneratorConfig { seed, ..Default::default() }, 0);
        let space = KreinSpace::hilbert(3, "C3");
        let r = g.self_adjoint_relation(&space).unwrap();
        prop_assert!(r.is_self_adjoint());
        match finite_eigenvalues(&r, &Mode::float()).unwrap() {
            Spectrum::Finite { eigenvalues, .. } => {
                for [_, im] in eigenvalues {
                    prop_assert!(im.abs() < 1e-6, "non-real eigenvalue with imaginary part {im}");
                }
            }
            Spectrum::Degenerate { .. } => prop_assert!(false, "self-adjoint relation with continuum spectrum"),
        }
    }

    #[test]
    fn self_adjoint_pairs_give_unitary_boundary_relations(seed in any::<u64>()) {
        let mut g = Gen::for_trial(&GeneratorConfig { seed, ..Default::default() }, 0);
        let (k, h) = g.gbr_spaces(false, false);
        let side = KreinSpace::graph_side(&k, &h).unwrap();
        let a = g.self_adjoint_relation(&side).unwrap();
        let gamma = inverse_main_transformation(&a, &k, &h).unwrap();
        prop_assert!(gamma.flags().unitary_boundary);
        prop_assert_eq!(gamma.main_transformation(), a);
    }

    #[test]
    fn symmetric_direct_sums_stay_symmetric(seed in any::<u64>()) {
        let mut g = Gen::for_trial(&GeneratorConfig { seed, ..Default::default() }, 0);
        let (n1, n2) = (g.between(1, 3), g.between(1, 3));
        let kappa = g.below(n1 + 1);
        let (k1, k2) = (g.krein_space(n1, kappa, "K1"), g.krein_space(n2, 0, "K2"));
        let (a1, a2) = (g.symmetric_relation(&k1).unwrap(), g.symmetric_relation(&k2).unwrap());
        prop_assert!(LinearRelation::direct_orthogonal_sum(&a1, &a2).unwrap().is_symmetric());
    }
}
