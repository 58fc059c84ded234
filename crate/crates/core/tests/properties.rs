use num_complex::Complex64;
use proptest::prelude::*;
use spectral_chroma::bounds::{full_report, BoundId, GraphSpectra};
use spectral_chroma::certify::{
    check_ortho_representation, conversion_residual, pinch, pinch_via_unitaries, pinching_corollary_sums, Coloring,
    OrthoRepresentation, PinchingInstance,
};
use spectral_chroma::graph::{circulant, parse_graph6, random_gnp, Graph, GraphMatrixKind};
use spectral_chroma::linalg::{
    conjugate_diagonal, eigenvalues_sym, hermitian_eigenvalues, random_hermitian, ComplexMatrix, KyFanSums,
    SymmetricMatrix,
};
use spectral_chroma::oracle::greedy_coloring;
use spectral_chroma::PROPERTY_TOL;

fn sums(a: &SymmetricMatrix) -> KyFanSums {
    KyFanSums::new(&eigenvalues_sym(a).unwrap())
}

fn graph() -> impl Strategy<Value = Graph> {
    (2usize..=12, 0.05f64..0.95, any::<u64>()).prop_map(|(n, p, seed)| random_gnp(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ky_fan_subadditive(n in 1usize..=8, s1 in any::<u64>(), s2 in any::<u64>()) {
        let (x, y) = (random_hermitian(n, s1), random_hermitian(n, s2));
        let (sx, sy, sxy) = (sums(&x), sums(&y), sums(&(&x + &y)));
        for m in 1..=n {
            prop_assert!(sxy.get(m) <= sx.get(m) + sy.get(m) + 1e-9);
        }
    }

    #[test]
    fn ky_fan_many_terms(n in 1usize..=8, d in 1usize..=5, seed in any::<u64>()) {
        let xs: Vec<SymmetricMatrix> = (0..d as u64).map(|j| random_hermitian(n, seed.wrapping_add(j))).collect();
        let total = xs.iter().skip(1).fold(xs[0].clone(), |acc, x| &acc + x);
        let st = sums(&total);
        let parts: Vec<KyFanSums> = xs.iter().map(sums).collect();
        for m in 1..=n {
            let lhs: f64 = parts.iter().map(|p| p.get(m)).sum();
            prop_assert!(lhs >= st.get(m) - 1e-9);
        }
    }

    #[test]
    fn ky_fan_difference(n in 1usize..=8, s1 in any::<u64>(), s2 in any::<u64>()) {
        let (s, t) = (random_hermitian(n, s1), random_hermitian(n, s2));
        let (ss, st, sd) = (sums(&s), sums(&t), sums(&(&s - &t)));
        for m in 1..=n {
            prop_assert!(sd.get(m) >= ss.get(m) - st.get(m) - 1e-9);
        }
    }

    #[test]
    fn spectrum_invariant_under_diagonal_unitaries(n in 1usize..=8, seed in any::<u64>(), phases in prop::collection::vec(0.0f64..std::f64::consts::TAU, 8)) {
        let a = random_hermitian(n, seed);
        let u: Vec<Complex64> = phases[..n].iter().map(|&t| Complex64::from_polar(1.0, t)).collect();
        let conj = conjugate_diagonal(&u, &ComplexMatrix::from_real(&a)).unwrap();
        let before = eigenvalues_sym(&a).unwrap();
        let after = hermitian_eigenvalues(&conj).unwrap();
        for (x, y) in before.values().iter().zip(after.values()) {
            prop_assert!((x - y).abs() < 1e-8);
        }
    }

    #[test]
    fn signless_dominates_twice_adjacency(g in graph()) {
        let s = GraphSpectra::compute(&g).unwrap();
        for i in 1..=g.n() {
            prop_assert!(s.signless_laplacian.nth(i) >= 2.0 * s.adjacency.nth(i) - 1e-8);
        }
        prop_assert!(s.laplacian.max() <= g.n() as f64 + 1e-8);
    }

    #[test]
    fn normalized_identities(g in graph()) {
        prop_assume!(g.isolated_vertex().is_none());
        let e = |k| eigenvalues_sym(&g.matrix(k).unwrap()).unwrap();
        let (na, nl, nq) = (e(GraphMatrixKind::NormalizedAdjacency), e(GraphMatrixKind::NormalizedLaplacian), e(GraphMatrixKind::NormalizedSignlessLaplacian));
        let n = g.n();
        for i in 1..=n {
            prop_assert!((nl.nth(i) - (1.0 - na.nth(n + 1 - i))).abs() < 1e-8);
            prop_assert!((nq.nth(i) - (1.0 + na.nth(i))).abs() < 1e-8);
        }
    }

    #[test]
    fn dominance_and_generalized_monotone(g in graph()) {
        let r = full_report(&g).unwrap();
        let v = |id| Some(r.get(id)).filter(|b| b.valid).map(|b| b.value);
        if let (Some(k), Some(nk)) = (v(BoundId::Kolotilina1), v(BoundId::NikiforovHybrid)) {
            prop_assert!(k >= nk - PROPERTY_TOL);
        }
        // μ_1 >= 2E/n and x/(x - δ_n) is non-increasing, so LOAN is the stronger one
        if let (Some(k), Some(l)) = (v(BoundId::Kolotilina2), v(BoundId::Loan)) {
            prop_assert!(l >= k - PROPERTY_TOL);
        }
        for (gen, base) in [
            (BoundId::GenHoffman, BoundId::Hoffman),
            (BoundId::GenNikiforov, BoundId::NikiforovHybrid),
            (BoundId::GenKolotilina1, BoundId::Kolotilina1),
            (BoundId::GenKolotilina2, BoundId::Kolotilina2),
            (BoundId::GenNormalizedHoffman, BoundId::NormalizedHoffman),
        ] {
            if let (Some(a), Some(b)) = (v(gen), v(base)) {
                prop_assert!(a >= b, "{gen} {a} < {base} {b}");
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in graph()) {
        prop_assert_eq!(parse_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn greedy_colorings_are_proper_and_convert(g in graph()) {
        let col = greedy_coloring(&g);
        prop_assert!(col.is_proper(&g));
        let a = g.matrix(GraphMatrixKind::Adjacency).unwrap();
        prop_assert!(conversion_residual(&a, &col).unwrap() < 1e-10);
    }

    #[test]
    fn improper_colorings_leave_a_residual(g in graph(), seed in any::<u64>()) {
        prop_assume!(g.edge_count() > 0);
        let col = greedy_coloring(&g);
        let (u, v) = g.edges()[(seed % g.edge_count() as u64) as usize];
        let mut colors = col.colors().to_vec();
        colors[v] = colors[u];
        let bad = Coloring::new(colors, col.c()).unwrap();
        let a = g.matrix(GraphMatrixKind::Adjacency).unwrap();
        prop_assert!(conversion_residual(&a, &bad).unwrap() > 0.1);
    }

    #[test]
    fn ortho_tests_agree(n in 2usize..=5, d in 1usize..=4, grid in prop::collection::vec(0usize..4, 20), seed in any::<u64>()) {
        let g = random_gnp(n, 0.6, seed).unwrap();
        let a = g.matrix(GraphMatrixKind::Adjacency).unwrap();
        let vectors = (0..n)
            .map(|k| (0..d).map(|s| Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_2 * grid[k * 4 + s] as f64)).collect())
            .collect();
        let rep = OrthoRepresentation::new(vectors).unwrap();
        let r = check_ortho_representation(&a, &rep).unwrap();
        prop_assert_eq!(r.inner_test, r.unitary_test);
    }

    #[test]
    fn pinching_equivalence(seed in any::<u64>(), three in any::<bool>()) {
        let blocks: &[usize] = if three { &[2, 2, 2] } else { &[3, 3] };
        let inst = PinchingInstance::random(blocks, seed).unwrap();
        let x = inst.test_matrix();
        let p = pinch(&inst);
        prop_assert!(p.max_abs_diff(&pinch_via_unitaries(&inst)) <= 1e-10 * x.frobenius_norm());
        prop_assert!((p.trace() - x.trace()).norm() < 1e-10);
        for (l, r) in pinching_corollary_sums(&inst).unwrap() {
            prop_assert!(l >= r - PROPERTY_TOL);
        }
    }
}

#[test]
fn regular_graphs_collapse() {
    for (n, set) in [(8, vec![1, 2]), (10, vec![1, 3]), (12, vec![1, 4, 6]), (16, vec![1, 7, 8]), (9, vec![1, 2, 3])] {
        let g = circulant(n, &set).unwrap();
        let r = full_report(&g).unwrap();
        let h = r.value(BoundId::Hoffman);
        for id in [BoundId::NikiforovHybrid, BoundId::Kolotilina1, BoundId::Kolotilina2, BoundId::NormalizedHoffman] {
            assert!((r.value(id) - h).abs() < PROPERTY_TOL, "{id} on circulant({n}; {set:?})");
        }
    }
}
