use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use graphcodes::bounds::{bound_k4_colors, bound_maxmin, bound_maxmin_exact};
use graphcodes::coloring::{canonicalize_coloring, coloring_from_matrix};
use graphcodes::decomp::{find_even_decomposition_unrestricted, AlgorithmParams};
use graphcodes::extremal::{exact_r, Certificate, ExtremalValue};
use graphcodes::graph::{enumerate_graphs, num_edges};
use graphcodes::{
    admits_even_chromatic_copy, build_k4_coloring, code_from_coloring, find_even_decomposition, graph_sum,
    is_copy_of, is_even_decomposition, run_greedy_algorithm, verify_h_free, BitVector, EdgeColoring,
    LabeledGraph, ParityCheckMatrix, VectorFamily,
};

fn graph(n: usize) -> impl Strategy<Value = LabeledGraph> {
    proptest::collection::vec(any::<bool>(), num_edges(n)).prop_map(move |bits| {
        LabeledGraph::from_bits(n, BitVector::from_indices(bits.len(), (0..bits.len()).filter(|&i| bits[i]))).unwrap()
    })
}

fn coloring(n: usize, palette: u32) -> impl Strategy<Value = EdgeColoring> {
    proptest::collection::vec(0..palette, num_edges(n)).prop_map(move |labels| EdgeColoring::from_labels(n, &labels).unwrap())
}

fn matrix(n: usize, t: usize) -> impl Strategy<Value = ParityCheckMatrix> {
    proptest::collection::vec(any::<u64>(), t).prop_map(move |words| {
        let rows = words.into_iter().map(|w| BitVector::from_words(num_edges(n), vec![w])).collect();
        ParityCheckMatrix::new(n, rows).unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sum_is_a_group_operation(a in graph(6), b in graph(6), c in graph(6)) {
        prop_assert_eq!(graph_sum(&a, &b).unwrap(), graph_sum(&b, &a).unwrap());
        prop_assert_eq!(
            graph_sum(&graph_sum(&a, &b).unwrap(), &c).unwrap(),
            graph_sum(&a, &graph_sum(&b, &c).unwrap()).unwrap()
        );
        prop_assert!(graph_sum(&a, &a).unwrap().edge_count() == 0);
        prop_assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn copies_survive_relabeling(g in graph(6), perm in permutation(6)) {
        let h = LabeledGraph::path(4);
        prop_assert_eq!(is_copy_of(&g, &h), is_copy_of(&g.relabel(&perm), &h));
    }

    #[test]
    fn matrix_to_coloring_and_back(m in matrix(5, 4)) {
        // distinct columns become distinct unit vectors; kernels can only shrink
        let chi = coloring_from_matrix(&m);
        let fam = VectorFamily::identity(chi.palette_size()).unwrap();
        let back = code_from_coloring(&chi, &fam).unwrap();
        for x in back.kernel_basis() {
            prop_assert!(m.multiply(&x).is_zero());
        }
        prop_assert!(back.kernel_dimension() <= m.kernel_dimension());
    }

    #[test]
    fn coloring_to_matrix_and_back(chi in coloring(5, 4)) {
        let fam = VectorFamily::identity(chi.palette_size()).unwrap();
        let m = code_from_coloring(&chi, &fam).unwrap();
        prop_assert_eq!(coloring_from_matrix(&m), canonicalize_coloring(&chi));
    }

    #[test]
    fn avoiding_colorings_give_free_codes(chi in coloring(5, 5)) {
        // with s >= e(h), an even-chromatic-free coloring yields an h-free kernel
        for h in [LabeledGraph::path(3), LabeledGraph::cycle(4), LabeledGraph::complete(3)] {
            let fam = graphcodes::greedy_vector_family(chi.palette_size(), h.edge_count()).unwrap();
            let m = code_from_coloring(&chi, &fam).unwrap();
            let free = verify_h_free(&m, &h).unwrap().is_free();
            let admits = admits_even_chromatic_copy(&chi, &h).unwrap();
            prop_assert_eq!(free, !admits);
        }
    }

    #[test]
    fn restricted_and_unrestricted_search_agree(g in graph(8)) {
        let a = find_even_decomposition(&g).unwrap();
        let b = find_even_decomposition_unrestricted(&g).unwrap();
        prop_assert_eq!(a.is_some(), b.is_some());
        for d in a.iter().chain(b.iter()) {
            prop_assert!(is_even_decomposition(&g, d).unwrap());
        }
    }

    #[test]
    fn maxmin_is_monotone(a in 0.0f64..2.0, da in 0.0f64..1.0, b in 0.0f64..2.0, db in 0.0f64..1.0, k in 1u32..4, n in 2.0f64..5000.0) {
        let low = bound_maxmin_exact(|m| m.powf(a), |m| m.powf(b), k, n).unwrap();
        let high = bound_maxmin_exact(|m| m.powf(a + da), |m| m.powf(b + db), k, n).unwrap();
        prop_assert!(high.value >= low.value);
        let low = bound_maxmin(|m| m.powf(a), |m| m.powf(b), k, n).unwrap();
        let high = bound_maxmin(|m| m.powf(a + da), |m| m.powf(b + db), k, n).unwrap();
        prop_assert!(high.value >= low.value - 1e-12);
    }
}

#[test]
fn restricted_and_unrestricted_agree_on_ten_thousand_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..10_000 {
        let v = 1 + i % 10;
        let g = LabeledGraph::random(v, 0.5, &mut rng);
        let a = find_even_decomposition(&g).unwrap().is_some();
        let b = find_even_decomposition_unrestricted(&g).unwrap().is_some();
        assert_eq!(a, b, "{g:?}");
    }
}

#[test]
fn odd_graphs_are_never_decomposed() {
    for g in enumerate_graphs(5, |g| g.edge_count() % 2 == 1).unwrap() {
        assert!(find_even_decomposition(&g).unwrap().is_none());
        assert!(find_even_decomposition_unrestricted(&g).unwrap().is_none());
    }
}

#[test]
fn greedy_success_implies_exact_success() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut successes = 0;
    for seed in 0..400u64 {
        let n = 12 + (seed % 3) as usize;
        let params = AlgorithmParams { n, p: 3, m: 3, q: 1, x_size: 2, seed };
        let g = LabeledGraph::random(n, 0.3, &mut rng);
        let report = run_greedy_algorithm(&g, &params).unwrap();
        if report.succeeded() {
            successes += 1;
            assert!(is_even_decomposition(&g, report.decomposition.as_ref().unwrap()).unwrap());
            assert!(find_even_decomposition(&g).unwrap().is_some());
        }
    }
    assert!(successes > 0);
}

#[test]
fn k4_palette_stays_below_bound() {
    for n in 2..=128 {
        let chi = build_k4_coloring(n);
        assert!((chi.palette_size() as u128) < bound_k4_colors(n).unwrap(), "n = {n}");
    }
}

#[test]
fn r_certificates_restrict_to_smaller_hosts() {
    for h in [LabeledGraph::path(3), LabeledGraph::complete(4), LabeledGraph::cycle(4), LabeledGraph::star(4)] {
        let mut previous = 0;
        for n in h.vertex_count()..=5 {
            let res = exact_r(&h, n, 6).unwrap();
            let ExtremalValue::Integer(r) = res.value else { panic!("{:?}", res.value) };
            assert!(r >= previous);
            previous = r;
            let Some(Certificate::Coloring(chi)) = res.certificate else { panic!() };
            for m in h.vertex_count()..=n {
                assert!(!admits_even_chromatic_copy(&chi.restrict(m), &h).unwrap());
            }
        }
    }
}
