use pcolor::families::{complete, cycle, grassmann, johnson, petersen};
use pcolor::graph::verify_quotient;
use pcolor::hypergraph::{m12, BipartiteGraph};
use pcolor::spectral::{check_dh_extremal, dh_bound, dh_bound_detail, extremal_quotient, min_eigenvalue, spectrum};
use pcolor::{AdjacencyMatrix, Coloring, Multigraph};
use proptest::prelude::*;

/// All labeled regular graphs with at least one edge on `n` vertices.
fn regular_graphs(n: usize) -> Vec<Multigraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 1u32..1 << pairs.len() {
        let mut deg = vec![0u32; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
        if deg.iter().all(|&d| d == deg[0]) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            out.push(Multigraph::from_edges(n, &edges).unwrap());
        }
    }
    out
}

fn max_inner_degree(g: &Multigraph, set: &[usize]) -> u64 {
    set.iter()
        .map(|&v| set.iter().map(|&u| u64::from(g.entry(v, u))).sum())
        .max()
        .unwrap_or(0)
}

#[test]
fn bound_and_extremality_on_all_regular_graphs_up_to_seven_vertices() {
    let mut attained = 0;
    for n in 2..=7usize {
        for g in regular_graphs(n) {
            let r = g.regular_degree().unwrap();
            for t in 0..=1u64.min(r - 1) {
                let bound = dh_bound(&g, t).unwrap();
                for mask in 1u32..1 << n {
                    let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                    if max_inner_degree(&g, &set) > t {
                        continue;
                    }
                    assert!(set.len() as f64 <= bound + 1e-9, "{set:?} beats bound {bound}");
                    let report = check_dh_extremal(&g, &set, t).unwrap();
                    if report.attains_bound && set.len() < n {
                        attained += 1;
                        let theta = report.theta_integer.expect("attained bound forces integral θ");
                        let f = Coloring::from_indicator(n, &set).unwrap();
                        assert!(verify_quotient(&g, &f, &extremal_quotient(r, t, theta)).unwrap());
                        assert!(report.extremal);
                    }
                }
            }
        }
    }
    assert!(attained > 0);
}

#[test]
fn petersen_independence() {
    let g = petersen();
    let bound = dh_bound_detail(&g, 0).unwrap();
    assert!((bound.value - 4.0).abs() < 1e-9);
    assert_eq!(bound.theta.integer, Some(-2));
    let best = (0u32..1 << 10)
        .filter(|mask| {
            let set: Vec<usize> = (0..10).filter(|&v| mask >> v & 1 == 1).collect();
            max_inner_degree(&g, &set) == 0
        })
        .map(u32::count_ones)
        .max()
        .unwrap();
    assert_eq!(best, 4);
}

#[test]
fn scheme_spectra() {
    let e = min_eigenvalue(&johnson(7, 3).unwrap()).unwrap();
    assert!((e.value + 3.0).abs() < 1e-6);
    let e = min_eigenvalue(&grassmann(4, 2, 2).unwrap()).unwrap();
    assert!((e.value + 3.0).abs() < 1e-6);
    // J(n,k) has eigenvalues (k-j)(n-k-j) - j
    let s = spectrum(&johnson(6, 2).unwrap());
    let distinct: Vec<i64> = s.distinct().iter().map(|(e, _)| e.integer.unwrap()).collect();
    assert_eq!(distinct, vec![-2, 2, 8]);
    let s = spectrum(&cycle(5).unwrap());
    assert!(s.integers().is_none());
}

#[test]
fn complete_graph_cliques() {
    let g = complete(6);
    assert!((pcolor::spectral::delsarte_clique_bound(&g).unwrap() - 6.0).abs() < 1e-9);
    assert!((dh_bound(&g, 0).unwrap() - 1.0).abs() < 1e-9);
}

fn bipartite_strategy() -> impl Strategy<Value = BipartiteGraph> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(k1, k2)| {
        proptest::collection::vec(0u32..=2, k1 * k2).prop_map(move |y| BipartiteGraph::new(k1, k2, y).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn m12_with_loops_is_positive_semidefinite(b in bipartite_strategy()) {
        let theta = min_eigenvalue(&m12(&b, true)).unwrap();
        prop_assert!(theta.value >= -1e-8);
    }

    #[test]
    fn restricted_bipartite_eigenfunctions_square_the_eigenvalue(b in bipartite_strategy()) {
        let (k1, _) = b.part_sizes();
        let a = b.adjacency();
        let n = a.order();
        let dense = nalgebra::DMatrix::from_fn(n, n, |i, j| f64::from(a.entry(i, j)));
        let eig = dense.symmetric_eigen();
        let yy = m12(&b, true);
        for (k, &theta) in eig.eigenvalues.iter().enumerate() {
            let h: Vec<f64> = (0..k1).map(|i| eig.eigenvectors[(i, k)]).collect();
            let image = yy.apply(&h).unwrap();
            let err = image.iter().zip(&h).fold(0.0f64, |m, (y, x)| m.max((y - theta * theta * x).abs()));
            prop_assert!(err <= 1e-6, "residual {err}");
        }
    }
}
