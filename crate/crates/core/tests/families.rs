use pcolor::families::{
    binomial, delta_hypergraph, design_hypergraph, enumerate_subspaces, gaussian_binomial, grassmann, johnson,
    johnson_design_multigraph, subspace_design_hypergraph, subspace_design_multigraph, triangle_hypergraph,
};
use pcolor::hypergraph::{incidence_bipartite, line_multigraph, m12};
use pcolor::AdjacencyMatrix;

#[test]
fn johnson_design_multigraph_is_loopless_m12() {
    for n in 3..=8 {
        for k in 2..n {
            for t in 1..k {
                let direct = johnson_design_multigraph(n, k, t).unwrap();
                let via_incidence = m12(&incidence_bipartite(&design_hypergraph(n, k, t).unwrap()), false);
                assert_eq!(direct, via_incidence, "n {n}, k {k}, t {t}");
                assert_eq!(direct.order() as u64, binomial(n as u64, k as u64));
            }
        }
    }
}

#[test]
fn subspace_design_multigraph_is_loopless_m12() {
    for (n, k, t, q) in [(4, 2, 1, 2), (4, 3, 1, 2), (4, 3, 2, 2), (3, 2, 1, 3)] {
        let direct = subspace_design_multigraph(n, k, t, q).unwrap();
        let via_incidence = m12(&incidence_bipartite(&subspace_design_hypergraph(n, k, t, q).unwrap()), false);
        assert_eq!(direct, via_incidence, "n {n}, k {k}, t {t}, q {q}");
    }
}

#[test]
fn delta_line_graph_is_the_grassmann_graph() {
    for n in 3..=6 {
        let line = line_multigraph(&delta_hypergraph(n).unwrap()).unwrap();
        let g = grassmann(n, 2, 2).unwrap();
        assert_eq!(line, g, "n = {n}");
    }
}

#[test]
fn grassmann_degrees_and_orders() {
    for (n, k, q) in [(3, 1, 2), (4, 2, 2), (5, 2, 2), (4, 2, 3), (6, 2, 2), (5, 3, 2)] {
        let g = grassmann(n, k, q).unwrap();
        assert_eq!(g.order() as u64, gaussian_binomial(n as u32, k as u32, u64::from(q)));
        let expected = u64::from(q)
            * gaussian_binomial(k as u32, 1, u64::from(q))
            * gaussian_binomial((n - k) as u32, 1, u64::from(q));
        assert_eq!(g.regular_degree(), Some(expected), "n {n}, k {k}, q {q}");
    }
    assert_eq!(grassmann(6, 2, 2).unwrap().regular_degree(), Some(90));
}

#[test]
fn johnson_degrees() {
    for n in 2..=9 {
        for k in 1..n {
            let g = johnson(n, k).unwrap();
            assert_eq!(g.regular_degree(), Some((k * (n - k)) as u64));
        }
    }
}

#[test]
fn subspace_counts_against_brute_force_spans() {
    // count distinct spans of all k-tuples of vectors in GF(2)^4
    use std::collections::BTreeSet;
    let vectors: Vec<Vec<u32>> = (0..16).map(|x| (0..4).map(|j| (x >> j) & 1).collect()).collect();
    for k in 0..=4 {
        let mut spans = BTreeSet::new();
        let tuples = itertools::Itertools::multi_cartesian_product((0..k).map(|_| 0..16usize));
        for tuple in tuples {
            let rows: Vec<Vec<u32>> = tuple.iter().map(|&i| vectors[i].clone()).collect();
            let s = pcolor::subspace::Subspace::span(2, 4, &rows).unwrap();
            if s.dim() == k {
                spans.insert(s);
            }
        }
        if k == 0 {
            spans.insert(pcolor::subspace::Subspace::span(2, 4, &[]).unwrap());
        }
        let enumerated = enumerate_subspaces(4, k, 2).unwrap();
        assert_eq!(spans.into_iter().collect::<Vec<_>>(), enumerated, "k = {k}");
    }
}

#[test]
fn triangle_hypergraph_shape() {
    let h = triangle_hypergraph(5).unwrap();
    assert_eq!((h.order(), h.edge_count()), (10, 10));
    assert_eq!(h.regularity(), Some(3));
    let h = delta_hypergraph(4).unwrap();
    assert_eq!((h.order(), h.edge_count()), (15, 35));
    assert_eq!(h.regularity(), Some(7));
}
