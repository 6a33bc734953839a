//! Hypergraphs, their incidence double cover `D(H)`, and the multigraphs
//! `YY*` (vertex adjacency, `M12`) and `Y*Y - kI` (line multigraph) built from
//! the incidence matrix `Y`.
//!
//! A vertex coloring of a hypergraph is perfect when any two vertices of the
//! same color lie in equally many hyperedges of every color composition.
//! Compositions are encoded as per-color count vectors.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{invalid_input, invalid_params, Error, NotPerfect, Result};
use crate::graph::{
    expect_quotient, quotient_matrix, AdjacencyMatrix, Coloring, Multigraph, QuotientMatrix,
};

/// Vertices `0..n` and a list of hyperedges; repeated hyperedges are distinct columns of `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Each hyperedge is sorted; it must be nonempty with distinct in-range members.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(invalid_input(format!("hyperedge {i} is empty")));
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(invalid_input(format!("hyperedge {i} repeats a vertex")));
            }
            if let Some(&v) = e.last().filter(|&&v| v >= n) {
                return Err(invalid_input(format!("hyperedge {i} has vertex {v} >= {n}")));
            }
            sorted.push(e);
        }
        Ok(Self { n, edges: sorted })
    }

    /// A simple graph viewed as a 2-uniform hypergraph, one hyperedge per edge.
    pub fn from_graph(g: &Multigraph) -> Result<Self> {
        if !g.is_simple() {
            return Err(invalid_input("only simple graphs convert to 2-uniform hypergraphs"));
        }
        let n = g.order();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if g.entry(u, v) == 1 {
                    edges.push(vec![u, v]);
                }
            }
        }
        Self::new(n, edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Common hyperedge size, if any.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// Common vertex degree, if any.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degrees();
        let r = *d.first()?;
        d.iter().all(|&x| x == r).then_some(r)
    }

    /// Hyperedges through each vertex.
    pub fn incident_edges(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }
}

/// Bipartite graph given by its `k1 x k2` biadjacency matrix `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    rows: usize,
    cols: usize,
    y: Vec<u32>,
}

impl BipartiteGraph {
    pub fn new(rows: usize, cols: usize, y: Vec<u32>) -> Result<Self> {
        if y.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: y.len(),
            });
        }
        Ok(Self { rows, cols, y })
    }

    pub fn from_rows(rows: Vec<Vec<u32>>, cols: usize) -> Result<Self> {
        let k1 = rows.len();
        let mut y = Vec::with_capacity(k1 * cols);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            y.extend_from_slice(r);
        }
        Self::new(k1, cols, y)
    }

    pub fn part_sizes(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.y[i * self.cols + j]
    }

    /// Full adjacency `[[0, Y], [Y*, 0]]`; part 1 first, then part 2.
    pub fn adjacency(&self) -> Multigraph {
        let n = self.rows + self.cols;
        let mut g = Multigraph::empty(n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let m = self.entry(i, j);
                if m != 0 {
                    g.set_multiplicity(i, self.rows + j, m);
                }
            }
        }
        g
    }
}

/// `D(H)`: part 1 is the vertices, part 2 the hyperedges, `Y` the incidence matrix.
pub fn incidence_bipartite(h: &Hypergraph) -> BipartiteGraph {
    let (n, m) = (h.order(), h.edge_count());
    let mut y = vec![0u32; n * m];
    for (j, e) in h.edges().iter().enumerate() {
        for &v in e {
            y[v * m + j] = 1;
        }
    }
    BipartiteGraph {
        rows: n,
        cols: m,
        y,
    }
}

/// The multigraph with adjacency `YY*` on part 1; `keep_loops = false` zeroes the diagonal.
pub fn m12(b: &BipartiteGraph, keep_loops: bool) -> Multigraph {
    let (k1, k2) = (b.rows, b.cols);
    let mut flat = vec![0u32; k1 * k1];
    let support: Vec<Vec<(usize, u32)>> = (0..k1)
        .map(|i| {
            (0..k2)
                .filter_map(|j| {
                    let m = b.entry(i, j);
                    (m != 0).then_some((j, m))
                })
                .collect()
        })
        .collect();
    for i in 0..k1 {
        for l in i..k1 {
            if i == l && !keep_loops {
                continue;
            }
            let (mut a, mut c) = (support[i].iter().peekable(), support[l].iter().peekable());
            let mut total = 0u32;
            while let (Some(&&(ja, ma)), Some(&&(jc, mc))) = (a.peek(), c.peek()) {
                match ja.cmp(&jc) {
                    std::cmp::Ordering::Less => {
                        a.next();
                    }
                    std::cmp::Ordering::Greater => {
                        c.next();
                    }
                    std::cmp::Ordering::Equal => {
                        total += ma * mc;
                        a.next();
                        c.next();
                    }
                }
            }
            flat[i * k1 + l] = total;
            flat[l * k1 + i] = total;
        }
    }
    Multigraph::from_flat(k1, flat).expect("YY* is symmetric")
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// `E(H)` with adjacency `Y*Y - kI`: hyperedges joined by `|e ∩ f|` edges.
pub fn line_multigraph(h: &Hypergraph) -> Result<Multigraph> {
    if h.edge_count() > 0 && h.uniformity().is_none() {
        return Err(invalid_params("line multigraph needs a uniform hypergraph"));
    }
    let m = h.edge_count();
    let edges = h.edges();
    let mut g = Multigraph::empty(m);
    for i in 0..m {
        for j in i + 1..m {
            let s = intersection_size(&edges[i], &edges[j]) as u32;
            if s != 0 {
                g.set_multiplicity(i, j, s);
            }
        }
    }
    Ok(g)
}

fn check_vertex_coloring(h: &Hypergraph, f: &Coloring) -> Result<()> {
    if f.len() != h.order() {
        return Err(Error::DimensionMismatch {
            expected: h.order(),
            found: f.len(),
        });
    }
    Ok(())
}

/// Number of members of each color in hyperedge `edge`.
pub fn edge_composition(h: &Hypergraph, f: &Coloring, edge: usize) -> Vec<usize> {
    let mut counts = vec![0; f.num_colors()];
    for &v in &h.edges()[edge] {
        counts[f.color(v)] += 1;
    }
    counts
}

/// Composition table of one vertex: composition -> number of incident hyperedges.
pub type IncidenceTable = BTreeMap<Vec<usize>, usize>;

/// Per-color composition tables of a perfect hypergraph coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectHypergraphReport {
    pub tables: Vec<Vec<(Vec<usize>, usize)>>,
}

impl PerfectHypergraphReport {
    /// Hyperedges of `composition` through any vertex of `color`.
    pub fn count(&self, color: usize, composition: &[usize]) -> usize {
        self.tables[color]
            .iter()
            .find(|(c, _)| c.as_slice() == composition)
            .map_or(0, |(_, n)| *n)
    }
}

pub fn incidence_tables(h: &Hypergraph, f: &Coloring) -> Result<Vec<IncidenceTable>> {
    check_vertex_coloring(h, f)?;
    let compositions: Vec<Vec<usize>> =
        (0..h.edge_count()).map(|e| edge_composition(h, f, e)).collect();
    let mut tables = vec![IncidenceTable::new(); h.order()];
    for (e, edge) in h.edges().iter().enumerate() {
        for &v in edge {
            *tables[v].entry(compositions[e].clone()).or_insert(0) += 1;
        }
    }
    Ok(tables)
}

/// Checks perfection and returns the composition table of every color.
pub fn hypergraph_is_perfect(h: &Hypergraph, f: &Coloring) -> Result<PerfectHypergraphReport> {
    let tables = incidence_tables(h, f)?;
    let mut representative: Vec<Option<usize>> = vec![None; f.num_colors()];
    for v in 0..h.order() {
        let color = f.color(v);
        let Some(first) = representative[color] else {
            representative[color] = Some(v);
            continue;
        };
        if tables[first] != tables[v] {
            let composition = tables[first]
                .keys()
                .chain(tables[v].keys())
                .find(|c| tables[first].get(*c) != tables[v].get(*c))
                .expect("tables differ")
                .clone();
            return Err(Error::NotPerfect(NotPerfect {
                color,
                first,
                second: v,
                first_count: tables[first].get(&composition).copied().unwrap_or(0),
                second_count: tables[v].get(&composition).copied().unwrap_or(0),
                composition,
            }));
        }
    }
    Ok(PerfectHypergraphReport {
        tables: representative
            .into_iter()
            .map(|r| {
                tables[r.expect("coloring is surjective")]
                    .iter()
                    .map(|(c, n)| (c.clone(), *n))
                    .collect()
            })
            .collect(),
    })
}

pub fn is_hypergraph_perfect(h: &Hypergraph, f: &Coloring) -> Result<bool> {
    match hypergraph_is_perfect(h, f) {
        Ok(_) => Ok(true),
        Err(Error::NotPerfect(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Colors every hyperedge by its composition.
///
/// Compositions are numbered contiguously in increasing lexicographic order of
/// their count vectors; the second component lists them by new color.
pub fn induce_edge_coloring_with_key(h: &Hypergraph, f: &Coloring) -> Result<(Coloring, Vec<Vec<usize>>)> {
    check_vertex_coloring(h, f)?;
    let compositions: Vec<Vec<usize>> =
        (0..h.edge_count()).map(|e| edge_composition(h, f, e)).collect();
    let mut key = compositions.clone();
    key.sort();
    key.dedup();
    let colors = compositions
        .iter()
        .map(|c| key.binary_search(c).expect("present"))
        .collect();
    Ok((Coloring::new(colors)?, key))
}

/// Coloring of `line_multigraph(h)` induced by a vertex coloring of `h`.
pub fn induce_edge_coloring(h: &Hypergraph, f: &Coloring) -> Result<Coloring> {
    induce_edge_coloring_with_key(h, f).map(|(c, _)| c)
}

/// Coloring of `D(H)`: vertices keep their colors, hyperedges get colors
/// `c + composition index`.
pub fn double_cover_coloring(h: &Hypergraph, f: &Coloring) -> Result<Coloring> {
    let (edge_colors, _) = induce_edge_coloring_with_key(h, f)?;
    let c = f.num_colors();
    let colors = f
        .colors()
        .iter()
        .copied()
        .chain(edge_colors.colors().iter().map(|&e| c + e))
        .collect();
    Coloring::new(colors)
}

/// Restricts a perfect coloring of a bipartite graph to part 1.
///
/// The quotient of the restriction on `M12` (loops kept) is `S1 S2`, where
/// `[[0, S1], [S2, 0]]` is the quotient on the bipartite graph. Part-1 colors
/// are renumbered in increasing order.
pub fn restrict_bipartite_coloring(b: &BipartiteGraph, f: &Coloring) -> Result<(Coloring, QuotientMatrix)> {
    let (k1, k2) = b.part_sizes();
    if f.len() != k1 + k2 {
        return Err(Error::DimensionMismatch {
            expected: k1 + k2,
            found: f.len(),
        });
    }
    let mut part1: Vec<usize> = f.colors()[..k1].to_vec();
    let mut part2: Vec<usize> = f.colors()[k1..].to_vec();
    part1.sort_unstable();
    part1.dedup();
    part2.sort_unstable();
    part2.dedup();
    if let Some(shared) = part1.iter().find(|c| part2.binary_search(c).is_ok()) {
        return Err(invalid_params(format!("color {shared} is used in both parts")));
    }
    let s = quotient_matrix(&b.adjacency(), f)?;
    let product: Vec<Vec<i64>> = part1
        .iter()
        .map(|&i| {
            part1
                .iter()
                .map(|&j| part2.iter().map(|&l| s.get(i, l) * s.get(l, j)).sum())
                .collect()
        })
        .collect();
    let product = QuotientMatrix::new(product)?;
    let restricted = Coloring::from_labels(&f.colors()[..k1]);
    expect_quotient(&m12(b, true), &restricted, &product)
        .map_err(|e| Error::Inconsistent(format!("restricted quotient does not verify: {e}")))?;
    Ok((restricted, product))
}

/// True iff every hyperedge meets `set` in exactly `multiplicity` vertices.
pub fn verify_transversal(h: &Hypergraph, set: &[usize], multiplicity: usize) -> Result<bool> {
    let mut member = vec![false; h.order()];
    for &v in set {
        if v >= h.order() {
            return Err(invalid_input(format!("vertex {v} out of range")));
        }
        member[v] = true;
    }
    Ok(h
        .edges()
        .iter()
        .all(|e| e.iter().filter(|&&v| member[v]).count() == multiplicity))
}

/// `[[l r, (k-l) r], [l r, (k-l) r]]`, the quotient of an `l`-fold transversal
/// on `M12(D(H))` with loops, for `k`-uniform `r`-regular `H`.
pub fn transversal_quotient(k: u64, r: u64, multiplicity: u64) -> Result<QuotientMatrix> {
    if multiplicity == 0 || multiplicity >= k {
        return Err(invalid_params(format!(
            "transversal multiplicity must satisfy 0 < l < k, got l = {multiplicity}, k = {k}"
        )));
    }
    let (k, r, l) = (k as i64, r as i64, multiplicity as i64);
    Ok(QuotientMatrix::from_array([[l * r, (k - l) * r], [l * r, (k - l) * r]]))
}
