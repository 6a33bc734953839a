//! Constructors for the graph and hypergraph families used throughout the crate.
//!
//! Vertex orders are part of the contract: `k`-subsets are listed in
//! lexicographic order of their sorted tuples, subspaces in lexicographic
//! order of their flattened RREF bases, and group elements in lexicographic
//! order of their coordinate tuples.

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{invalid_params, Error, Result};
use crate::graph::{AdjacencyMatrix, Multigraph};
use crate::hypergraph::Hypergraph;
pub use crate::subspace::{enumerate_subspaces, gaussian_binomial, Subspace};

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

/// Position of a sorted `k`-subset in [`k_subsets`] order.
pub fn subset_rank(n: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut rank = 0u64;
    let mut prev = 0usize;
    for (i, &x) in subset.iter().enumerate() {
        for y in prev..x {
            rank += binomial((n - y - 1) as u64, (k - i - 1) as u64);
        }
        prev = x + 1;
    }
    rank as usize
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.binary_search(x).is_ok()).count()
}

pub fn complete(n: usize) -> Multigraph {
    let mut g = Multigraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.set_multiplicity(u, v, 1);
        }
    }
    g
}

pub fn cycle(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return Err(invalid_params("a cycle needs at least 3 vertices"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Multigraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Multigraph::from_edges(n, &edges).expect("in range")
}

/// The Petersen graph: 2-subsets of a 5-set, adjacent when disjoint.
pub fn petersen() -> Multigraph {
    let pairs = k_subsets(5, 2);
    let mut g = Multigraph::empty(10);
    for i in 0..10 {
        for j in i + 1..10 {
            if intersection_size(&pairs[i], &pairs[j]) == 0 {
                g.set_multiplicity(i, j, 1);
            }
        }
    }
    g
}

/// Johnson graph `J(n, k)`: `k`-subsets adjacent when they share `k - 1` points.
pub fn johnson(n: usize, k: usize) -> Result<Multigraph> {
    if k > n {
        return Err(invalid_params(format!("Johnson graph needs k <= n, got n = {n}, k = {k}")));
    }
    let vertices = k_subsets(n, k);
    let mut g = Multigraph::empty(vertices.len());
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if intersection_size(&vertices[i], &vertices[j]) + 1 == k {
                g.set_multiplicity(i, j, 1);
            }
        }
    }
    Ok(g)
}

fn check_design_params(n: usize, k: usize, t: usize) -> Result<()> {
    if !(0 < t && t < k && k < n) {
        return Err(invalid_params(format!(
            "need 0 < t < k < n, got n = {n}, k = {k}, t = {t}"
        )));
    }
    Ok(())
}

/// `G_{n,k,t}`: vertices are the `k`-subsets, one hyperedge per `t`-subset
/// collecting the blocks that contain it.
pub fn design_hypergraph(n: usize, k: usize, t: usize) -> Result<Hypergraph> {
    check_design_params(n, k, t)?;
    let blocks = k_subsets(n, k);
    let mut edges = vec![Vec::new(); binomial(n as u64, t as u64) as usize];
    for (b, block) in blocks.iter().enumerate() {
        for sub in block.iter().copied().combinations(t) {
            edges[subset_rank(n, &sub)].push(b);
        }
    }
    Hypergraph::new(blocks.len(), edges)
}

/// Loopless `M12(D(G_{n,k,t}))`: distinct blocks joined by `C(|u ∩ v|, t)` edges.
pub fn johnson_design_multigraph(n: usize, k: usize, t: usize) -> Result<Multigraph> {
    check_design_params(n, k, t)?;
    let vertices = k_subsets(n, k);
    let mut g = Multigraph::empty(vertices.len());
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let m = binomial(intersection_size(&vertices[i], &vertices[j]) as u64, t as u64);
            if m != 0 {
                g.set_multiplicity(i, j, m as u32);
            }
        }
    }
    Ok(g)
}

fn multigraph_from_pairs<F>(count: usize, multiplicity: F) -> Multigraph
where
    F: Fn(usize, usize) -> u32 + Sync,
{
    let rows: Vec<Vec<(usize, u32)>> = (0..count)
        .into_par_iter()
        .map(|i| {
            (i + 1..count)
                .filter_map(|j| {
                    let m = multiplicity(i, j);
                    (m != 0).then_some((j, m))
                })
                .collect()
        })
        .collect();
    let mut g = Multigraph::empty(count);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, m) in row {
            g.set_multiplicity(i, j, m);
        }
    }
    g
}

/// Grassmann graph `J_q(n, k)`: `k`-subspaces adjacent when they meet in dimension `k - 1`.
pub fn grassmann(n: usize, k: usize, q: u32) -> Result<Multigraph> {
    let vertices = enumerate_subspaces(n, k, q)?;
    let g = multigraph_from_pairs(vertices.len(), |i, j| {
        u32::from(vertices[i].intersection_dim(&vertices[j]) + 1 == k)
    });
    if k > 0 && k < n {
        let expected = u64::from(q)
            * gaussian_binomial(k as u32, 1, u64::from(q))
            * gaussian_binomial((n - k) as u32, 1, u64::from(q));
        let degree = g.require_regular()?;
        if degree != expected {
            return Err(Error::Inconsistent(format!(
                "Grassmann graph has degree {degree}, expected {expected}"
            )));
        }
    }
    Ok(g)
}

/// `G^q_{n,k,t}`: vertices are the `k`-subspaces, one hyperedge per
/// `t`-subspace collecting the `k`-subspaces that contain it.
pub fn subspace_design_hypergraph(n: usize, k: usize, t: usize, q: u32) -> Result<Hypergraph> {
    check_design_params(n, k, t)?;
    let vertices = enumerate_subspaces(n, k, q)?;
    let small = enumerate_subspaces(n, t, q)?;
    let edges: Vec<Vec<usize>> = small
        .par_iter()
        .map(|s| (0..vertices.len()).filter(|&v| vertices[v].contains(s)).collect())
        .collect();
    Hypergraph::new(vertices.len(), edges)
}

/// Loopless `M12(D(G^q_{n,k,t}))`: distinct subspaces joined by `[dim(u ∩ v) t]_q` edges.
pub fn subspace_design_multigraph(n: usize, k: usize, t: usize, q: u32) -> Result<Multigraph> {
    check_design_params(n, k, t)?;
    let vertices = enumerate_subspaces(n, k, q)?;
    Ok(multigraph_from_pairs(vertices.len(), |i, j| {
        let d = vertices[i].intersection_dim(&vertices[j]);
        gaussian_binomial(d as u32, t as u32, u64::from(q)) as u32
    }))
}

/// Index of the pair `{a, b}` among the lexicographically ordered 2-subsets of `0..n`.
pub fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    subset_rank(n, &[a, b])
}

/// `Γ_n`: vertices are the edges of `K_n`, hyperedges the triangles.
pub fn triangle_hypergraph(n: usize) -> Result<Hypergraph> {
    if n < 2 {
        return Err(invalid_params("Γ_n needs n >= 2"));
    }
    let edges = (0..n)
        .combinations(3)
        .map(|t| {
            vec![
                pair_index(n, t[0], t[1]),
                pair_index(n, t[0], t[2]),
                pair_index(n, t[1], t[2]),
            ]
        })
        .collect();
    Hypergraph::new(n * (n - 1) / 2, edges)
}

/// `Δ_n`: vertices are the nonzero vectors of `GF(2)^n` (vertex `i` is the
/// vector with integer encoding `i + 1`), hyperedges the zero-sum triples.
///
/// Hyperedge `j` is the set of nonzero vectors of the `j`-th 2-subspace in
/// [`enumerate_subspaces`] order, so `line_multigraph(delta_hypergraph(n))`
/// is `grassmann(n, 2, 2)` with the same vertex order.
pub fn delta_hypergraph(n: usize) -> Result<Hypergraph> {
    if n < 2 {
        return Err(invalid_params("Δ_n needs n >= 2"));
    }
    let edges = enumerate_subspaces(n, 2, 2)?
        .iter()
        .map(|s| {
            s.element_indices()
                .into_iter()
                .filter(|&x| x != 0)
                .map(|x| x - 1)
                .collect()
        })
        .collect();
    Hypergraph::new((1 << n) - 1, edges)
}

/// Finite abelian group `Z_{m1} x ... x Z_{ms}`; elements are indexed in
/// lexicographic order of their coordinate tuples (last coordinate fastest).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    orders: Vec<usize>,
}

impl AbelianGroup {
    pub fn new(orders: Vec<usize>) -> Result<Self> {
        if let Some(&m) = orders.iter().find(|&&m| m < 2) {
            return Err(invalid_params(format!("cyclic factor order {m} must be at least 2")));
        }
        Ok(Self { orders })
    }

    pub fn cyclic(m: usize) -> Result<Self> {
        Self::new(vec![m])
    }

    /// `Z_2^n`.
    pub fn binary(n: usize) -> Result<Self> {
        Self::new(vec![2; n])
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn element(&self, mut index: usize) -> Vec<usize> {
        let mut tuple = vec![0; self.orders.len()];
        for (slot, &m) in tuple.iter_mut().zip(&self.orders).rev() {
            *slot = index % m;
            index /= m;
        }
        tuple
    }

    pub fn index(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.orders.len() {
            return Err(Error::DimensionMismatch {
                expected: self.orders.len(),
                found: tuple.len(),
            });
        }
        let mut index = 0;
        for (&x, &m) in tuple.iter().zip(&self.orders) {
            if x >= m {
                return Err(invalid_params(format!("coordinate {x} out of range 0..{m}")));
            }
            index = index * m + x;
        }
        Ok(index)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.element(a), self.element(b));
        let sum: Vec<usize> = x
            .iter()
            .zip(&y)
            .zip(&self.orders)
            .map(|((&p, &q), &m)| (p + q) % m)
            .collect();
        self.index(&sum).expect("in range")
    }

    pub fn neg(&self, a: usize) -> usize {
        let neg: Vec<usize> = self
            .element(a)
            .iter()
            .zip(&self.orders)
            .map(|(&p, &m)| (m - p) % m)
            .collect();
        self.index(&neg).expect("in range")
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Identity element; always index 0.
    pub fn zero(&self) -> usize {
        0
    }

    /// Full addition table, `table[a * |K| + b] = a + b`.
    pub fn addition_table(&self) -> Vec<usize> {
        let v = self.order();
        let mut table = Vec::with_capacity(v * v);
        for a in 0..v {
            for b in 0..v {
                table.push(self.add(a, b));
            }
        }
        table
    }

    /// Group index of a bit vector with coordinate `j` at bit `j`, for `Z_2^n`.
    pub fn binary_vector_index(&self, bits: usize) -> usize {
        let n = self.orders.len();
        (0..n).fold(0, |acc, j| (acc << 1) | ((bits >> j) & 1))
    }

    /// Inverse of [`binary_vector_index`](Self::binary_vector_index).
    pub fn binary_vector(&self, index: usize) -> usize {
        self.binary_vector_index(index)
    }
}

/// Validates a connection set: in range, no repeats.
pub(crate) fn element_set(k: &AbelianGroup, set: &[usize]) -> Result<Vec<bool>> {
    let mut member = vec![false; k.order()];
    for &a in set {
        if a >= k.order() {
            return Err(invalid_params(format!("element {a} out of range 0..{}", k.order())));
        }
        if std::mem::replace(&mut member[a], true) {
            return Err(invalid_params(format!("element {a} listed twice")));
        }
    }
    Ok(member)
}

/// Cayley graph `Cay(K, A)`; requires `A = -A` and `0 ∉ A`.
pub fn cayley(k: &AbelianGroup, connection: &[usize]) -> Result<Multigraph> {
    let member = element_set(k, connection)?;
    if member[k.zero()] {
        return Err(invalid_params("connection set contains the identity"));
    }
    if let Some(&a) = connection.iter().find(|&&a| !member[k.neg(a)]) {
        return Err(invalid_params(format!("connection set is not symmetric: -{a} missing")));
    }
    let v = k.order();
    let mut g = Multigraph::empty(v);
    for x in 0..v {
        for &a in connection {
            g.set_multiplicity(x, k.add(x, a), 1);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10, 0), 1);
    }

    #[test]
    fn subset_rank_matches_enumeration() {
        for (i, s) in k_subsets(7, 3).iter().enumerate() {
            assert_eq!(subset_rank(7, s), i);
        }
    }

    #[test]
    fn johnson_examples() {
        let g = johnson(5, 2).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.require_regular().unwrap(), 6);
        assert_eq!(johnson(4, 1).unwrap(), complete(4));
        let g = johnson(7, 3).unwrap();
        assert_eq!((g.order(), g.require_regular().unwrap()), (35, 12));
        assert!(johnson(3, 5).is_err());
    }

    #[test]
    fn design_hypergraph_examples() {
        let h = design_hypergraph(7, 3, 2).unwrap();
        assert_eq!((h.order(), h.edge_count()), (35, 21));
        assert_eq!((h.uniformity(), h.regularity()), (Some(5), Some(3)));
        let h = design_hypergraph(6, 2, 1).unwrap();
        assert_eq!((h.order(), h.edge_count(), h.uniformity()), (15, 6, Some(5)));
        assert!(design_hypergraph(5, 3, 3).is_err());
    }

    #[test]
    fn johnson_design_multigraph_examples() {
        assert_eq!(johnson_design_multigraph(7, 3, 2).unwrap(), johnson(7, 3).unwrap());
        assert_eq!(johnson_design_multigraph(6, 2, 1).unwrap(), johnson(6, 2).unwrap());
        let g = johnson_design_multigraph(8, 4, 2).unwrap();
        let blocks = k_subsets(8, 4);
        let a = subset_rank(8, &[0, 1, 2, 3]);
        let b = subset_rank(8, &[0, 1, 2, 4]);
        let c = subset_rank(8, &[0, 1, 4, 5]);
        assert_eq!(blocks[a], vec![0, 1, 2, 3]);
        assert_eq!(g.entry(a, b), 3);
        assert_eq!(g.entry(a, c), 1);
    }

    #[test]
    fn grassmann_examples() {
        let g = grassmann(4, 2, 2).unwrap();
        assert_eq!((g.order(), g.require_regular().unwrap()), (35, 18));
        let g = grassmann(3, 3, 2).unwrap();
        assert_eq!(g.order(), 1);
        let g = grassmann(3, 1, 3).unwrap();
        assert_eq!(g, complete(13));
    }

    #[test]
    fn subspace_design_hypergraph_examples() {
        let h = subspace_design_hypergraph(4, 2, 1, 2).unwrap();
        assert_eq!((h.order(), h.edge_count()), (35, 15));
        assert_eq!((h.uniformity(), h.regularity()), (Some(7), Some(3)));
        assert!(subspace_design_hypergraph(4, 2, 2, 2).is_err());
        assert_eq!(subspace_design_multigraph(4, 2, 1, 2).unwrap(), grassmann(4, 2, 2).unwrap());
    }

    #[test]
    fn triangle_hypergraphs() {
        let h = triangle_hypergraph(4).unwrap();
        assert_eq!((h.order(), h.edge_count()), (6, 4));
        let h = triangle_hypergraph(3).unwrap();
        assert_eq!((h.order(), h.edge_count()), (3, 1));
        let h = triangle_hypergraph(5).unwrap();
        assert_eq!((h.order(), h.edge_count(), h.regularity()), (10, 10, Some(3)));
        assert_eq!(h.uniformity(), Some(3));
    }

    #[test]
    fn delta_hypergraphs() {
        let h = delta_hypergraph(4).unwrap();
        assert_eq!((h.order(), h.edge_count(), h.regularity()), (15, 35, Some(7)));
        for e in h.edges() {
            assert_eq!((e[0] + 1) ^ (e[1] + 1) ^ (e[2] + 1), 0);
        }
        let h = delta_hypergraph(2).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn group_arithmetic() {
        let k = AbelianGroup::new(vec![2, 3]).unwrap();
        assert_eq!(k.order(), 6);
        assert_eq!(k.element(4), vec![1, 1]);
        assert_eq!(k.add(4, 5), k.index(&[0, 0]).unwrap());
        assert_eq!(k.neg(1), 2);
        assert!(AbelianGroup::new(vec![1]).is_err());
        let z = AbelianGroup::binary(3).unwrap();
        // bit 0 is the first coordinate
        assert_eq!(z.element(z.binary_vector_index(0b001)), vec![1, 0, 0]);
        for x in 0..8 {
            assert_eq!(z.binary_vector(z.binary_vector_index(x)), x);
        }
    }

    #[test]
    fn cayley_examples() {
        let z5 = AbelianGroup::cyclic(5).unwrap();
        assert_eq!(cayley(&z5, &[1, 4]).unwrap(), cycle(5).unwrap());
        let v4 = AbelianGroup::binary(2).unwrap();
        assert_eq!(cayley(&v4, &[1, 2, 3]).unwrap(), complete(4));
        assert_eq!(cayley(&z5, &[]).unwrap(), Multigraph::empty(5));
        assert!(cayley(&z5, &[1, 2]).is_err());
        assert!(cayley(&z5, &[0]).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let p = petersen();
        assert_eq!(p.require_regular().unwrap(), 3);
        assert!(p.is_simple());
    }
}
