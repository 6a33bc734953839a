//! Block designs, subspace designs, Hadamard matrices, and their perfect-coloring
//! characterizations.
//!
//! A `t-(n,k,λ)` design is a `λ`-fold transversal of the hypergraph
//! `G_{n,k,t}`. With `R = C(k,t)` and `K = C(n-t,k-t)` its indicator coloring on
//! the loopless multigraph `(J(n,k))_{k-t}` therefore has quotient
//! `[[(λ-1)R, (K-λ)R], [λR, (K-1-λ)R]]`; the subspace case replaces binomials
//! by Gaussian binomials.
//!
//! [`design_quotient_reference`] keeps a second, closed-form variant that
//! uses `C(n-k,k-t)` in place of `K - 1`. The two agree exactly when
//! `t = k - 1` (set designs only); everywhere else the reference variant
//! does not match brute force, and [`compare_design_quotients`] reports the
//! disagreement rather than hiding it.

use serde::Serialize;

use crate::error::{invalid_input, invalid_params, Error, Result};
use crate::families::{binomial, johnson_design_multigraph, k_subsets, subset_rank, subspace_design_multigraph};
use crate::graph::{quotient_matrix, AdjacencyMatrix, Coloring, Multigraph, QuotientMatrix};
use crate::spectral::{check_dh_extremal, DhReport};
use crate::subspace::{enumerate_subspaces, gaussian_binomial, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDesign {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub lambda: usize,
    blocks: Vec<Vec<usize>>,
}

impl BlockDesign {
    /// Blocks are sorted; each must have `k` distinct points below `n`.
    pub fn new(n: usize, k: usize, t: usize, lambda: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if t > k || k > n {
            return Err(invalid_params(format!("need t <= k <= n, got t = {t}, k = {k}, n = {n}")));
        }
        let mut sorted = Vec::with_capacity(blocks.len());
        for (i, mut b) in blocks.into_iter().enumerate() {
            b.sort_unstable();
            if b.len() != k {
                return Err(invalid_input(format!("block {i} has {} points, expected {k}", b.len())));
            }
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(invalid_input(format!("block {i} repeats a point")));
            }
            if b.last().is_some_and(|&x| x >= n) {
                return Err(invalid_input(format!("block {i} has a point outside 0..{n}")));
            }
            sorted.push(b);
        }
        Ok(Self {
            n,
            k,
            t,
            lambda,
            blocks: sorted,
        })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

/// A `t`-subset covered the wrong number of times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DesignViolation {
    pub subset: Vec<usize>,
    pub count: usize,
    pub expected: usize,
}

/// First `t`-subset (in lexicographic order) not covered exactly `λ` times.
pub fn design_violation(d: &BlockDesign) -> Option<DesignViolation> {
    let subsets = k_subsets(d.n, d.t);
    let mut counts = vec![0usize; subsets.len()];
    for block in &d.blocks {
        for sub in itertools::Itertools::combinations(block.iter().copied(), d.t) {
            counts[subset_rank(d.n, &sub)] += 1;
        }
    }
    counts
        .iter()
        .position(|&c| c != d.lambda)
        .map(|i| DesignViolation {
            subset: subsets[i].clone(),
            count: counts[i],
            expected: d.lambda,
        })
}

pub fn verify_design(d: &BlockDesign) -> bool {
    design_violation(d).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubspaceDesign {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub lambda: usize,
    pub q: u32,
    subspaces: Vec<Subspace>,
}

impl SubspaceDesign {
    pub fn new(n: usize, k: usize, t: usize, lambda: usize, q: u32, subspaces: Vec<Subspace>) -> Result<Self> {
        if t > k || k > n {
            return Err(invalid_params(format!("need t <= k <= n, got t = {t}, k = {k}, n = {n}")));
        }
        if let Some(s) = subspaces
            .iter()
            .find(|s| s.dim() != k || s.ambient_dim() != n || s.field_order() != q)
        {
            return Err(invalid_input(format!(
                "subspace of dimension {} in GF({})^{} does not belong to a {t}-({n},{k},{lambda})_{q} design",
                s.dim(),
                s.field_order(),
                s.ambient_dim()
            )));
        }
        Ok(Self {
            n,
            k,
            t,
            lambda,
            q,
            subspaces,
        })
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }
}

/// A `t`-subspace contained in the wrong number of members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubspaceDesignViolation {
    pub subspace: Subspace,
    pub count: usize,
    pub expected: usize,
}

pub fn subspace_design_violation(d: &SubspaceDesign) -> Result<Option<SubspaceDesignViolation>> {
    for small in enumerate_subspaces(d.n, d.t, d.q)? {
        let count = d.subspaces.iter().filter(|s| s.contains(&small)).count();
        if count != d.lambda {
            return Ok(Some(SubspaceDesignViolation {
                subspace: small,
                count,
                expected: d.lambda,
            }));
        }
    }
    Ok(None)
}

pub fn verify_subspace_design(d: &SubspaceDesign) -> Result<bool> {
    Ok(subspace_design_violation(d)?.is_none())
}

fn transversal_quotient_loopless(r: i64, hyperedge: i64, lambda: i64) -> QuotientMatrix {
    QuotientMatrix::from_array([
        [(lambda - 1) * r, (hyperedge - lambda) * r],
        [lambda * r, (hyperedge - 1 - lambda) * r],
    ])
}

fn closed_form_quotient(r: i64, tail: i64, lambda: i64) -> QuotientMatrix {
    QuotientMatrix::from_array([
        [r * (lambda - 1), r * (tail - lambda + 1)],
        [r * lambda, r * (tail - lambda)],
    ])
}

fn check_params(n: usize, k: usize, t: usize) -> Result<()> {
    if !(0 < t && t < k && k < n) {
        return Err(invalid_params(format!("need 0 < t < k < n, got n = {n}, k = {k}, t = {t}")));
    }
    Ok(())
}

/// Quotient a `t-(n,k,λ)` design's indicator must have on `(J(n,k))_{k-t}`.
pub fn design_quotient_actual(n: usize, k: usize, t: usize, lambda: usize) -> Result<QuotientMatrix> {
    check_params(n, k, t)?;
    let r = binomial(k as u64, t as u64) as i64;
    let hyperedge = binomial((n - t) as u64, (k - t) as u64) as i64;
    Ok(transversal_quotient_loopless(r, hyperedge, lambda as i64))
}

/// Closed-form variant with `C(n-k, k-t)`; valid only when `t = k - 1`.
pub fn design_quotient_reference(n: usize, k: usize, t: usize, lambda: usize) -> Result<QuotientMatrix> {
    check_params(n, k, t)?;
    let r = binomial(k as u64, t as u64) as i64;
    let tail = binomial((n - k) as u64, (k - t) as u64) as i64;
    Ok(closed_form_quotient(r, tail, lambda as i64))
}

/// Quotient a `t-(n,k,λ)_q` design's indicator must have on loopless `M12(D(G^q_{n,k,t}))`.
pub fn subspace_design_quotient_actual(n: usize, k: usize, t: usize, lambda: usize, q: u32) -> Result<QuotientMatrix> {
    check_params(n, k, t)?;
    let q = u64::from(q);
    let r = gaussian_binomial(k as u32, t as u32, q) as i64;
    let hyperedge = gaussian_binomial((n - t) as u32, (k - t) as u32, q) as i64;
    Ok(transversal_quotient_loopless(r, hyperedge, lambda as i64))
}

/// Closed-form variant with `[n-k k-t]_q`; disagrees with brute force for `q > 1`.
pub fn subspace_design_quotient_reference(n: usize, k: usize, t: usize, lambda: usize, q: u32) -> Result<QuotientMatrix> {
    check_params(n, k, t)?;
    let q = u64::from(q);
    let r = gaussian_binomial(k as u32, t as u32, q) as i64;
    let tail = gaussian_binomial((n - k) as u32, (k - t) as u32, q) as i64;
    Ok(closed_form_quotient(r, tail, lambda as i64))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientComparison {
    pub actual: QuotientMatrix,
    pub reference: QuotientMatrix,
    pub agree: bool,
}

pub fn compare_design_quotients(n: usize, k: usize, t: usize, lambda: usize) -> Result<QuotientComparison> {
    let actual = design_quotient_actual(n, k, t, lambda)?;
    let reference = design_quotient_reference(n, k, t, lambda)?;
    Ok(QuotientComparison {
        agree: actual == reference,
        actual,
        reference,
    })
}

pub fn compare_subspace_design_quotients(
    n: usize,
    k: usize,
    t: usize,
    lambda: usize,
    q: u32,
) -> Result<QuotientComparison> {
    let actual = subspace_design_quotient_actual(n, k, t, lambda, q)?;
    let reference = subspace_design_quotient_reference(n, k, t, lambda, q)?;
    Ok(QuotientComparison {
        agree: actual == reference,
        actual,
        reference,
    })
}

fn indicator_from_vertices(order: usize, mut vertices: Vec<usize>) -> Result<Coloring> {
    if vertices.is_empty() {
        return Err(invalid_input("design has no blocks"));
    }
    vertices.sort_unstable();
    if vertices.windows(2).any(|w| w[0] == w[1]) {
        return Err(invalid_input("design has repeated blocks; it is not a vertex set"));
    }
    Coloring::from_indicator(order, &vertices)
}

/// Block vertices in `johnson(n, k)` order.
pub fn design_vertices(d: &BlockDesign) -> Vec<usize> {
    d.blocks.iter().map(|b| subset_rank(d.n, b)).collect()
}

/// Color 0 on the blocks of `d`, color 1 elsewhere, on a multigraph whose
/// vertices are the `k`-subsets in lexicographic order.
pub fn design_to_coloring(d: &BlockDesign, g: &Multigraph) -> Result<Coloring> {
    let expected = binomial(d.n as u64, d.k as u64) as usize;
    if g.order() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: g.order(),
        });
    }
    indicator_from_vertices(expected, design_vertices(d))
}

/// Member vertices in [`enumerate_subspaces`] order.
pub fn subspace_design_vertices(d: &SubspaceDesign) -> Result<Vec<usize>> {
    let all = enumerate_subspaces(d.n, d.k, d.q)?;
    d.subspaces
        .iter()
        .map(|s| {
            all.binary_search(s)
                .map_err(|_| Error::Inconsistent("subspace missing from enumeration".into()))
        })
        .collect()
}

pub fn subspace_design_to_coloring(d: &SubspaceDesign, g: &Multigraph) -> Result<Coloring> {
    let expected = gaussian_binomial(d.n as u32, d.k as u32, u64::from(d.q)) as usize;
    if g.order() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: g.order(),
        });
    }
    indicator_from_vertices(expected, subspace_design_vertices(d)?)
}

/// Checks an indicator coloring against a 2x2 quotient; a one-color coloring
/// (every vertex in the design) is checked against the top-left entry only.
pub fn verify_indicator_quotient(g: &Multigraph, f: &Coloring, expected: &QuotientMatrix) -> Result<bool> {
    match f.num_colors() {
        2 => crate::graph::verify_quotient(g, f, expected),
        1 => Ok(quotient_matrix(g, f).is_ok_and(|s| s.get(0, 0) == expected.get(0, 0))),
        c => Err(invalid_params(format!("expected an indicator coloring, got {c} colors"))),
    }
}

/// The blocks of a `t-(n,k,1)` design as an independent set of `(J(n,k))_{k-t}`.
pub fn steiner_independence_check(d: &BlockDesign) -> Result<DhReport> {
    if d.lambda != 1 {
        return Err(invalid_params(format!("expected λ = 1, got {}", d.lambda)));
    }
    let g = johnson_design_multigraph(d.n, d.k, d.t)?;
    check_dh_extremal(&g, &design_vertices(d), 0)
}

/// Subspace analogue of [`steiner_independence_check`].
pub fn subspace_steiner_independence_check(d: &SubspaceDesign) -> Result<DhReport> {
    if d.lambda != 1 {
        return Err(invalid_params(format!("expected λ = 1, got {}", d.lambda)));
    }
    let g = subspace_design_multigraph(d.n, d.k, d.t, d.q)?;
    check_dh_extremal(&g, &subspace_design_vertices(d)?, 0)
}

/// Square `±1` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HadamardMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl HadamardMatrix {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in &rows {
            if row.len() != order {
                return Err(Error::DimensionMismatch {
                    expected: order,
                    found: row.len(),
                });
            }
            if let Some(&x) = row.iter().find(|&&x| x != 1 && x != -1) {
                return Err(invalid_input(format!("entry {x} is not ±1")));
            }
            entries.extend_from_slice(row);
        }
        Ok(Self { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.order.max(1)).take(self.order).map(<[i8]>::to_vec).collect()
    }

    /// Sylvester's construction of order `2^m`.
    pub fn sylvester(m: u32) -> Self {
        let order = 1usize << m;
        let entries = (0..order * order)
            .map(|x| {
                let (i, j) = (x / order, x % order);
                if (i & j).count_ones() % 2 == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        Self { order, entries }
    }

    /// Paley's construction of order `p + 1` for a prime `p ≡ 3 (mod 4)`.
    pub fn paley(p: usize) -> Result<Self> {
        if p < 3 || p % 4 != 3 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(invalid_params(format!("Paley construction needs a prime p ≡ 3 mod 4, got {p}")));
        }
        let residues: Vec<bool> = {
            let mut r = vec![false; p];
            for x in 1..p {
                r[x * x % p] = true;
            }
            r
        };
        let chi = |a: usize| -> i8 {
            match a % p {
                0 => 0,
                a if residues[a] => 1,
                _ => -1,
            }
        };
        let order = p + 1;
        let mut rows = vec![vec![0i8; order]; order];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let skew = match (i, j) {
                    (0, 0) => 0,
                    (0, _) => 1,
                    (_, 0) => -1,
                    _ => chi(j + p - i),
                };
                *x = skew + i8::from(i == j);
            }
        }
        Self::new(rows)
    }
}

/// `HH* = nI`.
pub fn verify_hadamard(h: &HadamardMatrix) -> bool {
    let n = h.order;
    (0..n).all(|i| {
        (i..n).all(|j| {
            let dot: i64 = (0..n).map(|c| i64::from(h.get(i, c)) * i64::from(h.get(j, c))).sum();
            dot == if i == j { n as i64 } else { 0 }
        })
    })
}

/// Normalizes (rows first, then columns) so the first row and column are all `+1`,
/// deletes them, and reads the `+1` positions of each remaining row as a block.
/// The result is a `2-(4m+3, 2m+1, m)` design for order `4m + 4`, `m >= 1`.
pub fn hadamard_to_design(h: &HadamardMatrix) -> Result<BlockDesign> {
    let n = h.order;
    if n % 4 != 0 {
        return Err(invalid_params(format!("Hadamard order {n} is not divisible by 4")));
    }
    if n < 8 {
        return Err(invalid_params(format!("order {n} gives a degenerate design (m = 0)")));
    }
    if !verify_hadamard(h) {
        return Err(Error::NotHadamard("HH* != nI".into()));
    }
    let mut rows = h.to_rows();
    for row in rows.iter_mut() {
        if row[0] == -1 {
            row.iter_mut().for_each(|x| *x = -*x);
        }
    }
    for j in 0..n {
        if rows[0][j] == -1 {
            rows.iter_mut().for_each(|row| row[j] = -row[j]);
        }
    }
    let m = (n - 4) / 4;
    let blocks = rows[1..]
        .iter()
        .map(|row| (1..n).filter(|&j| row[j] == 1).map(|j| j - 1).collect())
        .collect();
    let design = BlockDesign::new(4 * m + 3, 2 * m + 1, 2, m, blocks)?;
    if !verify_design(&design) {
        return Err(Error::Inconsistent("normalized Hadamard rows do not form a 2-design".into()));
    }
    Ok(design)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{grassmann, johnson};
    use crate::graph::verify_quotient;

    pub(crate) fn fano() -> BlockDesign {
        BlockDesign::new(
            7,
            3,
            2,
            1,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap()
    }

    fn spread() -> SubspaceDesign {
        // GF(4) = GF(2)[w]/(w^2+w+1) acting on GF(2)^4 gives the Desarguesian spread
        let rows = |a: [u32; 4], b: [u32; 4]| Subspace::span(2, 4, &[a.to_vec(), b.to_vec()]).unwrap();
        let members = vec![
            rows([1, 0, 0, 0], [0, 1, 0, 0]),
            rows([0, 0, 1, 0], [0, 0, 0, 1]),
            rows([1, 0, 1, 0], [0, 1, 0, 1]),
            rows([1, 0, 0, 1], [0, 1, 1, 1]),
            rows([1, 0, 1, 1], [0, 1, 1, 0]),
        ];
        SubspaceDesign::new(4, 2, 1, 1, 2, members).unwrap()
    }

    #[test]
    fn fano_is_a_steiner_triple_system() {
        assert!(verify_design(&fano()));
        let mut broken = fano();
        broken.blocks.pop();
        let v = design_violation(&broken).unwrap();
        assert_eq!((v.count, v.expected), (0, 1));
    }

    #[test]
    fn perfect_matching_is_a_1_design() {
        let d = BlockDesign::new(6, 2, 1, 1, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert!(verify_design(&d));
    }

    #[test]
    fn block_validation() {
        assert!(BlockDesign::new(7, 3, 2, 1, vec![vec![0, 1]]).is_err());
        assert!(BlockDesign::new(7, 3, 2, 1, vec![vec![0, 1, 1]]).is_err());
        assert!(BlockDesign::new(7, 3, 2, 1, vec![vec![0, 1, 7]]).is_err());
    }

    #[test]
    fn spread_examples() {
        let d = spread();
        assert!(verify_subspace_design(&d).unwrap());
        let all = SubspaceDesign::new(4, 2, 1, 7, 2, enumerate_subspaces(4, 2, 2).unwrap()).unwrap();
        assert!(verify_subspace_design(&all).unwrap());
        let partial = SubspaceDesign::new(4, 2, 1, 1, 2, d.subspaces()[..4].to_vec()).unwrap();
        assert!(!verify_subspace_design(&partial).unwrap());
    }

    #[test]
    fn quotient_formulas() {
        let q = |rows: [[i64; 2]; 2]| QuotientMatrix::from_array(rows);
        assert_eq!(design_quotient_actual(7, 3, 2, 1).unwrap(), q([[0, 12], [3, 9]]));
        assert_eq!(design_quotient_actual(6, 2, 1, 1).unwrap(), q([[0, 8], [2, 6]]));
        assert_eq!(design_quotient_actual(8, 4, 1, 1).unwrap(), q([[0, 136], [4, 132]]));
        assert_eq!(design_quotient_reference(7, 3, 2, 1).unwrap(), q([[0, 12], [3, 9]]));
        assert_eq!(design_quotient_reference(6, 2, 1, 1).unwrap(), q([[0, 8], [2, 6]]));
        assert_eq!(design_quotient_reference(8, 4, 1, 1).unwrap(), q([[0, 16], [4, 12]]));
        assert_eq!(subspace_design_quotient_actual(4, 2, 1, 1, 2).unwrap(), q([[0, 18], [3, 15]]));
        assert_eq!(subspace_design_quotient_reference(4, 2, 1, 1, 2).unwrap(), q([[0, 9], [3, 6]]));
        assert_eq!(subspace_design_quotient_actual(4, 2, 1, 7, 2).unwrap().row(0), &[18, 0]);
        assert!(design_quotient_actual(5, 3, 3, 1).is_err());
        assert!(!compare_design_quotients(8, 4, 1, 1).unwrap().agree);
        assert!(compare_design_quotients(7, 3, 2, 1).unwrap().agree);
        assert!(!compare_subspace_design_quotients(4, 2, 1, 1, 2).unwrap().agree);
    }

    #[test]
    fn fano_coloring_on_johnson() {
        let g = johnson(7, 3).unwrap();
        let f = design_to_coloring(&fano(), &g).unwrap();
        assert!(verify_quotient(&g, &f, &QuotientMatrix::from_array([[0, 12], [3, 9]])).unwrap());
        assert!(design_to_coloring(&fano(), &johnson(7, 2).unwrap()).is_err());
        let empty = BlockDesign::new(7, 3, 2, 1, vec![]).unwrap();
        assert!(design_to_coloring(&empty, &g).is_err());
    }

    #[test]
    fn matching_coloring_on_j62() {
        let d = BlockDesign::new(6, 2, 1, 1, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let g = johnson_design_multigraph(6, 2, 1).unwrap();
        let f = design_to_coloring(&d, &g).unwrap();
        assert_eq!(quotient_matrix(&g, &f).unwrap(), QuotientMatrix::from_array([[0, 8], [2, 6]]));
        let report = steiner_independence_check(&d).unwrap();
        assert!(report.extremal);
        assert_eq!(report.bound, 3.0);
    }

    #[test]
    fn all_subspaces_degenerate_coloring() {
        let all = SubspaceDesign::new(4, 2, 1, 7, 2, enumerate_subspaces(4, 2, 2).unwrap()).unwrap();
        let g = grassmann(4, 2, 2).unwrap();
        let f = subspace_design_to_coloring(&all, &g).unwrap();
        assert_eq!(f.num_colors(), 1);
        let expected = subspace_design_quotient_actual(4, 2, 1, 7, 2).unwrap();
        assert!(verify_indicator_quotient(&g, &f, &expected).unwrap());
    }

    #[test]
    fn steiner_checks() {
        let report = steiner_independence_check(&fano()).unwrap();
        assert!(report.extremal);
        assert_eq!(report.bound, 7.0);
        let report = subspace_steiner_independence_check(&spread()).unwrap();
        assert!(report.extremal);
        assert_eq!(report.bound, 5.0);
        assert_eq!(report.theta_integer, Some(-3));
    }

    #[test]
    fn hadamard_examples() {
        assert!(verify_hadamard(&HadamardMatrix::new(vec![vec![1, 1], vec![1, -1]]).unwrap()));
        assert!(verify_hadamard(&HadamardMatrix::sylvester(3)));
        assert!(!verify_hadamard(&HadamardMatrix::new(vec![vec![1, 1], vec![1, 1]]).unwrap()));
        assert!(HadamardMatrix::new(vec![vec![1, 0], vec![1, 1]]).is_err());
        let p = HadamardMatrix::paley(11).unwrap();
        assert_eq!(p.order(), 12);
        assert!(verify_hadamard(&p));
        assert!(HadamardMatrix::paley(13).is_err());
    }

    #[test]
    fn hadamard_bridge() {
        let d = hadamard_to_design(&HadamardMatrix::sylvester(3)).unwrap();
        assert_eq!((d.n, d.k, d.t, d.lambda, d.blocks().len()), (7, 3, 2, 1, 7));
        let d = hadamard_to_design(&HadamardMatrix::paley(11).unwrap()).unwrap();
        assert_eq!((d.n, d.k, d.lambda), (11, 5, 2));
        assert!(verify_design(&d));
        assert!(hadamard_to_design(&HadamardMatrix::sylvester(2)).is_err());
        let not = HadamardMatrix::new(vec![vec![1; 8]; 8]).unwrap();
        assert!(matches!(hadamard_to_design(&not), Err(Error::NotHadamard(_))));
    }

    #[test]
    fn normalization_handles_negated_rows_and_columns() {
        let mut rows = HadamardMatrix::sylvester(3).to_rows();
        for x in rows[3].iter_mut() {
            *x = -*x;
        }
        for row in rows.iter_mut() {
            row[0] = -row[0];
            row[5] = -row[5];
        }
        let d = hadamard_to_design(&HadamardMatrix::new(rows).unwrap()).unwrap();
        assert!(verify_design(&d));
    }
}
