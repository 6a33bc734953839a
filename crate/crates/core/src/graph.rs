//! Multigraphs, colorings and the `MF = FS` criterion for perfect colorings.
//!
//! A coloring `f` of a (directed) multigraph with adjacency matrix `M` is
//! perfect exactly when there is an integer matrix `S` with `MF = FS`, where
//! `F` is the vertex-by-color indicator matrix of `f`. Row `v` of `MF` counts,
//! with multiplicity, the arcs from `v` into each color class; a loop at `v`
//! contributes `M[v][v]` to the class of `v` itself.
//!
//! Every check in this module is exact integer arithmetic.

use std::fmt;
use std::ops::{Add, Mul};

use num_rational::Rational64;
use num_traits::{FromPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid_input, invalid_params, Error, NotEquitable, Result};

/// Row access to a square nonnegative-integer adjacency matrix.
pub trait AdjacencyMatrix {
    fn order(&self) -> usize;

    /// Row `v` of the adjacency matrix: arc multiplicities from `v`.
    fn row(&self, v: usize) -> &[u32];

    fn entry(&self, u: usize, v: usize) -> u32 {
        self.row(u)[v]
    }

    /// Out-degree of `v`, counting each loop once.
    fn degree(&self, v: usize) -> u64 {
        self.row(v).iter().map(|&m| u64::from(m)).sum()
    }

    /// The common degree, or the first vertex that breaks regularity.
    fn require_regular(&self) -> Result<u64> {
        let n = self.order();
        if n == 0 {
            return Ok(0);
        }
        let expected = self.degree(0);
        for v in 1..n {
            let degree = self.degree(v);
            if degree != expected {
                return Err(Error::NotRegular {
                    vertex: v,
                    degree,
                    expected,
                });
            }
        }
        Ok(expected)
    }

    fn regular_degree(&self) -> Option<u64> {
        self.require_regular().ok()
    }
}

fn check_square(rows: &[Vec<u32>]) -> Result<Vec<u32>> {
    let n = rows.len();
    let mut flat = Vec::with_capacity(n * n);
    for row in rows {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        flat.extend_from_slice(row);
    }
    Ok(flat)
}

/// Undirected multigraph: symmetric adjacency matrix, diagonal counts loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    adj: Vec<u32>,
}

impl Multigraph {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        Self::from_flat(n, check_square(&rows)?)
    }

    /// Builds from a row-major `n*n` buffer, checking symmetry.
    pub fn from_flat(n: usize, adj: Vec<u32>) -> Result<Self> {
        if adj.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: adj.len(),
            });
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if adj[u * n + v] != adj[v * n + u] {
                    return Err(invalid_input(format!(
                        "adjacency matrix is not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(Self { n, adj })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![0; n * n],
        }
    }

    /// Simple graph from an edge list; repeated pairs raise multiplicity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid_input(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            g.add_edge(u, v, 1);
        }
        Ok(g)
    }

    /// Adds `m` parallel edges between `u` and `v` (or `m` loops when `u == v`).
    pub(crate) fn add_edge(&mut self, u: usize, v: usize, m: u32) {
        let n = self.n;
        self.adj[u * n + v] += m;
        if u != v {
            self.adj[v * n + u] += m;
        }
    }

    pub(crate) fn set_multiplicity(&mut self, u: usize, v: usize, m: u32) {
        let n = self.n;
        self.adj[u * n + v] = m;
        self.adj[v * n + u] = m;
    }

    pub fn as_flat(&self) -> &[u32] {
        &self.adj
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.adj.chunks(self.n.max(1)).take(self.n).map(<[u32]>::to_vec).collect()
    }

    /// Simple: no loops and all multiplicities at most one.
    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|v| self.entry(v, v) == 0) && self.adj.iter().all(|&m| m <= 1)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|v| self.entry(v, v) != 0)
    }

    pub fn without_loops(&self) -> Self {
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v * self.n + v] = 0;
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (u, &m) in self.row(v).iter().enumerate() {
                if m > 0 && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Number of edges counted with multiplicity, loops included once.
    pub fn edge_count(&self) -> u64 {
        let mut total = 0u64;
        for u in 0..self.n {
            for v in u..self.n {
                total += u64::from(self.entry(u, v));
            }
        }
        total
    }

    pub fn trace(&self) -> u64 {
        (0..self.n).map(|v| u64::from(self.entry(v, v))).sum()
    }

    /// Matrix-vector product `Mx`.
    pub fn apply<T>(&self, x: &[T]) -> Result<Vec<T>>
    where
        T: Clone + Zero + Add<Output = T> + Mul<Output = T> + FromPrimitive,
    {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok((0..self.n)
            .map(|u| {
                self.row(u)
                    .iter()
                    .zip(x)
                    .filter(|(&m, _)| m != 0)
                    .fold(T::zero(), |acc, (&m, xv)| {
                        acc + T::from_u32(m).expect("multiplicity fits") * xv.clone()
                    })
            })
            .collect())
    }
}

impl AdjacencyMatrix for Multigraph {
    fn order(&self) -> usize {
        self.n
    }

    fn row(&self, v: usize) -> &[u32] {
        &self.adj[v * self.n..(v + 1) * self.n]
    }
}

/// Directed multigraph; `adj[u][v]` counts arcs from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedMultigraph {
    n: usize,
    adj: Vec<u32>,
}

impl DirectedMultigraph {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        Ok(Self {
            n,
            adj: check_square(&rows)?,
        })
    }

    /// Reads a quotient matrix as the adjacency matrix of a directed multigraph on colors.
    pub fn from_quotient(s: &QuotientMatrix) -> Result<Self> {
        let mut adj = Vec::with_capacity(s.size() * s.size());
        for &e in s.entries() {
            let m = u32::try_from(e)
                .map_err(|_| invalid_input(format!("quotient entry {e} is not a valid arc count")))?;
            adj.push(m);
        }
        Ok(Self { n: s.size(), adj })
    }
}

impl AdjacencyMatrix for DirectedMultigraph {
    fn order(&self) -> usize {
        self.n
    }

    fn row(&self, v: usize) -> &[u32] {
        &self.adj[v * self.n..(v + 1) * self.n]
    }
}

impl From<Multigraph> for DirectedMultigraph {
    fn from(g: Multigraph) -> Self {
        Self { n: g.n, adj: g.adj }
    }
}

/// Surjective assignment of colors `0..c` to vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    /// The number of colors is `max + 1`; every color below it must be used.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let num_colors = colors.iter().max().map_or(0, |&m| m + 1);
        let mut used = vec![false; num_colors];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(invalid_input(format!(
                "coloring is not surjective: color {missing} of 0..{num_colors} is unused"
            )));
        }
        Ok(Self { colors, num_colors })
    }

    /// Renumbers arbitrary labels contiguously in increasing label order.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut distinct: Vec<usize> = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = labels
            .iter()
            .map(|l| distinct.binary_search(l).expect("label present"))
            .collect();
        Self {
            colors,
            num_colors: distinct.len(),
        }
    }

    /// Indicator coloring: members get color 0, the rest color 1.
    ///
    /// Collapses to a single color when the set is empty or everything.
    pub fn from_indicator(n: usize, members: &[usize]) -> Result<Self> {
        let mut labels = vec![1usize; n];
        for &v in members {
            if v >= n {
                return Err(invalid_input(format!("vertex {v} out of range for {n} vertices")));
            }
            labels[v] = 0;
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn monochromatic(n: usize) -> Self {
        Self {
            colors: vec![0; n],
            num_colors: usize::from(n > 0),
        }
    }

    /// Every vertex its own color.
    pub fn discrete(n: usize) -> Self {
        Self {
            colors: (0..n).collect(),
            num_colors: n,
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn class(&self, color: usize) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == color).collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_colors];
        for &c in &self.colors {
            sizes[c] += 1;
        }
        sizes
    }

    /// The `n x c` indicator matrix `F`.
    pub fn indicator_matrix(&self) -> Vec<Vec<u8>> {
        self.colors
            .iter()
            .map(|&c| {
                let mut row = vec![0u8; self.num_colors];
                row[c] = 1;
                row
            })
            .collect()
    }

    /// Applies `old color -> perm[old color]`; `perm` must be a permutation.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.num_colors {
            return Err(Error::DimensionMismatch {
                expected: self.num_colors,
                found: perm.len(),
            });
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(invalid_input(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(Self {
            colors: self.colors.iter().map(|&c| perm[c]).collect(),
            num_colors: self.num_colors,
        })
    }
}

impl TryFrom<Vec<usize>> for Coloring {
    type Error = Error;

    fn try_from(colors: Vec<usize>) -> Result<Self> {
        Self::new(colors)
    }
}

impl From<Coloring> for Vec<usize> {
    fn from(c: Coloring) -> Self {
        c.colors
    }
}

/// Square integer matrix; for perfect colorings, entry `(i, j)` is the number
/// of color-`j` neighbours of every color-`i` vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct QuotientMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl QuotientMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in &rows {
            if row.len() != size {
                return Err(Error::DimensionMismatch {
                    expected: size,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(Self { size, entries })
    }

    /// Literal constructor for small fixed matrices.
    pub fn from_array<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Self {
            size: N,
            entries: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.size).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.size).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if other.size != self.size {
            return Err(Error::DimensionMismatch {
                expected: self.size,
                found: other.size,
            });
        }
        let n = self.size;
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(Self { size: n, entries })
    }

    /// Reorders colors: entry `(perm[i], perm[j])` of the result is `(i, j)` here.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.size;
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[perm[i] * n + perm[j]] = self.get(i, j);
            }
        }
        Self { size: n, entries }
    }
}

impl TryFrom<Vec<Vec<i64>>> for QuotientMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<QuotientMatrix> for Vec<Vec<i64>> {
    fn from(q: QuotientMatrix) -> Self {
        q.to_rows()
    }
}

impl fmt::Display for QuotientMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.size {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn check_coloring_len<G: AdjacencyMatrix + ?Sized>(g: &G, f: &Coloring) -> Result<()> {
    if f.len() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            found: f.len(),
        });
    }
    Ok(())
}

/// Row `v` of `MF`: arcs from `v` into each color class, with multiplicity.
pub fn color_profile<G: AdjacencyMatrix + ?Sized>(g: &G, f: &Coloring, v: usize) -> Vec<u64> {
    let mut profile = vec![0u64; f.num_colors()];
    for (u, &m) in g.row(v).iter().enumerate() {
        if m != 0 {
            profile[f.color(u)] += u64::from(m);
        }
    }
    profile
}

/// Returns the unique `S` with `MF = FS`, or a witness that none exists.
pub fn quotient_matrix<G: AdjacencyMatrix + ?Sized>(g: &G, f: &Coloring) -> Result<QuotientMatrix> {
    check_coloring_len(g, f)?;
    let c = f.num_colors();
    let mut representative: Vec<Option<(usize, Vec<u64>)>> = vec![None; c];
    for v in 0..g.order() {
        let profile = color_profile(g, f, v);
        let color = f.color(v);
        match &representative[color] {
            None => representative[color] = Some((v, profile)),
            Some((first, first_profile)) => {
                if *first_profile != profile {
                    return Err(Error::NotEquitable(NotEquitable {
                        color,
                        first: *first,
                        second: v,
                        first_profile: first_profile.clone(),
                        second_profile: profile,
                    }));
                }
            }
        }
    }
    let rows = representative
        .into_iter()
        .map(|r| {
            let (_, profile) = r.expect("coloring is surjective");
            profile.into_iter().map(|x| x as i64).collect()
        })
        .collect();
    QuotientMatrix::new(rows)
}

pub fn is_perfect<G: AdjacencyMatrix + ?Sized>(g: &G, f: &Coloring) -> Result<bool> {
    match quotient_matrix(g, f) {
        Ok(_) => Ok(true),
        Err(Error::NotEquitable(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// True iff `MF = F * expected` entrywise.
pub fn verify_quotient<G: AdjacencyMatrix + ?Sized>(
    g: &G,
    f: &Coloring,
    expected: &QuotientMatrix,
) -> Result<bool> {
    check_coloring_len(g, f)?;
    if expected.size() != f.num_colors() {
        return Err(Error::DimensionMismatch {
            expected: f.num_colors(),
            found: expected.size(),
        });
    }
    Ok((0..g.order()).all(|v| {
        let profile = color_profile(g, f, v);
        profile
            .iter()
            .zip(expected.row(f.color(v)))
            .all(|(&p, &s)| s >= 0 && p == s as u64)
    }))
}

/// Like [`verify_quotient`], but reports the quotient actually found on failure.
pub fn expect_quotient<G: AdjacencyMatrix + ?Sized>(
    g: &G,
    f: &Coloring,
    expected: &QuotientMatrix,
) -> Result<()> {
    if verify_quotient(g, f, expected)? {
        return Ok(());
    }
    let found = quotient_matrix(g, f)?;
    Err(Error::QuotientMismatch {
        expected: expected.clone(),
        found,
    })
}

/// Merges color groups; groups are renumbered by their smallest member.
pub fn merge_colors(f: &Coloring, groups: &[Vec<usize>]) -> Result<Coloring> {
    let c = f.num_colors();
    let mut group_of = vec![None; c];
    for (gi, group) in groups.iter().enumerate() {
        if group.is_empty() {
            return Err(invalid_params("empty color group"));
        }
        for &color in group {
            if color >= c {
                return Err(invalid_params(format!("color {color} out of range 0..{c}")));
            }
            if group_of[color].replace(gi).is_some() {
                return Err(invalid_params(format!("color {color} appears in two groups")));
            }
        }
    }
    if let Some(missing) = group_of.iter().position(Option::is_none) {
        return Err(invalid_params(format!("color {missing} is not in any group")));
    }
    let mut order: Vec<usize> = (0..groups.len()).collect();
    order.sort_by_key(|&gi| groups[gi].iter().min().copied());
    let mut rank = vec![0; groups.len()];
    for (new, &gi) in order.iter().enumerate() {
        rank[gi] = new;
    }
    let colors = f
        .colors()
        .iter()
        .map(|&old| rank[group_of[old].expect("checked")])
        .collect();
    Coloring::new(colors)
}

/// `F u`: spreads a vector on colors to a vector on vertices.
///
/// If `S u = theta u` for the quotient `S` of `f`, then `M (F u) = theta (F u)`.
pub fn lift_quotient_eigenvector<T: Clone>(f: &Coloring, u: &[T]) -> Result<Vec<T>> {
    if u.len() != f.num_colors() {
        return Err(Error::DimensionMismatch {
            expected: f.num_colors(),
            found: u.len(),
        });
    }
    Ok(f.colors().iter().map(|&c| u[c].clone()).collect())
}

/// Eigenfunction carried by a perfect 2-coloring of a regular multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColoringEigenfunction {
    pub degree: u64,
    /// Color-0 vertices' neighbours in color 1.
    pub b: u64,
    /// Color-1 vertices' neighbours in color 0.
    pub c: u64,
    pub values: Vec<Rational64>,
    pub eigenvalue: i64,
}

/// For a perfect 2-coloring with quotient `[[r-b, b], [c, r-c]]` returns
/// `h = b/(b+c)` on color 0, `-c/(b+c)` on color 1, with eigenvalue `r-b-c`.
pub fn two_coloring_eigenfunction(g: &Multigraph, f: &Coloring) -> Result<TwoColoringEigenfunction> {
    let r = g.require_regular()?;
    if f.num_colors() != 2 {
        return Err(invalid_params(format!(
            "expected a 2-coloring, got {} colors",
            f.num_colors()
        )));
    }
    let s = quotient_matrix(g, f)?;
    let b = s.get(0, 1);
    let c = s.get(1, 0);
    if b + c == 0 {
        return Err(invalid_params("color classes are not joined; b + c = 0"));
    }
    let denom = b + c;
    let h0 = Rational64::new(b, denom);
    let h1 = Rational64::new(-c, denom);
    let values = lift_quotient_eigenvector(f, &[h0, h1])?;
    let eigenvalue = r as i64 - b - c;
    let image = g.apply(&values)?;
    let theta = Rational64::from_integer(eigenvalue);
    if image.iter().zip(&values).any(|(mh, h)| *mh != theta * h) {
        return Err(Error::Inconsistent(
            "lifted eigenfunction fails M h = (r-b-c) h".into(),
        ));
    }
    Ok(TwoColoringEigenfunction {
        degree: r,
        b: b as u64,
        c: c as u64,
        values,
        eigenvalue,
    })
}
