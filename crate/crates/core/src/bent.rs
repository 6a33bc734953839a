//! Boolean bent functions, their difference sets, and the correspondence with
//! perfect 4-colorings of the Grassmann graph `J_2(n, 2)`.
//!
//! Truth tables are little-endian: bit `j` of index `x` is coordinate `j`, so
//! the index of a vector is its [`vector_index`](crate::subspace::vector_index)
//! encoding over `GF(2)`.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::difference::{verify_pds, PdsParams};
use crate::error::{invalid_input, invalid_params, Error, Result};
use crate::families::{grassmann, AbelianGroup};
use crate::graph::{expect_quotient, quotient_matrix, AdjacencyMatrix, Coloring, Multigraph, QuotientMatrix};
use crate::subspace::enumerate_subspaces;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    tt: Vec<bool>,
}

impl BooleanFunction {
    pub fn new(n: usize, tt: Vec<bool>) -> Result<Self> {
        if n >= usize::BITS as usize || tt.len() != 1 << n {
            return Err(invalid_input(format!(
                "truth table of length {} does not match n = {n}",
                tt.len()
            )));
        }
        Ok(Self { n, tt })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Self {
        Self {
            n,
            tt: (0..1usize << n).map(f).collect(),
        }
    }

    /// Truth table packed into an integer: bit `x` is `b(x)`; needs `2^n <= 64`.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        if n > 6 {
            return Err(invalid_params("packed truth tables hold at most 6 variables"));
        }
        Ok(Self::from_fn(n, |x| (bits >> x) & 1 == 1))
    }

    /// `x1 x2 ⊕ x3 x4 ⊕ ... ⊕ x_{n-1} x_n`; with coordinates 1-based, `x1` is bit 0.
    pub fn inner_product(n: usize) -> Result<Self> {
        if n % 2 == 1 {
            return Err(invalid_params(format!("n = {n} must be even")));
        }
        Ok(Self::from_fn(n, |x| {
            (0..n / 2).filter(|i| (x >> (2 * i)) & (x >> (2 * i + 1)) & 1 == 1).count() % 2 == 1
        }))
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn eval(&self, x: usize) -> bool {
        self.tt[x]
    }

    pub fn truth_table(&self) -> &[bool] {
        &self.tt
    }

    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            tt: self.tt.iter().map(|b| !b).collect(),
        }
    }

    /// `supp(b)` as vector encodings, increasing.
    pub fn support(&self) -> Vec<usize> {
        (0..self.tt.len()).filter(|&x| self.tt[x]).collect()
    }

    pub fn weight(&self) -> usize {
        self.tt.iter().filter(|&&b| b).count()
    }

    /// `(-1)^b` as a vector indexed by truth-table position.
    pub fn signs(&self) -> Vec<i64> {
        self.tt.iter().map(|&b| if b { -1 } else { 1 }).collect()
    }

    /// `x -> Σ_y (-1)^{b(y) ⊕ b(x ⊕ y)}`, the self-convolution of `(-1)^b` over `Z_2^n`.
    pub fn autocorrelation(&self) -> Vec<i64> {
        let s = self.signs();
        (0..s.len())
            .map(|x| (0..s.len()).map(|y| s[y] * s[x ^ y]).sum())
            .collect()
    }

    /// Walsh coefficients `W(u) = Σ_x (-1)^{b(x) ⊕ u·x}` by the fast transform.
    pub fn walsh(&self) -> Vec<i64> {
        let mut w = self.signs();
        let mut h = 1;
        while h < w.len() {
            for start in (0..w.len()).step_by(2 * h) {
                for i in start..start + h {
                    let (a, b) = (w[i], w[i + h]);
                    w[i] = a + b;
                    w[i + h] = a - b;
                }
            }
            h *= 2;
        }
        w
    }
}

impl fmt::Display for BooleanFunction {
    /// The truth table as a 0/1 string, index 0 first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.tt {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for BooleanFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tt = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(invalid_input(format!("truth table character {other:?} is not 0 or 1"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if !tt.len().is_power_of_two() {
            return Err(invalid_input(format!("truth table length {} is not a power of two", tt.len())));
        }
        Self::new(tt.len().trailing_zeros() as usize, tt)
    }
}

/// Autocorrelation is `2^n` at 0 and vanishes elsewhere.
pub fn is_bent_by_autocorrelation(b: &BooleanFunction) -> bool {
    let s = b.signs();
    let len = s.len();
    (1..len).all(|x| (0..len).map(|y| s[y] * s[x ^ y]).sum::<i64>() == 0)
}

/// Every Walsh coefficient is `±2^{n/2}`.
pub fn is_bent_by_walsh(b: &BooleanFunction) -> bool {
    if b.n % 2 == 1 {
        return false;
    }
    let flat = 1i64 << (b.n / 2);
    b.walsh().iter().all(|w| w.abs() == flat)
}

/// Both characterizations are evaluated and must agree.
pub fn is_bent(b: &BooleanFunction) -> bool {
    let walsh = is_bent_by_walsh(b);
    let auto = is_bent_by_autocorrelation(b);
    assert_eq!(walsh, auto, "Walsh and autocorrelation tests disagree on {b}");
    walsh
}

fn require_bent(b: &BooleanFunction) -> Result<()> {
    if is_bent(b) {
        Ok(())
    } else {
        Err(Error::NotBent(format!("truth table {b} has a non-flat Walsh spectrum")))
    }
}

/// A bent function's support as a subset of `Z_2^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BentDifferenceSet {
    /// Vector encodings of `supp(b)`.
    pub support: Vec<usize>,
    /// The same set as [`AbelianGroup::binary`] element indices.
    pub group_elements: Vec<usize>,
    pub params: PdsParams,
}

/// `supp(b)` is a `(2^n, 2^{n-1} ∓ 2^{n/2-1}, 2^{n-2} ∓ 2^{n/2-1})` difference set.
pub fn bent_to_difference_set(b: &BooleanFunction) -> Result<BentDifferenceSet> {
    require_bent(b)?;
    let n = b.n;
    let group = AbelianGroup::binary(n)?;
    let support = b.support();
    let group_elements: Vec<usize> = support.iter().map(|&x| group.binary_vector_index(x)).collect();
    let half = 1usize << (n / 2 - 1);
    let (k, lambda) = if support.len() == (1 << (n - 1)) - half {
        ((1 << (n - 1)) - half, (1 << (n - 2)) - half)
    } else if support.len() == (1 << (n - 1)) + half {
        ((1 << (n - 1)) + half, (1 << (n - 2)) + half)
    } else {
        return Err(Error::Inconsistent(format!("bent support of unexpected size {}", support.len())));
    };
    let params = PdsParams {
        v: 1 << n,
        k,
        lambda,
        mu: lambda,
    };
    if !verify_pds(&group, &group_elements, &params)? {
        return Err(Error::Inconsistent(format!("bent support fails {params:?}")));
    }
    Ok(BentDifferenceSet {
        support,
        group_elements,
        params,
    })
}

/// Counts of `(b(x), b(x ⊕ y))` over all `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairSpectrum {
    pub a00: usize,
    pub a01: usize,
    pub a10: usize,
    pub a11: usize,
}

pub fn pair_spectrum(b: &BooleanFunction, y: usize) -> Result<PairSpectrum> {
    if y == 0 || y >= b.tt.len() {
        return Err(invalid_params(format!("shift {y} must be a nonzero vector of GF(2)^{}", b.n)));
    }
    let mut counts = [[0usize; 2]; 2];
    for x in 0..b.tt.len() {
        counts[usize::from(b.tt[x])][usize::from(b.tt[x ^ y])] += 1;
    }
    Ok(PairSpectrum {
        a00: counts[0][0],
        a01: counts[0][1],
        a10: counts[1][0],
        a11: counts[1][1],
    })
}

fn require_even(n: usize) -> Result<()> {
    if n % 2 == 1 || n < 4 {
        return Err(invalid_params(format!("n = {n} must be even and at least 4")));
    }
    Ok(())
}

/// Quotient of the ones-count coloring of `J_2(n, 2)` induced by a bent
/// function with `b(0) = 1` and `|supp b| = 2^{n-1} + 2^{n/2-1}`.
pub fn theorem_avg_matrix(n: usize) -> Result<QuotientMatrix> {
    require_even(n)?;
    // q = 2^{n-2}, s = 2^{n/2-1}; both even for n >= 4
    let q = 1i64 << (n - 2);
    let s = 1i64 << (n / 2 - 1);
    QuotientMatrix::new(vec![
        vec![3 * ((q - s) / 2 - 1), 3 * q - 3, 3 * (q + s) / 2, 0],
        vec![q - s, (5 * q - s) / 2 - 5, 2 * q + s, (q + s) / 2 - 1],
        vec![(q - s) / 2, 2 * q - s - 1, (5 * q + s) / 2 - 3, q + s - 2],
        vec![0, 3 * (q - s) / 2, 3 * q, 3 * ((q + s) / 2 - 2)],
    ])
}

/// `theorem_avg_matrix(n)` with colors `{0, 2}` and `{1, 3}` merged.
pub fn merged_theorem_matrix(n: usize) -> Result<QuotientMatrix> {
    require_even(n)?;
    let q = 1i64 << (n - 2);
    Ok(QuotientMatrix::from_array([[3 * q - 3, 3 * q - 3], [3 * q, 3 * q - 6]]))
}

fn check_theorem_preconditions(b: &BooleanFunction) -> Result<()> {
    require_even(b.n)?;
    require_bent(b)?;
    if !b.tt[0] {
        return Err(invalid_params("b(0) must be 1"));
    }
    let expected = (1usize << (b.n - 1)) + (1 << (b.n / 2 - 1));
    if b.weight() != expected {
        return Err(invalid_params(format!(
            "support has {} points, expected 2^(n-1) + 2^(n/2-1) = {expected}",
            b.weight()
        )));
    }
    Ok(())
}

/// Colors each 2-subspace of `GF(2)^n` (in [`enumerate_subspaces`] order) by the
/// number of its four vectors where `b` is 1, minus one.
pub fn bent_to_grassmann_coloring(b: &BooleanFunction) -> Result<Coloring> {
    check_theorem_preconditions(b)?;
    let colors = enumerate_subspaces(b.n, 2, 2)?
        .iter()
        .map(|s| s.element_indices().iter().filter(|&&x| b.tt[x]).count() - 1)
        .collect();
    Coloring::new(colors)
}

/// Inverse of [`bent_to_grassmann_coloring`]: `b(0) = 1` and `b = 1` on every
/// vector of a color-3 subspace.
pub fn grassmann_coloring_to_bent(n: usize, f: &Coloring) -> Result<BooleanFunction> {
    let g = grassmann(n, 2, 2)?;
    grassmann_coloring_to_bent_on(n, &g, f)
}

/// As [`grassmann_coloring_to_bent`] with a prebuilt `grassmann(n, 2, 2)`.
pub fn grassmann_coloring_to_bent_on(n: usize, g: &Multigraph, f: &Coloring) -> Result<BooleanFunction> {
    let expected = theorem_avg_matrix(n)?;
    if f.len() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            found: f.len(),
        });
    }
    expect_quotient(g, f, &expected)?;
    let mut tt = vec![false; 1 << n];
    tt[0] = true;
    for (s, &c) in enumerate_subspaces(n, 2, 2)?.iter().zip(f.colors()) {
        if c == 3 {
            for x in s.element_indices() {
                tt[x] = true;
            }
        }
    }
    let b = BooleanFunction { n, tt };
    check_theorem_preconditions(&b).map_err(|e| Error::Inconsistent(format!("reconstructed function: {e}")))?;
    if bent_to_grassmann_coloring(&b)? != *f {
        return Err(Error::Inconsistent("reconstructed function does not reproduce the coloring".into()));
    }
    Ok(b)
}

/// Relabels a 4-coloring so that its quotient is `theorem_avg_matrix(n)`,
/// trying all 24 color permutations. The first matching relabeling is returned.
pub fn infer_theorem_labeling(n: usize, g: &Multigraph, f: &Coloring) -> Result<Coloring> {
    let expected = theorem_avg_matrix(n)?;
    if f.num_colors() != 4 {
        return Err(invalid_params(format!("expected 4 colors, got {}", f.num_colors())));
    }
    let found = quotient_matrix(g, f)?;
    for perm in (0..4).permutations(4) {
        // new color perm[c] for old color c: S'[perm i][perm j] = S[i][j]
        let matches = (0..4).all(|i| (0..4).all(|j| expected.get(perm[i], perm[j]) == found.get(i, j)));
        if matches {
            return f.permute(&perm);
        }
    }
    Err(Error::QuotientMismatch { expected, found })
}

/// All bent functions on `n` variables by exhaustive search, as packed truth tables.
pub fn bent_census(n: usize) -> Result<Vec<u64>> {
    if n > 4 {
        return Err(invalid_params("exhaustive census is limited to n <= 4"));
    }
    use rayon::prelude::*;
    let total = 1u64 << (1u64 << n);
    Ok((0..total)
        .into_par_iter()
        .filter(|&bits| is_bent(&BooleanFunction::from_bits(n, bits).expect("n <= 4")))
        .collect())
}
