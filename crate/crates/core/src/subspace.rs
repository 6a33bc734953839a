//! Linear algebra over prime fields and subspaces in canonical reduced row echelon form.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{invalid_params, Result};

/// Integers modulo a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(invalid_params(format!(
                "field order {p} is not prime; only prime fields are supported"
            )));
        }
        Ok(Self { p })
    }

    pub fn order(&self) -> u32 {
        self.p
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.p)) as u32
    }

    fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    fn inv(&self, a: u32) -> u32 {
        // a^(p-2)
        let (mut base, mut exp, mut acc) = (a % self.p, self.p - 2, 1u32);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Reduces `rows` in place to RREF, dropping zero rows; returns pivot columns.
    pub fn rref(&self, rows: &mut Vec<Vec<u32>>) -> Vec<usize> {
        let width = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..width {
            let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(r, found);
            let inv = self.inv(rows[r][col]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let factor = rows[i][col];
                    for j in 0..width {
                        let sub = self.mul(factor, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], sub);
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    pub fn rank(&self, rows: &[Vec<u32>]) -> usize {
        let mut m = rows.to_vec();
        self.rref(&mut m).len()
    }
}

/// A subspace of `GF(q)^n` stored as its unique RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subspace {
    q: u32,
    n: usize,
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    /// The span of `vectors`, each of length `n` with entries below `q`.
    pub fn span(q: u32, n: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        let field = PrimeField::new(q)?;
        if let Some(v) = vectors.iter().find(|v| v.len() != n || v.iter().any(|&x| x >= q)) {
            return Err(invalid_params(format!("vector {v:?} is not in GF({q})^{n}")));
        }
        let mut basis = vectors.to_vec();
        field.rref(&mut basis);
        Ok(Self { q, n, basis })
    }

    pub fn field_order(&self) -> u32 {
        self.q
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    fn field(&self) -> PrimeField {
        PrimeField { p: self.q }
    }

    /// Dimension of the sum `self + other`.
    pub fn join_dim(&self, other: &Self) -> usize {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        self.field().rank(&rows)
    }

    pub fn intersection_dim(&self, other: &Self) -> usize {
        self.dim() + other.dim() - self.join_dim(other)
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.join_dim(other) == self.dim()
    }

    /// All `q^dim` vectors of the subspace, in base-`q` counting order of coefficients.
    pub fn elements(&self) -> Vec<Vec<u32>> {
        let field = self.field();
        let k = self.dim();
        let total = (self.q as usize).pow(k as u32);
        (0..total)
            .map(|mut code| {
                let mut v = vec![0u32; self.n];
                for row in &self.basis {
                    let c = (code % self.q as usize) as u32;
                    code /= self.q as usize;
                    for (x, &b) in v.iter_mut().zip(row) {
                        *x = (*x + field.mul(c, b)) % self.q;
                    }
                }
                v
            })
            .collect()
    }

    /// Integer encoding `sum v_j q^j` of the subspace's vectors, sorted.
    pub fn element_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .elements()
            .iter()
            .map(|v| vector_index(self.q, v))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Little-endian base-`q` encoding: coordinate `j` has weight `q^j`.
pub fn vector_index(q: u32, v: &[u32]) -> usize {
    v.iter()
        .rev()
        .fold(0usize, |acc, &x| acc * q as usize + x as usize)
}

pub fn index_vector(q: u32, n: usize, mut index: usize) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let x = (index % q as usize) as u32;
            index /= q as usize;
            x
        })
        .collect()
}

/// Gaussian binomial `[m t]_q`; zero when `t > m`.
pub fn gaussian_binomial(m: u32, t: u32, q: u64) -> u64 {
    if t > m {
        return 0;
    }
    let q = u128::from(q);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..t {
        num *= q.pow(m - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    u64::try_from(num / den).expect("Gaussian binomial fits in u64")
}

/// Every `k`-dimensional subspace of `GF(q)^n`, ordered by flattened RREF entries.
pub fn enumerate_subspaces(n: usize, k: usize, q: u32) -> Result<Vec<Subspace>> {
    PrimeField::new(q)?;
    if k > n {
        return Err(invalid_params(format!("subspace dimension {k} exceeds ambient dimension {n}")));
    }
    let mut out = Vec::new();
    for pivots in (0..n).combinations(k) {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(row, &p)| {
                let pivots = &pivots;
                (p + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (row, c))
            })
            .collect();
        let count = (q as usize).pow(free.len() as u32);
        for mut code in 0..count {
            let mut basis = vec![vec![0u32; n]; k];
            for (row, &p) in pivots.iter().enumerate() {
                basis[row][p] = 1;
            }
            for &(row, col) in &free {
                basis[row][col] = (code % q as usize) as u32;
                code /= q as usize;
            }
            out.push(Subspace { q, n, basis });
        }
    }
    out.sort_by(|a, b| a.basis.iter().flatten().cmp(b.basis.iter().flatten()));
    Ok(out)
}
