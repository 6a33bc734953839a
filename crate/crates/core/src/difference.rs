//! Convolution on finite abelian groups, (partial) difference sets and strongly
//! regular graphs.
//!
//! The partial-difference-set identity is checked in the form
//! `χ_D * χ_{-D} = λ χ_D + μ (1 - χ_D) + c δ` with `δ` the 0/1 indicator of
//! the identity and `c = k - μ` (or `k - λ` when `0 ∈ D`), which is what makes
//! both sides agree at the identity element.

use serde::Serialize;

use crate::designs::{verify_design, BlockDesign};
use crate::error::{invalid_input, invalid_params, Error, Result};
use crate::families::{cayley, element_set, pair_index, triangle_hypergraph, AbelianGroup};
use crate::graph::{AdjacencyMatrix, Coloring, Multigraph};
use crate::hypergraph::Hypergraph;

/// Integer-valued function on a group, indexed by element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFunction {
    group: AbelianGroup,
    values: Vec<i64>,
}

impl GroupFunction {
    pub fn new(group: AbelianGroup, values: Vec<i64>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::DimensionMismatch {
                expected: group.order(),
                found: values.len(),
            });
        }
        Ok(Self { group, values })
    }

    pub fn indicator(group: &AbelianGroup, set: &[usize]) -> Result<Self> {
        let member = element_set(group, set)?;
        Ok(Self {
            group: group.clone(),
            values: member.into_iter().map(i64::from).collect(),
        })
    }

    /// The all-ones function `𝟙`.
    pub fn ones(group: &AbelianGroup) -> Self {
        Self {
            group: group.clone(),
            values: vec![1; group.order()],
        }
    }

    /// 0/1 indicator of the identity.
    pub fn unit(group: &AbelianGroup) -> Self {
        let mut values = vec![0; group.order()];
        values[group.zero()] = 1;
        Self {
            group: group.clone(),
            values,
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, x: usize) -> i64 {
        self.values[x]
    }

    /// `x -> f(-x)`.
    pub fn reflect(&self) -> Self {
        Self {
            group: self.group.clone(),
            values: (0..self.values.len()).map(|x| self.values[self.group.neg(x)]).collect(),
        }
    }

    fn combine(&self, other: &Self, op: impl Fn(i64, i64) -> i64) -> Result<Self> {
        if self.group != other.group {
            return Err(invalid_params("functions live on different groups"));
        }
        Ok(Self {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| op(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self {
            group: self.group.clone(),
            values: self.values.iter().map(|&a| c * a).collect(),
        }
    }
}

/// `(f * g)(y) = Σ_x f(x) g(y - x)`.
pub fn convolve(f: &GroupFunction, g: &GroupFunction) -> Result<GroupFunction> {
    if f.group != g.group {
        return Err(invalid_params("functions live on different groups"));
    }
    let k = &f.group;
    let v = k.order();
    let table = k.addition_table();
    let mut out = vec![0i64; v];
    for (x, &fx) in f.values.iter().enumerate() {
        if fx == 0 {
            continue;
        }
        for (z, &gz) in g.values.iter().enumerate() {
            // y = x + z, so g(y - x) = g(z)
            out[table[x * v + z]] += fx * gz;
        }
    }
    Ok(GroupFunction {
        group: k.clone(),
        values: out,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PdsParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// `counts[a] = #{(d1, d2) ∈ D x D : d1 - d2 = a}`.
fn difference_counts(group: &AbelianGroup, set: &[usize]) -> Vec<usize> {
    let mut counts = vec![0; group.order()];
    for &d1 in set {
        for &d2 in set {
            counts[group.sub(d1, d2)] += 1;
        }
    }
    counts
}

/// First nonzero element whose difference count disagrees with the required value.
fn pair_count_violation(group: &AbelianGroup, set: &[usize], params: &PdsParams) -> Result<Option<String>> {
    let member = element_set(group, set)?;
    if params.v != group.order() {
        return Ok(Some(format!("v = {} but the group has order {}", params.v, group.order())));
    }
    if params.k != set.len() {
        return Ok(Some(format!("k = {} but the set has {} elements", params.k, set.len())));
    }
    let counts = difference_counts(group, set);
    for (a, &count) in counts.iter().enumerate().skip(1) {
        let expected = if member[a] { params.lambda } else { params.mu };
        if count != expected {
            let role = if member[a] { "λ" } else { "μ" };
            return Ok(Some(format!(
                "element {a} is a difference in {count} ways, expected {role} = {expected}"
            )));
        }
    }
    Ok(None)
}

/// Checks `χ_D * χ_{-D} = λ χ_D + μ (𝟙 - χ_D) + c δ` pointwise.
pub fn pds_convolution_identity(group: &AbelianGroup, set: &[usize], params: &PdsParams) -> Result<bool> {
    let chi = GroupFunction::indicator(group, set)?;
    let lhs = convolve(&chi, &chi.reflect())?;
    let (k, lambda, mu) = (params.k as i64, params.lambda as i64, params.mu as i64);
    let c = if chi.get(group.zero()) == 1 { k - lambda } else { k - mu };
    let ones = GroupFunction::ones(group);
    let rhs = chi
        .scale(lambda)
        .add(&ones.sub(&chi)?.scale(mu))?
        .add(&GroupFunction::unit(group).scale(c))?;
    Ok(params.v == group.order() && params.k == set.len() && lhs == rhs)
}

/// Pair-count definition and convolution identity; the two must agree.
pub fn verify_pds(group: &AbelianGroup, set: &[usize], params: &PdsParams) -> Result<bool> {
    let by_pairs = pair_count_violation(group, set, params)?.is_none();
    let by_convolution = pds_convolution_identity(group, set, params)?;
    if by_pairs != by_convolution {
        return Err(Error::Inconsistent(format!(
            "pair counts say {by_pairs}, convolution identity says {by_convolution}"
        )));
    }
    Ok(by_pairs)
}

/// Infers `(v, k, λ, μ)`; a class with no elements reports its parameter as 0.
pub fn pds_params_from_set(group: &AbelianGroup, set: &[usize]) -> Result<PdsParams> {
    let member = element_set(group, set)?;
    let counts = difference_counts(group, set);
    let mut lambda: Option<(usize, usize)> = None;
    let mut mu: Option<(usize, usize)> = None;
    for (a, &count) in counts.iter().enumerate().skip(1) {
        let (slot, role) = if member[a] { (&mut lambda, "λ") } else { (&mut mu, "μ") };
        match *slot {
            None => *slot = Some((a, count)),
            Some((b, first)) if first != count => {
                return Err(Error::NotPds(format!(
                    "{role} is not constant: {b} arises in {first} ways, {a} in {count}"
                )));
            }
            Some(_) => {}
        }
    }
    let params = PdsParams {
        v: group.order(),
        k: set.len(),
        lambda: lambda.map_or(0, |(_, c)| c),
        mu: mu.map_or(0, |(_, c)| c),
    };
    if !verify_pds(group, set, &params)? {
        return Err(Error::Inconsistent("inferred parameters fail verification".into()));
    }
    Ok(params)
}

/// Standard convention: simple, regular, connected, neither complete nor edgeless.
pub fn verify_srg(g: &Multigraph) -> Result<SrgParams> {
    if !g.is_simple() {
        return Err(invalid_input("strong regularity is checked on simple graphs only"));
    }
    let v = g.order();
    let k = g.require_regular().map_err(|e| Error::NotSrg(e.to_string()))? as usize;
    if k == 0 {
        return Err(Error::NotSrg("edgeless graph".into()));
    }
    if k + 1 == v {
        return Err(Error::NotSrg("complete graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotSrg("graph is disconnected".into()));
    }
    let mut lambda: Option<(usize, usize, usize)> = None;
    let mut mu: Option<(usize, usize, usize)> = None;
    for x in 0..v {
        let rx = g.row(x);
        for y in x + 1..v {
            let ry = g.row(y);
            let common = rx.iter().zip(ry).filter(|(&a, &b)| a == 1 && b == 1).count();
            let (slot, role) = if rx[y] == 1 { (&mut lambda, "adjacent") } else { (&mut mu, "non-adjacent") };
            match *slot {
                None => *slot = Some((x, y, common)),
                Some((a, b, first)) if first != common => {
                    return Err(Error::NotSrg(format!(
                        "{role} pairs {{{a},{b}}} and {{{x},{y}}} have {first} and {common} common neighbours"
                    )));
                }
                Some(_) => {}
            }
        }
    }
    Ok(SrgParams {
        v,
        k,
        lambda: lambda.map_or(0, |(_, _, c)| c),
        mu: mu.map_or(0, |(_, _, c)| c),
    })
}

/// Coloring of `Γ_n`'s vertices (pairs of `0..n`): color 0 on the edges of `g`,
/// color 1 on the non-edges. Complete and edgeless graphs give one color.
pub fn srg_gamma_coloring(g: &Multigraph) -> Result<Coloring> {
    if !g.is_simple() {
        return Err(invalid_input("expected a simple graph"));
    }
    let n = g.order();
    let mut labels = vec![0usize; n * n.saturating_sub(1) / 2];
    for a in 0..n {
        for b in a + 1..n {
            labels[pair_index(n, a, b)] = usize::from(g.entry(a, b) == 0);
        }
    }
    Ok(Coloring::from_labels(&labels))
}

/// `Γ_n` together with the coloring of [`srg_gamma_coloring`].
pub fn gamma_instance(g: &Multigraph) -> Result<(Hypergraph, Coloring)> {
    Ok((triangle_hypergraph(g.order())?, srg_gamma_coloring(g)?))
}

/// Indicator coloring of `Δ_n` for a set of nonzero vectors of `GF(2)^n`
/// (integer encodings); color 0 on the set.
pub fn pds_delta_coloring(n: usize, vectors: &[usize]) -> Result<Coloring> {
    let size = (1usize << n) - 1;
    let mut members = Vec::with_capacity(vectors.len());
    for &x in vectors {
        if x == 0 || x > size {
            return Err(invalid_input(format!("{x} is not a nonzero vector of GF(2)^{n}")));
        }
        members.push(x - 1);
    }
    let mut sorted = members.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(invalid_input("vector listed twice"));
    }
    Coloring::from_indicator(size, &members)
}

/// Rows of `Q_D(x, y) = χ_D(x - y)` as blocks: block `x` is `x - D`.
pub fn difference_set_to_symmetric_design(group: &AbelianGroup, set: &[usize]) -> Result<BlockDesign> {
    let params = pds_params_from_set(group, set)?;
    if params.lambda != params.mu {
        return Err(Error::NotPds(format!(
            "λ = {} differs from μ = {}; not a difference set",
            params.lambda, params.mu
        )));
    }
    let v = group.order();
    let blocks = (0..v)
        .map(|x| set.iter().map(|&d| group.sub(x, d)).collect())
        .collect();
    let design = BlockDesign::new(v, set.len(), 2, params.lambda, blocks)?;
    if !verify_design(&design) {
        return Err(Error::Inconsistent("difference set rows do not form a 2-design".into()));
    }
    Ok(design)
}

/// `Cay(K, D)` is strongly regular with parameters `(v,k,λ,μ)` exactly when
/// `D` is a `(v,k,λ,μ)` partial difference set. Both sides are computed.
///
/// When `D` is a partial difference set but the Cayley graph is complete or
/// disconnected, the graph side fails by convention and the result is
/// [`Error::NotSrg`].
pub fn cayley_srg_bridge(group: &AbelianGroup, set: &[usize]) -> Result<SrgParams> {
    let g = cayley(group, set)?;
    let srg = verify_srg(&g);
    let pds = pds_params_from_set(group, set);
    match (srg, pds) {
        (Ok(s), Ok(p)) => {
            if (s.v, s.k, s.lambda, s.mu) != (p.v, p.k, p.lambda, p.mu) {
                return Err(Error::Inconsistent(format!("SRG {s:?} disagrees with PDS {p:?}")));
            }
            Ok(s)
        }
        (Err(Error::NotSrg(why)), Err(Error::NotPds(pds_why))) => {
            Err(Error::NotSrg(format!("{why}; also not a partial difference set: {pds_why}")))
        }
        (Err(Error::NotSrg(why)), Ok(p)) => {
            let degenerate = p.k == 0 || p.k + 1 == p.v || !g.is_connected();
            if degenerate {
                Err(Error::NotSrg(format!("{why} (degenerate partial difference set {p:?})")))
            } else {
                Err(Error::Inconsistent(format!("PDS {p:?} but Cayley graph is not strongly regular: {why}")))
            }
        }
        (Ok(s), Err(Error::NotPds(why))) => Err(Error::Inconsistent(format!(
            "Cayley graph is SRG {s:?} but the set is not a partial difference set: {why}"
        ))),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}
