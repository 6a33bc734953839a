//! Eigenvalues of multigraphs and the generalized Delsarte-Hoffman bound.
//!
//! For an `r`-regular multigraph with least eigenvalue `theta`, a vertex set
//! in which every member has at most `t < r` neighbours inside the set has
//! size at most `(t - theta) n / (r - theta)`. Sets attaining the bound have a
//! perfect indicator coloring with quotient `[[t, r-t], [t-theta, r-t+theta]]`.

use nalgebra::DMatrix;
use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{invalid_params, Error, Result};
use crate::graph::{verify_quotient, AdjacencyMatrix, Coloring, Multigraph, QuotientMatrix};

/// Eigenvalues closer than this to an integer are reported as that integer.
pub const INTEGER_SNAP: f64 = 1e-6;

/// Tolerance for comparing a set size with a non-integral bound.
pub const BOUND_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eigenvalue {
    pub value: f64,
    /// Set when `value` is within [`INTEGER_SNAP`] of an integer.
    pub integer: Option<i64>,
}

impl Eigenvalue {
    fn new(value: f64) -> Self {
        let rounded = value.round();
        let integer = ((value - rounded).abs() <= INTEGER_SNAP).then_some(rounded as i64);
        Self { value, integer }
    }

    /// The snapped integer when available, else the raw value.
    pub fn best(&self) -> f64 {
        self.integer.map_or(self.value, |i| i as f64)
    }
}

/// Ascending eigenvalues, listed with multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    eigenvalues: Vec<Eigenvalue>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[Eigenvalue] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn min(&self) -> Option<Eigenvalue> {
        self.eigenvalues.first().copied()
    }

    pub fn max(&self) -> Option<Eigenvalue> {
        self.eigenvalues.last().copied()
    }

    /// Distinct eigenvalues with multiplicities, merging values that snap to
    /// the same integer or lie within [`INTEGER_SNAP`] of each other.
    pub fn distinct(&self) -> Vec<(Eigenvalue, usize)> {
        let mut out: Vec<(Eigenvalue, usize)> = Vec::new();
        for &e in &self.eigenvalues {
            match out.last_mut() {
                Some((prev, count))
                    if (prev.integer.is_some() && prev.integer == e.integer)
                        || (prev.integer.is_none()
                            && e.integer.is_none()
                            && (prev.value - e.value).abs() <= INTEGER_SNAP) =>
                {
                    *count += 1
                }
                _ => out.push((e, 1)),
            }
        }
        out
    }

    /// Snapped integer spectrum, if every eigenvalue snapped.
    pub fn integers(&self) -> Option<Vec<i64>> {
        self.eigenvalues.iter().map(|e| e.integer).collect()
    }
}

pub(crate) fn to_dmatrix(g: &Multigraph) -> DMatrix<f64> {
    let n = g.order();
    DMatrix::from_fn(n, n, |i, j| f64::from(g.entry(i, j)))
}

pub fn spectrum(g: &Multigraph) -> Spectrum {
    if g.order() == 0 {
        return Spectrum {
            eigenvalues: Vec::new(),
        };
    }
    let mut values: Vec<f64> = to_dmatrix(g).symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(|a, b| a.total_cmp(b));
    Spectrum {
        eigenvalues: values.into_iter().map(Eigenvalue::new).collect(),
    }
}

pub fn min_eigenvalue(g: &Multigraph) -> Result<Eigenvalue> {
    spectrum(g)
        .min()
        .ok_or_else(|| invalid_params("the empty multigraph has no eigenvalues"))
}

/// The bound `(t - theta) n / (r - theta)`, exact when `theta` snapped.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DhBound {
    pub degree: u64,
    pub theta: Eigenvalue,
    pub t: u64,
    pub value: f64,
    #[serde(serialize_with = "serialize_ratio")]
    pub exact: Option<Rational64>,
}

fn serialize_ratio<S: serde::Serializer>(r: &Option<Rational64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&format!("{}/{}", r.numer(), r.denom())),
        None => s.serialize_none(),
    }
}

pub fn dh_bound_detail(g: &Multigraph, t: u64) -> Result<DhBound> {
    let r = g.require_regular()?;
    if t >= r {
        return Err(invalid_params(format!("inner-degree cap t = {t} must be below the degree {r}")));
    }
    let theta = min_eigenvalue(g)?;
    let n = g.order() as i64;
    match theta.integer {
        Some(th) => {
            if r as i64 == th {
                return Err(invalid_params("least eigenvalue equals the degree; bound undefined"));
            }
            let exact = Rational64::new((t as i64 - th) * n, r as i64 - th);
            Ok(DhBound {
                degree: r,
                theta,
                t,
                value: exact.to_f64().expect("finite"),
                exact: Some(exact),
            })
        }
        None => {
            let th = theta.value;
            Ok(DhBound {
                degree: r,
                theta,
                t,
                value: (t as f64 - th) * n as f64 / (r as f64 - th),
                exact: None,
            })
        }
    }
}

pub fn dh_bound(g: &Multigraph, t: u64) -> Result<f64> {
    dh_bound_detail(g, t).map(|b| b.value)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DhReport {
    pub r: u64,
    pub theta_min: f64,
    pub theta_integer: Option<i64>,
    pub t: u64,
    pub bound: f64,
    pub set_size: usize,
    /// `|A|` equals the bound.
    pub attains_bound: bool,
    /// Bound attained and the indicator coloring verified the extremal quotient.
    pub extremal: bool,
    pub quotient_if_extremal: Option<QuotientMatrix>,
}

/// `[[t, r-t], [t-theta, r-t+theta]]` for integral `theta`.
pub fn extremal_quotient(r: u64, t: u64, theta: i64) -> QuotientMatrix {
    let (r, t) = (r as i64, t as i64);
    QuotientMatrix::from_array([[t, r - t], [t - theta, r - t + theta]])
}

/// Inner degree of every member of `set`, loops at members included.
pub(crate) fn inner_degrees(g: &Multigraph, set: &[usize]) -> Vec<u64> {
    set.iter()
        .map(|&v| set.iter().map(|&u| u64::from(g.entry(v, u))).sum())
        .collect()
}

/// Checks the bound for `set` and, when attained, that its indicator is perfect.
///
/// Every member must have at most `t` neighbours in `set`; loops at members count.
/// With the indicator coloring, color 0 is `set`.
pub fn check_dh_extremal(g: &Multigraph, set: &[usize], t: u64) -> Result<DhReport> {
    let n = g.order();
    let mut members = set.to_vec();
    members.sort_unstable();
    members.dedup();
    if members.len() != set.len() {
        return Err(invalid_params("vertex set contains duplicates"));
    }
    if let Some(&v) = members.iter().find(|&&v| v >= n) {
        return Err(invalid_params(format!("vertex {v} out of range for {n} vertices")));
    }
    let bound = dh_bound_detail(g, t)?;
    for (&v, count) in members.iter().zip(inner_degrees(g, &members)) {
        if count > t {
            return Err(Error::InnerDegreeExceeded { vertex: v, count, cap: t });
        }
    }
    let size = members.len();
    let attains_bound = match bound.exact {
        Some(exact) => exact == Rational64::from_integer(size as i64),
        None => (size as f64 - bound.value).abs() <= BOUND_TOLERANCE,
    };
    let mut report = DhReport {
        r: bound.degree,
        theta_min: bound.theta.value,
        theta_integer: bound.theta.integer,
        t,
        bound: bound.value,
        set_size: size,
        attains_bound,
        extremal: false,
        quotient_if_extremal: None,
    };
    if attains_bound && size > 0 && size < n {
        if let Some(theta) = bound.theta.integer {
            let coloring = Coloring::from_indicator(n, &members)?;
            let q = extremal_quotient(bound.degree, t, theta);
            if verify_quotient(g, &coloring, &q)? {
                report.extremal = true;
                report.quotient_if_extremal = Some(q);
            }
        }
    }
    Ok(report)
}

/// `1 - r/theta` with `theta` the least eigenvalue.
///
/// The bound on clique size is only a theorem for arc-transitive graphs; the
/// value is computed for any regular input and the caller decides how to read it.
pub fn delsarte_clique_bound(g: &Multigraph) -> Result<f64> {
    let r = g.require_regular()?;
    let theta = min_eigenvalue(g)?;
    let th = theta.best();
    if th >= 0.0 {
        return Err(invalid_params("least eigenvalue is nonnegative; clique bound undefined"));
    }
    Ok(1.0 - r as f64 / th)
}
