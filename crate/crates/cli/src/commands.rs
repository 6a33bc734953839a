//! The `build`, `verify` and `bridge` subcommands.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use pcolor::bent::{
    bent_to_difference_set, bent_to_grassmann_coloring, grassmann_coloring_to_bent, is_bent, BooleanFunction,
};
use pcolor::designs::{
    design_to_coloring, design_violation, hadamard_to_design, subspace_design_violation, HadamardMatrix,
};
use pcolor::difference::{
    difference_set_to_symmetric_design, pds_delta_coloring, pds_params_from_set, srg_gamma_coloring, verify_pds,
    verify_srg, PdsParams,
};
use pcolor::families::{
    cayley, delta_hypergraph, design_hypergraph, grassmann, johnson, johnson_design_multigraph,
    subspace_design_hypergraph, triangle_hypergraph, AbelianGroup,
};
use pcolor::graph::{expect_quotient, merge_colors, quotient_matrix, QuotientMatrix};
use pcolor::hypergraph::{hypergraph_is_perfect, incidence_bipartite, line_multigraph, m12, verify_transversal};
use pcolor::spectral::check_dh_extremal;
use pcolor::{Coloring, Error, Multigraph};
use serde::Serialize;
use serde_json::{json, Value};

use crate::io::{self, Instance};
use crate::CliError;

/// Outcome of a check, printed as JSON.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub kind: String,
    pub verified: bool,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    /// Present on every failed report; `null` when the failure is an input error.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    fn pass(kind: &str, details: Value) -> Self {
        Self {
            kind: kind.into(),
            verified: true,
            details,
            witness: None,
            error: None,
        }
    }

    fn fail(kind: &str, details: Value, witness: Value) -> Self {
        Self {
            kind: kind.into(),
            verified: false,
            details,
            witness: Some(witness),
            error: None,
        }
    }

    pub fn input_error(kind: &str, e: &CliError) -> Self {
        Self {
            kind: kind.into(),
            verified: false,
            details: Value::Null,
            witness: Some(Value::Null),
            error: Some(e.to_string()),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match (self.verified, &self.error) {
            (true, _) => 0,
            (false, None) => 1,
            (false, Some(_)) => 2,
        }
    }
}

/// Structured witness for a negative verdict from the library.
fn witness_of(e: &Error) -> Value {
    let structured = match e {
        Error::NotEquitable(w) => serde_json::to_value(w).ok(),
        Error::NotPerfect(w) => serde_json::to_value(w).ok(),
        Error::NotRegular {
            vertex,
            degree,
            expected,
        } => Some(json!({"vertex": vertex, "degree": degree, "expected": expected})),
        Error::InnerDegreeExceeded { vertex, count, cap } => {
            Some(json!({"vertex": vertex, "inner_degree": count, "cap": cap}))
        }
        Error::QuotientMismatch { expected, found } => {
            Some(json!({"expected": expected.to_rows(), "found": found.to_rows()}))
        }
        _ => None,
    };
    let mut w = structured.unwrap_or_else(|| json!({}));
    w["message"] = Value::String(e.to_string());
    w
}

/// Turns a library negative verdict into a failed report; other errors propagate.
fn verdict(kind: &str, r: pcolor::Result<Value>) -> Result<Report, CliError> {
    match r {
        Ok(details) => Ok(Report::pass(kind, details)),
        Err(e) if e.is_property_failure() => Ok(Report::fail(kind, Value::Null, witness_of(&e))),
        Err(e) => Err(e.into()),
    }
}

fn required<'a, T>(value: &'a Option<T>, flag: &str) -> Result<&'a T, CliError> {
    value
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("missing required option --{flag}")))
}

fn write_instance(instance: &Instance, out: Option<&Path>, sparse: bool) -> Result<(), CliError> {
    let text = match (instance, sparse) {
        (Instance::Multigraph(g), true) => serde_json::to_string(&io::sparse_multigraph(g))?,
        _ => io::to_json(instance),
    };
    match out {
        Some(path) => {
            std::fs::write(path, text + "\n").map_err(|e| CliError::Io(path.display().to_string(), e))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Johnson,
    Grassmann,
    DesignHypergraph,
    SubspaceDesignHypergraph,
    Gamma,
    Delta,
    Cayley,
    M12,
    LineGraph,
}

#[derive(Debug, Clone, Args)]
pub struct BuildArgs {
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Field order for q-analogs.
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Cyclic factor orders of the group, e.g. `4,4`.
    #[arg(long, value_delimiter = ',')]
    pub orders: Vec<usize>,
    /// Connection set as element indices (last coordinate fastest).
    #[arg(long, value_delimiter = ',')]
    pub connection: Vec<usize>,
    /// Input instance: a hypergraph for m12 and line-graph, a diffset for cayley.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Keep the loops of YY* (m12 only).
    #[arg(long)]
    pub keep_loops: bool,
    /// Write multigraphs as sparse triplets.
    #[arg(long)]
    pub sparse: bool,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn build(args: &BuildArgs) -> Result<(), CliError> {
    let n = || required(&args.n, "n").copied();
    let k = || required(&args.k, "k").copied();
    let t = || required(&args.t, "t").copied();
    let instance = match args.family {
        Family::Johnson => Instance::Multigraph(johnson(n()?, k()?)?),
        Family::Grassmann => Instance::Multigraph(grassmann(n()?, k()?, args.q)?),
        Family::DesignHypergraph => Instance::Hypergraph(design_hypergraph(n()?, k()?, t()?)?),
        Family::SubspaceDesignHypergraph => {
            Instance::Hypergraph(subspace_design_hypergraph(n()?, k()?, t()?, args.q)?)
        }
        Family::Gamma => Instance::Hypergraph(triangle_hypergraph(n()?)?),
        Family::Delta => Instance::Hypergraph(delta_hypergraph(n()?)?),
        Family::Cayley => {
            let (group, set) = match &args.input {
                Some(path) => io::load_diffset(path)?,
                None => (AbelianGroup::new(args.orders.clone())?, args.connection.clone()),
            };
            Instance::Multigraph(cayley(&group, &set)?)
        }
        Family::M12 => {
            let h = io::load_hypergraph(required(&args.input, "input")?)?;
            Instance::Multigraph(m12(&incidence_bipartite(&h), args.keep_loops))
        }
        Family::LineGraph => {
            let h = io::load_hypergraph(required(&args.input, "input")?)?;
            Instance::Multigraph(line_multigraph(&h)?)
        }
    };
    write_instance(&instance, args.out.as_deref(), args.sparse)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Coloring,
    HypergraphColoring,
    Design,
    QDesign,
    Transversal,
    Pds,
    Srg,
    Bent,
    Hadamard,
    Dh,
}

impl VerifyKind {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    pub kind: VerifyKind,
    /// Multigraph instance (coloring, srg, dh).
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Hypergraph instance (hypergraph-coloring, transversal).
    #[arg(long)]
    pub hypergraph: Option<PathBuf>,
    /// Coloring instance; for transversal and dh, color 0 is the vertex set.
    #[arg(long)]
    pub coloring: Option<PathBuf>,
    /// Design, q-design, diffset, boolfun or hadamard instance.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Expected quotient as JSON rows, e.g. `[[0,12],[3,9]]`.
    #[arg(long)]
    pub expect_quotient: Option<String>,
    /// Vertex set as a comma-separated list (transversal, dh).
    #[arg(long, value_delimiter = ',')]
    pub set: Vec<usize>,
    /// Transversal multiplicity.
    #[arg(long, default_value_t = 1)]
    pub multiplicity: usize,
    /// Inner-degree cap for the Delsarte-Hoffman check.
    #[arg(long, default_value_t = 0)]
    pub t: u64,
    /// Expected PDS parameters `v,k,lambda,mu`; inferred when omitted.
    #[arg(long, value_delimiter = ',')]
    pub params: Vec<usize>,
}

/// Vertex set from `--set`, or color class 0 of `--coloring`.
fn vertex_set(args: &VerifyArgs) -> Result<Vec<usize>, CliError> {
    match (&args.coloring, args.set.is_empty()) {
        (Some(path), true) => Ok(io::load_coloring(path)?.class(0)),
        (None, false) => Ok(args.set.clone()),
        _ => Err(CliError::Usage("give exactly one of --set or --coloring".into())),
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Report, CliError> {
    let kind = args.kind.name();
    let kind = kind.as_str();
    match args.kind {
        VerifyKind::Coloring => {
            let g = io::load_multigraph(required(&args.graph, "graph")?)?;
            let f = io::load_coloring(required(&args.coloring, "coloring")?)?;
            let expected = args
                .expect_quotient
                .as_deref()
                .map(|s| serde_json::from_str::<Vec<Vec<i64>>>(s).map(QuotientMatrix::new))
                .transpose()?
                .transpose()?;
            verdict(
                kind,
                (|| {
                    if let Some(q) = &expected {
                        expect_quotient(&g, &f, q)?;
                    }
                    Ok(json!({"quotient": quotient_matrix(&g, &f)?.to_rows()}))
                })(),
            )
        }
        VerifyKind::HypergraphColoring => {
            let h = io::load_hypergraph(required(&args.hypergraph, "hypergraph")?)?;
            let f = io::load_coloring(required(&args.coloring, "coloring")?)?;
            verdict(kind, hypergraph_is_perfect(&h, &f).map(|r| json!({"tables": r.tables})))
        }
        VerifyKind::Design => {
            let d = io::load_design(required(&args.input, "input")?)?;
            let details = json!({"n": d.n, "k": d.k, "t": d.t, "lambda": d.lambda, "blocks": d.blocks().len()});
            Ok(match design_violation(&d) {
                None => Report::pass(kind, details),
                Some(v) => Report::fail(kind, details, serde_json::to_value(v)?),
            })
        }
        VerifyKind::QDesign => {
            let d = io::load_qdesign(required(&args.input, "input")?)?;
            let details = json!({"n": d.n, "k": d.k, "t": d.t, "lambda": d.lambda, "q": d.q,
                "subspaces": d.subspaces().len()});
            Ok(match subspace_design_violation(&d)? {
                None => Report::pass(kind, details),
                Some(v) => Report::fail(
                    kind,
                    details,
                    json!({"subspace": v.subspace.basis(), "count": v.count, "expected": v.expected}),
                ),
            })
        }
        VerifyKind::Transversal => {
            let h = io::load_hypergraph(required(&args.hypergraph, "hypergraph")?)?;
            let set = vertex_set(args)?;
            let l = args.multiplicity;
            let details = json!({"set": set, "multiplicity": l});
            if verify_transversal(&h, &set, l)? {
                return Ok(Report::pass(kind, details));
            }
            let (edge, meets) = h
                .edges()
                .iter()
                .enumerate()
                .map(|(i, e)| (i, e.iter().filter(|v| set.contains(v)).count()))
                .find(|&(_, c)| c != l)
                .expect("a hyperedge breaks the transversal");
            Ok(Report::fail(
                kind,
                details,
                json!({"hyperedge": edge, "vertices": h.edges()[edge], "meets": meets}),
            ))
        }
        VerifyKind::Pds => {
            let (group, set) = io::load_diffset(required(&args.input, "input")?)?;
            match args.params.as_slice() {
                [] => verdict(kind, pds_params_from_set(&group, &set).map(|p| json!(p))),
                &[v, k, lambda, mu] => {
                    let params = PdsParams { v, k, lambda, mu };
                    if verify_pds(&group, &set, &params)? {
                        Ok(Report::pass(kind, json!(params)))
                    } else {
                        let found = match pds_params_from_set(&group, &set) {
                            Ok(p) => json!(p),
                            Err(e) => Value::String(e.to_string()),
                        };
                        Ok(Report::fail(kind, json!(params), json!({"found": found})))
                    }
                }
                _ => Err(CliError::Usage("--params takes v,k,lambda,mu".into())),
            }
        }
        VerifyKind::Srg => {
            let g = io::load_multigraph(required(&args.graph, "graph")?)?;
            verdict(kind, verify_srg(&g).map(|p| json!(p)))
        }
        VerifyKind::Bent => {
            let b = io::load_boolfun(required(&args.input, "input")?)?;
            let walsh = b.walsh();
            let details = json!({"n": b.num_vars(), "weight": b.weight()});
            if is_bent(&b) {
                let d = bent_to_difference_set(&b)?;
                return Ok(Report::pass(kind, json!({"n": b.num_vars(), "weight": b.weight(), "difference_set": d.params})));
            }
            let flat = 1i64 << (b.num_vars() / 2);
            let witness = match walsh.iter().position(|w| w.abs() != flat) {
                Some(u) if b.num_vars() % 2 == 0 => json!({"walsh_index": u, "walsh_value": walsh[u], "expected_abs": flat}),
                _ => json!({"message": "odd number of variables"}),
            };
            Ok(Report::fail(kind, details, witness))
        }
        VerifyKind::Hadamard => {
            let h = io::load_hadamard(required(&args.input, "input")?)?;
            let n = h.order();
            let bad = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| (i, j, (0..n).map(|c| i64::from(h.get(i, c)) * i64::from(h.get(j, c))).sum::<i64>()))
                .find(|&(_, _, dot)| dot != 0);
            Ok(match bad {
                None => Report::pass(kind, json!({"order": n})),
                Some((i, j, dot)) => Report::fail(kind, json!({"order": n}), json!({"rows": [i, j], "inner_product": dot})),
            })
        }
        VerifyKind::Dh => {
            let g = io::load_multigraph(required(&args.graph, "graph")?)?;
            let set = vertex_set(args)?;
            match check_dh_extremal(&g, &set, args.t) {
                Ok(r) if r.extremal => Ok(Report::pass(kind, serde_json::to_value(&r)?)),
                Ok(r) => {
                    let witness = json!({"set_size": r.set_size, "bound": r.bound,
                        "attains_bound": r.attains_bound});
                    Ok(Report::fail(kind, serde_json::to_value(&r)?, witness))
                }
                Err(e) if e.is_property_failure() => Ok(Report::fail(kind, Value::Null, witness_of(&e))),
                Err(e) => Err(e.into()),
            }
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct BridgeArgs {
    /// One of hadamard-to-design, design-to-coloring, bent-to-grassmann-coloring,
    /// grassmann-coloring-to-bent, bent-to-difference-set, diffset-to-symmetric-design,
    /// srg-to-gamma-coloring, pds-to-delta-coloring, merge-colors.
    /// The arrow spelling `hadamard→design` is also accepted.
    pub name: String,
    #[arg(long)]
    pub input: PathBuf,
    /// Number of variables (grassmann-coloring-to-bent).
    #[arg(long)]
    pub n: Option<usize>,
    /// Color groups for merge-colors, e.g. `0,2;1,3`.
    #[arg(long)]
    pub groups: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub const BRIDGES: [&str; 9] = [
    "hadamard-to-design",
    "design-to-coloring",
    "bent-to-grassmann-coloring",
    "grassmann-coloring-to-bent",
    "bent-to-difference-set",
    "diffset-to-symmetric-design",
    "srg-to-gamma-coloring",
    "pds-to-delta-coloring",
    "merge-colors",
];

fn parse_groups(s: &str) -> Result<Vec<Vec<usize>>, CliError> {
    s.split(';')
        .map(|g| {
            g.split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Usage(format!("bad --groups {s:?}: {e}")))
        })
        .collect()
}

fn diffset_of(b: &BooleanFunction) -> pcolor::Result<Instance> {
    let d = bent_to_difference_set(b)?;
    Ok(Instance::DiffSet {
        group: AbelianGroup::binary(b.num_vars())?,
        set: d.group_elements,
    })
}

fn delta_coloring_of(group: &AbelianGroup, set: &[usize]) -> Result<Coloring, CliError> {
    let n = group.orders().len();
    if group.orders().iter().any(|&m| m != 2) {
        return Err(CliError::Usage("pds-to-delta-coloring needs a diffset over Z_2^n".into()));
    }
    let vectors: Vec<usize> = set
        .iter()
        .filter(|&&x| x != group.zero())
        .map(|&x| group.binary_vector(x))
        .collect();
    Ok(pds_delta_coloring(n, &vectors)?)
}

/// Runs a bridge and writes its output; property failures come back as a report.
pub fn bridge(args: &BridgeArgs) -> Result<Option<Report>, CliError> {
    let name = args.name.replace('→', "-to-");
    let input = args.input.as_path();
    let produced: pcolor::Result<Instance> = match name.as_str() {
        "hadamard-to-design" => {
            let h: HadamardMatrix = io::load_hadamard(input)?;
            hadamard_to_design(&h).map(Instance::Design)
        }
        "design-to-coloring" => {
            let d = io::load_design(input)?;
            johnson_design_multigraph(d.n, d.k, d.t)
                .and_then(|g| design_to_coloring(&d, &g))
                .map(Instance::Coloring)
        }
        "bent-to-grassmann-coloring" => bent_to_grassmann_coloring(&io::load_boolfun(input)?).map(Instance::Coloring),
        "grassmann-coloring-to-bent" => {
            let f = io::load_coloring(input)?;
            grassmann_coloring_to_bent(*required(&args.n, "n")?, &f).map(Instance::BoolFun)
        }
        "bent-to-difference-set" => diffset_of(&io::load_boolfun(input)?),
        "diffset-to-symmetric-design" => {
            let (group, set) = io::load_diffset(input)?;
            difference_set_to_symmetric_design(&group, &set).map(Instance::Design)
        }
        "srg-to-gamma-coloring" => {
            let g: Multigraph = io::load_multigraph(input)?;
            srg_gamma_coloring(&g).map(Instance::Coloring)
        }
        "pds-to-delta-coloring" => {
            let (group, set) = io::load_diffset(input)?;
            Ok(Instance::Coloring(delta_coloring_of(&group, &set)?))
        }
        "merge-colors" => {
            let f = io::load_coloring(input)?;
            let groups = parse_groups(required(&args.groups, "groups")?)?;
            merge_colors(&f, &groups).map(Instance::Coloring)
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown bridge {other:?}; expected one of {}",
                BRIDGES.join(", ")
            )))
        }
    };
    match produced {
        Ok(instance) => write_instance(&instance, args.out.as_deref(), false).map(|()| None),
        Err(e) if e.is_property_failure() => Ok(Some(Report::fail(&name, Value::Null, witness_of(&e)))),
        Err(e) => Err(e.into()),
    }
}

