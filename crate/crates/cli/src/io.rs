//! JSON instance files.
//!
//! Every document carries a `"type"` tag. Loading validates the document and builds the
//! library value; saving writes the canonical form back.

use std::fs;
use std::path::Path;

use pcolor::bent::BooleanFunction;
use pcolor::designs::{BlockDesign, HadamardMatrix, SubspaceDesign};
use pcolor::families::AbelianGroup;
use pcolor::subspace::Subspace;
use pcolor::{AdjacencyMatrix, Coloring, Hypergraph, Multigraph};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Largest order accepted for dense adjacency matrices.
pub const MAX_DENSE_ORDER: usize = 5000;

/// The on-disk schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum InstanceFile {
    Multigraph {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        adj: Option<Vec<Vec<u32>>>,
        /// Sparse triplets `[i, j, multiplicity]`, each unordered pair at most once.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        nnz: Option<Vec<[u64; 3]>>,
    },
    Hypergraph {
        n: usize,
        edges: Vec<Vec<usize>>,
    },
    Coloring {
        colors: Vec<usize>,
    },
    Design {
        n: usize,
        k: usize,
        t: usize,
        lambda: usize,
        blocks: Vec<Vec<usize>>,
    },
    /// Subspaces are given by spanning rows; saved as RREF bases.
    Qdesign {
        n: usize,
        k: usize,
        t: usize,
        lambda: usize,
        q: u32,
        subspaces: Vec<Vec<Vec<u32>>>,
    },
    Boolfun {
        n: usize,
        tt: String,
    },
    Hadamard {
        rows: Vec<String>,
    },
    /// A subset of `Z_{m1} x ... x Z_{mr}` given as coordinate tuples.
    Diffset {
        orders: Vec<usize>,
        elements: Vec<Vec<usize>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Multigraph(Multigraph),
    Hypergraph(Hypergraph),
    Coloring(Coloring),
    Design(BlockDesign),
    QDesign(SubspaceDesign),
    BoolFun(BooleanFunction),
    Hadamard(HadamardMatrix),
    DiffSet { group: AbelianGroup, set: Vec<usize> },
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Multigraph(_) => "multigraph",
            Instance::Hypergraph(_) => "hypergraph",
            Instance::Coloring(_) => "coloring",
            Instance::Design(_) => "design",
            Instance::QDesign(_) => "qdesign",
            Instance::BoolFun(_) => "boolfun",
            Instance::Hadamard(_) => "hadamard",
            Instance::DiffSet { .. } => "diffset",
        }
    }
}

fn schema(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}

fn multigraph_from_file(n: usize, adj: Option<Vec<Vec<u32>>>, nnz: Option<Vec<[u64; 3]>>) -> Result<Multigraph, CliError> {
    match (adj, nnz) {
        (Some(rows), None) => {
            if n > MAX_DENSE_ORDER {
                return Err(schema(format!("dense adjacency limited to {MAX_DENSE_ORDER} vertices, got {n}")));
            }
            if rows.len() != n {
                return Err(schema(format!("\"n\" is {n} but \"adj\" has {} rows", rows.len())));
            }
            Ok(Multigraph::new(rows)?)
        }
        (None, Some(triplets)) => {
            let mut flat = vec![0u32; n * n];
            let mut seen = vec![false; n * n];
            for [i, j, m] in triplets {
                let (i, j) = (i as usize, j as usize);
                if i >= n || j >= n {
                    return Err(schema(format!("triplet ({i}, {j}) out of range for {n} vertices")));
                }
                let m = u32::try_from(m).map_err(|_| schema(format!("multiplicity {m} too large")))?;
                let (a, b) = (i.min(j), i.max(j));
                if std::mem::replace(&mut seen[a * n + b], true) {
                    return Err(schema(format!("pair ({a}, {b}) listed twice")));
                }
                flat[a * n + b] = m;
                flat[b * n + a] = m;
            }
            Ok(Multigraph::from_flat(n, flat)?)
        }
        _ => Err(schema("multigraph needs exactly one of \"adj\" or \"nnz\"")),
    }
}

fn sign_row(row: &str) -> Result<Vec<i8>, CliError> {
    row.chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            other => Err(schema(format!("Hadamard entry {other:?} is not '+' or '-'"))),
        })
        .collect()
}

impl TryFrom<InstanceFile> for Instance {
    type Error = CliError;

    fn try_from(file: InstanceFile) -> Result<Self, CliError> {
        Ok(match file {
            InstanceFile::Multigraph { n, adj, nnz } => Instance::Multigraph(multigraph_from_file(n, adj, nnz)?),
            InstanceFile::Hypergraph { n, edges } => Instance::Hypergraph(Hypergraph::new(n, edges)?),
            InstanceFile::Coloring { colors } => Instance::Coloring(Coloring::new(colors)?),
            InstanceFile::Design {
                n,
                k,
                t,
                lambda,
                blocks,
            } => Instance::Design(BlockDesign::new(n, k, t, lambda, blocks)?),
            InstanceFile::Qdesign {
                n,
                k,
                t,
                lambda,
                q,
                subspaces,
            } => {
                let subspaces = subspaces
                    .iter()
                    .map(|rows| Subspace::span(q, n, rows))
                    .collect::<pcolor::Result<Vec<_>>>()?;
                Instance::QDesign(SubspaceDesign::new(n, k, t, lambda, q, subspaces)?)
            }
            InstanceFile::Boolfun { n, tt } => {
                let b: BooleanFunction = tt.parse()?;
                if b.num_vars() != n {
                    return Err(schema(format!("\"n\" is {n} but the truth table has {} variables", b.num_vars())));
                }
                Instance::BoolFun(b)
            }
            InstanceFile::Hadamard { rows } => {
                let rows = rows.iter().map(|r| sign_row(r)).collect::<Result<Vec<_>, _>>()?;
                Instance::Hadamard(HadamardMatrix::new(rows)?)
            }
            InstanceFile::Diffset { orders, elements } => {
                let group = AbelianGroup::new(orders)?;
                let mut set = elements
                    .iter()
                    .map(|e| group.index(e))
                    .collect::<pcolor::Result<Vec<_>>>()?;
                set.sort_unstable();
                if set.windows(2).any(|w| w[0] == w[1]) {
                    return Err(schema("difference set lists an element twice"));
                }
                Instance::DiffSet { group, set }
            }
        })
    }
}

impl From<&Instance> for InstanceFile {
    fn from(instance: &Instance) -> Self {
        match instance {
            Instance::Multigraph(g) => InstanceFile::Multigraph {
                n: g.order(),
                adj: Some(g.to_rows()),
                nnz: None,
            },
            Instance::Hypergraph(h) => InstanceFile::Hypergraph {
                n: h.order(),
                edges: h.edges().to_vec(),
            },
            Instance::Coloring(f) => InstanceFile::Coloring {
                colors: f.colors().to_vec(),
            },
            Instance::Design(d) => InstanceFile::Design {
                n: d.n,
                k: d.k,
                t: d.t,
                lambda: d.lambda,
                blocks: d.blocks().to_vec(),
            },
            Instance::QDesign(d) => InstanceFile::Qdesign {
                n: d.n,
                k: d.k,
                t: d.t,
                lambda: d.lambda,
                q: d.q,
                subspaces: d.subspaces().iter().map(|s| s.basis().to_vec()).collect(),
            },
            Instance::BoolFun(b) => InstanceFile::Boolfun {
                n: b.num_vars(),
                tt: b.to_string(),
            },
            Instance::Hadamard(h) => InstanceFile::Hadamard {
                rows: h
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(|&x| if x > 0 { '+' } else { '-' }).collect())
                    .collect(),
            },
            Instance::DiffSet { group, set } => InstanceFile::Diffset {
                orders: group.orders().to_vec(),
                elements: set.iter().map(|&x| group.element(x)).collect(),
            },
        }
    }
}

/// Sparse form of a multigraph, listing each unordered pair once with `i <= j`.
pub fn sparse_multigraph(g: &Multigraph) -> InstanceFile {
    let n = g.order();
    let nnz = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| g.entry(i, j) > 0)
        .map(|(i, j)| [i as u64, j as u64, u64::from(g.entry(i, j))])
        .collect();
    InstanceFile::Multigraph {
        n,
        adj: None,
        nnz: Some(nnz),
    }
}

pub fn parse(text: &str) -> Result<Instance, CliError> {
    let file: InstanceFile = serde_json::from_str(text)?;
    file.try_into()
}

pub fn to_json(instance: &Instance) -> String {
    let file = InstanceFile::from(instance);
    serde_json::to_string(&file).expect("instance files serialize")
}

pub fn load(path: &Path) -> Result<Instance, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    parse(&text)
}

pub fn save(instance: &Instance, path: &Path) -> Result<(), CliError> {
    fs::write(path, to_json(instance) + "\n").map_err(|e| CliError::Io(path.display().to_string(), e))
}

macro_rules! expect_kind {
    ($name:ident, $variant:ident, $ty:ty) => {
        pub fn $name(path: &Path) -> Result<$ty, CliError> {
            match load(path)? {
                Instance::$variant(x) => Ok(x),
                other => Err(schema(format!(
                    "{} holds a {}, expected {}",
                    path.display(),
                    other.kind(),
                    stringify!($variant).to_lowercase()
                ))),
            }
        }
    };
}

expect_kind!(load_multigraph, Multigraph, Multigraph);
expect_kind!(load_hypergraph, Hypergraph, Hypergraph);
expect_kind!(load_coloring, Coloring, Coloring);
expect_kind!(load_design, Design, BlockDesign);
expect_kind!(load_qdesign, QDesign, SubspaceDesign);
expect_kind!(load_boolfun, BoolFun, BooleanFunction);
expect_kind!(load_hadamard, Hadamard, HadamardMatrix);

pub fn load_diffset(path: &Path) -> Result<(AbelianGroup, Vec<usize>), CliError> {
    match load(path)? {
        Instance::DiffSet { group, set } => Ok((group, set)),
        other => Err(schema(format!("{} holds a {}, expected diffset", path.display(), other.kind()))),
    }
}
