//! JSON file formats for graphs, hypergraphs and set functions, plus the
//! small string syntaxes used by command options.

use std::path::Path;

use num_rational::Rational64;
use partition_forge::{Host, Hyperedge, Hypergraph, MultiGraph, Properties, SetFunction, VertexSet};
use serde::{Deserialize, Serialize};

/// Failure to read or interpret an input. Library errors raised while
/// building are kept so size limits still map to their own exit status.
#[derive(Debug)]
pub enum ParseError {
    Text(String),
    Lib(partition_forge::Error),
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Text(s) => f.write_str(s),
            ParseError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<partition_forge::Error> for ParseError {
    fn from(e: partition_forge::Error) -> Self {
        ParseError::Lib(e)
    }
}

pub type Parsed<T> = Result<T, ParseError>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperedgeFile {
    pub vertices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub head: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GraphFile {
    Graph { n: usize, edges: Vec<(usize, usize)> },
    Hypergraph { n: usize, hyperedges: Vec<HyperedgeFile> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SetFnKind {
    Constant {
        value: i64,
    },
    VertexBulk {
        vertex: i64,
        bulk: i64,
    },
    PerVertex {
        values: Vec<i64>,
        bulk: i64,
    },
    /// Keys are comma-joined ascending vertex ids; `""` is the empty set.
    Table {
        n: usize,
        default: Option<i64>,
        values: Vec<(String, i64)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetFnFile {
    #[serde(flatten)]
    pub kind: SetFnKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assume: Vec<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub validate: bool,
}

/// A parsed host: plain graphs stay graphs so graph-only commands apply.
#[derive(Clone, Debug)]
pub enum Input {
    Graph(MultiGraph),
    Hyper(Hypergraph),
}

impl Input {
    pub fn host(&self) -> &dyn partition_forge::Host {
        match self {
            Input::Graph(g) => g,
            Input::Hyper(h) => h,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.host().vertex_count()
    }

    pub fn as_hypergraph(&self) -> Hypergraph {
        match self {
            Input::Graph(g) => Hypergraph::from_graph(g),
            Input::Hyper(h) => h.clone(),
        }
    }

    pub fn as_graph(&self) -> Parsed<MultiGraph> {
        match self {
            Input::Graph(g) => Ok(g.clone()),
            Input::Hyper(h) => h
                .to_multigraph()
                .ok_or_else(|| ParseError::Text("this command needs a graph, not a hypergraph with large edges".into())),
        }
    }
}

fn read<T: for<'de> Deserialize<'de>>(path: &Path) -> Parsed<T> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::Text(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| ParseError::Text(format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Parsed<GraphFile> {
    read(path)
}

pub fn read_setfn(path: &Path) -> Parsed<SetFnFile> {
    read(path)
}

impl GraphFile {
    pub fn build(&self) -> Parsed<Input> {
        Ok(match self {
            GraphFile::Graph { n, edges } => Input::Graph(MultiGraph::new(*n, edges.clone())?),
            GraphFile::Hypergraph { n, hyperedges } => {
                let zs = hyperedges
                    .iter()
                    .map(|z| {
                        if z.vertices.iter().any(|&v| v >= *n) {
                            return Err(ParseError::Text(format!("hyperedge {:?} has a vertex outside 0..{n}", z.vertices)));
                        }
                        Ok(Hyperedge::new(z.vertices.iter().copied().collect(), z.head))
                    })
                    .collect::<Parsed<Vec<_>>>()?;
                Input::Hyper(Hypergraph::new(*n, zs)?)
            }
        })
    }

    pub fn from_hypergraph(h: &Hypergraph) -> GraphFile {
        GraphFile::Hypergraph {
            n: h.vertex_count(),
            hyperedges: h
                .hyperedges()
                .iter()
                .map(|z| HyperedgeFile { vertices: z.vertices.to_vec(), head: z.head })
                .collect(),
        }
    }
}

impl SetFnFile {
    /// Builds the function on `n` vertices. Declared flags in `assume` are
    /// added to the inferred ones; `validate` replaces them by the checked
    /// set.
    pub fn build(&self, n: usize, cfg: &partition_forge::Config) -> Parsed<SetFunction> {
        let mut f = match &self.kind {
            SetFnKind::Constant { value } => SetFunction::constant(n, *value),
            SetFnKind::VertexBulk { vertex, bulk } => SetFunction::vertex_bulk(n, *vertex, *bulk),
            SetFnKind::PerVertex { values, bulk } => {
                if values.len() != n {
                    return Err(ParseError::Text(format!("{} vertex values for {n} vertices", values.len())));
                }
                SetFunction::per_vertex(values.clone(), *bulk)
            }
            SetFnKind::Table { n: m, default, values } => {
                if *m != n {
                    return Err(ParseError::Text(format!("table has arity {m} but the graph has {n} vertices")));
                }
                let entries = values
                    .iter()
                    .map(|(k, v)| Ok((parse_set(k, n)?, *v)))
                    .collect::<Parsed<Vec<_>>>()?;
                SetFunction::table(n, entries, *default)?
            }
        };
        for label in &self.assume {
            let p = Properties::from_label(label).ok_or_else(|| ParseError::Text(format!("unknown property {label:?}")))?;
            f = f.assume(p);
        }
        if self.validate {
            f = f.revalidated(cfg)?;
        }
        Ok(f)
    }
}

/// `"0,2,3"` into a vertex set; the empty string is the empty set.
pub fn parse_set(s: &str, n: usize) -> Parsed<VertexSet> {
    let mut out = VertexSet::EMPTY;
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().map_err(|_| ParseError::Text(format!("bad vertex {part:?}")))?;
        if v >= n {
            return Err(ParseError::Text(format!("vertex {v} is outside 0..{n}")));
        }
        out.insert(v);
    }
    Ok(out)
}

/// `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Parsed<Rational64> {
    let bad = || ParseError::Text(format!("bad rational {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1i64),
    };
    if q == 0 {
        return Err(bad());
    }
    Ok(Rational64::new(p, q))
}

/// Comma-separated rationals, one per vertex.
pub fn parse_rationals(s: &str, n: usize) -> Parsed<Vec<Rational64>> {
    let v = s.split(',').map(parse_rational).collect::<Parsed<Vec<_>>>()?;
    if v.len() != n {
        return Err(ParseError::Text(format!("{} values for {n} vertices", v.len())));
    }
    Ok(v)
}

/// Comma-separated degree bounds; `inf` leaves a vertex unbounded.
pub fn parse_bounds(s: &str, n: usize) -> Parsed<Vec<Option<i64>>> {
    let v = s
        .split(',')
        .map(|p| match p.trim() {
            "inf" => Ok(None),
            t => t.parse().map(Some).map_err(|_| ParseError::Text(format!("bad degree bound {t:?}"))),
        })
        .collect::<Parsed<Vec<_>>>()?;
    if v.len() != n {
        return Err(ParseError::Text(format!("{} bounds for {n} vertices", v.len())));
    }
    Ok(v)
}

/// Comma-separated edge indices.
pub fn parse_edges(s: &str) -> Parsed<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse().map_err(|_| ParseError::Text(format!("bad edge index {p:?}"))))
        .collect()
}

pub fn rational_string(r: Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
