//! Command-line front end: reads graphs and set functions from JSON files,
//! runs one library operation and prints a report.
//!
//! Exit status: 0 success, 2 a condition or hypothesis is violated (the
//! report carries the witness), 3 bad input, 4 a size limit was hit, 1 an
//! internal check failed.

pub mod io;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partition_forge as pf;
use pf::{Config, EdgeSubset, Error, Host, Partition, SetFunction, VertexSet};
use serde_json::{json, Map, Value};

use io::{parse_bounds, parse_edges, parse_rational, parse_rationals, parse_set, GraphFile, Input, ParseError};

pub const SCHEMA: &str = "partition-forge/1";

#[derive(Parser, Debug)]
#[command(name = "partition-forge", version, about = "Partition-connectivity toolkit")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Vertex limit for exhaustive searches.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Edge limit for searches over edge subsets.
    #[arg(long, global = true)]
    max_edges: Option<usize>,
    /// Largest number of partitions one enumeration may visit.
    #[arg(long, global = true)]
    max_partitions: Option<u64>,
    /// Trust declared set-function properties instead of checking them.
    #[arg(long, global = true)]
    trust_flags: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Inputs {
    /// Graph or hypergraph file.
    #[arg(long)]
    graph: PathBuf,
    /// Set-function file; repeat to sum several functions.
    #[arg(long = "setfn")]
    setfns: Vec<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PresetArg {
    Edge,
    Partition,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    Basis,
    Orientation,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Excess,
    Equality,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LeftoverArg {
    First,
    Unassigned,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TrimArg {
    Pc,
    Sparse,
    Arc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Intro,
    Sharp,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The partition-connectivity measure, optionally after removing the
    /// edges touching a vertex set.
    Theta {
        #[command(flatten)]
        inputs: Inputs,
        /// Comma-separated vertices whose incident edges are removed.
        #[arg(long)]
        remove: Option<String>,
    },
    /// The partition into maximal partition-connected vertex sets.
    Components {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Partition-connectivity test with a violating partition on failure.
    CheckPc {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Check every supported property of a set function.
    ValidateSetfn {
        #[arg(long)]
        setfn: PathBuf,
        /// Arity for functions given without one.
        #[arg(long)]
        n: Option<usize>,
    },
    /// A maximum sparse spanning subgraph.
    SparseMax {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Enumerate bases in lexicographic order.
    Bases {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// The most edges a basis can have inside a vertex set.
    EStar {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        set: String,
    },
    /// A partition-connected spanning subgraph with bounded degrees.
    Extract {
        #[command(flatten)]
        inputs: Inputs,
        /// Vertices carrying degree bounds (default: all).
        #[arg(long)]
        x: Option<String>,
        /// Per-vertex rationals "p/q,...".
        #[arg(long)]
        eta: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        /// Derive eta and lambda from a connectivity preset.
        #[arg(long, value_enum)]
        preset: Option<PresetArg>,
        #[arg(long)]
        k: Option<String>,
        /// Treat the vertices of --x as independent in the preset.
        #[arg(long)]
        independent: bool,
        /// Integer degree bounds "h0,h1,..." ("inf" for none); minimizes
        /// total excess instead.
        #[arg(long)]
        target: Option<String>,
        /// Edge indices every answer must contain (with --target).
        #[arg(long)]
        forced: Option<String>,
        #[arg(long, value_enum, default_value_t = RouteArg::Basis)]
        route: RouteArg,
    },
    /// The witness set explaining the excess of a basis.
    Witness {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        target: String,
        /// Edge indices of the subgraph (default: a minimum excess basis).
        #[arg(long)]
        subgraph: Option<String>,
        #[arg(long)]
        forced: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Excess)]
        mode: ModeArg,
    },
    /// Split the edges into one partition-connected part per set function.
    Decompose {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, default_value_t = LeftoverArg::First)]
        leftover: LeftoverArg,
    },
    /// Pack edge-disjoint spanning trees and spanning subgraphs without
    /// isolated vertices.
    Pack {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        trees: usize,
        #[arg(long, default_value_t = 0)]
        forests: usize,
    },
    /// Trim a hypergraph to a graph keeping connectivity or sparsity.
    Trim {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, default_value_t = TrimArg::Pc)]
        mode: TrimArg,
    },
    /// An orientation meeting the in-degree demands of the set function.
    Orient {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Evaluate the degree-bound condition for every subset of --x.
    Condition {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        eta: String,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Sharp)]
        variant: VariantArg,
    },
}

enum Failure {
    Parse(String),
    Lib(Error),
    Violated { message: String, fields: Map<String, Value> },
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Text(s) => Failure::Parse(s),
            ParseError::Lib(e) => Failure::Lib(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Run = Result<Map<String, Value>, Failure>;

fn set_json(s: VertexSet) -> Value {
    json!(s.to_vec())
}

fn partition_json(p: &Partition) -> Value {
    Value::Array(p.blocks().iter().map(|&b| set_json(b)).collect())
}

fn edges_json(host: &dyn Host, sub: &EdgeSubset) -> Value {
    let masks = host.edge_masks();
    Value::Array(sub.iter().map(|e| json!({"index": e, "vertices": masks[e].to_vec()})).collect())
}

fn fields(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn violated(message: impl Into<String>, pairs: Vec<(&str, Value)>) -> Failure {
    Failure::Violated { message: message.into(), fields: fields(pairs) }
}

struct Ctx {
    cfg: Config,
}

impl Ctx {
    fn input(&self, inputs: &Inputs) -> Result<Input, Failure> {
        Ok(io::read_graph(&inputs.graph)?.build()?)
    }

    fn function(&self, inputs: &Inputs, n: usize) -> Result<SetFunction, Failure> {
        let fs = self.functions(inputs, n)?;
        if fs.len() == 1 {
            return Ok(fs.into_iter().next().unwrap());
        }
        Ok(SetFunction::sum(fs)?)
    }

    fn functions(&self, inputs: &Inputs, n: usize) -> Result<Vec<SetFunction>, Failure> {
        if inputs.setfns.is_empty() {
            return Err(Failure::Parse("at least one --setfn is required".into()));
        }
        inputs.setfns.iter().map(|p| Ok(io::read_setfn(p)?.build(n, &self.cfg)?)).collect()
    }

    fn subset(&self, host: &dyn Host, s: Option<&String>) -> Result<EdgeSubset, Failure> {
        match s {
            None => Ok(EdgeSubset::empty()),
            Some(s) => Ok(EdgeSubset::new(host, parse_edges(s)?)?),
        }
    }

    fn vertices(&self, s: Option<&String>, n: usize) -> Result<VertexSet, Failure> {
        match s {
            None => Ok(VertexSet::full(n)),
            Some(s) => Ok(parse_set(s, n)?),
        }
    }

    fn run(&self, command: &Command) -> Run {
        match command {
            Command::Theta { inputs, remove } => {
                let g = self.input(inputs)?;
                let l = self.function(inputs, g.vertex_count())?;
                let host = g.host();
                let value = match remove {
                    Some(s) => pf::theta_without(host, &l, parse_set(s, g.vertex_count())?, &self.cfg)?,
                    None => pf::theta(host, &l, &self.cfg)?,
                };
                let lv = l.value(host.ground());
                Ok(fields(vec![
                    ("theta", json!(value)),
                    ("l_of_v", json!(lv)),
                    ("partition_connected", json!(remove.is_none() && value == lv)),
                ]))
            }
            Command::Components { inputs } => {
                let g = self.input(inputs)?;
                let l = self.function(inputs, g.vertex_count())?;
                let dec = pf::pc_components(g.host(), &l, &self.cfg)?;
                Ok(fields(vec![("components", partition_json(&dec.partition)), ("theta", json!(dec.theta_value))]))
            }
            Command::CheckPc { inputs } => {
                let g = self.input(inputs)?;
                let l = self.function(inputs, g.vertex_count())?;
                match pf::find_violating_partition(g.host(), &l, &self.cfg)? {
                    None => Ok(fields(vec![("partition_connected", json!(true))])),
                    Some(p) => {
                        let cross = pf::cross_edges(g.host(), &p)?;
                        let need: i64 = p.blocks().iter().map(|&a| l.value(a)).sum::<i64>() - l.value(g.host().ground());
                        Err(violated(
                            "not partition-connected",
                            vec![
                                ("partition_connected", json!(false)),
                                ("witness", partition_json(&p)),
                                ("cross_edges", json!(cross)),
                                ("required", json!(need)),
                            ],
                        ))
                    }
                }
            }
            Command::ValidateSetfn { setfn, n } => {
                let file = io::read_setfn(setfn)?;
                let n = match (&file.kind, n) {
                    (io::SetFnKind::Table { n, .. }, _) => *n,
                    (_, Some(n)) => *n,
                    (_, None) => return Err(Failure::Parse("--n is required for this kind of function".into())),
                };
                let f = file.build(n, &self.cfg)?;
                let report = pf::validate(&f, &self.cfg)?;
                let props: Map<String, Value> = report
                    .results
                    .iter()
                    .map(|(p, v)| {
                        let v = match v {
                            pf::Verdict::Holds => json!({"holds": true}),
                            pf::Verdict::Fails { a, b } => json!({"holds": false, "a": set_json(*a), "b": set_json(*b)}),
                        };
                        (p.label().unwrap_or("?").to_string(), v)
                    })
                    .collect();
                Ok(fields(vec![
                    ("arity", json!(n)),
                    ("declared", json!(report.declared.labels())),
                    ("properties", Value::Object(props)),
                ]))
            }
            Command::SparseMax { inputs } => {
                let g = self.input(inputs)?;
                let l = self.function(inputs, g.vertex_count())?;
                let b = pf::max_sparse(g.host(), &l, &self.cfg)?;
                Ok(fields(vec![
                    ("size", json!(b.len())),
                    ("edges", edges_json(g.host(), &b)),
                    ("theta", json!(pf::theta(g.host(), &l, &self.cfg)?)),
                ]))
            }
            Command::Bases { inputs, limit } => {
                let g = self.input(inputs)?;
                let l = self.function(inputs, g.vertex_count())?;
                let mut it = pf::enumerate_bases(g.host(), &l, &self.cfg)?;
                let bases: Vec<Value> = it.by_ref().take(*limit).map(|b| json!(b.as_slice())).collect();
                let complete = it.next().is_none();
                Ok(fields(vec![("count", json!(bases.len())), ("complete", json!(complete)), ("bases", Value::Array(bases))]))
            }
            Command::EStar { inputs, set } => {
                let g = self.input(inputs)?;
                let l = self.function(inputs, g.vertex_count())?;
                let s = parse_set(set, g.vertex_count())?;
                Ok(fields(vec![("set", set_json(s)), ("e_star", json!(pf::e_star(g.host(), &l, s, &self.cfg)?))]))
            }
            Command::Extract { inputs, x, eta, lambda, preset, k, independent, target, forced, route } => {
                let g = self.input(inputs)?;
                let n = g.vertex_count();
                let l = self.function(inputs, n)?;
                let host = g.host();
                if let Some(t) = target {
                    let bounds = parse_bounds(t, n)?;
                    let target = pf::DegreeTarget(bounds.clone());
                    let forced = self.subset(host, forced.as_ref())?;
                    let sub = match route {
                        RouteArg::Orientation => {
                            let h: Vec<i64> = target.resolve(host);
                            pf::extract_via_orientation(&g.as_graph()?, &l, &h, &self.cfg)?
                        }
                        RouteArg::Basis => pf::min_excess_basis(host, &l, &target, &forced, &self.cfg)?.0,
                    };
                    let te = pf::total_excess(host, &sub, &target)?;
                    let mut out = fields(vec![("edges", edges_json(host, &sub)), ("excess", json!(te))]);
                    if te > 0 {
                        let s = pf::structure_witness(host, &l, &target, &sub, Some(&forced), pf::WitnessMode::Excess, &self.cfg)?;
                        out.insert("witness".into(), set_json(s));
                        return Err(Failure::Violated { message: format!("every basis has excess at least {te}"), fields: out });
                    }
                    return Ok(out);
                }
                let x = self.vertices(x.as_ref(), n)?;
                let (eta, lambda) = match preset {
                    Some(p) => {
                        let k = parse_rational(k.as_deref().ok_or_else(|| Failure::Parse("--preset needs --k".into()))?)?;
                        let mode = match p {
                            PresetArg::Edge => pf::PresetMode::EdgeConnected,
                            PresetArg::Partition => pf::PresetMode::PartitionConnected,
                        };
                        let p = pf::preset_eta(host, &l, k, mode, independent.then_some(x), &self.cfg)?;
                        (p.eta, p.lambda)
                    }
                    None => {
                        let eta = eta.as_deref().ok_or_else(|| Failure::Parse("--eta, --preset or --target is required".into()))?;
                        let lambda = lambda.as_deref().ok_or_else(|| Failure::Parse("--lambda is required with --eta".into()))?;
                        (parse_rationals(eta, n)?, parse_rational(lambda)?)
                    }
                };
                let bound = pf::ceiling_target(&l, x, &eta, lambda);
                let sub = pf::extract_bounded(host, &l, x, &eta, lambda, &self.cfg)?;
                Ok(fields(vec![
                    ("edges", edges_json(host, &sub)),
                    ("bound", json!(bound.0)),
                    ("degrees", json!(sub.degrees(host))),
                    ("eta", json!(eta.iter().map(|&r| io::rational_string(r)).collect::<Vec<_>>())),
                    ("lambda", json!(io::rational_string(lambda))),
                ]))
            }
            Command::Witness { inputs, target, subgraph, forced, mode } => {
                let g = self.input(inputs)?;
                let n = g.vertex_count();
                let l = self.function(inputs, n)?;
                let host = g.host();
                let target = pf::DegreeTarget(parse_bounds(target, n)?);
                let forced = self.subset(host, forced.as_ref())?;
                let sub = match subgraph {
                    Some(s) => EdgeSubset::new(host, parse_edges(s)?)?,
                    None => pf::min_excess_basis(host, &l, &target, &forced, &self.cfg)?.0,
                };
                let mode = match mode {
                    ModeArg::Excess => pf::WitnessMode::Excess,
                    ModeArg::Equality => pf::WitnessMode::Equality,
                };
                let f = (!forced.is_empty()).then_some(&forced);
                let s = pf::structure_witness(host, &l, &target, &sub, f, mode, &self.cfg)?;
                Ok(fields(vec![
                    ("subgraph", json!(sub.as_slice())),
                    ("excess", json!(pf::total_excess(host, &sub, &target)?)),
                    ("witness", set_json(s)),
                ]))
            }
            Command::Decompose { inputs, leftover } => {
                let g = self.input(inputs)?;
                let fs = self.functions(inputs, g.vertex_count())?;
                let policy = match leftover {
                    LeftoverArg::First => pf::Leftover::FirstPart,
                    LeftoverArg::Unassigned => pf::Leftover::Unassigned,
                };
                decomposition(g.host(), pf::decompose_pc(g.host(), &fs, policy, &self.cfg))
            }
            Command::Pack { graph, trees, forests } => {
                let g = io::read_graph(graph)?.build()?;
                decomposition(g.host(), pf::pack_trees_pc(g.host(), *trees, *forests, &self.cfg))
            }
            Command::Trim { inputs, mode } => {
                let g = self.input(inputs)?;
                let l = self.function(inputs, g.vertex_count())?;
                let h = g.as_hypergraph();
                let t = match mode {
                    TrimArg::Pc => pf::trim_pc(&h, &l, &self.cfg)?,
                    TrimArg::Sparse => pf::trim_sparse(&h, &l, &self.cfg)?,
                    TrimArg::Arc => pf::trim_arc(&h, &l, &self.cfg)?,
                };
                let file = GraphFile::from_hypergraph(&t);
                Ok(fields(vec![("graph", serde_json::to_value(file).expect("graph files serialize"))]))
            }
            Command::Orient { inputs } => {
                let g = self.input(inputs)?.as_graph()?;
                let ell = self.function(inputs, g.vertex_count())?;
                match pf::orient_arc_connected(&g, &ell, &self.cfg)? {
                    Some(o) => Ok(fields(vec![("arcs", json!(o.arcs()))])),
                    None => {
                        let witness = pf::find_violating_partition(&g, &ell, &self.cfg)?;
                        Err(violated(
                            "no orientation meets the demands",
                            vec![("witness", witness.as_ref().map(partition_json).unwrap_or(Value::Null))],
                        ))
                    }
                }
            }
            Command::Condition { inputs, x, eta, lambda, variant } => {
                let g = self.input(inputs)?;
                let n = g.vertex_count();
                let l = self.function(inputs, n)?;
                let x = self.vertices(x.as_ref(), n)?;
                let eta = parse_rationals(eta, n)?;
                let lambda = parse_rational(lambda)?;
                let variant = match variant {
                    VariantArg::Intro => pf::ConditionVariant::Intro,
                    VariantArg::Sharp => pf::ConditionVariant::Sharp,
                };
                let v = pf::check_main_condition(g.host(), &l, x, &eta, lambda, variant, &self.cfg)?;
                let slack: Vec<Value> = v
                    .slack
                    .iter()
                    .map(|(s, r)| json!({"set": set_json(*s), "slack": io::rational_string(*r)}))
                    .collect();
                let mut out = fields(vec![("holds", json!(v.holds)), ("slack", Value::Array(slack))]);
                match v.witness {
                    None => Ok(out),
                    Some(s) => {
                        out.insert("witness".into(), set_json(s));
                        Err(Failure::Violated { message: format!("condition fails at {s}"), fields: out })
                    }
                }
            }
        }
    }
}

fn decomposition(host: &dyn Host, d: pf::Result<pf::Decomposition>) -> Run {
    let d = d?;
    Ok(fields(vec![
        ("parts", Value::Array(d.parts.iter().map(|p| edges_json(host, p)).collect())),
        ("leftover", json!(d.leftover.as_slice())),
        ("covers_all", json!(d.covers_all)),
    ]))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Theta { .. } => "theta",
        Command::Components { .. } => "components",
        Command::CheckPc { .. } => "check-pc",
        Command::ValidateSetfn { .. } => "validate-setfn",
        Command::SparseMax { .. } => "sparse-max",
        Command::Bases { .. } => "bases",
        Command::EStar { .. } => "e-star",
        Command::Extract { .. } => "extract",
        Command::Witness { .. } => "witness",
        Command::Decompose { .. } => "decompose",
        Command::Pack { .. } => "pack",
        Command::Trim { .. } => "trim",
        Command::Orient { .. } => "orient",
        Command::Condition { .. } => "condition",
    }
}

/// Library errors that describe a failed condition rather than bad input.
fn lib_failure(e: Error) -> (i32, &'static str, Map<String, Value>) {
    let mut m = Map::new();
    let code = match &e {
        Error::LimitExceeded { .. } => 4,
        Error::InvalidInput(_)
        | Error::MalformedPartition(_)
        | Error::InvalidSetFunction(_)
        | Error::MissingFlags(_)
        | Error::PropertyViolated { .. } => 3,
        Error::NotPartitionConnected { witness } => {
            m.insert("witness".into(), partition_json(witness));
            2
        }
        Error::ConditionViolated { witness } | Error::NotArcConnected { witness } => {
            m.insert("witness".into(), set_json(*witness));
            2
        }
        Error::HypothesisViolated { clause, witness } => {
            m.insert("clause".into(), json!(clause));
            m.insert("witness".into(), set_json(*witness));
            2
        }
        Error::NotSparse | Error::Disconnected | Error::Infeasible | Error::NoWitness => 2,
        Error::VerificationFailed(_) => 1,
    };
    let status = match code {
        2 => "violated",
        4 => "limit",
        3 => "invalid",
        _ => "error",
    };
    m.insert("message".into(), json!(e.to_string()));
    (code, status, m)
}

fn render(format: Format, report: &Map<String, Value>) -> String {
    match format {
        Format::Json => serde_json::to_string(report).expect("reports serialize") + "\n",
        Format::Text => report
            .iter()
            .filter(|(k, _)| k.as_str() != "schema")
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}\n"),
                v => format!("{k}: {v}\n"),
            })
            .collect(),
    }
}

/// Parses arguments, runs the command and returns the exit status with the
/// text to print on standard output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let mut cfg = Config { trust_flags: cli.trust_flags, ..Config::default() };
    if let Some(n) = cli.max_n {
        cfg.max_vertices = n;
        cfg.max_component_vertices = n;
    }
    if let Some(m) = cli.max_edges {
        cfg.max_edges = m;
        cfg.max_orientation_edges = m;
    }
    if let Some(p) = cli.max_partitions {
        cfg.max_partitions = p;
    }
    let mut report = Map::new();
    report.insert("schema".into(), json!(SCHEMA));
    report.insert("command".into(), json!(command_name(&cli.command)));
    let code = match (Ctx { cfg }).run(&cli.command) {
        Ok(f) => {
            report.insert("status".into(), json!("ok"));
            report.extend(f);
            0
        }
        Err(Failure::Parse(msg)) => {
            report.insert("status".into(), json!("invalid"));
            report.insert("message".into(), json!(msg));
            3
        }
        Err(Failure::Violated { message, fields }) => {
            report.insert("status".into(), json!("violated"));
            report.insert("message".into(), json!(message));
            report.extend(fields);
            2
        }
        Err(Failure::Lib(e)) => {
            let (code, status, f) = lib_failure(e);
            report.insert("status".into(), json!(status));
            report.extend(f);
            code
        }
    };
    (code, render(cli.format, &report))
}
