//! Arc-connected orientations, minimal arc-connected subdigraphs and the
//! orientation route to degree-bounded partition-connected subgraphs.

use crate::config::Config;
use crate::decompose::{decompose_pc, Leftover};
use crate::error::{Error, Result};
use crate::graph::{induced_edge_count, EdgeSubset, EdgeSystem, Host, Hypergraph, MultiGraph, Orientation};
use crate::setfn::{ensure, Properties, SetFunction};
use crate::theta::{is_pc_unchecked, scaled_edge_deficiency, ThetaTable};
use crate::vertex_set::VertexSet;

/// `ℓ` tabulated over every subset of `0..n`.
fn tabulate(ell: &SetFunction, n: usize) -> Vec<i64> {
    (0..1u64 << n).map(|a| ell.value(VertexSet(a))).collect()
}

/// `d⁻(A)` for every `A`: hyperedges with head in `A` and a vertex outside.
fn in_degrees(n: usize, arcs: impl Iterator<Item = (VertexSet, usize)>) -> Vec<i64> {
    let size = 1usize << n;
    let mut heads = vec![0i64; n];
    let mut inside = vec![0i64; size];
    for (z, h) in arcs {
        heads[h] += 1;
        inside[z.bits() as usize] += 1;
    }
    for i in 0..n {
        for a in 0..size {
            if a >> i & 1 == 1 {
                inside[a] += inside[a ^ 1 << i];
            }
        }
    }
    (0..size)
        .map(|a| VertexSet(a as u64).iter().map(|v| heads[v]).sum::<i64>() - inside[a])
        .collect()
}

fn heads_of(d: &Hypergraph) -> Result<Vec<(VertexSet, usize)>> {
    d.hyperedges()
        .iter()
        .enumerate()
        .map(|(i, z)| {
            z.head
                .map(|h| (z.vertices, h))
                .ok_or_else(|| Error::InvalidInput(format!("hyperedge {i} has no head")))
        })
        .collect()
}

/// The first set `A` (in increasing mask order) with `d⁻(A) < ℓ(A)`.
pub fn arc_deficiency(d: &Hypergraph, ell: &SetFunction, cfg: &Config) -> Result<Option<VertexSet>> {
    ensure(ell, d.vertex_count(), Properties::empty(), cfg)?;
    cfg.check_vertices(d.vertex_count())?;
    let arcs = heads_of(d)?;
    Ok(deficiency(d.vertex_count(), &arcs, &tabulate(ell, d.vertex_count())))
}

fn deficiency(n: usize, arcs: &[(VertexSet, usize)], ell: &[i64]) -> Option<VertexSet> {
    let din = in_degrees(n, arcs.iter().copied());
    (0..din.len()).find(|&a| din[a] < ell[a]).map(|a| VertexSet(a as u64))
}

/// Whether every set `A` has `d⁻(A) ≥ ℓ(A)`.
pub fn is_arc_connected(d: &Hypergraph, ell: &SetFunction, cfg: &Config) -> Result<bool> {
    Ok(arc_deficiency(d, ell, cfg)?.is_none())
}

fn check_orientation_function(n: usize, ell: &SetFunction, cfg: &Config) -> Result<()> {
    ensure(ell, n, Properties::INTERSECTING_SUPERMODULAR | Properties::NONNEGATIVE, cfg)?;
    if ell.value(VertexSet::full(n)) != 0 {
        return Err(Error::InvalidSetFunction("the function must vanish on the whole vertex set".into()));
    }
    Ok(())
}

/// An orientation with `d⁻(A) ≥ ℓ(A)` for every `A`, or `None` when there is
/// none. Exhaustive depth-first search; the answer is checked against
/// ℓ-partition-connectivity.
pub fn orient_arc_connected(g: &MultiGraph, ell: &SetFunction, cfg: &Config) -> Result<Option<Orientation>> {
    let n = g.vertex_count();
    check_orientation_function(n, ell, cfg)?;
    cfg.check_vertices(n)?;
    cfg.check("edge count for orientation", g.edge_count(), cfg.max_orientation_edges)?;
    let found = orient_unchecked(g, ell);
    if found.is_some() != is_pc_unchecked(g, ell) {
        return Err(Error::VerificationFailed(
            "orientation search disagrees with partition-connectivity".into(),
        ));
    }
    Ok(found)
}

fn orient_unchecked(g: &MultiGraph, ell: &SetFunction) -> Option<Orientation> {
    let n = g.vertex_count();
    let size = 1usize << n;
    let need = tabulate(ell, n);
    let mut open = vec![0i64; size];
    for &(u, v) in g.edges() {
        for (a, o) in open.iter_mut().enumerate() {
            if (a >> u & 1) != (a >> v & 1) {
                *o += 1;
            }
        }
    }
    let mut search = OrientSearch { edges: g.edges(), need, have: vec![0; size], open, heads: vec![] };
    if !search.feasible() {
        return None;
    }
    search.run(0).then(|| Orientation::new(g, &search.heads).expect("heads are endpoints"))
}

struct OrientSearch<'a> {
    edges: &'a [(usize, usize)],
    need: Vec<i64>,
    have: Vec<i64>,
    open: Vec<i64>,
    heads: Vec<usize>,
}

impl OrientSearch<'_> {
    fn feasible(&self) -> bool {
        (0..self.need.len()).all(|a| self.have[a] + self.open[a] >= self.need[a])
    }

    fn set(&mut self, e: usize, head: usize, delta: i64) {
        let (u, v) = self.edges[e];
        let tail = if head == v { u } else { v };
        for a in 0..self.need.len() {
            let (th, ht) = (a >> tail & 1 == 1, a >> head & 1 == 1);
            if th != ht {
                self.open[a] -= delta;
                if ht {
                    self.have[a] += delta;
                }
            }
        }
    }

    fn run(&mut self, e: usize) -> bool {
        if e == self.edges.len() {
            return true;
        }
        let (u, v) = self.edges[e];
        for head in [v, u] {
            self.set(e, head, 1);
            self.heads.push(head);
            if self.feasible() && self.run(e + 1) {
                return true;
            }
            self.heads.pop();
            self.set(e, head, -1);
        }
        false
    }
}

/// Greedily drop arcs in index order while the digraph stays
/// ℓ-arc-connected; returns the kept arcs. When `ℓ` is declared
/// element-nonincreasing and positively intersecting supermodular, every
/// vertex ends with in-degree exactly `ℓ(v)`, and this is checked.
pub fn min_arc_subdigraph(d: &Hypergraph, ell: &SetFunction, cfg: &Config) -> Result<EdgeSubset> {
    let n = d.vertex_count();
    ensure(ell, n, Properties::empty(), cfg)?;
    cfg.check_vertices(n)?;
    let arcs = heads_of(d)?;
    let need = tabulate(ell, n);
    if let Some(witness) = deficiency(n, &arcs, &need) {
        return Err(Error::NotArcConnected { witness });
    }
    let mut keep = vec![true; arcs.len()];
    for e in 0..arcs.len() {
        keep[e] = false;
        let rest = arcs.iter().zip(&keep).filter(|(_, &k)| k).map(|(a, _)| *a);
        let din = in_degrees(n, rest);
        if (0..din.len()).any(|a| din[a] < need[a]) {
            keep[e] = true;
        }
    }
    let kept: EdgeSubset = (0..arcs.len()).filter(|&e| keep[e]).collect();
    let exact = Properties::ELEMENT_NONINCREASING | Properties::POSITIVELY_INTERSECTING_SUPERMODULAR | Properties::NONNEGATIVE;
    if ell.flags().contains(exact) && ell.value(VertexSet::full(n)) == 0 {
        let din = in_degrees(n, kept.iter().map(|e| arcs[e]));
        if let Some(v) = (0..n).find(|&v| din[1 << v] != ell.vertex_value(v)) {
            return Err(Error::VerificationFailed(format!("vertex {v} has in-degree {} not ℓ(v)", din[1 << v])));
        }
    }
    Ok(kept)
}

/// An orientation together with edge-disjoint arc-connected parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedDecomposition {
    pub orientation: Orientation,
    /// Part `i` is ℓ_i-arc-connected under the orientation.
    pub parts: Vec<EdgeSubset>,
    /// The remaining edges, oriented to keep out-degrees at most half.
    pub balance: EdgeSubset,
}

/// An orientation with `d⁺(v) ≤ ⌈d(v)/2⌉` (and `⌊d(u)/2⌋` at `u`) containing
/// edge-disjoint ℓ_i-arc-connected spanning subdigraphs. With `roots`, part
/// `i` uses `ℓ_i − r_i` and `Σ r_i` must equal `ℓ_i(V)`. Needs
/// `2Σℓ_i`-edge-connectivity.
pub fn orient_decompose(
    g: &MultiGraph,
    functions: &[SetFunction],
    roots: Option<&[Vec<i64>]>,
    u: usize,
    cfg: &Config,
) -> Result<OrientedDecomposition> {
    let n = g.vertex_count();
    if u >= n {
        return Err(Error::InvalidInput(format!("vertex {u} is out of range")));
    }
    let ells: Vec<SetFunction> = match roots {
        None => functions.to_vec(),
        Some(rs) => {
            if rs.len() != functions.len() {
                return Err(Error::InvalidInput("one root vector per function is required".into()));
            }
            functions
                .iter()
                .zip(rs)
                .map(|(l, r)| {
                    if r.iter().sum::<i64>() != l.value(VertexSet::full(n)) {
                        return Err(Error::InvalidInput("root values must sum to l(V)".into()));
                    }
                    SetFunction::rooted_shift(l.clone(), r.clone())
                })
                .collect::<Result<_>>()?
        }
    };
    for l in &ells {
        check_orientation_function(n, l, cfg)?;
        ensure(l, n, Properties::NONINCREASING, cfg)?;
    }
    let d = g.degrees();
    let total: Vec<i64> = (0..n).map(|v| ells.iter().map(|l| l.vertex_value(v)).sum()).collect();
    if !ells.is_empty() {
        let sum = SetFunction::sum(ells.clone())?;
        if let Some(a) = scaled_edge_deficiency(g, &sum, 2, 1) {
            return Err(Error::HypothesisViolated { clause: "2ℓ-edge-connectivity".into(), witness: a });
        }
    }
    let singles: Vec<i64> = (0..n)
        .map(|v| {
            let half = if v == u { d[v].div_ceil(2) } else { d[v] / 2 };
            half as i64 - total[v]
        })
        .collect();
    if let Some(v) = singles.iter().position(|&x| x < 0) {
        return Err(Error::HypothesisViolated { clause: "degree at least 2ℓ(v)".into(), witness: VertexSet::singleton(v) });
    }
    let mut all = vec![SetFunction::per_vertex(singles, 0)];
    all.extend(ells.iter().cloned());
    let dec = decompose_pc(g, &all, Leftover::FirstPart, cfg)?;
    let mut heads = vec![usize::MAX; g.edge_count()];
    for (part, ell) in dec.parts.iter().zip(&all) {
        let sub = g.spanning(part);
        let o = orient_arc_connected(&sub, ell, cfg)?
            .ok_or_else(|| Error::VerificationFailed("a part has no arc-connected orientation".into()))?;
        for (e, h) in part.iter().zip(o.head_of()) {
            heads[e] = h;
        }
    }
    let orientation = Orientation::new(g, &heads)?;
    for v in 0..n {
        let bound = if v == u { d[v] / 2 } else { d[v].div_ceil(2) };
        let out = orientation.out_degree(VertexSet::singleton(v));
        if out > bound {
            return Err(Error::VerificationFailed(format!("vertex {v} has out-degree {out} above {bound}")));
        }
    }
    let mut parts = dec.parts;
    let balance = parts.remove(0);
    Ok(OrientedDecomposition { orientation, parts, balance })
}

/// An l-partition-connected spanning subgraph with `d_H ≤ h`, built by
/// orienting toward a shifted function and keeping a minimal arc-connected
/// subdigraph. Needs `Θ(G\S) ≤ Σ_S (h(v) − l(v)) + l(G) − e_G(S)` for every
/// `S`, and `l` nonincreasing, intersecting supermodular and nonnegative.
pub fn extract_via_orientation(g: &MultiGraph, l: &SetFunction, h: &[i64], cfg: &Config) -> Result<EdgeSubset> {
    let n = g.vertex_count();
    ensure(
        l,
        n,
        Properties::NONINCREASING | Properties::INTERSECTING_SUPERMODULAR | Properties::NONNEGATIVE,
        cfg,
    )?;
    cfg.check_vertices(n)?;
    if h.len() != n {
        return Err(Error::InvalidInput("one degree bound per vertex is required".into()));
    }
    if n == 0 {
        return Ok(EdgeSubset::empty());
    }
    let ground = VertexSet::full(n);
    let lg = l.value(ground);
    let table = ThetaTable::new(g, l);
    for s in ground.subsets_by_size() {
        let rhs = s.iter().map(|v| h[v] - l.vertex_value(v)).sum::<i64>() + lg - induced_edge_count(g, s) as i64;
        if table.theta(table.compress(ground - s)) > rhs {
            return Err(Error::HypothesisViolated { clause: "theta bound".into(), witness: s });
        }
    }
    let root = 0;
    let shift = |a: VertexSet| if a.contains(root) { lg } else { 0 };
    let ell = SetFunction::from_fn(n, |a| if a.is_empty() { 0 } else { l.value(a) - shift(a) })?;
    let d = g.degrees();
    let raised = SetFunction::from_fn(n, |a| match a.len() {
        0 => 0,
        1 => {
            let v = a.first().expect("nonempty");
            let base = l.value(a) - shift(a);
            base.max(d[v] as i64 - h[v] + base)
        }
        _ => l.value(a) - shift(a),
    })?;
    let assumed = Properties::INTERSECTING_SUPERMODULAR | Properties::NONNEGATIVE;
    let o = orient_arc_connected(g, &raised.assume(assumed), cfg)?
        .ok_or_else(|| Error::VerificationFailed("hypothesis holds but no orientation exists".into()))?;
    let kept = min_arc_subdigraph(&o.to_directed(), &ell.assume(assumed), cfg)?;
    let sub = EdgeSystem::spanning(g, &kept);
    let dh = kept.degrees(g);
    if let Some(v) = (0..n).find(|&v| dh[v] as i64 > h[v]) {
        return Err(Error::VerificationFailed(format!("vertex {v} exceeds its bound")));
    }
    if !is_pc_unchecked(&sub, l) {
        return Err(Error::VerificationFailed("minimal subdigraph is not partition-connected".into()));
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Hyperedge;

    fn ones(n: usize) -> SetFunction {
        SetFunction::vertex_bulk(n, 1, 0)
    }

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn orientation_examples() {
        let c3 = MultiGraph::cycle(3);
        let o = orient_arc_connected(&c3, &ones(3), &cfg()).unwrap().unwrap();
        assert!((0..3).all(|v| o.in_degree(VertexSet::singleton(v)) == 1));
        let k2 = MultiGraph::path(2);
        assert!(orient_arc_connected(&k2, &ones(2), &cfg()).unwrap().is_none());
        let zero = SetFunction::constant(3, 0);
        assert!(orient_arc_connected(&MultiGraph::path(3), &zero, &cfg()).unwrap().is_some());
        assert!(orient_arc_connected(&c3, &SetFunction::constant(3, 1), &cfg()).is_err());
    }

    #[test]
    fn minimal_subdigraph_examples() {
        let tri = Hypergraph::new(3, (0..3).map(|i| Hyperedge::directed([i, (i + 1) % 3], (i + 1) % 3)).collect()).unwrap();
        let kept = min_arc_subdigraph(&tri, &ones(3), &cfg()).unwrap();
        assert_eq!(kept.len(), 3);
        let doubled = Hypergraph::new(
            3,
            (0..6).map(|i| Hyperedge::directed([i / 2, (i / 2 + 1) % 3], (i / 2 + 1) % 3)).collect(),
        )
        .unwrap();
        assert_eq!(min_arc_subdigraph(&doubled, &ones(3), &cfg()).unwrap().as_slice(), &[1, 3, 5]);
        assert!(min_arc_subdigraph(&tri, &SetFunction::constant(3, 0), &cfg()).unwrap().is_empty());
        let path = Hypergraph::new(3, vec![Hyperedge::directed([0, 1], 1), Hyperedge::directed([1, 2], 2)]).unwrap();
        assert!(matches!(min_arc_subdigraph(&path, &ones(3), &cfg()), Err(Error::NotArcConnected { .. })));
    }

    #[test]
    fn decompose_orientation_examples() {
        let c4 = MultiGraph::cycle(4).repeated(2);
        let r = orient_decompose(&c4, &[ones(4)], None, 0, &cfg()).unwrap();
        let sub = c4.spanning(&r.parts[0]);
        let heads: Vec<usize> = r.parts[0].iter().map(|e| r.orientation.arcs()[e].1).collect();
        let o = Orientation::new(&sub, &heads).unwrap();
        assert!(is_arc_connected(&o.to_directed(), &ones(4), &cfg()).unwrap());
        for v in 0..4 {
            assert!(r.orientation.out_degree(VertexSet::singleton(v)) <= 2);
        }
        let r = orient_decompose(&MultiGraph::cycle(4), &[], None, 1, &cfg()).unwrap();
        assert!(r.orientation.out_degree(VertexSet::singleton(1)) <= 1);
        // Rooted: l = constant(1) rooted at 0 gives ℓ = 1 on sets avoiding 0.
        let k4 = MultiGraph::complete(4).repeated(2);
        let r = orient_decompose(&k4, &[SetFunction::constant(4, 1)], Some(&[vec![1, 0, 0, 0]]), 0, &cfg()).unwrap();
        assert_eq!(r.parts.len(), 1);
    }

    #[test]
    fn orientation_route_examples() {
        let k4 = MultiGraph::complete(4);
        let l = SetFunction::constant(4, 1);
        let h = extract_via_orientation(&k4, &l, &[3, 3, 3, 3], &cfg()).unwrap();
        assert_eq!(h.len(), 3);
        let c4 = MultiGraph::cycle(4);
        assert!(matches!(
            extract_via_orientation(&c4, &l, &[1; 4], &cfg()),
            Err(Error::HypothesisViolated { .. })
        ));
    }
}
