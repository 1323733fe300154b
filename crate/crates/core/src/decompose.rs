//! Packing edge-disjoint sparse and partition-connected spanning subgraphs.
//!
//! Works for graphs and hypergraphs alike through [`Host`].

use crate::config::Config;
use crate::error::{Error, Result};
use crate::extract::DegreeTarget;
use crate::graph::{sigma, EdgeSubset, EdgeSystem, Host, Partition};
use crate::setfn::{ensure, Properties, SetFunction};
use crate::sparse::{basis_size, SparseState};
use crate::theta::{find_violating_partition, is_pc_unchecked, scaled_edge_deficiency, ThetaTable};
use crate::vertex_set::VertexSet;
use std::collections::{HashSet, VecDeque};

/// Edge-disjoint parts, part `i` sparse for `functions[i]`.
#[derive(Clone, Debug)]
pub struct SparseFamily {
    pub parts: Vec<EdgeSubset>,
    pub functions: Vec<SetFunction>,
}

impl SparseFamily {
    /// Number of edges covered by the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }

    /// Edges in no part.
    pub fn uncovered<H: Host + ?Sized>(&self, host: &H) -> EdgeSubset {
        let used: HashSet<usize> = self.parts.iter().flat_map(|p| p.iter()).collect();
        (0..host.edge_count()).filter(|e| !used.contains(e)).collect()
    }
}

/// What happens to edges left over after packing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Leftover {
    /// Appended to the first part.
    #[default]
    FirstPart,
    /// Reported separately.
    Unassigned,
}

/// Edge-disjoint partition-connected spanning subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<EdgeSubset>,
    /// Edges in no part (empty unless the leftover policy is `Unassigned`).
    pub leftover: EdgeSubset,
    pub covers_all: bool,
}

const FAMILY_FLAGS: Properties = Properties::INTERSECTING_SUPERMODULAR.union(Properties::WEAKLY_SUBADDITIVE);

fn check_functions<H: Host + ?Sized>(host: &H, fs: &[SetFunction], required: Properties, cfg: &Config) -> Result<()> {
    if fs.is_empty() {
        return Err(Error::InvalidInput("at least one set function is required".into()));
    }
    for l in fs {
        ensure(l, host.vertex_count(), required, cfg)?;
    }
    cfg.check_vertices(host.ground().len())
}

struct Packing {
    states: Vec<SparseState>,
    owner: Vec<Option<usize>>,
}

impl Packing {
    fn new<H: Host + ?Sized>(host: &H, fs: &[SetFunction]) -> Self {
        Packing {
            states: fs.iter().map(|l| SparseState::new(host, l)).collect(),
            owner: vec![None; host.edge_count()],
        }
    }

    fn members(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.owner.len()).filter(move |&e| self.owner[e] == Some(i))
    }

    fn exchangeable(&mut self, i: usize, x: usize, y: usize) -> bool {
        self.states[i].remove(y);
        let ok = self.states[i].can_add(x);
        self.states[i].add(y);
        ok
    }

    /// Shortest augmenting path from the uncovered edge `start`. Along the
    /// path each edge takes the place of the next one; the last joins a part
    /// directly.
    fn augment(&mut self, start: usize) -> bool {
        let m = self.states.len();
        let mut prev: Vec<Option<usize>> = vec![None; self.owner.len()];
        let mut seen = vec![false; self.owner.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for i in 0..m {
                if self.owner[x] == Some(i) {
                    continue;
                }
                if self.states[i].can_add(x) {
                    self.apply(x, i, &prev);
                    return true;
                }
                let ys: Vec<usize> = self.members(i).filter(|&y| !seen[y]).collect();
                for y in ys {
                    if self.exchangeable(i, x, y) {
                        seen[y] = true;
                        prev[y] = Some(x);
                        queue.push_back(y);
                    }
                }
            }
        }
        false
    }

    fn apply(&mut self, last: usize, part: usize, prev: &[Option<usize>]) {
        let mut path = vec![last];
        while let Some(p) = prev[*path.last().expect("nonempty")] {
            path.push(p);
        }
        // path runs from `last` back to the start; each edge moves into the
        // part of the edge after it on the forward path.
        let targets: Vec<usize> = std::iter::once(part)
            .chain(path.iter().take(path.len() - 1).map(|&y| self.owner[y].expect("path edges are covered")))
            .collect();
        for &e in &path {
            if let Some(o) = self.owner[e] {
                self.states[o].remove(e);
            }
        }
        for (&e, &t) in path.iter().zip(&targets) {
            self.states[t].add(e);
            self.owner[e] = Some(t);
        }
    }

    fn family(&self, fs: &[SetFunction]) -> SparseFamily {
        SparseFamily {
            parts: (0..fs.len()).map(|i| self.members(i).collect()).collect(),
            functions: fs.to_vec(),
        }
    }
}

/// Edge-disjoint sparse parts covering as many edges as possible, by
/// augmenting paths. Small instances are re-checked against
/// [`max_family_oracle`].
pub fn max_sparse_family<H: Host + ?Sized>(host: &H, functions: &[SetFunction], cfg: &Config) -> Result<SparseFamily> {
    check_functions(host, functions, FAMILY_FLAGS, cfg)?;
    cfg.check_edges(host.edge_count())?;
    let mut packing = Packing::new(host, functions);
    for e in 0..host.edge_count() {
        packing.augment(e);
    }
    if let Some(bad) = packing.states.iter().position(|s| !s.is_sparse()) {
        return Err(Error::VerificationFailed(format!("part {bad} lost sparseness during augmentation")));
    }
    let family = packing.family(functions);
    let m = functions.len() as f64 + 1.0;
    if m.powi(host.edge_count() as i32) <= cfg.certify_assignments as f64 {
        let best = max_family_oracle(host, functions, cfg)?.size();
        if best != family.size() {
            return Err(Error::VerificationFailed(format!(
                "augmentation covered {} edges but {best} are possible",
                family.size()
            )));
        }
    }
    Ok(family)
}

/// Optimal family by exhaustive assignment of every edge to a part or to
/// none, with a counting bound.
pub fn max_family_oracle<H: Host + ?Sized>(host: &H, functions: &[SetFunction], cfg: &Config) -> Result<SparseFamily> {
    check_functions(host, functions, Properties::empty(), cfg)?;
    cfg.check_edges(host.edge_count())?;
    struct Search {
        states: Vec<SparseState>,
        current: Vec<Option<usize>>,
        best: Vec<Option<usize>>,
        best_size: usize,
    }
    impl Search {
        fn run(&mut self, e: usize, size: usize) {
            let m = self.current.len();
            if size + (m - e) <= self.best_size {
                return;
            }
            if e == m {
                self.best_size = size;
                self.best = self.current.clone();
                return;
            }
            for i in 0..self.states.len() {
                if self.states[i].try_add(e) {
                    self.current[e] = Some(i);
                    self.run(e + 1, size + 1);
                    self.current[e] = None;
                    self.states[i].remove(e);
                }
            }
            self.run(e + 1, size);
        }
    }
    let m = host.edge_count();
    let states: Vec<SparseState> = functions.iter().map(|l| SparseState::new(host, l)).collect();
    let mut s = Search { current: vec![None; m], best: vec![None; m], best_size: 0, states };
    if s.states.iter().all(|st| st.is_sparse()) {
        s.run(0, 0);
    }
    Ok(SparseFamily {
        parts: (0..functions.len()).map(|i| (0..m).filter(|&e| s.best[e] == Some(i)).collect()).collect(),
        functions: functions.to_vec(),
    })
}

/// A partition `P` such that no uncovered edge joins two blocks and every
/// part restricted to every block is partition-connected. The family must be
/// maximum.
///
/// Built from the edges that are uncovered in some family reachable by
/// exchanging an uncovered edge with an edge of a part.
pub fn witness_partition<H: Host + ?Sized>(host: &H, family: &SparseFamily, cfg: &Config) -> Result<Partition> {
    check_functions(host, &family.functions, FAMILY_FLAGS, cfg)?;
    let m = family.functions.len();
    if family.parts.len() != m {
        return Err(Error::InvalidInput("one part per function is required".into()));
    }
    let ne = host.edge_count();
    let mut start = vec![m as u8; ne];
    for (i, p) in family.parts.iter().enumerate() {
        for e in p.iter() {
            if e >= ne || start[e] != m as u8 {
                return Err(Error::InvalidInput(format!("edge {e} is out of range or in two parts")));
            }
            start[e] = i as u8;
        }
    }
    let mut g0 = vec![false; ne];
    let mut seen: HashSet<Vec<u8>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(conf) = queue.pop_front() {
        let mut states: Vec<SparseState> = family.functions.iter().map(|l| SparseState::new(host, l)).collect();
        for (e, &o) in conf.iter().enumerate() {
            if (o as usize) < m {
                states[o as usize].add(e);
            }
        }
        if states.iter().any(|s| !s.is_sparse()) {
            return Err(Error::NotSparse);
        }
        for z in (0..ne).filter(|&e| conf[e] as usize == m) {
            g0[z] = true;
            for (i, st) in states.iter_mut().enumerate() {
                if st.can_add(z) {
                    return Err(Error::VerificationFailed(format!("edge {z} fits into part {i}; the family is not maximum")));
                }
                for y in (0..ne).filter(|&y| conf[y] as usize == i) {
                    st.remove(y);
                    let ok = st.can_add(z);
                    st.add(y);
                    if ok {
                        let mut next = conf.clone();
                        next[z] = i as u8;
                        next[y] = m as u8;
                        if seen.insert(next.clone()) {
                            cfg.check("replacement closure size", seen.len(), cfg.max_states)?;
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
    }
    let masks = host.edge_masks();
    let mut blocks: Vec<VertexSet> = host.ground().iter().map(VertexSet::singleton).collect();
    for e in (0..ne).filter(|&e| g0[e]) {
        let (hit, mut rest): (Vec<VertexSet>, Vec<VertexSet>) = blocks.into_iter().partition(|b| b.intersects(masks[e]));
        rest.push(hit.into_iter().fold(VertexSet::EMPTY, |a, b| a | b));
        blocks = rest;
    }
    let partition = Partition::from_blocks(blocks);
    verify_witness(host, family, &partition)?;
    Ok(partition)
}

fn verify_witness<H: Host + ?Sized>(host: &H, family: &SparseFamily, p: &Partition) -> Result<()> {
    let masks = host.edge_masks();
    for e in family.uncovered(host).iter() {
        if !p.blocks().iter().any(|b| masks[e].is_subset(*b)) {
            return Err(Error::VerificationFailed(format!("uncovered edge {e} joins two blocks")));
        }
    }
    for (i, (part, l)) in family.parts.iter().zip(&family.functions).enumerate() {
        let t = ThetaTable::new(&EdgeSystem::spanning(host, part), l);
        if let Some(b) = p.blocks().iter().find(|b| !t.is_pc(t.compress(**b))) {
            return Err(Error::VerificationFailed(format!("part {i} is not partition-connected on block {b}")));
        }
    }
    Ok(())
}

/// Split the edges into parts with part `i` partition-connected for
/// `functions[i]`. Succeeds exactly when the host is partition-connected for
/// the sum of the functions.
pub fn decompose_pc<H: Host + ?Sized>(
    host: &H,
    functions: &[SetFunction],
    leftover: Leftover,
    cfg: &Config,
) -> Result<Decomposition> {
    check_functions(host, functions, FAMILY_FLAGS, cfg)?;
    let total = SetFunction::sum(functions.to_vec())?;
    if let Some(witness) = find_violating_partition(host, &total, cfg)? {
        return Err(Error::NotPartitionConnected { witness });
    }
    let family = max_sparse_family(host, functions, cfg)?;
    for (i, (part, l)) in family.parts.iter().zip(functions).enumerate() {
        let want = basis_size(host, l);
        if part.len() as i64 != want {
            return Err(Error::VerificationFailed(format!("part {i} has {} edges, expected {want}", part.len())));
        }
    }
    let rest = family.uncovered(host);
    let mut parts = family.parts;
    let rest = match leftover {
        Leftover::FirstPart => {
            parts[0] = parts[0].union(&rest);
            EdgeSubset::empty()
        }
        Leftover::Unassigned => rest,
    };
    for (i, (part, l)) in parts.iter().zip(functions).enumerate() {
        if !is_pc_unchecked(&EdgeSystem::spanning(host, part), l) {
            return Err(Error::VerificationFailed(format!("part {i} is not partition-connected")));
        }
    }
    Ok(Decomposition { covers_all: rest.is_empty(), parts, leftover: rest })
}

/// `m` spanning trees and `p` spanning subgraphs without isolated vertices,
/// all edge-disjoint. Needs partition-connectivity for the function that is
/// `m + p` on vertices and `m` on larger sets.
pub fn pack_trees_pc<H: Host + ?Sized>(host: &H, m: usize, p: usize, cfg: &Config) -> Result<Decomposition> {
    if m + p == 0 {
        return Err(Error::InvalidInput("m + p must be positive".into()));
    }
    let n = host.vertex_count();
    let mut fs = vec![SetFunction::vertex_bulk(n, 1, 1); m];
    fs.extend(std::iter::repeat_n(SetFunction::vertex_bulk(n, 1, 0), p));
    decompose_pc(host, &fs, Leftover::FirstPart, cfg)
}

/// An l-partition-connected spanning subgraph with
/// `d_H(v) ≤ ⌈(r−1)d(v)/r⌉ + l(v)`, and `⌊(r−1)d(u)/r⌋ + l(u) − l(V)` at
/// `u`, where `r` is the rank (2 for graphs). Needs `r·l`-edge-connectivity.
pub fn half_degree_pc<H: Host + ?Sized>(host: &H, l: &SetFunction, u: usize, cfg: &Config) -> Result<EdgeSubset> {
    ensure(
        l,
        host.vertex_count(),
        Properties::INTERSECTING_SUPERMODULAR | Properties::SUBADDITIVE | Properties::NONNEGATIVE,
        cfg,
    )?;
    let ground = host.ground();
    if !ground.contains(u) {
        return Err(Error::InvalidInput(format!("vertex {u} is not in the ground set")));
    }
    let r = host.rank().max(2) as i64;
    if let Some(a) = scaled_edge_deficiency(host, l, r, 1) {
        return Err(Error::HypothesisViolated { clause: format!("{r}l-edge-connectivity"), witness: a });
    }
    let d = host.degrees();
    let lg = l.value(ground);
    let singles: Vec<i64> = (0..host.vertex_count())
        .map(|v| {
            let d = d[v] as i64;
            match (ground.contains(v), v == u) {
                (false, _) => 0,
                (true, true) => (d + r - 1) / r - l.vertex_value(v) + lg,
                (true, false) => d / r - l.vertex_value(v),
            }
        })
        .collect();
    if let Some(v) = singles.iter().position(|&x| x < 0) {
        return Err(Error::HypothesisViolated { clause: "degree at least r·l(v)".into(), witness: VertexSet::singleton(v) });
    }
    let ell = SetFunction::per_vertex(singles, 0);
    let dec = decompose_pc(host, &[l.clone(), ell], Leftover::FirstPart, cfg)?;
    let h = &dec.parts[0];
    let dh = h.degrees(host);
    for v in ground.iter() {
        let dv = d[v] as i64;
        let bound = if v == u {
            (r - 1) * dv / r + l.vertex_value(v) - lg
        } else {
            ((r - 1) * dv + r - 1) / r + l.vertex_value(v)
        };
        if dh[v] as i64 > bound {
            return Err(Error::VerificationFailed(format!("vertex {v} has degree {} above {bound}", dh[v])));
        }
    }
    Ok(h.clone())
}

/// An l-partition-connected spanning sub-hypergraph with `d ≤ h`, given
/// `Θ(H\S) ≤ Σ_S (h(v) − l(v)) + l(V) − σ(S)` for every `S`.
pub fn hyper_bounded<H: Host + ?Sized>(host: &H, l: &SetFunction, h: &DegreeTarget, cfg: &Config) -> Result<EdgeSubset> {
    ensure(l, host.vertex_count(), Properties::INTERSECTING_SUPERMODULAR | Properties::SUBADDITIVE, cfg)?;
    cfg.check_vertices(host.ground().len())?;
    if h.len() != host.vertex_count() {
        return Err(Error::InvalidInput("one degree bound per vertex is required".into()));
    }
    let h = h.resolve(host);
    let ground = host.ground();
    let table = ThetaTable::new(host, l);
    let lg = l.value(ground);
    for s in ground.subsets_by_size() {
        let rhs: i64 = s.iter().map(|v| h[v] - l.vertex_value(v)).sum::<i64>() + lg - sigma(host, s) as i64;
        if table.theta(table.compress(ground - s)) > rhs {
            return Err(Error::HypothesisViolated { clause: "theta bound".into(), witness: s });
        }
    }
    let d = host.degrees();
    let ell = SetFunction::per_vertex((0..d.len()).map(|v| (d[v] as i64 - h[v]).max(0)).collect(), 0);
    let dec = decompose_pc(host, &[l.clone(), ell], Leftover::FirstPart, cfg)?;
    let sub = dec.parts[0].clone();
    let ds = sub.degrees(host);
    if let Some(v) = ground.iter().find(|&v| ds[v] as i64 > h[v]) {
        return Err(Error::VerificationFailed(format!("vertex {v} exceeds its bound")));
    }
    Ok(sub)
}
