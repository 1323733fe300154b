//! l-sparse edge sets: the independent sets of a matroid whose bases are the
//! minimally l-partition-connected spanning subgraphs.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, EdgeSystem, Host};
use crate::setfn::{ensure, Properties, SetFunction};
use crate::theta::{find_violating_partition, ThetaTable};
use crate::vertex_set::VertexSet;

/// Remaining room `Σ l(v) − l(A) − e_F(A)` for every `A` over the ground set,
/// updated as edges come and go.
#[derive(Clone)]
pub(crate) struct SparseState {
    cap: Vec<i64>,
    full: usize,
    edges: Vec<usize>,
}

impl SparseState {
    pub(crate) fn new<H: Host + ?Sized>(host: &H, l: &SetFunction) -> Self {
        let verts = host.ground().to_vec();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let size = 1usize << verts.len();
        let mut exp = vec![VertexSet::EMPTY; size];
        let mut vsum = vec![0i64; size];
        for c in 1..size {
            let low = c.trailing_zeros() as usize;
            exp[c] = exp[c & (c - 1)].with(verts[low]);
            vsum[c] = vsum[c & (c - 1)] + l.vertex_value(verts[low]);
        }
        let cap = (0..size).map(|c| vsum[c] - l.value(exp[c])).collect();
        let edges = host
            .edge_masks()
            .iter()
            .map(|m| m.iter().fold(0usize, |c, v| c | 1 << pos[v]))
            .collect();
        SparseState { cap, full: size - 1, edges }
    }

    /// Whether the current edge set (initially empty) is sparse.
    pub(crate) fn is_sparse(&self) -> bool {
        self.cap.iter().all(|&c| c >= 0)
    }

    fn supersets(&self, c: usize) -> impl Iterator<Item = usize> {
        let full = self.full;
        let mut next = Some(c);
        std::iter::from_fn(move || {
            let s = next?;
            next = if s == full { None } else { Some((s + 1) | c) };
            Some(s)
        })
    }

    pub(crate) fn can_add(&self, e: usize) -> bool {
        let c = self.edges[e];
        self.supersets(c).all(|s| self.cap[s] >= 1)
    }

    pub(crate) fn add(&mut self, e: usize) {
        let c = self.edges[e];
        for s in self.supersets(c).collect::<Vec<_>>() {
            self.cap[s] -= 1;
        }
    }

    pub(crate) fn remove(&mut self, e: usize) {
        let c = self.edges[e];
        for s in self.supersets(c).collect::<Vec<_>>() {
            self.cap[s] += 1;
        }
    }

    pub(crate) fn try_add(&mut self, e: usize) -> bool {
        if self.can_add(e) {
            self.add(e);
            true
        } else {
            false
        }
    }
}

/// `Σ l(v) − l(V)` over the ground set: the size of every basis.
pub fn basis_size<H: Host + ?Sized>(host: &H, l: &SetFunction) -> i64 {
    let g = host.ground();
    l.vertex_sum(g) - l.value(g)
}

/// Whether `e_F(A) ≤ Σ_{v∈A} l(v) − l(A)` for every vertex set `A`.
pub fn is_sparse<H: Host + ?Sized>(host: &H, f: &EdgeSubset, l: &SetFunction, cfg: &Config) -> Result<bool> {
    ensure(l, host.vertex_count(), Properties::empty(), cfg)?;
    cfg.check_vertices(host.ground().len())?;
    check_subset(host, f)?;
    Ok(sparse_unchecked(host, f, l))
}

pub(crate) fn sparse_unchecked<H: Host + ?Sized>(host: &H, f: &EdgeSubset, l: &SetFunction) -> bool {
    let mut st = SparseState::new(host, l);
    if !st.is_sparse() {
        return false;
    }
    f.iter().all(|e| st.try_add(e))
}

pub(crate) fn check_subset<H: Host + ?Sized>(host: &H, f: &EdgeSubset) -> Result<()> {
    match f.as_slice().last() {
        Some(&e) if e >= host.edge_count() => Err(Error::InvalidInput(format!(
            "edge index {e} out of range (host has {} edges)",
            host.edge_count()
        ))),
        _ => Ok(()),
    }
}

/// A maximal sparse edge set, built greedily in edge-index order.
pub fn max_sparse<H: Host + ?Sized>(host: &H, l: &SetFunction, cfg: &Config) -> Result<EdgeSubset> {
    ensure(l, host.vertex_count(), Properties::INTERSECTING_SUPERMODULAR | Properties::WEAKLY_SUBADDITIVE, cfg)?;
    cfg.check_vertices(host.ground().len())?;
    Ok(greedy(host, l, 0..host.edge_count()))
}

pub(crate) fn greedy<H: Host + ?Sized>(host: &H, l: &SetFunction, order: impl IntoIterator<Item = usize>) -> EdgeSubset {
    let mut st = SparseState::new(host, l);
    EdgeSubset::from_unsorted(order.into_iter().filter(|&e| st.try_add(e)).collect())
}

fn require_pc<H: Host + ?Sized>(host: &H, l: &SetFunction, cfg: &Config) -> Result<()> {
    if let Some(witness) = find_violating_partition(host, l, cfg)? {
        return Err(Error::NotPartitionConnected { witness });
    }
    Ok(())
}

/// Every minimally l-partition-connected spanning subgraph, in lexicographic
/// order of edge indices.
pub fn enumerate_bases<H: Host + ?Sized>(host: &H, l: &SetFunction, cfg: &Config) -> Result<Bases> {
    bases_containing(host, l, &EdgeSubset::empty(), cfg)
}

/// The bases that contain `forced`.
pub fn bases_containing<H: Host + ?Sized>(
    host: &H,
    l: &SetFunction,
    forced: &EdgeSubset,
    cfg: &Config,
) -> Result<Bases> {
    ensure(l, host.vertex_count(), Properties::INTERSECTING_SUPERMODULAR | Properties::WEAKLY_SUBADDITIVE, cfg)?;
    cfg.check_vertices(host.ground().len())?;
    cfg.check_edges(host.edge_count())?;
    check_subset(host, forced)?;
    require_pc(host, l, cfg)?;
    if !sparse_unchecked(host, forced, l) {
        return Err(Error::NotSparse);
    }
    Ok(Bases::new(host, l, forced))
}

/// Lexicographic depth-first search over sparse sets of basis size. A
/// prefix is kept only if it still extends to a basis with the edges that
/// remain, so every leaf is a basis.
pub struct Bases {
    state: SparseState,
    k: usize,
    m: usize,
    required: Vec<bool>,
    chosen: Vec<usize>,
    next: usize,
    descending: bool,
    done: bool,
}

impl Bases {
    fn new<H: Host + ?Sized>(host: &H, l: &SetFunction, forced: &EdgeSubset) -> Self {
        let m = host.edge_count();
        let mut required = vec![false; m];
        for e in forced.iter() {
            required[e] = true;
        }
        let k = basis_size(host, l).max(0) as usize;
        let mut b = Bases {
            state: SparseState::new(host, l),
            k,
            m,
            required,
            chosen: vec![],
            next: 0,
            descending: true,
            done: false,
        };
        b.done = !b.state.is_sparse() || !b.extendable(0);
        b
    }

    /// Whether the chosen edges extend to a basis using edges `from..`.
    fn extendable(&self, from: usize) -> bool {
        let mut st = self.state.clone();
        let mut size = self.chosen.len();
        for e in from..self.m {
            if self.required[e] {
                if !st.try_add(e) {
                    return false;
                }
                size += 1;
            }
        }
        for e in from..self.m {
            if size >= self.k {
                break;
            }
            if !self.required[e] && st.try_add(e) {
                size += 1;
            }
        }
        size == self.k
    }
}

impl Iterator for Bases {
    type Item = EdgeSubset;

    fn next(&mut self) -> Option<EdgeSubset> {
        while !self.done {
            if self.descending {
                if self.chosen.len() == self.k {
                    self.descending = false;
                    return Some(EdgeSubset::from_sorted(self.chosen.clone()));
                }
                let e = self.next;
                debug_assert!(e < self.m);
                if self.state.try_add(e) {
                    self.chosen.push(e);
                    if self.extendable(e + 1) {
                        self.next = e + 1;
                        continue;
                    }
                    self.chosen.pop();
                    self.state.remove(e);
                }
                if self.required[e] {
                    self.descending = false;
                    continue;
                }
                self.next = e + 1;
                if !self.extendable(e + 1) {
                    self.descending = false;
                }
            } else {
                let Some(e) = self.chosen.pop() else {
                    self.done = true;
                    break;
                };
                self.state.remove(e);
                if self.required[e] {
                    continue;
                }
                if self.extendable(e + 1) {
                    self.next = e + 1;
                    self.descending = true;
                }
            }
        }
        None
    }
}

/// A smallest vertex set containing `y` on which `F` is partition-connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinPcSubgraph {
    pub vertices: VertexSet,
    /// No other set of the same size qualifies.
    pub unique: bool,
}

/// The smallest `X ⊇ Y` with `F[X]` l-partition-connected; the
/// lexicographically first one when several have the minimum size.
pub fn min_pc_subgraph<H: Host + ?Sized>(
    host: &H,
    f: &EdgeSubset,
    l: &SetFunction,
    y: VertexSet,
    cfg: &Config,
) -> Result<MinPcSubgraph> {
    ensure(l, host.vertex_count(), Properties::INTERSECTING_SUPERMODULAR, cfg)?;
    cfg.check_vertices(host.ground().len())?;
    check_subset(host, f)?;
    if y.is_empty() || !y.is_subset(host.ground()) {
        return Err(Error::InvalidInput(format!("required set {y} must be nonempty and inside the ground set")));
    }
    if !sparse_unchecked(host, f, l) {
        return Err(Error::NotSparse);
    }
    let sub = EdgeSystem::spanning(host, f);
    min_pc_unchecked(&sub, l, y).ok_or(Error::Disconnected)
}

pub(crate) fn min_pc_unchecked<H: Host + ?Sized>(sub: &H, l: &SetFunction, y: VertexSet) -> Option<MinPcSubgraph> {
    let t = ThetaTable::new(sub, l);
    let mut found: Option<VertexSet> = None;
    for x in sub.ground().subsets_by_size() {
        if let Some(f) = found {
            if x.len() > f.len() {
                return Some(MinPcSubgraph { vertices: f, unique: true });
            }
        }
        if y.is_subset(x) && t.is_pc(t.compress(x)) {
            if let Some(f) = found {
                return Some(MinPcSubgraph { vertices: f, unique: false });
            }
            found = Some(x);
        }
    }
    found.map(|f| MinPcSubgraph { vertices: f, unique: true })
}

/// `e*_G(S)`: the most edges inside `s` over all bases.
///
/// Computed as the matroid rank of the edges inside `s`; any independent set
/// extends to a basis.
pub fn e_star<H: Host + ?Sized>(host: &H, l: &SetFunction, s: VertexSet, cfg: &Config) -> Result<usize> {
    ensure(l, host.vertex_count(), Properties::INTERSECTING_SUPERMODULAR | Properties::WEAKLY_SUBADDITIVE, cfg)?;
    cfg.check_vertices(host.ground().len())?;
    require_pc(host, l, cfg)?;
    Ok(e_star_unchecked(host, l, s))
}

pub(crate) fn e_star_unchecked<H: Host + ?Sized>(host: &H, l: &SetFunction, s: VertexSet) -> usize {
    let masks = host.edge_masks();
    greedy(host, l, (0..masks.len()).filter(|&e| masks[e].is_subset(s))).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{induced_edge_count, MultiGraph};
    use crate::theta::is_pc;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn all<H: Host>(h: &H) -> EdgeSubset {
        EdgeSubset::all(h)
    }

    #[test]
    fn sparse_examples() {
        let cfg = Config::default();
        let c3 = MultiGraph::cycle(3);
        assert!(!is_sparse(&c3, &all(&c3), &SetFunction::constant(3, 1), &cfg).unwrap());
        let p3 = MultiGraph::path(3);
        assert!(is_sparse(&p3, &all(&p3), &SetFunction::constant(3, 1), &cfg).unwrap());
        let k4 = MultiGraph::complete(4);
        assert!(is_sparse(&k4, &all(&k4), &SetFunction::constant(4, 2), &cfg).unwrap());
    }

    #[test]
    fn max_sparse_examples() {
        let cfg = Config::default();
        let k4 = MultiGraph::complete(4);
        let t = max_sparse(&k4, &SetFunction::constant(4, 1), &cfg).unwrap();
        assert_eq!(t.len(), 3);
        assert!(is_pc(&EdgeSystem::spanning(&k4, &t), &SetFunction::constant(4, 1), &cfg).unwrap());
        assert_eq!(max_sparse(&k4, &SetFunction::constant(4, 2), &cfg).unwrap().len(), 6);
        let two = MultiGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(max_sparse(&two, &SetFunction::constant(4, 1), &cfg).unwrap().len(), 2);
    }

    #[test]
    fn basis_counts() {
        let cfg = Config::default();
        let count = |g: &MultiGraph| enumerate_bases(g, &SetFunction::constant(g.vertex_count(), 1), &cfg).unwrap().count();
        assert_eq!(count(&MultiGraph::cycle(3)), 3);
        assert_eq!(count(&MultiGraph::complete(4)), 16);
        assert_eq!(count(&MultiGraph::path(3)), 1);
        assert_eq!(count(&MultiGraph::complete(5)), 125);
        let bases: Vec<_> = enumerate_bases(&MultiGraph::cycle(3), &SetFunction::constant(3, 1), &cfg).unwrap().collect();
        let idx: Vec<_> = bases.iter().map(|b| b.as_slice().to_vec()).collect();
        assert_eq!(idx, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn forced_edges() {
        let cfg = Config::default();
        let k4 = MultiGraph::complete(4);
        let l = SetFunction::constant(4, 1);
        let f = EdgeSubset::new(&k4, [1, 5]).unwrap();
        let bases: Vec<_> = bases_containing(&k4, &l, &f, &cfg).unwrap().collect();
        let oracle = enumerate_bases(&k4, &l, &cfg).unwrap().filter(|b| f.is_subset(b)).count();
        assert_eq!(bases.len(), oracle);
        assert!(bases.iter().all(|b| f.is_subset(b)));
        let cyc = EdgeSubset::new(&k4, [0, 1, 3]).unwrap();
        assert!(matches!(bases_containing(&k4, &l, &cyc, &cfg), Err(Error::NotSparse)));
    }

    #[test]
    fn bases_need_partition_connectivity() {
        let cfg = Config::default();
        let g = MultiGraph::empty(2);
        assert!(matches!(
            enumerate_bases(&g, &SetFunction::constant(2, 1), &cfg),
            Err(Error::NotPartitionConnected { .. })
        ));
    }

    #[test]
    fn min_pc_examples() {
        let cfg = Config::default();
        let p3 = MultiGraph::path(3);
        let l = SetFunction::constant(3, 1);
        let r = min_pc_subgraph(&p3, &all(&p3), &l, set(&[0, 2]), &cfg).unwrap();
        assert_eq!(r.vertices, set(&[0, 1, 2]));
        assert!(r.unique);
        let r = min_pc_subgraph(&p3, &all(&p3), &l, set(&[0, 1]), &cfg).unwrap();
        assert_eq!(r.vertices, set(&[0, 1]));
        let two = MultiGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            min_pc_subgraph(&two, &all(&two), &SetFunction::constant(4, 1), set(&[0, 2]), &cfg),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn e_star_examples() {
        let cfg = Config::default();
        let c3 = MultiGraph::cycle(3);
        assert_eq!(e_star(&c3, &SetFunction::constant(3, 1), set(&[0, 1]), &cfg).unwrap(), 1);
        assert_eq!(e_star(&c3, &SetFunction::constant(3, 1), VertexSet::EMPTY, &cfg).unwrap(), 0);
        let k4 = MultiGraph::complete(4);
        assert_eq!(e_star(&k4, &SetFunction::constant(4, 2), VertexSet::full(4), &cfg).unwrap(), 6);
    }

    #[test]
    fn e_star_matches_basis_maximum() {
        let cfg = Config::default();
        let g = MultiGraph::new(5, vec![(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3), (2, 4)]).unwrap();
        for l in [SetFunction::constant(5, 1), SetFunction::constant(5, 2)] {
            let bases: Vec<_> = enumerate_bases(&g, &l, &cfg).unwrap().collect();
            for s in VertexSet::full(5).subsets() {
                let best = bases.iter().map(|b| induced_edge_count(&EdgeSystem::spanning(&g, b), s)).max().unwrap();
                assert_eq!(e_star(&g, &l, s, &cfg).unwrap(), best, "{s}");
            }
        }
    }
}
