//! Multigraphs, hypergraphs, partitions, edge subsets, orientations and the
//! counting primitives used throughout.
//!
//! Every host exposes its edges as vertex masks. A graph edge is a 2-element
//! mask, so the counting code is shared between graphs and hypergraphs.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Anything with vertices and edges given as vertex sets.
pub trait Host {
    fn vertex_count(&self) -> usize;

    fn edge_masks(&self) -> &[VertexSet];

    /// The vertex set the host lives on. For induced views this can be a
    /// proper subset of `0..vertex_count`.
    fn ground(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    fn edge_count(&self) -> usize {
        self.edge_masks().len()
    }

    fn degree(&self, v: usize) -> usize {
        self.edge_masks().iter().filter(|m| m.contains(v)).count()
    }

    fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count()];
        for m in self.edge_masks() {
            for v in m.iter() {
                d[v] += 1;
            }
        }
        d
    }

    /// Largest edge size (0 for an edgeless host).
    fn rank(&self) -> usize {
        self.edge_masks().iter().map(|m| m.len()).max().unwrap_or(0)
    }
}

fn check_vertex_count(n: usize) -> Result<()> {
    if n > 64 {
        return Err(Error::InvalidInput(format!("{n} vertices; at most 64 are supported")));
    }
    Ok(())
}

/// Loopless undirected multigraph. Edge order is the edge index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    masks: Vec<VertexSet>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_vertex_count(n)?;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!("edge {i} ({u},{v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("edge {i} is a loop at {u}")));
            }
        }
        let masks = edges.iter().map(|&(u, v)| VertexSet::pair(u, v)).collect();
        Ok(MultiGraph { n, edges, masks })
    }

    pub fn empty(n: usize) -> Self {
        MultiGraph::new(n, vec![]).expect("valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = vec![];
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        MultiGraph::new(n, edges).expect("valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("valid")
    }

    pub fn path(n: usize) -> Self {
        MultiGraph::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("valid")
    }

    /// Star with center 0 and `k` leaves.
    pub fn star(k: usize) -> Self {
        MultiGraph::new(k + 1, (1..=k).map(|i| (0, i)).collect()).expect("valid")
    }

    /// Every edge repeated `times` times (copies are adjacent in index order).
    pub fn repeated(&self, times: usize) -> Self {
        let edges = self.edges.iter().flat_map(|&e| std::iter::repeat_n(e, times)).collect();
        MultiGraph::new(self.n, edges).expect("valid")
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The spanning subgraph on a subset of edges, reindexed in subset order.
    pub fn spanning(&self, sub: &EdgeSubset) -> MultiGraph {
        MultiGraph::new(self.n, sub.iter().map(|e| self.edges[e]).collect()).expect("valid")
    }

    /// `G \ [S, F]`: drop every edge touching `S` unless it lies in `F`.
    /// Vertices are kept.
    pub fn restricted_removal(&self, s: VertexSet, f: &EdgeSubset) -> MultiGraph {
        self.spanning(&self.restricted_removal_edges(s, f))
    }

    /// Indices surviving `G \ [S, F]`.
    pub fn restricted_removal_edges(&self, s: VertexSet, f: &EdgeSubset) -> EdgeSubset {
        EdgeSubset::from_sorted(
            (0..self.edges.len()).filter(|&e| !self.masks[e].intersects(s) || f.contains(e)).collect(),
        )
    }

    /// Collapse `x` into one vertex; loops are deleted.
    pub fn contract(&self, x: VertexSet) -> Result<MultiGraph> {
        let (map, n2) = contraction_map(self.n, x)?;
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (map[u], map[v]))
            .filter(|(u, v)| u != v)
            .collect();
        MultiGraph::new(n2, edges)
    }
}

impl Host for MultiGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn edge_masks(&self) -> &[VertexSet] {
        &self.masks
    }
}

/// Renumbering for contraction: members of `x` map to the position of its
/// smallest vertex, all others keep their relative order.
fn contraction_map(n: usize, x: VertexSet) -> Result<(Vec<usize>, usize)> {
    let rep = x.first().ok_or_else(|| Error::InvalidInput("cannot contract an empty set".into()))?;
    if !x.is_subset(VertexSet::full(n)) {
        return Err(Error::InvalidInput(format!("contracted set {x} is not inside 0..{n}")));
    }
    let mut map = vec![0; n];
    let mut next = 0;
    for v in 0..n {
        if x.contains(v) && v != rep {
            continue;
        }
        map[v] = next;
        next += 1;
    }
    for v in x.iter() {
        map[v] = map[rep];
    }
    Ok((map, next))
}

/// A hyperedge with an optional head.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hyperedge {
    pub vertices: VertexSet,
    pub head: Option<usize>,
}

impl Hyperedge {
    pub fn new(vertices: VertexSet, head: Option<usize>) -> Self {
        Hyperedge { vertices, head }
    }

    pub fn undirected(vertices: impl IntoIterator<Item = usize>) -> Self {
        Hyperedge { vertices: vertices.into_iter().collect(), head: None }
    }

    pub fn directed(vertices: impl IntoIterator<Item = usize>, head: usize) -> Self {
        Hyperedge { vertices: vertices.into_iter().collect(), head: Some(head) }
    }
}

/// Hypergraph whose hyperedges have at least two vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    hyperedges: Vec<Hyperedge>,
    masks: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(n: usize, hyperedges: Vec<Hyperedge>) -> Result<Self> {
        check_vertex_count(n)?;
        for (i, z) in hyperedges.iter().enumerate() {
            if z.vertices.len() < 2 {
                return Err(Error::InvalidInput(format!("hyperedge {i} has fewer than two vertices")));
            }
            if !z.vertices.is_subset(VertexSet::full(n)) {
                return Err(Error::InvalidInput(format!("hyperedge {i} has a vertex outside 0..{n}")));
            }
            if let Some(h) = z.head {
                if !z.vertices.contains(h) {
                    return Err(Error::InvalidInput(format!("head {h} of hyperedge {i} is not a member")));
                }
            }
        }
        let masks = hyperedges.iter().map(|z| z.vertices).collect();
        Ok(Hypergraph { n, hyperedges, masks })
    }

    pub fn from_graph(g: &MultiGraph) -> Self {
        let hs = g.edges().iter().map(|&(u, v)| Hyperedge::undirected([u, v])).collect();
        Hypergraph::new(g.vertex_count(), hs).expect("valid")
    }

    pub fn hyperedges(&self) -> &[Hyperedge] {
        &self.hyperedges
    }

    /// Every hyperedge has a head.
    pub fn is_directed(&self) -> bool {
        self.hyperedges.iter().all(|z| z.head.is_some())
    }

    /// Rank at most two.
    pub fn is_graph(&self) -> bool {
        self.masks.iter().all(|m| m.len() == 2)
    }

    /// The underlying multigraph when every hyperedge has size two.
    pub fn to_multigraph(&self) -> Option<MultiGraph> {
        if !self.is_graph() {
            return None;
        }
        let edges = self
            .masks
            .iter()
            .map(|m| {
                let v = m.to_vec();
                (v[0], v[1])
            })
            .collect();
        Some(MultiGraph::new(self.n, edges).expect("valid"))
    }

    pub fn spanning(&self, sub: &EdgeSubset) -> Hypergraph {
        Hypergraph::new(self.n, sub.iter().map(|e| self.hyperedges[e]).collect()).expect("valid")
    }

    /// Replace hyperedge `i`; used by trimming.
    pub(crate) fn replace(&mut self, i: usize, z: Hyperedge) {
        self.masks[i] = z.vertices;
        self.hyperedges[i] = z;
    }

    /// Replace each hyperedge `Z` meeting `x` by `(Z \ X) + u`; drop those that
    /// shrink below two vertices. Heads inside `x` move to the new vertex.
    pub fn contract(&self, x: VertexSet) -> Result<Hypergraph> {
        let (map, n2) = contraction_map(self.n, x)?;
        let mut out = vec![];
        for z in &self.hyperedges {
            let vs: VertexSet = z.vertices.iter().map(|v| map[v]).collect();
            if vs.len() >= 2 {
                out.push(Hyperedge { vertices: vs, head: z.head.map(|h| map[h]) });
            }
        }
        Hypergraph::new(n2, out)
    }

    /// In-degree of a set: hyperedges with head in `a` and some vertex outside.
    pub fn in_degree(&self, a: VertexSet) -> usize {
        self.hyperedges
            .iter()
            .filter(|z| z.head.is_some_and(|h| a.contains(h)) && !z.vertices.is_subset(a))
            .count()
    }
}

impl Host for Hypergraph {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn edge_masks(&self) -> &[VertexSet] {
        &self.masks
    }
}

/// A bare host: vertex count, ground set and edge masks. Used for spanning
/// subgraphs and induced views.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSystem {
    n: usize,
    ground: VertexSet,
    masks: Vec<VertexSet>,
}

impl EdgeSystem {
    pub fn new(n: usize, ground: VertexSet, masks: Vec<VertexSet>) -> Self {
        debug_assert!(masks.iter().all(|m| m.is_subset(ground)));
        EdgeSystem { n, ground, masks }
    }

    pub fn of<H: Host + ?Sized>(host: &H) -> Self {
        EdgeSystem::new(host.vertex_count(), host.ground(), host.edge_masks().to_vec())
    }

    /// Spanning subgraph on the given edges.
    pub fn spanning<H: Host + ?Sized>(host: &H, sub: &EdgeSubset) -> Self {
        let m = host.edge_masks();
        EdgeSystem::new(host.vertex_count(), host.ground(), sub.iter().map(|e| m[e]).collect())
    }

    /// Induced sub-host on `a`: ground `a`, edges inside `a`.
    pub fn induced<H: Host + ?Sized>(host: &H, a: VertexSet) -> Self {
        let ground = host.ground() & a;
        let masks = host.edge_masks().iter().copied().filter(|m| m.is_subset(ground)).collect();
        EdgeSystem::new(host.vertex_count(), ground, masks)
    }

    /// `host \ S`: the sub-host induced on the complement of `s`.
    pub fn without<H: Host + ?Sized>(host: &H, s: VertexSet) -> Self {
        Self::induced(host, host.ground() - s)
    }

    pub fn push(&mut self, mask: VertexSet) {
        debug_assert!(mask.is_subset(self.ground));
        self.masks.push(mask);
    }
}

impl Host for EdgeSystem {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn edge_masks(&self) -> &[VertexSet] {
        &self.masks
    }
    fn ground(&self) -> VertexSet {
        self.ground
    }
}

/// A set of edge indices of some host, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSubset {
    indices: Vec<usize>,
}

impl EdgeSubset {
    pub fn new<H: Host + ?Sized>(host: &H, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&last) = v.last() {
            if last >= host.edge_count() {
                return Err(Error::InvalidInput(format!(
                    "edge index {last} out of range (host has {} edges)",
                    host.edge_count()
                )));
            }
        }
        Ok(EdgeSubset { indices: v })
    }

    pub(crate) fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        EdgeSubset { indices }
    }

    pub(crate) fn from_unsorted(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        EdgeSubset { indices }
    }

    pub fn empty() -> Self {
        EdgeSubset::default()
    }

    pub fn all<H: Host + ?Sized>(host: &H) -> Self {
        EdgeSubset { indices: (0..host.edge_count()).collect() }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.indices.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }

    pub fn is_subset(&self, other: &EdgeSubset) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    pub fn union(&self, other: &EdgeSubset) -> EdgeSubset {
        EdgeSubset::from_unsorted(self.iter().chain(other.iter()).collect())
    }

    pub fn difference(&self, other: &EdgeSubset) -> EdgeSubset {
        EdgeSubset::from_sorted(self.iter().filter(|&e| !other.contains(e)).collect())
    }

    pub fn masks<H: Host + ?Sized>(&self, host: &H) -> Vec<VertexSet> {
        let m = host.edge_masks();
        self.iter().map(|e| m[e]).collect()
    }

    /// Degrees of the spanning subgraph.
    pub fn degrees<H: Host + ?Sized>(&self, host: &H) -> Vec<usize> {
        let mut d = vec![0; host.vertex_count()];
        let m = host.edge_masks();
        for e in self.iter() {
            for v in m[e].iter() {
                d[v] += 1;
            }
        }
        d
    }

    /// Edges of the subset lying inside `a`.
    pub fn induced_count<H: Host + ?Sized>(&self, host: &H, a: VertexSet) -> usize {
        let m = host.edge_masks();
        self.iter().filter(|&e| m[e].is_subset(a)).count()
    }
}

impl FromIterator<usize> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        EdgeSubset::from_unsorted(iter.into_iter().collect())
    }
}

/// Disjoint nonempty blocks covering a ground set. Blocks are kept ordered by
/// their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<VertexSet>,
    ground: VertexSet,
}

impl Partition {
    pub fn new(blocks: Vec<VertexSet>) -> Result<Self> {
        let mut ground = VertexSet::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::MalformedPartition("empty block".into()));
            }
            if b.intersects(ground) {
                return Err(Error::MalformedPartition(format!("block {b} overlaps another block")));
            }
            ground = ground | *b;
        }
        Ok(Self::from_blocks(blocks))
    }

    /// Trusted constructor: blocks must be disjoint and nonempty.
    pub(crate) fn from_blocks(mut blocks: Vec<VertexSet>) -> Self {
        blocks.sort_by_key(|b| b.first());
        let ground = blocks.iter().fold(VertexSet::EMPTY, |a, &b| a | b);
        Partition { blocks, ground }
    }

    pub fn singletons(ground: VertexSet) -> Self {
        Partition { blocks: ground.iter().map(VertexSet::singleton).collect(), ground }
    }

    pub fn trivial(ground: VertexSet) -> Self {
        if ground.is_empty() {
            Partition { blocks: vec![], ground }
        } else {
            Partition { blocks: vec![ground], ground }
        }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, v: usize) -> Option<VertexSet> {
        self.blocks.iter().copied().find(|b| b.contains(v))
    }
}

/// An orientation of a multigraph: arcs as `(tail, head)` in edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn new(g: &MultiGraph, head_of: &[usize]) -> Result<Self> {
        if head_of.len() != g.edge_count() {
            return Err(Error::InvalidInput("one head per edge is required".into()));
        }
        let mut arcs = Vec::with_capacity(head_of.len());
        for (e, &h) in head_of.iter().enumerate() {
            let (u, v) = g.endpoints(e);
            if h == u {
                arcs.push((v, u));
            } else if h == v {
                arcs.push((u, v));
            } else {
                return Err(Error::InvalidInput(format!("head {h} is not an endpoint of edge {e}")));
            }
        }
        Ok(Orientation { n: g.vertex_count(), arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn head_of(&self) -> Vec<usize> {
        self.arcs.iter().map(|a| a.1).collect()
    }

    /// Arcs entering `a`.
    pub fn in_degree(&self, a: VertexSet) -> usize {
        self.arcs.iter().filter(|&&(t, h)| a.contains(h) && !a.contains(t)).count()
    }

    /// Arcs leaving `a`.
    pub fn out_degree(&self, a: VertexSet) -> usize {
        self.arcs.iter().filter(|&&(t, h)| a.contains(t) && !a.contains(h)).count()
    }

    /// The oriented graph as a directed hypergraph of 2-sets.
    pub fn to_directed(&self) -> Hypergraph {
        let hs = self.arcs.iter().map(|&(t, h)| Hyperedge::directed([t, h], h)).collect();
        Hypergraph::new(self.n, hs).expect("valid")
    }
}

/// `e(P)`: edges meeting at least two blocks.
pub fn cross_edges<H: Host + ?Sized>(host: &H, p: &Partition) -> Result<usize> {
    if p.ground() != host.ground() {
        return Err(Error::MalformedPartition(format!(
            "partition covers {} but the host lives on {}",
            p.ground(),
            host.ground()
        )));
    }
    Ok(cross_count(host.edge_masks(), p.blocks()))
}

pub(crate) fn cross_count(masks: &[VertexSet], blocks: &[VertexSet]) -> usize {
    masks.iter().filter(|m| !blocks.iter().any(|b| m.is_subset(*b))).count()
}

/// `e(A)`: edges inside `a`.
pub fn induced_edge_count<H: Host + ?Sized>(host: &H, a: VertexSet) -> usize {
    host.edge_masks().iter().filter(|m| m.is_subset(a)).count()
}

/// `d(A)`: edges meeting both `a` and its complement.
pub fn boundary_count<H: Host + ?Sized>(host: &H, a: VertexSet) -> usize {
    host.edge_masks().iter().filter(|m| m.intersects(a) && !m.is_subset(a)).count()
}

/// `sigma(S)`: sum of `|Z ∩ S| - 1` over edges meeting `s`.
pub fn sigma<H: Host + ?Sized>(host: &H, s: VertexSet) -> usize {
    host.edge_masks()
        .iter()
        .map(|&m| (m & s).len())
        .filter(|&k| k > 0)
        .map(|k| k - 1)
        .sum()
}

/// Local rank on `a`: the largest `|Z \ A| + 1` over edges `Z` meeting `a`
/// (0 when no edge meets `a`).
pub fn local_rank<H: Host + ?Sized>(host: &H, a: VertexSet) -> usize {
    host.edge_masks()
        .iter()
        .filter(|m| m.intersects(a))
        .map(|&m| (m - a).len() + 1)
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn cross_examples() {
        let k4 = MultiGraph::complete(4);
        assert_eq!(cross_edges(&k4, &Partition::singletons(VertexSet::full(4))).unwrap(), 6);
        let p = Partition::new(vec![set(&[0, 1]), set(&[2, 3])]).unwrap();
        assert_eq!(cross_edges(&k4, &p).unwrap(), 4);
        assert_eq!(cross_edges(&k4, &Partition::trivial(VertexSet::full(4))).unwrap(), 0);
        let bad = Partition::new(vec![set(&[0, 1])]).unwrap();
        assert!(matches!(cross_edges(&k4, &bad), Err(Error::MalformedPartition(_))));
        assert!(Partition::new(vec![set(&[0, 1]), set(&[1, 2])]).is_err());
    }

    #[test]
    fn induced_and_boundary_examples() {
        let k4 = MultiGraph::complete(4);
        assert_eq!(induced_edge_count(&k4, set(&[0, 1, 2])), 3);
        assert_eq!(induced_edge_count(&k4, VertexSet::EMPTY), 0);
        let tri2 = MultiGraph::new(3, vec![(0, 1), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(induced_edge_count(&tri2, set(&[0, 1])), 2);
        assert_eq!(boundary_count(&k4, set(&[0])), 3);
        assert_eq!(boundary_count(&MultiGraph::cycle(3), set(&[0, 1])), 2);
        assert_eq!(boundary_count(&k4, VertexSet::full(4)), 0);
    }

    #[test]
    fn restricted_removal_examples() {
        let p = MultiGraph::path(3);
        let r = p.restricted_removal(set(&[1]), &EdgeSubset::empty());
        assert_eq!((r.vertex_count(), r.edge_count()), (3, 0));
        let f = EdgeSubset::new(&p, [0]).unwrap();
        let r = p.restricted_removal(set(&[1]), &f);
        assert_eq!(r.edges(), &[(0, 1)]);
        assert_eq!(p.restricted_removal(VertexSet::EMPTY, &EdgeSubset::empty()), p);
    }

    #[test]
    fn contract_examples() {
        let c3 = MultiGraph::cycle(3).contract(set(&[0, 1])).unwrap();
        assert_eq!((c3.vertex_count(), c3.edge_count()), (2, 2));
        let k4 = MultiGraph::complete(4).contract(set(&[0, 1, 2])).unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (2, 3));
        let same = MultiGraph::complete(4).contract(set(&[2])).unwrap();
        assert_eq!(same, MultiGraph::complete(4));
        let h = Hypergraph::new(4, vec![Hyperedge::undirected([0, 1, 2]), Hyperedge::undirected([0, 1])]).unwrap();
        let c = h.contract(set(&[0, 1])).unwrap();
        assert_eq!(c.edge_count(), 1);
        assert_eq!(c.edge_masks()[0], set(&[0, 1]));
    }

    #[test]
    fn sigma_examples() {
        let c3 = Hypergraph::from_graph(&MultiGraph::cycle(3));
        assert_eq!(sigma(&c3, set(&[0, 1])), 1);
        let z = Hypergraph::new(3, vec![Hyperedge::undirected([0, 1, 2])]).unwrap();
        assert_eq!(sigma(&z, set(&[0, 1])), 1);
        assert_eq!(sigma(&z, VertexSet::EMPTY), 0);
    }

    #[test]
    fn hypergraph_validation() {
        assert!(Hypergraph::new(3, vec![Hyperedge::undirected([0])]).is_err());
        assert!(Hypergraph::new(3, vec![Hyperedge::directed([0, 1], 2)]).is_err());
        assert!(MultiGraph::new(3, vec![(1, 1)]).is_err());
        assert!(MultiGraph::new(3, vec![(1, 3)]).is_err());
    }

    #[test]
    fn orientation_degrees() {
        let g = MultiGraph::cycle(3);
        let o = Orientation::new(&g, &[1, 2, 0]).unwrap();
        for v in 0..3 {
            assert_eq!(o.in_degree(VertexSet::singleton(v)), 1);
            assert_eq!(o.out_degree(VertexSet::singleton(v)), 1);
        }
        assert!(Orientation::new(&g, &[2, 2, 0]).is_err());
    }

    #[test]
    fn local_rank_of_singleton_is_max_edge_size() {
        let h = Hypergraph::new(4, vec![Hyperedge::undirected([0, 1, 2]), Hyperedge::undirected([0, 3])]).unwrap();
        assert_eq!(local_rank(&h, set(&[0])), 3);
        assert_eq!(local_rank(&h, set(&[0, 1])), 2);
    }
}
