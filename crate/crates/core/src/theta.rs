//! The measure Θ_l, the partition-connectivity predicate and the
//! partition-connected components.
//!
//! The fast path is a dynamic program over subsets of the ground set:
//! with `w(A) = l(A) + e(A)`, `Θ(host[C]) = max_P Σ w(A) − e(C)` over
//! partitions `P` of `C`, so a single `O(3^k)` pass gives Θ of every induced
//! sub-host at once. `theta_oracle` enumerates partitions directly.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{cross_count, EdgeSubset, EdgeSystem, Host, Partition};
use crate::partitions::{check_partition_limit, RgsWalker};
use crate::setfn::{ensure, Properties, SetFunction};
use crate::vertex_set::VertexSet;

/// The partition into partition-connected components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub partition: Partition,
    pub theta_value: i64,
}

/// Θ by brute force over every partition of the ground set.
pub fn theta_oracle<H: Host + ?Sized>(host: &H, l: &SetFunction, cfg: &Config) -> Result<i64> {
    ensure(l, host.vertex_count(), Properties::empty(), cfg)?;
    let ground = host.ground();
    check_partition_limit(ground.len(), cfg)?;
    if ground.is_empty() {
        return Ok(0);
    }
    let masks = host.edge_masks();
    let mut walker = RgsWalker::new(ground);
    let mut best = i64::MIN;
    while let Some(blocks) = walker.advance() {
        let v = blocks.iter().map(|&b| l.value(b)).sum::<i64>() - cross_count(masks, blocks) as i64;
        best = best.max(v);
    }
    Ok(best)
}

/// Θ_l of the host.
pub fn theta<H: Host + ?Sized>(host: &H, l: &SetFunction, cfg: &Config) -> Result<i64> {
    ensure(l, host.vertex_count(), Properties::empty(), cfg)?;
    cfg.check_vertices(host.ground().len())?;
    Ok(theta_unchecked(host, l))
}

/// Whether the host is l-partition-connected, i.e. `Θ_l = l(V)`.
pub fn is_pc<H: Host + ?Sized>(host: &H, l: &SetFunction, cfg: &Config) -> Result<bool> {
    ensure(l, host.vertex_count(), Properties::empty(), cfg)?;
    cfg.check_vertices(host.ground().len())?;
    Ok(is_pc_unchecked(host, l))
}

/// A partition `P` with `e(P) < Σ l(A) − l(V)`, if any. The partition
/// returned attains Θ.
pub fn find_violating_partition<H: Host + ?Sized>(
    host: &H,
    l: &SetFunction,
    cfg: &Config,
) -> Result<Option<Partition>> {
    ensure(l, host.vertex_count(), Properties::empty(), cfg)?;
    cfg.check_vertices(host.ground().len())?;
    let t = ThetaTable::new(host, l);
    let full = t.full();
    if t.is_pc(full) {
        return Ok(None);
    }
    Ok(Some(t.optimal_partition(full)))
}

/// `Θ_l(host \ S)`: the sub-host induced on the complement of `s`.
pub fn theta_without<H: Host + ?Sized>(host: &H, l: &SetFunction, s: VertexSet, cfg: &Config) -> Result<i64> {
    theta(&EdgeSystem::without(host, s), l, cfg)
}

/// `Θ_l(host \ [S, F])`: edges touching `s` are removed unless they are in
/// `f`; the vertices of `s` stay.
pub fn theta_restricted<H: Host + ?Sized>(
    host: &H,
    l: &SetFunction,
    s: VertexSet,
    f: &EdgeSubset,
    cfg: &Config,
) -> Result<i64> {
    if let Some(&e) = f.as_slice().last() {
        if e >= host.edge_count() {
            return Err(Error::InvalidInput(format!("edge index {e} out of range")));
        }
    }
    theta(&restricted_view(host, s, f), l, cfg)
}

pub(crate) fn restricted_view<H: Host + ?Sized>(host: &H, s: VertexSet, f: &EdgeSubset) -> EdgeSystem {
    let masks = host.edge_masks();
    let kept = (0..masks.len()).filter(|&e| !masks[e].intersects(s) || f.contains(e)).collect();
    EdgeSystem::spanning(host, &EdgeSubset::from_sorted(kept))
}

/// The partition-connected components. Requires `l` intersecting
/// supermodular; blocks are then unique.
pub fn pc_components<H: Host + ?Sized>(host: &H, l: &SetFunction, cfg: &Config) -> Result<ComponentDecomposition> {
    ensure(l, host.vertex_count(), Properties::INTERSECTING_SUPERMODULAR, cfg)?;
    cfg.check("component vertex count", host.ground().len(), cfg.max_component_vertices)?;
    components_unchecked(host, l)
}

pub(crate) fn theta_unchecked<H: Host + ?Sized>(host: &H, l: &SetFunction) -> i64 {
    let t = ThetaTable::new(host, l);
    let full = t.full();
    let th = t.theta(full);
    debug_assert!(th >= l.value(host.ground()));
    th
}

pub(crate) fn is_pc_unchecked<H: Host + ?Sized>(host: &H, l: &SetFunction) -> bool {
    let t = ThetaTable::new(host, l);
    t.is_pc(t.full())
}

pub(crate) fn components_unchecked<H: Host + ?Sized>(host: &H, l: &SetFunction) -> Result<ComponentDecomposition> {
    let t = ThetaTable::new(host, l);
    let full = t.full();
    let k = t.verts.len();
    // The union of all partition-connected sets through v is itself
    // partition-connected when l is intersecting supermodular.
    let mut reach = vec![0usize; k];
    for c in 1..=full {
        if t.is_pc(c) {
            for (i, r) in reach.iter_mut().enumerate() {
                if c >> i & 1 == 1 {
                    *r |= c;
                }
            }
        }
    }
    let mut blocks = vec![];
    let mut seen = 0usize;
    for i in 0..k {
        if seen >> i & 1 == 1 {
            continue;
        }
        let b = reach[i];
        if b & seen != 0 || !t.is_pc(b) {
            return Err(Error::VerificationFailed(format!(
                "partition-connected sets through vertex {} do not close under union",
                t.verts[i]
            )));
        }
        seen |= b;
        blocks.push(b);
    }
    let theta_value = blocks.iter().map(|&b| t.l[b]).sum::<i64>() - (t.e_in[full] - blocks.iter().map(|&b| t.e_in[b]).sum::<i64>());
    debug_assert_eq!(theta_value, t.theta(full));
    let partition = Partition::from_blocks(blocks.into_iter().map(|b| t.expand(b)).collect());
    Ok(ComponentDecomposition { partition, theta_value })
}

/// Whether the host is `(p/q)·l`-partition-connected: `q·e(P) ≥ p·(Σ l(A) − l(V))`
/// for every partition.
pub(crate) fn is_scaled_pc<H: Host + ?Sized>(host: &H, l: &SetFunction, p: i64, q: i64) -> bool {
    let t = ThetaTable::weighted(host, |a| p * l.value(a), q);
    t.is_pc(t.full())
}

/// Whether `q·d(A) ≥ p·l(A)` for every nonempty proper subset `A` of the
/// ground, i.e. the host is `(p/q)·l`-edge-connected. Returns the first
/// deficient set.
pub(crate) fn scaled_edge_deficiency<H: Host + ?Sized>(host: &H, l: &SetFunction, p: i64, q: i64) -> Option<VertexSet> {
    let g = host.ground();
    g.subsets()
        .filter(|&a| !a.is_empty() && a != g)
        .find(|&a| (q * crate::graph::boundary_count(host, a) as i64) < p * l.value(a))
}

/// Θ of every induced sub-host, indexed by compressed subsets of the ground.
pub(crate) struct ThetaTable {
    verts: Vec<usize>,
    exp: Vec<VertexSet>,
    l: Vec<i64>,
    e_in: Vec<i64>,
    best: Vec<i64>,
    choice: Vec<usize>,
}

impl ThetaTable {
    pub(crate) fn new<H: Host + ?Sized>(host: &H, l: &SetFunction) -> Self {
        Self::weighted(host, |a| l.value(a), 1)
    }

    /// Θ for an arbitrary set function `f` with every edge counted `weight`
    /// times.
    pub(crate) fn weighted<H: Host + ?Sized>(host: &H, f: impl Fn(VertexSet) -> i64, weight: i64) -> Self {
        let ground = host.ground();
        let verts = ground.to_vec();
        let k = verts.len();
        let size = 1usize << k;
        let mut pos = [usize::MAX; 64];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut exp = vec![VertexSet::EMPTY; size];
        for c in 1..size {
            let low = c.trailing_zeros() as usize;
            exp[c] = exp[c & (c - 1)].with(verts[low]);
        }
        let lv: Vec<i64> = exp.iter().map(|&a| f(a)).collect();
        let mut e_in = vec![0i64; size];
        for m in host.edge_masks() {
            if !m.is_subset(ground) {
                continue;
            }
            let c = m.iter().fold(0usize, |c, v| c | 1 << pos[v]);
            e_in[c] += weight;
        }
        for i in 0..k {
            for c in 0..size {
                if c >> i & 1 == 1 {
                    e_in[c] += e_in[c ^ 1 << i];
                }
            }
        }
        let mut best = vec![0i64; size];
        let mut choice = vec![0usize; size];
        for c in 1..size {
            let low = c & c.wrapping_neg();
            let rest = c ^ low;
            let (mut b, mut arg) = (i64::MIN, 0);
            let mut s = rest;
            loop {
                let a = s | low;
                let v = lv[a] + e_in[a] + best[c ^ a];
                // Ties go to the larger first block, so the whole set wins
                // whenever it is optimal.
                if v > b {
                    b = v;
                    arg = a;
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & rest;
            }
            best[c] = b;
            choice[c] = arg;
        }
        ThetaTable { verts, exp, l: lv, e_in, best, choice }
    }

    pub(crate) fn full(&self) -> usize {
        (1usize << self.verts.len()) - 1
    }

    pub(crate) fn expand(&self, c: usize) -> VertexSet {
        self.exp[c]
    }

    pub(crate) fn compress(&self, a: VertexSet) -> usize {
        self.verts.iter().enumerate().filter(|(_, &v)| a.contains(v)).fold(0, |c, (i, _)| c | 1 << i)
    }

    pub(crate) fn theta(&self, c: usize) -> i64 {
        self.best[c] - self.e_in[c]
    }

    pub(crate) fn is_pc(&self, c: usize) -> bool {
        self.best[c] == self.l[c] + self.e_in[c]
    }

    /// A partition of `c` attaining Θ of the induced sub-host.
    pub(crate) fn optimal_partition(&self, mut c: usize) -> Partition {
        let mut blocks = vec![];
        while c != 0 {
            let a = self.choice[c];
            blocks.push(self.exp[a]);
            c ^= a;
        }
        Partition::from_blocks(blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Hyperedge, Hypergraph, MultiGraph};
    use crate::partitions::enumerate_partitions;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn c(n: usize, m: i64) -> SetFunction {
        SetFunction::constant(n, m)
    }

    #[test]
    fn oracle_examples() {
        let cfg = Config::default();
        assert_eq!(theta_oracle(&MultiGraph::empty(1), &c(1, 1), &cfg).unwrap(), 1);
        assert_eq!(theta_oracle(&MultiGraph::empty(2), &c(2, 1), &cfg).unwrap(), 2);
        assert_eq!(theta_oracle(&MultiGraph::complete(4), &c(4, 2), &cfg).unwrap(), 2);
        assert_eq!(theta_oracle(&MultiGraph::empty(0), &c(0, 1), &cfg).unwrap(), 0);
        assert_eq!(theta(&MultiGraph::empty(0), &c(0, 1), &cfg).unwrap(), 0);
    }

    #[test]
    fn component_examples() {
        let cfg = Config::default();
        let p = pc_components(&MultiGraph::path(3), &c(3, 1), &cfg).unwrap();
        assert_eq!(p.partition.blocks(), &[set(&[0, 1, 2])]);
        let two = MultiGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let p = pc_components(&two, &c(4, 1), &cfg).unwrap();
        assert_eq!(p.partition.blocks(), &[set(&[0, 1]), set(&[2, 3])]);
        assert_eq!(p.theta_value, 2);
        let p = pc_components(&MultiGraph::complete(4), &SetFunction::vertex_bulk(4, 2, 1), &cfg).unwrap();
        assert_eq!(p.partition.len(), 4);
        assert_eq!(p.theta_value, 2);
    }

    #[test]
    fn theta_examples() {
        let cfg = Config::default();
        assert_eq!(theta(&MultiGraph::star(3), &c(4, 1), &cfg).unwrap(), 1);
        assert_eq!(theta(&MultiGraph::empty(2), &c(2, 1), &cfg).unwrap(), 2);
        assert_eq!(theta(&MultiGraph::complete(4), &SetFunction::vertex_bulk(4, 2, 1), &cfg).unwrap(), 2);
        assert!(is_pc(&MultiGraph::cycle(5), &c(5, 1), &cfg).unwrap());
        assert!(!is_pc(&MultiGraph::empty(2), &c(2, 1), &cfg).unwrap());
        assert!(is_pc(&MultiGraph::complete(4), &c(4, 2), &cfg).unwrap());
    }

    #[test]
    fn removal_examples() {
        let cfg = Config::default();
        let p3 = MultiGraph::path(3);
        assert_eq!(theta_without(&p3, &c(3, 1), set(&[1]), &cfg).unwrap(), 2);
        assert_eq!(theta_without(&MultiGraph::complete(4), &c(4, 1), set(&[0]), &cfg).unwrap(), 1);
        assert_eq!(theta_without(&MultiGraph::star(3), &c(4, 1), set(&[0]), &cfg).unwrap(), 3);
        assert_eq!(theta_restricted(&p3, &c(3, 1), set(&[1]), &EdgeSubset::empty(), &cfg).unwrap(), 3);
        let k4 = MultiGraph::complete(4);
        let all = EdgeSubset::all(&k4);
        assert_eq!(theta_restricted(&k4, &c(4, 1), set(&[0, 2]), &all, &cfg).unwrap(), 1);
        assert_eq!(theta_restricted(&k4, &c(4, 1), VertexSet::EMPTY, &EdgeSubset::empty(), &cfg).unwrap(), 1);
    }

    #[test]
    fn violating_partition_attains_theta() {
        let cfg = Config::default();
        let t = MultiGraph::path(4);
        let l = c(4, 2);
        let p = find_violating_partition(&t, &l, &cfg).unwrap().unwrap();
        let val = p.blocks().iter().map(|&b| l.value(b)).sum::<i64>() - crate::graph::cross_edges(&t, &p).unwrap() as i64;
        assert_eq!(val, theta_oracle(&t, &l, &cfg).unwrap());
        assert!(find_violating_partition(&MultiGraph::complete(4), &l, &cfg).unwrap().is_none());
    }

    #[test]
    fn hypergraph_theta() {
        let cfg = Config::default();
        let h = Hypergraph::new(3, vec![Hyperedge::undirected([0, 1, 2])]).unwrap();
        // One hyperedge joins all three blocks of the singleton partition once.
        assert_eq!(theta(&h, &c(3, 1), &cfg).unwrap(), 2);
        assert_eq!(theta_oracle(&h, &c(3, 1), &cfg).unwrap(), 2);
        let h2 = Hypergraph::new(3, vec![Hyperedge::undirected([0, 1, 2]); 2]).unwrap();
        assert!(is_pc(&h2, &c(3, 1), &cfg).unwrap());
    }

    #[test]
    fn table_matches_enumeration_on_every_subset() {
        let cfg = Config::default();
        let g = MultiGraph::new(5, vec![(0, 1), (1, 2), (2, 0), (3, 4), (1, 3)]).unwrap();
        let l = SetFunction::vertex_bulk(5, 2, 1);
        let t = ThetaTable::new(&g, &l);
        for a in VertexSet::full(5).subsets() {
            let sub = EdgeSystem::induced(&g, a);
            let mut best = if a.is_empty() { 0 } else { i64::MIN };
            if !a.is_empty() {
                for p in enumerate_partitions(a, &cfg).unwrap() {
                    let v = p.blocks().iter().map(|&b| l.value(b)).sum::<i64>()
                        - crate::graph::cross_edges(&sub, &p).unwrap() as i64;
                    best = best.max(v);
                }
            }
            assert_eq!(t.theta(t.compress(a)), best, "{a}");
        }
    }

    #[test]
    fn components_need_intersecting_supermodularity() {
        let cfg = Config::default();
        let bad = SetFunction::vertex_bulk(3, 1, 2);
        assert!(matches!(
            pc_components(&MultiGraph::path(3), &bad, &cfg),
            Err(Error::PropertyViolated { .. })
        ));
    }
}
