//! Trimming hypergraphs to graphs: each hyperedge of size three or more
//! loses one vertex at a time until only pairs remain.
//!
//! Candidates inside a hyperedge are tried in ascending order with the head
//! excluded. An undirected hyperedge uses its smallest vertex as head.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{cross_count, EdgeSubset, Host, Hyperedge, Hypergraph};
use crate::orient::arc_deficiency;
use crate::partitions::{check_partition_limit, RgsWalker};
use crate::setfn::{ensure, Properties, SetFunction};
use crate::sparse::sparse_unchecked;
use crate::theta::{find_violating_partition, is_pc_unchecked};
use crate::vertex_set::VertexSet;

fn nominal_head(z: &Hyperedge) -> usize {
    z.head.or(z.vertices.first()).expect("hyperedges are nonempty")
}

fn candidates(z: &Hyperedge) -> impl Iterator<Item = usize> {
    let head = nominal_head(z);
    z.vertices.without(head).iter()
}

fn shrunk(z: &Hyperedge, x: usize) -> Hyperedge {
    Hyperedge::new(z.vertices.without(x), z.head)
}

fn next_large(h: &Hypergraph) -> Option<usize> {
    h.hyperedges().iter().position(|z| z.vertices.len() >= 3)
}

const TRIM_FLAGS: Properties = Properties::INTERSECTING_SUPERMODULAR.union(Properties::WEAKLY_SUBADDITIVE);

/// Trim to an l-partition-connected graph. When dropping the first candidate
/// `x` breaks partition-connectivity, a tight partition with a block `X`
/// and `Z \ X = {x}` is found and a non-head vertex of `Z ∩ X` is dropped
/// instead.
pub fn trim_pc(h: &Hypergraph, l: &SetFunction, cfg: &Config) -> Result<Hypergraph> {
    ensure(l, h.vertex_count(), TRIM_FLAGS, cfg)?;
    cfg.check_vertices(h.vertex_count())?;
    if let Some(witness) = find_violating_partition(h, l, cfg)? {
        return Err(Error::NotPartitionConnected { witness });
    }
    let mut cur = h.clone();
    while let Some(i) = next_large(&cur) {
        let z = cur.hyperedges()[i];
        let x = candidates(&z).next().expect("size at least three");
        let before = cur.clone();
        cur.replace(i, shrunk(&z, x));
        if is_pc_unchecked(&cur, l) {
            continue;
        }
        let tight = tight_block(&before, l, z.vertices, x, cfg)?.ok_or_else(|| {
            Error::VerificationFailed(format!("no tight partition separates vertex {x} from hyperedge {i}"))
        })?;
        let head = nominal_head(&z);
        let y = (z.vertices & tight).without(head).first().expect("the block holds two vertices of Z");
        cur = before;
        cur.replace(i, shrunk(&z, y));
        if !is_pc_unchecked(&cur, l) {
            return Err(Error::VerificationFailed(format!("dropping vertex {y} from hyperedge {i} broke connectivity")));
        }
    }
    Ok(cur)
}

/// A block `X` of a partition with `e(P) = Σ l(A) − l(V)` and `Z \ X = {x}`.
fn tight_block(h: &Hypergraph, l: &SetFunction, z: VertexSet, x: usize, cfg: &Config) -> Result<Option<VertexSet>> {
    let ground = h.ground();
    check_partition_limit(ground.len(), cfg)?;
    let target = -l.value(ground);
    let masks = h.edge_masks();
    let want = z.without(x);
    let mut walker = RgsWalker::new(ground);
    while let Some(blocks) = walker.advance() {
        let Some(&b) = blocks.iter().find(|b| want.is_subset(**b) && !b.contains(x)) else {
            continue;
        };
        let slack = cross_count(masks, blocks) as i64 - blocks.iter().map(|&a| l.value(a)).sum::<i64>();
        if slack == target {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

/// Trim an l-sparse hypergraph to an l-sparse graph. Of any two candidates
/// at most one fails, so the search per hyperedge is short.
pub fn trim_sparse(h: &Hypergraph, l: &SetFunction, cfg: &Config) -> Result<Hypergraph> {
    ensure(l, h.vertex_count(), TRIM_FLAGS, cfg)?;
    cfg.check_vertices(h.vertex_count())?;
    if !sparse_unchecked(h, &EdgeSubset::all(h), l) {
        return Err(Error::NotSparse);
    }
    let mut cur = h.clone();
    while let Some(i) = next_large(&cur) {
        let z = cur.hyperedges()[i];
        let mut done = false;
        for x in candidates(&z) {
            let mut next = cur.clone();
            next.replace(i, shrunk(&z, x));
            if sparse_unchecked(&next, &EdgeSubset::all(&next), l) {
                cur = next;
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::VerificationFailed(format!("no vertex of hyperedge {i} can be dropped")));
        }
    }
    Ok(cur)
}

/// Trim a directed hypergraph to an ℓ-arc-connected directed graph. Needs
/// `ℓ(∅) = ℓ(V) = 0` and ℓ positively intersecting supermodular.
pub fn trim_arc(h: &Hypergraph, ell: &SetFunction, cfg: &Config) -> Result<Hypergraph> {
    ensure(ell, h.vertex_count(), Properties::POSITIVELY_INTERSECTING_SUPERMODULAR, cfg)?;
    if !h.is_directed() {
        return Err(Error::InvalidInput("every hyperedge needs a head".into()));
    }
    if ell.value(h.ground()) != 0 {
        return Err(Error::InvalidSetFunction("the function must vanish on the whole vertex set".into()));
    }
    if let Some(witness) = arc_deficiency(h, ell, cfg)? {
        return Err(Error::NotArcConnected { witness });
    }
    let mut cur = h.clone();
    while let Some(i) = next_large(&cur) {
        let z = cur.hyperedges()[i];
        let mut done = false;
        for x in candidates(&z) {
            let mut next = cur.clone();
            next.replace(i, shrunk(&z, x));
            if arc_deficiency(&next, ell, cfg)?.is_none() {
                cur = next;
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::VerificationFailed(format!("no vertex of hyperedge {i} can be dropped")));
        }
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiGraph;

    fn c1(n: usize) -> SetFunction {
        SetFunction::constant(n, 1)
    }

    fn cfg() -> Config {
        Config::default()
    }

    fn pairs(h: &Hypergraph) -> Vec<Vec<usize>> {
        h.hyperedges().iter().map(|z| z.vertices.to_vec()).collect()
    }

    #[test]
    fn trim_pc_examples() {
        let z = Hyperedge::undirected([0, 1, 2]);
        let h = Hypergraph::new(3, vec![z, z]).unwrap();
        let t = trim_pc(&h, &c1(3), &cfg()).unwrap();
        assert!(t.is_graph());
        assert!(is_pc_unchecked(&t, &c1(3)));
        // The first shrink drops 1; the second would disconnect vertex 1, so
        // the tight partition {{0, 2}, {1}} sends the drop to vertex 2.
        assert_eq!(pairs(&t), vec![vec![0, 2], vec![0, 1]]);
        let k4 = Hypergraph::from_graph(&MultiGraph::complete(4));
        assert_eq!(trim_pc(&k4, &c1(4), &cfg()).unwrap(), k4);
        let lone = Hypergraph::new(4, vec![Hyperedge::undirected([0, 1, 2])]).unwrap();
        assert!(matches!(trim_pc(&lone, &c1(4), &cfg()), Err(Error::NotPartitionConnected { .. })));
    }

    #[test]
    fn trim_pc_keeps_heads() {
        let h = Hypergraph::new(3, vec![Hyperedge::directed([0, 1, 2], 1), Hyperedge::directed([0, 1, 2], 1)]).unwrap();
        let t = trim_pc(&h, &c1(3), &cfg()).unwrap();
        assert!(t.hyperedges().iter().all(|z| z.head == Some(1) && z.vertices.contains(1)));
        assert!(is_pc_unchecked(&t, &c1(3)));
    }

    #[test]
    fn trim_sparse_examples() {
        let h = Hypergraph::new(3, vec![Hyperedge::directed([0, 1, 2], 0)]).unwrap();
        let t = trim_sparse(&h, &c1(3), &cfg()).unwrap();
        assert_eq!(pairs(&t), vec![vec![0, 2]]);
        let h = Hypergraph::new(4, vec![Hyperedge::directed([0, 1, 2], 0), Hyperedge::directed([0, 1, 3], 3)]).unwrap();
        let t = trim_sparse(&h, &c1(4), &cfg()).unwrap();
        assert!(t.is_graph());
        assert!(sparse_unchecked(&t, &EdgeSubset::all(&t), &c1(4)));
        assert_eq!(t.hyperedges()[1].head, Some(3));
        let g = Hypergraph::from_graph(&MultiGraph::path(4));
        assert_eq!(trim_sparse(&g, &c1(4), &cfg()).unwrap(), g);
        let dense = Hypergraph::new(3, vec![Hyperedge::undirected([0, 1, 2]); 3]).unwrap();
        assert!(matches!(trim_sparse(&dense, &c1(3), &cfg()), Err(Error::NotSparse)));
    }

    #[test]
    fn trim_arc_examples() {
        let ell = SetFunction::vertex_bulk(4, 1, 0);
        // Cyclic hyperedges {i, i+1, i+2} with head i+1.
        let h = Hypergraph::new(4, (0..4).map(|i| Hyperedge::directed([i, (i + 1) % 4, (i + 2) % 4], (i + 1) % 4)).collect())
            .unwrap();
        let t = trim_arc(&h, &ell, &cfg()).unwrap();
        assert!(t.is_graph());
        assert!(arc_deficiency(&t, &ell, &cfg()).unwrap().is_none());
        let g = Hypergraph::new(3, (0..3).map(|i| Hyperedge::directed([i, (i + 1) % 3], (i + 1) % 3)).collect()).unwrap();
        assert_eq!(trim_arc(&g, &SetFunction::vertex_bulk(3, 1, 0), &cfg()).unwrap(), g);
        let zero = SetFunction::constant(4, 0);
        assert!(trim_arc(&h, &zero, &cfg()).unwrap().is_graph());
    }
}
