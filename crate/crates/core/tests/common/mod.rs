#![allow(dead_code)]

use partition_forge::{Hyperedge, Hypergraph, MultiGraph, SetFunction, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_multigraph(rng: &mut impl Rng, n: usize, m: usize) -> MultiGraph {
    let mut edges = vec![];
    while n >= 2 && edges.len() < m {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.push((u.min(v), u.max(v)));
        }
    }
    MultiGraph::new(n, edges).unwrap()
}

pub fn random_hypergraph(rng: &mut impl Rng, n: usize, m: usize, rank: usize) -> Hypergraph {
    let mut zs = vec![];
    while zs.len() < m {
        let size = rng.gen_range(2..=rank.min(n));
        let mut z = VertexSet::EMPTY;
        while z.len() < size {
            z.insert(rng.gen_range(0..n));
        }
        let head = if rng.gen_bool(0.5) { Some(z.to_vec()[rng.gen_range(0..size)]) } else { None };
        zs.push(Hyperedge::new(z, head));
    }
    Hypergraph::new(n, zs).unwrap()
}

/// All pairs `(u, v)` with `u < v < n`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every loopless multigraph on `n` vertices with at most `max_edges`
/// edges, as sorted multisets of pairs.
pub fn all_multigraphs(n: usize, max_edges: usize) -> Vec<MultiGraph> {
    let ps = pairs(n);
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(ps: &[(usize, usize)], start: usize, left: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for i in start..ps.len() {
            cur.push(ps[i]);
            rec(ps, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut lists = vec![];
    rec(&ps, 0, max_edges, &mut cur, &mut lists);
    for l in lists {
        out.push(MultiGraph::new(n, l).unwrap());
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism classes of [`all_multigraphs`], one representative each.
pub fn multigraphs_up_to_isomorphism(n: usize, max_edges: usize) -> Vec<MultiGraph> {
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    all_multigraphs(n, max_edges)
        .into_iter()
        .filter(|g| {
            let key = perms
                .iter()
                .map(|p| {
                    let mut es: Vec<(usize, usize)> = g
                        .edges()
                        .iter()
                        .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                        .collect();
                    es.sort_unstable();
                    es
                })
                .min()
                .unwrap();
            seen.insert(key)
        })
        .collect()
}

pub fn c(n: usize, m: i64) -> SetFunction {
    SetFunction::constant(n, m)
}
