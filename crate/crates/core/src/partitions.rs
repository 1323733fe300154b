//! Set-partition enumeration by restricted-growth strings.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Partition;
use crate::vertex_set::VertexSet;

/// Bell numbers, saturating.
pub fn bell(n: usize) -> u64 {
    // Bell triangle.
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let y = next.last().unwrap().saturating_add(x);
            next.push(y);
        }
        row = next;
    }
    row[0]
}

pub(crate) fn check_partition_limit(k: usize, cfg: &Config) -> Result<()> {
    cfg.check_vertices(k)?;
    let b = bell(k);
    if b > cfg.max_partitions {
        return Err(Error::LimitExceeded { what: "partition count", size: b, limit: cfg.max_partitions });
    }
    Ok(())
}

/// Every partition of `ground`, once each, in restricted-growth order.
pub fn enumerate_partitions(ground: VertexSet, cfg: &Config) -> Result<Partitions> {
    check_partition_limit(ground.len(), cfg)?;
    Ok(Partitions { walker: RgsWalker::new(ground) })
}

pub struct Partitions {
    walker: RgsWalker,
}

impl Iterator for Partitions {
    type Item = Partition;
    fn next(&mut self) -> Option<Partition> {
        self.walker.advance().map(|b| Partition::from_blocks(b.to_vec()))
    }
}

/// Allocation-free walker over partitions; `advance` lends the current blocks.
pub(crate) struct RgsWalker {
    verts: Vec<usize>,
    rgs: Vec<usize>,
    blocks: Vec<VertexSet>,
    started: bool,
    done: bool,
}

impl RgsWalker {
    pub(crate) fn new(ground: VertexSet) -> Self {
        let verts = ground.to_vec();
        let k = verts.len();
        RgsWalker { verts, rgs: vec![0; k], blocks: Vec::with_capacity(k), started: false, done: false }
    }

    pub(crate) fn advance(&mut self) -> Option<&[VertexSet]> {
        if self.done {
            return None;
        }
        if self.started && !self.step() {
            self.done = true;
            return None;
        }
        self.started = true;
        self.rebuild();
        Some(&self.blocks)
    }

    fn step(&mut self) -> bool {
        let k = self.rgs.len();
        // Rightmost position that can grow: a[i] <= max(a[0..i]).
        for i in (1..k).rev() {
            let prefix_max = self.rgs[..i].iter().copied().max().unwrap_or(0);
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                for x in &mut self.rgs[i + 1..] {
                    *x = 0;
                }
                return true;
            }
        }
        false
    }

    fn rebuild(&mut self) {
        self.blocks.clear();
        for (i, &b) in self.rgs.iter().enumerate() {
            if b == self.blocks.len() {
                self.blocks.push(VertexSet::EMPTY);
            }
            self.blocks[b].insert(self.verts[i]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let want = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in want.iter().enumerate() {
            assert_eq!(bell(n), b);
        }
    }

    #[test]
    fn counts_match_bell() {
        let cfg = Config::default();
        for n in 0..=8 {
            let parts: Vec<_> = enumerate_partitions(VertexSet::full(n), &cfg).unwrap().collect();
            assert_eq!(parts.len() as u64, bell(n), "n={n}");
            let mut uniq = parts.clone();
            uniq.sort_by_key(|p| p.blocks().iter().map(|b| b.bits()).collect::<Vec<_>>());
            uniq.dedup();
            assert_eq!(uniq.len(), parts.len());
            for p in &parts {
                assert_eq!(p.ground(), VertexSet::full(n));
            }
        }
    }

    #[test]
    fn sparse_ground() {
        let g: VertexSet = [2, 5, 9].into_iter().collect();
        let parts: Vec<_> = enumerate_partitions(g, &Config::default()).unwrap().collect();
        assert_eq!(parts.len(), 5);
        assert_eq!(parts[0].blocks(), &[g]);
    }

    #[test]
    fn limit() {
        let cfg = Config { max_vertices: 4, ..Config::default() };
        assert!(matches!(
            enumerate_partitions(VertexSet::full(5), &cfg),
            Err(Error::LimitExceeded { .. })
        ));
    }
}
