//! Partition-connected spanning subgraphs with degree bounds.
//!
//! Degree targets may be unbounded at some vertices; an unbounded target is
//! resolved as `d_G(v) + 1`, which no spanning subgraph exceeds.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{boundary_count, induced_edge_count, EdgeSubset, EdgeSystem, Host};
use crate::setfn::{ensure, Properties, SetFunction};
use crate::sparse::{bases_containing, check_subset, e_star_unchecked};
use crate::theta::{
    components_unchecked, is_pc_unchecked, is_scaled_pc, restricted_view, scaled_edge_deficiency, theta_unchecked,
    ThetaTable,
};
use crate::vertex_set::VertexSet;
use num_rational::Rational64;
use num_traits::{One, Zero};

/// Per-vertex degree bounds; `None` means unbounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTarget(pub Vec<Option<i64>>);

impl DegreeTarget {
    pub fn finite(h: Vec<i64>) -> Self {
        DegreeTarget(h.into_iter().map(Some).collect())
    }

    pub fn uniform(n: usize, h: i64) -> Self {
        DegreeTarget(vec![Some(h); n])
    }

    pub fn unbounded(n: usize) -> Self {
        DegreeTarget(vec![None; n])
    }

    /// Bounded on `x` by `h`, unbounded elsewhere.
    pub fn on(n: usize, x: VertexSet, h: impl Fn(usize) -> i64) -> Self {
        DegreeTarget((0..n).map(|v| x.contains(v).then(|| h(v))).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `h + d`, keeping unbounded entries unbounded.
    pub fn plus(&self, d: &[usize]) -> Self {
        DegreeTarget(self.0.iter().zip(d).map(|(h, &d)| h.map(|h| h + d as i64)).collect())
    }

    /// Concrete bounds against a host, with `d_G(v) + 1` for unbounded entries.
    pub fn resolve<H: Host + ?Sized>(&self, host: &H) -> Vec<i64> {
        let d = host.degrees();
        self.0.iter().zip(&d).map(|(h, &d)| h.unwrap_or(d as i64 + 1)).collect()
    }

    fn check<H: Host + ?Sized>(&self, host: &H) -> Result<()> {
        if self.0.len() != host.vertex_count() {
            return Err(Error::InvalidInput(format!(
                "degree target has {} entries but the host has {} vertices",
                self.0.len(),
                host.vertex_count()
            )));
        }
        Ok(())
    }
}

/// `te(H, h) = Σ max(0, d_H(v) − h(v))`.
pub fn total_excess<H: Host + ?Sized>(host: &H, sub: &EdgeSubset, target: &DegreeTarget) -> Result<i64> {
    target.check(host)?;
    check_subset(host, sub)?;
    Ok(excess(&sub.degrees(host), &target.resolve(host)))
}

fn excess(d: &[usize], h: &[i64]) -> i64 {
    d.iter().zip(h).map(|(&d, &h)| (d as i64 - h).max(0)).sum()
}

const EXTRACT_FLAGS: Properties = Properties::INTERSECTING_SUPERMODULAR.union(Properties::ELEMENT_SUBADDITIVE);

/// A basis containing `forced` with the least total excess from `target`;
/// ties go to the lexicographically first basis.
pub fn min_excess_basis<H: Host + ?Sized>(
    host: &H,
    l: &SetFunction,
    target: &DegreeTarget,
    forced: &EdgeSubset,
    cfg: &Config,
) -> Result<(EdgeSubset, i64)> {
    target.check(host)?;
    let h = target.resolve(host);
    let mut best: Option<(EdgeSubset, i64)> = None;
    for b in bases_containing(host, l, forced, cfg)? {
        let te = excess(&b.degrees(host), &h);
        if best.as_ref().is_none_or(|(_, t)| te < *t) {
            let done = te == 0;
            best = Some((b, te));
            if done {
                break;
            }
        }
    }
    best.ok_or_else(|| Error::VerificationFailed("no basis contains the forced edges".into()))
}

/// Which degree conditions a structure witness must meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMode {
    /// `S` contains every vertex above target and `d_H ≥ target` on `S`.
    Excess,
    /// `d_H = target` on `S`.
    Equality,
}

/// The smallest `S` (lexicographically first among equals) with
/// `Θ(G \ S) = Θ(H \ S)` and the degree conditions of `mode`. With `forced`
/// given, the removals are `G \ [S, F]` and `H \ [S, F]` instead.
pub fn structure_witness<H: Host + ?Sized>(
    host: &H,
    l: &SetFunction,
    target: &DegreeTarget,
    sub: &EdgeSubset,
    forced: Option<&EdgeSubset>,
    mode: WitnessMode,
    cfg: &Config,
) -> Result<VertexSet> {
    ensure(l, host.vertex_count(), Properties::INTERSECTING_SUPERMODULAR, cfg)?;
    cfg.check_vertices(host.ground().len())?;
    target.check(host)?;
    check_subset(host, sub)?;
    if let Some(f) = forced {
        check_subset(host, f)?;
    }
    let h = target.resolve(host);
    let d = sub.degrees(host);
    let ground = host.ground();
    let over: VertexSet = ground.iter().filter(|&v| d[v] as i64 > h[v]).collect();
    let allowed: VertexSet = ground
        .iter()
        .filter(|&v| match mode {
            WitnessMode::Excess => d[v] as i64 >= h[v],
            WitnessMode::Equality => d[v] as i64 == h[v],
        })
        .collect();
    let required = match mode {
        WitnessMode::Excess => over,
        WitnessMode::Equality => VertexSet::EMPTY,
    };
    if !required.is_subset(allowed) {
        return Err(Error::NoWitness);
    }
    let hsys = EdgeSystem::spanning(host, sub);
    let found = match forced {
        None => {
            let tg = ThetaTable::new(host, l);
            let th = ThetaTable::new(&hsys, l);
            (allowed - required).subsets_by_size().map(|t| t | required).find(|&s| {
                let rest = ground - s;
                tg.theta(tg.compress(rest)) == th.theta(th.compress(rest))
            })
        }
        Some(f) => {
            // H's edge indices refer to the subgraph; map F onto them.
            let f_in_h = EdgeSubset::from_sorted(
                sub.iter().enumerate().filter(|&(_, e)| f.contains(e)).map(|(i, _)| i).collect(),
            );
            (allowed - required).subsets_by_size().map(|t| t | required).find(|&s| {
                theta_unchecked(&restricted_view(host, s, f), l) == theta_unchecked(&restricted_view(&hsys, s, &f_in_h), l)
            })
        }
    };
    found.ok_or(Error::NoWitness)
}

/// Which sufficient condition to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionVariant {
    /// `Θ(G\S) ≤ Σ_S (η − 2l(v)) + l(G) + l(S) − λ(e_G(S) + l(S))`.
    Intro,
    /// `Θ(G\S) < 1 + Σ_S (η − 2l(v)) + l(G) + l(S) − λ(e*_G(S) + l(S))`.
    Sharp,
}

/// Outcome of checking a condition over every `S ⊆ X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionVerdict {
    pub holds: bool,
    pub witness: Option<VertexSet>,
    /// `rhs − lhs` for every set checked, in checking order. The strict
    /// variant needs a positive margin, the other a nonnegative one.
    pub slack: Vec<(VertexSet, Rational64)>,
}

fn check_rationals(n: usize, eta: &[Rational64], lambda: Rational64) -> Result<()> {
    if eta.len() != n {
        return Err(Error::InvalidInput(format!("eta has {} entries but the host has {n} vertices", eta.len())));
    }
    if lambda < Rational64::zero() || lambda > Rational64::one() {
        return Err(Error::InvalidInput(format!("lambda {lambda} is outside [0, 1]")));
    }
    Ok(())
}

/// Check the sufficient condition for every `S ⊆ X`, in order of size then
/// lexicographically; stops at the first violation.
pub fn check_main_condition<H: Host + ?Sized>(
    host: &H,
    l: &SetFunction,
    x: VertexSet,
    eta: &[Rational64],
    lambda: Rational64,
    variant: ConditionVariant,
    cfg: &Config,
) -> Result<ConditionVerdict> {
    ensure(l, host.vertex_count(), EXTRACT_FLAGS, cfg)?;
    cfg.check_vertices(host.ground().len())?;
    check_rationals(host.vertex_count(), eta, lambda)?;
    if !x.is_subset(host.ground()) {
        return Err(Error::InvalidInput(format!("{x} is not inside the ground set")));
    }
    let table = ThetaTable::new(host, l);
    let ground = host.ground();
    let lg = l.value(ground);
    let mut slack = vec![];
    for s in x.subsets_by_size() {
        let theta = table.theta(table.compress(ground - s));
        // S = ∅ asks for partition-connectivity, which e* presupposes.
        let e = if s.is_empty() {
            0
        } else {
            match variant {
                ConditionVariant::Intro => induced_edge_count(host, s),
                ConditionVariant::Sharp => e_star_unchecked(host, l, s),
            }
        };
        let margin = rhs(l, s, eta, lambda, lg, e as i64, variant) - Rational64::from_integer(theta);
        let ok = match variant {
            ConditionVariant::Intro => margin >= Rational64::zero(),
            ConditionVariant::Sharp => margin > Rational64::zero(),
        };
        slack.push((s, margin));
        if !ok {
            return Ok(ConditionVerdict { holds: false, witness: Some(s), slack });
        }
    }
    Ok(ConditionVerdict { holds: true, witness: None, slack })
}

fn rhs(
    l: &SetFunction,
    s: VertexSet,
    eta: &[Rational64],
    lambda: Rational64,
    lg: i64,
    e: i64,
    variant: ConditionVariant,
) -> Rational64 {
    let ls = l.value(s);
    let sum: Rational64 = s.iter().map(|v| eta[v] - Rational64::from_integer(2 * l.vertex_value(v))).sum();
    let base = sum + Rational64::from_integer(lg + ls) - lambda * Rational64::from_integer(e + ls);
    match variant {
        ConditionVariant::Intro => base,
        ConditionVariant::Sharp => base + Rational64::one(),
    }
}

/// `⌈η(v) − λ l(v)⌉` on `x`, unbounded elsewhere.
pub fn ceiling_target(l: &SetFunction, x: VertexSet, eta: &[Rational64], lambda: Rational64) -> DegreeTarget {
    DegreeTarget::on(eta.len(), x, |v| (eta[v] - lambda * Rational64::from_integer(l.vertex_value(v))).ceil().to_integer())
}

/// A basis with `d_H(v) ≤ ⌈η(v) − λ l(v)⌉` on `x`, provided the sharp
/// condition holds.
pub fn extract_bounded<H: Host + ?Sized>(
    host: &H,
    l: &SetFunction,
    x: VertexSet,
    eta: &[Rational64],
    lambda: Rational64,
    cfg: &Config,
) -> Result<EdgeSubset> {
    let verdict = check_main_condition(host, l, x, eta, lambda, ConditionVariant::Sharp, cfg)?;
    if let Some(witness) = verdict.witness {
        return Err(Error::ConditionViolated { witness });
    }
    let target = ceiling_target(l, x, eta, lambda);
    let (basis, te) = min_excess_basis(host, l, &target, &EdgeSubset::empty(), cfg)?;
    if te != 0 {
        return Err(Error::VerificationFailed(format!("condition holds but the best basis has excess {te}")));
    }
    Ok(basis)
}

/// Connectivity assumed by a preset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresetMode {
    /// `kl`-edge-connected with `k ≥ 2`.
    EdgeConnected,
    /// `kl`-partition-connected with `k ≥ 1`.
    PartitionConnected,
}

/// `(η, λ)` for a preset together with the resulting per-vertex bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preset {
    pub eta: Vec<Rational64>,
    pub lambda: Rational64,
    pub bound: Vec<i64>,
}

/// The `(η, λ)` giving the degree bounds for highly connected graphs:
///
/// | mode | X | bound |
/// |---|---|---|
/// | edge | general | `⌈(d − 2l(v))/k⌉ + 2l(v)` |
/// | partition | general | `⌈(d − l(v))/k⌉ + l(v)` |
/// | edge | independent | `⌈d/k⌉ + l(v)` |
/// | partition | independent | `⌈d/k⌉` |
pub fn preset_eta<H: Host + ?Sized>(
    host: &H,
    l: &SetFunction,
    k: Rational64,
    mode: PresetMode,
    independent: Option<VertexSet>,
    cfg: &Config,
) -> Result<Preset> {
    ensure(l, host.vertex_count(), EXTRACT_FLAGS | Properties::NONNEGATIVE, cfg)?;
    cfg.check_vertices(host.ground().len())?;
    let (p, q) = (*k.numer(), *k.denom());
    match mode {
        PresetMode::EdgeConnected => {
            if k < Rational64::from_integer(2) {
                return Err(Error::InvalidInput(format!("k = {k} must be at least 2 in edge-connected mode")));
            }
            if let Some(a) = scaled_edge_deficiency(host, l, p, q) {
                return Err(Error::HypothesisViolated { clause: format!("{k}l-edge-connectivity"), witness: a });
            }
        }
        PresetMode::PartitionConnected => {
            if k < Rational64::one() {
                return Err(Error::InvalidInput(format!("k = {k} must be at least 1 in partition-connected mode")));
            }
            if !is_scaled_pc(host, l, p, q) {
                return Err(Error::HypothesisViolated {
                    clause: format!("{k}l-partition-connectivity"),
                    witness: host.ground(),
                });
            }
        }
    }
    if let Some(x) = independent {
        if let Some(m) = host.edge_masks().iter().find(|m| m.is_subset(x)) {
            return Err(Error::HypothesisViolated { clause: "independence of X".into(), witness: *m });
        }
    }
    let d = host.degrees();
    let lv = |v: usize| Rational64::from_integer(l.vertex_value(v));
    let extra = match mode {
        PresetMode::EdgeConnected => 2,
        PresetMode::PartitionConnected => 1,
    };
    let eta: Vec<Rational64> = (0..host.vertex_count())
        .map(|v| Rational64::from_integer(d[v] as i64) / k + lv(v) * Rational64::from_integer(extra))
        .collect();
    let lambda = if independent.is_some() {
        Rational64::one()
    } else {
        Rational64::from_integer(extra) / k
    };
    let bound = (0..eta.len()).map(|v| (eta[v] - lambda * lv(v)).ceil().to_integer()).collect();
    Ok(Preset { eta, lambda, bound })
}

/// Among spanning subgraphs `H ⊇ forced` with `te(H, target) = 0`, one with
/// the least `Θ_l(H)`. Returns the subgraph and its Θ.
///
/// Depth-first over the unforced edges, adding before skipping, with a
/// branch-and-bound cut: Θ never increases when edges are added, so Θ of the
/// current set plus every remaining edge that still fits bounds each
/// completion from below.
pub fn min_theta_extension<H: Host + ?Sized>(
    host: &H,
    l: &SetFunction,
    target: &DegreeTarget,
    forced: &EdgeSubset,
    cfg: &Config,
) -> Result<(EdgeSubset, i64)> {
    ensure(l, host.vertex_count(), Properties::empty(), cfg)?;
    cfg.check_vertices(host.ground().len())?;
    cfg.check_edges(host.edge_count())?;
    target.check(host)?;
    check_subset(host, forced)?;
    let h = target.resolve(host);
    let mut deg = forced.degrees(host);
    if deg.iter().zip(&h).any(|(&d, &h)| d as i64 > h) {
        return Err(Error::Infeasible);
    }
    let masks = host.edge_masks();
    let free: Vec<usize> = (0..masks.len()).filter(|&e| !forced.contains(e)).collect();
    let floor = theta_unchecked(host, l).max(l.value(host.ground()));
    let mut search = ExtensionSearch {
        host,
        l,
        h: &h,
        free: &free,
        chosen: forced.as_slice().to_vec(),
        best: None,
        floor,
    };
    search.run(0, &mut deg);
    let (set, th) = search.best.expect("the forced set itself is feasible");
    Ok((EdgeSubset::from_unsorted(set), th))
}

struct ExtensionSearch<'a, H: Host + ?Sized> {
    host: &'a H,
    l: &'a SetFunction,
    h: &'a [i64],
    free: &'a [usize],
    chosen: Vec<usize>,
    best: Option<(Vec<usize>, i64)>,
    floor: i64,
}

impl<H: Host + ?Sized> ExtensionSearch<'_, H> {
    fn fits(&self, e: usize, deg: &[usize]) -> bool {
        self.host.edge_masks()[e].iter().all(|v| (deg[v] as i64) < self.h[v])
    }

    fn theta_of(&self, edges: &[usize]) -> i64 {
        let sub = EdgeSubset::from_unsorted(edges.to_vec());
        theta_unchecked(&EdgeSystem::spanning(self.host, &sub), self.l)
    }

    fn done(&self) -> bool {
        self.best.as_ref().is_some_and(|(_, t)| *t <= self.floor)
    }

    fn run(&mut self, i: usize, deg: &mut Vec<usize>) {
        if self.done() {
            return;
        }
        let mut optimistic = self.chosen.clone();
        optimistic.extend(self.free[i..].iter().copied().filter(|&e| self.fits(e, deg)));
        let bound = self.theta_of(&optimistic);
        if self.best.as_ref().is_some_and(|(_, t)| bound >= *t) {
            return;
        }
        if i == self.free.len() || optimistic.len() == self.chosen.len() {
            // Nothing left that fits: the current set is a leaf.
            self.best = Some((self.chosen.clone(), bound));
            return;
        }
        let e = self.free[i];
        let masks = self.host.edge_masks();
        if self.fits(e, deg) {
            for v in masks[e].iter() {
                deg[v] += 1;
            }
            self.chosen.push(e);
            self.run(i + 1, deg);
            self.chosen.pop();
            for v in masks[e].iter() {
                deg[v] -= 1;
            }
        }
        self.run(i + 1, deg);
    }
}

/// Extend `f` to an l-partition-connected `H` with `d_H ≤ h + d_F`, under the
/// toughness hypotheses with parameter `c ≥ 2`:
///
/// * every partition-connected component `C` of `F` has
///   `Σ_C l(v) ≥ c·l(C) − (c−1)/2 · d_F(C)`;
/// * `Θ(G\S) < 1 + Σ_S (c/(2c−2)·h(v) − l(v)/(c−1)) + l(G) + l(S)/(c−1)` for
///   every `S`.
pub fn check_tough_extract<H: Host + ?Sized>(
    host: &H,
    l: &SetFunction,
    h: &[i64],
    f: &EdgeSubset,
    c: Rational64,
    cfg: &Config,
) -> Result<EdgeSubset> {
    ensure(
        l,
        host.vertex_count(),
        Properties::NONINCREASING | Properties::INTERSECTING_SUPERMODULAR | Properties::NONNEGATIVE,
        cfg,
    )?;
    cfg.check_vertices(host.ground().len())?;
    check_subset(host, f)?;
    if h.len() != host.vertex_count() {
        return Err(Error::InvalidInput("one degree bound per vertex is required".into()));
    }
    let two = Rational64::from_integer(2);
    if c < two {
        return Err(Error::InvalidInput(format!("c = {c} must be at least 2")));
    }
    let r = |x: i64| Rational64::from_integer(x);
    let fsys = EdgeSystem::spanning(host, f);
    for block in components_unchecked(&fsys, l)?.partition.blocks() {
        let lhs = r(l.vertex_sum(*block));
        let rhs = c * r(l.value(*block)) - (c - 1) / two * r(boundary_count(&fsys, *block) as i64);
        if lhs < rhs {
            return Err(Error::HypothesisViolated { clause: "component of F".into(), witness: *block });
        }
    }
    let ground = host.ground();
    let table = ThetaTable::new(host, l);
    let lg = l.value(ground);
    for s in ground.subsets_by_size() {
        let theta = r(table.theta(table.compress(ground - s)));
        let sum: Rational64 = s.iter().map(|v| c / (two * c - two) * r(h[v]) - r(l.vertex_value(v)) / (c - 1)).sum();
        let bound = r(1 + lg) + sum + r(l.value(s)) / (c - 1);
        if theta >= bound {
            return Err(Error::HypothesisViolated { clause: "theta bound".into(), witness: s });
        }
    }
    let target = DegreeTarget::finite(h.to_vec()).plus(&f.degrees(host));
    let (sub, _) = min_theta_extension(host, l, &target, f, cfg)?;
    if !is_pc_unchecked(&EdgeSystem::spanning(host, &sub), l) {
        return Err(Error::VerificationFailed("hypotheses hold but the extension is not partition-connected".into()));
    }
    Ok(sub)
}

/// A basis containing `forced` minimizing `(te(·, target_1), …, te(·, target_q))`
/// lexicographically. Targets must be pointwise nonincreasing.
pub fn lex_min_excess<H: Host + ?Sized>(
    host: &H,
    l: &SetFunction,
    forced: &EdgeSubset,
    targets: &[DegreeTarget],
    cfg: &Config,
) -> Result<(EdgeSubset, Vec<i64>)> {
    if targets.is_empty() {
        return Err(Error::InvalidInput("at least one target is required".into()));
    }
    for t in targets {
        t.check(host)?;
    }
    let resolved: Vec<Vec<i64>> = targets.iter().map(|t| t.resolve(host)).collect();
    for (i, w) in targets.windows(2).enumerate() {
        let ordered = w[0].0.iter().zip(&w[1].0).all(|(a, b)| match (a, b) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a >= b,
        });
        if !ordered {
            return Err(Error::InvalidInput(format!("target {} is not pointwise at least target {}", i, i + 1)));
        }
    }
    let mut best: Option<(EdgeSubset, Vec<i64>)> = None;
    for b in bases_containing(host, l, forced, cfg)? {
        let d = b.degrees(host);
        let v: Vec<i64> = resolved.iter().map(|h| excess(&d, h)).collect();
        if best.as_ref().is_none_or(|(_, bv)| v < *bv) {
            best = Some((b, v));
        }
    }
    best.ok_or_else(|| Error::VerificationFailed("no basis contains the forced edges".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiGraph;
    use crate::sparse::enumerate_bases;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn rat(p: i64, q: i64) -> Rational64 {
        Rational64::new(p, q)
    }

    fn c1(n: usize) -> SetFunction {
        SetFunction::constant(n, 1)
    }

    #[test]
    fn excess_examples() {
        let star = MultiGraph::star(3);
        assert_eq!(total_excess(&star, &EdgeSubset::all(&star), &DegreeTarget::uniform(4, 2)).unwrap(), 1);
        assert_eq!(total_excess(&star, &EdgeSubset::all(&star), &DegreeTarget::uniform(4, 3)).unwrap(), 0);
        let c3 = MultiGraph::cycle(3);
        assert_eq!(total_excess(&c3, &EdgeSubset::all(&c3), &DegreeTarget::uniform(3, 1)).unwrap(), 3);
        assert_eq!(total_excess(&c3, &EdgeSubset::all(&c3), &DegreeTarget::unbounded(3)).unwrap(), 0);
    }

    #[test]
    fn min_excess_examples() {
        let cfg = Config::default();
        let c3 = MultiGraph::cycle(3);
        let none = EdgeSubset::empty();
        assert_eq!(min_excess_basis(&c3, &c1(3), &DegreeTarget::uniform(3, 1), &none, &cfg).unwrap().1, 1);
        assert_eq!(min_excess_basis(&c3, &c1(3), &DegreeTarget::uniform(3, 2), &none, &cfg).unwrap().1, 0);
        let k4 = MultiGraph::complete(4);
        assert_eq!(min_excess_basis(&k4, &c1(4), &DegreeTarget::uniform(4, 1), &none, &cfg).unwrap().1, 2);
    }

    #[test]
    fn witness_examples() {
        let cfg = Config::default();
        let k4 = MultiGraph::complete(4);
        // Edges 0-1, 1-2 and 2-3 form a Hamiltonian path.
        let path = EdgeSubset::new(&k4, [0, 3, 5]).unwrap();
        let s = structure_witness(&k4, &c1(4), &DegreeTarget::uniform(4, 2), &path, None, WitnessMode::Excess, &cfg);
        assert_eq!(s.unwrap(), VertexSet::EMPTY);

        let c3 = MultiGraph::cycle(3);
        let p = EdgeSubset::new(&c3, [0, 1]).unwrap();
        let s = structure_witness(&c3, &c1(3), &DegreeTarget::uniform(3, 1), &p, None, WitnessMode::Excess, &cfg);
        assert_eq!(s.unwrap(), set(&[0, 1]));

        let star = MultiGraph::star(3);
        let t = DegreeTarget::finite(star.degrees().iter().map(|&d| d as i64).collect());
        let all = EdgeSubset::all(&star);
        assert_eq!(structure_witness(&star, &c1(4), &t, &all, None, WitnessMode::Excess, &cfg).unwrap(), VertexSet::EMPTY);
    }

    #[test]
    fn condition_examples() {
        let cfg = Config::default();
        let g = MultiGraph::empty(3);
        let eta = vec![rat(3, 1); 3];
        let v = check_main_condition(&g, &c1(3), VertexSet::full(3), &eta, rat(1, 1), ConditionVariant::Sharp, &cfg).unwrap();
        assert_eq!(v.witness, Some(VertexSet::EMPTY));

        let c3 = MultiGraph::cycle(3);
        let v = check_main_condition(&c3, &c1(3), VertexSet::full(3), &eta, rat(1, 1), ConditionVariant::Sharp, &cfg).unwrap();
        assert!(v.holds);
        assert_eq!(v.slack.len(), 8);
    }

    #[test]
    fn extract_examples() {
        let cfg = Config::default();
        let c4 = MultiGraph::cycle(4);
        let eta = vec![rat(3, 1); 4];
        let b = extract_bounded(&c4, &c1(4), VertexSet::full(4), &eta, rat(1, 1), &cfg).unwrap();
        assert_eq!(b.len(), 3);
        assert!(b.degrees(&c4).iter().all(|&d| d <= 2));
        assert!(matches!(
            extract_bounded(&MultiGraph::empty(2), &c1(2), VertexSet::full(2), &[rat(3, 1); 2], rat(1, 1), &cfg),
            Err(Error::ConditionViolated { witness }) if witness.is_empty()
        ));
    }

    #[test]
    fn preset_examples() {
        let cfg = Config::default();
        let k4 = MultiGraph::complete(4);
        let p = preset_eta(&k4, &c1(4), rat(3, 1), PresetMode::EdgeConnected, None, &cfg).unwrap();
        assert_eq!(p.bound, vec![3; 4]);
        let c4 = MultiGraph::cycle(4);
        let p = preset_eta(&c4, &c1(4), rat(1, 1), PresetMode::PartitionConnected, None, &cfg).unwrap();
        assert_eq!(p.bound, vec![2; 4]);
        let p = preset_eta(&k4, &c1(4), rat(2, 1), PresetMode::PartitionConnected, None, &cfg).unwrap();
        assert_eq!(p.bound, vec![2; 4]);
        let h = extract_bounded(&k4, &c1(4), VertexSet::full(4), &p.eta, p.lambda, &cfg).unwrap();
        assert!(h.degrees(&k4).iter().all(|&d| d <= 2));
        // Independent X in C4: {0, 2}; bound ⌈d/k⌉ with k = 1.
        let p = preset_eta(&c4, &c1(4), rat(1, 1), PresetMode::PartitionConnected, Some(set(&[0, 2])), &cfg).unwrap();
        assert_eq!(p.bound[0], 2);
        assert!(preset_eta(&c4, &c1(4), rat(2, 1), PresetMode::PartitionConnected, None, &cfg).is_err());
        assert!(preset_eta(&c4, &c1(4), rat(1, 1), PresetMode::PartitionConnected, Some(set(&[0, 1])), &cfg).is_err());
    }

    #[test]
    fn extension_examples() {
        let cfg = Config::default();
        let g = MultiGraph::cycle(4);
        let t = DegreeTarget::finite(g.degrees().iter().map(|&d| d as i64).collect());
        let (h, th) = min_theta_extension(&g, &c1(4), &t, &EdgeSubset::empty(), &cfg).unwrap();
        assert_eq!(th, 1);
        assert_eq!(h.len(), 4);
        let c3 = MultiGraph::cycle(3);
        let (h, th) = min_theta_extension(&c3, &c1(3), &DegreeTarget::uniform(3, 2), &EdgeSubset::empty(), &cfg).unwrap();
        assert_eq!(th, 1);
        assert!(h.len() >= 2);
        let (h, th) = min_theta_extension(&c3, &c1(3), &DegreeTarget::uniform(3, 0), &EdgeSubset::empty(), &cfg).unwrap();
        assert!(h.is_empty());
        assert_eq!(th, 3);
    }

    #[test]
    fn extension_matches_exhaustive_search() {
        let cfg = Config::default();
        let g = MultiGraph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3), (1, 3)]).unwrap();
        let l = c1(5);
        for h in 0..=3 {
            let t = DegreeTarget::uniform(5, h);
            let forced = EdgeSubset::new(&g, [0]).unwrap();
            let got = min_theta_extension(&g, &l, &t, &forced, &cfg);
            let mut best = None::<i64>;
            for mask in 0u32..1 << 8 {
                let sub: EdgeSubset = (0..8).filter(|e| mask >> e & 1 == 1).collect();
                if !forced.is_subset(&sub) || total_excess(&g, &sub, &t).unwrap() > 0 {
                    continue;
                }
                let th = theta_unchecked(&EdgeSystem::spanning(&g, &sub), &l);
                best = Some(best.map_or(th, |b| b.min(th)));
            }
            match best {
                None => assert!(matches!(got, Err(Error::Infeasible))),
                Some(b) => assert_eq!(got.unwrap().1, b),
            }
        }
    }

    #[test]
    fn tough_examples() {
        let cfg = Config::default();
        let k4 = MultiGraph::complete(4);
        let f = max_tree(&k4);
        let h = check_tough_extract(&k4, &c1(4), &[2; 4], &f, rat(2, 1), &cfg).unwrap();
        assert!(f.is_subset(&h));
        let (d, df) = (h.degrees(&k4), f.degrees(&k4));
        assert!((0..4).all(|v| d[v] <= df[v] + 2));
        // With h ≡ 0 the Θ clause fails at any pair: Θ(K2) = 1 is not below 1.
        assert!(matches!(
            check_tough_extract(&k4, &c1(4), &[0; 4], &f, rat(2, 1), &cfg),
            Err(Error::HypothesisViolated { witness, .. }) if witness.len() == 2
        ));
        // F = one edge leaves two isolated vertices with Σ l(v) = 1 < 2·1 − 1/2·0.
        let c4 = MultiGraph::cycle(4);
        let one = EdgeSubset::new(&c4, [0]).unwrap();
        assert!(matches!(
            check_tough_extract(&c4, &c1(4), &[1; 4], &one, rat(2, 1), &cfg),
            Err(Error::HypothesisViolated { .. })
        ));
    }

    fn max_tree(g: &MultiGraph) -> EdgeSubset {
        crate::sparse::max_sparse(g, &c1(g.vertex_count()), &Config::default()).unwrap()
    }

    #[test]
    fn lex_examples() {
        let cfg = Config::default();
        let c3 = MultiGraph::cycle(3);
        let none = EdgeSubset::empty();
        let (_, v) = lex_min_excess(&c3, &c1(3), &none, &[DegreeTarget::uniform(3, 2), DegreeTarget::uniform(3, 1)], &cfg).unwrap();
        assert_eq!(v, vec![0, 1]);
        let k4 = MultiGraph::complete(4);
        let t = DegreeTarget::uniform(4, 1);
        let (b, v) = lex_min_excess(&k4, &c1(4), &none, std::slice::from_ref(&t), &cfg).unwrap();
        assert_eq!((b, v[0]), min_excess_basis(&k4, &c1(4), &t, &none, &cfg).unwrap());
        assert!(lex_min_excess(&k4, &c1(4), &none, &[DegreeTarget::uniform(4, 1), DegreeTarget::uniform(4, 2)], &cfg).is_err());
        let (_, v) = lex_min_excess(&k4, &c1(4), &none, &[DegreeTarget::uniform(4, 3), DegreeTarget::uniform(4, 3)], &cfg).unwrap();
        assert_eq!(v, vec![0, 0]);
    }

    #[test]
    fn min_excess_matches_enumeration() {
        let cfg = Config::default();
        let g = MultiGraph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)]).unwrap();
        for h in 1..=3 {
            let t = DegreeTarget::uniform(5, h);
            let best = enumerate_bases(&g, &c1(5), &cfg)
                .unwrap()
                .map(|b| total_excess(&g, &b, &t).unwrap())
                .min()
                .unwrap();
            assert_eq!(min_excess_basis(&g, &c1(5), &t, &EdgeSubset::empty(), &cfg).unwrap().1, best);
        }
    }

    #[test]
    fn adding_an_edge_between_slack_endpoints_keeps_excess() {
        let g = MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let t = DegreeTarget::finite(vec![1, 2, 2, 1]);
        let h = EdgeSubset::new(&g, [0, 1, 2]).unwrap();
        let before = total_excess(&g, &h, &t).unwrap();
        let after = total_excess(&g, &h.union(&EdgeSubset::new(&g, [3]).unwrap()), &t).unwrap();
        assert_eq!(before, 2);
        assert_eq!(after, before);
    }
}
