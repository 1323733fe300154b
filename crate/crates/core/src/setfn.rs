//! Integer set functions with declared structural flags and exhaustive
//! validation.
//!
//! Two flags used by the minimal arc-connected subdigraph have no standard
//! definition. They are implemented as:
//!
//! * `ELEMENT_NONINCREASING`: `l({v}) >= l(A)` for every `A` containing `v`;
//! * `POSITIVELY_INTERSECTING_SUPERMODULAR`: the supermodular inequality on
//!   intersecting pairs with `l(A) > 0` and `l(B) > 0`.
//!
//! Both are interpretations.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use bitflags::bitflags;

bitflags! {
    #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
    pub struct Properties: u16 {
        const INTERSECTING_SUPERMODULAR = 1;
        const SUPERMODULAR = 1 << 1;
        const SUBADDITIVE = 1 << 2;
        const ELEMENT_SUBADDITIVE = 1 << 3;
        const WEAKLY_SUBADDITIVE = 1 << 4;
        const NONINCREASING = 1 << 5;
        const NONNEGATIVE = 1 << 6;
        const POSITIVELY_INTERSECTING_SUPERMODULAR = 1 << 7;
        const ELEMENT_NONINCREASING = 1 << 8;
    }
}

const NAMES: [(Properties, &str); 9] = [
    (Properties::INTERSECTING_SUPERMODULAR, "intersecting-supermodular"),
    (Properties::SUPERMODULAR, "supermodular"),
    (Properties::SUBADDITIVE, "subadditive"),
    (Properties::ELEMENT_SUBADDITIVE, "element-subadditive"),
    (Properties::WEAKLY_SUBADDITIVE, "weakly-subadditive"),
    (Properties::NONINCREASING, "nonincreasing"),
    (Properties::NONNEGATIVE, "nonnegative"),
    (Properties::POSITIVELY_INTERSECTING_SUPERMODULAR, "positively-intersecting-supermodular"),
    (Properties::ELEMENT_NONINCREASING, "element-nonincreasing"),
];

impl Properties {
    /// Kebab-case name of a single flag.
    pub fn label(self) -> Option<&'static str> {
        NAMES.iter().find(|(p, _)| *p == self).map(|(_, s)| *s)
    }

    pub fn from_label(s: &str) -> Option<Properties> {
        NAMES.iter().find(|(_, n)| *n == s).map(|(p, _)| *p)
    }

    /// Names of all set flags, in declaration order.
    pub fn labels(self) -> Vec<&'static str> {
        NAMES.iter().filter(|(p, _)| self.contains(*p)).map(|(_, s)| *s).collect()
    }

    /// Single flags, in declaration order.
    pub fn each() -> impl Iterator<Item = Properties> {
        NAMES.iter().map(|(p, _)| *p)
    }
}

const MAX_TABLE_ARITY: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    /// `m` on every nonempty set.
    Constant(i64),
    /// `vertex` on singletons, `bulk` on sets of size at least two.
    VertexBulk { vertex: i64, bulk: i64 },
    /// Per-vertex values on singletons, `bulk` on larger sets.
    PerVertex { singles: Vec<i64>, bulk: i64 },
    /// Values indexed by mask.
    Table(Vec<i64>),
    Sum(Vec<SetFunction>),
    Scale(i64, Box<SetFunction>),
    /// `l(A) - sum of r(v) over A`.
    RootedShift(Box<SetFunction>, Vec<i64>),
}

/// An integer-valued function on subsets of `0..n` with `l(∅) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunction {
    n: usize,
    kind: Kind,
    flags: Properties,
}

impl SetFunction {
    pub fn constant(n: usize, m: i64) -> Self {
        use Properties as P;
        let flags = if m >= 0 {
            let mut f = P::all() - P::SUPERMODULAR;
            if m == 0 {
                f |= P::SUPERMODULAR;
            }
            f
        } else {
            P::INTERSECTING_SUPERMODULAR
                | P::SUPERMODULAR
                | P::NONINCREASING
                | P::POSITIVELY_INTERSECTING_SUPERMODULAR
                | P::ELEMENT_NONINCREASING
        };
        SetFunction { n, kind: Kind::Constant(m), flags }
    }

    /// The function that is `vertex` on singletons and `bulk` on larger sets.
    pub fn vertex_bulk(n: usize, vertex: i64, bulk: i64) -> Self {
        let flags = per_vertex_flags(vertex, vertex.saturating_add(vertex), bulk);
        SetFunction { n, kind: Kind::VertexBulk { vertex, bulk }, flags }
    }

    /// Per-vertex singleton values with a common value on larger sets.
    pub fn per_vertex(singles: Vec<i64>, bulk: i64) -> Self {
        let mut sorted = singles.clone();
        sorted.sort_unstable();
        let min = sorted.first().copied().unwrap_or(0);
        let two = if sorted.len() >= 2 { sorted[0].saturating_add(sorted[1]) } else { i64::MAX };
        // The supermodular test in `per_vertex_flags` assumes equal singletons.
        let flags = per_vertex_flags(min, two, bulk) - Properties::SUPERMODULAR;
        SetFunction { n: singles.len(), kind: Kind::PerVertex { singles, bulk }, flags }
    }

    /// Table from explicit entries; missing sets take `default`.
    pub fn table(
        n: usize,
        entries: impl IntoIterator<Item = (VertexSet, i64)>,
        default: Option<i64>,
    ) -> Result<Self> {
        check_table_arity(n)?;
        let size = 1usize << n;
        let mut vals: Vec<Option<i64>> = vec![None; size];
        vals[0] = Some(0);
        for (a, v) in entries {
            if !a.is_subset(VertexSet::full(n)) {
                return Err(Error::InvalidSetFunction(format!("entry {a} is outside 0..{n}")));
            }
            if a.is_empty() && v != 0 {
                return Err(Error::InvalidSetFunction("the empty set must map to 0".into()));
            }
            vals[a.bits() as usize] = Some(v);
        }
        let mut out = Vec::with_capacity(size);
        for (mask, v) in vals.into_iter().enumerate() {
            match v.or(default) {
                Some(x) => out.push(x),
                None => {
                    return Err(Error::InvalidSetFunction(format!(
                        "table has no entry for {} and no default",
                        VertexSet(mask as u64)
                    )))
                }
            }
        }
        Ok(SetFunction { n, kind: Kind::Table(out), flags: Properties::empty() })
    }

    /// Tabulate an arbitrary function. Its value on `∅` must be 0.
    pub fn from_fn(n: usize, f: impl Fn(VertexSet) -> i64) -> Result<Self> {
        check_table_arity(n)?;
        let vals: Vec<i64> = (0..1u64 << n).map(|m| f(VertexSet(m))).collect();
        if vals[0] != 0 {
            return Err(Error::InvalidSetFunction("the empty set must map to 0".into()));
        }
        Ok(SetFunction { n, kind: Kind::Table(vals), flags: Properties::empty() })
    }

    pub fn sum(terms: Vec<SetFunction>) -> Result<Self> {
        let n = terms.first().map(|t| t.n).ok_or_else(|| Error::InvalidSetFunction("empty sum".into()))?;
        if terms.iter().any(|t| t.n != n) {
            return Err(Error::InvalidSetFunction("summands have different arities".into()));
        }
        let closed = Properties::all() - Properties::POSITIVELY_INTERSECTING_SUPERMODULAR;
        let mut flags = terms.iter().fold(closed, |f, t| f & t.flags);
        if flags.contains(Properties::INTERSECTING_SUPERMODULAR) {
            flags |= Properties::POSITIVELY_INTERSECTING_SUPERMODULAR;
        }
        Ok(SetFunction { n, kind: Kind::Sum(terms), flags })
    }

    pub fn scale(beta: i64, l: SetFunction) -> Result<Self> {
        if beta < 1 {
            return Err(Error::InvalidSetFunction(format!("scale factor {beta} must be at least 1")));
        }
        Ok(SetFunction { n: l.n, flags: l.flags, kind: Kind::Scale(beta, Box::new(l)) })
    }

    /// `l - r` with `r` modular, given by nonnegative per-vertex values.
    pub fn rooted_shift(l: SetFunction, r: Vec<i64>) -> Result<Self> {
        if r.len() != l.n {
            return Err(Error::InvalidSetFunction("one root value per vertex is required".into()));
        }
        if r.iter().any(|&x| x < 0) {
            return Err(Error::InvalidSetFunction("root values must be nonnegative".into()));
        }
        use Properties as P;
        let mut flags = l.flags
            & (P::INTERSECTING_SUPERMODULAR
                | P::SUPERMODULAR
                | P::SUBADDITIVE
                | P::ELEMENT_SUBADDITIVE
                | P::WEAKLY_SUBADDITIVE
                | P::ELEMENT_NONINCREASING);
        if flags.contains(P::INTERSECTING_SUPERMODULAR) {
            flags |= P::POSITIVELY_INTERSECTING_SUPERMODULAR;
        }
        Ok(SetFunction { n: l.n, flags, kind: Kind::RootedShift(Box::new(l), r) })
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn flags(&self) -> Properties {
        self.flags
    }

    /// Replace the declared flags.
    pub fn with_flags(mut self, flags: Properties) -> Self {
        self.flags = flags;
        self
    }

    /// Add declared flags.
    pub fn assume(mut self, flags: Properties) -> Self {
        self.flags |= flags;
        self
    }

    /// Replace the declared flags by those that validate at this arity.
    pub fn revalidated(self, cfg: &Config) -> Result<Self> {
        let report = validate(&self, cfg)?;
        Ok(self.with_flags(report.satisfied()))
    }

    /// Same function at a different arity. Only arity-free kinds can be
    /// re-targeted.
    pub fn with_arity(&self, n: usize) -> Result<Self> {
        if n == self.n {
            return Ok(self.clone());
        }
        let kind = match &self.kind {
            Kind::Constant(_) | Kind::VertexBulk { .. } => self.kind.clone(),
            Kind::Sum(ts) => Kind::Sum(ts.iter().map(|t| t.with_arity(n)).collect::<Result<_>>()?),
            Kind::Scale(b, l) => Kind::Scale(*b, Box::new(l.with_arity(n)?)),
            _ => {
                return Err(Error::InvalidSetFunction(format!(
                    "function has fixed arity {} but the host has {n} vertices",
                    self.n
                )))
            }
        };
        Ok(SetFunction { n, kind, flags: self.flags })
    }

    /// `l(A)`, checking that `a` lies in `0..n`.
    pub fn evaluate(&self, a: VertexSet) -> Result<i64> {
        if !a.is_subset(VertexSet::full(self.n)) {
            return Err(Error::InvalidSetFunction(format!("{a} is outside 0..{}", self.n)));
        }
        Ok(self.value(a))
    }

    /// `l(A)` without the range check; `a` must lie in `0..n`.
    pub fn value(&self, a: VertexSet) -> i64 {
        if a.is_empty() {
            return 0;
        }
        match &self.kind {
            Kind::Constant(m) => *m,
            Kind::VertexBulk { vertex, bulk } => {
                if a.len() == 1 {
                    *vertex
                } else {
                    *bulk
                }
            }
            Kind::PerVertex { singles, bulk } => {
                if a.len() == 1 {
                    singles[a.first().unwrap()]
                } else {
                    *bulk
                }
            }
            Kind::Table(t) => t[a.bits() as usize],
            Kind::Sum(ts) => ts.iter().map(|t| t.value(a)).sum(),
            Kind::Scale(b, l) => b * l.value(a),
            Kind::RootedShift(l, r) => l.value(a) - a.iter().map(|v| r[v]).sum::<i64>(),
        }
    }

    /// `l({v})`.
    pub fn vertex_value(&self, v: usize) -> i64 {
        self.value(VertexSet::singleton(v))
    }

    /// `sum of l(v) over a`.
    pub fn vertex_sum(&self, a: VertexSet) -> i64 {
        a.iter().map(|v| self.vertex_value(v)).sum()
    }

    /// All values indexed by mask.
    pub(crate) fn tabulate(&self) -> Vec<i64> {
        (0..1u64 << self.n).map(|m| self.value(VertexSet(m))).collect()
    }
}

fn check_table_arity(n: usize) -> Result<()> {
    if n > MAX_TABLE_ARITY {
        return Err(Error::InvalidSetFunction(format!(
            "tables are limited to {MAX_TABLE_ARITY} vertices, got {n}"
        )));
    }
    Ok(())
}

/// Flags of a function with singleton values at least `min`, two smallest
/// singleton values summing to `two`, and value `bulk` on larger sets.
/// Conservative: only flags that hold for every arity are declared.
fn per_vertex_flags(min: i64, two: i64, bulk: i64) -> Properties {
    use Properties as P;
    let mut f = P::empty();
    if min >= bulk {
        f |= P::INTERSECTING_SUPERMODULAR
            | P::POSITIVELY_INTERSECTING_SUPERMODULAR
            | P::NONINCREASING
            | P::ELEMENT_NONINCREASING;
        if bulk <= 0 && min <= 0 && bulk >= two {
            f |= P::SUPERMODULAR;
        }
    }
    if min >= 0 && two >= bulk {
        f |= P::ELEMENT_SUBADDITIVE | P::WEAKLY_SUBADDITIVE;
        if bulk >= 0 {
            f |= P::SUBADDITIVE;
        }
    }
    if min >= 0 && bulk >= 0 {
        f |= P::NONNEGATIVE;
    }
    f
}

/// Outcome of checking one property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// A violating pair. Unary properties report `a == b`; element
    /// properties use a singleton on the appropriate side.
    Fails { a: VertexSet, b: VertexSet },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub arity: usize,
    pub declared: Properties,
    pub results: Vec<(Properties, Verdict)>,
}

impl PropertyReport {
    pub fn verdict(&self, p: Properties) -> Option<Verdict> {
        self.results.iter().find(|(q, _)| *q == p).map(|(_, v)| *v)
    }

    pub fn holds(&self, p: Properties) -> bool {
        self.verdict(p) == Some(Verdict::Holds)
    }

    pub fn satisfied(&self) -> Properties {
        self.results
            .iter()
            .filter(|(_, v)| *v == Verdict::Holds)
            .fold(Properties::empty(), |f, (p, _)| f | *p)
    }

    /// Declared flags that failed validation.
    pub fn refuted(&self) -> Properties {
        self.declared - self.satisfied()
    }
}

/// Check every property exhaustively.
pub fn validate(l: &SetFunction, cfg: &Config) -> Result<PropertyReport> {
    cfg.check_vertices(l.arity())?;
    Ok(check_properties(l, Properties::all()))
}

pub(crate) fn check_properties(l: &SetFunction, which: Properties) -> PropertyReport {
    use Properties as P;
    let n = l.arity();
    let t = l.tabulate();
    let full = (1u64 << n) - 1;
    let v = |m: u64| t[m as usize];
    let mut results = vec![];

    let pair = P::INTERSECTING_SUPERMODULAR | P::SUPERMODULAR | P::POSITIVELY_INTERSECTING_SUPERMODULAR;
    if which.intersects(pair) {
        let (mut is, mut sup, mut pis) = (None, None, None);
        'outer: for a in 0..=full {
            for b in a..=full {
                if v(a & b) + v(a | b) < v(a) + v(b) {
                    let cex = (VertexSet(a), VertexSet(b));
                    sup.get_or_insert(cex);
                    if a & b != 0 {
                        is.get_or_insert(cex);
                        if v(a) > 0 && v(b) > 0 {
                            pis.get_or_insert(cex);
                        }
                    }
                    if is.is_some() && sup.is_some() && pis.is_some() {
                        break 'outer;
                    }
                }
            }
        }
        for (p, c) in [(P::INTERSECTING_SUPERMODULAR, is), (P::SUPERMODULAR, sup), (P::POSITIVELY_INTERSECTING_SUPERMODULAR, pis)] {
            if which.contains(p) {
                results.push((p, verdict(c)));
            }
        }
    }
    if which.contains(P::SUBADDITIVE) {
        let mut c = None;
        'sub: for a in 0..=full {
            let rest = full & !a;
            for b in VertexSet(rest).subsets() {
                let b = b.bits();
                if v(a) + v(b) < v(a | b) {
                    c = Some((VertexSet(a), VertexSet(b)));
                    break 'sub;
                }
            }
        }
        results.push((P::SUBADDITIVE, verdict(c)));
    }
    if which.contains(P::ELEMENT_SUBADDITIVE) {
        let mut c = None;
        'es: for a in 0..=full {
            for x in 0..n {
                let bit = 1u64 << x;
                if a & bit == 0 && v(a) + v(bit) < v(a | bit) {
                    c = Some((VertexSet(a), VertexSet(bit)));
                    break 'es;
                }
            }
        }
        results.push((P::ELEMENT_SUBADDITIVE, verdict(c)));
    }
    if which.contains(P::WEAKLY_SUBADDITIVE) {
        let c = (0..=full)
            .find(|&a| VertexSet(a).iter().map(|x| v(1 << x)).sum::<i64>() < v(a))
            .map(|a| (VertexSet(a), VertexSet(a)));
        results.push((P::WEAKLY_SUBADDITIVE, verdict(c)));
    }
    if which.contains(P::NONINCREASING) {
        let mut c = None;
        'ni: for b in 1..=full {
            for x in VertexSet(b).iter() {
                let a = b & !(1u64 << x);
                if a != 0 && v(a) < v(b) {
                    c = Some((VertexSet(a), VertexSet(b)));
                    break 'ni;
                }
            }
        }
        results.push((P::NONINCREASING, verdict(c)));
    }
    if which.contains(P::NONNEGATIVE) {
        let c = (0..=full).find(|&a| v(a) < 0).map(|a| (VertexSet(a), VertexSet(a)));
        results.push((P::NONNEGATIVE, verdict(c)));
    }
    if which.contains(P::ELEMENT_NONINCREASING) {
        let mut c = None;
        'en: for a in 1..=full {
            for x in VertexSet(a).iter() {
                if v(1 << x) < v(a) {
                    c = Some((VertexSet::singleton(x), VertexSet(a)));
                    break 'en;
                }
            }
        }
        results.push((P::ELEMENT_NONINCREASING, verdict(c)));
    }
    results.sort_by_key(|(p, _)| *p);
    PropertyReport { arity: n, declared: l.flags(), results }
}

fn verdict(c: Option<(VertexSet, VertexSet)>) -> Verdict {
    match c {
        None => Verdict::Holds,
        Some((a, b)) => Verdict::Fails { a, b },
    }
}

/// Whether `(a, b)` violates the defining inequality of `p`.
pub fn violates(l: &SetFunction, p: Properties, a: VertexSet, b: VertexSet) -> bool {
    use Properties as P;
    let v = |s: VertexSet| l.value(s);
    match p {
        P::INTERSECTING_SUPERMODULAR => a.intersects(b) && v(a & b) + v(a | b) < v(a) + v(b),
        P::SUPERMODULAR => v(a & b) + v(a | b) < v(a) + v(b),
        P::POSITIVELY_INTERSECTING_SUPERMODULAR => {
            a.intersects(b) && v(a) > 0 && v(b) > 0 && v(a & b) + v(a | b) < v(a) + v(b)
        }
        P::SUBADDITIVE => !a.intersects(b) && v(a) + v(b) < v(a | b),
        P::ELEMENT_SUBADDITIVE => b.len() == 1 && !a.intersects(b) && v(a) + v(b) < v(a | b),
        P::WEAKLY_SUBADDITIVE => l.vertex_sum(a) < v(a),
        P::NONINCREASING => !a.is_empty() && a.is_subset(b) && v(a) < v(b),
        P::NONNEGATIVE => v(a) < 0,
        P::ELEMENT_NONINCREASING => a.len() == 1 && a.is_subset(b) && v(a) < v(b),
        _ => false,
    }
}

/// Make sure `l` fits a host on `n` vertices and has the `required`
/// properties: validated exhaustively when allowed, otherwise taken from the
/// declared flags.
pub(crate) fn ensure(l: &SetFunction, n: usize, required: Properties, cfg: &Config) -> Result<()> {
    if l.arity() != n {
        return Err(Error::InvalidSetFunction(format!(
            "function has arity {} but the host has {n} vertices",
            l.arity()
        )));
    }
    if required.is_empty() {
        return Ok(());
    }
    if cfg.trust_flags || n > cfg.max_vertices {
        let missing = required - l.flags();
        if !missing.is_empty() {
            return Err(Error::MissingFlags(missing));
        }
        return Ok(());
    }
    let report = check_properties(l, required);
    for (p, v) in report.results {
        if let Verdict::Fails { a, b } = v {
            return Err(Error::PropertyViolated { property: p, a, b });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(SetFunction::constant(3, 2).evaluate(set(&[0, 1])).unwrap(), 2);
        assert_eq!(SetFunction::vertex_bulk(3, 2, 1).evaluate(set(&[1])).unwrap(), 2);
        assert_eq!(SetFunction::vertex_bulk(3, 2, 1).evaluate(VertexSet::EMPTY).unwrap(), 0);
        assert!(SetFunction::constant(3, 2).evaluate(set(&[3])).is_err());
    }

    #[test]
    fn table_construction() {
        let bad = SetFunction::table(2, [(VertexSet::EMPTY, 1)], Some(0));
        assert!(matches!(bad, Err(Error::InvalidSetFunction(_))));
        let missing = SetFunction::table(2, [(set(&[0]), 1)], None);
        assert!(missing.is_err());
        let ok = SetFunction::table(2, [(set(&[0]), 1), (set(&[1]), 1), (set(&[0, 1]), 1)], None).unwrap();
        assert_eq!(ok.value(set(&[0, 1])), 1);
    }

    #[test]
    fn combinators() {
        let c1 = SetFunction::constant(4, 1);
        let s = SetFunction::sum(vec![c1.clone(), c1.clone()]).unwrap();
        let c2 = SetFunction::constant(4, 2);
        let sc = SetFunction::scale(3, c1.clone()).unwrap();
        let c3 = SetFunction::constant(4, 3);
        for a in VertexSet::full(4).subsets() {
            assert_eq!(s.value(a), c2.value(a));
            assert_eq!(sc.value(a), c3.value(a));
        }
        let r = SetFunction::rooted_shift(SetFunction::constant(3, 1), vec![1, 0, 0]).unwrap();
        assert_eq!(r.value(set(&[0])), 0);
        assert_eq!(r.value(set(&[1])), 1);
        assert!(!r.flags().contains(Properties::NONNEGATIVE));
        assert!(SetFunction::scale(0, c1).is_err());
    }

    #[test]
    fn constant_one_properties() {
        let r = validate(&SetFunction::constant(4, 1), &Config::default()).unwrap();
        for p in Properties::each() {
            if p == Properties::SUPERMODULAR {
                // Disjoint singletons: l(∅) + l({0,1}) = 1 < 2.
                assert!(matches!(r.verdict(p), Some(Verdict::Fails { .. })));
            } else {
                assert!(r.holds(p), "{p:?}");
            }
        }
        assert!(r.refuted().is_empty());
    }

    #[test]
    fn vertex_bulk_not_nonincreasing() {
        let l = SetFunction::vertex_bulk(3, 1, 2);
        let r = validate(&l, &Config::default()).unwrap();
        match r.verdict(Properties::NONINCREASING).unwrap() {
            Verdict::Fails { a, b } => {
                assert_eq!(a.len(), 1);
                assert_eq!(b.len(), 2);
                assert!(violates(&l, Properties::NONINCREASING, a, b));
            }
            Verdict::Holds => panic!("should fail"),
        }
        assert!(!l.flags().contains(Properties::NONINCREASING));
    }

    #[test]
    fn declared_flags_are_sound_for_builtins() {
        let cfg = Config::default();
        let mut fns = vec![];
        for m in -2..=3 {
            fns.push(SetFunction::constant(4, m));
            for b in -2..=3 {
                fns.push(SetFunction::vertex_bulk(4, m, b));
            }
        }
        fns.push(SetFunction::per_vertex(vec![2, 0, 1, 3], 0));
        fns.push(SetFunction::rooted_shift(SetFunction::constant(4, 2), vec![1, 0, 1, 0]).unwrap());
        for l in fns {
            let r = validate(&l, &cfg).unwrap();
            assert!(r.refuted().is_empty(), "{l:?} refuted {:?}", r.refuted());
        }
    }

    #[test]
    fn ensure_modes() {
        let cfg = Config::default();
        let t = SetFunction::from_fn(3, |a| a.len() as i64).unwrap();
        // Modular, so supermodular in the validating mode ...
        assert!(ensure(&t, 3, Properties::SUPERMODULAR, &cfg).is_ok());
        // ... but nothing is declared.
        assert!(matches!(
            ensure(&t, 3, Properties::SUPERMODULAR, &Config::trusting()),
            Err(Error::MissingFlags(_))
        ));
        assert!(ensure(&t, 4, Properties::empty(), &cfg).is_err());
        let bad = SetFunction::vertex_bulk(3, 1, 2);
        assert!(matches!(
            ensure(&bad, 3, Properties::INTERSECTING_SUPERMODULAR, &cfg),
            Err(Error::PropertyViolated { .. })
        ));
    }
}
