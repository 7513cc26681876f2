//! A decidable algebra of subsets of the plane.
//!
//! Expressions ([`PlanarSet`]) are built from finite point sets, rectangles
//! of finite/cofinite sets, the above-diagonal region and single columns,
//! closed under union, intersection and complement. Every vertical section of
//! such a set is finite or cofinite ([`FinCofin`]), and past a computable
//! horizon `N` each section has the shape
//!
//! ```text
//! column(x) = (A \ [0,x]) ∪ (B ∩ [0,x])      for all x >= N
//! ```
//!
//! with fixed coefficients `A` and `B` (Shannon expansion on the moving set
//! `(x, ∞)`). The finite/cofinite character of the tail columns is therefore
//! constant, which makes membership in sums of stand-in filters exact.
//!
//! Filters are represented by stand-ins only: the cofinite (Fréchet) filter
//! and principal filters. Genuine nonprincipal ultrafilters are not
//! constructive and are not modeled.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

/// A finite or cofinite subset of the naturals, stored by its finite support.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FinCofin {
    /// The set itself.
    Finite(BTreeSet<u64>),
    /// The set of naturals missing from the set.
    Cofinite(BTreeSet<u64>),
}

impl FinCofin {
    pub fn empty() -> Self {
        FinCofin::Finite(BTreeSet::new())
    }

    pub fn full() -> Self {
        FinCofin::Cofinite(BTreeSet::new())
    }

    pub fn finite(it: impl IntoIterator<Item = u64>) -> Self {
        FinCofin::Finite(it.into_iter().collect())
    }

    pub fn cofinite(it: impl IntoIterator<Item = u64>) -> Self {
        FinCofin::Cofinite(it.into_iter().collect())
    }

    /// `[0, x]`.
    pub fn initial(x: u64) -> Self {
        FinCofin::Finite((0..=x).collect())
    }

    pub fn contains(&self, v: u64) -> bool {
        match self {
            FinCofin::Finite(s) => s.contains(&v),
            FinCofin::Cofinite(s) => !s.contains(&v),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FinCofin::Finite(_))
    }

    pub fn is_cofinite(&self) -> bool {
        !self.is_finite()
    }

    pub fn support(&self) -> &BTreeSet<u64> {
        match self {
            FinCofin::Finite(s) | FinCofin::Cofinite(s) => s,
        }
    }

    pub fn max_support(&self) -> Option<u64> {
        self.support().iter().next_back().copied()
    }

    pub fn complement(&self) -> Self {
        match self {
            FinCofin::Finite(s) => FinCofin::Cofinite(s.clone()),
            FinCofin::Cofinite(s) => FinCofin::Finite(s.clone()),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        use FinCofin::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a | b),
            (Cofinite(a), Cofinite(b)) => Cofinite(a & b),
            (Finite(f), Cofinite(c)) | (Cofinite(c), Finite(f)) => Cofinite(c - f),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        use FinCofin::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a & b),
            (Cofinite(a), Cofinite(b)) => Cofinite(a | b),
            (Finite(f), Cofinite(c)) | (Cofinite(c), Finite(f)) => Finite(f - c),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }
}

impl fmt::Display for FinCofin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<u64>| {
            s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        };
        match self {
            FinCofin::Finite(s) => write!(f, "{{{}}}", list(s)),
            FinCofin::Cofinite(s) if s.is_empty() => write!(f, "ω"),
            FinCofin::Cofinite(s) => write!(f, "ω∖{{{}}}", list(s)),
        }
    }
}

/// Symbolic description of a subset of the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanarSet {
    Points(BTreeSet<(u64, u64)>),
    Rect { x: FinCofin, y: FinCofin },
    /// `{<x,y> : x < y}`.
    AboveDiag,
    /// The single column `{x} × content`.
    Column { x: u64, content: FinCofin },
    Union(Vec<PlanarSet>),
    Intersection(Vec<PlanarSet>),
    Complement(Box<PlanarSet>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetAlgebraError {
    #[error("bad expression JSON: {0}")]
    BadJson(String),
}

/// The tail shape of an expression: past `horizon`, column `x` equals
/// `(a \ [0,x]) ∪ (b ∩ [0,x])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailForm {
    pub horizon: u64,
    pub a: FinCofin,
    pub b: FinCofin,
}

impl TailForm {
    /// The column predicted by the tail shape; only meaningful for
    /// `x >= horizon`.
    pub fn column_at(&self, x: u64) -> FinCofin {
        let init = FinCofin::initial(x);
        self.a.difference(&init).union(&self.b.intersection(&init))
    }

    /// Whether every column past the horizon is cofinite.
    pub fn tail_cofinite(&self) -> bool {
        self.a.is_cofinite()
    }
}

impl PlanarSet {
    pub fn full() -> Self {
        PlanarSet::Rect { x: FinCofin::full(), y: FinCofin::full() }
    }

    pub fn complement(self) -> Self {
        PlanarSet::Complement(Box::new(self))
    }

    /// Pointwise membership, evaluated directly on the expression tree.
    pub fn contains(&self, x: u64, y: u64) -> bool {
        match self {
            PlanarSet::Points(p) => p.contains(&(x, y)),
            PlanarSet::Rect { x: xs, y: ys } => xs.contains(x) && ys.contains(y),
            PlanarSet::AboveDiag => x < y,
            PlanarSet::Column { x: cx, content } => *cx == x && content.contains(y),
            PlanarSet::Union(args) => args.iter().any(|a| a.contains(x, y)),
            PlanarSet::Intersection(args) => args.iter().all(|a| a.contains(x, y)),
            PlanarSet::Complement(a) => !a.contains(x, y),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            PlanarSet::Union(args) | PlanarSet::Intersection(args) => {
                1 + args.iter().map(|a| a.depth()).max().unwrap_or(0)
            }
            PlanarSet::Complement(a) => 1 + a.depth(),
            _ => 0,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            PlanarSet::Points(p) => {
                json!({ "points": p.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>() })
            }
            PlanarSet::Rect { x, y } => json!({ "rect": { "x": x, "y": y } }),
            PlanarSet::AboveDiag => json!({ "aboveDiag": true }),
            PlanarSet::Column { x, content } => {
                json!({ "column": { "x": x, "content": content } })
            }
            PlanarSet::Union(args) => op_json("union", args),
            PlanarSet::Intersection(args) => op_json("intersection", args),
            PlanarSet::Complement(a) => json!({ "op": "complement", "args": [a.to_json()] }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, SetAlgebraError> {
        let bad = |msg: &str| SetAlgebraError::BadJson(format!("{msg}: {v}"));
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        if let Some(op) = obj.get("op") {
            let args = obj
                .get("args")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("operator without args"))?
                .iter()
                .map(PlanarSet::from_json)
                .collect::<Result<Vec<_>, _>>()?;
            return match op.as_str() {
                Some("union") => Ok(PlanarSet::Union(args)),
                Some("intersection") => Ok(PlanarSet::Intersection(args)),
                Some("complement") => match <[PlanarSet; 1]>::try_from(args) {
                    Ok([a]) => Ok(PlanarSet::Complement(Box::new(a))),
                    Err(_) => Err(bad("complement takes exactly one argument")),
                },
                _ => Err(bad("unknown operator")),
            };
        }
        let fc = |v: &Value| {
            serde_json::from_value::<FinCofin>(v.clone()).map_err(|e| bad(&e.to_string()))
        };
        if let Some(p) = obj.get("points") {
            let pts: Vec<[u64; 2]> =
                serde_json::from_value(p.clone()).map_err(|e| bad(&e.to_string()))?;
            return Ok(PlanarSet::Points(pts.into_iter().map(|[x, y]| (x, y)).collect()));
        }
        if let Some(r) = obj.get("rect") {
            let x = r.get("x").ok_or_else(|| bad("rect without x"))?;
            let y = r.get("y").ok_or_else(|| bad("rect without y"))?;
            return Ok(PlanarSet::Rect { x: fc(x)?, y: fc(y)? });
        }
        if obj.get("aboveDiag").and_then(Value::as_bool) == Some(true) {
            return Ok(PlanarSet::AboveDiag);
        }
        if let Some(c) = obj.get("column") {
            let x = c.get("x").and_then(Value::as_u64).ok_or_else(|| bad("column without x"))?;
            let content = c.get("content").ok_or_else(|| bad("column without content"))?;
            return Ok(PlanarSet::Column { x, content: fc(content)? });
        }
        Err(bad("unrecognized expression"))
    }
}

fn op_json(name: &str, args: &[PlanarSet]) -> Value {
    json!({ "op": name, "args": args.iter().map(PlanarSet::to_json).collect::<Vec<_>>() })
}

/// The exact vertical section `{y : <x,y> ∈ A}`.
pub fn column_of(a: &PlanarSet, x: u64) -> FinCofin {
    match a {
        PlanarSet::Points(p) => {
            FinCofin::Finite(p.iter().filter(|&&(px, _)| px == x).map(|&(_, y)| y).collect())
        }
        PlanarSet::Rect { x: xs, y: ys } => {
            if xs.contains(x) {
                ys.clone()
            } else {
                FinCofin::empty()
            }
        }
        PlanarSet::AboveDiag => FinCofin::Cofinite((0..=x).collect()),
        PlanarSet::Column { x: cx, content } => {
            if *cx == x {
                content.clone()
            } else {
                FinCofin::empty()
            }
        }
        PlanarSet::Union(args) => args
            .iter()
            .fold(FinCofin::empty(), |acc, e| acc.union(&column_of(e, x))),
        PlanarSet::Intersection(args) => args
            .iter()
            .fold(FinCofin::full(), |acc, e| acc.intersection(&column_of(e, x))),
        PlanarSet::Complement(e) => column_of(e, x).complement(),
    }
}

pub fn tail_analysis(a: &PlanarSet) -> TailForm {
    let empty = FinCofin::empty;
    match a {
        PlanarSet::Points(p) => TailForm {
            horizon: p.iter().map(|&(x, _)| x + 1).max().unwrap_or(0),
            a: empty(),
            b: empty(),
        },
        PlanarSet::Rect { x, y } => {
            let horizon = x.max_support().map_or(0, |m| m + 1);
            if x.is_cofinite() {
                TailForm { horizon, a: y.clone(), b: y.clone() }
            } else {
                TailForm { horizon, a: empty(), b: empty() }
            }
        }
        PlanarSet::AboveDiag => TailForm { horizon: 0, a: FinCofin::full(), b: empty() },
        PlanarSet::Column { x, .. } => TailForm { horizon: x + 1, a: empty(), b: empty() },
        PlanarSet::Union(args) => args.iter().map(tail_analysis).fold(
            TailForm { horizon: 0, a: empty(), b: empty() },
            |acc, t| TailForm {
                horizon: acc.horizon.max(t.horizon),
                a: acc.a.union(&t.a),
                b: acc.b.union(&t.b),
            },
        ),
        PlanarSet::Intersection(args) => args.iter().map(tail_analysis).fold(
            TailForm { horizon: 0, a: FinCofin::full(), b: FinCofin::full() },
            |acc, t| TailForm {
                horizon: acc.horizon.max(t.horizon),
                a: acc.a.intersection(&t.a),
                b: acc.b.intersection(&t.b),
            },
        ),
        PlanarSet::Complement(e) => {
            let t = tail_analysis(e);
            TailForm { horizon: t.horizon, a: t.a.complement(), b: t.b.complement() }
        }
    }
}

/// Membership in the sum of cofinite filters over cofinite filters: all but
/// finitely many columns are cofinite.
///
/// Only the tail decides this; the finitely many columns below the horizon
/// cannot matter.
pub fn in_fr2(a: &PlanarSet) -> bool {
    tail_analysis(a).tail_cofinite()
}

/// Whether infinitely many columns are infinite, i.e. whether `a` meets every
/// set of the doubled cofinite filter.
///
/// Within this algebra an infinite section is cofinite and the tail character
/// is constant, so this coincides with [`in_fr2`]; it is kept separate because
/// the two notions differ for arbitrary planar sets.
pub fn meets_all_fr2(a: &PlanarSet) -> bool {
    tail_analysis(a).tail_cofinite()
}

/// A decidable stand-in for a filter on the naturals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FilterStandIn {
    /// The cofinite filter.
    Frechet,
    /// All sets containing `k`.
    Principal(u64),
}

impl FilterStandIn {
    pub fn contains(&self, s: &FinCofin) -> bool {
        match self {
            FilterStandIn::Frechet => s.is_cofinite(),
            FilterStandIn::Principal(k) => s.contains(*k),
        }
    }

    fn index_bound(&self) -> u64 {
        match self {
            FilterStandIn::Frechet => 0,
            FilterStandIn::Principal(k) => k + 1,
        }
    }
}

impl Serialize for FilterStandIn {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            FilterStandIn::Frechet => json!({ "frechet": true }),
            FilterStandIn::Principal(k) => json!({ "principal": k }),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FilterStandIn {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        if v.get("frechet").and_then(Value::as_bool) == Some(true) {
            return Ok(FilterStandIn::Frechet);
        }
        if let Some(k) = v.get("principal").and_then(Value::as_u64) {
            return Ok(FilterStandIn::Principal(k));
        }
        Err(serde::de::Error::custom(format!(
            "expected {{\"frechet\":true}} or {{\"principal\":k}}, got {v}"
        )))
    }
}

/// An indexed family of stand-ins: `default` everywhere except at the listed
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandInSequence {
    pub default: FilterStandIn,
    #[serde(default)]
    pub exceptions: BTreeMap<u64, FilterStandIn>,
}

impl StandInSequence {
    pub fn constant(f: FilterStandIn) -> Self {
        StandInSequence { default: f, exceptions: BTreeMap::new() }
    }

    pub fn at(&self, n: u64) -> FilterStandIn {
        self.exceptions.get(&n).copied().unwrap_or(self.default)
    }
}

/// The set `{n : column_of(a, n) ∈ v_n}` as a finite/cofinite set.
///
/// Columns are evaluated explicitly below the cutoff (horizon, exception
/// indices and principal indices all lie below it); from the cutoff on, the
/// tail shape makes the verdict the same for every column.
pub fn verdict_set(a: &PlanarSet, v: &StandInSequence) -> FinCofin {
    let tail = tail_analysis(a);
    let cutoff = tail
        .horizon
        .max(v.default.index_bound())
        .max(v.exceptions.keys().map(|k| k + 1).max().unwrap_or(0))
        .max(v.exceptions.values().map(|f| f.index_bound()).max().unwrap_or(0));
    let explicit: BTreeSet<u64> =
        (0..cutoff).filter(|&n| v.at(n).contains(&column_of(a, n))).collect();
    let tail_in = v.default.contains(&tail.column_at(cutoff));
    if tail_in {
        FinCofin::Cofinite((0..cutoff).filter(|n| !explicit.contains(n)).collect())
    } else {
        FinCofin::Finite(explicit)
    }
}

/// Membership of `a` in the `u`-indexed sum of the `v_n`.
pub fn sum_membership(a: &PlanarSet, u: FilterStandIn, v: &StandInSequence) -> bool {
    u.contains(&verdict_set(a, v))
}

/// Membership of `b` in the image of the sum under the first projection.
pub fn image_membership(b: &FinCofin, u: FilterStandIn, v: &StandInSequence) -> bool {
    sum_membership(&PlanarSet::Rect { x: b.clone(), y: FinCofin::full() }, u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::random_expression;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fc_strategy() -> impl Strategy<Value = FinCofin> {
        (any::<bool>(), prop::collection::btree_set(0u64..20, 0..5)).prop_map(|(fin, s)| {
            if fin {
                FinCofin::Finite(s)
            } else {
                FinCofin::Cofinite(s)
            }
        })
    }

    proptest! {
        #[test]
        fn fincofin_boolean_laws(a in fc_strategy(), b in fc_strategy()) {
            let bound = 2 * a.max_support().unwrap_or(0).max(b.max_support().unwrap_or(0)) + 5;
            for v in 0..=bound {
                prop_assert_eq!(a.union(&b).contains(v), a.contains(v) || b.contains(v));
                prop_assert_eq!(a.intersection(&b).contains(v), a.contains(v) && b.contains(v));
                prop_assert_eq!(
                    a.union(&b).complement().contains(v),
                    a.complement().intersection(&b.complement()).contains(v)
                );
                prop_assert_eq!(
                    a.intersection(&b).complement().contains(v),
                    a.complement().union(&b.complement()).contains(v)
                );
                prop_assert_eq!(a.complement().complement().contains(v), a.contains(v));
            }
        }
    }

    fn rect(x: FinCofin, y: FinCofin) -> PlanarSet {
        PlanarSet::Rect { x, y }
    }

    #[test]
    fn column_examples() {
        assert_eq!(column_of(&PlanarSet::AboveDiag, 2), FinCofin::cofinite([0, 1, 2]));
        let r = rect(FinCofin::cofinite([0]), FinCofin::finite([5]));
        assert_eq!(column_of(&r, 0), FinCofin::empty());
        assert_eq!(column_of(&r, 1), FinCofin::finite([5]));
        assert_eq!(
            column_of(&PlanarSet::AboveDiag.complement(), 3),
            FinCofin::finite([0, 1, 2, 3])
        );
    }

    #[test]
    fn tail_examples() {
        let t = tail_analysis(&PlanarSet::AboveDiag);
        assert_eq!((t.a, t.b), (FinCofin::full(), FinCofin::empty()));
        let t = tail_analysis(&PlanarSet::Points([(4, 9), (1, 2)].into()));
        assert_eq!((t.horizon, t.a, t.b), (5, FinCofin::empty(), FinCofin::empty()));
    }

    #[test]
    fn decision_examples() {
        assert!(in_fr2(&PlanarSet::full()));
        assert!(in_fr2(&PlanarSet::AboveDiag));
        assert!(!in_fr2(&rect(FinCofin::finite([0, 1]), FinCofin::full())));
        assert!(meets_all_fr2(&PlanarSet::AboveDiag));
        assert!(!meets_all_fr2(&PlanarSet::AboveDiag.complement()));
        assert!(meets_all_fr2(&rect(FinCofin::cofinite([2]), FinCofin::cofinite([7]))));
    }

    #[test]
    fn sum_examples() {
        let fr = StandInSequence::constant(FilterStandIn::Frechet);
        assert!(sum_membership(&PlanarSet::full(), FilterStandIn::Frechet, &fr));
        assert!(sum_membership(&PlanarSet::AboveDiag, FilterStandIn::Frechet, &fr));
        let p5 = StandInSequence::constant(FilterStandIn::Principal(5));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let e = random_expression(&mut rng, 3);
            assert_eq!(sum_membership(&e, FilterStandIn::Principal(3), &p5), e.contains(3, 5));
        }
    }

    #[test]
    fn image_examples() {
        let seq = StandInSequence {
            default: FilterStandIn::Principal(2),
            exceptions: [(4, FilterStandIn::Frechet)].into(),
        };
        assert!(image_membership(&FinCofin::cofinite([1, 9]), FilterStandIn::Frechet, &seq));
        assert!(image_membership(&FinCofin::finite([3]), FilterStandIn::Principal(3), &seq));
        assert!(!image_membership(&FinCofin::finite([3]), FilterStandIn::Frechet, &seq));
    }

    #[test]
    fn columns_follow_pointwise_membership() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..300 {
            let e = random_expression(&mut rng, 4);
            let grid = tail_analysis(&e).horizon + 15;
            for x in 0..grid {
                let col = column_of(&e, x);
                for y in 0..grid {
                    assert_eq!(col.contains(y), e.contains(x, y), "{e:?} at ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn truncation_never_contradicts_tail_verdict() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..300 {
            let e = random_expression(&mut rng, 4);
            let t = tail_analysis(&e);
            let edge = t.a.max_support().unwrap_or(0).max(t.b.max_support().unwrap_or(0));
            let top = t.horizon + edge + 20;
            for x in t.horizon..t.horizon + 5 {
                // above max(x, supports) the tail column is all-in or all-out
                for y in x.max(edge) + 1..top {
                    assert_eq!(e.contains(x, y), in_fr2(&e), "{e:?} at ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn sum_is_a_filter_on_tested_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let families = [
            (FilterStandIn::Frechet, StandInSequence::constant(FilterStandIn::Frechet)),
            (FilterStandIn::Principal(2), StandInSequence::constant(FilterStandIn::Frechet)),
            (
                FilterStandIn::Frechet,
                StandInSequence {
                    default: FilterStandIn::Principal(6),
                    exceptions: [(1, FilterStandIn::Frechet)].into(),
                },
            ),
        ];
        for _ in 0..300 {
            let a = random_expression(&mut rng, 3);
            let b = random_expression(&mut rng, 3);
            for (u, v) in &families {
                let in_a = sum_membership(&a, *u, v);
                let in_b = sum_membership(&b, *u, v);
                let union = PlanarSet::Union(vec![a.clone(), b.clone()]);
                let meet = PlanarSet::Intersection(vec![a.clone(), b.clone()]);
                if in_a {
                    assert!(sum_membership(&union, *u, v));
                }
                assert_eq!(sum_membership(&meet, *u, v), in_a && in_b);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let e = PlanarSet::Union(vec![
            rect(FinCofin::cofinite([1]), FinCofin::finite([2, 3])),
            PlanarSet::AboveDiag.complement(),
            PlanarSet::Column { x: 3, content: FinCofin::full() },
            PlanarSet::Points([(0, 1)].into()),
        ]);
        let v = e.to_json();
        assert_eq!(v["args"][0], json!({"rect": {"x": {"cofinite": [1]}, "y": {"finite": [2, 3]}}}));
        assert_eq!(v["args"][1], json!({"op": "complement", "args": [{"aboveDiag": true}]}));
        assert_eq!(PlanarSet::from_json(&v).unwrap(), e);
        assert!(PlanarSet::from_json(&json!({"op": "xor", "args": []})).is_err());
        let f: FilterStandIn = serde_json::from_value(json!({"principal": 5})).unwrap();
        assert_eq!(f, FilterStandIn::Principal(5));
        assert_eq!(serde_json::to_value(FilterStandIn::Frechet).unwrap(), json!({"frechet": true}));
    }
}
