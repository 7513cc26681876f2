//! Finite point configurations in the plane and the n-types they realize.
//!
//! A [`FiniteCondition`] is a finite set of points obeying the finitely
//! checkable clauses of the forcing conditions: pairwise disjoint sections
//! (here: all y-coordinates distinct), every point above the diagonal, and no
//! x-coordinate equal to any y-coordinate. The remaining clause (infinitely
//! many infinite sections, no nonempty finite ones) only makes sense for
//! infinite sets and is not checked.
//!
//! Subsets are always listed by ascending y before being interpreted as
//! `<a1,b1>, ..., <an,bn>`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::typecalc::{
    enumerate_ntypes, restrict_to_initial, NType, TypeClass, TypeError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[u64; 2]", into = "[u64; 2]")]
pub struct Point {
    pub x: u64,
    pub y: u64,
}

impl Point {
    pub fn new(x: u64, y: u64) -> Self {
        Point { x, y }
    }
}

impl From<[u64; 2]> for Point {
    fn from([x, y]: [u64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [u64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.x, self.y)
    }
}

/// A violated clause, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum ConditionViolation {
    /// Two points share a y-coordinate, so their sections overlap.
    SharedY { a: Point, b: Point },
    /// A point with `x >= y`.
    NotAboveDiagonal { point: Point },
    /// The x-coordinate of `a` equals the y-coordinate of `b`.
    XEqualsY { a: Point, b: Point },
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionViolation::SharedY { a, b } => {
                write!(f, "sections not disjoint: {a} and {b} share y = {}", a.y)
            }
            ConditionViolation::NotAboveDiagonal { point } => {
                write!(f, "{point} is not above the diagonal")
            }
            ConditionViolation::XEqualsY { a, b } => {
                write!(f, "x-coordinate of {a} equals y-coordinate of {b}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub violations: Vec<ConditionViolation>,
}

impl ConditionReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PointSetError {
    #[error("invalid condition: {0}")]
    InvalidCondition(ConditionReport),
    #[error("no type realized: {0}")]
    NoTypeRealized(ConditionReport),
    #[error("subset must contain at least one point")]
    EmptySubset,
    #[error(transparent)]
    Type(#[from] TypeError),
}

/// Checks the three finite clauses. Duplicate points are treated as one.
pub fn check_condition(points: &[Point]) -> ConditionReport {
    let set: BTreeSet<Point> = points.iter().copied().collect();
    let pts: Vec<Point> = set.into_iter().collect();
    let mut violations = Vec::new();

    let mut by_y: BTreeMap<u64, Point> = BTreeMap::new();
    for &p in &pts {
        if let Some(&q) = by_y.get(&p.y) {
            violations.push(ConditionViolation::SharedY { a: q, b: p });
        } else {
            by_y.insert(p.y, p);
        }
    }
    for &p in &pts {
        if p.x >= p.y {
            violations.push(ConditionViolation::NotAboveDiagonal { point: p });
        }
    }
    for &a in &pts {
        if let Some(&b) = by_y.get(&a.x) {
            violations.push(ConditionViolation::XEqualsY { a, b });
        }
    }
    ConditionReport { violations }
}

/// A finite point set passing [`check_condition`], kept sorted by y.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct FiniteCondition {
    points: Vec<Point>,
}

impl TryFrom<Vec<Point>> for FiniteCondition {
    type Error = PointSetError;

    fn try_from(points: Vec<Point>) -> Result<Self, Self::Error> {
        FiniteCondition::new(points)
    }
}

impl From<FiniteCondition> for Vec<Point> {
    fn from(c: FiniteCondition) -> Self {
        c.points
    }
}

impl FiniteCondition {
    pub fn new(points: impl IntoIterator<Item = Point>) -> Result<Self, PointSetError> {
        let mut points: Vec<Point> = points.into_iter().collect();
        let report = check_condition(&points);
        if !report.is_ok() {
            return Err(PointSetError::InvalidCondition(report));
        }
        points.sort_by_key(|p| p.y);
        points.dedup();
        Ok(FiniteCondition { points })
    }

    pub fn empty() -> Self {
        FiniteCondition { points: Vec::new() }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.binary_search_by_key(&p.y, |q| q.y).is_ok_and(|i| self.points[i] == p)
    }

    pub fn is_subset_of(&self, other: &FiniteCondition) -> bool {
        self.points.iter().all(|&p| other.contains(p))
    }

    /// Every subset of a condition is again a condition.
    pub fn subset(&self, points: impl IntoIterator<Item = Point>) -> FiniteCondition {
        let mut pts: Vec<Point> = points.into_iter().collect();
        pts.sort_by_key(|p| p.y);
        pts.dedup();
        debug_assert!(check_condition(&pts).is_ok());
        FiniteCondition { points: pts }
    }

    /// Sections keyed by x, each listed by ascending y.
    pub fn columns(&self) -> BTreeMap<u64, Vec<u64>> {
        let mut cols: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for p in &self.points {
            cols.entry(p.x).or_default().push(p.y);
        }
        cols
    }

    /// Largest coordinate in use.
    pub fn max_coordinate(&self) -> Option<u64> {
        self.points.iter().map(|p| p.y).max()
    }
}

/// The n-type realized by `subset`, with points read in ascending y.
///
/// Fails with [`PointSetError::NoTypeRealized`] when the subset itself breaks
/// one of the condition clauses.
pub fn realized_type(subset: &[Point]) -> Result<NType, PointSetError> {
    let report = check_condition(subset);
    if !report.is_ok() {
        return Err(PointSetError::NoTypeRealized(report));
    }
    let mut pts: Vec<Point> = subset.to_vec();
    pts.sort_by_key(|p| p.y);
    pts.dedup();
    if pts.is_empty() {
        return Err(PointSetError::EmptySubset);
    }
    Ok(realized_type_sorted(&pts))
}

/// `pts` must be sorted by y and satisfy the condition clauses.
fn realized_type_sorted(pts: &[Point]) -> NType {
    // value -> (x indices, y index); clause 4 keeps the two roles apart
    let mut by_value: BTreeMap<u64, (Vec<usize>, Option<usize>)> = BTreeMap::new();
    for (i, p) in pts.iter().enumerate() {
        by_value.entry(p.x).or_default().0.push(i + 1);
        by_value.entry(p.y).or_default().1 = Some(i + 1);
    }
    let classes = by_value
        .into_values()
        .map(|(xs, y)| match y {
            Some(j) => TypeClass::Y(j),
            None => TypeClass::X(xs),
        })
        .collect();
    NType::from_classes(pts.len(), classes).expect("condition subsets realize a type")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizerSearch {
    Found(Vec<Point>),
    Absent,
    TooFewPoints { needed: usize, available: usize },
}

impl RealizerSearch {
    pub fn found(&self) -> Option<&[Point]> {
        match self {
            RealizerSearch::Found(p) => Some(p),
            _ => None,
        }
    }
}

/// The lexicographically least (by y-sequence) n-subset realizing `t`.
///
/// Backtracks over points in y order; a partial choice of `k` points must
/// already realize the restriction of `t` to its first `k` indices.
pub fn find_realizer(cond: &FiniteCondition, t: &NType) -> RealizerSearch {
    let n = t.n();
    if n > cond.len() {
        return RealizerSearch::TooFewPoints { needed: n, available: cond.len() };
    }
    let prefixes: Vec<NType> = (1..=n)
        .map(|k| restrict_to_initial(t, k).expect("k <= n"))
        .collect();
    let mut chosen = Vec::with_capacity(n);
    if extend_realizer(cond.points(), 0, &prefixes, &mut chosen) {
        RealizerSearch::Found(chosen)
    } else {
        RealizerSearch::Absent
    }
}

fn extend_realizer(
    pts: &[Point],
    start: usize,
    prefixes: &[NType],
    chosen: &mut Vec<Point>,
) -> bool {
    if chosen.len() == prefixes.len() {
        return true;
    }
    let remaining = prefixes.len() - chosen.len();
    for i in start..=pts.len().saturating_sub(remaining) {
        chosen.push(pts[i]);
        if realized_type_sorted(chosen) == prefixes[chosen.len() - 1]
            && extend_realizer(pts, i + 1, prefixes, chosen)
        {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Adds fresh blocks of points until every n-type has a realizer.
///
/// Types are visited in enumeration order; a type that already has a realizer
/// (possibly across earlier blocks) gets nothing. Each block assigns
/// consecutive values above every coordinate in use, one per class of the
/// type, so all clauses survive.
pub fn extend_with_realizers(cond: &FiniteCondition, n: usize) -> Result<FiniteCondition, PointSetError> {
    let mut points = cond.points().to_vec();
    let mut current = cond.clone();
    for t in enumerate_ntypes(n)? {
        if find_realizer(&current, &t).found().is_some() {
            continue;
        }
        let base = current.max_coordinate().map_or(0, |m| m + 1);
        points.extend(realizing_block(&t, base));
        current = FiniteCondition::new(points.iter().copied())?;
    }
    Ok(current)
}

/// The points obtained by giving class `i` of `t` the value `base + i`.
pub fn realizing_block(t: &NType, base: u64) -> Vec<Point> {
    let n = t.n();
    let mut xs = vec![0; n];
    let mut ys = vec![0; n];
    for (i, class) in t.classes().iter().enumerate() {
        let v = base + i as u64;
        match class {
            TypeClass::X(ix) => ix.iter().for_each(|&j| xs[j - 1] = v),
            TypeClass::Y(j) => ys[j - 1] = v,
        }
    }
    xs.into_iter().zip(ys).map(|(x, y)| Point::new(x, y)).collect()
}

/// Every n-subset grouped by the type it realizes. Subsets are listed by
/// ascending y and appear in lexicographic order within each class.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TypedSubsetIndex {
    pub n: usize,
    pub classes: BTreeMap<NType, Vec<Vec<Point>>>,
}

impl TypedSubsetIndex {
    pub fn total(&self) -> usize {
        self.classes.values().map(Vec::len).sum()
    }

    /// JSON of the form `{"<list-form>": [[[x,y],...],...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .classes
            .iter()
            .map(|(t, subsets)| {
                (t.to_string(), serde_json::to_value(subsets).expect("points serialize"))
            })
            .collect();
        serde_json::Value::Object(map)
    }
}

pub fn classify_subsets(cond: &FiniteCondition, n: usize) -> TypedSubsetIndex {
    let mut classes: BTreeMap<NType, Vec<Vec<Point>>> = BTreeMap::new();
    if n > 0 {
        for subset in cond.points().iter().copied().combinations(n) {
            classes.entry(realized_type_sorted(&subset)).or_default().push(subset);
        }
    }
    TypedSubsetIndex { n, classes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::random_condition;
    use crate::typecalc::count_ntypes;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pts(v: &[(u64, u64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn cond(v: &[(u64, u64)]) -> FiniteCondition {
        FiniteCondition::new(pts(v)).unwrap()
    }

    fn t(s: &str) -> NType {
        s.parse().unwrap()
    }

    #[test]
    fn check_examples() {
        assert!(check_condition(&pts(&[(0, 1), (0, 2), (3, 4)])).is_ok());
        let r = check_condition(&pts(&[(0, 1), (2, 1)]));
        assert!(matches!(r.violations[..], [ConditionViolation::SharedY { .. }, ..]));
        let r = check_condition(&pts(&[(0, 1), (1, 2)]));
        assert_eq!(
            r.violations,
            vec![ConditionViolation::XEqualsY { a: Point::new(1, 2), b: Point::new(0, 1) }]
        );
        let r = check_condition(&pts(&[(3, 3)]));
        assert!(r.violations.contains(&ConditionViolation::NotAboveDiagonal { point: Point::new(3, 3) }));
    }

    #[test]
    fn realized_type_examples() {
        assert_eq!(realized_type(&pts(&[(1, 2), (1, 3)])).unwrap(), t("x1=x2<y1<y2"));
        assert_eq!(realized_type(&pts(&[(0, 2), (1, 3)])).unwrap(), t("x1<x2<y1<y2"));
        assert_eq!(realized_type(&pts(&[(0, 1), (2, 3)])).unwrap(), t("x1<y1<x2<y2"));
        // listing order of the input is irrelevant
        assert_eq!(realized_type(&pts(&[(1, 3), (0, 2)])).unwrap(), t("x1<x2<y1<y2"));
        assert!(matches!(
            realized_type(&pts(&[(0, 1), (2, 1)])),
            Err(PointSetError::NoTypeRealized(_))
        ));
    }

    #[test]
    fn find_realizer_examples() {
        let c = cond(&[(0, 2), (0, 3), (1, 4)]);
        assert_eq!(
            find_realizer(&c, &t("x1=x2<y1<y2")),
            RealizerSearch::Found(pts(&[(0, 2), (0, 3)]))
        );
        let c = cond(&[(0, 2), (1, 3)]);
        assert_eq!(find_realizer(&c, &t("x1=x2<y1<y2")), RealizerSearch::Absent);
        assert_eq!(
            find_realizer(&c, &t("x1<x2<x3<y1<y2<y3")),
            RealizerSearch::TooFewPoints { needed: 3, available: 2 }
        );
    }

    #[test]
    fn find_realizer_agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let c = random_condition(&mut rng, 12);
            for n in 1..=3 {
                for ty in enumerate_ntypes(n).unwrap() {
                    let brute = c
                        .points()
                        .iter()
                        .copied()
                        .combinations(n)
                        .find(|s| realized_type(s).unwrap() == ty);
                    let found = find_realizer(&c, &ty);
                    assert_eq!(found.found().map(|s| s.to_vec()), brute);
                    if let Some(s) = found.found() {
                        assert_eq!(realized_type(s).unwrap(), ty);
                    }
                }
            }
        }
    }

    #[test]
    fn extend_examples() {
        let one = extend_with_realizers(&FiniteCondition::empty(), 1).unwrap();
        assert_eq!(one.points(), &pts(&[(0, 1)])[..]);

        let two = extend_with_realizers(&FiniteCondition::empty(), 2).unwrap();
        assert!(two.len() <= 7, "{} points", two.len());
        assert_eq!(classify_subsets(&two, 2).classes.len(), 4);

        let seeded = extend_with_realizers(&cond(&[(0, 5)]), 2).unwrap();
        assert!(seeded.contains(Point::new(0, 5)));
        assert_eq!(classify_subsets(&seeded, 2).classes.len(), 4);
    }

    #[test]
    fn extend_covers_all_types() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=3 {
            for size in [0, 3, 8] {
                let c = random_condition(&mut rng, size);
                let ext = extend_with_realizers(&c, n).unwrap();
                assert!(check_condition(ext.points()).is_ok());
                assert!(c.is_subset_of(&ext));
                let idx = classify_subsets(&ext, n);
                assert_eq!(idx.classes.len() as u64, count_ntypes(n).unwrap());
            }
        }
    }

    #[test]
    fn classify_examples() {
        let c = cond(&[(0, 2), (0, 3)]);
        let idx = classify_subsets(&c, 2);
        assert_eq!(idx.classes.len(), 1);
        assert_eq!(idx.classes[&t("x1=x2<y1<y2")], vec![pts(&[(0, 2), (0, 3)])]);
        assert_eq!(
            idx.to_json(),
            serde_json::json!({"x1=x2<y1<y2": [[[0, 2], [0, 3]]]})
        );
    }

    #[test]
    fn classify_counts_binomial() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let c = random_condition(&mut rng, 10);
            for n in 1..=3 {
                let m = c.len() as i64;
                let binom = (0..n as i64).fold(1i64, |acc, i| acc * (m - i) / (i + 1)).max(0);
                assert_eq!(classify_subsets(&c, n).total() as i64, binom);
            }
        }
    }

    #[test]
    fn json_shape_and_validation() {
        let c: FiniteCondition = serde_json::from_str("[[0,1],[0,2],[3,4]]").unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(serde_json::to_string(&c).unwrap(), "[[0,1],[0,2],[3,4]]");
        assert!(serde_json::from_str::<FiniteCondition>("[[0,1],[1,2]]").is_err());
    }
}
