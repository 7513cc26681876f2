//! Colorings of n-subsets and per-type homogeneity.
//!
//! A set `H` is τ-homogeneous for a coloring when every n-subset of `H`
//! realizing the n-type τ gets the same color. Colorings are total over
//! their domain, which is either every n-subset of the ground condition or
//! only the subsets realizing one fixed type (for instance vertical pairs).

mod stabilize;

pub use stabilize::{
    extract_s_from_r, stabilize, stabilize_lex, BitVectorSequence, Direction, SRelation,
    SStatus, StabilizeError, Stabilization, TernaryRelationGrid,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::limits::Limits;
use crate::pointsets::{find_realizer, realized_type, FiniteCondition, Point, RealizerSearch};
use crate::randomgraph::{EdgeColoring, Graph};
use crate::typecalc::{count_ntypes, enumerate_ntypes, NType, TypeError};

/// Opaque color identifier. Numbers read from JSON are kept in their decimal
/// spelling.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Color(pub String);

impl Color {
    pub fn new(s: impl Into<String>) -> Self {
        Color(s.into())
    }
}

impl From<u64> for Color {
    fn from(v: u64) -> Self {
        Color(v.to_string())
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Color {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::String(s) => Ok(Color(s)),
            Value::Number(n) => Ok(Color(n.to_string())),
            Value::Bool(b) => Ok(Color(b.to_string())),
            other => Err(serde::de::Error::custom(format!("not a color: {other}"))),
        }
    }
}

/// Colors computed from the subset itself.
#[derive(Debug, Clone, PartialEq)]
pub enum ColorRule {
    /// The list form of the realized type.
    RealizedType,
    Constant(Color),
    /// Vertical pairs `{<a,b>,<a,c>}` colored 1 if `b E c`, else 0.
    EdgeRelation(Graph),
    /// Vertical pairs colored by the edge color between their y's.
    PaletteEdges(EdgeColoring),
}

#[derive(Debug, Clone, PartialEq)]
enum ColorSource {
    Table(BTreeMap<Vec<Point>, Color>),
    Rule(ColorRule),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HomogeneityError {
    #[error("set is not contained in the coloring's ground set")]
    NotSubset,
    #[error("coloring colors {coloring}-subsets, asked about {asked}")]
    ArityMismatch { coloring: usize, asked: usize },
    #[error("coloring is restricted to {domain}, asked about {asked}")]
    OutsideDomain { domain: NType, asked: NType },
    #[error("coloring table misses {missing} subsets of its domain, e.g. {example:?}")]
    NotTotal { missing: usize, example: Vec<Point> },
    #[error("table entry {0:?} is not an n-subset of the domain")]
    StrayEntry(Vec<Point>),
    #[error("y-coordinate {0} is not a vertex of the graph")]
    NotAVertex(u64),
    #[error("exhaustive search refused: {size} points exceeds the bound {bound}; use greedy mode")]
    ExhaustiveRefused { size: usize, bound: usize },
    #[error(transparent)]
    Type(#[from] TypeError),
}

/// A total coloring of the n-subsets of `ground` (or of those realizing
/// `domain`). Subsets are keyed listed by ascending y.
#[derive(Debug, Clone, PartialEq)]
pub struct Coloring {
    ground: FiniteCondition,
    n: usize,
    domain: Option<NType>,
    source: ColorSource,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringEntry {
    pub subset: Vec<Point>,
    pub color: Color,
}

/// On-disk coloring table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringTable {
    pub n: usize,
    /// Restricts the domain to one type, in list form.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<String>,
    pub entries: Vec<ColoringEntry>,
}

fn sorted(subset: &[Point]) -> Vec<Point> {
    let mut s = subset.to_vec();
    s.sort_by_key(|p| p.y);
    s
}

impl Coloring {
    pub fn from_rule(ground: FiniteCondition, n: usize, rule: ColorRule) -> Self {
        Coloring { ground, n, domain: None, source: ColorSource::Rule(rule) }
    }

    pub fn realized_type(ground: FiniteCondition, n: usize) -> Self {
        Coloring::from_rule(ground, n, ColorRule::RealizedType)
    }

    pub fn constant(ground: FiniteCondition, n: usize, color: Color) -> Self {
        Coloring::from_rule(ground, n, ColorRule::Constant(color))
    }

    /// Colors vertical pairs only; checks that every y is a vertex.
    pub fn vertical_by_rule(ground: FiniteCondition, rule: ColorRule) -> Result<Self, HomogeneityError> {
        let vertices = match &rule {
            ColorRule::EdgeRelation(g) => g.vertex_count(),
            ColorRule::PaletteEdges(c) => c.vertex_count(),
            _ => usize::MAX,
        };
        if let Some(p) = ground.points().iter().find(|p| p.y as usize >= vertices) {
            return Err(HomogeneityError::NotAVertex(p.y));
        }
        Ok(Coloring {
            ground,
            n: 2,
            domain: Some(crate::typecalc::vertical_pair_type()),
            source: ColorSource::Rule(rule),
        })
    }

    /// Builds a table coloring and checks it is total over its domain.
    pub fn from_table(
        ground: FiniteCondition,
        n: usize,
        domain: Option<NType>,
        entries: impl IntoIterator<Item = (Vec<Point>, Color)>,
    ) -> Result<Self, HomogeneityError> {
        let table: BTreeMap<Vec<Point>, Color> =
            entries.into_iter().map(|(s, c)| (sorted(&s), c)).collect();
        let mut c = Coloring { ground, n, domain, source: ColorSource::Table(BTreeMap::new()) };
        for key in table.keys() {
            let ok = key.len() == n
                && key.iter().all(|&p| c.ground.contains(p))
                && key.iter().map(|p| p.y).collect::<BTreeSet<_>>().len() == n
                && c.in_domain(key);
            if !ok {
                return Err(HomogeneityError::StrayEntry(key.clone()));
            }
        }
        let missing: Vec<Vec<Point>> = c
            .ground
            .points()
            .iter()
            .copied()
            .combinations(n)
            .filter(|s| c.in_domain(s) && !table.contains_key(s))
            .collect();
        if let Some(example) = missing.first() {
            return Err(HomogeneityError::NotTotal { missing: missing.len(), example: example.clone() });
        }
        c.source = ColorSource::Table(table);
        Ok(c)
    }

    pub fn from_table_json(ground: FiniteCondition, t: &ColoringTable) -> Result<Self, HomogeneityError> {
        let domain = t.domain.as_deref().map(str::parse).transpose()?;
        Coloring::from_table(
            ground,
            t.n,
            domain,
            t.entries.iter().map(|e| (e.subset.clone(), e.color.clone())),
        )
    }

    /// The explicit table over the whole domain.
    pub fn to_table(&self) -> ColoringTable {
        let entries = self
            .ground
            .points()
            .iter()
            .copied()
            .combinations(self.n)
            .filter_map(|s| self.color_of(&s).map(|color| ColoringEntry { subset: s, color }))
            .collect();
        ColoringTable { n: self.n, domain: self.domain.as_ref().map(|t| t.to_string()), entries }
    }

    pub fn ground(&self) -> &FiniteCondition {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domain(&self) -> Option<&NType> {
        self.domain.as_ref()
    }

    fn in_domain(&self, subset: &[Point]) -> bool {
        match &self.domain {
            None => true,
            Some(t) => realized_type(subset).is_ok_and(|r| &r == t),
        }
    }

    /// Color of an n-subset of the ground set, `None` outside the domain.
    pub fn color_of(&self, subset: &[Point]) -> Option<Color> {
        if subset.len() != self.n || !self.in_domain(subset) {
            return None;
        }
        let key = sorted(subset);
        match &self.source {
            ColorSource::Table(t) => t.get(&key).cloned(),
            ColorSource::Rule(rule) => Some(match rule {
                ColorRule::RealizedType => {
                    Color(realized_type(&key).ok()?.to_string())
                }
                ColorRule::Constant(c) => c.clone(),
                ColorRule::EdgeRelation(g) => {
                    Color::from(g.adjacent(key[0].y as usize, key[1].y as usize) as u64)
                }
                ColorRule::PaletteEdges(ec) => {
                    Color::from(ec.color(key[0].y as usize, key[1].y as usize)? as u64)
                }
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomogeneityReport {
    pub homogeneous: bool,
    /// The common color, when homogeneous and not vacuous.
    pub color: Option<Color>,
    pub realizer_count: usize,
    /// No subset of `H` realizes τ.
    pub vacuous: bool,
}

fn check_membership(h: &FiniteCondition, c: &Coloring) -> Result<(), HomogeneityError> {
    if h.is_subset_of(&c.ground) {
        Ok(())
    } else {
        Err(HomogeneityError::NotSubset)
    }
}

fn check_type(c: &Coloring, t: &NType) -> Result<(), HomogeneityError> {
    if t.n() != c.n {
        return Err(HomogeneityError::ArityMismatch { coloring: c.n, asked: t.n() });
    }
    match &c.domain {
        Some(d) if d != t => {
            Err(HomogeneityError::OutsideDomain { domain: d.clone(), asked: t.clone() })
        }
        _ => Ok(()),
    }
}

/// Whether every τ-realizing n-subset of `h` has one color. An empty range
/// is homogeneous, flagged `vacuous`.
pub fn check_tau_homogeneous(
    h: &FiniteCondition,
    c: &Coloring,
    t: &NType,
) -> Result<HomogeneityReport, HomogeneityError> {
    check_membership(h, c)?;
    check_type(c, t)?;
    let mut color: Option<Color> = None;
    let mut count = 0;
    let mut homogeneous = true;
    for s in h.points().iter().copied().combinations(t.n()) {
        if realized_type(&s).ok().as_ref() != Some(t) {
            continue;
        }
        count += 1;
        let col = c.color_of(&s).expect("domain covers τ");
        match &color {
            None => color = Some(col),
            Some(prev) if *prev != col => homogeneous = false,
            _ => {}
        }
    }
    Ok(HomogeneityReport {
        homogeneous,
        color: if homogeneous { color } else { None },
        realizer_count: count,
        vacuous: count == 0,
    })
}

/// Number of distinct colors over the colored n-subsets of `h`.
pub fn count_classes_met(h: &FiniteCondition, c: &Coloring, n: usize) -> Result<usize, HomogeneityError> {
    check_membership(h, c)?;
    if n != c.n {
        return Err(HomogeneityError::ArityMismatch { coloring: c.n, asked: n });
    }
    Ok(h.points()
        .iter()
        .copied()
        .combinations(n)
        .filter_map(|s| c.color_of(&s))
        .collect::<BTreeSet<_>>()
        .len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Maximum-size set, lexicographically least among ties.
    Exact,
    /// Maximal by inclusion, no optimality claim.
    Greedy,
    /// Exact up to the exhaustive bound, greedy above it.
    Auto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub set: FiniteCondition,
    pub color: Option<Color>,
    pub realizer_count: usize,
    pub min_size: usize,
    pub min_size_met: bool,
    pub mode: SearchMode,
    /// True only for exact results.
    pub optimal: bool,
    pub subsets_examined: u64,
}

/// τ-realizing subsets of the ground set, as point indices, with color ids.
struct TauIndex {
    members: Vec<Vec<usize>>,
    colors: Vec<usize>,
    palette: Vec<Color>,
}

impl TauIndex {
    fn build(c: &Coloring, t: &NType) -> Self {
        let pts = c.ground.points();
        let mut palette: Vec<Color> = Vec::new();
        let mut members = Vec::new();
        let mut colors = Vec::new();
        for idx in (0..pts.len()).combinations(t.n()) {
            let s: Vec<Point> = idx.iter().map(|&i| pts[i]).collect();
            if realized_type(&s).ok().as_ref() != Some(t) {
                continue;
            }
            let col = c.color_of(&s).expect("domain covers τ");
            let id = match palette.iter().position(|p| *p == col) {
                Some(id) => id,
                None => {
                    palette.push(col);
                    palette.len() - 1
                }
            };
            members.push(idx);
            colors.push(id);
        }
        TauIndex { members, colors, palette }
    }

    /// Color id shared by every τ-subset inside `alive`, `Ok(None)` if there
    /// are none, `Err(())` if two colors occur.
    fn common_color(&self, alive: &[bool]) -> (Result<Option<usize>, ()>, usize) {
        let mut seen = None;
        let mut count = 0;
        for (m, &col) in self.members.iter().zip(&self.colors) {
            if m.iter().all(|&i| alive[i]) {
                count += 1;
                match seen {
                    None => seen = Some(col),
                    Some(prev) if prev != col => return (Err(()), count),
                    _ => {}
                }
            }
        }
        (Ok(seen), count)
    }
}

/// Finds a large `H ⊆ ground` with `[H]_τ` monochromatic.
pub fn search_homogeneous(
    c: &Coloring,
    t: &NType,
    min_size: usize,
    mode: SearchMode,
    limits: &Limits,
) -> Result<SearchOutcome, HomogeneityError> {
    check_type(c, t)?;
    let size = c.ground.len();
    let mode = match mode {
        SearchMode::Auto if size <= limits.exhaustive => SearchMode::Exact,
        SearchMode::Auto => SearchMode::Greedy,
        SearchMode::Exact if size > limits.exhaustive => {
            return Err(HomogeneityError::ExhaustiveRefused { size, bound: limits.exhaustive })
        }
        m => m,
    };
    let index = TauIndex::build(c, t);
    let (alive, examined) = match mode {
        SearchMode::Exact => exact_search(&index, size),
        _ => greedy_search(&index, size),
    };
    let (col, count) = index.common_color(&alive);
    let col = col.expect("search returns a homogeneous set");
    let set = c.ground.subset(
        c.ground.points().iter().zip(&alive).filter(|(_, &a)| a).map(|(&p, _)| p),
    );
    Ok(SearchOutcome {
        min_size_met: set.len() >= min_size,
        color: col.map(|id| index.palette[id].clone()),
        realizer_count: count,
        set,
        min_size,
        mode,
        optimal: mode == SearchMode::Exact,
        subsets_examined: examined,
    })
}

fn exact_search(index: &TauIndex, size: usize) -> (Vec<bool>, u64) {
    let mut examined = 0;
    for k in (0..=size).rev() {
        for chosen in (0..size).combinations(k) {
            examined += 1;
            let mut alive = vec![false; size];
            chosen.iter().for_each(|&i| alive[i] = true);
            if index.common_color(&alive).0.is_ok() {
                return (alive, examined);
            }
        }
    }
    unreachable!("the empty set is homogeneous")
}

/// For each target color: drop the point lying in the most off-color
/// τ-subsets until none is left, then add back every dropped point that
/// keeps the set homogeneous. Keeps the largest result.
fn greedy_search(index: &TauIndex, size: usize) -> (Vec<bool>, u64) {
    let mut examined = 0;
    let mut best: Option<Vec<bool>> = None;
    let targets: Vec<Option<usize>> = if index.palette.is_empty() {
        vec![None]
    } else {
        (0..index.palette.len()).map(Some).collect()
    };
    for target in targets {
        let mut alive = vec![true; size];
        let mut removed = Vec::new();
        loop {
            examined += 1;
            let mut load = vec![0usize; size];
            let mut any = false;
            for (m, &col) in index.members.iter().zip(&index.colors) {
                if Some(col) != target && m.iter().all(|&i| alive[i]) {
                    any = true;
                    m.iter().for_each(|&i| load[i] += 1);
                }
            }
            if !any {
                break;
            }
            let worst = (0..size).max_by_key(|&i| (load[i], std::cmp::Reverse(i))).unwrap();
            alive[worst] = false;
            removed.push(worst);
        }
        removed.sort_unstable();
        for i in removed {
            examined += 1;
            alive[i] = true;
            if index.common_color(&alive).0.is_err() {
                alive[i] = false;
            }
        }
        let better = match &best {
            None => true,
            Some(b) => {
                let (na, nb) = (alive.iter().filter(|&&a| a).count(), b.iter().filter(|&&a| a).count());
                // lexicographically least index list among ties
                na > nb || (na == nb && alive > *b)
            }
        };
        if better {
            best = Some(alive);
        }
    }
    (best.expect("at least one target"), examined)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FloorReport {
    pub n: usize,
    pub classes_met: usize,
    pub t_n: u64,
    pub floor_holds: bool,
    /// Types without a realizer in the condition, in list form.
    pub missing_realizers: Vec<String>,
}

/// Colors the n-subsets of `cond` by realized type and counts the classes
/// met. When every type has a realizer the count is exactly T(n), so no
/// subset-closed family containing `cond` can meet at most T(n) - 1 classes.
pub fn weak_ramsey_floor_demo(cond: &FiniteCondition, n: usize) -> Result<FloorReport, HomogeneityError> {
    let t_n = count_ntypes(n)?;
    let coloring = Coloring::realized_type(cond.clone(), n);
    let classes_met = count_classes_met(cond, &coloring, n)?;
    let missing_realizers: Vec<String> = enumerate_ntypes(n)?
        .into_iter()
        .filter(|t| !matches!(find_realizer(cond, t), RealizerSearch::Found(_)))
        .map(|t| t.to_string())
        .collect();
    Ok(FloorReport {
        n,
        classes_met,
        t_n,
        floor_holds: missing_realizers.is_empty() && classes_met as u64 == t_n,
        missing_realizers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::random_condition;
    use crate::pointsets::extend_with_realizers;
    use crate::typecalc::vertical_pair_type;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cond(v: &[(u64, u64)]) -> FiniteCondition {
        FiniteCondition::new(v.iter().map(|&(x, y)| Point::new(x, y))).unwrap()
    }

    fn t(s: &str) -> NType {
        s.parse().unwrap()
    }

    #[test]
    fn check_examples() {
        let h = cond(&[(0, 1), (0, 2), (0, 3)]);
        let c = Coloring::constant(h.clone(), 2, Color::from(1));
        let r = check_tau_homogeneous(&h, &c, &vertical_pair_type()).unwrap();
        assert!(r.homogeneous && r.color == Some(Color::from(1)) && r.realizer_count == 3);

        let h = cond(&[(0, 1), (0, 2), (3, 4), (3, 5)]);
        let entries = h
            .points()
            .iter()
            .copied()
            .combinations(2)
            .map(|s| {
                let col = if s[0].x == 0 { 1 } else { 2 };
                (s, Color::from(col))
            });
        let c = Coloring::from_table(h.clone(), 2, None, entries).unwrap();
        let r = check_tau_homogeneous(&h, &c, &vertical_pair_type()).unwrap();
        assert!(!r.homogeneous && r.color.is_none());

        let r = check_tau_homogeneous(&cond(&[(0, 1), (2, 3)]), &c, &vertical_pair_type());
        assert_eq!(r, Err(HomogeneityError::NotSubset));

        let h = cond(&[(0, 2), (1, 3)]);
        let c = Coloring::realized_type(h.clone(), 2);
        let r = check_tau_homogeneous(&h, &c, &vertical_pair_type()).unwrap();
        assert!(r.homogeneous && r.vacuous && r.realizer_count == 0 && r.color.is_none());
    }

    #[test]
    fn partial_tables_are_rejected() {
        let h = cond(&[(0, 1), (0, 2), (3, 4)]);
        let err = Coloring::from_table(h, 2, None, [(vec![Point::new(0, 1), Point::new(0, 2)], Color::from(0))]);
        assert!(matches!(err, Err(HomogeneityError::NotTotal { missing: 2, .. })));
    }

    #[test]
    fn count_examples() {
        let h = cond(&[(0, 1), (0, 2), (3, 4)]);
        let c = Coloring::constant(h.clone(), 2, Color::new("a"));
        assert_eq!(count_classes_met(&h, &c, 2).unwrap(), 1);
        let g = extend_with_realizers(&FiniteCondition::empty(), 2).unwrap();
        let c = Coloring::realized_type(g.clone(), 2);
        assert_eq!(count_classes_met(&g, &c, 2).unwrap(), 4);
        let small = cond(&[(0, 1)]);
        let c = Coloring::realized_type(small.clone(), 2);
        assert_eq!(count_classes_met(&small, &c, 2).unwrap(), 0);
    }

    #[test]
    fn count_is_monotone_in_h() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..30 {
            let g = random_condition(&mut rng, 9);
            let c = Coloring::realized_type(g.clone(), 2);
            let mut prev = 0;
            for k in 0..=g.len() {
                let h = g.subset(g.points()[..k].iter().copied());
                let met = count_classes_met(&h, &c, 2).unwrap();
                assert!(met >= prev && met <= 4);
                prev = met;
            }
        }
    }

    #[test]
    fn realized_type_coloring_is_homogeneous_for_every_type() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let g = random_condition(&mut rng, 10);
            for n in 1..=3 {
                let c = Coloring::realized_type(g.clone(), n);
                for ty in enumerate_ntypes(n).unwrap() {
                    assert!(check_tau_homogeneous(&g, &c, &ty).unwrap().homogeneous);
                    let out = search_homogeneous(&c, &ty, 0, SearchMode::Exact, &Limits::default()).unwrap();
                    assert_eq!(out.set, g);
                }
            }
        }
    }

    #[test]
    fn search_examples() {
        let g = cond(&[(0, 1), (0, 2), (3, 4), (3, 5)]);
        let c = Coloring::constant(g.clone(), 2, Color::from(7));
        let out = search_homogeneous(&c, &t("x1<y1<x2<y2"), 2, SearchMode::Exact, &Limits::default()).unwrap();
        assert_eq!(out.set, g);
        assert!(out.optimal && out.min_size_met);
    }

    /// Random 2-colorings of the vertical pairs of a 3-column, 9-point
    /// condition.
    fn column_instance(rng: &mut ChaCha8Rng) -> Coloring {
        let pts: Vec<Point> = (0..3u64)
            .flat_map(|c| (0..3u64).map(move |r| Point::new(c, 10 + 3 * c + r)))
            .collect();
        let g = FiniteCondition::new(pts).unwrap();
        let entries: Vec<_> = g
            .points()
            .iter()
            .copied()
            .combinations(2)
            .filter(|s| s[0].x == s[1].x)
            .map(|s| (s, Color::from(rng.gen_range(0..2u64))))
            .collect();
        Coloring::from_table(g, 2, Some(vertical_pair_type()), entries).unwrap()
    }

    #[test]
    fn search_results_are_homogeneous_and_exact_dominates_greedy() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let tau = vertical_pair_type();
        for _ in 0..50 {
            let c = column_instance(&mut rng);
            let exact = search_homogeneous(&c, &tau, 6, SearchMode::Exact, &Limits::default()).unwrap();
            let greedy = search_homogeneous(&c, &tau, 6, SearchMode::Greedy, &Limits::default()).unwrap();
            for out in [&exact, &greedy] {
                assert!(check_tau_homogeneous(&out.set, &c, &tau).unwrap().homogeneous);
            }
            assert!(exact.set.len() >= greedy.set.len());
            assert!(!greedy.optimal);
            // each column holds 3 points, so dropping one point per column
            // always leaves a homogeneous set
            assert!(exact.set.len() >= 6);
        }
    }

    #[test]
    fn exact_search_matches_brute_force_maximum() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let tau = vertical_pair_type();
        for _ in 0..20 {
            let c = column_instance(&mut rng);
            let pts = c.ground().points().to_vec();
            let best = (0u32..1 << pts.len())
                .filter(|mask| {
                    let h = c.ground().subset(
                        (0..pts.len()).filter(|i| mask & (1 << i) != 0).map(|i| pts[i]),
                    );
                    check_tau_homogeneous(&h, &c, &tau).unwrap().homogeneous
                })
                .map(|m| m.count_ones())
                .max()
                .unwrap();
            let exact = search_homogeneous(&c, &tau, 0, SearchMode::Exact, &Limits::default()).unwrap();
            assert_eq!(exact.set.len() as u32, best);
        }
    }

    #[test]
    fn greedy_is_maximal_by_inclusion() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        let tau = vertical_pair_type();
        for _ in 0..30 {
            let c = column_instance(&mut rng);
            let out = search_homogeneous(&c, &tau, 0, SearchMode::Greedy, &Limits::default()).unwrap();
            for &p in c.ground().points() {
                if out.set.contains(p) {
                    continue;
                }
                let bigger = c.ground().subset(out.set.points().iter().copied().chain([p]));
                assert!(!check_tau_homogeneous(&bigger, &c, &tau).unwrap().homogeneous);
            }
        }
    }

    #[test]
    fn exhaustive_mode_is_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let g = random_condition(&mut rng, 20);
        let c = Coloring::realized_type(g, 2);
        let limits = Limits::default();
        let err = search_homogeneous(&c, &vertical_pair_type(), 0, SearchMode::Exact, &limits);
        assert!(matches!(err, Err(HomogeneityError::ExhaustiveRefused { size: 20, bound: 16 })));
        let auto = search_homogeneous(&c, &vertical_pair_type(), 0, SearchMode::Auto, &limits).unwrap();
        assert_eq!(auto.mode, SearchMode::Greedy);
    }

    #[test]
    fn floor_examples() {
        let g = extend_with_realizers(&FiniteCondition::empty(), 2).unwrap();
        let r = weak_ramsey_floor_demo(&g, 2).unwrap();
        assert_eq!((r.classes_met, r.t_n, r.floor_holds), (4, 4, true));

        let column = cond(&[(0, 1), (0, 2), (0, 3)]);
        let r = weak_ramsey_floor_demo(&column, 2).unwrap();
        assert_eq!(r.classes_met, 1);
        assert!(!r.floor_holds);
        assert_eq!(r.missing_realizers.len(), 3);

        let g3 = extend_with_realizers(&FiniteCondition::empty(), 3).unwrap();
        let r = weak_ramsey_floor_demo(&g3, 3).unwrap();
        assert_eq!(r.classes_met as u64, count_ntypes(3).unwrap());
        assert!(r.floor_holds);
    }

    #[test]
    fn fewer_classes_means_missing_realizers() {
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        for _ in 0..40 {
            let g = random_condition(&mut rng, 7);
            let r = weak_ramsey_floor_demo(&g, 2).unwrap();
            assert_eq!(r.classes_met + r.missing_realizers.len(), 4);
        }
    }

    #[test]
    fn table_json_round_trip() {
        let g = cond(&[(0, 1), (0, 2), (3, 4)]);
        let c = Coloring::realized_type(g.clone(), 2);
        let table = c.to_table();
        let json = serde_json::to_string(&table).unwrap();
        let back: ColoringTable = serde_json::from_str(&json).unwrap();
        let c2 = Coloring::from_table_json(g.clone(), &back).unwrap();
        for s in g.points().iter().copied().combinations(2) {
            assert_eq!(c.color_of(&s), c2.color_of(&s));
        }
        let numeric: ColoringTable = serde_json::from_str(
            r#"{"n":2,"domain":"x1=x2<y1<y2","entries":[{"subset":[[0,1],[0,2]],"color":1}]}"#,
        )
        .unwrap();
        let c3 = Coloring::from_table_json(g, &numeric).unwrap();
        assert_eq!(c3.color_of(&[Point::new(0, 2), Point::new(0, 1)]), Some(Color::from(1)));
    }
}
