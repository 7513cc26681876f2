//! Deterministic finite approximations of the random graph and of random
//! edge colorings, richness checks, and the two vertical-pair demos.
//!
//! Configurations are realized one at a time in a fixed schedule: parameter
//! sets ordered by (largest vertex, size, lexicographic), and for each set
//! every adjacency pattern `S` as an ascending bitmask. A missing witness is
//! supplied by a fresh vertex. The seed graph is the single vertex 0.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homogeneity::{
    check_tau_homogeneous, count_classes_met, ColorRule, Coloring, HomogeneityError,
};
use crate::limits::Limits;
use crate::pointsets::{FiniteCondition, Point};
use crate::typecalc::vertical_pair_type;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {count} vertices")]
    OutOfRange { vertex: usize, count: usize },
    #[error("self-loop at {0}")]
    SelfLoop(usize),
    #[error("parameter {0} repeated")]
    DuplicateParam(usize),
    #[error("S index {index} out of range for {len} parameters")]
    BadSubsetIndex { index: usize, len: usize },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("richness search refused: {size} vertices exceeds the bound {bound}")]
    RichRefused { size: usize, bound: usize },
    #[error("palette size must be at least 2, got {0}")]
    BadPalette(usize),
    #[error("color {color} outside palette of size {palette}")]
    BadColor { color: u32, palette: usize },
    #[error("{0}")]
    Demo(String),
}

/// Simple undirected graph on `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    adj: Vec<Vec<bool>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = GraphError;
    fn try_from(r: GraphRepr) -> Result<Self, Self::Error> {
        Graph::from_edges(r.vertices, r.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { vertices: g.vertex_count(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![vec![false; n]; n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in (0..n).tuple_combinations() {
            g.adj[u][v] = true;
            g.adj[v][u] = true;
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, count: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u][v] = true;
            g.adj[v][u] = true;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .tuple_combinations()
            .filter(|&(u, v)| self.adj[u][v])
            .collect()
    }

    pub fn is_symmetric_irreflexive(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|u| !self.adj[u][u] && (0..n).all(|v| self.adj[u][v] == self.adj[v][u]))
    }

    fn add_vertex(&mut self, neighbors: &[usize]) -> usize {
        let b = self.vertex_count();
        for row in &mut self.adj {
            row.push(false);
        }
        self.adj.push(vec![false; b + 1]);
        for &a in neighbors {
            self.adj[a][b] = true;
            self.adj[b][a] = true;
        }
        b
    }
}

/// A demand for a vertex adjacent to exactly the parameters indexed by `s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Configuration {
    pub params: Vec<usize>,
    pub s: BTreeSet<usize>,
}

impl Configuration {
    pub fn new(params: Vec<usize>, s: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let s: BTreeSet<usize> = s.into_iter().collect();
        let mut seen = BTreeSet::new();
        if let Some(&d) = params.iter().find(|&&p| !seen.insert(p)) {
            return Err(GraphError::DuplicateParam(d));
        }
        if let Some(&i) = s.iter().find(|&&i| i >= params.len()) {
            return Err(GraphError::BadSubsetIndex { index: i, len: params.len() });
        }
        Ok(Configuration { params, s })
    }

    fn from_mask(params: Vec<usize>, mask: usize) -> Self {
        let s = (0..params.len()).filter(|i| mask >> i & 1 == 1).collect();
        Configuration { params, s }
    }

    fn check_range(&self, count: usize) -> Result<(), GraphError> {
        match self.params.iter().find(|&&p| p >= count) {
            Some(&vertex) => Err(GraphError::OutOfRange { vertex, count }),
            None => Ok(()),
        }
    }
}

/// Nonempty increasing parameter sets in schedule order.
fn param_sets() -> impl Iterator<Item = Vec<usize>> {
    (0usize..).flat_map(|m| {
        (0..=m).flat_map(move |c| {
            (0..m).combinations(c).map(move |mut p| {
                p.push(m);
                p
            })
        })
    })
}

/// Parameter sets of size `0..=k` drawn from `0..m`.
fn param_sets_below(m: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=k.min(m)).flat_map(move |c| (0..m).combinations(c))
}

/// The configuration schedule, without end.
pub fn schedule() -> impl Iterator<Item = Configuration> {
    param_sets().flat_map(|p| {
        let len = p.len();
        (0..1usize << len).map(move |mask| Configuration::from_mask(p.clone(), mask))
    })
}

/// Steps needed to process every parameter set inside `0..=max_vertex`.
pub fn schedule_len_through(max_vertex: u32) -> usize {
    3usize.pow(max_vertex + 1) - 1
}

/// Least vertex outside the parameters with the demanded adjacency.
pub fn realize_configuration(g: &Graph, cfg: &Configuration) -> Result<Option<usize>, GraphError> {
    cfg.check_range(g.vertex_count())?;
    Ok((0..g.vertex_count()).find(|&b| {
        !cfg.params.contains(&b)
            && cfg.params.iter().enumerate().all(|(i, &a)| g.adjacent(a, b) == cfg.s.contains(&i))
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BuildStep {
    pub config: Configuration,
    pub witness: usize,
    pub fresh: bool,
}

/// Runs the first `steps` entries of the schedule from the seed graph.
pub fn build_random_graph(steps: usize) -> Graph {
    build_random_graph_logged(steps).0
}

pub fn build_random_graph_logged(steps: usize) -> (Graph, Vec<BuildStep>) {
    let mut g = Graph::empty(1);
    let mut log = Vec::with_capacity(steps);
    for config in schedule().take(steps) {
        let found = realize_configuration(&g, &config).expect("schedule stays in range");
        let (witness, fresh) = match found {
            Some(b) => (b, false),
            None => {
                let nbrs: Vec<usize> = config.s.iter().map(|&i| config.params[i]).collect();
                (g.add_vertex(&nbrs), true)
            }
        };
        log.push(BuildStep { config, witness, fresh });
    }
    (g, log)
}

/// Configurations with at most `k` parameters among the first `m` vertices
/// that have no witness in `g`.
pub fn check_extension_property(g: &Graph, k: usize, m: usize) -> Result<Vec<Configuration>, GraphError> {
    if k == 0 {
        return Err(GraphError::ZeroK);
    }
    if m > g.vertex_count() {
        return Err(GraphError::OutOfRange { vertex: m, count: g.vertex_count() });
    }
    let mut missing = Vec::new();
    for p in param_sets_below(m, k) {
        for mask in 0..1usize << p.len() {
            let cfg = Configuration::from_mask(p.clone(), mask);
            if realize_configuration(g, &cfg)?.is_none() {
                missing.push(cfg);
            }
        }
    }
    Ok(missing)
}

/// Every configuration with `1..=k` parameters in `y` has a witness in `y`.
fn internally_extensive(g: &Graph, y: &[usize], k: usize) -> bool {
    (1..=k.min(y.len())).all(|c| {
        y.iter().copied().combinations(c).all(|p| {
            let patterns: BTreeSet<usize> = y
                .iter()
                .filter(|b| !p.contains(b))
                .map(|&b| p.iter().enumerate().fold(0, |acc, (i, &a)| acc | (g.adjacent(a, b) as usize) << i))
                .collect();
            patterns.len() == 1 << c
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RichReport {
    pub rich: bool,
    /// Smallest, then lexicographically least, internally extensive subset.
    pub witness: Option<Vec<usize>>,
    pub subsets_examined: u64,
}

/// Finite surrogate for richness: some nonempty `Y ⊆ set` has the internal
/// k-extension property.
pub fn check_rich(set: &[usize], g: &Graph, k: usize, limits: &Limits) -> Result<RichReport, GraphError> {
    if k == 0 {
        return Err(GraphError::ZeroK);
    }
    let set: Vec<usize> = set.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if let Some(&v) = set.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(GraphError::OutOfRange { vertex: v, count: g.vertex_count() });
    }
    if set.len() > limits.rich {
        return Err(GraphError::RichRefused { size: set.len(), bound: limits.rich });
    }
    let mut examined = 0;
    for size in 1..=set.len() {
        for y in set.iter().copied().combinations(size) {
            examined += 1;
            if internally_extensive(g, &y, k) {
                return Ok(RichReport { rich: true, witness: Some(y), subsets_examined: examined });
            }
        }
    }
    Ok(RichReport { rich: false, witness: None, subsets_examined: examined })
}

/// Colors the vertical pairs `{<a,b>,<a,c>}` of `cond` by adjacency of `b`
/// and `c` (1 for an edge, 0 otherwise).
pub fn color_vertical_pairs(cond: &FiniteCondition, g: &Graph) -> Result<Coloring, HomogeneityError> {
    Coloring::vertical_by_rule(cond.clone(), ColorRule::EdgeRelation(g.clone()))
}

/// Symmetric coloring of the pairs of `0..vertex_count` with colors
/// `0..palette`. JSON lists nonzero pairs only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EdgeColoringRepr", into = "EdgeColoringRepr")]
pub struct EdgeColoring {
    palette: usize,
    colors: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct EdgeColoringRepr {
    palette: usize,
    vertices: usize,
    /// `[u, v, color]`; unlisted pairs have color 0.
    edges: Vec<[usize; 3]>,
}

impl TryFrom<EdgeColoringRepr> for EdgeColoring {
    type Error = GraphError;
    fn try_from(r: EdgeColoringRepr) -> Result<Self, Self::Error> {
        if r.palette < 2 {
            return Err(GraphError::BadPalette(r.palette));
        }
        let mut ec = EdgeColoring { palette: r.palette, colors: vec![vec![0; r.vertices]; r.vertices] };
        for [u, v, c] in r.edges {
            for w in [u, v] {
                if w >= r.vertices {
                    return Err(GraphError::OutOfRange { vertex: w, count: r.vertices });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if c >= r.palette {
                return Err(GraphError::BadColor { color: c as u32, palette: r.palette });
            }
            ec.colors[u][v] = c as u32;
            ec.colors[v][u] = c as u32;
        }
        Ok(ec)
    }
}

impl From<EdgeColoring> for EdgeColoringRepr {
    fn from(ec: EdgeColoring) -> Self {
        let n = ec.vertex_count();
        let edges = (0..n)
            .tuple_combinations()
            .filter(|&(u, v)| ec.colors[u][v] != 0)
            .map(|(u, v)| [u, v, ec.colors[u][v] as usize])
            .collect();
        EdgeColoringRepr { palette: ec.palette, vertices: n, edges }
    }
}

impl EdgeColoring {
    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    /// `None` on the diagonal or out of range.
    pub fn color(&self, u: usize, v: usize) -> Option<u32> {
        (u != v && u < self.vertex_count() && v < self.vertex_count()).then(|| self.colors[u][v])
    }

    fn add_vertex(&mut self, params: &[usize], f: &[u32]) {
        let z = self.vertex_count();
        for row in &mut self.colors {
            row.push(0);
        }
        self.colors.push(vec![0; z + 1]);
        for (&a, &c) in params.iter().zip(f) {
            self.colors[a][z] = c;
            self.colors[z][a] = c;
        }
    }
}

/// A demand for a vertex whose edge to `params[i]` has color `colors[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorConfiguration {
    pub params: Vec<usize>,
    pub colors: Vec<u32>,
}

/// Color configurations in schedule order; `f` runs through base-`t`
/// codes with digit `i` giving the color for `params[i]`.
pub fn color_schedule(t: usize) -> impl Iterator<Item = ColorConfiguration> {
    param_sets().flat_map(move |p| {
        let len = p.len();
        (0..t.pow(len as u32)).map(move |code| ColorConfiguration {
            params: p.clone(),
            colors: (0..len).map(|i| (code / t.pow(i as u32) % t) as u32).collect(),
        })
    })
}

/// `sum_{j <= max_vertex} t (1+t)^j`.
pub fn color_schedule_len_through(t: usize, max_vertex: u32) -> usize {
    (0..=max_vertex).map(|j| t * (1 + t).pow(j)).sum()
}

pub fn realize_color_configuration(ec: &EdgeColoring, cfg: &ColorConfiguration) -> Option<usize> {
    (0..ec.vertex_count()).find(|&z| {
        !cfg.params.contains(&z)
            && cfg.params.iter().zip(&cfg.colors).all(|(&a, &c)| ec.color(a, z) == Some(c))
    })
}

/// Palette analogue of [`build_random_graph`]; edges from a fresh witness to
/// non-parameters get color 0.
pub fn build_random_coloring(t: usize, steps: usize) -> Result<EdgeColoring, GraphError> {
    if t < 2 {
        return Err(GraphError::BadPalette(t));
    }
    let mut ec = EdgeColoring { palette: t, colors: vec![vec![0]] };
    for cfg in color_schedule(t).take(steps) {
        if realize_color_configuration(&ec, &cfg).is_none() {
            ec.add_vertex(&cfg.params, &cfg.colors);
        }
    }
    Ok(ec)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoReverseReport {
    pub conditions: usize,
    pub columns: usize,
    pub non_homogeneous_columns: usize,
    /// Every rich column carries both colors.
    pub holds: bool,
    pub graph_vertices: usize,
    pub sample: Option<FiniteCondition>,
}

/// Depth of the demo graph: every parameter set inside `0..=DEMO_DEPTH` is
/// realized, so those vertices act as hubs for the later witnesses.
pub const DEMO_DEPTH: u32 = 6;

/// One or two columns. Each column takes three hub vertices: the least becomes its x-coordinate
/// and the other two join 2 to 4 random witnesses above the hubs as its
/// y-set. Columns are resampled until they pass the k = 1 richness check.
fn rich_condition<R: Rng + ?Sized>(rng: &mut R, g: &Graph, limits: &Limits) -> Result<FiniteCondition, GraphError> {
    let hubs = DEMO_DEPTH as usize + 1;
    let ncols = rng.gen_range(1..=2);
    let mut low: Vec<usize> = (0..hubs).collect();
    low.shuffle(rng);
    let mut pool: Vec<usize> = (hubs..g.vertex_count()).collect();
    let mut points = Vec::new();
    for triple in low.chunks_exact(3).take(ncols) {
        let mut triple = triple.to_vec();
        triple.sort_unstable();
        let x = triple[0] as u64;
        let mut found = None;
        for _ in 0..10_000 {
            let leaves = rng.gen_range(2..=4);
            let mut ys: Vec<usize> = pool.choose_multiple(rng, leaves).copied().collect();
            ys.extend(&triple[1..]);
            if check_rich(&ys, g, 1, limits)?.rich {
                found = Some(ys);
                break;
            }
        }
        let ys = found.ok_or_else(|| GraphError::Demo("no rich column found".into()))?;
        pool.retain(|v| !ys.contains(v));
        points.extend(ys.iter().map(|&y| Point::new(x, y as u64)));
    }
    FiniteCondition::new(points).map_err(|e| GraphError::Demo(e.to_string()))
}

/// Finite form of the counterexample: coloring vertical pairs by the graph,
/// no rich column is homogeneous for the vertical type.
pub fn demo_noreverse<R: Rng + ?Sized>(
    rng: &mut R,
    conditions: usize,
    limits: &Limits,
) -> Result<NoReverseReport, GraphError> {
    let g = build_random_graph(schedule_len_through(DEMO_DEPTH));
    let tau = vertical_pair_type();
    let mut report = NoReverseReport {
        conditions,
        columns: 0,
        non_homogeneous_columns: 0,
        holds: true,
        graph_vertices: g.vertex_count(),
        sample: None,
    };
    for _ in 0..conditions {
        let cond = rich_condition(rng, &g, limits)?;
        let coloring = color_vertical_pairs(&cond, &g).map_err(|e| GraphError::Demo(e.to_string()))?;
        for (x, ys) in cond.columns() {
            let col = cond.subset(ys.iter().map(|&y| Point::new(x, y)));
            let r = check_tau_homogeneous(&col, &coloring, &tau).map_err(|e| GraphError::Demo(e.to_string()))?;
            report.columns += 1;
            if r.homogeneous {
                report.holds = false;
            } else {
                report.non_homogeneous_columns += 1;
            }
        }
        report.sample.get_or_insert(cond);
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringDemoReport {
    pub t: usize,
    pub vertices: usize,
    pub classes_met: usize,
    pub all_colors: bool,
}

/// A single column `x = 0` over vertices `1..` of a palette-`t` coloring
/// built through parameter sets in `{0, 1}`; counts vertical classes met.
pub fn demo_coloring(t: usize) -> Result<ColoringDemoReport, GraphError> {
    let ec = build_random_coloring(t, color_schedule_len_through(t, 1))?;
    let column = FiniteCondition::new((1..ec.vertex_count() as u64).map(|y| Point::new(0, y)))
        .map_err(|e| GraphError::Demo(e.to_string()))?;
    let coloring = Coloring::vertical_by_rule(column.clone(), ColorRule::PaletteEdges(ec.clone()))
        .map_err(|e| GraphError::Demo(e.to_string()))?;
    let classes_met = count_classes_met(&column, &coloring, 2).map_err(|e| GraphError::Demo(e.to_string()))?;
    Ok(ColoringDemoReport { t, vertices: ec.vertex_count(), classes_met, all_colors: classes_met == t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogeneity::Color;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn schedule_order_and_lengths() {
        let head: Vec<(Vec<usize>, Vec<usize>)> = schedule()
            .take(8)
            .map(|c| (c.params, c.s.into_iter().collect()))
            .collect();
        assert_eq!(
            head,
            vec![
                (vec![0], vec![]),
                (vec![0], vec![0]),
                (vec![1], vec![]),
                (vec![1], vec![0]),
                (vec![0, 1], vec![]),
                (vec![0, 1], vec![0]),
                (vec![0, 1], vec![1]),
                (vec![0, 1], vec![0, 1]),
            ]
        );
        for m in 0..4u32 {
            let n = schedule().take_while(|c| c.params.iter().all(|&p| p <= m as usize)).count();
            assert_eq!(n, schedule_len_through(m));
        }
        for t in 2..5 {
            for m in 0..3u32 {
                let n = color_schedule(t).take_while(|c| c.params.iter().all(|&p| p <= m as usize)).count();
                assert_eq!(n, color_schedule_len_through(t, m));
            }
        }
    }

    #[test]
    fn build_examples() {
        let g = build_random_graph(schedule_len_through(1));
        let nbr = (1..g.vertex_count()).any(|v| g.adjacent(0, v));
        let non = (1..g.vertex_count()).any(|v| !g.adjacent(0, v));
        assert!(nbr && non);
        assert!(g.is_symmetric_irreflexive());
        assert_eq!(build_random_graph(20), build_random_graph(20));
    }

    #[test]
    fn every_processed_configuration_stays_realized() {
        let (g, log) = build_random_graph_logged(schedule_len_through(2));
        for (i, step) in log.iter().enumerate() {
            assert_eq!(realize_configuration(&g, &step.config).unwrap().is_some(), true, "step {i}");
        }
        // the witness found at step s still works at every later prefix
        for s in [3, 10, 20] {
            let (gs, logs) = build_random_graph_logged(s);
            let later = build_random_graph(s + 5);
            for step in logs {
                let w = realize_configuration(&later, &step.config).unwrap().unwrap();
                assert!(w <= step.witness);
                assert!(gs.vertex_count() <= later.vertex_count());
            }
        }
    }

    #[test]
    fn realize_examples() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let empty = Configuration::new(vec![], []).unwrap();
        assert_eq!(realize_configuration(&g, &empty).unwrap(), Some(0));
        let c = Configuration::new(vec![0], [0]).unwrap();
        assert_eq!(realize_configuration(&g, &c).unwrap(), Some(1));
        let c = Configuration::new(vec![0], []).unwrap();
        assert_eq!(realize_configuration(&g, &c).unwrap(), None);
        let c = Configuration::new(vec![5], []).unwrap();
        assert!(realize_configuration(&g, &c).is_err());
        assert!(Configuration::new(vec![1, 1], []).is_err());
        assert!(Configuration::new(vec![1], [1]).is_err());
    }

    #[test]
    fn full_schedule_over_three_vertices_realizes_everything() {
        let g = build_random_graph(schedule_len_through(2));
        let mut checked = 0;
        for p in (0..3).powerset().filter(|p| !p.is_empty()) {
            for mask in 0..1usize << p.len() {
                let c = Configuration::from_mask(p.clone(), mask);
                assert!(realize_configuration(&g, &c).unwrap().is_some());
                checked += 1;
            }
        }
        assert_eq!(checked, 26);
        assert!(check_extension_property(&g, 2, 3).unwrap().is_empty());
        assert!(check_extension_property(&g, 3, 3).unwrap().is_empty());
    }

    #[test]
    fn extension_property_on_four_vertices() {
        let g = build_random_graph(schedule_len_through(3));
        assert!(check_extension_property(&g, 1, 4).unwrap().is_empty());
        assert!(g.is_symmetric_irreflexive());
    }

    #[test]
    fn extension_examples() {
        let k4 = Graph::complete(4);
        let missing = check_extension_property(&k4, 1, 4).unwrap();
        assert_eq!(missing.len(), 4);
        assert!(missing.iter().all(|c| c.params.len() == 1 && c.s.is_empty()));
        let e4 = Graph::empty(4);
        let missing = check_extension_property(&e4, 1, 4).unwrap();
        assert_eq!(missing.len(), 4);
        assert!(missing.iter().all(|c| c.s == BTreeSet::from([0])));
        assert_eq!(check_extension_property(&e4, 0, 4), Err(GraphError::ZeroK));
    }

    #[test]
    fn rich_examples() {
        let limits = Limits::default();
        let g = build_random_graph(schedule_len_through(2));
        for s in [vec![], vec![0], vec![0, 1]] {
            assert!(!check_rich(&s, &g, 1, &limits).unwrap().rich);
        }
        let all: Vec<usize> = (0..g.vertex_count().min(12)).collect();
        let r = check_rich(&all, &g, 1, &limits).unwrap();
        assert!(r.rich);
        let w = r.witness.unwrap();
        assert!(internally_extensive(&g, &w, 1));
        assert!(!check_rich(&[0, 1, 2, 3], &Graph::empty(4), 1, &limits).unwrap().rich);
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(check_rich(&[0, 1, 2, 3], &p4, 1, &limits).unwrap().witness, Some(vec![0, 1, 2, 3]));
        let big: Vec<usize> = (0..13).collect();
        assert!(matches!(
            check_rich(&big, &Graph::empty(13), 1, &limits),
            Err(GraphError::RichRefused { size: 13, bound: 12 })
        ));
    }

    /// Oracle for k = 1: every vertex has a neighbor and a non-neighbor.
    fn rich1_oracle(g: &Graph, y: &[usize]) -> bool {
        !y.is_empty()
            && y.iter().all(|&a| {
                y.iter().any(|&b| b != a && g.adjacent(a, b)) && y.iter().any(|&b| b != a && !g.adjacent(a, b))
            })
    }

    #[test]
    fn rich_matches_subset_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..60 {
            let n = rng.gen_range(1..8);
            let edges: Vec<(usize, usize)> =
                (0..n).tuple_combinations().filter(|_| rng.gen_bool(0.5)).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let all: Vec<usize> = (0..n).collect();
            let expected = all.iter().copied().powerset().any(|y| rich1_oracle(&g, &y));
            assert_eq!(check_rich(&all, &g, 1, &Limits::default()).unwrap().rich, expected);
        }
    }

    #[test]
    fn vertical_pair_coloring_examples() {
        let col = FiniteCondition::new([Point::new(0, 1), Point::new(0, 2)]).unwrap();
        let pair = [Point::new(0, 1), Point::new(0, 2)];
        let g = Graph::from_edges(3, [(1, 2)]).unwrap();
        assert_eq!(color_vertical_pairs(&col, &g).unwrap().color_of(&pair), Some(Color::from(1)));
        let g = Graph::empty(3);
        assert_eq!(color_vertical_pairs(&col, &g).unwrap().color_of(&pair), Some(Color::from(0)));
        assert!(matches!(color_vertical_pairs(&col, &Graph::empty(2)), Err(HomogeneityError::NotAVertex(2))));
        let mixed = FiniteCondition::new([Point::new(0, 1), Point::new(0, 2), Point::new(3, 4)]).unwrap();
        let c = color_vertical_pairs(&mixed, &Graph::empty(5)).unwrap();
        assert_eq!(c.color_of(&[Point::new(0, 1), Point::new(3, 4)]), None);
    }

    #[test]
    fn rich_columns_carry_both_colors() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let g = build_random_graph(schedule_len_through(DEMO_DEPTH));
        let limits = Limits::default();
        for _ in 0..10 {
            let cond = rich_condition(&mut rng, &g, &limits).unwrap();
            let c = color_vertical_pairs(&cond, &g).unwrap();
            for (x, ys) in cond.columns() {
                let colors: BTreeSet<Color> = ys
                    .iter()
                    .tuple_combinations()
                    .map(|(&a, &b)| c.color_of(&[Point::new(x, a), Point::new(x, b)]).unwrap())
                    .collect();
                assert_eq!(colors.len(), 2);
            }
        }
    }

    #[test]
    fn two_colors_reduce_to_the_graph() {
        for steps in [1, 5, 8, 26, 40] {
            let g = build_random_graph(steps);
            let ec = build_random_coloring(2, steps).unwrap();
            assert_eq!(ec.vertex_count(), g.vertex_count());
            for (u, v) in (0..g.vertex_count()).tuple_combinations() {
                assert_eq!(ec.color(u, v), Some(g.adjacent(u, v) as u32));
            }
        }
        assert_eq!(build_random_coloring(1, 3), Err(GraphError::BadPalette(1)));
    }

    #[test]
    fn three_colors_reach_every_parameter() {
        let ec = build_random_coloring(3, color_schedule_len_through(3, 2)).unwrap();
        for a in 0..3 {
            let seen: BTreeSet<u32> = (0..ec.vertex_count()).filter_map(|z| ec.color(a, z)).collect();
            assert_eq!(seen, BTreeSet::from([0, 1, 2]));
        }
    }

    #[test]
    fn coloring_demo_meets_every_class() {
        for t in 2..=5 {
            let r = demo_coloring(t).unwrap();
            assert_eq!(r.classes_met, t);
            assert!(r.all_colors);
        }
    }

    #[test]
    fn noreverse_demo_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let r = demo_noreverse(&mut rng, 5, &Limits::default()).unwrap();
        assert!(r.holds);
        assert_eq!(r.columns, r.non_homogeneous_columns);
    }

    #[test]
    fn json_round_trips() {
        let g = build_random_graph(12);
        let back: Graph = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        assert_eq!(back, g);
        let ec = build_random_coloring(3, 12).unwrap();
        let back: EdgeColoring = serde_json::from_str(&serde_json::to_string(&ec).unwrap()).unwrap();
        assert_eq!(back, ec);
        assert!(serde_json::from_str::<Graph>(r#"{"vertices":2,"edges":[[0,0]]}"#).is_err());
    }
}
