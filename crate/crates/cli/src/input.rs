//! Argument loaders. Every structured argument is either a path to a file
//! or the value itself, written inline.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;
use serde_json::Value;

use nbt_core::homogeneity::{Color, ColorRule, Coloring, ColoringTable};
use nbt_core::omegatypes::{grid_prefix, OmegaTypePrefix};
use nbt_core::pointsets::{FiniteCondition, Point};
use nbt_core::randomgraph::{EdgeColoring, Graph};
use nbt_core::setalgebra::{FilterStandIn, StandInSequence};
use nbt_core::typecalc::NType;

/// File contents when `arg` names a file, else `arg` itself.
pub fn text(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        fs::read_to_string(path).with_context(|| format!("reading {arg}"))
    } else {
        Ok(arg.to_string())
    }
}

pub fn json(arg: &str) -> Result<Value> {
    let body = text(arg)?;
    serde_json::from_str(&body).with_context(|| {
        if Path::new(arg).is_file() {
            format!("{arg} is not valid JSON")
        } else {
            format!("{arg:?} is neither a file nor inline JSON")
        }
    })
}

pub fn parse<T: DeserializeOwned>(arg: &str, what: &str) -> Result<T> {
    serde_json::from_value(json(arg)?).with_context(|| format!("bad {what}"))
}

pub fn required<'a>(
    arg: &'a Option<String>,
    global: &'a Option<String>,
    flag: &str,
) -> Result<&'a str> {
    arg.as_deref()
        .or(global.as_deref())
        .ok_or_else(|| anyhow!("missing input: pass --{flag} or --in"))
}

/// A point list: `[[x,y],...]` or an object holding one under `points`,
/// `condition` or `set`.
pub fn points(arg: &str) -> Result<Vec<Point>> {
    let v = json(arg)?;
    let list = match &v {
        Value::Array(_) => v.clone(),
        Value::Object(m) => ["points", "condition", "set"]
            .iter()
            .find_map(|k| m.get(*k).cloned())
            .ok_or_else(|| anyhow!("object has no points, condition or set field"))?,
        _ => bail!("expected a list of [x, y] pairs"),
    };
    serde_json::from_value(list).context("expected a list of [x, y] pairs")
}

pub fn condition(arg: &str) -> Result<FiniteCondition> {
    Ok(FiniteCondition::new(points(arg)?)?)
}

/// List form such as `x1<y1<x2<y2`, or the JSON form of a type.
pub fn ntype(arg: &str) -> Result<NType> {
    let body = text(arg)?;
    let body = body.trim();
    if body.starts_with('{') {
        Ok(serde_json::from_str(body)?)
    } else {
        Ok(body.parse()?)
    }
}

/// `1,2,3` or `[1,2,3]`.
pub fn numbers(arg: &str) -> Result<Vec<u64>> {
    let body = text(arg)?;
    let body = body.trim();
    if body.starts_with('[') {
        return Ok(serde_json::from_str(body)?);
    }
    body.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .with_context(|| format!("{s:?} is not a natural number"))
        })
        .collect()
}

pub fn graph(arg: &str) -> Result<Graph> {
    parse(arg, "graph")
}

pub fn edge_coloring(arg: &str) -> Result<EdgeColoring> {
    parse(arg, "edge coloring")
}

/// `frechet`, `principal:5`, or the JSON forms.
pub fn stand_in(arg: &str) -> Result<FilterStandIn> {
    let t = arg.trim();
    if t == "frechet" {
        return Ok(FilterStandIn::Frechet);
    }
    if let Some(k) = t.strip_prefix("principal:") {
        return Ok(FilterStandIn::Principal(k.trim().parse()?));
    }
    parse(arg, "filter stand-in")
}

/// A full sequence, or a single stand-in used at every index.
pub fn stand_in_sequence(arg: &str) -> Result<StandInSequence> {
    if let Ok(f) = stand_in(arg) {
        return Ok(StandInSequence::constant(f));
    }
    parse(arg, "stand-in sequence")
}

/// Prefix JSON, or `grid:N` for the grid prefix cut after `N` steps of the
/// diagonal walk (a column opened by the last step is dropped).
pub fn prefix(arg: &str) -> Result<OmegaTypePrefix> {
    if let Some(n) = arg.trim().strip_prefix("grid:") {
        return Ok(grid_prefix(n.trim().parse()?));
    }
    parse(arg, "prefix")
}

/// CSV rows `x1,y1,...,xn,yn,color`; a non-numeric first row is a header.
pub fn coloring_csv(body: &str, domain: Option<String>) -> Result<ColoringTable> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(body.as_bytes());
    let mut entries = Vec::new();
    let mut n = None;
    for (i, rec) in reader.records().enumerate() {
        let rec = rec?;
        if rec.len() < 3 || rec.len() % 2 == 0 {
            bail!("row {}: expected 2n coordinates and a color", i + 1);
        }
        let coords: Result<Vec<u64>, _> = rec.iter().take(rec.len() - 1).map(str::parse).collect();
        let coords = match coords {
            Ok(c) => c,
            Err(_) if i == 0 => continue,
            Err(e) => bail!("row {}: {e}", i + 1),
        };
        let arity = coords.len() / 2;
        if *n.get_or_insert(arity) != arity {
            bail!("row {}: mixed arities", i + 1);
        }
        let subset = coords.chunks(2).map(|c| Point::new(c[0], c[1])).collect();
        entries.push(nbt_core::homogeneity::ColoringEntry {
            subset,
            color: Color::new(&rec[rec.len() - 1]),
        });
    }
    Ok(ColoringTable {
        n: n.ok_or_else(|| anyhow!("empty coloring table"))?,
        domain,
        entries,
    })
}

pub struct ColoringSpec<'a> {
    pub table: Option<&'a str>,
    pub rule: Option<&'a str>,
    pub n: usize,
    pub color: Option<&'a str>,
    pub graph: Option<&'a str>,
    pub edge_coloring: Option<&'a str>,
    pub domain: Option<&'a str>,
}

pub fn coloring(ground: FiniteCondition, spec: &ColoringSpec) -> Result<Coloring> {
    match (spec.table, spec.rule) {
        (Some(_), Some(_)) => bail!("pass either --coloring or --rule, not both"),
        (Some(arg), None) => {
            let table = if arg.ends_with(".csv") {
                coloring_csv(&text(arg)?, spec.domain.map(str::to_string))?
            } else {
                let mut t: ColoringTable = parse(arg, "coloring table")?;
                if let Some(d) = spec.domain {
                    t.domain = Some(d.to_string());
                }
                t
            };
            Ok(Coloring::from_table_json(ground, &table)?)
        }
        (None, Some("realized-type")) => Ok(Coloring::realized_type(ground, spec.n)),
        (None, Some("constant")) => {
            Ok(Coloring::constant(ground, spec.n, Color::new(spec.color.unwrap_or("0"))))
        }
        (None, Some("edge-relation")) => {
            let g = graph(spec.graph.ok_or_else(|| anyhow!("edge-relation needs --graph"))?)?;
            Ok(Coloring::vertical_by_rule(ground, ColorRule::EdgeRelation(g))?)
        }
        (None, Some("palette-edges")) => {
            let ec = edge_coloring(
                spec.edge_coloring.ok_or_else(|| anyhow!("palette-edges needs --edge-coloring"))?,
            )?;
            Ok(Coloring::vertical_by_rule(ground, ColorRule::PaletteEdges(ec))?)
        }
        (None, Some(other)) => bail!(
            "unknown rule {other:?}; expected realized-type, constant, edge-relation or palette-edges"
        ),
        (None, None) => bail!("pass --coloring <table> or --rule <name>"),
    }
}
