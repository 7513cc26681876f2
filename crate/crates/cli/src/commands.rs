use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use nbt_core::homogeneity::{
    check_tau_homogeneous, extract_s_from_r, search_homogeneous, stabilize, weak_ramsey_floor_demo,
    BitVectorSequence, Direction, SearchMode, TernaryRelationGrid,
};
use nbt_core::limits::Limits;
use nbt_core::omegatypes::{
    assign_d, h_set_member, phi_prefix, validate_prefix, zchain_check, ZAssignment,
};
use nbt_core::pointsets::{
    check_condition, classify_subsets, extend_with_realizers, find_realizer, FiniteCondition,
    Point, RealizerSearch,
};
use nbt_core::randomgraph::{
    build_random_coloring, build_random_graph, check_extension_property, check_rich,
    color_schedule_len_through, demo_coloring, demo_noreverse, schedule_len_through,
};
use nbt_core::setalgebra::{
    column_of, image_membership, in_fr2, meets_all_fr2, sum_membership, tail_analysis, verdict_set,
    FinCofin, PlanarSet,
};
use nbt_core::typecalc::{append_extension, count_ntypes, enumerate_ntypes, insert_extension};

use crate::input::{self, ColoringSpec};
use crate::output::CommandResult;
use crate::{
    Cli, ColoringOpts, CondCmd, DirectionArg, GraphCmd, Group, HomogCmd, ModeArg, OmegaCmd,
    SetsCmd, TypesCmd,
};

/// What a command produced. `artifact`, when present, is what `--out` saves
/// (a condition, graph or coloring that later commands can read back).
struct Outcome {
    payload: Value,
    artifact: Option<Value>,
    diagnostics: Vec<String>,
}

impl Outcome {
    fn new(payload: Value) -> Self {
        Outcome {
            payload,
            artifact: None,
            diagnostics: Vec::new(),
        }
    }

    fn artifact(mut self, a: Value) -> Self {
        self.artifact = Some(a);
        self
    }

    fn note(mut self, d: impl Into<String>) -> Self {
        self.diagnostics.push(d.into());
        self
    }
}

fn command_name(group: &Group) -> String {
    let (g, c) = match group {
        Group::Types(c) => (
            "types",
            match c {
                TypesCmd::Enum { .. } => "enum",
                TypesCmd::Count { .. } => "count",
                TypesCmd::Extend { .. } => "extend",
                TypesCmd::Insert { .. } => "insert",
            },
        ),
        Group::Cond(c) => (
            "cond",
            match c {
                CondCmd::Check { .. } => "check",
                CondCmd::Realize { .. } => "realize",
                CondCmd::Classify { .. } => "classify",
                CondCmd::Grow { .. } => "grow",
            },
        ),
        Group::Homog(c) => (
            "homog",
            match c {
                HomogCmd::Check { .. } => "check",
                HomogCmd::Search { .. } => "search",
                HomogCmd::Floor { .. } => "floor",
                HomogCmd::Stabilize { .. } => "stabilize",
                HomogCmd::ExtractS { .. } => "extract-s",
            },
        ),
        Group::Graph(c) => (
            "graph",
            match c {
                GraphCmd::Build { .. } => "build",
                GraphCmd::Check { .. } => "check",
                GraphCmd::Rich { .. } => "rich",
                GraphCmd::DemoNoreverse { .. } => "demo-noreverse",
                GraphCmd::DemoColoring { .. } => "demo-coloring",
            },
        ),
        Group::Sets(c) => (
            "sets",
            match c {
                SetsCmd::Column { .. } => "column",
                SetsCmd::Tail { .. } => "tail",
                SetsCmd::Fr2 { .. } => "fr2",
                SetsCmd::Meets { .. } => "meets",
                SetsCmd::Sum { .. } => "sum",
                SetsCmd::Image { .. } => "image",
            },
        ),
        Group::Omega(c) => (
            "omega",
            match c {
                OmegaCmd::Validate { .. } => "validate",
                OmegaCmd::Phi { .. } => "phi",
                OmegaCmd::Assignd { .. } => "assignd",
                OmegaCmd::Zchain { .. } => "zchain",
                OmegaCmd::Hmember { .. } => "hmember",
            },
        ),
    };
    format!("{g} {c}")
}

pub fn run(cli: &Cli) -> CommandResult {
    let command = command_name(&cli.group);
    let outcome = dispatch(cli).and_then(|o| {
        if let Some(path) = &cli.out {
            let body = serde_json::to_string_pretty(o.artifact.as_ref().unwrap_or(&o.payload))?;
            fs::write(path, body + "\n").with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(o)
    });
    match outcome {
        Ok(o) => CommandResult {
            command,
            payload: Ok(o.payload),
            diagnostics: o.diagnostics,
        },
        Err(e) => CommandResult::failed(command, e),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.group {
        Group::Types(c) => types(c, cli),
        Group::Cond(c) => cond(c, cli),
        Group::Homog(c) => homog(c, cli),
        Group::Graph(c) => graph(c, cli),
        Group::Sets(c) => sets(c, cli),
        Group::Omega(c) => omega(c, cli),
    }
}

fn limits() -> Result<Limits> {
    Ok(Limits::from_env()?)
}

fn types(c: &TypesCmd, cli: &Cli) -> Result<Outcome> {
    Ok(match c {
        TypesCmd::Enum { n } => {
            let all: Vec<String> = enumerate_ntypes(*n)?
                .iter()
                .map(|t| t.to_string())
                .collect();
            Outcome::new(json!({ "n": n, "count": all.len(), "types": all }))
        }
        TypesCmd::Count { n } => Outcome::new(json!({ "t": count_ntypes(*n)? }))
            .note("enumeration and the gap/weak-order formula agree"),
        TypesCmd::Extend { ty } => {
            let t = input::ntype(input::required(ty, &cli.input, "type")?)?;
            let ext = append_extension(&t);
            Outcome::new(json!({ "input": t.to_string(), "output": ext.to_string() }))
        }
        TypesCmd::Insert { ty } => {
            let t = input::ntype(input::required(ty, &cli.input, "type")?)?;
            let ext = insert_extension(&t)?;
            Outcome::new(json!({ "input": t.to_string(), "output": ext.to_string() }))
        }
    })
}

fn cond(c: &CondCmd, cli: &Cli) -> Result<Outcome> {
    Ok(match c {
        CondCmd::Check { cond } => {
            let pts = input::points(input::required(cond, &cli.input, "cond")?)?;
            let report = check_condition(&pts);
            Outcome::new(json!({
                "valid": report.is_ok(),
                "points": pts.len(),
                "violations": report.violations,
            }))
        }
        CondCmd::Realize { cond, ty } => {
            let g = input::condition(input::required(cond, &cli.input, "cond")?)?;
            let t = input::ntype(ty)?;
            let payload = match find_realizer(&g, &t) {
                RealizerSearch::Found(p) => {
                    json!({ "type": t.to_string(), "status": "found", "realizer": p })
                }
                RealizerSearch::Absent => {
                    json!({ "type": t.to_string(), "status": "absent", "realizer": null })
                }
                RealizerSearch::TooFewPoints { needed, available } => json!({
                    "type": t.to_string(),
                    "status": "too-few-points",
                    "realizer": null,
                    "needed": needed,
                    "available": available,
                }),
            };
            Outcome::new(payload)
        }
        CondCmd::Classify { cond, n } => {
            let g = input::condition(input::required(cond, &cli.input, "cond")?)?;
            let index = classify_subsets(&g, *n);
            let classes: Vec<Value> = index
                .classes
                .iter()
                .map(|(t, subs)| json!({ "type": t.to_string(), "count": subs.len(), "subsets": subs }))
                .collect();
            Outcome::new(json!({ "n": n, "total": index.total(), "classes": classes }))
        }
        CondCmd::Grow { cond, n } => {
            let base = match cond.as_deref().or(cli.input.as_deref()) {
                Some(arg) => input::condition(arg)?,
                None => FiniteCondition::empty(),
            };
            let grown = extend_with_realizers(&base, *n)?;
            Outcome::new(json!({
                "n": n,
                "added": grown.len() - base.len(),
                "size": grown.len(),
                "condition": grown,
            }))
            .artifact(serde_json::to_value(&grown)?)
        }
    })
}

fn coloring_spec(o: &ColoringOpts) -> ColoringSpec<'_> {
    ColoringSpec {
        table: o.coloring.as_deref(),
        rule: o.rule.as_deref(),
        n: o.n,
        color: o.color.as_deref(),
        graph: o.graph.as_deref(),
        edge_coloring: o.edge_coloring.as_deref(),
        domain: o.domain.as_deref(),
    }
}

fn homog(c: &HomogCmd, cli: &Cli) -> Result<Outcome> {
    Ok(match c {
        HomogCmd::Check {
            cond,
            set,
            ty,
            coloring,
        } => {
            let ground = input::condition(input::required(cond, &cli.input, "cond")?)?;
            let h = match set {
                Some(s) => input::condition(s)?,
                None => ground.clone(),
            };
            let col = input::coloring(ground, &coloring_spec(coloring))?;
            let t = input::ntype(ty)?;
            let report = check_tau_homogeneous(&h, &col, &t)?;
            let mut out = Outcome::new(json!({
                "type": t.to_string(),
                "homogeneous": report.homogeneous,
                "color": report.color,
                "realizer_count": report.realizer_count,
                "vacuous": report.vacuous,
            }));
            if report.vacuous {
                out = out.note("no subset realizes the type; homogeneous vacuously");
            }
            out
        }
        HomogCmd::Search {
            cond,
            ty,
            min_size,
            mode,
            coloring,
        } => {
            let ground = input::condition(input::required(cond, &cli.input, "cond")?)?;
            let col = input::coloring(ground, &coloring_spec(coloring))?;
            let t = input::ntype(ty)?;
            let mode = match mode {
                ModeArg::Exact => SearchMode::Exact,
                ModeArg::Greedy => SearchMode::Greedy,
                ModeArg::Auto => SearchMode::Auto,
            };
            let found = search_homogeneous(&col, &t, *min_size, mode, &limits()?)?;
            let mut out = Outcome::new(serde_json::to_value(&found)?)
                .artifact(serde_json::to_value(&found.set)?);
            if !found.optimal {
                out = out.note("greedy result: maximal by inclusion, no optimality claim");
            }
            out
        }
        HomogCmd::Floor { cond, n } => {
            let g = input::condition(input::required(cond, &cli.input, "cond")?)?;
            let report = weak_ramsey_floor_demo(&g, *n)?;
            let mut out = Outcome::new(serde_json::to_value(&report)?);
            if !report.missing_realizers.is_empty() {
                out = out.note(format!(
                    "missing realizers for {} types",
                    report.missing_realizers.len()
                ));
            }
            out
        }
        HomogCmd::Stabilize {
            seq,
            rows,
            direction,
        } => {
            let s: BitVectorSequence = match (seq.as_deref().or(cli.input.as_deref()), rows) {
                (_, Some(r)) => {
                    BitVectorSequence::parse(&r.split(',').map(str::trim).collect::<Vec<_>>())?
                }
                (Some(arg), None) => input::parse(arg, "bit-vector sequence")?,
                (None, None) => bail!("missing input: pass --seq, --rows or --in"),
            };
            let dir = match direction {
                DirectionArg::Increasing => Direction::Increasing,
                DirectionArg::Decreasing => Direction::Decreasing,
            };
            Outcome::new(serde_json::to_value(stabilize(&s, dir)?)?)
        }
        HomogCmd::ExtractS { grid, cond, window } => {
            let r: TernaryRelationGrid =
                input::parse(input::required(grid, &cli.input, "grid")?, "relation grid")?;
            let h = input::condition(cond)?;
            Outcome::new(serde_json::to_value(extract_s_from_r(&r, &h, *window)?)?)
        }
    })
}

fn graph(c: &GraphCmd, cli: &Cli) -> Result<Outcome> {
    Ok(match c {
        GraphCmd::Build {
            steps,
            through,
            palette,
        } => {
            let count = |len: usize| match (steps, through) {
                (Some(s), _) => *s,
                (None, Some(_)) => len,
                (None, None) => len,
            };
            let m = through.unwrap_or(1);
            match palette {
                None => {
                    let steps = count(schedule_len_through(m));
                    let g = build_random_graph(steps);
                    let art = serde_json::to_value(&g)?;
                    let mut payload = art.clone();
                    payload["steps"] = json!(steps);
                    Outcome::new(payload).artifact(art)
                }
                Some(t) => {
                    let steps = count(color_schedule_len_through(*t, m));
                    let ec = build_random_coloring(*t, steps)?;
                    let art = serde_json::to_value(&ec)?;
                    let mut payload = art.clone();
                    payload["steps"] = json!(steps);
                    Outcome::new(payload).artifact(art)
                }
            }
        }
        GraphCmd::Check { graph, k, m } => {
            let g = input::graph(input::required(graph, &cli.input, "graph")?)?;
            let missing = check_extension_property(&g, *k, *m)?;
            Outcome::new(
                json!({ "k": k, "m": m, "holds": missing.is_empty(), "unsatisfied": missing }),
            )
        }
        GraphCmd::Rich { graph, vertices, k } => {
            let g = input::graph(input::required(graph, &cli.input, "graph")?)?;
            let vs: Vec<usize> = input::numbers(vertices)?
                .into_iter()
                .map(|v| v as usize)
                .collect();
            Outcome::new(serde_json::to_value(check_rich(&vs, &g, *k, &limits()?)?)?)
        }
        GraphCmd::DemoNoreverse { conditions } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let report = demo_noreverse(&mut rng, *conditions, &limits()?)?;
            let mut payload = serde_json::to_value(&report)?;
            payload["seed"] = json!(cli.seed);
            Outcome::new(payload)
        }
        GraphCmd::DemoColoring { t } => Outcome::new(serde_json::to_value(demo_coloring(*t)?)?),
    })
}

fn expr(arg: &Option<String>, cli: &Cli) -> Result<PlanarSet> {
    let v = input::json(input::required(arg, &cli.input, "expr")?)?;
    Ok(PlanarSet::from_json(&v)?)
}

fn sets(c: &SetsCmd, cli: &Cli) -> Result<Outcome> {
    Ok(match c {
        SetsCmd::Column { expr: e, x } => {
            let a = expr(e, cli)?;
            Outcome::new(json!({ "x": x, "column": column_of(&a, *x) }))
        }
        SetsCmd::Tail { expr: e } => {
            let tail = tail_analysis(&expr(e, cli)?);
            Outcome::new(json!({
                "horizon": tail.horizon,
                "a": tail.a,
                "b": tail.b,
                "tail_cofinite": tail.tail_cofinite(),
            }))
        }
        SetsCmd::Fr2 { expr: e } => Outcome::new(json!({ "in_fr2": in_fr2(&expr(e, cli)?) })),
        SetsCmd::Meets { expr: e } => {
            Outcome::new(json!({ "meets_all_fr2": meets_all_fr2(&expr(e, cli)?) }))
        }
        SetsCmd::Sum { expr: e, u, v } => {
            let a = expr(e, cli)?;
            let (u, v) = (input::stand_in(u)?, input::stand_in_sequence(v)?);
            Outcome::new(
                json!({ "member": sum_membership(&a, u, &v), "verdict_set": verdict_set(&a, &v) }),
            )
        }
        SetsCmd::Image { b, u, v } => {
            let b: FinCofin =
                input::parse(input::required(b, &cli.input, "b")?, "finite/cofinite set")?;
            let (u, v) = (input::stand_in(u)?, input::stand_in_sequence(v)?);
            Outcome::new(json!({ "member": image_membership(&b, u, &v) }))
        }
    })
}

fn omega(c: &OmegaCmd, cli: &Cli) -> Result<Outcome> {
    let prefix = |p: &Option<String>| input::prefix(input::required(p, &cli.input, "prefix")?);
    Ok(match c {
        OmegaCmd::Validate { prefix: p } => {
            let pre = prefix(p)?;
            let report = validate_prefix(&pre)?;
            let mut payload = serde_json::to_value(&report)?;
            payload["valid"] = json!(report.is_ok());
            payload["completed_pairs"] = json!(pre.completed_pairs());
            Outcome::new(payload)
                .note("clauses listed under assumed cannot be checked on a finite prefix")
        }
        OmegaCmd::Phi { prefix: p, z } => {
            let g = phi_prefix(&prefix(p)?, &input::numbers(z)?)?;
            Outcome::new(json!({ "condition": g })).artifact(serde_json::to_value(&g)?)
        }
        OmegaCmd::Assignd { prefix: p, s } => {
            let label = assign_d(&prefix(p)?, &input::numbers(s)?)?;
            Outcome::new(json!({ "label": label }))
        }
        OmegaCmd::Zchain { prefix: p, z, zs } => {
            let zs: ZAssignment = input::parse(zs, "Z assignment")?;
            Outcome::new(serde_json::to_value(zchain_check(
                &prefix(p)?,
                &input::numbers(z)?,
                &zs,
            )?)?)
        }
        OmegaCmd::Hmember { point, zs } => {
            let xy = input::numbers(point)?;
            let [x, y] = xy[..] else {
                return Err(anyhow!("--point takes exactly two numbers"));
            };
            let zs: ZAssignment =
                input::parse(input::required(zs, &cli.input, "zs")?, "Z assignment")?;
            Outcome::new(json!({ "point": [x, y], "member": h_set_member(Point::new(x, y), &zs)? }))
        }
    })
}
