//! Seeded random generators for conditions, planar-set expressions and
//! omega-type prefixes. Used by the property suites and the CLI demos.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::omegatypes::{OmegaTypePrefix, PrefixClass};
use crate::pointsets::{FiniteCondition, Point};
use crate::setalgebra::{FinCofin, PlanarSet};

/// A random valid condition with exactly `size` points.
///
/// Walks the naturals upward; each value either opens a new column (becoming
/// an x-coordinate) or is spent as the y of a point in an open column, so
/// every clause holds by construction.
pub fn random_condition<R: Rng + ?Sized>(rng: &mut R, size: usize) -> FiniteCondition {
    let mut columns: Vec<u64> = Vec::new();
    let mut points = Vec::with_capacity(size);
    let mut v: u64 = rng.gen_range(0..3);
    while points.len() < size {
        if columns.is_empty() || rng.gen_bool(0.3) {
            columns.push(v);
        } else {
            let x = *columns.choose(rng).expect("nonempty");
            points.push(Point::new(x, v));
        }
        v += rng.gen_range(1..4);
    }
    FiniteCondition::new(points).expect("generator keeps the clauses")
}

fn random_fincofin<R: Rng + ?Sized>(rng: &mut R, bound: u64) -> FinCofin {
    let len = rng.gen_range(0..4);
    let support = (0..len).map(|_| rng.gen_range(0..bound)).collect();
    if rng.gen_bool(0.5) {
        FinCofin::Finite(support)
    } else {
        FinCofin::Cofinite(support)
    }
}

/// A random expression of depth at most `depth` with small coordinates.
pub fn random_expression<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> PlanarSet {
    const BOUND: u64 = 12;
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..4) {
            0 => {
                let len = rng.gen_range(0..5);
                PlanarSet::Points(
                    (0..len)
                        .map(|_| (rng.gen_range(0..BOUND), rng.gen_range(0..BOUND)))
                        .collect(),
                )
            }
            1 => PlanarSet::Rect {
                x: random_fincofin(rng, BOUND),
                y: random_fincofin(rng, BOUND),
            },
            2 => PlanarSet::AboveDiag,
            _ => PlanarSet::Column {
                x: rng.gen_range(0..BOUND),
                content: random_fincofin(rng, BOUND),
            },
        };
    }
    match rng.gen_range(0..3) {
        0 => PlanarSet::Union(
            (0..rng.gen_range(1..4)).map(|_| random_expression(rng, depth - 1)).collect(),
        ),
        1 => PlanarSet::Intersection(
            (0..rng.gen_range(1..4)).map(|_| random_expression(rng, depth - 1)).collect(),
        ),
        _ => PlanarSet::Complement(Box::new(random_expression(rng, depth - 1))),
    }
}

/// A random valid prefix with `classes` classes.
///
/// Each step either opens a fresh x-class (absorbing a random number of new
/// x indices) or, if some x index is waiting for its y, closes the next one.
pub fn random_prefix<R: Rng + ?Sized>(rng: &mut R, classes: usize) -> OmegaTypePrefix {
    let mut out = Vec::with_capacity(classes);
    let mut next_x = 1u32;
    let mut next_y = 1u32;
    while out.len() < classes {
        let can_close = next_y < next_x;
        if !can_close || rng.gen_bool(0.4) {
            // x indices land in existing classes too, so later y's vary
            let take = rng.gen_range(1..4);
            let mut fresh: Vec<u32> = (next_x..next_x + take).collect();
            next_x += take;
            let reuse = out
                .iter_mut()
                .filter_map(|c| match c {
                    PrefixClass::X(ix) => Some(ix),
                    PrefixClass::Y(_) => None,
                })
                .collect::<Vec<_>>();
            if !reuse.is_empty() && rng.gen_bool(0.5) && fresh.len() > 1 {
                let moved = fresh.pop().expect("len > 1");
                let idx = rng.gen_range(0..reuse.len());
                reuse.into_iter().nth(idx).expect("in range").insert(moved);
            }
            out.push(PrefixClass::X(fresh.into_iter().collect()));
        } else {
            out.push(PrefixClass::Y(next_y));
            next_y += 1;
        }
    }
    OmegaTypePrefix::new(out)
}

/// A strictly increasing sequence of `len` naturals.
pub fn random_increasing<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<u64> {
    let mut v = rng.gen_range(0..4);
    (0..len)
        .map(|_| {
            let cur = v;
            v += rng.gen_range(1..5);
            cur
        })
        .collect()
}
