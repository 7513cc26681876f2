//! Componentwise stabilization of lexicographically monotone bit-vector
//! sequences, and the finite surrogate for reading a binary relation `S`
//! off a ternary relation `R` along the columns of a condition.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pointsets::FiniteCondition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StabilizeError {
    #[error("empty sequence")]
    Empty,
    #[error("row {row} has width {got}, expected {expected}")]
    Ragged { row: usize, expected: usize, got: usize },
    #[error("bad bit string {0:?}")]
    BadBits(String),
    #[error("rows {first} and {second} violate the {direction} lexicographic order")]
    OrderViolation { first: usize, second: usize, direction: Direction },
    #[error("window must be at least 1")]
    ZeroWindow,
    #[error("point <{x},{y}> lies outside the grid {bounds:?}")]
    OutOfGrid { x: u64, y: u64, bounds: [usize; 3] },
    #[error("grid member {0:?} lies outside the bounds")]
    BadMember([usize; 3]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Increasing => "increasing",
            Direction::Decreasing => "decreasing",
        })
    }
}

/// Equal-width 0/1 rows. Serialized as `{"rows": ["0101", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BitRows", into = "BitRows")]
pub struct BitVectorSequence {
    rows: Vec<Vec<bool>>,
}

#[derive(Serialize, Deserialize)]
struct BitRows {
    rows: Vec<String>,
}

impl TryFrom<BitRows> for BitVectorSequence {
    type Error = StabilizeError;
    fn try_from(r: BitRows) -> Result<Self, Self::Error> {
        BitVectorSequence::parse(&r.rows)
    }
}

impl From<BitVectorSequence> for BitRows {
    fn from(s: BitVectorSequence) -> Self {
        BitRows { rows: s.rows.iter().map(|r| bits_to_string(r)).collect() }
    }
}

pub(crate) fn bits_to_string(r: &[bool]) -> String {
    r.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl BitVectorSequence {
    pub fn new(rows: Vec<Vec<bool>>) -> Result<Self, StabilizeError> {
        let width = rows.first().ok_or(StabilizeError::Empty)?.len();
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != width) {
            return Err(StabilizeError::Ragged { row, expected: width, got: r.len() });
        }
        Ok(BitVectorSequence { rows })
    }

    pub fn parse<S: AsRef<str>>(rows: &[S]) -> Result<Self, StabilizeError> {
        let rows = rows
            .iter()
            .map(|s| {
                s.as_ref()
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(StabilizeError::BadBits(s.as_ref().to_string())),
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        BitVectorSequence::new(rows)
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stabilization {
    pub direction: Direction,
    /// Final value of every column, as a bit string.
    pub stable: String,
    /// Least row from which each column is constant.
    pub positions: Vec<usize>,
    /// Column 0 never moves against the direction.
    pub column0_monotone: bool,
}

/// Stabilization of a lexicographically non-decreasing sequence.
pub fn stabilize_lex(s: &BitVectorSequence) -> Result<Stabilization, StabilizeError> {
    stabilize(s, Direction::Increasing)
}

/// The decreasing variant is the mirror image: rows must be lexicographically
/// non-increasing and column 0 never increases.
pub fn stabilize(s: &BitVectorSequence, direction: Direction) -> Result<Stabilization, StabilizeError> {
    for (i, pair) in s.rows.windows(2).enumerate() {
        let bad = match direction {
            Direction::Increasing => pair[0] > pair[1],
            Direction::Decreasing => pair[0] < pair[1],
        };
        if bad {
            return Err(StabilizeError::OrderViolation { first: i, second: i + 1, direction });
        }
    }
    let last = s.rows.last().expect("nonempty");
    let positions = (0..s.width())
        .map(|z| {
            s.rows
                .iter()
                .rposition(|r| r[z] != last[z])
                .map_or(0, |i| i + 1)
        })
        .collect();
    let column0_monotone = s.width() == 0
        || s.rows.windows(2).all(|p| match direction {
            Direction::Increasing => p[0][0] <= p[1][0],
            Direction::Decreasing => p[0][0] >= p[1][0],
        });
    Ok(Stabilization { direction, stable: bits_to_string(last), positions, column0_monotone })
}

/// `R ⊆ [0,X) × [0,Y) × [0,Z)` as a dense table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GridRepr", into = "GridRepr")]
pub struct TernaryRelationGrid {
    bounds: [usize; 3],
    table: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct GridRepr {
    bounds: [usize; 3],
    members: Vec<[usize; 3]>,
}

impl TryFrom<GridRepr> for TernaryRelationGrid {
    type Error = StabilizeError;
    fn try_from(g: GridRepr) -> Result<Self, Self::Error> {
        TernaryRelationGrid::from_members(g.bounds, g.members)
    }
}

impl From<TernaryRelationGrid> for GridRepr {
    fn from(g: TernaryRelationGrid) -> Self {
        GridRepr { bounds: g.bounds, members: g.members() }
    }
}

impl TernaryRelationGrid {
    pub fn from_fn(bounds: [usize; 3], f: impl Fn(usize, usize, usize) -> bool) -> Self {
        let [bx, by, bz] = bounds;
        let mut table = Vec::with_capacity(bx * by * bz);
        for x in 0..bx {
            for y in 0..by {
                for z in 0..bz {
                    table.push(f(x, y, z));
                }
            }
        }
        TernaryRelationGrid { bounds, table }
    }

    pub fn from_members(
        bounds: [usize; 3],
        members: impl IntoIterator<Item = [usize; 3]>,
    ) -> Result<Self, StabilizeError> {
        let mut g = TernaryRelationGrid::from_fn(bounds, |_, _, _| false);
        for m in members {
            if (0..3).any(|i| m[i] >= bounds[i]) {
                return Err(StabilizeError::BadMember(m));
            }
            let i = g.offset(m[0], m[1], m[2]);
            g.table[i] = true;
        }
        Ok(g)
    }

    fn offset(&self, x: usize, y: usize, z: usize) -> usize {
        (x * self.bounds[1] + y) * self.bounds[2] + z
    }

    pub fn bounds(&self) -> [usize; 3] {
        self.bounds
    }

    pub fn get(&self, x: usize, y: usize, z: usize) -> bool {
        self.table[self.offset(x, y, z)]
    }

    pub fn members(&self) -> Vec<[usize; 3]> {
        let [bx, by, bz] = self.bounds;
        let mut out = Vec::new();
        for x in 0..bx {
            for y in 0..by {
                for z in 0..bz {
                    if self.get(x, y, z) {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SStatus {
    #[serde(rename = "stable-1")]
    Stable1,
    #[serde(rename = "stable-0")]
    Stable0,
    #[serde(rename = "unstable")]
    Unstable,
    #[serde(rename = "insufficient-data")]
    InsufficientData,
}

impl SStatus {
    pub fn is_stable(self) -> bool {
        matches!(self, SStatus::Stable0 | SStatus::Stable1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SEntry {
    pub x: usize,
    pub z: usize,
    pub status: SStatus,
}

/// Statuses for every `(x, z)` in `[0,X) × [0,Z)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SRelation {
    pub window: usize,
    pub entries: Vec<SEntry>,
}

impl SRelation {
    pub fn get(&self, x: usize, z: usize) -> Option<SStatus> {
        self.entries.iter().find(|e| e.x == x && e.z == z).map(|e| e.status)
    }
}

/// `S(x,z)` is the common value of the last `w` values of `R(x,y,z)` as `y`
/// runs up the column `H(x)`.
pub fn extract_s_from_r(
    r: &TernaryRelationGrid,
    h: &FiniteCondition,
    w: usize,
) -> Result<SRelation, StabilizeError> {
    if w == 0 {
        return Err(StabilizeError::ZeroWindow);
    }
    let [bx, by, bz] = r.bounds;
    if let Some(p) = h.points().iter().find(|p| p.x as usize >= bx || p.y as usize >= by) {
        return Err(StabilizeError::OutOfGrid { x: p.x, y: p.y, bounds: r.bounds });
    }
    let columns: BTreeMap<u64, Vec<u64>> = h.columns();
    let mut entries = Vec::with_capacity(bx * bz);
    for x in 0..bx {
        let ys = columns.get(&(x as u64)).map(Vec::as_slice).unwrap_or(&[]);
        for z in 0..bz {
            let status = if ys.len() < w {
                SStatus::InsufficientData
            } else {
                let tail: Vec<bool> = ys[ys.len() - w..].iter().map(|&y| r.get(x, y as usize, z)).collect();
                if tail.iter().all(|&v| v) {
                    SStatus::Stable1
                } else if tail.iter().all(|&v| !v) {
                    SStatus::Stable0
                } else {
                    SStatus::Unstable
                }
            };
            entries.push(SEntry { x, z, status });
        }
    }
    Ok(SRelation { window: w, entries })
}
