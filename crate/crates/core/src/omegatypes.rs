//! Finite prefixes of omega-types and the order-assignment map.
//!
//! An omega-type orders infinitely many symbols `x1, x2, ...` and
//! `y1, y2, ...` into classes of order type omega. Only finite prefixes of
//! the class sequence are handled here. An x-class in a prefix lists the
//! indices known so far; in the full type it would be infinite, so prefix
//! x-classes are reported as stubs rather than rejected.
//!
//! Valuing the classes of a prefix by an increasing sequence `z0 < z1 < ...`
//! turns every completed pair `(x_j, y_j)` into the point
//! `<value(x_j), value(y_j)>` ([`phi_prefix`]). [`assign_d`] names the filter
//! that governs the next value of such a sequence, and [`zchain_check`] /
//! [`h_set_member`] check sequences and points against chosen filter members.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pointsets::{FiniteCondition, Point, PointSetError};
use crate::setalgebra::FinCofin;
use crate::typecalc::{NType, TypeClass, TypeError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrefixClass {
    X(BTreeSet<u32>),
    Y(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OmegaTypePrefix {
    pub classes: Vec<PrefixClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum PrefixViolation {
    /// `y_j` appears without `y_{j-1}` directly before it in y order.
    YOutOfOrder { class: usize, index: u32, expected: u32 },
    /// `y_j` appears before (or without) any class holding `x_j`.
    YBeforeX { class: usize, index: u32 },
    /// `x_j` listed in more than one class.
    RepeatedX { index: u32 },
}

impl fmt::Display for PrefixViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrefixViolation::YOutOfOrder { class, index, expected } => write!(
                f,
                "class {class}: y{index} out of order, y-indices must ascend from y1 (expected y{expected})"
            ),
            PrefixViolation::YBeforeX { class, index } => {
                write!(f, "class {class}: x{index} must precede y{index}")
            }
            PrefixViolation::RepeatedX { index } => write!(f, "x{index} occurs in two classes"),
        }
    }
}

/// Clauses of the full definition that no finite prefix can confirm.
pub const UNVERIFIABLE_CLAUSES: [&str; 3] = [
    "each x-class is infinite",
    "there are infinitely many x-classes",
    "the classes have order type omega",
];

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PrefixReport {
    pub violations: Vec<PrefixViolation>,
    /// Positions of x-classes, all of which are finite stubs here.
    pub stubs: Vec<usize>,
    pub assumed: Vec<&'static str>,
}

impl PrefixReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OmegaError {
    #[error("malformed prefix: {0}")]
    Malformed(String),
    #[error("invalid prefix: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<PrefixViolation>),
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("values must be strictly increasing (position {0})")]
    NotIncreasing(usize),
    #[error("prefix has {classes} classes, needs more than {needed}")]
    PrefixTooShort { classes: usize, needed: usize },
    #[error("label {0} not assigned")]
    MissingLabel(DLabel),
    #[error("bad label {0:?}")]
    BadLabel(String),
    #[error(transparent)]
    PointSet(#[from] PointSetError),
    #[error(transparent)]
    Type(#[from] TypeError),
}

impl OmegaTypePrefix {
    pub fn new(classes: Vec<PrefixClass>) -> Self {
        OmegaTypePrefix { classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    fn class_of_x(&self, j: u32) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| matches!(c, PrefixClass::X(ix) if ix.contains(&j)))
    }

    /// Number of pairs `(x_j, y_j)` with both symbols present.
    pub fn completed_pairs(&self) -> usize {
        self.classes.iter().filter(|c| matches!(c, PrefixClass::Y(_))).count()
    }

    /// The n-type induced on the completed pairs `1..=n`. Requires a valid
    /// prefix with at least one completed pair.
    pub fn induced_ntype(&self) -> Result<NType, OmegaError> {
        let report = validate_prefix(self)?;
        if !report.is_ok() {
            return Err(OmegaError::Invalid(report.violations));
        }
        let n = self.completed_pairs();
        let classes = self
            .classes
            .iter()
            .filter_map(|c| match c {
                PrefixClass::X(ix) => {
                    let kept: Vec<usize> =
                        ix.iter().filter(|&&j| j as usize <= n).map(|&j| j as usize).collect();
                    (!kept.is_empty()).then_some(TypeClass::X(kept))
                }
                PrefixClass::Y(j) => Some(TypeClass::Y(*j as usize)),
            })
            .collect();
        Ok(NType::from_classes(n, classes)?)
    }
}

pub fn validate_prefix(p: &OmegaTypePrefix) -> Result<PrefixReport, OmegaError> {
    let mut report = PrefixReport {
        assumed: UNVERIFIABLE_CLAUSES.to_vec(),
        ..Default::default()
    };
    let mut seen_x = BTreeSet::new();
    let mut next_y = 1;
    for (ci, class) in p.classes.iter().enumerate() {
        match class {
            PrefixClass::X(ix) => {
                if ix.is_empty() {
                    return Err(OmegaError::Malformed(format!("class {ci}: empty x-class")));
                }
                if ix.contains(&0) {
                    return Err(OmegaError::Malformed(format!("class {ci}: index 0")));
                }
                for &j in ix {
                    if !seen_x.insert(j) {
                        report.violations.push(PrefixViolation::RepeatedX { index: j });
                    }
                }
                report.stubs.push(ci);
            }
            PrefixClass::Y(j) => {
                if *j == 0 {
                    return Err(OmegaError::Malformed(format!("class {ci}: index 0")));
                }
                if *j != next_y {
                    report.violations.push(PrefixViolation::YOutOfOrder {
                        class: ci,
                        index: *j,
                        expected: next_y,
                    });
                }
                if !seen_x.contains(j) {
                    report.violations.push(PrefixViolation::YBeforeX { class: ci, index: *j });
                }
                next_y = next_y.max(*j) + 1;
            }
        }
    }
    Ok(report)
}

fn check_increasing(z: &[u64]) -> Result<(), OmegaError> {
    match z.windows(2).position(|w| w[0] >= w[1]) {
        Some(i) => Err(OmegaError::NotIncreasing(i + 1)),
        None => Ok(()),
    }
}

fn require_valid(p: &OmegaTypePrefix) -> Result<(), OmegaError> {
    let report = validate_prefix(p)?;
    if report.is_ok() {
        Ok(())
    } else {
        Err(OmegaError::Invalid(report.violations))
    }
}

/// Values class `i` by `z[i]` and collects the points of completed pairs,
/// listed by ascending y.
pub fn phi_prefix(p: &OmegaTypePrefix, z: &[u64]) -> Result<FiniteCondition, OmegaError> {
    require_valid(p)?;
    if z.len() != p.len() {
        return Err(OmegaError::LengthMismatch { expected: p.len(), got: z.len() });
    }
    check_increasing(z)?;
    let points = p.classes.iter().zip(z).filter_map(|(c, &v)| match c {
        PrefixClass::Y(j) => {
            let xc = p.class_of_x(*j).expect("validated: x_j precedes y_j");
            Some(Point::new(z[xc], v))
        }
        PrefixClass::X(_) => None,
    });
    Ok(FiniteCondition::new(points)?)
}

/// Label of a stand-in filter: `U` or `V_v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DLabel {
    U,
    V(u64),
}

impl fmt::Display for DLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DLabel::U => write!(f, "U"),
            DLabel::V(v) => write!(f, "V_{v}"),
        }
    }
}

impl FromStr for DLabel {
    type Err = OmegaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "U" {
            return Ok(DLabel::U);
        }
        s.strip_prefix("V_")
            .and_then(|v| v.parse().ok())
            .map(DLabel::V)
            .ok_or_else(|| OmegaError::BadLabel(s.to_string()))
    }
}

impl Serialize for DLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Looks at class `|s|`, the first one `s` leaves unvalued: an x-class gives
/// `U`; the class of `y_j` gives `V_v` where `v` is the value `s` put on
/// `x_j`.
pub fn assign_d(p: &OmegaTypePrefix, s: &[u64]) -> Result<DLabel, OmegaError> {
    require_valid(p)?;
    check_increasing(s)?;
    let k = s.len();
    match p.classes.get(k) {
        None => Err(OmegaError::PrefixTooShort { classes: p.len(), needed: k }),
        Some(PrefixClass::X(_)) => Ok(DLabel::U),
        Some(PrefixClass::Y(j)) => {
            let xc = p.class_of_x(*j).expect("validated: x_j precedes y_j");
            Ok(DLabel::V(s[xc]))
        }
    }
}

/// Finite table of chosen filter members, one per label.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ZAssignment(pub BTreeMap<DLabel, FinCofin>);

impl ZAssignment {
    pub fn get(&self, label: DLabel) -> Result<&FinCofin, OmegaError> {
        self.0.get(&label).ok_or(OmegaError::MissingLabel(label))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZChainOutcome {
    pub accepted: bool,
    pub first_failure: Option<usize>,
}

/// Checks `z_n ∈ Z(D(z_0..z_{n-1}))` for every `n`, stopping at the first
/// failure.
pub fn zchain_check(
    p: &OmegaTypePrefix,
    z: &[u64],
    zs: &ZAssignment,
) -> Result<ZChainOutcome, OmegaError> {
    require_valid(p)?;
    check_increasing(z)?;
    if z.len() > p.len() {
        return Err(OmegaError::PrefixTooShort { classes: p.len(), needed: z.len() });
    }
    for n in 0..z.len() {
        let label = assign_d(p, &z[..n])?;
        if !zs.get(label)?.contains(z[n]) {
            return Ok(ZChainOutcome { accepted: false, first_failure: Some(n) });
        }
    }
    Ok(ZChainOutcome { accepted: true, first_failure: None })
}

/// `pt ∈ {<a,b> : a ∈ Z(U), b ∈ Z(V_a)}`. Both labels must be assigned.
pub fn h_set_member(pt: Point, zs: &ZAssignment) -> Result<bool, OmegaError> {
    let u = zs.get(DLabel::U)?;
    let v = zs.get(DLabel::V(pt.x))?;
    Ok(u.contains(pt.x) && v.contains(pt.y))
}

/// Prefix of the omega-type realized by walking an omega×omega grid along
/// its diagonals.
///
/// Grid cell `(c, r)` (column `c`, row `r`) is visited in order of `c + r`,
/// then `c`. Opening column `c` spends one fresh value on its x-coordinate;
/// every visited cell spends one fresh value on its y-coordinate. Reading the
/// spent values in order gives the class sequence: the x-value of column `c`
/// is an x-class holding the indices of that column's points, each y-value is
/// the y-class of the point visited at that moment. An x-class lists only
/// the indices completed inside the prefix.
pub fn grid_prefix(len: usize) -> OmegaTypePrefix {
    // (is_x, column, point index)
    let mut events: Vec<(bool, u64, u32)> = Vec::with_capacity(len);
    let mut point = 0u32;
    let mut diag = 0u64;
    'walk: loop {
        for c in 0..=diag {
            if events.len() >= len {
                break 'walk;
            }
            if c == diag {
                events.push((true, c, 0));
                if events.len() >= len {
                    break 'walk;
                }
            }
            point += 1;
            events.push((false, c, point));
        }
        diag += 1;
    }
    let completed: Vec<(u64, u32)> =
        events.iter().filter(|e| !e.0).map(|&(_, c, j)| (c, j)).collect();
    let classes = events
        .iter()
        .map(|&(is_x, c, j)| {
            if is_x {
                PrefixClass::X(completed.iter().filter(|e| e.0 == c).map(|e| e.1).collect())
            } else {
                PrefixClass::Y(j)
            }
        })
        // a column opened as the last event has no completed index yet
        .filter(|class| !matches!(class, PrefixClass::X(ix) if ix.is_empty()))
        .collect();
    OmegaTypePrefix::new(classes)
}
