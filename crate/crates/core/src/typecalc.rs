//! n-types: linear pre-orders of the formal symbols `x1..xn, y1..yn` in
//! which the y's are strictly increasing, each `xi` strictly precedes `yi`,
//! and only x's may be tied.
//!
//! An [`NType`] is stored as its ordered sequence of equivalence classes.
//! Every class is either a single y-symbol or a nonempty set of x-symbols,
//! which makes each defining clause a local check and lets enumeration work
//! class by class.
//!
//! Enumeration walks "gap assignments": the y's cut the line into gaps, gap
//! `j` being the stretch preceded by exactly `j` y's. Symbol `xi` must land in
//! a gap `< i`, and the x's sharing a gap form an ordered set partition.
//! Types are emitted lexicographically by (gap vector, per-gap weak order
//! index), which is also the order [`enumerate_ntypes`] documents.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest `n` accepted by enumeration and counting.
pub const MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolKind {
    X,
    Y,
}

/// One of the formal symbols `xi` / `yi`, indices starting at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub kind: SymbolKind,
    pub index: usize,
}

impl Symbol {
    pub fn x(index: usize) -> Self {
        Symbol { kind: SymbolKind::X, index }
    }

    pub fn y(index: usize) -> Self {
        Symbol { kind: SymbolKind::Y, index }
    }

    pub fn is_x(self) -> bool {
        self.kind == SymbolKind::X
    }

    /// Position in the `x1..xn, y1..yn` layout used by [`RawPreorder`].
    fn slot(self, n: usize) -> usize {
        match self.kind {
            SymbolKind::X => self.index - 1,
            SymbolKind::Y => n + self.index - 1,
        }
    }

    fn from_slot(slot: usize, n: usize) -> Self {
        if slot < n {
            Symbol::x(slot + 1)
        } else {
            Symbol::y(slot - n + 1)
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SymbolKind::X => write!(f, "x{}", self.index),
            SymbolKind::Y => write!(f, "y{}", self.index),
        }
    }
}

impl FromStr for Symbol {
    type Err = TypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let kind = match s.chars().next() {
            Some('x') => SymbolKind::X,
            Some('y') => SymbolKind::Y,
            _ => return Err(TypeError::Malformed(format!("not a symbol: {s:?}"))),
        };
        let index: usize = s[1..]
            .parse()
            .map_err(|_| TypeError::Malformed(format!("bad symbol index in {s:?}")))?;
        if index == 0 {
            return Err(TypeError::Malformed(format!("symbol index must be >= 1: {s:?}")));
        }
        Ok(Symbol { kind, index })
    }
}

/// A clause of the n-type definition that a candidate pre-order violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotReflexive(Symbol),
    NotTotal(Symbol, Symbol),
    NotTransitive(Symbol, Symbol, Symbol),
    /// `y_i < y_{i+1}` does not hold strictly.
    YOrder(usize),
    /// `x_i < y_i` does not hold strictly.
    XNotBeforeY(usize),
    /// Two distinct equivalent symbols, at least one of them a y.
    NonXEquivalence(Symbol, Symbol),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotReflexive(a) => write!(f, "not reflexive at {a}"),
            Violation::NotTotal(a, b) => write!(f, "not total: {a} and {b} incomparable"),
            Violation::NotTransitive(a, b, c) => {
                write!(f, "not transitive: {a}<={b}<={c} but not {a}<={c}")
            }
            Violation::YOrder(i) => write!(f, "y{} < y{} must hold strictly", i, i + 1),
            Violation::XNotBeforeY(i) => write!(f, "x{i} must strictly precede y{i}"),
            Violation::NonXEquivalence(a, b) => {
                write!(f, "equivalent symbols must both be x's ({a} ~ {b})")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TypeError {
    #[error("n = {n} outside the supported range 1..={max}")]
    OutOfRange { n: usize, max: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("not an n-type: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("expected a {expected}-type, got a {got}-type")]
    WrongArity { expected: usize, got: usize },
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

/// Result of [`validate_ntype`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// An arbitrary binary relation on the `2n` symbols, given as a `leq` table
/// indexed `x1..xn, y1..yn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPreorder {
    n: usize,
    leq: Vec<Vec<bool>>,
}

impl RawPreorder {
    pub fn from_matrix(n: usize, leq: Vec<Vec<bool>>) -> Result<Self, TypeError> {
        if n == 0 {
            return Err(TypeError::Malformed("n must be positive".into()));
        }
        if leq.len() != 2 * n || leq.iter().any(|row| row.len() != 2 * n) {
            return Err(TypeError::Malformed(format!(
                "relation table must be {0}x{0} for n = {n}",
                2 * n
            )));
        }
        Ok(RawPreorder { n, leq })
    }

    /// Builds the relation from explicit `a <= b` pairs. Reflexive pairs are
    /// not added implicitly.
    pub fn from_pairs(n: usize, pairs: &[(Symbol, Symbol)]) -> Result<Self, TypeError> {
        let mut leq = vec![vec![false; 2 * n]; 2 * n];
        for &(a, b) in pairs {
            for s in [a, b] {
                if s.index == 0 || s.index > n {
                    return Err(TypeError::Malformed(format!(
                        "dangling symbol {s} for n = {n}"
                    )));
                }
            }
            leq[a.slot(n)][b.slot(n)] = true;
        }
        RawPreorder::from_matrix(n, leq)
    }

    /// Relation induced by ranking each symbol; `rank[slot]`.
    fn from_ranks(n: usize, rank: &[usize]) -> Self {
        let m = 2 * n;
        let leq = (0..m)
            .map(|a| (0..m).map(|b| rank[a] <= rank[b]).collect())
            .collect();
        RawPreorder { n, leq }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: Symbol, b: Symbol) -> bool {
        self.leq[a.slot(self.n)][b.slot(self.n)]
    }

    fn less(&self, a: Symbol, b: Symbol) -> bool {
        self.leq(a, b) && !self.leq(b, a)
    }

    fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..2 * self.n).map(move |s| Symbol::from_slot(s, self.n))
    }
}

/// Checks every clause of the n-type definition and names each violation.
pub fn validate_ntype(candidate: &RawPreorder) -> ValidationReport {
    let n = candidate.n;
    let mut violations = Vec::new();
    let syms: Vec<Symbol> = candidate.symbols().collect();
    for &a in &syms {
        if !candidate.leq(a, a) {
            violations.push(Violation::NotReflexive(a));
        }
    }
    for (i, &a) in syms.iter().enumerate() {
        for &b in &syms[i + 1..] {
            if !candidate.leq(a, b) && !candidate.leq(b, a) {
                violations.push(Violation::NotTotal(a, b));
            }
        }
    }
    'trans: for &a in &syms {
        for &b in &syms {
            if !candidate.leq(a, b) {
                continue;
            }
            for &c in &syms {
                if candidate.leq(b, c) && !candidate.leq(a, c) {
                    violations.push(Violation::NotTransitive(a, b, c));
                    break 'trans;
                }
            }
        }
    }
    for i in 1..n {
        if !candidate.less(Symbol::y(i), Symbol::y(i + 1)) {
            violations.push(Violation::YOrder(i));
        }
    }
    for i in 1..=n {
        if !candidate.less(Symbol::x(i), Symbol::y(i)) {
            violations.push(Violation::XNotBeforeY(i));
        }
    }
    for (i, &a) in syms.iter().enumerate() {
        for &b in &syms[i + 1..] {
            let equivalent = candidate.leq(a, b) && candidate.leq(b, a);
            if equivalent && !(a.is_x() && b.is_x()) {
                violations.push(Violation::NonXEquivalence(a, b));
            }
        }
    }
    ValidationReport { violations }
}

/// One equivalence class of an n-type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeClass {
    /// Tied x-symbols, indices ascending.
    X(Vec<usize>),
    Y(usize),
}

impl TypeClass {
    pub fn symbols(&self) -> Vec<Symbol> {
        match self {
            TypeClass::X(ix) => ix.iter().map(|&i| Symbol::x(i)).collect(),
            TypeClass::Y(j) => vec![Symbol::y(*j)],
        }
    }
}

/// A validated n-type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "NTypeRepr", into = "NTypeRepr")]
pub struct NType {
    n: usize,
    classes: Vec<TypeClass>,
}

#[derive(Serialize, Deserialize)]
struct NTypeRepr {
    n: usize,
    classes: Vec<Vec<String>>,
}

impl From<NType> for NTypeRepr {
    fn from(t: NType) -> Self {
        NTypeRepr {
            n: t.n,
            classes: t
                .classes
                .iter()
                .map(|c| c.symbols().iter().map(|s| s.to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<NTypeRepr> for NType {
    type Error = TypeError;

    fn try_from(r: NTypeRepr) -> Result<Self, Self::Error> {
        let mut classes = Vec::with_capacity(r.classes.len());
        for class in &r.classes {
            let syms = class
                .iter()
                .map(|s| s.parse::<Symbol>())
                .collect::<Result<Vec<_>, _>>()?;
            classes.push(class_from_symbols(&syms)?);
        }
        NType::from_classes(r.n, classes)
    }
}

fn class_from_symbols(syms: &[Symbol]) -> Result<TypeClass, TypeError> {
    match syms {
        [] => Err(TypeError::Malformed("empty equivalence class".into())),
        [s] if !s.is_x() => Ok(TypeClass::Y(s.index)),
        _ if syms.iter().all(|s| s.is_x()) => {
            let mut ix: Vec<usize> = syms.iter().map(|s| s.index).collect();
            ix.sort_unstable();
            Ok(TypeClass::X(ix))
        }
        _ => {
            let y = syms.iter().find(|s| !s.is_x()).copied().unwrap();
            let other = syms.iter().find(|&&s| s != y).copied().unwrap();
            Err(TypeError::Invalid(vec![Violation::NonXEquivalence(other, y)]))
        }
    }
}

impl NType {
    /// Builds a type from its class sequence, checking every clause.
    pub fn from_classes(n: usize, classes: Vec<TypeClass>) -> Result<Self, TypeError> {
        if n == 0 {
            return Err(TypeError::Malformed("n must be positive".into()));
        }
        let mut rank = vec![usize::MAX; 2 * n];
        for (r, class) in classes.iter().enumerate() {
            if let TypeClass::X(ix) = class {
                if ix.is_empty() {
                    return Err(TypeError::Malformed("empty x-class".into()));
                }
            }
            for s in class.symbols() {
                if s.index == 0 || s.index > n {
                    return Err(TypeError::Malformed(format!("dangling symbol {s} for n = {n}")));
                }
                let slot = s.slot(n);
                if rank[slot] != usize::MAX {
                    return Err(TypeError::Malformed(format!("symbol {s} occurs twice")));
                }
                rank[slot] = r;
            }
        }
        if let Some(slot) = rank.iter().position(|&r| r == usize::MAX) {
            return Err(TypeError::Malformed(format!(
                "symbol {} missing",
                Symbol::from_slot(slot, n)
            )));
        }
        let report = validate_ntype(&RawPreorder::from_ranks(n, &rank));
        if !report.is_ok() {
            return Err(TypeError::Invalid(report.violations));
        }
        let classes = classes
            .into_iter()
            .map(|c| match c {
                TypeClass::X(mut ix) => {
                    ix.sort_unstable();
                    TypeClass::X(ix)
                }
                y => y,
            })
            .collect();
        Ok(NType { n, classes })
    }

    /// Converts a relation into a type, failing with the violated clauses.
    pub fn from_preorder(raw: &RawPreorder) -> Result<Self, TypeError> {
        let report = validate_ntype(raw);
        if !report.is_ok() {
            return Err(TypeError::Invalid(report.violations));
        }
        let n = raw.n;
        // In a linear pre-order the number of symbols strictly below `s`
        // determines its class; sort by that.
        let mut keyed: Vec<(usize, Symbol)> = raw
            .symbols()
            .map(|s| (raw.symbols().filter(|&t| raw.less(t, s)).count(), s))
            .collect();
        keyed.sort();
        let mut classes: Vec<Vec<Symbol>> = Vec::new();
        let mut last = None;
        for (k, s) in keyed {
            if last == Some(k) {
                classes.last_mut().unwrap().push(s);
            } else {
                classes.push(vec![s]);
                last = Some(k);
            }
        }
        let classes = classes
            .iter()
            .map(|c| class_from_symbols(c))
            .collect::<Result<Vec<_>, _>>()?;
        NType::from_classes(n, classes)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[TypeClass] {
        &self.classes
    }

    /// Index of the class containing `s`.
    pub fn class_of(&self, s: Symbol) -> Option<usize> {
        self.classes.iter().position(|c| match (c, s.kind) {
            (TypeClass::X(ix), SymbolKind::X) => ix.contains(&s.index),
            (TypeClass::Y(j), SymbolKind::Y) => *j == s.index,
            _ => false,
        })
    }

    pub fn compare(&self, a: Symbol, b: Symbol) -> Option<Ordering> {
        Some(self.class_of(a)?.cmp(&self.class_of(b)?))
    }

    /// The `2n x 2n` comparison table of this type.
    pub fn to_preorder(&self) -> RawPreorder {
        let mut rank = vec![0; 2 * self.n];
        for (r, class) in self.classes.iter().enumerate() {
            for s in class.symbols() {
                rank[s.slot(self.n)] = r;
            }
        }
        RawPreorder::from_ranks(self.n, &rank)
    }

    /// True for `x1=x2<y1<y2`, the type of two points in one column.
    pub fn is_vertical_pair(&self) -> bool {
        *self == vertical_pair_type()
    }
}

/// The 2-type `x1=x2<y1<y2`.
pub fn vertical_pair_type() -> NType {
    NType {
        n: 2,
        classes: vec![TypeClass::X(vec![1, 2]), TypeClass::Y(1), TypeClass::Y(2)],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relator {
    Less,
    Equal,
}

/// The list form `x1=x2<y1<y2`: symbols separated by `<` or `=`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListForm {
    pub symbols: Vec<Symbol>,
    pub relators: Vec<Relator>,
}

impl fmt::Display for ListForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                let r = match self.relators[i - 1] {
                    Relator::Less => '<',
                    Relator::Equal => '=',
                };
                write!(f, "{r}")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for ListForm {
    type Err = TypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut symbols = Vec::new();
        let mut relators = Vec::new();
        let mut current = String::new();
        for ch in s.chars().filter(|c| !c.is_whitespace()) {
            match ch {
                '<' | '=' => {
                    symbols.push(current.parse::<Symbol>()?);
                    current.clear();
                    relators.push(if ch == '<' { Relator::Less } else { Relator::Equal });
                }
                _ => current.push(ch),
            }
        }
        symbols.push(current.parse::<Symbol>()?);
        Ok(ListForm { symbols, relators })
    }
}

/// Serializes `t` with each x-class written in ascending index order.
pub fn list_form(t: &NType) -> ListForm {
    let mut symbols = Vec::with_capacity(2 * t.n);
    let mut relators = Vec::with_capacity(2 * t.n);
    for (ci, class) in t.classes.iter().enumerate() {
        if ci > 0 {
            relators.push(Relator::Less);
        }
        for (si, s) in class.symbols().into_iter().enumerate() {
            if si > 0 {
                relators.push(Relator::Equal);
            }
            symbols.push(s);
        }
    }
    ListForm { symbols, relators }
}

pub fn parse_list_form(list: &ListForm) -> Result<NType, TypeError> {
    let len = list.symbols.len();
    if list.relators.len() + 1 != len {
        return Err(TypeError::Malformed("symbols and relators must alternate".into()));
    }
    if len % 2 != 0 {
        return Err(TypeError::Malformed(format!("odd number of symbols ({len})")));
    }
    let n = len / 2;
    let mut seen = BTreeSet::new();
    for &s in &list.symbols {
        if s.index > n {
            return Err(TypeError::Malformed(format!("dangling symbol {s} for n = {n}")));
        }
        if !seen.insert(s) {
            return Err(TypeError::Malformed(format!("symbol {s} occurs twice")));
        }
    }
    let mut rank = vec![0; 2 * n];
    let mut r = 0;
    for (i, &s) in list.symbols.iter().enumerate() {
        if i > 0 && list.relators[i - 1] == Relator::Less {
            r += 1;
        }
        rank[s.slot(n)] = r;
    }
    NType::from_preorder(&RawPreorder::from_ranks(n, &rank))
}

impl fmt::Display for NType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", list_form(self))
    }
}

impl FromStr for NType {
    type Err = TypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_list_form(&s.parse()?)
    }
}

fn check_range(n: usize) -> Result<(), TypeError> {
    if n == 0 || n > MAX_N {
        Err(TypeError::OutOfRange { n, max: MAX_N })
    } else {
        Ok(())
    }
}

/// All ordered set partitions of `items`. The first block runs over nonempty
/// sub-selections in ascending bitmask order, the rest recursively.
pub fn ordered_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << items.len()) {
        let (block, rest): (Vec<_>, Vec<_>) = items
            .iter()
            .enumerate()
            .partition(|(i, _)| mask & (1 << i) != 0);
        let block: Vec<usize> = block.into_iter().map(|(_, &v)| v).collect();
        let rest: Vec<usize> = rest.into_iter().map(|(_, &v)| v).collect();
        for tail in ordered_partitions(&rest) {
            let mut p = Vec::with_capacity(tail.len() + 1);
            p.push(block.clone());
            p.extend(tail);
            out.push(p);
        }
    }
    out
}

/// Gap vectors `g` with `g[i-1] < i`, in lexicographic order.
fn gap_assignments(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 1..=n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..i).map(move |g| {
                    let mut v = prefix.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

/// Every n-type exactly once, ordered by (gap vector, per-gap weak order).
pub fn enumerate_ntypes(n: usize) -> Result<Vec<NType>, TypeError> {
    check_range(n)?;
    let mut out = Vec::new();
    for gaps in gap_assignments(n) {
        let per_gap: Vec<Vec<Vec<Vec<usize>>>> = (0..n)
            .map(|j| {
                let members: Vec<usize> = (1..=n).filter(|&i| gaps[i - 1] == j).collect();
                ordered_partitions(&members)
            })
            .collect();
        for choice in per_gap.iter().map(|p| 0..p.len()).multi_cartesian_product() {
            let mut classes = Vec::with_capacity(2 * n);
            for (j, &c) in choice.iter().enumerate() {
                classes.extend(per_gap[j][c].iter().map(|block| TypeClass::X(block.clone())));
                classes.push(TypeClass::Y(j + 1));
            }
            out.push(NType { n, classes });
        }
    }
    Ok(out)
}

/// Ordered Bell (Fubini) number: weak orders on `k` labelled items.
pub fn fubini(k: usize) -> u64 {
    let mut a = vec![1u64; k + 1];
    for m in 1..=k {
        a[m] = (1..=m).map(|j| binomial(m as u64, j as u64) * a[m - j]).sum();
    }
    a[k]
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// T(n) by the enumeration-free gap formula: the sum over gap vectors of the
/// product of per-gap Fubini numbers.
pub fn count_ntypes_by_formula(n: usize) -> Result<u64, TypeError> {
    check_range(n)?;
    Ok(gap_assignments(n)
        .iter()
        .map(|gaps| {
            (0..n)
                .map(|j| fubini(gaps.iter().filter(|&&g| g == j).count()))
                .product::<u64>()
        })
        .sum())
}

/// T(n). Computed by enumeration and cross-checked against the gap formula.
pub fn count_ntypes(n: usize) -> Result<u64, TypeError> {
    let enumerated = enumerate_ntypes(n)?.len() as u64;
    let formula = count_ntypes_by_formula(n)?;
    assert_eq!(enumerated, formula, "T({n}) disagrees between enumeration and gap formula");
    Ok(enumerated)
}

/// Appends `x_{n+1} < y_{n+1}` after every existing class.
pub fn append_extension(t: &NType) -> NType {
    let n = t.n + 1;
    let mut classes = t.classes.clone();
    classes.push(TypeClass::X(vec![n]));
    classes.push(TypeClass::Y(n));
    NType { n, classes }
}

/// The 2-type to 3-type recipe: renumber index 2 as 3, then put `x2` in the
/// class of `x1` and `y2` immediately after `y1`.
pub fn insert_extension(t: &NType) -> Result<NType, TypeError> {
    if t.n != 2 {
        return Err(TypeError::WrongArity { expected: 2, got: t.n });
    }
    let mut classes = Vec::with_capacity(t.classes.len() + 1);
    for class in &t.classes {
        match class {
            TypeClass::X(ix) => {
                let mut renamed: Vec<usize> =
                    ix.iter().map(|&i| if i == 2 { 3 } else { i }).collect();
                if renamed.contains(&1) {
                    renamed.push(2);
                }
                renamed.sort_unstable();
                classes.push(TypeClass::X(renamed));
            }
            TypeClass::Y(1) => {
                classes.push(TypeClass::Y(1));
                classes.push(TypeClass::Y(2));
            }
            TypeClass::Y(_) => classes.push(TypeClass::Y(3)),
        }
    }
    NType::from_classes(3, classes)
}

/// The type induced on `x1..xn, y1..yn`.
pub fn restrict_to_initial(t: &NType, n: usize) -> Result<NType, TypeError> {
    if n == 0 || n > t.n {
        return Err(TypeError::WrongArity { expected: t.n, got: n });
    }
    let classes = t
        .classes
        .iter()
        .filter_map(|c| match c {
            TypeClass::X(ix) => {
                let kept: Vec<usize> = ix.iter().copied().filter(|&i| i <= n).collect();
                (!kept.is_empty()).then_some(TypeClass::X(kept))
            }
            TypeClass::Y(j) => (*j <= n).then_some(TypeClass::Y(*j)),
        })
        .collect();
    Ok(NType { n, classes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> NType {
        s.parse().unwrap()
    }

    /// Independent oracle: every rank function on the 2n slots whose image
    /// is an initial segment is a total pre-order; keep those satisfying the
    /// clauses, checked directly on ranks.
    fn brute_force_types(n: usize) -> BTreeSet<NType> {
        let m = 2 * n;
        let mut out = BTreeSet::new();
        let mut rank = vec![0usize; m];
        loop {
            let max = *rank.iter().max().unwrap();
            let surjective = (0..=max).all(|r| rank.contains(&r));
            let ok = surjective
                && (0..n - 1).all(|i| rank[n + i] < rank[n + i + 1])
                && (0..n).all(|i| rank[i] < rank[n + i])
                && (0..m).all(|a| (n..m).all(|b| a == b || rank[a] != rank[b]));
            if ok {
                out.insert(NType::from_preorder(&RawPreorder::from_ranks(n, &rank)).unwrap());
            }
            let mut k = 0;
            while k < m {
                rank[k] += 1;
                if rank[k] < m {
                    break;
                }
                rank[k] = 0;
                k += 1;
            }
            if k == m {
                break;
            }
        }
        out
    }

    #[test]
    fn brute_force_counts() {
        assert_eq!(brute_force_types(1).len(), 1);
        assert_eq!(brute_force_types(2).len(), 4);
        assert_eq!(brute_force_types(3).len(), 26);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=3 {
            let listed = enumerate_ntypes(n).unwrap();
            let set: BTreeSet<NType> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len(), "duplicates for n={n}");
            assert_eq!(set, brute_force_types(n));
        }
    }

    #[test]
    fn two_types_in_canonical_order() {
        let forms: Vec<String> =
            enumerate_ntypes(2).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(forms, ["x1<x2<y1<y2", "x2<x1<y1<y2", "x1=x2<y1<y2", "x1<y1<x2<y2"]);
        assert_eq!(enumerate_ntypes(1).unwrap(), vec![t("x1<y1")]);
    }

    #[test]
    fn counts_and_formula() {
        assert_eq!(count_ntypes(1).unwrap(), 1);
        assert_eq!(count_ntypes(2).unwrap(), 4);
        assert_eq!(count_ntypes(3).unwrap(), 26);
        for n in 1..=5 {
            assert_eq!(count_ntypes(n).unwrap(), count_ntypes_by_formula(n).unwrap());
        }
        assert_eq!([0, 1, 2, 3].map(fubini), [1, 1, 3, 13]);
    }

    #[test]
    fn range_errors() {
        assert!(matches!(enumerate_ntypes(0), Err(TypeError::OutOfRange { .. })));
        assert!(matches!(count_ntypes(MAX_N + 1), Err(TypeError::OutOfRange { .. })));
    }

    #[test]
    fn validation_examples() {
        assert!(validate_ntype(&t("x1=x2<y1<y2").to_preorder()).is_ok());
        assert!(validate_ntype(&t("x1<y1").to_preorder()).is_ok());

        // x1 < x2 < y1 = y2
        let x1 = Symbol::x(1);
        let x2 = Symbol::x(2);
        let y1 = Symbol::y(1);
        let y2 = Symbol::y(2);
        let order = [vec![x1], vec![x2], vec![y1, y2]];
        let mut pairs = Vec::new();
        for (i, a) in order.iter().enumerate() {
            for b in &order[i..] {
                for &s in a {
                    for &u in b {
                        pairs.push((s, u));
                    }
                }
            }
        }
        pairs.push((y2, y1));
        let raw = RawPreorder::from_pairs(2, &pairs).unwrap();
        let report = validate_ntype(&raw);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::NonXEquivalence(..))));
        assert!(report.violations.iter().any(|v| v.to_string().contains("both be x's")));
        assert!(matches!(
            "x1<x2<y1=y2".parse::<NType>(),
            Err(TypeError::Invalid(v)) if v.iter().any(|v| matches!(v, Violation::NonXEquivalence(..)))
        ));
    }

    #[test]
    fn malformed_input_is_distinct_from_violations() {
        assert!(matches!(
            RawPreorder::from_pairs(1, &[(Symbol::x(1), Symbol::y(2))]),
            Err(TypeError::Malformed(_))
        ));
        assert!(matches!(
            RawPreorder::from_matrix(2, vec![vec![true; 3]; 3]),
            Err(TypeError::Malformed(_))
        ));
        assert!(matches!("x1<y1<x3<y2".parse::<NType>(), Err(TypeError::Malformed(_))));
        assert!(matches!("x1<y1<x1<y2".parse::<NType>(), Err(TypeError::Malformed(_))));
        assert!(matches!("x1<y1<x2".parse::<NType>(), Err(TypeError::Malformed(_))));
        let report = validate_ntype(&RawPreorder::from_matrix(1, vec![vec![false; 2]; 2]).unwrap());
        assert!(report.violations.contains(&Violation::NotReflexive(Symbol::x(1))));
        assert!(report.violations.contains(&Violation::NotTotal(Symbol::x(1), Symbol::y(1))));
    }

    #[test]
    fn list_form_examples() {
        let vertical = NType::from_classes(
            2,
            vec![TypeClass::X(vec![2, 1]), TypeClass::Y(1), TypeClass::Y(2)],
        )
        .unwrap();
        assert_eq!(list_form(&vertical).to_string(), "x1=x2<y1<y2");
        assert!(vertical.is_vertical_pair());
        let swapped = t("x2<x1<y1<y2");
        assert_eq!(swapped.classes()[0], TypeClass::X(vec![2]));
        assert_eq!(swapped.compare(Symbol::x(2), Symbol::x(1)), Some(Ordering::Less));
        assert_eq!(t("x2=x1<y1<y2"), vertical);
    }

    #[test]
    fn list_form_round_trip_exhaustive() {
        for n in 1..=4 {
            for ty in enumerate_ntypes(n).unwrap() {
                let lf = list_form(&ty);
                assert_eq!(parse_list_form(&lf).unwrap(), ty);
                let reparsed: ListForm = lf.to_string().parse().unwrap();
                assert_eq!(reparsed, lf);
            }
        }
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(t("x1=x2<y1<y2")).unwrap();
        assert_eq!(v, serde_json::json!({"n": 2, "classes": [["x1", "x2"], ["y1"], ["y2"]]}));
        let back: NType = serde_json::from_value(v).unwrap();
        assert_eq!(back, t("x1=x2<y1<y2"));
        let bad = serde_json::json!({"n": 2, "classes": [["x1", "x2"], ["y1", "y2"]]});
        assert!(serde_json::from_value::<NType>(bad).is_err());
    }

    #[test]
    fn append_examples() {
        assert_eq!(append_extension(&t("x1=x2<y1<y2")), t("x1=x2<y1<y2<x3<y3"));
        assert_eq!(append_extension(&t("x1<y1")), t("x1<y1<x2<y2"));
        for n in 1..=4 {
            for ty in enumerate_ntypes(n).unwrap() {
                let ext = append_extension(&ty);
                assert!(validate_ntype(&ext.to_preorder()).is_ok());
                assert_eq!(restrict_to_initial(&ext, n).unwrap(), ty);
            }
        }
    }

    #[test]
    fn insert_examples() {
        assert_eq!(insert_extension(&t("x1<x2<y1<y2")).unwrap(), t("x1=x2<x3<y1<y2<y3"));
        assert_eq!(insert_extension(&t("x2<x1<y1<y2")).unwrap(), t("x3<x1=x2<y1<y2<y3"));
        assert_eq!(insert_extension(&t("x1<y1<x2<y2")).unwrap(), t("x1=x2<y1<y2<x3<y3"));
        for ty in enumerate_ntypes(2).unwrap() {
            let ext = insert_extension(&ty).unwrap();
            assert!(validate_ntype(&ext.to_preorder()).is_ok());
        }
        assert!(matches!(
            insert_extension(&t("x1<y1")),
            Err(TypeError::WrongArity { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(restrict_to_initial(&t("x1=x2<y1<y2<x3<y3"), 2).unwrap(), t("x1=x2<y1<y2"));
        assert_eq!(restrict_to_initial(&t("x1<x2<x3<y1<y2<y3"), 2).unwrap(), t("x1<x2<y1<y2"));
        assert!(restrict_to_initial(&t("x1<y1"), 2).is_err());
    }
}
