//! Plane trigonal words, the reduction `R`, and degree verdicts.
//!
//! A plane word lists run lengths of crossings alternating between the two
//! crossing positions of a trigonal curve. Positions are 1-based.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith::KnotRecord;
use crate::diagram::{gauss_sign_changes, TrigonalDiagram};
use crate::enumerate::{chebyshev_degree, enumerate_simple_diagrams, DegreeTriple, Filter};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlaneWord {
    pub runs: Vec<u32>,
}

impl PlaneWord {
    pub fn new(runs: Vec<u32>) -> PlaneWord {
        PlaneWord { runs }
    }

    pub fn parse(s: &str) -> Result<PlaneWord> {
        let body = s.trim().trim_start_matches('D').trim_start_matches('(').trim_end_matches(')');
        let runs = body
            .split(',')
            .map(|t| {
                t.trim().parse::<u32>().map_err(|e| Error::Parse {
                    line: 0,
                    msg: format!("bad run {t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PlaneWord { runs })
    }

    pub fn crossings(&self) -> u32 {
        self.runs.iter().sum()
    }

    /// Collapses interior zeros: `(.., a, 0, b, ..)` becomes `(.., a + b, ..)`.
    pub fn normalized(&self) -> PlaneWord {
        let mut w = self.runs.clone();
        let mut i = 1;
        while i + 1 < w.len() {
            if w[i] == 0 {
                let merged = w[i - 1] + w[i + 1];
                w.splice(i - 1..i + 2, [merged]);
                i = 1;
            } else {
                i += 1;
            }
        }
        PlaneWord { runs: w }
    }

    pub fn reversed(&self) -> PlaneWord {
        PlaneWord { runs: self.runs.iter().rev().copied().collect() }
    }

    pub fn to_text(&self) -> String {
        self.runs.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Ordering used to pick class representatives: shorter first, then lexicographic.
    fn rank_key(&self) -> (usize, &[u32]) {
        (self.runs.len(), &self.runs)
    }
}

impl fmt::Display for PlaneWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl From<Vec<u32>> for PlaneWord {
    fn from(v: Vec<u32>) -> Self {
        PlaneWord::new(v)
    }
}

/// `(|m_1|, ..., |m_k|)`.
pub fn project(d: &TrigonalDiagram) -> PlaneWord {
    PlaneWord::new(d.entries.iter().map(|m| m.unsigned_abs() as u32).collect())
}

/// Replaces `(r_i, 1, r_{i+2})` by `(r_i - 1, r_{i+2} - 1)`; the result is not normalized.
pub fn apply_r(w: &PlaneWord, i: usize) -> Result<PlaneWord> {
    let r = &w.runs;
    let ok = i >= 1 && i + 2 <= r.len() && r[i - 1] >= 1 && r[i] == 1 && r[i + 1] >= 1;
    if !ok {
        return Err(Error::PatternMismatch(format!("no R pattern at {i} in {w}")));
    }
    let mut out = r[..i - 1].to_vec();
    out.push(r[i - 1] - 1);
    out.push(r[i + 1] - 1);
    out.extend_from_slice(&r[i + 2..]);
    Ok(PlaneWord::new(out))
}

/// Positions where `apply_r` applies.
pub fn r_positions(w: &PlaneWord) -> Vec<usize> {
    let r = &w.runs;
    (1..=r.len().saturating_sub(2))
        .filter(|&i| r[i - 1] >= 1 && r[i] == 1 && r[i + 1] >= 1)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// `(m, n)` becomes `(m + 1, 1, n + 1)`.
    A,
    /// `(m, n)` becomes `(m, 1, 1, 1, n)`.
    B,
}

/// Inverse of `R` at the boundary after run `split` (0 and `len` use an empty run).
pub fn inverse_r(w: &PlaneWord, split: usize, branch: Branch) -> Result<PlaneWord> {
    let r = &w.runs;
    if split > r.len() {
        return Err(Error::PatternMismatch(format!("split {split} outside {w}")));
    }
    let (mut out, m, rest) = if split == 0 {
        (Vec::new(), 0, &r[..])
    } else {
        (r[..split - 1].to_vec(), r[split - 1], &r[split..])
    };
    let (n, tail) = match rest.split_first() {
        Some((&n, tail)) => (n, tail),
        None => (0, rest),
    };
    match branch {
        Branch::A => out.extend([m + 1, 1, n + 1]),
        Branch::B => out.extend([m, 1, 1, 1, n]),
    }
    out.extend_from_slice(tail);
    Ok(PlaneWord::new(out))
}

/// Cost-0 rewrites: reversal, zero collapse and the end rule `(u, x, 1) <-> (u, x + 1)` at both ends.
pub fn neighbors(w: &PlaneWord) -> BTreeSet<PlaneWord> {
    let mut out = BTreeSet::new();
    let n = w.normalized();
    if n != *w {
        out.insert(n.clone());
    }
    out.insert(n.reversed());
    for (word, flipped) in [(n.clone(), false), (n.reversed(), true)] {
        let r = &word.runs;
        let k = r.len();
        let mut images = Vec::new();
        if k >= 2 && r[k - 1] == 1 {
            let mut v = r[..k - 2].to_vec();
            v.push(r[k - 2] + 1);
            images.push(v);
        }
        if k >= 1 && r[k - 1] >= 1 {
            let mut v = r[..k - 1].to_vec();
            v.extend([r[k - 1] - 1, 1]);
            images.push(v);
        }
        for v in images {
            let img = PlaneWord::new(v).normalized();
            out.insert(if flipped { img.reversed() } else { img });
        }
    }
    out
}

/// Closure of `w` under `neighbors`.
pub fn class_of(w: &PlaneWord) -> BTreeSet<PlaneWord> {
    let start = w.normalized();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for y in neighbors(&x) {
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}

pub fn same_class(a: &PlaneWord, b: &PlaneWord) -> bool {
    class_of(a).contains(&b.normalized())
}

fn representative(c: &BTreeSet<PlaneWord>) -> PlaneWord {
    c.iter().min_by(|a, b| a.rank_key().cmp(&b.rank_key())).cloned().expect("class is nonempty")
}

/// Skips multiples of 3.
pub fn bump(mut b: u32) -> u32 {
    while b % 3 == 0 {
        b += 1;
    }
    b
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseEntry {
    pub b_exact: Option<u32>,
    pub b_lower: u32,
    pub source: String,
}

#[derive(Debug, Deserialize)]
struct BaseRow {
    runs: String,
    b_exact: Option<u32>,
    b_lower: u32,
    source: String,
}

#[derive(Debug, Deserialize)]
struct OverrideRow {
    runs: String,
    b_lower: u32,
    table_row: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Override {
    pub b_lower: u32,
    pub table_row: String,
}

pub const BUILTIN_BASES: &str = include_str!("../data/bases.csv");
pub const BUILTIN_OVERRIDES: &str = include_str!("../data/bounds_overrides.csv");

/// Base degree table plus override bounds.
#[derive(Clone, Debug, Default)]
pub struct Bounds {
    pub bases: BTreeMap<PlaneWord, BaseEntry>,
    pub overrides: BTreeMap<PlaneWord, Override>,
}

fn parse_runs(s: &str, line: usize) -> Result<PlaneWord> {
    PlaneWord::parse(s).map_err(|e| Error::Parse { line, msg: e.to_string() })
}

impl Bounds {
    pub fn builtin() -> Bounds {
        Bounds::from_csv(BUILTIN_BASES, BUILTIN_OVERRIDES).expect("shipped tables parse")
    }

    pub fn load(bases: impl AsRef<Path>, overrides: impl AsRef<Path>) -> Result<Bounds> {
        Bounds::from_csv(&std::fs::read_to_string(bases)?, &std::fs::read_to_string(overrides)?)
    }

    pub fn from_csv(bases: &str, overrides: &str) -> Result<Bounds> {
        let mut out = Bounds::default();
        let mut rdr = csv::Reader::from_reader(bases.as_bytes());
        for (i, row) in rdr.deserialize::<BaseRow>().enumerate() {
            let row = row.map_err(|e| Error::Parse { line: i + 2, msg: e.to_string() })?;
            let w = parse_runs(&row.runs, i + 2)?;
            out.bases.insert(w, BaseEntry { b_exact: row.b_exact, b_lower: row.b_lower, source: row.source });
        }
        let mut rdr = csv::Reader::from_reader(overrides.as_bytes());
        for (i, row) in rdr.deserialize::<OverrideRow>().enumerate() {
            let row = row.map_err(|e| Error::Parse { line: i + 2, msg: e.to_string() })?;
            let w = parse_runs(&row.runs, i + 2)?;
            out.overrides.insert(w, Override { b_lower: row.b_lower, table_row: row.table_row });
        }
        Ok(out)
    }

    /// Table entry, then the odd single-run rule, then the one- and two-run rule.
    pub fn base_entry(&self, w: &PlaneWord) -> Option<BaseEntry> {
        if let Some(e) = self.bases.get(w) {
            return Some(e.clone());
        }
        let r = &w.runs;
        if r.len() == 1 && r[0] % 2 == 1 {
            let b = 3 * (r[0] - 1) / 2 + 1;
            return Some(BaseEntry { b_exact: Some(b), b_lower: b, source: "odd single run".into() });
        }
        let n = w.crossings();
        if (1..=2).contains(&r.len()) && r.iter().all(|&x| x >= 1) && n >= 3 {
            let b = (3 * n - 1) / 2;
            return Some(BaseEntry { b_exact: Some(b), b_lower: b, source: "two-run rule".into() });
        }
        None
    }

    /// First member (shortest, then least) with an entry; exact entries win over lower bounds.
    pub fn class_base(&self, class: &BTreeSet<PlaneWord>) -> Option<(PlaneWord, BaseEntry)> {
        let mut members: Vec<&PlaneWord> = class.iter().collect();
        members.sort_by(|a, b| a.rank_key().cmp(&b.rank_key()));
        let mut best: Option<(PlaneWord, BaseEntry)> = None;
        for w in members {
            if let Some(e) = self.base_entry(w) {
                let better = match &best {
                    None => true,
                    Some((_, b)) => e.b_exact.is_some() && b.b_exact.is_none(),
                };
                if better {
                    best = Some((w.clone(), e));
                }
            }
        }
        best
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Step {
    /// Cost-0 rewrite inside the current class.
    Identity { to: PlaneWord },
    /// `apply_r` at `at`, then normalization.
    R { at: usize, to: PlaneWord },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub source: PlaneWord,
    pub steps: Vec<Step>,
    pub base: PlaneWord,
    pub cost: u32,
    /// Base table entry of the end word's class, if any.
    pub base_entry: Option<BaseEntry>,
    /// Degree estimate of the end word (base lower bound, or `bump(crossings + 1)`).
    pub estimate: u32,
}

impl ReductionTrace {
    /// Replays the steps, checking every rewrite.
    pub fn replay(&self) -> bool {
        let mut cur = self.source.normalized();
        for s in &self.steps {
            cur = match s {
                Step::Identity { to } => {
                    if !class_of(&cur).contains(to) {
                        return false;
                    }
                    to.clone()
                }
                Step::R { at, to } => match apply_r(&cur, *at) {
                    Ok(x) if x.normalized() == *to => to.clone(),
                    _ => return false,
                },
            };
        }
        cur == self.base && self.cost == 3 * self.r_steps() as u32
    }

    pub fn r_steps(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, Step::R { .. })).count()
    }
}

struct Node {
    cost: u32,
    parent: Option<(PlaneWord, PlaneWord, usize)>,
    class: BTreeSet<PlaneWord>,
}

/// Cheapest reduction of `w` to a base word or an irreducible word.
///
/// Score is estimate plus cost. Ties go to base words, then to more steps,
/// then to the least end word. A source class with an exact base entry
/// returns immediately at cost 0.
pub fn reduction_search(w: &PlaneWord, bounds: &Bounds, depth: usize) -> ReductionTrace {
    let source = w.normalized();
    let c0 = class_of(&source);
    let rep0 = representative(&c0);
    if let Some((bw, e)) = bounds.class_base(&c0) {
        if e.b_exact.is_some() {
            let steps = if bw == source { vec![] } else { vec![Step::Identity { to: bw.clone() }] };
            return ReductionTrace { source, steps, base: bw, cost: 0, estimate: e.b_lower, base_entry: Some(e) };
        }
    }
    let mut nodes: BTreeMap<PlaneWord, Node> = BTreeMap::new();
    nodes.insert(rep0.clone(), Node { cost: 0, parent: None, class: c0 });
    let mut queue = VecDeque::from([rep0.clone()]);
    while let Some(key) = queue.pop_front() {
        let (cost, members) = {
            let n = &nodes[&key];
            (n.cost, n.class.clone())
        };
        if (cost / 3) as usize >= depth {
            continue;
        }
        for x in &members {
            for i in r_positions(x) {
                let y = apply_r(x, i).expect("position from r_positions").normalized();
                let cy = class_of(&y);
                let ky = representative(&cy);
                if !nodes.contains_key(&ky) {
                    nodes.insert(ky.clone(), Node { cost: cost + 3, parent: Some((key.clone(), x.clone(), i)), class: cy });
                    queue.push_back(ky);
                }
            }
        }
    }
    // (score, non-base, -cost, end word)
    let mut best: Option<((u32, u8, i64, (usize, Vec<u32>)), PlaneWord, PlaneWord, Option<BaseEntry>, u32)> = None;
    for (key, node) in &nodes {
        if node.cost == 0 {
            continue;
        }
        let cand = if let Some((bw, e)) = bounds.class_base(&node.class) {
            Some((e.b_lower + node.cost, 0u8, bw, Some(e.clone()), e.b_lower))
        } else if node.class.iter().all(|x| r_positions(x).is_empty()) {
            let est = bump(key.crossings() + 1);
            Some((est + node.cost, 1u8, key.clone(), None, est))
        } else {
            None
        };
        if let Some((score, kind, end, entry, est)) = cand {
            let sort_key = (score, kind, -(node.cost as i64), (end.runs.len(), end.runs.clone()));
            if best.as_ref().is_none_or(|b| sort_key < b.0) {
                best = Some((sort_key, key.clone(), end, entry, est));
            }
        }
    }
    let Some((_, key, end, entry, estimate)) = best else {
        return ReductionTrace {
            source: source.clone(),
            steps: vec![],
            base: source.clone(),
            cost: 0,
            base_entry: None,
            estimate: bump(source.crossings() + 1),
        };
    };
    // walk parents back to the source class
    let mut hops = Vec::new();
    let mut k = key.clone();
    while let Some((pk, x, i)) = nodes[&k].parent.clone() {
        hops.push((x, i));
        k = pk;
    }
    hops.reverse();
    let mut steps = Vec::new();
    let mut cur = source.clone();
    for (x, i) in hops {
        if x != cur {
            steps.push(Step::Identity { to: x.clone() });
        }
        let y = apply_r(&x, i).expect("recorded pattern").normalized();
        steps.push(Step::R { at: i, to: y.clone() });
        cur = y;
    }
    if cur != end {
        steps.push(Step::Identity { to: end.clone() });
    }
    let cost = nodes[&key].cost;
    ReductionTrace { source, steps, base: end, cost, base_entry: entry, estimate }
}

/// Default depth cap for `reduction_search`.
pub const DEFAULT_DEPTH: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Rule {
    Crossings,
    Base,
    Reduction,
    Override,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub word: PlaneWord,
    pub value: u32,
    /// Every rule that fired with its value.
    pub rules: Vec<(Rule, u32)>,
    pub trace: ReductionTrace,
    pub override_row: Option<String>,
}

impl LowerBound {
    /// Rules attaining the maximum.
    pub fn provenance(&self) -> Vec<Rule> {
        self.rules.iter().filter(|(_, v)| *v == self.value).map(|(r, _)| *r).collect()
    }
}

/// Lower bound on `b` for any trigonal curve realizing `w`.
pub fn b_lower_bound(w: &PlaneWord, bounds: &Bounds) -> LowerBound {
    let w = w.normalized();
    let mut rules = vec![(Rule::Crossings, bump(w.crossings() + 1))];
    if let Some(e) = bounds.base_entry(&w) {
        rules.push((Rule::Base, e.b_lower));
    }
    let trace = reduction_search(&w, bounds, DEFAULT_DEPTH);
    if trace.cost > 0 {
        rules.push((Rule::Reduction, bump(trace.estimate + trace.cost)));
    }
    let override_row = bounds.overrides.get(&w).map(|o| {
        rules.push((Rule::Override, o.b_lower));
        o.table_row.clone()
    });
    let value = rules.iter().map(|r| r.1).max().expect("crossing rule always present");
    LowerBound { word: w, value, rules, trace, override_row }
}

/// Numerical semigroup `<3, b>` membership.
pub fn in_semigroup(b: u32, c: u32) -> bool {
    (0..=c / b).any(|j| (c - j * b) % 3 == 0)
}

/// Smallest gap of `<3, b>` above `b`.
pub fn smallest_gap_above(b: u32) -> Option<u32> {
    (b + 1..=2 * b).find(|&c| !in_semigroup(b, c))
}

/// Largest gap of `<3, b>` in `(b, c]`.
pub fn largest_gap_at_most(b: u32, c: u32) -> Option<u32> {
    (b + 1..=c).rev().find(|&x| !in_semigroup(b, x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Chebyshev curve `(T_3, T_b, C)` with `c = 3N - b`.
    Chebyshev { b: u32, c: u32 },
    /// Curve built from a base curve by inverse reductions, height with `2N + s - 1` sign changes.
    Constructive { diagram: TrigonalDiagram, base: PlaneWord, cost: u32, b: u32, c: u32 },
}

impl Witness {
    pub fn b(&self) -> u32 {
        match self {
            Witness::Chebyshev { b, .. } | Witness::Constructive { b, .. } => *b,
        }
    }

    pub fn c(&self) -> u32 {
        match self {
            Witness::Chebyshev { c, .. } | Witness::Constructive { c, .. } => *c,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    Range,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramBound {
    pub diagram: TrigonalDiagram,
    pub bound: LowerBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub knot: String,
    pub degc: DegreeTriple,
    pub diagrams: Vec<DiagramBound>,
    pub b_lower: u32,
    pub b_upper: u32,
    pub c_lower: u32,
    pub c_upper: u32,
    pub witnesses: Vec<Witness>,
    pub status: Status,
}

impl DegreeReport {
    /// `b_lower` when exact, used for the `b` column.
    pub fn b(&self) -> u32 {
        self.b_lower
    }

    pub fn starred(&self) -> bool {
        self.b_upper < self.degc.b || (self.b_upper == self.degc.b && self.c_upper < self.degc.c)
    }

    /// Rows whose bound depends on an override entry.
    pub fn uses_override(&self) -> bool {
        self.diagrams.iter().any(|d| d.bound.provenance().contains(&Rule::Override))
    }
}

#[derive(Clone, Debug)]
pub struct VerdictOptions {
    /// Enumeration budget; `None` means `m_C`.
    pub budget: Option<usize>,
    pub filter: Filter,
    /// Apply `c >= 2N - 1` when `b = N + 1`.
    pub alternating_bound: bool,
    /// Apply the stronger `c >= 2N + 1` when `b = N + 1`; off by default, it contradicts `4_1`.
    pub alternating_bound_plus_two: bool,
}

impl Default for VerdictOptions {
    fn default() -> Self {
        VerdictOptions { budget: None, filter: Filter::Reduced, alternating_bound: true, alternating_bound_plus_two: false }
    }
}

/// Assembles lower and upper bounds on `(3, b, c)` for `k`.
pub fn degree_verdict(k: &KnotRecord, bounds: &Bounds, opts: &VerdictOptions) -> Result<DegreeReport> {
    let degc = chebyshev_degree(k)?;
    let n = k.crossing_number;
    let ds = enumerate_simple_diagrams(k, opts.budget, opts.filter)?;
    let mut witnesses = vec![Witness::Chebyshev { b: degc.b, c: degc.c }];
    let mut diagrams = Vec::new();
    for d in ds {
        let w = project(&d);
        let bound = b_lower_bound(&w, bounds);
        let t = &bound.trace;
        if let Some(bx) = t.base_entry.as_ref().and_then(|e| e.b_exact) {
            witnesses.push(Witness::Constructive {
                diagram: d.clone(),
                base: t.base.clone(),
                cost: t.cost,
                b: bx + t.cost,
                c: gauss_sign_changes(&d)? as u32,
            });
        }
        diagrams.push(DiagramBound { diagram: d, bound });
    }
    let b_lower = diagrams.iter().map(|d| d.bound.value).min().unwrap_or(degc.b);
    let b_upper = witnesses.iter().map(Witness::b).min().expect("Chebyshev witness");
    let (c_lower, c_upper) = if b_lower == b_upper {
        let b = b_lower;
        let mut lo = smallest_gap_above(b).unwrap_or(b + 1);
        if b == n + 1 {
            if opts.alternating_bound {
                lo = lo.max(2 * n - 1);
            }
            if opts.alternating_bound_plus_two {
                lo = lo.max(2 * n + 1);
            }
        }
        let hi = witnesses
            .iter()
            .filter(|w| w.b() == b)
            .map(|w| largest_gap_at_most(b, w.c()).unwrap_or(w.c()))
            .min()
            .expect("some witness attains b_upper");
        (lo, hi)
    } else {
        (b_lower + 1, witnesses.iter().filter(|w| w.b() == b_upper).map(Witness::c).min().unwrap_or(degc.c))
    };
    let status = if b_lower == b_upper && c_lower == c_upper { Status::Exact } else { Status::Range };
    Ok(DegreeReport { knot: k.name.clone(), degc, diagrams, b_lower, b_upper, c_lower, c_upper, witnesses, status })
}
