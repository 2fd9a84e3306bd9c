//! Simple diagrams of a knot, `m_C` and the Chebyshev degree.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{fraction_equivalent, Fraction, KnotRecord};
use crate::diagram::TrigonalDiagram;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeTriple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl fmt::Display for DegreeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Diagram filters, from loosest to tightest.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Filter {
    /// Nonzero entries, no islet.
    NoIslet,
    /// `NoIslet` plus: `|m_i| = 1` only without a sign change before it.
    Strict,
    /// Diagrams with no crossing-non-increasing move to a smaller complexity.
    ///
    /// End entries have `|m| >= 2`, a `+-1` entry agrees in sign with both
    /// neighbours, and an end entry `+-2` agrees in sign with its neighbour.
    #[default]
    Reduced,
}

impl Filter {
    pub fn accepts(self, d: &TrigonalDiagram) -> bool {
        let m = &d.entries;
        if m.is_empty() || m.contains(&0) {
            return false;
        }
        let islet = (1..m.len().saturating_sub(1))
            .any(|i| m[i].abs() == 1 && m[i - 1] * m[i] < 0 && m[i] * m[i + 1] < 0);
        if islet {
            return false;
        }
        let strict = m.windows(2).all(|w| w[1].abs() != 1 || w[0] * w[1] > 0);
        match self {
            Filter::NoIslet => true,
            Filter::Strict => strict,
            Filter::Reduced => {
                let k = m.len();
                if k == 1 {
                    return true;
                }
                let ends = m[0].abs() >= 2 && m[k - 1].abs() >= 2;
                let ones = (0..k).all(|i| {
                    m[i].abs() != 1
                        || ((i == 0 || m[i - 1] * m[i] > 0) && (i + 1 == k || m[i] * m[i + 1] > 0))
                });
                let twos = (m[0].abs() != 2 || m[0] * m[1] > 0)
                    && (m[k - 1].abs() != 2 || m[k - 1] * m[k - 2] > 0);
                ends && ones && twos
            }
        }
    }
}

fn cf_i128(seq: impl IntoIterator<Item = i64>) -> (i128, i128) {
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    for m in seq {
        let m = m as i128;
        (p0, q0, p1, q1) = (p1, q1, m * p1 + p0, m * q1 + q0);
    }
    (p1, q1)
}

fn matches(p: i128, q: i128, target: &Fraction) -> bool {
    if BigInt::from(p.abs()) != *target.alpha() {
        return false;
    }
    fraction_equivalent(&Fraction::new(p, q), target, true)
}

/// Smallest `m` such that `F(m + 2) >= alpha`; no `+-1` sequence shorter than this reaches `alpha`.
pub fn fib_lower_bound(alpha: u64) -> usize {
    let (mut a, mut b, mut m) = (1u64, 1u64, 0usize);
    // a = F(m + 1), b = F(m + 2)
    while b < alpha {
        (a, b) = (b, a + b);
        m += 1;
    }
    m
}

/// Minimal length of a `+-1` continued fraction equivalent to `f`, mirror included.
pub fn m_c(f: &Fraction, cap: usize) -> Result<usize> {
    for m in 1..=cap.min(30) {
        for mask in 0u64..(1u64 << m) {
            let (p, q) = cf_i128((0..m).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }));
            if matches(p, q, f) {
                return Ok(m);
            }
        }
    }
    Err(Error::NotFound { cap })
}

/// Default search cap for `m_C`.
pub fn default_cap(k: &KnotRecord) -> usize {
    2 * k.crossing_number as usize + 4
}

pub fn knot_m_c(k: &KnotRecord) -> Result<usize> {
    m_c(&k.fraction, default_cap(k))
}

/// `b` is the least integer `>= m_C + 1` prime to 3 and `c = 3N - b`.
pub fn chebyshev_degree(k: &KnotRecord) -> Result<DegreeTriple> {
    let m = knot_m_c(k)? as u32;
    let mut b = m + 1;
    while b % 3 == 0 {
        b += 1;
    }
    Ok(DegreeTriple { a: 3, b, c: 3 * k.crossing_number - b })
}

/// Least image under reversal and negation whose first entry is positive.
pub fn canonical(d: &TrigonalDiagram) -> TrigonalDiagram {
    let r = d.reversed();
    [d.clone(), r.clone(), d.negated(), r.negated()]
        .into_iter()
        .filter(|x| x.entries.first().is_some_and(|&m| m > 0))
        .min()
        .unwrap_or_else(|| d.clone())
}

fn compositions(n: usize, prefix: &mut Vec<i64>, out: &mut dyn FnMut(&[i64])) {
    if n == 0 {
        out(prefix);
        return;
    }
    for first in 1..=n {
        prefix.push(first as i64);
        compositions(n - first, prefix, out);
        prefix.pop();
    }
}

/// Every diagram of `f` with at most `budget` crossings passing `filter`, canonicalized and sorted.
pub fn enumerate_diagrams(f: &Fraction, budget: usize, filter: Filter) -> Vec<TrigonalDiagram> {
    let mut found = BTreeSet::new();
    for total in 1..=budget {
        compositions(total, &mut Vec::new(), &mut |parts| {
            let k = parts.len();
            // first entry positive: negation is handled by canonical()
            for mask in 0u64..(1u64 << (k - 1)) {
                let d: Vec<i64> = parts
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| if i > 0 && mask >> (i - 1) & 1 == 1 { -m } else { m })
                    .collect();
                let d = TrigonalDiagram::new(d);
                if !filter.accepts(&d) {
                    continue;
                }
                let (p, q) = cf_i128(d.entries.iter().copied());
                if matches(p, q, f) {
                    found.insert(canonical(&d));
                }
            }
        });
    }
    found.into_iter().collect()
}

/// Simple diagrams of `k`; `budget` defaults to `m_C(k)`.
pub fn enumerate_simple_diagrams(
    k: &KnotRecord,
    budget: Option<usize>,
    filter: Filter,
) -> Result<Vec<TrigonalDiagram>> {
    let budget = match budget {
        Some(b) => b,
        None => knot_m_c(k)?,
    };
    Ok(enumerate_diagrams(&k.fraction, budget, filter))
}
