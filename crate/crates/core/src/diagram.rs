//! Signed trigonal diagrams `D(m_1, ..., m_k)`.
//!
//! Positions in the public API are 1-based, as in `m_1, ..., m_k`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{cf_eval, cf_expand_positive, Catalog, Fraction, KnotRecord};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TrigonalDiagram {
    pub entries: Vec<i64>,
}

impl TrigonalDiagram {
    pub fn new(entries: Vec<i64>) -> TrigonalDiagram {
        TrigonalDiagram { entries }
    }

    /// Parses `2,1,-3` (an optional `D(...)` wrapper is accepted).
    pub fn parse(s: &str) -> Result<TrigonalDiagram> {
        let body = s.trim().trim_start_matches('D').trim_start_matches('(').trim_end_matches(')');
        let entries = body
            .split(',')
            .map(|t| {
                t.trim().parse::<i64>().map_err(|e| Error::Parse {
                    line: 0,
                    msg: format!("bad diagram entry {t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TrigonalDiagram { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum_abs(&self) -> u64 {
        self.entries.iter().map(|m| m.unsigned_abs()).sum()
    }

    /// Number of adjacent pairs with opposite signs.
    pub fn sign_changes(&self) -> u64 {
        self.entries.windows(2).filter(|w| w[0] * w[1] < 0).count() as u64
    }

    pub fn fraction(&self) -> Result<Fraction> {
        cf_eval(&self.entries)
    }

    pub fn reversed(&self) -> TrigonalDiagram {
        TrigonalDiagram { entries: self.entries.iter().rev().copied().collect() }
    }

    pub fn negated(&self) -> TrigonalDiagram {
        TrigonalDiagram { entries: self.entries.iter().map(|m| -m).collect() }
    }

    /// Text form used by the CLI: `2,1,-3`.
    pub fn to_text(&self) -> String {
        self.entries.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for TrigonalDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({})", self.to_text())
    }
}

impl From<Vec<i64>> for TrigonalDiagram {
    fn from(v: Vec<i64>) -> Self {
        TrigonalDiagram::new(v)
    }
}

pub fn complexity(d: &TrigonalDiagram) -> u64 {
    d.len() as u64 + d.sum_abs()
}

/// Interior positions `i` with `|m_i| = 1` and sign changes on both sides.
pub fn islets(d: &TrigonalDiagram) -> Vec<usize> {
    let m = &d.entries;
    (1..m.len().saturating_sub(1))
        .filter(|&i| m[i].abs() == 1 && m[i - 1] * m[i] < 0 && m[i] * m[i + 1] < 0)
        .map(|i| i + 1)
        .collect()
}

fn check_formula_pre(d: &TrigonalDiagram) -> Result<()> {
    if d.entries.contains(&0) {
        return Err(Error::ZeroEntry(d.to_string()));
    }
    if !islets(d).is_empty() {
        return Err(Error::Islet(d.to_string()));
    }
    Ok(())
}

/// `N = sum |m_i| - s`.
pub fn crossing_number(d: &TrigonalDiagram) -> Result<u64> {
    check_formula_pre(d)?;
    Ok(d.sum_abs() - d.sign_changes())
}

/// `2N + s - 1`.
pub fn gauss_sign_changes(d: &TrigonalDiagram) -> Result<u64> {
    let n = crossing_number(d)?;
    Ok(2 * n + d.sign_changes() - 1)
}

/// Rewrites `D(x, m, -n, -y)` as `D(x, m - eps, eps, n - eps, y)`.
///
/// `pos` is the position of `m`; everything after it is read with flipped sign.
pub fn lagrange_step(d: &TrigonalDiagram, pos: usize, eps: i64) -> Result<TrigonalDiagram> {
    if eps.abs() != 1 {
        return Err(Error::PatternMismatch(format!("eps must be +-1, got {eps}")));
    }
    if pos == 0 || pos >= d.len() {
        return Err(Error::PatternMismatch(format!(
            "position {pos} needs an entry after it in {d}"
        )));
    }
    let m = &d.entries;
    let i = pos - 1;
    let mut out = m[..i].to_vec();
    out.push(m[i] - eps);
    out.push(eps);
    out.push(-m[i + 1] - eps);
    out.extend(m[i + 2..].iter().map(|y| -y));
    Ok(TrigonalDiagram::new(out))
}

/// All-positive normal form; the flag is set when only the mirror matches the input.
pub fn conway_normal_form(d: &TrigonalDiagram) -> Result<(TrigonalDiagram, bool)> {
    let f = d.fraction()?;
    normal_form_of(&f)
}

pub(crate) fn normal_form_of(f: &Fraction) -> Result<(TrigonalDiagram, bool)> {
    let a = f.alpha().clone();
    if a <= BigInt::from(1) {
        return Err(Error::Degenerate(f.to_string()));
    }
    if a == BigInt::from(2) {
        return Ok((TrigonalDiagram::new(vec![2]), false));
    }
    let b = f.beta().clone();
    let inv = b.extended_gcd(&a).x.mod_floor(&a);
    let best = |cands: &[BigInt]| -> Result<Option<Vec<i64>>> {
        let mut best: Option<Vec<i64>> = None;
        for c in cands {
            if c * 2 < a {
                let e = cf_expand_positive(&Fraction::new(a.clone(), c.clone()))?;
                if best.as_ref().is_none_or(|b| e < *b) {
                    best = Some(e);
                }
            }
        }
        Ok(best)
    };
    if let Some(e) = best(&[b.clone(), inv.clone()])? {
        return Ok((TrigonalDiagram::new(e), false));
    }
    let mirrored = [(-&b).mod_floor(&a), (-&inv).mod_floor(&a)];
    let e = best(&mirrored)?.expect("one of beta, -beta lies below alpha/2");
    Ok((TrigonalDiagram::new(e), true))
}

/// Nonzero entries and no islet; `strict` also forbids `|m_i| = 1` after a sign change.
pub fn is_simple_candidate(d: &TrigonalDiagram, strict: bool) -> bool {
    if d.entries.contains(&0) || !islets(d).is_empty() {
        return false;
    }
    !strict || d.entries.windows(2).all(|w| w[1].abs() != 1 || w[0] * w[1] > 0)
}

/// Mirror-inclusive catalog lookup of the diagram's fraction.
pub fn identify_knot<'a>(d: &TrigonalDiagram, catalog: &'a Catalog) -> Option<&'a KnotRecord> {
    let f = d.fraction().ok()?;
    catalog.lookup(&f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[i64]) -> TrigonalDiagram {
        TrigonalDiagram::new(v.to_vec())
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(complexity(&d(&[2, 3])), 7);
        assert_eq!(complexity(&d(&[3, 0, -1, -2])), 10);
        assert_eq!(complexity(&d(&[0])), 1);
    }

    #[test]
    fn islet_examples() {
        assert_eq!(islets(&d(&[2, -1, 3])), vec![2]);
        assert!(islets(&d(&[2, 1, 3])).is_empty());
        assert!(islets(&d(&[3, 1, 2, -3])).is_empty());
    }

    #[test]
    fn crossing_number_examples() {
        assert_eq!(crossing_number(&d(&[3, -4])).unwrap(), 6);
        assert_eq!(crossing_number(&d(&[2, 1, 2, -2, 3])).unwrap(), 8);
        for m in 1..9 {
            assert_eq!(crossing_number(&d(&[m])).unwrap(), m as u64);
        }
        assert!(matches!(crossing_number(&d(&[2, -1, 3])), Err(Error::Islet(_))));
        assert!(matches!(crossing_number(&d(&[2, 0, 3])), Err(Error::ZeroEntry(_))));
    }

    #[test]
    fn gauss_examples() {
        assert_eq!(gauss_sign_changes(&d(&[2, 2])).unwrap(), 7);
        assert_eq!(gauss_sign_changes(&d(&[3])).unwrap(), 5);
        assert_eq!(gauss_sign_changes(&d(&[3, -4])).unwrap(), 12);
    }

    #[test]
    fn lagrange_examples() {
        let out = lagrange_step(&d(&[2, -3]), 1, 1).unwrap();
        assert_eq!(out, d(&[1, 1, 2]));
        assert_eq!(out.fraction().unwrap(), d(&[2, -3]).fraction().unwrap());
        let out = lagrange_step(&d(&[1, -1]), 1, -1).unwrap();
        assert_eq!(out, d(&[2, -1, 2]));
        assert_eq!(out.fraction().unwrap(), d(&[1, -1]).fraction().unwrap());
        assert!(lagrange_step(&d(&[3]), 1, 1).is_err());
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(conway_normal_form(&d(&[3, -4])).unwrap(), (d(&[2, 1, 3]), false));
        assert_eq!(conway_normal_form(&d(&[2, 2])).unwrap(), (d(&[2, 2]), false));
        let (nf, _) = conway_normal_form(&d(&[0, -1, -3])).unwrap();
        assert!(nf.entries.iter().all(|&m| m > 0));
        assert_eq!(conway_normal_form(&d(&[1, 2, 2])).unwrap(), (d(&[2, 3]), false));
        // 7/6: both 6 and 6^{-1} = 6 exceed 7/2
        assert_eq!(conway_normal_form(&d(&[1, 6])).unwrap(), (d(&[7]), true));
    }

    #[test]
    fn simple_candidate_examples() {
        assert!(is_simple_candidate(&d(&[2, 1, 3]), false));
        assert!(is_simple_candidate(&d(&[2, 1, 3]), true));
        assert!(!is_simple_candidate(&d(&[2, -1, 3]), false));
        assert!(!is_simple_candidate(&d(&[3, -1, 2]), false));
        assert!(is_simple_candidate(&d(&[1, 2]), true));
        assert!(is_simple_candidate(&d(&[3, -1, -2]), false));
        assert!(!is_simple_candidate(&d(&[3, -1, -2]), true));
    }

    #[test]
    fn identify_examples() {
        let cat = Catalog::builtin();
        assert_eq!(identify_knot(&d(&[2, 1, 3]), &cat).unwrap().name, "6_2");
        assert_eq!(identify_knot(&d(&[7]), &cat).unwrap().name, "7_1");
        assert!(identify_knot(&d(&[1, 1]), &cat).is_none());
    }

    #[test]
    fn parse_roundtrip() {
        let x = TrigonalDiagram::parse("2,1,-3").unwrap();
        assert_eq!(x, d(&[2, 1, -3]));
        assert_eq!(TrigonalDiagram::parse(&x.to_string()).unwrap(), x);
    }
}
