//! Schubert fractions, continued fractions and the knot catalog.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::enumerate::DegreeTriple;
use crate::{Error, Result};

/// A two-bridge fraction `alpha/beta`.
///
/// `beta` is kept reduced modulo `alpha` in `[1, alpha - 1]` once `alpha >= 2`,
/// so `alpha/beta` and `alpha/(beta - alpha)` are the same value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    alpha: BigInt,
    beta: BigInt,
}

impl Fraction {
    /// Normalizes `p/q`: positive `alpha`, reduced by the gcd, `beta` taken mod `alpha`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Fraction {
        let (mut p, mut q) = (p.into(), q.into());
        if p.is_negative() || (p.is_zero() && q.is_negative()) {
            p = -p;
            q = -q;
        }
        let g = p.gcd(&q);
        if !g.is_zero() && !g.is_one() {
            p /= &g;
            q /= &g;
        }
        if p > BigInt::one() {
            q = q.mod_floor(&p);
        } else if p.is_one() {
            q = BigInt::zero();
        }
        Fraction { alpha: p, beta: q }
    }

    pub fn alpha(&self) -> &BigInt {
        &self.alpha
    }

    pub fn beta(&self) -> &BigInt {
        &self.beta
    }

    /// Odd `alpha` means a knot, even a two-component link.
    pub fn is_knot(&self) -> bool {
        self.alpha.is_odd()
    }

    pub fn parse(s: &str) -> Result<Fraction> {
        let err = || Error::Parse { line: 0, msg: format!("bad fraction {s:?}, expected A/B") };
        let (a, b) = s.trim().split_once('/').ok_or_else(err)?;
        let a: BigInt = a.trim().parse().map_err(|_| err())?;
        let b: BigInt = b.trim().parse().map_err(|_| err())?;
        Ok(Fraction::new(a, b))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.alpha, self.beta)
    }
}

/// Convergents `(p_k, q_k)` of `[m_1, ..., m_k]`, unnormalized.
///
/// Uses the matrix recurrence, so zero entries are fine.
pub fn convergents(seq: &[i64]) -> Vec<(BigInt, BigInt)> {
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut out = Vec::with_capacity(seq.len());
    for &m in seq {
        let m = BigInt::from(m);
        let p2 = &m * &p1 + &p0;
        let q2 = &m * &q1 + &q0;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        out.push((p1.clone(), q1.clone()));
    }
    out
}

/// Evaluates `m_1 + 1/(m_2 + ... + 1/m_k)`.
pub fn cf_eval(seq: &[i64]) -> Result<Fraction> {
    let (p, q) = convergents(seq).pop().ok_or(Error::EmptySequence)?;
    Ok(Fraction::new(p, q))
}

/// All-positive expansion of `alpha/beta`, last entry at least 2 when the length exceeds 1.
pub fn cf_expand_positive(f: &Fraction) -> Result<Vec<i64>> {
    if f.alpha <= BigInt::one() {
        return Err(Error::Degenerate(f.to_string()));
    }
    let (mut a, mut b) = (f.alpha.clone(), f.beta.clone());
    let mut out = Vec::new();
    while !b.is_zero() {
        let (q, r) = a.div_mod_floor(&b);
        out.push(q.to_i64().expect("partial quotient fits in i64"));
        a = std::mem::replace(&mut b, r);
    }
    Ok(out)
}

fn mod_inverse(b: &BigInt, a: &BigInt) -> Option<BigInt> {
    let e = b.extended_gcd(a);
    e.gcd.is_one().then(|| e.x.mod_floor(a))
}

/// Two-bridge equivalence of fractions; `include_mirror` also accepts `-beta^{+-1}`.
pub fn fraction_equivalent(f1: &Fraction, f2: &Fraction, include_mirror: bool) -> bool {
    if f1.alpha != f2.alpha {
        return false;
    }
    let a = &f1.alpha;
    if *a <= BigInt::one() {
        return true;
    }
    if f1.beta == f2.beta {
        return true;
    }
    let Some(inv) = mod_inverse(&f1.beta, a) else {
        return false;
    };
    let mut cands = vec![f1.beta.clone(), inv];
    if include_mirror {
        let neg: Vec<BigInt> = cands.iter().map(|c| (-c).mod_floor(a)).collect();
        cands.extend(neg);
    }
    cands.contains(&f2.beta)
}

/// Lexicographic degree as printed in the table, `c` possibly a range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexDegree {
    pub b: u32,
    pub c_lo: u32,
    pub c_hi: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub fraction: Fraction,
    pub crossing_number: u32,
    pub expected_degc: Option<DegreeTriple>,
    pub expected_lex: Option<LexDegree>,
}

#[derive(Debug, Deserialize, Serialize)]
pub(crate) struct KnotRow {
    pub name: String,
    pub alpha: u64,
    pub beta: i64,
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(rename = "degC_b")]
    pub degc_b: Option<u32>,
    #[serde(rename = "degC_c")]
    pub degc_c: Option<u32>,
    pub lex_b: Option<u32>,
    pub lex_c_lo: Option<u32>,
    pub lex_c_hi: Option<u32>,
}

impl From<KnotRow> for KnotRecord {
    fn from(r: KnotRow) -> Self {
        let expected_degc = match (r.degc_b, r.degc_c) {
            (Some(b), Some(c)) => Some(DegreeTriple { a: 3, b, c }),
            _ => None,
        };
        let expected_lex = match (r.lex_b, r.lex_c_lo, r.lex_c_hi) {
            (Some(b), Some(lo), hi) => Some(LexDegree { b, c_lo: lo, c_hi: hi.unwrap_or(lo) }),
            _ => None,
        };
        KnotRecord {
            name: r.name,
            fraction: Fraction::new(r.alpha, r.beta),
            crossing_number: r.n,
            expected_degc,
            expected_lex,
        }
    }
}

pub const BUILTIN_KNOTS: &str = include_str!("../data/knots.csv");

/// The knot catalog, in file order.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub records: Vec<KnotRecord>,
}

impl Catalog {
    pub fn builtin() -> Catalog {
        Catalog::from_csv(BUILTIN_KNOTS).expect("shipped knots.csv parses")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Catalog> {
        Catalog::from_csv(&std::fs::read_to_string(path)?)
    }

    pub fn from_csv(text: &str) -> Result<Catalog> {
        Ok(Catalog { records: read_knot_rows(text)?.into_iter().map(KnotRecord::from).collect() })
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    /// Mirror-inclusive lookup.
    pub fn lookup(&self, f: &Fraction) -> Option<&KnotRecord> {
        self.records.iter().find(|r| fraction_equivalent(&r.fraction, f, true))
    }
}

pub(crate) fn read_knot_rows(text: &str) -> Result<Vec<KnotRow>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, rec) in rdr.deserialize::<KnotRow>().enumerate() {
        rows.push(rec.map_err(|e| Error::Parse { line: i + 2, msg: e.to_string() })?);
    }
    Ok(rows)
}

/// Looks `f` up in the builtin catalog.
pub fn catalog_lookup(f: &Fraction) -> Option<KnotRecord> {
    Catalog::builtin().lookup(f).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(a: i64, b: i64) -> Fraction {
        Fraction::new(a, b)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(cf_eval(&[2, 2]).unwrap(), fr(5, 2));
        assert_eq!(cf_eval(&[2, 1, 1, 2]).unwrap(), fr(13, 5));
        assert_eq!(cf_eval(&[2, 1, 3]).unwrap(), fr(11, 4));
        for m in -6..=6 {
            assert_eq!(cf_eval(&[m]).unwrap(), fr(m, 1));
        }
        assert!(matches!(cf_eval(&[]), Err(Error::EmptySequence)));
    }

    #[test]
    fn zeros_are_safe() {
        // [1, 0, 2] = 1 + 1/(0 + 1/2) = 3
        assert_eq!(cf_eval(&[1, 0, 2]).unwrap(), fr(3, 1));
        assert_eq!(cf_eval(&[0]).unwrap().alpha(), &BigInt::zero());
    }

    #[test]
    fn expand_examples() {
        assert_eq!(cf_expand_positive(&fr(7, 2)).unwrap(), vec![3, 2]);
        assert_eq!(cf_expand_positive(&fr(15, 4)).unwrap(), vec![3, 1, 3]);
        assert_eq!(cf_expand_positive(&fr(3, 1)).unwrap(), vec![3]);
        assert!(matches!(cf_expand_positive(&fr(1, 0)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn equivalence_examples() {
        assert!(fraction_equivalent(&fr(5, 2), &fr(5, 3), false));
        assert!(fraction_equivalent(&fr(11, 4), &fr(11, 3), false));
        assert!(!fraction_equivalent(&fr(7, 2), &fr(7, 3), false));
        assert!(fraction_equivalent(&fr(7, 2), &fr(7, 3), true));
        assert!(!fraction_equivalent(&fr(7, 2), &fr(9, 2), true));
    }

    #[test]
    fn normalization() {
        assert_eq!(fr(-7, 3), fr(7, -3));
        assert_eq!(fr(7, -3).beta(), &BigInt::from(4));
        assert_eq!(fr(14, 4), fr(7, 2));
        assert!(fr(7, 2).is_knot());
        assert!(!fr(4, 1).is_knot());
    }

    #[test]
    fn lookup_examples() {
        assert_eq!(catalog_lookup(&fr(17, 7)).unwrap().name, "7_5");
        assert_eq!(catalog_lookup(&fr(31, 12)).unwrap().name, "8_14");
        assert!(catalog_lookup(&fr(4, 1)).is_none());
    }

    #[test]
    fn catalog_shape() {
        let c = Catalog::builtin();
        assert_eq!(c.records.len(), 26);
        let r = c.get("8_13").unwrap();
        assert_eq!(r.expected_lex, Some(LexDegree { b: 10, c_lo: 11, c_hi: 14 }));
    }

    #[test]
    fn parse_fraction() {
        assert_eq!(Fraction::parse(" 11/3 ").unwrap(), fr(11, 3));
        assert!(Fraction::parse("11").is_err());
    }
}
