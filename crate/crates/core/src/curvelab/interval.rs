use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{Poly, Q};

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iv {
    pub lo: Q,
    pub hi: Q,
}

impl Iv {
    pub fn new(lo: Q, hi: Q) -> Iv {
        debug_assert!(lo <= hi);
        Iv { lo, hi }
    }

    pub fn point(x: Q) -> Iv {
        Iv { lo: x.clone(), hi: x }
    }

    pub fn add(&self, o: &Iv) -> Iv {
        Iv { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Iv) -> Iv {
        Iv { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> Iv {
        Iv { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn add_q(&self, k: &Q) -> Iv {
        Iv { lo: &self.lo + k, hi: &self.hi + k }
    }

    pub fn scale(&self, k: &Q) -> Iv {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if a <= b {
            Iv { lo: a, hi: b }
        } else {
            Iv { lo: b, hi: a }
        }
    }

    pub fn mul(&self, o: &Iv) -> Iv {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        Iv { lo, hi }
    }

    /// `None` when the divisor contains zero.
    pub fn div(&self, o: &Iv) -> Option<Iv> {
        if o.contains_zero() {
            return None;
        }
        let inv = Iv { lo: Q::one() / &o.hi, hi: Q::one() / &o.lo };
        Some(self.mul(&inv))
    }

    /// Outer bounds of `sqrt`, with `bits` binary digits; needs `lo >= 0`.
    pub fn sqrt(&self, bits: u32) -> Option<Iv> {
        if self.lo.is_negative() {
            return None;
        }
        Some(Iv { lo: sqrt_bound(&self.lo, bits, false), hi: sqrt_bound(&self.hi, bits, true) })
    }

    /// Widens to the dyadic grid `2^-bits`.
    pub fn round_out(&self, bits: u32) -> Iv {
        let scale = BigInt::one() << bits;
        let lo = (&self.lo * &scale).floor() / &scale;
        let hi = (&self.hi * &scale).ceil() / &scale;
        Iv { lo, hi }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign when decided.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Strict comparison when the intervals are disjoint.
    pub fn cmp_strict(&self, o: &Iv) -> Option<Ordering> {
        if self.hi < o.lo {
            Some(Ordering::Less)
        } else if o.hi < self.lo {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    pub fn hull(&self, o: &Iv) -> Iv {
        Iv { lo: self.lo.clone().min(o.lo.clone()), hi: self.hi.clone().max(o.hi.clone()) }
    }

    pub fn intersect(&self, o: &Iv) -> Iv {
        let lo = self.lo.clone().max(o.lo.clone());
        let hi = self.hi.clone().min(o.hi.clone());
        if lo <= hi {
            Iv { lo, hi }
        } else {
            self.clone()
        }
    }

    pub fn mid(&self) -> Q {
        (&self.lo + &self.hi) / Q::from_integer(BigInt::from(2))
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64().unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }
}

impl fmt::Display for Iv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.lo.to_f64().unwrap_or(f64::NAN);
        let hi = self.hi.to_f64().unwrap_or(f64::NAN);
        write!(f, "[{lo:.9}, {hi:.9}]")
    }
}

fn sqrt_bound(x: &Q, bits: u32, upper: bool) -> Q {
    if x.is_zero() {
        return Q::zero();
    }
    // sqrt(n/d) = sqrt(n d) / d
    let n = x.numer();
    let d = x.denom();
    let scale = BigInt::one() << bits;
    let r = (n * d * &scale * &scale).sqrt();
    let r = if upper { r + 1 } else { r };
    Q::new(r, d * scale)
}

/// Rational with the smallest denominator in the open interval `(lo, hi)`.
pub fn simplest_between(lo: &Q, hi: &Q) -> Q {
    assert!(lo < hi, "empty interval");
    if lo.is_negative() && hi.is_positive() {
        return Q::zero();
    }
    if !hi.is_positive() {
        return -simplest_above(&-hi, Some(&-lo));
    }
    simplest_above(lo, Some(hi))
}

/// Simplest rational in `(lo, hi)` for `lo >= 0`; `None` means no upper end.
fn simplest_above(lo: &Q, hi: Option<&Q>) -> Q {
    let fl = lo.floor();
    let next = &fl + Q::one();
    if hi.is_none_or(|h| next < *h) {
        return next;
    }
    let hi = hi.expect("bounded here");
    let a = Q::one() / (hi - &fl);
    let frac = lo - &fl;
    let b = if frac.is_zero() { None } else { Some(Q::one() / frac) };
    fl + Q::one() / simplest_above(&a, b.as_ref())
}

/// Horner evaluation over an interval.
pub fn eval_iv(p: &Poly, x: &Iv) -> Iv {
    let mut acc = Iv::point(Q::zero());
    for a in p.coeffs().iter().rev() {
        acc = acc.mul(x).add_q(a);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::super::poly::{q, qr};
    use super::*;

    #[test]
    fn sqrt_brackets() {
        let s = Iv::point(q(2)).sqrt(30).unwrap();
        assert!(&s.lo * &s.lo <= q(2) && &s.hi * &s.hi >= q(2));
        assert!(s.width() < qr(1, 1 << 29));
        assert!(Iv::new(q(-1), q(1)).sqrt(10).is_none());
    }

    #[test]
    fn horner_encloses() {
        let p = Poly::from_ints(&[1, -3, 0, 4]);
        let x = Iv::new(qr(1, 3), qr(1, 2));
        let v = eval_iv(&p, &x);
        for k in 0..=6 {
            let t = qr(1, 3) + qr(k, 36);
            let y = p.eval(&t);
            assert!(v.lo <= y && y <= v.hi);
        }
    }

    #[test]
    fn simplest() {
        assert_eq!(simplest_between(&qr(1, 3), &qr(1, 2)), qr(2, 5));
        assert_eq!(simplest_between(&q(-1), &q(1)), q(0));
        assert_eq!(simplest_between(&qr(-7, 4), &qr(-3, 2)), qr(-5, 3));
        assert_eq!(simplest_between(&q(2), &qr(5, 2)), qr(7, 3));
        assert_eq!(simplest_between(&qr(3, 10), &qr(31, 100)), qr(4, 13));
    }

    #[test]
    fn signs() {
        assert_eq!(Iv::new(q(1), q(2)).sign(), Some(Ordering::Greater));
        assert_eq!(Iv::new(q(-1), q(2)).sign(), None);
        assert_eq!(Iv::new(q(1), q(2)).cmp_strict(&Iv::new(q(3), q(4))), Some(Ordering::Less));
    }
}
