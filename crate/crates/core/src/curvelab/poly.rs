use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Dense univariate polynomial with rational coefficients, ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    c: Vec<Q>,
}

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| q(x)).collect())
    }

    pub fn zero() -> Poly {
        Poly { c: vec![] }
    }

    pub fn constant(a: Q) -> Poly {
        Poly::new(vec![a])
    }

    /// The identity polynomial `t`.
    pub fn t() -> Poly {
        Poly::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.c.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.c.iter().rev().fold(0.0, |acc, a| acc * x + a.to_f64().unwrap_or(f64::NAN))
    }

    pub fn deriv(&self) -> Poly {
        Poly::new(self.c.iter().enumerate().skip(1).map(|(i, a)| a * q(i as i64)).collect())
    }

    pub fn scale(&self, k: &Q) -> Poly {
        Poly::new(self.c.iter().map(|a| a * k).collect())
    }

    /// `self(p(t))`.
    pub fn compose(&self, p: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * p) + &Poly::constant(a.clone());
        }
        acc
    }

    /// `self(t + e)`.
    pub fn shift(&self, e: &Q) -> Poly {
        self.compose(&Poly::new(vec![e.clone(), Q::one()]))
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let mut r = self.c.clone();
        let n = self.c.len();
        if n <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quo = vec![Q::zero(); n - dd];
        let lead = d.lead();
        for i in (0..n - dd).rev() {
            let k = &r[i + dd] / &lead;
            if !k.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[i + j] -= &k * b;
                }
            }
            quo[i] = k;
        }
        r.truncate(dd);
        (Poly::new(quo), Poly::new(r))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead();
        self.scale(&(Q::one() / l))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `self / gcd(self, self')`.
    pub fn squarefree(&self) -> Poly {
        let g = self.gcd(&self.deriv());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }

    /// Chebyshev polynomial `T_n`.
    pub fn chebyshev(n: usize) -> Poly {
        let (mut a, mut b) = (Poly::from_ints(&[1]), Poly::t());
        if n == 0 {
            return a;
        }
        let two_t = Poly::from_ints(&[0, 2]);
        for _ in 1..n {
            let c = &(&two_t * &b) - &a;
            a = std::mem::replace(&mut b, c);
        }
        b
    }

    /// `cheb:n` or `coeffs:c0,c1,...` with `p/q` rationals.
    pub fn parse(s: &str) -> Result<Poly> {
        let bad = |m: String| Error::Parse { line: 0, msg: m };
        let s = s.trim();
        if let Some(n) = s.strip_prefix("cheb:") {
            let n: usize = n.trim().parse().map_err(|e| bad(format!("bad degree {n:?}: {e}")))?;
            return Ok(Poly::chebyshev(n));
        }
        if let Some(list) = s.strip_prefix("coeffs:") {
            let c = list
                .split(',')
                .map(|t| parse_q(t).ok_or_else(|| bad(format!("bad coefficient {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Poly::new(c));
        }
        Err(bad(format!("expected cheb:n or coeffs:..., got {s:?}")))
    }

    /// Inverse of `parse` for the `coeffs:` form.
    pub fn to_text(&self) -> String {
        let body: Vec<String> = if self.c.is_empty() { vec!["0".into()] } else { self.c.iter().map(|a| a.to_string()).collect() };
        format!("coeffs:{}", body.join(","))
    }
}

pub fn parse_q(t: &str) -> Option<Q> {
    let t = t.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n.trim().parse().ok()?, d))
        }
        None => Some(Q::from_integer(t.parse().ok()?)),
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = a.abs();
            let coef = if mag.is_one() && i > 0 { String::new() } else { mag.to_string() };
            let var = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            let sep = if first { "" } else { " " };
            let sp = if first { "" } else { " " };
            write!(f, "{sep}{sign}{sp}{coef}{var}")?;
            first = false;
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.c.iter().map(|a| -a).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_examples() {
        assert_eq!(Poly::chebyshev(2), Poly::from_ints(&[-1, 0, 2]));
        assert_eq!(Poly::chebyshev(3), Poly::from_ints(&[0, -3, 0, 4]));
        assert_eq!(Poly::chebyshev(4), Poly::from_ints(&[1, 0, -8, 0, 8]));
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_ints(&[-1, 0, 1]); // t^2 - 1
        let b = Poly::from_ints(&[1, 1]);
        let (qq, r) = a.div_rem(&b);
        assert_eq!(qq, Poly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let sq = &a * &b; // (t-1)(t+1)^2
        assert_eq!(sq.squarefree(), a);
        assert_eq!(sq.gcd(&sq.deriv()), b);
    }

    #[test]
    fn shift_and_compose() {
        let p = Poly::from_ints(&[0, 0, 1]);
        assert_eq!(p.shift(&q(1)), Poly::from_ints(&[1, 2, 1]));
        assert_eq!(p.compose(&Poly::from_ints(&[0, 2])), Poly::from_ints(&[0, 0, 4]));
    }

    #[test]
    fn parsing() {
        assert_eq!(Poly::parse("cheb:3").unwrap(), Poly::chebyshev(3));
        let p = Poly::parse("coeffs:0,-3/2,0,1").unwrap();
        assert_eq!(p.coeff(1), qr(-3, 2));
        assert_eq!(Poly::parse(&p.to_text()).unwrap(), p);
        assert!(Poly::parse("coeffs:1/0").is_err());
        assert!(Poly::parse("foo").is_err());
        assert_eq!(Poly::from_ints(&[1, -3, 0, 4]).to_string(), "1 - 3t + 4t^3");
    }
}
