//! Real root isolation by Sturm sequences.

use num_traits::{Signed, Zero};

use super::interval::Iv;
use super::poly::{q, Poly, Q};

/// Sturm chain `p, p', -rem(p, p'), ...`.
pub fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.deriv()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn sign_variations(chain: &[Poly], x: &Q) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for p in chain {
        let s = p.eval(x);
        let s = if s.is_positive() {
            1
        } else if s.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

/// Distinct real roots in `(a, b]`.
pub fn count_roots(chain: &[Poly], a: &Q, b: &Q) -> usize {
    sign_variations(chain, a).saturating_sub(sign_variations(chain, b))
}

/// `1 + max |c_i / c_n|` bounds every root.
pub fn cauchy_bound(p: &Poly) -> Q {
    let l = p.lead().abs();
    let m = p.coeffs().iter().map(|c| c.abs() / &l).max().unwrap_or_else(Q::zero);
    // round up to an integer so bisection points stay dyadic
    (m + q(1)).ceil()
}

/// A real root of a squarefree polynomial; `[lo, hi]` contains no other root.
#[derive(Clone, Debug)]
pub struct RealRoot {
    pub p: Poly,
    pub lo: Q,
    pub hi: Q,
    pub exact: bool,
    pub refinements: u32,
}

impl RealRoot {
    /// Closed interval containing the root.
    pub fn interval(&self) -> Iv {
        Iv::new(self.lo.clone(), self.hi.clone())
    }

    /// Halves the isolating interval.
    pub fn refine(&mut self) {
        self.refinements += 1;
        if self.exact {
            return;
        }
        let mid = (&self.lo + &self.hi) / q(2);
        let pm = self.p.eval(&mid);
        if pm.is_zero() {
            self.lo = mid.clone();
            self.hi = mid;
            self.exact = true;
            return;
        }
        // invariant: p(hi) != 0 and the root is simple
        let ph = self.p.eval(&self.hi);
        if pm.is_positive() == ph.is_positive() {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }
}

/// All real roots of `p` (made squarefree), in increasing order.
pub fn isolate_real_roots(p: &Poly) -> Vec<RealRoot> {
    if p.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let sf = p.squarefree();
    let chain = sturm_chain(&sf);
    let m = cauchy_bound(&sf);
    let mut out = Vec::new();
    let mut stack = vec![(-m.clone(), m)];
    while let Some((a, b)) = stack.pop() {
        match count_roots(&chain, &a, &b) {
            0 => {}
            1 => {
                let exact = sf.eval(&b).is_zero();
                let lo = if exact { b.clone() } else { a };
                let mut r = RealRoot { p: sf.clone(), lo, hi: b, exact, refinements: 0 };
                // the closed interval must not reach a root sitting at the open end
                while !r.exact && sf.eval(&r.lo).is_zero() {
                    r.refine();
                }
                r.refinements = 0;
                out.push(r);
            }
            _ => {
                let mid = (&a + &b) / q(2);
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    out.sort_by(|x, y| x.hi.cmp(&y.hi));
    out
}

#[cfg(test)]
mod tests {
    use super::super::poly::qr;
    use super::*;

    #[test]
    fn chebyshev_roots() {
        for n in 1..9 {
            let r = isolate_real_roots(&Poly::chebyshev(n));
            assert_eq!(r.len(), n);
        }
    }

    #[test]
    fn exact_and_refined() {
        // (t - 1/2)(t^2 - 2)
        let p = &Poly::new(vec![qr(-1, 2), q(1)]) * &Poly::from_ints(&[-2, 0, 1]);
        let mut r = isolate_real_roots(&p);
        assert_eq!(r.len(), 3);
        for _ in 0..40 {
            r[2].refine();
        }
        let iv = r[2].interval();
        assert!(&iv.lo * &iv.lo <= q(2) && &iv.hi * &iv.hi >= q(2));
        let mut half = r[1].clone();
        while !half.exact && half.refinements < 60 {
            half.refine();
        }
        assert!(half.interval().lo <= qr(1, 2) && qr(1, 2) <= half.interval().hi);
    }

    #[test]
    fn multiple_roots_counted_once() {
        let p = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[-1, 1]);
        assert_eq!(isolate_real_roots(&p).len(), 1);
        assert!(isolate_real_roots(&Poly::from_ints(&[1, 0, 1])).is_empty());
    }
}
