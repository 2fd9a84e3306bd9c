use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::interval::{eval_iv, simplest_between, Iv};
use super::poly::{q, Poly, Q};
use super::roots::{isolate_real_roots, RealRoot};
use crate::arith::{Catalog, KnotRecord};
use crate::diagram::TrigonalDiagram;
use crate::planereduce::PlaneWord;
use crate::{Error, Result};

/// Refinement cap; a comparison still undecided after this many bisections is treated as an equality.
pub const REFINE_CAP: u32 = 160;

/// A trigonal plane curve `(x(t), y(t))` with `deg x = 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    pub x: Poly,
    pub y: Poly,
}

impl PlaneCurve {
    pub fn new(x: Poly, y: Poly) -> Result<PlaneCurve> {
        if x.degree() != Some(3) {
            return Err(Error::Precondition(format!("x must be cubic, got degree {:?}", x.degree())));
        }
        if y.degree().unwrap_or(0) < 2 {
            return Err(Error::Precondition("y must have degree at least 2".into()));
        }
        Ok(PlaneCurve { x, y })
    }

    /// `(T_3, T_b)`.
    pub fn chebyshev(b: usize) -> PlaneCurve {
        PlaneCurve { x: Poly::chebyshev(3), y: Poly::chebyshev(b) }
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.x.degree().unwrap_or(0), self.y.degree().unwrap_or(0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    /// The two lower strands cross.
    #[serde(rename = "1")]
    Sigma1,
    /// The two upper strands cross.
    #[serde(rename = "2")]
    Sigma2,
}

impl Letter {
    pub fn other(self) -> Letter {
        match self {
            Letter::Sigma1 => Letter::Sigma2,
            Letter::Sigma2 => Letter::Sigma1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::Sigma1 => '1',
            Letter::Sigma2 => '2',
        }
    }
}

/// The smaller (`T`) or larger (`S`) parameter of a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    T,
    S,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::T => Side::S,
            Side::S => Side::T,
        }
    }
}

/// Shared data for one curve: `v(u)`, `u^2 - 4v(u)`, and the divided difference of `y`.
struct Ctx {
    x: Poly,
    y: Poly,
    dx: Poly,
    dy: Poly,
    disc: Poly,
    r: Poly,
    third_shift: Q,
}

impl Ctx {
    fn new(c: &PlaneCurve) -> Result<Ctx> {
        let a = c.x.coeff(3);
        let b = c.x.coeff(2);
        let cc = c.x.coeff(1);
        // x(t) = x(s), t != s  <=>  a(u^2 - v) + b u + c = 0
        let v = Poly::new(vec![&cc / &a, &b / &a, Q::one()]);
        let u = Poly::t();
        let disc = &(&u * &u) - &v.scale(&q(4));
        // h_j = u h_{j-1} - v h_{j-2}; (y(t) - y(s)) / (t - s) = sum y_k h_{k-1}
        let mut h = vec![Poly::from_ints(&[1])];
        let dy = c.y.degree().unwrap_or(0);
        for j in 1..dy {
            let prev2 = if j >= 2 { h[j - 2].clone() } else { Poly::zero() };
            let next = &(&u * &h[j - 1]) - &(&v * &prev2);
            h.push(next);
        }
        let mut r = Poly::zero();
        for k in 1..=dy {
            r = &r + &h[k - 1].scale(&c.y.coeff(k));
        }
        if r.is_zero() {
            return Err(Error::Precondition("y is a function of x; the curve is not injective".into()));
        }
        Ok(Ctx {
            x: c.x.clone(),
            y: c.y.clone(),
            dx: c.x.deriv(),
            dy: c.y.deriv(),
            disc,
            r,
            third_shift: -(&b / &a),
        })
    }

    fn bits(root: &RealRoot) -> u32 {
        48 + 2 * root.refinements
    }

    /// Intervals for `t < s` at the current precision of `u`.
    fn params(&self, root: &RealRoot) -> Option<(Iv, Iv)> {
        let u = root.interval();
        let d = eval_iv(&self.disc, &u);
        if !d.lo.is_positive() {
            return None;
        }
        let bits = Self::bits(root);
        let sq = d.sqrt(bits)?;
        let half = Q::new(1.into(), 2.into());
        let t = u.sub(&sq).scale(&half).round_out(bits);
        let s = u.add(&sq).scale(&half).round_out(bits);
        if t.hi >= s.lo {
            return None;
        }
        Some((t, s))
    }

    /// Parameter of the third preimage of the crossing's `x`.
    fn third(&self, root: &RealRoot) -> Iv {
        root.interval().neg().add_q(&self.third_shift)
    }
}

#[derive(Clone, Debug)]
pub struct Crossing {
    pub t: Iv,
    pub s: Iv,
    pub x: Iv,
    pub y: Iv,
    pub letter: Letter,
    pub(crate) root: RealRoot,
}

impl Crossing {
    fn param(&self, side: Side) -> &Iv {
        match side {
            Side::T => &self.t,
            Side::S => &self.s,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Fold {
    pub t: Iv,
    pub x: Iv,
    pub letter: Letter,
}

/// Nodes of a curve in `x` order, with parameters in increasing order.
#[derive(Clone, Debug)]
pub struct CrossingSet {
    pub curve: PlaneCurve,
    pub crossings: Vec<Crossing>,
    /// `(crossing index, side)` sorted by parameter value.
    pub params: Vec<(usize, Side)>,
    pub left_fold: Fold,
    pub right_fold: Fold,
}

impl CrossingSet {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn letters(&self) -> String {
        self.crossings.iter().map(|c| c.letter.as_char()).collect()
    }

    pub fn param(&self, k: usize) -> &Iv {
        let (i, side) = self.params[k];
        self.crossings[i].param(side)
    }
}

fn refine_crossing(ctx: &Ctx, c: &mut Crossing) -> Result<()> {
    c.root.refine();
    fill_crossing(ctx, c)
}

fn fill_crossing(ctx: &Ctx, c: &mut Crossing) -> Result<()> {
    let (t, s) = ctx.params(&c.root).ok_or_else(|| non_nodal("crossing parameters", &c.root.interval()))?;
    c.x = eval_iv(&ctx.x, &t).intersect(&eval_iv(&ctx.x, &s));
    c.y = eval_iv(&ctx.y, &t).intersect(&eval_iv(&ctx.y, &s));
    c.t = t;
    c.s = s;
    Ok(())
}

fn non_nodal(what: &str, iv: &Iv) -> Error {
    let (lo, hi) = (format!("{:.9}", iv.lo_f64()), format!("{:.9}", iv.hi_f64()));
    Error::NonNodal { what: what.into(), lo, hi }
}

impl Iv {
    fn lo_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.lo).unwrap_or(f64::NAN)
    }
    fn hi_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.hi).unwrap_or(f64::NAN)
    }
}

/// Certified nodes, and groups of three crossings sitting on an exact triple point.
struct Analysis {
    ctx: Ctx,
    nodes: Vec<Crossing>,
    triples: Vec<(Iv, Vec<Crossing>)>,
}

/// `x` values where the three preimages share one `y`.
///
/// Writes `y(t) = A(X) + B(X) t + C(X) t^2` modulo `x(t) - X`; triple points are common roots of `B` and `C`.
pub fn triple_point_polynomial(c: &PlaneCurve) -> Poly {
    let a3 = c.x.coeff(3);
    let red = [
        &Poly::t() - &Poly::constant(c.x.coeff(0)),
        Poly::constant(-c.x.coeff(1)),
        Poly::constant(-c.x.coeff(2)),
    ]
    .map(|p| p.scale(&(Q::one() / &a3)));
    let mut pow = [Poly::from_ints(&[1]), Poly::zero(), Poly::zero()];
    let mut acc = [Poly::zero(), Poly::zero(), Poly::zero()];
    for k in 0..=c.y.degree().unwrap_or(0) {
        for i in 0..3 {
            acc[i] = &acc[i] + &pow[i].scale(&c.y.coeff(k));
        }
        let top = pow[2].clone();
        pow = [&top * &red[0], &pow[0] + &(&top * &red[1]), &pow[1] + &(&top * &red[2])];
    }
    if acc[1].is_zero() && acc[2].is_zero() {
        return Poly::zero();
    }
    acc[1].gcd(&acc[2])
}

fn analyze(c: &PlaneCurve) -> Result<Analysis> {
    let ctx = Ctx::new(c)?;
    let tangency = ctx.r.gcd(&ctx.r.deriv());
    for mut g in isolate_real_roots(&tangency) {
        loop {
            match eval_iv(&ctx.disc, &g.interval()).sign() {
                Some(Ordering::Less) => break,
                Some(Ordering::Greater) => return Err(non_nodal("tangency", &g.interval())),
                _ if g.refinements >= REFINE_CAP => return Err(non_nodal("cusp", &g.interval())),
                _ => g.refine(),
            }
        }
    }
    let mut pending = Vec::new();
    for mut root in isolate_real_roots(&ctx.r) {
        let real = loop {
            match eval_iv(&ctx.disc, &root.interval()).sign() {
                Some(Ordering::Greater) => break true,
                Some(Ordering::Less) => break false,
                _ if root.refinements >= REFINE_CAP => return Err(non_nodal("cusp", &root.interval())),
                _ => root.refine(),
            }
        };
        if real {
            let zero = Iv::point(Q::zero());
            let mut cr = Crossing { t: zero.clone(), s: zero.clone(), x: zero.clone(), y: zero, letter: Letter::Sigma1, root };
            fill_crossing(&ctx, &mut cr)?;
            pending.push(cr);
        }
    }
    let mut xis = isolate_real_roots(&triple_point_polynomial(c));
    let mut nodes = Vec::new();
    loop {
        let mut rest = Vec::new();
        for cr in pending {
            let y3 = eval_iv(&ctx.y, &ctx.third(&cr.root));
            match y3.cmp_strict(&cr.y) {
                Some(Ordering::Greater) => nodes.push(Crossing { letter: Letter::Sigma1, ..cr }),
                Some(Ordering::Less) => nodes.push(Crossing { letter: Letter::Sigma2, ..cr }),
                _ => rest.push(cr),
            }
        }
        pending = rest;
        // a crossing on a triple point never decides; every other one eventually does
        let near: Vec<Vec<usize>> = pending
            .iter()
            .map(|cr| (0..xis.len()).filter(|&i| xis[i].interval().cmp_strict(&cr.x).is_none()).collect())
            .collect();
        let settled = near.iter().all(|v| v.len() == 1)
            && (0..xis.len()).all(|i| matches!(near.iter().filter(|v| v.contains(&i)).count(), 0 | 3));
        if settled {
            let mut triples: Vec<(Iv, Vec<Crossing>)> = Vec::new();
            for (i, xi) in xis.iter().enumerate() {
                let group: Vec<Crossing> =
                    pending.iter().zip(&near).filter(|(_, v)| v[0] == i).map(|(c, _)| c.clone()).collect();
                if !group.is_empty() {
                    triples.push((xi.interval(), group));
                }
            }
            return Ok(Analysis { ctx, nodes, triples });
        }
        for cr in pending.iter_mut() {
            if cr.root.refinements >= REFINE_CAP {
                return Err(non_nodal("unresolved crossing", &cr.x));
            }
            refine_crossing(&ctx, cr)?;
        }
        for xi in xis.iter_mut() {
            xi.refine();
        }
    }
}

/// Refines until every pair of keyed intervals is disjoint.
fn separate<F>(ctx: &Ctx, cs: &mut [Crossing], key: F, what: &str) -> Result<()>
where
    F: Fn(&Crossing) -> Vec<Iv>,
{
    loop {
        let keys: Vec<Vec<Iv>> = cs.iter().map(&key).collect();
        let mut bad = vec![false; cs.len()];
        let mut any = false;
        for i in 0..cs.len() {
            for j in i..cs.len() {
                for (a, ka) in keys[i].iter().enumerate() {
                    for (b, kb) in keys[j].iter().enumerate() {
                        if (i, a) >= (j, b) {
                            continue;
                        }
                        if ka.cmp_strict(kb).is_none() {
                            bad[i] = true;
                            bad[j] = true;
                            any = true;
                        }
                    }
                }
            }
        }
        if !any {
            return Ok(());
        }
        for (i, c) in cs.iter_mut().enumerate() {
            if bad[i] {
                if c.root.refinements >= REFINE_CAP {
                    return Err(non_nodal(what, &c.x));
                }
                refine_crossing(ctx, c)?;
            }
        }
    }
}

fn folds(ctx: &Ctx) -> Result<(Fold, Fold)> {
    let a = ctx.x.coeff(3);
    let b = ctx.x.coeff(2);
    let c = ctx.x.coeff(1);
    // x'(t) = 3a t^2 + 2b t + c
    let disc = &b * &b * q(4) - &a * &c * q(12);
    if !disc.is_positive() {
        return Err(Error::Precondition("x has no two real critical points".into()));
    }
    let mut bits = 48;
    loop {
        let sq = Iv::point(disc.clone()).sqrt(bits).expect("positive");
        let den = Q::one() / (&a * q(6));
        let base = -&b * q(2);
        let t1 = sq.neg().add_q(&base).scale(&den);
        let t2 = sq.add_q(&base).scale(&den);
        let mut out = Vec::new();
        for t in [t1, t2] {
            let x = eval_iv(&ctx.x, &t);
            let third = t.scale(&q(-2)).add_q(&ctx.third_shift);
            let letter = match eval_iv(&ctx.y, &third).cmp_strict(&eval_iv(&ctx.y, &t)) {
                Some(Ordering::Greater) => Some(Letter::Sigma1),
                Some(Ordering::Less) => Some(Letter::Sigma2),
                _ => None,
            };
            out.push((t, x, letter));
        }
        let order = out[0].1.cmp_strict(&out[1].1);
        if let (Some(l0), Some(l1), Some(ord)) = (out[0].2, out[1].2, order) {
            let mut f: Vec<Fold> = out.into_iter().zip([l0, l1]).map(|((t, x, _), letter)| Fold { t, x, letter }).collect();
            if ord == Ordering::Greater {
                f.swap(0, 1);
            }
            let right = f.pop().unwrap();
            let left = f.pop().unwrap();
            return Ok((left, right));
        }
        if bits > 48 + 2 * REFINE_CAP {
            return Err(non_nodal("fold", &out[0].1));
        }
        bits += 16;
    }
}

/// Certified nodes of `c`, sorted by `x`.
pub fn curve_crossings(c: &PlaneCurve) -> Result<CrossingSet> {
    let Analysis { ctx, mut nodes, triples } = analyze(c)?;
    if let Some((x, _)) = triples.first() {
        return Err(non_nodal("triple point", x));
    }
    finish(ctx, c, &mut nodes)
}

fn finish(ctx: Ctx, c: &PlaneCurve, nodes: &mut Vec<Crossing>) -> Result<CrossingSet> {
    separate(&ctx, nodes, |c| vec![c.x.clone()], "coincident x")?;
    separate(&ctx, nodes, |c| vec![c.t.clone(), c.s.clone()], "shared parameter")?;
    nodes.sort_by(|a, b| a.x.cmp_strict(&b.x).expect("separated"));
    let mut params: Vec<(usize, Side)> =
        (0..nodes.len()).flat_map(|i| [(i, Side::T), (i, Side::S)]).collect();
    params.sort_by(|a, b| nodes[a.0].param(a.1).cmp_strict(nodes[b.0].param(b.1)).expect("separated"));
    let (left_fold, right_fold) = folds(&ctx)?;
    Ok(CrossingSet { curve: c.clone(), crossings: std::mem::take(nodes), params, left_fold, right_fold })
}

/// Number of certified nodes and the `x` hulls of triple points.
pub fn nodal_summary(c: &PlaneCurve) -> Result<(usize, Vec<Iv>)> {
    let a = analyze(c)?;
    Ok((a.nodes.len(), a.triples.into_iter().map(|t| t.0).collect()))
}

/// Run lengths relative to the left fold; leading and trailing zeros mark crossings next to a fold.
pub fn word_of(cs: &CrossingSet) -> PlaneWord {
    let mut cur = cs.left_fold.letter.other();
    let mut runs = vec![0u32];
    for c in &cs.crossings {
        if c.letter != cur {
            runs.push(0);
            cur = cur.other();
        }
        *runs.last_mut().unwrap() += 1;
    }
    if cur == cs.right_fold.letter {
        runs.push(0);
    }
    PlaneWord::new(runs)
}

pub fn word_from_curve(c: &PlaneCurve) -> Result<PlaneWord> {
    Ok(word_of(&curve_crossings(c)?))
}

/// `(x, (x - x0)(y + yshift))`: adds a triple point at `(x0, 0)`.
pub fn add_triple_point(c: &PlaneCurve, x0: &Q, yshift: &Q) -> Result<PlaneCurve> {
    let cs = curve_crossings(c)?;
    let px = &c.x - &Poly::constant(x0.clone());
    let pre = isolate_real_roots(&px);
    if pre.len() != 3 {
        return Err(Error::Precondition(format!("x = {x0} meets the curve in {} points", pre.len())));
    }
    let p = Iv::point(x0.clone());
    let inside = cs.left_fold.x.cmp_strict(&p) == Some(Ordering::Less)
        && cs.right_fold.x.cmp_strict(&p) == Some(Ordering::Greater);
    let mut sep = cs.clone();
    let ctx = Ctx::new(c)?;
    for cr in sep.crossings.iter_mut() {
        while cr.x.cmp_strict(&p).is_none() {
            if cr.root.refinements >= REFINE_CAP {
                return Err(Error::Precondition(format!("x0 = {x0} hits a crossing")));
            }
            refine_crossing(&ctx, cr)?;
        }
    }
    if !inside {
        return Err(Error::Precondition(format!("x0 = {x0} is outside the folds")));
    }
    let ys = &c.y + &Poly::constant(yshift.clone());
    if px.gcd(&ys).degree() != Some(0) {
        return Err(Error::Precondition("shifted y vanishes at a preimage of x0".into()));
    }
    PlaneCurve::new(c.x.clone(), &px * &ys)
}

/// Reparametrizes `x` by `t -> t + eps`.
pub fn perturb(c: &PlaneCurve, eps: &Q) -> PlaneCurve {
    PlaneCurve { x: c.x.shift(eps), y: c.y.clone() }
}

#[derive(Clone, Debug)]
pub struct Perturbed {
    pub eps: Q,
    pub curve: PlaneCurve,
    pub crossings: CrossingSet,
    pub word: PlaneWord,
}

/// Halves `|eps|` from `1/16` until two consecutive values give `expected` nodes and the same word.
pub fn perturb_auto(c: &PlaneCurve, negative: bool, expected: usize) -> Result<Perturbed> {
    let mut prev: Option<Perturbed> = None;
    let mut last_count = 0;
    for k in 4..=30u32 {
        let mut eps = Q::new(1.into(), num_bigint::BigInt::from(1u64) << k);
        if negative {
            eps = -eps;
        }
        let pc = perturb(c, &eps);
        let got = curve_crossings(&pc).ok().filter(|cs| {
            last_count = cs.len();
            cs.len() == expected
        });
        match got {
            Some(cs) => {
                let word = word_of(&cs);
                if let Some(p) = prev.take() {
                    if p.word == word {
                        return Ok(p);
                    }
                }
                prev = Some(Perturbed { eps, curve: pc, crossings: cs, word });
            }
            None => prev = None,
        }
    }
    Err(Error::EpsTooLarge { got: last_count, expected })
}

/// Overpass choice making the Gauss sequence alternate along the parameter.
pub fn alternating_over(cs: &CrossingSet) -> Result<Vec<Side>> {
    let mut over = vec![None; cs.len()];
    for (k, &(i, side)) in cs.params.iter().enumerate() {
        if k % 2 == 0 {
            if over[i].is_some_and(|o| o != side) {
                return Err(Error::Precondition("Gauss word violates the parity condition".into()));
            }
            over[i] = Some(side);
        }
    }
    over.into_iter()
        .map(|o| o.ok_or_else(|| Error::Precondition("Gauss word violates the parity condition".into())))
        .collect()
}

/// Gauss sequence `g_k` in parameter order: `+1` at overpasses.
pub fn gauss_sequence(cs: &CrossingSet, over: &[Side]) -> Vec<i8> {
    cs.params.iter().map(|&(i, side)| if over[i] == side { 1 } else { -1 }).collect()
}

pub fn sign_changes(g: &[i8]) -> usize {
    g.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Height polynomial with one root between each pair of consecutive parameters where `g` changes sign.
///
/// Each root is the simplest rational in the middle half of its gap.
pub fn height_polynomial(cs: &CrossingSet, over: &[Side]) -> Result<(Poly, usize)> {
    if over.len() != cs.len() {
        return Err(Error::Precondition("one overpass choice per crossing".into()));
    }
    let g = gauss_sequence(cs, over);
    let mut roots = Vec::new();
    for k in 0..g.len().saturating_sub(1) {
        if g[k] != g[k + 1] {
            let (a, b) = (cs.param(k), cs.param(k + 1));
            let gap = (&b.lo - &a.hi) / q(4);
            roots.push(simplest_between(&(&a.hi + &gap), &(&b.lo - &gap)));
        }
    }
    let deg = roots.len();
    let mut p = Poly::from_ints(&[1]);
    for r in &roots {
        p = &p * &Poly::new(vec![-r.clone(), Q::one()]);
    }
    let lead_sign = if (g.first().copied().unwrap_or(1) > 0) == (deg % 2 == 0) { 1 } else { -1 };
    let p = p.scale(&q(lead_sign));
    // exact check: the sign of p on each parameter interval from the root positions
    for (k, &gk) in g.iter().enumerate() {
        let iv = cs.param(k);
        let mut s = lead_sign;
        for r in &roots {
            if iv.hi < *r {
                s = -s;
            } else if !(iv.lo > *r) {
                return Err(Error::HeightCheck(k));
            }
        }
        if s != gk as i64 {
            return Err(Error::HeightCheck(k));
        }
    }
    Ok((p, deg))
}

/// Result of checking a space curve `(x, y, z)`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub crossings: CrossingSet,
    pub word: PlaneWord,
    /// `+1` when the upward strand passes over.
    pub signs: Vec<i8>,
    pub diagram: TrigonalDiagram,
    pub knot: Option<KnotRecord>,
}

/// Orients every crossing by `z` and identifies the knot.
pub fn verify_embedding(x: &Poly, y: &Poly, z: &Poly, catalog: &Catalog) -> Result<Embedding> {
    let c = PlaneCurve::new(x.clone(), y.clone())?;
    let mut cs = curve_crossings(&c)?;
    let ctx = Ctx::new(&c)?;
    let mut signs = Vec::with_capacity(cs.len());
    for (i, cr) in cs.crossings.iter_mut().enumerate() {
        let t_over = loop {
            let d = eval_iv(z, &cr.t).sub(&eval_iv(z, &cr.s));
            match d.sign() {
                Some(Ordering::Greater) => break true,
                Some(Ordering::Less) => break false,
                _ if cr.root.refinements >= REFINE_CAP => return Err(Error::NotInjective(i)),
                _ => refine_crossing(&ctx, cr)?,
            }
        };
        // the strand with the larger slope dy/dx moves up
        let t_up = loop {
            let st = eval_iv(&ctx.dy, &cr.t).div(&eval_iv(&ctx.dx, &cr.t));
            let ss = eval_iv(&ctx.dy, &cr.s).div(&eval_iv(&ctx.dx, &cr.s));
            match (st, ss) {
                (Some(a), Some(b)) if a.cmp_strict(&b).is_some() => break a.cmp_strict(&b) == Some(Ordering::Greater),
                _ if cr.root.refinements >= REFINE_CAP => return Err(non_nodal("tangent branches", &cr.x)),
                _ => refine_crossing(&ctx, cr)?,
            }
        };
        signs.push(if t_over == t_up { 1 } else { -1 });
    }
    let word = word_of(&cs);
    let diagram = signed_diagram(&cs, &signs);
    let knot = crate::diagram::identify_knot(&diagram, catalog).cloned();
    Ok(Embedding { crossings: cs, word, signs, diagram, knot })
}

/// Signed twist counts per run: `m_i = (-1)^(i+1) * (sum of crossing signs in run i)`.
pub fn signed_diagram(cs: &CrossingSet, signs: &[i8]) -> TrigonalDiagram {
    let mut cur = cs.left_fold.letter.other();
    let mut entries = vec![0i64];
    for (c, &e) in cs.crossings.iter().zip(signs) {
        if c.letter != cur {
            entries.push(0);
            cur = cur.other();
        }
        let i = entries.len() - 1;
        let parity = if i % 2 == 0 { 1 } else { -1 };
        *entries.last_mut().unwrap() += parity * e as i64;
    }
    if cur == cs.right_fold.letter {
        entries.push(0);
    }
    TrigonalDiagram::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvelab::poly::qr;

    fn w(s: &str) -> PlaneWord {
        PlaneWord::parse(s).unwrap()
    }

    #[test]
    fn chebyshev_words() {
        let cs = curve_crossings(&PlaneCurve::chebyshev(4)).unwrap();
        assert_eq!(cs.len(), 3);
        assert_eq!(word_of(&cs), w("1,1,1"));
        let cs = curve_crossings(&PlaneCurve::chebyshev(5)).unwrap();
        assert_eq!(cs.len(), 4);
        assert_eq!(word_of(&cs), w("1,1,1,1"));
    }

    #[test]
    fn base_curves() {
        let c = PlaneCurve::new(Poly::from_ints(&[0, -3, 0, 1]), Poly::from_ints(&[0, 4, 0, -4, 0, 1])).unwrap();
        assert_eq!(word_from_curve(&c).unwrap(), w("0,1,1,0"));
        let c = PlaneCurve::new(Poly::from_ints(&[0, -3, 0, 1]), Poly::from_ints(&[-2, -2, -2, 0, 1])).unwrap();
        let got = word_from_curve(&c).unwrap();
        assert!(crate::planereduce::same_class(&got, &w("0,2")), "{got}");
    }

    #[test]
    fn triple_point_and_perturbation() {
        let c = PlaneCurve::chebyshev(4);
        let q7 = add_triple_point(&c, &qr(-3, 4), &q(1)).unwrap();
        let (nodes, triples) = nodal_summary(&q7).unwrap();
        assert_eq!((nodes, triples.len()), (3, 1));
        assert!(triples[0].lo <= qr(-3, 4) && qr(-3, 4) <= triples[0].hi);
        assert!(curve_crossings(&q7).is_err());

        let half = add_triple_point(&c, &qr(-1, 2), &q(1)).unwrap();
        let p = perturb_auto(&half, false, 6).unwrap();
        assert!(crate::planereduce::same_class(&p.word, &w("2,1,3")), "{}", p.word);
        let p = perturb_auto(&half, true, 6).unwrap();
        assert!(crate::planereduce::same_class(&p.word, &w("2,1,1,2")), "{}", p.word);
    }

    #[test]
    fn trefoil_and_figure_eight() {
        let cat = Catalog::builtin();
        let e = verify_embedding(&Poly::chebyshev(3), &Poly::chebyshev(4), &Poly::chebyshev(5), &cat).unwrap();
        assert_eq!(e.knot.map(|k| k.name), Some("3_1".to_string()), "{}", e.diagram);
        let e = verify_embedding(&Poly::chebyshev(3), &Poly::chebyshev(5), &Poly::chebyshev(7), &cat).unwrap();
        assert_eq!(e.knot.map(|k| k.name), Some("4_1".to_string()), "{}", e.diagram);
        let cs = curve_crossings(&PlaneCurve::chebyshev(4)).unwrap();
        let over = alternating_over(&cs).unwrap();
        let (h, deg) = height_polynomial(&cs, &over).unwrap();
        assert_eq!(h.degree(), Some(deg));
        let e = verify_embedding(&Poly::chebyshev(3), &Poly::chebyshev(4), &h, &cat).unwrap();
        assert!(e.knot.is_some(), "{}", e.diagram);
    }

    #[test]
    fn six_two_witness() {
        let cat = Catalog::builtin();
        let half = add_triple_point(&PlaneCurve::chebyshev(4), &qr(-1, 2), &q(1)).unwrap();
        let p = perturb_auto(&half, false, 6).unwrap();
        let over = alternating_over(&p.crossings).unwrap();
        let (h, deg) = height_polynomial(&p.crossings, &over).unwrap();
        assert_eq!(deg, 11);
        let e = verify_embedding(&p.curve.x, &p.curve.y, &h, &cat).unwrap();
        assert_eq!(e.knot.map(|k| k.name).as_deref(), Some("6_2"));
    }
}
