//! A rational polynomial knot of degree (3,7,11) identified as 6_2.

use lexiknot::arith::Catalog;
use lexiknot::curvelab::poly::{q, qr};
use lexiknot::curvelab::{add_triple_point, alternating_over, height_polynomial, perturb_auto, verify_embedding, PlaneCurve};

fn main() -> lexiknot::Result<()> {
    let c = add_triple_point(&PlaneCurve::chebyshev(4), &qr(-1, 2), &q(1))?;
    let p = perturb_auto(&c, false, 6)?;
    let over = alternating_over(&p.crossings)?;
    let (z, changes) = height_polynomial(&p.crossings, &over)?;
    let e = verify_embedding(&p.curve.x, &p.curve.y, &z, &Catalog::builtin())?;
    println!("x = {}", p.curve.x);
    println!("y = {}", p.curve.y);
    println!("z = {}", z);
    println!("{changes} sign changes, word {}, diagram {}", e.word, e.diagram);
    println!("knot: {}", e.knot.map(|k| k.name).unwrap_or_else(|| "not in catalog".into()));
    Ok(())
}
