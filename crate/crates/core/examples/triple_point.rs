//! A triple point added to (T_3, T_4), then resolved by shifting x.

use lexiknot::curvelab::poly::{q, qr};
use lexiknot::curvelab::{add_triple_point, nodal_summary, perturb_auto, PlaneCurve};
use lexiknot::planereduce::{same_class, PlaneWord};

fn main() -> lexiknot::Result<()> {
    let base = PlaneCurve::chebyshev(4);
    for x0 in [qr(-3, 4), qr(-1, 2)] {
        let c = add_triple_point(&base, &x0, &q(1))?;
        let (nodes, triples) = nodal_summary(&c)?;
        println!("x0 = {x0}: y = {}, {nodes} nodes, {} triple point(s)", c.y, triples.len());
        for neg in [false, true] {
            let p = perturb_auto(&c, neg, 6)?;
            let tags: Vec<&str> = [("2,1,3", "(2,1,3)"), ("2,1,1,2", "(2,1,1,2)")]
                .iter()
                .filter(|(w, _)| same_class(&p.word, &PlaneWord::parse(w).unwrap()))
                .map(|(_, t)| *t)
                .collect();
            println!("    eps = {:<8} word {} class {:?}", p.eps.to_string(), p.word, tags);
        }
    }
    Ok(())
}
