//! Crossings and words of Chebyshev curves (T_3, T_b).

use lexiknot::curvelab::{curve_crossings, word_of, PlaneCurve};

fn main() -> lexiknot::Result<()> {
    for b in [2, 4, 5, 7, 8, 10, 11] {
        let cs = curve_crossings(&PlaneCurve::chebyshev(b))?;
        let xs: Vec<String> = cs.crossings.iter().map(|c| format!("{:.4}", c.x.mid_f64())).collect();
        println!("(T3,T{b}): {} crossings {} word {}  x = [{}]", cs.len(), cs.letters(), word_of(&cs), xs.join(", "));
    }
    Ok(())
}
