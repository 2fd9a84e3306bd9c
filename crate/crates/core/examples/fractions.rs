//! Continued fractions, equivalence and catalog lookup.

use lexiknot::arith::{cf_eval, cf_expand_positive, fraction_equivalent, Catalog, Fraction};
use lexiknot::diagram::{conway_normal_form, crossing_number, TrigonalDiagram};

fn main() -> lexiknot::Result<()> {
    let cat = Catalog::builtin();
    for seq in [vec![2, 2], vec![2, 1, 3], vec![3, -4], vec![2, 1, 1, 2]] {
        let f = cf_eval(&seq)?;
        let name = cat.lookup(&f).map(|k| k.name.as_str()).unwrap_or("-");
        let d = TrigonalDiagram::new(seq);
        let (nf, mirror) = conway_normal_form(&d)?;
        println!("{d:<16} = {f:<6} {name:<5} normal form {nf} (mirror {mirror}), N = {}", crossing_number(&nf)?);
    }
    let a = Fraction::new(11, 3);
    let b = cf_eval(&[2, 1, 3])?;
    println!("11/3 ~ {b}: {}", fraction_equivalent(&a, &b, false));
    println!("positive expansion of 29/8: {:?}", cf_expand_positive(&Fraction::new(29, 8))?);
    Ok(())
}
