//! Reduction traces for plane words, with the lower bound on b.

use lexiknot::planereduce::{b_lower_bound, reduction_search, Bounds, PlaneWord, Step, DEFAULT_DEPTH};

fn main() -> lexiknot::Result<()> {
    let bounds = Bounds::builtin();
    let words = std::env::args().skip(1).collect::<Vec<_>>();
    let words = if words.is_empty() { vec!["2,1,3".into(), "3,1,3".into(), "2,2,2,2".into(), "2,3,3".into()] } else { words };
    for text in words {
        let w = PlaneWord::parse(&text)?;
        let t = reduction_search(&w, &bounds, DEFAULT_DEPTH);
        println!("{w}: base {} + {}", t.base, t.cost);
        for s in &t.steps {
            match s {
                Step::Identity { to } => println!("    ~ {to}"),
                Step::R { at, to } => println!("    R{at} -> {to}"),
            }
        }
        let lb = b_lower_bound(&w, &bounds);
        println!("    b >= {} {:?}", lb.value, lb.provenance());
    }
    Ok(())
}
