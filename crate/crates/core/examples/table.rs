//! Full degree table in Markdown, checked against the shipped expectations.

use lexiknot::arith::Catalog;
use lexiknot::planereduce::{Bounds, VerdictOptions};
use lexiknot::report::{build_table, diff_expected, emit, Format};

fn main() -> lexiknot::Result<()> {
    let cat = Catalog::builtin();
    let rows = build_table(&[], &cat, &Bounds::builtin(), &VerdictOptions::default())?;
    print!("{}", emit(&rows, Format::Markdown)?);
    let diffs = diff_expected(&rows, &cat);
    println!("\n{} mismatches", diffs.len());
    for m in diffs {
        println!("  {} {}: expected {} got {}", m.name, m.column, m.expected, m.got);
    }
    Ok(())
}
