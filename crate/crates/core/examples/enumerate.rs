//! Simple diagrams and Chebyshev degrees for the catalog.

use lexiknot::arith::Catalog;
use lexiknot::enumerate::{chebyshev_degree, enumerate_simple_diagrams, knot_m_c, Filter};

fn main() -> lexiknot::Result<()> {
    let cat = Catalog::builtin();
    for k in &cat.records {
        let ds = enumerate_simple_diagrams(k, None, Filter::Reduced)?;
        let list: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
        println!("{:<5} m_C = {:<2} deg_C = {}  {}", k.name, knot_m_c(k)?, chebyshev_degree(k)?, list.join(" "));
    }
    Ok(())
}
