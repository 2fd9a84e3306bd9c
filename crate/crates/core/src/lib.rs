//! Lexicographic degree bounds for two-bridge knots.
//!
//! The crate is split along the pipeline:
//!
//! - [`arith`]: Schubert fractions, continued fractions and the knot catalog.
//! - [`diagram`]: signed trigonal diagrams `D(m_1, ..., m_k)`.
//! - [`enumerate`]: simple diagrams, `m_C` and the Chebyshev degree.
//! - [`planereduce`]: plane words, the reduction `R` and degree verdicts.
//! - [`curvelab`]: exact computations on trigonal polynomial curves.
//! - [`report`]: the full table, diffs and serialization.
//!
//! ```
//! use lexiknot::arith::Catalog;
//! use lexiknot::planereduce::{degree_verdict, Bounds};
//!
//! let cat = Catalog::builtin();
//! let k = cat.get("6_2").unwrap();
//! let rep = degree_verdict(k, &Bounds::builtin(), &Default::default()).unwrap();
//! assert_eq!((rep.b_lower, rep.c_lower, rep.c_upper), (7, 11, 11));
//! ```

pub mod arith;
pub mod curvelab;
pub mod diagram;
pub mod enumerate;
pub mod planereduce;
pub mod report;

mod error;

pub use error::{Error, Result};
