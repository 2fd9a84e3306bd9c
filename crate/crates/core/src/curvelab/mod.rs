//! Exact arithmetic for trigonal plane curves `(x(t), y(t))` with `deg x = 3`.
//!
//! Crossings are certified with rational interval arithmetic; nothing here relies on floating point.

pub mod curve;
pub mod interval;
pub mod poly;
pub mod roots;
pub mod svg;

pub use curve::{
    add_triple_point, alternating_over, curve_crossings, triple_point_polynomial, gauss_sequence, height_polynomial, nodal_summary, perturb,
    perturb_auto, signed_diagram, verify_embedding, word_from_curve, word_of, Crossing, CrossingSet, Embedding, Fold,
    Letter, Perturbed, PlaneCurve, Side,
};
pub use interval::Iv;
pub use poly::{Poly, Q};
pub use roots::{isolate_real_roots, RealRoot};
