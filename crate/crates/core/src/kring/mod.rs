//! Exact coefficient rings: Laurent polynomials in `q` and `L` (or `t`)
//! localized at `1 - q` and `1 - qL` (or `1 - qt^2`), Laurent polynomials in
//! `u = q/(1-q)^2`, and the square-zero vertex ring with its exponential.

mod fraction;
mod laurent;
mod ulaurent;
mod vertex;

pub use fraction::{Localized, RationalQL, WeightPoly};
pub use laurent::Laurent2;
pub use ulaurent::ULaurent;
pub use vertex::{Coefficient, VertexClass};
