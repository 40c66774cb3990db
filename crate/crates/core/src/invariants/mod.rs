//! Closed-form invariants of a nodal curve computed from its dual graph.

mod numeric;
mod series;
mod severi;
mod stability;

pub use numeric::{numeric_invariants, NumericInvariants};
pub use series::{
    connected_disconnected_sides, hilbert_series, hilbert_vertex_class, ic_stalk_product, ic_weight_poly,
    jacobian_class, jacobian_weight_poly, perverse_series, perverse_vertex_class, subsum_table, JacobianClass,
};
pub use severi::{nnbar_sides, severi_oracle, severi_vectors, SeveriVectors};
pub use stability::{chi, is_general_polarization, stable_multidegrees, Multidegree, Polarization};
