//! Homology of dual graphs and the operators `N_e` acting on it.

mod chain;
pub mod cks;
mod equivariant;
mod lemmas;
mod space;
pub(crate) mod wedge;

pub use chain::{boundary_matrix, build_homology, exactness_ranks, ForestBasis, Homology};
pub use cks::{cks_stalk_class, cks_table, combined_space, image_ni, operator_n, wedge_operator, ImageSpace};
pub use space::{GradedSpace, LinOp};
pub use equivariant::{equivariant_trace, GraphAutomorphism};
pub use lemmas::{lmain_defect, lmain_subspaces, n_property_failures, setc_mismatches, vanishing_excess};
