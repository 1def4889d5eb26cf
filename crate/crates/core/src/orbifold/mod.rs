//! Orbifold projective lines: the lattice `L`, the graded ring `S`, the quiver with
//! relations of the exceptional collection and the labeled quiver of `A_Y`.

mod ay;
mod exccol;
mod glq;
mod pic;
mod sring;

pub use ay::{build_ay, example_quiver, matrix_presentation, matrix_pretty};
pub use exccol::{
    fullness_defects, hom_vs_sdim_mismatches, verify_exceptional_collection, window, ExceptionalCollectionReport,
    PairDims, WindowObject,
};
pub use glq::{build_glq, kqi_hom_dim, QuiverWithRelations};
pub use pic::{dualizing_element, pic_leq, pic_normal_form, OrbifoldData, PicElement};
pub use sring::{s_dim, s_monomials};

#[cfg(test)]
mod tests;
