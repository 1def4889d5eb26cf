//! Path algebras of divisor-labeled quivers over the projective line.
//!
//! A labeled quiver `(Q, D)` defines the sheaf of algebras spanned by paths `γ`
//! with coefficients in `O(-D_γ)`, where every simple cycle `ρ` at `v` is
//! identified with `s_ρ · e_v` (`s_ρ` the section cutting out `D_ρ`). When `Q`
//! has transverse cycles the acyclic paths form a basis.

mod algebra;
mod labeled;

pub(crate) use algebra::reduce_path;
pub use algebra::{AlgebraElement, GradedIndex, PathAlgebra, ReductionOrder};
pub use labeled::{contract_labeled, localize_at, LabeledQuiver, LabeledQuiverJson, Localized};
