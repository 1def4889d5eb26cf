//! Projective resolutions of simple modules over path algebras localized at a
//! point, checked with polynomial linear algebra over `Q[t]`.
//!
//! After localizing at `p` every label is a multiple of `p`, so a label of
//! multiplicity `k` is `t^k` in the chart centred at `p` and the algebra is
//! defined over `Q[t]`.

mod certify;
mod polymatrix;
mod resolution;
pub mod truncation;

pub use certify::{certification_points, certify_hd, CertificationReport, PdEntry};
pub use polymatrix::{cokernel_dim, column_echelon, columns_in_image, membership, poly_kernel, ColumnEchelon, PolyMatrix};
pub use resolution::{
    build_simple_resolution, check_exactness, pd_simple, resolve, FreeComplex, ResolutionReport, Strand, Summand,
};
