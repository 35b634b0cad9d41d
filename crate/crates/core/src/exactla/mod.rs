//! Exact integer linear algebra: Smith and Hermite normal forms, cokernels,
//! saturation and complements of sublattices, finitely generated abelian groups.

mod group;
mod lattice;
mod matrix;
mod snf;

pub use group::{cokernel, projection_kills, Cokernel, FgAbelianGroup};
pub use lattice::{
    complement, coordinates_in_basis, hnf_columns, hnf_rows, is_primitive, is_saturated, primitive,
    saturation,
};
pub use matrix::IntMatrix;
pub use snf::{invariant_factors, invariant_factors_sparse, rank, smith_normal_form, SnfResult};
