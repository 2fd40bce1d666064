//! Exact computations with group-graded finite-dimensional algebras.

pub mod groups;
pub mod linalg;
pub mod galg;
pub mod morph;
pub mod universal;
pub mod supportcat;
pub mod grpalg;
pub mod catalog;
pub mod witnesses;
pub mod sampling;
