//! Exact coefficient arithmetic: partitions, `q`-polynomials, two-alphabet
//! symmetric-function expressions in the h basis, the e basis and its
//! conversion to h, and truncated `z`-series over those coefficients.

pub mod bisym;
pub mod esym;
pub mod eval;
pub mod partition;
pub mod qpoly;
pub mod series;
