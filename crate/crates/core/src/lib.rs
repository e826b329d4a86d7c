//! Exact symbolic computation in free Zinbiel superalgebras and in
//! finite-dimensional Tortkara superalgebras over the rationals.

pub mod free;
pub mod graded;
pub mod linalg;
pub mod poly;
pub mod rota_baxter;
pub mod speciality;
pub mod superalgebra;
