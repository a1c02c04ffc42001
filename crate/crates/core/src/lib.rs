//! Exact computations around the spin symmetric group algebra `A_k`, the
//! Sergeev algebra `B_k`, Schur Q-functions and the duality between `A_k`
//! and the queer Lie superalgebra `q(n)` on `(C^{n|n})^{(x) k}`.
//!
//! All scalars live in `Q(i, sqrt 2)` and every check is an exact equality.

pub mod duality;
pub mod error;
pub mod exec;
pub mod field;
pub mod linalg;
pub mod partitions;
pub mod qfunctions;
pub mod report;
pub mod sergeev;
pub mod suite;

pub use error::{Error, Result};
pub use exec::Strategy;
pub use field::{FieldElem, Rat};
pub use partitions::Partition;
