//! The graded tensor space `W = (C^{n|n})^{(x) k}` with commuting actions of
//! `q(n)` and `B_k`, and the exact verification of their duality.

pub mod actions;
pub mod solve;
pub mod space;
pub mod verify;

pub use actions::{act_bk, diag_action, psi_gens, theta_gens, PsiRep, QnBasis};
pub use solve::{closure, supercentralizer, trace_on, zeta_eigenspaces, Subspace};
pub use space::{EndoMatrix, TensorSpace};
pub use verify::{
    default_points, multiplicity_accounting, run_duality, schur_identity_check, verify_duality,
};
