//! The Sergeev algebra `B_k`, the Clifford algebra `C_k` inside it, the
//! image of the spin symmetric group algebra `A_k`, and the module `X_k`.

pub mod bk;
pub mod classes;
pub mod clifford;
pub mod perm;
pub mod presentation;

pub use bk::{bk_generators, bk_mul, BkElem, Generators, Subset};
pub use classes::{gamma_mu, gamma_word, sigma_class, theta_gamma, theta_gammas};
pub use clifford::{xi_product_coeff, xk_build, xk_char, XkModule};
pub use perm::Perm;
pub use presentation::{check_presentation, subalgebra_dim, theta_image_rank, RelationCheck};
