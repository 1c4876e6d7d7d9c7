//! The quantum matrix algebra O(M_q).
//!
//! Elements are kept in the ordered monomial basis for the generator order
//! `x11 < x12 < ... < xNN`. Products are normalized by rewriting any
//! adjacent pair `x_kl x_ij` with `x_kl > x_ij` using the defining relations
//! (for `i < k`, `j < l`):
//!
//! ```text
//! x_ij x_il = q x_il x_ij
//! x_ij x_kj = q x_kj x_ij
//! x_il x_kj = x_kj x_il
//! x_ij x_kl - x_kl x_ij = (q - q^-1) x_il x_kj
//! ```

mod element;
mod minors;
mod monomial;

pub use element::{clear_caches, normal_form, MqElement, MultiDegree};
pub(crate) use element::{check_index, check_size, mul_monomials};
pub use minors::{det_q, det_q_pow, quantum_minor, sigma, tau};
pub(crate) use monomial::gen_pos;
pub use monomial::{monomial_basis, monomials_of_degree, Monomial};
