//! Symbolic recomputation of the error terms.
//!
//! Each error term is the degree of a class `Z` on a projective bundle
//! `Y = P(N)` over `X = M̄_{1,m+1}(m) × ∏ⱼ M̄_{0,|Sⱼ|+1}`. The Chow ring of
//! `Y` is `A*(X)[η] / (η^k + s₁η^{k−1} + … + s_k)` with
//! `sᵢ = sᵢ(x₀+x₁, …, x₀+x_k)`. This module carries out that computation
//! literally and compares it with the closed form used by the recursion
//! engine.

pub mod lemmas;
pub mod oracle;
pub mod poly;
pub mod symmetric;

pub use lemmas::{verify_lemma_32, verify_lemma_33, verify_lemma_34};
pub use oracle::{
    closed_form_error, deg_z, degree_on_x, error_contribution, fiber_sign, BlockShape, ChowOracle,
    Variant,
};
pub use poly::{Monomial, SymPoly, Var};
pub use symmetric::{complete_homogeneous, elementary_symmetric, eta_reduce};
