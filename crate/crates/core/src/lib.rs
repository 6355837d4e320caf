//! Exact ψ-class intersection numbers on the moduli spaces of m-stable
//! genus-one curves.
//!
//! The engine evaluates every top-dimensional number ⟨ψ₁^{d₁}⋯ψₙ^{dₙ}⟩^m
//! by the m-stable string, dilaton and reduction recursions, seeded by the
//! initial condition ⟨ψ₁^{m+1}⟩^m = m!/24. All arithmetic is exact.
//!
//! Independent checks live alongside the engine:
//!
//! * [`genus_zero`] pairs the closed multinomial formula for ⟨…⟩₀ with a
//!   string-equation recursion;
//! * [`chow`] recomputes every error term symbolically in the quotient
//!   presentation of the Chow ring of the exceptional divisor, and checks
//!   the combinatorial lemmas behind the closed form;
//! * [`io`] parses τ-notation, renders the reference table and persists a
//!   plain-text result cache.
//!
//! ```
//! use mstable_psi::{Engine, IntersectionSymbol, BigRational};
//!
//! let engine = Engine::new();
//! let sym = IntersectionSymbol::new(&[6, 0, 0, 0, 0, 0], 4).unwrap();
//! assert_eq!(engine.value(&sym).unwrap(), BigRational::from_integer((-5).into()));
//! ```

pub mod chow;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod genus_zero;
pub mod io;
pub mod recursion;
pub mod symbol;
pub mod verify;

pub use error::{Error, Result};
pub use recursion::{Engine, Parity, Strategy};
pub use symbol::{canonicalize, IntersectionSymbol, TauWord};

/// Exact reduced rational with arbitrary-precision numerator and denominator.
pub type BigRational = num_rational::BigRational;
pub use num_bigint::BigInt;
