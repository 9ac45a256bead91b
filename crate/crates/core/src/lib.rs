//! Exact computations relating the Schur functions, the stable Specht
//! functions and the modules `M_mu^t`: restriction multiplicities from
//! `GL_t` to `S_t`, their inverse matrix, the stable Specht basis and stable
//! Kronecker coefficients, together with a finite symmetric group character
//! oracle that checks them.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod arith;
pub mod characters;
mod error;
pub mod kronecker;
pub mod linalg;
pub mod partition;
pub mod plethysm;
pub mod symfunc;
pub mod transitions;

pub use arith::{binomial, divisors, factorial, mobius, Rational};
pub use error::{Error, Result};
pub use partition::{part, partitions_of, partitions_up_to, Partition};
pub use symfunc::{hall_inner, lr_coefficient, Basis, SymFunc};
