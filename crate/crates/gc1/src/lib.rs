//! Exact-arithmetic algebra kernels for an infinite-rank conformal algebra and
//! the structures built on top of it: the λ-bracket on `ℚ[∂,x]` with its three
//! distinguished subalgebras, the Lie algebra of regular differential operators
//! on the punctured line in the `t^k f(D)` presentation together with its
//! anti-involutions and 2-cocycle, infinite banded matrices over `ℚ[u]/(u^{m+1})`
//! with their central extension, q-characters of highest weight modules, and the
//! Schur–Weyl style tensor realizations of the finite-growth modules.
//!
//! Everything is computed over `ℚ` with arbitrary-precision rationals; there is
//! no floating point anywhere on a verification path. All values are immutable
//! after construction and every operation is a pure function, so the whole crate
//! is safe to use from concurrent contexts without locking.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod rat;
pub mod poly;
pub mod series;
pub mod conformal;
pub mod diffops;
pub mod glinf;
pub mod characters;
pub mod schur_weyl;
pub mod sample;
pub mod selftest;

pub use rat::Rat;
