//! Exact Reshetikhin–Turaev invariants of lens spaces for the quantum groups
//! of the exceptional Lie algebras G2, F4 and E8 at odd roots of unity.
//!
//! Everything here is exact: values live in the cyclotomic field `Q(ζ_N)`
//! ([`CycNum`]) and floating point only appears in [`CycNum::embed`].
//! The crate is `no_std` (with `alloc`); the `std` feature is on by default
//! and `parallel` spreads the lattice transforms over a rayon pool.
//!
//! Module map:
//!
//! * [`rootsys`]: Cartan/Gram data, positive roots, `ρ`, `θ`, Weyl groups.
//! * [`cyclo`]: exact arithmetic in `Q(ζ_N)` plus the integer group ring
//!   `Z[x]/(x^N - 1)` used by the hot loops.
//! * [`lattice`]: the finite quotient `X_N = X/NX` and the alcove `Λ⁺_N`.
//! * [`gauss`]: lattice Gauss sums, brute force and closed form.
//! * [`invariant`]: continued fractions, `Q(μ)`, `Ω`, `z`, the h-recursion,
//!   the lens-space invariants and the linking-matrix sign count.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod cyclo;
mod error;
pub mod gauss;
pub mod invariant;
pub mod lattice;
pub mod ring;
pub mod rootsys;
pub mod verify;

pub use cyclo::{CycNum, RootOfUnitySpec};
pub use error::{Error, Result};
pub use gauss::QuadGaussSpec;
pub use invariant::{ChainLink, HJExpansion, InvariantResult, LensSpec, Strategy};
pub use lattice::{AlcoveSet, Budget, WeightClass};
pub use rootsys::{LieType, RootDatum};
