//! Exact-arithmetic toolkit for generalized bent functions
//! `f: Z_{p^l}^n → Z_{p^k}` in odd characteristic.
//!
//! All spectra, character sums, and decision procedures run over the ring
//! of integers of `Q(ζ_{p^k})` with arbitrary-precision coefficients, so
//! every verdict is an exact integer identity: there is no floating
//! point and no tolerance anywhere. Brute-force oracles (the naive
//! transform, exhaustive difference counting) sit next to the structured
//! routes they validate.
//!
//! * [`cyclotomic`]: canonical power-basis arithmetic in `Z[ζ_{p^k}]`,
//!   Galois action, Gauss sums, and the `γ_c` basis elements.
//! * [`func`]: dense value tables with digit/block decompositions,
//!   component functions, and the generalized Gray map.
//! * [`transform`]: exact Walsh–Hadamard transforms, naive and fast.
//! * [`analysis`]: gbent test, regularity and duals, component
//!   characterizations, `Z_{p^k}`-bentness, plateaued order, vectorial
//!   bentness.
//! * [`rds`]: relative-difference-set verification by counting and by
//!   character sums.
//! * [`constructions`]: finite fields, regular spreads, the spread
//!   construction, bent lifts, quadratic witnesses.
//!
//! The crate is `no_std` (with `alloc`); the companion CLI crate carries
//! all IO and file formats.

#![no_std]

extern crate alloc;

#[cfg(any(feature = "std", test))]
extern crate std;

pub mod analysis;
pub mod constructions;
pub mod cyclotomic;
pub mod func;
pub mod rds;
pub mod transform;

pub use cyclotomic::{CycInt, CycloParams};
pub use func::GbFunc;
pub use transform::Spectrum;
