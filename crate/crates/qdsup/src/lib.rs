//! Exact symbolic workbench for the quantized enveloping superalgebras of the
//! affine Lie superalgebra `D(1)(2,1;x)`.
//!
//! The crate implements, over an exact coefficient field:
//!
//! - [`coeff`] — rational functions in `q^{1/2}` and `q^{x/2}` extended by the
//!   two square roots that normalize reflection isomorphisms;
//! - [`cartan`] — the five Dynkin diagrams, bilinear forms, parities, and the
//!   Klein four-group of diagram symmetries;
//! - [`weyl`] — the extended Weyl groupoid and its braid semigroup, with
//!   bounded braid-equality search and linear representations;
//! - [`uqd`] — the presented algebras with triangular normal forms, graded
//!   Serre-ideal reduction, super/q-brackets, and the coproduct;
//! - [`lusztig`] — the reflection isomorphisms `T_{i,d}`, their inverses and
//!   composites along braid words;
//! - [`imroots`] — imaginary root vectors and their commutation calculus;
//! - [`drinfeld`] — the loop realization: generator images, relation
//!   verification, and the grading-character extension;
//! - [`suites`] — the machine-checked verification suites behind the CLI.
//!
//! Start with the `examples/` directory: each example is a runnable tour of
//! one capability. The `qdsup` binary drives the verification suites and a
//! small element calculator.

pub mod cartan;
pub mod coeff;
pub mod error;
pub mod weyl;

pub mod uqd;

pub mod lusztig;

pub mod imroots;

pub mod drinfeld;

pub mod engine;

pub mod suites;

pub mod report;

pub mod evalexpr;

pub use coeff::{Coeff, HalfExponent, Smp, SmpCtx, Sym};
pub use engine::{Engine, EngineConfig, SignConvention};
pub use error::{Error, Result};
