//! Exact-arithmetic algebra of even lattices, finitely supported Fourier
//! series on tube domains, and audits of candidate Borcherds products.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere, so every verdict the crate reports is an exact
//! yes/no certificate about the given finite data.
//!
//! The crate is organized around four capabilities:
//!
//! - [`lattice`]: integral lattices via Gram matrices: bilinear forms, exact
//!   signatures, dual lattices and discriminant groups, reflections, short
//!   vector enumeration, and the norm ideal generator `m_K`;
//! - [`series`]: finitely supported Fourier series over Lorentzian lattices:
//!   the normalized Laplace operator, singular supports, isometry pullback,
//!   vanishing orders along quadratic divisors and anti-invariance;
//! - [`audit`]: candidate products on `U + K` lattices: divisor classes and
//!   multiplicities derived from a principal part, simple-zero /
//!   reflectivity / norm-ideal checks, rank-based existence verdicts, and
//!   the composite audit;
//! - [`catalog`]: built-in lattices (`U`, `A1`, `D4`, `E8`, `D20`, Leech and
//!   their sums) and the two reference products `Phi12` and `Psi24`.
//!
//! The `borcherds-audit` binary exposes all of this as batch subcommands
//! with stable exit codes and JSON reports; the `examples/` directory shows
//! one runnable walkthrough per capability.

pub mod audit;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod io;
pub mod lattice;
pub mod matrix;
pub mod rational;
pub mod series;

pub use audit::{AuditReport, CandidateProduct, RankVerdict};
pub use error::{Error, Result};
pub use lattice::{GramLattice, LatticeVector};
pub use series::{FourierSeries, TubeDomain, VanishingOrder};
