//! Quantitative thresholds for the planar isoperimetric problem with a
//! Riesz repulsion,
//!
//! ```text
//! E(F) = P(F) + ∫_F ∫_F |x - y|^(-α) dx dy,   |F| = m,
//! ```
//!
//! computed from closed forms and bracketed bisection: the one-disk /
//! two-disk crossover mass `m_c1`, the nonexistence mass `m_2`, the
//! convexity and rigidity thresholds `ε₀`, `ε₁`, the exponent `α₀` where the
//! nonexistence curve meets the rigidity curve, and a grid check of the
//! explicit inequality chain that pins all of them down for `α ≤ 0.034`.
//!
//! Module map:
//!
//! * [`specfun`]: Gamma, Gauss ₂F₁ and the unit-disk potential `v^B`.
//! * [`splitting`]: disk energies, the per-area cost family `ρ_n` and its
//!   lower envelope.
//! * [`thresholds`]: the mass curves and every root solve.
//! * [`verify`]: the inequality ledger.
//! * [`cli`]: the `rieszdrop` command-line surface and its CSV/JSON output.
//! * [`par`]: rayon-backed map with a sequential fallback.
//!
//! ```
//! use rieszdrop::thresholds::{critical_mass, crossing_exponent, threshold_sample};
//! use rieszdrop::verify::run_ledger;
//! use rieszdrop::{Alpha, RootSolveConfig};
//!
//! let cfg = RootSolveConfig::default();
//! let s = threshold_sample(Alpha::new(0.02)?, &cfg)?;
//! assert!(s.m_2 < s.m_rigid());
//! assert!((critical_mass(Alpha::ZERO) - 2.0507).abs() < 1e-4);
//! assert!((crossing_exponent(&cfg)?.alpha0 - 0.04273).abs() < 1e-5);
//! assert!(run_ledger()?.pass);
//! # Ok::<(), rieszdrop::Error>(())
//! ```

pub mod cli;
mod error;
pub mod par;
pub mod roots;
pub mod specfun;
pub mod splitting;
pub mod thresholds;
pub mod verify;

pub use error::{Error, Result};
pub use specfun::{Alpha, SeriesConfig};
pub use splitting::{EnvelopePoint, EnvelopeSegment};
pub use thresholds::{RootSolveConfig, ThresholdSample};
pub use verify::{LedgerCheck, LedgerReport};
