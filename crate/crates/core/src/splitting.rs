//! Energy of one disk and of `n` equal disks sent infinitely far apart,
//! measured per unit area, and the lower envelope of that family.
//!
//! With `m = πR²`, splitting into `n` equal disks costs
//! `ρ_n(R) = n E₁(R/√n) / (πR²) = ρ₁(R/√n)` per unit area. Adjacent members
//! cross exactly once, at `R_cn`, and those crossovers tile `(0, ∞)` into
//! the intervals on which each `ρ_n` is the cheapest.

use std::f64::consts::PI;

use serde::Serialize;

use crate::specfun::{gamma_real, Alpha};
use crate::thresholds::critical_mass;
use crate::{Error, Result};

/// Default cap on the split count searched by [`envelope`].
pub const DEFAULT_SPLIT_CAP: u64 = 1_000_000;

// below this the envelope lookup walks n one step at a time
const LINEAR_WALK_LIMIT: u64 = 64;

/// One piece `(r_lo, r_hi]` of the envelope, on which `ρ_n` is minimal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnvelopeSegment {
    pub n: u64,
    /// `R_c(n-1)`, or `0` for `n = 1`.
    pub r_lo: f64,
    /// `R_cn`.
    pub r_hi: f64,
}

/// Value of the envelope at a radius together with the optimal split count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnvelopePoint {
    pub rho: f64,
    pub n: u64,
}

fn require_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("R", r, "R > 0"))
    }
}

fn require_split(n: u64) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        Err(Error::domain("n", 0.0, "n >= 1"))
    }
}

/// Self-interaction of the unit disk,
/// `V₀(α) = 2π² Γ(2-α) / (Γ(2-α/2) Γ(3-α/2))`.
#[doc(alias = "V0")]
pub fn unit_disk_self_energy(alpha: Alpha) -> f64 {
    let a = alpha.get();
    2.0 * PI * PI * gamma_real(2.0 - a) / (gamma_real(2.0 - 0.5 * a) * gamma_real(3.0 - 0.5 * a))
}

/// `E(B_R) = 2πR + V₀ R^(4-α)`.
pub fn disk_energy(r: f64, alpha: Alpha) -> Result<f64> {
    require_radius(r)?;
    Ok(2.0 * PI * r + unit_disk_self_energy(alpha) * r.powf(4.0 - alpha.get()))
}

/// Energy per unit area of `n` equal disks of total area `πR²`.
#[doc(alias = "rho_n")]
pub fn split_cost(n: u64, r: f64, alpha: Alpha) -> Result<f64> {
    require_split(n)?;
    require_radius(r)?;
    let nf = n as f64;
    Ok(nf * disk_energy(r / nf.sqrt(), alpha)? / (PI * r * r))
}

/// Radius `R_cn` at which `ρ_n` and `ρ_(n+1)` cross.
///
/// Differences of neighbouring powers are formed without cancellation, so
/// the value stays accurate for very large `n`.
#[doc(alias = "R_cn")]
pub fn crossover_radius(n: u64, alpha: Alpha) -> Result<f64> {
    require_split(n)?;
    let a = alpha.get();
    let nf = n as f64;
    // √(n+1) - √n
    let root_gap = 1.0 / ((nf + 1.0).sqrt() + nf.sqrt());
    // n^β - (n+1)^β, β = α/2 - 1 < 0
    let beta = 0.5 * a - 1.0;
    let power_gap = -nf.powf(beta) * (beta * (1.0 / nf).ln_1p()).exp_m1();
    let base = 2.0 * PI * root_gap / (unit_disk_self_energy(alpha) * power_gap);
    Ok(base.powf(1.0 / (3.0 - a)))
}

/// `ρ_cn = ρ_n(R_cn)`, the cost where `ρ_n` hands over to `ρ_(n+1)`.
#[doc(alias = "rho_cn")]
pub fn crossover_cost(n: u64, alpha: Alpha) -> Result<f64> {
    split_cost(n, crossover_radius(n, alpha)?, alpha)
}

/// Minimizer of `ρ_n`, `√n (2π / (V₀ (2-α)))^(1/(3-α))`. Requires `α ≤ 1`.
#[doc(alias = "R_n")]
pub fn split_cost_minimizer(n: u64, alpha: Alpha) -> Result<f64> {
    require_split(n)?;
    alpha.require_at_most(1.0, "0 <= alpha <= 1")?;
    let a = alpha.get();
    let single = (2.0 * PI / (unit_disk_self_energy(alpha) * (2.0 - a))).powf(1.0 / (3.0 - a));
    Ok((n as f64).sqrt() * single)
}

/// The envelope interval `(R_c(n-1), R_cn]`.
pub fn envelope_segment(n: u64, alpha: Alpha) -> Result<EnvelopeSegment> {
    require_split(n)?;
    let r_lo = if n == 1 {
        0.0
    } else {
        crossover_radius(n - 1, alpha)?
    };
    Ok(EnvelopeSegment {
        n,
        r_lo,
        r_hi: crossover_radius(n, alpha)?,
    })
}

/// `ρ_min(R) = min_n ρ_n(R)` and the minimizing `n`. Requires `α ≤ 1`.
#[doc(alias = "rho_min")]
pub fn envelope(r: f64, alpha: Alpha) -> Result<EnvelopePoint> {
    envelope_with_cap(r, alpha, DEFAULT_SPLIT_CAP)
}

/// [`envelope`] with an explicit cap on the split count.
pub fn envelope_with_cap(r: f64, alpha: Alpha, cap: u64) -> Result<EnvelopePoint> {
    require_radius(r)?;
    alpha.require_at_most(1.0, "0 <= alpha <= 1")?;
    let n = optimal_split(r, alpha, cap)?;
    Ok(EnvelopePoint {
        rho: split_cost(n, r, alpha)?,
        n,
    })
}

/// Smallest `n` with `r ≤ R_cn`; intervals are closed on the right.
fn optimal_split(r: f64, alpha: Alpha, cap: u64) -> Result<u64> {
    let below = |n: u64| -> Result<bool> { Ok(r <= crossover_radius(n, alpha)?) };
    let over_cap = || Error::SplitCap { cap };

    let walk_end = LINEAR_WALK_LIMIT.min(cap);
    for n in 1..=walk_end {
        if below(n)? {
            return Ok(n);
        }
    }
    if walk_end == cap {
        return Err(over_cap());
    }

    // R_c(lo) < r here; double hi until r ≤ R_c(hi), then bisect on n.
    let mut lo = walk_end;
    let mut hi = 2 * walk_end;
    while !below(hi.min(cap))? {
        if hi >= cap {
            return Err(over_cap());
        }
        lo = hi;
        hi *= 2;
    }
    hi = hi.min(cap);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if below(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `m ρ_c1`, the energy of the best equal-disk splitting of mass `m`.
/// Stated for `m ≥ m_c1` and `α ≤ 1`.
pub fn energy_upper_bound(m: f64, alpha: Alpha) -> Result<f64> {
    alpha.require_at_most(1.0, "0 <= alpha <= 1")?;
    if !(m >= critical_mass(alpha) && m.is_finite()) {
        return Err(Error::domain("m", m, "m >= m_c1(alpha)"));
    }
    Ok(m * crossover_cost(1, alpha)?)
}
