//! Mass thresholds as functions of `α`.
//!
//! * `m_c1`: one disk and two half-mass disks have equal energy.
//! * `m_2`: no minimizer exists above it.
//! * `m(ε₀)`, `m(ε₁)`: below these a minimizer, if any, is convex and then a
//!   disk.
//! * `α₀`: where `m_2` meets `min(m(ε₀), m(ε₁))`.
//!
//! The rigidity thresholds are phrased in the rescaled mass
//! `ε = (m/π)^((3-α)/2)`; see [`mass_of_eps`].

use std::f64::consts::{PI, SQRT_2};

use serde::Serialize;

pub use crate::roots::RootSolveConfig;
use crate::roots::{bisect, bisect_expanding};
use crate::specfun::{disk_potential_max_slope, gamma_real, Alpha};
use crate::splitting::{crossover_cost, crossover_radius, unit_disk_self_energy};
use crate::{Error, Result};

/// Default bracket for `ε₀` and `ε₁`, widened upward when needed.
pub const EPS_BRACKET: (f64, f64) = (1e-6, 4.0);
/// Fixed bracket for the crossing exponent `α₀`.
pub const ALPHA0_BRACKET: (f64, f64) = (0.01, 0.10);

/// The four mass curves at one `α`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdSample {
    pub alpha: f64,
    pub m_c1: f64,
    pub m_2: f64,
    pub m_eps0: f64,
    pub m_eps1: f64,
}

impl ThresholdSample {
    /// `min(m(ε₀), m(ε₁))`, the mass below which minimizers are disks.
    pub fn m_rigid(&self) -> f64 {
        self.m_eps0.min(self.m_eps1)
    }
}

/// Every threshold quantity at one `α`, including the radii and `ε` values
/// behind the masses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdReport {
    pub alpha: f64,
    pub m_c1: f64,
    #[serde(rename = "R_c1")]
    pub r_c1: f64,
    pub rho_c1: f64,
    pub m_2: f64,
    #[serde(rename = "R_0")]
    pub r_0: f64,
    pub eps_0: f64,
    pub eps_1: f64,
    pub m_eps0: f64,
    pub m_eps1: f64,
}

/// Result of the `α₀` solve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CrossingExponent {
    pub alpha0: f64,
    /// `m_2(α₀)`.
    pub m_at_crossing: f64,
    /// Relative tolerance the bisection ran to.
    pub tol: f64,
}

fn require_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("eps", eps, "eps > 0"))
    }
}

/// Critical mass `m_c1(α)`:
///
/// ```text
/// π ( (√2 - 1) Γ(2 - α/2) Γ(3 - α/2) / (π (1 - 2^((α-2)/2)) Γ(2 - α)) )^(2/(3-α))
/// ```
///
/// At `α = 0` the exact limit `π (4(√2 - 1)/π)^(2/3)` is returned.
#[doc(alias = "m_c1")]
pub fn critical_mass(alpha: Alpha) -> f64 {
    let a = alpha.get();
    if a == 0.0 {
        return PI * (4.0 * (SQRT_2 - 1.0) / PI).powf(2.0 / 3.0);
    }
    let inner = (SQRT_2 - 1.0) * gamma_real(2.0 - 0.5 * a) * gamma_real(3.0 - 0.5 * a)
        / (PI * (1.0 - 2f64.powf(0.5 * (a - 2.0))) * gamma_real(2.0 - a));
    PI * inner.powf(2.0 / (3.0 - a))
}

/// Per-area energy lower bound of a minimizer with `m = πR²`, from the
/// isoperimetric inequality and `diam ≤ P/2`:
/// `2/R + 2^α π^(1-α) ρ_c1^(-α) R^(2-2α)`. Requires `0 ≤ α ≤ 1/2`.
#[doc(alias = "rho0")]
pub fn lower_cost_bound(r: f64, alpha: Alpha) -> Result<f64> {
    alpha.require_at_most(0.5, "0 <= alpha <= 1/2")?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain("R", r, "R > 0"));
    }
    let rho_c1 = crossover_cost(1, alpha)?;
    Ok(lower_cost_bound_with(r, alpha.get(), rho_c1))
}

fn lower_cost_bound_with(r: f64, a: f64, rho_c1: f64) -> f64 {
    2.0 / r + 2f64.powf(a) * PI.powf(1.0 - a) / rho_c1.powf(a) * r.powf(2.0 - 2.0 * a)
}

/// `R₀`, the unique `R ≥ R_c1` with `ρ₀(R) = ρ_c1`. Requires `0 < α ≤ 1/2`.
///
/// Default bracket `[R_c1, 4 R_c1]`, widened upward if needed.
#[doc(alias = "R0")]
pub fn nonexistence_radius(alpha: Alpha, cfg: &RootSolveConfig) -> Result<f64> {
    alpha.require_positive()?;
    alpha.require_at_most(0.5, "0 < alpha <= 1/2")?;
    let r_c1 = crossover_radius(1, alpha)?;
    let rho_c1 = crossover_cost(1, alpha)?;
    let a = alpha.get();
    let (lo, hi) = cfg.bracket_or((r_c1, 4.0 * r_c1));
    let root = bisect_expanding(
        |r| Ok(lower_cost_bound_with(r, a, rho_c1) - rho_c1),
        lo,
        hi,
        cfg,
    )?;
    Ok(root.x)
}

/// Nonexistence mass `m_2 = π R₀²`. Requires `0 < α ≤ 1/2`.
#[doc(alias = "m_2")]
pub fn nonexistence_mass(alpha: Alpha, cfg: &RootSolveConfig) -> Result<f64> {
    let r0 = nonexistence_radius(alpha, cfg)?;
    Ok(PI * r0 * r0)
}

// C₀ without argument checks; also used at ε = 0.
fn deficit_bound_raw(a: f64, eps: f64, v0: f64) -> f64 {
    eps / (2.0 * PI) * (v0 - PI.powf(2.0 - a) / (1.0 + eps * v0 / (2.0 * PI)).powf(a))
}

/// Bound `C₀` on the isoperimetric deficit of a rescaled minimizer,
/// `(ε/2π)(V₀ - π^(2-α) / (1 + εV₀/2π)^α)`.
#[doc(alias = "C0")]
pub fn deficit_bound(alpha: Alpha, eps: f64) -> Result<f64> {
    alpha.require_positive()?;
    require_eps(eps)?;
    Ok(deficit_bound_raw(
        alpha.get(),
        eps,
        unit_disk_self_energy(alpha),
    ))
}

/// Lower bound `C₁ = π^(1-α) / (1 + C₀)^α` on the potential of a rescaled
/// minimizer.
#[doc(alias = "C1")]
pub fn potential_lower_bound(alpha: Alpha, eps: f64) -> Result<f64> {
    let c0 = deficit_bound(alpha, eps)?;
    let a = alpha.get();
    Ok(PI.powf(1.0 - a) / (1.0 + c0).powf(a))
}

/// Upper bound `C₂ = 2π / (2 - α)`, the potential at the center of the
/// unit disk.
#[doc(alias = "C2")]
pub fn potential_upper_bound(alpha: Alpha) -> f64 {
    2.0 * PI / (2.0 - alpha.get())
}

/// Half-width bound `√(π D (D + 2))` of the annulus confining a convex set
/// of area `π` with isoperimetric deficit `D`.
#[doc(alias = "delta_bound")]
pub fn annulus_half_width(deficit: f64) -> Result<f64> {
    if !(deficit >= 0.0 && deficit.is_finite()) {
        return Err(Error::domain("D", deficit, "D >= 0"));
    }
    Ok((PI * deficit * (deficit + 2.0)).sqrt())
}

fn rigidity_constant_raw(alpha: Alpha, c0: f64) -> Result<f64> {
    let slope = disk_potential_max_slope(alpha)?;
    Ok(PI * slope * (1.0 + 2.0 / 3.0 * (PI * c0 * (c0 + 2.0)).sqrt()))
}

/// `C₃ = π |v^B'(1)| (1 + (2/3) √(π C₀ (C₀ + 2)))`. Requires `0 < α < 1`.
#[doc(alias = "C3")]
pub fn rigidity_constant(alpha: Alpha, eps: f64) -> Result<f64> {
    alpha.require_below(1.0, "0 < alpha < 1")?;
    let c0 = deficit_bound(alpha, eps)?;
    rigidity_constant_raw(alpha, c0)
}

/// Curvature margin `F₂ = 1/(1 + C₀) + 2ε(C₁ - C₂)`; positive means
/// minimizers at this `ε` are strictly convex. Decreasing in `ε`.
#[doc(alias = "F2")]
pub fn convexity_margin(alpha: Alpha, eps: f64) -> Result<f64> {
    alpha.require_positive()?;
    if !(eps >= 0.0 && eps.is_finite()) {
        return Err(Error::domain("eps", eps, "eps >= 0"));
    }
    let a = alpha.get();
    let c0 = deficit_bound_raw(a, eps, unit_disk_self_energy(alpha));
    let c1 = PI.powf(1.0 - a) / (1.0 + c0).powf(a);
    Ok(1.0 / (1.0 + c0) + 2.0 * eps * (c1 - potential_upper_bound(alpha)))
}

/// `F₁ = εC₃ (εC₃ C₀ (C₀ + 2) + 2) - 1`; negative means convex minimizers
/// at this `ε` are disks. Increasing in `ε`, with `F₁(α, 0) = -1`.
#[doc(alias = "F1")]
pub fn rigidity_residual(alpha: Alpha, eps: f64) -> Result<f64> {
    alpha.require_positive()?;
    alpha.require_below(1.0, "0 < alpha < 1")?;
    if !(eps >= 0.0 && eps.is_finite()) {
        return Err(Error::domain("eps", eps, "eps >= 0"));
    }
    let c0 = deficit_bound_raw(alpha.get(), eps, unit_disk_self_energy(alpha));
    let k = eps * rigidity_constant_raw(alpha, c0)?;
    Ok(k * (k * c0 * (c0 + 2.0) + 2.0) - 1.0)
}

/// Convexity threshold `ε₀`, the root of [`convexity_margin`].
#[doc(alias = "eps0")]
pub fn convexity_threshold(alpha: Alpha, cfg: &RootSolveConfig) -> Result<f64> {
    alpha.require_positive()?;
    let (lo, hi) = cfg.bracket_or(EPS_BRACKET);
    Ok(bisect_expanding(|e| convexity_margin(alpha, e), lo, hi, cfg)?.x)
}

/// Rigidity threshold `ε₁`, the root of [`rigidity_residual`].
/// Requires `0 < α < 1`.
#[doc(alias = "eps1")]
pub fn rigidity_threshold(alpha: Alpha, cfg: &RootSolveConfig) -> Result<f64> {
    alpha.require_positive()?;
    alpha.require_below(1.0, "0 < alpha < 1")?;
    let (lo, hi) = cfg.bracket_or(EPS_BRACKET);
    Ok(bisect_expanding(|e| rigidity_residual(alpha, e), lo, hi, cfg)?.x)
}

/// Mass corresponding to the rescaled parameter, `m = π ε^(2/(3-α))`.
pub fn mass_of_eps(eps: f64, alpha: Alpha) -> Result<f64> {
    require_eps(eps)?;
    Ok(PI * eps.powf(2.0 / (3.0 - alpha.get())))
}

/// `ε = (m/π)^((3-α)/2)`.
pub fn eps_of_mass(m: f64, alpha: Alpha) -> Result<f64> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::domain("m", m, "m > 0"));
    }
    Ok((m / PI).powf(0.5 * (3.0 - alpha.get())))
}

/// All four mass curves at `α`. Requires `0 < α ≤ 1/2`.
pub fn threshold_sample(alpha: Alpha, cfg: &RootSolveConfig) -> Result<ThresholdSample> {
    let m_2 = nonexistence_mass(alpha, cfg)?;
    let m_eps0 = mass_of_eps(convexity_threshold(alpha, cfg)?, alpha)?;
    let m_eps1 = mass_of_eps(rigidity_threshold(alpha, cfg)?, alpha)?;
    Ok(ThresholdSample {
        alpha: alpha.get(),
        m_c1: critical_mass(alpha),
        m_2,
        m_eps0,
        m_eps1,
    })
}

/// Every threshold quantity at `α`. Requires `0 < α ≤ 1/2`.
pub fn threshold_report(alpha: Alpha, cfg: &RootSolveConfig) -> Result<ThresholdReport> {
    let r_0 = nonexistence_radius(alpha, cfg)?;
    let eps_0 = convexity_threshold(alpha, cfg)?;
    let eps_1 = rigidity_threshold(alpha, cfg)?;
    Ok(ThresholdReport {
        alpha: alpha.get(),
        m_c1: critical_mass(alpha),
        r_c1: crossover_radius(1, alpha)?,
        rho_c1: crossover_cost(1, alpha)?,
        m_2: PI * r_0 * r_0,
        r_0,
        eps_0,
        eps_1,
        m_eps0: mass_of_eps(eps_0, alpha)?,
        m_eps1: mass_of_eps(eps_1, alpha)?,
    })
}

/// `g(α) = min(m(ε₀), m(ε₁)) - m_2`; positive where the disk/no-minimizer
/// dichotomy is established.
pub fn rigidity_gap(alpha: Alpha, cfg: &RootSolveConfig) -> Result<f64> {
    let inner = RootSolveConfig {
        bracket: None,
        ..*cfg
    };
    let s = threshold_sample(alpha, &inner)?;
    Ok(s.m_rigid() - s.m_2)
}

/// Crossing exponent `α₀`, the root of [`rigidity_gap`] on
/// [`ALPHA0_BRACKET`] (or `cfg.bracket`). The inner solves run at the same
/// tolerance.
#[doc(alias = "alpha0")]
pub fn crossing_exponent(cfg: &RootSolveConfig) -> Result<CrossingExponent> {
    let (lo, hi) = cfg.bracket_or(ALPHA0_BRACKET);
    let root = bisect(|a| rigidity_gap(Alpha::new(a)?, cfg), lo, hi, cfg)?;
    let alpha0 = root.x;
    let inner = RootSolveConfig {
        bracket: None,
        ..*cfg
    };
    Ok(CrossingExponent {
        alpha0,
        m_at_crossing: nonexistence_mass(Alpha::new(alpha0)?, &inner)?,
        tol: cfg.rel_tol,
    })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::splitting::{split_cost, unit_disk_self_energy};
    use rand::{Rng, SeedableRng};

    fn al(a: f64) -> Alpha {
        Alpha::new(a).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    /// 1000 uniform points on (0, 0.034], the endpoint, and 1e-6.
    fn ledger_grid() -> Vec<f64> {
        let mut g: Vec<f64> = (1..=1000).map(|i| 0.034 * i as f64 / 1000.0).collect();
        g.push(1e-6);
        g
    }

    fn cfg() -> RootSolveConfig {
        RootSolveConfig::default()
    }

    #[test]
    fn critical_mass_at_zero() {
        let m = critical_mass(Alpha::ZERO);
        assert!((m - 2.051).abs() < 1e-3);
        assert!(rel(m, 2.050719030045191177891513574593086876779) < 1e-14);
        // limit formula agrees with the general one as α → 0
        assert!((critical_mass(al(1e-9)) - m).abs() < 1e-8);
    }

    #[test]
    fn critical_mass_is_first_crossover_area() {
        for a in [0.01, 0.1, 0.5, 1.0, 1.3] {
            let r = crossover_radius(1, al(a)).unwrap();
            assert!(rel(PI * r * r, critical_mass(al(a))) < 1e-12, "{a}");
        }
    }

    #[test]
    fn critical_mass_published_window() {
        for a in ledger_grid() {
            let m = critical_mass(al(a));
            assert!((2.007..=2.087).contains(&m), "{a}: {m}");
        }
    }

    #[test]
    fn lower_cost_bound_limit_and_sign() {
        for r in [0.3, 0.808, 1.0, 2.5] {
            let lhs = lower_cost_bound(r, Alpha::ZERO).unwrap();
            assert!(rel(lhs, split_cost(1, r, Alpha::ZERO).unwrap()) < 1e-14);
        }
        for a in [0.01, 0.1, 0.3, 0.5] {
            let rc = crossover_radius(1, al(a)).unwrap();
            assert!(lower_cost_bound(rc, al(a)).unwrap() < crossover_cost(1, al(a)).unwrap());
        }
        assert!(lower_cost_bound(1.0, al(0.6)).is_err());
        assert!(lower_cost_bound(0.0, al(0.1)).is_err());
    }

    #[test]
    fn lower_cost_bound_convex() {
        for a in [0.0, 0.1, 0.25, 0.5] {
            let f = |r: f64| lower_cost_bound(r, al(a)).unwrap();
            let h = 1e-3;
            for i in 1..=500 {
                let r = 0.01 * i as f64;
                assert!(f(r - h) - 2.0 * f(r) + f(r + h) > 0.0, "{a} {r}");
            }
        }
    }

    #[test]
    fn nonexistence_mass_on_ledger_grid() {
        for a in ledger_grid() {
            let r0 = nonexistence_radius(al(a), &cfg()).unwrap();
            assert!(r0 < 0.945, "{a}: {r0}");
            let m2 = PI * r0 * r0;
            assert!(m2 < 2.806);
            assert!(m2 > critical_mass(al(a)));
        }
    }

    #[test]
    fn nonexistence_mass_small_alpha_limit() {
        // bisection at 40 digits, α = 1e-4
        let m2 = nonexistence_mass(al(1e-4), &cfg()).unwrap();
        assert!(
            (m2 - 2.051736725394743715950955458047106660605).abs() < 1e-6,
            "{m2}"
        );
        assert!((m2 - critical_mass(Alpha::ZERO)).abs() < 0.01);
    }

    #[test]
    fn nonexistence_mass_domain() {
        assert!(nonexistence_mass(Alpha::ZERO, &cfg()).is_err());
        assert!(nonexistence_mass(al(0.51), &cfg()).is_err());
    }

    #[test]
    fn nonexistence_mass_above_critical_mass() {
        for i in 1..=50 {
            let a = 0.001 * i as f64;
            assert!(nonexistence_mass(al(a), &cfg()).unwrap() > critical_mass(al(a)));
        }
    }

    #[test]
    fn deficit_bound_values() {
        for a in ledger_grid() {
            assert!(deficit_bound(al(a), 0.846).unwrap() <= 0.121);
        }
        assert!(deficit_bound(al(1e-6), 0.846).unwrap() < 1e-5);
        assert!(deficit_bound(al(0.5), 0.0).is_err());
        assert!(deficit_bound(Alpha::ZERO, 1.0).is_err());
    }

    #[test]
    fn deficit_bound_increasing_in_eps() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..1000 {
            let a = al(rng.gen_range(1e-4..1.99));
            let e1 = rng.gen_range(1e-4..10.0);
            let e2 = rng.gen_range(1e-4..10.0);
            let (lo, hi) = if e1 < e2 { (e1, e2) } else { (e2, e1) };
            if lo == hi {
                continue;
            }
            let (c_lo, c_hi) = (deficit_bound(a, lo).unwrap(), deficit_bound(a, hi).unwrap());
            assert!(c_lo > 0.0 && c_lo < c_hi, "{a:?} {lo} {hi}");
        }
    }

    #[test]
    fn potential_bounds() {
        assert!(rel(potential_upper_bound(Alpha::ZERO), PI) < 1e-15);
        for a in ledger_grid() {
            assert!(potential_lower_bound(al(a), 0.846).unwrap() >= 3.009);
            assert!(potential_upper_bound(al(a)) <= 3.196);
        }
        let mut rng = rand::rngs::StdRng::seed_from_u64(13);
        for _ in 0..1000 {
            let a = al(rng.gen_range(1e-4..1.99));
            let e = rng.gen_range(1e-4..10.0);
            assert!(potential_lower_bound(a, e).unwrap() < potential_upper_bound(a));
        }
    }

    #[test]
    fn rigidity_constant_values() {
        for a in ledger_grid() {
            assert!(rigidity_constant(al(a), 0.846).unwrap() <= 0.557);
        }
        assert!(rigidity_constant(al(1e-8), 1.0).unwrap() < 1e-6);
        let a = al(0.034);
        let c0 = deficit_bound(a, 0.846).unwrap();
        let composed = PI
            * disk_potential_max_slope(a).unwrap()
            * (1.0 + 2.0 / 3.0 * annulus_half_width(c0).unwrap());
        assert!(rel(rigidity_constant(a, 0.846).unwrap(), composed) < 1e-12);
        // the explicit prefactor form
        let ag = 0.034f64;
        let pref = PI * PI * ag * (2.0 - ag) * gamma_real(1.0 - ag)
            / (2.0 * gamma_real(2.0 - ag / 2.0).powi(2));
        let explicit = pref * (1.0 + 2.0 / 3.0 * (PI * c0 * (c0 + 2.0)).sqrt());
        assert!(rel(rigidity_constant(a, 0.846).unwrap(), explicit) < 1e-12);
        assert!(rigidity_constant(al(1.0), 0.5).is_err());
    }

    #[test]
    fn annulus_half_width_values() {
        assert_eq!(annulus_half_width(0.0).unwrap(), 0.0);
        // √(π·0.121·2.121), 40 digits
        assert!(
            rel(
                annulus_half_width(0.121).unwrap(),
                0.8979206424901579945369138762486460392284
            ) < 1e-14
        );
        let mut prev = -1.0;
        for i in 0..200 {
            let d = annulus_half_width(0.01 * i as f64).unwrap();
            assert!(d > prev);
            prev = d;
        }
        assert!(annulus_half_width(-1e-3).is_err());
    }

    #[test]
    fn convexity_threshold_values() {
        for a in ledger_grid() {
            assert!(convexity_margin(al(a), 0.846).unwrap() >= 0.575);
            assert!(convexity_threshold(al(a), &cfg()).unwrap() > 0.846);
        }
        assert!((convexity_margin(al(0.034), 1e-10).unwrap() - 1.0).abs() < 1e-8);
        let a = al(0.2);
        let e0 = convexity_threshold(a, &cfg()).unwrap();
        assert!(convexity_margin(a, e0 * 0.999).unwrap() > 0.0);
        assert!(convexity_margin(a, e0 * 1.001).unwrap() < 0.0);
    }

    #[test]
    fn rigidity_threshold_values() {
        for a in ledger_grid() {
            assert!(rigidity_residual(al(a), 0.846).unwrap() < 0.0);
            let e1 = rigidity_threshold(al(a), &cfg()).unwrap();
            assert!(e1 > 0.846);
            assert!(mass_of_eps(e1, al(a)).unwrap() > 2.806);
        }
        assert_eq!(rigidity_residual(al(0.3), 0.0).unwrap(), -1.0);
        assert!(rigidity_threshold(al(1.0), &cfg()).is_err());
    }

    #[test]
    fn rigidity_residual_increasing() {
        let a = al(0.05);
        let mut prev = -1.0;
        for i in 1..=400 {
            let f = rigidity_residual(a, 0.01 * i as f64).unwrap();
            assert!(f > prev);
            prev = f;
        }
    }

    #[test]
    fn mass_eps_round_trip() {
        assert!(rel(mass_of_eps(1.0, al(0.3)).unwrap(), PI) < 1e-15);
        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        for _ in 0..1000 {
            let a = al(rng.gen_range(0.0..1.99));
            let e = rng.gen_range(1e-3..100.0);
            let back = eps_of_mass(mass_of_eps(e, a).unwrap(), a).unwrap();
            assert!(rel(back, e) < 1e-13);
        }
        assert!(mass_of_eps(0.0, al(0.1)).is_err());
        assert!(eps_of_mass(-1.0, al(0.1)).is_err());
    }

    #[test]
    fn gap_signs() {
        assert!(rigidity_gap(al(0.034), &cfg()).unwrap() > 0.0);
        assert!(rigidity_gap(al(0.08), &cfg()).unwrap() < 0.0);
    }

    #[test]
    fn crossing_exponent_value_and_stability() {
        let fine = crossing_exponent(&RootSolveConfig::with_rel_tol(1e-12)).unwrap();
        let coarse = crossing_exponent(&RootSolveConfig::with_rel_tol(1e-10)).unwrap();
        assert!((fine.alpha0 - 0.04273).abs() < 5e-4, "{}", fine.alpha0);
        assert!((fine.alpha0 - coarse.alpha0).abs() < 1e-8);
        let m2 = nonexistence_mass(al(fine.alpha0), &cfg()).unwrap();
        assert_eq!(fine.m_at_crossing, m2);
        assert_eq!(fine.tol, 1e-12);
        let again = crossing_exponent(&RootSolveConfig::with_rel_tol(1e-12)).unwrap();
        assert_eq!(fine.alpha0.to_bits(), again.alpha0.to_bits());
    }

    #[test]
    fn crossing_exponent_bracket_failure() {
        let cfg = RootSolveConfig::default().with_bracket(0.01, 0.03);
        assert!(matches!(
            crossing_exponent(&cfg),
            Err(Error::Bracket { .. })
        ));
    }

    #[test]
    fn report_is_consistent() {
        let a = al(0.02);
        let r = threshold_report(a, &cfg()).unwrap();
        let s = threshold_sample(a, &cfg()).unwrap();
        assert_eq!(r.m_2, s.m_2);
        assert_eq!(r.m_eps0, s.m_eps0);
        assert_eq!(r.m_eps1, s.m_eps1);
        assert!(r.m_2 < s.m_rigid());
        assert!(
            rel(
                r.rho_c1,
                2.0 / r.r_c1 + unit_disk_self_energy(a) / PI * r.r_c1.powf(2.0 - 0.02)
            ) < 1e-14
        );
    }
}
