//! Grid check of the explicit inequality chain behind the disk/nonexistence
//! dichotomy for small `α`.
//!
//! Every quantity in the chain is evaluated at each grid point, the extreme
//! values are reduced into one [`LedgerCheck`] per inequality, and the
//! report passes iff every check does. This is a dense-grid check in
//! floating point, not a certified bound.

use std::fmt;

use serde::Serialize;

use crate::par::{map_indexed, Execution};
use crate::roots::RootSolveConfig;
use crate::specfun::{gamma_real, Alpha};
use crate::splitting::{crossover_cost, crossover_radius};
use crate::thresholds::{
    convexity_margin, convexity_threshold, critical_mass, deficit_bound, lower_cost_bound,
    mass_of_eps, nonexistence_mass, potential_lower_bound, potential_upper_bound,
    rigidity_constant, rigidity_residual, rigidity_threshold,
};
use crate::{Error, Result};

/// Smallest `α` always added to the grid, so the `α → 0` end is probed.
pub const SMALL_ALPHA: f64 = 1e-6;

/// Inputs of [`run_ledger_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LedgerParams {
    pub alpha_max: f64,
    /// `ε` at which the `C₀`, `C₁`, `C₃`, `F₁`, `F₂` bounds are probed.
    pub eps_probe: f64,
    /// `R` at which `ρ₀` and `F₃` are probed.
    pub r_probe: f64,
    pub grid: usize,
}

impl Default for LedgerParams {
    fn default() -> Self {
        Self {
            alpha_max: 0.034,
            eps_probe: 0.846,
            r_probe: 0.945,
            grid: 1000,
        }
    }
}

impl LedgerParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha_max > 0.0 && self.alpha_max < 1.0) {
            return Err(Error::domain(
                "alpha_max",
                self.alpha_max,
                "0 < alpha_max < 1",
            ));
        }
        if !(self.eps_probe > 0.0 && self.eps_probe.is_finite()) {
            return Err(Error::domain("eps_probe", self.eps_probe, "eps_probe > 0"));
        }
        if !(self.r_probe > 0.0 && self.r_probe.is_finite()) {
            return Err(Error::domain("r_probe", self.r_probe, "r_probe > 0"));
        }
        if self.grid < 2 {
            return Err(Error::Config(format!(
                "grid must be at least 2, got {}",
                self.grid
            )));
        }
        Ok(())
    }

    /// `alpha_max·i/grid` for `i = 1..=grid`, preceded by [`SMALL_ALPHA`]
    /// when that lies below the first point.
    pub fn alphas(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.grid + 1);
        if SMALL_ALPHA < self.alpha_max / self.grid as f64 {
            v.push(SMALL_ALPHA);
        }
        v.extend((1..=self.grid).map(|i| self.alpha_max * i as f64 / self.grid as f64));
        v
    }
}

/// Direction of a ledger inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">")]
    Greater,
    #[serde(rename = ">=")]
    AtLeast,
    /// Closed interval `[bound, bound_upper]`.
    #[serde(rename = "in")]
    Within,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Less => "<",
            Relation::AtMost => "<=",
            Relation::Greater => ">",
            Relation::AtLeast => ">=",
            Relation::Within => "in",
        })
    }
}

/// One inequality of the chain, reduced over the grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LedgerCheck {
    pub name: &'static str,
    pub claim: String,
    pub relation: Relation,
    pub bound: f64,
    /// Upper end for [`Relation::Within`].
    pub bound_upper: Option<f64>,
    /// The grid value closest to violating the bound.
    pub attained: f64,
    pub attained_min: f64,
    pub attained_max: f64,
    /// Distance from `attained` to the bound; negative when violated.
    pub margin: f64,
    /// Where `attained` occurs.
    pub worst_alpha: f64,
    pub pass: bool,
}

/// Outcome of a ledger run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LedgerReport {
    pub checks: Vec<LedgerCheck>,
    pub grid_points: usize,
    pub alpha_max: f64,
    pub eps_probe: f64,
    pub r_probe: f64,
    pub pass: bool,
}

impl LedgerReport {
    pub fn check(&self, name: &str) -> Option<&LedgerCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LedgerCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

struct Rule {
    name: &'static str,
    relation: Relation,
    bound: f64,
    bound_upper: Option<f64>,
    label: &'static str,
}

const fn rule(name: &'static str, label: &'static str, relation: Relation, bound: f64) -> Rule {
    Rule {
        name,
        relation,
        bound,
        bound_upper: None,
        label,
    }
}

const fn within(name: &'static str, label: &'static str, lo: f64, hi: f64) -> Rule {
    Rule {
        name,
        relation: Relation::Within,
        bound: lo,
        bound_upper: Some(hi),
        label,
    }
}

/// The chain, in evaluation order. `label` takes the probe values via
/// `{eps}` / `{r}` substitution.
const RULES: [Rule; 18] = [
    within("gamma_2_minus_alpha", "Gamma(2 - alpha)", 0.986, 1.0),
    within("gamma_2_minus_half_alpha", "Gamma(2 - alpha/2)", 0.992, 1.0),
    within("gamma_3_minus_half_alpha", "Gamma(3 - alpha/2)", 1.968, 2.0),
    within("gamma_1_minus_alpha", "Gamma(1 - alpha)", 1.0, 1.021),
    within("m_c1", "m_c1(alpha)", 2.007, 2.087),
    rule("c0", "C0(alpha, {eps})", Relation::AtMost, 0.121),
    rule("c3", "C3(alpha, {eps})", Relation::AtMost, 0.557),
    rule("f1", "F1(alpha, {eps})", Relation::Less, 0.0),
    rule("c1", "C1(alpha, {eps})", Relation::AtLeast, 3.009),
    rule("c2", "C2(alpha)", Relation::AtMost, 3.196),
    rule("f2", "F2(alpha, {eps})", Relation::AtLeast, 0.575),
    within("r_c1", "R_c1(alpha)", 0.799, 0.815),
    rule("rho_c1", "rho_c1(alpha)", Relation::AtMost, 4.656),
    rule("rho0", "rho0({r}, alpha)", Relation::AtLeast, 4.677),
    rule("f3", "F3(alpha, {r})", Relation::AtLeast, 0.021),
    rule("m_2", "m_2(alpha)", Relation::Less, 2.806),
    rule("m_eps0", "m(eps0(alpha))", Relation::Greater, 2.806),
    rule("m_eps1", "m(eps1(alpha))", Relation::Greater, 2.806),
];

/// Names of the ledger checks, in report order.
pub fn check_names() -> impl Iterator<Item = &'static str> {
    RULES.iter().map(|s| s.name)
}

/// `F₃ = ρ₀(R) - ρ_c1`; positive at `R` means no minimizer of mass `πR²`
/// beats splitting. Requires `0 < α ≤ 1/2`.
#[doc(alias = "F3")]
pub fn nonexistence_margin(alpha: Alpha, r: f64) -> Result<f64> {
    alpha.require_positive()?;
    Ok(lower_cost_bound(r, alpha)? - crossover_cost(1, alpha)?)
}

fn evaluate(a: f64, p: &LedgerParams, cfg: &RootSolveConfig) -> Result<[f64; 18]> {
    let alpha = Alpha::new(a)?;
    let eps = p.eps_probe;
    let rho_c1 = crossover_cost(1, alpha)?;
    let rho0 = lower_cost_bound(p.r_probe, alpha)?;
    Ok([
        gamma_real(2.0 - a),
        gamma_real(2.0 - 0.5 * a),
        gamma_real(3.0 - 0.5 * a),
        gamma_real(1.0 - a),
        critical_mass(alpha),
        deficit_bound(alpha, eps)?,
        rigidity_constant(alpha, eps)?,
        rigidity_residual(alpha, eps)?,
        potential_lower_bound(alpha, eps)?,
        potential_upper_bound(alpha),
        convexity_margin(alpha, eps)?,
        crossover_radius(1, alpha)?,
        rho_c1,
        rho0,
        rho0 - rho_c1,
        nonexistence_mass(alpha, cfg)?,
        mass_of_eps(convexity_threshold(alpha, cfg)?, alpha)?,
        mass_of_eps(rigidity_threshold(alpha, cfg)?, alpha)?,
    ])
}

fn reduce(
    rule: &Rule,
    alphas: &[f64],
    values: &[[f64; 18]],
    k: usize,
    p: &LedgerParams,
) -> LedgerCheck {
    let (mut i_min, mut i_max) = (0, 0);
    for (i, row) in values.iter().enumerate() {
        if row[k] < values[i_min][k] {
            i_min = i;
        }
        if row[k] > values[i_max][k] {
            i_max = i;
        }
    }
    let (lo, hi) = (values[i_min][k], values[i_max][k]);
    let (worst, margin) = match rule.relation {
        Relation::Less | Relation::AtMost => (i_max, rule.bound - hi),
        Relation::Greater | Relation::AtLeast => (i_min, lo - rule.bound),
        Relation::Within => {
            let upper = rule.bound_upper.unwrap_or(f64::INFINITY);
            let (m_lo, m_hi) = (lo - rule.bound, upper - hi);
            if m_lo <= m_hi {
                (i_min, m_lo)
            } else {
                (i_max, m_hi)
            }
        }
    };
    let pass = match rule.relation {
        Relation::Less | Relation::Greater => margin > 0.0,
        _ => margin >= 0.0,
    };
    let label = rule
        .label
        .replace("{eps}", &p.eps_probe.to_string())
        .replace("{r}", &p.r_probe.to_string());
    let claim = match rule.bound_upper {
        Some(u) => format!("{label} in [{}, {u}]", rule.bound),
        None => format!("{label} {} {}", rule.relation, rule.bound),
    };
    LedgerCheck {
        name: rule.name,
        claim,
        relation: rule.relation,
        bound: rule.bound,
        bound_upper: rule.bound_upper,
        attained: values[worst][k],
        attained_min: lo,
        attained_max: hi,
        margin,
        worst_alpha: alphas[worst],
        pass,
    }
}

/// [`run_ledger_with`] at the default probes and grid, in parallel.
pub fn run_ledger() -> Result<LedgerReport> {
    run_ledger_with(&LedgerParams::default(), Execution::Parallel)
}

/// Evaluates the chain on [`LedgerParams::alphas`] and reduces it.
///
/// A failed inequality is reported in the result; solver and domain
/// failures are errors (the first one in grid order).
pub fn run_ledger_with(p: &LedgerParams, exec: Execution) -> Result<LedgerReport> {
    p.validate()?;
    let alphas = p.alphas();
    let cfg = RootSolveConfig::default();
    let rows = map_indexed(alphas.len(), exec, |i| evaluate(alphas[i], p, &cfg));
    let values = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let checks: Vec<LedgerCheck> = RULES
        .iter()
        .enumerate()
        .map(|(k, s)| reduce(s, &alphas, &values, k, p))
        .collect();
    Ok(LedgerReport {
        pass: checks.iter().all(|c| c.pass),
        checks,
        grid_points: alphas.len(),
        alpha_max: p.alpha_max,
        eps_probe: p.eps_probe,
        r_probe: p.r_probe,
    })
}
