//! Bracketed bisection shared by every threshold solve.
//!
//! All objectives in this crate are monotone on their brackets, so plain
//! bisection is used throughout. The sign change over the bracket is checked
//! before the first step of every solve; a failed check is an
//! [`Error::Bracket`], never a silent fallback.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::{Error, Result};

static BRACKETS_CHECKED: AtomicU64 = AtomicU64::new(0);
static BRACKETS_REJECTED: AtomicU64 = AtomicU64::new(0);

/// Process-wide tally of sign-change checks made before bisection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BracketStats {
    pub checked: u64,
    pub rejected: u64,
}

/// Sign-change checks performed so far in this process, and how many of
/// them found no sign change.
pub fn bracket_stats() -> BracketStats {
    BracketStats {
        checked: BRACKETS_CHECKED.load(Ordering::Relaxed),
        rejected: BRACKETS_REJECTED.load(Ordering::Relaxed),
    }
}

/// Bracket, tolerance and iteration cap for a 1-D root solve.
///
/// `bracket: None` selects the solver's own default bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootSolveConfig {
    pub bracket: Option<(f64, f64)>,
    pub rel_tol: f64,
    pub max_iter: usize,
    /// Upper-end doublings allowed when the initial bracket shows no sign
    /// change.
    pub max_expansions: usize,
}

impl Default for RootSolveConfig {
    fn default() -> Self {
        Self {
            bracket: None,
            rel_tol: 1e-12,
            max_iter: 200,
            max_expansions: 60,
        }
    }
}

impl RootSolveConfig {
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        Self {
            rel_tol,
            ..Self::default()
        }
    }

    pub fn with_bracket(self, lo: f64, hi: f64) -> Self {
        Self {
            bracket: Some((lo, hi)),
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::Config(format!(
                "rel_tol must be positive, got {}",
                self.rel_tol
            )));
        }
        if self.max_iter == 0 {
            return Err(Error::Config("max_iter must be at least 1".into()));
        }
        if let Some((lo, hi)) = self.bracket {
            if !(lo < hi && lo.is_finite() && hi.is_finite()) {
                return Err(Error::Config(format!(
                    "bracket [{lo}, {hi}] is not an interval"
                )));
            }
        }
        Ok(())
    }

    /// The configured bracket, or `default` when none was set.
    pub fn bracket_or(&self, default: (f64, f64)) -> (f64, f64) {
        self.bracket.unwrap_or(default)
    }
}

/// Outcome of a bisection, with the endpoint values that certified the
/// sign change.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub iterations: usize,
    /// Bracket actually bisected (after any expansion).
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

fn opposite(a: f64, b: f64) -> bool {
    (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0)
}

/// Bisection on `[lo, hi]`, which must already show a sign change.
pub fn bisect<F>(f: F, lo: f64, hi: f64, cfg: &RootSolveConfig) -> Result<Root>
where
    F: Fn(f64) -> Result<f64>,
{
    let f_lo = f(lo)?;
    let f_hi = f(hi)?;
    bisect_from(&f, lo, hi, f_lo, f_hi, cfg)
}

fn bisect_from<F>(
    f: &F,
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_hi: f64,
    cfg: &RootSolveConfig,
) -> Result<Root>
where
    F: Fn(f64) -> Result<f64>,
{
    cfg.validate()?;
    let done = |x: f64, iterations: usize| Root {
        x,
        iterations,
        lo,
        hi,
        f_lo,
        f_hi,
    };
    BRACKETS_CHECKED.fetch_add(1, Ordering::Relaxed);
    if f_lo == 0.0 {
        return Ok(done(lo, 0));
    }
    if f_hi == 0.0 {
        return Ok(done(hi, 0));
    }
    if !opposite(f_lo, f_hi) {
        BRACKETS_REJECTED.fetch_add(1, Ordering::Relaxed);
        return Err(Error::Bracket { lo, hi, f_lo, f_hi });
    }

    let (mut a, mut b, mut fa) = (lo, hi, f_lo);
    for it in 1..=cfg.max_iter {
        let mid = a + 0.5 * (b - a);
        if mid <= a || mid >= b {
            return Ok(done(mid, it));
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(done(mid, it));
        }
        if opposite(fa, fm) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
        if b - a <= cfg.rel_tol * (a + 0.5 * (b - a)).abs() {
            return Ok(done(a + 0.5 * (b - a), it));
        }
    }
    Err(Error::RootNonConvergence {
        max_iter: cfg.max_iter,
    })
}

/// Bisection after widening `[lo, hi]` upward: while `f(lo)` and `f(hi)`
/// share a sign the old `hi` becomes the new `lo` and `hi` doubles, at most
/// `cfg.max_expansions` times.
pub fn bisect_expanding<F>(f: F, lo: f64, hi: f64, cfg: &RootSolveConfig) -> Result<Root>
where
    F: Fn(f64) -> Result<f64>,
{
    cfg.validate()?;
    let (mut a, mut b) = (lo, hi);
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    let mut expansions = 0;
    while fa != 0.0 && fb != 0.0 && !opposite(fa, fb) {
        if expansions == cfg.max_expansions || !fb.is_finite() {
            BRACKETS_CHECKED.fetch_add(1, Ordering::Relaxed);
            BRACKETS_REJECTED.fetch_add(1, Ordering::Relaxed);
            return Err(Error::Bracket {
                lo: a,
                hi: b,
                f_lo: fa,
                f_hi: fb,
            });
        }
        a = b;
        fa = fb;
        b *= 2.0;
        fb = f(b)?;
        expansions += 1;
    }
    bisect_from(&f, a, b, fa, fb, cfg)
}
