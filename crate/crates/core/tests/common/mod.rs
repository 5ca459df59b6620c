#![allow(dead_code, clippy::excessive_precision)]

use std::f64::consts::PI;
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::{Command, Output};

use gauss_quad::GaussLegendre;
use rieszdrop::splitting::disk_energy;
use rieszdrop::Alpha;

pub fn al(a: f64) -> Alpha {
    Alpha::new(a).unwrap()
}

pub fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Reference values from extended-precision (40-digit) runs.
pub mod frozen {
    pub const M_C1_AT_0: f64 = 2.050719030045191;
    pub const M_2_AT_1E4: f64 = 2.051736725394743715950955458;
    pub const R_0_AT_1E4: f64 = 0.80813865366006609;

    /// Values at α = 0.034, ε = 0.846, R = 0.945.
    pub const ALPHA: f64 = 0.034;
    pub const R_C1: f64 = 0.80683522371760354;
    pub const M_C1: f64 = 2.045123656183147;
    pub const RHO_C1: f64 = 4.556976127940304;
    pub const RHO0: f64 = 4.750434083258350;
    pub const C0: f64 = 0.0987994091029434;
    pub const C1: f64 = 3.0120040454765123;
    pub const C2: f64 = 3.1959233505491284;
    pub const C3: f64 = 0.5253099316515306;
    pub const F1: f64 = -0.0702215103890507;
    pub const F2: f64 = 0.5988927529322457;
    pub const M_2: f64 = 2.407924678391071;
    pub const R_0: f64 = 0.8754805710681434;
    pub const EPS_0: f64 = 1.953091966387657;
    pub const EPS_1: f64 = 0.8928611592516537;
    pub const M_EPS0: f64 = 4.933859216496246;
    pub const M_EPS1: f64 = 2.910469433544532;

    pub const ALPHA0: f64 = 0.04273433628264671;

    /// vB(1 - h) - vB(1 + h) at h = 1e-6.
    pub const GAP_ALPHA_1_0: f64 = 5.957980839858686e-5;
    pub const GAP_ALPHA_1_5: f64 = 0.02096629387732205;
}

/// `∫_B ∫_B |x - y|^(-α)` by polar Gauss–Legendre quadrature, independent
/// of any closed form.
///
/// From a point at radius `r` the disk is swept by rays; the ray at angle
/// `φ` to the outward radius has length
/// `L = -r cos φ + √(1 - r² sin² φ)` and contributes `L^(2-α)/(2-α)`. The
/// `√(1 - r)` edge behaviour is removed with `r = 1 - s²`, and the kink of
/// `L` at `r = 1`, `φ = π/2` is split off.
pub fn v0_quadrature(alpha: f64, nodes: usize) -> f64 {
    let gl = GaussLegendre::new(NonZeroUsize::new(nodes).unwrap());
    let inner = |r: f64| {
        let ray = |phi: f64| {
            let (s, c) = phi.sin_cos();
            let l = -r * c + (1.0 - r * r * s * s).max(0.0).sqrt();
            l.powf(2.0 - alpha) / (2.0 - alpha)
        };
        2.0 * (gl.integrate(0.0, PI / 2.0, ray) + gl.integrate(PI / 2.0, PI, ray))
    };
    gl.integrate(0.0, 1.0, |s| {
        let r = 1.0 - s * s;
        2.0 * PI * r * inner(r) * 2.0 * s
    })
}

/// `min_{n ≤ n_max} n E₁(R/√n)/(πR²)` by scanning every `n`.
pub fn brute_envelope(r: f64, alpha: Alpha, n_max: u64) -> (f64, u64) {
    let mut best = (f64::INFINITY, 0);
    for n in 1..=n_max {
        let rn = r / (n as f64).sqrt();
        let rho = n as f64 * disk_energy(rn, alpha).unwrap() / (PI * r * r);
        if rho < best.0 {
            best = (rho, n);
        }
    }
    best
}

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rieszdrop"))
}

pub fn run(args: &[&str]) -> Output {
    bin()
        .env_remove("RIESZDROP_THREADS")
        .args(args)
        .output()
        .unwrap()
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

pub fn schema_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(format!("{name}.schema.json"))
}

/// Validates `doc` against a shipped schema, panicking with every error.
pub fn assert_schema(name: &str, doc: &serde_json::Value) {
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path(name)).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

/// Header and rows of a CSV table of numbers (`nan` allowed).
pub fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header = lines
        .next()
        .unwrap()
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .map(|l| l.split(',').map(|f| f.parse::<f64>().unwrap()).collect())
        .collect();
    (header, rows)
}
