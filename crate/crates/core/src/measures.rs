//! Scalar features of a triple: net truth, mean component, definedness,
//! neutrosophic score and the two crisp-distance entropies.

use std::cmp::Ordering;
use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::types::NeutrosophicTriple;

/// Scores closer than this compare as equal.
pub const SCORE_TIE_TOL: f64 = 1e-12;

/// Increasing map `ω: [0,1] → [-1,1]` with `ω(0) = -1`, `ω(1/3) = 0`, `ω(1) = 1`.
///
/// Positive values mean the triple is over-defined (inconsistent), zero means
/// complete, negative means under-defined (incomplete).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DefinednessProfile {
    /// `(3λ - 1) / (1 + λ)`
    #[default]
    Rational,
    /// `2 sin(λπ/2) - 1`
    Sine,
    /// `(7λ - 3λ²) / 2 - 1`
    Quadratic,
    /// `(9λ - 3 - |3λ - 1|) / 4`
    PiecewiseLinear,
    /// `(√(2λ) - √(1-λ)) / (√(2λ) + √(1-λ))`
    SquareRoot,
}

impl DefinednessProfile {
    pub const ALL: [DefinednessProfile; 5] = [
        DefinednessProfile::Rational,
        DefinednessProfile::Sine,
        DefinednessProfile::Quadratic,
        DefinednessProfile::PiecewiseLinear,
        DefinednessProfile::SquareRoot,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DefinednessProfile::Rational => "rational",
            DefinednessProfile::Sine => "sine",
            DefinednessProfile::Quadratic => "quadratic",
            DefinednessProfile::PiecewiseLinear => "piecewise",
            DefinednessProfile::SquareRoot => "sqrt",
        }
    }

    pub fn eval(&self, lambda: f64) -> f64 {
        definedness(lambda, *self)
    }
}

impl fmt::Display for DefinednessProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DefinednessProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        DefinednessProfile::ALL
            .into_iter()
            .find(|p| p.name() == lower)
            .ok_or_else(|| Error::UnknownProfile(s.to_string()))
    }
}

/// All scalar features of one triple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalarReport {
    pub tau: f64,
    pub lambda: f64,
    pub omega: f64,
    pub eta: f64,
    pub entropy_c: f64,
    pub entropy_r: f64,
}

impl ScalarReport {
    pub fn of(q: NeutrosophicTriple, profile: DefinednessProfile) -> Self {
        let lambda = mean_component(q);
        let omega = definedness(lambda, profile);
        let tau = net_truth(q);
        ScalarReport {
            tau,
            lambda,
            omega,
            eta: tau / (1.0 + omega.abs()),
            entropy_c: entropy_czekanowski(q),
            entropy_r: entropy_ruzicka(q),
        }
    }
}

/// `τ = (T - F) / (1 + I)`.
pub fn net_truth(q: NeutrosophicTriple) -> f64 {
    (q.t() - q.f()) / (1.0 + q.i())
}

/// `λ = (T + I + F) / 3`.
pub fn mean_component(q: NeutrosophicTriple) -> f64 {
    (q.t() + q.i() + q.f()) / 3.0
}

pub fn definedness(lambda: f64, profile: DefinednessProfile) -> f64 {
    debug_assert!(
        (0.0..=1.0).contains(&lambda),
        "lambda outside [0,1]: {lambda}"
    );
    match profile {
        DefinednessProfile::Rational => (3.0 * lambda - 1.0) / (1.0 + lambda),
        DefinednessProfile::Sine => 2.0 * (lambda * FRAC_PI_2).sin() - 1.0,
        DefinednessProfile::Quadratic => (7.0 * lambda - 3.0 * lambda * lambda) / 2.0 - 1.0,
        DefinednessProfile::PiecewiseLinear => {
            (9.0 * lambda - 3.0 - (3.0 * lambda - 1.0).abs()) / 4.0
        }
        DefinednessProfile::SquareRoot => {
            let a = (2.0 * lambda).sqrt();
            let b = (1.0 - lambda).sqrt();
            (a - b) / (a + b)
        }
    }
}

/// Neutrosophic score `η = τ / (1 + |ω(λ)|)`.
pub fn score(q: NeutrosophicTriple, profile: DefinednessProfile) -> f64 {
    let omega = definedness(mean_component(q), profile);
    net_truth(q) / (1.0 + omega.abs())
}

/// Orders triples by score; scores within [`SCORE_TIE_TOL`] are equal.
pub fn compare(
    a: NeutrosophicTriple,
    b: NeutrosophicTriple,
    profile: DefinednessProfile,
) -> Ordering {
    compare_scores(score(a, profile), score(b, profile))
}

pub(crate) fn compare_scores(a: f64, b: f64) -> Ordering {
    if (a - b).abs() <= SCORE_TIE_TOL {
        Ordering::Equal
    } else if a > b {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// L1 distances from `V = (T - F, T + I + F - 1, I)` to the images of the
/// crisp-true `(1, 0, 0)` and crisp-false `(0, 0, 1)` triples.
pub fn crisp_distances(q: NeutrosophicTriple) -> (f64, f64) {
    let (t, i, f) = (q.t(), q.i(), q.f());
    let excess = (t + i + f - 1.0).abs();
    let d_true = (t - f - 1.0).abs() + excess + i;
    let d_false = (t - f + 1.0).abs() + excess + i;
    (d_true, d_false)
}

/// Czekanowski similarity of the crisp distances:
/// `E_C = 1 - |T - F| / (1 + I + |T + I + F - 1|)`.
pub fn entropy_czekanowski(q: NeutrosophicTriple) -> f64 {
    let (t, i, f) = (q.t(), q.i(), q.f());
    1.0 - (t - f).abs() / (1.0 + i + (t + i + f - 1.0).abs())
}

/// Ruzicka similarity of the crisp distances:
/// `E_R = (1 - |T - F| + I + |T + I + F - 1|) / (1 + |T - F| + I + |T + I + F - 1|)`.
pub fn entropy_ruzicka(q: NeutrosophicTriple) -> f64 {
    let (t, i, f) = (q.t(), q.i(), q.f());
    let spread = i + (t + i + f - 1.0).abs();
    let gap = (t - f).abs();
    (1.0 - gap + spread) / (1.0 + gap + spread)
}
