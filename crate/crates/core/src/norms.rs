//! The Frank family of t-norms and their De Morgan dual t-conorms.
//!
//! For `s ∈ (0, ∞) \ {1}` the Frank t-norm is
//!
//! ```text
//! T_s(x, y) = log_s(1 + (s^x - 1)(s^y - 1) / (s - 1))
//! ```
//!
//! with the minimum (`s → 0`), the product (`s = 1`) and the Łukasiewicz
//! t-norm (`s → ∞`) as the limiting members. Every member satisfies
//! `T(x, y) + S(x, y) = x + y`, where `S(x, y) = 1 - T(1 - x, 1 - y)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A member of the Frank family. The conorm is always the De Morgan dual.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum TNormFamily {
    /// `min(x, y)`; the `s → 0` limit.
    Godel,
    /// `x · y`; `s = 1`.
    #[default]
    Product,
    /// `max(x + y - 1, 0)`; the `s → ∞` limit.
    Lukasiewicz,
    Frank(FrankParam),
}

/// A validated Frank parameter: finite, strictly positive, not 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrankParam {
    s: f64,
    ln_s: f64,
}

impl FrankParam {
    pub fn new(s: f64) -> Result<Self> {
        if !s.is_finite() || s < f64::MIN_POSITIVE || s == 1.0 {
            return Err(Error::InvalidParameter(format!(
                "Frank parameter must be a finite positive number other than 1, got {s}"
            )));
        }
        Ok(FrankParam { s, ln_s: s.ln() })
    }

    pub fn get(&self) -> f64 {
        self.s
    }
}

impl TNormFamily {
    pub fn frank(s: f64) -> Result<Self> {
        FrankParam::new(s).map(TNormFamily::Frank)
    }

    /// The five members used throughout the test suites.
    pub fn standard_members() -> [TNormFamily; 5] {
        [
            TNormFamily::Godel,
            TNormFamily::Product,
            TNormFamily::Lukasiewicz,
            TNormFamily::Frank(FrankParam::new(2.0).expect("valid")),
            TNormFamily::Frank(FrankParam::new(10.0).expect("valid")),
        ]
    }

    /// Conjunction `x ∧ y`.
    #[inline]
    pub fn tnorm(&self, x: f64, y: f64) -> f64 {
        debug_assert!(
            in_domain(x) && in_domain(y),
            "t-norm argument outside [0,1]: {x}, {y}"
        );
        match self {
            TNormFamily::Godel => x.min(y),
            TNormFamily::Product => x * y,
            TNormFamily::Lukasiewicz => {
                let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
                lukasiewicz(lo, hi)
            }
            TNormFamily::Frank(p) => frank_tnorm(p, x, y),
        }
    }

    /// Disjunction `x ∨ y = 1 - ((1 - x) ∧ (1 - y))`.
    #[inline]
    pub fn tconorm(&self, x: f64, y: f64) -> f64 {
        1.0 - self.tnorm(1.0 - x, 1.0 - y)
    }
}

/// `max(x + y - 1, 0)` for `x <= y`, written so that `y = 1` returns `x` exactly.
#[inline]
fn lukasiewicz(x: f64, y: f64) -> f64 {
    (x - (1.0 - y)).max(0.0)
}

#[inline]
fn in_domain(x: f64) -> bool {
    (-1e-9..=1.0 + 1e-9).contains(&x)
}

fn frank_tnorm(p: &FrankParam, x: f64, y: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    let y = y.clamp(0.0, 1.0);
    // Fixed argument order makes the evaluation exactly commutative.
    let (x, y) = if x <= y { (x, y) } else { (y, x) };
    if x == 0.0 {
        return 0.0;
    }
    let ln_s = p.ln_s;
    let raw = if ln_s > 0.0 {
        // log(1 + e^z) with z = ln(s^x - 1) + ln(s^y - 1) - ln(s - 1); no overflow for any finite s.
        let z = ln_expm1(x * ln_s) + ln_expm1(y * ln_s) - ln_expm1(ln_s);
        softplus(z) / ln_s
    } else if p.s >= 0.5 {
        let ratio = (x * ln_s).exp_m1() * (y * ln_s).exp_m1() / ln_s.exp_m1();
        ratio.ln_1p() / ln_s
    } else {
        // 1 + (s^x - 1)(s^y - 1)/(s - 1) = ((s^x - s) + s^y (1 - s^x)) / (1 - s)
        let px = (x * ln_s).exp();
        let py = (y * ln_s).exp();
        let num = (px - p.s) + py * (1.0 - px);
        (num.ln() - (-p.s).ln_1p()) / ln_s
    };
    // Every t-norm lies between the Łukasiewicz t-norm and the minimum.
    raw.clamp(lukasiewicz(x, y).min(x), x)
}

/// `ln(e^a - 1)` for `a > 0`.
#[inline]
fn ln_expm1(a: f64) -> f64 {
    if a < 30.0 {
        a.exp_m1().ln()
    } else {
        a + (-(-a).exp()).ln_1p()
    }
}

/// `ln(1 + e^z)`.
#[inline]
fn softplus(z: f64) -> f64 {
    if z > 0.0 {
        z + (-z).exp().ln_1p()
    } else {
        z.exp().ln_1p()
    }
}

impl fmt::Display for TNormFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TNormFamily::Godel => f.write_str("godel"),
            TNormFamily::Product => f.write_str("product"),
            TNormFamily::Lukasiewicz => f.write_str("lukasiewicz"),
            TNormFamily::Frank(p) => write!(f, "frank:{}", p.s),
        }
    }
}

impl FromStr for TNormFamily {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let lower = spec.trim().to_ascii_lowercase();
        match lower.as_str() {
            "godel" => Ok(TNormFamily::Godel),
            "product" => Ok(TNormFamily::Product),
            "lukasiewicz" => Ok(TNormFamily::Lukasiewicz),
            other => {
                let Some(param) = other.strip_prefix("frank:") else {
                    return Err(Error::UnknownFamily(spec.to_string()));
                };
                let s: f64 = param
                    .trim()
                    .parse()
                    .map_err(|_| Error::UnknownFamily(spec.to_string()))?;
                TNormFamily::frank(s)
            }
        }
    }
}
