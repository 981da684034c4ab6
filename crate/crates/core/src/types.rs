//! Value types shared by every representation: degrees in the unit interval,
//! neutrosophic triples, bifuzzy pairs, and the partition-of-unity contract.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::error::{Error, Result};

/// Inputs this close outside [0, 1] are snapped onto the bound.
pub const SNAP_TOL: f64 = 1e-12;

/// Tolerance for partition sums and component lower bounds.
pub const PARTITION_TOL: f64 = 1e-9;

/// Negative rounding residue at or above `-CLAMP_TOL` is clamped to zero on output.
pub const CLAMP_TOL: f64 = 1e-12;

static CLAMP_EVENTS: AtomicU64 = AtomicU64::new(0);

/// Number of output components clamped from `[-1e-12, 0)` to zero since process start.
pub fn clamp_events() -> u64 {
    CLAMP_EVENTS.load(Ordering::Relaxed)
}

/// Clamps floating-point cancellation residue to zero. Anything more negative
/// than `-CLAMP_TOL` is returned unchanged so partition checks can flag it.
#[inline]
pub(crate) fn clamp_residue(x: f64) -> f64 {
    if (-CLAMP_TOL..0.0).contains(&x) {
        CLAMP_EVENTS.fetch_add(1, Ordering::Relaxed);
        0.0
    } else {
        x
    }
}

/// A degree in the closed unit interval.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize)]
#[serde(transparent)]
pub struct UnitDegree(f64);

impl UnitDegree {
    pub const ZERO: UnitDegree = UnitDegree(0.0);
    pub const ONE: UnitDegree = UnitDegree(1.0);

    /// Validates `value`; values within [`SNAP_TOL`] of a bound are snapped to it.
    pub fn new(value: f64) -> Result<Self> {
        Self::named("value", value)
    }

    pub(crate) fn named(component: &'static str, value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(UnitDegree(value))
        } else if (-SNAP_TOL..0.0).contains(&value) {
            Ok(UnitDegree(0.0))
        } else if value > 1.0 && value <= 1.0 + SNAP_TOL {
            Ok(UnitDegree(1.0))
        } else {
            Err(Error::OutOfRange { component, value })
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn complement(self) -> UnitDegree {
        UnitDegree(1.0 - self.0)
    }
}

impl From<UnitDegree> for f64 {
    fn from(d: UnitDegree) -> f64 {
        d.0
    }
}

impl TryFrom<f64> for UnitDegree {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        UnitDegree::new(value)
    }
}

impl fmt::Display for UnitDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Degrees of truth, indeterminacy (neutrality) and falsity, each independently
/// in [0, 1]. The sum is unconstrained, so any point of the unit cube is valid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NeutrosophicTriple {
    #[serde(rename = "t")]
    truth: UnitDegree,
    #[serde(rename = "i")]
    indeterminacy: UnitDegree,
    #[serde(rename = "f")]
    falsity: UnitDegree,
}

impl NeutrosophicTriple {
    pub fn new(t: f64, i: f64, f: f64) -> Result<Self> {
        make_triple(t, i, f)
    }

    pub fn from_degrees(truth: UnitDegree, indeterminacy: UnitDegree, falsity: UnitDegree) -> Self {
        NeutrosophicTriple {
            truth,
            indeterminacy,
            falsity,
        }
    }

    #[inline]
    pub fn t(&self) -> f64 {
        self.truth.0
    }

    #[inline]
    pub fn i(&self) -> f64 {
        self.indeterminacy.0
    }

    #[inline]
    pub fn f(&self) -> f64 {
        self.falsity.0
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.t(), self.i(), self.f()]
    }

    /// Exchanges truth and falsity.
    pub fn swap_tf(self) -> Self {
        swap_tf(self)
    }
}

impl fmt::Display for NeutrosophicTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t(), self.i(), self.f())
    }
}

pub fn make_triple(t: f64, i: f64, f: f64) -> Result<NeutrosophicTriple> {
    Ok(NeutrosophicTriple {
        truth: UnitDegree::named("T", t)?,
        indeterminacy: UnitDegree::named("I", i)?,
        falsity: UnitDegree::named("F", f)?,
    })
}

/// Mirror image `(F, I, T)`. An involution.
pub fn swap_tf(q: NeutrosophicTriple) -> NeutrosophicTriple {
    NeutrosophicTriple {
        truth: q.falsity,
        indeterminacy: q.indeterminacy,
        falsity: q.truth,
    }
}

/// Membership and non-membership degrees; their sum ranges over [0, 2].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BifuzzyPair {
    mu: UnitDegree,
    nu: UnitDegree,
}

impl BifuzzyPair {
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        Ok(BifuzzyPair {
            mu: UnitDegree::named("mu", mu)?,
            nu: UnitDegree::named("nu", nu)?,
        })
    }

    #[inline]
    pub fn mu(&self) -> f64 {
        self.mu.0
    }

    #[inline]
    pub fn nu(&self) -> f64 {
        self.nu.0
    }

    pub fn swapped(self) -> Self {
        BifuzzyPair {
            mu: self.nu,
            nu: self.mu,
        }
    }
}

/// A vector of named feature degrees forming a partition of unity.
pub trait Partition {
    /// Component names in the order returned by [`Partition::components`].
    const LABELS: &'static [&'static str];

    fn components(&self) -> Vec<f64>;

    fn component_sum(&self) -> f64 {
        self.components().iter().sum()
    }

    fn is_partition(&self) -> bool {
        check_partition(&self.components())
    }
}

/// True iff every component is at least `-1e-9` and the sum is within `1e-9` of one.
pub fn check_partition(components: &[f64]) -> bool {
    check_partition_tol(components, PARTITION_TOL)
}

pub fn check_partition_tol(components: &[f64], tol: f64) -> bool {
    components.iter().all(|&c| c >= -tol && c <= 1.0 + tol)
        && (components.iter().sum::<f64>() - 1.0).abs() <= tol
}

#[inline]
pub(crate) fn min3(a: f64, b: f64, c: f64) -> f64 {
    a.min(b).min(c)
}

#[inline]
pub(crate) fn max3(a: f64, b: f64, c: f64) -> f64 {
    a.max(b).max(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crisp_and_interior_triples_construct() {
        let q = make_triple(1.0, 0.0, 0.0).unwrap();
        assert_eq!(q.as_array(), [1.0, 0.0, 0.0]);
        let q = make_triple(0.6, 0.5, 0.4).unwrap();
        assert_eq!(q.as_array(), [0.6, 0.5, 0.4]);
    }

    #[test]
    fn out_of_range_is_rejected() {
        match make_triple(1.2, 0.0, 0.0) {
            Err(Error::OutOfRange { component, value }) => {
                assert_eq!(component, "T");
                assert_eq!(value, 1.2);
            }
            other => panic!("expected OutOfRange, got {other:?}"),
        }
        assert!(make_triple(0.0, -1e-6, 0.0).is_err());
        assert!(make_triple(0.0, 0.0, f64::NAN).is_err());
        assert!(make_triple(0.0, 0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn near_bound_values_snap() {
        let q = make_triple(1.0 + 5e-13, -5e-13, 0.5).unwrap();
        assert_eq!(q.t(), 1.0);
        assert_eq!(q.i(), 0.0);
        assert!(make_triple(1.0 + 2e-12, 0.0, 0.0).is_err());
    }

    #[test]
    fn swap_examples() {
        let q = make_triple(1.0, 0.0, 0.0).unwrap();
        assert_eq!(swap_tf(q).as_array(), [0.0, 0.0, 1.0]);
        let q = make_triple(0.6, 0.5, 0.4).unwrap();
        assert_eq!(swap_tf(q).as_array(), [0.4, 0.5, 0.6]);
        let q = make_triple(0.3, 0.7, 0.3).unwrap();
        assert_eq!(swap_tf(q), q);
    }

    #[test]
    fn partition_predicate() {
        assert!(check_partition(&[1.0, 0.0, 0.0, 0.0]));
        assert!(check_partition(&[0.25, 0.25, 0.25, 0.25]));
        assert!(!check_partition(&[0.5, 0.5, 0.5, 0.5]));
        assert!(!check_partition(&[1.1, -0.1]));
        assert!(check_partition(&[1.0 + 5e-10, -5e-10]));
    }

    #[test]
    fn residue_clamp_only_touches_tiny_negatives() {
        let before = clamp_events();
        assert_eq!(clamp_residue(-1e-15), 0.0);
        assert!(clamp_events() > before);
        assert_eq!(clamp_residue(-1e-6), -1e-6);
        assert_eq!(clamp_residue(0.3), 0.3);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn construction_is_total_on_the_cube(t in 0.0..=1.0f64, i in 0.0..=1.0f64, f in 0.0..=1.0f64) {
                prop_assert!(make_triple(t, i, f).is_ok());
            }

            #[test]
            fn construction_fails_outside(excess in 1e-9..10.0f64, which in 0usize..3, negative: bool) {
                let bad = if negative { -excess } else { 1.0 + excess };
                let mut v = [0.5; 3];
                v[which] = bad;
                prop_assert!(make_triple(v[0], v[1], v[2]).is_err());
            }

            #[test]
            fn swap_is_an_involution(t in 0.0..=1.0f64, i in 0.0..=1.0f64, f in 0.0..=1.0f64) {
                let q = make_triple(t, i, f).unwrap();
                prop_assert_eq!(swap_tf(swap_tf(q)), q);
            }
        }
    }
}
