//! Penta-valued decomposition obtained by pulling a saturation component out
//! of the tetra-valued one: truth, neutrality, saturation, ignorance, falsity.
//!
//! Saturation measures closeness to the fully contradictory-and-neutral
//! triple `S = (1,1,1)`; ignorance measures closeness to `W = (0,0,0)`.
//!
//! Closed forms, with `m = min(T, I, F)`:
//!
//! ```text
//! s = m
//! t = T - (min(T,I) + min(T,F)) / 2
//! n = I - (min(T,I) + min(I,F)) / 2
//! f = F - (min(F,I) + min(T,F)) / 2
//! w = 1 - max(T, I, F)
//! ```
//!
//! Equivalently, starting from the tetra-valued components
//! `β = (β_t, β_n, β_f)`, saturation is `3 · min β` and each of `t, n, f`
//! is `β_x - min β`; see [`decompose5s_via_beta`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::norms::TNormFamily;
use crate::tetra::{aggregate, decompose4};
use crate::types::{check_partition, clamp_residue, max3, min3, NeutrosophicTriple, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PentaSatVector {
    pub t: f64,
    pub n: f64,
    pub s: f64,
    pub w: f64,
    pub f: f64,
}

impl Partition for PentaSatVector {
    const LABELS: &'static [&'static str] = &["t", "n", "s", "w", "f"];

    fn components(&self) -> Vec<f64> {
        vec![self.t, self.n, self.s, self.w, self.f]
    }
}

impl PentaSatVector {
    pub const TRUE: PentaSatVector = PentaSatVector {
        t: 1.0,
        n: 0.0,
        s: 0.0,
        w: 0.0,
        f: 0.0,
    };
    pub const NEUTRAL: PentaSatVector = PentaSatVector {
        t: 0.0,
        n: 1.0,
        s: 0.0,
        w: 0.0,
        f: 0.0,
    };
    pub const SATURATED: PentaSatVector = PentaSatVector {
        t: 0.0,
        n: 0.0,
        s: 1.0,
        w: 0.0,
        f: 0.0,
    };
    pub const UNKNOWN: PentaSatVector = PentaSatVector {
        t: 0.0,
        n: 0.0,
        s: 0.0,
        w: 1.0,
        f: 0.0,
    };
    pub const FALSE: PentaSatVector = PentaSatVector {
        t: 0.0,
        n: 0.0,
        s: 0.0,
        w: 0.0,
        f: 1.0,
    };

    /// Validated construction from components in `(t, n, s, w, f)` order.
    pub fn new(t: f64, n: f64, s: f64, w: f64, f: f64) -> Result<Self> {
        let v = PentaSatVector { t, n, s, w, f };
        if check_partition(&v.components()) {
            Ok(v)
        } else {
            Err(Error::ConstraintViolation(format!(
                "not a partition of unity: {v:?}"
            )))
        }
    }

    pub fn indeterminacy(&self) -> f64 {
        indeterminacy5s(self)
    }

    pub fn negate(&self) -> Self {
        negate5s(self)
    }

    pub fn union(&self, other: &Self, family: TNormFamily) -> Self {
        union5s(self, other, family)
    }

    pub fn intersect(&self, other: &Self, family: TNormFamily) -> Self {
        intersect5s(self, other, family)
    }

    fn clamped(self) -> Self {
        PentaSatVector {
            t: clamp_residue(self.t),
            n: clamp_residue(self.n),
            s: clamp_residue(self.s),
            w: clamp_residue(self.w),
            f: clamp_residue(self.f),
        }
    }
}

pub fn decompose5s(q: NeutrosophicTriple) -> PentaSatVector {
    let (tt, ii, ff) = (q.t(), q.i(), q.f());
    let (ti, tf, fi) = (tt.min(ii), tt.min(ff), ff.min(ii));
    PentaSatVector {
        t: tt - (ti + tf) / 2.0,
        n: ii - (ti + fi) / 2.0,
        s: min3(tt, ii, ff),
        w: 1.0 - max3(tt, ii, ff),
        f: ff - (fi + tf) / 2.0,
    }
    .clamped()
}

/// The tetra-valued truth, neutrality and falsity `(β_t, β_n, β_f)`.
pub fn beta_components(q: NeutrosophicTriple) -> [f64; 3] {
    let v = decompose4(q);
    [v.t, v.n, v.f]
}

/// Saturation route: subtract the common floor `min β` from each of the
/// tetra-valued truth, neutrality and falsity, and collect three times that
/// floor as saturation. Agrees with [`decompose5s`] to rounding.
pub fn decompose5s_via_beta(q: NeutrosophicTriple) -> PentaSatVector {
    let [bt, bn, bf] = beta_components(q);
    let floor = min3(bt, bn, bf);
    PentaSatVector {
        t: bt - floor,
        n: bn - floor,
        s: 3.0 * floor,
        w: 1.0 - max3(q.t(), q.i(), q.f()),
        f: bf - floor,
    }
}

pub fn indeterminacy5s(v: &PentaSatVector) -> f64 {
    v.n + v.s + v.w
}

pub fn negate5s(v: &PentaSatVector) -> PentaSatVector {
    PentaSatVector {
        t: v.f,
        n: v.n,
        s: v.s,
        w: v.w,
        f: v.t,
    }
}

/// Neutrality is the remainder that closes the partition.
pub fn union5s(a: &PentaSatVector, b: &PentaSatVector, family: TNormFamily) -> PentaSatVector {
    let t = family.tconorm(a.t, b.t);
    let f = family.tnorm(a.f, b.f);
    let s = family.tconorm(aggregate(a.s, a.t), aggregate(b.s, b.t)) - t;
    let w = family.tnorm(aggregate(a.w, a.f), aggregate(b.w, b.f)) - f;
    PentaSatVector {
        t,
        n: 1.0 - t - f - s - w,
        s,
        w,
        f,
    }
    .clamped()
}

/// Neutrality is the remainder that closes the partition.
pub fn intersect5s(a: &PentaSatVector, b: &PentaSatVector, family: TNormFamily) -> PentaSatVector {
    let t = family.tnorm(a.t, b.t);
    let f = family.tconorm(a.f, b.f);
    let w = family.tnorm(aggregate(a.w, a.t), aggregate(b.w, b.t)) - t;
    let s = family.tconorm(aggregate(a.s, a.f), aggregate(b.s, b.f)) - f;
    PentaSatVector {
        t,
        n: 1.0 - t - f - s - w,
        s,
        w,
        f,
    }
    .clamped()
}
