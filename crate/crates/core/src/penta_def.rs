//! Penta-valued decomposition driven by definedness: truth, neutrality,
//! falsity, over-definedness, under-definedness.
//!
//! With `λ = (T + I + F) / 3`, `ω = ω(λ)`, `ω⁺ = max(ω, 0)`, `ω⁻ = max(-ω, 0)`
//! and `d = 3λ + ω⁻`:
//!
//! ```text
//! t = (1 - ω⁺) T / d     n = (1 - ω⁺) I / d     f = (1 - ω⁺) F / d
//! o = ω⁺                 u = ω⁻ / d
//! ```
//!
//! `d` is never zero: at `λ = 0` every profile gives `ω = -1`, so `d = 1`.
//! Only one of `o` and `u` is nonzero for a decomposed triple.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::measures::{definedness, mean_component, DefinednessProfile};
use crate::norms::TNormFamily;
use crate::tetra::aggregate;
use crate::types::{check_partition, clamp_residue, NeutrosophicTriple, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PentaDefVector {
    pub t: f64,
    pub n: f64,
    pub f: f64,
    pub o: f64,
    pub u: f64,
}

impl Partition for PentaDefVector {
    const LABELS: &'static [&'static str] = &["t", "n", "f", "o", "u"];

    fn components(&self) -> Vec<f64> {
        vec![self.t, self.n, self.f, self.o, self.u]
    }
}

impl PentaDefVector {
    pub const TRUE: PentaDefVector = PentaDefVector {
        t: 1.0,
        n: 0.0,
        f: 0.0,
        o: 0.0,
        u: 0.0,
    };
    pub const NEUTRAL: PentaDefVector = PentaDefVector {
        t: 0.0,
        n: 1.0,
        f: 0.0,
        o: 0.0,
        u: 0.0,
    };
    pub const FALSE: PentaDefVector = PentaDefVector {
        t: 0.0,
        n: 0.0,
        f: 1.0,
        o: 0.0,
        u: 0.0,
    };
    pub const OVER_DEFINED: PentaDefVector = PentaDefVector {
        t: 0.0,
        n: 0.0,
        f: 0.0,
        o: 1.0,
        u: 0.0,
    };
    pub const UNDER_DEFINED: PentaDefVector = PentaDefVector {
        t: 0.0,
        n: 0.0,
        f: 0.0,
        o: 0.0,
        u: 1.0,
    };

    /// Validated construction from components in `(t, n, f, o, u)` order.
    pub fn new(t: f64, n: f64, f: f64, o: f64, u: f64) -> Result<Self> {
        let v = PentaDefVector { t, n, f, o, u };
        if check_partition(&v.components()) {
            Ok(v)
        } else {
            Err(Error::ConstraintViolation(format!(
                "not a partition of unity: {v:?}"
            )))
        }
    }

    pub fn indeterminacy(&self) -> f64 {
        indeterminacy5d(self)
    }

    pub fn negate(&self) -> Self {
        negate5d(self)
    }

    pub fn union(&self, other: &Self, family: TNormFamily) -> Self {
        union5d(self, other, family)
    }

    pub fn intersect(&self, other: &Self, family: TNormFamily) -> Self {
        intersect5d(self, other, family)
    }

    fn clamped(self) -> Self {
        PentaDefVector {
            t: clamp_residue(self.t),
            n: clamp_residue(self.n),
            f: clamp_residue(self.f),
            o: clamp_residue(self.o),
            u: clamp_residue(self.u),
        }
    }
}

pub fn decompose5d(q: NeutrosophicTriple, profile: DefinednessProfile) -> PentaDefVector {
    let lambda = mean_component(q);
    let omega = definedness(lambda, profile);
    let over = omega.max(0.0);
    let under = (-omega).max(0.0);
    let denom = 3.0 * lambda + under;
    let scale = (1.0 - over) / denom;
    PentaDefVector {
        t: scale * q.t(),
        n: scale * q.i(),
        f: scale * q.f(),
        o: over,
        u: under / denom,
    }
    .clamped()
}

pub fn indeterminacy5d(v: &PentaDefVector) -> f64 {
    v.n + v.o + v.u
}

pub fn negate5d(v: &PentaDefVector) -> PentaDefVector {
    PentaDefVector {
        t: v.f,
        n: v.n,
        f: v.t,
        o: v.o,
        u: v.u,
    }
}

/// Neutrality is the remainder that closes the partition.
pub fn union5d(a: &PentaDefVector, b: &PentaDefVector, family: TNormFamily) -> PentaDefVector {
    let t = family.tconorm(a.t, b.t);
    let f = family.tnorm(a.f, b.f);
    let o = family.tnorm(aggregate(a.o, a.f), aggregate(b.o, b.f)) - f;
    let u = family.tnorm(aggregate(a.u, a.f), aggregate(b.u, b.f)) - f;
    PentaDefVector {
        t,
        n: 1.0 - t - f - o - u,
        f,
        o,
        u,
    }
    .clamped()
}

/// Neutrality is the remainder that closes the partition.
pub fn intersect5d(a: &PentaDefVector, b: &PentaDefVector, family: TNormFamily) -> PentaDefVector {
    let t = family.tnorm(a.t, b.t);
    let f = family.tconorm(a.f, b.f);
    let o = family.tnorm(aggregate(a.o, a.t), aggregate(b.o, b.t)) - t;
    let u = family.tnorm(aggregate(a.u, a.t), aggregate(b.u, b.t)) - t;
    PentaDefVector {
        t,
        n: 1.0 - t - f - o - u,
        f,
        o,
        u,
    }
    .clamped()
}
