//! Tetra-valued decomposition: truth, neutrality, ignorance, falsity.
//!
//! The unit cube of triples is compressed onto the tetrahedron with vertices
//! `T = (1,0,0)`, `N = (0,1,0)`, `F = (0,0,1)` and `W = (0,0,0)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::norms::TNormFamily;
use crate::types::{check_partition, clamp_residue, max3, min3, NeutrosophicTriple, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TetraVector {
    pub t: f64,
    pub n: f64,
    pub w: f64,
    pub f: f64,
}

impl Partition for TetraVector {
    const LABELS: &'static [&'static str] = &["t", "n", "w", "f"];

    fn components(&self) -> Vec<f64> {
        vec![self.t, self.n, self.w, self.f]
    }
}

impl TetraVector {
    pub const TRUE: TetraVector = TetraVector {
        t: 1.0,
        n: 0.0,
        w: 0.0,
        f: 0.0,
    };
    pub const NEUTRAL: TetraVector = TetraVector {
        t: 0.0,
        n: 1.0,
        w: 0.0,
        f: 0.0,
    };
    pub const UNKNOWN: TetraVector = TetraVector {
        t: 0.0,
        n: 0.0,
        w: 1.0,
        f: 0.0,
    };
    pub const FALSE: TetraVector = TetraVector {
        t: 0.0,
        n: 0.0,
        w: 0.0,
        f: 1.0,
    };

    /// Validated construction from components in `(t, n, w, f)` order.
    pub fn new(t: f64, n: f64, w: f64, f: f64) -> Result<Self> {
        let v = TetraVector { t, n, w, f };
        if check_partition(&v.components()) {
            Ok(v)
        } else {
            Err(Error::ConstraintViolation(format!(
                "not a partition of unity: {v:?}"
            )))
        }
    }

    /// Neutrality plus ignorance.
    pub fn indeterminacy(&self) -> f64 {
        indeterminacy4(self)
    }

    pub fn negate(&self) -> Self {
        negate4(self)
    }

    pub fn union(&self, other: &Self, family: TNormFamily) -> Self {
        union4(self, other, family)
    }

    pub fn intersect(&self, other: &Self, family: TNormFamily) -> Self {
        intersect4(self, other, family)
    }

    fn clamped(self) -> Self {
        TetraVector {
            t: clamp_residue(self.t),
            n: clamp_residue(self.n),
            w: clamp_residue(self.w),
            f: clamp_residue(self.f),
        }
    }
}

pub fn decompose4(q: NeutrosophicTriple) -> TetraVector {
    let (tt, ii, ff) = (q.t(), q.i(), q.f());
    let all = min3(tt, ii, ff) / 3.0;
    let (ti, tf, fi) = (tt.min(ii), tt.min(ff), ff.min(ii));
    TetraVector {
        t: tt - (ti + tf) / 2.0 + all,
        n: ii - (ti + fi) / 2.0 + all,
        w: 1.0 - max3(tt, ii, ff),
        f: ff - (fi + tf) / 2.0 + all,
    }
    .clamped()
}

pub fn indeterminacy4(v: &TetraVector) -> f64 {
    v.n + v.w
}

pub fn negate4(v: &TetraVector) -> TetraVector {
    TetraVector {
        t: v.f,
        n: v.n,
        w: v.w,
        f: v.t,
    }
}

pub fn union4(a: &TetraVector, b: &TetraVector, family: TNormFamily) -> TetraVector {
    let t = family.tconorm(a.t, b.t);
    let f = family.tnorm(a.f, b.f);
    let nt = family.tconorm(aggregate(a.n, a.t), aggregate(b.n, b.t));
    let wf = family.tnorm(aggregate(a.w, a.f), aggregate(b.w, b.f));
    TetraVector {
        t,
        n: nt - t,
        w: wf - f,
        f,
    }
    .clamped()
}

pub fn intersect4(a: &TetraVector, b: &TetraVector, family: TNormFamily) -> TetraVector {
    let t = family.tnorm(a.t, b.t);
    let f = family.tconorm(a.f, b.f);
    let wt = family.tnorm(aggregate(a.w, a.t), aggregate(b.w, b.t));
    let nf = family.tconorm(aggregate(a.n, a.f), aggregate(b.n, b.f));
    TetraVector {
        t,
        n: nf - f,
        w: wt - t,
        f,
    }
    .clamped()
}

/// Sum of two components of one partition; at most one by the partition invariant.
#[inline]
pub(crate) fn aggregate(x: f64, y: f64) -> f64 {
    let s = x + y;
    debug_assert!(s <= 1.0 + 1e-9, "aggregate {x} + {y} exceeds 1");
    s
}
