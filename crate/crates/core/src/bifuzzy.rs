//! Multi-valued readings of fuzzy, intuitionistic and bifuzzy information.
//!
//! These are the two-component ancestors of the neutrosophic decompositions
//! and are used as reduction oracles for them (e.g. the tetra-valued
//! decomposition with `I = 0` coincides with [`bifuzzy3`]).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::types::{clamp_residue, BifuzzyPair, Partition, UnitDegree};

/// Truth, ambiguity, falsity of a fuzzy degree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Fuzzy3Vector {
    pub t: f64,
    pub v: f64,
    pub f: f64,
}

/// Truth, ambiguity, under-definedness, falsity of an intuitionistic pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Ifs4Vector {
    pub t: f64,
    pub v: f64,
    pub u: f64,
    pub f: f64,
}

/// Truth, ignorance, falsity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bifuzzy3Vector {
    pub t: f64,
    pub w: f64,
    pub f: f64,
}

/// Truth, over-definedness, under-definedness, falsity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bifuzzy4DefVector {
    pub t: f64,
    pub o: f64,
    pub u: f64,
    pub f: f64,
}

/// Truth, contradiction, ignorance, falsity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bifuzzy4IgnVector {
    pub t: f64,
    pub c: f64,
    pub w: f64,
    pub f: f64,
}

/// Truth, over-definedness, ambiguity, under-definedness, falsity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bifuzzy5Vector {
    pub t: f64,
    pub o: f64,
    pub v: f64,
    pub u: f64,
    pub f: f64,
}

macro_rules! impl_partition {
    ($ty:ty, [$($field:ident),+]) => {
        impl Partition for $ty {
            const LABELS: &'static [&'static str] = &[$(stringify!($field)),+];

            fn components(&self) -> Vec<f64> {
                vec![$(self.$field),+]
            }
        }
    };
}

impl_partition!(Fuzzy3Vector, [t, v, f]);
impl_partition!(Ifs4Vector, [t, v, u, f]);
impl_partition!(Bifuzzy3Vector, [t, w, f]);
impl_partition!(Bifuzzy4DefVector, [t, o, u, f]);
impl_partition!(Bifuzzy4IgnVector, [t, c, w, f]);
impl_partition!(Bifuzzy5Vector, [t, o, v, u, f]);

pub fn fuzzy3(mu: UnitDegree) -> Fuzzy3Vector {
    let mu = mu.get();
    let d = 2.0 * mu - 1.0;
    Fuzzy3Vector {
        t: d.max(0.0),
        v: clamp_residue(1.0 - d.abs()),
        f: (-d).max(0.0),
    }
}

/// Requires the intuitionistic constraint `μ + ν ≤ 1`.
pub fn ifs4(p: BifuzzyPair) -> Result<Ifs4Vector> {
    let (mu, nu) = (p.mu(), p.nu());
    if mu + nu > 1.0 + 1e-12 {
        return Err(Error::ConstraintViolation(format!(
            "intuitionistic pair needs mu + nu <= 1, got {mu} + {nu} = {}",
            mu + nu
        )));
    }
    Ok(Ifs4Vector {
        t: (mu - nu).max(0.0),
        v: 2.0 * mu.min(nu),
        u: (1.0 - (mu + nu)).max(0.0),
        f: (nu - mu).max(0.0),
    })
}

pub fn bifuzzy3(p: BifuzzyPair) -> Bifuzzy3Vector {
    let (mu, nu) = (p.mu(), p.nu());
    let half_overlap = mu.min(nu) / 2.0;
    Bifuzzy3Vector {
        t: mu - half_overlap,
        w: 1.0 - mu.max(nu),
        f: nu - half_overlap,
    }
}

pub fn bifuzzy4_def(p: BifuzzyPair) -> Bifuzzy4DefVector {
    let (mu, nu) = (p.mu(), p.nu());
    Bifuzzy4DefVector {
        t: mu.min(1.0 - nu),
        o: (mu + nu - 1.0).max(0.0),
        u: (1.0 - (mu + nu)).max(0.0),
        f: (1.0 - mu).min(nu),
    }
}

pub fn bifuzzy4_ign(p: BifuzzyPair) -> Bifuzzy4IgnVector {
    let (mu, nu) = (p.mu(), p.nu());
    Bifuzzy4IgnVector {
        t: (mu - nu).max(0.0),
        c: mu.min(nu),
        w: 1.0 - mu.max(nu),
        f: (nu - mu).max(0.0),
    }
}

pub fn bifuzzy5(p: BifuzzyPair) -> Bifuzzy5Vector {
    let (mu, nu) = (p.mu(), p.nu());
    Bifuzzy5Vector {
        t: (mu - nu).max(0.0),
        o: (mu + nu - 1.0).max(0.0),
        v: clamp_residue(1.0 - (mu - nu).abs() - (mu + nu - 1.0).abs()),
        u: (1.0 - (mu + nu)).max(0.0),
        f: (nu - mu).max(0.0),
    }
}
