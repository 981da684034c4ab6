//! Multi-valued representations of neutrosophic information.
//!
//! A neutrosophic triple `(T, I, F)` carries independent degrees of truth,
//! indeterminacy and falsity. This crate turns a triple into
//!
//! - scalar features ([`measures`]): net truth, definedness, neutrosophic
//!   score and two entropies;
//! - three partitions of unity with negation, union and intersection over
//!   any Frank t-norm ([`norms`]):
//!   [`tetra`] (true / neutral / unknown / false),
//!   [`penta_sat`] (adds saturation) and
//!   [`penta_def`] (true / neutral / false / over-defined / under-defined).
//!
//! The fuzzy, intuitionistic and bifuzzy ancestors live in [`bifuzzy`].
//! [`batch`], [`report`] and [`selfcheck`] back the `neutro` command-line tool.
//!
//! ```
//! use neutrosophic::prelude::*;
//!
//! let q = NeutrosophicTriple::new(0.6, 0.5, 0.4)?;
//! let v = decompose4(q);
//! assert!(v.is_partition());
//! let eta = score(q, DefinednessProfile::Rational);
//! assert!((eta - 0.1).abs() < 1e-12);
//! # Ok::<(), neutrosophic::Error>(())
//! ```

pub mod batch;
pub mod bifuzzy;
pub mod error;
pub mod measures;
pub mod norms;
pub mod penta_def;
pub mod penta_sat;
pub mod report;
pub mod selfcheck;
pub mod tetra;
pub mod types;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::bifuzzy::{bifuzzy3, bifuzzy4_def, bifuzzy4_ign, bifuzzy5, fuzzy3, ifs4};
    pub use crate::error::{Error, Result};
    pub use crate::measures::{
        compare, crisp_distances, definedness, entropy_czekanowski, entropy_ruzicka,
        mean_component, net_truth, score, DefinednessProfile, ScalarReport,
    };
    pub use crate::norms::TNormFamily;
    pub use crate::penta_def::{
        decompose5d, indeterminacy5d, intersect5d, negate5d, union5d, PentaDefVector,
    };
    pub use crate::penta_sat::{
        decompose5s, indeterminacy5s, intersect5s, negate5s, union5s, PentaSatVector,
    };
    pub use crate::tetra::{decompose4, indeterminacy4, intersect4, negate4, union4, TetraVector};
    pub use crate::types::{
        check_partition, make_triple, swap_tf, BifuzzyPair, NeutrosophicTriple, Partition,
        UnitDegree,
    };
}
