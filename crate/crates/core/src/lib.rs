//! Exact-arithmetic engine for the numerical invariants and 2-Fano
//! classification of horospherical varieties of Picard number one.
//!
//! The crate recomputes, from root-system first principles, the invariant
//! table of the five non-homogeneous two-orbit families (`X1(n)`, `X2`,
//! `X3(n,m)`, `X4`, `X5`), derives their second Chern character against the
//! distinguished surface classes `S_Y` and `S_Z` through the blow-up and
//! projective-bundle formulas, and implements the 2-Fano classification
//! predicates for homogeneous spaces, linear sections and weighted complete
//! intersections. Every quantity is an integer or an exact rational; there
//! is no floating point anywhere.
//!
//! Module map:
//! - [`root_system`]: Cartan matrices and positive roots (Bourbaki numbering);
//! - [`parabolic`]: dimension and Fano index of `G/P_k` and `G/(P_j ∩ P_k)`;
//! - [`pasquier`]: the five families, their node bindings and invariant
//!   records, cross-checked against the stored closed forms;
//! - [`chern`]: `ch2 · S_Y` and `ch2 · S_Z` as a derivation, not a lookup;
//! - [`wps`]: Chern coefficients and Fano/2-Fano predicates for weighted
//!   complete intersections;
//! - [`classification`]: every classification predicate plus bounded
//!   enumeration;
//! - [`descriptor`]: the canonical descriptor grammar shared with the CLI.
//!
//! ```
//! use horofano::{chern, classification, pasquier, Family};
//!
//! let family = Family::parse("X3(6,5)")?;
//! let inv = pasquier::invariants(family)?;
//! assert_eq!((inv.c1_x, inv.c1_y, inv.codim_y, inv.codim_z), (9, 8, 5, 4));
//!
//! let report = chern::ch2_surfaces(family)?;
//! assert_eq!(report.ch2_dot_sy.to_string(), "1/2");
//! assert!(report.two_fano);
//!
//! let verdict = classification::horospherical_two_fano(family)?;
//! assert!(verdict.two_fano && verdict.tangent_stable == Some(true));
//! # Ok::<(), horofano::Error>(())
//! ```

pub mod chern;
pub mod classification;
pub mod descriptor;
pub mod error;
pub mod parabolic;
pub mod pasquier;
pub mod root_system;
pub mod wps;

/// Exact rational scalar used for every non-integer quantity. Values are
/// always reduced with a positive denominator; `Display`/`FromStr` use the
/// canonical `p/q` form (`p` alone when `q = 1`).
pub type Rational = num::BigRational;

pub use classification::{ClassifiedVariety, LinearSection, SectionKind, Verdict};
pub use error::{Error, Result};
pub use parabolic::HomogeneousSpace;
pub use pasquier::{Family, InvariantRecord};
pub use root_system::{LieType, PositiveRoot, Series};
pub use wps::{CompleteIntersection, WeightedProjectiveSpace};
