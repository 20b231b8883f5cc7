//! Lattice-path combinatorics: humps and peaks of `(k,a)`/`(S,a)`-paths and
//! rational `(n,m)`-Dyck paths.
//!
//! The crate provides
//!
//! * path values and feature extraction ([`path`], [`nm`]),
//! * exhaustive generators and dynamic-programming counters ([`enumerate`]),
//! * the bijections relating marked humps and peaks to free paths
//!   ([`bijections`]),
//! * exact big-integer closed forms ([`formulas`]),
//! * a verification harness that checks each identity instance by
//!   enumeration and reports the result ([`harness`]).
//!
//! All values are immutable and all operations are pure.

pub mod bijections;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod harness;
pub mod nm;
pub mod path;

pub use error::{Error, Result};
pub use nm::{NmClassification, NmStep, NmWord};
pub use path::{Classification, HorizontalWidth, Hump, LatticePoint, PathProfile, PathWord, Step};
