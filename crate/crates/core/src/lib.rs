//! Exact computation of type A, level one conformal blocks divisor classes
//! on the moduli space of stable n-pointed rational curves, and of the GIT
//! cones they span.
//!
//! Everything is arbitrary-precision rational arithmetic; there is no
//! floating point in this crate. Divisor classes are recorded as vectors of
//! intersection numbers over the canonical F-curve list, which pins down the
//! numerical class exactly.
//!
//! Module map:
//!
//! * [`fcurves`] — partitions of {1,…,n} into four nonempty blocks, the
//!   index set of every class vector;
//! * [`divisors`] — conformal blocks and GIT F-curve degrees, full class
//!   vectors, the Gale transform, the scaling identity, and the
//!   hyperelliptic/trigonal Hodge pullbacks;
//! * [`tableaux`] — independent brute-force degree oracle on four points via
//!   semistandard tableaux counting;
//! * [`polyhedra`] — hypersimplex wall arrangements, chamber vertex
//!   enumeration, exact rational LP, and extremal-ray extraction;
//! * [`cones`] — the degree-d GIT cones, the conformal blocks cone, and the
//!   symmetric-ray census;
//! * [`report`] — serialization of all results (rationals as exact `p/q`
//!   strings).

pub mod cones;
pub mod divisors;
pub mod error;
pub mod fcurves;
pub mod polyhedra;
pub mod rational;
pub mod report;
pub mod tableaux;

pub use cones::{ConeReport, GeneratorSource, SymmetricReport};
pub use divisors::{
    cb_class, cb_fcurve_degree, check_scaling_identity, fcurve_count, gale, git_class,
    git_fcurve_degree, nontrivial_level, special_lambda_class, DivisorClass, LambdaKind,
    Linearization, WeightData,
};
pub use error::{Error, Result};
pub use fcurves::{enumerate_fcurves, FCurveEvaluation, FCurvePartition};
pub use polyhedra::{
    chamber_vertices, cone_contains, extremal_rays, primitive, rank, walls, RationalCone, Wall,
};
pub use rational::Rational;
