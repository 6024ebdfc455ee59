//! Exact polyhedral engine.
//!
//! Everything here is rational arithmetic with no tolerances: rank by
//! fraction-free elimination, LP feasibility by a primal simplex with
//! Bland's rule, cone membership with explicit certificates, and vertex
//! enumeration for the wall arrangements cutting the hypersimplex into GIT
//! chambers.

mod cone;
mod linalg;
mod lp;
mod vertices;

pub use cone::{cone_contains, extremal_rays, primitive, RationalCone};
pub use linalg::rank;
pub use vertices::{chamber_vertices, walls, Wall, WallKind};

pub(crate) use cone::from_primitive_generators;
