//! Polyhedral convex sets in H- and V-representation and the structural
//! algorithms on them.
//!
//! In finite dimension a generalized polyhedral convex set (a polyhedron
//! intersected with a closed affine subspace) is just a polyhedron, and
//! linear images and projections of polyhedra are always closed polyhedra.
//! The affine-subspace part is carried by the equality rows of [`HRep`].

mod cone;
mod convert;
mod hrep;
mod ops;
mod project;
mod redundancy;
mod vrep;

pub use convert::{h_to_v, v_to_h};
pub use hrep::HRep;
pub use ops::{
    includes, intersect, is_empty, linear_image, linear_preimage, member, minkowski_sum, product, recession_cone,
    set_equal,
};
pub use project::{project, CoordSet};
pub use redundancy::{affine_hull, remove_redundancy};
pub use vrep::VRep;

pub(crate) use hrep::fmt_rows;
pub(crate) use ops::is_recession_direction;
