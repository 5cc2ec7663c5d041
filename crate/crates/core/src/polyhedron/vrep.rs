use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::linalg::{is_zero_vec, primitive, rank_of, Rat};

use super::cone::canonical_subspace_basis;

/// Generator form `conv(points) + cone(rays) + span(lineality)`.
///
/// An empty `points` list means the empty set; rays and lineality are then empty too.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VRep {
    dim: usize,
    points: Vec<Vec<Rat>>,
    rays: Vec<Vec<Rat>>,
    lineality: Vec<Vec<Rat>>,
}

impl VRep {
    pub fn new(dim: usize, points: Vec<Vec<Rat>>, rays: Vec<Vec<Rat>>, lineality: Vec<Vec<Rat>>) -> Result<Self> {
        for v in points.iter().chain(&rays).chain(&lineality) {
            check_dim("generator", dim, v.len())?;
        }
        if points.is_empty() && !(rays.is_empty() && lineality.is_empty()) {
            return Err(Error::Invalid("rays or lineality given without any point".into()));
        }
        if rays.iter().chain(&lineality).any(|v| is_zero_vec(v)) {
            return Err(Error::Invalid("rays and lineality vectors must be nonzero".into()));
        }
        if rank_of(&lineality, dim) != lineality.len() {
            return Err(Error::Invalid("lineality vectors must be linearly independent".into()));
        }
        Ok(VRep { dim, points, rays, lineality })
    }

    pub fn empty(dim: usize) -> Self {
        VRep { dim, points: Vec::new(), rays: Vec::new(), lineality: Vec::new() }
    }

    /// Deterministic form: points sorted, rays primitive and sorted, lineality
    /// replaced by its reduced echelon basis.
    pub(crate) fn canonical(
        dim: usize,
        mut points: Vec<Vec<Rat>>,
        rays: Vec<Vec<Rat>>,
        lineality: Vec<Vec<Rat>>,
    ) -> Self {
        points.sort();
        points.dedup();
        let mut rays: Vec<Vec<Rat>> = rays.iter().filter(|r| !is_zero_vec(r)).map(|r| primitive(r)).collect();
        rays.sort();
        rays.dedup();
        VRep { dim, points, rays, lineality: canonical_subspace_basis(&lineality, dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Rat>] {
        &self.points
    }

    pub fn rays(&self) -> &[Vec<Rat>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<Rat>] {
        &self.lineality
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }
}

fn fmt_vec(v: &[Rat]) -> String {
    let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", cells.join(", "))
}

impl fmt::Display for VRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vrep in dimension {}", self.dim)?;
        for p in &self.points {
            writeln!(f, "point {}", fmt_vec(p))?;
        }
        for r in &self.rays {
            writeln!(f, "ray {}", fmt_vec(r))?;
        }
        for l in &self.lineality {
            writeln!(f, "line {}", fmt_vec(l))?;
        }
        Ok(())
    }
}
