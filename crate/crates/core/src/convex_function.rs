//! Polyhedral convex functions through their epigraphs, and the optimal value
//! function `μ(x) = inf{φ(x, y) : y ∈ F(x)}` with its solution map.
//!
//! For a proper polyhedral objective `φ` the epigraph of `μ` is exactly the
//! projection of `epi φ ∩ (gph F × R)` onto the `(x, t)` coordinates, so `μ`
//! is materialized as that projection. Improper objectives are refused: the
//! projection then only sits between the strict epigraph and the epigraph.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::linalg::{dot, zeros, Rat};
use crate::lp::{solve_lp, LpResult, Sense};
use crate::multifunction::MultiFn;
use crate::polyhedron::{intersect, is_empty, is_recession_direction, product, project, CoordSet, HRep};

/// A value in `[-∞, +∞]`. Variant order gives the total order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtReal {
    MinusInf,
    Finite(Rat),
    PlusInf,
}

impl ExtReal {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtReal::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::MinusInf => write!(f, "-inf"),
            ExtReal::Finite(v) => write!(f, "{v}"),
            ExtReal::PlusInf => write!(f, "+inf"),
        }
    }
}

/// A polyhedral convex function on `R^n`, stored as its epigraph over `(x, t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PCFunc {
    n: usize,
    epi: HRep,
}

impl PCFunc {
    /// Checks `epi.dim() == n + 1` and, for a nonempty epigraph, that it is
    /// closed upward in `t` (the direction `e_t` is a recession direction).
    pub fn new(n: usize, epi: HRep) -> Result<Self> {
        check_dim("epigraph", n + 1, epi.dim())?;
        if !is_empty(&epi) && !is_recession_direction(&epi, &crate::linalg::unit(n + 1, n)) {
            return Err(Error::NotAnEpigraph);
        }
        Ok(PCFunc { n, epi })
    }

    /// `x ↦ max_k (⟨a_k, x⟩ + b_k)` on all of `R^n`.
    pub fn max_affine(n: usize, pieces: &[(Vec<Rat>, Rat)]) -> Result<Self> {
        let mut epi = HRep::whole_space(n + 1);
        for (a, b) in pieces {
            check_dim("affine piece", n, a.len())?;
            let mut row = a.clone();
            row.push(Rat::from_integer((-1).into()));
            epi.push_ineq(row, -b.clone());
        }
        PCFunc::new(n, epi)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn epi(&self) -> &HRep {
        &self.epi
    }

    /// The fiber `{t : (x, t) ∈ epi}` as a one-dimensional HRep.
    fn fiber(&self, x: &[Rat]) -> HRep {
        let n = self.n;
        let mut out = HRep::whole_space(1);
        for (a, b) in self.epi.eq_rows() {
            out.push_eq(vec![a[n].clone()], b - dot(&a[..n], x));
        }
        for (c, d) in self.epi.ineq_rows() {
            out.push_ineq(vec![c[n].clone()], d - dot(&c[..n], x));
        }
        out
    }
}

impl fmt::Display for PCFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "polyhedral function on R^{}, epigraph over (x, t):", self.n)?;
        write!(f, "{}", self.epi)
    }
}

/// `f(x) = inf{t : (x, t) ∈ epi f}` with `inf ∅ = +∞`.
pub fn evaluate(f: &PCFunc, x: &[Rat]) -> Result<ExtReal> {
    check_dim("evaluation point", f.n, x.len())?;
    Ok(match solve_lp(&[Rat::from_integer(1.into())], &f.fiber(x), Sense::Min)? {
        LpResult::Infeasible => ExtReal::PlusInf,
        LpResult::Unbounded => ExtReal::MinusInf,
        LpResult::Optimal { value, .. } => ExtReal::Finite(value),
    })
}

/// Nonempty epigraph that does not contain the downward direction `-e_t`.
pub fn is_proper(f: &PCFunc) -> bool {
    if is_empty(&f.epi) {
        return false;
    }
    let mut down = zeros(f.n + 1);
    down[f.n] = Rat::from_integer((-1).into());
    !is_recession_direction(&f.epi, &down)
}

/// `Ω₁ ∩ Ω₂` over `(x, y, t)` with `Ω₁ = epi φ` and `Ω₂ = gph F × R`.
fn joint_system(phi: &PCFunc, f: &MultiFn) -> Result<HRep> {
    check_dim("objective arity", f.nx() + f.ny(), phi.n)?;
    intersect(&phi.epi, &product(f.graph(), &HRep::whole_space(1)))
}

/// `μ(x) = inf{φ(x, y) : y ∈ F(x)}`, with `epi μ = π_(x,t)(epi φ ∩ (gph F × R))`.
pub fn optimal_value_fn(phi: &PCFunc, f: &MultiFn) -> Result<PCFunc> {
    let joint = joint_system(phi, f)?;
    if !is_proper(phi) {
        return Err(Error::ImproperObjective);
    }
    let (nx, ny) = (f.nx(), f.ny());
    let keep: Vec<usize> = (0..nx).chain(std::iter::once(nx + ny)).collect();
    let epi = project(&joint, &CoordSet::new(keep, nx + ny + 1)?)?;
    PCFunc::new(nx, epi)
}

/// `M(x) = {y ∈ F(x) : φ(x, y) = μ(x)}`, encoded as `{y ∈ F(x) : φ(x, y) <= μ(x)}`.
/// Empty when `μ(x)` is `+∞` or `-∞`.
pub fn solution_map(phi: &PCFunc, f: &MultiFn, x: &[Rat]) -> Result<HRep> {
    check_dim("objective arity", f.nx() + f.ny(), phi.n)?;
    check_dim("solution map point", f.nx(), x.len())?;
    let mu = optimal_value_fn(phi, f)?;
    let ny = f.ny();
    let v = match evaluate(&mu, x)? {
        ExtReal::Finite(v) => v,
        ExtReal::PlusInf | ExtReal::MinusInf => return Ok(HRep::empty(ny)),
    };
    // Fix x and t = v in the joint (x, y, t) system.
    let joint = joint_system(phi, f)?;
    let nx = f.nx();
    let fixed = |row: &[Rat]| dot(&row[..nx], x) + &row[nx + ny] * &v;
    let mut out = HRep::whole_space(ny);
    for (a, b) in joint.eq_rows() {
        out.push_eq(a[nx..nx + ny].to_vec(), b - fixed(a));
    }
    for (c, d) in joint.ineq_rows() {
        out.push_ineq(c[nx..nx + ny].to_vec(), d - fixed(c));
    }
    Ok(out)
}

impl PartialOrd<Rat> for ExtReal {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(match self {
            ExtReal::MinusInf => Ordering::Less,
            ExtReal::Finite(v) => v.cmp(other),
            ExtReal::PlusInf => Ordering::Greater,
        })
    }
}

impl PartialEq<Rat> for ExtReal {
    fn eq(&self, other: &Rat) -> bool {
        matches!(self, ExtReal::Finite(v) if v == other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_vec, ratio};
    use crate::polyhedron::set_equal;
    use num_traits::Signed;

    fn abs() -> PCFunc {
        PCFunc::new(1, HRep::from_int_rows(2, &[], &[&[1, -1, 0], &[-1, -1, 0]])).unwrap()
    }

    /// epi = {(x, t) : 0 <= x <= 1}, t free
    fn vertical_strip() -> PCFunc {
        PCFunc::new(1, HRep::from_int_rows(2, &[], &[&[-1, 0, 0], &[1, 0, 1]])).unwrap()
    }

    /// φ(x, y) = y
    fn phi_y() -> PCFunc {
        PCFunc::max_affine(2, &[(rat_vec(&[0, 1]), rat(0))]).unwrap()
    }

    #[test]
    fn order_of_extended_reals() {
        assert!(ExtReal::MinusInf < ExtReal::Finite(rat(-100)));
        assert!(ExtReal::Finite(rat(100)) < ExtReal::PlusInf);
        assert!(ExtReal::Finite(rat(1)) < ExtReal::Finite(rat(2)));
        assert!(ExtReal::PlusInf > rat(3));
    }

    #[test]
    fn epigraph_validation() {
        let down = HRep::from_int_rows(2, &[], &[&[0, 1, 0]]);
        assert_eq!(PCFunc::new(1, down), Err(Error::NotAnEpigraph));
        assert!(PCFunc::new(1, HRep::whole_space(3)).is_err());
        assert!(PCFunc::new(1, HRep::empty(2)).is_ok());
    }

    #[test]
    fn evaluation() {
        assert_eq!(evaluate(&abs(), &[rat(2)]).unwrap(), ExtReal::Finite(rat(2)));
        assert_eq!(evaluate(&vertical_strip(), &[ratio(1, 2)]).unwrap(), ExtReal::MinusInf);
        assert_eq!(evaluate(&vertical_strip(), &[rat(5)]).unwrap(), ExtReal::PlusInf);
        assert!(evaluate(&abs(), &rat_vec(&[1, 1])).is_err());
    }

    #[test]
    fn properness() {
        assert!(is_proper(&abs()));
        assert!(!is_proper(&PCFunc::new(1, HRep::empty(2)).unwrap()));
        assert!(!is_proper(&vertical_strip()));
    }

    #[test]
    fn optimal_value_of_abs_constraint() {
        // F(x) = {y : y >= x, y >= -x}, φ = y: μ = |·|
        let f = MultiFn::new(1, 1, HRep::from_int_rows(2, &[], &[&[1, -1, 0], &[-1, -1, 0]])).unwrap();
        let mu = optimal_value_fn(&phi_y(), &f).unwrap();
        for k in -4..=4 {
            let x = ratio(k, 2);
            assert_eq!(evaluate(&mu, std::slice::from_ref(&x)).unwrap(), ExtReal::Finite(x.abs()));
        }
    }

    #[test]
    fn optimal_value_indicator() {
        let zero = PCFunc::max_affine(2, &[(rat_vec(&[0, 0]), rat(0))]).unwrap();
        let f = MultiFn::new(1, 1, HRep::from_int_rows(2, &[], &[&[-1, 0, 0], &[1, 0, 1]])).unwrap();
        let mu = optimal_value_fn(&zero, &f).unwrap();
        assert_eq!(evaluate(&mu, &[ratio(1, 2)]).unwrap(), ExtReal::Finite(rat(0)));
        assert_eq!(evaluate(&mu, &[rat(2)]).unwrap(), ExtReal::PlusInf);
        assert_eq!(evaluate(&mu, &[rat(-1)]).unwrap(), ExtReal::PlusInf);
    }

    #[test]
    fn optimal_value_unbounded() {
        let free = MultiFn::new(1, 1, HRep::whole_space(2)).unwrap();
        let mu = optimal_value_fn(&phi_y(), &free).unwrap();
        assert!(set_equal(mu.epi(), &HRep::whole_space(2)).unwrap());
        assert_eq!(evaluate(&mu, &[rat(3)]).unwrap(), ExtReal::MinusInf);
    }

    #[test]
    fn improper_objective_refused() {
        let f = MultiFn::identity(1);
        let improper = PCFunc::new(2, HRep::from_int_rows(3, &[], &[&[1, 0, 0, 1]])).unwrap();
        assert_eq!(optimal_value_fn(&improper, &f), Err(Error::ImproperObjective));
        let mismatched = PCFunc::max_affine(3, &[]).unwrap();
        assert!(matches!(optimal_value_fn(&mismatched, &f), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn solution_maps() {
        let f = MultiFn::new(1, 1, HRep::from_int_rows(2, &[], &[&[1, -1, 0], &[-1, -1, 0]])).unwrap();
        let m = solution_map(&phi_y(), &f, &[rat(3)]).unwrap();
        assert!(set_equal(&m, &HRep::point(&[rat(3)])).unwrap());

        let seg = MultiFn::new(1, 1, HRep::from_int_rows(2, &[&[1, -1, 0]], &[&[-1, 0, 0], &[1, 0, 1]])).unwrap();
        assert!(is_empty(&solution_map(&phi_y(), &seg, &[rat(5)]).unwrap()));

        let zero = PCFunc::max_affine(2, &[(rat_vec(&[0, 0]), rat(0))]).unwrap();
        let constant = MultiFn::new(1, 1, HRep::from_int_rows(2, &[], &[&[0, -1, 0], &[0, 1, 1]])).unwrap();
        let m = solution_map(&zero, &constant, &[rat(-7)]).unwrap();
        assert!(set_equal(&m, &HRep::from_int_rows(1, &[], &[&[-1, 0], &[1, 1]])).unwrap());
    }
}
