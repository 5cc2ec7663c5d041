//! Relative interiors of polyhedra.
//!
//! For a nonempty `P = {x : A x = b, ⟨c_i, x⟩ <= d_i}` let `I` be the rows
//! that are strict somewhere on `P`. Then
//! `ri P = {x ∈ P : ⟨c_i, x⟩ < d_i for all i ∈ I}`, and in finite dimension
//! the intrinsic and quasi-relative interiors coincide with it, so only this
//! one formula is implemented (the oracle module checks it against the
//! cone-based definition). Rows outside `I` are tight on all of `P` and join
//! the explicit equalities to cut out the affine hull.

use std::fmt;

use num_traits::One;

use crate::error::{check_dim, Error, Result};
use crate::linalg::{add, dot, scale, Matrix, Rat};
use crate::lp::{find_point, solve_lp, LpResult, Sense};
use crate::multifunction::{domain, value, MultiFn};
use crate::polyhedron::{affine_hull, fmt_rows, HRep};

/// Inequality rows of an HRep that are strict at some point of the set,
/// each with a witness point where it is strict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    indices: Vec<usize>,
    witnesses: Vec<Vec<Rat>>,
}

impl IndexSet {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// `witnesses()[k]` lies in the set with row `indices()[k]` strict.
    pub fn witnesses(&self) -> &[Vec<Rat>] {
        &self.witnesses
    }

    pub fn contains(&self, row: usize) -> bool {
        self.indices.binary_search(&row).is_ok()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// One LP per row: row `i` is in `I` iff `min ⟨c_i, x⟩` over `p` is below `d_i`
/// (or unbounded).
pub fn binding_index_set(p: &HRep) -> Result<IndexSet> {
    let mut indices = Vec::new();
    let mut witnesses = Vec::new();
    for (i, (c, d)) in p.ineq_rows().enumerate() {
        let witness = match solve_lp(c, p, Sense::Min)? {
            LpResult::Infeasible => return Err(Error::EmptySet("index set undefined on empty set")),
            LpResult::Optimal { value, point } if &value < d => Some(point),
            LpResult::Optimal { .. } => None,
            // Unbounded below: any point with slack 1 serves as witness.
            LpResult::Unbounded => {
                let floor = p.clone().with_ineq(c.to_vec(), d - Rat::one());
                Some(find_point(&floor).expect("unbounded row reaches below d - 1"))
            }
        };
        if let Some(w) = witness {
            indices.push(i);
            witnesses.push(w);
        }
    }
    if p.n_ineq() == 0 && find_point(p).is_none() {
        return Err(Error::EmptySet("index set undefined on empty set"));
    }
    Ok(IndexSet { indices, witnesses })
}

/// A relatively open polyhedron `{x : A x = b, C x < d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelOpenHRep {
    dim: usize,
    eq_a: Matrix,
    eq_b: Vec<Rat>,
    strict_c: Matrix,
    strict_d: Vec<Rat>,
}

impl RelOpenHRep {
    pub fn new(dim: usize, eq_a: Matrix, eq_b: Vec<Rat>, strict_c: Matrix, strict_d: Vec<Rat>) -> Result<Self> {
        check_dim("equality columns", dim, eq_a.ncols())?;
        check_dim("strict columns", dim, strict_c.ncols())?;
        check_dim("equality right-hand side", eq_a.nrows(), eq_b.len())?;
        check_dim("strict right-hand side", strict_c.nrows(), strict_d.len())?;
        Ok(RelOpenHRep { dim, eq_a, eq_b, strict_c, strict_d })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eq_a(&self) -> &Matrix {
        &self.eq_a
    }

    pub fn eq_b(&self) -> &[Rat] {
        &self.eq_b
    }

    pub fn strict_c(&self) -> &Matrix {
        &self.strict_c
    }

    pub fn strict_d(&self) -> &[Rat] {
        &self.strict_d
    }

    pub fn contains(&self, x: &[Rat]) -> Result<bool> {
        check_dim("relatively open set point", self.dim, x.len())?;
        Ok(self.eq_a.rows().iter().zip(&self.eq_b).all(|(a, b)| &dot(a, x) == b)
            && self.strict_c.rows().iter().zip(&self.strict_d).all(|(c, d)| &dot(c, x) < d))
    }
}

impl fmt::Display for RelOpenHRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "relatively open set in dimension {}", self.dim)?;
        fmt_rows(f, &self.eq_a, &self.eq_b, "=")?;
        fmt_rows(f, &self.strict_c, &self.strict_d, "<")
    }
}

/// `ri p`: affine hull equalities plus the rows of `I` made strict.
pub fn relative_interior(p: &HRep) -> Result<RelOpenHRep> {
    let index = binding_index_set(p)?;
    let hull = affine_hull(p)?;
    let mut strict_c = Matrix::empty(p.dim());
    let mut strict_d = Vec::new();
    for &i in index.indices() {
        strict_c.push_row(p.ineq_c().row(i).to_vec());
        strict_d.push(p.ineq_d()[i].clone());
    }
    RelOpenHRep::new(p.dim(), hull.eq_a().clone(), hull.eq_b().to_vec(), strict_c, strict_d)
}

/// A point of `ri p`: the average of the index-set witnesses, or any point when `I` is empty.
pub fn relative_interior_point(p: &HRep) -> Result<Vec<Rat>> {
    let index = binding_index_set(p)?;
    if index.is_empty() {
        return find_point(p).ok_or(Error::EmptySet("empty set has no relative interior point"));
    }
    let w = index.witnesses();
    let sum = w[1..].iter().fold(w[0].clone(), |acc, x| add(&acc, x));
    Ok(scale(&sum, &Rat::new(1.into(), w.len().into())))
}

/// `x ∈ p` with every row of `I` strict at `x`.
pub fn ri_member(p: &HRep, x: &[Rat]) -> Result<bool> {
    check_dim("relative interior point", p.dim(), x.len())?;
    let index = binding_index_set(p)?;
    Ok(ri_member_with(p, &index, x))
}

fn ri_member_with(p: &HRep, index: &IndexSet, x: &[Rat]) -> bool {
    p.eq_rows().all(|(a, b)| &dot(a, x) == b)
        && p.ineq_rows().enumerate().all(|(i, (c, d))| {
            let lhs = dot(c, x);
            if index.contains(i) {
                &lhs < d
            } else {
                &lhs <= d
            }
        })
}

/// `ri(dom F)` computed once, for repeated decomposed graph queries.
#[derive(Debug, Clone)]
pub struct GraphRiDecomposition {
    f: MultiFn,
    dom: HRep,
    dom_index: IndexSet,
}

impl GraphRiDecomposition {
    pub fn new(f: &MultiFn) -> Result<Self> {
        let dom = domain(f)?;
        let dom_index = binding_index_set(&dom).map_err(|_| Error::EmptySet("graph must be nonempty"))?;
        Ok(GraphRiDecomposition { f: f.clone(), dom, dom_index })
    }

    /// `x ∈ ri(dom F)` and `y ∈ ri(F(x))`.
    pub fn contains(&self, x: &[Rat], y: &[Rat]) -> Result<bool> {
        check_dim("graph point x", self.f.nx(), x.len())?;
        check_dim("graph point y", self.f.ny(), y.len())?;
        if !ri_member_with(&self.dom, &self.dom_index, x) {
            return Ok(false);
        }
        let fx = value(&self.f, x)?;
        match binding_index_set(&fx) {
            Ok(index) => Ok(ri_member_with(&fx, &index, y)),
            Err(Error::EmptySet(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

/// Decides `(x, y) ∈ ri(gph F)` through `x ∈ ri(dom F)`, `F(x) ≠ ∅` and `y ∈ ri(F(x))`.
pub fn ri_graph_member_decomposed(f: &MultiFn, x: &[Rat], y: &[Rat]) -> Result<bool> {
    GraphRiDecomposition::new(f)?.contains(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_vec, ratio};
    use num_traits::Signed;

    fn strict_at(p: &HRep, x: &[Rat]) -> Vec<usize> {
        p.ineq_rows().enumerate().filter(|(_, (c, d))| (*d - dot(c, x)).is_positive()).map(|(i, _)| i).collect()
    }

    /// [0,1] × {0} as x1 >= 0, x1 <= 1, x2 <= 0, -x2 <= 0
    fn segment() -> HRep {
        HRep::from_int_rows(2, &[], &[&[-1, 0, 0], &[1, 0, 1], &[0, 1, 0], &[0, -1, 0]])
    }

    fn square() -> HRep {
        HRep::from_int_rows(2, &[], &[&[-1, 0, 0], &[1, 0, 1], &[0, -1, 0], &[0, 1, 1]])
    }

    #[test]
    fn index_sets() {
        let seg = binding_index_set(&segment()).unwrap();
        assert_eq!(seg.indices(), &[0, 1]);
        for (&i, w) in seg.indices().iter().zip(seg.witnesses()) {
            assert!(segment().satisfied_by(w));
            assert!(strict_at(&segment(), w).contains(&i));
        }
        let point = HRep::from_int_rows(1, &[], &[&[1, 0], &[-1, 0]]);
        assert!(binding_index_set(&point).unwrap().is_empty());
        assert_eq!(binding_index_set(&square()).unwrap().indices(), &[0, 1, 2, 3]);
        assert!(matches!(binding_index_set(&HRep::empty(2)), Err(Error::EmptySet(_))));
        assert!(binding_index_set(&HRep::from_int_rows(1, &[&[0, 1]], &[])).is_err());
    }

    #[test]
    fn unbounded_rows_get_witnesses() {
        let half = HRep::from_int_rows(1, &[], &[&[1, 0]]);
        let idx = binding_index_set(&half).unwrap();
        assert_eq!(idx.indices(), &[0]);
        assert!(idx.witnesses()[0][0] < rat(0));
    }

    #[test]
    fn relative_interiors() {
        let ri = relative_interior(&segment()).unwrap();
        assert_eq!(ri.eq_a().rows(), &[rat_vec(&[0, 1])]);
        assert_eq!(ri.strict_c().nrows(), 2);
        assert!(ri.contains(&[ratio(1, 2), rat(0)]).unwrap());
        assert!(!ri.contains(&rat_vec(&[0, 0])).unwrap());

        let pt = HRep::point(&rat_vec(&[2, 3]));
        let ri = relative_interior(&pt).unwrap();
        assert_eq!(ri.strict_c().nrows(), 0);
        assert!(ri.contains(&rat_vec(&[2, 3])).unwrap());

        let ri = relative_interior(&HRep::whole_space(2)).unwrap();
        assert_eq!((ri.eq_a().nrows(), ri.strict_c().nrows()), (0, 0));
        assert!(relative_interior(&HRep::empty(1)).is_err());
    }

    #[test]
    fn ri_membership() {
        assert!(ri_member(&segment(), &[ratio(1, 2), rat(0)]).unwrap());
        assert!(!ri_member(&segment(), &rat_vec(&[0, 0])).unwrap());
        assert!(!ri_member(&segment(), &rat_vec(&[2, 0])).unwrap());
        assert!(ri_member(&segment(), &rat_vec(&[0])).is_err());
    }

    #[test]
    fn interior_point_lies_in_ri() {
        for p in [segment(), square(), HRep::point(&rat_vec(&[1, 1])), HRep::from_int_rows(1, &[], &[&[1, 0]])] {
            let x = relative_interior_point(&p).unwrap();
            assert!(ri_member(&p, &x).unwrap());
        }
    }

    #[test]
    fn graph_decomposition() {
        // 0 <= x <= 1, 0 <= y <= x
        let f = MultiFn::new(1, 1, HRep::from_int_rows(2, &[], &[&[-1, 0, 0], &[1, 0, 1], &[0, -1, 0], &[-1, 1, 0]]))
            .unwrap();
        assert!(ri_graph_member_decomposed(&f, &[ratio(1, 2)], &[ratio(1, 4)]).unwrap());
        assert!(ri_member(f.graph(), &[ratio(1, 2), ratio(1, 4)]).unwrap());
        assert!(!ri_graph_member_decomposed(&f, &[ratio(1, 2)], &[ratio(1, 2)]).unwrap());
        assert!(!ri_member(f.graph(), &[ratio(1, 2), ratio(1, 2)]).unwrap());
        assert!(!ri_graph_member_decomposed(&f, &[rat(2)], &[rat(0)]).unwrap());
        assert!(ri_graph_member_decomposed(&f, &[rat(0), rat(0)], &[rat(0)]).is_err());
    }
}
