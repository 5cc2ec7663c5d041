//! Conversion between inequality and generator representations.
//!
//! Both directions go through the same cone routine. `h_to_v` homogenizes
//! `P` into `{(x, s) : A x = b s, C x <= d s, s >= 0}`; generators with `s > 0`
//! scale to points, those with `s = 0` are rays. `v_to_h` computes the cone
//! of valid inequalities `(a, g)` with `a·x + g <= 0` on every generator and
//! reads rows off its generators.

use num_traits::{One, Signed, Zero};

use crate::linalg::{is_zero_vec, scale, zeros, Matrix, Rat};

use super::cone::cone_generators;
use super::{HRep, VRep};

pub fn h_to_v(p: &HRep) -> VRep {
    let n = p.dim();
    let mut eq = Matrix::empty(n + 1);
    for (a, b) in p.eq_rows() {
        let mut row = a.to_vec();
        row.push(-b.clone());
        eq.push_row(row);
    }
    let mut ineq = Matrix::empty(n + 1);
    for (c, d) in p.ineq_rows() {
        let mut row = c.to_vec();
        row.push(-d.clone());
        ineq.push_row(row);
    }
    let mut nonneg = zeros(n + 1);
    nonneg[n] = -Rat::one();
    ineq.push_row(nonneg);

    let g = cone_generators(&eq, &ineq);
    let mut points = Vec::new();
    let mut rays = Vec::new();
    for ray in g.rays {
        let s = &ray[n];
        if s.is_positive() {
            points.push(scale(&ray[..n], &s.recip()));
        } else {
            debug_assert!(s.is_zero());
            rays.push(ray[..n].to_vec());
        }
    }
    if points.is_empty() {
        return VRep::empty(n);
    }
    let lineality = g.lineality.into_iter().map(|l| l[..n].to_vec()).collect();
    VRep::canonical(n, points, rays, lineality)
}

pub fn v_to_h(v: &VRep) -> HRep {
    generators_to_h(v.dim(), v.points(), v.rays(), v.lineality())
}

/// `v_to_h` on raw generator lists; zero rays and dependent lineality vectors are tolerated.
pub(crate) fn generators_to_h(n: usize, points: &[Vec<Rat>], rays: &[Vec<Rat>], lineality: &[Vec<Rat>]) -> HRep {
    if points.is_empty() {
        return HRep::empty(n);
    }
    let mut ineq = Matrix::empty(n + 1);
    for u in points {
        let mut row = u.clone();
        row.push(Rat::one());
        ineq.push_row(row);
    }
    for r in rays.iter().filter(|r| !is_zero_vec(r)) {
        let mut row = r.clone();
        row.push(Rat::zero());
        ineq.push_row(row);
    }
    let mut eq = Matrix::empty(n + 1);
    for l in lineality {
        let mut row = l.clone();
        row.push(Rat::zero());
        eq.push_row(row);
    }

    let g = cone_generators(&eq, &ineq);
    let mut out = HRep::whole_space(n);
    for l in g.lineality {
        out.push_eq(l[..n].to_vec(), -l[n].clone());
    }
    for r in g.rays {
        if is_zero_vec(&r[..n]) {
            continue;
        }
        out.push_ineq(r[..n].to_vec(), -r[n].clone());
    }
    out.canonicalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_vec;
    use crate::polyhedron::set_equal;

    #[test]
    fn square_vertices() {
        let sq = HRep::from_int_rows(2, &[], &[&[-1, 0, 0], &[1, 0, 1], &[0, -1, 0], &[0, 1, 1]]);
        let v = h_to_v(&sq);
        assert_eq!(v.points(), &[rat_vec(&[0, 0]), rat_vec(&[0, 1]), rat_vec(&[1, 0]), rat_vec(&[1, 1])]);
        assert!(v.is_bounded());
    }

    #[test]
    fn halfspace_generators() {
        let h = HRep::from_int_rows(2, &[], &[&[-1, 0, 0]]);
        let v = h_to_v(&h);
        assert_eq!(v.points(), &[rat_vec(&[0, 0])]);
        assert_eq!(v.rays(), &[rat_vec(&[1, 0])]);
        assert_eq!(v.lineality(), &[rat_vec(&[0, 1])]);
    }

    #[test]
    fn empty_converts_to_empty() {
        let e = HRep::from_int_rows(1, &[], &[&[1, 0], &[-1, -1]]);
        assert_eq!(h_to_v(&e), VRep::empty(1));
        assert_eq!(h_to_v(&HRep::empty(0)), VRep::empty(0));
        let back = v_to_h(&VRep::empty(2));
        assert_eq!(back, HRep::empty(2));
    }

    #[test]
    fn zero_dimensional_space() {
        let v = h_to_v(&HRep::whole_space(0));
        assert_eq!(v.points(), &[Vec::<Rat>::new()]);
        assert_eq!(v_to_h(&v), HRep::whole_space(0));
    }

    #[test]
    fn interval_from_points() {
        let v = VRep::new(1, vec![rat_vec(&[0]), rat_vec(&[1])], vec![], vec![]).unwrap();
        let h = v_to_h(&v);
        assert_eq!(h, HRep::from_int_rows(1, &[], &[&[-1, 0], &[1, 1]]));
    }

    #[test]
    fn line_from_lineality() {
        let v = VRep::new(2, vec![rat_vec(&[0, 0])], vec![], vec![rat_vec(&[1, 0])]).unwrap();
        let h = v_to_h(&v);
        assert_eq!(h, HRep::from_int_rows(2, &[&[0, 1, 0]], &[]));
    }

    #[test]
    fn round_trip_with_equalities() {
        let p = HRep::from_int_rows(3, &[&[1, 1, 1, 1]], &[&[-1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0]]);
        let v = h_to_v(&p);
        assert_eq!(v.points().len(), 3);
        assert!(set_equal(&p, &v_to_h(&v)).unwrap());
    }
}
