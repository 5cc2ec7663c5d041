use crate::error::{check_dim, Error, Result};
use num_traits::Zero;

use crate::linalg::{add, dot, neg, Matrix, Rat};
use crate::lp::feasible;

use super::convert::{generators_to_h, h_to_v};
use super::HRep;

pub fn member(p: &HRep, x: &[Rat]) -> Result<bool> {
    p.check_point("member point", x)?;
    Ok(p.satisfied_by(x))
}

pub fn is_empty(p: &HRep) -> bool {
    !feasible(p)
}

pub fn intersect(p: &HRep, q: &HRep) -> Result<HRep> {
    check_dim("intersect", p.dim(), q.dim())?;
    let mut out = p.clone();
    for (a, b) in q.eq_rows() {
        out.push_eq(a.to_vec(), b.clone());
    }
    for (c, d) in q.ineq_rows() {
        out.push_ineq(c.to_vec(), d.clone());
    }
    Ok(out)
}

/// `p × q` over `p.dim() + q.dim()` coordinates, `p`'s block first.
pub fn product(p: &HRep, q: &HRep) -> HRep {
    let n = p.dim() + q.dim();
    let first: Vec<usize> = (0..p.dim()).collect();
    let second: Vec<usize> = (p.dim()..n).collect();
    intersect(&p.embed(n, &first), &q.embed(n, &second)).expect("both embedded in n")
}

/// `{a + b : a ∈ p, b ∈ q}`, via generator sums.
pub fn minkowski_sum(p: &HRep, q: &HRep) -> Result<HRep> {
    check_dim("minkowski_sum", p.dim(), q.dim())?;
    let (vp, vq) = (h_to_v(p), h_to_v(q));
    let points: Vec<Vec<Rat>> = vp.points().iter().flat_map(|a| vq.points().iter().map(move |b| add(a, b))).collect();
    let rays: Vec<Vec<Rat>> = vp.rays().iter().chain(vq.rays()).cloned().collect();
    let lineality: Vec<Vec<Rat>> = vp.lineality().iter().chain(vq.lineality()).cloned().collect();
    Ok(generators_to_h(p.dim(), &points, &rays, &lineality))
}

/// `{t x : x ∈ p}`: generators of `p` are mapped through `t` and converted back.
pub fn linear_image(t: &Matrix, p: &HRep) -> Result<HRep> {
    check_dim("linear_image", t.ncols(), p.dim())?;
    let v = h_to_v(p);
    let map = |vs: &[Vec<Rat>]| vs.iter().map(|x| t.mul_vec(x)).collect::<Vec<_>>();
    Ok(generators_to_h(t.nrows(), &map(v.points()), &map(v.rays()), &map(v.lineality())))
}

/// `{x : t x ∈ q}` by composing each row of `q` with `t`.
pub fn linear_preimage(t: &Matrix, q: &HRep) -> Result<HRep> {
    check_dim("linear_preimage", t.nrows(), q.dim())?;
    let tt = t.transpose();
    let mut out = HRep::whole_space(t.ncols());
    for (a, b) in q.eq_rows() {
        out.push_eq(tt.mul_vec(a), b.clone());
    }
    for (c, d) in q.ineq_rows() {
        out.push_ineq(tt.mul_vec(c), d.clone());
    }
    Ok(out)
}

/// `{v : A v = 0, C v <= 0}` of a nonempty polyhedron.
pub fn recession_cone(p: &HRep) -> Result<HRep> {
    if is_empty(p) {
        return Err(Error::EmptySet("recession cone of the empty set is undefined"));
    }
    Ok(homogenized(p))
}

fn homogenized(p: &HRep) -> HRep {
    let zero = Rat::default();
    let mut out = HRep::whole_space(p.dim());
    for (a, _) in p.eq_rows() {
        out.push_eq(a.to_vec(), zero.clone());
    }
    for (c, _) in p.ineq_rows() {
        out.push_ineq(c.to_vec(), zero.clone());
    }
    out
}

/// `p ⊆ q`, decided on the generators of `p`.
pub fn includes(q: &HRep, p: &HRep) -> Result<bool> {
    check_dim("inclusion", p.dim(), q.dim())?;
    let v = h_to_v(p);
    if v.is_empty() {
        return Ok(true);
    }
    let cone = homogenized(q);
    let in_cone = |r: &[Rat]| cone.satisfied_by(r);
    Ok(v.points().iter().all(|x| q.satisfied_by(x))
        && v.rays().iter().all(|r| in_cone(r))
        && v.lineality().iter().all(|l| in_cone(l) && in_cone(&neg(l))))
}

pub fn set_equal(p: &HRep, q: &HRep) -> Result<bool> {
    Ok(includes(q, p)? && includes(p, q)?)
}

/// Whether direction `v` lies in the recession cone of `p` (rows only; `p` assumed nonempty).
pub(crate) fn is_recession_direction(p: &HRep, v: &[Rat]) -> bool {
    p.eq_rows().all(|(a, _)| dot(a, v).is_zero()) && p.ineq_rows().all(|(c, _)| dot(c, v) <= Rat::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_vec, ratio};

    fn square() -> HRep {
        HRep::from_int_rows(2, &[], &[&[-1, 0, 0], &[1, 0, 1], &[0, -1, 0], &[0, 1, 1]])
    }

    fn interval(lo: i64, hi: i64) -> HRep {
        HRep::from_int_rows(1, &[], &[&[-1, -lo], &[1, hi]])
    }

    #[test]
    fn membership() {
        assert!(member(&square(), &[ratio(1, 2), ratio(1, 2)]).unwrap());
        assert!(!member(&square(), &rat_vec(&[2, 0])).unwrap());
        let diag = HRep::from_int_rows(2, &[&[1, -1, 0]], &[]);
        assert!(member(&diag, &rat_vec(&[3, 3])).unwrap());
        assert!(member(&diag, &rat_vec(&[3])).is_err());
    }

    #[test]
    fn emptiness() {
        assert!(is_empty(&HRep::from_int_rows(1, &[], &[&[1, 0], &[-1, -1]])));
        assert!(!is_empty(&HRep::whole_space(2)));
        assert!(!is_empty(&HRep::from_int_rows(1, &[&[1, 5]], &[])));
    }

    #[test]
    fn intersections() {
        let lo = HRep::from_int_rows(1, &[], &[&[-1, 0]]);
        let hi = HRep::from_int_rows(1, &[], &[&[1, 1]]);
        assert!(set_equal(&intersect(&lo, &hi).unwrap(), &interval(0, 1)).unwrap());
        assert!(set_equal(&intersect(&square(), &HRep::whole_space(2)).unwrap(), &square()).unwrap());
        let a = HRep::from_int_rows(1, &[], &[&[-1, -1]]);
        let b = HRep::from_int_rows(1, &[], &[&[1, 0]]);
        assert!(is_empty(&intersect(&a, &b).unwrap()));
        assert!(intersect(&a, &square()).is_err());
    }

    #[test]
    fn products() {
        assert!(set_equal(&product(&interval(0, 1), &interval(0, 1)), &square()).unwrap());
        assert!(set_equal(&product(&square(), &HRep::whole_space(0)), &square()).unwrap());
        assert!(is_empty(&product(&HRep::empty(1), &interval(0, 1))));
    }

    #[test]
    fn minkowski_sums() {
        let s = minkowski_sum(&interval(0, 1), &interval(0, 1)).unwrap();
        assert!(set_equal(&s, &interval(0, 2)).unwrap());
        let origin = HRep::point(&rat_vec(&[0, 0]));
        assert!(set_equal(&minkowski_sum(&square(), &origin).unwrap(), &square()).unwrap());
        let ray = HRep::from_int_rows(2, &[&[0, 1, 0]], &[&[-1, 0, 0]]);
        assert!(set_equal(&minkowski_sum(&origin, &ray).unwrap(), &ray).unwrap());
    }

    #[test]
    fn linear_images() {
        let t = Matrix::from_ints(2, &[&[1, 1]]);
        assert!(set_equal(&linear_image(&t, &square()).unwrap(), &interval(0, 2)).unwrap());
        assert!(set_equal(&linear_image(&Matrix::identity(2), &square()).unwrap(), &square()).unwrap());
        let zero = linear_image(&Matrix::zeros(2, 2), &square()).unwrap();
        assert!(set_equal(&zero, &HRep::point(&rat_vec(&[0, 0]))).unwrap());
    }

    #[test]
    fn linear_preimages() {
        assert_eq!(linear_preimage(&Matrix::identity(2), &square()).unwrap(), square());
        let t = Matrix::from_ints(1, &[&[1], &[1]]);
        let q = HRep::from_int_rows(2, &[], &[&[1, 0, 1], &[0, 1, 2]]);
        let pre = linear_preimage(&t, &q).unwrap();
        assert!(set_equal(&pre, &HRep::from_int_rows(1, &[], &[&[1, 1]])).unwrap());
        assert!(set_equal(&linear_preimage(&t, &HRep::whole_space(2)).unwrap(), &HRep::whole_space(1)).unwrap());
    }

    #[test]
    fn recession_cones() {
        let rc = recession_cone(&interval(0, 1)).unwrap();
        assert!(set_equal(&rc, &HRep::point(&[rat(0)])).unwrap());
        let half = HRep::from_int_rows(1, &[], &[&[-1, 0]]);
        assert!(set_equal(&recession_cone(&half).unwrap(), &half).unwrap());
        let abs = HRep::from_int_rows(2, &[], &[&[1, -1, 0], &[-1, -1, 0]]);
        assert!(set_equal(&recession_cone(&abs).unwrap(), &abs).unwrap());
        assert!(recession_cone(&HRep::empty(1)).is_err());
    }

    #[test]
    fn set_equality() {
        let a = HRep::from_int_rows(1, &[], &[&[1, 1], &[1, 2]]);
        let b = HRep::from_int_rows(1, &[], &[&[1, 1]]);
        assert!(set_equal(&a, &b).unwrap());
        assert!(!set_equal(&interval(0, 1), &interval(0, 2)).unwrap());
        let e1 = HRep::from_int_rows(1, &[], &[&[1, 0], &[-1, -1]]);
        assert!(set_equal(&e1, &HRep::empty(1)).unwrap());
        assert!(!set_equal(&HRep::whole_space(1), &HRep::from_int_rows(1, &[], &[&[-1, 0]])).unwrap());
    }
}
