//! Polyhedral convex multifunctions `F: R^nx ⇉ R^ny`, identified with their graphs.
//!
//! Graph coordinates are always ordered `(x, y)`: the first `nx` coordinates
//! are the argument block, the last `ny` the value block. Every operation is
//! a graph-level polyhedral construction: domains and ranges are projections,
//! values substitute `x`, images intersect with `C × R^ny` and project,
//! composition intersects two embedded graphs and projects out the middle
//! block, and sums map the joint graph through `(x, y1, y2) ↦ (x, y1 + y2)`.
//!
//! Closedness of linear images is never in question here: in finite
//! dimension every linear image of a polyhedron is a closed polyhedron, so
//! no "closed under finite-codimensional subspaces" hypothesis is carried.

use std::fmt;

use crate::error::{check_dim, Result};
use crate::linalg::{dot, Matrix, Rat};
use crate::polyhedron::{intersect, linear_image, product, project, CoordSet, HRep};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiFn {
    nx: usize,
    ny: usize,
    graph: HRep,
}

impl MultiFn {
    pub fn new(nx: usize, ny: usize, graph: HRep) -> Result<Self> {
        check_dim("multifunction graph", nx + ny, graph.dim())?;
        Ok(MultiFn { nx, ny, graph })
    }

    /// `x ↦ {x}`.
    pub fn identity(n: usize) -> Self {
        let mut g = HRep::whole_space(2 * n);
        for i in 0..n {
            let mut row = crate::linalg::zeros(2 * n);
            row[i] = Rat::from_integer(1.into());
            row[n + i] = Rat::from_integer((-1).into());
            g.push_eq(row, Rat::default());
        }
        MultiFn { nx: n, ny: n, graph: g }
    }

    /// `x ↦ {m x + c}`.
    pub fn affine(m: &Matrix, c: &[Rat]) -> Result<Self> {
        check_dim("affine offset", m.nrows(), c.len())?;
        let (nx, ny) = (m.ncols(), m.nrows());
        let mut g = HRep::whole_space(nx + ny);
        for (i, ci) in c.iter().enumerate() {
            let mut row: Vec<Rat> = m.row(i).to_vec();
            row.extend(crate::linalg::zeros(ny));
            row[nx + i] = Rat::from_integer((-1).into());
            g.push_eq(row, -ci.clone());
        }
        Ok(MultiFn { nx, ny, graph: g })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn graph(&self) -> &HRep {
        &self.graph
    }

    fn x_block(&self) -> CoordSet {
        CoordSet::range(0, self.nx)
    }

    fn y_block(&self) -> CoordSet {
        CoordSet::range(self.nx, self.nx + self.ny)
    }
}

impl fmt::Display for MultiFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "multifunction R^{} ⇉ R^{}, graph over (x, y):", self.nx, self.ny)?;
        write!(f, "{}", self.graph)
    }
}

/// `dom F`, the projection of the graph onto the x-block.
pub fn domain(f: &MultiFn) -> Result<HRep> {
    project(&f.graph, &f.x_block())
}

/// `rge F`, the projection of the graph onto the y-block.
pub fn range(f: &MultiFn) -> Result<HRep> {
    project(&f.graph, &f.y_block())
}

pub fn inverse(f: &MultiFn) -> MultiFn {
    let perm: Vec<usize> = (f.nx..f.nx + f.ny).chain(0..f.nx).collect();
    MultiFn { nx: f.ny, ny: f.nx, graph: f.graph.permute(&perm).expect("block swap is a permutation") }
}

/// `F(x)`: the graph rows with the x-block fixed, `A_y y (rel) b - A_x x`.
pub fn value(f: &MultiFn, x: &[Rat]) -> Result<HRep> {
    check_dim("value point", f.nx, x.len())?;
    let nx = f.nx;
    let mut out = HRep::whole_space(f.ny);
    for (a, b) in f.graph.eq_rows() {
        out.push_eq(a[nx..].to_vec(), b - dot(&a[..nx], x));
    }
    for (c, d) in f.graph.ineq_rows() {
        out.push_ineq(c[nx..].to_vec(), d - dot(&c[..nx], x));
    }
    Ok(out)
}

/// `F(C) = π_Y(gph F ∩ (C × R^ny))`.
pub fn image(f: &MultiFn, c: &HRep) -> Result<HRep> {
    check_dim("image set", f.nx, c.dim())?;
    let lifted = product(c, &HRep::whole_space(f.ny));
    project(&intersect(&f.graph, &lifted)?, &f.y_block())
}

/// `F⁻¹(D) = {x : F(x) ∩ D ≠ ∅}`.
pub fn preimage(f: &MultiFn, d: &HRep) -> Result<HRep> {
    check_dim("preimage set", f.ny, d.dim())?;
    image(&inverse(f), d)
}

/// `G ∘ F`, with graph `π_(x,z)(Ω₁ ∩ Ω₂)` over the ordering `(x, z, y)`, where
/// `Ω₁ = {(x,z,y) : (x,y) ∈ gph F}` and `Ω₂ = {(x,z,y) : (y,z) ∈ gph G}`.
pub fn compose(g: &MultiFn, f: &MultiFn) -> Result<MultiFn> {
    check_dim("composition inner dimension", f.ny, g.nx)?;
    let (nx, ny, nz) = (f.nx, f.ny, g.ny);
    let total = nx + nz + ny;
    let x_pos: Vec<usize> = (0..nx).collect();
    let z_pos: Vec<usize> = (nx..nx + nz).collect();
    let y_pos: Vec<usize> = (nx + nz..total).collect();

    let omega1 = f.graph.embed(total, &[x_pos, y_pos.clone()].concat());
    let omega2 = g.graph.embed(total, &[y_pos, z_pos].concat());
    let graph = project(&intersect(&omega1, &omega2)?, &CoordSet::range(0, nx + nz))?;
    MultiFn::new(nx, nz, graph)
}

/// `F₁ + F₂`, as the image of `Ω₁ ∩ Ω₂ ⊂ (x, y1, y2)`-space under `(x, y1, y2) ↦ (x, y1 + y2)`.
pub fn sum(f1: &MultiFn, f2: &MultiFn) -> Result<MultiFn> {
    check_dim("sum argument dimension", f1.nx, f2.nx)?;
    check_dim("sum value dimension", f1.ny, f2.ny)?;
    let (nx, ny) = (f1.nx, f1.ny);
    let total = nx + 2 * ny;
    let x_pos: Vec<usize> = (0..nx).collect();
    let y1_pos: Vec<usize> = (nx..nx + ny).collect();
    let y2_pos: Vec<usize> = (nx + ny..total).collect();
    let omega1 = f1.graph.embed(total, &[x_pos.clone(), y1_pos].concat());
    let omega2 = f2.graph.embed(total, &[x_pos, y2_pos].concat());

    let mut a = Matrix::zeros(0, total);
    for i in 0..nx {
        a.push_row(crate::linalg::unit(total, i));
    }
    for j in 0..ny {
        let mut row = crate::linalg::unit(total, nx + j);
        row[nx + ny + j] = Rat::from_integer(1.into());
        a.push_row(row);
    }
    let graph = linear_image(&a, &intersect(&omega1, &omega2)?)?;
    MultiFn::new(nx, ny, graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_vec, ratio};
    use crate::polyhedron::{is_empty, member, set_equal};

    fn interval(lo: i64, hi: i64) -> HRep {
        HRep::from_int_rows(1, &[], &[&[-1, -lo], &[1, hi]])
    }

    /// gph = {(x, y) : y >= x, y >= -x}
    fn abs_epi() -> MultiFn {
        MultiFn::new(1, 1, HRep::from_int_rows(2, &[], &[&[1, -1, 0], &[-1, -1, 0]])).unwrap()
    }

    /// gph = {(x, y) : 0 <= x <= 1, y = x}
    fn diag_segment() -> MultiFn {
        MultiFn::new(1, 1, HRep::from_int_rows(2, &[&[1, -1, 0]], &[&[-1, 0, 0], &[1, 0, 1]])).unwrap()
    }

    fn doubling() -> MultiFn {
        MultiFn::affine(&Matrix::from_ints(1, &[&[2]]), &rat_vec(&[0])).unwrap()
    }

    #[test]
    fn constructor_checks_dims() {
        assert!(MultiFn::new(1, 1, HRep::whole_space(3)).is_err());
    }

    #[test]
    fn domains() {
        assert!(set_equal(&domain(&abs_epi()).unwrap(), &HRep::whole_space(1)).unwrap());
        assert!(set_equal(&domain(&diag_segment()).unwrap(), &interval(0, 1)).unwrap());
        let empty = MultiFn::new(1, 1, HRep::empty(2)).unwrap();
        assert!(is_empty(&domain(&empty).unwrap()));
    }

    #[test]
    fn ranges() {
        assert!(set_equal(&range(&doubling()).unwrap(), &HRep::whole_space(1)).unwrap());
        assert!(set_equal(&range(&diag_segment()).unwrap(), &interval(0, 1)).unwrap());
        let upper = MultiFn::new(1, 1, HRep::from_int_rows(2, &[], &[&[0, -1, 0]])).unwrap();
        let nonneg = HRep::from_int_rows(1, &[], &[&[-1, 0]]);
        assert!(set_equal(&range(&upper).unwrap(), &nonneg).unwrap());
    }

    #[test]
    fn inverses() {
        let f = abs_epi();
        let back = inverse(&inverse(&f));
        assert!(set_equal(back.graph(), f.graph()).unwrap());
        let inv = inverse(&doubling());
        for y in [-3, 0, 5] {
            let v = value(&inv, &[rat(y)]).unwrap();
            assert!(set_equal(&v, &HRep::point(&[ratio(y, 2)])).unwrap());
        }
        let empty = MultiFn::new(1, 2, HRep::empty(3)).unwrap();
        let inv = inverse(&empty);
        assert_eq!((inv.nx(), inv.ny()), (2, 1));
        assert!(is_empty(inv.graph()));
    }

    #[test]
    fn values() {
        let v = value(&abs_epi(), &[rat(-2)]).unwrap();
        assert!(set_equal(&v, &HRep::from_int_rows(1, &[], &[&[-1, -2]])).unwrap());
        assert!(is_empty(&value(&diag_segment(), &[rat(3)]).unwrap()));
        let id = MultiFn::identity(1);
        assert!(set_equal(&value(&id, &[rat(7)]).unwrap(), &HRep::point(&[rat(7)])).unwrap());
        assert!(value(&id, &rat_vec(&[1, 2])).is_err());
    }

    #[test]
    fn images() {
        let id = MultiFn::identity(1);
        assert!(set_equal(&image(&id, &interval(0, 1)).unwrap(), &interval(0, 1)).unwrap());
        let f = abs_epi();
        let all = image(&f, &HRep::whole_space(1)).unwrap();
        assert!(set_equal(&all, &range(&f).unwrap()).unwrap());
        let above = MultiFn::new(1, 1, HRep::from_int_rows(2, &[], &[&[1, -1, 0]])).unwrap();
        let img = image(&above, &interval(0, 1)).unwrap();
        assert!(set_equal(&img, &HRep::from_int_rows(1, &[], &[&[-1, 0]])).unwrap());
    }

    #[test]
    fn preimages() {
        let id = MultiFn::identity(1);
        assert!(set_equal(&preimage(&id, &interval(0, 1)).unwrap(), &interval(0, 1)).unwrap());
        let f = diag_segment();
        let all = preimage(&f, &HRep::whole_space(1)).unwrap();
        assert!(set_equal(&all, &domain(&f).unwrap()).unwrap());
        let pre = preimage(&doubling(), &interval(0, 2)).unwrap();
        assert!(set_equal(&pre, &interval(0, 1)).unwrap());
    }

    #[test]
    fn compositions() {
        let f = MultiFn::affine(&Matrix::from_ints(1, &[&[1]]), &rat_vec(&[1])).unwrap();
        let g = MultiFn::affine(&Matrix::from_ints(1, &[&[3]]), &rat_vec(&[0])).unwrap();
        let gf = compose(&g, &f).unwrap();
        for x in [-2, 0, 1, 4] {
            let v = value(&gf, &[rat(x)]).unwrap();
            assert!(set_equal(&v, &HRep::point(&[rat(3 * x + 3)])).unwrap());
        }
        let with_id = compose(&MultiFn::identity(1), &abs_epi()).unwrap();
        assert!(set_equal(with_id.graph(), abs_epi().graph()).unwrap());
        let empty = MultiFn::new(1, 1, HRep::empty(2)).unwrap();
        assert!(is_empty(compose(&g, &empty).unwrap().graph()));
        assert!(compose(&MultiFn::identity(2), &f).is_err());
    }

    #[test]
    fn sums() {
        let f1 = MultiFn::new(1, 1, HRep::from_int_rows(2, &[], &[&[1, -1, 0]])).unwrap();
        let f2 = MultiFn::new(1, 1, HRep::from_int_rows(2, &[], &[&[-1, -1, 0]])).unwrap();
        let s = sum(&f1, &f2).unwrap();
        let nonneg = HRep::from_int_rows(1, &[], &[&[-1, 0]]);
        for x in [-3, 0, 2] {
            assert!(set_equal(&value(&s, &[rat(x)]).unwrap(), &nonneg).unwrap());
        }
        let zero = MultiFn::new(1, 1, HRep::from_int_rows(2, &[&[0, 1, 0]], &[])).unwrap();
        assert!(set_equal(sum(&abs_epi(), &zero).unwrap().graph(), abs_epi().graph()).unwrap());
        let d = domain(
            &sum(
                &diag_segment(),
                &MultiFn::new(1, 1, HRep::from_int_rows(2, &[], &[&[1, 0, 2], &[-1, 0, -1]])).unwrap(),
            )
            .unwrap(),
        )
        .unwrap();
        assert!(set_equal(&d, &HRep::point(&[rat(1)])).unwrap());
        assert!(member(&d, &[rat(1)]).unwrap());
        assert!(sum(&f1, &MultiFn::identity(2)).is_err());
    }
}
