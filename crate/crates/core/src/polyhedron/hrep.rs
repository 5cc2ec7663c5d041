use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::linalg::{dot, is_zero_vec, primitive, rat_vec, Matrix, Rat};

/// A polyhedron `{x : A x = b, C x <= d}` in `dim`-dimensional space.
///
/// The equality block encodes the affine subspace the set lives in, the
/// inequality block the finitely many half-spaces cutting it down.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HRep {
    dim: usize,
    eq_a: Matrix,
    eq_b: Vec<Rat>,
    ineq_c: Matrix,
    ineq_d: Vec<Rat>,
}

impl HRep {
    pub fn new(dim: usize, eq_a: Matrix, eq_b: Vec<Rat>, ineq_c: Matrix, ineq_d: Vec<Rat>) -> Result<Self> {
        check_dim("equality columns", dim, eq_a.ncols())?;
        check_dim("inequality columns", dim, ineq_c.ncols())?;
        check_dim("equality right-hand side", eq_a.nrows(), eq_b.len())?;
        check_dim("inequality right-hand side", ineq_c.nrows(), ineq_d.len())?;
        Ok(HRep { dim, eq_a, eq_b, ineq_c, ineq_d })
    }

    /// All of `dim`-space: no rows at all.
    pub fn whole_space(dim: usize) -> Self {
        HRep { dim, eq_a: Matrix::empty(dim), eq_b: Vec::new(), ineq_c: Matrix::empty(dim), ineq_d: Vec::new() }
    }

    /// Canonical empty set: the single row `0·x <= -1`.
    pub fn empty(dim: usize) -> Self {
        let mut p = Self::whole_space(dim);
        p.push_ineq(crate::linalg::zeros(dim), -Rat::one());
        p
    }

    /// Integer literal constructor. Each row holds `dim` coefficients followed by the right-hand side.
    pub fn from_int_rows(dim: usize, eq: &[&[i64]], ineq: &[&[i64]]) -> Self {
        let mut p = Self::whole_space(dim);
        for r in eq {
            assert_eq!(r.len(), dim + 1, "row needs dim coefficients and a rhs");
            p.push_eq(rat_vec(&r[..dim]), crate::linalg::rat(r[dim]));
        }
        for r in ineq {
            assert_eq!(r.len(), dim + 1, "row needs dim coefficients and a rhs");
            p.push_ineq(rat_vec(&r[..dim]), crate::linalg::rat(r[dim]));
        }
        p
    }

    /// The single point `x`, as equality rows `x_i = v_i`.
    pub fn point(x: &[Rat]) -> Self {
        let n = x.len();
        let mut p = Self::whole_space(n);
        for (i, xi) in x.iter().enumerate() {
            p.push_eq(crate::linalg::unit(n, i), xi.clone());
        }
        p
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

    pub fn ineq_c(&self) -> &Matrix {
        &self.ineq_c
    }

    pub fn ineq_d(&self) -> &[Rat] {
        &self.ineq_d
    }

    pub fn n_eq(&self) -> usize {
        self.eq_b.len()
    }

    pub fn n_ineq(&self) -> usize {
        self.ineq_d.len()
    }

    pub fn n_rows(&self) -> usize {
        self.n_eq() + self.n_ineq()
    }

    pub fn eq_rows(&self) -> impl Iterator<Item = (&[Rat], &Rat)> {
        self.eq_a.rows().iter().map(Vec::as_slice).zip(&self.eq_b)
    }

    pub fn ineq_rows(&self) -> impl Iterator<Item = (&[Rat], &Rat)> {
        self.ineq_c.rows().iter().map(Vec::as_slice).zip(&self.ineq_d)
    }

    pub fn push_eq(&mut self, a: Vec<Rat>, b: Rat) {
        self.eq_a.push_row(a);
        self.eq_b.push(b);
    }

    pub fn push_ineq(&mut self, c: Vec<Rat>, d: Rat) {
        self.ineq_c.push_row(c);
        self.ineq_d.push(d);
    }

    pub fn with_eq(mut self, a: Vec<Rat>, b: Rat) -> Self {
        self.push_eq(a, b);
        self
    }

    pub fn with_ineq(mut self, c: Vec<Rat>, d: Rat) -> Self {
        self.push_ineq(c, d);
        self
    }

    /// Row-level membership test; the caller guarantees `x.len() == dim`.
    pub(crate) fn satisfied_by(&self, x: &[Rat]) -> bool {
        self.eq_rows().all(|(a, b)| &dot(a, x) == b) && self.ineq_rows().all(|(c, d)| &dot(c, x) <= d)
    }

    pub(crate) fn check_point(&self, context: &'static str, x: &[Rat]) -> Result<()> {
        check_dim(context, self.dim, x.len())
    }

    /// Same set, with every row scaled to coprime integers, trivial rows dropped,
    /// duplicates removed and rows sorted. A row that is infeasible on its own
    /// collapses the whole representation to [`HRep::empty`].
    pub fn canonicalized(&self) -> HRep {
        let n = self.dim;
        let mut eqs: Vec<Vec<Rat>> = Vec::new();
        for (a, b) in self.eq_rows() {
            if is_zero_vec(a) {
                if b.is_zero() {
                    continue;
                }
                return HRep::empty(n);
            }
            let mut row = a.to_vec();
            row.push(b.clone());
            let row = primitive(&row);
            let flip = row.iter().take(n).find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
            eqs.push(if flip { row.iter().map(|x| -x).collect() } else { row });
        }
        let mut ineqs: Vec<Vec<Rat>> = Vec::new();
        for (c, d) in self.ineq_rows() {
            if is_zero_vec(c) {
                if !d.is_negative() {
                    continue;
                }
                return HRep::empty(n);
            }
            let mut row = c.to_vec();
            row.push(d.clone());
            ineqs.push(primitive(&row));
        }
        eqs.sort();
        eqs.dedup();
        ineqs.sort();
        ineqs.dedup();
        let mut out = HRep::whole_space(n);
        for mut r in eqs {
            let b = r.pop().expect("row has rhs");
            out.push_eq(r, b);
        }
        for mut r in ineqs {
            let d = r.pop().expect("row has rhs");
            out.push_ineq(r, d);
        }
        out
    }

    /// Reorders coordinates: coordinate `j` of the result is coordinate `perm[j]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<HRep> {
        check_dim("permutation length", self.dim, perm.len())?;
        let mut seen = vec![false; self.dim];
        for &p in perm {
            if p >= self.dim || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Invalid(format!("{perm:?} is not a permutation")));
            }
        }
        let remap = |row: &[Rat]| perm.iter().map(|&p| row[p].clone()).collect::<Vec<_>>();
        let mut out = HRep::whole_space(self.dim);
        for (a, b) in self.eq_rows() {
            out.push_eq(remap(a), b.clone());
        }
        for (c, d) in self.ineq_rows() {
            out.push_ineq(remap(c), d.clone());
        }
        Ok(out)
    }

    /// Embeds `self` into a `total`-dimensional space, placing coordinate `j`
    /// at position `positions[j]`; other coordinates are free.
    pub fn embed(&self, total: usize, positions: &[usize]) -> HRep {
        assert_eq!(positions.len(), self.dim);
        let lift = |row: &[Rat]| {
            let mut v = crate::linalg::zeros(total);
            for (j, &p) in positions.iter().enumerate() {
                v[p] = row[j].clone();
            }
            v
        };
        let mut out = HRep::whole_space(total);
        for (a, b) in self.eq_rows() {
            out.push_eq(lift(a), b.clone());
        }
        for (c, d) in self.ineq_rows() {
            out.push_ineq(lift(c), d.clone());
        }
        out
    }
}

fn write_row(f: &mut fmt::Formatter<'_>, a: &[Rat], rel: &str, b: &Rat) -> fmt::Result {
    let coeffs: Vec<String> = a.iter().map(ToString::to_string).collect();
    writeln!(f, "⟨({}), x⟩ {rel} {b}", coeffs.join(", "))
}

impl fmt::Display for HRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "hrep in dimension {}", self.dim)?;
        for (a, b) in self.eq_rows() {
            write_row(f, a, "=", b)?;
        }
        for (c, d) in self.ineq_rows() {
            write_row(f, c, "≤", d)?;
        }
        Ok(())
    }
}

pub(crate) fn fmt_rows(f: &mut fmt::Formatter<'_>, rows: &Matrix, rhs: &[Rat], rel: &str) -> fmt::Result {
    for (a, b) in rows.rows().iter().zip(rhs) {
        write_row(f, a, rel, b)?;
    }
    Ok(())
}
