//! Exact rational scalars, vectors and matrices, plus the row-reduction
//! primitives the rest of the crate is built on.
//!
//! Vectors are plain `Vec<Rat>`; a vector of length zero is a point of the
//! zero space and is legal everywhere. [`Matrix`] stores its column count
//! explicitly so that a matrix with no rows still knows its width.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_vec(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&x| rat(x)).collect()
}

pub fn zeros(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = zeros(n);
    v[i] = Rat::one();
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}", self.0)
    }
}

impl std::error::Error for ParseRatError {}

/// Parses the literal syntax `p/q` or `p`: an optional leading minus followed
/// by decimal digits, with an optional `/` and a nonzero digit-only denominator.
pub fn parse_rat(s: &str) -> std::result::Result<Rat, ParseRatError> {
    let err = || ParseRatError(s.to_string());
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !digits(num) {
        return Err(err());
    }
    let mut numer = BigInt::from_str(num).map_err(|_| err())?;
    if neg {
        numer = -numer;
    }
    let denom = match den {
        Some(d) if digits(d) => BigInt::from_str(d).map_err(|_| err())?,
        Some(_) => return Err(err()),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rat::new(numer, denom))
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rat], s: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * s).collect()
}

pub fn neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Positive multiple of `v` with coprime integer entries. The zero vector is returned unchanged.
pub fn primitive(v: &[Rat]) -> Vec<Rat> {
    if is_zero_vec(v) {
        return v.to_vec();
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().filter(|x| !x.is_zero()).fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| Rat::from_integer(x / &gcd)).collect()
}

/// Like [`primitive`], but also flips the sign so the first nonzero entry is positive.
pub fn primitive_signed(v: &[Rat]) -> Vec<Rat> {
    let p = primitive(v);
    match p.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => neg(&p),
        _ => p,
    }
}

/// Dense rectangular matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: Vec<Vec<Rat>>,
    ncols: usize,
}

impl Matrix {
    /// A matrix with no rows and `ncols` columns.
    pub fn empty(ncols: usize) -> Self {
        Matrix { rows: Vec::new(), ncols }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>, ncols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch { context: "matrix row", expected: ncols, found: bad.len() });
        }
        Ok(Matrix { rows, ncols })
    }

    /// Integer matrix, for literals in tests and examples.
    pub fn from_ints(ncols: usize, rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| rat_vec(r)).collect(), ncols).expect("rows must have ncols entries")
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix { rows: vec![zeros(ncols); nrows], ncols }
    }

    pub fn identity(n: usize) -> Self {
        Matrix { rows: (0..n).map(|i| unit(n, i)).collect(), ncols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn into_rows(self) -> Vec<Vec<Rat>> {
        self.rows
    }

    pub fn push_row(&mut self, row: Vec<Rat>) {
        assert_eq!(row.len(), self.ncols, "row width must match matrix");
        self.rows.push(row);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| is_zero_vec(r))
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.ncols);
        self.rows.iter().map(|r| dot(r, x)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols, other.nrows());
        let t = other.transpose();
        Matrix {
            rows: self.rows.iter().map(|r| t.rows.iter().map(|c| dot(r, c)).collect()).collect(),
            ncols: other.ncols,
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix {
            rows: (0..self.ncols).map(|j| self.rows.iter().map(|r| r[j].clone()).collect()).collect(),
            ncols: self.rows.len(),
        }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols, other.ncols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Matrix { rows, ncols: self.ncols }
    }

    /// Columns given as vectors.
    pub fn from_columns(cols: &[Vec<Rat>], nrows: usize) -> Matrix {
        Matrix { rows: (0..nrows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect(), ncols: cols.len() }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form and the pivot columns, in increasing order.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows = m.rows.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (Matrix { rows, ncols: m.ncols }, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Rank of a list of vectors of common length `n`.
pub fn rank_of(vectors: &[Vec<Rat>], n: usize) -> usize {
    rank(&Matrix { rows: vectors.to_vec(), ncols: n })
}

/// A basis of `{v : m·v = 0}`, one vector per free column of the echelon form.
pub fn nullspace_basis(m: &Matrix) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(m);
    let n = m.ncols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = zeros(n);
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.rows[i][f].clone();
            }
            v
        })
        .collect()
}

/// Solution set of `a·x = b` written as a particular point plus the span of a kernel basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Rat>,
    pub kernel: Vec<Vec<Rat>>,
}

/// Solves `a·x = b`; `None` when the system is inconsistent.
pub fn solve_affine(a: &Matrix, b: &[Rat]) -> Result<Option<AffineSolution>> {
    crate::error::check_dim("solve_affine rhs", a.nrows(), b.len())?;
    let n = a.ncols;
    let augmented = Matrix {
        rows: a
            .rows
            .iter()
            .zip(b)
            .map(|(r, bi)| {
                let mut r = r.clone();
                r.push(bi.clone());
                r
            })
            .collect(),
        ncols: n + 1,
    };
    let (r, pivots) = rref(&augmented);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut particular = zeros(n);
    for (i, &p) in pivots.iter().enumerate() {
        particular[p] = r.rows[i][n].clone();
    }
    Ok(Some(AffineSolution { particular, kernel: nullspace_basis(a) }))
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.ncols;
    if m.nrows() != n {
        return None;
    }
    let aug = Matrix {
        rows: m
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut r = r.clone();
                r.extend(unit(n, i));
                r
            })
            .collect(),
        ncols: 2 * n,
    };
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix { rows: r.rows.into_iter().map(|row| row[n..].to_vec()).collect(), ncols: n })
}
