//! Exact rational linear algebra: vectors, matrices, reduced row-echelon
//! form, nullspaces, subspaces with canonical bases, and affine solves.
//!
//! Everything here is exact. A `Subspace` always stores its basis in
//! canonical RREF, so subspace equality is plain structural equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    /// Standard basis vector e_i (0-based).
    pub fn std(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index out of range");
        let mut v = Self::zero(dim);
        v.0[i] = crate::scalar::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&n| crate::scalar::int(n)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn concat(&self, other: &Vector) -> Vector {
        let mut data = self.0.clone();
        data.extend(other.0.iter().cloned());
        Vector(data)
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_scalar).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, crate::scalar::one());
        }
        m
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "flat data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_row_vectors(rows: &[Vector]) -> Self {
        let c = rows.first().map(Vector::dim).unwrap_or(0);
        assert!(rows.iter().all(|v| v.dim() == c), "row dimension mismatch");
        Matrix {
            rows: rows.len(),
            cols: c,
            data: rows.iter().flat_map(|v| v.0.iter().cloned()).collect(),
        }
    }

    pub fn from_col_vectors(cols: &[Vector]) -> Self {
        Self::from_row_vectors(cols).transpose()
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let data: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&n| crate::scalar::int(n)).collect())
            .collect();
        Self::from_rows(data).expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix/vector shape mismatch");
        Vector(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .map(|j| self.get(i, j) * v.get(j))
                        .fold(Scalar::zero(), |acc, x| acc + x)
                })
                .collect(),
        )
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Vertical concatenation [self; other].
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Row-major flattening, used for (D, z) pair-space coordinates.
    pub fn flatten_row_major(&self) -> Vector {
        Vector(self.data.clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + &(a * rhs.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| format_scalar(self.get(i, j)))
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Canonical reduced row-echelon form together with the pivot columns.
pub(crate) fn rref_pivots(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a.get(r, c).recip();
        for j in c..a.cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let factor = a.get(i, c).clone();
            for j in c..a.cols {
                let v = a.get(i, j) - &(&factor * a.get(r, j));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rref_rank(m: &Matrix) -> (Matrix, usize) {
    let (reduced, pivots) = rref_pivots(m);
    (reduced, pivots.len())
}

/// Canonical basis of {v | Mv = 0} via the free-variable construction.
pub fn nullspace(m: &Matrix) -> Subspace {
    let (reduced, pivots) = rref_pivots(m);
    let mut basis = Vec::new();
    for free in 0..m.cols() {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = Vector::zero(m.cols());
        v.0[free] = crate::scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            v.0[p] = -reduced.get(row, free);
        }
        basis.push(v);
    }
    Subspace::span(m.cols(), &basis)
}

/// Solves Mv = b exactly. Returns one particular solution (free variables
/// set to zero) plus the homogeneous nullspace; `None` when inconsistent.
pub fn solve_affine(m: &Matrix, b: &Vector) -> Option<(Vector, Subspace)> {
    assert_eq!(m.rows(), b.dim(), "rhs dimension mismatch");
    let augmented = m.hstack(&Matrix::from_col_vectors(std::slice::from_ref(b)));
    let (reduced, pivots) = rref_pivots(&augmented);
    if pivots.contains(&m.cols()) {
        return None;
    }
    let mut particular = Vector::zero(m.cols());
    for (row, &p) in pivots.iter().enumerate() {
        particular.0[p] = reduced.get(row, m.cols()).clone();
    }
    Some((particular, nullspace(m)))
}

/// A linear subspace of Q^n held as a canonical RREF basis. Two equal
/// subspaces always compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Intersect,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(
            ambient,
            &(0..ambient).map(|i| Vector::std(ambient, i)).collect::<Vec<_>>(),
        )
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        assert!(
            vectors.iter().all(|v| v.dim() == ambient),
            "spanning vector dimension mismatch"
        );
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (reduced, pivots) = rref_pivots(&Matrix::from_row_vectors(vectors));
        let basis = (0..pivots.len()).map(|i| reduced.row(i)).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Membership by reduction against the canonical basis.
    pub fn contains(&self, v: &Vector) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coefficients of v in the canonical basis, if v belongs to the space.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        assert_eq!(v.dim(), self.ambient, "ambient dimension mismatch");
        let mut rem = v.clone();
        let mut coeffs = Vec::with_capacity(self.basis.len());
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = rem.0[p].clone();
            if !c.is_zero() {
                rem = &rem - &row.scale(&c);
            }
            coeffs.push(c);
        }
        rem.is_zero().then(|| Vector(coeffs))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    /// Intersection via the kernel of the stacked coefficient system:
    /// solve Σ a_i u_i − Σ b_j w_j = 0 and read the a-part.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        let left = Matrix::from_col_vectors(&self.basis);
        let right = Matrix::from_col_vectors(
            &other.basis.iter().map(|w| -w).collect::<Vec<_>>(),
        );
        let stacked = left.hstack(&right);
        let kernel = nullspace(&stacked);
        let vectors: Vec<Vector> = kernel
            .basis()
            .iter()
            .map(|coeffs| {
                let mut v = Vector::zero(self.ambient);
                for (i, u) in self.basis.iter().enumerate() {
                    v = &v + &u.scale(&coeffs.0[i]);
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vectors)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Greedy lexicographic complement: scans e_0, e_1, ... and keeps each
    /// standard vector that enlarges the span, until the whole space is
    /// reached. Deterministic across runs.
    pub fn standard_complement(&self) -> Vec<usize> {
        let mut current = self.clone();
        let mut picked = Vec::new();
        for j in 0..self.ambient {
            if current.dim() == self.ambient {
                break;
            }
            let e = Vector::std(self.ambient, j);
            if !current.contains(&e) {
                current = current.sum(&Subspace::span(self.ambient, &[e]));
                picked.push(j);
            }
        }
        picked
    }
}

pub fn subspace_combine(a: &Subspace, b: &Subspace, mode: CombineMode) -> Result<Subspace> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::Dimension(format!(
            "subspace ambient dimensions differ: {} vs {}",
            a.ambient_dim(),
            b.ambient_dim()
        )));
    }
    Ok(match mode {
        CombineMode::Sum => a.sum(b),
        CombineMode::Intersect => a.intersect(b),
    })
}

pub fn subspace_contains(a: &Subspace, v: &Vector) -> Result<bool> {
    if a.ambient_dim() != v.dim() {
        return Err(Error::Dimension(format!(
            "vector dimension {} does not match ambient {}",
            v.dim(),
            a.ambient_dim()
        )));
    }
    Ok(a.contains(v))
}
