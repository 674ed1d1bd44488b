//! Pseudo-derivations: linear maps D with a companion element z obeying
//!
//!   D(x·y) = D(x)·y + x·D(y) + (z;x,y) + (x·y)·z.
//!
//! The defining condition is linear in the joint unknown (D, z), so the
//! full solution set is one nullspace computation in dimension n² + n.

use crate::algebra::{BolAlgebra, Profile};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve_affine, Matrix, Subspace, Vector};
use crate::scalar::{zero, Scalar};

/// Joint solution space. Coordinates 0..n² are the entries of D in
/// row-major order, coordinates n²..n²+n the companion z.
pub struct PDerSolution {
    pub algebra_dim: usize,
    pub pair_space: Subspace,
}

impl PDerSolution {
    /// Splits a point of the pair space into (D, z).
    pub fn split(&self, point: &Vector) -> (Matrix, Vector) {
        let n = self.algebra_dim;
        assert_eq!(point.dim(), n * n + n, "pair space point expected");
        let d = Matrix::from_flat(n, n, point.0[..n * n].to_vec());
        let z = Vector(point.0[n * n..].to_vec());
        (d, z)
    }

    pub fn contains_pair(&self, d: &Matrix, z: &Vector) -> bool {
        self.pair_space.contains(&d.flatten_row_major().concat(z))
    }
}

/// Index pairs the defining condition must be imposed on. When the binary
/// part is skew and the ternary part is skew in its last two slots, the
/// (j,i) equation is the negative of the (i,j) one and the diagonal is
/// trivial, so i < j suffices; otherwise every ordered pair carries
/// independent content.
fn constraint_pairs(b: &BolAlgebra) -> Vec<(usize, usize)> {
    let n = b.dim();
    let axioms = b.check_axioms(Profile::Consistent);
    let skew = axioms.entry("binary-skew").is_some_and(|e| e.passed)
        && axioms.entry("axiom-i").is_some_and(|e| e.passed);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if skew && j <= i {
                continue;
            }
            pairs.push((i, j));
        }
    }
    pairs
}

/// Rows of the homogeneous system over the given pairs: for each pair and
/// output coordinate, the linear functional in (D, z) that must vanish.
fn constraint_matrix(b: &BolAlgebra, pairs: &[(usize, usize)]) -> Matrix {
    let n = b.dim();
    let cols = n * n + n;
    let e: Vec<Vector> = (0..n).map(|i| Vector::std(n, i)).collect();
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(pairs.len() * n);
    for &(i, j) in pairs {
        let product = b.binary_basis(i, j);
        for r in 0..n {
            let mut row: Vec<Scalar> = vec![zero(); cols];
            // D(e_i·e_j) coordinate r depends on d_{r q}.
            for q in 0..n {
                row[r * n + q] += product.get(q);
            }
            // -D(e_i)·e_j: D(e_i) = Σ_p d_{p i} e_p.
            for p in 0..n {
                row[p * n + i] -= b.binary_basis(p, j).get(r);
            }
            // -e_i·D(e_j).
            for p in 0..n {
                row[p * n + j] -= b.binary_basis(i, p).get(r);
            }
            // -(z; e_i, e_j) and -(e_i·e_j)·z.
            for p in 0..n {
                row[n * n + p] -= b.ternary_basis(p, i, j).get(r);
                row[n * n + p] -= b.binary(product, &e[p]).get(r);
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        Matrix::zeros(0, cols)
    } else {
        Matrix::from_rows(rows).expect("constraint rows are rectangular")
    }
}

/// Computes the full pseudo-derivation pair space.
pub fn pder_pairs(b: &BolAlgebra) -> PDerSolution {
    let pairs = constraint_pairs(b);
    PDerSolution {
        algebra_dim: b.dim(),
        pair_space: nullspace(&constraint_matrix(b, &pairs)),
    }
}

/// Companions of a fixed D: the affine set of z making (D, z) a
/// pseudo-derivation pair. Imposed over all ordered pairs.
pub struct CompanionSet {
    pub defined: bool,
    pub particular: Option<Vector>,
    pub homogeneous: Subspace,
}

pub fn companions_of(b: &BolAlgebra, d: &Matrix) -> Result<CompanionSet> {
    let n = b.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::Dimension(format!(
            "companion matrix must be {n}x{n}, got {}x{}",
            d.rows(),
            d.cols()
        )));
    }
    let e: Vec<Vector> = (0..n).map(|i| Vector::std(n, i)).collect();
    let de: Vec<Vector> = (0..n).map(|i| d.mul_vec(&e[i])).collect();
    let mut a_rows: Vec<Vec<Scalar>> = Vec::with_capacity(n * n * n);
    let mut rhs = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let product = b.binary_basis(i, j);
            let residual =
                &(&d.mul_vec(product) - &b.binary(&de[i], &e[j])) - &b.binary(&e[i], &de[j]);
            for r in 0..n {
                let mut row = Vec::with_capacity(n);
                for p in 0..n {
                    row.push(
                        b.ternary_basis(p, i, j).get(r).clone()
                            + b.binary(product, &e[p]).get(r).clone(),
                    );
                }
                a_rows.push(row);
                rhs.push(residual.get(r).clone());
            }
        }
    }
    let a = if a_rows.is_empty() {
        Matrix::zeros(0, n)
    } else {
        Matrix::from_rows(a_rows).expect("companion rows are rectangular")
    };
    let homogeneous = nullspace(&a);
    match solve_affine(&a, &Vector(rhs)) {
        Some((particular, _)) => Ok(CompanionSet {
            defined: true,
            particular: Some(particular),
            homogeneous,
        }),
        None => Ok(CompanionSet {
            defined: false,
            particular: None,
            homogeneous,
        }),
    }
}

/// The inner pairs (D_{e_i,e_j}, e_i·e_j) for i < j, together with the
/// verdict that their span sits inside the full pair space.
pub struct InnerPDerSpan {
    pub span: Subspace,
    pub contained_in_pair_space: bool,
}

/// D_{a,b}(x) = (x; a, b) as a matrix in the standard basis.
pub fn d_matrix(b: &BolAlgebra, alpha: &Vector, beta: &Vector) -> Matrix {
    let n = b.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|i| b.ternary(&Vector::std(n, i), alpha, beta))
        .collect();
    if cols.is_empty() {
        Matrix::zeros(0, 0)
    } else {
        Matrix::from_col_vectors(&cols)
    }
}

pub fn inner_pder_span(b: &BolAlgebra) -> InnerPDerSpan {
    let n = b.dim();
    let solution = pder_pairs(b);
    let mut generators = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let ei = Vector::std(n, i);
            let ej = Vector::std(n, j);
            let d = d_matrix(b, &ei, &ej);
            generators.push(d.flatten_row_major().concat(&b.binary(&ei, &ej)));
        }
    }
    let span = Subspace::span(n * n + n, &generators);
    let contained = span.is_subspace_of(&solution.pair_space);
    InnerPDerSpan {
        span,
        contained_in_pair_space: contained,
    }
}

/// Binary derivations D(x·y) = D(x)·y + x·D(y), as a subspace of the
/// flattened matrix space. Equals the z = 0 slice of the pair space.
pub fn derivation_space(b: &BolAlgebra) -> Subspace {
    let n = b.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let product = b.binary_basis(i, j);
            for r in 0..n {
                let mut row: Vec<Scalar> = vec![zero(); n * n];
                for q in 0..n {
                    row[r * n + q] += product.get(q);
                }
                for p in 0..n {
                    row[p * n + i] -= b.binary_basis(p, j).get(r);
                    row[p * n + j] -= b.binary_basis(i, p).get(r);
                }
                rows.push(row);
            }
        }
    }
    let m = if rows.is_empty() {
        Matrix::zeros(0, n * n)
    } else {
        Matrix::from_rows(rows).expect("derivation rows are rectangular")
    };
    nullspace(&m)
}
