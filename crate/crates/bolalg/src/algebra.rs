//! Bol and Lie algebras as structure-constant tensors, the axiom and
//! Jacobi checkers, opposite algebras, and the constructors from Lie data.
//!
//! No structural property is enforced at construction time: raw tensors
//! load as-is and every claim (skewness included) is checker output, so
//! deliberately broken inputs stay representable for negative tests.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};
use crate::report::{CheckEntry, CheckReport, Witness};

/// Skewness profile for the first ternary identity.
///
/// `Literal` checks (x;x,y) = 0 (skew in the first two slots) exactly as
/// stated. `Consistent` instead checks skewness in the last two slots,
/// (x;y,z) = -(x;z,y), the convention forced by the regular module and by
/// D_{a,b} = (-;a,b) being skew in its parameters. Both are quadratic, so
/// each is checked through its polarized basis form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Literal,
    Consistent,
}

impl Profile {
    pub fn parse(text: &str) -> Result<Profile> {
        match text {
            "literal" => Ok(Profile::Literal),
            "consistent" => Ok(Profile::Consistent),
            other => Err(Error::Usage(format!(
                "unknown profile `{other}` (expected literal|consistent)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Profile::Literal => "literal",
            Profile::Consistent => "consistent",
        }
    }
}

/// The two opposite-algebra formulas in circulation: the slot-cycling one,
/// t'(x,y,z) = -t(z,x,y), and the plain negation t'(x,y,z) = -t(x,y,z).
/// Both negate the binary operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OppositeVariant {
    Section2,
    Theorem,
}

impl OppositeVariant {
    pub fn parse(text: &str) -> Result<OppositeVariant> {
        match text {
            "section2" => Ok(OppositeVariant::Section2),
            "theorem" => Ok(OppositeVariant::Theorem),
            other => Err(Error::Usage(format!(
                "unknown opposite variant `{other}` (expected section2|theorem)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalOp {
    Binary,
    Ternary,
    DOperator,
    DeltaOperator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BolAlgebra {
    dim: usize,
    /// binary[i][j] = e_i · e_j
    binary: Vec<Vec<Vector>>,
    /// ternary[i][j][k] = (e_i; e_j, e_k)
    ternary: Vec<Vec<Vec<Vector>>>,
}

impl BolAlgebra {
    pub fn zero(dim: usize) -> Self {
        BolAlgebra {
            dim,
            binary: vec![vec![Vector::zero(dim); dim]; dim],
            ternary: vec![vec![vec![Vector::zero(dim); dim]; dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn binary_basis(&self, i: usize, j: usize) -> &Vector {
        &self.binary[i][j]
    }

    pub fn ternary_basis(&self, i: usize, j: usize, k: usize) -> &Vector {
        &self.ternary[i][j][k]
    }

    pub fn set_binary(&mut self, i: usize, j: usize, value: Vector) {
        assert_eq!(value.dim(), self.dim, "structure constant dimension");
        self.binary[i][j] = value;
    }

    /// Sets e_i·e_j = value and e_j·e_i = -value in one step.
    pub fn set_binary_skew(&mut self, i: usize, j: usize, value: Vector) {
        self.binary[j][i] = -&value;
        self.set_binary(i, j, value);
    }

    pub fn set_ternary(&mut self, i: usize, j: usize, k: usize, value: Vector) {
        assert_eq!(value.dim(), self.dim, "structure constant dimension");
        self.ternary[i][j][k] = value;
    }

    /// Bilinear extension of the binary tensor.
    pub fn binary(&self, x: &Vector, y: &Vector) -> Vector {
        assert_eq!(x.dim(), self.dim, "argument dimension");
        assert_eq!(y.dim(), self.dim, "argument dimension");
        let mut out = Vector::zero(self.dim);
        for i in 0..self.dim {
            if x.get(i).is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y.get(j).is_zero() {
                    continue;
                }
                let coeff = x.get(i) * y.get(j);
                out = &out + &self.binary[i][j].scale(&coeff);
            }
        }
        out
    }

    /// Trilinear extension of the ternary tensor.
    pub fn ternary(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        assert_eq!(x.dim(), self.dim, "argument dimension");
        assert_eq!(y.dim(), self.dim, "argument dimension");
        assert_eq!(z.dim(), self.dim, "argument dimension");
        let mut out = Vector::zero(self.dim);
        for i in 0..self.dim {
            if x.get(i).is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y.get(j).is_zero() {
                    continue;
                }
                let partial = x.get(i) * y.get(j);
                for k in 0..self.dim {
                    if z.get(k).is_zero() {
                        continue;
                    }
                    let coeff = &partial * z.get(k);
                    out = &out + &self.ternary[i][j][k].scale(&coeff);
                }
            }
        }
        out
    }

    /// D_{a,b}: x -> (x; a, b).
    pub fn d_operator(&self, x: &Vector, a: &Vector, b: &Vector) -> Vector {
        self.ternary(x, a, b)
    }

    /// Delta_{a,b}: x -> (a; b, x).
    pub fn delta_operator(&self, a: &Vector, b: &Vector, x: &Vector) -> Vector {
        self.ternary(a, b, x)
    }

    pub fn evaluate(&self, op: EvalOp, args: &[Vector]) -> Result<Vector> {
        let arity = match op {
            EvalOp::Binary => 2,
            _ => 3,
        };
        if args.len() != arity {
            return Err(Error::Dimension(format!(
                "expected {arity} arguments, got {}",
                args.len()
            )));
        }
        if let Some(bad) = args.iter().find(|v| v.dim() != self.dim) {
            return Err(Error::Dimension(format!(
                "argument dimension {} does not match algebra dimension {}",
                bad.dim(),
                self.dim
            )));
        }
        Ok(match op {
            EvalOp::Binary => self.binary(&args[0], &args[1]),
            EvalOp::Ternary => self.ternary(&args[0], &args[1], &args[2]),
            EvalOp::DOperator => self.d_operator(&args[0], &args[1], &args[2]),
            EvalOp::DeltaOperator => self.delta_operator(&args[0], &args[1], &args[2]),
        })
    }

    fn check_binary_skew(&self) -> CheckEntry {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                let residual = &self.binary[i][j] + &self.binary[j][i];
                if !residual.is_zero() {
                    return CheckEntry::fail("binary-skew", Witness::new(vec![i, j], residual));
                }
            }
        }
        CheckEntry::pass("binary-skew")
    }

    /// Axiom (i). Both readings are quadratic, so the check runs over the
    /// polarized basis instances: diagonal vanishing plus cross terms.
    fn check_axiom_i(&self, profile: Profile) -> CheckEntry {
        let n = self.dim;
        match profile {
            Profile::Literal => {
                // (x; x, y) = 0, skew in slots 1 and 2.
                for i in 0..n {
                    for j in i..n {
                        for k in 0..n {
                            let residual = if i == j {
                                self.ternary[i][i][k].clone()
                            } else {
                                &self.ternary[i][j][k] + &self.ternary[j][i][k]
                            };
                            if !residual.is_zero() {
                                return CheckEntry::fail(
                                    "axiom-i",
                                    Witness::new(vec![i, j, k], residual),
                                );
                            }
                        }
                    }
                }
            }
            Profile::Consistent => {
                // (x; y, z) = -(x; z, y), skew in slots 2 and 3.
                for i in 0..n {
                    for j in 0..n {
                        for k in j..n {
                            let residual = if j == k {
                                self.ternary[i][j][j].clone()
                            } else {
                                &self.ternary[i][j][k] + &self.ternary[i][k][j]
                            };
                            if !residual.is_zero() {
                                return CheckEntry::fail(
                                    "axiom-i",
                                    Witness::new(vec![i, j, k], residual),
                                );
                            }
                        }
                    }
                }
            }
        }
        CheckEntry::pass("axiom-i")
    }

    /// Axiom (ii): (x;y,z) + (z;x,y) + (y;z,x) = 0 on all basis triples.
    fn check_axiom_ii(&self) -> CheckEntry {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let residual = &(&self.ternary[i][j][k] + &self.ternary[k][i][j])
                        + &self.ternary[j][k][i];
                    if !residual.is_zero() {
                        return CheckEntry::fail("axiom-ii", Witness::new(vec![i, j, k], residual));
                    }
                }
            }
        }
        CheckEntry::pass("axiom-ii")
    }

    /// Axiom (iii) in the normalized form: D_{a,b} is a derivation of the
    /// ternary operation,
    /// ((x;y,z);a,b) = ((x;a,b);y,z) + (x;(y;a,b),z) + (x;y,(z;a,b)).
    fn check_axiom_iii(&self) -> CheckEntry {
        let n = self.dim;
        let e: Vec<Vector> = (0..n).map(|i| Vector::std(n, i)).collect();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let txyz = &self.ternary[x][y][z];
                    for a in 0..n {
                        for b in 0..n {
                            let lhs = self.ternary(txyz, &e[a], &e[b]);
                            let rhs = &(&self.ternary(&self.ternary[x][a][b], &e[y], &e[z])
                                + &self.ternary(&e[x], &self.ternary[y][a][b], &e[z]))
                                + &self.ternary(&e[x], &e[y], &self.ternary[z][a][b]);
                            let residual = &lhs - &rhs;
                            if !residual.is_zero() {
                                return CheckEntry::fail(
                                    "axiom-iii",
                                    Witness::new(vec![x, y, z, a, b], residual),
                                );
                            }
                        }
                    }
                }
            }
        }
        CheckEntry::pass("axiom-iii")
    }

    /// Axiom (iv):
    /// (x·y;a,b) = (x;a,b)·y + x·(y;a,b) + (a·b;x,y) + (x·y)·(a·b).
    fn check_axiom_iv(&self) -> CheckEntry {
        let n = self.dim;
        let e: Vec<Vector> = (0..n).map(|i| Vector::std(n, i)).collect();
        for x in 0..n {
            for y in 0..n {
                let xy = &self.binary[x][y];
                for a in 0..n {
                    for b in 0..n {
                        let ab = &self.binary[a][b];
                        let lhs = self.ternary(xy, &e[a], &e[b]);
                        let rhs = &(&(&self.binary(&self.ternary[x][a][b], &e[y])
                            + &self.binary(&e[x], &self.ternary[y][a][b]))
                            + &self.ternary(ab, &e[x], &e[y]))
                            + &self.binary(xy, ab);
                        let residual = &lhs - &rhs;
                        if !residual.is_zero() {
                            return CheckEntry::fail(
                                "axiom-iv",
                                Witness::new(vec![x, y, a, b], residual),
                            );
                        }
                    }
                }
            }
        }
        CheckEntry::pass("axiom-iv")
    }

    /// Full axiom system: binary skewness plus (i)-(iv) under the profile.
    pub fn check_axioms(&self, profile: Profile) -> CheckReport {
        let mut report = CheckReport::new();
        report.push(self.check_binary_skew());
        report.push(self.check_axiom_i(profile));
        report.push(self.check_axiom_ii());
        report.push(self.check_axiom_iii());
        report.push(self.check_axiom_iv());
        report
    }

    /// Ternary identities only ((i)/skew, (ii), (iii)): the Lie-triple-system
    /// part. Ignores the binary tensor entirely.
    pub fn check_lts(&self, profile: Profile) -> CheckReport {
        let mut report = CheckReport::new();
        report.push(self.check_axiom_i(profile));
        report.push(self.check_axiom_ii());
        report.push(self.check_axiom_iii());
        report
    }

    pub fn opposite(&self, variant: OppositeVariant) -> BolAlgebra {
        let n = self.dim;
        let mut out = BolAlgebra::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.binary[i][j] = -&self.binary[i][j];
                for k in 0..n {
                    out.ternary[i][j][k] = match variant {
                        OppositeVariant::Section2 => -&self.ternary[k][i][j],
                        OppositeVariant::Theorem => -&self.ternary[i][j][k],
                    };
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// bracket[i][j] = [e_i, e_j]
    bracket: Vec<Vec<Vector>>,
}

impl LieAlgebra {
    pub fn zero(dim: usize) -> Self {
        LieAlgebra {
            dim,
            bracket: vec![vec![Vector::zero(dim); dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.bracket[i][j]
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vector) {
        assert_eq!(value.dim(), self.dim, "structure constant dimension");
        self.bracket[i][j] = value;
    }

    /// Sets [e_i,e_j] = value and [e_j,e_i] = -value in one step.
    pub fn set_bracket_skew(&mut self, i: usize, j: usize, value: Vector) {
        self.bracket[j][i] = -&value;
        self.set_bracket(i, j, value);
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        assert_eq!(x.dim(), self.dim, "argument dimension");
        assert_eq!(y.dim(), self.dim, "argument dimension");
        let mut out = Vector::zero(self.dim);
        for i in 0..self.dim {
            if x.get(i).is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y.get(j).is_zero() {
                    continue;
                }
                let coeff = x.get(i) * y.get(j);
                out = &out + &self.bracket[i][j].scale(&coeff);
            }
        }
        out
    }

    /// Antisymmetry and the Jacobi identity on all basis triples.
    pub fn jacobi_check(&self) -> CheckReport {
        let n = self.dim;
        let mut report = CheckReport::new();

        let mut skew = CheckEntry::pass("bracket-skew");
        'skew: for i in 0..n {
            for j in i..n {
                let residual = &self.bracket[i][j] + &self.bracket[j][i];
                if !residual.is_zero() {
                    skew = CheckEntry::fail("bracket-skew", Witness::new(vec![i, j], residual));
                    break 'skew;
                }
            }
        }
        report.push(skew);

        let e: Vec<Vector> = (0..n).map(|i| Vector::std(n, i)).collect();
        let mut jacobi = CheckEntry::pass("jacobi");
        'jacobi: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let residual = &(&self.bracket(&self.bracket[i][j], &e[k])
                        + &self.bracket(&self.bracket[j][k], &e[i]))
                        + &self.bracket(&self.bracket[k][i], &e[j]);
                    if !residual.is_zero() {
                        jacobi = CheckEntry::fail("jacobi", Witness::new(vec![i, j, k], residual));
                        break 'jacobi;
                    }
                }
            }
        }
        report.push(jacobi);
        report
    }
}

/// Every Lie algebra is a Bol algebra with x·y = [x,y] and
/// (x;y,z) = [x,[y,z]]. Requires the input to pass `jacobi_check`; the
/// result passes the "consistent" profile.
pub fn from_lie_algebra(l: &LieAlgebra) -> Result<BolAlgebra> {
    let jacobi = l.jacobi_check();
    if let Some(failed) = jacobi.first_failure() {
        return Err(Error::Precondition {
            condition: format!("jacobi_check/{}", failed.name),
            witness: failed
                .witness
                .as_ref()
                .map(|w| w.to_string())
                .unwrap_or_default(),
        });
    }
    let n = l.dim();
    let mut out = BolAlgebra::zero(n);
    let e: Vec<Vector> = (0..n).map(|i| Vector::std(n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            out.set_binary(i, j, l.bracket_basis(i, j).clone());
            for k in 0..n {
                out.set_ternary(i, j, k, l.bracket(&e[i], l.bracket_basis(j, k)));
            }
        }
    }
    Ok(out)
}

/// The Lie-pair construction: a splitting G = B ⊕ h with [B,B] ∩ B = {0}
/// and [B,[B,B]] ⊂ B induces a Bol algebra on B with ξ·η = Π[ξ,η] (Π the
/// projection onto B parallel to h) and (ζ;ξ,η) = [ζ,[ξ,η]], written in
/// the canonical basis of B. All three preconditions are verified first.
pub fn from_lie_pair(g: &LieAlgebra, bsub: &Subspace, hsub: &Subspace) -> Result<BolAlgebra> {
    let n = g.dim();
    if bsub.ambient_dim() != n || hsub.ambient_dim() != n {
        return Err(Error::Dimension(format!(
            "subspace ambient dimensions must equal the Lie algebra dimension {n}"
        )));
    }

    // Precondition 1: B ⊕ h = G.
    let meet = bsub.intersect(hsub);
    if !meet.is_zero() {
        return Err(Error::Precondition {
            condition: "B ⊕ h = G".into(),
            witness: format!("shared nonzero vector {}", meet.basis()[0]),
        });
    }
    if bsub.dim() + hsub.dim() != n {
        return Err(Error::Precondition {
            condition: "B ⊕ h = G".into(),
            witness: format!("dim B + dim h = {} ≠ {n}", bsub.dim() + hsub.dim()),
        });
    }

    // Precondition 2: [B,B] ∩ B = {0}.
    let b_basis = bsub.basis();
    let mut bb_products = Vec::new();
    for u in b_basis {
        for v in b_basis {
            bb_products.push(g.bracket(u, v));
        }
    }
    let bb = Subspace::span(n, &bb_products);
    let bad = bb.intersect(bsub);
    if !bad.is_zero() {
        return Err(Error::Precondition {
            condition: "[B,B] ∩ B = {0}".into(),
            witness: format!("{} lies in both", bad.basis()[0]),
        });
    }

    // Precondition 3: [B,[B,B]] ⊂ B.
    for u in b_basis {
        for w in bb.basis() {
            let product = g.bracket(u, w);
            if !bsub.contains(&product) {
                return Err(Error::Precondition {
                    condition: "[B,[B,B]] ⊂ B".into(),
                    witness: format!("[{u}, {w}] = {product} escapes B"),
                });
            }
        }
    }

    let m = bsub.dim();
    let mut out = BolAlgebra::zero(m);
    // Projection onto B parallel to h, in coordinates of B's basis: split
    // v = Σ c_i u_i + Σ d_j w_j and keep the c part.
    let mut split_basis = b_basis.to_vec();
    split_basis.extend(hsub.basis().iter().cloned());
    let split = Subspace::span(n, &split_basis);
    debug_assert_eq!(split.dim(), n);
    let project = |v: &Vector| -> Vector {
        let mut acc = Vector::zero(n);
        // Reduce against the concatenated basis by solving the linear system
        // directly: coordinates in the (u, w) spanning set.
        let cols: Vec<Vector> = split_basis.to_vec();
        let matrix = crate::linalg::Matrix::from_col_vectors(&cols);
        let (coeffs, _) = crate::linalg::solve_affine(&matrix, v)
            .expect("B ⊕ h spans G, so every vector splits");
        for (i, u) in b_basis.iter().enumerate() {
            acc = &acc + &u.scale(coeffs.get(i));
        }
        acc
    };

    for i in 0..m {
        for j in 0..m {
            let product = project(&g.bracket(&b_basis[i], &b_basis[j]));
            let coords = bsub
                .coordinates(&product)
                .expect("projection lands in B by construction");
            out.set_binary(i, j, coords);
            for k in 0..m {
                let inner = g.bracket(&b_basis[j], &b_basis[k]);
                let ternary = g.bracket(&b_basis[i], &inner);
                let coords = bsub
                    .coordinates(&ternary)
                    .expect("ternary lands in B by precondition [B,[B,B]] ⊂ B");
                out.set_ternary(i, j, k, coords);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::{frac, int};

    #[test]
    fn zero_algebra_passes_both_profiles() {
        for dim in 1..=5 {
            let b = BolAlgebra::zero(dim);
            assert!(b.check_axioms(Profile::Literal).passed());
            assert!(b.check_axioms(Profile::Consistent).passed());
        }
    }

    #[test]
    fn single_ternary_entry_fails_axiom_i_with_witness() {
        let mut b = BolAlgebra::zero(2);
        b.set_ternary(0, 0, 1, Vector::std(2, 0));
        for profile in [Profile::Literal, Profile::Consistent] {
            let report = b.check_axioms(profile);
            let entry = report.entry("axiom-i").unwrap();
            assert!(!entry.passed);
            let w = entry.witness.as_ref().unwrap();
            assert_eq!(w.tuple, vec![0, 0, 1]);
            assert_eq!(w.residual, Vector::std(2, 0));
        }
    }

    #[test]
    fn evaluate_is_multilinear() {
        let b = catalog::sl2_bol();
        let x = Vector::from_ints(&[1, 2, -1]);
        let y = Vector::from_ints(&[0, 1, 3]);
        let z = Vector::from_ints(&[2, -2, 1]);
        let scaled = b.ternary(&x.scale(&frac(3, 2)), &y, &z);
        assert_eq!(scaled, b.ternary(&x, &y, &z).scale(&frac(3, 2)));
        let sum = b.ternary(&(&x + &y), &y, &z);
        assert_eq!(sum, &b.ternary(&x, &y, &z) + &b.ternary(&y, &y, &z));
        let bilinear = b.binary(&x, &(&y + &z.scale(&int(-4))));
        assert_eq!(
            bilinear,
            &b.binary(&x, &y) + &b.binary(&x, &z).scale(&int(-4))
        );
    }

    #[test]
    fn evaluate_checks_arity_and_dimensions() {
        let b = BolAlgebra::zero(2);
        assert!(b.evaluate(EvalOp::Binary, &[Vector::zero(2)]).is_err());
        assert!(b
            .evaluate(EvalOp::Ternary, &[Vector::zero(2), Vector::zero(3), Vector::zero(2)])
            .is_err());
        assert!(b
            .evaluate(EvalOp::Binary, &[Vector::zero(2), Vector::zero(2)])
            .unwrap()
            .is_zero());
    }

    #[test]
    fn d_and_delta_are_slot_permutations() {
        let b = catalog::sl2_pair_bol();
        let e1 = Vector::std(2, 0);
        let e2 = Vector::std(2, 1);
        assert_eq!(b.d_operator(&e1, &e1, &e2), b.ternary(&e1, &e1, &e2));
        assert_eq!(b.delta_operator(&e1, &e2, &e2), b.ternary(&e1, &e2, &e2));
        // (e1; e1, e2) = -2 e1 in the sl2-pair algebra.
        assert_eq!(b.ternary(&e1, &e1, &e2), Vector::from_ints(&[-2, 0]));
    }

    #[test]
    fn lie_derived_algebras_pass_consistent_profile() {
        for lie in [
            catalog::abelian_lie(3),
            catalog::solvable2_lie(),
            catalog::heisenberg3_lie(),
            catalog::sl2_lie(),
        ] {
            let b = from_lie_algebra(&lie).unwrap();
            let report = b.check_axioms(Profile::Consistent);
            assert!(report.passed(), "failed: {report}");
        }
    }

    #[test]
    fn sl2_fails_literal_profile() {
        let b = catalog::sl2_bol();
        let report = b.check_axioms(Profile::Literal);
        let entry = report.entry("axiom-i").unwrap();
        assert!(!entry.passed);
        // (e1; e1, e2) = [e,[e,f]] = [e,h] = -2e ≠ 0.
        assert_eq!(entry.witness.as_ref().unwrap().tuple, vec![0, 0, 1]);
    }

    #[test]
    fn solvable2_structure_constants() {
        let b = catalog::solvable2_bol();
        assert_eq!(*b.binary_basis(0, 1), Vector::std(2, 0));
        assert_eq!(*b.binary_basis(1, 0), -&Vector::std(2, 0));
        // (e2; e1, e2) = [e2,[e1,e2]] = [e2,e1] = -e1.
        assert_eq!(*b.ternary_basis(1, 0, 1), Vector::from_ints(&[-1, 0]));
        assert_eq!(*b.ternary_basis(1, 1, 0), Vector::from_ints(&[1, 0]));
        assert_eq!(*b.ternary_basis(0, 0, 1), Vector::zero(2));
    }

    #[test]
    fn heisenberg_has_zero_ternary() {
        let b = catalog::heisenberg3_bol();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert!(b.ternary_basis(i, j, k).is_zero());
                }
            }
        }
        assert_eq!(*b.binary_basis(0, 1), Vector::std(3, 2));
    }

    #[test]
    fn opposite_theorem_is_involution() {
        let b = catalog::sl2_bol();
        assert_eq!(
            b.opposite(OppositeVariant::Theorem)
                .opposite(OppositeVariant::Theorem),
            b
        );
    }

    #[test]
    fn opposite_section2_composition_laws() {
        let b = catalog::sl2_pair_bol();
        let mut cycled = b.clone();
        for _ in 0..3 {
            cycled = cycled.opposite(OppositeVariant::Section2);
        }
        // Three slot cycles with three sign flips equal the plain negation.
        assert_eq!(cycled, b.opposite(OppositeVariant::Theorem));
        for _ in 0..3 {
            cycled = cycled.opposite(OppositeVariant::Section2);
        }
        assert_eq!(cycled, b);
        // t'(e2,e1,e1) = -t(e1,e2,e1).
        let op = b.opposite(OppositeVariant::Section2);
        assert_eq!(*op.ternary_basis(1, 0, 0), -b.ternary_basis(0, 1, 0));
    }

    #[test]
    fn jacobi_check_oracles() {
        assert!(catalog::abelian_lie(4).jacobi_check().passed());
        assert!(catalog::sl2_lie().jacobi_check().passed());
        let mut broken = LieAlgebra::zero(2);
        broken.set_bracket(0, 1, Vector::std(2, 0));
        let report = broken.jacobi_check();
        let entry = report.entry("bracket-skew").unwrap();
        assert!(!entry.passed);
        assert_eq!(entry.witness.as_ref().unwrap().tuple, vec![0, 1]);
    }

    #[test]
    fn from_lie_algebra_rejects_non_lie_input() {
        let mut broken = LieAlgebra::zero(2);
        broken.set_bracket(0, 1, Vector::std(2, 0));
        assert!(from_lie_algebra(&broken).is_err());
    }

    #[test]
    fn lie_pair_on_sl2_gives_the_frozen_constants() {
        let g = catalog::sl2_lie();
        let b = Subspace::span(3, &[Vector::std(3, 0), Vector::std(3, 1)]);
        let h = Subspace::span(3, &[Vector::std(3, 2)]);
        let pair = from_lie_pair(&g, &b, &h).unwrap();
        assert_eq!(pair, catalog::sl2_pair_bol());
        assert!(pair.check_axioms(Profile::Consistent).passed());
    }

    #[test]
    fn lie_pair_rejects_bad_splitting() {
        let g = catalog::sl2_lie();
        // B = span{e, h}: [e,h] = -2e lies in both [B,B] and B.
        let b = Subspace::span(3, &[Vector::std(3, 0), Vector::std(3, 2)]);
        let h = Subspace::span(3, &[Vector::std(3, 1)]);
        match from_lie_pair(&g, &b, &h) {
            Err(Error::Precondition { condition, witness }) => {
                assert!(condition.contains("[B,B] ∩ B"), "got {condition}");
                assert!(!witness.is_empty());
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn lie_pair_on_abelian_is_zero() {
        let g = catalog::abelian_lie(3);
        let b = Subspace::span(3, &[Vector::std(3, 0), Vector::std(3, 1)]);
        let h = Subspace::span(3, &[Vector::std(3, 2)]);
        assert_eq!(from_lie_pair(&g, &b, &h).unwrap(), BolAlgebra::zero(2));
    }
}
