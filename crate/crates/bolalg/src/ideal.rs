//! Ideals, generated ideals and quotient algebras.
//!
//! The literal ideal definition closes only the binary product and the
//! first ternary slot; that is not enough to make quotient operations
//! well defined, so the quotient constructor re-verifies well-definedness
//! slot by slot (including the two-slots-in-the-ideal case) instead of
//! trusting the definition.

use crate::algebra::BolAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{solve_affine, Matrix, Subspace, Vector};
use crate::morphism::Morphism;
use crate::report::{CheckEntry, CheckReport, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealMode {
    /// I·B ⊆ I and (I;B,B) ⊆ I.
    Literal,
    /// Additionally (B;I,B) ⊆ I and (B;B,I) ⊆ I.
    Strong,
}

impl IdealMode {
    pub fn parse(text: &str) -> Result<IdealMode> {
        match text {
            "literal" => Ok(IdealMode::Literal),
            "strong" => Ok(IdealMode::Strong),
            other => Err(Error::Usage(format!(
                "unknown ideal mode `{other}` (expected literal|strong)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            IdealMode::Literal => "literal",
            IdealMode::Strong => "strong",
        }
    }
}

/// Checks the ideal closures on basis elements. Witness tuples index
/// (ideal basis vector, algebra basis indices); the residual is the
/// offending product, which is not contained in the subspace.
pub fn is_ideal(b: &BolAlgebra, ideal: &Subspace, mode: IdealMode) -> CheckReport {
    assert_eq!(ideal.ambient_dim(), b.dim(), "ambient dimension mismatch");
    let n = b.dim();
    let e: Vec<Vector> = (0..n).map(|i| Vector::std(n, i)).collect();
    let mut report = CheckReport::new();

    let mut bin = CheckEntry::pass("bin-closure");
    'bin: for (u_idx, u) in ideal.basis().iter().enumerate() {
        for j in 0..n {
            let product = b.binary(u, &e[j]);
            if !ideal.contains(&product) {
                bin = CheckEntry::fail("bin-closure", Witness::new(vec![u_idx, j], product));
                break 'bin;
            }
        }
    }
    report.push(bin);

    let mut ter = CheckEntry::pass("ter-slot1");
    'ter: for (u_idx, u) in ideal.basis().iter().enumerate() {
        for j in 0..n {
            for k in 0..n {
                let product = b.ternary(u, &e[j], &e[k]);
                if !ideal.contains(&product) {
                    ter = CheckEntry::fail("ter-slot1", Witness::new(vec![u_idx, j, k], product));
                    break 'ter;
                }
            }
        }
    }
    report.push(ter);

    if mode == IdealMode::Strong {
        let mut slot2 = CheckEntry::pass("ter-slot2");
        'slot2: for (u_idx, u) in ideal.basis().iter().enumerate() {
            for j in 0..n {
                for k in 0..n {
                    let product = b.ternary(&e[j], u, &e[k]);
                    if !ideal.contains(&product) {
                        slot2 =
                            CheckEntry::fail("ter-slot2", Witness::new(vec![j, u_idx, k], product));
                        break 'slot2;
                    }
                }
            }
        }
        report.push(slot2);

        let mut slot3 = CheckEntry::pass("ter-slot3");
        'slot3: for (u_idx, u) in ideal.basis().iter().enumerate() {
            for j in 0..n {
                for k in 0..n {
                    let product = b.ternary(&e[j], &e[k], u);
                    if !ideal.contains(&product) {
                        slot3 =
                            CheckEntry::fail("ter-slot3", Witness::new(vec![j, k, u_idx], product));
                        break 'slot3;
                    }
                }
            }
        }
        report.push(slot3);
    }

    report
}

/// Smallest subspace containing X that is closed under the slot products
/// the mode requires. Fixpoint iteration; the dimension strictly grows
/// until stable, so at most dim(B) rounds run.
pub fn ideal_closure(b: &BolAlgebra, x: &Subspace, mode: IdealMode) -> Subspace {
    assert_eq!(x.ambient_dim(), b.dim(), "ambient dimension mismatch");
    let n = b.dim();
    let e: Vec<Vector> = (0..n).map(|i| Vector::std(n, i)).collect();
    let mut current = x.clone();
    loop {
        let mut products = Vec::new();
        for u in current.basis() {
            for j in 0..n {
                products.push(b.binary(u, &e[j]));
                for k in 0..n {
                    products.push(b.ternary(u, &e[j], &e[k]));
                    if mode == IdealMode::Strong {
                        products.push(b.ternary(&e[j], u, &e[k]));
                        products.push(b.ternary(&e[j], &e[k], u));
                    }
                }
            }
        }
        let next = current.sum(&Subspace::span(n, &products));
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Quotient data: the algebra on the chosen complement representatives
/// plus the canonical projection.
pub struct Quotient {
    pub algebra: BolAlgebra,
    pub proj: Morphism,
    /// Standard-basis indices representing the classes, in order.
    pub complement: Vec<usize>,
}

/// Builds B/I. Fails when I is not an ideal in the requested mode or when
/// the induced operations are not well defined on classes; the latter is
/// possible under the literal mode, which does not close ternary slots 2
/// and 3.
pub fn quotient(b: &BolAlgebra, ideal: &Subspace, mode: IdealMode) -> Result<Quotient> {
    let ideal_report = is_ideal(b, ideal, mode);
    if let Some(failed) = ideal_report.first_failure() {
        return Err(Error::NotAnIdeal(format!(
            "{} ({})",
            failed.name,
            failed.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
        )));
    }

    let n = b.dim();
    let complement = ideal.standard_complement();
    let m = complement.len();
    let e: Vec<Vector> = (0..n).map(|i| Vector::std(n, i)).collect();

    // Well-definedness: representatives differing by I must give operation
    // results differing by I. The first ternary slot and the ideal's own
    // products are covered by the ideal axioms; everything else is checked
    // here, including both remaining slots filled from I simultaneously.
    let fail = |slot: &str, witness: Vector| Error::IllDefinedQuotient {
        slot: slot.to_string(),
        witness: witness.to_string(),
    };
    for u in ideal.basis() {
        for &c in &complement {
            let left = b.binary(u, &e[c]);
            if !ideal.contains(&left) {
                return Err(fail("bin-left", left));
            }
            let right = b.binary(&e[c], u);
            if !ideal.contains(&right) {
                return Err(fail("bin-right", right));
            }
            for &c2 in &complement {
                let slot1 = b.ternary(u, &e[c], &e[c2]);
                if !ideal.contains(&slot1) {
                    return Err(fail("ter-slot1", slot1));
                }
                let slot2 = b.ternary(&e[c], u, &e[c2]);
                if !ideal.contains(&slot2) {
                    return Err(fail("ter-slot2", slot2));
                }
                let slot3 = b.ternary(&e[c], &e[c2], u);
                if !ideal.contains(&slot3) {
                    return Err(fail("ter-slot3", slot3));
                }
            }
            for u2 in ideal.basis() {
                let double = b.ternary(&e[c], u, u2);
                if !ideal.contains(&double) {
                    return Err(fail("ter-slot23", double));
                }
            }
        }
    }

    // Class coordinates: split v over (ideal basis | complement basis) and
    // keep the complement part.
    let mut split_cols: Vec<Vector> = ideal.basis().to_vec();
    split_cols.extend(complement.iter().map(|&c| e[c].clone()));
    let split = Matrix::from_col_vectors(&split_cols);
    let reduce = |v: &Vector| -> Vector {
        let (coords, _) = solve_affine(&split, v).expect("ideal basis plus complement spans");
        Vector(coords.0[ideal.dim()..].to_vec())
    };

    let mut algebra = BolAlgebra::zero(m);
    for (qi, &ci) in complement.iter().enumerate() {
        for (qj, &cj) in complement.iter().enumerate() {
            algebra.set_binary(qi, qj, reduce(&b.binary(&e[ci], &e[cj])));
            for (qk, &ck) in complement.iter().enumerate() {
                algebra.set_ternary(qi, qj, qk, reduce(&b.ternary(&e[ci], &e[cj], &e[ck])));
            }
        }
    }

    let proj_cols: Vec<Vector> = (0..n).map(|j| reduce(&e[j])).collect();
    let proj = Morphism::new(b.clone(), algebra.clone(), Matrix::from_col_vectors(&proj_cols))?;
    Ok(Quotient {
        algebra,
        proj,
        complement,
    })
}
