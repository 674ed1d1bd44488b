//! Linear maps between Bol algebras, morphism verification, kernels,
//! images and the first isomorphism theorem.

use crate::algebra::BolAlgebra;
use crate::error::{Error, Result};
use crate::ideal::{is_ideal, quotient, IdealMode};
use crate::linalg::{nullspace, rref_rank, Matrix, Subspace, Vector};
use crate::report::{CheckEntry, CheckReport, Witness};

/// A linear map between algebras, stored as a target_dim x source_dim
/// matrix acting on coordinate columns. Whether it respects the products
/// is a separate question answered by `is_morphism`.
#[derive(Debug, Clone, PartialEq)]
pub struct Morphism {
    pub source: BolAlgebra,
    pub target: BolAlgebra,
    pub map: Matrix,
}

impl Morphism {
    pub fn new(source: BolAlgebra, target: BolAlgebra, map: Matrix) -> Result<Morphism> {
        if map.rows() != target.dim() || map.cols() != source.dim() {
            return Err(Error::Dimension(format!(
                "morphism matrix is {}x{} but target/source dims are {}/{}",
                map.rows(),
                map.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(Morphism { source, target, map })
    }

    pub fn identity(b: &BolAlgebra) -> Morphism {
        Morphism {
            source: b.clone(),
            target: b.clone(),
            map: Matrix::identity(b.dim()),
        }
    }

    pub fn zero(source: &BolAlgebra, target: &BolAlgebra) -> Morphism {
        Morphism {
            source: source.clone(),
            target: target.clone(),
            map: Matrix::zeros(target.dim(), source.dim()),
        }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.map.mul_vec(v)
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if inner.target != self.source {
            return Err(Error::Dimension(
                "compose: inner target differs from outer source".to_string(),
            ));
        }
        Ok(Morphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            map: &self.map * &inner.map,
        })
    }

    pub fn kernel(&self) -> Subspace {
        nullspace(&self.map)
    }

    pub fn image(&self) -> Subspace {
        let cols: Vec<Vector> = (0..self.map.cols()).map(|j| self.map.col(j)).collect();
        Subspace::span(self.map.rows(), &cols)
    }
}

/// Verifies f(x·y) = f(x)·f(y) and f((x;y,z)) = (f(x);f(y),f(z)) on basis
/// tuples; multilinearity extends the verdict to the whole space.
pub fn is_morphism(f: &Morphism) -> CheckReport {
    let n = f.source.dim();
    let e: Vec<Vector> = (0..n).map(|i| Vector::std(n, i)).collect();
    let fe: Vec<Vector> = e.iter().map(|v| f.apply(v)).collect();
    let mut report = CheckReport::new();

    let mut bin = CheckEntry::pass("binary");
    'bin: for i in 0..n {
        for j in 0..n {
            let residual = &f.apply(f.source.binary_basis(i, j)) - &f.target.binary(&fe[i], &fe[j]);
            if !residual.is_zero() {
                bin = CheckEntry::fail("binary", Witness::new(vec![i, j], residual));
                break 'bin;
            }
        }
    }
    report.push(bin);

    let mut ter = CheckEntry::pass("ternary");
    'ter: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let residual = &f.apply(f.source.ternary_basis(i, j, k))
                    - &f.target.ternary(&fe[i], &fe[j], &fe[k]);
                if !residual.is_zero() {
                    ter = CheckEntry::fail("ternary", Witness::new(vec![i, j, k], residual));
                    break 'ter;
                }
            }
        }
    }
    report.push(ter);

    report
}

/// Checks that the subspace is closed under both operations.
pub fn is_subalgebra(b: &BolAlgebra, s: &Subspace) -> CheckReport {
    assert_eq!(s.ambient_dim(), b.dim(), "ambient dimension mismatch");
    let mut report = CheckReport::new();

    let mut bin = CheckEntry::pass("bin-closed");
    'bin: for (i, u) in s.basis().iter().enumerate() {
        for (j, v) in s.basis().iter().enumerate() {
            let product = b.binary(u, v);
            if !s.contains(&product) {
                bin = CheckEntry::fail("bin-closed", Witness::new(vec![i, j], product));
                break 'bin;
            }
        }
    }
    report.push(bin);

    let mut ter = CheckEntry::pass("ter-closed");
    'ter: for (i, u) in s.basis().iter().enumerate() {
        for (j, v) in s.basis().iter().enumerate() {
            for (k, w) in s.basis().iter().enumerate() {
                let product = b.ternary(u, v, w);
                if !s.contains(&product) {
                    ter = CheckEntry::fail("ter-closed", Witness::new(vec![i, j, k], product));
                    break 'ter;
                }
            }
        }
    }
    report.push(ter);

    report
}

/// Realizes a closed subspace as an abstract algebra on its canonical
/// basis, together with the inclusion morphism.
pub fn subalgebra_algebra(b: &BolAlgebra, s: &Subspace) -> Result<(BolAlgebra, Morphism)> {
    let closure = is_subalgebra(b, s);
    if let Some(failed) = closure.first_failure() {
        return Err(Error::Precondition {
            condition: format!("subalgebra closure ({})", failed.name),
            witness: failed
                .witness
                .as_ref()
                .map(|w| w.to_string())
                .unwrap_or_default(),
        });
    }
    let m = s.dim();
    let mut sub = BolAlgebra::zero(m);
    let coords = |v: &Vector| s.coordinates(v).expect("closure verified above");
    for (i, u) in s.basis().iter().enumerate() {
        for (j, v) in s.basis().iter().enumerate() {
            sub.set_binary(i, j, coords(&b.binary(u, v)));
            for (k, w) in s.basis().iter().enumerate() {
                sub.set_ternary(i, j, k, coords(&b.ternary(u, v, w)));
            }
        }
    }
    let incl_map = if m == 0 {
        Matrix::zeros(b.dim(), 0)
    } else {
        Matrix::from_col_vectors(s.basis())
    };
    let incl = Morphism::new(sub.clone(), b.clone(), incl_map)?;
    Ok((sub, incl))
}

pub struct KernelImage {
    pub kernel: Subspace,
    pub image: Subspace,
    /// Structural facts re-verified on the computed spaces.
    pub report: CheckReport,
}

fn collapse(name: &str, sub: &CheckReport) -> CheckEntry {
    match sub.first_failure() {
        None => CheckEntry::pass(name),
        Some(failed) => match &failed.witness {
            Some(w) => CheckEntry::fail(name, w.clone()),
            None => CheckEntry {
                name: name.to_string(),
                passed: false,
                witness: None,
            },
        },
    }
}

/// Kernel and image of a verified morphism. The kernel is re-verified as a
/// literal ideal of the source and the image as a subalgebra of the target.
pub fn kernel_image(f: &Morphism) -> Result<KernelImage> {
    let morph = is_morphism(f);
    if let Some(failed) = morph.first_failure() {
        return Err(Error::NotAMorphism(format!(
            "{} ({})",
            failed.name,
            failed.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
        )));
    }
    let kernel = f.kernel();
    let image = f.image();
    let mut report = CheckReport::new();
    report.push(collapse(
        "kernel-is-ideal",
        &is_ideal(&f.source, &kernel, IdealMode::Literal),
    ));
    report.push(collapse("image-is-subalgebra", &is_subalgebra(&f.target, &image)));
    Ok(KernelImage { kernel, image, report })
}

pub struct FirstIso {
    pub kernel: Subspace,
    pub image: Subspace,
    pub quotient: BolAlgebra,
    pub proj: Morphism,
    pub image_algebra: BolAlgebra,
    pub incl: Morphism,
    /// quotient → image_algebra.
    pub iso: Morphism,
    pub report: CheckReport,
}

/// First isomorphism theorem, constructively: builds source/ker, the image
/// algebra, and the connecting map, then verifies bijectivity, the
/// morphism property and incl ∘ iso ∘ proj = f.
pub fn first_iso(f: &Morphism) -> Result<FirstIso> {
    let ki = kernel_image(f)?;
    // A morphism kernel absorbs products in every slot, so the literal
    // quotient is always well defined here.
    let q = quotient(&f.source, &ki.kernel, IdealMode::Literal)?;
    let (image_algebra, incl) = subalgebra_algebra(&f.target, &ki.image)?;

    let n = f.source.dim();
    let iso_cols: Vec<Vector> = q
        .complement
        .iter()
        .map(|&c| {
            ki.image
                .coordinates(&f.apply(&Vector::std(n, c)))
                .expect("f maps into its image")
        })
        .collect();
    let iso_map = if iso_cols.is_empty() {
        Matrix::zeros(ki.image.dim(), 0)
    } else {
        Matrix::from_col_vectors(&iso_cols)
    };
    let iso = Morphism::new(q.algebra.clone(), image_algebra.clone(), iso_map)?;

    let mut report = ki.report.clone();
    let bijective =
        iso.map.rows() == iso.map.cols() && rref_rank(&iso.map).1 == iso.map.rows();
    report.push(if bijective {
        CheckEntry::pass("iso-bijective")
    } else {
        CheckEntry {
            name: "iso-bijective".to_string(),
            passed: false,
            witness: None,
        }
    });
    report.push(collapse("iso-is-morphism", &is_morphism(&iso)));
    let factored = &(&incl.map * &iso.map) * &q.proj.map == f.map;
    report.push(if factored {
        CheckEntry::pass("factorization")
    } else {
        CheckEntry {
            name: "factorization".to_string(),
            passed: false,
            witness: None,
        }
    });

    Ok(FirstIso {
        kernel: ki.kernel,
        image: ki.image,
        quotient: q.algebra,
        proj: q.proj,
        image_algebra,
        incl,
        iso,
        report,
    })
}
