//! Finite products, equalizers and coequalizers, with factoring helpers
//! that realize the universal properties constructively.

use crate::algebra::BolAlgebra;
use crate::error::{Error, Result};
use crate::ideal::{ideal_closure, is_ideal, quotient, IdealMode};
use crate::linalg::{nullspace, Matrix, Subspace, Vector};
use crate::morphism::{is_morphism, is_subalgebra, subalgebra_algebra, Morphism};
use crate::report::{CheckEntry, CheckReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoequalizerMode {
    /// Quotient by the generated ideal of im f + im g.
    Paper,
    /// Quotient by the generated ideal of im (f - g).
    Difference,
}

impl CoequalizerMode {
    pub fn parse(text: &str) -> Result<CoequalizerMode> {
        match text {
            "paper" => Ok(CoequalizerMode::Paper),
            "difference" => Ok(CoequalizerMode::Difference),
            other => Err(Error::Usage(format!(
                "unknown coequalizer mode `{other}` (expected paper|difference)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CoequalizerMode::Paper => "paper",
            CoequalizerMode::Difference => "difference",
        }
    }
}

pub struct ProductResult {
    pub algebra: BolAlgebra,
    pub projections: Vec<Morphism>,
}

/// Direct product with componentwise operations; cross-block structure
/// constants vanish.
pub fn product(factors: &[BolAlgebra]) -> Result<ProductResult> {
    if factors.is_empty() {
        return Err(Error::EmptyList);
    }
    let dims: Vec<usize> = factors.iter().map(BolAlgebra::dim).collect();
    let total: usize = dims.iter().sum();
    let mut offsets = Vec::with_capacity(factors.len());
    let mut acc = 0;
    for &d in &dims {
        offsets.push(acc);
        acc += d;
    }

    let embed = |block: usize, v: &Vector| -> Vector {
        let mut out = Vector::zero(total);
        for (i, c) in v.0.iter().enumerate() {
            out.0[offsets[block] + i] = c.clone();
        }
        out
    };

    let mut algebra = BolAlgebra::zero(total);
    for (block, f) in factors.iter().enumerate() {
        for i in 0..f.dim() {
            for j in 0..f.dim() {
                let oi = offsets[block] + i;
                let oj = offsets[block] + j;
                algebra.set_binary(oi, oj, embed(block, f.binary_basis(i, j)));
                for k in 0..f.dim() {
                    let ok = offsets[block] + k;
                    algebra.set_ternary(oi, oj, ok, embed(block, f.ternary_basis(i, j, k)));
                }
            }
        }
    }

    let mut projections = Vec::with_capacity(factors.len());
    for (block, f) in factors.iter().enumerate() {
        let mut map = Matrix::zeros(f.dim(), total);
        for i in 0..f.dim() {
            map.set(i, offsets[block] + i, crate::scalar::one());
        }
        projections.push(Morphism::new(algebra.clone(), f.clone(), map)?);
    }

    Ok(ProductResult { algebra, projections })
}

/// The unique map u with p_i ∘ u = cone_i, for a cone of maps out of a
/// common source into the factors.
pub fn product_factor(prod: &ProductResult, cone: &[Morphism]) -> Result<Morphism> {
    if cone.len() != prod.projections.len() {
        return Err(Error::Dimension(format!(
            "cone has {} legs but the product has {} factors",
            cone.len(),
            prod.projections.len()
        )));
    }
    for (leg, proj) in cone.iter().zip(&prod.projections) {
        if leg.source != cone[0].source {
            return Err(Error::Dimension("cone legs differ in source".to_string()));
        }
        if leg.target != proj.target {
            return Err(Error::Dimension(
                "cone leg target differs from the matching factor".to_string(),
            ));
        }
    }
    let mut map = cone[0].map.clone();
    for leg in &cone[1..] {
        map = map.vstack(&leg.map);
    }
    let u = Morphism::new(cone[0].source.clone(), prod.algebra.clone(), map)?;
    for (leg, proj) in cone.iter().zip(&prod.projections) {
        assert_eq!(&proj.map * &u.map, leg.map, "projection composition");
    }
    Ok(u)
}

pub struct EqualizerResult {
    pub subspace: Subspace,
    pub algebra: BolAlgebra,
    pub incl: Morphism,
    pub report: CheckReport,
}

fn require_parallel_pair(f: &Morphism, g: &Morphism) -> Result<()> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::Dimension(
            "a parallel pair with shared source and target is required".to_string(),
        ));
    }
    for h in [f, g] {
        if let Some(failed) = is_morphism(h).first_failure() {
            return Err(Error::NotAMorphism(format!(
                "{} ({})",
                failed.name,
                failed.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
            )));
        }
    }
    Ok(())
}

fn collapse(name: &str, sub: &CheckReport) -> CheckEntry {
    match sub.first_failure() {
        None => CheckEntry::pass(name),
        Some(failed) => CheckEntry {
            name: name.to_string(),
            passed: false,
            witness: failed.witness.clone(),
        },
    }
}

fn plain(name: &str, ok: bool) -> CheckEntry {
    CheckEntry {
        name: name.to_string(),
        passed: ok,
        witness: None,
    }
}

/// Equalizer of a parallel pair: the subalgebra {x | f(x) = g(x)} with its
/// inclusion.
pub fn equalizer(f: &Morphism, g: &Morphism) -> Result<EqualizerResult> {
    require_parallel_pair(f, g)?;
    let subspace = nullspace(&(&f.map - &g.map));
    let (algebra, incl) = subalgebra_algebra(&f.source, &subspace)?;
    let mut report = CheckReport::new();
    report.push(collapse("subalgebra", &is_subalgebra(&f.source, &subspace)));
    report.push(plain(
        "equalizes",
        &f.map * &incl.map == &g.map * &incl.map,
    ));
    report.push(collapse("incl-is-morphism", &is_morphism(&incl)));
    Ok(EqualizerResult {
        subspace,
        algebra,
        incl,
        report,
    })
}

/// Factors a cone h (with f ∘ h = g ∘ h) through the equalizer: the unique
/// u with incl ∘ u = h. Fails when h does not land in the equalizer.
pub fn equalizer_factor(eq: &EqualizerResult, cone: &Morphism) -> Result<Morphism> {
    if cone.target != eq.incl.target {
        return Err(Error::Dimension(
            "cone target differs from the equalized source".to_string(),
        ));
    }
    let mut cols = Vec::with_capacity(cone.map.cols());
    for j in 0..cone.map.cols() {
        let image = cone.map.col(j);
        match eq.subspace.coordinates(&image) {
            Some(c) => cols.push(c),
            None => {
                return Err(Error::Precondition {
                    condition: "cone lands in the equalizer".to_string(),
                    witness: image.to_string(),
                })
            }
        }
    }
    let map = if cols.is_empty() {
        Matrix::zeros(eq.subspace.dim(), 0)
    } else {
        Matrix::from_col_vectors(&cols)
    };
    let u = Morphism::new(cone.source.clone(), eq.algebra.clone(), map)?;
    assert_eq!(&eq.incl.map * &u.map, cone.map, "inclusion composition");
    Ok(u)
}

pub struct CoequalizerResult {
    pub mode: CoequalizerMode,
    pub ideal: Subspace,
    pub algebra: BolAlgebra,
    pub proj: Morphism,
    /// Standard-basis indices of the target representing the classes.
    pub complement: Vec<usize>,
    pub report: CheckReport,
}

/// Coequalizer of a parallel pair as a quotient of the target by a
/// generated ideal; the seed subspace depends on the mode.
pub fn coequalizer(
    f: &Morphism,
    g: &Morphism,
    mode: CoequalizerMode,
) -> Result<CoequalizerResult> {
    require_parallel_pair(f, g)?;
    let seed = match mode {
        CoequalizerMode::Paper => f.image().sum(&g.image()),
        CoequalizerMode::Difference => {
            let diff = &f.map - &g.map;
            let cols: Vec<Vector> = (0..diff.cols()).map(|j| diff.col(j)).collect();
            Subspace::span(diff.rows(), &cols)
        }
    };
    let ideal = ideal_closure(&f.target, &seed, IdealMode::Literal);
    let q = quotient(&f.target, &ideal, IdealMode::Literal)?;
    let mut report = CheckReport::new();
    report.push(collapse("ideal", &is_ideal(&f.target, &ideal, IdealMode::Literal)));
    report.push(plain(
        "coequalizes",
        &q.proj.map * &f.map == &q.proj.map * &g.map,
    ));
    report.push(collapse("proj-is-morphism", &is_morphism(&q.proj)));
    Ok(CoequalizerResult {
        mode,
        ideal,
        algebra: q.algebra,
        proj: q.proj,
        complement: q.complement,
        report,
    })
}

/// Factors a cocone h through the coequalizer: the unique u with
/// u ∘ proj = h. The cocone must vanish on the coequalizer ideal.
pub fn coequalizer_factor(coeq: &CoequalizerResult, cocone: &Morphism) -> Result<Morphism> {
    if cocone.source != coeq.proj.source {
        return Err(Error::Dimension(
            "cocone source differs from the coequalized target".to_string(),
        ));
    }
    for u in coeq.ideal.basis() {
        let image = cocone.apply(u);
        if !image.is_zero() {
            return Err(Error::Precondition {
                condition: "cocone kills the coequalizer ideal".to_string(),
                witness: image.to_string(),
            });
        }
    }
    let n = coeq.proj.source.dim();
    let cols: Vec<Vector> = coeq
        .complement
        .iter()
        .map(|&c| cocone.apply(&Vector::std(n, c)))
        .collect();
    let map = if cols.is_empty() {
        Matrix::zeros(cocone.target.dim(), 0)
    } else {
        Matrix::from_col_vectors(&cols)
    };
    let u = Morphism::new(coeq.algebra.clone(), cocone.target.clone(), map)?;
    assert_eq!(&u.map * &coeq.proj.map, cocone.map, "projection composition");
    Ok(u)
}
