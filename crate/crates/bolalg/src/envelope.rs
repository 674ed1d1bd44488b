//! The enveloping Lie algebra 𝔊 = 𝔅 ⊕ Λ²𝔅.
//!
//! The bracket extends the classical standard embedding of a Lie triple
//! system by the binary part:
//!
//!   [x, y]     = x·y + x∧y
//!   [x∧y, z]   = -(z; x, y)
//!   [x∧y, u∧v] = -((u;x,y)∧v + u∧(v;x,y))
//!
//! The sign on the wedge action is fixed by the retraction the pair
//! construction uses, (x;y,z) = Π[x, [y,z]]: with it, [x, y∧z] recovers
//! exactly (x;y,z), so a binary-zero algebra round-trips identically.
//! Whether the Jacobi identity actually holds is a property of the input
//! algebra and is verified per instance, never assumed; failures are
//! ordinary report entries.

use crate::algebra::{BolAlgebra, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};
use crate::report::{CheckEntry, CheckReport, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnvelopeScheme {
    LtsStandard,
}

impl EnvelopeScheme {
    pub fn parse(text: &str) -> Result<EnvelopeScheme> {
        match text {
            "lts-standard" => Ok(EnvelopeScheme::LtsStandard),
            other => Err(Error::Usage(format!(
                "unknown envelope scheme `{other}` (expected lts-standard)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EnvelopeScheme::LtsStandard => "lts-standard",
        }
    }
}

/// 𝔅 embedded in the first n coordinates of a Lie algebra whose remaining
/// coordinates are the ordered wedge pairs e_i∧e_j, i < j.
#[derive(Debug, Clone)]
pub struct EnvelopingAlgebra {
    base: BolAlgebra,
    total: LieAlgebra,
    wedge: Vec<(usize, usize)>,
}

impl EnvelopingAlgebra {
    pub fn base(&self) -> &BolAlgebra {
        &self.base
    }

    pub fn total(&self) -> &LieAlgebra {
        &self.total
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn total_dim(&self) -> usize {
        self.total.dim()
    }

    /// Pair (i, j), i < j, living at coordinate base_dim() + k.
    pub fn wedge_pairs(&self) -> &[(usize, usize)] {
        &self.wedge
    }

    pub fn wedge_index(&self, i: usize, j: usize) -> usize {
        assert!(i < j && j < self.base_dim(), "wedge pairs are ordered");
        let k = self
            .wedge
            .iter()
            .position(|&p| p == (i, j))
            .expect("every ordered pair is indexed");
        self.base_dim() + k
    }
}

fn embed(v: &Vector, total: usize) -> Vector {
    let mut out = Vector::zero(total);
    for (i, c) in v.0.iter().enumerate() {
        out.0[i] = c.clone();
    }
    out
}

/// u∧v in wedge coordinates: the w_{pq} coefficient is u_p v_q - u_q v_p.
fn wedge_vec(u: &Vector, v: &Vector, pairs: &[(usize, usize)], total: usize) -> Vector {
    let n = u.dim();
    let mut out = Vector::zero(total);
    for (k, &(p, q)) in pairs.iter().enumerate() {
        out.0[n + k] = &(u.get(p) * v.get(q)) - &(u.get(q) * v.get(p));
    }
    out
}

/// Builds 𝔊 on n + n(n-1)/2 coordinates. Construction always succeeds;
/// `verify_envelope` decides whether the result is a Lie algebra.
pub fn build_envelope(b: &BolAlgebra, _scheme: EnvelopeScheme) -> EnvelopingAlgebra {
    let n = b.dim();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = n + pairs.len();
    let mut g = LieAlgebra::zero(total);

    for (k, &(i, j)) in pairs.iter().enumerate() {
        let mut value = embed(b.binary_basis(i, j), total);
        value.0[n + k] = crate::scalar::one();
        g.set_bracket_skew(i, j, value);
    }
    for (k, &(i, j)) in pairs.iter().enumerate() {
        for z in 0..n {
            let value = -&embed(b.ternary_basis(z, i, j), total);
            g.set_bracket_skew(n + k, z, value);
        }
    }
    for (k1, &(i, j)) in pairs.iter().enumerate() {
        for (k2, &(u, v)) in pairs.iter().enumerate().skip(k1 + 1) {
            let du = b.ternary_basis(u, i, j);
            let dv = b.ternary_basis(v, i, j);
            let value = -&(&wedge_vec(du, &Vector::std(n, v), &pairs, total)
                + &wedge_vec(&Vector::std(n, u), dv, &pairs, total));
            g.set_bracket_skew(n + k1, n + k2, value);
        }
    }

    EnvelopingAlgebra {
        base: b.clone(),
        total: g,
        wedge: pairs,
    }
}

/// Jacobi over all basis triples of the total algebra, plus the
/// retraction laws tying the bracket back to the base operations: the
/// 𝔅-component of [e_i, e_j] is the binary tensor, the Λ²-component is
/// the canonical wedge, and the 𝔅-component of [e_z, e_i∧e_j] is the
/// ternary tensor. The construction reads only the i < j slots, so on a
/// broken input with a non-skew binary the retraction entries expose the
/// slot the bracket cannot represent.
pub fn verify_envelope(e: &EnvelopingAlgebra) -> CheckReport {
    let n = e.base_dim();
    let total = e.total_dim();
    let mut report = e.total.jacobi_check();

    let project = |v: &Vector| Vector(v.0[..n].to_vec());

    let mut binary = CheckEntry::pass("retraction-binary");
    let mut wedge = CheckEntry::pass("canonical-wedge");
    'base: for i in 0..n {
        for j in 0..n {
            let bracket = e.total.bracket_basis(i, j);
            let residual = &project(bracket) - e.base.binary_basis(i, j);
            if !residual.is_zero() {
                binary = CheckEntry::fail("retraction-binary", Witness::new(vec![i, j], residual));
                break 'base;
            }
            let canonical = wedge_vec(&Vector::std(n, i), &Vector::std(n, j), &e.wedge, total);
            let mut tail = bracket.clone();
            for p in 0..n {
                tail.0[p] = crate::scalar::zero();
            }
            let residual = &tail - &canonical;
            if !residual.is_zero() {
                wedge = CheckEntry::fail("canonical-wedge", Witness::new(vec![i, j], residual));
                break 'base;
            }
        }
    }
    report.push(binary);
    report.push(wedge);

    let mut ternary = CheckEntry::pass("retraction-ternary");
    'tern: for z in 0..n {
        for (k, &(i, j)) in e.wedge.iter().enumerate() {
            let recovered = project(e.total.bracket_basis(z, n + k));
            let residual = &recovered - e.base.ternary_basis(z, i, j);
            if !residual.is_zero() {
                ternary =
                    CheckEntry::fail("retraction-ternary", Witness::new(vec![z, i, j], residual));
                break 'tern;
            }
        }
    }
    report.push(ternary);
    report
}

/// Outcome of envelope → Lie pair → Bol algebra.
#[derive(Debug, Clone)]
pub struct RoundtripReport {
    pub envelope: EnvelopingAlgebra,
    pub recovered: BolAlgebra,
    pub report: CheckReport,
}

/// Rebuilds the algebra from its own envelope through the pair
/// construction and compares tensors exactly. Refuses, with the failing
/// check named, when the envelope is not a Lie algebra or the pair
/// preconditions do not hold; both happen for nonzero binary operations.
pub fn roundtrip(b: &BolAlgebra, scheme: EnvelopeScheme) -> Result<RoundtripReport> {
    let envelope = build_envelope(b, scheme);
    let verification = verify_envelope(&envelope);
    if let Some(failed) = verification.first_failure() {
        return Err(Error::Precondition {
            condition: format!("verify_envelope/{}", failed.name),
            witness: failed
                .witness
                .as_ref()
                .map(|w| w.to_string())
                .unwrap_or_default(),
        });
    }

    let n = envelope.base_dim();
    let total = envelope.total_dim();
    let bsub = Subspace::span(
        total,
        &(0..n).map(|i| Vector::std(total, i)).collect::<Vec<_>>(),
    );
    let hsub = Subspace::span(
        total,
        &(n..total).map(|i| Vector::std(total, i)).collect::<Vec<_>>(),
    );
    let recovered = crate::algebra::from_lie_pair(envelope.total(), &bsub, &hsub)?;

    let mut report = CheckReport::new();
    let mut binary = CheckEntry::pass("binary-recovered");
    'bin: for i in 0..n {
        for j in 0..n {
            let residual = recovered.binary_basis(i, j) - b.binary_basis(i, j);
            if !residual.is_zero() {
                binary = CheckEntry::fail("binary-recovered", Witness::new(vec![i, j], residual));
                break 'bin;
            }
        }
    }
    report.push(binary);
    let mut ternary = CheckEntry::pass("ternary-recovered");
    'tern: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let residual = recovered.ternary_basis(i, j, k) - b.ternary_basis(i, j, k);
                if !residual.is_zero() {
                    ternary = CheckEntry::fail(
                        "ternary-recovered",
                        Witness::new(vec![i, j, k], residual),
                    );
                    break 'tern;
                }
            }
        }
    }
    report.push(ternary);

    Ok(RoundtripReport {
        envelope,
        recovered,
        report,
    })
}
