//! Bol modules: axiom verification, the regular representation, the
//! operator maps m, c, r, L, R with their property battery, the composite
//! operator identity in both circulating forms, direct sums, and the
//! split-extension algebra on 𝔅 ⊕ V.
//!
//! Where the two circulating forms of an identity disagree, the form under
//! which the regular representation of a valid algebra verifies is the one
//! checked by `check_module` and `check_p_properties`; the other reading
//! is kept verbatim behind `check_printed_probes` so the divergence stays
//! visible in reports instead of being silently resolved.

use crate::algebra::{BolAlgebra, Profile};
use crate::error::{Error, Result};
use crate::ideal::{is_ideal, IdealMode};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::morphism::is_subalgebra;
use crate::report::{CheckEntry, CheckReport, Witness};

/// Actions of an n-dimensional algebra on an m-dimensional space, stored
/// on basis elements:
///   act_bin[i]    : v ↦ e_i · v
///   act_vbb[i][j] : v ↦ [v; e_i, e_j]
///   act_bvb[i][j] : v ↦ [e_i; v, e_j]
///   act_bbv[i][j] : v ↦ [e_i; e_j, v]
/// The right action v·α is not stored: it is -α·v throughout.
#[derive(Debug, Clone, PartialEq)]
pub struct BolModule {
    alg_dim: usize,
    mod_dim: usize,
    act_bin: Vec<Matrix>,
    act_vbb: Vec<Vec<Matrix>>,
    act_bvb: Vec<Vec<Matrix>>,
    act_bbv: Vec<Vec<Matrix>>,
}

pub fn zero_module(alg_dim: usize, mod_dim: usize) -> BolModule {
    let z = Matrix::zeros(mod_dim, mod_dim);
    BolModule {
        alg_dim,
        mod_dim,
        act_bin: vec![z.clone(); alg_dim],
        act_vbb: vec![vec![z.clone(); alg_dim]; alg_dim],
        act_bvb: vec![vec![z.clone(); alg_dim]; alg_dim],
        act_bbv: vec![vec![z; alg_dim]; alg_dim],
    }
}

impl BolModule {
    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn mod_dim(&self) -> usize {
        self.mod_dim
    }

    pub fn bin(&self, i: usize) -> &Matrix {
        &self.act_bin[i]
    }

    pub fn vbb(&self, i: usize, j: usize) -> &Matrix {
        &self.act_vbb[i][j]
    }

    pub fn bvb(&self, i: usize, j: usize) -> &Matrix {
        &self.act_bvb[i][j]
    }

    pub fn bbv(&self, i: usize, j: usize) -> &Matrix {
        &self.act_bbv[i][j]
    }

    fn assert_shape(&self, m: &Matrix) {
        assert!(
            m.rows() == self.mod_dim && m.cols() == self.mod_dim,
            "action matrix must be {0}x{0}",
            self.mod_dim
        );
    }

    pub fn set_bin(&mut self, i: usize, m: Matrix) {
        self.assert_shape(&m);
        self.act_bin[i] = m;
    }

    pub fn set_vbb(&mut self, i: usize, j: usize, m: Matrix) {
        self.assert_shape(&m);
        self.act_vbb[i][j] = m;
    }

    pub fn set_bvb(&mut self, i: usize, j: usize, m: Matrix) {
        self.assert_shape(&m);
        self.act_bvb[i][j] = m;
    }

    pub fn set_bbv(&mut self, i: usize, j: usize, m: Matrix) {
        self.assert_shape(&m);
        self.act_bbv[i][j] = m;
    }

    fn combo1(&self, mats: &[Matrix], alpha: &Vector) -> Matrix {
        let mut acc = Matrix::zeros(self.mod_dim, self.mod_dim);
        for (i, a) in alpha.0.iter().enumerate() {
            if !num_traits::Zero::is_zero(a) {
                acc = &acc + &mats[i].scale(a);
            }
        }
        acc
    }

    fn combo2(&self, grid: &[Vec<Matrix>], alpha: &Vector, beta: &Vector) -> Matrix {
        let mut acc = Matrix::zeros(self.mod_dim, self.mod_dim);
        for (i, a) in alpha.0.iter().enumerate() {
            if num_traits::Zero::is_zero(a) {
                continue;
            }
            for (j, b) in beta.0.iter().enumerate() {
                if num_traits::Zero::is_zero(b) {
                    continue;
                }
                acc = &acc + &grid[i][j].scale(&(a * b));
            }
        }
        acc
    }

    /// L_τ.
    pub fn l_map(&self, tau: &Vector) -> Matrix {
        self.combo1(&self.act_bin, tau)
    }

    /// R_τ = L_{-τ}.
    pub fn r_cap_map(&self, tau: &Vector) -> Matrix {
        -&self.l_map(tau)
    }

    /// m(α,β) = [α; β, -].
    pub fn m_map(&self, alpha: &Vector, beta: &Vector) -> Matrix {
        self.combo2(&self.act_bbv, alpha, beta)
    }

    /// c(α,β) = [α; -, β].
    pub fn c_map(&self, alpha: &Vector, beta: &Vector) -> Matrix {
        self.combo2(&self.act_bvb, alpha, beta)
    }

    /// r(α,β) = [-; α, β].
    pub fn r_map(&self, alpha: &Vector, beta: &Vector) -> Matrix {
        self.combo2(&self.act_vbb, alpha, beta)
    }

    pub fn act_bin(&self, alpha: &Vector, v: &Vector) -> Vector {
        self.l_map(alpha).mul_vec(v)
    }

    pub fn act_vbb(&self, v: &Vector, alpha: &Vector, beta: &Vector) -> Vector {
        self.r_map(alpha, beta).mul_vec(v)
    }

    pub fn act_bvb(&self, alpha: &Vector, v: &Vector, beta: &Vector) -> Vector {
        self.c_map(alpha, beta).mul_vec(v)
    }

    pub fn act_bbv(&self, alpha: &Vector, beta: &Vector, v: &Vector) -> Vector {
        self.m_map(alpha, beta).mul_vec(v)
    }
}

/// The algebra acting on itself: binary action from the binary tensor and
/// the three ternary actions from the three slot placements.
pub fn regular_module(b: &BolAlgebra) -> BolModule {
    let n = b.dim();
    let mut v = zero_module(n, n);
    let col_matrix = |cols: Vec<Vector>| {
        if cols.is_empty() {
            Matrix::zeros(0, 0)
        } else {
            Matrix::from_col_vectors(&cols)
        }
    };
    for i in 0..n {
        v.set_bin(
            i,
            col_matrix((0..n).map(|k| b.binary_basis(i, k).clone()).collect()),
        );
        for j in 0..n {
            v.set_vbb(
                i,
                j,
                col_matrix((0..n).map(|k| b.ternary_basis(k, i, j).clone()).collect()),
            );
            v.set_bvb(
                i,
                j,
                col_matrix((0..n).map(|k| b.ternary_basis(i, k, j).clone()).collect()),
            );
            v.set_bbv(
                i,
                j,
                col_matrix((0..n).map(|k| b.ternary_basis(i, j, k).clone()).collect()),
            );
        }
    }
    v
}

pub(crate) fn require_matching(b: &BolAlgebra, v: &BolModule) -> Result<()> {
    if v.alg_dim != b.dim() {
        return Err(Error::Dimension(format!(
            "module acts for an algebra of dim {}, got dim {}",
            v.alg_dim,
            b.dim()
        )));
    }
    Ok(())
}

/// First nonzero column of a residual matrix, as a replayable witness: the
/// trailing tuple index is the module basis vector the residual acts on.
pub(crate) fn matrix_witness(tuple: &[usize], residual: &Matrix) -> Option<Witness> {
    for k in 0..residual.cols() {
        let col = residual.col(k);
        if !col.is_zero() {
            let mut t = tuple.to_vec();
            t.push(k);
            return Some(Witness::new(t, col));
        }
    }
    None
}

/// Module axiom battery. Axioms (1) and (2) are the sign conditions, (3)
/// is the cyclic condition, (4) the ternary compatibility and (5) the
/// binary compatibility; (3) and (5) are checked in the readings that the
/// regular representation of a valid algebra satisfies (the cyclic sum
/// [v;α,β] + [β;v,α] + [α;β,v] and the module form of the algebra's
/// fourth axiom). See `check_printed_probes` for the other readings.
pub fn check_module(b: &BolAlgebra, v: &BolModule) -> Result<CheckReport> {
    require_matching(b, v)?;
    let n = v.alg_dim;
    let mut report = CheckReport::new();

    // (1) α·v = -v·α holds by the storage convention; evaluated anyway so
    // the entry is an explicit part of the record.
    let mut ax1 = CheckEntry::pass("axiom-1");
    'ax1: for t in 0..n {
        let residual = &v.act_bin[t] + &v.r_cap_map(&Vector::std(n, t));
        if let Some(w) = matrix_witness(&[t], &residual) {
            ax1 = CheckEntry::fail("axiom-1", w);
            break 'ax1;
        }
    }
    report.push(ax1);

    let mut ax2 = CheckEntry::pass("axiom-2");
    'ax2: for i in 0..n {
        for j in i..n {
            let residual = &v.act_vbb[i][j] + &v.act_vbb[j][i];
            if let Some(w) = matrix_witness(&[i, j], &residual) {
                ax2 = CheckEntry::fail("axiom-2", w);
                break 'ax2;
            }
        }
    }
    report.push(ax2);

    let mut ax3 = CheckEntry::pass("axiom-3");
    'ax3: for i in 0..n {
        for j in 0..n {
            let residual = &(&v.act_vbb[i][j] + &v.act_bvb[j][i]) + &v.act_bbv[i][j];
            if let Some(w) = matrix_witness(&[i, j], &residual) {
                ax3 = CheckEntry::fail("axiom-3", w);
                break 'ax3;
            }
        }
    }
    report.push(ax3);

    report.push(ternary_compat(b, v, TernaryArg::Cyclic, "axiom-4"));
    report.push(binary_compat(b, v, BinaryCompatForm::Repaired, "axiom-5"));
    Ok(report)
}

/// Which ternary element feeds the left side of the compatibility law:
/// the cyclic placement (α;β,γ) or the derivation placement (γ;α,β).
#[derive(Clone, Copy)]
enum TernaryArg {
    Cyclic,
    DReading,
}

/// [(w); v, τ] = [α;β,[γ;v,τ]] + [α;[β;v,τ],γ] + [[α;v,τ];β,γ] with
/// w determined by `arg`, as matrices acting on v.
fn ternary_compat(b: &BolAlgebra, v: &BolModule, arg: TernaryArg, name: &str) -> CheckEntry {
    let n = v.alg_dim;
    let m = v.mod_dim;
    for a in 0..n {
        for bb in 0..n {
            for c in 0..n {
                for t in 0..n {
                    let w = match arg {
                        TernaryArg::Cyclic => b.ternary_basis(a, bb, c),
                        TernaryArg::DReading => b.ternary_basis(c, a, bb),
                    };
                    let mut lhs = Matrix::zeros(m, m);
                    for (p, wc) in w.0.iter().enumerate() {
                        if !num_traits::Zero::is_zero(wc) {
                            lhs = &lhs + &v.act_bvb[p][t].scale(wc);
                        }
                    }
                    let rhs = &(&(&v.act_bbv[a][bb] * &v.act_bvb[c][t])
                        + &(&v.act_bvb[a][c] * &v.act_bvb[bb][t]))
                        + &(&v.act_vbb[bb][c] * &v.act_bvb[a][t]);
                    let residual = &lhs - &rhs;
                    if let Some(witness) = matrix_witness(&[a, bb, c, t], &residual) {
                        return CheckEntry::fail(name, witness);
                    }
                }
            }
        }
    }
    CheckEntry::pass(name)
}

#[derive(Clone, Copy)]
enum BinaryCompatForm {
    /// [τ·v;α,β] = (τ;α,β)·v + τ·[v;α,β] + [α·β;τ,v] + (τ·v)·(α·β).
    Repaired,
    /// m(α,β)∘L_τ = L_{(τ;α,β)} + L_τ∘r(α,β) + m(β·α,τ) + L_{β·α}∘L_τ.
    Printed,
}

fn binary_compat(b: &BolAlgebra, v: &BolModule, form: BinaryCompatForm, name: &str) -> CheckEntry {
    let n = v.alg_dim;
    let m = v.mod_dim;
    let bin_of = |coeffs: &Vector| {
        let mut acc = Matrix::zeros(m, m);
        for (p, c) in coeffs.0.iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                acc = &acc + &v.act_bin[p].scale(c);
            }
        }
        acc
    };
    let bbv_of = |coeffs: &Vector, t: usize| {
        let mut acc = Matrix::zeros(m, m);
        for (p, c) in coeffs.0.iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                acc = &acc + &v.act_bbv[p][t].scale(c);
            }
        }
        acc
    };
    for a in 0..n {
        for bb in 0..n {
            for t in 0..n {
                let d_tau = b.ternary_basis(t, a, bb);
                let residual = match form {
                    BinaryCompatForm::Repaired => {
                        let prod = b.binary_basis(a, bb);
                        let lhs = &v.act_vbb[a][bb] * &v.act_bin[t];
                        let rhs = &(&(&bin_of(d_tau) + &(&v.act_bin[t] * &v.act_vbb[a][bb]))
                            + &bbv_of(prod, t))
                            - &(&bin_of(prod) * &v.act_bin[t]);
                        &lhs - &rhs
                    }
                    BinaryCompatForm::Printed => {
                        let prod = b.binary_basis(bb, a);
                        let lhs = &v.act_bbv[a][bb] * &v.act_bin[t];
                        let rhs = &(&(&bin_of(d_tau) + &(&v.act_bin[t] * &v.act_vbb[a][bb]))
                            + &bbv_of(prod, t))
                            + &(&bin_of(prod) * &v.act_bin[t]);
                        &lhs - &rhs
                    }
                };
                if let Some(witness) = matrix_witness(&[a, bb, t], &residual) {
                    return CheckEntry::fail(name, witness);
                }
            }
        }
    }
    CheckEntry::pass(name)
}

/// Operator property battery p1-p5. p2 is evaluated exactly as printed
/// (m + r = 0) and fails on any module with a nonzero ternary action in
/// the first placement; the verdict is reported, not resolved.
pub fn check_p_properties(b: &BolAlgebra, v: &BolModule) -> Result<CheckReport> {
    require_matching(b, v)?;
    let n = v.alg_dim;
    let mut report = CheckReport::new();

    let mut p1 = CheckEntry::pass("p1");
    'p1: for t in 0..n {
        let e = Vector::std(n, t);
        let residual = &v.r_cap_map(&e) - &v.l_map(&(-&e));
        if let Some(w) = matrix_witness(&[t], &residual) {
            p1 = CheckEntry::fail("p1", w);
            break 'p1;
        }
    }
    report.push(p1);

    let mut p2 = CheckEntry::pass("p2");
    'p2: for i in 0..n {
        for j in 0..n {
            let residual = &v.act_bbv[i][j] + &v.act_vbb[i][j];
            if let Some(w) = matrix_witness(&[i, j], &residual) {
                p2 = CheckEntry::fail("p2", w);
                break 'p2;
            }
        }
    }
    report.push(p2);

    let mut p3 = CheckEntry::pass("p3");
    'p3: for i in 0..n {
        for j in 0..n {
            let residual = &(&v.act_bbv[i][j] + &v.act_bvb[j][i]) + &v.act_vbb[i][j];
            if let Some(w) = matrix_witness(&[i, j], &residual) {
                p3 = CheckEntry::fail("p3", w);
                break 'p3;
            }
        }
    }
    report.push(p3);

    report.push(ternary_compat(b, v, TernaryArg::Cyclic, "p4"));
    report.push(binary_compat(b, v, BinaryCompatForm::Repaired, "p5"));
    Ok(report)
}

/// The alternative printed readings, verbatim: p3 with middle term
/// c(α,β), p4 with left argument (γ;α,β), and p5 with m on the left and
/// the L-term added. Kept separate so their divergence from the working
/// battery is observable.
pub fn check_printed_probes(b: &BolAlgebra, v: &BolModule) -> Result<CheckReport> {
    require_matching(b, v)?;
    let n = v.alg_dim;
    let mut report = CheckReport::new();

    let mut p3 = CheckEntry::pass("p3-as-printed");
    'p3: for i in 0..n {
        for j in 0..n {
            let residual = &(&v.act_bbv[i][j] + &v.act_bvb[i][j]) + &v.act_vbb[i][j];
            if let Some(w) = matrix_witness(&[i, j], &residual) {
                p3 = CheckEntry::fail("p3-as-printed", w);
                break 'p3;
            }
        }
    }
    report.push(p3);

    report.push(ternary_compat(b, v, TernaryArg::DReading, "p4-as-printed"));
    report.push(binary_compat(b, v, BinaryCompatForm::Printed, "p5-as-printed"));
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositeForm {
    /// Exactly as printed, including the term r(β,α)∘m(α,τ) and the left
    /// argument (γ;α,β) in the m+r pair.
    Literal,
    /// Obtained by substituting c = -m-r into the working p4.
    Derived,
}

impl CompositeForm {
    pub fn parse(text: &str) -> Result<CompositeForm> {
        match text {
            "literal" => Ok(CompositeForm::Literal),
            "derived" => Ok(CompositeForm::Derived),
            other => Err(Error::Usage(format!(
                "unknown composite form `{other}` (expected literal|derived)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CompositeForm::Literal => "literal",
            CompositeForm::Derived => "derived",
        }
    }
}

/// The composite identity
///   m(α,β)m(γ,τ) + m(α,β)r(γ,τ) + r(β,·)m(α,τ) + r(β,γ)r(α,τ)
///     = m(w,τ) + r(w,τ) + m(α,γ)m(β,τ) + m(α,γ)r(β,τ)
///       + r(α,γ)m(β,τ) + r(α,γ)r(β,τ)
/// where the literal form takes r(β,α) and w = (γ;α,β), and the derived
/// form takes r(β,γ) and w = (α;β,γ).
pub fn check_prop_composite(
    b: &BolAlgebra,
    v: &BolModule,
    form: CompositeForm,
) -> Result<CheckReport> {
    require_matching(b, v)?;
    let n = v.alg_dim;
    let m = v.mod_dim;
    let name = match form {
        CompositeForm::Literal => "composite-literal",
        CompositeForm::Derived => "composite-derived",
    };
    let mut entry = CheckEntry::pass(name);
    'scan: for a in 0..n {
        for bb in 0..n {
            for c in 0..n {
                for t in 0..n {
                    let (third_left, w) = match form {
                        CompositeForm::Literal => (&v.act_vbb[bb][a], b.ternary_basis(c, a, bb)),
                        CompositeForm::Derived => (&v.act_vbb[bb][c], b.ternary_basis(a, bb, c)),
                    };
                    let lhs = &(&(&(&v.act_bbv[a][bb] * &v.act_bbv[c][t])
                        + &(&v.act_bbv[a][bb] * &v.act_vbb[c][t]))
                        + &(third_left * &v.act_bbv[a][t]))
                        + &(&v.act_vbb[bb][c] * &v.act_vbb[a][t]);
                    let mut mr = Matrix::zeros(m, m);
                    for (p, wc) in w.0.iter().enumerate() {
                        if !num_traits::Zero::is_zero(wc) {
                            mr = &mr + &(&v.act_bbv[p][t] + &v.act_vbb[p][t]).scale(wc);
                        }
                    }
                    let rhs = &(&(&(&mr + &(&v.act_bbv[a][c] * &v.act_bbv[bb][t]))
                        + &(&v.act_bbv[a][c] * &v.act_vbb[bb][t]))
                        + &(&v.act_vbb[a][c] * &v.act_bbv[bb][t]))
                        + &(&v.act_vbb[a][c] * &v.act_vbb[bb][t]);
                    let residual = &lhs - &rhs;
                    if let Some(witness) = matrix_witness(&[a, bb, c, t], &residual) {
                        entry = CheckEntry::fail(name, witness);
                        break 'scan;
                    }
                }
            }
        }
    }
    let mut report = CheckReport::new();
    report.push(entry);
    Ok(report)
}

/// Block-diagonal sum of two modules over the same algebra.
pub fn direct_sum(v: &BolModule, w: &BolModule) -> Result<BolModule> {
    if v.alg_dim != w.alg_dim {
        return Err(Error::Dimension(format!(
            "direct sum needs matching algebra dims, got {} and {}",
            v.alg_dim, w.alg_dim
        )));
    }
    let n = v.alg_dim;
    let block = |a: &Matrix, b: &Matrix| -> Matrix {
        let top = a.hstack(&Matrix::zeros(a.rows(), b.cols()));
        let bottom = Matrix::zeros(b.rows(), a.cols()).hstack(b);
        top.vstack(&bottom)
    };
    let mut sum = zero_module(n, v.mod_dim + w.mod_dim);
    for i in 0..n {
        sum.set_bin(i, block(&v.act_bin[i], &w.act_bin[i]));
        for j in 0..n {
            sum.set_vbb(i, j, block(&v.act_vbb[i][j], &w.act_vbb[i][j]));
            sum.set_bvb(i, j, block(&v.act_bvb[i][j], &w.act_bvb[i][j]));
            sum.set_bbv(i, j, block(&v.act_bbv[i][j], &w.act_bbv[i][j]));
        }
    }
    Ok(sum)
}

pub struct ExtensionResult {
    pub algebra: BolAlgebra,
    pub b_subspace: Subspace,
    pub v_subspace: Subspace,
    pub report: CheckReport,
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

/// The split extension E_V = 𝔅 ⊕ V: binary (b+v)·(b'+v') = b·b' + b·v'
/// - b'·v, ternary with exactly one module slot given by the matching
/// action and zero with two or three module slots. The report carries the
/// axiom check on E_V, the ideal verdict for V and the subalgebra verdict
/// for 𝔅; failures are data, not errors.
pub fn extension_algebra(b: &BolAlgebra, v: &BolModule, profile: Profile) -> Result<ExtensionResult> {
    require_matching(b, v)?;
    let n = b.dim();
    let m = v.mod_dim;
    let total = n + m;
    let embed_b = |vec: &Vector| {
        let mut out = Vector::zero(total);
        out.0[..n].clone_from_slice(&vec.0);
        out
    };
    let embed_v = |vec: &Vector| {
        let mut out = Vector::zero(total);
        out.0[n..].clone_from_slice(&vec.0);
        out
    };

    let mut e = BolAlgebra::zero(total);
    for i in 0..n {
        for j in 0..n {
            e.set_binary(i, j, embed_b(b.binary_basis(i, j)));
            for k in 0..n {
                e.set_ternary(i, j, k, embed_b(b.ternary_basis(i, j, k)));
            }
        }
    }
    for i in 0..n {
        for k in 0..m {
            let ek = Vector::std(m, k);
            e.set_binary(i, n + k, embed_v(&v.act_bin[i].mul_vec(&ek)));
            e.set_binary(n + k, i, embed_v(&(-&v.act_bin[i].mul_vec(&ek))));
            for j in 0..n {
                e.set_ternary(i, j, n + k, embed_v(&v.act_bbv[i][j].mul_vec(&ek)));
                e.set_ternary(i, n + k, j, embed_v(&v.act_bvb[i][j].mul_vec(&ek)));
                e.set_ternary(n + k, i, j, embed_v(&v.act_vbb[i][j].mul_vec(&ek)));
            }
        }
    }

    let b_subspace = Subspace::span(
        total,
        &(0..n).map(|i| Vector::std(total, i)).collect::<Vec<_>>(),
    );
    let v_subspace = Subspace::span(
        total,
        &(0..m).map(|k| Vector::std(total, n + k)).collect::<Vec<_>>(),
    );

    let mut report = e.check_axioms(profile);
    report.push(collapse("v-is-ideal", &is_ideal(&e, &v_subspace, IdealMode::Literal)));
    report.push(collapse("b-is-subalgebra", &is_subalgebra(&e, &b_subspace)));

    Ok(ExtensionResult {
        algebra: e,
        b_subspace,
        v_subspace,
        report,
    })
}
