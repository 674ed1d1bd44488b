//! Command-line surface: argv parsing, dispatch, and report emission.
//!
//! Every command produces a `Report`. The exit code is a pure function of
//! the report status: 0 when all checks pass, 1 when at least one fails,
//! 2 on input or usage errors. Witness indices in reports are 1-based,
//! matching the file formats; the library itself is 0-based.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{from_lie_algebra, from_lie_pair, BolAlgebra, OppositeVariant, Profile};
use crate::category::{coequalizer, equalizer, product, CoequalizerMode};
use crate::dual::{dual_module, dual_rstar, opposite_rep};
use crate::envelope::{build_envelope, roundtrip, verify_envelope, EnvelopeScheme};
use crate::error::{Error, Result};
use crate::format::{
    parse_bol_file, parse_lie_file, parse_module_file, write_bol_file, write_envelope_file,
    write_module_file,
};
use crate::ideal::{ideal_closure, is_ideal, quotient, IdealMode};
use crate::identity::{
    built_in, built_in_names, check_identity, dualize_identity, parse_identity, Binding,
};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::morphism::{first_iso, is_morphism, kernel_image, Morphism};
use crate::pder::{companions_of, d_matrix, derivation_space, inner_pder_span, pder_pairs};
use crate::rep::{
    check_module, check_p_properties, check_printed_probes, check_prop_composite, direct_sum,
    extension_algebra, regular_module, BolModule, CompositeForm,
};
use crate::report::CheckReport;
use crate::scalar::{parse_scalar, Scalar};

pub const REPORT_SCHEMA: u32 = 1;

pub const COMMANDS: &[&str] = &[
    "check",
    "lts",
    "ideal",
    "closure",
    "quotient",
    "morph",
    "kernel",
    "iso",
    "product",
    "equalizer",
    "coequalizer",
    "pder",
    "companions",
    "inner",
    "regrep",
    "modcheck",
    "pcheck",
    "extension",
    "dual",
    "opposite",
    "identity",
    "envelope",
    "roundtrip",
    "frompair",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportWitness {
    /// 1-based indices in the scan order of the underlying checker.
    pub tuple: Vec<usize>,
    /// Exact rational coordinates of the nonzero residual.
    pub residual: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportCheck {
    pub name: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ReportWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub status: String,
    pub checks: Vec<ReportCheck>,
    #[serde(default)]
    pub outputs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Human,
    Machine,
}

impl ReportFormat {
    pub fn parse(text: &str) -> Result<ReportFormat> {
        match text {
            "human" => Ok(ReportFormat::Human),
            "machine" => Ok(ReportFormat::Machine),
            other => Err(Error::Usage(format!(
                "unknown format `{other}` (expected human|machine)"
            ))),
        }
    }
}

/// 0 = all checks pass, 1 = some check fails, 2 = error.
pub fn exit_code(report: &Report) -> i32 {
    match report.status.as_str() {
        "pass" => 0,
        "fail" => 1,
        _ => 2,
    }
}

pub fn emit_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Machine => {
            let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
            text.push('\n');
            text
        }
        ReportFormat::Human => emit_human(report),
    }
}

pub fn parse_report(text: &str) -> Result<Report> {
    serde_json::from_str(text).map_err(|e| Error::Usage(format!("bad machine report: {e}")))
}

fn emit_human(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("command: {}\n", report.command));
    out.push_str(&format!("status: {}\n", report.status));
    if !report.checks.is_empty() {
        let width = report.checks.iter().map(|c| c.name.len()).max().unwrap();
        for c in &report.checks {
            out.push_str(&format!("  {:<width$}  {}", c.name, c.verdict));
            if let Some(w) = &c.witness {
                let tuple: Vec<String> = w.tuple.iter().map(|i| i.to_string()).collect();
                out.push_str(&format!(
                    "  witness ({}) residual ({})",
                    tuple.join(","),
                    w.residual.join(", ")
                ));
                if let Some(note) = &w.note {
                    out.push_str(&format!(" [{note}]"));
                }
            }
            out.push('\n');
        }
    }
    if !report.outputs.is_empty() {
        out.push_str("outputs:\n");
        for o in &report.outputs {
            for line in o.lines() {
                out.push_str(&format!("  {line}\n"));
            }
        }
    }
    if let Some(message) = &report.message {
        out.push_str(&format!("message: {message}\n"));
    }
    out.push_str(&format!("timing: {} ms\n", report.timing_ms));
    out
}

/// Parses and dispatches one invocation. Never panics on user input; every
/// failure lands in the report as status `error`.
pub fn run(argv: &[String]) -> (Report, ReportFormat) {
    let start = Instant::now();
    let command = argv.first().cloned().unwrap_or_default();
    let mut report = Report {
        schema: REPORT_SCHEMA,
        command: command.clone(),
        status: "error".to_string(),
        checks: Vec::new(),
        outputs: Vec::new(),
        message: None,
        timing_ms: 0,
    };

    let mut format = ReportFormat::Human;
    let outcome = parse_args(argv.get(1..).unwrap_or(&[])).and_then(|args| {
        if let Some(text) = args.single("format")? {
            format = ReportFormat::parse(text)?;
        }
        dispatch(&command, &args)
    });
    match outcome {
        Ok((checks, outputs)) => {
            report.status = if checks.iter().all(|c| c.verdict == "pass") {
                "pass"
            } else {
                "fail"
            }
            .to_string();
            report.checks = checks;
            report.outputs = outputs;
        }
        Err(e) => {
            report.message = Some(e.to_string());
        }
    }
    report.timing_ms = start.elapsed().as_millis() as u64;
    (report, format)
}

const VALUE_FLAGS: &[&str] = &[
    "profile", "mode", "scheme", "form", "format", "expr-file", "builtin", "vec", "matrix",
    "alpha", "beta", "b-vec", "h-vec", "bind", "module",
];
const BOOL_FLAGS: &[&str] = &["dualize"];

#[derive(Debug, Default)]
struct Args {
    positional: Vec<String>,
    flags: BTreeMap<String, Vec<String>>,
}

fn parse_args(tokens: &[String]) -> Result<Args> {
    let mut args = Args::default();
    let mut it = tokens.iter();
    while let Some(tok) = it.next() {
        if let Some(name) = tok.strip_prefix("--") {
            if BOOL_FLAGS.contains(&name) {
                args.flags.entry(name.to_string()).or_default().push(String::new());
            } else if VALUE_FLAGS.contains(&name) {
                let value = it
                    .next()
                    .ok_or_else(|| Error::Usage(format!("flag --{name} needs a value")))?;
                args.flags.entry(name.to_string()).or_default().push(value.clone());
            } else {
                return Err(Error::Usage(format!("unknown flag --{name}")));
            }
        } else {
            args.positional.push(tok.clone());
        }
    }
    Ok(args)
}

impl Args {
    /// Rejects flags not meaningful for the current command; --format is
    /// always accepted.
    fn allow(&self, command: &str, allowed: &[&str]) -> Result<()> {
        for key in self.flags.keys() {
            if key != "format" && !allowed.contains(&key.as_str()) {
                return Err(Error::Usage(format!(
                    "flag --{key} is not valid for `{command}`"
                )));
            }
        }
        Ok(())
    }

    fn files(&self, names: &[&str]) -> Result<Vec<&str>> {
        if self.positional.len() != names.len() {
            return Err(Error::Usage(format!(
                "expected {} file argument(s): {}",
                names.len(),
                names.join(" ")
            )));
        }
        Ok(self.positional.iter().map(String::as_str).collect())
    }

    fn single(&self, name: &str) -> Result<Option<&str>> {
        match self.flags.get(name).map(Vec::as_slice) {
            None => Ok(None),
            Some([v]) => Ok(Some(v)),
            Some(_) => Err(Error::Usage(format!("flag --{name} given more than once"))),
        }
    }

    fn required(&self, name: &str) -> Result<&str> {
        self.single(name)?
            .ok_or_else(|| Error::Usage(format!("flag --{name} is required")))
    }

    fn values(&self, name: &str) -> &[String] {
        self.flags.get(name).map(Vec::as_slice).unwrap_or(&[])
    }

    fn has(&self, name: &str) -> bool {
        self.flags.contains_key(name)
    }

    fn profile(&self) -> Result<Profile> {
        Profile::parse(self.single("profile")?.unwrap_or("consistent"))
    }

    fn ideal_mode(&self) -> Result<IdealMode> {
        IdealMode::parse(self.single("mode")?.unwrap_or("literal"))
    }

    fn scheme(&self) -> Result<EnvelopeScheme> {
        EnvelopeScheme::parse(self.single("scheme")?.unwrap_or("lts-standard"))
    }
}

fn load_bol(path: &str) -> Result<BolAlgebra> {
    parse_bol_file(&std::fs::read_to_string(path)?)
}

fn load_lie(path: &str) -> Result<crate::algebra::LieAlgebra> {
    parse_lie_file(&std::fs::read_to_string(path)?)
}

fn load_module(path: &str) -> Result<BolModule> {
    parse_module_file(&std::fs::read_to_string(path)?)
}

fn cli_vector(text: &str) -> Result<Vector> {
    let mut out = Vec::new();
    for tok in text.split(',') {
        let tok = tok.trim();
        out.push(
            parse_scalar(tok).map_err(|_| Error::Usage(format!("bad vector entry `{tok}`")))?,
        );
    }
    Ok(Vector(out))
}

fn cli_matrix(text: &str) -> Result<Matrix> {
    let mut rows = Vec::new();
    for chunk in text.split(';') {
        rows.push(cli_vector(chunk)?.0);
    }
    Matrix::from_rows(rows).map_err(|_| Error::Usage("ragged matrix rows".to_string()))
}

fn cli_vectors(args: &Args, name: &str) -> Result<Vec<Vector>> {
    args.values(name).iter().map(|t| cli_vector(t)).collect()
}

type Outcome = Result<(Vec<ReportCheck>, Vec<String>)>;

fn report_checks(report: &CheckReport) -> Vec<ReportCheck> {
    report
        .entries
        .iter()
        .map(|e| ReportCheck {
            name: e.name.clone(),
            verdict: if e.passed { "pass" } else { "fail" }.to_string(),
            witness: e.witness.as_ref().map(|w| ReportWitness {
                tuple: w.tuple.iter().map(|i| i + 1).collect(),
                residual: w.residual.0.iter().map(Scalar::to_string).collect(),
                note: w.note.clone(),
            }),
        })
        .collect()
}

fn plain_check(name: &str, passed: bool) -> ReportCheck {
    ReportCheck {
        name: name.to_string(),
        verdict: if passed { "pass" } else { "fail" }.to_string(),
        witness: None,
    }
}

fn subspace_lines(label: &str, s: &Subspace) -> Vec<String> {
    let mut out = vec![format!("{label} dim {}", s.dim())];
    for v in s.basis() {
        out.push(format!("{label} basis {v}"));
    }
    out
}

fn span_of(args: &Args, ambient: usize, name: &str) -> Result<Subspace> {
    let vecs = cli_vectors(args, name)?;
    for v in &vecs {
        if v.dim() != ambient {
            return Err(Error::Dimension(format!(
                "--{name} has dim {}, algebra has dim {ambient}",
                v.dim()
            )));
        }
    }
    Ok(Subspace::span(ambient, &vecs))
}

fn parallel_pair(args: &Args, src: BolAlgebra, dst: BolAlgebra) -> Result<(Morphism, Morphism)> {
    let matrices = args.values("matrix");
    if matrices.len() != 2 {
        return Err(Error::Usage(
            "exactly two --matrix flags are required".to_string(),
        ));
    }
    let f = Morphism::new(src.clone(), dst.clone(), cli_matrix(&matrices[0])?)?;
    let g = Morphism::new(src, dst, cli_matrix(&matrices[1])?)?;
    Ok((f, g))
}

fn dispatch(command: &str, args: &Args) -> Outcome {
    match command {
        "check" => {
            args.allow(command, &["profile"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let profile = args.profile()?;
            let report = b.check_axioms(profile);
            Ok((report_checks(&report), vec![format!("profile {}", profile.as_str())]))
        }
        "lts" => {
            args.allow(command, &["profile"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let profile = args.profile()?;
            let report = b.check_lts(profile);
            Ok((report_checks(&report), vec![format!("profile {}", profile.as_str())]))
        }
        "ideal" => {
            args.allow(command, &["vec", "mode"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            if !args.has("vec") {
                return Err(Error::Usage("at least one --vec is required".to_string()));
            }
            let span = span_of(args, b.dim(), "vec")?;
            let report = is_ideal(&b, &span, args.ideal_mode()?);
            Ok((report_checks(&report), subspace_lines("ideal", &span)))
        }
        "closure" => {
            args.allow(command, &["vec", "mode"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let span = span_of(args, b.dim(), "vec")?;
            let closed = ideal_closure(&b, &span, args.ideal_mode()?);
            Ok((Vec::new(), subspace_lines("closure", &closed)))
        }
        "quotient" => {
            args.allow(command, &["vec", "mode"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let span = span_of(args, b.dim(), "vec")?;
            let q = quotient(&b, &span, args.ideal_mode()?)?;
            let classes: Vec<String> =
                q.complement.iter().map(|i| format!("e{}", i + 1)).collect();
            let outputs = vec![
                format!("quotient dim {}", q.algebra.dim()),
                format!("classes {}", classes.join(" ")),
                write_bol_file(&q.algebra),
            ];
            Ok((Vec::new(), outputs))
        }
        "morph" => {
            args.allow(command, &["matrix"])?;
            let files = args.files(&["source.bol", "target.bol"])?;
            let src = load_bol(files[0])?;
            let dst = load_bol(files[1])?;
            let f = Morphism::new(src, dst, cli_matrix(args.required("matrix")?)?)?;
            let report = is_morphism(&f);
            Ok((report_checks(&report), Vec::new()))
        }
        "kernel" => {
            args.allow(command, &["matrix"])?;
            let files = args.files(&["source.bol", "target.bol"])?;
            let src = load_bol(files[0])?;
            let dst = load_bol(files[1])?;
            let f = Morphism::new(src, dst, cli_matrix(args.required("matrix")?)?)?;
            let ki = kernel_image(&f)?;
            let mut outputs = subspace_lines("kernel", &ki.kernel);
            outputs.extend(subspace_lines("image", &ki.image));
            Ok((report_checks(&ki.report), outputs))
        }
        "iso" => {
            args.allow(command, &["matrix"])?;
            let files = args.files(&["source.bol", "target.bol"])?;
            let src = load_bol(files[0])?;
            let dst = load_bol(files[1])?;
            let f = Morphism::new(src, dst, cli_matrix(args.required("matrix")?)?)?;
            let fi = first_iso(&f)?;
            let outputs = vec![
                format!("kernel dim {}", fi.kernel.dim()),
                format!("quotient dim {}", fi.quotient.dim()),
                format!("image dim {}", fi.image.dim()),
            ];
            Ok((report_checks(&fi.report), outputs))
        }
        "product" => {
            args.allow(command, &[])?;
            if args.positional.is_empty() {
                return Err(Error::Usage(
                    "at least one algebra file is required".to_string(),
                ));
            }
            let factors: Vec<BolAlgebra> = args
                .positional
                .iter()
                .map(|p| load_bol(p))
                .collect::<Result<_>>()?;
            let pr = product(&factors)?;
            let outputs = vec![
                format!("product dim {}", pr.algebra.dim()),
                write_bol_file(&pr.algebra),
            ];
            Ok((Vec::new(), outputs))
        }
        "equalizer" => {
            args.allow(command, &["matrix"])?;
            let files = args.files(&["source.bol", "target.bol"])?;
            let (f, g) = parallel_pair(args, load_bol(files[0])?, load_bol(files[1])?)?;
            let eq = equalizer(&f, &g)?;
            let mut outputs = subspace_lines("equalizer", &eq.subspace);
            outputs.push(write_bol_file(&eq.algebra));
            Ok((report_checks(&eq.report), outputs))
        }
        "coequalizer" => {
            args.allow(command, &["matrix", "mode"])?;
            let files = args.files(&["source.bol", "target.bol"])?;
            let (f, g) = parallel_pair(args, load_bol(files[0])?, load_bol(files[1])?)?;
            let mode = CoequalizerMode::parse(args.single("mode")?.unwrap_or("difference"))?;
            let coeq = coequalizer(&f, &g, mode)?;
            let outputs = vec![
                format!("mode {}", mode.as_str()),
                format!("coequalizer dim {}", coeq.algebra.dim()),
                write_bol_file(&coeq.algebra),
            ];
            Ok((report_checks(&coeq.report), outputs))
        }
        "pder" => {
            args.allow(command, &["matrix", "vec", "alpha", "beta"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let n = b.dim();
            let sol = pder_pairs(&b);
            if args.has("matrix") || args.has("vec") {
                let d = cli_matrix(args.required("matrix")?)?;
                let z = cli_vector(args.required("vec")?)?;
                if d.rows() != n || d.cols() != n || z.dim() != n {
                    return Err(Error::Dimension(format!(
                        "pder pair must be an {n}x{n} matrix and a dim-{n} vector"
                    )));
                }
                let check = plain_check("pder-pair", sol.contains_pair(&d, &z));
                Ok((vec![check], vec![format!("companion {z}")]))
            } else if args.has("alpha") || args.has("beta") {
                let alpha = cli_vector(args.required("alpha")?)?;
                let beta = cli_vector(args.required("beta")?)?;
                if alpha.dim() != n || beta.dim() != n {
                    return Err(Error::Dimension(format!(
                        "--alpha and --beta must have dim {n}"
                    )));
                }
                let d = d_matrix(&b, &alpha, &beta);
                let z = b.binary(&alpha, &beta);
                let check = plain_check("pder-pair", sol.contains_pair(&d, &z));
                Ok((vec![check], vec![format!("companion {z}")]))
            } else {
                let outputs = vec![
                    format!("pair space dim {}", sol.pair_space.dim()),
                    format!("derivation space dim {}", derivation_space(&b).dim()),
                ];
                Ok((Vec::new(), outputs))
            }
        }
        "companions" => {
            args.allow(command, &["matrix"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let cs = companions_of(&b, &cli_matrix(args.required("matrix")?)?)?;
            let mut outputs = Vec::new();
            if let Some(p) = &cs.particular {
                outputs.push(format!("particular {p}"));
            }
            outputs.extend(subspace_lines("homogeneous", &cs.homogeneous));
            Ok((vec![plain_check("defined", cs.defined)], outputs))
        }
        "inner" => {
            args.allow(command, &[])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let span = inner_pder_span(&b);
            let check = plain_check("contained-in-pair-space", span.contained_in_pair_space);
            Ok((vec![check], vec![format!("inner span dim {}", span.span.dim())]))
        }
        "regrep" => {
            args.allow(command, &[])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            Ok((Vec::new(), vec![write_module_file(&regular_module(&b))]))
        }
        "modcheck" => {
            args.allow(command, &["module"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let paths = args.values("module");
            if paths.is_empty() {
                return Err(Error::Usage("at least one --module is required".to_string()));
            }
            let mut modules = paths.iter().map(|p| load_module(p));
            let mut acc = modules.next().unwrap()?;
            for m in modules {
                acc = direct_sum(&acc, &m?)?;
            }
            let report = check_module(&b, &acc)?;
            let outputs = vec![
                format!("summands {}", paths.len()),
                format!("module dim {}", acc.mod_dim()),
            ];
            Ok((report_checks(&report), outputs))
        }
        "pcheck" => {
            args.allow(command, &["module", "form"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let v = load_module(args.required("module")?)?;
            let report = match args.single("form")? {
                None => check_p_properties(&b, &v)?,
                Some("printed") => check_printed_probes(&b, &v)?,
                Some(other) => {
                    let form = CompositeForm::parse(other).map_err(|_| {
                        Error::Usage(format!(
                            "unknown pcheck form `{other}` (expected printed|literal|derived)"
                        ))
                    })?;
                    check_prop_composite(&b, &v, form)?
                }
            };
            Ok((report_checks(&report), Vec::new()))
        }
        "extension" => {
            args.allow(command, &["module", "profile"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let v = load_module(args.required("module")?)?;
            let ext = extension_algebra(&b, &v, args.profile()?)?;
            let outputs = vec![
                format!("extension dim {}", ext.algebra.dim()),
                write_bol_file(&ext.algebra),
            ];
            Ok((report_checks(&ext.report), outputs))
        }
        "dual" => {
            args.allow(command, &["module", "form"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let v = load_module(args.required("module")?)?;
            match args.single("form")? {
                None => {
                    let d = dual_module(&b, &v)?;
                    Ok((Vec::new(), vec![write_module_file(&d)]))
                }
                Some("printed") => {
                    let report = dual_rstar(&b, &v)?;
                    Ok((report_checks(&report), Vec::new()))
                }
                Some(other) => Err(Error::Usage(format!(
                    "unknown dual form `{other}` (expected printed)"
                ))),
            }
        }
        "opposite" => {
            args.allow(command, &["mode", "module"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let variant = OppositeVariant::parse(args.single("mode")?.unwrap_or("section2"))?;
            let op = b.opposite(variant);
            let mut outputs = vec![write_bol_file(&op)];
            if let Some(path) = args.single("module")? {
                let v = load_module(path)?;
                outputs.push(write_module_file(&opposite_rep(&b, &v)?));
            }
            Ok((Vec::new(), outputs))
        }
        "identity" => {
            args.allow(command, &["module", "expr-file", "builtin", "bind", "dualize"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let v = load_module(args.required("module")?)?;
            let mut ast = match (args.single("expr-file")?, args.single("builtin")?) {
                (Some(path), None) => parse_identity(&std::fs::read_to_string(path)?)?,
                (None, Some(name)) => built_in(name).ok_or_else(|| {
                    Error::Usage(format!(
                        "unknown built-in `{name}` (expected {})",
                        built_in_names().join("|")
                    ))
                })?,
                _ => {
                    return Err(Error::Usage(
                        "exactly one of --expr-file or --builtin is required".to_string(),
                    ))
                }
            };
            if args.has("dualize") {
                ast = dualize_identity(&ast);
            }
            let binds = args.values("bind");
            let binding = if binds.is_empty() {
                Binding::Exhaustive
            } else {
                let mut env = BTreeMap::new();
                for bind in binds {
                    let (sym, coords) = bind.split_once('=').ok_or_else(|| {
                        Error::Usage(format!("bad --bind `{bind}` (expected sym=coords)"))
                    })?;
                    env.insert(sym.trim().to_string(), cli_vector(coords)?);
                }
                Binding::Env(env)
            };
            let report = check_identity(&b, &v, &ast, &binding)?;
            Ok((report_checks(&report), vec![format!("identity {ast}")]))
        }
        "envelope" => {
            args.allow(command, &["scheme"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let env = build_envelope(&b, args.scheme()?);
            let report = verify_envelope(&env);
            let outputs = vec![
                format!("total dim {}", env.total_dim()),
                write_envelope_file(&env),
            ];
            Ok((report_checks(&report), outputs))
        }
        "roundtrip" => {
            args.allow(command, &["scheme"])?;
            let b = load_bol(args.files(&["algebra.bol"])?[0])?;
            let rt = roundtrip(&b, args.scheme()?)?;
            let outputs = vec![
                format!("total dim {}", rt.envelope.total_dim()),
                write_bol_file(&rt.recovered),
            ];
            Ok((report_checks(&rt.report), outputs))
        }
        "frompair" => {
            args.allow(command, &["b-vec", "h-vec"])?;
            let g = load_lie(args.files(&["algebra.lie"])?[0])?;
            let alg = if !args.has("b-vec") && !args.has("h-vec") {
                from_lie_algebra(&g)?
            } else {
                if !args.has("b-vec") || !args.has("h-vec") {
                    return Err(Error::Usage(
                        "both --b-vec and --h-vec are required for a pair".to_string(),
                    ));
                }
                let bsub = span_of(args, g.dim(), "b-vec")?;
                let hsub = span_of(args, g.dim(), "h-vec")?;
                from_lie_pair(&g, &bsub, &hsub)?
            };
            let outputs = vec![format!("dim {}", alg.dim()), write_bol_file(&alg)];
            Ok((Vec::new(), outputs))
        }
        "" => Err(Error::Usage(format!(
            "no command given (expected one of: {})",
            COMMANDS.join(", ")
        ))),
        other => Err(Error::Usage(format!(
            "unknown command `{other}` (expected one of: {})",
            COMMANDS.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_strs(parts: &[&str]) -> (Report, ReportFormat) {
        let argv: Vec<String> = parts.iter().map(|s| s.to_string()).collect();
        run(&argv)
    }

    #[test]
    fn unknown_commands_and_flags_error_out() {
        let (report, _) = run_strs(&["frobnicate"]);
        assert_eq!(report.status, "error");
        assert_eq!(exit_code(&report), 2);
        assert!(report.message.as_ref().unwrap().contains("unknown command"));

        let (report, _) = run_strs(&["check", "--sideways", "x.bol"]);
        assert!(report.message.as_ref().unwrap().contains("unknown flag"));

        let (report, _) = run_strs(&["check", "x.bol", "--module", "m"]);
        assert!(report
            .message
            .as_ref()
            .unwrap()
            .contains("not valid for `check`"));

        let (report, _) = run_strs(&[]);
        assert!(report.message.as_ref().unwrap().contains("no command"));
    }

    #[test]
    fn exit_code_is_a_pure_function_of_status() {
        let mut report = Report {
            schema: REPORT_SCHEMA,
            command: "check".to_string(),
            status: "pass".to_string(),
            checks: Vec::new(),
            outputs: Vec::new(),
            message: None,
            timing_ms: 0,
        };
        assert_eq!(exit_code(&report), 0);
        report.status = "fail".to_string();
        assert_eq!(exit_code(&report), 1);
        report.status = "error".to_string();
        assert_eq!(exit_code(&report), 2);
    }

    #[test]
    fn machine_reports_round_trip() {
        let report = Report {
            schema: REPORT_SCHEMA,
            command: "lts".to_string(),
            status: "fail".to_string(),
            checks: vec![
                ReportCheck {
                    name: "axiom-1".to_string(),
                    verdict: "fail".to_string(),
                    witness: Some(ReportWitness {
                        tuple: vec![1, 1, 2],
                        residual: vec!["1".to_string(), "-1/2".to_string()],
                        note: Some("t=e1".to_string()),
                    }),
                },
                plain_check("axiom-2", true),
            ],
            outputs: vec!["profile consistent".to_string()],
            message: None,
            timing_ms: 3,
        };
        let text = emit_report(&report, ReportFormat::Machine);
        assert_eq!(parse_report(&text).unwrap(), report);
    }

    #[test]
    fn human_reports_align_checks_and_carry_witnesses() {
        let report = Report {
            schema: REPORT_SCHEMA,
            command: "lts".to_string(),
            status: "fail".to_string(),
            checks: vec![
                plain_check("axiom-1-long-name", true),
                ReportCheck {
                    name: "axiom-2".to_string(),
                    verdict: "fail".to_string(),
                    witness: Some(ReportWitness {
                        tuple: vec![1, 2, 3],
                        residual: vec!["2".to_string(), "0".to_string()],
                        note: None,
                    }),
                },
            ],
            outputs: vec!["profile consistent".to_string()],
            message: None,
            timing_ms: 0,
        };
        let text = emit_report(&report, ReportFormat::Human);
        assert!(text.contains("status: fail"));
        assert!(text.contains("axiom-1-long-name  pass"));
        assert!(text.contains("axiom-2            fail  witness (1,2,3) residual (2, 0)"));
        assert!(text.contains("profile consistent"));
    }

    #[test]
    fn vectors_and_matrices_parse_from_flag_syntax() {
        assert_eq!(cli_vector("1,0,-3/2").unwrap(), {
            let mut v = Vector::from_ints(&[1, 0, 0]);
            v.0[2] = parse_scalar("-3/2").unwrap();
            v
        });
        assert!(cli_vector("1,x").is_err());
        let m = cli_matrix("1,0;0,1").unwrap();
        assert_eq!(m, Matrix::identity(2));
        assert!(cli_matrix("1,0;1").is_err());
    }

    #[test]
    fn missing_files_surface_as_errors() {
        let (report, _) = run_strs(&["check", "/nonexistent/x.bol"]);
        assert_eq!(report.status, "error");
        assert_eq!(exit_code(&report), 2);
    }

    #[test]
    fn format_flag_selects_machine_output() {
        let (_, format) = run_strs(&["check", "/nonexistent/x.bol", "--format", "machine"]);
        assert_eq!(format, ReportFormat::Machine);
        let (report, format) = run_strs(&["check", "x.bol", "--format", "sideways"]);
        assert_eq!(format, ReportFormat::Human);
        assert!(report.message.as_ref().unwrap().contains("unknown format"));
    }
}
