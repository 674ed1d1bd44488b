//! Line-oriented text formats.
//!
//! Algebra files (`bolalg 1` / `liealg 1`) and module files (`bolmod 1`)
//! share the same conventions: `#` starts a comment, blank lines are
//! ignored, indices are 1-based, and unspecified entries are zero. The
//! loader checks shape only; a file may describe an algebra violating
//! every axiom, which is what the checkers are for. Each entry line sets
//! exactly one slot, so skew pairs appear twice in written output.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::algebra::{BolAlgebra, LieAlgebra};
use crate::envelope::EnvelopingAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::rep::{zero_module, BolModule};
use crate::scalar::{parse_scalar, Scalar};

#[derive(Debug, Clone)]
pub enum AlgebraFile {
    Bol(BolAlgebra),
    Lie(LieAlgebra),
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::FileFormat {
        line,
        msg: msg.into(),
    }
}

/// Significant lines with their 1-based numbers, comments stripped.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(idx, raw)| {
            let content = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if content.is_empty() {
                None
            } else {
                Some((idx + 1, content))
            }
        })
        .collect()
}

fn parse_index(line: usize, token: &str, dim: usize, what: &str) -> Result<usize> {
    let value: usize = token
        .parse()
        .map_err(|_| err(line, format!("bad {what} index `{token}`")))?;
    if value < 1 || value > dim {
        return Err(err(
            line,
            format!("{what} index {value} out of range 1..{dim}"),
        ));
    }
    Ok(value - 1)
}

fn parse_coords(line: usize, tokens: &[&str], dim: usize) -> Result<Vector> {
    if tokens.len() != dim {
        return Err(err(
            line,
            format!("expected {dim} coordinates, found {}", tokens.len()),
        ));
    }
    let mut out = Vector::zero(dim);
    for (i, tok) in tokens.iter().enumerate() {
        out.0[i] = parse_scalar(tok).map_err(|_| err(line, format!("bad rational `{tok}`")))?;
    }
    Ok(out)
}

fn expect_eq(line: usize, token: Option<&&str>) -> Result<()> {
    match token {
        Some(&"=") => Ok(()),
        _ => Err(err(line, "expected `=`")),
    }
}

/// Parses either algebra format, dispatching on the header line.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile> {
    let lines = significant_lines(text);
    let Some(&(header_line, header)) = lines.first() else {
        return Err(err(1, "missing header (expected `bolalg 1` or `liealg 1`)"));
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let lie = match tokens.as_slice() {
        ["bolalg", "1"] => false,
        ["liealg", "1"] => true,
        ["bolalg" | "liealg", version] => {
            return Err(err(header_line, format!("unsupported version `{version}`")))
        }
        _ => {
            return Err(err(
                header_line,
                "missing header (expected `bolalg 1` or `liealg 1`)",
            ))
        }
    };

    let mut dim: Option<usize> = None;
    let mut bol: Option<BolAlgebra> = None;
    let mut lie_alg: Option<LieAlgebra> = None;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();

    for &(line, content) in &lines[1..] {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "dim" => {
                if dim.is_some() {
                    return Err(err(line, "duplicate `dim`"));
                }
                if tokens.len() != 2 {
                    return Err(err(line, "expected `dim <n>`"));
                }
                let n: usize = tokens[1]
                    .parse()
                    .map_err(|_| err(line, format!("bad dimension `{}`", tokens[1])))?;
                dim = Some(n);
                if lie {
                    lie_alg = Some(LieAlgebra::zero(n));
                } else {
                    bol = Some(BolAlgebra::zero(n));
                }
            }
            "field" => {
                if tokens.len() != 2 || tokens[1] != "Q" {
                    return Err(err(line, "unsupported field (expected `field Q`)"));
                }
            }
            "bin" => {
                let n = dim.ok_or_else(|| err(line, "`dim` must come before entries"))?;
                if tokens.len() < 4 {
                    return Err(err(line, "expected `bin <i> <j> = <coords>`"));
                }
                let i = parse_index(line, tokens[1], n, "row")?;
                let j = parse_index(line, tokens[2], n, "column")?;
                expect_eq(line, tokens.get(3))?;
                let value = parse_coords(line, &tokens[4..], n)?;
                if !seen.insert(vec![0, i, j]) {
                    return Err(err(line, format!("duplicate entry bin {} {}", i + 1, j + 1)));
                }
                match (&mut bol, &mut lie_alg) {
                    (Some(b), _) => b.set_binary(i, j, value),
                    (_, Some(g)) => g.set_bracket(i, j, value),
                    _ => unreachable!(),
                }
            }
            "ter" => {
                if lie {
                    return Err(err(line, "`ter` entries are not allowed in a liealg file"));
                }
                let n = dim.ok_or_else(|| err(line, "`dim` must come before entries"))?;
                if tokens.len() < 5 {
                    return Err(err(line, "expected `ter <i> <j> <k> = <coords>`"));
                }
                let i = parse_index(line, tokens[1], n, "first")?;
                let j = parse_index(line, tokens[2], n, "second")?;
                let k = parse_index(line, tokens[3], n, "third")?;
                expect_eq(line, tokens.get(4))?;
                let value = parse_coords(line, &tokens[5..], n)?;
                if !seen.insert(vec![1, i, j, k]) {
                    return Err(err(
                        line,
                        format!("duplicate entry ter {} {} {}", i + 1, j + 1, k + 1),
                    ));
                }
                bol.as_mut().unwrap().set_ternary(i, j, k, value);
            }
            other => return Err(err(line, format!("unknown keyword `{other}`"))),
        }
    }

    if dim.is_none() {
        return Err(err(lines.last().unwrap().0, "missing `dim` line"));
    }
    Ok(if lie {
        AlgebraFile::Lie(lie_alg.unwrap())
    } else {
        AlgebraFile::Bol(bol.unwrap())
    })
}

pub fn parse_bol_file(text: &str) -> Result<BolAlgebra> {
    match parse_algebra_file(text)? {
        AlgebraFile::Bol(b) => Ok(b),
        AlgebraFile::Lie(_) => Err(err(1, "expected a bolalg file, found liealg")),
    }
}

pub fn parse_lie_file(text: &str) -> Result<LieAlgebra> {
    match parse_algebra_file(text)? {
        AlgebraFile::Lie(g) => Ok(g),
        AlgebraFile::Bol(_) => Err(err(1, "expected a liealg file, found bolalg")),
    }
}

fn coords(v: &Vector) -> String {
    v.0.iter()
        .map(Scalar::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn write_bol_file(b: &BolAlgebra) -> String {
    let n = b.dim();
    let mut out = String::new();
    writeln!(out, "bolalg 1").unwrap();
    writeln!(out, "dim {n}").unwrap();
    writeln!(out, "field Q").unwrap();
    for i in 0..n {
        for j in 0..n {
            let v = b.binary_basis(i, j);
            if !v.is_zero() {
                writeln!(out, "bin {} {} = {}", i + 1, j + 1, coords(v)).unwrap();
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = b.ternary_basis(i, j, k);
                if !v.is_zero() {
                    writeln!(out, "ter {} {} {} = {}", i + 1, j + 1, k + 1, coords(v)).unwrap();
                }
            }
        }
    }
    out
}

pub fn write_lie_file(g: &LieAlgebra) -> String {
    let n = g.dim();
    let mut out = String::new();
    writeln!(out, "liealg 1").unwrap();
    writeln!(out, "dim {n}").unwrap();
    writeln!(out, "field Q").unwrap();
    for i in 0..n {
        for j in 0..n {
            let v = g.bracket_basis(i, j);
            if !v.is_zero() {
                writeln!(out, "bin {} {} = {}", i + 1, j + 1, coords(v)).unwrap();
            }
        }
    }
    out
}

/// The total Lie algebra as a liealg file, with one legend comment per
/// wedge coordinate naming the base pair it represents.
pub fn write_envelope_file(e: &EnvelopingAlgebra) -> String {
    let mut out = String::new();
    writeln!(out, "liealg 1").unwrap();
    for (k, &(i, j)) in e.wedge_pairs().iter().enumerate() {
        writeln!(out, "# w{} = e{}^e{}", k + 1, i + 1, j + 1).unwrap();
    }
    let body = write_lie_file(e.total());
    out.push_str(body.strip_prefix("liealg 1\n").unwrap());
    out
}

fn parse_matrix(line: usize, rhs: &str, m: usize) -> Result<Matrix> {
    let row_chunks: Vec<&str> = rhs.split(';').collect();
    if row_chunks.len() != m {
        return Err(err(
            line,
            format!("expected {m} matrix rows, found {}", row_chunks.len()),
        ));
    }
    let mut rows = Vec::with_capacity(m);
    for chunk in row_chunks {
        let tokens: Vec<&str> = chunk.split_whitespace().collect();
        rows.push(parse_coords(line, &tokens, m)?.0);
    }
    Matrix::from_rows(rows).map_err(|_| err(line, "ragged matrix rows"))
}

pub fn parse_module_file(text: &str) -> Result<BolModule> {
    let lines = significant_lines(text);
    let Some(&(header_line, header)) = lines.first() else {
        return Err(err(1, "missing header (expected `bolmod 1`)"));
    };
    match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["bolmod", "1"] => {}
        ["bolmod", version] => {
            return Err(err(header_line, format!("unsupported version `{version}`")))
        }
        _ => return Err(err(header_line, "missing header (expected `bolmod 1`)")),
    }

    let mut alg_dim: Option<usize> = None;
    let mut mod_dim: Option<usize> = None;
    let mut module: Option<BolModule> = None;
    let mut seen: BTreeSet<(String, usize, usize)> = BTreeSet::new();

    for &(line, content) in &lines[1..] {
        let (head, rhs) = match content.split_once('=') {
            Some((head, rhs)) => (head.trim(), Some(rhs.trim())),
            None => (content, None),
        };
        let tokens: Vec<&str> = head.split_whitespace().collect();
        let keyword = tokens[0];
        match keyword {
            "algdim" | "moddim" => {
                if rhs.is_some() || tokens.len() != 2 {
                    return Err(err(line, format!("expected `{keyword} <n>`")));
                }
                let slot = if keyword == "algdim" {
                    &mut alg_dim
                } else {
                    &mut mod_dim
                };
                if slot.is_some() {
                    return Err(err(line, format!("duplicate `{keyword}`")));
                }
                *slot = Some(
                    tokens[1]
                        .parse()
                        .map_err(|_| err(line, format!("bad dimension `{}`", tokens[1])))?,
                );
                if let (Some(n), Some(m)) = (alg_dim, mod_dim) {
                    module = Some(zero_module(n, m));
                }
            }
            "Lact" | "vbb" | "bvb" | "bbv" => {
                let target = module
                    .as_mut()
                    .ok_or_else(|| err(line, "`algdim` and `moddim` must come before entries"))?;
                let n = alg_dim.unwrap();
                let m = mod_dim.unwrap();
                let want = if keyword == "Lact" { 2 } else { 3 };
                if tokens.len() != want {
                    return Err(err(line, format!("expected `{keyword}` with {} index(es)", want - 1)));
                }
                let rhs = rhs.ok_or_else(|| err(line, "expected `=`"))?;
                let i = parse_index(line, tokens[1], n, "algebra")?;
                let j = if keyword == "Lact" {
                    0
                } else {
                    parse_index(line, tokens[2], n, "algebra")?
                };
                if !seen.insert((keyword.to_string(), i, j)) {
                    return Err(err(line, format!("duplicate entry {keyword}")));
                }
                let matrix = parse_matrix(line, rhs, m)?;
                match keyword {
                    "Lact" => target.set_bin(i, matrix),
                    "vbb" => target.set_vbb(i, j, matrix),
                    "bvb" => target.set_bvb(i, j, matrix),
                    _ => target.set_bbv(i, j, matrix),
                }
            }
            other => return Err(err(line, format!("unknown keyword `{other}`"))),
        }
    }

    module.ok_or_else(|| {
        err(
            lines.last().map(|&(l, _)| l).unwrap_or(header_line),
            "missing `algdim`/`moddim`",
        )
    })
}

fn matrix_text(m: &Matrix) -> String {
    (0..m.rows())
        .map(|r| coords(&m.row(r)))
        .collect::<Vec<_>>()
        .join(" ; ")
}

pub fn write_module_file(v: &BolModule) -> String {
    let n = v.alg_dim();
    let mut out = String::new();
    writeln!(out, "bolmod 1").unwrap();
    writeln!(out, "algdim {n}").unwrap();
    writeln!(out, "moddim {}", v.mod_dim()).unwrap();
    for i in 0..n {
        if !v.bin(i).is_zero() {
            writeln!(out, "Lact {} = {}", i + 1, matrix_text(v.bin(i))).unwrap();
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !v.vbb(i, j).is_zero() {
                writeln!(out, "vbb {} {} = {}", i + 1, j + 1, matrix_text(v.vbb(i, j))).unwrap();
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !v.bvb(i, j).is_zero() {
                writeln!(out, "bvb {} {} = {}", i + 1, j + 1, matrix_text(v.bvb(i, j))).unwrap();
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !v.bbv(i, j).is_zero() {
                writeln!(out, "bbv {} {} = {}", i + 1, j + 1, matrix_text(v.bbv(i, j))).unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::envelope::{build_envelope, EnvelopeScheme};
    use crate::rep::regular_module;

    #[test]
    fn header_and_dim_with_no_entries_is_the_zero_algebra() {
        let b = parse_bol_file("bolalg 1\ndim 2\nfield Q\n").unwrap();
        assert_eq!(b, catalog::zero_algebra(2));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "\n# leading note\nbolalg 1  # trailing\n\n  dim 2\nfield Q # rationals\n";
        assert!(parse_bol_file(text).is_ok());
    }

    #[test]
    fn a_single_ternary_entry_sets_exactly_one_slot() {
        let text = "bolalg 1\ndim 2\nfield Q\nter 1 1 2 = -2 0\n";
        let b = parse_bol_file(text).unwrap();
        assert_eq!(b.ternary_basis(0, 0, 1), &Vector::from_ints(&[-2, 0]));
        assert!(b.ternary_basis(0, 1, 0).is_zero());
    }

    #[test]
    fn out_of_range_indices_report_the_line() {
        let text = "bolalg 1\ndim 2\nfield Q\nbin 1 3 = 1 0\n";
        match parse_bol_file(text) {
            Err(Error::FileFormat { line, msg }) => {
                assert_eq!(line, 4);
                assert!(msg.contains("out of range"), "{msg}");
            }
            other => panic!("expected a format error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_entries_are_rejected() {
        let text = "bolalg 1\ndim 2\nbin 1 2 = 1 0\nbin 1 2 = 0 1\n";
        match parse_bol_file(text) {
            Err(Error::FileFormat { line, msg }) => {
                assert_eq!(line, 4);
                assert!(msg.contains("duplicate"), "{msg}");
            }
            other => panic!("expected a format error, got {other:?}"),
        }
    }

    #[test]
    fn liealg_files_reject_ternary_entries() {
        let text = "liealg 1\ndim 2\nter 1 1 2 = 1 0\n";
        match parse_algebra_file(text) {
            Err(Error::FileFormat { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected a format error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_lines_report_position_and_cause() {
        for (text, line, needle) in [
            ("", 1, "missing header"),
            ("bolalg 2\n", 1, "unsupported version"),
            ("bolalg 1\nbin 1 1 = 1\n", 2, "before entries"),
            ("bolalg 1\ndim 2\nbin 1 2 = 1\n", 3, "expected 2 coordinates"),
            ("bolalg 1\ndim 2\nbin 1 2 = x y\n", 3, "bad rational `x`"),
            ("bolalg 1\ndim 2\nbin 1 2 1 0\n", 3, "expected `=`"),
            ("bolalg 1\ndim 2\nspin 1 2 = 1 0\n", 3, "unknown keyword"),
            ("bolalg 1\ndim 2\ndim 2\n", 3, "duplicate `dim`"),
            ("bolalg 1\ndim 2\nfield R\n", 3, "unsupported field"),
            ("bolalg 1\nfield Q\n", 2, "missing `dim`"),
        ] {
            match parse_algebra_file(text) {
                Err(Error::FileFormat { line: at, msg }) => {
                    assert_eq!(at, line, "line for {text:?}");
                    assert!(msg.contains(needle), "`{msg}` for {text:?}");
                }
                other => panic!("expected a format error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn algebra_files_round_trip_the_catalog() {
        for e in catalog::entries() {
            let text = write_bol_file(&e.algebra);
            assert_eq!(parse_bol_file(&text).unwrap(), e.algebra, "{}", e.name);
        }
        for g in [catalog::sl2_lie(), catalog::heisenberg3_lie()] {
            let text = write_lie_file(&g);
            assert_eq!(parse_lie_file(&text).unwrap(), g);
        }
    }

    #[test]
    fn rationals_survive_the_round_trip() {
        let mut b = BolAlgebra::zero(2);
        let half = parse_scalar("1/2").unwrap();
        let mut v = Vector::zero(2);
        v.0[0] = half;
        v.0[1] = parse_scalar("-7/3").unwrap();
        b.set_binary(0, 1, v);
        let text = write_bol_file(&b);
        assert!(text.contains("bin 1 2 = 1/2 -7/3"));
        assert_eq!(parse_bol_file(&text).unwrap(), b);
    }

    #[test]
    fn envelope_files_carry_the_wedge_legend() {
        let env = build_envelope(&catalog::sl2_pair_bol(), EnvelopeScheme::LtsStandard);
        let text = write_envelope_file(&env);
        assert!(text.contains("# w1 = e1^e2"));
        let g = parse_lie_file(&text).unwrap();
        assert_eq!(&g, env.total());
        assert_eq!(g.bracket_basis(0, 1), &Vector::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn module_files_round_trip_the_regular_module() {
        let v = regular_module(&catalog::sl2_pair_bol());
        let text = write_module_file(&v);
        assert_eq!(parse_module_file(&text).unwrap(), v);
    }

    #[test]
    fn module_entries_parse_rows_and_report_errors() {
        let text = "bolmod 1\nalgdim 1\nmoddim 2\nLact 1 = 0 1 ; 1 0\n";
        let v = parse_module_file(text).unwrap();
        assert_eq!(v.bin(0), &Matrix::from_ints(&[&[0, 1], &[1, 0]]));

        for (text, line, needle) in [
            ("bolmod 1\nmoddim 2\nLact 1 = 0\n", 3, "before entries"),
            (
                "bolmod 1\nalgdim 1\nmoddim 2\nLact 1 = 0 1\n",
                4,
                "expected 2 matrix rows",
            ),
            (
                "bolmod 1\nalgdim 1\nmoddim 2\nLact 1 = 0 1 ; 1\n",
                4,
                "expected 2 coordinates",
            ),
            (
                "bolmod 1\nalgdim 1\nmoddim 2\nvbb 1 2 = 0 0 ; 0 0\n",
                4,
                "out of range",
            ),
            (
                "bolmod 1\nalgdim 1\nmoddim 2\nLact 1 = 0 0 ; 0 0\nLact 1 = 0 0 ; 0 0\n",
                5,
                "duplicate",
            ),
            ("liealg 1\n", 1, "expected `bolmod 1`"),
        ] {
            match parse_module_file(text) {
                Err(Error::FileFormat { line: at, msg }) => {
                    assert_eq!(at, line, "line for {text:?}");
                    assert!(msg.contains(needle), "`{msg}` for {text:?}");
                }
                other => panic!("expected a format error for {text:?}, got {other:?}"),
            }
        }
    }
}
