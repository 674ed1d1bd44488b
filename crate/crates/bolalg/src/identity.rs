//! Operator identities as data: a small expression language over the
//! representation maps L, R, r, c, m, the duality transform that rewrites
//! a left identity into its right counterpart, and an exact instance
//! checker that evaluates both sides as matrices over a module.
//!
//! Grammar (whitespace insensitive, `#`-free, ASCII):
//!
//! ```text
//! identity := decl* expr "=" expr
//! decl     := "sym" NAME ("," NAME)* ";"
//! expr     := term (("+"|"-") term)* | "0"
//! term     := [RATIONAL "*"] chain
//! chain    := atom ("." atom)*
//! atom     := "L(" NAME ")" | "R(" NAME ")" | "r(" NAME "," NAME ")"
//!           | "c(" NAME "," NAME ")" | "m(" NAME "," NAME ")" | "id"
//! ```
//!
//! Declarations are optional; when at least one is present, symbol use is
//! checked against the declared list. Composite arguments (a ternary or
//! binary product fed back into an atom) cannot be written in the surface
//! grammar; they exist only in the programmatic built-ins p4 and p5 and in
//! printed output, where they display as `(x;y,z)` and `(x*y)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::BolAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::rep::{matrix_witness, require_matching, BolModule};
use crate::report::{CheckEntry, CheckReport, Witness};
use crate::scalar::{one, parse_scalar, Scalar};

/// Atom argument: a free symbol, or a composite resolved through the
/// algebra the identity is checked over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arg {
    Sym(String),
    Ternary(Box<Arg>, Box<Arg>, Box<Arg>),
    Product(Box<Arg>, Box<Arg>),
}

pub fn sym(name: &str) -> Arg {
    Arg::Sym(name.to_string())
}

/// One operator in a composition chain. `BigL`/`BigR` are the binary
/// translations L_τ and R_τ; the small letters are the three partial
/// applications of the ternary action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    BigL(Arg),
    BigR(Arg),
    SmallM(Arg, Arg),
    SmallC(Arg, Arg),
    SmallR(Arg, Arg),
    Id,
}

/// coeff × (chain of atoms composed right-to-left).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub chain: Vec<Atom>,
}

/// Two formal operator sums claimed equal. An empty side is the zero
/// operator (the literal `0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityAst {
    pub symbols: Vec<String>,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

impl IdentityAst {
    /// Free symbols in order of first appearance; this is the binding
    /// order used by exhaustive enumeration and witness tuples.
    pub fn free_symbols(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        let walk_arg = |arg: &Arg, out: &mut Vec<String>| {
            fn rec(arg: &Arg, out: &mut Vec<String>) {
                match arg {
                    Arg::Sym(s) => {
                        if !out.contains(s) {
                            out.push(s.clone());
                        }
                    }
                    Arg::Ternary(x, y, z) => {
                        rec(x, out);
                        rec(y, out);
                        rec(z, out);
                    }
                    Arg::Product(x, y) => {
                        rec(x, out);
                        rec(y, out);
                    }
                }
            }
            rec(arg, out);
        };
        for term in self.lhs.iter().chain(self.rhs.iter()) {
            for atom in &term.chain {
                match atom {
                    Atom::BigL(a) | Atom::BigR(a) => walk_arg(a, &mut out),
                    Atom::SmallM(a, b) | Atom::SmallC(a, b) | Atom::SmallR(a, b) => {
                        walk_arg(a, &mut out);
                        walk_arg(b, &mut out);
                    }
                    Atom::Id => {}
                }
            }
        }
        out
    }
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    /// 1-based position for error reporting.
    fn at(&self) -> usize {
        self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::IdentitySyntax {
                pos: self.at(),
                msg: format!("expected `{c}`"),
            })
        }
    }

    /// Maximal ASCII identifier, or None without consuming.
    fn ident(&mut self) -> Option<(String, usize)> {
        self.skip_ws();
        let start = self.at();
        let mut name = String::new();
        while let Some(c) = self.peek() {
            let ok = if name.is_empty() {
                c.is_ascii_alphabetic() || c == '_'
            } else {
                c.is_ascii_alphanumeric() || c == '_'
            };
            if !ok {
                break;
            }
            name.push(c);
            self.pos += 1;
        }
        if name.is_empty() {
            None
        } else {
            Some((name, start))
        }
    }

    /// Contiguous rational literal token: optional sign, digits, optional
    /// `/digits`. The caller has already decided a rational starts here.
    fn rational(&mut self) -> Result<Scalar> {
        self.skip_ws();
        let start = self.at();
        let mut text = String::new();
        if matches!(self.peek(), Some('+') | Some('-')) {
            text.push(self.bump().unwrap());
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            text.push(self.bump().unwrap());
        }
        if self.peek() == Some('/') {
            text.push(self.bump().unwrap());
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                text.push(self.bump().unwrap());
            }
        }
        parse_scalar(&text).map_err(|e| Error::IdentitySyntax {
            pos: start,
            msg: format!("bad rational literal: {e}"),
        })
    }
}

fn symbol_arg(cur: &mut Cursor, declared: &[String]) -> Result<Arg> {
    match cur.ident() {
        Some((name, pos)) => {
            if !declared.is_empty() && !declared.iter().any(|d| d == &name) {
                return Err(Error::UndeclaredSymbol { name, pos });
            }
            Ok(Arg::Sym(name))
        }
        None => Err(Error::IdentitySyntax {
            pos: cur.at(),
            msg: "expected a symbol name".to_string(),
        }),
    }
}

fn parse_atom(cur: &mut Cursor, declared: &[String]) -> Result<Atom> {
    cur.skip_ws();
    let fallback = cur.at();
    let Some((head, pos)) = cur.ident() else {
        return Err(Error::IdentitySyntax {
            pos: fallback,
            msg: "expected an atom: L, R, r, c, m or id".to_string(),
        });
    };
    match head.as_str() {
        "id" => Ok(Atom::Id),
        "L" | "R" => {
            cur.expect('(')?;
            let arg = symbol_arg(cur, declared)?;
            cur.expect(')')?;
            Ok(if head == "L" {
                Atom::BigL(arg)
            } else {
                Atom::BigR(arg)
            })
        }
        "r" | "c" | "m" => {
            cur.expect('(')?;
            let first = symbol_arg(cur, declared)?;
            cur.expect(',')?;
            let second = symbol_arg(cur, declared)?;
            cur.expect(')')?;
            Ok(match head.as_str() {
                "r" => Atom::SmallR(first, second),
                "c" => Atom::SmallC(first, second),
                _ => Atom::SmallM(first, second),
            })
        }
        _ => Err(Error::IdentitySyntax {
            pos,
            msg: format!("expected an atom: L, R, r, c, m or id, got `{head}`"),
        }),
    }
}

fn parse_chain(cur: &mut Cursor, declared: &[String]) -> Result<Vec<Atom>> {
    let mut chain = vec![parse_atom(cur, declared)?];
    loop {
        cur.skip_ws();
        if cur.peek() == Some('.') {
            cur.bump();
            chain.push(parse_atom(cur, declared)?);
        } else {
            return Ok(chain);
        }
    }
}

fn parse_term(cur: &mut Cursor, declared: &[String], sign: Scalar) -> Result<Term> {
    cur.skip_ws();
    let coeff = if matches!(cur.peek(), Some(c) if c.is_ascii_digit() || c == '+' || c == '-') {
        let value = cur.rational()?;
        cur.expect('*')?;
        value
    } else {
        one()
    };
    let chain = parse_chain(cur, declared)?;
    Ok(Term {
        coeff: sign * coeff,
        chain,
    })
}

fn parse_expr(cur: &mut Cursor, declared: &[String]) -> Result<Vec<Term>> {
    cur.skip_ws();
    // The literal `0` is an expression on its own, but a rational is also
    // how a coefficient starts; only a lone `0` not followed by `*` is the
    // zero expression.
    if cur.peek() == Some('0') {
        let checkpoint = cur.pos;
        let value = cur.rational()?;
        let token_end = cur.pos;
        cur.skip_ws();
        if cur.peek() == Some('*') {
            cur.pos = checkpoint;
        } else if num_traits::Zero::is_zero(&value) && token_end == checkpoint + 1 {
            return Ok(Vec::new());
        } else {
            return Err(Error::IdentitySyntax {
                pos: cur.at(),
                msg: "expected `*`".to_string(),
            });
        }
    }
    let mut terms = vec![parse_term(cur, declared, one())?];
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some('+') => {
                cur.bump();
                terms.push(parse_term(cur, declared, one())?);
            }
            Some('-') => {
                cur.bump();
                terms.push(parse_term(cur, declared, -one())?);
            }
            _ => return Ok(terms),
        }
    }
}

/// Parses the identity grammar. Error positions are 1-based character
/// offsets into the input.
pub fn parse_identity(text: &str) -> Result<IdentityAst> {
    let mut cur = Cursor::new(text);
    let mut symbols: Vec<String> = Vec::new();
    loop {
        cur.skip_ws();
        let checkpoint = cur.pos;
        match cur.ident() {
            Some((word, _)) if word == "sym" => loop {
                match cur.ident() {
                    Some((name, _)) => {
                        if !symbols.contains(&name) {
                            symbols.push(name);
                        }
                    }
                    None => {
                        return Err(Error::IdentitySyntax {
                            pos: cur.at(),
                            msg: "expected a symbol name".to_string(),
                        })
                    }
                }
                cur.skip_ws();
                match cur.peek() {
                    Some(',') => {
                        cur.bump();
                    }
                    Some(';') => {
                        cur.bump();
                        break;
                    }
                    _ => {
                        return Err(Error::IdentitySyntax {
                            pos: cur.at(),
                            msg: "expected `,` or `;`".to_string(),
                        })
                    }
                }
            },
            _ => {
                cur.pos = checkpoint;
                break;
            }
        }
    }
    let lhs = parse_expr(&mut cur, &symbols)?;
    cur.expect('=')?;
    let rhs = parse_expr(&mut cur, &symbols)?;
    cur.skip_ws();
    if cur.peek().is_some() {
        return Err(Error::IdentitySyntax {
            pos: cur.at(),
            msg: "expected end of input".to_string(),
        });
    }
    Ok(IdentityAst { symbols, lhs, rhs })
}

fn dualize_arg(arg: &Arg) -> Arg {
    match arg {
        Arg::Sym(s) => Arg::Sym(s.clone()),
        // A ternary argument passes through slot-for-slot; the transform
        // acts on operator factors, not inside D-operator arguments.
        Arg::Ternary(x, y, z) => Arg::Ternary(
            Box::new(dualize_arg(x)),
            Box::new(dualize_arg(y)),
            Box::new(dualize_arg(z)),
        ),
        // The binary product is skew, so the opposite algebra's product of
        // (x,y) is the original product of (y,x): swapping keeps the
        // resolved vector fixed across the dual pairing.
        Arg::Product(x, y) => Arg::Product(Box::new(dualize_arg(y)), Box::new(dualize_arg(x))),
    }
}

fn dualize_atom(atom: &Atom) -> Atom {
    match atom {
        Atom::BigL(a) => Atom::BigR(dualize_arg(a)),
        Atom::BigR(a) => Atom::BigL(dualize_arg(a)),
        Atom::SmallM(a, b) => Atom::SmallM(dualize_arg(b), dualize_arg(a)),
        Atom::SmallC(a, b) => Atom::SmallC(dualize_arg(b), dualize_arg(a)),
        Atom::SmallR(a, b) => Atom::SmallR(dualize_arg(b), dualize_arg(a)),
        Atom::Id => Atom::Id,
    }
}

/// The duality transform: L ↔ R, every pair argument flipped, every
/// composition chain reversed. Coefficients, term counts and chain
/// lengths are untouched, and applying the transform twice is the
/// identity.
pub fn dualize_identity(ast: &IdentityAst) -> IdentityAst {
    let side = |terms: &[Term]| {
        terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                chain: t.chain.iter().rev().map(dualize_atom).collect(),
            })
            .collect()
    };
    IdentityAst {
        symbols: ast.symbols.clone(),
        lhs: side(&ast.lhs),
        rhs: side(&ast.rhs),
    }
}

pub fn built_in_names() -> &'static [&'static str] {
    &["p1", "p2", "p3", "p4", "p5"]
}

/// The operator-property battery as identity ASTs. p2 is the printed,
/// generally failing form; p4 and p5 need composite arguments and are
/// built programmatically. Verdicts agree with `check_p_properties`
/// entry for entry.
pub fn built_in(name: &str) -> Option<IdentityAst> {
    let t1 = |coeff: Scalar, chain: Vec<Atom>| Term { coeff, chain };
    match name {
        "p1" => Some(parse_identity("sym t; L(t) + R(t) = 0").unwrap()),
        "p2" => Some(parse_identity("sym a, b; m(a,b) + r(a,b) = 0").unwrap()),
        "p3" => Some(parse_identity("sym a, b; m(a,b) + c(b,a) + r(a,b) = 0").unwrap()),
        "p4" => {
            let (a, b, g, t) = (sym("a"), sym("b"), sym("g"), sym("t"));
            let tern = Arg::Ternary(Box::new(a.clone()), Box::new(b.clone()), Box::new(g.clone()));
            Some(IdentityAst {
                symbols: vec!["a".into(), "b".into(), "g".into(), "t".into()],
                lhs: vec![t1(one(), vec![Atom::SmallC(tern, t.clone())])],
                rhs: vec![
                    t1(
                        one(),
                        vec![
                            Atom::SmallM(a.clone(), b.clone()),
                            Atom::SmallC(g.clone(), t.clone()),
                        ],
                    ),
                    t1(
                        one(),
                        vec![
                            Atom::SmallC(a.clone(), g.clone()),
                            Atom::SmallC(b.clone(), t.clone()),
                        ],
                    ),
                    t1(one(), vec![Atom::SmallR(b, g), Atom::SmallC(a, t)]),
                ],
            })
        }
        "p5" => {
            let (a, b, t) = (sym("a"), sym("b"), sym("t"));
            let tern = Arg::Ternary(Box::new(t.clone()), Box::new(a.clone()), Box::new(b.clone()));
            let prod = Arg::Product(Box::new(a.clone()), Box::new(b.clone()));
            Some(IdentityAst {
                symbols: vec!["a".into(), "b".into(), "t".into()],
                lhs: vec![t1(
                    one(),
                    vec![Atom::SmallR(a.clone(), b.clone()), Atom::BigL(t.clone())],
                )],
                rhs: vec![
                    t1(one(), vec![Atom::BigL(tern)]),
                    t1(one(), vec![Atom::BigL(t.clone()), Atom::SmallR(a, b)]),
                    t1(one(), vec![Atom::SmallM(prod.clone(), t.clone())]),
                    t1(one(), vec![Atom::BigR(prod), Atom::BigL(t)]),
                ],
            })
        }
        _ => None,
    }
}

/// How symbols are bound during a check: a caller-supplied environment,
/// or exhaustive enumeration of all basis assignments. Exhaustive mode is
/// complete for the given module because every atom is multilinear in its
/// symbols.
pub enum Binding {
    Env(BTreeMap<String, Vector>),
    Exhaustive,
}

fn resolve_arg(b: &BolAlgebra, env: &BTreeMap<String, Vector>, arg: &Arg) -> Result<Vector> {
    match arg {
        Arg::Sym(s) => env
            .get(s)
            .cloned()
            .ok_or_else(|| Error::UnboundSymbol(s.clone())),
        Arg::Ternary(x, y, z) => {
            let (x, y, z) = (
                resolve_arg(b, env, x)?,
                resolve_arg(b, env, y)?,
                resolve_arg(b, env, z)?,
            );
            Ok(b.ternary(&x, &y, &z))
        }
        Arg::Product(x, y) => {
            let (x, y) = (resolve_arg(b, env, x)?, resolve_arg(b, env, y)?);
            Ok(b.binary(&x, &y))
        }
    }
}

fn atom_matrix(
    b: &BolAlgebra,
    v: &BolModule,
    env: &BTreeMap<String, Vector>,
    atom: &Atom,
) -> Result<Matrix> {
    Ok(match atom {
        Atom::BigL(a) => v.l_map(&resolve_arg(b, env, a)?),
        Atom::BigR(a) => v.r_cap_map(&resolve_arg(b, env, a)?),
        Atom::SmallM(a, bb) => v.m_map(&resolve_arg(b, env, a)?, &resolve_arg(b, env, bb)?),
        Atom::SmallC(a, bb) => v.c_map(&resolve_arg(b, env, a)?, &resolve_arg(b, env, bb)?),
        Atom::SmallR(a, bb) => v.r_map(&resolve_arg(b, env, a)?, &resolve_arg(b, env, bb)?),
        Atom::Id => Matrix::identity(v.mod_dim()),
    })
}

/// A chain `a . b` applied to v is a(b(v)), so the matrix is the ordinary
/// left-to-right product.
fn side_matrix(
    b: &BolAlgebra,
    v: &BolModule,
    env: &BTreeMap<String, Vector>,
    side: &[Term],
) -> Result<Matrix> {
    let m = v.mod_dim();
    let mut acc = Matrix::zeros(m, m);
    for term in side {
        let mut prod = Matrix::identity(m);
        for atom in &term.chain {
            prod = &prod * &atom_matrix(b, v, env, atom)?;
        }
        acc = &acc + &prod.scale(&term.coeff);
    }
    Ok(acc)
}

fn residual(
    b: &BolAlgebra,
    v: &BolModule,
    env: &BTreeMap<String, Vector>,
    ast: &IdentityAst,
) -> Result<Matrix> {
    Ok(&side_matrix(b, v, env, &ast.lhs)? - &side_matrix(b, v, env, &ast.rhs)?)
}

/// Evaluates both sides over the module and compares exactly. The single
/// report entry is named `identity`; a failing witness carries the basis
/// assignment (exhaustive mode) or the acting column (environment mode),
/// with the binding spelled out in the note.
pub fn check_identity(
    b: &BolAlgebra,
    v: &BolModule,
    ast: &IdentityAst,
    binding: &Binding,
) -> Result<CheckReport> {
    require_matching(b, v)?;
    let free = ast.free_symbols();
    let mut report = CheckReport::new();
    let mut entry = CheckEntry::pass("identity");
    match binding {
        Binding::Env(env) => {
            for s in &free {
                let bound = env
                    .get(s)
                    .ok_or_else(|| Error::UnboundSymbol(s.clone()))?;
                if bound.0.len() != b.dim() {
                    return Err(Error::Dimension(format!(
                        "binding for `{s}` has dim {}, algebra has dim {}",
                        bound.0.len(),
                        b.dim()
                    )));
                }
            }
            let res = residual(b, v, env, ast)?;
            if let Some(w) = matrix_witness(&[], &res) {
                let described: Vec<String> =
                    free.iter().map(|s| format!("{s}={}", env[s])).collect();
                entry = CheckEntry::fail(
                    "identity",
                    Witness::with_note(w.tuple, w.residual, described.join(", ")),
                );
            }
        }
        Binding::Exhaustive => {
            let n = b.dim();
            let k = free.len();
            let total: usize = n.checked_pow(k as u32).unwrap_or(0);
            'assignments: for counter in 0..total {
                let mut rest = counter;
                let mut assignment = vec![0usize; k];
                for slot in (0..k).rev() {
                    assignment[slot] = rest % n;
                    rest /= n;
                }
                let env: BTreeMap<String, Vector> = free
                    .iter()
                    .zip(&assignment)
                    .map(|(s, &i)| (s.clone(), Vector::std(n, i)))
                    .collect();
                let res = residual(b, v, &env, ast)?;
                if let Some(w) = matrix_witness(&assignment, &res) {
                    let described: Vec<String> = free
                        .iter()
                        .zip(&assignment)
                        .map(|(s, i)| format!("{s}=e{}", i + 1))
                        .collect();
                    entry = CheckEntry::fail(
                        "identity",
                        Witness::with_note(w.tuple, w.residual, described.join(", ")),
                    );
                    break 'assignments;
                }
            }
        }
    }
    report.push(entry);
    Ok(report)
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Sym(s) => write!(f, "{s}"),
            Arg::Ternary(x, y, z) => write!(f, "({x};{y},{z})"),
            Arg::Product(x, y) => write!(f, "({x}*{y})"),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::BigL(a) => write!(f, "L({a})"),
            Atom::BigR(a) => write!(f, "R({a})"),
            Atom::SmallM(a, b) => write!(f, "m({a},{b})"),
            Atom::SmallC(a, b) => write!(f, "c({a},{b})"),
            Atom::SmallR(a, b) => write!(f, "r({a},{b})"),
            Atom::Id => write!(f, "id"),
        }
    }
}

fn write_side(f: &mut fmt::Formatter<'_>, side: &[Term]) -> fmt::Result {
    if side.is_empty() {
        return write!(f, "0");
    }
    for (k, term) in side.iter().enumerate() {
        let chain: Vec<String> = term.chain.iter().map(|a| a.to_string()).collect();
        let chain = chain.join(" . ");
        let coeff = &term.coeff;
        let abs = if num_traits::Signed::is_negative(coeff) {
            -coeff
        } else {
            coeff.clone()
        };
        if k == 0 {
            if coeff == &one() {
                write!(f, "{chain}")?;
            } else {
                write!(f, "{} * {chain}", crate::scalar::format_scalar(coeff))?;
            }
        } else {
            let op = if num_traits::Signed::is_negative(coeff) {
                " - "
            } else {
                " + "
            };
            if abs == one() {
                write!(f, "{op}{chain}")?;
            } else {
                write!(f, "{op}{} * {chain}", crate::scalar::format_scalar(&abs))?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for IdentityAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.symbols.is_empty() {
            write!(f, "sym {}; ", self.symbols.join(", "))?;
        }
        write_side(f, &self.lhs)?;
        write!(f, " = ")?;
        write_side(f, &self.rhs)
    }
}
