//! The `.ck` script language: tokens, syntax tree, parser and the
//! name/characteristic checks that run right after parsing.

mod ast;
mod lexer;
mod parser;

use std::collections::HashMap;
use std::fmt;

pub use ast::{Expr, ParamField, ParamValue, SessionScript, Stmt, StmtKind};
pub use lexer::Pos;

use crate::poly::{Polynomial, PolynomialRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ParseErrorKind {
    Syntax,
    UndeclaredIdentifier,
    Redeclared,
    CharacteristicMismatch,
    InvalidRing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, pos: Pos, message: String) -> Self {
        ParseError { kind, pos, message }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::UndeclaredIdentifier => "undeclared identifier",
            ParseErrorKind::Redeclared => "redeclared name",
            ParseErrorKind::CharacteristicMismatch => "characteristic mismatch",
            ParseErrorKind::InvalidRing => "invalid ring",
        };
        write!(f, "{kind} at {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parses a script and checks that every name and variable it uses is
/// declared earlier.
pub fn parse_script(text: &str) -> Result<SessionScript, ParseError> {
    let script = parser::Parser::new(text)?.script()?;
    check_scopes(&script)?;
    Ok(script)
}

/// Parses a single polynomial in the variables of `ring`.
pub fn parse_polynomial(ring: &PolynomialRing, text: &str) -> Result<Polynomial, ParseError> {
    let mut p = parser::Parser::new(text)?;
    let e = p.expr()?;
    if !p.at_end() {
        return Err(ParseError::new(ParseErrorKind::Syntax, Pos::default(), "trailing input after polynomial".into()));
    }
    eval_expr(ring, &e, Pos::default())
}

/// Evaluates an expression in `ring`; unknown variables are reported at `pos`.
pub fn eval_expr(ring: &PolynomialRing, e: &Expr, pos: Pos) -> Result<Polynomial, ParseError> {
    Ok(match e {
        Expr::Num(n) => {
            let p = ring.characteristic() as u64;
            Polynomial::constant(ring, (n % p) as u32)
        }
        Expr::Var(v) => ring.var_named(v).map_err(|_| {
            ParseError::new(ParseErrorKind::UndeclaredIdentifier, pos, format!("`{v}` is not a variable of {ring}"))
        })?,
        Expr::Neg(a) => eval_expr(ring, a, pos)?.neg(),
        Expr::Add(a, b) => eval_expr(ring, a, pos)?.add(&eval_expr(ring, b, pos)?).expect("same ring"),
        Expr::Sub(a, b) => eval_expr(ring, a, pos)?.sub(&eval_expr(ring, b, pos)?).expect("same ring"),
        Expr::Mul(a, b) => eval_expr(ring, a, pos)?.mul(&eval_expr(ring, b, pos)?).expect("same ring"),
        Expr::Pow(a, n) => eval_expr(ring, a, pos)?.pow(*n),
    })
}

#[derive(Clone)]
enum Scope {
    Ring { p: u64, vars: Vec<String> },
    Ideal { p: u64 },
    Other,
}

fn expr_vars<'a>(e: &'a Expr, out: &mut Vec<&'a str>) {
    match e {
        Expr::Num(_) => {}
        Expr::Var(v) => out.push(v),
        Expr::Neg(a) | Expr::Pow(a, _) => expr_vars(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            expr_vars(a, out);
            expr_vars(b, out);
        }
    }
}

fn check_scopes(script: &SessionScript) -> Result<(), ParseError> {
    let mut names: HashMap<&str, Scope> = HashMap::new();
    let mut current: Option<(u64, Vec<String>)> = None;
    let undeclared =
        |pos: Pos, what: String| ParseError::new(ParseErrorKind::UndeclaredIdentifier, pos, what);
    for stmt in &script.stmts {
        let pos = stmt.pos;
        let check_polys = |exprs: &[&Expr], current: &Option<(u64, Vec<String>)>| -> Result<(), ParseError> {
            let Some((_, vars)) = current else {
                return Err(undeclared(pos, "no ring has been declared yet".into()));
            };
            for e in exprs {
                let mut vs = Vec::new();
                expr_vars(e, &mut vs);
                if let Some(v) = vs.iter().find(|v| !vars.iter().any(|w| w == *v)) {
                    return Err(undeclared(pos, format!("`{v}` is not a variable of the current ring")));
                }
            }
            Ok(())
        };
        match &stmt.kind {
            StmtKind::Ring { name, p, vars, order } => {
                let ring_ok = crate::poly::PrimeField::new(*p)
                    .and_then(|f| PolynomialRing::new(f, vars, *order));
                if let Err(e) = ring_ok {
                    return Err(ParseError::new(ParseErrorKind::InvalidRing, pos, e.to_string()));
                }
                names.insert(name, Scope::Ring { p: *p, vars: vars.clone() });
                current = Some((*p, vars.clone()));
            }
            StmtKind::Quotient { name, ring, relations } => {
                let Some(Scope::Ring { p, vars }) = names.get(ring.as_str()).cloned() else {
                    return Err(undeclared(pos, format!("`{ring}` is not a declared ring")));
                };
                current = Some((p, vars.clone()));
                check_polys(&relations.iter().collect::<Vec<_>>(), &current)?;
                names.insert(name, Scope::Ring { p, vars });
            }
            StmtKind::Ideal { name, gens } => {
                check_polys(&gens.iter().collect::<Vec<_>>(), &current)?;
                names.insert(name, Scope::Ideal { p: current.as_ref().map(|c| c.0).unwrap_or(0) });
            }
            StmtKind::Module { name, rows } => {
                check_polys(&rows.iter().flatten().collect::<Vec<_>>(), &current)?;
                names.insert(name, Scope::Other);
            }
            StmtKind::Params { name, fields } => {
                let mut exprs = Vec::new();
                for f in fields {
                    match &f.value {
                        ParamValue::Name(n) => match names.get(n.as_str()) {
                            Some(Scope::Ideal { p }) => {
                                let cur = current.as_ref().map(|c| c.0).unwrap_or(0);
                                if *p != cur {
                                    return Err(ParseError::new(
                                        ParseErrorKind::CharacteristicMismatch,
                                        pos,
                                        format!("ideal `{n}` lives in characteristic {p}, current ring has {cur}"),
                                    ));
                                }
                            }
                            _ => return Err(undeclared(pos, format!("`{n}` is not a declared ideal"))),
                        },
                        ParamValue::Ideal(g) | ParamValue::List(g) => exprs.extend(g.iter()),
                        ParamValue::Poly(e) => exprs.push(e),
                        ParamValue::Int(_) => {}
                    }
                }
                check_polys(&exprs, &current)?;
                names.insert(name, Scope::Other);
            }
        }
    }
    Ok(())
}
