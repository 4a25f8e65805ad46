use std::fmt;

use super::lexer::Pos;
use crate::poly::MonomialOrder;

/// Polynomial expression as written in a script.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(u64),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Name(String),
    Ideal(Vec<Expr>),
    Int(u64),
    List(Vec<Expr>),
    Poly(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamField {
    pub key: String,
    pub value: ParamValue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    Ring { name: String, p: u64, vars: Vec<String>, order: MonomialOrder },
    Quotient { name: String, ring: String, relations: Vec<Expr> },
    Ideal { name: String, gens: Vec<Expr> },
    Module { name: String, rows: Vec<Vec<Expr>> },
    Params { name: String, fields: Vec<ParamField> },
}

impl StmtKind {
    pub fn name(&self) -> &str {
        match self {
            StmtKind::Ring { name, .. }
            | StmtKind::Quotient { name, .. }
            | StmtKind::Ideal { name, .. }
            | StmtKind::Module { name, .. }
            | StmtKind::Params { name, .. } => name,
        }
    }
}

/// A declaration with its source position. Positions do not take part in
/// equality, so a pretty-printed and re-parsed script compares equal.
#[derive(Clone, Debug)]
pub struct Stmt {
    pub pos: Pos,
    pub kind: StmtKind,
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Stmt {}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SessionScript {
    pub stmts: Vec<Stmt>,
}

// precedence levels: 0 = sum, 1 = product, 2 = unary, 3 = atom
fn write_expr(e: &Expr, level: u8, out: &mut String) {
    let prec = match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Mul(..) => 1,
        Expr::Neg(..) => 2,
        Expr::Pow(..) | Expr::Num(_) | Expr::Var(_) => 3,
    };
    let paren = prec < level;
    if paren {
        out.push('(');
    }
    match e {
        Expr::Num(n) => out.push_str(&n.to_string()),
        Expr::Var(v) => out.push_str(v),
        Expr::Neg(a) => {
            out.push('-');
            write_expr(a, 2, out);
        }
        Expr::Add(a, b) => {
            write_expr(a, 0, out);
            out.push_str(" + ");
            write_expr(b, 1, out);
        }
        Expr::Sub(a, b) => {
            write_expr(a, 0, out);
            out.push_str(" - ");
            write_expr(b, 1, out);
        }
        Expr::Mul(a, b) => {
            write_expr(a, 1, out);
            out.push('*');
            write_expr(b, 2, out);
        }
        Expr::Pow(a, n) => {
            write_expr(a, 4, out);
            out.push('^');
            out.push_str(&n.to_string());
        }
    }
    if paren {
        out.push(')');
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_expr(self, 0, &mut s);
        f.write_str(&s)
    }
}

fn join(exprs: &[Expr]) -> String {
    exprs.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for StmtKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StmtKind::Ring { name, p, vars, order } => {
                write!(f, "ring {name} = GF({p})[{}] order={}", vars.join(","), order.name())
            }
            StmtKind::Quotient { name, ring, relations } => write!(f, "quotient {name} = {ring} / ({})", join(relations)),
            StmtKind::Ideal { name, gens } => write!(f, "ideal {name} = ({})", join(gens)),
            StmtKind::Module { name, rows } => {
                let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", join(r))).collect();
                write!(f, "module {name} = coker [{}]", rows.join("; "))
            }
            StmtKind::Params { name, fields } => {
                let parts: Vec<String> = fields
                    .iter()
                    .map(|fld| {
                        let v = match &fld.value {
                            ParamValue::Name(n) => n.clone(),
                            ParamValue::Ideal(g) => format!("({})", join(g)),
                            ParamValue::Int(n) => n.to_string(),
                            ParamValue::List(g) => format!("[{}]", join(g)),
                            ParamValue::Poly(e) => e.to_string(),
                        };
                        format!("{}={}", fld.key, v)
                    })
                    .collect();
                write!(f, "params {name} = {{ {} }}", parts.join(", "))
            }
        }
    }
}

impl fmt::Display for SessionScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{} ;", s.kind)?;
        }
        Ok(())
    }
}
