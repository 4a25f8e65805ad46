use std::collections::HashSet;

use super::ast::*;
use super::lexer::{tokenize, Pos, Tok, Token};
use super::{ParseError, ParseErrorKind};
use crate::poly::MonomialOrder;

const PARAM_KEYS: &[&str] = &["J1", "m", "x", "a2", "a3", "u", "sat"];

pub(crate) struct Parser {
    toks: Vec<Token>,
    i: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    pub fn new(text: &str) -> PResult<Self> {
        let toks = tokenize(text).map_err(|(pos, msg)| ParseError::new(ParseErrorKind::Syntax, pos, msg))?;
        Ok(Parser { toks, i: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.i].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError::new(ParseErrorKind::Syntax, self.pos(), msg.into()))
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            let found = self.peek().clone();
            self.err(format!("expected `{c}`, found {found}"))
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            other => self.err(format!("expected identifier, found {other}")),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            other => {
                let other = other.clone();
                self.err(format!("expected `{kw}`, found {other}"))
            }
        }
    }

    fn int(&mut self) -> PResult<u64> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            other => self.err(format!("expected integer, found {other}")),
        }
    }

    pub fn script(&mut self) -> PResult<SessionScript> {
        let mut stmts = Vec::new();
        let mut names = HashSet::new();
        loop {
            while matches!(self.peek(), Tok::Newline | Tok::Sym(';')) {
                self.bump();
            }
            if *self.peek() == Tok::Eof {
                break;
            }
            let pos = self.pos();
            let kind = self.statement()?;
            if !names.insert(kind.name().to_string()) {
                return Err(ParseError::new(
                    ParseErrorKind::Redeclared,
                    pos,
                    format!("name `{}` is already declared", kind.name()),
                ));
            }
            stmts.push(Stmt { pos, kind });
            match self.peek() {
                Tok::Newline | Tok::Sym(';') | Tok::Eof => {}
                other => {
                    let other = other.clone();
                    return self.err(format!("expected end of statement, found {other}"));
                }
            }
        }
        Ok(SessionScript { stmts })
    }

    fn statement(&mut self) -> PResult<StmtKind> {
        let kw = self.ident()?;
        match kw.as_str() {
            "ring" => {
                let name = self.ident()?;
                self.expect_sym('=')?;
                self.keyword("GF")?;
                self.expect_sym('(')?;
                let p = self.int()?;
                self.expect_sym(')')?;
                self.expect_sym('[')?;
                let mut vars = vec![self.ident()?];
                while self.eat_sym(',') {
                    vars.push(self.ident()?);
                }
                self.expect_sym(']')?;
                let mut order = MonomialOrder::Grevlex;
                if matches!(self.peek(), Tok::Ident(s) if s == "order") {
                    self.bump();
                    self.expect_sym('=')?;
                    let o = self.ident()?;
                    order = match o.as_str() {
                        "grevlex" => MonomialOrder::Grevlex,
                        "lex" => MonomialOrder::Lex,
                        "elim" => {
                            self.expect_sym('(')?;
                            let k = self.int()? as usize;
                            self.expect_sym(')')?;
                            MonomialOrder::Elimination(k)
                        }
                        other => return self.err(format!("unknown order `{other}`")),
                    };
                }
                Ok(StmtKind::Ring { name, p, vars, order })
            }
            "quotient" => {
                let name = self.ident()?;
                self.expect_sym('=')?;
                let ring = self.ident()?;
                self.expect_sym('/')?;
                let relations = self.paren_list()?;
                Ok(StmtKind::Quotient { name, ring, relations })
            }
            "ideal" => {
                let name = self.ident()?;
                self.expect_sym('=')?;
                let gens = self.paren_list()?;
                Ok(StmtKind::Ideal { name, gens })
            }
            "module" => {
                let name = self.ident()?;
                self.expect_sym('=')?;
                self.keyword("coker")?;
                self.expect_sym('[')?;
                let mut rows = vec![self.bracket_list()?];
                while self.eat_sym(';') {
                    rows.push(self.bracket_list()?);
                }
                self.expect_sym(']')?;
                let width = rows[0].len();
                if rows.iter().any(|r| r.len() != width) {
                    return self.err("matrix rows have different lengths");
                }
                Ok(StmtKind::Module { name, rows })
            }
            "params" => {
                let name = self.ident()?;
                self.expect_sym('=')?;
                self.expect_sym('{')?;
                let mut fields = Vec::new();
                if !self.eat_sym('}') {
                    loop {
                        fields.push(self.param_field()?);
                        if self.eat_sym('}') {
                            break;
                        }
                        self.expect_sym(',')?;
                    }
                }
                Ok(StmtKind::Params { name, fields })
            }
            other => Err(ParseError::new(
                ParseErrorKind::Syntax,
                self.toks[self.i.saturating_sub(1)].pos,
                format!("unknown declaration `{other}`"),
            )),
        }
    }

    fn param_field(&mut self) -> PResult<ParamField> {
        let key_pos = self.pos();
        let key = self.ident()?;
        if !PARAM_KEYS.contains(&key.as_str()) {
            return Err(ParseError::new(ParseErrorKind::Syntax, key_pos, format!("unknown params field `{key}`")));
        }
        self.expect_sym('=')?;
        let value = match key.as_str() {
            "J1" | "sat" => {
                if *self.peek() == Tok::Sym('(') {
                    ParamValue::Ideal(self.paren_list()?)
                } else {
                    ParamValue::Name(self.ident()?)
                }
            }
            "m" => ParamValue::Int(self.int()?),
            "x" => ParamValue::List(self.bracket_list()?),
            _ => ParamValue::Poly(self.expr()?),
        };
        Ok(ParamField { key, value })
    }

    fn list_until(&mut self, close: char) -> PResult<Vec<Expr>> {
        let mut out = Vec::new();
        if self.eat_sym(close) {
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            if self.eat_sym(close) {
                return Ok(out);
            }
            self.expect_sym(',')?;
        }
    }

    fn paren_list(&mut self) -> PResult<Vec<Expr>> {
        self.expect_sym('(')?;
        self.list_until(')')
    }

    fn bracket_list(&mut self) -> PResult<Vec<Expr>> {
        self.expect_sym('[')?;
        self.list_until(']')
    }

    pub fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_sym('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_sym('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        while self.eat_sym('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Expr> {
        if self.eat_sym('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Expr> {
        let mut base = self.atom()?;
        while self.eat_sym('^') {
            base = Expr::Pow(Box::new(base), self.int()?);
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Num(n))
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Expr::Var(s))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            other => self.err(format!("expected a polynomial term, found {other}")),
        }
    }

    pub fn at_end(&mut self) -> bool {
        while *self.peek() == Tok::Newline {
            self.bump();
        }
        *self.peek() == Tok::Eof
    }
}
