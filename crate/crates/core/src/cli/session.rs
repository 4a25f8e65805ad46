use std::collections::HashMap;

use crate::dsl::{self, Expr, ParamValue, ParseError, ParseErrorKind, Pos, SessionScript, StmtKind};
use crate::error::AlgebraError;
use crate::frobenius::SuitableParams;
use crate::groebner::Ideal;
use crate::ideals::QuotientRingSpec;
use crate::poly::{Polynomial, PolynomialRing, PrimeField};
use crate::resolutions::{FreeMap, PresentedModule};

use super::CliError;

/// An ideal together with the ring it was declared in.
#[derive(Clone, Debug)]
pub struct NamedIdeal {
    pub ring: String,
    pub ideal: Ideal,
}

#[derive(Clone, Debug)]
pub struct NamedModule {
    pub ring: String,
    pub module: PresentedModule,
}

/// Objects declared by a script, evaluated in declaration order.
#[derive(Clone, Debug, Default)]
pub struct Session {
    rings: HashMap<String, QuotientRingSpec>,
    ideals: HashMap<String, NamedIdeal>,
    modules: HashMap<String, NamedModule>,
    params: HashMap<String, SuitableParams>,
    last_ring: Option<String>,
}

fn eval_err(pos: Pos, e: AlgebraError) -> CliError {
    CliError::from(e).at(pos)
}

fn eval_all(ring: &PolynomialRing, exprs: &[Expr], pos: Pos) -> Result<Vec<Polynomial>, CliError> {
    exprs.iter().map(|e| dsl::eval_expr(ring, e, pos).map_err(CliError::from)).collect()
}

impl Session {
    pub fn from_text(text: &str) -> Result<Session, CliError> {
        Session::from_script(&dsl::parse_script(text)?)
    }

    pub fn from_script(script: &SessionScript) -> Result<Session, CliError> {
        let mut s = Session::default();
        let mut current: Option<String> = None;
        for stmt in &script.stmts {
            let pos = stmt.pos;
            let ring_of = |current: &Option<String>, s: &Session| -> Result<(String, QuotientRingSpec), CliError> {
                let name = current.clone().ok_or_else(|| {
                    CliError::from(ParseError::new(ParseErrorKind::UndeclaredIdentifier, pos, "no ring declared".into()))
                })?;
                let r = s.rings[&name].clone();
                Ok((name, r))
            };
            match &stmt.kind {
                StmtKind::Ring { name, p, vars, order } => {
                    let field = PrimeField::new(*p).map_err(|e| eval_err(pos, e))?;
                    let ring = PolynomialRing::new(field, vars, *order).map_err(|e| eval_err(pos, e))?;
                    s.rings.insert(name.clone(), QuotientRingSpec::polynomial(&ring));
                    current = Some(name.clone());
                }
                StmtKind::Quotient { name, ring, relations } => {
                    let base = s.rings[ring].clone();
                    let rels = eval_all(base.ambient(), relations, pos)?;
                    let mut gens = base.defining_ideal().generators().to_vec();
                    gens.extend(rels);
                    let ideal = Ideal::new(base.ambient(), gens).map_err(|e| eval_err(pos, e))?;
                    s.rings.insert(name.clone(), QuotientRingSpec::new(ideal).map_err(|e| eval_err(pos, e))?);
                    current = Some(name.clone());
                }
                StmtKind::Ideal { name, gens } => {
                    let (rname, r) = ring_of(&current, &s)?;
                    let gens = eval_all(r.ambient(), gens, pos)?;
                    let ideal = r.ideal(gens).map_err(|e| eval_err(pos, e))?;
                    s.ideals.insert(name.clone(), NamedIdeal { ring: rname, ideal });
                }
                StmtKind::Module { name, rows } => {
                    let (rname, r) = ring_of(&current, &s)?;
                    let rows: Vec<Vec<Polynomial>> =
                        rows.iter().map(|row| eval_all(r.ambient(), row, pos)).collect::<Result<_, _>>()?;
                    let module = module_over(&r, rows).map_err(|e| eval_err(pos, e))?;
                    s.modules.insert(name.clone(), NamedModule { ring: rname, module });
                }
                StmtKind::Params { name, fields } => {
                    let (_, r) = ring_of(&current, &s)?;
                    let params = s.build_params(&r, fields, pos)?;
                    s.params.insert(name.clone(), params);
                }
            }
        }
        s.last_ring = current;
        Ok(s)
    }

    fn build_params(&self, r: &QuotientRingSpec, fields: &[dsl::ParamField], pos: Pos) -> Result<SuitableParams, CliError> {
        let amb = r.ambient();
        let missing = |k: &str| CliError::from(ParseError::new(ParseErrorKind::Syntax, pos, format!("params field `{k}` is required")));
        let ideal_value = |v: &ParamValue| -> Result<Ideal, CliError> {
            match v {
                ParamValue::Name(n) => Ok(r.lift(&self.ideals[n].ideal).map_err(|e| eval_err(pos, e))?),
                ParamValue::Ideal(g) => r.ideal(eval_all(amb, g, pos)?).map_err(|e| eval_err(pos, e)),
                _ => Err(missing("J1")),
            }
        };
        let mut j1 = None;
        let mut m = None;
        let mut x = None;
        let mut a2 = None;
        let mut a3 = None;
        let mut u = None;
        let mut sat = None;
        for f in fields {
            match (f.key.as_str(), &f.value) {
                ("J1", v) => j1 = Some(ideal_value(v)?),
                ("sat", v) => sat = Some(ideal_value(v)?),
                ("m", ParamValue::Int(n)) => m = Some(*n as u32),
                ("x", ParamValue::List(g)) => x = Some(eval_all(amb, g, pos)?),
                ("a2", ParamValue::Poly(e)) => a2 = Some(dsl::eval_expr(amb, e, pos)?),
                ("a3", ParamValue::Poly(e)) => a3 = Some(dsl::eval_expr(amb, e, pos)?),
                ("u", ParamValue::Poly(e)) => u = Some(dsl::eval_expr(amb, e, pos)?),
                (k, _) => {
                    return Err(ParseError::new(ParseErrorKind::Syntax, pos, format!("malformed params field `{k}`")).into())
                }
            }
        }
        Ok(SuitableParams {
            ring: r.clone(),
            j1: j1.ok_or_else(|| missing("J1"))?,
            m: m.unwrap_or(1),
            x: x.ok_or_else(|| missing("x"))?,
            a2,
            a3,
            u: u.ok_or_else(|| missing("u"))?,
            k1: None,
            sat,
        })
    }

    pub fn ring(&self, name: &str) -> Result<&QuotientRingSpec, CliError> {
        self.rings.get(name).ok_or_else(|| CliError::undeclared("ring", name))
    }

    /// The named ring, or the last one declared.
    pub fn ring_or_last(&self, name: Option<&str>) -> Result<(&str, &QuotientRingSpec), CliError> {
        let name = match name {
            Some(n) => n,
            None => self.last_ring.as_deref().ok_or_else(|| CliError::undeclared("ring", "<none>"))?,
        };
        let (k, r) = self.rings.get_key_value(name).ok_or_else(|| CliError::undeclared("ring", name))?;
        Ok((k.as_str(), r))
    }

    pub fn ideal(&self, name: &str) -> Result<(&QuotientRingSpec, &Ideal), CliError> {
        let n = self.ideals.get(name).ok_or_else(|| CliError::undeclared("ideal", name))?;
        Ok((&self.rings[&n.ring], &n.ideal))
    }

    pub fn module(&self, name: &str) -> Result<(&QuotientRingSpec, &PresentedModule), CliError> {
        let n = self.modules.get(name).ok_or_else(|| CliError::undeclared("module", name))?;
        Ok((&self.rings[&n.ring], &n.module))
    }

    pub fn params(&self, name: &str) -> Result<&SuitableParams, CliError> {
        self.params.get(name).ok_or_else(|| CliError::undeclared("params", name))
    }
}

/// `coker` of the matrix over `R = S/P`: the columns of the matrix together
/// with `P` times each basis vector.
pub fn module_over(r: &QuotientRingSpec, rows: Vec<Vec<Polynomial>>) -> crate::error::Result<PresentedModule> {
    let amb = r.ambient();
    let m = FreeMap::from_rows(amb, rows)?;
    let n = m.nrows();
    let mut cols: Vec<Vec<Polynomial>> = m.columns().to_vec();
    for k in 0..n {
        for p in r.defining_ideal().generators() {
            let mut col = vec![amb.zero(); n];
            col[k] = p.clone();
            cols.push(col);
        }
    }
    Ok(PresentedModule::new(FreeMap::from_columns(amb, n, cols)?))
}
