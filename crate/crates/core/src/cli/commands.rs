use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::frobenius::{self, PartVerdict, SuitableParams};
use crate::groebner::Ideal;
use crate::ideals::QuotientRingSpec;
use crate::koszul::{self, KoszulSystem};
use crate::poly::Polynomial;
use crate::rees;
use crate::resolutions::{self, PresentedModule};

use super::report::{Format, Report};
use super::session::Session;
use super::{CliError, ErrorKind, EXIT_OK};

#[derive(Debug, Parser)]
#[command(name = "charkit", version, about = "Exact commutative algebra over prime fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// `.ck` script declaring rings, ideals, modules and parameters.
    pub script: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A module given by name, or `R/I` for a named ideal.
#[derive(Debug, Clone, Args)]
pub struct ModuleArg {
    #[arg(long, conflicts_with = "ideal")]
    pub module: Option<String>,
    #[arg(long)]
    pub ideal: Option<String>,
}

/// Divisor of a colon or saturation: a polynomial or a named ideal.
#[derive(Debug, Clone, Args)]
pub struct DivisorArg {
    #[arg(long, conflicts_with = "by")]
    pub poly: Option<String>,
    #[arg(long)]
    pub by: Option<String>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Reduced Gröbner basis of an ideal.
    Gb {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
    },
    /// Ideal membership.
    Member {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        poly: String,
    },
    /// `(I : f)` or `(I : J)`.
    Colon {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        divisor: DivisorArg,
    },
    /// `(I : f^∞)` or `(I : J^∞)`.
    Sat {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        divisor: DivisorArg,
    },
    /// Intersection of two ideals
    Intersect {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        with: String,
    },
    /// Frobenius bracket power `I^[q]`.
    Bracket {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        q: u64,
    },
    /// `I^(n)` as the saturation of `I^n` (by the maximal ideal unless `--sat`).
    Symbolic {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        sat: Option<String>,
    },
    /// Length of `R/I` or of a module.
    Length {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: ModuleArg,
    },
    /// Krull dimension of `R/I`.
    Dim {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
    },
    /// `Ext^i_S(M, S)`.
    Ext {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: ModuleArg,
        #[arg(long)]
        index: usize,
        /// Number of Hilbert-function values to list.
        #[arg(long, default_value_t = 8)]
        window: usize,
    },
    /// Minimal free resolution over S.
    Resolve {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: ModuleArg,
    },
    /// `H^i(x^j; M)`.
    Koszul {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: ModuleArg,
        #[arg(long)]
        seq: String,
        #[arg(long)]
        deg: usize,
        #[arg(long, default_value_t = 1)]
        j: u32,
    },
    /// Local cohomology bound search.
    Lcb {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: ModuleArg,
        #[arg(long)]
        seq: String,
        #[arg(long)]
        deg: usize,
        #[arg(long, default_value_t = 4)]
        jmax: u32,
        #[arg(long, default_value_t = 6)]
        kmax: u32,
    },
    /// Bounded tight-closure evidence for `f ∈ I*` with test element `c`.
    Tc {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        test: String,
        #[arg(long, default_value_t = 2)]
        emax: u32,
    },
    /// Degeneracy-ideal colon chain at one `e`.
    Chain {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long, default_value_t = 3)]
        tmax: u32,
    },
    /// Hilbert–Kunz table `λ(R/I^[p^e])/p^{ed}`.
    Ehk {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 2)]
        emax: u32,
    },
    /// F-signature table from degeneracy ideals.
    Fsig {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = 2)]
        emax: u32,
        #[arg(long, default_value_t = 3)]
        tmax: u32,
    },
    /// `λ(R/I_e)` against `λ(R/I^[q]) - λ(R/(I,u)^[q])`.
    WyCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = 2)]
        emax: u32,
        #[arg(long, default_value_t = 3)]
        tmax: u32,
        #[arg(long, default_value_t = 1)]
        t0: u32,
    },
    /// Colon-ideal identities for suitable parameters.
    ColonLemma {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = 1)]
        e: u32,
        /// Exponents `N_2, .., N_d`, comma separated.
        #[arg(long)]
        n: String,
        /// Exponent `n` in the part-2 hypothesis `x^n J^(m) ⊆ aR`.
        #[arg(long, default_value_t = 0)]
        nmax: u32,
    },
    /// Annihilation of double Ext modules by parameter powers.
    ExtAnnih {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = 1)]
        i: u32,
        #[arg(long, default_value_t = 2)]
        jmin: usize,
        #[arg(long)]
        jmax: usize,
    },
    /// Hilbert-function comparison for `Ext^{h+1}_S(R/J_1^{mi+1}, S)`.
    ExtIso {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = 1)]
        i: u32,
        #[arg(long, default_value_t = 6)]
        deg_bound: usize,
    },
    /// Rees algebra presentation.
    Rees {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
    },
    /// Analytic spread.
    Spread {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
    },
    /// Least `N <= nmax` with `J I^N = I^{N+1}`.
    Redno {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        reduction: String,
        #[arg(long, default_value_t = 4)]
        nmax: u32,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Gb { common, .. }
            | Command::Member { common, .. }
            | Command::Colon { common, .. }
            | Command::Sat { common, .. }
            | Command::Intersect { common, .. }
            | Command::Bracket { common, .. }
            | Command::Symbolic { common, .. }
            | Command::Length { common, .. }
            | Command::Dim { common, .. }
            | Command::Ext { common, .. }
            | Command::Resolve { common, .. }
            | Command::Koszul { common, .. }
            | Command::Lcb { common, .. }
            | Command::Tc { common, .. }
            | Command::Chain { common, .. }
            | Command::Ehk { common, .. }
            | Command::Fsig { common, .. }
            | Command::WyCheck { common, .. }
            | Command::ColonLemma { common, .. }
            | Command::ExtAnnih { common, .. }
            | Command::ExtIso { common, .. }
            | Command::Rees { common, .. }
            | Command::Spread { common, .. }
            | Command::Redno { common, .. } => common,
        }
    }
}

/// Exit code and the text destined for standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command, loading the
/// script unless a session is supplied.
pub fn run_args<I, T>(args: I, session: Option<&Session>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { super::EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let common = cli.command.common().clone();
    let loaded;
    let session = match session {
        Some(s) => s,
        None => {
            let Some(path) = &common.script else {
                return failure(CliError::new(ErrorKind::Parse, "a script path is required"));
            };
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return failure(CliError::new(ErrorKind::Io, format!("{}: {e}", path.display()))),
            };
            loaded = match Session::from_text(&text) {
                Ok(s) => s,
                Err(e) => return failure(e),
            };
            &loaded
        }
    };
    match execute(session, &cli.command) {
        Ok(report) => emit(&report, &common, EXIT_OK, String::new()),
        Err(mut e) => match e.partial.take() {
            Some(partial) => {
                let code = e.exit_code();
                emit(&partial, &common, code, format!("error: {e}\n"))
            }
            None => failure(e),
        },
    }
}

fn failure(e: CliError) -> Outcome {
    Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") }
}

fn emit(report: &Report, common: &Common, code: i32, stderr: String) -> Outcome {
    let text = report.render(common.format);
    match &common.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr },
            Err(e) => failure(CliError::new(ErrorKind::Io, format!("{}: {e}", path.display()))),
        },
        None => Outcome { code, stdout: text, stderr },
    }
}

fn parse_poly(r: &QuotientRingSpec, text: &str) -> Result<Polynomial, CliError> {
    r.ambient().parse(text).map_err(|e| CliError::new(ErrorKind::Parse, e.to_string()))
}

fn parse_list(r: &QuotientRingSpec, text: &str) -> Result<Vec<Polynomial>, CliError> {
    text.split(',').map(|t| parse_poly(r, t.trim())).collect()
}

fn parse_naturals(text: &str) -> Result<Vec<u32>, CliError> {
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| CliError::new(ErrorKind::Parse, format!("`{t}` is not a natural number"))))
        .collect()
}

fn same_ring<'a>(a: &'a QuotientRingSpec, b: &QuotientRingSpec) -> Result<&'a QuotientRingSpec, CliError> {
    if a.defining_ideal().ring() == b.defining_ideal().ring() && a.same_ideal(a.defining_ideal(), b.defining_ideal())? {
        Ok(a)
    } else {
        Err(CliError::new(ErrorKind::Parse, "the named objects live in different rings"))
    }
}

fn ideal_rows(report: &mut Report, r: &QuotientRingSpec, i: &Ideal) -> Result<(), CliError> {
    let reduced = i.reduced()?;
    for (k, g) in r.own_generators(&reduced)?.iter().enumerate() {
        report.row(vec![(k + 1).to_string(), g.to_string()]);
    }
    Ok(())
}

fn ideal_report(name: &str, r: &QuotientRingSpec, i: &Ideal) -> Result<Report, CliError> {
    let mut rep = Report::new(name, &["k", "generator"]);
    ideal_rows(&mut rep, r, i)?;
    Ok(rep)
}

fn module_of<'a>(s: &'a Session, t: &ModuleArg) -> Result<(&'a QuotientRingSpec, PresentedModule, String), CliError> {
    match (&t.module, &t.ideal) {
        (Some(m), _) => {
            let (r, module) = s.module(m)?;
            Ok((r, module.clone(), m.clone()))
        }
        (None, Some(i)) => {
            let (r, ideal) = s.ideal(i)?;
            Ok((r, PresentedModule::quotient(ideal)?, format!("R/{i}")))
        }
        (None, None) => Err(CliError::new(ErrorKind::Parse, "either --module or --ideal is required")),
    }
}

fn validated<'a>(s: &'a Session, name: &str) -> Result<&'a SuitableParams, CliError> {
    let sp = s.params(name)?;
    sp.validate()?;
    Ok(sp)
}

/// Runs rows in order, keeping what was computed when a resource limit hits.
fn fill_rows<T>(
    report: &mut Report,
    range: impl IntoIterator<Item = T>,
    mut row: impl FnMut(T) -> crate::error::Result<Vec<String>>,
) -> Result<(), CliError> {
    for k in range {
        match row(k) {
            Ok(cells) => {
                report.row(cells);
            }
            Err(e) => {
                let mut err = CliError::from(e);
                if err.kind == ErrorKind::Resource {
                    let mut partial = report.clone();
                    partial.certify("PARTIAL");
                    err.partial = Some(Box::new(partial));
                }
                return Err(err);
            }
        }
    }
    Ok(())
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

/// Evaluates one command against a loaded session.
pub fn execute(s: &Session, cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Gb { ideal, .. } => {
            let (r, i) = s.ideal(ideal)?;
            let mut rep = ideal_report("gb", r, i)?;
            rep.input("ideal", ideal);
            Ok(rep)
        }
        Command::Member { ideal, poly, .. } => {
            let (r, i) = s.ideal(ideal)?;
            let f = parse_poly(r, poly)?;
            let mut rep = Report::new("member", &["member"]);
            rep.input("ideal", ideal).input("poly", poly);
            rep.row(vec![r.contains(i, &f)?.to_string()]);
            Ok(rep)
        }
        Command::Colon { ideal, divisor, .. } | Command::Sat { ideal, divisor, .. } => {
            let (r, i) = s.ideal(ideal)?;
            let is_sat = matches!(cmd, Command::Sat { .. });
            let (result, exponent) = match (&divisor.poly, &divisor.by) {
                (Some(f), _) => {
                    let f = parse_poly(r, f)?;
                    if is_sat {
                        let g = Ideal::new(r.ambient(), vec![f])?;
                        let (res, k) = r.saturate_ideal(i, &g)?;
                        (res, Some(k))
                    } else {
                        (r.colon(i, &f)?, None)
                    }
                }
                (None, Some(j)) => {
                    let (rj, j) = s.ideal(j)?;
                    same_ring(r, rj)?;
                    if is_sat {
                        let (res, k) = r.saturate_ideal(i, j)?;
                        (res, Some(k))
                    } else {
                        (r.colon_ideal(i, j)?, None)
                    }
                }
                (None, None) => return Err(CliError::new(ErrorKind::Parse, "either --poly or --by is required")),
            };
            let mut rep = ideal_report(if is_sat { "sat" } else { "colon" }, r, &result)?;
            rep.input("ideal", ideal);
            if let Some(f) = &divisor.poly {
                rep.input("poly", f);
            }
            if let Some(j) = &divisor.by {
                rep.input("by", j);
            }
            if let Some(k) = exponent {
                rep.certify(format!("STABILIZED({k})"));
            }
            Ok(rep)
        }
        Command::Intersect { ideal, with, .. } => {
            let (r, i) = s.ideal(ideal)?;
            let (rj, j) = s.ideal(with)?;
            same_ring(r, rj)?;
            let mut rep = ideal_report("intersect", r, &r.intersect(i, j)?)?;
            rep.input("ideal", ideal).input("with", with);
            Ok(rep)
        }
        Command::Bracket { ideal, q, .. } => {
            let (r, i) = s.ideal(ideal)?;
            let mut rep = ideal_report("bracket", r, &r.bracket_power(i, *q)?)?;
            rep.input("ideal", ideal).input("q", q);
            Ok(rep)
        }
        Command::Symbolic { ideal, n, sat, .. } => {
            let (r, i) = s.ideal(ideal)?;
            let by = match sat {
                Some(name) => {
                    let (rs, j) = s.ideal(name)?;
                    same_ring(r, rs)?;
                    j.clone()
                }
                None => r.maximal()?,
            };
            let mut rep = ideal_report("symbolic", r, &r.symbolic_power(i, *n, &by)?)?;
            rep.input("ideal", ideal).input("n", n).input("sat", sat.as_deref().unwrap_or("maximal"));
            Ok(rep)
        }
        Command::Length { target, .. } => {
            let mut rep = Report::new("length", &["length"]);
            let len = match (&target.module, &target.ideal) {
                (None, Some(i)) => {
                    let (r, ideal) = s.ideal(i)?;
                    rep.input("ideal", i);
                    r.colength(ideal)?
                }
                _ => {
                    let (_, m, name) = module_of(s, target)?;
                    rep.input("module", name);
                    resolutions::module_length(&m)?
                }
            };
            rep.row(vec![len.to_string()]);
            Ok(rep)
        }
        Command::Dim { ideal, .. } => {
            let (r, i) = s.ideal(ideal)?;
            let mut rep = Report::new("dim", &["dim"]);
            rep.input("ideal", ideal);
            rep.row(vec![r.krull_dimension(i)?.to_string()]);
            Ok(rep)
        }
        Command::Ext { target, index, window, .. } => {
            let (_, m, name) = module_of(s, target)?;
            let ext = resolutions::ext_module(&m, *index)?.pruned()?;
            let mut rep = Report::new("ext", &["generators", "relations", "length", "hilbert_from_initial_degree"]);
            rep.input("module", name).input("index", index).input("window", window);
            let span = 4 * m.ring().nvars() + 4 * (*window) + 8;
            let hf = if ext.is_zero()? {
                vec![0; *window]
            } else {
                ext.hilbert_from_initial_degree(-(span as i64), 2 * span, *window)?
            };
            rep.row(vec![
                ext.num_generators().to_string(),
                ext.presentation().ncols().to_string(),
                resolutions::module_length(&ext)?.to_string(),
                hf.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
            ]);
            Ok(rep)
        }
        Command::Resolve { target, .. } => {
            let (_, m, name) = module_of(s, target)?;
            let res = resolutions::free_resolution(&m, m.ring().nvars() + 2)?;
            let mut rep = Report::new("resolve", &["k", "rank", "degrees"]);
            rep.input("module", name);
            for (k, b) in res.betti_numbers().iter().enumerate() {
                let degrees = if k == 0 {
                    res.maps().first().map(|d| d.row_degrees().to_vec()).unwrap_or_else(|| vec![0; *b])
                } else {
                    res.maps()[k - 1].col_degrees().to_vec()
                };
                rep.row(vec![k.to_string(), b.to_string(), degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")]);
            }
            Ok(rep)
        }
        Command::Koszul { target, seq, deg, j, .. } => {
            let (r, m, name) = module_of(s, target)?;
            let sys = KoszulSystem::new(parse_list(r, seq)?, m)?;
            let h = koszul::koszul_cohomology(&sys, *deg, *j)?;
            let mut rep = Report::new("koszul", &["generators", "length"]);
            rep.input("module", name).input("seq", seq).input("deg", deg).input("j", j);
            rep.row(vec![h.module.num_generators().to_string(), h.length()?.to_string()]);
            Ok(rep)
        }
        Command::Lcb { target, seq, deg, jmax, kmax, .. } => {
            let (r, m, name) = module_of(s, target)?;
            let sys = KoszulSystem::new(parse_list(r, seq)?, m)?;
            let report = koszul::lcb_estimate(&sys, *deg, *jmax, *kmax)?;
            let mut rep = Report::new("lcb", &["j", "plateau", "epsilon", "has_dying_classes"]);
            rep.input("module", name).input("seq", seq).input("deg", deg).input("jmax", jmax).input("kmax", kmax);
            rep.input("bound", report.bound);
            for row in &report.rows {
                rep.row(vec![row.j.to_string(), opt(row.plateau), row.epsilon.to_string(), row.has_dying_classes.to_string()]);
            }
            rep.certify(report.certification);
            Ok(rep)
        }
        Command::Tc { ideal, poly, test, emax, .. } => {
            let (r, i) = s.ideal(ideal)?;
            let verdict = frobenius::tc_member(r, &parse_poly(r, poly)?, i, &parse_poly(r, test)?, *emax)?;
            let mut rep = Report::new("tc", &["verdict"]);
            rep.input("ideal", ideal).input("poly", poly).input("test", test).input("emax", emax);
            rep.row(vec![verdict.to_string()]);
            Ok(rep)
        }
        Command::Chain { params, e, tmax, .. } => {
            let sp = validated(s, params)?;
            let chain = frobenius::degeneracy_chain(sp, *e, *tmax)?;
            let mut rep = Report::new("chain", &["t", "length", "generators"]);
            rep.input("params", params).input("e", e).input("tmax", tmax);
            rep.input("stabilization_index", chain.stabilization_index);
            for (t, c) in chain.steps.iter().enumerate() {
                let gens = sp.ring.own_generators(c)?;
                rep.row(vec![
                    (t + 1).to_string(),
                    sp.ring.colength(c)?.to_string(),
                    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("; "),
                ]);
            }
            rep.certify(if chain.stabilized { "STABILIZED" } else { "UNSTABILIZED" });
            Ok(rep)
        }
        Command::Ehk { ideal, emax, .. } => {
            let (r, i) = s.ideal(ideal)?;
            if !r.colength(i)?.is_finite() {
                return Err(crate::error::AlgebraError::NotPrimary.into());
            }
            let mut rep = Report::new("ehk", &["e", "q", "length", "ratio"]);
            rep.input("ideal", ideal).input("emax", emax);
            fill_rows(&mut rep, 1..=*emax, |e| {
                let row = frobenius::hk_row(r, i, e)?;
                Ok(vec![row.e.to_string(), row.q.to_string(), row.length.to_string(), ratio(&row.ratio)])
            })?;
            Ok(rep)
        }
        Command::Fsig { params, emax, tmax, .. } => {
            let sp = validated(s, params)?;
            let mut rep = Report::new("fsig", &["e", "q", "degeneracy_length", "s_e", "stabilized"]);
            rep.input("params", params).input("emax", emax).input("tmax", tmax);
            fill_rows(&mut rep, 1..=*emax, |e| {
                let row = frobenius::fsig_row(sp, e, *tmax)?;
                Ok(vec![
                    row.e.to_string(),
                    row.q.to_string(),
                    opt(row.degeneracy_length),
                    row.s_e.as_ref().map_or_else(String::new, ratio),
                    opt(row.stabilized),
                ])
            })?;
            Ok(rep)
        }
        Command::WyCheck { params, emax, tmax, t0, .. } => {
            let sp = validated(s, params)?;
            let mut rep = Report::new("wy-check", &["e", "degeneracy_length", "relative_hk", "equal", "stabilized"]);
            rep.input("params", params).input("emax", emax).input("tmax", tmax).input("t0", t0);
            fill_rows(&mut rep, 1..=*emax, |e| {
                let w = frobenius::wy_row(sp, e, *tmax, *t0)?;
                Ok(vec![
                    w.e.to_string(),
                    w.degeneracy_length.to_string(),
                    w.relative_hk.to_string(),
                    w.equal.to_string(),
                    w.stabilized.to_string(),
                ])
            })?;
            Ok(rep)
        }
        Command::ColonLemma { params, e, n, nmax, .. } => {
            let sp = s.params(params)?;
            let ns = parse_naturals(n)?;
            let out = frobenius::colon_lemma_check(sp, *e, &ns, *nmax)?;
            let mut rep = Report::new("colon-lemma", &["part", "verdict"]);
            rep.input("params", params).input("e", e).input("n", n).input("nmax", nmax);
            for (k, v) in [(1, &out.part1), (2, &out.part2)] {
                let cell = match v {
                    PartVerdict::Holds(b) => b.to_string(),
                    PartVerdict::HypothesisFailed(why) => format!("HYPOTHESIS_FAILED: {why}"),
                };
                rep.row(vec![k.to_string(), cell]);
            }
            Ok(rep)
        }
        Command::ExtAnnih { params, i, jmin, jmax, .. } => {
            let sp = s.params(params)?;
            let rows = frobenius::ext_annihilation_check(sp, *i, *jmin..=*jmax)?;
            let mut rep = Report::new("ext-annih", &["j", "annihilated_by"]);
            rep.input("params", params).input("i", i).input("jmin", jmin).input("jmax", jmax);
            for row in rows {
                let flags = row.annihilates.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" ");
                rep.row(vec![row.j.to_string(), flags]);
            }
            Ok(rep)
        }
        Command::ExtIso { params, i, deg_bound, .. } => {
            let sp = s.params(params)?;
            let out = frobenius::ext_iso_hilbert_check(sp, *i, *deg_bound)?;
            let mut rep = Report::new("ext-iso", &["side", "hilbert_from_initial_degree"]);
            rep.input("params", params).input("i", i).input("deg_bound", deg_bound);
            let join = |v: &[u64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            rep.row(vec!["ext".into(), join(&out.ext_side)]);
            rep.row(vec!["ideal".into(), join(&out.ideal_side)]);
            rep.certify(if out.agree { "AGREE" } else { "DIFFER" });
            Ok(rep)
        }
        Command::Rees { ideal, .. } => {
            let (r, i) = s.ideal(ideal)?;
            let pres = rees::rees_presentation(r, i)?;
            let mut rep = Report::new("rees", &["k", "relation"]);
            rep.input("ideal", ideal);
            let base = pres.base().defining_ideal();
            let mut k = 0;
            for g in pres.ideal().generators() {
                let in_p = base.generators().iter().any(|p| p.map_by_names(pres.ring()).ok().as_ref() == Some(g));
                if !in_p {
                    k += 1;
                    rep.row(vec![k.to_string(), g.to_string()]);
                }
            }
            rep.certify(if pres.substitution_check()? { "SUBSTITUTION_CHECKED" } else { "SUBSTITUTION_FAILED" });
            Ok(rep)
        }
        Command::Spread { ideal, .. } => {
            let (r, i) = s.ideal(ideal)?;
            let out = rees::analytic_spread(r, i)?;
            let mut rep = Report::new("spread", &["spread", "fiber_relations"]);
            rep.input("ideal", ideal);
            rep.row(vec![out.spread.to_string(), out.fiber_relations.join("; ")]);
            Ok(rep)
        }
        Command::Redno { ideal, reduction, nmax, .. } => {
            let (r, i) = s.ideal(ideal)?;
            let (rj, j) = s.ideal(reduction)?;
            same_ring(r, rj)?;
            let verdict = rees::reduction_number_check(r, j, i, *nmax)?;
            let mut rep = Report::new("redno", &["reduction_number"]);
            rep.input("ideal", ideal).input("reduction", reduction).input("nmax", nmax);
            rep.row(vec![verdict.to_string()]);
            Ok(rep)
        }
    }
}

fn ratio(r: &num_rational::Ratio<i128>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
