//! Command-line front end. [`dispatch`] parses arguments, runs one
//! subcommand and returns the exit code with the rendered output, so the
//! binary is a thin wrapper and every command is testable in-process.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on a usage error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::checks::CheckName;
use crate::error::{Error, Result};
use crate::fold::{fold_generators, fold_power, Multiplicities, UniformParams};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::partition::SymmetricIdeal;
use crate::resolution::{
    betti_closed, betti_koszul_oracle_capped, is_symmetric_shifted, linear_quotients_resolution,
    search_linear_quotients_order, BettiTable, DEFAULT_MATRIX_CAP, DEFAULT_MULTIDEGREE_CAP,
};
use crate::sweep::{run_sweep, sweep_to_writer, SweepConfig};
use crate::symbolic::{
    alpha, containment, resurgence_closed, resurgence_search, sdefect, symbolic_power, waldschmidt,
    waldschmidt_check, DefectMode, Flavor, SymbolicSpec,
};
use crate::verify::{verify, Level, Pins};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "foldprod",
    version,
    about = "Exact computations with fold-product monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Derived parameters c0, mu0, delta and the regimes they fall in.
    Params {
        #[command(flatten)]
        ideal: IdealArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Minimal generators of I, or of I^r with --r.
    Gens {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, default_value_t = crate::monomial::DEFAULT_GEN_CAP)]
        gen_cap: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Graded Betti table of R/I, or of R/I^(m) with --m.
    Betti {
        #[command(flatten)]
        ideal: IdealArgs,
        #[command(flatten)]
        symbolic: OptionalSymbolicArgs,
        #[arg(long, value_enum, default_value_t = BettiMode::Auto)]
        mode: BettiMode,
        #[command(flatten)]
        caps: KoszulCaps,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Orbit representatives of the minimal generators of I^(m).
    Symbolic {
        #[command(flatten)]
        uniform: UniformArgs,
        #[command(flatten)]
        symbolic: SymbolicArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Whether I^(m) is contained in I^r.
    Contain {
        #[command(flatten)]
        uniform: UniformArgs,
        #[command(flatten)]
        symbolic: SymbolicArgs,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Resurgence: the closed value, or a search over m, r up to --m, --r.
    Resurgence {
        #[command(flatten)]
        uniform: UniformArgs,
        #[arg(long)]
        star: bool,
        #[arg(long, value_enum, default_value_t = SearchMode::Closed)]
        mode: SearchMode,
        #[arg(long, default_value_t = 12)]
        m: u32,
        #[arg(long, default_value_t = 12)]
        r: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Minimal number of generators of I^(m)/I^m.
    Sdefect {
        #[command(flatten)]
        uniform: UniformArgs,
        #[command(flatten)]
        symbolic: SymbolicArgs,
        #[arg(long, value_enum, default_value_t = DefectArg::Formula)]
        mode: DefectArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Waldschmidt constant, or the sequence alpha(I^(m))/m up to --m.
    Waldschmidt {
        #[command(flatten)]
        uniform: UniformArgs,
        #[arg(long)]
        star: bool,
        #[arg(long, value_enum, default_value_t = SearchMode::Closed)]
        mode: SearchMode,
        #[arg(long, default_value_t = 12)]
        m: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Runs checks over a parameter grid, one JSON record per line.
    Sweep(SweepArgs),
    /// Runs the acceptance criteria.
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
        /// Perturbs one pinned constant of the given criterion.
        #[arg(long, hide = true)]
        mutate: Option<u8>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug, Clone)]
struct IdealArgs {
    #[arg(long, required_unless_present = "mults")]
    s: Option<u32>,
    #[arg(long)]
    a: u32,
    #[arg(long, conflicts_with = "mults", required_unless_present = "mults")]
    b: Option<u32>,
    /// Exponent caps m_1,...,m_s of a non-uniform ideal.
    #[arg(long, value_delimiter = ',', conflicts_with = "s")]
    mults: Option<Vec<u32>>,
}

#[derive(Args, Debug, Clone)]
struct UniformArgs {
    #[arg(long)]
    s: u32,
    #[arg(long)]
    a: u32,
    #[arg(long)]
    b: u32,
}

#[derive(Args, Debug, Clone)]
struct SymbolicArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    star: bool,
    /// Ambient projective dimension; defaults to s - 1.
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Args, Debug, Clone)]
struct OptionalSymbolicArgs {
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, requires = "m")]
    star: bool,
    #[arg(long, requires = "m")]
    n: Option<u32>,
}

#[derive(Args, Debug, Clone)]
struct KoszulCaps {
    #[arg(long, default_value_t = DEFAULT_MATRIX_CAP)]
    matrix_cap: u64,
    #[arg(long, default_value_t = DEFAULT_MULTIDEGREE_CAP)]
    multidegree_cap: u64,
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct SweepArgs {
    /// Largest s.
    #[arg(long, default_value_t = 4)]
    s: u32,
    /// Largest b.
    #[arg(long, default_value_t = 2)]
    b: u32,
    /// Restrict to one a.
    #[arg(long)]
    a: Option<u32>,
    /// Largest m for the per-m checks.
    #[arg(long, default_value_t = 2)]
    m: u32,
    #[arg(long, default_value_t = 12)]
    m_max: u32,
    #[arg(long, default_value_t = 12)]
    r_max: u32,
    #[arg(long, value_enum, default_value_t = FlavorArg::Both)]
    flavor: FlavorArg,
    /// Comma-separated check names; all by default.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    #[arg(long, default_value_t = 4)]
    jobs: usize,
    /// Adds wall time to each record.
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum BettiMode {
    Auto,
    Closed,
    Quotients,
    Search,
    Koszul,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SearchMode {
    Closed,
    Search,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DefectArg {
    Formula,
    Oracle,
    Check,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FlavorArg {
    Ordinary,
    Star,
    Both,
}

/// A rendered result: the text form, the structured fields beside
/// `command` and `params`, and whether a check failed.
struct Rendered {
    text: String,
    fields: Map<String, Value>,
    failed: bool,
}

impl Rendered {
    fn new(text: impl Into<String>, key: &str, value: Value) -> Self {
        let mut fields = Map::new();
        fields.insert(key.into(), value);
        Rendered {
            text: text.into(),
            fields,
            failed: false,
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.fields.insert(key.into(), value);
        self
    }

    fn failed(mut self, failed: bool) -> Self {
        self.failed = failed;
        self
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn dispatch<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match run(cli.command) {
        Ok(pair) => pair,
        Err(e) => {
            let code = match e {
                Error::Parameter(_) | Error::Regime(_) | Error::Dimension { .. } => EXIT_USAGE,
                _ => EXIT_CHECK_FAILED,
            };
            (code, format!("error: {e}\n"))
        }
    }
}

fn run(command: Command) -> Result<(i32, String)> {
    match command {
        Command::Params { ideal, output } => {
            let r = params_cmd(&ideal)?;
            emit("params", ideal_params(&ideal), r, &output)
        }
        Command::Gens {
            ideal,
            r,
            gen_cap,
            output,
        } => {
            let rendered = gens_cmd(&ideal, r, gen_cap)?;
            let mut params = ideal_params(&ideal);
            insert_opt(&mut params, "r", r.map(Value::from));
            emit("gens", params, rendered, &output)
        }
        Command::Betti {
            ideal,
            symbolic,
            mode,
            caps,
            output,
        } => {
            let rendered = betti_cmd(&ideal, &symbolic, mode, &caps)?;
            let mut params = ideal_params(&ideal);
            insert_opt(&mut params, "m", symbolic.m.map(Value::from));
            if symbolic.m.is_some() {
                params.insert("flavor".into(), json!(flavor(symbolic.star).to_string()));
            }
            emit("betti", params, rendered, &output)
        }
        Command::Symbolic {
            uniform,
            symbolic,
            output,
        } => {
            let spec = spec(&uniform, &symbolic)?;
            let sym = symbolic_power(&spec)?;
            let rendered = symbolic_render(&sym)?;
            emit(
                "symbolic",
                spec_params(&uniform, &symbolic, None),
                rendered,
                &output,
            )
        }
        Command::Contain {
            uniform,
            symbolic,
            r,
            output,
        } => {
            let spec = spec(&uniform, &symbolic)?;
            let held = containment(&spec, r)?;
            let rendered = Rendered::new(format!("{held}\n"), "value", json!(held));
            emit(
                "contain",
                spec_params(&uniform, &symbolic, Some(r)),
                rendered,
                &output,
            )
        }
        Command::Resurgence {
            uniform,
            star,
            mode,
            m,
            r,
            output,
        } => {
            let params = uniform_of(&uniform)?;
            let fl = flavor(star);
            let rendered = match mode {
                SearchMode::Closed => {
                    let v = resurgence_closed(&params, fl)?;
                    Rendered::new(format!("{v}\n"), "value", json!(v))
                }
                SearchMode::Search => {
                    let report = resurgence_search(&params, fl, m, r)?;
                    let mut text = format!("closed: {}\n", report.closed);
                    match &report.max_ratio {
                        Some(v) => writeln!(text, "max ratio: {v}").unwrap(),
                        None => text.push_str("max ratio: none\n"),
                    }
                    writeln!(text, "witnesses: {}", report.witnesses.len()).unwrap();
                    for w in &report.witnesses {
                        writeln!(text, "  m={} r={} ratio={}", w.m, w.r, w.ratio).unwrap();
                    }
                    let sound = report.sound();
                    if !sound {
                        text.push_str("unsound: a witness reaches the closed value\n");
                    }
                    Rendered::new(text, "value", json!(report.closed))
                        .with("max_ratio", json!(report.max_ratio))
                        .with("witnesses", json!(report.witnesses))
                        .with("sound", json!(sound))
                        .failed(!sound)
                }
            };
            let mut p = uniform_json(&uniform);
            p.insert("flavor".into(), json!(fl.to_string()));
            if mode == SearchMode::Search {
                p.insert("m".into(), json!(m));
                p.insert("r".into(), json!(r));
            }
            emit("resurgence", p, rendered, &output)
        }
        Command::Sdefect {
            uniform,
            symbolic,
            mode,
            output,
        } => {
            let spec = spec(&uniform, &symbolic)?;
            let rendered = match mode {
                DefectArg::Formula | DefectArg::Oracle => {
                    let m = if mode == DefectArg::Formula {
                        DefectMode::Formula
                    } else {
                        DefectMode::Oracle
                    };
                    let v = sdefect(&spec, m)?;
                    Rendered::new(format!("{v}\n"), "value", json!(v.to_string()))
                }
                DefectArg::Check => {
                    let f = sdefect(&spec, DefectMode::Formula)?;
                    let o = sdefect(&spec, DefectMode::Oracle)?;
                    let agree = f == o;
                    let text = format!(
                        "formula {f}\noracle {o}\n{}\n",
                        if agree { "agree" } else { "MISMATCH" }
                    );
                    Rendered::new(text, "value", json!(f.to_string()))
                        .with("oracle", json!(o.to_string()))
                        .with("agree", json!(agree))
                        .failed(!agree)
                }
            };
            emit(
                "sdefect",
                spec_params(&uniform, &symbolic, None),
                rendered,
                &output,
            )
        }
        Command::Waldschmidt {
            uniform,
            star,
            mode,
            m,
            output,
        } => {
            let params = uniform_of(&uniform)?;
            let fl = flavor(star);
            let rendered = match mode {
                SearchMode::Closed => {
                    let v = waldschmidt(&params, fl)?;
                    Rendered::new(format!("{v}\n"), "value", json!(v))
                }
                SearchMode::Search => {
                    let check = waldschmidt_check(&params, fl, m)?;
                    let mut text = format!("closed: {}\n", check.closed);
                    for (k, ratio) in &check.ratios {
                        writeln!(text, "  m={k} alpha/m={ratio}").unwrap();
                    }
                    writeln!(text, "{}", if check.passed() { "pass" } else { "FAIL" }).unwrap();
                    let passed = check.passed();
                    Rendered::new(text, "value", json!(check.closed))
                        .with("sequence", json!(check.ratios))
                        .with("passed", json!(passed))
                        .failed(!passed)
                }
            };
            let mut p = uniform_json(&uniform);
            p.insert("flavor".into(), json!(fl.to_string()));
            if mode == SearchMode::Search {
                p.insert("m".into(), json!(m));
            }
            emit("waldschmidt", p, rendered, &output)
        }
        Command::Sweep(args) => sweep_cmd(args),
        Command::Verify {
            level,
            mutate,
            output,
        } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let mut pins = Pins::default();
            if let Some(id) = mutate {
                pins = pins.mutate(id)?;
            }
            let report = verify(level, &pins);
            let mut text = String::new();
            for c in &report.criteria {
                writeln!(text, "{c}").unwrap();
            }
            let failed = report.failed();
            if failed.is_empty() {
                text.push_str("all criteria passed\n");
            } else {
                let ids: Vec<String> = failed.iter().map(|i| format!("criterion {i}")).collect();
                writeln!(text, "failed: {}", ids.join(", ")).unwrap();
            }
            let rendered = Rendered::new(text, "value", json!(report.passed()))
                .with("criteria", json!(report.criteria))
                .failed(!report.passed());
            emit("verify", Map::new(), rendered, &output)
        }
    }
}

fn emit(
    command: &str,
    params: Map<String, Value>,
    rendered: Rendered,
    output: &OutputArgs,
) -> Result<(i32, String)> {
    let body = match output.format {
        Format::Text => rendered.text,
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("command".into(), json!(command));
            obj.insert("params".into(), Value::Object(params));
            obj.extend(rendered.fields);
            format!("{}\n", Value::Object(obj))
        }
    };
    let code = if rendered.failed {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    };
    match &output.out {
        Some(path) => {
            std::fs::write(path, &body)
                .map_err(|e| Error::Parameter(format!("cannot write {}: {e}", path.display())))?;
            Ok((code, String::new()))
        }
        None => Ok((code, body)),
    }
}

fn flavor(star: bool) -> Flavor {
    if star {
        Flavor::Star
    } else {
        Flavor::Ordinary
    }
}

fn insert_opt(map: &mut Map<String, Value>, key: &str, value: Option<Value>) {
    if let Some(v) = value {
        map.insert(key.into(), v);
    }
}

fn multiplicities(ideal: &IdealArgs) -> Result<Multiplicities> {
    match (&ideal.mults, ideal.s, ideal.b) {
        (Some(m), _, _) => Multiplicities::new(ideal.a, m.clone()),
        (None, Some(s), Some(b)) => Multiplicities::uniform(s as usize, ideal.a, b),
        _ => Err(Error::Parameter("give --s and --b, or --mults".into())),
    }
}

fn uniform_from_ideal(ideal: &IdealArgs) -> Result<Option<UniformParams>> {
    match (ideal.s, ideal.b) {
        (Some(s), Some(b)) if ideal.mults.is_none() => Ok(Some(UniformParams::new(s, ideal.a, b)?)),
        _ => Ok(None),
    }
}

fn ideal_params(ideal: &IdealArgs) -> Map<String, Value> {
    let mut p = Map::new();
    match &ideal.mults {
        Some(m) => {
            p.insert("s".into(), json!(m.len()));
            p.insert("a".into(), json!(ideal.a));
            p.insert("mults".into(), json!(m));
        }
        None => {
            insert_opt(&mut p, "s", ideal.s.map(Value::from));
            p.insert("a".into(), json!(ideal.a));
            insert_opt(&mut p, "b", ideal.b.map(Value::from));
        }
    }
    p
}

fn uniform_of(u: &UniformArgs) -> Result<UniformParams> {
    UniformParams::new(u.s, u.a, u.b)
}

fn uniform_json(u: &UniformArgs) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("s".into(), json!(u.s));
    p.insert("a".into(), json!(u.a));
    p.insert("b".into(), json!(u.b));
    p
}

fn spec(u: &UniformArgs, sym: &SymbolicArgs) -> Result<SymbolicSpec> {
    let params = uniform_of(u)?;
    match sym.n {
        Some(n) => SymbolicSpec::with_ambient(params, sym.m, flavor(sym.star), n),
        None => SymbolicSpec::new(params, sym.m, flavor(sym.star)),
    }
}

fn spec_params(u: &UniformArgs, sym: &SymbolicArgs, r: Option<u32>) -> Map<String, Value> {
    let mut p = uniform_json(u);
    p.insert("m".into(), json!(sym.m));
    insert_opt(&mut p, "r", r.map(Value::from));
    p.insert("flavor".into(), json!(flavor(sym.star).to_string()));
    insert_opt(&mut p, "n", sym.n.map(Value::from));
    p
}

fn params_cmd(ideal: &IdealArgs) -> Result<Rendered> {
    let mult = multiplicities(ideal)?;
    let Some(p) = uniform_from_ideal(ideal)? else {
        let text = format!(
            "s = {}\na = {}\nmults = {:?}\ntotal = {}\n",
            mult.s(),
            mult.a(),
            mult.m(),
            mult.total()
        );
        return Ok(Rendered::new(
            text,
            "value",
            json!({ "s": mult.s(), "total": mult.total() }),
        ));
    };
    let text = format!(
        "s = {}\na = {}\nb = {}\nc0 = {}\nmu0 = {}\ndelta = {}\nsaturated: {}\nsetting: {}\n",
        p.s,
        p.a,
        p.b,
        p.c0,
        p.mu0,
        p.delta,
        p.saturated_regime(),
        p.in_setting()
    );
    Ok(Rendered::new(
        text,
        "value",
        json!({
            "c0": p.c0,
            "mu0": p.mu0,
            "delta": p.delta,
            "saturated": p.saturated_regime(),
            "setting": p.in_setting(),
        }),
    ))
}

fn gens_cmd(ideal: &IdealArgs, r: Option<u32>, cap: u64) -> Result<Rendered> {
    let mult = multiplicities(ideal)?;
    let gens = match r {
        Some(r) if r > 1 => {
            let base = fold_generators(&mult);
            let direct = fold_power(&mult, r)?;
            let product = base.power_capped(r, cap)?;
            if product != direct {
                return Err(Error::Precondition(
                    "power of generators disagrees with the fold formula".into(),
                ));
            }
            direct
        }
        Some(0) => return Err(Error::Parameter("r must be positive".into())),
        _ => fold_generators(&mult),
    };
    let mut text = String::new();
    for g in gens.gens() {
        writeln!(text, "{}", Monomial(g)).unwrap();
    }
    let list: Vec<&[u32]> = gens.gens().iter().map(|g| g.entries()).collect();
    Ok(Rendered::new(text, "value", json!(list)).with("count", json!(gens.len())))
}

fn betti_cmd(
    ideal: &IdealArgs,
    sym: &OptionalSymbolicArgs,
    mode: BettiMode,
    caps: &KoszulCaps,
) -> Result<Rendered> {
    let symmetric: Option<SymmetricIdeal> = match sym.m {
        Some(m) => {
            let params = uniform_from_ideal(ideal)?.ok_or_else(|| {
                Error::Parameter("symbolic powers need --s and --b, not --mults".into())
            })?;
            let spec = match sym.n {
                Some(n) => SymbolicSpec::with_ambient(params, m, flavor(sym.star), n)?,
                None => SymbolicSpec::new(params, m, flavor(sym.star))?,
            };
            Some(symbolic_power(&spec)?)
        }
        None => {
            let gens = fold_generators(&multiplicities(ideal)?);
            SymmetricIdeal::from_ideal(&gens).ok()
        }
    };
    let expanded: MonomialIdeal = match &symmetric {
        Some(s) => s.expand(),
        None => fold_generators(&multiplicities(ideal)?),
    };
    let shifted = symmetric.as_ref().is_some_and(is_symmetric_shifted);
    let mode = match mode {
        BettiMode::Auto if shifted => BettiMode::Closed,
        BettiMode::Auto => BettiMode::Quotients,
        m => m,
    };
    let (method, table): (&str, BettiTable) = match mode {
        BettiMode::Closed => {
            let s = symmetric.as_ref().ok_or_else(|| {
                Error::Precondition("closed formula needs a symmetric ideal".into())
            })?;
            ("closed", betti_closed(s)?.to_quotient())
        }
        BettiMode::Quotients => ("quotients", linear_quotients_resolution(&expanded)?.1),
        BettiMode::Search => {
            let order = search_linear_quotients_order(&expanded)?
                .ok_or(Error::NoLinearQuotients { index: 0 })?;
            ("search", order.betti()?)
        }
        BettiMode::Koszul => (
            "koszul",
            betti_koszul_oracle_capped(
                &expanded,
                expanded.s(),
                caps.matrix_cap,
                caps.multidegree_cap,
            )?,
        ),
        BettiMode::Auto => unreachable!(),
    };
    Ok(
        Rendered::new(table.render_text(), "table", json!(table.to_rows()))
            .with("convention", json!(table.convention()))
            .with("method", json!(method)),
    )
}

fn symbolic_render(sym: &SymmetricIdeal) -> Result<Rendered> {
    let count: BigUint = sym.generator_count();
    let a = alpha(sym)?;
    let mut text = format!("generators: {count}\nalpha: {a}\npartitions:\n");
    for l in sym.lambdas() {
        let parts: Vec<String> = l.entries().iter().map(u32::to_string).collect();
        writeln!(text, "  ({})  orbit {}", parts.join(","), l.orbit_size()).unwrap();
    }
    let lambdas: Vec<&[u32]> = sym.lambdas().iter().map(|l| l.entries()).collect();
    Ok(Rendered::new(text, "value", json!(lambdas))
        .with("generators", json!(count.to_string()))
        .with("alpha", json!(a)))
}

fn sweep_cmd(args: SweepArgs) -> Result<(i32, String)> {
    let checks = match &args.checks {
        Some(names) => names
            .iter()
            .map(|n| n.parse::<CheckName>())
            .collect::<Result<Vec<_>>>()?,
        None => CheckName::ALL.to_vec(),
    };
    let flavors = match args.flavor {
        FlavorArg::Ordinary => vec![Flavor::Ordinary],
        FlavorArg::Star => vec![Flavor::Star],
        FlavorArg::Both => vec![Flavor::Ordinary, Flavor::Star],
    };
    let config = SweepConfig {
        s: 1..=args.s,
        b: 1..=args.b,
        a: args.a.map(|a| a..=a),
        m: 1..=args.m,
        limits: crate::checks::CheckLimits {
            m_max: args.m_max,
            r_max: args.r_max,
        },
        flavors,
        checks,
        out: args.output.out.clone(),
        jobs: args.jobs,
        timing: args.timing,
    };
    let (summary, records) = match &config.out {
        Some(_) => (run_sweep(&config)?, String::new()),
        None => {
            let mut buf = Vec::new();
            let summary = sweep_to_writer(&config, &Default::default(), &mut buf)?;
            (summary, String::from_utf8(buf).expect("records are UTF-8"))
        }
    };
    let code = if summary.fail > 0 {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    };
    if config.out.is_none() {
        return Ok((code, records));
    }
    let body = match args.output.format {
        Format::Json => format!("{}\n", json!({ "command": "sweep", "value": summary })),
        Format::Text => format!(
            "written {} skipped {} pass {} fail {} out-of-regime {} resource-limit {}\n",
            summary.written,
            summary.skipped,
            summary.pass,
            summary.fail,
            summary.out_of_regime,
            summary.resource_limit
        ),
    };
    Ok((code, body))
}
