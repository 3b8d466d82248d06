use std::fmt::Write as _;

use cherncert::cone::{self, Assumption, GeneratorSet, NefMode, Outcome};
use cherncert::hrr;
use cherncert::rational::int;
use cherncert::symchern::{self, Partition};
use cherncert::varieties::{self, CorpusEntry, VarietyDescriptor};
use cherncert::{ChernFunctional, Convention, Error, Execution, Rational};
use serde_json::{json, Value};

use crate::config::Config;
use crate::render::{self, envelope, rat, rats};
use crate::{CertifyArgs, CheckArgs};

pub struct Context {
    pub json: bool,
    pub convention: Convention,
    pub max_dim: usize,
    pub config: Config,
}

pub struct Output {
    pub text: String,
    pub code: u8,
}

pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Consistency(_) => 3,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

type CliResult = Result<Output, CliError>;

fn check_dim(ctx: &Context, dim: i64) -> Result<usize, CliError> {
    if dim < 0 || dim as u64 > ctx.max_dim as u64 {
        return Err(CliError::usage(format!(
            "dimension {dim} outside 0..={}",
            ctx.max_dim
        )));
    }
    Ok(dim as usize)
}

fn ok(text: String) -> CliResult {
    Ok(Output { text, code: 0 })
}

pub fn chi(ctx: &Context, dim: i64) -> CliResult {
    let n = check_dim(ctx, dim)?;
    let table = hrr::chi_table_with(n, Execution::default())?;
    table.validate()?;
    let table = table.in_convention(ctx.convention);
    if ctx.json {
        let payload = serde_json::to_value(table.to_json()).map_err(internal)?;
        return ok(envelope("chi", n, ctx.convention, payload));
    }
    let mut s = format!("chi dim={n} convention={}\n", ctx.convention);
    for (p, row) in table.rows().iter().enumerate() {
        writeln!(s, "p={p}: {row}").unwrap();
    }
    ok(s)
}

pub fn schur(ctx: &Context, dim: i64, partition: Option<&str>) -> CliResult {
    let n = check_dim(ctx, dim)?;
    let parts = match partition {
        Some(text) => vec![Partition::parse(text, n)?],
        None => symchern::partitions_of(n),
    };
    let mut set = GeneratorSet::empty(n, ctx.convention);
    for a in &parts {
        let poly = symchern::schur(a, n)?;
        set.push(a.label(), ChernFunctional::from_poly(&poly, ctx.convention)?)?;
    }
    if ctx.json {
        let payload = serde_json::to_value(set.to_json()).map_err(internal)?;
        return ok(envelope("schur", n, ctx.convention, payload));
    }
    let mut s = format!("schur dim={n} convention={}\n", ctx.convention);
    for g in set.generators() {
        writeln!(s, "{}: {}", g.name, g.functional).unwrap();
    }
    ok(s)
}

enum Target {
    Chi(usize),
    Euler,
    Poly(String),
}

fn parse_target(spec: &str, n: usize) -> Result<Target, CliError> {
    let spec = spec.trim();
    if let Some(p) = spec.strip_prefix("chi:") {
        let p: usize = p
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad target {spec:?}")))?;
        if p > n {
            return Err(CliError::usage(format!("chi:{p} needs p <= {n}")));
        }
        Ok(Target::Chi(p))
    } else if spec == "euler" {
        Ok(Target::Euler)
    } else {
        Ok(Target::Poly(spec.to_string()))
    }
}

/// The functional named by `spec`, unsigned, in `ctx.convention`.
fn resolve_functional(ctx: &Context, spec: &str, n: usize) -> Result<ChernFunctional, CliError> {
    Ok(match parse_target(spec, n)? {
        Target::Chi(p) => hrr::chi_p(n, p)?.in_convention(ctx.convention),
        Target::Euler => hrr::euler_functional(n).in_convention(ctx.convention),
        Target::Poly(text) => ChernFunctional::parse(&text, n, ctx.convention)?,
    })
}

fn build_generators(
    ctx: &Context,
    n: usize,
    mode: NefMode,
    names: &[String],
) -> Result<GeneratorSet, CliError> {
    let mut builtin = vec![Assumption::Schur];
    let mut extra = Vec::new();
    for name in names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        match name.parse::<Assumption>() {
            Ok(Assumption::Schur) => {}
            Ok(a) => builtin.push(a),
            Err(_) => {
                let g = ctx
                    .config
                    .generators
                    .iter()
                    .find(|g| g.name == name)
                    .ok_or_else(|| CliError::usage(format!("unknown assumption {name:?}")))?;
                if g.dim != n {
                    return Err(CliError::usage(format!(
                        "generator {name:?} has dimension {}, not {n}",
                        g.dim
                    )));
                }
                extra.push((g.name.clone(), g.functional().map_err(CliError::usage)?));
            }
        }
    }
    let mut gens = cone::generators(n, mode.bundle(), &builtin)?;
    for (name, f) in extra {
        gens.push(name, f)?;
    }
    Ok(gens)
}

pub fn certify(ctx: &Context, args: &CertifyArgs) -> CliResult {
    let n = check_dim(ctx, args.dim)?;
    let mode: NefMode = args.mode.into();
    let gens = build_generators(ctx, n, mode, &args.assume)?;
    let (target, scale) = match parse_target(&args.target, n)? {
        Target::Chi(p) => cone::chi_target(n, p, mode)?,
        Target::Euler => {
            let signed = hrr::euler_functional(n)
                .scale(&mode.euler_sign(n))
                .in_convention(mode.bundle());
            (signed, int(1))
        }
        Target::Poly(text) => (
            ChernFunctional::parse(&text, n, ctx.convention)?.in_convention(mode.bundle()),
            int(1),
        ),
    };
    let outcome = cone::certify(&target, &gens)?;
    let shown = gens.in_convention(ctx.convention);
    let shown_target = target.in_convention(ctx.convention);
    let code = if outcome.is_certified() { 0 } else { 1 };

    if ctx.json {
        let mut payload = json!({
            "mode": mode.as_str(),
            "target": shown_target.to_poly().to_json(),
            "scale": rat(&scale),
            "generators": shown.to_json(),
        });
        let obj = payload.as_object_mut().expect("object literal");
        match &outcome {
            Outcome::Certified(c) => {
                obj.insert("status".into(), json!("certified"));
                obj.insert(
                    "certificate".into(),
                    serde_json::to_value(c.in_convention(ctx.convention).to_json(&shown))
                        .map_err(internal)?,
                );
            }
            Outcome::Infeasible(w) => {
                obj.insert("status".into(), json!("infeasible"));
                obj.insert(
                    "witness".into(),
                    serde_json::to_value(
                        w.in_convention(n, mode.bundle(), ctx.convention).to_json(n),
                    )
                    .map_err(internal)?,
                );
            }
        }
        return Ok(Output {
            text: envelope("certify", n, ctx.convention, payload),
            code,
        });
    }

    let mut s = format!(
        "certify dim={n} mode={mode} convention={}\ntarget: {shown_target}\nscale: {}\n",
        ctx.convention,
        rat(&scale)
    );
    match &outcome {
        Outcome::Certified(c) => {
            let c = c.in_convention(ctx.convention);
            s.push_str("status: certified\n");
            for (name, coef) in c.named_terms(&shown) {
                writeln!(s, "  {} * {}", rat(coef), name).unwrap();
            }
            if !c.residual.is_zero() {
                writeln!(s, "  residual: {}", c.residual).unwrap();
            }
        }
        Outcome::Infeasible(w) => {
            let w = w.in_convention(n, mode.bundle(), ctx.convention);
            s.push_str("status: infeasible\nwitness:\n");
            for e in w.to_json(n) {
                writeln!(s, "  {} = {}", e.monomial, rat(&e.value)).unwrap();
            }
        }
    }
    Ok(Output { text: s, code })
}

fn parse_variety(text: &str) -> Result<VarietyDescriptor, CliError> {
    let t = text.trim();
    if t.starts_with('{') {
        serde_json::from_str(t).map_err(|e| CliError::usage(format!("bad descriptor: {e}")))
    } else {
        Ok(VarietyDescriptor::parse_builtin(t)?)
    }
}

fn checked_variety_dim(ctx: &Context, v: &VarietyDescriptor) -> Result<usize, CliError> {
    check_dim(ctx, v.dim() as i64)
}

pub fn variety_eval(ctx: &Context, variety: &str, functional: Option<&str>) -> CliResult {
    let v = parse_variety(variety)?;
    let n = checked_variety_dim(ctx, &v)?;
    let numbers = varieties::chern_numbers_with(&v, ctx.convention, ctx.max_dim)?;
    let table = hrr::chi_table_with(n, Execution::default())?;
    let chi = varieties::chi_values(&v, &table)?;
    let euler = numbers.evaluate(&hrr::euler_functional(n))?;
    let value = functional
        .map(|spec| -> Result<Rational, CliError> {
            let f = resolve_functional(ctx, spec, n)?;
            Ok(numbers.evaluate(&f)?)
        })
        .transpose()?;
    let named = numbers.named();

    if ctx.json {
        let mut payload = json!({
            "descriptor": v,
            "chernNumbers": named
                .iter()
                .map(|(m, x)| json!({"monomial": m, "value": rat(x)}))
                .collect::<Vec<_>>(),
            "chi": rats(&chi),
            "euler": rat(&euler),
        });
        if let (Some(spec), Some(x)) = (functional, &value) {
            let obj = payload.as_object_mut().expect("object literal");
            obj.insert("functional".into(), json!({"spec": spec, "value": rat(x)}));
        }
        return ok(envelope("variety eval", n, ctx.convention, payload));
    }
    let mut s = format!("variety {v} dim={n} convention={}\n", ctx.convention);
    for (m, x) in &named {
        writeln!(s, "{m} = {}", rat(x)).unwrap();
    }
    writeln!(s, "chi: [{}]", render::rat_list(&chi)).unwrap();
    writeln!(s, "euler: {}", rat(&euler)).unwrap();
    if let (Some(spec), Some(x)) = (functional, &value) {
        writeln!(s, "{spec}: {}", rat(x)).unwrap();
    }
    ok(s)
}

pub fn check(ctx: &Context, args: &CheckArgs) -> CliResult {
    if let Some(corpus) = &args.corpus {
        return check_corpus(ctx, corpus);
    }
    let name = args
        .variety
        .as_deref()
        .ok_or_else(|| CliError::usage("check needs a variety or --corpus"))?;
    let v = if name.trim() == "surface" {
        match (args.c1sq, args.c2) {
            (Some(c1sq), Some(c2)) => VarietyDescriptor::Surface { c1sq, c2 },
            _ => return Err(CliError::usage("surface needs --c1sq and --c2")),
        }
    } else {
        if args.c1sq.is_some() || args.c2.is_some() {
            return Err(CliError::usage("--c1sq/--c2 only apply to surface"));
        }
        parse_variety(name)?
    };
    let mode: NefMode = args
        .mode
        .ok_or_else(|| CliError::usage("check needs --mode"))?
        .into();
    let n = checked_variety_dim(ctx, &v)?;
    let audit = varieties::check_signs_with(&v, mode, ctx.max_dim)?;
    let code = if audit.passes() { 0 } else { 1 };

    if ctx.json {
        let rows: Vec<Value> = (0..=n)
            .map(|p| {
                json!({
                    "p": p,
                    "chi": rat(&audit.chi[p]),
                    "signed": rat(&audit.signed[p]),
                    "pass": audit.pass_at(p),
                })
            })
            .collect();
        let payload = json!({
            "descriptor": v,
            "mode": mode.as_str(),
            "rows": rows,
            "pass": audit.passes(),
        });
        return Ok(Output {
            text: envelope("check", n, ctx.convention, payload),
            code,
        });
    }
    let mut s = format!("check {v} dim={n} mode={mode}\n");
    for p in 0..=n {
        writeln!(
            s,
            "p={p} chi={} signed={} {}",
            rat(&audit.chi[p]),
            rat(&audit.signed[p]),
            verdict(audit.pass_at(p))
        )
        .unwrap();
    }
    writeln!(s, "result: {}", verdict(audit.passes())).unwrap();
    Ok(Output { text: s, code })
}

fn check_corpus(ctx: &Context, source: &str) -> CliResult {
    let text = if source == "builtin" {
        varieties::BUILTIN_CORPUS.to_string()
    } else {
        std::fs::read_to_string(source)
            .map_err(|e| CliError::usage(format!("cannot read {source}: {e}")))?
    };
    let entries: Vec<CorpusEntry> = varieties::parse_corpus(&text)?;
    let results = varieties::replay_corpus(&entries, ctx.max_dim, Execution::default())?;
    let all_ok = results.iter().all(|r| r.ok());
    let code = if all_ok { 0 } else { 1 };
    let top = entries.iter().map(|e| e.descriptor.dim()).max().unwrap_or(0);

    if ctx.json {
        let items: Vec<Value> = results
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "euler": rat(&r.euler),
                    "chi": rats(&r.chi),
                    "signsPass": r.audit.as_ref().map(|a| a.passes()),
                    "mismatches": r.mismatches,
                    "ok": r.ok(),
                })
            })
            .collect();
        let payload = json!({ "entries": items, "pass": all_ok });
        return Ok(Output {
            text: envelope("check", top, ctx.convention, payload),
            code,
        });
    }
    let mut s = format!("corpus {source}: {} entries\n", results.len());
    for r in &results {
        let signs = match &r.audit {
            Some(a) => format!(" signs={}", verdict(a.passes())),
            None => String::new(),
        };
        writeln!(
            s,
            "{} {} euler={} chi=[{}]{signs}",
            if r.ok() { "ok  " } else { "FAIL" },
            r.name,
            rat(&r.euler),
            render::rat_list(&r.chi)
        )
        .unwrap();
        for m in &r.mismatches {
            writeln!(s, "     {m}").unwrap();
        }
    }
    writeln!(s, "result: {}", verdict(all_ok)).unwrap();
    Ok(Output { text: s, code })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn internal(e: serde_json::Error) -> CliError {
    CliError {
        message: e.to_string(),
        code: 3,
    }
}
