use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use liebranch_core::branching::{self, expand_rule, Reading, RuleReport};
use liebranch_core::characters::{multiplicity_of, Budget, Decomposition};
use liebranch_core::data::{DataStore, Session};
use liebranch_core::embeddings::{catalog_for, HWeight};
use liebranch_core::rootsys::{format_weight, parse_weight, RootSystem, TypeSpec};
use liebranch_core::sphericity::{
    self, build_setup, dense_orbit_test, translate_rank, Method, MethodChoice, ModPolicy, Policy, SphericityVerdict,
    Verdict,
};
use liebranch_core::{linalg, Error};
use rayon::prelude::*;
use serde_json::{json, Value};

const SCHEMA: u32 = 1;

const GRAMMAR: &str = "\
Types: simple factors joined by `x`, a central torus as `T1`: E6, A5xA1, D5xT1.
Weights of G: `3w1+w2`; weights of H: `2l3+l1`; either as a tuple `(3,1,0,0)`.
A target of `mult` may carry a central charge: `l1@-1`.
Nodes are numbered 1..rank in Bourbaki order.

Exit codes: 0 ok, 2 bad input, 3 unsupported triple, 4 budget exceeded,
5 internal consistency failure.";

#[derive(Parser)]
#[command(
    name = "liebranch",
    version,
    about = "Spherical flag varieties and branching rules for exceptional groups"
)]
#[command(after_help = GRAMMAR)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Opts {
    /// Seed for every randomised test.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random samples per triple.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Prime for modular ranks: a prime, `auto` (rank >= 8 only) or `off`.
    #[arg(long = "mod-prime", global = true, default_value = "auto", value_parser = parse_mod)]
    mod_prime: ModPolicy,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Lift the dimension ceiling on character computations.
    #[arg(long = "enable-heavy", global = true)]
    enable_heavy: bool,
    /// Largest degree k for rule verification (default 5 for G2, 3 for F4, 2 otherwise).
    #[arg(long, global = true)]
    kmax: Option<u32>,
    /// Directory of `*.emb` embedding files and `*.txt` rule files replacing the built-in data.
    #[arg(long, global = true, env = "LIEBRANCH_DATA")]
    data: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    NModule,
    GenericTranslate,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide sphericity of G/P_i for every catalogued subgroup and node.
    Classify { group: String },
    /// Expand the rule for res V_{k w_i}, optionally checking it against the characters.
    Branch {
        group: String,
        subgroup: String,
        node: usize,
        k: u32,
        #[arg(long)]
        verify: bool,
        /// Rule variant; defaults to the corrected row where one exists.
        #[arg(long)]
        variant: Option<String>,
        /// Decompose directly when no rule is recorded.
        #[arg(long)]
        force: bool,
    },
    /// Decide sphericity of one triple.
    Spherical {
        group: String,
        subgroup: String,
        node: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// dim G/P_i for every node and dim B_H for the catalogued subgroups.
    Dims { group: String },
    /// Multiplicity of one irreducible of H in res V_lambda.
    Mult {
        group: String,
        subgroup: String,
        lambda: String,
        target: String,
    },
    /// Verify every recorded rule up to the default (or --kmax) degree.
    Verify {
        /// Also check every other variant (printed rows, proof forms) and report them.
        #[arg(long)]
        all_variants: bool,
    },
}

fn parse_mod(s: &str) -> std::result::Result<ModPolicy, String> {
    match s {
        "auto" => Ok(ModPolicy::Auto),
        "off" => Ok(ModPolicy::Off),
        p => p
            .parse()
            .map(ModPolicy::Prime)
            .map_err(|_| format!("expected a prime, `auto` or `off`, got `{p}`")),
    }
}

/// A finished command: its JSON report, text rendering and exit code.
struct Outcome {
    json: Value,
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Outcome { json, text, code: 0 }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::UnsupportedTriple(_) | Error::NotSpherical(_)) => 3,
        Some(Error::BudgetExceeded(_)) => 4,
        Some(Error::Consistency(_) | Error::NotNilpotent(_) | Error::NotSubalgebra) => 5,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.opts.format;
    match run(&cli) {
        Ok(out) => {
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&out.json).expect("json"))
                }
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            let code = exit_code(&e);
            if format == Format::Json {
                let v = json!({"schema": SCHEMA, "error": {"code": code, "message": format!("{e:#}")}});
                println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let o = &cli.opts;
    if let ModPolicy::Prime(p) = o.mod_prime {
        if !linalg::is_prime(p) {
            return Err(Error::NonPrimeModulus(p).into());
        }
    }
    let data = match &o.data {
        Some(dir) => DataStore::from_dir(dir).with_context(|| format!("loading data from {}", dir.display()))?,
        None => DataStore::builtin()?,
    };
    let s = Session::new(data);
    let mut out = match &cli.cmd {
        Cmd::Classify { group } => classify(&s, o, &ty(group)?),
        Cmd::Branch {
            group,
            subgroup,
            node,
            k,
            verify,
            variant,
            force,
        } => branch(
            &s,
            o,
            &ty(group)?,
            &ty(subgroup)?,
            *node,
            *k,
            *verify,
            variant.as_deref(),
            *force,
        ),
        Cmd::Spherical {
            group,
            subgroup,
            node,
            method,
        } => spherical(&s, o, &ty(group)?, &ty(subgroup)?, *node, *method),
        Cmd::Dims { group } => dims(&ty(group)?),
        Cmd::Mult {
            group,
            subgroup,
            lambda,
            target,
        } => mult(&s, o, &ty(group)?, &ty(subgroup)?, lambda, target),
        Cmd::Verify { all_variants } => verify(&s, o, *all_variants),
    }?;
    if let Value::Object(m) = &mut out.json {
        m.insert("schema".into(), json!(SCHEMA));
    }
    Ok(out)
}

fn ty(s: &str) -> Result<TypeSpec> {
    Ok(s.parse::<TypeSpec>()?)
}

fn policy(o: &Opts, method: MethodChoice) -> Policy {
    Policy {
        trials: o.trials as usize,
        seed: o.seed,
        method,
        modulus: o.mod_prime,
    }
}

fn budget(o: &Opts) -> Budget {
    if o.enable_heavy {
        Budget::unlimited()
    } else {
        Budget::default()
    }
}

/// Verification up to the default degree is never gated.
fn verify_budget(o: &Opts, g: &TypeSpec, k: u32) -> Budget {
    if k <= default_kmax(g) {
        Budget::unlimited()
    } else {
        budget(o)
    }
}

fn hweight_text(h: &RootSystem, w: &HWeight) -> String {
    let base = format_weight(&w.weight, 'l');
    if h.n_tori() > 0 {
        format!("{base}@{}", w.charge)
    } else {
        base
    }
}

fn hweight_json(w: &HWeight) -> Value {
    json!({"weight": format_weight(&w.weight, 'l'), "coords": w.weight.0.to_vec(), "charge": w.charge})
}

fn decomposition_json(d: &Decomposition) -> Value {
    d.iter()
        .map(|(w, m)| {
            let mut v = hweight_json(w);
            v["mult"] = json!(m);
            v
        })
        .collect()
}

fn decomposition_text(h: &RootSystem, d: &Decomposition) -> String {
    if d.is_empty() {
        return "0".into();
    }
    d.iter()
        .map(|(w, m)| {
            let s = format!("V({})", hweight_text(h, w));
            if *m == 1 {
                s
            } else {
                format!("{m} {s}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn witness_text(v: &SphericityVerdict) -> Option<String> {
    let w = v.witness.as_ref()?;
    let mut out = String::new();
    for (j, t) in w.iter().enumerate() {
        let sign = match (j, t.coeff < 0) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out += &format!("{sign}{}*X_-{}", t.coeff.abs(), t.root);
    }
    Some(out)
}

fn verdict_json(v: &SphericityVerdict) -> Value {
    serde_json::to_value(v).expect("verdict serialises")
}

/// Re-checks a positive verdict from its recorded witness.
fn recheck(s: &Session, v: &SphericityVerdict) -> liebranch_core::Result<bool> {
    let Some(w) = &v.witness else {
        return Ok(v.verdict != Verdict::Spherical);
    };
    let e = s.embedding(&v.g, &v.h)?;
    let coords = |roots: Vec<liebranch_core::rootsys::RootVector>| -> Vec<i64> {
        roots
            .iter()
            .map(|r| w.iter().find(|t| &t.root == r).map_or(0, |t| t.coeff))
            .collect()
    };
    match v.method {
        Method::NModule => {
            let setup = build_setup(e, v.node)?;
            let x = setup.element(&coords(setup.n_roots()));
            dense_orbit_test(&setup, &x)
        }
        Method::GenericTranslate => {
            let roots: Vec<_> = e
                .g()
                .positive_roots()
                .iter()
                .filter(|r| r.0[v.node - 1] != 0)
                .cloned()
                .collect();
            let n = roots.len();
            Ok(translate_rank(&e, v.node, &coords(roots), v.modulus)? == n)
        }
        _ => Ok(false),
    }
}

fn symbol(v: Verdict) -> &'static str {
    match v {
        Verdict::Spherical => "S",
        Verdict::NotSpherical => "x",
        Verdict::DimensionPruned => ".",
        Verdict::TypeOnlyUndecided => "?",
    }
}

fn classify(s: &Session, o: &Opts, g: &TypeSpec) -> Result<Outcome> {
    let p = policy(o, MethodChoice::Auto);
    let verdicts = sphericity::classify(s, g, &p)?;
    let rank = RootSystem::new(g).rank();

    let mut problems = Vec::new();
    for v in verdicts.iter().filter(|v| v.is_spherical()) {
        if !recheck(s, v)? {
            problems.push(format!("{}/{} P{}: witness does not recheck", v.h, v.g, v.node));
        }
    }
    let spherical: BTreeSet<(String, usize)> = verdicts
        .iter()
        .filter(|v| v.is_spherical())
        .map(|v| (v.h.to_string(), v.node))
        .collect();
    let ruled: BTreeSet<(String, usize)> = s
        .data()
        .rules
        .iter()
        .filter(|r| &r.g == g)
        .map(|r| (r.h.to_string(), r.node))
        .collect();
    for (h, i) in ruled.difference(&spherical) {
        problems.push(format!(
            "{g}/{h} P{i} has a multiplicity-free rule but was not found spherical"
        ));
    }

    let mut text = format!(
        "{g}: {} spherical of {} (seed {}, {} trials)\n\n",
        spherical.len(),
        verdicts.len(),
        o.seed,
        o.trials
    );
    let width = catalog_for(g)
        .iter()
        .map(|e| e.h.to_string().len())
        .max()
        .unwrap_or(1)
        .max(2);
    text += &format!("{:width$} ", "H");
    for i in 1..=rank {
        text += &format!(" P{i}");
    }
    text.push('\n');
    for e in catalog_for(g) {
        text += &format!("{:width$} ", e.h.to_string());
        for v in verdicts.iter().filter(|v| v.h == e.h) {
            text += &format!(" {:>2}", symbol(v.verdict));
        }
        text.push('\n');
    }
    text += "\nS spherical, x not spherical (sampled), . dim B_H < dim G/P, ? type only\n";
    for v in verdicts.iter().filter(|v| v.is_spherical()) {
        let m = serde_json::to_value(v.method).expect("method");
        text += &format!("\n{}/{} P{} [{}]", v.g, v.h, v.node, m.as_str().unwrap_or(""));
        if let Some(w) = witness_text(v) {
            text += &format!("\n  witness {w}");
        }
    }
    text.push('\n');
    for p in &problems {
        text += &format!("consistency: {p}\n");
    }

    let json = json!({
        "command": "classify",
        "group": g.to_string(),
        "seed": o.seed,
        "trials": o.trials,
        "verdicts": verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
        "spherical": spherical.iter().map(|(h, i)| json!({"h": h, "node": i})).collect::<Vec<_>>(),
        "consistency": {"ok": problems.is_empty(), "problems": problems},
    });
    let code = if problems.is_empty() { 0 } else { 5 };
    Ok(Outcome { json, text, code })
}

#[allow(clippy::too_many_arguments)]
fn branch(
    s: &Session,
    o: &Opts,
    g: &TypeSpec,
    h: &TypeSpec,
    node: usize,
    k: u32,
    verify: bool,
    variant: Option<&str>,
    force: bool,
) -> Result<Outcome> {
    RootSystem::new(g).check_node(node)?;
    let known = branching::variants(s, g, h, node);
    if known.is_empty() {
        if !force {
            return Err(Error::UnsupportedTriple(format!(
                "no rule for {g}/{h} at node {node}; pass --force to decompose directly"
            ))
            .into());
        }
        let e = s.embedding(g, h)?;
        let lambda = e.g().fundamental(node)?.scale(k as i32);
        let d = liebranch_core::characters::decompose(&e, &lambda, budget(o))?;
        let text = format!(
            "{g} > {h}, node {node}, k = {k} (no rule; direct decomposition)\nres V({}) = {}\n",
            format_weight(&lambda, 'w'),
            decomposition_text(e.h(), &d)
        );
        let json = json!({
            "command": "branch", "g": g.to_string(), "h": h.to_string(), "node": node, "k": k,
            "variant": Value::Null, "decomposition": decomposition_json(&d),
        });
        return Ok(Outcome::ok(json, text));
    }
    let variant = match variant {
        Some(v) => v.to_string(),
        None => branching::reference_variant(s, g, h, node),
    };
    let row = branching::find_row(s, g, h, node, &variant)?;
    let e = s.embedding(g, h)?;
    let gs = branching::generators_from_row(row, &e)?;
    let exp = expand_rule(&gs, k);

    let mut text = format!("{g} > {h}, node {node}, k = {k} (variant {variant})\ngenerators:");
    for gen in &gs.generators {
        text += &format!(" [{}] {}", gen.degree, hweight_text(e.h(), &gen.weight));
    }
    text += &format!("\nrule: {}\n", decomposition_text(e.h(), &exp.decomposition));
    if exp.merged {
        text += "warning: two monomials share a highest weight\n";
    }
    let mut json = json!({
        "command": "branch", "g": g.to_string(), "h": h.to_string(), "node": node, "k": k,
        "variant": variant,
        "generators": gs.generators.iter().map(|x| {
            let mut v = hweight_json(&x.weight);
            v["degree"] = json!(x.degree);
            v
        }).collect::<Vec<_>>(),
        "decomposition": decomposition_json(&exp.decomposition),
        "merged": exp.merged,
    });
    let mut code = 0;
    if verify {
        let rep = branching::verify_rule_at(s, g, h, node, &[k], &variant, verify_budget(o, g, k))?;
        text += &format!("verify: {}\n", report_status(&rep));
        json["verify"] = report_json(&rep);
        if !rep.matches() {
            code = 5;
            for d in &rep.degrees {
                for x in &d.direct_diff {
                    text += &format!(
                        "  {}: rule {} computed {}\n",
                        hweight_text(e.h(), &x.weight),
                        x.expected,
                        x.actual
                    );
                }
            }
        }
    }
    Ok(Outcome { json, text, code })
}

fn report_status(r: &RuleReport) -> String {
    match (r.matches(), r.reading) {
        (true, Some(Reading::Direct)) => "match (V_{k w_i})".into(),
        (true, Some(Reading::Dual)) => "match (V_{k w_i*})".into(),
        _ => {
            let bad: Vec<String> = r
                .degrees
                .iter()
                .filter(|d| !d.direct_match && !d.dual_match || d.merged)
                .map(|d| d.k.to_string())
                .collect();
            format!("MISMATCH at k = {}", bad.join(","))
        }
    }
}

fn report_json(r: &RuleReport) -> Value {
    let diffs = |d: &[branching::DiffEntry]| -> Value {
        d.iter()
            .map(|x| {
                let mut v = hweight_json(&x.weight);
                v["expected"] = json!(x.expected);
                v["actual"] = json!(x.actual);
                v
            })
            .collect()
    };
    json!({
        "g": r.g.to_string(), "h": r.h.to_string(), "node": r.node, "variant": r.variant,
        "matches": r.matches(),
        "reading": r.reading,
        "degrees": r.degrees.iter().map(|d| json!({
            "k": d.k, "merged": d.merged,
            "direct_match": d.direct_match, "dual_match": d.dual_match,
            "direct_diff": diffs(&d.direct_diff), "dual_diff": diffs(&d.dual_diff),
        })).collect::<Vec<_>>(),
    })
}

fn spherical(s: &Session, o: &Opts, g: &TypeSpec, h: &TypeSpec, node: usize, method: MethodArg) -> Result<Outcome> {
    let catalogued = catalog_for(g).iter().any(|e| &e.h == h) || s.data().embedding_data(g, h).is_some();
    if !catalogued {
        return Err(Error::UnsupportedTriple(format!("{h} in {g} is neither catalogued nor supplied")).into());
    }
    let m = match method {
        MethodArg::Auto => MethodChoice::Auto,
        MethodArg::NModule => MethodChoice::NModule,
        MethodArg::GenericTranslate => MethodChoice::GenericTranslate,
    };
    let v = sphericity::decide(s, g, h, node, &policy(o, m))?;
    let method = serde_json::to_value(v.method).expect("method");
    let confidence = serde_json::to_value(v.confidence).expect("confidence");
    let mut text = format!(
        "{g}/{h} P{node}: {} [{}, {}]\n  dim B_H = {}, dim G/P = {}\n",
        v.verdict,
        method.as_str().unwrap_or(""),
        confidence.as_str().unwrap_or(""),
        v.borel_dim,
        v.flag_dim
    );
    if let Some(t) = v.target {
        text += &format!("  ranks {:?} of {t}\n", v.ranks);
    }
    if let Some(w) = witness_text(&v) {
        let what = if v.method == Method::NModule { "X" } else { "n" };
        text += &format!("  witness {what} = {w}\n");
    }
    let mut json = verdict_json(&v);
    json["command"] = json!("spherical");
    Ok(Outcome::ok(json, text))
}

fn dims(g: &TypeSpec) -> Result<Outcome> {
    let rs = RootSystem::new(g);
    let flags: Vec<usize> = (1..=rs.rank())
        .map(|i| rs.flag_dimension(i))
        .collect::<liebranch_core::Result<_>>()?;
    let borel: Vec<(String, usize)> = catalog_for(g)
        .into_iter()
        .map(|e| (e.h.to_string(), RootSystem::new(&e.h).borel_dimension()))
        .collect();
    let mut text = format!(
        "{g}: dim G = {}, dim B = {}\ndim G/P_i: {}\n",
        rs.algebra_dimension(),
        rs.borel_dimension(),
        flags.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
    );
    if !borel.is_empty() {
        text += "dim B_H:\n";
        let w = borel.iter().map(|(h, _)| h.len()).max().unwrap_or(0);
        for (h, d) in &borel {
            text += &format!("  {h:w$}  {d}\n");
        }
    }
    let json = json!({
        "command": "dims",
        "group": g.to_string(),
        "dim": rs.algebra_dimension(),
        "borel_dim": rs.borel_dimension(),
        "flag_dims": flags,
        "subgroup_borel_dims": borel.iter().map(|(h, d)| json!({"h": h, "borel_dim": d})).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(json, text))
}

fn mult(s: &Session, o: &Opts, g: &TypeSpec, h: &TypeSpec, lambda: &str, target: &str) -> Result<Outcome> {
    let e = s.embedding(g, h)?;
    let lam = parse_weight(lambda, e.g().rank())?;
    e.g().check_dominant(&lam)?;
    let (tw, charge) = match target.split_once('@') {
        Some((w, c)) => (
            w,
            c.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidWeight(format!("bad charge in `{target}`")))?,
        ),
        None => (target, 0),
    };
    let tgt = HWeight {
        weight: parse_weight(tw, e.h().rank())?,
        charge,
    };
    let m = multiplicity_of(&e, &lam, &tgt, budget(o))?;
    let text = format!(
        "[res V({}) : V({})] = {m}\n",
        format_weight(&lam, 'w'),
        hweight_text(e.h(), &tgt)
    );
    let json = json!({
        "command": "mult", "g": g.to_string(), "h": h.to_string(),
        "lambda": format_weight(&lam, 'w'), "target": hweight_json(&tgt), "multiplicity": m,
    });
    Ok(Outcome::ok(json, text))
}

fn default_kmax(g: &TypeSpec) -> u32 {
    match g.to_string().as_str() {
        "G2" => 5,
        "F4" => 3,
        _ => 2,
    }
}

fn verify(s: &Session, o: &Opts, all_variants: bool) -> Result<Outcome> {
    let mut triples: Vec<(TypeSpec, TypeSpec, usize)> = s
        .data()
        .rules
        .iter()
        .map(|r| (r.g.clone(), r.h.clone(), r.node))
        .collect();
    triples.sort_by_key(|(g, h, i)| (g.to_string(), h.to_string(), *i));
    triples.dedup();
    let jobs: Vec<(TypeSpec, TypeSpec, usize, String, bool)> = triples
        .iter()
        .flat_map(|(g, h, i)| {
            let reference = branching::reference_variant(s, g, h, *i);
            let mut v = vec![(g.clone(), h.clone(), *i, reference.clone(), true)];
            if all_variants {
                for x in branching::variants(s, g, h, *i).into_iter().filter(|x| *x != reference) {
                    v.push((g.clone(), h.clone(), *i, x, false));
                }
            }
            v
        })
        .collect();
    let reports: Vec<(RuleReport, bool)> = jobs
        .par_iter()
        .map(|(g, h, i, var, reference)| {
            let k = o.kmax.unwrap_or_else(|| default_kmax(g));
            branching::verify_rule(s, g, h, *i, k, var, verify_budget(o, g, k)).map(|r| (r, *reference))
        })
        .collect::<liebranch_core::Result<_>>()?;
    let failed = reports
        .iter()
        .filter(|(r, reference)| *reference && !r.matches())
        .count();
    let mut text = String::new();
    for (r, reference) in &reports {
        let kmax = r.degrees.last().map_or(0, |d| d.k);
        text += &format!(
            "{:>3} {}/{} P{} {} k<={}: {}\n",
            if *reference { "" } else { "  -" },
            r.g,
            r.h,
            r.node,
            r.variant,
            kmax,
            report_status(r)
        );
    }
    let refs = reports.iter().filter(|(_, x)| *x).count();
    text += &format!("{} of {refs} reference rules verified\n", refs - failed);
    let json = json!({
        "command": "verify",
        "reports": reports.iter().map(|(r, reference)| {
            let mut v = report_json(r);
            v["reference"] = json!(reference);
            v
        }).collect::<Vec<_>>(),
        "failed": failed,
    });
    Ok(Outcome {
        json,
        text,
        code: if failed == 0 { 0 } else { 5 },
    })
}
