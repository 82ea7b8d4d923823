use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minlist::code::{corrupt, ml_oracle_with_budget, DEFAULT_ORACLE_BUDGET};
use minlist::division::{
    decode_minimal_reencoded_report, decode_minimal_report, reencode, DecodeOptions, Parametrization,
};
use minlist::rational::decode::decode_rational_report;
use minlist::rational::{optimize_params, wu_params, InterpParams, TrialVerdict, WuParams};
use minlist::wire::{build_code, levels_json, word_from_json, word_to_json, BasisJson, OutcomeJson, ParamsJson};
use minlist::{Error, Polynomial, RSCode, Word};
use rayon::prelude::*;
use serde::Serialize;

mod repro;

#[derive(Parser, Debug)]
#[command(name = "minlist", version, about = "Minimal list decoding of Reed-Solomon codes")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Field: `p:7`, `2^7` or `2^7:0b10000011`.
    #[arg(long, global = true)]
    field: Option<String>,
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true)]
    k: Option<usize>,
    /// Comma-separated evaluation points; default is the first n elements.
    #[arg(long, global = true, value_delimiter = ',')]
    eval_points: Option<Vec<u32>>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Division,
    Rational,
    Oracle,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Encode a message (coefficients, constant term first) into a word.
    Encode {
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        msg: Vec<i64>,
    },
    /// Add a seeded random error of exact weight to a word.
    Corrupt {
        #[command(flatten)]
        input: WordInput,
        /// Encode this message instead of reading a word.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with_all = ["word", "symbols"])]
        msg: Option<Vec<i64>>,
        #[arg(long)]
        weight: usize,
    },
    /// Decode a received word.
    Decode {
        #[command(flatten)]
        input: WordInput,
        #[arg(long, value_enum, default_value_t = Method::Division)]
        method: Method,
        /// Decode after re-encoding the last k positions to zero.
        #[arg(long)]
        reencode: bool,
        /// Last level to try.
        #[arg(long)]
        j_cap: Option<usize>,
        /// Allow radii at or past the Johnson bound (exhaustive search there).
        #[arg(long)]
        beyond_johnson: bool,
        /// Include the reduced basis in the output.
        #[arg(long)]
        dump_basis: bool,
        /// File of words, one JSON object per line; decoded in parallel.
        #[arg(long, conflicts_with_all = ["word", "symbols"])]
        batch: Option<String>,
    },
    /// Interpolation parameters for radius t and degree caps k1, k2.
    Params {
        #[arg(long)]
        t: usize,
        #[arg(long, allow_negative_numbers = true)]
        k1: i64,
        #[arg(long, allow_negative_numbers = true)]
        k2: i64,
    },
    /// Check the bundled reference fixtures.
    Repro {
        /// Fixture file to use instead of the bundled one.
        #[arg(long)]
        fixtures: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug, Clone)]
struct WordInput {
    /// Word JSON file, or `-` for stdin.
    #[arg(long)]
    word: Option<String>,
    /// Comma-separated symbols, with the code given by the global flags.
    #[arg(long, value_delimiter = ',', conflicts_with = "word")]
    symbols: Option<Vec<u32>>,
}

/// Errors carry their exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::RadiusCapExceeded { .. } => 3,
            Error::Infeasible(_) => 4,
            Error::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read_source(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))
    }
}

impl Global {
    fn code(&self) -> CliResult<RSCode> {
        let (Some(field), Some(n), Some(k)) = (&self.field, self.n, self.k) else {
            return Err(usage("--field, --n and --k are required"));
        };
        Ok(build_code(field, n, k, self.eval_points.as_deref())?)
    }

    fn seed(&self) -> CliResult<u64> {
        self.seed
            .ok_or_else(|| usage("--seed is required for randomized commands"))
    }
}

fn message(code: &RSCode, coeffs: &[i64]) -> CliResult<Polynomial> {
    let m = Polynomial::from_ints(code.field(), coeffs);
    code.check_message(&m)?;
    Ok(m)
}

fn read_word(g: &Global, input: &WordInput) -> CliResult<Word> {
    match (&input.word, &input.symbols) {
        (Some(path), _) => Ok(word_from_json(read_source(path)?.trim())?),
        (None, Some(sym)) => Ok(g.code()?.word(sym)?),
        (None, None) => Err(usage("give --word or --symbols")),
    }
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn fmt_poly(m: &[u32]) -> String {
    format!("[{}]", m.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
}

#[derive(Clone, Copy)]
struct DecodeFlags {
    method: Method,
    reencode: bool,
    dump_basis: bool,
}

#[derive(Serialize)]
struct AllJson {
    v: u32,
    method: &'static str,
    agree: bool,
    results: Vec<OutcomeJson>,
}

/// One decode. The result is the JSON value plus whether the methods agree.
fn decode_one(r: &Word, opts: &DecodeOptions, flags: DecodeFlags) -> CliResult<(serde_json::Value, bool)> {
    let code = r.code().clone();
    let run = |method: Method| -> CliResult<OutcomeJson> {
        let mut out = match method {
            Method::Division => {
                let rep = if flags.reencode {
                    decode_minimal_reencoded_report(&code, r, opts)?
                } else {
                    decode_minimal_report(&code, r, opts)?
                };
                OutcomeJson::new("division", &rep.outcome)
            }
            Method::Rational => {
                let param = if flags.reencode {
                    Parametrization::reencoded(&code, &reencode(&code, r)?, opts.basis)?
                } else {
                    Parametrization::direct(&code, r, opts.basis)?
                };
                let rep = decode_rational_report(&code, r, &param, opts)?;
                let mut o = OutcomeJson::new("rational", &rep.outcome);
                o.params = Some(levels_json(&rep));
                o
            }
            Method::Oracle => {
                let o = ml_oracle_with_budget(&code, r, DEFAULT_ORACLE_BUDGET)?;
                OutcomeJson::new("oracle", &o)
            }
            Method::All => unreachable!("expanded by the caller"),
        };
        if method != Method::Oracle {
            out.reencoded = flags.reencode;
            if flags.dump_basis {
                let param = if flags.reencode {
                    Parametrization::reencoded(&code, &reencode(&code, r)?, opts.basis)?
                } else {
                    Parametrization::direct(&code, r, opts.basis)?
                };
                out.basis = Some(BasisJson::new(&param.basis));
            }
        }
        Ok(out)
    };
    if flags.method != Method::All {
        let out = run(flags.method)?;
        return Ok((serde_json::to_value(out).expect("serializable"), true));
    }
    if code.message_count() > DEFAULT_ORACLE_BUDGET {
        return Err(usage(format!(
            "--method all needs q^k <= {DEFAULT_ORACLE_BUDGET}, this code has {}",
            code.message_count()
        )));
    }
    let results = vec![run(Method::Division)?, run(Method::Rational)?, run(Method::Oracle)?];
    let agree = results
        .windows(2)
        .all(|w| w[0].min_distance == w[1].min_distance && w[0].messages == w[1].messages);
    let all = AllJson {
        v: minlist::wire::SCHEMA_VERSION,
        method: "all",
        agree,
        results,
    };
    Ok((serde_json::to_value(all).expect("serializable"), agree))
}

fn print_outcome_text(v: &serde_json::Value) {
    let one = |o: &serde_json::Value| {
        let method = o["method"].as_str().unwrap_or("?");
        let re = if o["reencoded"].as_bool() == Some(true) {
            " (re-encoded)"
        } else {
            ""
        };
        println!("method: {method}{re}");
        println!("min_distance: {}", o["min_distance"]);
        if let Some(l) = o.get("level") {
            println!("level: {l}");
        }
        if let Some(b) = o.get("basis_degrees") {
            println!("basis degrees: {} {}", b[0], b[1]);
        }
        if let Some(levels) = o.get("params").and_then(|p| p.as_array()) {
            for l in levels {
                let mut line = format!(
                    "  j={} t={} k1={} k2={} {}",
                    l["j"],
                    l["t"],
                    l["k1"],
                    l["k2"],
                    l["route"].as_str().unwrap_or("")
                );
                if l.get("s").is_some() {
                    line += &format!(
                        " s={} M={} rho={} N={} U={} factors={}",
                        l["s"], l["m"], l["rho"], l["n_constraints"], l["unknowns"], l["factors"]
                    );
                }
                println!("{line}");
            }
        }
        if let Some(b) = o.get("basis") {
            println!("basis: {b}");
        }
        let msgs = o["messages"].as_array().cloned().unwrap_or_default();
        println!("messages ({}):", msgs.len());
        for m in msgs {
            let coeffs: Vec<u32> = serde_json::from_value(m).unwrap_or_default();
            println!("  {}", fmt_poly(&coeffs));
        }
    };
    if v["method"] == "all" {
        println!("agree: {}", v["agree"]);
        for o in v["results"].as_array().into_iter().flatten() {
            one(o);
        }
    } else {
        one(v);
    }
}

#[derive(Serialize)]
struct BatchError {
    v: u32,
    line: usize,
    exit_code: u8,
    error: String,
}

fn cmd_decode(
    g: &Global,
    input: &WordInput,
    opts: DecodeOptions,
    flags: DecodeFlags,
    batch: Option<&str>,
) -> CliResult<()> {
    if let Some(path) = batch {
        let text = read_source(path)?;
        let lines: Vec<(usize, &str)> = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()).collect();
        let rows: Vec<String> = lines
            .par_iter()
            .map(|&(i, l)| {
                let res = word_from_json(l.trim())
                    .map_err(Failure::from)
                    .and_then(|r| decode_one(&r, &opts, flags));
                match res {
                    Ok((v, _)) => serde_json::to_string(&v).expect("serializable"),
                    Err(f) => serde_json::to_string(&BatchError {
                        v: minlist::wire::SCHEMA_VERSION,
                        line: i + 1,
                        exit_code: f.code,
                        error: f.msg,
                    })
                    .expect("serializable"),
                }
            })
            .collect();
        for r in rows {
            println!("{r}");
        }
        return Ok(());
    }
    let r = read_word(g, input)?;
    let (v, agree) = decode_one(&r, &opts, flags)?;
    match g.output {
        Output::Json => println!("{}", serde_json::to_string(&v).expect("serializable")),
        Output::Text => print_outcome_text(&v),
    }
    if !agree {
        return Err(Failure {
            code: 1,
            msg: "methods disagree".into(),
        });
    }
    Ok(())
}

fn verdict(v: TrialVerdict) -> &'static str {
    match v {
        TrialVerdict::NoIntersection => "no intersection",
        TrialVerdict::EmptyGap => "no integer between roots",
        TrialVerdict::Feasible => "feasible",
    }
}

fn print_params_text(p: &InterpParams, wu: &std::result::Result<WuParams, Error>) {
    println!("t = {}, k1 = {}, k2 = {}, w = {}, k0 = {}", p.t, p.k1, p.k2, p.w, p.k0);
    println!("multiplicity window: s_l = {}, s_u = {}", p.s_l, p.s_u);
    println!("{:>4} {:>8} {:>14}  {:<28} verdict", "s", "N", "discriminant", "roots");
    for t in &p.trials {
        let roots = t.roots.map_or("-".to_string(), |(a, b)| format!("{a}, {b}"));
        println!(
            "{:>4} {:>8} {:>14}  {:<28} {}",
            t.s,
            t.n_constraints,
            t.discriminant,
            roots,
            verdict(t.verdict)
        );
    }
    let m1 = p.m1.map_or("-".into(), |m| m.to_string());
    let m2 = p.m2.map_or("unbounded".into(), |m| m.to_string());
    println!("s_min = {}, N = {}, M1 = {m1}, M2 = {m2}", p.s, p.n_constraints);
    println!("{:>6} {:>8} {:>8} {:>10}", "M", "rho", "U", "M*U");
    for c in &p.candidates {
        let mark = if c.m == p.m { "  <- optimum" } else { "" };
        println!("{:>6} {:>8} {:>8} {:>10}{mark}", c.m, c.rho, c.u, c.cost());
    }
    match wu {
        Ok(w) => println!(
            "closed-form baseline: s = {}, M = {}, rho = {}, N = {}, U = {}, M*U = {}",
            w.s,
            w.m,
            w.rho,
            w.n_constraints,
            w.u,
            w.cost()
        ),
        Err(e) => println!("closed-form baseline: n/a ({e})"),
    }
}

fn cmd_params(g: &Global, t: usize, k1: i64, k2: i64) -> CliResult<()> {
    let code = g.code()?;
    let p = optimize_params(&code, t, k1, k2)?;
    let wu = wu_params(&code, t, k1, k2);
    match g.output {
        Output::Json => print_json(&ParamsJson::new(&p, wu.as_ref().ok())),
        Output::Text => print_params_text(&p, &wu),
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    let g = &cli.global;
    match &cli.cmd {
        Command::Encode { msg } => {
            let code = g.code()?;
            let w = code.encode(&message(&code, msg)?)?;
            println!("{}", word_to_json(&w));
        }
        Command::Corrupt { input, msg, weight } => {
            let seed = g.seed()?;
            let w = match msg {
                Some(m) => {
                    let code = g.code()?;
                    code.encode(&message(&code, m)?)?
                }
                None => read_word(g, input)?,
            };
            println!("{}", word_to_json(&corrupt(&w, *weight, seed)?));
        }
        Command::Decode {
            input,
            method,
            reencode,
            j_cap,
            beyond_johnson,
            dump_basis,
            batch,
        } => {
            let opts = DecodeOptions {
                j_cap: *j_cap,
                allow_beyond_johnson: *beyond_johnson,
                ..DecodeOptions::default()
            };
            let flags = DecodeFlags {
                method: *method,
                reencode: *reencode,
                dump_basis: *dump_basis,
            };
            cmd_decode(g, input, opts, flags, batch.as_deref())?;
        }
        Command::Params { t, k1, k2 } => cmd_params(g, *t, *k1, *k2)?,
        Command::Repro { fixtures, json } => {
            let text = match fixtures {
                Some(path) => read_source(path)?,
                None => repro::BUNDLED.to_string(),
            };
            let json = *json || g.output == Output::Json;
            if !repro::run(&text, json) {
                return Err(Failure {
                    code: 1,
                    msg: "some fixtures failed".into(),
                });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
