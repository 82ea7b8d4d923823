//! Reference fixtures: each entry names a computation and its expected result.

use minlist::code::ml_oracle;
use minlist::division::{decode_minimal, DecodeOptions};
use minlist::rational::{decode_rational, optimize_params, wu_params, Surd, TrialVerdict};
use minlist::wire::build_code;
use minlist::{DecodeOutcome, Polynomial, RSCode};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const BUNDLED: &str = include_str!("../fixtures/reference.json");

#[derive(Deserialize)]
struct Code {
    field: String,
    n: usize,
    k: usize,
    #[serde(default)]
    eval_points: Option<Vec<u32>>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Fixture {
    Encode {
        #[serde(flatten)]
        code: Code,
        msg: Vec<i64>,
        expect: EncodeExpect,
    },
    Decode {
        #[serde(flatten)]
        code: Code,
        symbols: Vec<u32>,
        methods: Vec<String>,
        #[serde(default)]
        beyond_johnson: bool,
        expect: DecodeExpect,
    },
    Params {
        #[serde(flatten)]
        code: Code,
        t: usize,
        k1: i64,
        k2: i64,
        expect: ParamsExpect,
    },
    Baseline {
        #[serde(flatten)]
        code: Code,
        t: usize,
        k1: i64,
        k2: i64,
        expect: BaselineExpect,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EncodeExpect {
    symbols: Vec<u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DecodeExpect {
    min_distance: usize,
    #[serde(default)]
    basis_degrees: Option<[usize; 2]>,
    messages: Vec<Vec<u32>>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct ParamsExpect {
    s: Option<i64>,
    n_constraints: Option<i64>,
    m1: Option<String>,
    m2: Option<String>,
    candidates: Option<Vec<[i64; 3]>>,
    candidate_ms: Option<Vec<i64>>,
    m: Option<i64>,
    rho: Option<i64>,
    u: Option<i64>,
    verdicts: Option<Vec<(i64, String)>>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct BaselineExpect {
    s: Option<i64>,
    m: Option<i64>,
    rho: Option<i64>,
    n_constraints: Option<i64>,
    u: Option<i64>,
}

#[derive(Serialize)]
struct Line {
    name: String,
    pass: bool,
    detail: String,
}

type Check = Result<(), String>;

fn field_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: Option<T>) -> Check {
    match want {
        Some(w) if w != got => Err(format!("{what}: got {got:?}, expected {w:?}")),
        _ => Ok(()),
    }
}

fn exact(s: &Surd) -> String {
    match s.as_ratio() {
        Some(r) if r.is_integer() => r.numer().to_string(),
        Some(r) => format!("{}/{}", r.numer(), r.denom()),
        None => s.to_string(),
    }
}

fn verdict_name(v: TrialVerdict) -> &'static str {
    match v {
        TrialVerdict::NoIntersection => "no_intersection",
        TrialVerdict::EmptyGap => "empty_gap",
        TrialVerdict::Feasible => "feasible",
    }
}

impl Code {
    fn build(&self) -> Result<RSCode, String> {
        build_code(&self.field, self.n, self.k, self.eval_points.as_deref()).map_err(|e| e.to_string())
    }
}

fn check_outcome(method: &str, out: &DecodeOutcome, e: &DecodeExpect) -> Check {
    let mut got: Vec<Vec<u32>> = out.messages.iter().map(Polynomial::values).collect();
    let mut want = e.messages.clone();
    got.sort();
    want.sort();
    field_eq(
        &format!("{method} min_distance"),
        out.min_distance,
        Some(e.min_distance),
    )?;
    field_eq(&format!("{method} messages"), got, Some(want))?;
    if method != "oracle" {
        field_eq(
            &format!("{method} basis_degrees"),
            out.basis_degrees.map(|(a, b)| [a, b]),
            e.basis_degrees.map(Some),
        )?;
    }
    Ok(())
}

fn check(f: &Fixture) -> Check {
    let err = |e: minlist::Error| e.to_string();
    match f {
        Fixture::Encode { code, msg, expect } => {
            let c = code.build()?;
            let m = Polynomial::from_ints(c.field(), msg);
            let w = c.encode(&m).map_err(err)?;
            field_eq("symbols", w.values(), Some(expect.symbols.clone()))
        }
        Fixture::Decode {
            code,
            symbols,
            methods,
            beyond_johnson,
            expect,
        } => {
            let c = code.build()?;
            let r = c.word(symbols).map_err(err)?;
            let opts = DecodeOptions {
                allow_beyond_johnson: *beyond_johnson,
                ..DecodeOptions::default()
            };
            if methods.is_empty() {
                return Err("no methods listed".into());
            }
            for m in methods {
                let out = match m.as_str() {
                    "division" => decode_minimal(&c, &r, &opts),
                    "rational" => decode_rational(&c, &r, &opts),
                    "oracle" => ml_oracle(&c, &r),
                    other => return Err(format!("unknown method {other:?}")),
                }
                .map_err(err)?;
                check_outcome(m, &out, expect)?;
            }
            Ok(())
        }
        Fixture::Params {
            code,
            t,
            k1,
            k2,
            expect: e,
        } => {
            let c = code.build()?;
            let p = optimize_params(&c, *t, *k1, *k2).map_err(err)?;
            field_eq("s", p.s, e.s)?;
            field_eq("n_constraints", p.n_constraints, e.n_constraints)?;
            field_eq("m1", p.m1.as_ref().map(exact), e.m1.clone().map(Some))?;
            field_eq("m2", p.m2.as_ref().map(exact), e.m2.clone().map(Some))?;
            let rows: Vec<[i64; 3]> = p.candidates.iter().map(|c| [c.m, c.rho, c.u]).collect();
            field_eq("candidates", rows, e.candidates.clone())?;
            let ms: Vec<i64> = p.candidates.iter().map(|c| c.m).collect();
            field_eq("candidate M", ms, e.candidate_ms.clone())?;
            field_eq("M", p.m, e.m)?;
            field_eq("rho", p.rho, e.rho)?;
            field_eq("U", p.u, e.u)?;
            for (s, want) in e.verdicts.iter().flatten() {
                let trial = p
                    .trials
                    .iter()
                    .find(|t| t.s == *s)
                    .ok_or_else(|| format!("no trial at s = {s}"))?;
                field_eq(
                    &format!("verdict at s = {s}"),
                    verdict_name(trial.verdict),
                    Some(want.as_str()),
                )?;
            }
            Ok(())
        }
        Fixture::Baseline {
            code,
            t,
            k1,
            k2,
            expect: e,
        } => {
            let c = code.build()?;
            let w = wu_params(&c, *t, *k1, *k2).map_err(err)?;
            field_eq("s", w.s, e.s)?;
            field_eq("M", w.m, e.m)?;
            field_eq("rho", w.rho, e.rho)?;
            field_eq("N", w.n_constraints, e.n_constraints)?;
            field_eq("U", w.u, e.u)
        }
    }
}

fn run_entry(i: usize, entry: &Value) -> Line {
    let name = entry
        .get("name")
        .and_then(Value::as_str)
        .map_or_else(|| format!("#{i}"), str::to_string);
    let result = serde_json::from_value::<Fixture>(entry.clone())
        .map_err(|e| format!("malformed fixture: {e}"))
        .and_then(|f| check(&f));
    Line {
        name,
        pass: result.is_ok(),
        detail: result.err().unwrap_or_default(),
    }
}

/// Runs every fixture in `text`, printing one line each. True when all pass.
pub fn run(text: &str, json: bool) -> bool {
    let lines: Vec<Line> = match serde_json::from_str::<Value>(text) {
        Ok(doc) => match doc.get("fixtures").and_then(Value::as_array) {
            Some(entries) => entries.iter().enumerate().map(|(i, e)| run_entry(i, e)).collect(),
            None => vec![Line {
                name: "fixtures".into(),
                pass: false,
                detail: "missing \"fixtures\" array".into(),
            }],
        },
        Err(e) => vec![Line {
            name: "fixtures".into(),
            pass: false,
            detail: format!("not JSON: {e}"),
        }],
    };
    for l in &lines {
        if json {
            println!("{}", serde_json::to_string(l).expect("serializable"));
        } else if l.pass {
            println!("PASS {}", l.name);
        } else {
            println!("FAIL {}: {}", l.name, l.detail);
        }
    }
    lines.iter().all(|l| l.pass)
}
