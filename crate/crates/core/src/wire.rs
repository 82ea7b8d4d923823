//! JSON forms of words, outcomes, bases and parameter tables.
//!
//! Field elements are written as their canonical integers: residues for
//! prime fields, coefficient bit-vectors for GF(2^m). Polynomials are
//! coefficient lists, constant term first. Every top-level object carries
//! `"v": 1`.

use serde::{Deserialize, Serialize};

use crate::code::{DecodeOutcome, RSCode, Word};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::groebner::GroebnerPair;
use crate::poly::Polynomial;
use crate::rational::decode::{LevelRoute, RationalReport};
use crate::rational::params::{InterpParams, Surd, TrialVerdict, WuParams};

pub const SCHEMA_VERSION: u32 = 1;

fn check_version(v: u32) -> Result<()> {
    if v != SCHEMA_VERSION {
        return Err(Error::Parse(format!("unsupported schema version {v}")));
    }
    Ok(())
}

/// Explicit points only when they differ from the first `n` elements.
fn points_if_custom(code: &RSCode) -> Option<Vec<u32>> {
    let default: Vec<Elem> = code.field().elements().take(code.n()).collect();
    (code.eval_points() != default.as_slice()).then(|| code.eval_points().iter().map(|x| x.value()).collect())
}

pub fn build_code(field: &str, n: usize, k: usize, eval_points: Option<&[u32]>) -> Result<RSCode> {
    let f = Field::parse(field)?;
    match eval_points {
        None => RSCode::new(&f, n, k),
        Some(pts) => {
            if pts.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: pts.len(),
                });
            }
            let pts = pts.iter().map(|&v| f.elem(v)).collect::<Result<Vec<_>>>()?;
            RSCode::with_points(&f, k, pts)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub v: u32,
    pub field: String,
    pub n: usize,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eval_points: Option<Vec<u32>>,
    pub symbols: Vec<u32>,
}

impl WordJson {
    pub fn from_word(w: &Word) -> Self {
        let code = w.code();
        Self {
            v: SCHEMA_VERSION,
            field: code.field().spec().to_string(),
            n: code.n(),
            k: code.k(),
            eval_points: points_if_custom(code),
            symbols: w.values(),
        }
    }

    pub fn code(&self) -> Result<RSCode> {
        check_version(self.v)?;
        build_code(&self.field, self.n, self.k, self.eval_points.as_deref())
    }

    pub fn to_word(&self) -> Result<Word> {
        self.code()?.word(&self.symbols)
    }
}

pub fn word_to_json(w: &Word) -> String {
    serde_json::to_string(&WordJson::from_word(w)).expect("serializable")
}

pub fn word_from_json(text: &str) -> Result<Word> {
    let wj: WordJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    wj.to_word()
}

/// Interpolation details of one level of the rational route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelJson {
    pub j: usize,
    pub t: usize,
    pub k1: i64,
    pub k2: usize,
    /// `direct`, `interpolation` or `exhaustive`.
    pub route: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_constraints: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unknowns: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<usize>,
}

pub fn levels_json(report: &RationalReport) -> Vec<LevelJson> {
    report
        .levels
        .iter()
        .map(|l| {
            let mut out = LevelJson {
                j: l.level.j,
                t: l.level.t,
                k1: l.level.k1,
                k2: l.level.k2,
                route: String::new(),
                s: None,
                m: None,
                rho: None,
                n_constraints: None,
                unknowns: None,
                factors: None,
            };
            match &l.route {
                LevelRoute::Direct => out.route = "direct".into(),
                LevelRoute::Exhaustive { .. } => out.route = "exhaustive".into(),
                LevelRoute::Interpolation { params, factors, .. } => {
                    out.route = "interpolation".into();
                    out.s = Some(params.s);
                    out.m = Some(params.m);
                    out.rho = Some(params.rho);
                    out.n_constraints = Some(params.n_constraints);
                    out.unknowns = Some(params.u);
                    out.factors = Some(factors.len());
                }
            }
            out
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeJson {
    pub v: u32,
    pub method: String,
    #[serde(default)]
    pub reencoded: bool,
    pub min_distance: usize,
    pub messages: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_degrees: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<LevelJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<BasisJson>,
}

impl OutcomeJson {
    pub fn new(method: &str, out: &DecodeOutcome) -> Self {
        Self {
            v: SCHEMA_VERSION,
            method: method.to_string(),
            reencoded: false,
            min_distance: out.min_distance,
            messages: out.messages.iter().map(|m| m.values()).collect(),
            level: out.search_level,
            basis_degrees: out.basis_degrees.map(|(a, b)| [a, b]),
            params: None,
            basis: None,
        }
    }

    pub fn messages(&self, field: &Field) -> Result<Vec<Polynomial>> {
        self.messages
            .iter()
            .map(|m| Polynomial::from_values(field, m))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub v: u32,
    pub order: String,
    pub ell: [usize; 2],
    /// `[[g1 first component], [g1 second component]]`.
    pub g1: [Vec<u32>; 2],
    pub g2: [Vec<u32>; 2],
}

impl BasisJson {
    pub fn new(b: &GroebnerPair) -> Self {
        Self {
            v: SCHEMA_VERSION,
            order: b.order.to_string(),
            ell: [b.ell1, b.ell2],
            g1: [b.g1.f1.values(), b.g1.f2.values()],
            g2: [b.g2.f1.values(), b.g2.f2.values()],
        }
    }
}

/// An exact real from the optimizer: text form plus an approximation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealJson {
    pub exact: String,
    pub approx: f64,
}

impl RealJson {
    fn new(s: &Surd) -> Self {
        let exact = match s.as_ratio() {
            Some(r) if r.is_integer() => r.numer().to_string(),
            Some(r) => format!("{}/{}", r.numer(), r.denom()),
            None => format!(
                "({} {} sqrt({}))/{}",
                s.p,
                if s.b < 0 { "-" } else { "+" },
                s.b.abs() * s.b.abs() * s.d,
                s.q
            ),
        };
        Self {
            exact,
            approx: s.to_f64(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialJson {
    pub s: i64,
    pub n_constraints: i64,
    pub discriminant: String,
    pub roots: Option<[RealJson; 2]>,
    /// `no_intersection`, `empty_gap` or `feasible`.
    pub verdict: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub m: i64,
    pub rho: i64,
    pub u: i64,
    pub cost: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WuJson {
    pub s: i64,
    pub m: i64,
    pub rho: i64,
    pub n_constraints: i64,
    pub u: i64,
    pub cost: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub v: u32,
    pub t: i64,
    pub k1: i64,
    pub k2: i64,
    pub w: i64,
    pub k0: String,
    pub s_l: i64,
    pub s_u: i64,
    pub trials: Vec<TrialJson>,
    pub s: i64,
    pub n_constraints: i64,
    pub m1: Option<RealJson>,
    pub m2: Option<RealJson>,
    pub candidates: Vec<RowJson>,
    pub optimum: RowJson,
    pub wu: Option<WuJson>,
}

impl ParamsJson {
    pub fn new(p: &InterpParams, wu: Option<&WuParams>) -> Self {
        let row = |m, rho, u| RowJson { m, rho, u, cost: m * u };
        Self {
            v: SCHEMA_VERSION,
            t: p.t,
            k1: p.k1,
            k2: p.k2,
            w: p.w,
            k0: if p.k0.is_integer() {
                p.k0.numer().to_string()
            } else {
                format!("{}/{}", p.k0.numer(), p.k0.denom())
            },
            s_l: p.s_l,
            s_u: p.s_u,
            trials: p
                .trials
                .iter()
                .map(|t| TrialJson {
                    s: t.s,
                    n_constraints: t.n_constraints,
                    discriminant: t.discriminant.to_string(),
                    roots: t.roots.map(|(a, b)| [RealJson::new(&a), RealJson::new(&b)]),
                    verdict: match t.verdict {
                        TrialVerdict::NoIntersection => "no_intersection",
                        TrialVerdict::EmptyGap => "empty_gap",
                        TrialVerdict::Feasible => "feasible",
                    }
                    .into(),
                })
                .collect(),
            s: p.s,
            n_constraints: p.n_constraints,
            m1: p.m1.as_ref().map(RealJson::new),
            m2: p.m2.as_ref().map(RealJson::new),
            candidates: p.candidates.iter().map(|c| row(c.m, c.rho, c.u)).collect(),
            optimum: row(p.m, p.rho, p.u),
            wu: wu.map(|w| WuJson {
                s: w.s,
                m: w.m,
                rho: w.rho,
                n_constraints: w.n_constraints,
                u: w.u,
                cost: w.cost(),
            }),
        }
    }
}
