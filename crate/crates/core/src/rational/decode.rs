//! Level-by-level decoding with interpolation and factorization in place of
//! the exhaustive parameter search.

use std::collections::BTreeMap;

use crate::code::{DecodeOutcome, RSCode, Word};
use crate::division::{last_level, reencode, DecodeOptions, ParamSearchLevel, Parametrization, Witness};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::anchor::{anchor_points, Anchor};
use crate::rational::bivariate::BivariatePolynomial;
use crate::rational::factor::{rational_factorize, RationalFunction};
use crate::rational::koetter::{interpolate, satisfies_constraints};
use crate::rational::params::{optimize_params, InterpParams};

#[derive(Clone, Debug)]
pub enum LevelRoute {
    /// `k1 < 0`: the only candidate is `a = 0`, `b = 1`, at level 0.
    Direct,
    Interpolation {
        params: Box<InterpParams>,
        q: BivariatePolynomial,
        factors: Vec<RationalFunction>,
    },
    /// Exhaustive search of the level, used where the interpolation bound
    /// gives nothing.
    Exhaustive { reason: String },
}

#[derive(Clone, Debug)]
pub struct LevelReport {
    pub level: ParamSearchLevel,
    pub route: LevelRoute,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug)]
pub struct RationalReport {
    pub outcome: DecodeOutcome,
    pub anchors: Vec<Anchor>,
    pub levels: Vec<LevelReport>,
}

impl RationalReport {
    pub fn witnesses(&self) -> &[Witness] {
        self.levels.last().map_or(&[], |l| &l.witnesses)
    }
}

pub fn decode_rational(code: &RSCode, r: &Word, opts: &DecodeOptions) -> Result<DecodeOutcome> {
    let param = Parametrization::direct(code, r, opts.basis)?;
    Ok(decode_rational_report(code, r, &param, opts)?.outcome)
}

pub fn decode_rational_reencoded(code: &RSCode, r: &Word, opts: &DecodeOptions) -> Result<DecodeOutcome> {
    if r.code() != code {
        return Err(Error::InvalidCode("word does not belong to this code".into()));
    }
    let rw = reencode(code, r)?;
    let param = Parametrization::reencoded(code, &rw, opts.basis)?;
    Ok(decode_rational_report(code, r, &param, opts)?.outcome)
}

/// Levels within the Johnson bound go through interpolation. Levels past it,
/// reachable only with `allow_beyond_johnson`, are searched exhaustively.
pub fn decode_rational_report(
    code: &RSCode,
    r: &Word,
    param: &Parametrization,
    opts: &DecodeOptions,
) -> Result<RationalReport> {
    if r.code() != code {
        return Err(Error::InvalidCode("word does not belong to this code".into()));
    }
    let k = code.k();
    let anchors = anchor_points(&param.basis, code)?;
    let Some(last) = last_level(code, param.ell2, opts) else {
        return Err(Error::RadiusCapExceeded { max_radius: None });
    };
    let mut levels = Vec::new();
    for j in 0..=last {
        let level = param.level(k, j);
        let report = run_level(code, r, param, &anchors, level, opts)?;
        let done = !report.witnesses.is_empty();
        levels.push(report);
        if done {
            let witnesses = &levels.last().expect("just pushed").witnesses;
            let outcome = DecodeOutcome {
                min_distance: level.t,
                messages: witnesses.iter().map(|w| w.message.clone()).collect(),
                search_level: Some(j),
                basis_degrees: Some((param.ell1, param.ell2)),
            };
            return Ok(RationalReport {
                outcome,
                anchors,
                levels,
            });
        }
    }
    Err(Error::RadiusCapExceeded {
        max_radius: levels.last().map(|l| l.level.t),
    })
}

fn run_level(
    code: &RSCode,
    r: &Word,
    param: &Parametrization,
    anchors: &[Anchor],
    level: ParamSearchLevel,
    opts: &DecodeOptions,
) -> Result<LevelReport> {
    let f = code.field();
    if level.k1 < 0 {
        let mut witnesses = Vec::new();
        if level.j == 0 {
            let (a, b) = (Polynomial::zero(f), Polynomial::one(f));
            if let Some(w) = validate(r, param, &level, &RationalFunction { a, b })? {
                witnesses.push(w);
            }
        }
        return Ok(LevelReport {
            level,
            route: LevelRoute::Direct,
            witnesses,
        });
    }
    let exhaustive = |reason: String| -> Result<LevelReport> {
        Ok(LevelReport {
            level,
            witnesses: param.search_level(&level, opts.search_budget)?,
            route: LevelRoute::Exhaustive { reason },
        })
    };
    if !code.within_johnson(level.t) {
        return exhaustive(format!("t = {} is past the Johnson bound", level.t));
    }
    let params = match optimize_params(code, level.t, level.k1, level.k2 as i64) {
        Ok(p) => p,
        Err(Error::Infeasible(why)) if opts.allow_beyond_johnson => return exhaustive(why),
        Err(e) => return Err(e),
    };
    let q = interpolate(f, anchors, &params)?;
    if !satisfies_constraints(&q, anchors, params.s as usize, params.m as usize) {
        return Err(Error::Internal("interpolant misses a constraint".into()));
    }
    let factors = rational_factorize(&q, level.k1 as usize, level.k2)?;
    let mut found = BTreeMap::new();
    for rf in &factors {
        if let Some(w) = validate(r, param, &level, rf)? {
            found.entry(w.message.clone()).or_insert(w);
        }
    }
    Ok(LevelReport {
        level,
        route: LevelRoute::Interpolation {
            params: Box::new(params),
            q,
            factors,
        },
        witnesses: found.into_values().collect(),
    })
}

/// Keeps `(a, b)` when `f2 | f1` and the message lies at distance `t`.
fn validate(
    r: &Word,
    param: &Parametrization,
    level: &ParamSearchLevel,
    rf: &RationalFunction,
) -> Result<Option<Witness>> {
    let Some(m) = param.try_pair(&rf.a, &rf.b)? else {
        return Ok(None);
    };
    if m.degree().is_some_and(|d| d >= r.code().k()) || r.distance_to_message(&m)? != level.t {
        return Ok(None);
    }
    Ok(Some(Witness {
        a: rf.a.clone(),
        b: rf.b.clone(),
        message: m,
    }))
}
