//! Minimal list decoding by parametric search.
//!
//! With `{g1, g2}` a reduced basis of `M(r)` of weighted degrees `l1, l2`,
//! every vector leading in position 2 with weighted degree `t + k - 1` is
//! `a*g1 + b*g2` with `deg a <= l2 - l1 + j`, `b` monic of degree `j`, where
//! `t = l2 - k + 1 + j`. Level `j` succeeds when some such vector has
//! `f2 | f1`; the messages are `-f1/f2`. The first successful level gives the
//! distance to the code.

use std::collections::BTreeMap;

use crate::code::{DecodeOutcome, RSCode, Word};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::groebner::{
    mgb_euclid, mgb_euclid_reencoded, mgb_iterative, mgb_iterative_reencoded, GroebnerPair, ModuleVector,
    ReencodedModule, WeightedOrder,
};
use crate::poly::Polynomial;

/// Largest number of `(a, b)` pairs a single level may enumerate.
pub const DEFAULT_SEARCH_BUDGET: u128 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BasisMethod {
    Euclid,
    #[default]
    Iterative,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeOptions {
    /// Last level to try. `None` means "up to the Johnson radius", or up to
    /// `n - k` when `allow_beyond_johnson` is set.
    pub j_cap: Option<usize>,
    /// Permit levels whose radius is at or past the Johnson bound.
    pub allow_beyond_johnson: bool,
    pub basis: BasisMethod,
    pub search_budget: u128,
}

impl Default for DecodeOptions {
    fn default() -> Self {
        Self {
            j_cap: None,
            allow_beyond_johnson: false,
            basis: BasisMethod::default(),
            search_budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

impl DecodeOptions {
    pub fn beyond_johnson() -> Self {
        Self {
            allow_beyond_johnson: true,
            ..Self::default()
        }
    }

    pub fn with_j_cap(mut self, j_cap: usize) -> Self {
        self.j_cap = Some(j_cap);
        self
    }

    pub fn with_basis(mut self, basis: BasisMethod) -> Self {
        self.basis = basis;
        self
    }
}

/// Parameter ranges of level `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSearchLevel {
    pub j: usize,
    /// Radius `l2 - k + 1 + j`.
    pub t: usize,
    /// Degree cap for `a`; negative means `a = 0`.
    pub k1: i64,
    /// Exact degree of the monic `b`.
    pub k2: usize,
}

impl ParamSearchLevel {
    /// `ell1`, `ell2` are the (0, k-1)-weighted degrees, so `ell2 >= k - 1`.
    pub fn new(ell1: usize, ell2: usize, k: usize, j: usize) -> Self {
        Self {
            j,
            t: ell2 + 1 + j - k,
            k1: ell2 as i64 - ell1 as i64 + j as i64,
            k2: j,
        }
    }

    /// Number of `(a, b)` pairs at this level, before the coprimality filter.
    pub fn size(&self, q: u32) -> u128 {
        let q = q as u128;
        let a = if self.k1 < 0 {
            1
        } else {
            q.saturating_pow(self.k1 as u32 + 1)
        };
        a.saturating_mul(q.saturating_pow(self.k2 as u32))
    }
}

/// `m = -f1/f2` when `f2` divides `f1`; `None` when it does not.
pub fn extract_message(f: &ModuleVector) -> Result<Option<Polynomial>> {
    if f.f2.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(f.f1.exact_div(&f.f2)?.map(|q| -q))
}

/// The word `r` shifted by a codeword so that its last `k` symbols vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReencodedWord {
    /// The first `n - k` symbols of `r - encode(shift)`.
    pub y: Vec<Elem>,
    /// Message interpolating `r` on the last `k` positions.
    pub shift: Polynomial,
    pub module: ReencodedModule,
}

pub fn reencode(code: &RSCode, r: &Word) -> Result<ReencodedWord> {
    let (n, k) = (code.n(), code.k());
    let tail = &r.points()[n - k..];
    let shift = Polynomial::lagrange(code.field(), tail)?;
    let shifted = r.sub(&code.encode(&shift)?)?;
    let y = shifted.symbols()[..n - k].to_vec();
    let module = ReencodedModule::new(code, &y)?;
    Ok(ReencodedWord { y, shift, module })
}

/// How a combination `f = a*g1 + b*g2` turns into a message.
#[derive(Clone, Debug)]
pub enum Extraction {
    /// `m = -f1 / f2`.
    Direct,
    /// `m = -f1 * G / f2 + shift` for a basis of the re-encoded module.
    Reencoded { g: Polynomial, shift: Polynomial },
}

impl Extraction {
    pub fn message(&self, f: &ModuleVector) -> Result<Option<Polynomial>> {
        match self {
            Extraction::Direct => extract_message(f),
            Extraction::Reencoded { g, shift } => {
                let lifted = ModuleVector::new(&f.f1 * g, f.f2.clone());
                Ok(extract_message(&lifted)?.map(|m| &m + shift))
            }
        }
    }
}

/// A basis together with the rule for reading messages off it.
#[derive(Clone, Debug)]
pub struct Parametrization {
    pub basis: GroebnerPair,
    /// Weighted degrees in the (0, k-1) weighting, whichever module the
    /// basis spans.
    pub ell1: usize,
    pub ell2: usize,
    pub extraction: Extraction,
}

impl Parametrization {
    pub fn direct(code: &RSCode, r: &Word, method: BasisMethod) -> Result<Self> {
        let basis = match method {
            BasisMethod::Euclid => mgb_euclid(code, r)?,
            BasisMethod::Iterative => mgb_iterative(code, r)?,
        };
        Ok(Self {
            ell1: basis.ell1,
            ell2: basis.ell2,
            basis,
            extraction: Extraction::Direct,
        })
    }

    pub fn reencoded(code: &RSCode, rw: &ReencodedWord, method: BasisMethod) -> Result<Self> {
        let basis = match method {
            BasisMethod::Euclid => mgb_euclid_reencoded(code, &rw.y)?,
            BasisMethod::Iterative => mgb_iterative_reencoded(code, &rw.y)?,
        };
        let k = code.k();
        Ok(Self {
            ell1: basis.ell1 + k - 1,
            ell2: basis.ell2 + k - 1,
            basis,
            extraction: Extraction::Reencoded {
                g: rw.module.g.clone(),
                shift: rw.shift.clone(),
            },
        })
    }

    /// The equivalent basis of `M(r)` itself, in the decoder order.
    pub fn full_basis(&self, k: usize) -> Result<GroebnerPair> {
        match &self.extraction {
            Extraction::Direct => Ok(self.basis.clone()),
            Extraction::Reencoded { g, .. } => self.basis.lift(g, WeightedOrder::decoder(k)),
        }
    }

    pub fn level(&self, k: usize, j: usize) -> ParamSearchLevel {
        ParamSearchLevel::new(self.ell1, self.ell2, k, j)
    }

    /// Message of `a*g1 + b*g2`, if `f2 | f1` (times `G` when re-encoded).
    pub fn try_pair(&self, a: &Polynomial, b: &Polynomial) -> Result<Option<Polynomial>> {
        self.extraction.message(&self.basis.combine(a, b))
    }

    /// Exhaustive search of one level over coprime `(a, b)`.
    pub fn search_level(&self, level: &ParamSearchLevel, budget: u128) -> Result<Vec<Witness>> {
        let f = self.basis.field().clone();
        let size = level.size(f.order());
        if size > budget {
            return Err(Error::BudgetExceeded { size, budget });
        }
        let mut found: BTreeMap<Polynomial, Witness> = BTreeMap::new();
        for b in MonicPolys::new(&f, level.k2) {
            for a in PolysUpTo::new(&f, level.k1) {
                if !a.gcd(&b)?.is_one() {
                    continue;
                }
                if let Some(m) = self.try_pair(&a, &b)? {
                    found.entry(m.clone()).or_insert(Witness {
                        a: a.clone(),
                        b: b.clone(),
                        message: m,
                    });
                }
            }
        }
        Ok(found.into_values().collect())
    }
}

/// A successful `(a, b)` and the message it yields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub a: Polynomial,
    pub b: Polynomial,
    pub message: Polynomial,
}

/// Outcome plus the successful parameter pairs of the final level.
#[derive(Clone, Debug)]
pub struct DivisionReport {
    pub outcome: DecodeOutcome,
    pub witnesses: Vec<Witness>,
    pub levels_tried: Vec<ParamSearchLevel>,
}

/// Largest level the options permit for a basis with second degree `ell2`.
/// `None` when not even level 0 is permitted.
pub fn last_level(code: &RSCode, ell2: usize, opts: &DecodeOptions) -> Option<usize> {
    let t0 = ell2 + 1 - code.k();
    let max_t = if opts.allow_beyond_johnson {
        code.n() - code.k()
    } else {
        code.johnson_radius()
    };
    let by_radius = max_t.checked_sub(t0)?;
    Some(opts.j_cap.map_or(by_radius, |cap| cap.min(by_radius)))
}

pub fn decode_minimal(code: &RSCode, r: &Word, opts: &DecodeOptions) -> Result<DecodeOutcome> {
    Ok(decode_minimal_report(code, r, opts)?.outcome)
}

pub fn decode_minimal_report(code: &RSCode, r: &Word, opts: &DecodeOptions) -> Result<DivisionReport> {
    let param = Parametrization::direct(code, r, opts.basis)?;
    run_search(code, &param, opts)
}

pub fn decode_minimal_reencoded(code: &RSCode, r: &Word, opts: &DecodeOptions) -> Result<DecodeOutcome> {
    Ok(decode_minimal_reencoded_report(code, r, opts)?.outcome)
}

pub fn decode_minimal_reencoded_report(code: &RSCode, r: &Word, opts: &DecodeOptions) -> Result<DivisionReport> {
    if r.code() != code {
        return Err(Error::InvalidCode("word does not belong to this code".into()));
    }
    let rw = reencode(code, r)?;
    let param = Parametrization::reencoded(code, &rw, opts.basis)?;
    run_search(code, &param, opts)
}

fn run_search(code: &RSCode, param: &Parametrization, opts: &DecodeOptions) -> Result<DivisionReport> {
    let k = code.k();
    let mut levels_tried = Vec::new();
    let Some(last) = last_level(code, param.ell2, opts) else {
        return Err(Error::RadiusCapExceeded { max_radius: None });
    };
    for j in 0..=last {
        let level = param.level(k, j);
        levels_tried.push(level);
        let witnesses = param.search_level(&level, opts.search_budget)?;
        if witnesses.is_empty() {
            continue;
        }
        let outcome = DecodeOutcome {
            min_distance: level.t,
            messages: witnesses.iter().map(|w| w.message.clone()).collect(),
            search_level: Some(j),
            basis_degrees: Some((param.ell1, param.ell2)),
        };
        return Ok(DivisionReport {
            outcome,
            witnesses,
            levels_tried,
        });
    }
    Err(Error::RadiusCapExceeded {
        max_radius: levels_tried.last().map(|l| l.t),
    })
}

/// All polynomials of degree at most `max_deg` (just zero when negative),
/// by increasing degree, then coefficients in lexicographic order from the
/// constant term.
pub struct PolysUpTo {
    field: Field,
    max_deg: i64,
    next: Option<Vec<u32>>,
}

impl PolysUpTo {
    pub fn new(field: &Field, max_deg: i64) -> Self {
        Self {
            field: field.clone(),
            max_deg,
            next: Some(Vec::new()),
        }
    }
}

impl Iterator for PolysUpTo {
    type Item = Polynomial;

    fn next(&mut self) -> Option<Polynomial> {
        let cur = self.next.take()?;
        let q = self.field.order();
        let out = Polynomial::from_values(&self.field, &cur).expect("in range");
        // Advance: odometer over the low coefficients, leading one in 1..q.
        let mut nxt = cur;
        let len = nxt.len();
        let mut i = 0;
        loop {
            if i == len {
                // Degree exhausted; start the next degree at x^len.
                if (len as i64) <= self.max_deg {
                    let mut v = vec![0; len + 1];
                    v[len] = 1;
                    self.next = Some(v);
                }
                break;
            }
            let lo = if i + 1 == len { 1 } else { 0 };
            if nxt[i] + 1 < q {
                nxt[i] += 1;
                self.next = Some(nxt);
                break;
            }
            nxt[i] = lo;
            i += 1;
        }
        Some(out)
    }
}

/// All monic polynomials of degree exactly `deg`.
pub struct MonicPolys {
    field: Field,
    next: Option<Vec<u32>>,
}

impl MonicPolys {
    pub fn new(field: &Field, deg: usize) -> Self {
        let mut v = vec![0; deg + 1];
        v[deg] = 1;
        Self {
            field: field.clone(),
            next: Some(v),
        }
    }
}

impl Iterator for MonicPolys {
    type Item = Polynomial;

    fn next(&mut self) -> Option<Polynomial> {
        let cur = self.next.take()?;
        let q = self.field.order();
        let out = Polynomial::from_values(&self.field, &cur).expect("in range");
        let mut nxt = cur;
        let deg = nxt.len() - 1;
        for i in 0..deg {
            if nxt[i] + 1 < q {
                nxt[i] += 1;
                self.next = Some(nxt);
                return Some(out);
            }
            nxt[i] = 0;
        }
        Some(out)
    }
}
