//! Integer parameters `(s, M, rho)` of the bivariate interpolation step.
//!
//! For radius `t` and degree caps `k1, k2` (with `k1 + k2 = 2t - d`), a
//! multiplicity-`s` interpolant `Q` of z-degree `M` and (1, w)-weighted degree
//! `rho`, `w = k1 - k2`, is useful when
//!
//! * `rho + M*k2 < t*s` (every fitting `a/b` is then a factor of `Q`), and
//! * `U = (rho+1)(M+1) - w*M(M+1)/2 > N = n*s(s+1)/2` (such a `Q` exists).
//!
//! Along the line `rho = ts - 1 - M*k2` the second condition reads
//! `B*M^2 - A*M + 2(N - ts) < 0` with `B = k1 + k2` and `A = 2ts - B`, so the
//! admissible `M` lie strictly between the roots `(A +- sqrt(A^2 - 8B(N-ts)))/(2B)`.
//! Everything below is decided in integers; roots are kept as exact surds.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;

use crate::code::RSCode;
use crate::error::{Error, Result};

/// The real number `(p + b*sqrt(d)) / q` with `q > 0`, `d >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Surd {
    pub p: i128,
    pub b: i128,
    pub d: i128,
    pub q: i128,
}

/// Compares `sqrt(r)` with `c` for `r >= 0`.
fn cmp_sqrt(r: i128, c: i128) -> Ordering {
    if c < 0 {
        Ordering::Greater
    } else {
        r.cmp(&(c * c))
    }
}

impl Surd {
    pub fn rational(p: i128, q: i128) -> Self {
        Self { p, b: 0, d: 0, q }
    }

    pub fn floor(&self) -> i128 {
        let r = self.b * self.b * self.d;
        let x = r.isqrt();
        let num = if self.b >= 0 {
            self.p + x
        } else if x * x == r {
            self.p - x
        } else {
            self.p - x - 1
        };
        num.div_euclid(self.q)
    }

    pub fn ceil(&self) -> i128 {
        -Surd {
            p: -self.p,
            b: -self.b,
            ..*self
        }
        .floor()
    }

    /// Sign of `self - m`.
    pub fn cmp_int(&self, m: i128) -> Ordering {
        let c = m * self.q - self.p;
        let r = self.b * self.b * self.d;
        if self.b >= 0 {
            cmp_sqrt(r, c)
        } else {
            cmp_sqrt(r, -c).reverse()
        }
    }

    /// Exact value when the radicand is a perfect square.
    pub fn as_ratio(&self) -> Option<Ratio<i128>> {
        let x = self.d.isqrt();
        (x * x == self.d).then(|| Ratio::new(self.p + self.b * x, self.q))
    }

    pub fn to_f64(&self) -> f64 {
        (self.p as f64 + self.b as f64 * (self.d as f64).sqrt()) / self.q as f64
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_ratio() {
            Some(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Some(r) => write!(f, "{}/{} (~{:.4})", r.numer(), r.denom(), self.to_f64()),
            None => write!(f, "~{:.4}", self.to_f64()),
        }
    }
}

/// What the optimizer found for one multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialVerdict {
    /// The line and the curve do not meet in two real points.
    NoIntersection,
    /// They do, but no integer lies strictly between the roots.
    EmptyGap,
    Feasible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTrial {
    pub s: i64,
    pub n_constraints: i64,
    /// `A^2 - 8B(N - ts)`; unused (zero) when `B = 0`.
    pub discriminant: i128,
    pub roots: Option<(Surd, Surd)>,
    pub verdict: TrialVerdict,
}

/// One admissible z-degree and its smallest weighted degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub m: i64,
    pub rho: i64,
    pub u: i64,
}

impl Candidate {
    pub fn cost(&self) -> i64 {
        self.m * self.u
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpParams {
    pub t: i64,
    pub k1: i64,
    pub k2: i64,
    pub w: i64,
    /// `(k1 + k2) / 2`, equal to `t - d/2`.
    pub k0: Ratio<i64>,
    pub s: i64,
    pub m: i64,
    pub rho: i64,
    pub n_constraints: i64,
    pub u: i64,
    /// Roots bounding the admissible `M` at the chosen `s`. When `k1 = k2 = 0`
    /// the region is a half-line: `m1` is its end and `m2` is `None`.
    pub m1: Option<Surd>,
    pub m2: Option<Surd>,
    pub s_l: i64,
    pub s_u: i64,
    /// Every admissible `M` examined at the chosen `s`, in increasing order.
    pub candidates: Vec<Candidate>,
    /// Every multiplicity examined, in order.
    pub trials: Vec<MultiplicityTrial>,
}

impl InterpParams {
    /// Number of unknowns for `(M, rho)` with this `w`.
    pub fn unknowns(&self, m: i64, rho: i64) -> i64 {
        unknowns(self.w, m, rho)
    }
}

fn unknowns(w: i64, m: i64, rho: i64) -> i64 {
    (rho + 1) * (m + 1) - w * m * (m + 1) / 2
}

/// Smallest `rho` with `U(M, rho) > N`: `floor(N/(M+1) + wM/2 - 1) + 1`.
fn min_rho(n_constraints: i64, w: i64, m: i64) -> i64 {
    let num = 2 * n_constraints + w * m * (m + 1) - 2 * (m + 1);
    num.div_euclid(2 * (m + 1)) + 1
}

fn check_level(code: &RSCode, t: usize, k1: i64, k2: i64) -> Result<()> {
    let d = code.d() as i64;
    if k1 < 0 || k2 < 0 {
        return Err(Error::Infeasible(format!(
            "degree caps must be non-negative (k1 = {k1}, k2 = {k2})"
        )));
    }
    if k1 + k2 != 2 * t as i64 - d {
        return Err(Error::Infeasible(format!(
            "k1 + k2 = {} but 2t - d = {}",
            k1 + k2,
            2 * t as i64 - d
        )));
    }
    if !code.within_johnson(t) {
        return Err(Error::Infeasible(format!(
            "t = {t} is not below the Johnson bound (largest admissible radius {})",
            code.johnson_radius()
        )));
    }
    Ok(())
}

/// Smallest multiplicity with a feasible `(M, rho)`, and among those the pair
/// minimizing `M * U`.
pub fn optimize_params(code: &RSCode, t: usize, k1: i64, k2: i64) -> Result<InterpParams> {
    check_level(code, t, k1, k2)?;
    let n = code.n() as i64;
    let d = code.d() as i64;
    let ti = t as i64;
    let b = k1 + k2;
    let w = k1 - k2;
    let den = ti * ti - n * b;
    let s_l = (Surd {
        p: (b * (n - ti)) as i128,
        b: b as i128,
        d: (n * (n - d)) as i128,
        q: 2 * den as i128,
    })
    .floor() as i64
        + 1;
    let s_u = (ti * (d - ti)).div_euclid(den) + 1;
    debug_assert_eq!(Ratio::new(b, 2), Ratio::from(ti) - Ratio::new(d, 2));
    let mut params = InterpParams {
        t: ti,
        k1,
        k2,
        w,
        k0: Ratio::new(b, 2),
        s: 0,
        m: 0,
        rho: 0,
        n_constraints: 0,
        u: 0,
        m1: None,
        m2: None,
        s_l,
        s_u,
        candidates: Vec::new(),
        trials: Vec::new(),
    };

    for s in s_l.max(1)..=s_u {
        let nc = n * s * (s + 1) / 2;
        let ts = ti * s;
        let found = if b == 0 {
            linear_case(&mut params, s, nc, ts)
        } else {
            quadratic_case(&mut params, s, nc, ts)
        };
        if found {
            let best = *params
                .candidates
                .iter()
                .min_by_key(|c| (c.cost(), c.m))
                .expect("feasible trial has candidates");
            for c in &params.candidates {
                if c.rho + c.m * k2 >= ts || c.u <= nc {
                    return Err(Error::Internal(format!("candidate {c:?} violates the bounds")));
                }
            }
            params.s = s;
            params.m = best.m;
            params.rho = best.rho;
            params.u = best.u;
            params.n_constraints = nc;
            return Ok(params);
        }
    }
    Err(Error::Infeasible(format!(
        "no multiplicity in {}..={s_u} admits integer parameters for t = {t}",
        s_l.max(1)
    )))
}

/// The optimizer's verdict and candidate window for a single multiplicity,
/// whether or not the search would reach it.
pub fn multiplicity_trial(
    code: &RSCode,
    t: usize,
    k1: i64,
    k2: i64,
    s: i64,
) -> Result<(MultiplicityTrial, Vec<Candidate>)> {
    check_level(code, t, k1, k2)?;
    if s < 1 {
        return Err(Error::Infeasible(format!("multiplicity must be positive, got {s}")));
    }
    let mut scratch = InterpParams {
        t: t as i64,
        k1,
        k2,
        w: k1 - k2,
        k0: Ratio::new(k1 + k2, 2),
        s: 0,
        m: 0,
        rho: 0,
        n_constraints: 0,
        u: 0,
        m1: None,
        m2: None,
        s_l: 0,
        s_u: 0,
        candidates: Vec::new(),
        trials: Vec::new(),
    };
    let nc = code.n() as i64 * s * (s + 1) / 2;
    let ts = t as i64 * s;
    if k1 + k2 == 0 {
        linear_case(&mut scratch, s, nc, ts);
    } else {
        quadratic_case(&mut scratch, s, nc, ts);
    }
    let trial = scratch.trials.pop().expect("one trial recorded");
    Ok((trial, scratch.candidates))
}

fn quadratic_case(params: &mut InterpParams, s: i64, nc: i64, ts: i64) -> bool {
    let b = (params.k1 + params.k2) as i128;
    let a = 2 * ts as i128 - b;
    let c = 2 * (nc - ts) as i128;
    let disc = a * a - 4 * b * c;
    let mut trial = MultiplicityTrial {
        s,
        n_constraints: nc,
        discriminant: disc,
        roots: None,
        verdict: TrialVerdict::NoIntersection,
    };
    if disc <= 0 {
        params.trials.push(trial);
        return false;
    }
    let m1 = Surd {
        p: a,
        b: -1,
        d: disc,
        q: 2 * b,
    };
    let m2 = Surd {
        p: a,
        b: 1,
        d: disc,
        q: 2 * b,
    };
    trial.roots = Some((m1, m2));
    let lo = m1.floor() + 1;
    if m2.cmp_int(lo) != Ordering::Greater {
        trial.verdict = TrialVerdict::EmptyGap;
        params.trials.push(trial);
        return false;
    }
    trial.verdict = TrialVerdict::Feasible;
    params.trials.push(trial);
    let hi = m2.ceil() - 1;
    params.candidates = (lo..=hi)
        .map(|m| {
            let m = m as i64;
            let rho = min_rho(nc, params.w, m);
            Candidate {
                m,
                rho,
                u: unknowns(params.w, m, rho),
            }
        })
        .collect();
    params.m1 = Some(m1);
    params.m2 = Some(m2);
    true
}

/// `k1 = k2 = 0`: the condition is `(M+1) ts > N`, open above. `U >= N + 1`
/// bounds `M * U` from below by `M (N + 1)`, which ends the scan.
fn linear_case(params: &mut InterpParams, s: i64, nc: i64, ts: i64) -> bool {
    let end = Surd::rational((nc - ts) as i128, ts as i128);
    params.trials.push(MultiplicityTrial {
        s,
        n_constraints: nc,
        discriminant: 0,
        roots: None,
        verdict: TrialVerdict::Feasible,
    });
    let mut m = end.floor() as i64 + 1;
    let mut best = i64::MAX;
    params.candidates.clear();
    while m.saturating_mul(nc + 1) < best {
        let rho = min_rho(nc, 0, m);
        let c = Candidate {
            m,
            rho,
            u: unknowns(0, m, rho),
        };
        best = best.min(c.cost());
        params.candidates.push(c);
        m += 1;
    }
    params.m1 = Some(end);
    params.m2 = None;
    true
}

/// The closed-form choice of the earlier rational-interpolation decoder,
/// kept as a baseline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WuParams {
    pub s: i64,
    pub m: i64,
    pub rho: i64,
    pub n_constraints: i64,
    pub u: i64,
}

impl WuParams {
    pub fn cost(&self) -> i64 {
        self.m * self.u
    }
}

/// `s = floor(t(d-t) / (t^2 - n(2t-d)))`, `M = floor(st / (2t-d))`,
/// `rho = ts - M*k2 - 1`.
pub fn wu_params(code: &RSCode, t: usize, k1: i64, k2: i64) -> Result<WuParams> {
    check_level(code, t, k1, k2)?;
    let n = code.n() as i64;
    let d = code.d() as i64;
    let t = t as i64;
    let b = 2 * t - d;
    if b <= 0 {
        return Err(Error::Infeasible(format!(
            "the closed form needs 2t > d (t = {t}, d = {d})"
        )));
    }
    let s = (t * (d - t)).div_euclid(t * t - n * b);
    let m = (s * t).div_euclid(b);
    let rho = t * s - m * k2 - 1;
    Ok(WuParams {
        s,
        m,
        rho,
        n_constraints: n * s * (s + 1) / 2,
        u: unknowns(k1 - k2, m, rho),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use proptest::prelude::*;

    fn code(spec: &str, n: usize, k: usize) -> RSCode {
        RSCode::new(&Field::parse(spec).unwrap(), n, k).unwrap()
    }

    #[test]
    fn surd_floor_and_ceil() {
        // (232 -+ sqrt(5248)) / 48
        let lo = Surd {
            p: 232,
            b: -1,
            d: 5248,
            q: 48,
        };
        let hi = Surd {
            p: 232,
            b: 1,
            d: 5248,
            q: 48,
        };
        assert_eq!((lo.floor(), lo.ceil(), hi.floor(), hi.ceil()), (3, 4, 6, 7));
        assert!((lo.to_f64() - 3.3241).abs() < 1e-4);
        assert!((hi.to_f64() - 6.3426).abs() < 1e-4);
        let exact = Surd {
            p: 95,
            b: 1,
            d: 121,
            q: 6,
        };
        assert_eq!(exact.as_ratio(), Some(Ratio::new(53, 3)));
        assert_eq!((exact.floor(), exact.ceil()), (17, 18));
        let int = Surd {
            p: 95,
            b: -1,
            d: 121,
            q: 6,
        };
        assert_eq!((int.floor(), int.ceil()), (14, 14));
        assert_eq!(int.cmp_int(14), Ordering::Equal);
        assert_eq!(hi.cmp_int(6), Ordering::Greater);
        assert_eq!(lo.cmp_int(4), Ordering::Less);
        assert_eq!(
            Surd {
                p: -7,
                b: -1,
                d: 2,
                q: 3
            }
            .floor(),
            -3
        );
    }

    #[test]
    fn gf128_parameters() {
        let c = code("2^7", 127, 24);
        let p = optimize_params(&c, 64, 15, 9).unwrap();
        assert_eq!((p.s, p.n_constraints), (2, 381));
        let (m1, m2) = (p.m1.unwrap(), p.m2.unwrap());
        assert!((m1.to_f64() - 3.3241).abs() < 5e-5 && (m2.to_f64() - 6.3426).abs() < 5e-5);
        let rows: Vec<_> = p.candidates.iter().map(|c| (c.m, c.rho, c.u)).collect();
        assert_eq!(rows, vec![(4, 88, 385), (5, 78, 384), (6, 72, 385)]);
        assert_eq!((p.m, p.rho, p.u), (4, 88, 385));
        assert_eq!(p.k0, Ratio::new(12, 1));

        let wu = wu_params(&c, 64, 15, 9).unwrap();
        assert_eq!((wu.s, wu.m, wu.n_constraints, wu.u), (2, 5, 381, 408));
        assert_eq!(wu.rho, 82);
        assert!(p.m * p.u < wu.cost());
    }

    #[test]
    fn gf16_parameters() {
        let c = code("2^4", 15, 5);
        let p = optimize_params(&c, 7, 2, 1).unwrap();
        assert_eq!((p.s_l, p.s_u), (6, 8));
        assert_eq!(p.s, 7);
        let first = &p.trials[0];
        assert_eq!((first.s, first.verdict), (6, TrialVerdict::EmptyGap));
        let (r1, r2) = first.roots.unwrap();
        assert_eq!(
            (r1.as_ratio(), r2.as_ratio()),
            (Some(Ratio::from(13)), Some(Ratio::from(14)))
        );
        let (m1, m2) = (p.m1.unwrap(), p.m2.unwrap());
        assert_eq!(m1.as_ratio(), Some(Ratio::from(14)));
        assert_eq!(m2.as_ratio(), Some(Ratio::new(53, 3)));
        let ms: Vec<_> = p.candidates.iter().map(|c| c.m).collect();
        assert_eq!(ms, vec![15, 16, 17]);
        assert_eq!(p.candidates[0].rho, 33);

        let wu = wu_params(&c, 7, 2, 1).unwrap();
        assert_eq!((wu.s, wu.m, wu.rho), (7, 16, 32));
    }

    #[test]
    fn low_multiplicities_fail_for_the_gf16_instance() {
        let c = code("2^4", 15, 5);
        let (one, cands) = multiplicity_trial(&c, 7, 2, 1, 1).unwrap();
        assert_eq!(one.verdict, TrialVerdict::NoIntersection);
        assert!(one.discriminant < 0 && cands.is_empty());
        let (six, _) = multiplicity_trial(&c, 7, 2, 1, 6).unwrap();
        assert_eq!(six.verdict, TrialVerdict::EmptyGap);
        let (seven, cands) = multiplicity_trial(&c, 7, 2, 1, 7).unwrap();
        assert_eq!(seven.verdict, TrialVerdict::Feasible);
        assert_eq!(cands, optimize_params(&c, 7, 2, 1).unwrap().candidates);
    }

    #[test]
    fn rejects_bad_levels() {
        let c = code("2^4", 15, 5);
        assert!(matches!(optimize_params(&c, 8, 4, 1), Err(Error::Infeasible(_))));
        assert!(matches!(optimize_params(&c, 7, 2, 2), Err(Error::Infeasible(_))));
        assert!(matches!(optimize_params(&c, 7, -1, 4), Err(Error::Infeasible(_))));
        assert!(wu_params(&c, 8, 4, 1).is_err());
    }

    #[test]
    fn small_radius_instances() {
        // (7,3): t = 3 is the only radius above d/2 inside the bound.
        let p = optimize_params(&code("p:7", 7, 3), 3, 1, 0).unwrap();
        assert_eq!(p.s, 3);
        assert_eq!(p.candidates.first().unwrap().m, 7);
        assert_eq!(p.candidates.last().unwrap().m, 10);
        let p = optimize_params(&code("2^4", 15, 5), 6, 1, 0).unwrap();
        assert_eq!(p.s, 1);
        let ms: Vec<_> = p.candidates.iter().map(|c| c.m).collect();
        assert_eq!(ms, (3..=8).collect::<Vec<_>>());
    }

    #[test]
    fn half_distance_radius() {
        // d = 10, t = 5: k1 = k2 = 0 and the admissible M form a half-line.
        let c = code("2^4", 15, 6);
        let p = optimize_params(&c, 5, 0, 0).unwrap();
        assert_eq!(p.s, 1);
        assert!(p.m2.is_none());
        assert_eq!(p.candidates[0].m, 3);
        assert!(p.rho < p.t * p.s && p.u > p.n_constraints);
        assert!(p.candidates.iter().all(|c| c.cost() >= p.m * p.u));
    }

    /// Brute force over a box of `(M, rho)` for the smallest feasible `s` and
    /// the minimal cost.
    fn brute(c: &RSCode, t: i64, k1: i64, k2: i64) -> Option<(i64, i64)> {
        let n = c.n() as i64;
        let w = k1 - k2;
        for s in 1..=40i64 {
            let nc = n * s * (s + 1) / 2;
            let mut best: Option<i64> = None;
            for m in 1..=400i64 {
                let rho_max = t * s - 1 - m * k2;
                let rho = min_rho(nc, w, m);
                if rho <= rho_max {
                    let cost = m * unknowns(w, m, rho);
                    best = Some(best.map_or(cost, |b| b.min(cost)));
                }
            }
            if let Some(b) = best {
                return Some((s, b));
            }
        }
        None
    }

    #[test]
    fn agrees_with_brute_force() {
        for (spec, n, k) in [
            ("2^4", 15, 5),
            ("2^4", 16, 4),
            ("p:31", 30, 6),
            ("2^5", 31, 10),
            ("p:13", 13, 3),
        ] {
            let c = code(spec, n, k);
            let d = c.d() as i64;
            for t in 0..=c.johnson_radius() as i64 {
                let b = 2 * t - d;
                if b < 0 {
                    continue;
                }
                for k2 in 0..=b {
                    let p = optimize_params(&c, t as usize, b - k2, k2).unwrap();
                    let (s, cost) = brute(&c, t, b - k2, k2).unwrap();
                    assert_eq!((p.s, p.m * p.u), (s, cost), "({n},{k}) t={t} k2={k2}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn surd_floor_matches_float(p in -10_000i128..10_000, b in -50i128..50, d in 0i128..10_000, q in 1i128..500) {
            let s = Surd { p, b, d, q };
            let x = s.to_f64();
            let f = s.floor();
            prop_assert!(f as f64 <= x + 1e-9 && x < f as f64 + 1.0 + 1e-9);
            prop_assert!(s.cmp_int(f) != Ordering::Less);
            prop_assert_eq!(s.cmp_int(f + 1), Ordering::Less);
            prop_assert!(s.ceil() - f <= 1);
        }
    }
}
