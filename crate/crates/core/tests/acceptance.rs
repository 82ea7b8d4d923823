//! Acceptance checks, one PASS/FAIL line each. Exits nonzero if any fails.

use std::time::{Duration, Instant};

use minlist::code::{ml_oracle, DecodeOutcome};
use minlist::division::{
    decode_minimal, decode_minimal_reencoded, decode_minimal_report, BasisMethod, DecodeOptions, Parametrization,
};
use minlist::groebner::{mgb_euclid, mgb_iterative};
use minlist::rational::decode::{decode_rational_report, LevelRoute, RationalReport};
use minlist::rational::koetter::{multiplicity_pairs, satisfies_constraints};
use minlist::rational::{multiplicity_trial, optimize_params, wu_params, TrialVerdict};
use minlist::{Field, Polynomial, RSCode, Word};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;

fn code(spec: &str, n: usize, k: usize) -> RSCode {
    RSCode::new(&Field::parse(spec).unwrap(), n, k).unwrap()
}

fn random_word(c: &RSCode, rng: &mut ChaCha8Rng) -> Word {
    let q = c.field().order();
    c.word(&(0..c.n()).map(|_| rng.gen_range(0..q)).collect::<Vec<_>>())
        .unwrap()
}

fn random_message(c: &RSCode, rng: &mut ChaCha8Rng) -> Polynomial {
    let q = c.field().order();
    let vals: Vec<u32> = (0..c.k()).map(|_| rng.gen_range(0..q)).collect();
    Polynomial::from_values(c.field(), &vals).unwrap()
}

/// Codeword of a random message plus a random error of exactly `weight`.
fn noisy(c: &RSCode, weight: usize, rng: &mut ChaCha8Rng) -> (Word, Polynomial) {
    let m = random_message(c, rng);
    let mut sym: Vec<u32> = c.encode(&m).unwrap().values();
    let mut pos: Vec<usize> = (0..c.n()).collect();
    for i in 0..weight {
        let j = rng.gen_range(i..c.n());
        pos.swap(i, j);
        let q = c.field().order();
        sym[pos[i]] = (sym[pos[i]] + rng.gen_range(1..q)) % q;
    }
    (c.word(&sym).unwrap(), m)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(a: &DecodeOutcome, b: &DecodeOutcome) -> bool {
    a.same_list(b)
}

/// Every rational-route report produced along the way, for criterion 8.
#[derive(Default)]
struct Collected {
    reports: Vec<(RSCode, RationalReport)>,
}

impl Collected {
    fn rational(&mut self, c: &RSCode, r: &Word, opts: &DecodeOptions) -> minlist::Result<DecodeOutcome> {
        let param = Parametrization::direct(c, r, BasisMethod::Iterative)?;
        let rep = decode_rational_report(c, r, &param, opts)?;
        let out = rep.outcome.clone();
        self.reports.push((c.clone(), rep));
        Ok(out)
    }
}

fn messages(out: &DecodeOutcome) -> Vec<Vec<u32>> {
    out.messages.iter().map(|m| m.values()).collect()
}

fn criterion_1(col: &mut Collected) -> Check {
    let c = code("p:7", 7, 5);
    let r = c.word(&[3, 2, 6, 3, 4, 2, 4]).unwrap();
    let basis = mgb_iterative(&c, &r).map_err(|e| e.to_string())?;
    ensure((basis.ell1, basis.ell2) == (6, 5), || {
        format!("degrees ({}, {})", basis.ell1, basis.ell2)
    })?;
    let opts = DecodeOptions::default();
    let outs = [
        ("division", decode_minimal(&c, &r, &opts)),
        ("reencoded", decode_minimal_reencoded(&c, &r, &opts)),
        ("rational", col.rational(&c, &r, &opts)),
    ];
    for (name, out) in outs {
        let out = out.map_err(|e| format!("{name}: {e}"))?;
        ensure(out.min_distance == 1 && messages(&out) == vec![vec![3, 1, 2]], || {
            format!("{name}: distance {} messages {:?}", out.min_distance, messages(&out))
        })?;
    }
    Ok(())
}

fn criterion_2(col: &mut Collected) -> Check {
    let c = code("p:7", 7, 4);
    let r = c.word(&[3, 2, 6, 3, 2, 2, 4]).unwrap();
    let basis = mgb_iterative(&c, &r).map_err(|e| e.to_string())?;
    ensure((basis.ell1, basis.ell2) == (5, 5), || {
        format!("degrees ({}, {})", basis.ell1, basis.ell2)
    })?;
    let mut want = vec![vec![3, 1, 2], vec![5, 3, 5, 3], vec![3, 3, 5, 5]];
    want.sort_by(|a, b| {
        let f = c.field();
        Polynomial::from_values(f, a)
            .unwrap()
            .cmp(&Polynomial::from_values(f, b).unwrap())
    });
    let opts = DecodeOptions::default();
    let outs = [
        ("division", decode_minimal(&c, &r, &opts)),
        ("reencoded", decode_minimal_reencoded(&c, &r, &opts)),
        ("rational", col.rational(&c, &r, &opts)),
    ];
    for (name, out) in outs {
        let out = out.map_err(|e| format!("{name}: {e}"))?;
        ensure(out.min_distance == 2 && messages(&out) == want, || {
            format!("{name}: distance {} messages {:?}", out.min_distance, messages(&out))
        })?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    let c = code("2^7", 127, 24);
    let p = optimize_params(&c, 64, 15, 9).map_err(|e| e.to_string())?;
    let rows: Vec<_> = p.candidates.iter().map(|x| (x.m, x.rho, x.u)).collect();
    let mut problems = Vec::new();
    if p.s != 2 {
        problems.push(format!("s_min = {}", p.s));
    }
    if rows != vec![(4, 88, 385), (5, 78, 384), (6, 72, 385)] {
        problems.push(format!("rows {rows:?}"));
    }
    if (p.m, p.rho, p.u) != (4, 88, 385) {
        problems.push(format!("optimum ({}, {}, {})", p.m, p.rho, p.u));
    }
    let wu = wu_params(&c, 64, 15, 9).map_err(|e| e.to_string())?;
    let got = (wu.s, wu.m, wu.rho, wu.n_constraints, wu.u);
    if got != (2, 5, 72, 381, 408) {
        problems.push(format!(
            "Wu baseline (s, M, rho, N, U) = {got:?}, expected (2, 5, 72, 381, 408)"
        ));
    }
    ensure(problems.is_empty(), || problems.join("; "))
}

fn criterion_4() -> Check {
    let c = code("2^4", 15, 5);
    let (one, _) = multiplicity_trial(&c, 7, 2, 1, 1).map_err(|e| e.to_string())?;
    ensure(one.verdict == TrialVerdict::NoIntersection, || {
        format!("s = 1 verdict {:?}", one.verdict)
    })?;
    let (six, _) = multiplicity_trial(&c, 7, 2, 1, 6).map_err(|e| e.to_string())?;
    let roots = six.roots.map(|(a, b)| (a.as_ratio(), b.as_ratio()));
    ensure(
        six.verdict == TrialVerdict::EmptyGap && roots == Some((Some(Ratio::from(13)), Some(Ratio::from(14)))),
        || format!("s = 6: {:?} roots {roots:?}", six.verdict),
    )?;
    let p = optimize_params(&c, 7, 2, 1).map_err(|e| e.to_string())?;
    ensure(p.s == 7, || format!("s_min = {}", p.s))?;
    let m1 = p.m1.and_then(|m| m.as_ratio());
    let m2 = p.m2.and_then(|m| m.as_ratio());
    ensure(m1 == Some(Ratio::from(14)) && m2 == Some(Ratio::new(53, 3)), || {
        format!("M1 = {m1:?}, M2 = {m2:?}")
    })?;
    let ms: Vec<i64> = p.candidates.iter().map(|x| x.m).collect();
    ensure(ms == vec![15, 16, 17], || format!("M* = {ms:?}"))?;
    ensure(p.candidates[0].rho == 33, || {
        format!("rho*(15) = {}", p.candidates[0].rho)
    })
}

fn criterion_5(col: &mut Collected) -> Check {
    let opts = DecodeOptions::beyond_johnson();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for (spec, n, k) in [("p:7", 7, 3), ("p:7", 7, 4), ("2^3", 8, 3)] {
        let c = code(spec, n, k);
        for i in 0..200 {
            let r = random_word(&c, &mut rng);
            let want = ml_oracle(&c, &r).map_err(|e| e.to_string())?;
            let outs = [
                ("division", decode_minimal(&c, &r, &opts)),
                ("reencoded", decode_minimal_reencoded(&c, &r, &opts)),
                ("rational", col.rational(&c, &r, &opts)),
            ];
            for (name, out) in outs {
                let out = out.map_err(|e| format!("({n},{k}) word {i} {name}: {e}"))?;
                ensure(same(&out, &want), || {
                    format!(
                        "({n},{k}) word {i} {name}: {:?} vs oracle {:?}",
                        messages(&out),
                        messages(&want)
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_6(col: &mut Collected) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for (spec, n, k) in [("2^4", 15, 5), ("2^5", 31, 15)] {
        let c = code(spec, n, k);
        let tmax = (n - k) / 2;
        for i in 0..500 {
            let weight = rng.gen_range(0..=tmax);
            let (r, m) = noisy(&c, weight, &mut rng);
            let rep = decode_minimal_report(&c, &r, &DecodeOptions::default())
                .map_err(|e| format!("({n},{k}) trial {i}: {e}"))?;
            let out = &rep.outcome;
            ensure(out.messages == vec![m.clone()] && out.min_distance == weight, || {
                format!("({n},{k}) trial {i}: {:?} at {}", messages(out), out.min_distance)
            })?;
            ensure(out.search_level == Some(0), || {
                format!("({n},{k}) trial {i}: level {:?}", out.search_level)
            })?;
            ensure(rep.witnesses.len() == 1 && rep.witnesses[0].a.is_zero(), || {
                format!("({n},{k}) trial {i}: witnesses {:?}", rep.witnesses)
            })?;
            let rat = col
                .rational(&c, &r, &DecodeOptions::default())
                .map_err(|e| e.to_string())?;
            ensure(rat == *out, || format!("({n},{k}) trial {i}: rational route differs"))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let combos = [
        ("p:7", 7, 3),
        ("2^4", 15, 5),
        ("p:31", 30, 12),
        ("2^5", 31, 15),
        ("2^8", 255, 223),
    ];
    for (idx, (spec, n, k)) in combos.into_iter().enumerate() {
        let c = code(spec, n, k);
        for i in 0..200 {
            // Mix pure noise with near-codewords so both small and large l2 occur.
            let r = if i % 2 == 0 {
                random_word(&c, &mut rng)
            } else {
                let w = rng.gen_range(0..=n - k);
                noisy(&c, w, &mut rng).0
            };
            let it = mgb_iterative(&c, &r).map_err(|e| e.to_string())?;
            let eu = mgb_euclid(&c, &r).map_err(|e| e.to_string())?;
            ensure(it.ell1 + it.ell2 == n + k - 1, || {
                format!("combo {idx} word {i}: {} + {}", it.ell1, it.ell2)
            })?;
            let g = it.g1.f2.gcd(&it.g2.f2).map_err(|e| e.to_string())?;
            ensure(g.is_one(), || format!("combo {idx} word {i}: gcd {g}"))?;
            ensure(it == eu, || format!("combo {idx} word {i}: bases differ"))?;
        }
    }
    Ok(())
}

fn criterion_8(col: &Collected) -> (Check, String) {
    let mut n_q = 0;
    let mut n_factors = 0;
    for (idx, (c, rep)) in col.reports.iter().enumerate() {
        for lv in &rep.levels {
            let LevelRoute::Interpolation { params, q, factors } = &lv.route else {
                continue;
            };
            n_q += 1;
            let (s, m) = (params.s as usize, params.m as usize);
            let n_constraints = rep.anchors.len() * multiplicity_pairs(s).len();
            let expected = c.n() as i64 * params.s * (params.s + 1) / 2;
            let check = (|| {
                ensure(
                    n_constraints as i64 == expected && params.n_constraints == expected,
                    || format!("report {idx}: {n_constraints} constraints, N = {expected}"),
                )?;
                ensure(satisfies_constraints(q, &rep.anchors, s, m), || {
                    format!("report {idx}: constraint replay")
                })?;
                ensure(q.zdeg().is_some_and(|d| d <= m), || {
                    format!("report {idx}: zdeg {:?} > M = {m}", q.zdeg())
                })?;
                ensure(q.wdeg(params.w).is_some_and(|d| d <= params.rho), || {
                    format!("report {idx}: wdeg {:?} > rho = {}", q.wdeg(params.w), params.rho)
                })?;
                for f in factors {
                    n_factors += 1;
                    ensure(q.homogeneous_eval(&f.a, &f.b, m).is_zero(), || {
                        format!("report {idx}: factor {}/{} fails", f.a, f.b)
                    })?;
                }
                Ok(())
            })();
            if check.is_err() {
                return (check, String::new());
            }
        }
    }
    if n_q == 0 {
        return (Err("no interpolants were built".into()), String::new());
    }
    (Ok(()), format!("{n_q} interpolants, {n_factors} factors"))
}

fn criterion_9(col: &mut Collected) -> Check {
    let c = code("2^4", 15, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for i in 0..100 {
        let (r, _) = noisy(&c, 7, &mut rng);
        let out = col
            .rational(&c, &r, &DecodeOptions::default())
            .map_err(|e| format!("trial {i}: {e}"))?;
        let want = ml_oracle(&c, &r).map_err(|e| e.to_string())?;
        ensure(same(&out, &want), || {
            format!(
                "trial {i}: {} {:?} vs oracle {} {:?}",
                out.min_distance,
                messages(&out),
                want.min_distance,
                messages(&want)
            )
        })?;
    }
    Ok(())
}

fn main() {
    let mut col = Collected::default();
    let mut failures = 0;
    let mut report = |id: usize, name: &str, limit: Duration, start: Instant, res: Check, note: String| {
        let el = start.elapsed();
        let res = res.and_then(|()| {
            ensure(el <= limit, || {
                format!("took {:.2}s, limit {:.0}s", el.as_secs_f64(), limit.as_secs_f64())
            })
        });
        match res {
            Ok(()) => {
                let note = if note.is_empty() {
                    String::new()
                } else {
                    format!(", {note}")
                };
                println!("PASS {id} {name} ({:.2}s{note})", el.as_secs_f64());
            }
            Err(e) => {
                failures += 1;
                println!("FAIL {id} {name} ({:.2}s): {e}", el.as_secs_f64());
            }
        }
    };
    let secs = Duration::from_secs;

    let t = Instant::now();
    let r = criterion_1(&mut col);
    report(1, "single-error word (7,5) over GF(7)", secs(1), t, r, String::new());
    let t = Instant::now();
    let r = criterion_2(&mut col);
    report(2, "three-message word (7,4) over GF(7)", secs(1), t, r, String::new());
    let t = Instant::now();
    report(
        3,
        "(127,24) parameter table and closed-form baseline",
        secs(1),
        t,
        criterion_3(),
        String::new(),
    );
    let t = Instant::now();
    report(
        4,
        "(15,5) multiplicity search at t = 7",
        secs(1),
        t,
        criterion_4(),
        String::new(),
    );
    let t = Instant::now();
    let r = criterion_5(&mut col);
    report(5, "oracle equivalence on small codes", secs(300), t, r, String::new());
    let t = Instant::now();
    let r = criterion_6(&mut col);
    report(6, "unique-decoding regime", secs(120), t, r, String::new());
    let t = Instant::now();
    report(
        7,
        "degree sum, coprimality, basis agreement",
        secs(120),
        t,
        criterion_7(),
        String::new(),
    );
    // Criterion 8 replays every interpolant built by the others, so it runs last.
    let t = Instant::now();
    let r = criterion_9(&mut col);
    report(
        9,
        "(15,5) weight-7 list decoding vs oracle",
        secs(600),
        t,
        r,
        String::new(),
    );
    let t = Instant::now();
    let (r, note) = criterion_8(&col);
    report(8, "interpolation post-conditions", secs(600), t, r, note);

    if failures > 0 {
        println!("{failures} criterion(s) failed");
        std::process::exit(1);
    }
}
