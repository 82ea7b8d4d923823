//! Reed-Solomon codes, received words, the error channel and the exhaustive
//! maximum-likelihood oracle.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::Polynomial;

/// Default search budget of [`ml_oracle`], in messages.
pub const DEFAULT_ORACLE_BUDGET: u128 = 10_000_000;

#[derive(Debug)]
struct CodeInner {
    field: Field,
    n: usize,
    k: usize,
    eval_points: Vec<Elem>,
}

/// An `(n, k)` Reed-Solomon code: messages of degree `< k`, evaluated at `n`
/// distinct points. Cheap to clone.
#[derive(Clone, Debug)]
pub struct RSCode {
    inner: Arc<CodeInner>,
}

impl PartialEq for RSCode {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.k == other.inner.k
                && self.inner.eval_points == other.inner.eval_points)
    }
}

impl Eq for RSCode {}

impl RSCode {
    /// Code evaluated at the first `n` field elements in canonical order.
    pub fn new(field: &Field, n: usize, k: usize) -> Result<Self> {
        if n as u64 > field.order() as u64 {
            return Err(Error::InvalidCode(format!(
                "n = {n} exceeds the field order {}",
                field.order()
            )));
        }
        let points = field.elements().take(n).collect();
        Self::with_points(field, k, points)
    }

    pub fn with_points(field: &Field, k: usize, eval_points: Vec<Elem>) -> Result<Self> {
        let n = eval_points.len();
        if !(1 <= k && k < n) {
            return Err(Error::InvalidCode(format!("need 1 <= k < n, got n = {n}, k = {k}")));
        }
        if n as u64 > field.order() as u64 {
            return Err(Error::InvalidCode(format!(
                "n = {n} exceeds the field order {}",
                field.order()
            )));
        }
        let mut seen = BTreeSet::new();
        for &x in &eval_points {
            field.elem(x.value())?;
            if !seen.insert(x) {
                return Err(Error::DuplicatePoint(x.value()));
            }
        }
        Ok(Self {
            inner: Arc::new(CodeInner {
                field: field.clone(),
                n,
                k,
                eval_points,
            }),
        })
    }

    pub fn field(&self) -> &Field {
        &self.inner.field
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn k(&self) -> usize {
        self.inner.k
    }

    /// Minimum distance `n - k + 1`.
    pub fn d(&self) -> usize {
        self.inner.n - self.inner.k + 1
    }

    /// Twice the half-distance `t0 = d/2`, kept integral.
    pub fn two_t0(&self) -> usize {
        self.d()
    }

    /// Unique-decoding radius `floor((d-1)/2)`.
    pub fn classical_radius(&self) -> usize {
        (self.d() - 1) / 2
    }

    pub fn eval_points(&self) -> &[Elem] {
        &self.inner.eval_points
    }

    /// Whether `t < n - sqrt(n(n-d))`, decided in integers.
    pub fn within_johnson(&self, t: usize) -> bool {
        let (n, d) = (self.n() as u128, self.d() as u128);
        let t = t as u128;
        t < n && t * t + n * d > 2 * n * t
    }

    /// Largest radius strictly inside the Johnson bound.
    pub fn johnson_radius(&self) -> usize {
        (0..self.n())
            .take_while(|&t| self.within_johnson(t))
            .last()
            .unwrap_or(0)
    }

    /// Number of messages, `q^k`.
    pub fn message_count(&self) -> u128 {
        (self.field().order() as u128).saturating_pow(self.k() as u32)
    }

    pub fn check_message(&self, m: &Polynomial) -> Result<()> {
        self.field().ensure_same(m.field())?;
        match m.degree() {
            Some(deg) if deg >= self.k() => Err(Error::MessageTooLong {
                degree: deg,
                k: self.k(),
            }),
            _ => Ok(()),
        }
    }

    pub fn encode(&self, m: &Polynomial) -> Result<Word> {
        self.check_message(m)?;
        let symbols = self.eval_points().iter().map(|&x| m.eval(x)).collect();
        Ok(Word {
            code: self.clone(),
            symbols,
        })
    }

    /// Builds a word from canonical symbol values.
    pub fn word(&self, values: &[u32]) -> Result<Word> {
        let symbols = values
            .iter()
            .map(|&v| self.field().elem(v))
            .collect::<Result<Vec<_>>>()?;
        Word::new(self, symbols)
    }

    pub fn zero_word(&self) -> Word {
        Word {
            code: self.clone(),
            symbols: vec![Elem::ZERO; self.n()],
        }
    }
}

/// A length-`n` vector over the code's field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    code: RSCode,
    symbols: Vec<Elem>,
}

impl Word {
    pub fn new(code: &RSCode, symbols: Vec<Elem>) -> Result<Self> {
        if symbols.len() != code.n() {
            return Err(Error::LengthMismatch {
                expected: code.n(),
                got: symbols.len(),
            });
        }
        for &s in &symbols {
            code.field().elem(s.value())?;
        }
        Ok(Self {
            code: code.clone(),
            symbols,
        })
    }

    pub fn code(&self) -> &RSCode {
        &self.code
    }

    pub fn symbols(&self) -> &[Elem] {
        &self.symbols
    }

    pub fn values(&self) -> Vec<u32> {
        self.symbols.iter().map(|s| s.value()).collect()
    }

    /// Pairs `(x_i, r_i)`.
    pub fn points(&self) -> Vec<(Elem, Elem)> {
        self.code
            .eval_points()
            .iter()
            .copied()
            .zip(self.symbols.iter().copied())
            .collect()
    }

    pub fn distance_to(&self, other: &Word) -> Result<usize> {
        hamming_distance(self, other)
    }

    /// Distance from this word to the codeword of `m`.
    pub fn distance_to_message(&self, m: &Polynomial) -> Result<usize> {
        hamming_distance(self, &self.code.encode(m)?)
    }

    /// Elementwise difference.
    pub fn sub(&self, other: &Word) -> Result<Word> {
        self.check_same_code(other)?;
        let f = self.code.field();
        let symbols = self
            .symbols
            .iter()
            .zip(&other.symbols)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Ok(Word {
            code: self.code.clone(),
            symbols,
        })
    }

    fn check_same_code(&self, other: &Word) -> Result<()> {
        if self.code != other.code {
            return Err(Error::InvalidCode("words belong to different codes".into()));
        }
        Ok(())
    }
}

pub fn hamming_distance(a: &Word, b: &Word) -> Result<usize> {
    a.check_same_code(b)?;
    Ok(a.symbols.iter().zip(&b.symbols).filter(|(x, y)| x != y).count())
}

/// Result of a minimal list decoder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeOutcome {
    /// `d_H(r, C)`.
    pub min_distance: usize,
    /// Every message at that distance, sorted, without repeats.
    pub messages: Vec<Polynomial>,
    /// The level `j` at which the search stopped; `None` for the oracle.
    pub search_level: Option<usize>,
    /// `(l1, l2)` of the basis used; `None` for the oracle.
    pub basis_degrees: Option<(usize, usize)>,
}

impl DecodeOutcome {
    /// Same distance and same message list, ignoring how they were found.
    pub fn same_list(&self, other: &DecodeOutcome) -> bool {
        self.min_distance == other.min_distance && self.messages == other.messages
    }
}

/// xorshift64* generator (Marsaglia shifts 12/25/27, multiplier
/// 0x2545F4914F6CDD1D). Fixed here so that channel outputs are portable.
#[derive(Clone, Debug)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    const SEED_MIX: u64 = 0x9E37_79B9_7F4A_7C15;

    pub fn new(seed: u64) -> Self {
        let state = seed ^ Self::SEED_MIX;
        Self {
            state: if state == 0 { Self::SEED_MIX } else { state },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform-ish value in `0..bound` by plain reduction.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Changes exactly `weight` positions of `w` to different symbols.
///
/// Positions come from a partial Fisher-Yates shuffle of `0..n`; each new
/// symbol is drawn from the `q - 1` values other than the old one.
pub fn corrupt(w: &Word, weight: usize, seed: u64) -> Result<Word> {
    let n = w.symbols.len();
    if weight > n {
        return Err(Error::WeightOutOfRange { weight, n });
    }
    let q = w.code.field().order() as u64;
    let mut rng = XorShift64Star::new(seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut out = w.clone();
    for i in 0..weight {
        let j = i + rng.below((n - i) as u64) as usize;
        order.swap(i, j);
        let pos = order[i];
        let old = out.symbols[pos].value() as u64;
        let v = rng.below(q - 1);
        let new = if v < old { v } else { v + 1 };
        out.symbols[pos] = Elem(new as u32);
    }
    Ok(out)
}

/// Exhaustive maximum-likelihood decoding with the default budget.
pub fn ml_oracle(code: &RSCode, r: &Word) -> Result<DecodeOutcome> {
    ml_oracle_with_budget(code, r, DEFAULT_ORACLE_BUDGET)
}

/// Walks all `q^k` messages. The top `k - 1` coefficients are enumerated
/// explicitly; for each such prefix the distance of every constant term is
/// read off one histogram of `r_i - prefix(x_i)`.
pub fn ml_oracle_with_budget(code: &RSCode, r: &Word, budget: u128) -> Result<DecodeOutcome> {
    if r.code() != code {
        return Err(Error::InvalidCode("word does not belong to this code".into()));
    }
    let size = code.message_count();
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    let f = code.field();
    let (n, k, q) = (code.n(), code.k(), f.order() as usize);
    let xs = code.eval_points();
    // powers[j][i] = x_i^j
    let powers: Vec<Vec<Elem>> = (0..k)
        .map(|j| xs.iter().map(|&x| f.pow(x, j as u64)).collect())
        .collect();

    let mut best = usize::MAX;
    let mut winners: Vec<Vec<u32>> = Vec::new();
    // residual[i] = r_i - sum_{j>=1} m_j x_i^j for the current prefix
    let mut residual: Vec<Elem> = r.symbols().to_vec();
    let mut coeffs = vec![0u32; k];
    let mut hist = vec![0usize; q];

    loop {
        hist.iter_mut().for_each(|h| *h = 0);
        for &v in &residual {
            hist[v.value() as usize] += 1;
        }
        for (c0, &agree) in hist.iter().enumerate() {
            let dist = n - agree;
            if dist < best {
                best = dist;
                winners.clear();
            }
            if dist == best {
                let mut m = coeffs.clone();
                m[0] = c0 as u32;
                winners.push(m);
            }
        }
        // Odometer over coefficients 1..k, updating the residual in place.
        let mut j = 1;
        loop {
            if j == k {
                let mut messages: Vec<Polynomial> = winners
                    .iter()
                    .map(|m| Polynomial::from_values(f, m))
                    .collect::<Result<_>>()?;
                messages.sort();
                return Ok(DecodeOutcome {
                    min_distance: best,
                    messages,
                    search_level: None,
                    basis_degrees: None,
                });
            }
            let old = Elem(coeffs[j]);
            let next = (coeffs[j] + 1) as usize % q;
            let new = Elem(next as u32);
            let delta = f.sub(new, old);
            for (res, &p) in residual.iter_mut().zip(&powers[j]) {
                *res = f.sub(*res, f.mul(delta, p));
            }
            coeffs[j] = next as u32;
            if next != 0 {
                break;
            }
            j += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf7() -> Field {
        Field::parse("p:7").unwrap()
    }

    fn msg(f: &Field, c: &[i64]) -> Polynomial {
        Polynomial::from_ints(f, c)
    }

    #[test]
    fn encode_single_error_word() {
        let f = gf7();
        let code = RSCode::new(&f, 7, 5).unwrap();
        let c = code.encode(&msg(&f, &[3, 1, 2])).unwrap();
        assert_eq!(c.values(), vec![3, 6, 6, 3, 4, 2, 4]);
        assert_eq!(code.encode(&Polynomial::zero(&f)).unwrap(), code.zero_word());
        assert_eq!(code.encode(&msg(&f, &[5])).unwrap().values(), vec![5; 7]);
        assert!(matches!(
            code.encode(&msg(&f, &[0, 0, 0, 0, 0, 1])),
            Err(Error::MessageTooLong { degree: 5, k: 5 })
        ));
    }

    #[test]
    fn code_validation() {
        let f = gf7();
        assert!(RSCode::new(&f, 8, 3).is_err());
        assert!(RSCode::new(&f, 7, 7).is_err());
        assert!(RSCode::new(&f, 7, 0).is_err());
        assert_eq!(
            RSCode::with_points(&f, 1, vec![Elem(1), Elem(1)]),
            Err(Error::DuplicatePoint(1))
        );
        let code = RSCode::new(&f, 7, 3).unwrap();
        assert_eq!((code.d(), code.classical_radius(), code.johnson_radius()), (5, 2, 3));
    }

    #[test]
    fn johnson_radius_matches_float_bound() {
        for (n, k) in [(7, 3), (15, 5), (127, 24), (31, 7), (8, 3), (16, 1)] {
            let f = Field::parse(if n <= 8 {
                "2^3"
            } else if n <= 16 {
                "2^4"
            } else {
                "2^7"
            })
            .unwrap();
            let code = RSCode::new(&f, n, k).unwrap();
            let d = (n - k + 1) as f64;
            let bound = n as f64 - (n as f64 * (n as f64 - d)).sqrt();
            let expect = (bound - 1e-9).ceil() as usize - 1;
            assert_eq!(code.johnson_radius(), expect, "({n},{k})");
        }
    }

    #[test]
    fn distances_from_the_examples() {
        let f = gf7();
        let code = RSCode::new(&f, 7, 5).unwrap();
        let c = code.word(&[3, 6, 6, 3, 4, 2, 4]).unwrap();
        let r = code.word(&[3, 2, 6, 3, 4, 2, 4]).unwrap();
        assert_eq!(hamming_distance(&r, &c).unwrap(), 1);
        assert_eq!(hamming_distance(&c, &c).unwrap(), 0);
        let code4 = RSCode::new(&f, 7, 4).unwrap();
        let c4 = code4.word(&[3, 6, 6, 3, 4, 2, 4]).unwrap();
        let r4 = code4.word(&[3, 2, 6, 3, 2, 2, 4]).unwrap();
        assert_eq!(hamming_distance(&r4, &c4).unwrap(), 2);
        assert!(hamming_distance(&r, &c4).is_err());
    }

    #[test]
    fn channel_contract() {
        let f = Field::parse("2^4").unwrap();
        let code = RSCode::new(&f, 15, 5).unwrap();
        let c = code.encode(&Polynomial::from_values(&f, &[1, 2, 3]).unwrap()).unwrap();
        assert_eq!(corrupt(&c, 0, 9).unwrap(), c);
        let all = corrupt(&c, 15, 9).unwrap();
        assert_eq!(hamming_distance(&all, &c).unwrap(), 15);
        assert_eq!(corrupt(&c, 6, 42).unwrap(), corrupt(&c, 6, 42).unwrap());
        assert!(matches!(
            corrupt(&c, 16, 1),
            Err(Error::WeightOutOfRange { weight: 16, n: 15 })
        ));
        for seed in 0..50 {
            for w in 0..=15 {
                assert_eq!(hamming_distance(&corrupt(&c, w, seed).unwrap(), &c).unwrap(), w);
            }
        }
    }

    #[test]
    fn xorshift_reference_values() {
        // Pins the stream so that fixtures written elsewhere keep working.
        let mut g = XorShift64Star::new(0);
        let first: Vec<u64> = (0..3).map(|_| g.next_u64()).collect();
        let mut h = XorShift64Star::new(0);
        assert_eq!(first, (0..3).map(|_| h.next_u64()).collect::<Vec<_>>());
        let mut x = 0x9E37_79B9_7F4A_7C15u64;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        assert_eq!(first[0], x.wrapping_mul(0x2545_F491_4F6C_DD1D));
    }

    #[test]
    fn oracle_on_the_examples() {
        let f = gf7();
        let code = RSCode::new(&f, 7, 5).unwrap();
        let r = code.word(&[3, 2, 6, 3, 4, 2, 4]).unwrap();
        let out = ml_oracle(&code, &r).unwrap();
        assert_eq!(out.min_distance, 1);
        assert_eq!(out.messages, vec![msg(&f, &[3, 1, 2])]);

        let code = RSCode::new(&f, 7, 4).unwrap();
        let r = code.word(&[3, 2, 6, 3, 2, 2, 4]).unwrap();
        let out = ml_oracle(&code, &r).unwrap();
        assert_eq!(out.min_distance, 2);
        let mut expect = vec![msg(&f, &[3, 1, 2]), msg(&f, &[-2, 3, -2, 3]), msg(&f, &[3, 3, -2, -2])];
        expect.sort();
        assert_eq!(out.messages, expect);

        let m = msg(&f, &[1, 0, 4]);
        let out = ml_oracle(&code, &code.encode(&m).unwrap()).unwrap();
        assert_eq!((out.min_distance, out.messages), (0, vec![m]));
    }

    #[test]
    fn oracle_budget() {
        let f = Field::parse("2^8").unwrap();
        let code = RSCode::new(&f, 20, 4).unwrap();
        assert!(matches!(
            ml_oracle(&code, &code.zero_word()),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(ml_oracle_with_budget(&code, &code.zero_word(), 1 << 32).is_ok());
    }

    /// Straightforward q^k scan used to check the histogram shortcut.
    fn naive_oracle(code: &RSCode, r: &Word) -> DecodeOutcome {
        let f = code.field();
        let q = f.order();
        let mut best = usize::MAX;
        let mut list = Vec::new();
        for idx in 0..code.message_count() as u64 {
            let mut rest = idx;
            let coeffs: Vec<u32> = (0..code.k())
                .map(|_| {
                    let c = (rest % q as u64) as u32;
                    rest /= q as u64;
                    c
                })
                .collect();
            let m = Polynomial::from_values(f, &coeffs).unwrap();
            let dist = r.distance_to_message(&m).unwrap();
            if dist < best {
                best = dist;
                list.clear();
            }
            if dist == best {
                list.push(m);
            }
        }
        list.sort();
        DecodeOutcome {
            min_distance: best,
            messages: list,
            search_level: None,
            basis_degrees: None,
        }
    }

    #[test]
    fn oracle_matches_naive_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (spec, n, k) in [("p:7", 7, 3), ("p:5", 5, 2), ("2^3", 8, 3), ("2^2", 4, 1)] {
            let f = Field::parse(spec).unwrap();
            let code = RSCode::new(&f, n, k).unwrap();
            for _ in 0..20 {
                let vals: Vec<u32> = (0..n).map(|_| rng.gen_range(0..f.order())).collect();
                let r = code.word(&vals).unwrap();
                assert!(ml_oracle(&code, &r).unwrap().same_list(&naive_oracle(&code, &r)));
            }
        }
    }

    #[test]
    fn oracle_unique_regime() {
        let f = Field::parse("2^4").unwrap();
        let code = RSCode::new(&f, 15, 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..10 {
            let coeffs: Vec<u32> = (0..5).map(|_| rng.gen_range(0..16)).collect();
            let m = Polynomial::from_values(&f, &coeffs).unwrap();
            let e = trial % (code.classical_radius() + 1);
            let r = corrupt(&code.encode(&m).unwrap(), e, trial as u64).unwrap();
            let out = ml_oracle(&code, &r).unwrap();
            assert_eq!((out.min_distance, out.messages), (e, vec![m]));
        }
    }

    fn word_triple() -> impl Strategy<Value = (Vec<u32>, Vec<u32>, Vec<u32>)> {
        let v = || proptest::collection::vec(0u32..7, 7);
        (v(), v(), v())
    }

    proptest! {
        #[test]
        fn hamming_is_a_metric((a, b, c) in word_triple()) {
            let code = RSCode::new(&gf7(), 7, 3).unwrap();
            let (a, b, c) = (code.word(&a).unwrap(), code.word(&b).unwrap(), code.word(&c).unwrap());
            let d = |x: &Word, y: &Word| hamming_distance(x, y).unwrap();
            prop_assert_eq!(d(&a, &b), d(&b, &a));
            prop_assert_eq!(d(&a, &a), 0);
            prop_assert_eq!(d(&a, &b) == 0, a == b);
            prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
        }

        #[test]
        fn encode_is_injective(m1 in proptest::collection::vec(0u32..7, 4), m2 in proptest::collection::vec(0u32..7, 4)) {
            let f = gf7();
            let code = RSCode::new(&f, 7, 4).unwrap();
            let (p1, p2) = (Polynomial::from_values(&f, &m1).unwrap(), Polynomial::from_values(&f, &m2).unwrap());
            prop_assert_eq!(p1 == p2, code.encode(&p1).unwrap() == code.encode(&p2).unwrap());
        }
    }
}
