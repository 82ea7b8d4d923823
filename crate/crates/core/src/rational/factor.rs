//! Factors `b z - a` of a bivariate polynomial with `deg a <= k1`,
//! `deg b <= k2`, `b` monic and `gcd(a, b) = 1`.
//!
//! Each such `a/b` is a power-series root of `Q` when `b(0) != 0`, and
//! `b/a` is one of the reversal `z^M Q(x, 1/z)` otherwise. Power-series
//! roots are expanded with the Roth-Ruckenstein recursion to `k1 + k2 + 1`
//! terms, which fixes the fraction uniquely; Padé reconstruction by the
//! extended Euclidean algorithm recovers it. Every candidate is confirmed
//! by `b^M Q(x, a/b) = 0`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::Polynomial;
use crate::rational::bivariate::BivariatePolynomial;

/// `a / b` with `b` monic and coprime to `a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalFunction {
    pub a: Polynomial,
    pub b: Polynomial,
}

impl RationalFunction {
    /// Reduces and normalizes `a / b`; `None` when `b = 0`.
    pub fn normalized(a: &Polynomial, b: &Polynomial) -> Result<Option<Self>> {
        if b.is_zero() {
            return Ok(None);
        }
        let g = a.gcd(b)?;
        let a = a
            .exact_div(&g)?
            .ok_or_else(|| Error::Internal("gcd does not divide".into()))?;
        let b = b
            .exact_div(&g)?
            .ok_or_else(|| Error::Internal("gcd does not divide".into()))?;
        let c = b.field().inv(b.lc())?;
        Ok(Some(Self {
            a: a.scale(c),
            b: b.scale(c),
        }))
    }

    pub fn divides(&self, q: &BivariatePolynomial) -> bool {
        let m = q.zdeg().unwrap_or(0);
        q.homogeneous_eval(&self.a, &self.b, m).is_zero()
    }
}

pub fn rational_factorize(q: &BivariatePolynomial, k1: usize, k2: usize) -> Result<Vec<RationalFunction>> {
    let Some(m) = q.zdeg() else {
        return Err(Error::ZeroVector);
    };
    let depth = k1 + k2 + 1;
    let f = q.field();
    let mut found = BTreeSet::new();
    let mut consider = |a: &Polynomial, b: &Polynomial| -> Result<()> {
        if let Some(rf) = RationalFunction::normalized(a, b)? {
            let fits = rf.a.degree().is_none_or(|d| d <= k1) && rf.b.degree().is_some_and(|d| d <= k2);
            if fits && q.homogeneous_eval(&rf.a, &rf.b, m).is_zero() {
                found.insert(rf);
            }
        }
        Ok(())
    };
    for phi in series_roots(q, depth) {
        if let Some((a, b)) = pade(f, &phi, depth, k1, k2)? {
            consider(&a, &b)?;
        }
    }
    for psi in series_roots(&q.reversal(m), depth) {
        if let Some((b, a)) = pade(f, &psi, depth, k2, k1)? {
            consider(&a, &b)?;
        }
    }
    Ok(found.into_iter().collect())
}

/// Truncations to `depth` terms of the power-series roots of `q`. Every
/// root's truncation is listed; some entries may not extend to a root.
pub fn series_roots(q: &BivariatePolynomial, depth: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(depth);
    rr(q.clone(), depth, &mut prefix, &mut out);
    out.into_iter().map(|c| Polynomial::from_coeffs(q.field(), c)).collect()
}

fn rr(q: BivariatePolynomial, left: usize, prefix: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
    let Some(v) = q.x_valuation() else {
        return;
    };
    let q = q.div_x_power(v);
    if left == 0 {
        out.push(prefix.clone());
        return;
    }
    for g in roots(&q.at_x_zero()) {
        prefix.push(g);
        rr(q.shift_scale(g), left - 1, prefix, out);
        prefix.pop();
    }
}

fn roots(p: &Polynomial) -> Vec<Elem> {
    let f = p.field();
    match p.degree() {
        None | Some(0) => Vec::new(),
        Some(1) => vec![f.neg(f.div(p.coeff(0), p.coeff(1)).expect("nonzero leading coefficient"))],
        Some(_) => f.elements().filter(|&e| p.eval(e).is_zero()).collect(),
    }
}

/// `(num, den)` with `num = den * phi mod x^len`, `deg num <= num_deg`,
/// `deg den <= den_deg`, from the first Euclidean remainder of `(x^len, phi)`
/// of degree at most `num_deg`. `None` when the cofactor is too large.
pub fn pade(
    f: &Field,
    phi: &Polynomial,
    len: usize,
    num_deg: usize,
    den_deg: usize,
) -> Result<Option<(Polynomial, Polynomial)>> {
    let mut r0 = Polynomial::monomial(f, Elem::ONE, len);
    let mut r1 = phi.truncate(len);
    let mut t0 = Polynomial::zero(f);
    let mut t1 = Polynomial::one(f);
    while r1.degree().is_some_and(|d| d > num_deg) {
        let (q, r) = r0.divmod(&r1)?;
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    if t1.is_zero() || t1.degree().is_some_and(|d| d > den_deg) {
        return Ok(None);
    }
    Ok(Some((r1, t1)))
}
