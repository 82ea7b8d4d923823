//! Kötter's interpolation over the anchors, with multiplicities.
//!
//! Candidates start as `1, z, ..., z^M` and stay a Gröbner basis (leading
//! in `z^j` for candidate `j`) of the polynomials of z-degree at most `M`
//! meeting the constraints processed so far, under the order keyed by
//! `(i + j*w, j)`. A constraint `(u, v)` at a point is taken only after
//! `(u-1, v)`; then multiplying by `x - x_i` shifts `D_{u,v}` to
//! `D_{u-1,v}`, which already vanishes.
//!
//! At a point at infinity the constraints apply to `z^M Q(x, 1/z)` at
//! `(x_i, 0)`, where `D_{u,v}` reads the `u`-th Hasse derivative of the
//! slice `q_{M-v}`.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::rational::anchor::Anchor;
use crate::rational::bivariate::{hasse_univariate, Binomials, BivariatePolynomial};
use crate::rational::params::InterpParams;

/// The pairs `(u, v)` with `u + v < s`, by total order then `v`.
pub fn multiplicity_pairs(s: usize) -> Vec<(usize, usize)> {
    (0..s)
        .flat_map(|total| (0..=total).map(move |v| (total - v, v)))
        .collect()
}

/// `D_{u,v}` of `q` at the anchor, with `m` the z-degree bound.
pub fn constraint_value(
    q: &BivariatePolynomial,
    anchor: &Anchor,
    (u, v): (usize, usize),
    m: usize,
    binom: &mut Binomials,
) -> Elem {
    match anchor.z.value() {
        Some(z0) => q.hasse(u, v, anchor.x, z0, binom),
        None if v > m => Elem::ZERO,
        None => hasse_univariate(&q.slice(m - v), u, anchor.x, binom),
    }
}

/// The final candidates, one per z-power `0..=m`.
pub fn koetter(field: &Field, anchors: &[Anchor], s: usize, m: usize, w: i64) -> Result<Vec<BivariatePolynomial>> {
    let mut cands: Vec<BivariatePolynomial> = (0..=m).map(|j| BivariatePolynomial::z_power(field, j)).collect();
    let mut binom = Binomials::new(field);
    let pairs = multiplicity_pairs(s);
    let mut deltas = vec![Elem::ZERO; m + 1];
    for anchor in anchors {
        for &uv in &pairs {
            for (d, c) in deltas.iter_mut().zip(&cands) {
                *d = constraint_value(c, anchor, uv, m, &mut binom);
            }
            let Some(star) = (0..=m)
                .filter(|&j| !deltas[j].is_zero())
                .min_by_key(|&j| cands[j].leading_key(w))
            else {
                continue;
            };
            let pivot = cands[star].clone();
            for j in 0..=m {
                if j != star && !deltas[j].is_zero() {
                    cands[j] = cands[j].cross(deltas[star], &pivot, deltas[j]);
                }
            }
            cands[star] = pivot.mul_linear(anchor.x);
        }
    }
    Ok(cands)
}

/// The minimal interpolant for the chosen parameters. Fails if it exceeds
/// the weighted-degree bound, which `U > N` rules out.
pub fn interpolate(field: &Field, anchors: &[Anchor], params: &InterpParams) -> Result<BivariatePolynomial> {
    if params.s < 1 || params.m < 0 {
        return Err(Error::Internal(format!(
            "bad parameters s = {}, M = {}",
            params.s, params.m
        )));
    }
    let cands = koetter(field, anchors, params.s as usize, params.m as usize, params.w)?;
    let q = cands
        .into_iter()
        .min_by_key(|c| c.leading_key(params.w))
        .expect("at least one candidate");
    match q.wdeg(params.w) {
        Some(d) if d <= params.rho => Ok(q),
        d => Err(Error::Internal(format!(
            "interpolant has weighted degree {d:?}, above rho = {}",
            params.rho
        ))),
    }
}

/// Replays every constraint on `q`.
pub fn satisfies_constraints(q: &BivariatePolynomial, anchors: &[Anchor], s: usize, m: usize) -> bool {
    if q.zdeg().is_some_and(|d| d > m) {
        return false;
    }
    let mut binom = Binomials::new(q.field());
    let pairs = multiplicity_pairs(s);
    anchors.iter().all(|a| {
        pairs
            .iter()
            .all(|&uv| constraint_value(q, a, uv, m, &mut binom).is_zero())
    })
}
