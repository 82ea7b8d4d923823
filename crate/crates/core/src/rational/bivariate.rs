//! Polynomials in `F[x][z]`, stored as one `F[x]` slice per power of `z`.

use std::fmt;

use crate::field::{Elem, Field};
use crate::poly::Polynomial;

/// `Q(x, z) = sum_j q_j(x) z^j`. Trailing zero slices are dropped.
#[derive(Clone, PartialEq, Eq)]
pub struct BivariatePolynomial {
    field: Field,
    slices: Vec<Polynomial>,
}

impl BivariatePolynomial {
    pub fn zero(field: &Field) -> Self {
        Self {
            field: field.clone(),
            slices: Vec::new(),
        }
    }

    pub fn from_slices(field: &Field, mut slices: Vec<Polynomial>) -> Self {
        while slices.last().is_some_and(|q| q.is_zero()) {
            slices.pop();
        }
        Self {
            field: field.clone(),
            slices,
        }
    }

    /// `z^j`.
    pub fn z_power(field: &Field, j: usize) -> Self {
        let mut slices = vec![Polynomial::zero(field); j + 1];
        slices[j] = Polynomial::one(field);
        Self::from_slices(field, slices)
    }

    /// `b z - a`.
    pub fn linear_in_z(a: &Polynomial, b: &Polynomial) -> Self {
        Self::from_slices(a.field(), vec![-a, b.clone()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn slices(&self) -> &[Polynomial] {
        &self.slices
    }

    pub fn slice(&self, j: usize) -> Polynomial {
        self.slices
            .get(j)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.slices.is_empty()
    }

    pub fn zdeg(&self) -> Option<usize> {
        self.slices.len().checked_sub(1)
    }

    /// Coefficient of `x^i z^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Elem {
        self.slices.get(j).map_or(Elem::ZERO, |q| q.coeff(i))
    }

    /// Number of nonzero coefficients.
    pub fn support_size(&self) -> usize {
        self.slices
            .iter()
            .map(|q| q.coeffs().iter().filter(|c| !c.is_zero()).count())
            .sum()
    }

    /// Leading monomial under the order keyed by `(i + j*w, j)`, as that key.
    pub fn leading_key(&self, w: i64) -> Option<(i64, usize)> {
        self.slices
            .iter()
            .enumerate()
            .filter_map(|(j, q)| q.degree().map(|d| (d as i64 + j as i64 * w, j)))
            .max()
    }

    /// (1, w)-weighted degree.
    pub fn wdeg(&self, w: i64) -> Option<i64> {
        self.leading_key(w).map(|(d, _)| d)
    }

    pub fn scale(&self, c: Elem) -> Self {
        Self::from_slices(&self.field, self.slices.iter().map(|q| q.scale(c)).collect())
    }

    /// `c1 * self - c2 * other`.
    pub fn cross(&self, c1: Elem, other: &Self, c2: Elem) -> Self {
        let len = self.slices.len().max(other.slices.len());
        let slices = (0..len)
            .map(|j| &self.slice(j).scale(c1) - &other.slice(j).scale(c2))
            .collect();
        Self::from_slices(&self.field, slices)
    }

    /// Multiplication by `x - a`.
    pub fn mul_linear(&self, a: Elem) -> Self {
        let lin = Polynomial::linear(&self.field, a);
        Self::from_slices(&self.field, self.slices.iter().map(|q| q * &lin).collect())
    }

    /// `z^m Q(x, 1/z)`; requires `m >= zdeg`.
    pub fn reversal(&self, m: usize) -> Self {
        assert!(self.zdeg().is_none_or(|d| d <= m), "reversal below the z-degree");
        Self::from_slices(&self.field, (0..=m).map(|j| self.slice(m - j)).collect())
    }

    /// `sum_j q_j a^j b^(m-j)`, which is `b^m Q(x, a/b)` for `m >= zdeg`.
    pub fn homogeneous_eval(&self, a: &Polynomial, b: &Polynomial, m: usize) -> Polynomial {
        assert!(self.zdeg().is_none_or(|d| d <= m), "exponent below the z-degree");
        let mut a_pows = vec![Polynomial::one(&self.field)];
        for j in 1..self.slices.len() {
            a_pows.push(&a_pows[j - 1] * a);
        }
        let mut acc = Polynomial::zero(&self.field);
        let mut b_pow = Polynomial::one(&self.field);
        for j in (0..=m).rev() {
            if let Some(q) = self.slices.get(j) {
                acc = &acc + &(&(q * &a_pows[j]) * &b_pow);
            }
            b_pow = &b_pow * b;
        }
        acc
    }

    /// `Q(0, z)` as a univariate polynomial in `z`.
    pub fn at_x_zero(&self) -> Polynomial {
        Polynomial::from_coeffs(&self.field, self.slices.iter().map(|q| q.coeff(0)).collect())
    }

    /// Largest `v` with `x^v | Q`; `None` for the zero polynomial.
    pub fn x_valuation(&self) -> Option<usize> {
        self.slices
            .iter()
            .filter_map(|q| q.coeffs().iter().position(|c| !c.is_zero()))
            .min()
    }

    /// `Q / x^v`, assuming the division is exact.
    pub fn div_x_power(&self, v: usize) -> Self {
        let slices = self
            .slices
            .iter()
            .map(|q| Polynomial::from_coeffs(&self.field, q.coeffs().iter().skip(v).copied().collect()))
            .collect();
        Self::from_slices(&self.field, slices)
    }

    /// `Q(x, x z + g)`.
    pub fn shift_scale(&self, g: Elem) -> Self {
        let f = &self.field;
        // Taylor shift z -> z + g by repeated synthetic division.
        let mut h = self.slices.clone();
        let len = h.len();
        for i in 0..len {
            for j in (i..len.saturating_sub(1)).rev() {
                let t = h[j + 1].scale(g);
                h[j] = &h[j] + &t;
            }
        }
        let slices = h.into_iter().enumerate().map(|(j, q)| q.shift(j)).collect();
        Self::from_slices(f, slices)
    }

    /// Hasse derivative `D_{u,v} Q` evaluated at `(x0, z0)`.
    pub fn hasse(&self, u: usize, v: usize, x0: Elem, z0: Elem, binom: &mut Binomials) -> Elem {
        let f = &self.field;
        let mut acc = Elem::ZERO;
        for j in (v..self.slices.len()).rev() {
            let inner = hasse_univariate(&self.slices[j], u, x0, binom);
            acc = f.add(f.mul(acc, z0), f.mul(binom.get(j, v), inner));
        }
        acc
    }
}

/// `D_u p` evaluated at `x0`.
pub fn hasse_univariate(p: &Polynomial, u: usize, x0: Elem, binom: &mut Binomials) -> Elem {
    let f = p.field();
    let c = p.coeffs();
    let mut acc = Elem::ZERO;
    for i in (u..c.len()).rev() {
        acc = f.add(f.mul(acc, x0), f.mul(binom.get(i, u), c[i]));
    }
    acc
}

/// Cached binomial coefficients reduced into the prime subfield.
pub struct Binomials {
    field: Field,
    rows: Vec<Vec<Elem>>,
}

impl Binomials {
    pub fn new(field: &Field) -> Self {
        Self {
            field: field.clone(),
            rows: Vec::new(),
        }
    }

    pub fn get(&mut self, n: usize, k: usize) -> Elem {
        if k > n {
            return Elem::ZERO;
        }
        while self.rows.len() <= k {
            self.rows.push(Vec::new());
        }
        let row = &mut self.rows[k];
        while row.len() <= n {
            let m = row.len();
            row.push(self.field.binomial(m, k));
        }
        row[n]
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slices.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .slices
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(j, q)| format!("{q}*z^{j}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
