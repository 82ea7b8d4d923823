//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored low to high and kept normalized (no trailing
//! zeros), so the zero polynomial is the empty vector and its degree is
//! `None`. `Option<usize>` orders `None` below every `Some(_)`, which is the
//! usual convention deg 0 = -inf.
//!
//! The `std::ops` impls panic when the operands live in different fields;
//! the `checked_*` methods report that as an error instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<Elem>,
}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl Polynomial {
    pub fn zero(field: &Field) -> Self {
        Self {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, Elem::ONE)
    }

    pub fn constant(field: &Field, c: Elem) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: &Field) -> Self {
        Self::monomial(field, Elem::ONE, 1)
    }

    /// `c * x^e`.
    pub fn monomial(field: &Field, c: Elem, e: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; e + 1];
        coeffs[e] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// `x - a`.
    pub fn linear(field: &Field, a: Elem) -> Self {
        Self::from_coeffs(field, vec![field.neg(a), Elem::ONE])
    }

    /// Builds a polynomial from low-to-high coefficients already known to lie
    /// in `field`.
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<Elem>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)));
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    /// Checked construction from canonical integers.
    pub fn from_values(field: &Field, values: &[u32]) -> Result<Self> {
        let coeffs = values.iter().map(|&v| field.elem(v)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(field, coeffs))
    }

    /// Maps integer coefficients through Z -> F, so `[-3, 1]` is `x + 4` over
    /// GF(7).
    pub fn from_ints(field: &Field, values: &[i64]) -> Self {
        Self::from_coeffs(field, values.iter().map(|&v| field.from_int(v)).collect())
    }

    /// Parses the textual form `[c0,c1,...]`.
    pub fn parse(field: &Field, text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [c0,c1,...], got {text:?}")))?;
        let values = inner
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_values(field, &values)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn values(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as a signed integer with -1 for the zero polynomial. Handy in
    /// degree arithmetic where the exact value of -inf does not matter.
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Elem::ONE
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == Elem::ONE
    }

    /// Scales to a monic polynomial; the zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.field.inv(self.lc()) {
            Ok(inv) => self.scale(inv),
            Err(_) => self.clone(),
        }
    }

    pub fn scale(&self, c: Elem) -> Self {
        let f = &self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplication by `x^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Elem::ZERO; e];
        coeffs.extend_from_slice(&self.coeffs);
        Self {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Reversal `x^d p(1/x)` with respect to a chosen degree bound `d`.
    pub fn reverse(&self, d: usize) -> Self {
        let mut coeffs: Vec<Elem> = (0..=d).map(|i| self.coeff(d - i)).collect();
        if self.degree().is_some_and(|deg| deg > d) {
            coeffs.clear();
        }
        Self::from_coeffs(&self.field, coeffs)
    }

    /// Truncation modulo `x^len`.
    pub fn truncate(&self, len: usize) -> Self {
        Self::from_coeffs(&self.field, self.coeffs.iter().take(len).copied().collect())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(&other.field)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Self::from_coeffs(f, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(&other.field)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Self::from_coeffs(f, coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(&other.field)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let f = &self.field;
        let mut coeffs = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Ok(Self::from_coeffs(f, coeffs))
    }

    /// Euclidean division: `self = q * den + r` with `deg r < deg den`.
    pub fn divmod(&self, den: &Self) -> Result<(Self, Self)> {
        self.field.ensure_same(&den.field)?;
        let f = &self.field;
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let inv_lc = f.inv(den.lc())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dd], inv_lc);
            if c.is_zero() {
                continue;
            }
            quot[i] = c;
            for (j, &b) in den.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(f, quot), Self::from_coeffs(f, rem)))
    }

    pub fn rem(&self, den: &Self) -> Result<Self> {
        Ok(self.divmod(den)?.1)
    }

    /// Exact quotient, or `None` when `den` does not divide `self`.
    pub fn exact_div(&self, den: &Self) -> Result<Option<Self>> {
        let (q, r) = self.divmod(den)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(&other.field)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Extended Euclid: returns `(g, u, v)` with `u*self + v*other = g`, g monic.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        self.field.ensure_same(&other.field)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Self::one(f), Self::zero(f));
        let (mut v0, mut v1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let u = &u0 - &(&q * &u1);
            let v = &v0 - &(&q * &v1);
            r0 = std::mem::replace(&mut r1, r);
            u0 = std::mem::replace(&mut u1, u);
            v0 = std::mem::replace(&mut v1, v);
        }
        let inv = f.inv(r0.lc())?;
        Ok((r0.scale(inv), u0.scale(inv), v0.scale(inv)))
    }

    /// Horner evaluation.
    pub fn eval(&self, x0: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x0), c))
    }

    pub fn checked_eval(&self, x0: Elem) -> Result<Elem> {
        self.field.elem(x0.value())?;
        Ok(self.eval(x0))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
            .collect();
        Self::from_coeffs(f, coeffs)
    }

    /// Monic `prod (x - x_i)`.
    pub fn vanishing(field: &Field, xs: &[Elem]) -> Self {
        xs.iter()
            .fold(Self::one(field), |acc, &a| &acc * &Self::linear(field, a))
    }

    /// Least-degree polynomial through `points`, by the product form of the
    /// Lagrange basis.
    pub fn lagrange(field: &Field, points: &[(Elem, Elem)]) -> Result<Self> {
        let xs: Vec<Elem> = points.iter().map(|p| p.0).collect();
        for (i, a) in xs.iter().enumerate() {
            if xs[..i].contains(a) {
                return Err(Error::DuplicatePoint(a.value()));
            }
        }
        let pi = Self::vanishing(field, &xs);
        let mut acc = Self::zero(field);
        for &(xi, yi) in points {
            if yi.is_zero() {
                continue;
            }
            let (basis, _) = pi.divmod(&Self::linear(field, xi))?;
            let denom = basis.eval(xi);
            let c = field.div(yi, denom)?;
            acc = &acc + &basis.scale(c);
        }
        Ok(acc)
    }

    /// Members of `xs` at which `self` vanishes, in the order given.
    pub fn distinct_roots_in(&self, xs: &[Elem]) -> Result<Vec<Elem>> {
        if self.is_zero() {
            return Err(Error::Internal("root set of the zero polynomial requested".into()));
        }
        Ok(xs.iter().copied().filter(|&a| self.eval(a).is_zero()).collect())
    }

    /// Number of distinct roots among `xs`.
    pub fn count_roots_in(&self, xs: &[Elem]) -> usize {
        xs.iter().filter(|&&a| self.eval(a).is_zero()).count()
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down. Only meaningful for
/// polynomials over the same field.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomials over different fields")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let f = &self.field;
        Polynomial::from_coeffs(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
