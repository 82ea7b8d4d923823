//! Submodules of F[x]^2: weighted monomial orders, leading data, reduction,
//! and minimal Groebner bases of the interpolation module
//! `M(r) = span{(Pi, 0), (L, -1)}`.
//!
//! Vectors are written `(f1, f2)` and positions are numbered 1 and 2.

mod euclid;
mod iterative;

use std::cmp::Ordering;
use std::fmt;

pub use euclid::{mgb_euclid, mgb_euclid_reencoded};
pub use iterative::{mgb_iterative, mgb_iterative_reencoded, IterState};

use crate::code::{RSCode, Word};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Weighted degree first, position breaks ties (position 2 is larger).
    Top,
    /// Position first, then weighted degree.
    Pot,
}

/// A weighted monomial order on F[x]^2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightedOrder {
    pub weights: (usize, usize),
    pub kind: OrderKind,
}

impl WeightedOrder {
    pub fn top(n1: usize, n2: usize) -> Self {
        Self {
            weights: (n1, n2),
            kind: OrderKind::Top,
        }
    }

    pub fn pot(n1: usize, n2: usize) -> Self {
        Self {
            weights: (n1, n2),
            kind: OrderKind::Pot,
        }
    }

    /// The order the decoder works in: (0, k-1)-weighted top.
    pub fn decoder(k: usize) -> Self {
        Self::top(0, k - 1)
    }

    pub fn weight(&self, pos: usize) -> usize {
        match pos {
            1 => self.weights.0,
            2 => self.weights.1,
            _ => panic!("position {pos} out of range"),
        }
    }

    /// Compares `x^a e_i` with `x^b e_j`.
    pub fn compare(&self, (a, i): (usize, usize), (b, j): (usize, usize)) -> Ordering {
        let (wa, wb) = (a + self.weight(i), b + self.weight(j));
        match self.kind {
            OrderKind::Top => wa.cmp(&wb).then(i.cmp(&j)),
            OrderKind::Pot => i.cmp(&j).then(wa.cmp(&wb)),
        }
    }

    /// Leading data of a nonzero vector.
    pub fn leading(&self, v: &ModuleVector) -> Result<LeadingData> {
        let candidates = [(1, &v.f1), (2, &v.f2)];
        let (lpos, comp) = candidates
            .into_iter()
            .filter_map(|(pos, p)| p.degree().map(|d| ((d, pos), p)))
            .max_by(|(ma, _), (mb, _)| self.compare(*ma, *mb))
            .map(|((_, pos), p)| (pos, p))
            .ok_or(Error::ZeroVector)?;
        let e = comp.degree().expect("nonzero component");
        Ok(LeadingData {
            lpos,
            wdeg: e + self.weight(lpos),
            lc: comp.lc(),
            lm_exponent: e,
        })
    }
}

impl fmt::Display for WeightedOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            OrderKind::Top => "top",
            OrderKind::Pot => "pot",
        };
        write!(f, "({},{})-{kind}", self.weights.0, self.weights.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeadingData {
    pub lpos: usize,
    pub wdeg: usize,
    pub lc: Elem,
    pub lm_exponent: usize,
}

/// An element `(f1, f2)` of F[x]^2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    pub f1: Polynomial,
    pub f2: Polynomial,
}

impl ModuleVector {
    pub fn new(f1: Polynomial, f2: Polynomial) -> Self {
        Self { f1, f2 }
    }

    pub fn zero(field: &Field) -> Self {
        Self::new(Polynomial::zero(field), Polynomial::zero(field))
    }

    pub fn field(&self) -> &Field {
        self.f1.field()
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero() && self.f2.is_zero()
    }

    pub fn component(&self, pos: usize) -> &Polynomial {
        match pos {
            1 => &self.f1,
            2 => &self.f2,
            _ => panic!("position {pos} out of range"),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.f1 + &other.f1, &self.f2 + &other.f2)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.f1 - &other.f1, &self.f2 - &other.f2)
    }

    pub fn scale(&self, c: Elem) -> Self {
        Self::new(self.f1.scale(c), self.f2.scale(c))
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        Self::new(&self.f1 * p, &self.f2 * p)
    }

    /// `c * x^e * self`.
    pub fn mul_term(&self, c: Elem, e: usize) -> Self {
        Self::new(self.f1.scale(c).shift(e), self.f2.scale(c).shift(e))
    }

    /// `a * u + b * v`.
    pub fn combine(a: &Polynomial, u: &Self, b: &Polynomial, v: &Self) -> Self {
        u.mul_poly(a).add(&v.mul_poly(b))
    }

    /// Weighted degree (the degree of the leading monomial in either order).
    pub fn wdeg(&self, order: &WeightedOrder) -> Result<usize> {
        Ok(order.leading(self)?.wdeg)
    }

    /// Whether `f1 + f2 * L` vanishes modulo `Pi`, i.e. whether this vector
    /// lies in the interpolation module of `r`.
    pub fn in_interpolation_module(&self, r: &Word) -> bool {
        let f = r.code().field();
        r.points()
            .iter()
            .all(|&(x, y)| f.add(self.f1.eval(x), f.mul(self.f2.eval(x), y)).is_zero())
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f1, self.f2)
    }
}

/// A Groebner basis `{g1, g2}` of a submodule of F[x]^2 with
/// `lpos(g1) = 1` and `lpos(g2) = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerPair {
    pub g1: ModuleVector,
    pub g2: ModuleVector,
    pub ell1: usize,
    pub ell2: usize,
    pub order: WeightedOrder,
}

impl GroebnerPair {
    /// Orders the two vectors by leading position. Fails unless the leading
    /// positions are distinct.
    pub fn new(u: ModuleVector, v: ModuleVector, order: WeightedOrder) -> Result<Self> {
        let (lu, lv) = (order.leading(&u)?, order.leading(&v)?);
        let ((g1, l1), (g2, l2)) = match (lu.lpos, lv.lpos) {
            (1, 2) => ((u, lu), (v, lv)),
            (2, 1) => ((v, lv), (u, lu)),
            _ => {
                return Err(Error::Internal(format!(
                    "basis vectors share leading position {}",
                    lu.lpos
                )))
            }
        };
        Ok(Self {
            g1,
            g2,
            ell1: l1.wdeg,
            ell2: l2.wdeg,
            order,
        })
    }

    pub fn field(&self) -> &Field {
        self.g1.field()
    }

    pub fn leading(&self) -> (LeadingData, LeadingData) {
        (
            self.order.leading(&self.g1).expect("nonzero"),
            self.order.leading(&self.g2).expect("nonzero"),
        )
    }

    /// The unique reduced basis: no term of either vector is divisible by
    /// the other's leading monomial, and both leading coefficients are 1.
    pub fn reduced(&self) -> Self {
        let (lead1, lead2) = self.leading();
        let mut g1 = self.g1.clone();
        let mut g2 = self.g2.clone();
        let (q, _) = g1.f2.divmod(&g2.f2).expect("lpos(g2) = 2 so g2.f2 != 0");
        g1 = g1.sub(&g2.mul_poly(&q));
        let (q, _) = g2.f1.divmod(&g1.f1).expect("lpos(g1) = 1 so g1.f1 != 0");
        g2 = g2.sub(&g1.mul_poly(&q));
        let f = self.field();
        let g1 = g1.scale(f.inv(lead1.lc).expect("nonzero lc"));
        let g2 = g2.scale(f.inv(lead2.lc).expect("nonzero lc"));
        Self { g1, g2, ..self.clone() }
    }

    /// Normal form of `v` modulo the pair.
    pub fn reduce(&self, v: &ModuleVector) -> ModuleVector {
        let (lead1, lead2) = self.leading();
        let f = self.field();
        let mut r = v.clone();
        loop {
            // Largest term of r divisible by one of the leading monomials.
            let mut best: Option<(usize, usize)> = None;
            for (pos, lead) in [(1, &lead1), (2, &lead2)] {
                let comp = r.component(pos);
                let reducible = (lead.lm_exponent..comp.coeffs().len())
                    .rev()
                    .find(|&e| !comp.coeff(e).is_zero());
                if let Some(e) = reducible {
                    if best.is_none_or(|b| self.order.compare((e, pos), b) == Ordering::Greater) {
                        best = Some((e, pos));
                    }
                }
            }
            let Some((e, pos)) = best else {
                return r;
            };
            let (g, lead) = if pos == 1 {
                (&self.g1, &lead1)
            } else {
                (&self.g2, &lead2)
            };
            let c = f.div(r.component(pos).coeff(e), lead.lc).expect("nonzero lc");
            r = r.sub(&g.mul_term(c, e - lead.lm_exponent));
        }
    }

    /// Neither leading monomial divides the other. With two vectors this
    /// holds exactly when the leading positions differ.
    pub fn is_minimal(&self) -> bool {
        let (l1, l2) = self.leading();
        l1.lpos != l2.lpos
    }

    /// `a * g1 + b * g2`.
    pub fn combine(&self, a: &Polynomial, b: &Polynomial) -> ModuleVector {
        ModuleVector::combine(a, &self.g1, b, &self.g2)
    }

    /// Replaces each `g_i = (u, v)` by `(u * G, v)` and re-reads the leading
    /// data under `order`.
    pub fn lift(&self, g: &Polynomial, order: WeightedOrder) -> Result<Self> {
        let lift = |v: &ModuleVector| ModuleVector::new(&v.f1 * g, v.f2.clone());
        Self::new(lift(&self.g1), lift(&self.g2), order)
    }
}

/// `(Pi, 0)` and `(L, -1)` for the received word.
pub fn interpolation_generators(code: &RSCode, r: &Word) -> Result<(ModuleVector, ModuleVector)> {
    if r.code() != code {
        return Err(Error::InvalidCode("word does not belong to this code".into()));
    }
    let f = code.field();
    let pi = Polynomial::vanishing(f, code.eval_points());
    let l = Polynomial::lagrange(f, &r.points())?;
    let minus_one = Polynomial::constant(f, f.neg(Elem::ONE));
    Ok((
        ModuleVector::new(pi, Polynomial::zero(f)),
        ModuleVector::new(l, minus_one),
    ))
}

/// Generators of the re-encoded module for `y = (y_1, ..., y_{n-k})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReencodedModule {
    /// `prod_{i > n-k+1} (x - x_i)`, degree `k - 1`.
    pub g: Polynomial,
    /// `prod_{i <= n-k+1} (x - x_i)`, so that `Pi = pi_y * g`.
    pub pi_y: Polynomial,
    /// `L / g` where `L` interpolates `(y, 0, ..., 0)`.
    pub l_y: Polynomial,
    /// `y_i / g(x_i)`: the values `l_y` takes at `x_1, ..., x_{n-k}`.
    pub scaled: Vec<Elem>,
}

impl ReencodedModule {
    pub fn new(code: &RSCode, y: &[Elem]) -> Result<Self> {
        let (n, k) = (code.n(), code.k());
        if y.len() != n - k {
            return Err(Error::LengthMismatch {
                expected: n - k,
                got: y.len(),
            });
        }
        let f = code.field();
        let xs = code.eval_points();
        let g = Polynomial::vanishing(f, &xs[n - k + 1..]);
        let pi_y = Polynomial::vanishing(f, &xs[..=n - k]);
        let scaled = y
            .iter()
            .zip(xs)
            .map(|(&yi, &xi)| f.div(yi, g.eval(xi)))
            .collect::<Result<Vec<_>>>()?;
        let mut points: Vec<(Elem, Elem)> = xs.iter().copied().zip(scaled.iter().copied()).collect();
        points.push((xs[n - k], Elem::ZERO));
        let l_y = Polynomial::lagrange(f, &points)?;
        Ok(Self { g, pi_y, l_y, scaled })
    }

    pub fn generators(&self) -> (ModuleVector, ModuleVector) {
        let f = self.g.field();
        (
            ModuleVector::new(self.pi_y.clone(), Polynomial::zero(f)),
            ModuleVector::new(self.l_y.clone(), Polynomial::constant(f, f.neg(Elem::ONE))),
        )
    }
}
