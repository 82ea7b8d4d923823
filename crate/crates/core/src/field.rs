//! Exact arithmetic in GF(p) and GF(2^m).
//!
//! A [`FieldSpec`] is the plain, comparable description of a field ("p:7",
//! "2^4:0b10011"). A [`Field`] is the constructed arithmetic context: it owns
//! the log/antilog tables of a binary extension, or the inverse table of a
//! prime field, and is cheap to clone. Elements are bare canonical
//! representatives ([`Elem`]); [`FieldElement`] pairs a representative with
//! its field for call sites that want mismatch checking.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// Default irreducible (primitive) moduli for GF(2^m), indexed by `m`.
/// Bit `i` is the coefficient of `x^i`.
const DEFAULT_BINARY_MODULI: [u32; 17] = [
    0,
    0,
    0b111,
    0b1011,
    0b1_0011,
    0b10_0101,
    0b100_0011,
    0b1000_0011,
    0x11d,
    0x211,
    0x409,
    0x805,
    0x1053,
    0x201b,
    0x4443,
    0x8003,
    0x1100b,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime,
    BinaryExtension,
}

/// Description of a finite field. Construction validates primality or
/// irreducibility, so every value of this type names a real field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    kind: FieldKind,
    characteristic: u32,
    extension_degree: u32,
    modulus: u32,
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if !(2..=MAX_ORDER).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below {MAX_ORDER}")));
        }
        Ok(Self {
            kind: FieldKind::Prime,
            characteristic: p,
            extension_degree: 1,
            modulus: 0,
        })
    }

    /// GF(2^m) with the default modulus for `m`.
    pub fn binary(m: u32) -> Result<Self> {
        if !(2..=16).contains(&m) {
            return Err(Error::InvalidField(format!("extension degree {m} outside 2..=16")));
        }
        Self::binary_with_modulus(m, DEFAULT_BINARY_MODULI[m as usize])
    }

    /// GF(2^m) defined by `modulus` (bit `i` = coefficient of `x^i`).
    pub fn binary_with_modulus(m: u32, modulus: u32) -> Result<Self> {
        if !(2..=16).contains(&m) {
            return Err(Error::InvalidField(format!("extension degree {m} outside 2..=16")));
        }
        if bit_degree(modulus) != Some(m) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus:#b} does not have degree {m}"
            )));
        }
        if !is_irreducible_gf2(modulus) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus:#b} is reducible over GF(2)"
            )));
        }
        Ok(Self {
            kind: FieldKind::BinaryExtension,
            characteristic: 2,
            extension_degree: m,
            modulus,
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn extension_degree(&self) -> u32 {
        self.extension_degree
    }

    /// Modulus bits of a binary extension; `None` for prime fields.
    pub fn modulus(&self) -> Option<u32> {
        match self.kind {
            FieldKind::Prime => None,
            FieldKind::BinaryExtension => Some(self.modulus),
        }
    }

    /// Cardinality `q = p^m`.
    pub fn order(&self) -> u32 {
        match self.kind {
            FieldKind::Prime => self.characteristic,
            FieldKind::BinaryExtension => 1 << self.extension_degree,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Prime => write!(f, "p:{}", self.characteristic),
            FieldKind::BinaryExtension => {
                write!(f, "2^{}:{:#b}", self.extension_degree, self.modulus)
            }
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `p:<prime>`, `2^<m>` (default modulus) and `2^<m>:<modulus>`
    /// where the modulus is written `0b...`, `0x...` or in decimal.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unrecognised field description {s:?}"));
        if let Some(p) = s.strip_prefix("p:") {
            let p: u32 = p.trim().parse().map_err(|_| bad())?;
            return Self::prime(p);
        }
        if let Some(rest) = s.strip_prefix("2^") {
            let (m, modulus) = match rest.split_once(':') {
                Some((m, modulus)) => (m, Some(modulus)),
                None => (rest, None),
            };
            let m: u32 = m.trim().parse().map_err(|_| bad())?;
            return match modulus {
                None => Self::binary(m),
                Some(text) => Self::binary_with_modulus(m, parse_uint(text).ok_or_else(bad)?),
            };
        }
        Err(bad())
    }
}

fn parse_uint(text: &str) -> Option<u32> {
    let text = text.trim();
    if let Some(bits) = text.strip_prefix("0b") {
        u32::from_str_radix(bits, 2).ok()
    } else if let Some(hex) = text.strip_prefix("0x") {
        u32::from_str_radix(hex, 16).ok()
    } else {
        text.parse().ok()
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn bit_degree(bits: u32) -> Option<u32> {
    (bits != 0).then(|| 31 - bits.leading_zeros())
}

/// Remainder of carry-less division over GF(2).
fn gf2_rem(mut num: u32, den: u32) -> u32 {
    let dd = bit_degree(den).expect("nonzero divisor");
    while let Some(nd) = bit_degree(num) {
        if nd < dd {
            break;
        }
        num ^= den << (nd - dd);
    }
    num
}

/// Exhaustive divisor check: no polynomial of degree `1..=m/2` divides `f`.
fn is_irreducible_gf2(f: u32) -> bool {
    let m = match bit_degree(f) {
        Some(m) if m >= 1 => m,
        _ => return false,
    };
    for d in 1..=m / 2 {
        for low in 0..(1u32 << d) {
            if gf2_rem(f, (1 << d) | low) == 0 {
                return false;
            }
        }
    }
    true
}

/// Carry-less product reduced modulo `modulus`.
fn gf2_mulmod(a: u32, b: u32, modulus: u32, m: u32) -> u32 {
    let mut acc = 0u32;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> m & 1 == 1 {
            a ^= modulus;
        }
    }
    acc
}

/// Canonical representative of a field element: the least non-negative
/// residue for GF(p), the coefficient bit-vector for GF(2^m).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug)]
enum Tables {
    /// inverse[a] for 0 < a < p.
    Prime { inverse: Vec<u32> },
    /// exp has length 2(q-1) so that exp[log a + log b] needs no reduction.
    Binary { exp: Vec<u32>, log: Vec<u32> },
}

#[derive(Debug)]
struct FieldInner {
    spec: FieldSpec,
    tables: Tables,
}

/// A constructed finite field. Immutable and shareable across threads.
#[derive(Clone, Debug)]
pub struct Field {
    inner: Arc<FieldInner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.spec == other.inner.spec
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(spec: FieldSpec) -> Self {
        let tables = match spec.kind {
            FieldKind::Prime => {
                let p = spec.characteristic as u64;
                let mut inverse = vec![0u32; p as usize];
                for a in 1..p {
                    inverse[a as usize] = pow_mod(a, p - 2, p) as u32;
                }
                Tables::Prime { inverse }
            }
            FieldKind::BinaryExtension => {
                let m = spec.extension_degree;
                let q = 1u32 << m;
                let generator = (2..q)
                    .find(|&g| multiplicative_order(g, spec.modulus, m) == q - 1)
                    .expect("the multiplicative group of a finite field is cyclic");
                let mut exp = vec![0u32; 2 * (q as usize - 1)];
                let mut log = vec![0u32; q as usize];
                let mut x = 1u32;
                for i in 0..(q - 1) {
                    exp[i as usize] = x;
                    exp[(i + q - 1) as usize] = x;
                    log[x as usize] = i;
                    x = gf2_mulmod(x, generator, spec.modulus, m);
                }
                Tables::Binary { exp, log }
            }
        };
        Self {
            inner: Arc::new(FieldInner { spec, tables }),
        }
    }

    /// Parses the textual form and builds the field.
    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::new(text.parse()?))
    }

    pub fn spec(&self) -> FieldSpec {
        self.inner.spec
    }

    pub fn order(&self) -> u32 {
        self.inner.spec.order()
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.spec.characteristic
    }

    pub fn ensure_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.spec(), other.spec()))
        }
    }

    /// Checked conversion from a canonical integer.
    pub fn elem(&self, value: u32) -> Result<Elem> {
        if value < self.order() {
            Ok(Elem(value))
        } else {
            Err(Error::NotInField {
                value: value as u64,
                field: self.spec(),
            })
        }
    }

    /// Image of an integer under the ring map Z -> F (so -3 maps to 4 in GF(7)).
    pub fn from_int(&self, n: i64) -> Elem {
        let p = self.characteristic() as i64;
        Elem(n.rem_euclid(p) as u32)
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.order()
    }

    /// All `q` elements in canonical order: 0, 1, 2, ...
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order()).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match self.inner.spec.kind {
            FieldKind::BinaryExtension => Elem(a.0 ^ b.0),
            FieldKind::Prime => {
                let p = self.inner.spec.characteristic;
                let s = a.0 + b.0;
                Elem(if s >= p { s - p } else { s })
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match self.inner.spec.kind {
            FieldKind::BinaryExtension => a,
            FieldKind::Prime => {
                if a.0 == 0 {
                    a
                } else {
                    Elem(self.inner.spec.characteristic - a.0)
                }
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.tables {
            Tables::Binary { exp, log } => {
                if a.0 == 0 || b.0 == 0 {
                    Elem::ZERO
                } else {
                    Elem(exp[(log[a.0 as usize] + log[b.0 as usize]) as usize])
                }
            }
            Tables::Prime { .. } => {
                let p = self.inner.spec.characteristic as u64;
                Elem(((a.0 as u64 * b.0 as u64) % p) as u32)
            }
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.inner.tables {
            Tables::Binary { exp, log } => {
                let q1 = self.order() - 1;
                Elem(exp[((q1 - log[a.0 as usize]) % q1) as usize])
            }
            Tables::Prime { inverse } => Elem(inverse[a.0 as usize]),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `C(n, k)` reduced into the prime subfield, via Lucas' theorem.
    pub fn binomial(&self, mut n: usize, mut k: usize) -> Elem {
        if k > n {
            return Elem::ZERO;
        }
        let p = self.characteristic() as usize;
        if p == 2 {
            return if n & k == k { Elem::ONE } else { Elem::ZERO };
        }
        let mut acc = Elem::ONE;
        while k > 0 {
            let (ni, ki) = (n % p, k % p);
            if ki > ni {
                return Elem::ZERO;
            }
            // C(ni, ki) with ni < p, so every denominator factor is invertible.
            let mut num = Elem::ONE;
            let mut den = Elem::ONE;
            for i in 0..ki {
                num = self.mul(num, self.from_int((ni - i) as i64));
                den = self.mul(den, self.from_int((i + 1) as i64));
            }
            acc = self.mul(acc, self.div(num, den).expect("i + 1 < p"));
            n /= p;
            k /= p;
        }
        acc
    }
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

fn multiplicative_order(g: u32, modulus: u32, m: u32) -> u32 {
    let mut x = g;
    let mut order = 1;
    while x != 1 {
        x = gf2_mulmod(x, g, modulus, m);
        order += 1;
        if order > (1 << m) {
            return 0;
        }
    }
    order
}

/// A field element bound to its field; arithmetic checks that both operands
/// agree on the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

impl FieldElement {
    pub fn new(field: &Field, value: u32) -> Result<Self> {
        Ok(Self {
            value: field.elem(value)?,
            field: field.clone(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(&other.field)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(&other.field)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(&other.field)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    fn with(&self, value: Elem) -> Self {
        Self {
            field: self.field.clone(),
            value,
        }
    }
}

/// Every element of `spec`, in canonical order.
pub fn enumerate(spec: FieldSpec) -> Vec<FieldElement> {
    let field = Field::new(spec);
    field
        .elements()
        .map(|value| FieldElement {
            field: field.clone(),
            value,
        })
        .collect()
}
