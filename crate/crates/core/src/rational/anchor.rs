//! Projective interpolation points derived from a basis.
//!
//! A combination `f = a*g1 + b*g2` has `f2(x_i) = 0` exactly when
//! `a(x_i) : b(x_i)` equals `-g2^(2)(x_i) : g1^(2)(x_i)`. Where `g1^(2)`
//! vanishes the point is at infinity, and only `b` may vanish there.

use crate::code::RSCode;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::groebner::GroebnerPair;

/// `num : den` on the projective line, normalized to `(z, 1)` or `(1, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    pub num: Elem,
    pub den: Elem,
}

impl ProjectivePoint {
    pub fn new(field: &Field, num: Elem, den: Elem) -> Result<Self> {
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::ZeroVector);
            }
            return Ok(Self::INFINITY);
        }
        Ok(Self {
            num: field.div(num, den)?,
            den: Elem::ONE,
        })
    }

    pub const INFINITY: Self = Self {
        num: Elem::ONE,
        den: Elem::ZERO,
    };

    pub fn finite(z: Elem) -> Self {
        Self { num: z, den: Elem::ONE }
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// Affine value, if finite.
    pub fn value(&self) -> Option<Elem> {
        (!self.is_infinite()).then_some(self.num)
    }
}

/// An interpolation point `(x_i, z_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Anchor {
    pub x: Elem,
    pub z: ProjectivePoint,
}

impl Anchor {
    /// Whether `a/b` passes through this point: `a(x) den = b(x) num`.
    pub fn passes(&self, field: &Field, a_x: Elem, b_x: Elem) -> bool {
        field.mul(a_x, self.z.den) == field.mul(b_x, self.z.num)
    }
}

/// One anchor per evaluation point, from the second components of the basis.
pub fn anchor_points(basis: &GroebnerPair, code: &RSCode) -> Result<Vec<Anchor>> {
    let f = code.field();
    let (p1, p2) = (&basis.g1.f2, &basis.g2.f2);
    code.eval_points()
        .iter()
        .map(|&x| {
            let z = ProjectivePoint::new(f, f.neg(p2.eval(x)), p1.eval(x))
                .map_err(|_| Error::Internal(format!("both second components vanish at {}", x.value())))?;
            Ok(Anchor { x, z })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::division::{BasisMethod, Parametrization};
    use crate::testutil::{field, noisy_codeword, random_poly};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn normalization() {
        let f = field("p:7");
        let p = ProjectivePoint::new(&f, Elem(3), Elem(2)).unwrap();
        assert_eq!(p, ProjectivePoint::finite(Elem(5)));
        assert_eq!(
            ProjectivePoint::new(&f, Elem(4), Elem(0)).unwrap(),
            ProjectivePoint::INFINITY
        );
        assert!(ProjectivePoint::new(&f, Elem(0), Elem(0)).is_err());
        assert_eq!(ProjectivePoint::INFINITY.value(), None);
    }

    #[test]
    fn passing_matches_second_component_roots() {
        let f = field("2^4");
        let code = RSCode::new(&f, 15, 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
            let (r, _) = noisy_codeword(&code, 6, &mut rng);
            let param = Parametrization::direct(&code, &r, BasisMethod::Iterative).unwrap();
            let anchors = anchor_points(&param.basis, &code).unwrap();
            for _ in 0..10 {
                let a = random_poly(&f, 3, &mut rng);
                let b = random_poly(&f, 3, &mut rng);
                let f2 = &(&a * &param.basis.g1.f2) + &(&b * &param.basis.g2.f2);
                for an in &anchors {
                    let on = an.passes(&f, a.eval(an.x), b.eval(an.x));
                    assert_eq!(on, f2.eval(an.x).is_zero());
                }
            }
        }
    }

    #[test]
    fn single_error_word_anchors_are_finite() {
        let code = RSCode::new(&field("p:7"), 7, 5).unwrap();
        let r = code.word(&[1, 6, 6, 3, 4, 2, 4]).unwrap();
        let param = Parametrization::direct(&code, &r, BasisMethod::Iterative).unwrap();
        let (p1, p2) = (&param.basis.g1.f2, &param.basis.g2.f2);
        assert_eq!(p1.degree(), Some(0));
        let f = code.field();
        for an in anchor_points(&param.basis, &code).unwrap() {
            let z = an.z.value().unwrap();
            assert!(f.add(f.mul(p1.eval(an.x), z), p2.eval(an.x)).is_zero());
        }
    }
}
