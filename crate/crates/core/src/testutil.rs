//! Random instances for unit tests.

use rand::Rng;

use crate::code::{RSCode, Word};
use crate::field::{Elem, Field};
use crate::poly::Polynomial;

pub fn field(spec: &str) -> Field {
    Field::parse(spec).unwrap()
}

pub fn random_elem(f: &Field, rng: &mut impl Rng) -> Elem {
    Elem(rng.gen_range(0..f.order()))
}

/// Uniform polynomial with fewer than `len` coefficients.
pub fn random_poly(f: &Field, len: usize, rng: &mut impl Rng) -> Polynomial {
    Polynomial::from_coeffs(f, (0..len).map(|_| random_elem(f, rng)).collect())
}

pub fn random_word(code: &RSCode, rng: &mut impl Rng) -> Word {
    let symbols = (0..code.n()).map(|_| random_elem(code.field(), rng)).collect();
    Word::new(code, symbols).unwrap()
}

/// A codeword with `weight` random errors. Returns the word and the message.
pub fn noisy_codeword(code: &RSCode, weight: usize, rng: &mut impl Rng) -> (Word, Polynomial) {
    let m = random_poly(code.field(), code.k(), rng);
    let c = code.encode(&m).unwrap();
    (crate::code::corrupt(&c, weight, rng.gen()).unwrap(), m)
}

/// Words at a spread of distances from the code: half uniform, half a
/// codeword plus a random number of errors.
pub fn mixed_word(code: &RSCode, rng: &mut impl Rng) -> Word {
    if rng.gen_bool(0.5) {
        random_word(code, rng)
    } else {
        let w = rng.gen_range(0..=code.n() - code.k());
        noisy_codeword(code, w, rng).0
    }
}
