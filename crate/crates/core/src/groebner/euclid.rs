use super::{interpolation_generators, GroebnerPair, ModuleVector, ReencodedModule, WeightedOrder};
use crate::code::{RSCode, Word};
use crate::error::Result;
use crate::field::Elem;

/// Runs Euclid on the rows `(h, t)` until `deg t + offset >= deg h` holds
/// for the second row. Returns the last two rows.
fn euclid_rows(mut row0: ModuleVector, mut row1: ModuleVector, offset: usize) -> Result<(ModuleVector, ModuleVector)> {
    loop {
        let lhs = row1.f2.degree().map(|d| d + offset);
        if lhs >= row1.f1.degree() {
            return Ok((row0, row1));
        }
        let (q, _) = row0.f1.divmod(&row1.f1)?;
        let next = row0.sub(&row1.mul_poly(&q));
        row0 = std::mem::replace(&mut row1, next);
    }
}

/// Minimal basis of `M(r)` under the (0, k-1)-weighted top order, by the
/// extended Euclidean algorithm on `Pi` and `L`. Returned in reduced form.
pub fn mgb_euclid(code: &RSCode, r: &Word) -> Result<GroebnerPair> {
    let (pi, l) = interpolation_generators(code, r)?;
    let (g1, g2) = euclid_rows(pi, l, code.k() - 1)?;
    Ok(GroebnerPair::new(g1, g2, WeightedOrder::decoder(code.k()))?.reduced())
}

/// Minimal basis of the re-encoded module `span{(Pi_y, 0), (L_y, -1)}` under
/// the unweighted top order. Returned in reduced form.
pub fn mgb_euclid_reencoded(code: &RSCode, y: &[Elem]) -> Result<GroebnerPair> {
    let module = ReencodedModule::new(code, y)?;
    let (pi, l) = module.generators();
    let (g1, g2) = euclid_rows(pi, l, 0)?;
    Ok(GroebnerPair::new(g1, g2, WeightedOrder::top(0, 0))?.reduced())
}
