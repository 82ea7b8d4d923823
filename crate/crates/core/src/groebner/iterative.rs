use super::{GroebnerPair, ModuleVector, ReencodedModule, WeightedOrder};
use crate::code::{RSCode, Word};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::Polynomial;

/// State of the point-by-point basis construction.
///
/// `rows.0 = (Q, -K)` and `rows.1 = (N, -D)` span the interpolation module of
/// the points absorbed so far; `tracker` is the weighted degree of the second
/// row, which always leads in position 2.
#[derive(Clone, Debug)]
pub struct IterState {
    pub rows: (ModuleVector, ModuleVector),
    pub tracker: usize,
    pub step: usize,
    order: WeightedOrder,
    /// Sum of the two weighted degrees before any point is absorbed.
    base: usize,
    printed_tie_rule: bool,
}

impl IterState {
    /// Identity start for the (0, k-1)-weighted problem.
    pub fn new(field: &Field, k: usize) -> Self {
        let one = Polynomial::one(field);
        let zero = Polynomial::zero(field);
        Self {
            rows: (
                ModuleVector::new(one.clone(), zero.clone()),
                ModuleVector::new(zero, one),
            ),
            tracker: k - 1,
            step: 0,
            order: WeightedOrder::decoder(k),
            base: k - 1,
            printed_tie_rule: false,
        }
    }

    /// Start for the re-encoded problem: the first row already vanishes at
    /// `x0`, the order is unweighted.
    pub fn new_reencoded(field: &Field, x0: Elem) -> Self {
        Self {
            rows: (
                ModuleVector::new(Polynomial::linear(field, x0), Polynomial::zero(field)),
                ModuleVector::new(Polynomial::zero(field), Polynomial::one(field)),
            ),
            tracker: 0,
            step: 0,
            order: WeightedOrder::top(0, 0),
            base: 1,
            printed_tie_rule: false,
        }
    }

    /// Switches the weighted branch test at step `j` from `2 L < j + k - 2`
    /// to `2 L < j + k - 1`, which also takes the first branch when both rows
    /// have equal weighted degree. Kept for the regression test that shows
    /// this breaks the leading-position invariant.
    #[cfg(test)]
    pub(crate) fn with_printed_tie_rule(mut self) -> Self {
        self.printed_tie_rule = true;
        self
    }

    pub fn order(&self) -> WeightedOrder {
        self.order
    }

    /// Sum of the weighted degrees of the two rows, which grows by exactly
    /// one per absorbed point.
    pub fn degree_sum(&self) -> usize {
        self.base + self.step
    }

    /// Imposes `f1(x) + f2(x) * r = 0` on both rows.
    pub fn absorb(&mut self, x: Elem, r: Elem) {
        let (row1, row2) = &self.rows;
        let f = row1.field().clone();
        let disc = |v: &ModuleVector| f.add(v.f1.eval(x), f.mul(r, v.f2.eval(x)));
        let gamma = disc(row1);
        let delta = disc(row2);
        let lin = Polynomial::linear(&f, x);
        // Weighted degree of the first row is degree_sum - tracker; the
        // second row is the smaller one iff 2 L < degree_sum.
        let slack = if self.printed_tie_rule { 1 } else { 0 };
        let second_smaller = 2 * self.tracker < self.degree_sum() + slack;
        let (new1, new2) = if !delta.is_zero() && (second_smaller || gamma.is_zero()) {
            self.tracker += 1;
            (row1.scale(delta).sub(&row2.scale(gamma)), row2.mul_poly(&lin))
        } else {
            (row1.mul_poly(&lin), row1.scale(delta).sub(&row2.scale(gamma)))
        };
        self.rows = (new1, new2);
        self.step += 1;
    }

    pub fn into_pair(self) -> Result<GroebnerPair> {
        let pair = GroebnerPair::new(self.rows.0, self.rows.1, self.order)?;
        if pair.ell2 != self.tracker {
            return Err(Error::Internal(format!(
                "second row has weighted degree {} but the tracker says {}",
                pair.ell2, self.tracker
            )));
        }
        Ok(pair)
    }
}

/// Minimal basis of `M(r)` under the (0, k-1)-weighted top order, absorbing
/// one received symbol at a time. Returned in reduced form.
pub fn mgb_iterative(code: &RSCode, r: &Word) -> Result<GroebnerPair> {
    if r.code() != code {
        return Err(Error::InvalidCode("word does not belong to this code".into()));
    }
    let mut state = IterState::new(code.field(), code.k());
    for (x, y) in r.points() {
        state.absorb(x, y);
    }
    Ok(state.into_pair()?.reduced())
}

/// Minimal basis of the re-encoded module under the unweighted top order.
///
/// The module's constraints are `f1(x_i) + f2(x_i) * y_i / G(x_i) = 0`, so the
/// discrepancies are taken against the scaled values `y_i / G(x_i)`.
pub fn mgb_iterative_reencoded(code: &RSCode, y: &[Elem]) -> Result<GroebnerPair> {
    let module = ReencodedModule::new(code, y)?;
    let xs = code.eval_points();
    let mut state = IterState::new_reencoded(code.field(), xs[code.n() - code.k()]);
    for (&x, &v) in xs.iter().zip(&module.scaled) {
        state.absorb(x, v);
    }
    Ok(state.into_pair()?.reduced())
}
