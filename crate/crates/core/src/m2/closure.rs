use super::M2Error;
use crate::arith::{FiniteRing, MixedLattice, Vector};

/// Smallest two-sided ideal containing `gens` and closed under the trace.
///
/// Each round adds `L(y)` for a basis of the current ideal and regenerates
/// the two-sided ideal; the rounds stop when the lattice is stable.
pub fn ideal_trace_closure(model: &FiniteRing, gens: &[Vector]) -> Result<MixedLattice, M2Error> {
    if !model.has_trace() {
        return Err(M2Error::NoTrace);
    }
    let mut ideal = model.ideal(gens)?;
    loop {
        let mut next: Vec<Vector> = ideal.basis().to_vec();
        for y in ideal.basis() {
            next.push(model.trace(y).expect("trace present"));
        }
        let grown = model.ideal(&next)?;
        if grown.is_subset(&ideal) {
            return Ok(ideal);
        }
        ideal = grown;
    }
}
