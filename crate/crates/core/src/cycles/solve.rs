//! Z2 elimination selecting which birth cycles sum with a target to zero.

use std::collections::HashMap;

use crate::persistence::Coordinates;
use crate::sparse::{sym_diff, sym_diff_into};

type Echelon = HashMap<usize, (Vec<usize>, Vec<usize>)>;

/// Reduces `v` against `echelon` while its lowest entry is a known pivot,
/// tracking the labels added into `combo`.
fn reduce(v: &mut Vec<usize>, combo: &mut Vec<usize>, echelon: &Echelon, scratch: &mut Vec<usize>) {
    while let Some(&pivot) = v.last() {
        let Some((row, labels)) = echelon.get(&pivot) else { break };
        sym_diff_into(v, row, scratch);
        *combo = sym_diff(combo, labels);
    }
}

/// Finds `S ⊆ candidates` with `Σ_{g∈S} v_g = target`.
///
/// Candidates are inserted into an echelon form in the given order; a
/// candidate that is dependent on earlier ones is skipped. The returned set is
/// therefore independent, and it is the unique solution whenever the
/// candidates are independent. `None` when the target is outside their span.
pub fn select_generators(target: &Coordinates, candidates: &[(usize, Coordinates)]) -> Option<Vec<usize>> {
    // pivot row -> (reduced vector, sorted labels it is the sum of)
    let mut echelon = Echelon::new();
    let mut scratch = Vec::new();
    for (label, coords) in candidates {
        let mut v = coords.support().to_vec();
        let mut combo = vec![*label];
        reduce(&mut v, &mut combo, &echelon, &mut scratch);
        if let Some(&pivot) = v.last() {
            echelon.insert(pivot, (v, combo));
        }
    }

    let mut v = target.support().to_vec();
    let mut combo = Vec::new();
    reduce(&mut v, &mut combo, &echelon, &mut scratch);
    v.is_empty().then_some(combo)
}
