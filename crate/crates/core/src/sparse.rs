//! Sorted-index vectors over Z2.

/// Symmetric difference of two strictly increasing index slices.
pub fn sym_diff(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// In-place `a += b` reusing `scratch` as the output buffer.
pub fn sym_diff_into(a: &mut Vec<usize>, b: &[usize], scratch: &mut Vec<usize>) {
    scratch.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                scratch.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                scratch.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    scratch.extend_from_slice(&a[i..]);
    scratch.extend_from_slice(&b[j..]);
    std::mem::swap(a, scratch);
}

/// Sorts and cancels repeated indices pairwise (Z2 reduction of a multiset).
pub fn normalize(mut ids: Vec<usize>) -> Vec<usize> {
    ids.sort_unstable();
    let mut out: Vec<usize> = Vec::with_capacity(ids.len());
    for id in ids {
        if out.last() == Some(&id) {
            out.pop();
        } else {
            out.push(id);
        }
    }
    out
}
