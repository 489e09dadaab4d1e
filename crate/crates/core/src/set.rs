//! Small helpers for element sets stored as sorted, duplicate-free id vectors.

/// Sorts and deduplicates a list of element ids in place.
pub fn normalize(set: &mut Vec<usize>) {
    set.sort_unstable();
    set.dedup();
}

/// Returns `set` sorted and deduplicated.
pub fn canonical(mut set: Vec<usize>) -> Vec<usize> {
    normalize(&mut set);
    set
}

/// Bitmask of a set whose ids are all below 64.
pub fn to_mask(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |mask, &e| mask | (1u64 << e))
}

/// Element ids present in `mask`, ascending.
pub fn from_mask(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let e = mask.trailing_zeros() as usize;
        out.push(e);
        mask &= mask - 1;
    }
    out
}

/// `a ⊆ b` for sorted slices.
pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Total weight of a set.
pub fn weight_of(set: &[usize], weights: &[u64]) -> u64 {
    set.iter().map(|&e| weights[e]).sum()
}
