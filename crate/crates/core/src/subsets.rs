//! Fixed-size vertex subsets as `u64` bitmasks.
//!
//! Masks of equal popcount visited in increasing numeric order are in
//! colexicographic order, which is the canonical order used throughout the
//! crate (reference subsets, witnesses, minor sums).

use alloc::vec::Vec;

/// Largest vertex count a bitmask subset can address.
pub const MAX_VERTICES: usize = 63;

/// Colex iterator over all `k`-subsets of `{0, .., n-1}`.
#[derive(Debug, Clone)]
pub struct KSubsets {
    limit: u64,
    next: Option<u64>,
}

impl KSubsets {
    /// Panics if `n > MAX_VERTICES`.
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= MAX_VERTICES, "subset enumeration supports at most {MAX_VERTICES} vertices");
        let limit = 1u64 << n;
        let next = if k > n {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some((1u64 << k) - 1)
        };
        KSubsets { limit, next }
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < self.limit).then_some(nxt)
        };
        Some(cur)
    }
}

/// Vertices of `mask` in ascending order.
pub fn vertices(mask: u64) -> Vec<usize> {
    Bits(mask).collect()
}

/// Mask of the given vertices.
pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | (1u64 << v))
}

/// Iterates the set bits of a mask, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Position of `mask` among the subsets of its popcount in colex order.
pub fn colex_rank(mask: u64) -> u64 {
    Bits(mask).enumerate().map(|(i, v)| binomial(v, i + 1)).sum()
}
