//! Tournaments: complete antisymmetric dominance relations.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A tournament on vertices `0..n`. `dominates(i, j)` means the arc `i → j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    arcs: Vec<bool>,
}

impl Tournament {
    /// Builds a tournament from a full dominance matrix, validating it.
    pub fn from_fn(n: usize, mut dominates: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut arcs = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                arcs[i * n + j] = dominates(i, j);
            }
        }
        Self::from_matrix(n, arcs)
    }

    /// Builds a tournament from row-major dominance flags.
    pub fn from_matrix(n: usize, arcs: Vec<bool>) -> Result<Self> {
        if arcs.len() != n * n {
            return Err(Error::Shape { n });
        }
        for i in 0..n {
            if arcs[i * n + i] {
                return Err(Error::NotATournament { i, j: i });
            }
            for j in i + 1..n {
                if arcs[i * n + j] == arcs[j * n + i] {
                    return Err(Error::NotATournament { i, j });
                }
            }
        }
        Ok(Tournament { n, arcs })
    }

    /// Orients every pair `i < j` as `i → j` exactly when `forward(i, j)`.
    pub fn from_upper(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Self {
        let mut arcs = vec![false; n * n];
        for i in 0..n {
            for j in i + 1..n {
                if forward(i, j) {
                    arcs[i * n + j] = true;
                } else {
                    arcs[j * n + i] = true;
                }
            }
        }
        Tournament { n, arcs }
    }

    /// The labeled tournament whose upper-triangle pairs, taken row by row,
    /// are oriented forward according to the bits of `code`. Every code in
    /// `0..2^(n(n-1)/2)` gives a distinct tournament.
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut bit = 0;
        Self::from_upper(n, |_, _| {
            let f = code >> bit & 1 == 1;
            bit += 1;
            f
        })
    }

    /// Number of labeled tournaments on `n` vertices, if it fits a `u64`.
    pub fn count_labeled(n: usize) -> Option<u64> {
        let pairs = n * n.saturating_sub(1) / 2;
        (pairs < 64).then(|| 1u64 << pairs)
    }

    /// The linear order `i → j` iff `i < j`.
    pub fn transitive(n: usize) -> Self {
        Self::from_upper(n, |_, _| true)
    }

    /// `0 → 1 → 2 → 0`.
    pub fn three_cycle() -> Self {
        Self::from_upper(3, |i, j| !(i == 0 && j == 2))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dominates(&self, i: usize, j: usize) -> bool {
        self.arcs[i * self.n + j]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs[v * self.n..(v + 1) * self.n].iter().filter(|&&a| a).count()
    }

    pub fn score_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.out_degree(v)).collect()
    }

    /// Same vertices, every arc reversed.
    pub fn reversed(&self) -> Self {
        let n = self.n;
        Tournament {
            n,
            arcs: (0..n * n).map(|idx| self.arcs[(idx % n) * n + idx / n]).collect(),
        }
    }

    /// Induced sub-tournament on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        for &v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let m = vertices.len();
        Self::from_fn(m, |a, b| a != b && self.dominates(vertices[a], vertices[b]))
    }

    /// Whether `v` dominates every other vertex.
    pub fn is_dominating(&self, v: usize) -> bool {
        self.out_degree(v) + 1 == self.n
    }

    /// First 3-cycle `(a, b, c)` with `a → b → c → a` in colex order of the
    /// underlying triple, `a` being the triple's smallest vertex.
    pub fn find_three_cycle(&self) -> Option<(usize, usize, usize)> {
        for c in 2..self.n {
            for b in 1..c {
                for a in 0..b {
                    if self.dominates(a, b) && self.dominates(b, c) && self.dominates(c, a) {
                        return Some((a, b, c));
                    }
                    if self.dominates(a, c) && self.dominates(c, b) && self.dominates(b, a) {
                        return Some((a, c, b));
                    }
                }
            }
        }
        None
    }

    /// A tournament is transitive iff it has no 3-cycle, iff its scores are
    /// exactly `0, 1, .., n-1`.
    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.n];
        for v in 0..self.n {
            let d = self.out_degree(v);
            if seen[d] {
                return false;
            }
            seen[d] = true;
        }
        true
    }

    /// Vertices by decreasing out-degree (ties by index). For a transitive
    /// tournament this is its unique topological order.
    pub fn order_by_score(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (core::cmp::Reverse(self.out_degree(v)), v));
        order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Tournament::from_fn(2, |i, j| i < j).is_ok());
        assert_eq!(
            Tournament::from_fn(2, |_, _| false),
            Err(Error::NotATournament { i: 0, j: 1 })
        );
        assert_eq!(Tournament::from_fn(2, |i, j| i <= j), Err(Error::NotATournament { i: 0, j: 0 }));
    }

    #[test]
    fn three_cycle_witness() {
        let t = Tournament::three_cycle();
        assert!(!t.is_transitive());
        assert_eq!(t.find_three_cycle(), Some((0, 1, 2)));
        assert_eq!(t.reversed().find_three_cycle(), Some((0, 2, 1)));
    }

    #[test]
    fn transitivity_agrees_with_triple_scan() {
        for code in 0..1u64 << 10 {
            let t = Tournament::from_code(5, code);
            assert_eq!(t.is_transitive(), t.find_three_cycle().is_none());
        }
        assert_eq!(
            (0..1u64 << 10).filter(|&c| Tournament::from_code(5, c).is_transitive()).count(),
            120
        );
    }

    #[test]
    fn transitive_order_by_score() {
        let t = Tournament::transitive(5).reversed();
        assert!(t.is_transitive());
        assert_eq!(t.order_by_score(), vec![4, 3, 2, 1, 0]);
    }
}
