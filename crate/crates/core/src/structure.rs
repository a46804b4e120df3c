//! Hermitian l2-structures and their substructures.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};
use crate::selector::Selector;
use crate::subsets::{Bits, MAX_VERTICES};
use crate::tournament::Tournament;

/// A Hermitian l2-structure on vertices `0..n`: an `n×n` label matrix with
/// zero diagonal and `label(i, j) == conj(label(j, i))`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianStructure<S> {
    n: usize,
    labels: Vec<S>,
}

impl<S: Scalar> HermitianStructure<S> {
    /// Validates a row-major label matrix. In approximate mode the diagonal
    /// and conjugate symmetry are checked within tolerance, and the stored
    /// lower triangle is made exactly conjugate to the upper one.
    pub fn from_matrix(n: usize, mut labels: Vec<S>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        if labels.len() != n * n {
            return Err(Error::Shape { n });
        }
        for i in 0..n {
            if !labels[i * n + i].is_zero() {
                return Err(Error::NonZeroDiagonal(i));
            }
            labels[i * n + i] = S::zero();
            for j in i + 1..n {
                if !labels[i * n + j].approx_eq(&labels[j * n + i].conj()) {
                    return Err(Error::NotHermitian { i, j });
                }
                labels[j * n + i] = labels[i * n + j].conj();
            }
        }
        Ok(HermitianStructure { n, labels })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape { n });
        }
        Self::from_matrix(n, rows.into_iter().flatten().collect())
    }

    /// Fills `label(i, j)` for `i < j` from `upper` and the rest by
    /// conjugation; always Hermitian.
    pub fn from_upper(n: usize, mut upper: impl FnMut(usize, usize) -> S) -> Self {
        assert!((1..=MAX_VERTICES).contains(&n), "vertex count out of range");
        let mut labels = alloc::vec![S::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = upper(i, j);
                labels[j * n + i] = v.conj();
                labels[i * n + j] = v;
            }
        }
        HermitianStructure { n, labels }
    }

    /// Every off-diagonal label equal to the real `value`.
    pub fn constant(n: usize, value: S::Real) -> Self {
        Self::from_upper(n, |_, _| S::from_real(value.clone()))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn label(&self, i: usize, j: usize) -> &S {
        &self.labels[i * self.n + j]
    }

    /// Row-major labels.
    pub fn labels(&self) -> &[S] {
        &self.labels
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.labels.chunks(self.n)
    }

    /// Induced substructure `g[X]`, vertices in ascending order.
    pub fn substructure(&self, vertices: &[usize]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0]));
            }
        }
        if let Some(&v) = sorted.last().filter(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.induced(&sorted))
    }

    /// Induced substructure on the vertices of a nonempty in-range bitmask.
    pub fn substructure_mask(&self, mask: u64) -> Self {
        let vs: Vec<usize> = Bits(mask).collect();
        assert!(!vs.is_empty() && vs[vs.len() - 1] < self.n, "mask out of range");
        self.induced(&vs)
    }

    fn induced(&self, vs: &[usize]) -> Self {
        let m = vs.len();
        let mut labels = Vec::with_capacity(m * m);
        for &a in vs {
            for &b in vs {
                labels.push(self.label(a, b).clone());
            }
        }
        HermitianStructure { n: m, labels }
    }

    /// `g^δ(x, y) = δ(x)·g(x, y)·conj(δ(y))`.
    pub fn apply_selector(&self, selector: &Selector<S>) -> Result<Self> {
        if selector.len() != self.n {
            return Err(Error::SelectorLength { found: selector.len(), n: self.n });
        }
        Ok(Self::from_upper(self.n, |i, j| {
            selector.pair_factor(i, j) * self.label(i, j).clone()
        }))
    }

    /// All off-diagonal labels equal to one real value.
    pub fn is_real_constant(&self) -> bool {
        let first = match self.n {
            0 | 1 => return true,
            _ => self.label(0, 1),
        };
        first.im().is_zero()
            && (0..self.n).all(|i| (i + 1..self.n).all(|j| self.label(i, j).approx_eq(first)))
    }

    /// Equality up to the approximate tolerance (exact equality in exact mode).
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.n == other.n && self.labels.iter().zip(&other.labels).all(|(a, b)| a.approx_eq(b))
    }
}

/// A c-representation of a tournament.
#[derive(Debug, Clone, PartialEq)]
pub struct CRepresentation<S> {
    pub structure: HermitianStructure<S>,
    /// Set when `c` is real, so the result is the constant structure `c`
    /// rather than a representation in the strict sense.
    pub constant: bool,
}

/// `g(x, y) = c` if `x → y`, `conj(c)` otherwise. `c` must have modulus 1.
pub fn c_representation<S: Scalar>(t: &Tournament, c: &S) -> Result<CRepresentation<S>> {
    if !c.norm_sqr().within(&S::Real::one(), 1.0) {
        return Err(Error::NonUnitLabel { label: c.to_string() });
    }
    if t.order() == 0 {
        return Err(Error::NoVertices);
    }
    let cbar = c.conj();
    let structure = HermitianStructure::from_upper(t.order(), |i, j| {
        if t.dominates(i, j) {
            c.clone()
        } else {
            cbar.clone()
        }
    });
    Ok(CRepresentation { structure, constant: c.im().is_zero() })
}

/// Shorthand for the `i`-representation.
pub fn i_representation<S: Scalar>(t: &Tournament) -> HermitianStructure<S> {
    c_representation(t, &S::i()).expect("i has modulus 1").structure
}
