//! Deciding k-spectral monomorphy by exhaustive enumeration.
//!
//! Subsets are visited in colex order; the first `k`-subset is the reference
//! and a report's witness is always the colex-least mismatching subset, so
//! reports are fully deterministic.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::charpoly::{char_poly_of_subset, determinant_of_subset, RealPolynomial};
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};
use crate::structure::HermitianStructure;
use crate::subsets::{binomial, colex_rank, vertices, KSubsets};

/// A pair of equal-size vertex subsets whose substructures differ spectrally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetWitness {
    pub reference: Vec<usize>,
    pub mismatch: Vec<usize>,
}

impl SubsetWitness {
    fn from_masks(reference: u64, mismatch: u64) -> Self {
        SubsetWitness { reference: vertices(reference), mismatch: vertices(mismatch) }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonomorphyReport<R> {
    pub k: usize,
    pub verdict: bool,
    /// The shared characteristic polynomial, when `verdict` holds.
    pub common_poly: Option<RealPolynomial<R>>,
    pub witness: Option<SubsetWitness>,
    /// Subsets compared before the verdict was reached.
    pub subsets_examined: u64,
    /// Approximate mode only: some comparison fell within a factor 10 of
    /// the tolerance boundary.
    pub fragile: bool,
}

fn near_boundary(margin: Option<f64>) -> bool {
    margin.is_some_and(|m| (0.1..=10.0).contains(&m))
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange { what: "k", value: k, expected: format!("1..={n}") });
    }
    Ok(())
}

/// Compares the polynomials produced by `poly_of` over all `k`-subsets.
fn scan<R: Real>(
    n: usize,
    k: usize,
    mut poly_of: impl FnMut(u64) -> RealPolynomial<R>,
) -> MonomorphyReport<R> {
    let mut subsets = KSubsets::new(n, k);
    let first = subsets.next().expect("k <= n");
    let reference = poly_of(first);
    let mut examined = 1;
    let mut fragile = false;
    for mask in subsets {
        examined += 1;
        let p = poly_of(mask);
        fragile |= near_boundary(reference.margin(&p));
        if !reference.approx_eq(&p) {
            return MonomorphyReport {
                k,
                verdict: false,
                common_poly: None,
                witness: Some(SubsetWitness::from_masks(first, mask)),
                subsets_examined: examined,
                fragile,
            };
        }
    }
    MonomorphyReport { k, verdict: true, common_poly: Some(reference), witness: None, subsets_examined: examined, fragile }
}

/// Whether all `k`-vertex substructures of `g` share one characteristic
/// polynomial. Stops at the first mismatch.
pub fn is_k_spectrally_monomorphic<S: Scalar>(
    g: &HermitianStructure<S>,
    k: usize,
) -> Result<MonomorphyReport<S::Real>> {
    let n = g.order();
    check_k(n, k)?;
    Ok(scan(n, k, |mask| char_poly_of_subset(g, mask)))
}

/// Largest order for which [`monomorphy_profile`] tabulates all subset
/// determinants instead of computing each substructure separately.
pub const SUBSET_TABLE_MAX_ORDER: usize = 14;

/// Reports for every `k = 1..=n`.
///
/// Up to [`SUBSET_TABLE_MAX_ORDER`] vertices this computes `det g[Z]` once
/// for every subset `Z` and then the ranked subset sums
/// `f_p(X) = Σ_{Z ⊆ X, |Z| = p} det g[Z]` for all `X` by a zeta transform;
/// the characteristic polynomial of `g[X]` has coefficients
/// `(-1)^p f_p(X)`. Larger structures fall back to per-`k` enumeration.
pub fn monomorphy_profile<S: Scalar>(g: &HermitianStructure<S>) -> Vec<MonomorphyReport<S::Real>> {
    let n = g.order();
    if n > SUBSET_TABLE_MAX_ORDER {
        return (1..=n)
            .map(|k| is_k_spectrally_monomorphic(g, k).expect("k in range"))
            .collect();
    }
    let ranked = ranked_minor_sums(g);
    (1..=n)
        .map(|k| {
            scan(n, k, |mask| {
                let tail: Vec<S::Real> = (1..=k)
                    .map(|p| {
                        let s = ranked[p][mask as usize].clone();
                        if p % 2 == 1 {
                            -s
                        } else {
                            s
                        }
                    })
                    .collect();
                RealPolynomial::from_monic_tail(&tail)
            })
        })
        .collect()
}

/// `table[p][X] = Σ_{Z ⊆ X, |Z| = p} det g[Z]` for every subset `X`.
fn ranked_minor_sums<S: Scalar>(g: &HermitianStructure<S>) -> Vec<Vec<S::Real>> {
    let n = g.order();
    let size = 1usize << n;
    let mut table = vec![vec![S::Real::zero(); size]; n + 1];
    // 1×1 minors of a zero-diagonal matrix vanish.
    for x in (1..size).filter(|x| x.count_ones() >= 2) {
        table[x.count_ones() as usize][x] = determinant_of_subset(g, x as u64);
    }
    for row in table.iter_mut().skip(2) {
        for bit in 0..n {
            let b = 1usize << bit;
            for x in 0..size {
                if x & b != 0 {
                    let add = row[x ^ b].clone();
                    if add != S::Real::zero() {
                        row[x] = row[x].clone() + add;
                    }
                }
            }
        }
    }
    table
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetConstancy<R> {
    pub constant: bool,
    /// The common determinant, when constant.
    pub value: Option<R>,
    pub witness: Option<SubsetWitness>,
}

/// Whether `det g[X]` is the same for every `p`-subset `X`.
pub fn det_constancy<S: Scalar>(g: &HermitianStructure<S>, p: usize) -> Result<DetConstancy<S::Real>> {
    let n = g.order();
    check_k(n, p)?;
    let mut subsets = KSubsets::new(n, p);
    let first = subsets.next().expect("p <= n");
    let reference = determinant_of_subset(g, first);
    for mask in subsets {
        let d = determinant_of_subset(g, mask);
        let scale = d.to_f64().abs().max(reference.to_f64().abs()).max(1.0);
        if !d.within(&reference, scale) {
            return Ok(DetConstancy {
                constant: false,
                value: None,
                witness: Some(SubsetWitness::from_masks(first, mask)),
            });
        }
    }
    Ok(DetConstancy { constant: true, value: Some(reference), witness: None })
}

/// A function on the `p`-subsets of an `n`-set, stored in colex order.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsetTable<R> {
    n: usize,
    p: usize,
    values: Vec<R>,
}

impl<R: Real> SubsetTable<R> {
    /// `values[i]` belongs to the `i`-th `p`-subset in colex order.
    pub fn new(n: usize, p: usize, values: Vec<R>) -> Result<Self> {
        if n > crate::subsets::MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: crate::subsets::MAX_VERTICES });
        }
        if p > n {
            return Err(Error::OutOfRange { what: "p", value: p, expected: format!("0..={n}") });
        }
        let expected = binomial(n, p) as usize;
        if values.len() != expected {
            return Err(Error::TableLength { found: values.len(), expected });
        }
        Ok(SubsetTable { n, p, values })
    }

    pub fn from_fn(n: usize, p: usize, f: impl FnMut(u64) -> R) -> Result<Self> {
        if n > crate::subsets::MAX_VERTICES || p > n {
            return Self::new(n, p, Vec::new());
        }
        Self::new(n, p, KSubsets::new(n, p).map(f).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    /// Value on the `p`-subset `mask`.
    pub fn get(&self, mask: u64) -> &R {
        debug_assert_eq!(mask.count_ones() as usize, self.p);
        &self.values[colex_rank(mask) as usize]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransferReport<R> {
    /// `Σ_{P ⊆ B} f(P)` is the same for every `(p + r)`-subset `B`.
    pub hypothesis_holds: bool,
    /// For `|X| ≤ n - (p + r)`, `Σ_{X ⊆ P} f(P)` depends only on `|X|`.
    pub cardinality_dependence_holds: bool,
    /// `f` is constant; only evaluated when `n ≥ 2p + r`.
    pub conclusion_holds: Option<bool>,
    pub constant_value: Option<R>,
}

impl<R> TransferReport<R> {
    /// Whether this instance is consistent with the transfer lemma.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_holds || (self.cardinality_dependence_holds && self.conclusion_holds != Some(false))
    }
}

fn all_within<R: Real>(mut it: impl Iterator<Item = R>) -> (bool, Option<R>) {
    let Some(first) = it.next() else {
        return (true, None);
    };
    for v in it {
        let scale = v.to_f64().abs().max(first.to_f64().abs()).max(1.0);
        if !v.within(&first, scale) {
            return (false, None);
        }
    }
    (true, Some(first))
}

/// Evaluates the window-sum hypothesis and both conclusions of the
/// transfer lemma for `f` with window size `p + r`.
pub fn pouzet_transfer_check<R: Real>(f: &SubsetTable<R>, r: usize) -> Result<TransferReport<R>> {
    let (n, p) = (f.n, f.p);
    if n < p + r {
        return Err(Error::OutOfRange { what: "p + r", value: p + r, expected: format!("0..={n}") });
    }
    let window_sum = |b: u64| {
        let members = vertices(b);
        KSubsets::new(members.len(), p).fold(R::zero(), |acc, local| {
            let mask = crate::subsets::Bits(local).fold(0u64, |m, i| m | 1 << members[i]);
            acc + f.get(mask).clone()
        })
    };
    let (hypothesis_holds, _) = all_within(KSubsets::new(n, p + r).map(window_sum));

    let mut cardinality_dependence_holds = true;
    for s in 0..=p.min(n - p - r) {
        let superset_sum = |x: u64| {
            KSubsets::new(n, p)
                .filter(|&m| m & x == x)
                .fold(R::zero(), |acc, m| acc + f.get(m).clone())
        };
        if !all_within(KSubsets::new(n, s).map(superset_sum)).0 {
            cardinality_dependence_holds = false;
            break;
        }
    }

    let (conclusion_holds, constant_value) = if n >= 2 * p + r {
        let (c, v) = all_within(f.values.iter().cloned());
        (Some(c), v)
    } else {
        (None, None)
    };
    Ok(TransferReport { hypothesis_holds, cardinality_dependence_holds, conclusion_holds, constant_value })
}
