//! Paley tournaments, the hat construction, sign matrices and the
//! correspondence between doubly regular tournaments and skew Hadamard
//! matrices. Every identity here is checked in exact integer arithmetic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::charpoly::{char_poly_of_subset, RealPolynomial};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::{GaussianRational, Real};
use crate::structure::HermitianStructure;
use crate::subsets::{vertices, KSubsets, MAX_VERTICES};
use crate::tournament::Tournament;

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The quadratic-residue tournament on `Z_q`: `i → j` iff `j - i` is a
/// nonzero square mod `q`. Certified doubly regular before returning.
pub fn paley_tournament(q: u64) -> Result<Tournament> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q % 4 != 3 {
        return Err(Error::NotThreeModFour(q));
    }
    let n = q as usize;
    let mut residue = vec![false; n];
    for x in 1..q {
        residue[(x * x % q) as usize] = true;
    }
    let t = Tournament::from_fn(n, |i, j| i != j && residue[(j + n - i) % n])?;
    let cert = is_doubly_regular(&t)?;
    debug_assert_eq!(cert.t, (n - 3) / 4);
    Ok(t)
}

/// Adjoins a new vertex `0` dominating every vertex; vertex `v` of `t`
/// becomes `v + 1`.
pub fn hat(t: &Tournament) -> Tournament {
    Tournament::from_upper(t.order() + 1, |i, j| i == 0 || t.dominates(i - 1, j - 1))
}

/// A square matrix with entries in `{-1, 0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Shape { n });
        }
        let entries = entries
            .into_iter()
            .map(|e| match e {
                -1..=1 => Ok(e as i8),
                _ => Err(Error::SignEntry(e)),
            })
            .collect::<Result<_>>()?;
        Ok(SignMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape { n });
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j] as i64
    }

    pub fn entries(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.iter().map(|&e| e as i64)
    }

    pub fn rows(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        self.entries.chunks(self.n).map(|r| r.iter().map(|&e| e as i64).collect())
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> i8) -> Self {
        SignMatrix { n, entries: (0..n * n).map(|idx| f(idx / n, idx % n)).collect() }
    }

    /// `M + I`, provided every diagonal entry of `M` is zero.
    pub fn plus_identity(&self) -> Result<Self> {
        if let Some(i) = (0..self.n).find(|&i| self.get(i, i) != 0) {
            return Err(Error::NonZeroDiagonal(i));
        }
        Ok(Self::from_fn(self.n, |i, j| self.entries[i * self.n + j] + (i == j) as i8))
    }

    /// `M - I`, provided every diagonal entry of `M` is one.
    pub fn minus_identity(&self) -> Result<Self> {
        if let Some(i) = (0..self.n).find(|&i| self.get(i, i) != 1) {
            return Err(Error::InvalidSignMatrix { kind: "matrix with unit diagonal", at: (i, i) });
        }
        Ok(Self::from_fn(self.n, |i, j| self.entries[i * self.n + j] - (i == j) as i8))
    }
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// `S = A - Aᵗ` for the adjacency matrix `A` of `t`.
pub fn skew_adjacency(t: &Tournament) -> SignMatrix {
    SignMatrix::from_fn(t.order(), |i, j| {
        if i == j {
            0
        } else if t.dominates(i, j) {
            1
        } else {
            -1
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignMatrixKind {
    /// Zero diagonal, `±1` elsewhere, `CᵗC = (n-1)I`.
    Conference,
    /// A conference matrix with `C + Cᵗ = 0`.
    SkewConference,
    /// All entries `±1`, `HHᵗ = HᵗH = nI`.
    Hadamard,
    /// A Hadamard matrix with `H + Hᵗ = 2I`.
    SkewHadamard,
}

impl SignMatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            SignMatrixKind::Conference => "conference",
            SignMatrixKind::SkewConference => "skew_conference",
            SignMatrixKind::Hadamard => "hadamard",
            SignMatrixKind::SkewHadamard => "skew_hadamard",
        }
    }
}

impl fmt::Display for SignMatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SignMatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conference" => Ok(SignMatrixKind::Conference),
            "skew_conference" => Ok(SignMatrixKind::SkewConference),
            "hadamard" => Ok(SignMatrixKind::Hadamard),
            "skew_hadamard" => Ok(SignMatrixKind::SkewHadamard),
            _ => Err(Error::Precondition("unknown sign matrix kind")),
        }
    }
}

/// Outcome of [`validate_sign_matrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignCheck {
    pub valid: bool,
    /// First violated entry, in the order: entry domain, skewness, then the
    /// Gram identity, each scanned row by row.
    pub failure: Option<(usize, usize)>,
}

impl SignCheck {
    fn at(pos: Option<(usize, usize)>) -> Self {
        SignCheck { valid: pos.is_none(), failure: pos }
    }

    pub fn into_result(self, kind: SignMatrixKind) -> Result<()> {
        match self.failure {
            None => Ok(()),
            Some(at) => Err(Error::InvalidSignMatrix { kind: kind.name(), at }),
        }
    }
}

fn first_cell(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<(usize, usize)> {
    (0..n * n).map(|idx| (idx / n, idx % n)).find(|&(i, j)| bad(i, j))
}

/// Checks the defining identity of `kind` exactly.
pub fn validate_sign_matrix(m: &SignMatrix, kind: SignMatrixKind) -> SignCheck {
    use SignMatrixKind::*;
    let n = m.n;
    let conference = matches!(kind, Conference | SkewConference);
    let domain = first_cell(n, |i, j| {
        let e = m.get(i, j);
        if conference && i == j {
            e != 0
        } else {
            e == 0
        }
    });
    if domain.is_some() {
        return SignCheck::at(domain);
    }
    let skew = match kind {
        SkewConference => first_cell(n, |i, j| m.get(i, j) + m.get(j, i) != 0),
        SkewHadamard => first_cell(n, |i, j| m.get(i, j) + m.get(j, i) != 2 * (i == j) as i64),
        _ => None,
    };
    if skew.is_some() {
        return SignCheck::at(skew);
    }
    let target = |i: usize, j: usize| -> i64 {
        match (i == j, conference) {
            (false, _) => 0,
            (true, true) => n as i64 - 1,
            (true, false) => n as i64,
        }
    };
    // CᵗC for conference matrices; both HᵗH and HHᵗ for Hadamard ones.
    let cols = first_cell(n, |i, j| (0..n).map(|r| m.get(r, i) * m.get(r, j)).sum::<i64>() != target(i, j));
    if cols.is_some() || conference {
        return SignCheck::at(cols);
    }
    SignCheck::at(first_cell(n, |i, j| (0..n).map(|c| m.get(i, c) * m.get(j, c)).sum::<i64>() != target(i, j)))
}

/// Counts for a doubly regular tournament of order `n = 4t + 3`: every pair
/// of vertices is dominated by exactly `t` common vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrtCertificate {
    pub t: usize,
    pub n: usize,
    /// Common dominators of each pair `i < j`, pairs in row order.
    pub table: Vec<usize>,
}

fn common_dominators(t: &Tournament, x: usize, y: usize) -> usize {
    (0..t.order()).filter(|&z| t.dominates(z, x) && t.dominates(z, y)).count()
}

/// Certifies double regularity via the full pair-domination table.
pub fn is_doubly_regular(t: &Tournament) -> Result<DrtCertificate> {
    let n = t.order();
    let mut table = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            let c = common_dominators(t, x, y);
            if let Some(&first) = table.first() {
                if c != first {
                    return Err(Error::NotDoublyRegular { first: (0, 1), second: (x, y) });
                }
            }
            table.push(c);
        }
    }
    if n % 4 != 3 {
        return Err(Error::DoublyRegularOrder(n));
    }
    let tt = (n - 3) / 4;
    debug_assert!(table.iter().all(|&c| c == tt));
    Ok(DrtCertificate { t: tt, n, table })
}

/// `(C3, O3)`: the numbers of 3-cycles and of transitive triples of `t`
/// containing both `x` and `y`. Every third vertex completes exactly one of
/// the two, so `C3 + O3 = n - 2`.
pub fn pair_cycle_counts(t: &Tournament, x: usize, y: usize) -> Result<(usize, usize)> {
    let n = t.order();
    for v in [x, y] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if x == y {
        return Err(Error::DuplicateVertex(x));
    }
    let (a, b) = if t.dominates(x, y) { (x, y) } else { (y, x) };
    let cycles = (0..n).filter(|&z| z != a && z != b && t.dominates(b, z) && t.dominates(z, a)).count();
    Ok((cycles, n - 2 - cycles))
}

/// `Some(k)` when every pair of vertices lies on exactly `k > 0` 3-cycles.
/// Such tournaments have exactly `4k - 1` vertices.
pub fn is_homogeneous(t: &Tournament) -> Option<usize> {
    let n = t.order();
    if n < 3 {
        return None;
    }
    let k = pair_cycle_counts(t, 0, 1).ok()?.0;
    if k == 0 {
        return None;
    }
    for x in 0..n {
        for y in x + 1..n {
            if pair_cycle_counts(t, x, y).ok()?.0 != k {
                return None;
            }
        }
    }
    debug_assert_eq!(n, 4 * k - 1);
    Some(k)
}

/// `H = A - Aᵗ + I` for the adjacency matrix `A` of `hat(t)`; a skew
/// Hadamard matrix of order `4t + 4` when `t` is doubly regular.
pub fn skew_hadamard_from_drt(t: &Tournament) -> Result<SignMatrix> {
    is_doubly_regular(t)?;
    let h = skew_adjacency(&hat(t)).plus_identity()?;
    debug_assert!(validate_sign_matrix(&h, SignMatrixKind::SkewHadamard).valid);
    Ok(h)
}

/// Inverse of [`skew_hadamard_from_drt`].
///
/// `H` is first replaced by `DHD` with `D = diag(H[0][j])`, which keeps it
/// skew Hadamard and makes row 0 all `+1`. Writing the result as
/// `[[1, e], [-eᵗ, K]]`, the tournament has adjacency `(K + J - 2I)/2`.
pub fn drt_from_skew_hadamard(h: &SignMatrix) -> Result<Tournament> {
    validate_sign_matrix(h, SignMatrixKind::SkewHadamard).into_result(SignMatrixKind::SkewHadamard)?;
    let n = h.order();
    if n < 4 {
        return Err(Error::DoublyRegularOrder(n.saturating_sub(1)));
    }
    let d: Vec<i64> = (0..n).map(|j| h.get(0, j)).collect();
    let normalized = |i: usize, j: usize| d[i] * h.get(i, j) * d[j];
    let t = Tournament::from_fn(n - 1, |i, j| i != j && normalized(i + 1, j + 1) == 1)?;
    is_doubly_regular(&t)?;
    Ok(t)
}

/// `iS` as a Hermitian structure, for a skew-symmetric sign matrix `S`.
pub fn i_weighted_structure(s: &SignMatrix) -> Result<HermitianStructure<GaussianRational>> {
    let n = s.order();
    let rows = s
        .rows()
        .map(|r| r.into_iter().map(|e| GaussianRational::from_ints(0, e)).collect())
        .collect();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    HermitianStructure::from_rows(rows)
}

/// Characteristic polynomial of `iS` with `d` rows and matching columns
/// deleted, for `S` a skew conference matrix of order `4t + 4`:
///
/// | `d` | polynomial |
/// |---|---|
/// | 0 | `(x² - 4t - 3)^(2t+2)` |
/// | 1 | `x (x² - 4t - 3)^(2t+1)` |
/// | 2 | `(x² - 1)(x² - 4t - 3)^(2t)` |
/// | 3 | `x (x² - 3)(x² - 4t - 3)^(2t-1)` |
///
/// For `t = 0` and `d = 3` a single vertex remains and the result is `x`.
pub fn closed_form_deletion_poly<R: Real>(t: usize, d: usize) -> Result<RealPolynomial<R>> {
    if d > 3 {
        return Err(Error::OutOfRange { what: "deletions", value: d, expected: "0..=3".into() });
    }
    let q = RealPolynomial::x2_minus(R::from_i64(4 * t as i64 + 3));
    let x = RealPolynomial::monomial(1);
    let e = 2 * t as u32;
    Ok(match d {
        0 => q.pow(e + 2),
        1 => x.mul(&q.pow(e + 1)),
        2 => RealPolynomial::x2_minus(R::one()).mul(&q.pow(e)),
        _ if t == 0 => x,
        _ => x.mul(&RealPolynomial::x2_minus(R::from_i64(3))).mul(&q.pow(e - 1)),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeletionReport {
    pub valid: bool,
    pub t: usize,
    pub subsets_checked: u64,
    /// Deleted vertices of the first subset whose polynomial differs from
    /// the closed form.
    pub failure: Option<Vec<usize>>,
}

/// Checks every deletion of at most `max_deletions` (capped at 3) rows and
/// matching columns of `iS` against [`closed_form_deletion_poly`].
/// Subsets are visited by size, then in colex order.
///
/// `S` must be skew-symmetric with zero diagonal and `±1` elsewhere, of
/// order `4t + 4`. It need not satisfy the conference identity: if it does
/// not, the empty deletion already fails.
pub fn verify_deletion_spectra(s: &SignMatrix, max_deletions: usize) -> Result<DeletionReport> {
    let n = s.order();
    let malformed = first_cell(n, |i, j| {
        let e = s.get(i, j);
        (i == j) != (e == 0) || e + s.get(j, i) != 0
    });
    if let Some(at) = malformed {
        return Err(Error::InvalidSignMatrix { kind: "skew sign matrix", at });
    }
    if !n.is_multiple_of(4) || n == 0 {
        return Err(Error::Precondition("skew conference matrix order must be a positive multiple of 4"));
    }
    let t = n / 4 - 1;
    let g = i_weighted_structure(s)?;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut checked = 0;
    for d in 0..=max_deletions.min(3).min(n - 1) {
        let expected: RealPolynomial<Rational> = closed_form_deletion_poly(t, d)?;
        for deleted in KSubsets::new(n, d) {
            checked += 1;
            if char_poly_of_subset(&g, full & !deleted) != expected {
                return Ok(DeletionReport { valid: false, t, subsets_checked: checked, failure: Some(vertices(deleted)) });
            }
        }
    }
    Ok(DeletionReport { valid: true, t, subsets_checked: checked, failure: None })
}
