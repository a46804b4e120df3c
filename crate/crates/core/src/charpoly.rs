//! Characteristic polynomials, determinants and principal-minor sums.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};
use crate::structure::HermitianStructure;
use crate::subsets::{Bits, KSubsets};

/// A real polynomial, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Real> RealPolynomial<R> {
    /// Trailing zero coefficients are dropped; the zero polynomial keeps one.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| *c == R::zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(R::zero());
        }
        RealPolynomial { coeffs }
    }

    /// Coefficients of `x^n + a₁x^{n-1} + … + aₙ` given `[a₁, .., aₙ]`.
    pub fn from_monic_tail(tail: &[R]) -> Self {
        let mut coeffs: Vec<R> = tail.iter().rev().cloned().collect();
        coeffs.push(R::one());
        RealPolynomial { coeffs }
    }

    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![R::zero(); degree + 1];
        coeffs[degree] = R::one();
        RealPolynomial { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `x² - c`.
    pub fn x2_minus(c: R) -> Self {
        RealPolynomial { coeffs: vec![-c, R::zero(), R::one()] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> R {
        self.coeffs.get(j).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.within(&R::one(), 1.0))
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::monomial(0), |acc, _| acc.mul(self))
    }

    /// Coefficientwise equality, within `eps·max(1, |coeff|)` in
    /// approximate mode.
    pub fn approx_eq(&self, other: &Self) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|j| {
            let (a, b) = (self.coeff(j), other.coeff(j));
            let scale = a.to_f64().abs().max(b.to_f64().abs()).max(1.0);
            a.within(&b, scale)
        })
    }

    /// Largest coefficient deviation in units of the tolerance, `None` in
    /// exact mode.
    pub fn margin(&self, other: &Self) -> Option<f64> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).try_fold(0.0f64, |acc, j| {
            let (a, b) = (self.coeff(j), other.coeff(j));
            let scale = a.to_f64().abs().max(b.to_f64().abs()).max(1.0);
            a.margin(&b, scale).map(|m| acc.max(m))
        })
    }
}

/// Writes e.g. `x^5-10x^3+21x`; non-integer coefficients are parenthesized.
impl<R: Real> fmt::Display for RealPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if *c == R::zero() && !(first && j == 0) {
                continue;
            }
            let negative = *c < R::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let text = alloc::format!("{mag}");
            let unit = mag == R::one();
            if j == 0 || !unit {
                if text.contains(['/', 'e']) && j > 0 {
                    write!(f, "({text})")?;
                } else {
                    f.write_str(&text)?;
                }
            }
            match j {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{j}")?,
            }
        }
        Ok(())
    }
}

/// Faddeev–LeVerrier on a dense row-major `n×n` matrix: returns
/// `[a₁, .., aₙ]` with `det(xI - A) = xⁿ + a₁xⁿ⁻¹ + … + aₙ`.
///
/// `M₁ = I`, `a₁ = -tr A`; `Mₖ = A·Mₖ₋₁ + aₖ₋₁I`, `aₖ = -tr(A·Mₖ)/k`.
fn faddeev_leverrier<S: Scalar>(n: usize, a: &[S]) -> Vec<S> {
    let mut tail = Vec::with_capacity(n);
    if n == 0 {
        return tail;
    }
    let trace = |m: &[S]| (0..n).fold(S::zero(), |acc, i| acc + m[i * n + i].clone());
    let mut m: Vec<S> = a.to_vec(); // A·M₁
    let mut coeff = -trace(&m);
    tail.push(coeff.clone());
    let mut next = vec![S::zero(); n * n];
    for k in 2..=n {
        // M_k = A·M_{k-1} + a_{k-1}·I, where m currently holds A·M_{k-1}.
        for i in 0..n {
            m[i * n + i] = m[i * n + i].clone() + coeff.clone();
        }
        // next = A·M_k
        for i in 0..n {
            for j in 0..n {
                let mut acc = S::zero();
                for l in 0..n {
                    let x = &a[i * n + l];
                    if x.is_zero() {
                        continue;
                    }
                    acc = acc + x.clone() * m[l * n + j].clone();
                }
                next[i * n + j] = acc;
            }
        }
        core::mem::swap(&mut m, &mut next);
        let k_inv = S::Real::from_i64(k as i64).recip().expect("k > 0");
        coeff = (-trace(&m)).scale(&k_inv);
        tail.push(coeff.clone());
    }
    tail
}

fn real_part<S: Scalar>(z: S) -> S::Real {
    if S::Real::EXACT {
        assert!(z.im().is_zero(), "Hermitian invariant violated: non-real coefficient {z}");
    } else {
        let scale = z.re().to_f64().abs().max(1.0);
        debug_assert!(z.im().within(&S::Real::zero(), 1e3 * scale), "non-real coefficient {z}");
    }
    z.re()
}

/// Gaussian integers with overflow-checked `i128` parts.
#[derive(Clone, Copy, PartialEq)]
struct Zi(i128, i128);

impl Zi {
    const ZERO: Zi = Zi(0, 0);

    fn add(self, o: Zi) -> Option<Zi> {
        Some(Zi(self.0.checked_add(o.0)?, self.1.checked_add(o.1)?))
    }
    fn sub(self, o: Zi) -> Option<Zi> {
        Some(Zi(self.0.checked_sub(o.0)?, self.1.checked_sub(o.1)?))
    }
    fn mul(self, o: Zi) -> Option<Zi> {
        let re = self.0.checked_mul(o.0)?.checked_sub(self.1.checked_mul(o.1)?)?;
        let im = self.0.checked_mul(o.1)?.checked_add(self.1.checked_mul(o.0)?)?;
        Some(Zi(re, im))
    }
    /// Exact division by a nonzero Gaussian integer; `None` if inexact.
    fn div_exact(self, d: Zi) -> Option<Zi> {
        let norm = d.0.checked_mul(d.0)?.checked_add(d.1.checked_mul(d.1)?)?;
        let num = self.mul(Zi(d.0, -d.1))?;
        if num.0 % norm != 0 || num.1 % norm != 0 {
            return None;
        }
        Some(Zi(num.0 / norm, num.1 / norm))
    }
}

fn gaussian_ints<S: Scalar>(a: &[S]) -> Option<Vec<Zi>> {
    if !S::Real::EXACT {
        return None;
    }
    a.iter().map(|z| z.to_gaussian_int().map(|(re, im)| Zi(re as i128, im as i128))).collect()
}

fn real_from_zi<R: Real>(z: Zi) -> Option<R> {
    assert!(z.1 == 0, "Hermitian invariant violated: non-real coefficient");
    i64::try_from(z.0).ok().map(R::from_i64)
}

/// Faddeev–LeVerrier over the Gaussian integers. Every `Mₖ` and `aₖ` of an
/// integer matrix is integral, so the division by `k` is exact.
fn faddeev_leverrier_zi(n: usize, a: &[Zi]) -> Option<Vec<Zi>> {
    let mut tail = Vec::with_capacity(n);
    if n == 0 {
        return Some(tail);
    }
    let trace = |m: &[Zi]| (0..n).try_fold(Zi::ZERO, |acc, i| acc.add(m[i * n + i]));
    let mut m = a.to_vec();
    let t = trace(&m)?;
    let mut coeff = Zi(-t.0, -t.1);
    tail.push(coeff);
    let mut next = vec![Zi::ZERO; n * n];
    for k in 2..=n {
        for i in 0..n {
            m[i * n + i] = m[i * n + i].add(coeff)?;
        }
        for i in 0..n {
            for j in 0..n {
                let mut acc = Zi::ZERO;
                for l in 0..n {
                    let x = a[i * n + l];
                    if x != Zi::ZERO {
                        acc = acc.add(x.mul(m[l * n + j])?)?;
                    }
                }
                next[i * n + j] = acc;
            }
        }
        core::mem::swap(&mut m, &mut next);
        let t = trace(&m)?;
        let k = k as i128;
        if t.0 % k != 0 || t.1 % k != 0 {
            return None;
        }
        coeff = Zi(-t.0 / k, -t.1 / k);
        tail.push(coeff);
    }
    Some(tail)
}

/// Bareiss fraction-free elimination over the Gaussian integers.
fn bareiss_zi(n: usize, mut a: Vec<Zi>) -> Option<Zi> {
    let mut sign = 1i128;
    let mut prev = Zi(1, 0);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| a[r * n + col] != Zi::ZERO) else {
            return Some(Zi::ZERO);
        };
        if p != col {
            for j in 0..n {
                a.swap(p * n + j, col * n + j);
            }
            sign = -sign;
        }
        let pv = a[col * n + col];
        for r in col + 1..n {
            for j in col + 1..n {
                let v = pv.mul(a[r * n + j])?.sub(a[r * n + col].mul(a[col * n + j])?)?;
                a[r * n + j] = v.div_exact(prev)?;
            }
            a[r * n + col] = Zi::ZERO;
        }
        prev = pv;
    }
    let d = if n == 0 { Zi(1, 0) } else { a[n * n - 1] };
    Some(Zi(sign * d.0, sign * d.1))
}

fn char_poly_of_matrix<S: Scalar>(n: usize, a: &[S]) -> RealPolynomial<S::Real> {
    if let Some(tail) = gaussian_ints(a)
        .and_then(|z| faddeev_leverrier_zi(n, &z))
        .and_then(|tail| tail.into_iter().map(real_from_zi).collect::<Option<Vec<S::Real>>>())
    {
        return RealPolynomial::from_monic_tail(&tail);
    }
    let tail: Vec<S::Real> = faddeev_leverrier(n, a).into_iter().map(real_part).collect();
    RealPolynomial::from_monic_tail(&tail)
}

/// `P_g(x) = det(xI - M)` for the label matrix `M` of `g`.
pub fn char_poly<S: Scalar>(g: &HermitianStructure<S>) -> RealPolynomial<S::Real> {
    char_poly_of_matrix(g.order(), g.labels())
}

/// Characteristic polynomial of `g[X]` for the vertex set of `mask`.
pub fn char_poly_of_subset<S: Scalar>(g: &HermitianStructure<S>, mask: u64) -> RealPolynomial<S::Real> {
    let (k, m) = gather(g, mask);
    char_poly_of_matrix(k, &m)
}

fn gather<S: Scalar>(g: &HermitianStructure<S>, mask: u64) -> (usize, Vec<S>) {
    let vs: Vec<usize> = Bits(mask).collect();
    let k = vs.len();
    let mut m = Vec::with_capacity(k * k);
    for &a in &vs {
        for &b in &vs {
            m.push(g.label(a, b).clone());
        }
    }
    (k, m)
}

/// Determinant by Gaussian elimination (an independent route from the
/// characteristic polynomial).
fn determinant_of_matrix<S: Scalar>(n: usize, mut a: Vec<S>) -> S {
    let mut det = S::one();
    for col in 0..n {
        let pivot = if S::Real::EXACT {
            (col..n).find(|&r| !a[r * n + col].is_zero())
        } else {
            (col..n)
                .filter(|&r| !a[r * n + col].is_zero())
                .max_by(|&r, &s| {
                    a[r * n + col]
                        .norm_sqr()
                        .partial_cmp(&a[s * n + col].norm_sqr())
                        .unwrap_or(core::cmp::Ordering::Equal)
                })
        };
        let Some(p) = pivot else {
            return S::zero();
        };
        if p != col {
            for j in 0..n {
                a.swap(p * n + j, col * n + j);
            }
            det = -det;
        }
        let pv = a[col * n + col].clone();
        det = det * pv.clone();
        let inv = pv.inv().expect("pivot is nonzero");
        for r in col + 1..n {
            let factor = a[r * n + col].clone() * inv.clone();
            if factor.is_zero() {
                continue;
            }
            for j in col..n {
                let v = a[r * n + j].clone() - factor.clone() * a[col * n + j].clone();
                a[r * n + j] = v;
            }
        }
    }
    det
}

/// `det M`; real for Hermitian `M`.
pub fn determinant<S: Scalar>(g: &HermitianStructure<S>) -> S::Real {
    det_real(g.order(), g.labels().to_vec())
}

fn det_real<S: Scalar>(n: usize, a: Vec<S>) -> S::Real {
    if let Some(d) = gaussian_ints(&a).and_then(|z| bareiss_zi(n, z)).and_then(real_from_zi) {
        return d;
    }
    real_part(determinant_of_matrix(n, a))
}

/// `det g[X]` for the vertex set of `mask`.
pub fn determinant_of_subset<S: Scalar>(g: &HermitianStructure<S>, mask: u64) -> S::Real {
    let (k, m) = gather(g, mask);
    det_real(k, m)
}

/// Sum of all `p×p` principal minors, subsets visited in colex order.
pub fn principal_minor_sum<S: Scalar>(g: &HermitianStructure<S>, p: usize) -> Result<S::Real> {
    let n = g.order();
    if p == 0 || p > n {
        return Err(Error::OutOfRange { what: "minor order", value: p, expected: alloc::format!("1..={n}") });
    }
    Ok(KSubsets::new(n, p).fold(S::Real::zero(), |acc, mask| acc + determinant_of_subset(g, mask)))
}

/// `x ↦ sⁿ·P(x/s)`: the characteristic polynomial after a selector of
/// squared modulus `s` acts.
pub fn scaled_poly<R: Real>(p: &RealPolynomial<R>, s: &R) -> Result<RealPolynomial<R>> {
    if !s.is_positive() {
        return Err(Error::NonPositivePolynomialScale);
    }
    let n = p.degree();
    let mut power = R::one();
    let mut coeffs = vec![R::zero(); n + 1];
    // coefficient of x^j picks up s^(n-j)
    for j in (0..=n).rev() {
        coeffs[j] = p.coeff(j) * power.clone();
        power = power * s.clone();
    }
    Ok(RealPolynomial::new(coeffs))
}
