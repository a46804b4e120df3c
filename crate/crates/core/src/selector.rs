//! Selectors, normalization and the equivalence `g ~ g^δ`.
//!
//! A selector is stored as `δ(x) = √scale · values[x]`, where all `values`
//! share one modulus and `scale > 0`. The action only ever uses the products
//! `δ(x)·conj(δ(y)) = scale · values[x]·conj(values[y])`, so selectors whose
//! modulus is irrational still act exactly on Gaussian-rational labels.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result, TwoMonoFailure};
use crate::scalar::{Real, Scalar};
use crate::structure::HermitianStructure;

#[derive(Debug, Clone, PartialEq)]
pub struct Selector<S: Scalar> {
    values: Vec<S>,
    scale: S::Real,
}

fn rel_scale<R: Real>(r: &R) -> f64 {
    r.to_f64().abs().max(1.0)
}

impl<S: Scalar> Selector<S> {
    /// A selector with the given values and unit scale.
    pub fn new(values: Vec<S>) -> Result<Self> {
        Self::with_scale(values, S::Real::one())
    }

    /// `δ(x) = √scale · values[x]`.
    pub fn with_scale(values: Vec<S>, scale: S::Real) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::NonPositiveScale);
        }
        if let Some(first) = values.first() {
            let m = first.norm_sqr();
            for (x, v) in values.iter().enumerate() {
                if v.is_zero() {
                    return Err(Error::ZeroSelectorValue(x));
                }
                if !v.norm_sqr().within(&m, rel_scale(&m)) {
                    return Err(Error::UnequalSelectorModuli(0, x));
                }
            }
        }
        Ok(Selector { values, scale })
    }

    pub fn identity(n: usize) -> Self {
        Selector { values: alloc::vec![S::one(); n], scale: S::Real::one() }
    }

    pub fn constant(n: usize, value: S) -> Result<Self> {
        Self::new(alloc::vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn scale(&self) -> &S::Real {
        &self.scale
    }

    /// `|δ|²`, the common squared modulus.
    pub fn modulus_sqr(&self) -> S::Real {
        match self.values.first() {
            Some(v) => self.scale.clone() * v.norm_sqr(),
            None => self.scale.clone(),
        }
    }

    /// `δ(x)` itself, when `√scale` lies in the scalar field.
    pub fn value(&self, x: usize) -> Option<S> {
        let root = self.scale.sqrt()?;
        Some(self.values[x].scale(&root))
    }

    /// `δ(x)·conj(δ(y))`.
    pub fn pair_factor(&self, x: usize, y: usize) -> S {
        (self.values[x].clone() * self.values[y].conj()).scale(&self.scale)
    }

    /// Pointwise product `(self·other)(x) = self(x)·other(x)`, so that
    /// `g.apply(other).apply(self) == g.apply(self.compose(other))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SelectorLength { found: other.len(), n: self.len() });
        }
        Ok(Selector {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.clone() * b.clone()).collect(),
            scale: self.scale.clone() * other.scale.clone(),
        })
    }

    /// Pointwise inverse `x ↦ 1/δ(x)`.
    pub fn inverse(&self) -> Self {
        let values = self
            .values
            .iter()
            .map(|v| v.inv().expect("selector values are nonzero"))
            .collect();
        let scale = self.scale.recip().expect("selector scale is positive");
        Selector { values, scale }
    }
}

/// The common value of `|g(x, y)|²`; `Ok(None)` for a single vertex, which
/// has no labels.
pub fn common_modulus_sqr<S: Scalar>(
    g: &HermitianStructure<S>,
) -> core::result::Result<Option<S::Real>, TwoMonoFailure> {
    let n = g.order();
    if n < 2 {
        return Ok(None);
    }
    let m = g.label(0, 1).norm_sqr();
    for i in 0..n {
        for j in i + 1..n {
            let v = g.label(i, j);
            if v.is_zero() {
                return Err(TwoMonoFailure::ZeroLabel { pair: (i, j) });
            }
            if !v.norm_sqr().within(&m, rel_scale(&m)) {
                return Err(TwoMonoFailure::UnequalModulus { first: (0, 1), second: (i, j) });
            }
        }
    }
    Ok(Some(m))
}

/// A structure is 2-spectrally monomorphic iff `|g(x, y)|` is constant; we
/// additionally require it to be nonzero, as normalization does.
pub fn is_two_spectrally_monomorphic<S: Scalar>(g: &HermitianStructure<S>) -> bool {
    common_modulus_sqr(g).is_ok()
}

/// The unique structure equivalent to `g` and normalized at `w`
/// (`g̃(w, v) = 1` for all `v ≠ w`), with the selector `δ` such that
/// `g^δ = g̃`.
///
/// With `m = |g(x, y)|`, the selector is `δ(w) = m/√(m³)`,
/// `δ(v) = g(w, v)/√(m³)`, of squared modulus `1/m`, giving
/// `g̃(u, v) = g(w, u)·g(u, v)·conj(g(w, v)) / m³`. In exact mode this needs
/// `m` itself to be rational.
pub fn normalize_at<S: Scalar>(
    g: &HermitianStructure<S>,
    w: usize,
) -> Result<(HermitianStructure<S>, Selector<S>)> {
    let n = g.order();
    if w >= n {
        return Err(Error::VertexOutOfRange { vertex: w, n });
    }
    let Some(m2) = common_modulus_sqr(g).map_err(Error::NotTwoMonomorphic)? else {
        return Ok((g.clone(), Selector::identity(n)));
    };
    let m = m2
        .sqrt()
        .ok_or_else(|| Error::IrrationalModulus { modulus_sqr: m2.to_string() })?;
    let values = (0..n)
        .map(|v| if v == w { S::from_real(m.clone()) } else { g.label(w, v).clone() })
        .collect();
    let m3 = m2 * m;
    let selector = Selector::with_scale(values, m3.recip().expect("nonzero modulus"))?;
    let mut normalized = g.apply_selector(&selector)?;
    if !S::Real::EXACT {
        // Pin the normalized row to exactly 1 to absorb rounding.
        normalized = HermitianStructure::from_upper(n, |i, j| {
            if i == w || j == w {
                S::one()
            } else {
                normalized.label(i, j).clone()
            }
        });
    }
    Ok((normalized, selector))
}

/// Which argument of [`are_equivalent`] failed a precondition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonEquivalence {
    NotTwoMonomorphic { side: Side, failure: TwoMonoFailure },
    /// The normal forms at vertex 0 differ at this pair.
    NormalFormsDiffer { pair: (usize, usize) },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Equivalence<S: Scalar> {
    pub equivalent: bool,
    /// A selector `δ` with `g^δ = h`. Present whenever `g ~ h` and `|δ|²`,
    /// which must equal `|h|/|g|`, is rational (always when the moduli match).
    pub witness: Option<Selector<S>>,
    pub reason: Option<NonEquivalence>,
}

/// Decides `g ~ h` by comparing normal forms at vertex 0.
///
/// The normal-form label at `(u, v)` is the direction of
/// `t(u, v) = g(0, u)·g(u, v)·conj(g(0, v))`, so two structures are
/// equivalent iff these products point the same way for every pair. This
/// needs no square roots, so it is exact even for irrational moduli.
pub fn are_equivalent<S: Scalar>(
    g: &HermitianStructure<S>,
    h: &HermitianStructure<S>,
) -> Result<Equivalence<S>> {
    let n = g.order();
    if h.order() != n {
        return Err(Error::VertexCountMismatch(n, h.order()));
    }
    let not_equivalent = |reason| Equivalence { equivalent: false, witness: None, reason: Some(reason) };
    let mg = match common_modulus_sqr(g) {
        Ok(m) => m,
        Err(failure) => return Ok(not_equivalent(NonEquivalence::NotTwoMonomorphic { side: Side::Left, failure })),
    };
    let mh = match common_modulus_sqr(h) {
        Ok(m) => m,
        Err(failure) => return Ok(not_equivalent(NonEquivalence::NotTwoMonomorphic { side: Side::Right, failure })),
    };
    let (Some(mg), Some(mh)) = (mg, mh) else {
        return Ok(Equivalence { equivalent: true, witness: Some(Selector::identity(n)), reason: None });
    };
    let triple = |s: &HermitianStructure<S>, u: usize, v: usize| {
        s.label(0, u).clone() * s.label(u, v).clone() * s.label(0, v).conj()
    };
    for u in 1..n {
        for v in u + 1..n {
            if !triple(g, u, v).same_direction(&triple(h, u, v)) {
                return Ok(not_equivalent(NonEquivalence::NormalFormsDiffer { pair: (u, v) }));
            }
        }
    }
    // δ(0) = 1, δ(v) = conj(h(0,v))·g(0,v) / (ratio·|g|²), scale = ratio = |h|/|g|.
    let witness = (mh / mg.clone()).sqrt().and_then(|ratio| {
        let denom = (ratio.clone() * mg).recip()?;
        let values = (0..n)
            .map(|v| {
                if v == 0 {
                    S::one()
                } else {
                    (h.label(0, v).conj() * g.label(0, v).clone()).scale(&denom)
                }
            })
            .collect();
        let sel = Selector::with_scale(values, ratio).ok()?;
        let image = g.apply_selector(&sel).ok()?;
        image.approx_eq(h).then_some(sel)
    });
    Ok(Equivalence { equivalent: true, witness, reason: None })
}
