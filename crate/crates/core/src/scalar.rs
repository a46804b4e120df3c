//! Label scalars.
//!
//! Structures are generic over a [`Scalar`]; the two modes are
//! [`GaussianRational`] (exact, `a + bi` with rational parts) and
//! [`ApproxComplex`] (a pair of `f64` compared with a global tolerance).
//! Mixing modes is ruled out by the type system.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;
use core::sync::atomic::{AtomicU64, Ordering};

use crate::rational::{ParseRationalError, Rational};

/// Default absolute tolerance for approximate comparisons.
pub const DEFAULT_APPROX_EPS: f64 = 1e-9;

static APPROX_EPS_BITS: AtomicU64 = AtomicU64::new(DEFAULT_APPROX_EPS.to_bits());

/// Current tolerance used by approximate-mode comparisons.
pub fn approx_eps() -> f64 {
    f64::from_bits(APPROX_EPS_BITS.load(Ordering::Relaxed))
}

/// Overrides the approximate-mode tolerance. Non-positive or non-finite
/// values are ignored.
pub fn set_approx_eps(eps: f64) {
    if eps.is_finite() && eps > 0.0 {
        APPROX_EPS_BITS.store(eps.to_bits(), Ordering::Relaxed);
    }
}

/// Real field underlying a [`Scalar`]: polynomial coefficients,
/// determinants and moduli live here.
pub trait Real:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn to_f64(&self) -> f64;

    /// Zero, up to the approximate tolerance.
    fn is_zero(&self) -> bool;

    /// Strictly positive, beyond the approximate tolerance.
    fn is_positive(&self) -> bool;

    /// Equality; approximate mode allows `eps * scale` absolute slack.
    fn within(&self, other: &Self, scale: f64) -> bool;

    /// For approximate values, `|self - other| / (eps * scale)`. `None` in
    /// exact mode, where comparisons cannot be fragile.
    fn margin(&self, other: &Self, scale: f64) -> Option<f64>;

    /// Square root, when it exists in this field.
    fn sqrt(&self) -> Option<Self>;

    /// Multiplicative inverse, `None` for zero.
    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Real for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v)
    }
    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Rational::is_positive(self)
    }
    fn within(&self, other: &Self, _scale: f64) -> bool {
        self == other
    }
    fn margin(&self, _other: &Self, _scale: f64) -> Option<f64> {
        None
    }
    fn sqrt(&self) -> Option<Self> {
        Rational::sqrt(self)
    }
    fn recip(&self) -> Option<Self> {
        Rational::recip(self)
    }
}

impl Real for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_zero(&self) -> bool {
        libm::fabs(*self) <= approx_eps()
    }
    fn is_positive(&self) -> bool {
        *self > approx_eps()
    }
    fn within(&self, other: &Self, scale: f64) -> bool {
        libm::fabs(self - other) <= approx_eps() * scale
    }
    fn margin(&self, other: &Self, scale: f64) -> Option<f64> {
        Some(libm::fabs(self - other) / (approx_eps() * scale))
    }
    fn sqrt(&self) -> Option<Self> {
        if *self < -approx_eps() {
            None
        } else {
            Some(libm::sqrt(self.max(0.0)))
        }
    }
}

/// A complex label. Implemented by [`GaussianRational`] and
/// [`ApproxComplex`].
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Real: Real;

    fn from_parts(re: Self::Real, im: Self::Real) -> Self;
    fn re(&self) -> Self::Real;
    fn im(&self) -> Self::Real;

    fn zero() -> Self {
        Self::from_parts(Self::Real::zero(), Self::Real::zero())
    }
    fn one() -> Self {
        Self::from_parts(Self::Real::one(), Self::Real::zero())
    }
    fn i() -> Self {
        Self::from_parts(Self::Real::zero(), Self::Real::one())
    }
    fn from_real(r: Self::Real) -> Self {
        Self::from_parts(r, Self::Real::zero())
    }
    fn from_i64(v: i64) -> Self {
        Self::from_real(Self::Real::from_i64(v))
    }

    fn conj(&self) -> Self {
        Self::from_parts(self.re(), -self.im())
    }

    fn norm_sqr(&self) -> Self::Real {
        let (re, im) = (self.re(), self.im());
        re.clone() * re + im.clone() * im
    }

    fn scale(&self, r: &Self::Real) -> Self {
        Self::from_parts(self.re() * r.clone(), self.im() * r.clone())
    }

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        let r = n.recip()?;
        Some(self.conj().scale(&r))
    }

    fn is_zero(&self) -> bool {
        self.re().is_zero() && self.im().is_zero()
    }

    /// Equality; approximate mode compares parts with absolute tolerance.
    fn approx_eq(&self, other: &Self) -> bool {
        self.re().within(&other.re(), 1.0) && self.im().within(&other.im(), 1.0)
    }

    /// `self / |self| == other / |other|` for nonzero values.
    fn same_direction(&self, other: &Self) -> bool;

    /// `(re, im)` when both parts are exact integers that fit in `i64`.
    fn to_gaussian_int(&self) -> Option<(i64, i64)> {
        None
    }
}

/// Exact complex number `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational::new(Rational::from_integer(re), Rational::from_integer(im))
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        // Labels are very often purely real or purely imaginary.
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, Rational::ZERO);
        }
        if self.re.is_zero() && rhs.re.is_zero() {
            return GaussianRational::new(-(&self.im * &rhs.im), Rational::ZERO);
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Scalar for GaussianRational {
    type Real = Rational;

    fn from_parts(re: Rational, im: Rational) -> Self {
        GaussianRational::new(re, im)
    }
    fn re(&self) -> Rational {
        self.re.clone()
    }
    fn im(&self) -> Rational {
        self.im.clone()
    }
    fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
    fn to_gaussian_int(&self) -> Option<(i64, i64)> {
        Some((self.re.to_i64()?, self.im.to_i64()?))
    }
    fn same_direction(&self, other: &Self) -> bool {
        // a·conj(b) is a positive real exactly when arg a == arg b.
        let p = self * &other.conj();
        p.im.is_zero() && p.re.is_positive()
    }
}

fn fmt_imag(f: &mut fmt::Formatter<'_>, coeff: &Rational) -> fmt::Result {
    if *coeff == Rational::ONE {
        f.write_str("i")
    } else if *coeff == -Rational::ONE {
        f.write_str("-i")
    } else {
        write!(f, "{coeff}i")
    }
}

/// Writes `a/b+c/di`, omitting zero parts (`0` for zero).
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => fmt_imag(f, &self.im),
            (false, false) => {
                write!(f, "{}", self.re)?;
                if self.im.is_positive() {
                    f.write_str("+")?;
                }
                fmt_imag(f, &self.im)
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error returned when parsing a scalar literal fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError;

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid scalar literal")
    }
}

impl core::error::Error for ParseScalarError {}

impl From<ParseRationalError> for ParseScalarError {
    fn from(_: ParseRationalError) -> Self {
        ParseScalarError
    }
}

impl FromStr for GaussianRational {
    type Err = ParseScalarError;

    /// Parses `a`, `a/b`, `ci`, `c/di`, `i`, `-i`, `a+ci`, `a/b-c/di`, ...
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() || s.contains(char::is_whitespace) {
            return Err(ParseScalarError);
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussianRational::new(s.parse()?, Rational::ZERO));
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, ch)| ch == '+' || ch == '-')
            .map(|(idx, _)| idx)
            .last();
        let (re_str, im_str) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_str.is_empty() { Rational::ZERO } else { re_str.parse()? };
        let im = match im_str {
            "" | "+" => Rational::ONE,
            "-" => -Rational::ONE,
            other => other.strip_prefix('+').unwrap_or(other).parse()?,
        };
        Ok(GaussianRational::new(re, im))
    }
}

/// Approximate complex number with `f64` parts.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct ApproxComplex {
    pub re: f64,
    pub im: f64,
}

impl ApproxComplex {
    pub const fn new(re: f64, im: f64) -> Self {
        ApproxComplex { re, im }
    }

    pub fn modulus(&self) -> f64 {
        libm::hypot(self.re, self.im)
    }
}

impl Add for ApproxComplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        ApproxComplex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ApproxComplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ApproxComplex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ApproxComplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        ApproxComplex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for ApproxComplex {
    type Output = Self;
    fn neg(self) -> Self {
        ApproxComplex::new(-self.re, -self.im)
    }
}

impl Scalar for ApproxComplex {
    type Real = f64;

    fn from_parts(re: f64, im: f64) -> Self {
        ApproxComplex::new(re, im)
    }
    fn re(&self) -> f64 {
        self.re
    }
    fn im(&self) -> f64 {
        self.im
    }
    fn same_direction(&self, other: &Self) -> bool {
        let (a, b) = (self.modulus(), other.modulus());
        if a <= approx_eps() || b <= approx_eps() {
            return false;
        }
        ApproxComplex::new(self.re / a, self.im / a)
            .approx_eq(&ApproxComplex::new(other.re / b, other.im / b))
    }
}

/// Writes `re,im` using the shortest round-tripping decimal forms.
impl fmt::Display for ApproxComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?},{:?}", self.re, self.im)
    }
}

impl fmt::Debug for ApproxComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ApproxComplex {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (re, im) = s.split_once(',').ok_or(ParseScalarError)?;
        let re: f64 = re.trim().parse().map_err(|_| ParseScalarError)?;
        let im: f64 = im.trim().parse().map_err(|_| ParseScalarError)?;
        if !re.is_finite() || !im.is_finite() {
            return Err(ParseScalarError);
        }
        Ok(ApproxComplex::new(re, im))
    }
}
