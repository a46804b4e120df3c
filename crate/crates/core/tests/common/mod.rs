//! Independent oracles for the integration tests. Nothing here calls the
//! library's arithmetic: determinants are cofactor expansions over
//! `Complex<BigRational>`, characteristic polynomials are interpolated from
//! determinants, and tournament counts are plain triple scans.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use spectramono_core::{GaussianRational, HermitianStructure, Rational, Scalar, Selector, Tournament};

pub type Q = BigRational;
pub type C = Complex<Q>;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn to_c(z: &GaussianRational) -> C {
    Complex::new(z.re.to_big(), z.im.to_big())
}

pub fn matrix_of(g: &HermitianStructure<GaussianRational>) -> Vec<Vec<C>> {
    g.rows().map(|r| r.iter().map(to_c).collect()).collect()
}

/// Laplace expansion along successive rows, memoized on the set of
/// columns still available: `minor[S]` is the determinant of the last `|S|`
/// rows restricted to the columns in `S`.
pub fn cofactor_det(m: &[Vec<C>]) -> C {
    let n = m.len();
    let mut minor = vec![C::zero(); 1 << n];
    minor[0] = C::one();
    for cols in 1usize..1 << n {
        let row = n - cols.count_ones() as usize;
        let mut total = C::zero();
        // Sign of column c within the set is the parity of smaller members.
        for (rank, c) in (0..n).filter(|c| cols >> c & 1 == 1).enumerate() {
            if m[row][c].is_zero() {
                continue;
            }
            let term = m[row][c].clone() * minor[cols & !(1 << c)].clone();
            if rank % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        minor[cols] = total;
    }
    minor[(1 << n) - 1].clone()
}

/// Coefficients (ascending) of `det(xI - M)`, by evaluating at
/// `x = 0..=n` and Lagrange interpolation.
pub fn interpolated_char_poly(m: &[Vec<C>]) -> Vec<Q> {
    let n = m.len();
    let points: Vec<Q> = (0..=n as i64).map(q).collect();
    let values: Vec<Q> = points
        .iter()
        .map(|x| {
            let shifted: Vec<Vec<C>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let d = if i == j { Complex::new(x.clone(), Q::zero()) } else { C::zero() };
                            d - m[i][j].clone()
                        })
                        .collect()
                })
                .collect();
            let det = cofactor_det(&shifted);
            assert!(det.im.is_zero(), "Hermitian characteristic polynomial must be real");
            det.re
        })
        .collect();
    let mut coeffs = vec![Q::zero(); n + 1];
    for (i, xi) in points.iter().enumerate() {
        // Basis polynomial Π_{j≠i} (x - x_j) / (x_i - x_j), ascending.
        let mut basis = vec![Q::one()];
        let mut denom = Q::one();
        for (j, xj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Q::zero(); basis.len() + 1];
            for (d, b) in basis.iter().enumerate() {
                next[d + 1] += b.clone();
                next[d] -= b.clone() * xj.clone();
            }
            basis = next;
            denom *= xi.clone() - xj.clone();
        }
        for (d, b) in basis.into_iter().enumerate() {
            coeffs[d] += b * values[i].clone() / denom.clone();
        }
    }
    coeffs
}

pub fn big_coeffs(p: &spectramono_core::RealPolynomial<Rational>) -> Vec<Q> {
    p.coeffs().iter().map(Rational::to_big).collect()
}

/// Number of 3-cycles of `t` through both `x` and `y`.
pub fn brute_c3(t: &Tournament, x: usize, y: usize) -> usize {
    let cyclic = |a: usize, b: usize, c: usize| {
        (t.dominates(a, b) && t.dominates(b, c) && t.dominates(c, a))
            || (t.dominates(a, c) && t.dominates(c, b) && t.dominates(b, a))
    };
    (0..t.order()).filter(|&z| z != x && z != y && cyclic(x, y, z)).count()
}

/// All vertices dominate-count pairs equal.
pub fn brute_doubly_regular(t: &Tournament) -> Option<usize> {
    let n = t.order();
    let mut value = None;
    for x in 0..n {
        for y in x + 1..n {
            let c = (0..n).filter(|&z| t.dominates(z, x) && t.dominates(z, y)).count();
            match value {
                None => value = Some(c),
                Some(v) if v != c => return None,
                _ => {}
            }
        }
    }
    value
}

pub fn random_tournament(rng: &mut ChaCha8Rng, n: usize) -> Tournament {
    Tournament::from_upper(n, |_, _| rng.gen())
}

/// `(a + bi)/c` for a random Pythagorean triple, times a random unit power.
pub fn random_unit(rng: &mut ChaCha8Rng) -> GaussianRational {
    const TRIPLES: [(i64, i64, i64); 5] = [(1, 0, 1), (3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)];
    let (a, b, c) = TRIPLES[rng.gen_range(0..TRIPLES.len())];
    let z = GaussianRational::new(Rational::new(a, c).unwrap(), Rational::new(b, c).unwrap());
    let rot = [(1, 0), (0, 1), (-1, 0), (0, -1)][rng.gen_range(0..4)];
    z * GaussianRational::from_ints(rot.0, rot.1)
}

/// A random Hermitian structure with small Gaussian-rational labels.
pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> HermitianStructure<GaussianRational> {
    HermitianStructure::from_upper(n, |_, _| {
        let re = Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3)).unwrap();
        let im = Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3)).unwrap();
        GaussianRational::new(re, im)
    })
}

/// A random selector: unit values scaled by an integer, with a random
/// rational scale factor.
pub fn random_selector(rng: &mut ChaCha8Rng, n: usize) -> Selector<GaussianRational> {
    let modulus = Rational::from_integer(rng.gen_range(1..=3));
    let values = (0..n).map(|_| random_unit(rng).scale(&modulus)).collect();
    let scale = Rational::new(rng.gen_range(1..=5), rng.gen_range(1..=4)).unwrap();
    Selector::with_scale(values, scale).unwrap()
}

/// Row-reduced basis of the right nullspace of `rows`.
pub fn nullspace(mut rows: Vec<Vec<Q>>, cols: usize) -> Vec<Vec<Q>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v *= inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= f.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}
