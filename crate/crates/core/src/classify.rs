//! Structural classification of spectrally monomorphic structures.
//!
//! Every classifier first reduces `g` to canonical labels: an equivalent
//! structure whose labels are `c` and `conj(c)` only, with vertex 0
//! dominating, i.e. the `c`-representation of a tournament `T` in which
//! vertex 0 beats every other vertex. The verdict then depends only on
//! `c`, `T` and the size `k`:
//!
//! | `k` | monomorphic exactly when |
//! |---|---|
//! | 3, `n ≥ 5` | `c` real, or `T` transitive, or `c = ±i` |
//! | 4 ≤ k ≤ n-4 (and `k = 4, n = 7`) | `c` real, or `T` transitive |
//! | `n - 3`, `n ≥ 7` | as above, or `c = ±i` and `T - 0` doubly regular |
//!
//! A negative verdict carries a pair of `k`-subsets with different
//! characteristic polynomials.

use alloc::vec;
use alloc::vec::Vec;

use crate::charpoly::{char_poly_of_subset, determinant_of_subset};
use crate::constructions::{hat, is_doubly_regular, DrtCertificate};
use crate::error::{Error, Result, TwoMonoFailure};
use crate::monomorphy::{is_k_spectrally_monomorphic, SubsetWitness};
use crate::scalar::{Real, Scalar};
use crate::selector::{common_modulus_sqr, normalize_at, Selector};
use crate::structure::{c_representation, i_representation, HermitianStructure};
use crate::subsets::{mask_of, vertices};
use crate::tournament::Tournament;

/// A structure reduced to the `c`-representation of a tournament in which
/// vertex 0 dominates every other vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalLabels<S: Scalar> {
    /// The label carried by every arc; `im(c) ≥ 0`.
    pub c: S,
    pub tournament: Tournament,
    /// Maps [`CanonicalLabels::representative`] back onto the input.
    pub selector: Selector<S>,
}

impl<S: Scalar> CanonicalLabels<S> {
    pub fn representative(&self) -> HermitianStructure<S> {
        c_representation(&self.tournament, &self.c)
            .expect("canonical label has modulus 1")
            .structure
    }
}

/// Reduces `g` (with `n ≥ 5`) to canonical labels.
///
/// After normalizing at vertex 0 every label off row 0 must be `c` or
/// `conj(c)` for `c` the label at `(1, 2)`; otherwise `g` is not even
/// 3-spectrally monomorphic and the offending pair is reported. When `c`
/// is real every label is equal and `T` is taken to be transitive.
pub fn reduce_to_canonical_labels<S: Scalar>(g: &HermitianStructure<S>) -> Result<CanonicalLabels<S>> {
    let n = g.order();
    if n < 5 {
        return Err(Error::OutsideTheoremRange {
            theorem: "canonical label reduction",
            requirement: "n >= 5",
            n,
            k: 3,
        });
    }
    let (normalized, nu) = normalize_at(g, 0)?;
    let c = normalized.label(1, 2).clone();
    let cbar = c.conj();
    for i in 1..n {
        for j in i + 1..n {
            let l = normalized.label(i, j);
            if !l.approx_eq(&c) && !l.approx_eq(&cbar) {
                return Err(Error::LabelOutsidePair { i, j });
            }
        }
    }
    // θ(0) = 1, θ(j) = conj(c) moves row 0 from 1 to c and fixes the rest.
    let theta = Selector::new((0..n).map(|v| if v == 0 { S::one() } else { cbar.clone() }).collect())?;
    let mut forward = theta.compose(&nu)?;
    let c = if c.im().is_positive() || c.im().is_zero() {
        c
    } else {
        // κ(0) = conj(c)² turns row 0 into conj(c); the inner arcs flip.
        let kappa = Selector::new(
            (0..n).map(|v| if v == 0 { cbar.clone() * cbar.clone() } else { S::one() }).collect(),
        )?;
        forward = kappa.compose(&forward)?;
        cbar
    };
    let real = c.im().is_zero();
    // Selectors θ and κ fix every label off row 0.
    let tournament = Tournament::from_upper(n, |i, j| i == 0 || real || normalized.label(i, j).approx_eq(&c));
    let canonical = CanonicalLabels { c, tournament, selector: forward.inverse() };
    debug_assert!(!S::Real::EXACT || canonical.representative().apply_selector(&canonical.selector).as_ref() == Ok(g));
    Ok(canonical)
}

/// Why a structure is not spectrally monomorphic at the requested size.
/// Vertex indices refer to the input structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// Some label is zero or the labels have different moduli.
    NotTwoMonomorphic(TwoMonoFailure),
    /// After normalizing at vertex 0, the label at this pair is neither
    /// `c` nor `conj(c)`.
    LabelOutsidePair { pair: (usize, usize) },
    /// The canonical tournament has this 3-cycle while `c` is neither real
    /// nor `±i`.
    CycleWithNonImaginaryLabel { cycle: (usize, usize, usize) },
    /// The canonical tournament has a 3-cycle and a transitive triple, so
    /// 4-subsets through vertex 0 have determinants 9 and 1.
    DominatedCycle { cycle: (usize, usize, usize), transitive: (usize, usize, usize) },
    /// The canonical tournament minus vertex 0 is not doubly regular: these
    /// pairs have different numbers of common dominators.
    NotDoublyRegular { first: (usize, usize), second: (usize, usize) },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict<S: Scalar> {
    /// Equivalent to the constant structure `value`, the signed common
    /// modulus of the labels.
    RealConstant { value: S::Real },
    /// Equivalent to the `c`-representation of the transitive tournament
    /// listing its vertices in `order`.
    CRepTransitive { c: S, order: Vec<usize> },
    /// Equivalent to the `i`-representation of this non-transitive
    /// tournament, in which vertex 0 dominates every other vertex.
    IRepDominatedNonTransitive { tournament: Tournament },
    /// Equivalent to the `i`-representation of `hat(tournament)`, for this
    /// doubly regular tournament of order `n - 1`.
    IRepDrtHat { tournament: Tournament, certificate: DrtCertificate },
    NotMonomorphic { obstruction: Obstruction, witness: Option<SubsetWitness> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification<S: Scalar> {
    pub k: usize,
    pub verdict: Verdict<S>,
    /// For positive verdicts, `representative().apply_selector(δ)` is the
    /// classified structure.
    pub witness_selector: Option<Selector<S>>,
}

impl<S: Scalar> Classification<S> {
    pub fn is_monomorphic(&self) -> bool {
        !matches!(self.verdict, Verdict::NotMonomorphic { .. })
    }

    /// The canonical structure named by a positive verdict.
    pub fn representative(&self, n: usize) -> Option<HermitianStructure<S>> {
        match &self.verdict {
            Verdict::RealConstant { value } => Some(HermitianStructure::constant(n, value.clone())),
            Verdict::CRepTransitive { c, order } => {
                let mut pos = vec![0; n];
                for (p, &v) in order.iter().enumerate() {
                    pos[v] = p;
                }
                let t = Tournament::from_upper(n, |i, j| pos[i] < pos[j]);
                Some(c_representation(&t, c).ok()?.structure)
            }
            Verdict::IRepDominatedNonTransitive { tournament } => Some(i_representation(tournament)),
            Verdict::IRepDrtHat { tournament, .. } => Some(i_representation(&hat(tournament))),
            Verdict::NotMonomorphic { .. } => None,
        }
    }
}

fn range_guard(theorem: &'static str, requirement: &'static str, ok: bool, n: usize, k: usize) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutsideTheoremRange { theorem, requirement, n, k })
    }
}

/// Structures equivalent to the `k`-monomorphic candidates at hand.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Allowed {
    /// Real constants, transitive `c`-representations and `i`-representations
    /// of tournaments dominated by a vertex.
    K3,
    /// Real constants and transitive `c`-representations only.
    Rigid,
    /// Rigid, plus `i`-representations of hats of doubly regular tournaments.
    NMinus3,
}

/// `k = 3`, `n ≥ 5`.
pub fn classify_k3<S: Scalar>(g: &HermitianStructure<S>) -> Result<Classification<S>> {
    let n = g.order();
    range_guard("3-monomorphy characterization", "n >= 5", n >= 5, n, 3)?;
    classify_with(g, 3, Allowed::K3)
}

/// `k = 4`, `n ≥ 7`.
pub fn classify_k4<S: Scalar>(g: &HermitianStructure<S>) -> Result<Classification<S>> {
    let n = g.order();
    range_guard("4-monomorphy characterization", "n >= 7", n >= 7, n, 4)?;
    classify_with(g, 4, Allowed::Rigid)
}

/// `4 ≤ k ≤ n - 4`, `n ≥ 8`.
pub fn classify_mid_k<S: Scalar>(g: &HermitianStructure<S>, k: usize) -> Result<Classification<S>> {
    let n = g.order();
    range_guard("middle-k characterization", "n >= 8 and 4 <= k <= n - 4", n >= 8 && 4 <= k && k + 4 <= n, n, k)?;
    classify_with(g, k, Allowed::Rigid)
}

/// `k = n - 3`, `n ≥ 6`. For `n = 6` this is the `k = 3` case.
pub fn classify_n_minus_3<S: Scalar>(g: &HermitianStructure<S>) -> Result<Classification<S>> {
    let n = g.order();
    range_guard("(n-3)-monomorphy characterization", "n >= 6", n >= 6, n, n.saturating_sub(3))?;
    if n == 6 {
        return classify_k3(g);
    }
    classify_with(g, n - 3, Allowed::NMinus3)
}

fn classify_with<S: Scalar>(g: &HermitianStructure<S>, k: usize, allowed: Allowed) -> Result<Classification<S>> {
    let n = g.order();
    let negative = |obstruction: Obstruction, cores: Vec<Vec<usize>>| Classification {
        k,
        verdict: Verdict::NotMonomorphic { obstruction, witness: find_witness(g, k, &cores) },
        witness_selector: None,
    };

    if g.labels().iter().all(Scalar::is_zero) {
        return Ok(Classification {
            k,
            verdict: Verdict::RealConstant { value: S::Real::zero() },
            witness_selector: Some(Selector::identity(n)),
        });
    }
    let m2 = match common_modulus_sqr(g) {
        Ok(m2) => m2.expect("n >= 5"),
        Err(failure) => {
            let cores = match &failure {
                TwoMonoFailure::ZeroLabel { pair } => vec![vec![pair.0, pair.1], first_nonzero_pair(g)],
                TwoMonoFailure::UnequalModulus { first, second } => {
                    vec![vec![first.0, first.1], vec![second.0, second.1]]
                }
            };
            return Ok(negative(Obstruction::NotTwoMonomorphic(failure), cores));
        }
    };
    let canonical = match reduce_to_canonical_labels(g) {
        Ok(c) => c,
        Err(Error::LabelOutsidePair { i, j }) => {
            return Ok(negative(
                Obstruction::LabelOutsidePair { pair: (i, j) },
                vec![vec![0, i, j], vec![0, 1, 2]],
            ));
        }
        Err(e) => return Err(e),
    };
    let CanonicalLabels { c, tournament, selector } = canonical;
    let positive = |verdict, witness_selector| Ok(Classification { k, verdict, witness_selector: Some(witness_selector) });

    if c.im().is_zero() {
        let m = m2.sqrt().ok_or_else(|| Error::IrrationalModulus { modulus_sqr: alloc::string::ToString::to_string(&m2) })?;
        let value = if c.re().is_positive() { m.clone() } else { -m.clone() };
        // The constant `value` is the constant `c` scaled by `m`.
        let unscale = Selector::with_scale(vec![S::one(); n], m.recip().expect("nonzero modulus"))?;
        return positive(Verdict::RealConstant { value }, selector.compose(&unscale)?);
    }
    let Some((a, b, d)) = tournament.find_three_cycle() else {
        return positive(Verdict::CRepTransitive { c, order: tournament.order_by_score() }, selector);
    };
    if !c.re().is_zero() {
        return Ok(negative(
            Obstruction::CycleWithNonImaginaryLabel { cycle: (a, b, d) },
            vec![vec![a, b, d], vec![0, a, b]],
        ));
    }
    match allowed {
        Allowed::K3 => positive(Verdict::IRepDominatedNonTransitive { tournament }, selector),
        Allowed::Rigid => {
            let (x, y, z) = first_transitive_triple(&tournament);
            Ok(negative(
                Obstruction::DominatedCycle { cycle: (a, b, d), transitive: (x, y, z) },
                vec![vec![0, a, b, d], vec![0, x, y, z]],
            ))
        }
        Allowed::NMinus3 => {
            let rest: Vec<usize> = (1..n).collect();
            let core = tournament.induced(&rest)?;
            match is_doubly_regular(&core) {
                Ok(certificate) => {
                    positive(Verdict::IRepDrtHat { tournament: core, certificate }, selector)
                }
                Err(Error::NotDoublyRegular { first, second }) => Ok(negative(
                    Obstruction::NotDoublyRegular {
                        first: (first.0 + 1, first.1 + 1),
                        second: (second.0 + 1, second.1 + 1),
                    },
                    Vec::new(),
                )),
                Err(e) => Err(e),
            }
        }
    }
}

fn first_nonzero_pair<S: Scalar>(g: &HermitianStructure<S>) -> Vec<usize> {
    let n = g.order();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| !g.label(i, j).is_zero())
        .map(|(i, j)| vec![i, j])
        .unwrap_or_default()
}

/// A transitive triple avoiding vertex 0; exists whenever `n ≥ 5`.
fn first_transitive_triple(t: &Tournament) -> (usize, usize, usize) {
    let n = t.order();
    for z in 3..n {
        for y in 2..z {
            for x in 1..y {
                let s = [x, y, z];
                let scores: Vec<usize> =
                    s.iter().map(|&u| s.iter().filter(|&&v| t.dominates(u, v)).count()).collect();
                if scores.contains(&2) {
                    return (x, y, z);
                }
            }
        }
    }
    unreachable!("every tournament on four or more vertices has a transitive triple")
}

/// A pair of `k`-subsets with different characteristic polynomials.
///
/// Candidates are the first colex `k`-subset and each `core` padded with
/// the smallest or with the largest remaining vertices; the first pair of
/// candidates that differ is returned. Otherwise all `k`-subsets are
/// scanned.
fn find_witness<S: Scalar>(g: &HermitianStructure<S>, k: usize, cores: &[Vec<usize>]) -> Option<SubsetWitness> {
    let n = g.order();
    let mut candidates = vec![(1u64 << k) - 1];
    for core in cores.iter().filter(|c| !c.is_empty() && c.len() <= k) {
        let base = mask_of(core);
        for high in [false, true] {
            let mut mask = base;
            let mut order: Vec<usize> = (0..n).collect();
            if high {
                order.reverse();
            }
            for v in order {
                if mask.count_ones() as usize == k {
                    break;
                }
                mask |= 1 << v;
            }
            if !candidates.contains(&mask) {
                candidates.push(mask);
            }
        }
    }
    let polys: Vec<_> = candidates.iter().map(|&m| char_poly_of_subset(g, m)).collect();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            if !polys[i].approx_eq(&polys[j]) {
                return Some(SubsetWitness { reference: vertices(candidates[i]), mismatch: vertices(candidates[j]) });
            }
        }
    }
    is_k_spectrally_monomorphic(g, k).ok()?.witness
}

/// `C3(x, y)` in `T - x1` computed from determinants alone, for `g` the
/// `i`-representation of a tournament `T` in which `x1` dominates every
/// other vertex: a 4-subset `{x1, x, y, z}` has determinant 9 when
/// `{x, y, z}` is a 3-cycle and 1 otherwise, so
/// `C3(x, y) = (Σ_P det g[P] - (n - 3)) / 8` over the 4-subsets `P ⊇ {x1, x, y}`.
pub fn c3_via_determinants<S: Scalar>(g: &HermitianStructure<S>, x1: usize, x: usize, y: usize) -> Result<usize> {
    let n = g.order();
    for v in [x1, x, y] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if x1 == x || x1 == y || x == y {
        return Err(Error::Precondition("x1, x and y must be distinct"));
    }
    let i = S::i();
    let minus_i = i.conj();
    for u in 0..n {
        for v in u + 1..n {
            let l = g.label(u, v);
            let ok = if u == x1 {
                l.approx_eq(&i)
            } else if v == x1 {
                l.approx_eq(&minus_i)
            } else {
                l.approx_eq(&i) || l.approx_eq(&minus_i)
            };
            if !ok {
                return Err(Error::Precondition("not an i-representation with x1 dominating every vertex"));
            }
        }
    }
    let base = mask_of(&[x1, x, y]);
    let sum = (0..n)
        .filter(|&z| base & 1 << z == 0)
        .fold(S::Real::zero(), |acc, z| acc + determinant_of_subset(g, base | 1 << z));
    let count = (sum.to_f64() - (n as f64 - 3.0)) / 8.0;
    let rounded = libm::round(count);
    debug_assert!((count - rounded).abs() < 1e-6 && rounded >= 0.0);
    Ok(rounded as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::paley_tournament;
    use crate::rational::Rational;
    use crate::scalar::{ApproxComplex, GaussianRational};

    type G = GaussianRational;

    fn sound(g: &HermitianStructure<G>, cls: &Classification<G>) {
        let rep = cls.representative(g.order()).expect("positive verdict");
        let back = rep.apply_selector(cls.witness_selector.as_ref().unwrap()).unwrap();
        assert_eq!(&back, g);
    }

    fn agrees(g: &HermitianStructure<G>, cls: &Classification<G>) {
        let brute = is_k_spectrally_monomorphic(g, cls.k).unwrap();
        assert_eq!(cls.is_monomorphic(), brute.verdict, "{cls:?}");
        if let Verdict::NotMonomorphic { witness, .. } = &cls.verdict {
            let w = witness.as_ref().expect("witness");
            assert_eq!(w.reference.len(), cls.k);
            assert_ne!(
                char_poly_of_subset(g, mask_of(&w.reference)),
                char_poly_of_subset(g, mask_of(&w.mismatch))
            );
        } else {
            sound(g, cls);
        }
    }

    #[test]
    fn canonical_labels_of_dominated_c_representation() {
        let c = G::new(Rational::new(3, 5).unwrap(), Rational::new(-4, 5).unwrap());
        let t = hat(&Tournament::from_code(5, 0b10110_01101));
        let g = c_representation(&t, &c).unwrap().structure;
        let canon = reduce_to_canonical_labels(&g).unwrap();
        assert_eq!(canon.c, c.conj());
        assert_eq!(canon.tournament, hat(&Tournament::from_code(5, 0b10110_01101).reversed()));
        assert_eq!(canon.representative().apply_selector(&canon.selector).unwrap(), g);
    }

    #[test]
    fn canonical_labels_of_constant() {
        let g = HermitianStructure::<G>::constant(6, Rational::from_integer(3));
        let canon = reduce_to_canonical_labels(&g).unwrap();
        assert_eq!(canon.c, G::one());
        assert_eq!(canon.tournament, Tournament::transitive(6));
    }

    #[test]
    fn canonical_labels_reject_planted_label() {
        let g = HermitianStructure::<G>::from_upper(6, |i, j| match (i, j) {
            (2, 3) => G::one(),
            (0, j) if j % 2 == 0 => G::i(),
            (0, _) => G::i().conj(),
            _ => G::i(),
        });
        assert_eq!(reduce_to_canonical_labels(&g), Err(Error::LabelOutsidePair { i: 2, j: 3 }));
        let cls = classify_k3(&g).unwrap();
        assert!(matches!(cls.verdict, Verdict::NotMonomorphic { obstruction: Obstruction::LabelOutsidePair { pair: (2, 3) }, .. }));
        agrees(&g, &cls);
    }

    #[test]
    fn real_constants() {
        let g = HermitianStructure::<G>::constant(7, Rational::from_integer(-2));
        let cls = classify_k4(&g).unwrap();
        assert_eq!(cls.verdict, Verdict::RealConstant { value: Rational::from_integer(-2) });
        agrees(&g, &cls);
        let zero = HermitianStructure::<G>::constant(8, Rational::ZERO);
        let cls = classify_mid_k(&zero, 4).unwrap();
        assert_eq!(cls.verdict, Verdict::RealConstant { value: Rational::ZERO });
        agrees(&zero, &cls);
    }

    #[test]
    fn transitive_c_representations() {
        let c = G::new(Rational::new(3, 5).unwrap(), Rational::new(4, 5).unwrap());
        for (n, k) in [(6, 3), (8, 4), (9, 5)] {
            let g = c_representation(&Tournament::transitive(n).reversed(), &c).unwrap().structure;
            let cls = if k == 3 { classify_k3(&g) } else { classify_mid_k(&g, k).or_else(|_| classify_k4(&g)) }.unwrap();
            assert!(matches!(cls.verdict, Verdict::CRepTransitive { .. }), "{cls:?}");
            agrees(&g, &cls);
        }
    }

    #[test]
    fn i_representation_of_dominated_tournament_at_k3() {
        let g: HermitianStructure<G> = i_representation(&hat(&Tournament::from_code(5, 0b11010_10011)));
        let cls = classify_k3(&g).unwrap();
        assert!(matches!(cls.verdict, Verdict::IRepDominatedNonTransitive { .. }));
        agrees(&g, &cls);
    }

    #[test]
    fn hat_paley_seven() {
        let p7 = paley_tournament(7).unwrap();
        let g: HermitianStructure<G> = i_representation(&hat(&p7));
        let k4 = classify_k4(&g).unwrap();
        assert!(matches!(k4.verdict, Verdict::NotMonomorphic { obstruction: Obstruction::DominatedCycle { .. }, .. }));
        agrees(&g, &k4);
        let mid = classify_mid_k(&g, 4).unwrap();
        assert_eq!(mid.verdict, k4.verdict);
        let top = classify_n_minus_3(&g).unwrap();
        match &top.verdict {
            Verdict::IRepDrtHat { tournament, certificate } => {
                assert_eq!(tournament, &p7);
                assert_eq!(certificate.t, 1);
            }
            other => panic!("{other:?}"),
        }
        agrees(&g, &top);
    }

    #[test]
    fn non_doubly_regular_hat_at_n_minus_3() {
        let t = Tournament::from_code(7, 0b101_1011_0100_1110_0101);
        assert!(!t.is_transitive() && is_doubly_regular(&t).is_err());
        let g: HermitianStructure<G> = i_representation(&hat(&t));
        let cls = classify_n_minus_3(&g).unwrap();
        assert!(matches!(cls.verdict, Verdict::NotMonomorphic { obstruction: Obstruction::NotDoublyRegular { .. }, .. }));
        agrees(&g, &cls);
    }

    #[test]
    fn non_imaginary_label_with_cycle() {
        let c = G::new(Rational::new(3, 5).unwrap(), Rational::new(4, 5).unwrap());
        let g = c_representation(&hat(&hat(&Tournament::three_cycle())), &c).unwrap().structure;
        let cls = classify_k3(&g).unwrap();
        assert!(matches!(cls.verdict, Verdict::NotMonomorphic { obstruction: Obstruction::CycleWithNonImaginaryLabel { .. }, .. }));
        agrees(&g, &cls);
    }

    #[test]
    fn unequal_moduli() {
        let g = HermitianStructure::<G>::from_upper(8, |i, j| if (i, j) == (3, 6) { G::from_i64(2) } else { G::one() });
        for cls in [classify_k3(&g).unwrap(), classify_k4(&g).unwrap(), classify_mid_k(&g, 4).unwrap(), classify_n_minus_3(&g).unwrap()] {
            assert!(matches!(cls.verdict, Verdict::NotMonomorphic { obstruction: Obstruction::NotTwoMonomorphic(_), .. }));
            agrees(&g, &cls);
        }
    }

    #[test]
    fn range_guards() {
        let g = HermitianStructure::<G>::constant(6, Rational::ONE);
        assert!(matches!(classify_k3(&HermitianStructure::<G>::constant(4, Rational::ONE)), Err(Error::OutsideTheoremRange { .. })));
        assert!(matches!(classify_k4(&g), Err(Error::OutsideTheoremRange { .. })));
        assert!(matches!(classify_mid_k(&g, 4), Err(Error::OutsideTheoremRange { .. })));
        assert!(matches!(classify_n_minus_3(&HermitianStructure::<G>::constant(5, Rational::ONE)), Err(Error::OutsideTheoremRange { .. })));
        let big = HermitianStructure::<G>::constant(9, Rational::ONE);
        assert!(classify_mid_k(&big, 6).is_err());
        assert!(classify_mid_k(&big, 5).is_ok());
    }

    #[test]
    fn irrational_modulus_is_an_error() {
        let g = HermitianStructure::<G>::from_upper(5, |_, _| G::from_ints(1, 1));
        assert!(matches!(classify_k3(&g), Err(Error::IrrationalModulus { .. })));
    }

    #[test]
    fn approximate_mode_matches_exact() {
        let t = hat(&paley_tournament(7).unwrap());
        let g: HermitianStructure<ApproxComplex> = i_representation(&t);
        let cls = classify_n_minus_3(&g).unwrap();
        assert!(matches!(cls.verdict, Verdict::IRepDrtHat { .. }));
        let rep = cls.representative(8).unwrap().apply_selector(cls.witness_selector.as_ref().unwrap()).unwrap();
        assert!(rep.approx_eq(&g));
    }

    #[test]
    fn c3_examples() {
        let p7 = paley_tournament(7).unwrap();
        let g: HermitianStructure<G> = i_representation(&hat(&p7));
        for x in 1..8 {
            for y in x + 1..8 {
                assert_eq!(c3_via_determinants(&g, 0, x, y).unwrap(), 2);
            }
        }
        let g: HermitianStructure<G> = i_representation(&hat(&Tournament::transitive(7)));
        assert_eq!(c3_via_determinants(&g, 0, 2, 5).unwrap(), 0);
        assert!(c3_via_determinants(&g, 1, 2, 5).is_err());
        assert!(c3_via_determinants(&g, 0, 2, 2).is_err());
    }
}
