//! Exact arithmetic for Hermitian l2-structures: characteristic
//! polynomials, k-spectral monomorphy, structural classification, and the
//! tournament and sign-matrix constructions that realize the extremal cases.
//!
//! Every algorithm is generic over [`Scalar`]: [`GaussianRational`] gives
//! exact answers, [`ApproxComplex`] trades exactness for speed and compares
//! with the tolerance from [`scalar::approx_eps`].

#![no_std]

extern crate alloc;

pub mod charpoly;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod monomorphy;
pub mod rational;
pub mod scalar;
pub mod selector;
pub mod structure;
pub mod subsets;
pub mod tournament;

pub use charpoly::{char_poly, determinant, principal_minor_sum, scaled_poly, RealPolynomial};
pub use classify::{
    c3_via_determinants, classify_k3, classify_k4, classify_mid_k, classify_n_minus_3,
    reduce_to_canonical_labels, CanonicalLabels, Classification, Obstruction, Verdict,
};
pub use constructions::{
    closed_form_deletion_poly, drt_from_skew_hadamard, hat, i_weighted_structure, is_doubly_regular,
    is_homogeneous, pair_cycle_counts, paley_tournament, skew_adjacency, skew_hadamard_from_drt,
    validate_sign_matrix, verify_deletion_spectra, DeletionReport, DrtCertificate, SignCheck,
    SignMatrix, SignMatrixKind,
};
pub use error::{Error, Result, TwoMonoFailure};
pub use monomorphy::{
    det_constancy, is_k_spectrally_monomorphic, monomorphy_profile, pouzet_transfer_check,
    MonomorphyReport, SubsetTable, SubsetWitness,
};
pub use rational::Rational;
pub use scalar::{ApproxComplex, GaussianRational, Real, Scalar};
pub use selector::{are_equivalent, normalize_at, Selector};
pub use structure::{c_representation, i_representation, HermitianStructure};
pub use tournament::Tournament;
