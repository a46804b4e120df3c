//! JSON report shapes. Field order is fixed by the struct definitions, so
//! identical inputs give byte-identical output.

use serde::Serialize;
use spectramono_core::charpoly::char_poly_of_subset;
use spectramono_core::{
    Classification, DeletionReport, DrtCertificate, HermitianStructure, MonomorphyReport,
    Obstruction, Real, RealPolynomial, Scalar, Selector, SignCheck, SignMatrixKind, SubsetWitness,
    TwoMonoFailure, Verdict,
};

use crate::document::StructureDocument;

#[derive(Debug, Serialize)]
pub struct PolyJson {
    pub text: String,
    /// Ascending by degree.
    pub coefficients: Vec<String>,
}

impl<R: Real> From<&RealPolynomial<R>> for PolyJson {
    fn from(p: &RealPolynomial<R>) -> Self {
        PolyJson { text: p.to_string(), coefficients: p.coeffs().iter().map(ToString::to_string).collect() }
    }
}

/// Two vertex subsets with different characteristic polynomials.
#[derive(Debug, Serialize)]
pub struct WitnessJson {
    pub reference: Vec<usize>,
    pub mismatch: Vec<usize>,
    pub reference_poly: PolyJson,
    pub mismatch_poly: PolyJson,
}

fn mask(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

impl WitnessJson {
    pub fn new<S: Scalar>(g: &HermitianStructure<S>, w: &SubsetWitness) -> Self {
        WitnessJson {
            reference: w.reference.clone(),
            mismatch: w.mismatch.clone(),
            reference_poly: (&char_poly_of_subset(g, mask(&w.reference))).into(),
            mismatch_poly: (&char_poly_of_subset(g, mask(&w.mismatch))).into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MonomorphyJson {
    pub k: usize,
    pub verdict: bool,
    pub common_poly: Option<PolyJson>,
    pub witness: Option<WitnessJson>,
    pub subsets_examined: u64,
    pub fragile: bool,
}

impl MonomorphyJson {
    pub fn new<S: Scalar>(g: &HermitianStructure<S>, r: &MonomorphyReport<S::Real>) -> Self {
        MonomorphyJson {
            k: r.k,
            verdict: r.verdict,
            common_poly: r.common_poly.as_ref().map(Into::into),
            witness: r.witness.as_ref().map(|w| WitnessJson::new(g, w)),
            subsets_examined: r.subsets_examined,
            fragile: r.fragile,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ProfileJson {
    pub n: usize,
    pub profile: Vec<MonomorphyJson>,
}

#[derive(Debug, Serialize)]
pub struct SelectorJson {
    pub scale: String,
    pub values: Vec<String>,
}

impl<S: Scalar> From<&Selector<S>> for SelectorJson {
    fn from(s: &Selector<S>) -> Self {
        SelectorJson { scale: s.scale().to_string(), values: s.values().iter().map(ToString::to_string).collect() }
    }
}

#[derive(Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum TwoMonoJson {
    ZeroLabel { pair: (usize, usize) },
    UnequalModulus { first: (usize, usize), second: (usize, usize) },
}

impl From<&TwoMonoFailure> for TwoMonoJson {
    fn from(f: &TwoMonoFailure) -> Self {
        match *f {
            TwoMonoFailure::ZeroLabel { pair } => TwoMonoJson::ZeroLabel { pair },
            TwoMonoFailure::UnequalModulus { first, second } => TwoMonoJson::UnequalModulus { first, second },
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ObstructionJson {
    NotTwoMonomorphic { failure: TwoMonoJson },
    LabelOutsidePair { pair: (usize, usize) },
    CycleWithNonImaginaryLabel { cycle: (usize, usize, usize) },
    DominatedCycle { cycle: (usize, usize, usize), transitive: (usize, usize, usize) },
    NotDoublyRegular { first: (usize, usize), second: (usize, usize) },
}

impl From<&Obstruction> for ObstructionJson {
    fn from(o: &Obstruction) -> Self {
        match o {
            Obstruction::NotTwoMonomorphic(f) => ObstructionJson::NotTwoMonomorphic { failure: f.into() },
            Obstruction::LabelOutsidePair { pair } => ObstructionJson::LabelOutsidePair { pair: *pair },
            Obstruction::CycleWithNonImaginaryLabel { cycle } => {
                ObstructionJson::CycleWithNonImaginaryLabel { cycle: *cycle }
            }
            Obstruction::DominatedCycle { cycle, transitive } => {
                ObstructionJson::DominatedCycle { cycle: *cycle, transitive: *transitive }
            }
            Obstruction::NotDoublyRegular { first, second } => {
                ObstructionJson::NotDoublyRegular { first: *first, second: *second }
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CertificateJson {
    pub t: usize,
    pub n: usize,
    pub table: Vec<usize>,
}

impl From<&DrtCertificate> for CertificateJson {
    fn from(c: &DrtCertificate) -> Self {
        CertificateJson { t: c.t, n: c.n, table: c.table.clone() }
    }
}

#[derive(Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum VerdictJson {
    RealConstant { value: String },
    CRepTransitive { c: String, order: Vec<usize> },
    IRepDominatedNonTransitive { tournament: StructureDocument },
    IRepDrtHat { tournament: StructureDocument, certificate: CertificateJson },
    NotMonomorphic { obstruction: ObstructionJson, witness: Option<WitnessJson> },
}

#[derive(Debug, Serialize)]
pub struct ClassificationJson {
    pub classifier: &'static str,
    pub monomorphic: bool,
    pub verdict: VerdictJson,
    pub witness_selector: Option<SelectorJson>,
}

impl ClassificationJson {
    pub fn new<S: Scalar>(classifier: &'static str, g: &HermitianStructure<S>, c: &Classification<S>) -> Self {
        let verdict = match &c.verdict {
            Verdict::RealConstant { value } => VerdictJson::RealConstant { value: value.to_string() },
            Verdict::CRepTransitive { c, order } => VerdictJson::CRepTransitive { c: c.to_string(), order: order.clone() },
            Verdict::IRepDominatedNonTransitive { tournament } => {
                VerdictJson::IRepDominatedNonTransitive { tournament: tournament.into() }
            }
            Verdict::IRepDrtHat { tournament, certificate } => {
                VerdictJson::IRepDrtHat { tournament: tournament.into(), certificate: certificate.into() }
            }
            Verdict::NotMonomorphic { obstruction, witness } => VerdictJson::NotMonomorphic {
                obstruction: obstruction.into(),
                witness: witness.as_ref().map(|w| WitnessJson::new(g, w)),
            },
        };
        ClassificationJson {
            classifier,
            monomorphic: c.is_monomorphic(),
            verdict,
            witness_selector: c.witness_selector.as_ref().map(Into::into),
        }
    }
}

/// Exactly one of `classification` and `brute_force` is present; the latter
/// only when `--force-brute` replaces a classifier outside its range.
#[derive(Debug, Serialize)]
pub struct ClassifyJson {
    pub n: usize,
    pub k: usize,
    pub classification: Option<ClassificationJson>,
    pub brute_force: Option<MonomorphyJson>,
}

#[derive(Debug, Serialize)]
pub struct ValidateJson {
    pub kind: &'static str,
    pub valid: bool,
    pub failure: Option<(usize, usize)>,
}

impl ValidateJson {
    pub fn new(kind: SignMatrixKind, c: &SignCheck) -> Self {
        ValidateJson { kind: kind.name(), valid: c.valid, failure: c.failure }
    }
}

#[derive(Debug, Serialize)]
pub struct SpectraJson {
    pub valid: bool,
    pub t: usize,
    pub subsets_checked: u64,
    /// Deleted row/column indices of the first mismatching submatrix.
    pub failure: Option<Vec<usize>>,
}

impl From<&DeletionReport> for SpectraJson {
    fn from(r: &DeletionReport) -> Self {
        SpectraJson { valid: r.valid, t: r.t, subsets_checked: r.subsets_checked, failure: r.failure.clone() }
    }
}

#[derive(Debug, Serialize)]
pub struct CycleCountsJson {
    pub pair: (usize, usize),
    pub method: &'static str,
    pub dominator: Option<usize>,
    pub c3: usize,
    pub o3: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct ErrorJson {
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}
