use std::fs;

use serde::Serialize;
use spectramono_core::{
    c3_via_determinants, c_representation, classify_k3, classify_k4, classify_mid_k,
    classify_n_minus_3, drt_from_skew_hadamard, hat, i_representation, i_weighted_structure,
    is_k_spectrally_monomorphic, monomorphy_profile, pair_cycle_counts, paley_tournament,
    skew_adjacency, skew_hadamard_from_drt, validate_sign_matrix, verify_deletion_spectra,
    ApproxComplex, Classification, Error, GaussianRational, HermitianStructure, Rational, Scalar,
    SignMatrix, SignMatrixKind, Tournament,
};
use thiserror::Error;

use crate::args::{
    C3Args, CheckArgs, ClassifyArgs, Command, Construct, ConvertArgs, Direction, InputArg, KindArg,
    OutputArg, PaleyArgs, SpectraArgs, ValidateArgs,
};
use crate::document::{DocumentError, Structure, StructureDocument};
use crate::report::{
    ClassificationJson, ClassifyJson, CycleCountsJson, MonomorphyJson, ProfileJson, SpectraJson,
    ValidateJson,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::OutsideTheoremRange { .. }) => 3,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(Error::OutsideTheoremRange { .. }) => "outside_theorem_range",
            _ => "input",
        }
    }
}

/// A JSON report and whether the checked property holds.
pub struct Outcome {
    pub json: String,
    pub holds: bool,
}

impl Outcome {
    fn report(value: &impl Serialize, holds: bool) -> Self {
        let mut json = serde_json::to_string_pretty(value).expect("reports always serialize");
        json.push('\n');
        Outcome { json, holds }
    }

    fn document(doc: StructureDocument, output: &OutputArg) -> Result<Self, CliError> {
        let json = doc.to_json();
        match &output.output {
            Some(path) => {
                fs::write(path, &json)
                    .map_err(|source| CliError::Write { path: path.display().to_string(), source })?;
                Ok(Outcome { json: String::new(), holds: true })
            }
            None => Ok(Outcome { json, holds: true }),
        }
    }
}

type G = GaussianRational;

/// A structure with complex labels, in either arithmetic mode.
enum Labels {
    Exact(HermitianStructure<G>),
    Approx(HermitianStructure<ApproxComplex>),
}

fn read(input: &InputArg) -> Result<Structure, CliError> {
    Ok(StructureDocument::read(&input.input)?.parse()?)
}

fn labels(input: &InputArg) -> Result<Labels, CliError> {
    Ok(match read(input)? {
        Structure::Exact(g) => Labels::Exact(g),
        Structure::Approx(g) => Labels::Approx(g),
        Structure::Tournament(t) => Labels::Exact(i_representation(&t)),
        Structure::SignMatrix(m) => Labels::Exact(i_weighted_structure(&m)?),
    })
}

fn tournament(input: &InputArg) -> Result<Tournament, CliError> {
    match read(input)? {
        Structure::Tournament(t) => Ok(t),
        _ => Err(CliError::Usage("expected a tournament document".into())),
    }
}

fn sign_matrix(input: &InputArg) -> Result<SignMatrix, CliError> {
    match read(input)? {
        Structure::SignMatrix(m) => Ok(m),
        _ => Err(CliError::Usage("expected a sign_matrix document".into())),
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Check(args) => match labels(&args.input)? {
            Labels::Exact(g) => check(&g, args),
            Labels::Approx(g) => check(&g, args),
        },
        Command::Classify(args) => match labels(&args.input)? {
            Labels::Exact(g) => classify(&g, args),
            Labels::Approx(g) => classify(&g, args),
        },
        Command::Construct(Construct::Paley(args)) => paley(args),
        Command::Validate(args) => validate(args),
        Command::Spectra(args) => spectra(args),
        Command::Convert(args) => convert(args),
        Command::C3(args) => c3(args),
    }
}

fn check<S: Scalar>(g: &HermitianStructure<S>, args: &CheckArgs) -> Result<Outcome, CliError> {
    match args.k {
        Some(k) => {
            let report = is_k_spectrally_monomorphic(g, k)?;
            Ok(Outcome::report(&MonomorphyJson::new(g, &report), report.verdict))
        }
        None => {
            let profile = monomorphy_profile(g).iter().map(|r| MonomorphyJson::new(g, r)).collect();
            Ok(Outcome::report(&ProfileJson { n: g.order(), profile }, true))
        }
    }
}

fn dispatch<S: Scalar>(g: &HermitianStructure<S>, k: usize) -> (&'static str, Result<Classification<S>, Error>) {
    let n = g.order();
    match k {
        3 => ("k3", classify_k3(g)),
        4 if n >= 7 => ("k4", classify_k4(g)),
        _ if k + 3 == n => ("n_minus_3", classify_n_minus_3(g)),
        4 => ("k4", classify_k4(g)),
        _ => ("mid_k", classify_mid_k(g, k)),
    }
}

fn classify<S: Scalar>(g: &HermitianStructure<S>, args: &ClassifyArgs) -> Result<Outcome, CliError> {
    let (n, k) = (g.order(), args.k);
    if !(1..=n).contains(&k) {
        return Err(Error::OutOfRange { what: "k", value: k, expected: format!("1..={n}") }.into());
    }
    match dispatch(g, k) {
        (name, Ok(c)) => {
            let holds = c.is_monomorphic();
            let report = ClassifyJson { n, k, classification: Some(ClassificationJson::new(name, g, &c)), brute_force: None };
            Ok(Outcome::report(&report, holds))
        }
        (_, Err(Error::OutsideTheoremRange { .. })) if args.force_brute => {
            let r = is_k_spectrally_monomorphic(g, k)?;
            let report = ClassifyJson { n, k, classification: None, brute_force: Some(MonomorphyJson::new(g, &r)) };
            Ok(Outcome::report(&report, r.verdict))
        }
        (_, Err(e)) => Err(e.into()),
    }
}

fn paley(args: &PaleyArgs) -> Result<Outcome, CliError> {
    let base = paley_tournament(args.q)?;
    let t = if args.hat { hat(&base) } else { base };
    let doc = match &args.rep {
        None if args.skew_adjacency => (&skew_adjacency(&t)).into(),
        None => (&t).into(),
        Some(rep) if rep == "i" => (&i_representation::<G>(&t)).into(),
        Some(rep) => {
            let (re, im) = rep
                .split_once(',')
                .ok_or_else(|| CliError::Usage(format!("--rep {rep:?}: expected `i` or RE,IM")))?;
            match (re.trim().parse::<Rational>(), im.trim().parse::<Rational>()) {
                (Ok(re), Ok(im)) => (&c_representation(&t, &G::new(re, im))?.structure).into(),
                _ => {
                    let c: ApproxComplex =
                        rep.parse().map_err(|_| CliError::Usage(format!("--rep {rep:?}: invalid label")))?;
                    (&c_representation(&t, &c)?.structure).into()
                }
            }
        }
    };
    Outcome::document(doc, &args.output)
}

fn validate(args: &ValidateArgs) -> Result<Outcome, CliError> {
    let kind = match args.kind {
        KindArg::Conference => SignMatrixKind::Conference,
        KindArg::SkewConference => SignMatrixKind::SkewConference,
        KindArg::Hadamard => SignMatrixKind::Hadamard,
        KindArg::SkewHadamard => SignMatrixKind::SkewHadamard,
    };
    let check = validate_sign_matrix(&sign_matrix(&args.input)?, kind);
    Ok(Outcome::report(&ValidateJson::new(kind, &check), check.valid))
}

fn spectra(args: &SpectraArgs) -> Result<Outcome, CliError> {
    let report = verify_deletion_spectra(&sign_matrix(&args.input)?, args.max_deletions)?;
    Ok(Outcome::report(&SpectraJson::from(&report), report.valid))
}

fn convert(args: &ConvertArgs) -> Result<Outcome, CliError> {
    let doc = match args.direction {
        Direction::DrtToHadamard => (&skew_hadamard_from_drt(&tournament(&args.input)?)?).into(),
        Direction::HadamardToDrt => (&drt_from_skew_hadamard(&sign_matrix(&args.input)?)?).into(),
    };
    Outcome::document(doc, &args.output)
}

fn c3(args: &C3Args) -> Result<Outcome, CliError> {
    let (x, y) = args.pair;
    if !args.via_determinants {
        let (c3, o3) = pair_cycle_counts(&tournament(&args.input)?, x, y)?;
        let report = CycleCountsJson { pair: args.pair, method: "direct", dominator: None, c3, o3: Some(o3) };
        return Ok(Outcome::report(&report, true));
    }
    let (dominator, c3) = match labels(&args.input)? {
        Labels::Exact(g) => via_determinants(&g, x, y)?,
        Labels::Approx(g) => via_determinants(&g, x, y)?,
    };
    let report = CycleCountsJson { pair: args.pair, method: "determinants", dominator: Some(dominator), c3, o3: None };
    Ok(Outcome::report(&report, true))
}

fn via_determinants<S: Scalar>(g: &HermitianStructure<S>, x: usize, y: usize) -> Result<(usize, usize), CliError> {
    let n = g.order();
    let i = S::i();
    let dominator = (0..n)
        .filter(|&v| v != x && v != y)
        .find(|&v| (0..n).all(|u| u == v || g.label(v, u).approx_eq(&i)))
        .ok_or_else(|| CliError::Usage("no vertex outside the pair carries label i to every other vertex".into()))?;
    Ok((dominator, c3_via_determinants(g, dominator, x, y)?))
}

/// Reads `SPECTRAMONO_EPS`, if set, into the approximate-mode tolerance.
pub fn apply_eps_override() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("SPECTRAMONO_EPS") else {
        return Ok(());
    };
    match raw.trim().parse::<f64>() {
        Ok(eps) if eps.is_finite() && eps > 0.0 => {
            spectramono_core::scalar::set_approx_eps(eps);
            Ok(())
        }
        _ => Err(CliError::Usage(format!("SPECTRAMONO_EPS={raw:?} is not a positive number"))),
    }
}
