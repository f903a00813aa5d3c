//! The `bounds` subcommand: evaluates all three relations and the MUS
//! verdict for a user-supplied state and operator pair.

use serde::Serialize;

use uncertainty_core::{
    analyze, mp_sum_bound, product_bound, random_perp, saturating_perp, tol, weak_sum_bound,
    Error as CoreError, RandomSource, StateVector,
};

use crate::error::{CliError, Result};
use crate::io::{
    operators_from_document, perp_from_document, state_from_document, BoundReportJson,
    MusVerdictJson, ProblemDocument,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerpMode {
    Random,
    Saturating,
    File,
}

impl PerpMode {
    pub fn as_str(self) -> &'static str {
        match self {
            PerpMode::Random => "random",
            PerpMode::Saturating => "saturating",
            PerpMode::File => "file",
        }
    }
}

impl std::str::FromStr for PerpMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "random" => Ok(PerpMode::Random),
            "saturating" => Ok(PerpMode::Saturating),
            "file" => Ok(PerpMode::File),
            other => Err(format!(
                "unknown perp mode '{other}' (expected random, saturating or file)"
            )),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsOutput {
    pub seed: u64,
    pub perp_mode: &'static str,
    pub warnings: Vec<String>,
    pub product: BoundReportJson,
    pub mp_sum: BoundReportJson,
    pub weak_sum: BoundReportJson,
    pub mus: MusVerdictJson,
}

/// Evaluates the three relations on a merged problem document.
pub fn run_bounds(doc: &ProblemDocument, mode: PerpMode, seed: u64) -> Result<BoundsOutput> {
    let mut warnings = Vec::new();
    let (psi, renormalized) = state_from_document(doc)?;
    if renormalized {
        warnings.push("state was not normalized; renormalized".to_string());
    }
    let (a, b) = operators_from_document(doc)?;
    if a.dim() != psi.dim() {
        return Err(CliError::Validation(format!(
            "state is {}-dimensional but operators are {}-dimensional",
            psi.dim(),
            a.dim()
        )));
    }

    let perp: StateVector = match mode {
        PerpMode::Random => {
            let mut rng = RandomSource::from_seed(seed);
            random_perp(&psi, &mut rng)?
        }
        PerpMode::Saturating => match saturating_perp(&psi, &a, &b) {
            Ok(p) => p,
            Err(CoreError::AlreadySaturated) => {
                // every orthogonal state yields a vanishing ψ⊥ term here
                warnings.push(
                    "state already saturates the sum relation; using a random ψ⊥ \
                     (its term vanishes identically)"
                        .to_string(),
                );
                let mut rng = RandomSource::from_seed(seed);
                random_perp(&psi, &mut rng)?
            }
            Err(e) => return Err(e.into()),
        },
        PerpMode::File => {
            let (p, renorm) = perp_from_document(doc)?;
            if renorm {
                warnings.push("psi_perp was not normalized; renormalized".to_string());
            }
            p
        }
    };

    let product = product_bound(&psi, &a, &b)?;
    let weak = weak_sum_bound(&psi, &a, &b)?;
    let mp = mp_sum_bound(&psi, &a, &b, &perp)?;
    let verdict = analyze(&psi, &a, &b, tol::MUS_DEFAULT, Some(&perp))?;

    Ok(BoundsOutput {
        seed,
        perp_mode: mode.as_str(),
        warnings,
        product: BoundReportJson::from(&product),
        mp_sum: BoundReportJson::from(&mp),
        weak_sum: BoundReportJson::from(&weak),
        mus: MusVerdictJson::from(&verdict),
    })
}

pub fn bounds_to_json(out: &BoundsOutput) -> String {
    let mut s = serde_json::to_string_pretty(out).expect("bounds output serializes");
    s.push('\n');
    s
}

/// The three reports as CSV rows (one BoundReport per row).
pub fn bounds_to_csv(out: &BoundsOutput) -> String {
    use crate::io::format_f64;
    let mut s = String::from(
        "relation,lhs,rhs,gap,sign_choice,term_commutator,term_perp,perp_term_vanishes\n",
    );
    for r in [&out.product, &out.mp_sum, &out.weak_sum] {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.relation,
            format_f64(r.lhs),
            format_f64(r.rhs),
            format_f64(r.gap),
            r.sign_choice,
            format_f64(r.term_commutator),
            format_f64(r.term_perp),
            r.perp_term_vanishes
        ));
    }
    s
}
